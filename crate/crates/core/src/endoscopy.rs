//! Endoscopic root subsystems attached to a torsion element of the dual
//! torus, symmetric/asymmetric orbit classification for a twisted Frobenius,
//! and the sign invariants computed along four independent routes.
//!
//! The element `s = exp(2 pi i q)` of the dual torus is represented by the
//! rational vector `q` in `X^* (x) Q`, reduced modulo `X^*`. The twisted
//! Frobenius acts on `X^*` by `a = omega . theta`, and fixes `s` exactly when
//! `a q = q mod X^*`.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::matrix::{dot_q, kernel_basis, smith_normal_form, vec_sub, vec_scale, IntMatrix};
use crate::root_datum::{BasedAutomorphism, DatumError, FrobeniusTwist, RootDatum, WeylElement};

/// A torsion point of the dual torus: rational coordinates reduced to
/// `[0, 1)`, with the least `k` making `k q` integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionDualElement {
    q: Vec<BigRational>,
    order: BigInt,
}

impl TorsionDualElement {
    pub fn new(q: Vec<BigRational>) -> Self {
        let q: Vec<BigRational> = q.iter().map(|r| r - r.floor()).collect();
        let order = q
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        TorsionDualElement { q, order }
    }

    pub fn zero(rank: usize) -> Self {
        TorsionDualElement::new(vec![BigRational::from_integer(BigInt::zero()); rank])
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.q
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }
}

/// The combinatorial part of an endoscopic datum: the parent datum, the dual
/// torus element, the embedding twist, and the coroots pairing integrally
/// with `q` (the roots of the dual centralizer).
#[derive(Debug, Clone)]
pub struct EndoscopicDatum {
    parent: RootDatum,
    q: TorsionDualElement,
    omega: WeylElement,
    theta: BasedAutomorphism,
    twist: FrobeniusTwist,
    h_root_indices: Vec<usize>,
}

/// `h_roots = { alpha : <q, alpha^vee> integral }`, the root subsystem of the
/// connected dual centralizer of `exp(2 pi i q)`.
pub fn endoscopic_subsystem(
    parent: &RootDatum,
    q: TorsionDualElement,
    omega: WeylElement,
    theta: BasedAutomorphism,
) -> Result<EndoscopicDatum, DatumError> {
    if q.coords().len() != parent.rank() {
        return Err(DatumError::InvalidRootDatum(format!(
            "q has length {} but the datum has rank {}",
            q.coords().len(),
            parent.rank()
        )));
    }
    let twist = FrobeniusTwist::new(parent, omega.clone(), theta.clone())?;
    let h_root_indices: Vec<usize> = (0..parent.num_roots())
        .filter(|&i| dot_q(q.coords(), parent.coroot(i)).is_integer())
        .collect();
    let datum = EndoscopicDatum { parent: parent.clone(), q, omega, theta, twist, h_root_indices };
    // Centralizer subsystems are reflection-closed; anything else is a bug.
    assert!(datum.subsystem_is_closed(), "endoscopic subsystem not reflection-closed");
    Ok(datum)
}

impl EndoscopicDatum {
    pub fn parent(&self) -> &RootDatum {
        &self.parent
    }

    pub fn q(&self) -> &TorsionDualElement {
        &self.q
    }

    pub fn omega(&self) -> &WeylElement {
        &self.omega
    }

    pub fn theta(&self) -> &BasedAutomorphism {
        &self.theta
    }

    pub fn twist(&self) -> &FrobeniusTwist {
        &self.twist
    }

    pub fn h_root_indices(&self) -> &[usize] {
        &self.h_root_indices
    }

    fn subsystem_is_closed(&self) -> bool {
        let set: BTreeSet<usize> = self.h_root_indices.iter().copied().collect();
        for &i in &self.h_root_indices {
            for &j in &self.h_root_indices {
                let n = crate::matrix::dot(self.parent.root(j), self.parent.coroot(i));
                let refl = vec_sub(self.parent.root(j), &vec_scale(&n, self.parent.root(i)));
                match self.parent.root_index(&refl) {
                    Some(k) if set.contains(&k) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Whether the twisted Frobenius fixes `q` modulo `X^*` and keeps the
    /// subsystem stable ("s is Galois-fixed").
    pub fn is_gamma_fixed(&self) -> bool {
        let image = self.twist.matrix.mul_qvec(self.q.coords());
        let fixed = image
            .iter()
            .zip(self.q.coords())
            .all(|(a, b)| (a - b).is_integer());
        if !fixed {
            return false;
        }
        let perm = self
            .parent
            .root_permutation(&self.twist.matrix)
            .expect("twist permutes roots");
        let set: BTreeSet<usize> = self.h_root_indices.iter().copied().collect();
        self.h_root_indices.iter().all(|&i| set.contains(&perm[i]))
    }

    /// Ellipticity: the twist-fixed central subspace of the subsystem equals
    /// the Frobenius-fixed central subspace of the parent, both computed as
    /// rational kernels.
    pub fn is_elliptic(&self) -> bool {
        let h_side = fixed_central_subspace(
            &self.parent,
            &self.h_root_indices,
            &self.twist.matrix,
        );
        let all: Vec<usize> = (0..self.parent.num_roots()).collect();
        let g_side = fixed_central_subspace(&self.parent, &all, &self.theta.matrix);
        subspace_equal(&h_side, &g_side)
    }

    /// The root datum of the endoscopic group on the same lattice, with the
    /// base cut out by the parent's positivity.
    pub fn h_datum(&self) -> Result<RootDatum, DatumError> {
        let roots: Vec<Vec<BigInt>> =
            self.h_root_indices.iter().map(|&i| self.parent.root(i).to_vec()).collect();
        let coroots: Vec<Vec<BigInt>> =
            self.h_root_indices.iter().map(|&i| self.parent.coroot(i).to_vec()).collect();
        let positive: Vec<usize> = (0..roots.len())
            .filter(|&k| self.parent.is_positive(self.h_root_indices[k]))
            .collect();
        let pos_set: BTreeSet<Vec<BigInt>> =
            positive.iter().map(|&k| roots[k].clone()).collect();
        let mut simple = Vec::new();
        for &k in &positive {
            let decomposable = positive.iter().any(|&l| {
                if l == k {
                    return false;
                }
                let rest = vec_sub(&roots[k], &roots[l]);
                pos_set.contains(&rest)
            });
            if !decomposable {
                simple.push(k);
            }
        }
        RootDatum::from_parts(self.parent.rank(), roots, coroots, simple)
    }
}

/// Span of `{v : <v, coroot> = 0 for the chosen coroots, action v = v}`.
fn fixed_central_subspace(
    datum: &RootDatum,
    root_indices: &[usize],
    action: &IntMatrix,
) -> IntMatrix {
    let mut rows: Vec<Vec<BigInt>> = root_indices
        .iter()
        .map(|&i| datum.coroot(i).to_vec())
        .collect();
    let a_minus_1 = action.sub(&IntMatrix::identity(datum.rank()));
    for i in 0..datum.rank() {
        rows.push(a_minus_1.row(i));
    }
    kernel_basis(&IntMatrix::from_rows(rows))
}

/// Equality of column spans over Q.
fn subspace_equal(b1: &IntMatrix, b2: &IntMatrix) -> bool {
    let r1 = smith_normal_form(b1).rank();
    let r2 = smith_normal_form(b2).rank();
    r1 == r2 && smith_normal_form(&b1.hstack(b2)).rank() == r1
}

/// `dim_Q ker(action - 1)`, the split rank of the twisted torus.
pub fn split_rank(action: &IntMatrix) -> usize {
    kernel_basis(&action.sub(&IntMatrix::identity(action.rows()))).cols()
}

/// `(-1)^(r_G - r_H)` computed from the fixed spaces of `theta` and
/// `omega theta` on `X^* (x) Q`.
pub fn eps_relative_rank(theta: &BasedAutomorphism, omega: &WeylElement) -> i8 {
    let a = omega.matrix.mul(&theta.matrix);
    let diff = split_rank(&theta.matrix) as i64 - split_rank(&a) as i64;
    if diff.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The local epsilon factor of the degree-zero virtual representation
/// `V_G - V_H`, evaluated through determinants of the inverse Frobenius:
/// `det(theta^-1) det((omega theta)^-1)^-1`.
pub fn eps_l_unramified(theta: &BasedAutomorphism, omega: &WeylElement) -> i8 {
    let a = omega.matrix.mul(&theta.matrix);
    let det_vg = theta
        .matrix
        .inverse_unimodular()
        .expect("finite order")
        .determinant();
    let det_vh = a.inverse_unimodular().expect("finite order").determinant();
    let val = det_vg * det_vh; // det_vh is +-1, so dividing is multiplying
    if val.is_one() {
        1
    } else {
        -1
    }
}

/// One orbit of the cyclic group generated by the twist on the root set.
/// Exactly one of `O = -O` (symmetric) or `O` disjoint from `-O` holds.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub indices: Vec<usize>,
    pub symmetric: bool,
}

#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub orbits: Vec<Orbit>,
}

impl OrbitReport {
    pub fn n_symmetric(&self) -> usize {
        self.orbits.iter().filter(|o| o.symmetric).count()
    }
}

/// Orbits of the group generated by `a` on the root set, each tagged
/// symmetric or asymmetric; the dichotomy is verified.
pub fn classify_orbits(datum: &RootDatum, a: &IntMatrix) -> Result<OrbitReport, DatumError> {
    let perm = datum.root_permutation(a)?;
    let mut seen = vec![false; datum.num_roots()];
    let mut orbits = Vec::new();
    for start in 0..datum.num_roots() {
        if seen[start] {
            continue;
        }
        let mut indices = Vec::new();
        let mut i = start;
        loop {
            seen[i] = true;
            indices.push(i);
            i = perm[i];
            if i == start {
                break;
            }
        }
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        let neg_set: BTreeSet<usize> = indices.iter().map(|&k| datum.negative_of(k)).collect();
        let symmetric = set == neg_set;
        if !symmetric {
            assert!(
                set.intersection(&neg_set).next().is_none(),
                "orbit neither symmetric nor disjoint from its negative"
            );
        }
        orbits.push(Orbit { indices, symmetric });
    }
    Ok(OrbitReport { orbits })
}

/// Parity diagnostics for the inversion set `S' = {alpha > 0 : omega theta
/// alpha < 0}` against the symmetric orbits.
#[derive(Debug, Clone)]
pub struct ParityReport {
    pub s_prime: Vec<usize>,
    /// `|S'| = |S' meet union of symmetric orbits| mod 2`
    pub claim1: bool,
    /// `(orbit index, |S' meet orbit|)` for each symmetric orbit
    pub symmetric_meets: Vec<(usize, usize)>,
    /// every symmetric orbit meets `S'` an odd number of times
    pub claim2: bool,
}

pub fn parity_claims(
    datum: &RootDatum,
    theta: &BasedAutomorphism,
    omega: &WeylElement,
) -> Result<ParityReport, DatumError> {
    let a = omega.matrix.mul(&theta.matrix);
    let s_prime = datum.inversion_set(&a)?;
    let s_set: BTreeSet<usize> = s_prime.iter().copied().collect();
    let report = classify_orbits(datum, &a)?;
    let mut in_symmetric = 0usize;
    let mut symmetric_meets = Vec::new();
    let mut claim2 = true;
    for (idx, orbit) in report.orbits.iter().enumerate() {
        if !orbit.symmetric {
            continue;
        }
        let meet = orbit.indices.iter().filter(|i| s_set.contains(i)).count();
        in_symmetric += meet;
        if meet % 2 == 0 {
            claim2 = false;
        }
        symmetric_meets.push((idx, meet));
    }
    let claim1 = s_prime.len() % 2 == in_symmetric % 2;
    Ok(ParityReport { s_prime, claim1, symmetric_meets, claim2 })
}

/// The sign invariants of a twist, each from its own route:
/// fixed-space ranks, the determinant of `omega`, the epsilon-factor
/// determinant formula, and the symmetric orbit count.
#[derive(Debug, Clone)]
pub struct SignReport {
    pub eps_relative_rank: i8,
    pub det_omega: i8,
    pub eps_l: i8,
    pub minus_one_to_n: i8,
    pub n_symmetric: usize,
    pub all_equal: bool,
}

pub fn three_signs(
    datum: &RootDatum,
    theta: &BasedAutomorphism,
    omega: &WeylElement,
) -> Result<SignReport, DatumError> {
    let a = omega.matrix.mul(&theta.matrix);
    let eps_rel = eps_relative_rank(theta, omega);
    let det_omega = if omega.determinant().is_one() { 1 } else { -1 };
    let eps_l = eps_l_unramified(theta, omega);
    let n_symmetric = classify_orbits(datum, &a)?.n_symmetric();
    let minus_one_to_n = if n_symmetric % 2 == 0 { 1 } else { -1 };
    let all_equal =
        eps_rel == det_omega && det_omega == eps_l && eps_l == minus_one_to_n;
    Ok(SignReport {
        eps_relative_rank: eps_rel,
        det_omega,
        eps_l,
        minus_one_to_n,
        n_symmetric,
        all_equal,
    })
}

/// `det(omega)` versus `(-1)^N` with `N` the symmetric orbit count; the
/// determinant lemma as a standalone check.
pub fn det_equals_symmetric_parity(
    datum: &RootDatum,
    theta: &BasedAutomorphism,
    omega: &WeylElement,
) -> Result<bool, DatumError> {
    let report = three_signs(datum, theta, omega)?;
    Ok(report.det_omega == report.minus_one_to_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{build_named, weyl_from_word, weyl_group};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sl2_torus_endoscopy() {
        let g = build_named("A1:sc").unwrap();
        let omega = weyl_from_word(&g, &[0]).unwrap();
        let theta = BasedAutomorphism::identity(&g);
        let q = TorsionDualElement::new(vec![rat(1, 2)]);
        let e = endoscopic_subsystem(&g, q, omega, theta).unwrap();
        assert!(e.h_root_indices().is_empty(), "H is a torus");
        assert!(e.is_gamma_fixed());
        assert!(e.is_elliptic());
        let h = e.h_datum().unwrap();
        assert_eq!(h.num_roots(), 0);
        assert_eq!(h.rank(), 1);
        let signs = three_signs(e.parent(), e.theta(), e.omega()).unwrap();
        assert!(signs.all_equal);
        assert_eq!(signs.det_omega, -1);
    }

    #[test]
    fn sl2_split_twist_not_elliptic() {
        let g = build_named("A1:sc").unwrap();
        let omega = WeylElement::identity(&g);
        let theta = BasedAutomorphism::identity(&g);
        let q = TorsionDualElement::new(vec![rat(1, 2)]);
        let e = endoscopic_subsystem(&g, q, omega, theta).unwrap();
        assert!(e.is_gamma_fixed());
        assert!(!e.is_elliptic());
    }

    #[test]
    fn q_zero_gives_parent_back() {
        let g = build_named("B2:sc").unwrap();
        let e = endoscopic_subsystem(
            &g,
            TorsionDualElement::zero(2),
            WeylElement::identity(&g),
            BasedAutomorphism::identity(&g),
        )
        .unwrap();
        assert_eq!(e.h_root_indices().len(), g.num_roots());
        assert!(e.is_gamma_fixed());
        assert!(e.is_elliptic());
        let h = e.h_datum().unwrap();
        assert_eq!(h.num_roots(), g.num_roots());
        assert_eq!(h.num_simple(), 2);
    }

    #[test]
    fn product_keeps_second_factor() {
        let g = build_named("A1:sc x A1:sc").unwrap();
        let e = endoscopic_subsystem(
            &g,
            TorsionDualElement::new(vec![rat(1, 2), rat(0, 1)]),
            WeylElement::identity(&g),
            BasedAutomorphism::identity(&g),
        )
        .unwrap();
        let kept: Vec<&[BigInt]> =
            e.h_root_indices().iter().map(|&i| g.root(i)).collect();
        assert_eq!(kept.len(), 2);
        assert!(kept.iter().all(|r| r[0].is_zero()));
    }

    #[test]
    fn swap_moves_q() {
        let g = build_named("A1:sc x A1:sc").unwrap();
        let autos = enumerate_swap(&g);
        let e = endoscopic_subsystem(
            &g,
            TorsionDualElement::new(vec![rat(1, 2), rat(0, 1)]),
            WeylElement::identity(&g),
            autos,
        )
        .unwrap();
        assert!(!e.is_gamma_fixed());
    }

    fn enumerate_swap(g: &RootDatum) -> BasedAutomorphism {
        crate::root_datum::enumerate_based_automorphisms(g)
            .unwrap()
            .into_iter()
            .find(|a| a.order == 2)
            .expect("factor swap exists")
    }

    #[test]
    fn split_rank_examples() {
        assert_eq!(split_rank(&IntMatrix::identity(2)), 2);
        assert_eq!(split_rank(&IntMatrix::from_i64(1, 1, &[-1])), 0);
        assert_eq!(split_rank(&IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])), 1);
    }

    #[test]
    fn relative_rank_sign_examples() {
        let g = build_named("A1:sc").unwrap();
        let theta = BasedAutomorphism::identity(&g);
        assert_eq!(eps_relative_rank(&theta, &WeylElement::identity(&g)), 1);
        let s = weyl_from_word(&g, &[0]).unwrap();
        assert_eq!(eps_relative_rank(&theta, &s), -1);
        assert_eq!(eps_l_unramified(&theta, &s), -1);

        let a2 = build_named("A2:sc").unwrap();
        let theta2 = BasedAutomorphism::identity(&a2);
        let cox = weyl_from_word(&a2, &[0, 1]).unwrap();
        assert_eq!(eps_relative_rank(&theta2, &cox), 1);
        assert_eq!(eps_l_unramified(&theta2, &cox), 1);
    }

    #[test]
    fn orbit_classification_a1() {
        let g = build_named("A1:sc").unwrap();
        let s = weyl_from_word(&g, &[0]).unwrap();
        let report = classify_orbits(&g, &s.matrix).unwrap();
        assert_eq!(report.orbits.len(), 1);
        assert_eq!(report.n_symmetric(), 1);

        let id = IntMatrix::identity(1);
        let report = classify_orbits(&g, &id).unwrap();
        assert_eq!(report.orbits.len(), 2);
        assert_eq!(report.n_symmetric(), 0);
    }

    #[test]
    fn factor_swap_orbits_asymmetric() {
        let g = build_named("A1:sc x A1:sc").unwrap();
        let swap = enumerate_swap(&g);
        let report = classify_orbits(&g, &swap.matrix).unwrap();
        assert_eq!(report.orbits.len(), 2);
        assert_eq!(report.n_symmetric(), 0);
    }

    #[test]
    fn diagram_flip_on_a2_all_asymmetric() {
        let g = build_named("A2:sc").unwrap();
        let flip = crate::root_datum::enumerate_based_automorphisms(&g)
            .unwrap()
            .into_iter()
            .find(|a| a.order == 2)
            .unwrap();
        let id = WeylElement::identity(&g);
        let signs = three_signs(&g, &flip, &id).unwrap();
        assert_eq!(signs.n_symmetric, 0);
        assert!(signs.all_equal);
        assert_eq!(signs.eps_relative_rank, 1);
    }

    #[test]
    fn parity_claims_examples() {
        let g = build_named("A1:sc").unwrap();
        let theta = BasedAutomorphism::identity(&g);
        let s = weyl_from_word(&g, &[0]).unwrap();
        let rep = parity_claims(&g, &theta, &s).unwrap();
        assert_eq!(rep.s_prime.len(), 1);
        assert!(rep.claim1 && rep.claim2);
        assert_eq!(rep.symmetric_meets, vec![(0, 1)]);

        let id = WeylElement::identity(&g);
        let rep = parity_claims(&g, &theta, &id).unwrap();
        assert!(rep.s_prime.is_empty());
        assert!(rep.claim1 && rep.claim2);

        let b2 = build_named("B2:sc").unwrap();
        let theta2 = BasedAutomorphism::identity(&b2);
        let w0 = weyl_group(&b2)
            .unwrap()
            .into_iter()
            .max_by_key(|w| w.word.len())
            .unwrap();
        let rep = parity_claims(&b2, &theta2, &w0).unwrap();
        assert!(rep.claim1 && rep.claim2);
        assert!(rep.symmetric_meets.iter().all(|&(_, n)| n % 2 == 1));
    }

    #[test]
    fn g2_longest_element_signs() {
        let g = build_named("G2:ad").unwrap();
        let theta = BasedAutomorphism::identity(&g);
        let w0 = weyl_group(&g)
            .unwrap()
            .into_iter()
            .max_by_key(|w| w.word.len())
            .unwrap();
        assert!(w0.matrix.neg().is_identity());
        let signs = three_signs(&g, &theta, &w0).unwrap();
        assert_eq!(signs.det_omega, 1);
        assert_eq!(signs.n_symmetric % 2, 0);
        assert!(signs.all_equal);
    }
}
