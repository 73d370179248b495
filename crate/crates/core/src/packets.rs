//! L-packet parametrization combinatorics for a twisted Frobenius `a = w
//! theta`: the lattice `X = X_*(T_0)` with the dual action, its coinvariants
//! and their torsion, the component group of the parameter centralizer, the
//! quotient by the coroot lattice indexing pure inner forms, character
//! evaluation against dual torus points, and the sign-normalization check
//! relating the DeBacker-Reeder map to the standard pairing.
//!
//! Convention, fixed once: `a` acts on `X^*(T_0)`; the action on `X_*(T_0)`
//! is the inverse transpose. A dual torus point `exp(2 pi i r)` is fixed by
//! the twisted Frobenius exactly when `a r = r mod X^*`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use thiserror::Error;

use crate::abelian::{AbelianElement, FiniteAbelianGroup};
use crate::cohomology::{
    coinvariants, h1_torus_model, pairing_cup, CohomologyClass, CohomologyError, GammaLattice,
    LatticeQuotient, TateGroup,
};
use crate::matrix::{dot, dot_q, kernel_basis, solve_rational, IntMatrix};
use crate::qmodz::QmodZ;
use crate::root_datum::{BasedAutomorphism, DatumError, FrobeniusTwist, RootDatum, WeylElement};

#[derive(Debug, Error)]
pub enum PacketError {
    #[error("lambda is not in X_w (its coinvariant class is not torsion)")]
    NotInXw,
    #[error("point is not fixed by the twisted Frobenius modulo X^*")]
    NotFixed,
    #[error("point is not central (pairs non-integrally with a coroot)")]
    NotCentral,
    #[error("vector length {got} does not match rank {rank}")]
    Length { got: usize, rank: usize },
    #[error("declared order {declared} is not a positive multiple of the twist order {twist}")]
    BadOrder { declared: usize, twist: usize },
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Datum(#[from] DatumError),
}

/// All lattice data attached to a parameter twist `(w, theta)`.
#[derive(Debug, Clone)]
pub struct ParameterCombinatorics {
    datum: RootDatum,
    twist: FrobeniusTwist,
    /// `X^*(T_0)` with `sigma = w theta`: presents `pi_0` of the fixed dual
    /// torus.
    x_star: GammaLattice,
    /// `X_*(T_0)` with the dual action.
    x: GammaLattice,
    x_coinv: LatticeQuotient,
    xbar: LatticeQuotient,
}

impl ParameterCombinatorics {
    pub fn new(
        datum: &RootDatum,
        theta: BasedAutomorphism,
        w: WeylElement,
    ) -> Result<Self, PacketError> {
        ParameterCombinatorics::with_declared_order(datum, theta, w, None)
    }

    /// Like [`ParameterCombinatorics::new`], but with a declared Galois order
    /// that may be any multiple of the twist order.
    pub fn with_declared_order(
        datum: &RootDatum,
        theta: BasedAutomorphism,
        w: WeylElement,
        m_override: Option<usize>,
    ) -> Result<Self, PacketError> {
        let twist = FrobeniusTwist::new(datum, w, theta)?;
        let m = match m_override {
            None => twist.order,
            Some(m) if m >= 1 && m % twist.order == 0 => m,
            Some(m) => {
                return Err(PacketError::BadOrder { declared: m, twist: twist.order });
            }
        };
        let x_star = GammaLattice::new(twist.matrix.clone(), m)
            .expect("declared order is a multiple of the twist order");
        let x = x_star.dual();
        let x_coinv = coinvariants(&x);
        // Xbar_Gamma = X / ((sigma - 1) X + Z R^vee); the coroot lattice is
        // spanned by the simple coroots.
        let relations = x.sigma_minus_id().hstack(&coroot_columns(datum));
        let xbar = LatticeQuotient::from_relations(&relations);
        Ok(ParameterCombinatorics { datum: datum.clone(), twist, x_star, x, x_coinv, xbar })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn twist(&self) -> &FrobeniusTwist {
        &self.twist
    }

    /// The declared Galois order (the twist order unless overridden).
    pub fn m(&self) -> usize {
        self.x_star.m()
    }

    pub fn x(&self) -> &GammaLattice {
        &self.x
    }

    pub fn x_star(&self) -> &GammaLattice {
        &self.x_star
    }

    /// Coinvariants `X_Gamma` with their torsion `[X_Gamma]_tor`.
    pub fn x_coinvariants(&self) -> &LatticeQuotient {
        &self.x_coinv
    }

    /// `Xbar_Gamma`, the coinvariants of the quotient by the coroot lattice.
    pub fn xbar_quotient(&self) -> &LatticeQuotient {
        &self.xbar
    }

    fn check_len(&self, v: &[BigInt]) -> Result<(), PacketError> {
        if v.len() != self.datum.rank() {
            return Err(PacketError::Length { got: v.len(), rank: self.datum.rank() });
        }
        Ok(())
    }

    /// Whether the coinvariant class of `lambda` is torsion, i.e. `lambda`
    /// lies in `X_w`.
    pub fn membership_xw(&self, lambda: &[BigInt]) -> Result<bool, PacketError> {
        self.check_len(lambda)?;
        let rhs: Vec<BigRational> =
            lambda.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        Ok(solve_rational(&self.x.sigma_minus_id(), &rhs).is_some())
    }

    /// Ellipticity of the twist: every Frobenius-fixed rational cocharacter
    /// must pair to zero with all roots.
    pub fn trselp(&self) -> TrselpReport {
        let fixed = kernel_basis(&self.x.sigma_minus_id());
        for j in 0..fixed.cols() {
            let v = fixed.col(j);
            for &s in self.datum.simple_indices() {
                if !dot(self.datum.root(s), &v).is_zero() {
                    return TrselpReport { valid: false, witness: Some((v, s)) };
                }
            }
        }
        TrselpReport { valid: true, witness: None }
    }

    /// `pi_0` of the twist-fixed dual torus, presented as `ker N /
    /// (sigma - 1)` on the `X^*` side. Its order always matches
    /// `|[X_Gamma]_tor|`.
    pub fn component_group(&self) -> ComponentGroup {
        let tate = h1_torus_model(&self.x_star);
        let group = tate.group().clone();
        let order_matches = group.order() == self.x_coinv.torsion().order();
        ComponentGroup { group, tate, order_matches }
    }

    /// `rho_lambda(t) = <lambda, r>` mod Z.
    pub fn character_eval(
        &self,
        lambda: &[BigInt],
        t: &DualTorusPoint,
    ) -> Result<QmodZ, PacketError> {
        if !self.membership_xw(lambda)? {
            return Err(PacketError::NotInXw);
        }
        Ok(QmodZ::from_rational(&dot_q(t.coords(), lambda)))
    }

    /// Image of `lambda`'s class under `[X_Gamma]_tor -> [Xbar_Gamma]_tor`,
    /// the pure-inner-form coordinate of diagram position.
    pub fn central_restriction(&self, lambda: &[BigInt]) -> Result<AbelianElement, PacketError> {
        if !self.membership_xw(lambda)? {
            return Err(PacketError::NotInXw);
        }
        let e = self.xbar.project(lambda);
        debug_assert!(
            e.order().is_some(),
            "X_w classes restrict to torsion in Xbar_Gamma"
        );
        Ok(e)
    }

    /// All torsion classes of `X_Gamma` restricting to `u`.
    pub fn packet_fiber(&self, u: &AbelianElement) -> Result<Vec<CohomologyClass>, PacketError> {
        let mut out = Vec::new();
        for class in self.x_coinv.torsion_classes() {
            if self.central_restriction(&class.representative)? == *u {
                out.push(class);
            }
        }
        Ok(out)
    }

    /// Both routes of the central-evaluation square: evaluating
    /// `rho_lambda` at a central point directly, and pairing the central
    /// restriction of `lambda` with the same point.
    pub fn central_paths(
        &self,
        lambda: &[BigInt],
        t: &DualTorusPoint,
    ) -> Result<(QmodZ, QmodZ), PacketError> {
        if !t.is_central(self) {
            return Err(PacketError::NotCentral);
        }
        let direct = self.character_eval(lambda, t)?;
        let ubar = self.central_restriction(lambda)?;
        let lift = self.xbar.lift(&ubar);
        let through_quotient = QmodZ::from_rational(&dot_q(t.coords(), &lift));
        Ok((direct, through_quotient))
    }

    /// The sign-normalization identity: the pairing of the image of `lambda`
    /// under the chosen isomorphism against the class of `t`, inverted, must
    /// equal `rho_lambda(t)`. Holds with the DeBacker-Reeder normalization
    /// (image has representative `-lambda`) and fails in general with the
    /// plain Tate-Nakayama one.
    pub fn kottwitz_sign_check(
        &self,
        lambda: &[BigInt],
        t: &DualTorusPoint,
        normalization: Normalization,
    ) -> Result<bool, PacketError> {
        if !self.membership_xw(lambda)? {
            return Err(PacketError::NotInXw);
        }
        let mu: Vec<BigInt> = match normalization {
            Normalization::DebackerReeder => lambda.iter().map(|x| -x).collect(),
            Normalization::TateNakayama => lambda.to_vec(),
        };
        let c_t = t.h1_cocycle_value(self);
        let pairing = pairing_cup(&self.x_star, &c_t, &mu)?;
        let lhs = -&pairing;
        let rhs = self.character_eval(lambda, t)?;
        Ok(lhs == rhs)
    }

    /// Torsion points of the dual torus fixed by the twisted Frobenius, with
    /// coordinate denominators up to `max_den`.
    pub fn fixed_points(&self, max_den: u64) -> Vec<DualTorusPoint> {
        let rank = self.datum.rank();
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for d in 1..=max_den.max(1) {
            let mut tuple = vec![0u64; rank];
            loop {
                let r: Vec<BigRational> = tuple
                    .iter()
                    .map(|&n| BigRational::new(BigInt::from(n), BigInt::from(d)))
                    .collect();
                if let Ok(p) = DualTorusPoint::new(self, r) {
                    let key: Vec<(BigInt, BigInt)> = p
                        .coords()
                        .iter()
                        .map(|c| (c.numer().clone(), c.denom().clone()))
                        .collect();
                    if seen.insert(key) {
                        out.push(p);
                    }
                }
                // odometer over {0..d-1}^rank
                let mut i = 0;
                loop {
                    if i == rank {
                        break;
                    }
                    tuple[i] += 1;
                    if tuple[i] < d {
                        break;
                    }
                    tuple[i] = 0;
                    i += 1;
                }
                if i == rank {
                    break;
                }
            }
            if rank == 0 {
                break;
            }
        }
        out
    }

    /// Fixed points that are also central in the dual group.
    pub fn central_points(&self, max_den: u64) -> Vec<DualTorusPoint> {
        self.fixed_points(max_den)
            .into_iter()
            .filter(|p| p.is_central(self))
            .collect()
    }
}

fn coroot_columns(datum: &RootDatum) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = datum
        .simple_indices()
        .iter()
        .map(|&i| datum.coroot(i).to_vec())
        .collect();
    if cols.is_empty() {
        IntMatrix::zeros(datum.rank(), 0)
    } else {
        IntMatrix::from_columns(cols)
    }
}

#[derive(Debug, Clone)]
pub struct TrselpReport {
    pub valid: bool,
    /// A Frobenius-fixed cocharacter and the simple root it pairs
    /// non-trivially with, when invalid.
    pub witness: Option<(Vec<BigInt>, usize)>,
}

/// `pi_0(T^hat^Gamma)`, i.e. the component group of the parameter
/// centralizer, together with the duality check against the coinvariants.
#[derive(Debug, Clone)]
pub struct ComponentGroup {
    pub group: FiniteAbelianGroup,
    pub tate: TateGroup,
    pub order_matches: bool,
}

/// Which normalization of the cocharacter-to-cohomology isomorphism feeds
/// the Kottwitz pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    DebackerReeder,
    TateNakayama,
}

/// A point `t = exp(2 pi i r)` of the dual torus, fixed by the twisted
/// Frobenius modulo `X^*`; coordinates reduced to `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTorusPoint {
    r: Vec<BigRational>,
}

impl DualTorusPoint {
    pub fn new(pc: &ParameterCombinatorics, r: Vec<BigRational>) -> Result<Self, PacketError> {
        if r.len() != pc.datum().rank() {
            return Err(PacketError::Length { got: r.len(), rank: pc.datum().rank() });
        }
        let r: Vec<BigRational> = r.iter().map(|c| c - c.floor()).collect();
        let image = pc.twist().matrix.mul_qvec(&r);
        let fixed = image.iter().zip(&r).all(|(a, b)| (a - b).is_integer());
        if !fixed {
            return Err(PacketError::NotFixed);
        }
        Ok(DualTorusPoint { r })
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.r
    }

    /// Central in the dual group: pairs integrally with every coroot.
    pub fn is_central(&self, pc: &ParameterCombinatorics) -> bool {
        (0..pc.datum().num_roots())
            .all(|i| dot_q(&self.r, pc.datum().coroot(i)).is_integer())
    }

    /// The 1-cocycle value `(a - 1) r` presenting the class of `t` in the
    /// `X^*`-side Tate group; integral because `t` is fixed.
    pub fn h1_cocycle_value(&self, pc: &ParameterCombinatorics) -> Vec<BigInt> {
        let image = pc.twist().matrix.mul_qvec(&self.r);
        image
            .iter()
            .zip(&self.r)
            .map(|(a, b)| {
                let diff = a - b;
                assert!(diff.is_integer());
                diff.to_integer()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_i64;
    use crate::root_datum::{build_named, weyl_from_word};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// PGL2 with the reflection twist: C_phi = Z/2, Xbar = Z/2.
    fn pgl2_twisted() -> ParameterCombinatorics {
        let g = build_named("A1:ad").unwrap();
        let w = weyl_from_word(&g, &[0]).unwrap();
        ParameterCombinatorics::new(&g, BasedAutomorphism::identity(&g), w).unwrap()
    }

    /// SL2 with the reflection twist: C_phi = Z/2, Xbar trivial.
    fn sl2_twisted() -> ParameterCombinatorics {
        let g = build_named("A1:sc").unwrap();
        let w = weyl_from_word(&g, &[0]).unwrap();
        ParameterCombinatorics::new(&g, BasedAutomorphism::identity(&g), w).unwrap()
    }

    #[test]
    fn membership_examples() {
        let pc = sl2_twisted();
        assert!(pc.membership_xw(&vec_i64(&[0])).unwrap());
        assert!(pc.membership_xw(&vec_i64(&[1])).unwrap());

        let g = build_named("A1:sc").unwrap();
        let split = ParameterCombinatorics::new(
            &g,
            BasedAutomorphism::identity(&g),
            WeylElement::identity(&g),
        )
        .unwrap();
        assert!(split.membership_xw(&vec_i64(&[0])).unwrap());
        assert!(!split.membership_xw(&vec_i64(&[1])).unwrap());
    }

    #[test]
    fn trselp_examples() {
        assert!(sl2_twisted().trselp().valid);

        let g = build_named("A1:sc").unwrap();
        let split = ParameterCombinatorics::new(
            &g,
            BasedAutomorphism::identity(&g),
            WeylElement::identity(&g),
        )
        .unwrap();
        let report = split.trselp();
        assert!(!report.valid);
        assert!(report.witness.is_some());

        // factor swap on A1 x A1: the diagonal fixed line pairs with roots
        let gg = build_named("A1:sc x A1:sc").unwrap();
        let swap = crate::root_datum::enumerate_based_automorphisms(&gg)
            .unwrap()
            .into_iter()
            .find(|a| a.order == 2)
            .unwrap();
        let pc = ParameterCombinatorics::new(&gg, swap, WeylElement::identity(&gg)).unwrap();
        let report = pc.trselp();
        assert!(!report.valid);
        let (v, s) = report.witness.unwrap();
        assert!(!dot(pc.datum().root(s), &v).is_zero());
    }

    #[test]
    fn component_group_of_sl2_twist() {
        let pc = sl2_twisted();
        let cg = pc.component_group();
        assert_eq!(cg.group.invariant_factors(), &[BigInt::from(2)]);
        assert!(cg.order_matches);
    }

    #[test]
    fn component_group_rank2_minus_one() {
        // B2 longest element acts by -1 on X^*
        let g = build_named("B2:sc").unwrap();
        let w0 = crate::root_datum::weyl_group(&g)
            .unwrap()
            .into_iter()
            .max_by_key(|w| w.word.len())
            .unwrap();
        let pc =
            ParameterCombinatorics::new(&g, BasedAutomorphism::identity(&g), w0).unwrap();
        let cg = pc.component_group();
        assert_eq!(cg.group.invariant_factors(), &[BigInt::from(2), BigInt::from(2)]);
        assert!(cg.order_matches);
    }

    #[test]
    fn character_eval_nontrivial_on_sl2() {
        let pc = sl2_twisted();
        let t = DualTorusPoint::new(&pc, vec![rat(1, 2)]).unwrap();
        let val = pc.character_eval(&vec_i64(&[1]), &t).unwrap();
        assert_eq!(val, QmodZ::from_i64(1, 2));
        assert!(pc.character_eval(&vec_i64(&[0]), &t).unwrap().is_zero());
        // lambda in (sigma - 1)X evaluates trivially on fixed points
        assert!(pc.character_eval(&vec_i64(&[2]), &t).unwrap().is_zero());
    }

    #[test]
    fn unfixed_point_rejected() {
        let g = build_named("A2:sc").unwrap();
        let cox = weyl_from_word(&g, &[0, 1]).unwrap();
        let pc = ParameterCombinatorics::new(&g, BasedAutomorphism::identity(&g), cox).unwrap();
        assert!(matches!(
            DualTorusPoint::new(&pc, vec![rat(1, 2), rat(0, 1)]),
            Err(PacketError::NotFixed)
        ));
    }

    #[test]
    fn central_restriction_examples() {
        // adjoint: Xbar = Z/2 and the generator detects lambda = 1
        let pc = pgl2_twisted();
        assert_eq!(pc.xbar_quotient().torsion().order(), BigInt::from(2));
        assert!(pc.central_restriction(&vec_i64(&[0])).unwrap().is_zero());
        assert!(!pc.central_restriction(&vec_i64(&[1])).unwrap().is_zero());
        // coroot lattice itself dies
        assert!(pc.central_restriction(&vec_i64(&[2])).unwrap().is_zero());

        // simply connected: Xbar is trivial
        let pc = sl2_twisted();
        assert!(pc.central_restriction(&vec_i64(&[1])).unwrap().is_zero());
    }

    #[test]
    fn packet_fibers_partition_classes() {
        // PGL2: restriction is injective, fibers are singletons
        let pc = pgl2_twisted();
        let classes = pc.x_coinvariants().torsion_classes();
        assert_eq!(classes.len(), 2);
        for u in pc.xbar_quotient().torsion_classes() {
            assert_eq!(pc.packet_fiber(&u.element).unwrap().len(), 1);
        }

        // SL2: everything maps to the single class of the trivial quotient
        let pc = sl2_twisted();
        let u0 = pc.xbar_quotient().group().zero();
        assert_eq!(pc.packet_fiber(&u0).unwrap().len(), 2);
    }

    #[test]
    fn central_paths_agree() {
        let pc = pgl2_twisted();
        let centrals = pc.central_points(4);
        assert!(!centrals.is_empty());
        for t in centrals {
            for lam in pc.x_coinvariants().torsion_classes() {
                let (p1, p2) = pc.central_paths(&lam.representative, &t).unwrap();
                assert_eq!(p1, p2);
            }
        }
    }

    #[test]
    fn kottwitz_check_passes_with_dr_on_sl2() {
        let pc = sl2_twisted();
        let t = DualTorusPoint::new(&pc, vec![rat(1, 2)]).unwrap();
        let lam = vec_i64(&[1]);
        assert!(pc
            .kottwitz_sign_check(&lam, &t, Normalization::DebackerReeder)
            .unwrap());
        // 2-torsion case: the plain TN normalization cannot be distinguished
        assert!(pc
            .kottwitz_sign_check(&lam, &t, Normalization::TateNakayama)
            .unwrap());
    }

    #[test]
    fn kottwitz_check_separates_normalizations_on_sl3() {
        // Coxeter twist on A2:sc gives Z/3 torsion, where the sign matters.
        let g = build_named("A2:sc").unwrap();
        let cox = weyl_from_word(&g, &[0, 1]).unwrap();
        let pc = ParameterCombinatorics::new(&g, BasedAutomorphism::identity(&g), cox).unwrap();
        assert_eq!(pc.x_coinvariants().torsion().order(), BigInt::from(3));
        let mut dr_all = true;
        let mut tn_all = true;
        for t in pc.fixed_points(6) {
            for lam in pc.x_coinvariants().torsion_classes() {
                dr_all &= pc
                    .kottwitz_sign_check(&lam.representative, &t, Normalization::DebackerReeder)
                    .unwrap();
                tn_all &= pc
                    .kottwitz_sign_check(&lam.representative, &t, Normalization::TateNakayama)
                    .unwrap();
            }
        }
        assert!(dr_all);
        assert!(!tn_all);
    }

    #[test]
    fn fixed_point_enumeration_dedupes() {
        let pc = sl2_twisted();
        let pts = pc.fixed_points(4);
        // negation-fixed mod Z forces 2r integral, so only 0 and 1/2 survive
        // out of all denominators up to 4
        assert_eq!(pts.len(), 2);
    }
}
