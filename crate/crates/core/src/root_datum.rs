//! Root data, reflection-generated root systems, Weyl groups, and based
//! (pinned) automorphisms.
//!
//! A root datum lives on `X = Z^rank` (the character lattice) with the
//! cocharacter lattice identified with the dual lattice, so the canonical
//! pairing is the coordinate dot product. Weyl elements and based
//! automorphisms act on `X`; the induced action on the dual side is the
//! inverse transpose, and duality carries an element acting on characters to
//! that action on cocharacters.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

use crate::matrix::{
    dot, solve_rational, vec_neg, vec_scale, vec_sub, IntMatrix, MatrixError,
};

const CLOSURE_CAP: usize = 2000;
const ORDER_CAP: usize = 10_000;
const WEYL_CAP: usize = 100_000;

#[derive(Debug, Error)]
pub enum DatumError {
    #[error("unknown datum specification `{0}`")]
    UnknownName(String),
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("reflection closure exceeded {cap} roots; input is not a finite root system")]
    NonFiniteClosure { cap: usize },
    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),
    #[error("matrix does not permute the root set")]
    NotRootPermutation,
    #[error("automorphism moves the simple base (simple root #{index} maps outside the base)")]
    BaseMoved { index: usize },
    #[error("enumeration requires the simple roots to span the full lattice")]
    RequiresSemisimple,
    #[error("word index {index} out of range (datum has {count} simple roots)")]
    WordIndexOutOfRange { index: usize, count: usize },
    #[error("Weyl enumeration exceeded cap {cap}")]
    WeylCapExceeded { cap: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A (reduced) root datum: parallel lists of roots and coroots together with
/// a simple system. Roots live in `X`, coroots in the dual lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Vec<BigInt>>,
    coroots: Vec<Vec<BigInt>>,
    simple: Vec<usize>,
    /// Coordinates of each root in the simple basis.
    simple_coords: Vec<Vec<BigInt>>,
    positive: Vec<bool>,
    index: BTreeMap<Vec<BigInt>, usize>,
}

impl RootDatum {
    /// Validates and assembles a datum from explicit root/coroot lists.
    pub fn from_parts(
        rank: usize,
        roots: Vec<Vec<BigInt>>,
        coroots: Vec<Vec<BigInt>>,
        simple: Vec<usize>,
    ) -> Result<Self, DatumError> {
        if roots.len() != coroots.len() {
            return Err(DatumError::InvalidRootDatum("root/coroot count mismatch".into()));
        }
        if roots.iter().chain(&coroots).any(|v| v.len() != rank) {
            return Err(DatumError::InvalidRootDatum("vector length differs from rank".into()));
        }
        let mut index = BTreeMap::new();
        for (i, r) in roots.iter().enumerate() {
            if index.insert(r.clone(), i).is_some() {
                return Err(DatumError::InvalidRootDatum(format!("duplicate root {r:?}")));
            }
        }
        for (i, (r, c)) in roots.iter().zip(&coroots).enumerate() {
            if dot(r, c) != BigInt::from(2) {
                return Err(DatumError::InvalidRootDatum(format!(
                    "<alpha, alpha^vee> != 2 at root #{i}"
                )));
            }
            if !index.contains_key(&vec_neg(r)) {
                return Err(DatumError::InvalidRootDatum(format!("missing negative of root #{i}")));
            }
            if index.contains_key(&vec_scale(&BigInt::from(2), r)) {
                return Err(DatumError::InvalidRootDatum(format!(
                    "non-reduced system: twice root #{i} is a root"
                )));
            }
        }
        // Closure under every reflection, with the root<->coroot bijection
        // equivariant for it.
        for (a, av) in roots.iter().zip(&coroots) {
            for (i, (b, bv)) in roots.iter().zip(&coroots).enumerate() {
                let n = dot(b, av);
                let rb = vec_sub(b, &vec_scale(&n, a));
                let Some(&k) = index.get(&rb) else {
                    return Err(DatumError::InvalidRootDatum(format!(
                        "reflection of root #{i} falls outside the system"
                    )));
                };
                let nv = dot(a, bv);
                let rbv = vec_sub(bv, &vec_scale(&nv, av));
                if coroots[k] != rbv {
                    return Err(DatumError::InvalidRootDatum(format!(
                        "root/coroot bijection not equivariant at root #{i}"
                    )));
                }
            }
        }
        if simple.iter().any(|&i| i >= roots.len()) {
            return Err(DatumError::InvalidRootDatum("simple index out of range".into()));
        }
        // Every root must be a one-signed integer combination of the base.
        let simple_matrix =
            IntMatrix::from_columns(simple.iter().map(|&i| roots[i].clone()).collect());
        let mut simple_coords = Vec::with_capacity(roots.len());
        let mut positive = Vec::with_capacity(roots.len());
        for (i, r) in roots.iter().enumerate() {
            let rhs: Vec<BigRational> =
                r.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            let sol = if simple.is_empty() {
                None
            } else {
                solve_rational(&simple_matrix, &rhs)
            };
            let Some(sol) = sol else {
                return Err(DatumError::InvalidRootDatum(format!(
                    "root #{i} is not in the span of the simple roots"
                )));
            };
            if sol.iter().any(|c| !c.is_integer()) {
                return Err(DatumError::InvalidRootDatum(format!(
                    "root #{i} has non-integral simple coordinates"
                )));
            }
            let coords: Vec<BigInt> = sol.iter().map(|c| c.to_integer()).collect();
            let pos = coords.iter().all(|c| !c.is_negative());
            let neg = coords.iter().all(|c| !c.is_positive());
            if !pos && !neg {
                return Err(DatumError::InvalidRootDatum(format!(
                    "root #{i} has mixed-sign simple coordinates"
                )));
            }
            positive.push(pos && !coords.iter().all(Zero::is_zero));
            simple_coords.push(coords);
        }
        Ok(RootDatum { rank, roots, coroots, simple, simple_coords, positive, index })
    }

    /// Generates the full system from a base by reflection closure.
    pub fn from_simples(
        simple_roots: Vec<Vec<BigInt>>,
        simple_coroots: Vec<Vec<BigInt>>,
    ) -> Result<Self, DatumError> {
        let ns = simple_roots.len();
        if ns != simple_coroots.len() {
            return Err(DatumError::InvalidCartan("base size mismatch".into()));
        }
        let rank = simple_roots.first().map_or(0, Vec::len);
        if simple_roots.iter().chain(&simple_coroots).any(|v| v.len() != rank) {
            return Err(DatumError::InvalidCartan("vector length differs from rank".into()));
        }
        // Cartan sanity first: diagonal 2, off-diagonal <= 0 and symmetric in
        // vanishing.
        for i in 0..ns {
            for j in 0..ns {
                let aij = dot(&simple_roots[i], &simple_coroots[j]);
                if i == j && aij != BigInt::from(2) {
                    return Err(DatumError::InvalidCartan(format!("<a_{i}, a_{i}^vee> != 2")));
                }
                if i != j {
                    if aij.is_positive() {
                        return Err(DatumError::InvalidCartan(format!(
                            "positive off-diagonal Cartan integer at ({i}, {j})"
                        )));
                    }
                    let aji = dot(&simple_roots[j], &simple_coroots[i]);
                    if aij.is_zero() != aji.is_zero() {
                        return Err(DatumError::InvalidCartan(format!(
                            "Cartan zero pattern not symmetric at ({i}, {j})"
                        )));
                    }
                }
            }
        }
        let mut roots: Vec<Vec<BigInt>> = Vec::new();
        let mut coroots: Vec<Vec<BigInt>> = Vec::new();
        let mut seen: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for (r, c) in simple_roots.iter().zip(&simple_coroots) {
            if seen.insert(r.clone(), roots.len()).is_none() {
                roots.push(r.clone());
                coroots.push(c.clone());
                queue.push_back(roots.len() - 1);
            }
        }
        while let Some(i) = queue.pop_front() {
            for j in 0..ns {
                let n = dot(&roots[i], &simple_coroots[j]);
                let new_root = vec_sub(&roots[i], &vec_scale(&n, &simple_roots[j]));
                if seen.contains_key(&new_root) {
                    continue;
                }
                let nv = dot(&simple_roots[j], &coroots[i]);
                let new_coroot = vec_sub(&coroots[i], &vec_scale(&nv, &simple_coroots[j]));
                seen.insert(new_root.clone(), roots.len());
                roots.push(new_root);
                coroots.push(new_coroot);
                queue.push_back(roots.len() - 1);
                if roots.len() > CLOSURE_CAP {
                    return Err(DatumError::NonFiniteClosure { cap: CLOSURE_CAP });
                }
            }
        }
        let simple: Vec<usize> = simple_roots.iter().map(|r| seen[r]).collect();
        RootDatum::from_parts(rank, roots, coroots, simple)
    }

    /// A rank-`n` torus: no roots at all.
    pub fn torus(rank: usize) -> Self {
        RootDatum {
            rank,
            roots: vec![],
            coroots: vec![],
            simple: vec![],
            simple_coords: vec![],
            positive: vec![],
            index: BTreeMap::new(),
        }
    }

    pub fn direct_sum(&self, other: &RootDatum) -> RootDatum {
        let rank = self.rank + other.rank;
        let pad = |v: &[BigInt], left: usize, right: usize| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); left];
            out.extend_from_slice(v);
            out.extend(std::iter::repeat_n(BigInt::zero(), right));
            out
        };
        let mut roots: Vec<Vec<BigInt>> =
            self.roots.iter().map(|r| pad(r, 0, other.rank)).collect();
        roots.extend(other.roots.iter().map(|r| pad(r, self.rank, 0)));
        let mut coroots: Vec<Vec<BigInt>> =
            self.coroots.iter().map(|c| pad(c, 0, other.rank)).collect();
        coroots.extend(other.coroots.iter().map(|c| pad(c, self.rank, 0)));
        let mut simple = self.simple.clone();
        simple.extend(other.simple.iter().map(|&i| i + self.roots.len()));
        RootDatum::from_parts(rank, roots, coroots, simple)
            .expect("direct sum of valid data is valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<BigInt>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<BigInt>] {
        &self.coroots
    }

    pub fn root(&self, i: usize) -> &[BigInt] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[BigInt] {
        &self.coroots[i]
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn num_simple(&self) -> usize {
        self.simple.len()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive[i]
    }

    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.positive[i]).collect()
    }

    pub fn root_index(&self, v: &[BigInt]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Index of `-roots[i]`.
    pub fn negative_of(&self, i: usize) -> usize {
        self.index[&vec_neg(&self.roots[i])]
    }

    /// The permutation a lattice map induces on the root list, if any.
    pub fn root_permutation(&self, m: &IntMatrix) -> Result<Vec<usize>, DatumError> {
        let mut perm = Vec::with_capacity(self.roots.len());
        let mut hit = vec![false; self.roots.len()];
        for r in &self.roots {
            let image = m.mul_vec(r);
            let Some(&k) = self.index.get(&image) else {
                return Err(DatumError::NotRootPermutation);
            };
            if hit[k] {
                return Err(DatumError::NotRootPermutation);
            }
            hit[k] = true;
            perm.push(k);
        }
        Ok(perm)
    }

    /// Matrix of the reflection in the `i`-th simple root, acting on `X`.
    pub fn simple_reflection(&self, i: usize) -> Result<IntMatrix, DatumError> {
        let &idx = self
            .simple
            .get(i)
            .ok_or(DatumError::WordIndexOutOfRange { index: i, count: self.simple.len() })?;
        let alpha = &self.roots[idx];
        let alpha_v = &self.coroots[idx];
        let mut m = IntMatrix::identity(self.rank);
        for r in 0..self.rank {
            for c in 0..self.rank {
                let sub = &alpha[r] * &alpha_v[c];
                *m.at_mut(r, c) -= sub;
            }
        }
        Ok(m)
    }

    /// Swaps roots and coroots. An involution on the nose.
    pub fn dual(&self) -> RootDatum {
        RootDatum::from_parts(
            self.rank,
            self.coroots.clone(),
            self.roots.clone(),
            self.simple.clone(),
        )
        .expect("dual of a valid datum is valid")
    }

    /// Positive roots sent to negative ones by `m`.
    pub fn inversion_set(&self, m: &IntMatrix) -> Result<Vec<usize>, DatumError> {
        let perm = self.root_permutation(m)?;
        Ok(self
            .positive_roots()
            .into_iter()
            .filter(|&i| !self.positive[perm[i]])
            .collect())
    }
}

/// A Weyl group element, certified by a word in simple reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: IntMatrix,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(datum: &RootDatum) -> Self {
        WeylElement { matrix: IntMatrix::identity(datum.rank()), word: vec![] }
    }

    pub fn determinant(&self) -> BigInt {
        self.matrix.determinant()
    }
}

/// Product of simple reflections in the order given (the first index is the
/// leftmost factor).
pub fn weyl_from_word(datum: &RootDatum, word: &[usize]) -> Result<WeylElement, DatumError> {
    let mut m = IntMatrix::identity(datum.rank());
    for &i in word {
        m = m.mul(&datum.simple_reflection(i)?);
    }
    Ok(WeylElement { matrix: m, word: word.to_vec() })
}

/// The full Weyl group by breadth-first closure of the simple reflections.
/// Words produced this way are reduced.
pub fn weyl_group(datum: &RootDatum) -> Result<Vec<WeylElement>, DatumError> {
    weyl_group_capped(datum, WEYL_CAP)
}

pub fn weyl_group_capped(datum: &RootDatum, cap: usize) -> Result<Vec<WeylElement>, DatumError> {
    let gens: Vec<IntMatrix> = (0..datum.num_simple())
        .map(|i| datum.simple_reflection(i))
        .collect::<Result<_, _>>()?;
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let mut out: Vec<WeylElement> = Vec::new();
    let mut queue: VecDeque<WeylElement> = VecDeque::new();
    let id = WeylElement::identity(datum);
    seen.insert(id.matrix.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        out.push(w.clone());
        if out.len() > cap {
            return Err(DatumError::WeylCapExceeded { cap });
        }
        for (i, g) in gens.iter().enumerate() {
            let m = w.matrix.mul(g);
            if seen.insert(m.clone()) {
                let mut word = w.word.clone();
                word.push(i);
                queue.push_back(WeylElement { matrix: m, word });
            }
        }
    }
    Ok(out)
}

/// A finite-order lattice automorphism preserving the simple base (the pinned
/// automorphisms "preserving the pair (B, T)"). The induced coroot action is
/// the inverse transpose, and it must permute coroots compatibly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedAutomorphism {
    pub matrix: IntMatrix,
    pub order: usize,
}

impl BasedAutomorphism {
    pub fn identity(datum: &RootDatum) -> Self {
        BasedAutomorphism { matrix: IntMatrix::identity(datum.rank()), order: 1 }
    }

    pub fn new(datum: &RootDatum, matrix: IntMatrix) -> Result<Self, DatumError> {
        if matrix.rows() != datum.rank() || matrix.cols() != datum.rank() {
            return Err(DatumError::InvalidRootDatum("automorphism has wrong shape".into()));
        }
        let order = matrix.multiplicative_order(ORDER_CAP)?;
        let perm = datum.root_permutation(&matrix)?;
        let simple_set: HashSet<usize> = datum.simple.iter().copied().collect();
        for (slot, &i) in datum.simple.iter().enumerate() {
            if !simple_set.contains(&perm[i]) {
                return Err(DatumError::BaseMoved { index: slot });
            }
        }
        let dual_action = matrix.inverse_unimodular()?.transpose();
        for (i, cv) in datum.coroots.iter().enumerate() {
            if dual_action.mul_vec(cv) != datum.coroots[perm[i]] {
                return Err(DatumError::InvalidRootDatum(
                    "coroot action incompatible with root permutation".into(),
                ));
            }
        }
        Ok(BasedAutomorphism { matrix, order })
    }
}

/// The based automorphism induced by a permutation of the simple roots, for
/// a semisimple datum. The permutation must preserve Cartan integers and the
/// resulting lattice map must be integral.
pub fn based_automorphism_from_permutation(
    datum: &RootDatum,
    perm: &[usize],
) -> Result<BasedAutomorphism, DatumError> {
    if datum.num_simple() != datum.rank() {
        return Err(DatumError::RequiresSemisimple);
    }
    let ns = datum.num_simple();
    if perm.len() != ns {
        return Err(DatumError::InvalidRootDatum(format!(
            "permutation length {} does not match {} simple roots",
            perm.len(),
            ns
        )));
    }
    let mut hit = vec![false; ns];
    for &i in perm {
        if i >= ns || hit[i] {
            return Err(DatumError::InvalidRootDatum("not a permutation of the base".into()));
        }
        hit[i] = true;
    }
    let cartan = |i: usize, j: usize| -> BigInt {
        dot(datum.root(datum.simple[i]), datum.coroot(datum.simple[j]))
    };
    for i in 0..ns {
        for j in 0..ns {
            if cartan(perm[i], perm[j]) != cartan(i, j) {
                return Err(DatumError::InvalidRootDatum(format!(
                    "permutation does not preserve the Cartan integer at ({i}, {j})"
                )));
            }
        }
    }
    let s = IntMatrix::from_columns(
        datum.simple.iter().map(|&i| datum.roots[i].clone()).collect(),
    );
    let det = s.determinant();
    let adj = s.adjugate();
    let s_p = IntMatrix::from_columns(
        perm.iter().map(|&i| datum.roots[datum.simple[i]].clone()).collect(),
    );
    // candidate = S_p S^{-1} = S_p adj(S) / det(S); must be integral
    let scaled = s_p.mul(&adj);
    let mut entries = Vec::with_capacity(ns * ns);
    for i in 0..ns {
        for j in 0..ns {
            let e = scaled.at(i, j);
            if (e % &det).is_zero() {
                entries.push(e / &det);
            } else {
                return Err(DatumError::InvalidRootDatum(
                    "permutation does not extend to a lattice automorphism".into(),
                ));
            }
        }
    }
    let m = IntMatrix::new(ns, ns, entries).expect("square by construction");
    BasedAutomorphism::new(datum, m)
}

/// All based automorphisms of a semisimple datum, found by extending
/// Cartan-preserving permutations of the base to the lattice. Permutations
/// that do not extend integrally are dropped.
pub fn enumerate_based_automorphisms(
    datum: &RootDatum,
) -> Result<Vec<BasedAutomorphism>, DatumError> {
    if datum.rank() == 0 {
        return Ok(vec![BasedAutomorphism { matrix: IntMatrix::identity(0), order: 1 }]);
    }
    if datum.num_simple() != datum.rank() {
        return Err(DatumError::RequiresSemisimple);
    }
    let mut out = Vec::new();
    for perm in permutations(datum.num_simple()) {
        if let Ok(auto) = based_automorphism_from_permutation(datum, &perm) {
            out.push(auto);
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute_rec(&mut items, 0, &mut out);
    out
}

fn permute_rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_rec(items, k + 1, out);
        items.swap(k, i);
    }
}

/// The twisted Frobenius `a = w * theta` together with its multiplicative
/// order. Exceeding the order cap is an input error, never silent.
#[derive(Debug, Clone)]
pub struct FrobeniusTwist {
    pub w: WeylElement,
    pub theta: BasedAutomorphism,
    pub matrix: IntMatrix,
    pub order: usize,
}

impl FrobeniusTwist {
    pub fn new(
        datum: &RootDatum,
        w: WeylElement,
        theta: BasedAutomorphism,
    ) -> Result<Self, DatumError> {
        let matrix = w.matrix.mul(&theta.matrix);
        let order = matrix.multiplicative_order(ORDER_CAP)?;
        datum.root_permutation(&matrix)?;
        Ok(FrobeniusTwist { w, theta, matrix, order })
    }
}

// ---------------------------------------------------------------------------
// Named catalog
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Isogeny {
    /// Cocharacter lattice spanned by the standard basis with the coroots as
    /// basis vectors (characters land in the weight lattice).
    SimplyConnected,
    /// Character lattice spanned by the simple roots as basis vectors.
    Adjoint,
}

fn cartan_matrix(family: char, n: usize) -> Result<Vec<Vec<i64>>, DatumError> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        'A' => {
            if !(1..=8).contains(&n) {
                return Err(DatumError::UnknownName(format!("A{n}")));
            }
            for i in 0..n.saturating_sub(1) {
                edge(&mut a, i, i + 1);
            }
        }
        'B' => {
            if !(2..=8).contains(&n) {
                return Err(DatumError::UnknownName(format!("B{n}")));
            }
            for i in 0..n - 1 {
                edge(&mut a, i, i + 1);
            }
            a[n - 2][n - 1] = -2;
        }
        'C' => {
            if !(2..=8).contains(&n) {
                return Err(DatumError::UnknownName(format!("C{n}")));
            }
            for i in 0..n - 1 {
                edge(&mut a, i, i + 1);
            }
            a[n - 1][n - 2] = -2;
        }
        'D' => {
            if !(3..=8).contains(&n) {
                return Err(DatumError::UnknownName(format!("D{n}")));
            }
            for i in 0..n - 2 {
                edge(&mut a, i, i + 1);
            }
            edge(&mut a, n - 3, n - 1);
        }
        'E' => {
            if !(6..=8).contains(&n) {
                return Err(DatumError::UnknownName(format!("E{n}")));
            }
            edge(&mut a, 0, 2);
            edge(&mut a, 1, 3);
            edge(&mut a, 2, 3);
            for i in 3..n - 1 {
                edge(&mut a, i, i + 1);
            }
        }
        'F' => {
            if n != 4 {
                return Err(DatumError::UnknownName(format!("F{n}")));
            }
            edge(&mut a, 0, 1);
            edge(&mut a, 2, 3);
            a[1][2] = -2;
            a[2][1] = -1;
        }
        'G' => {
            if n != 2 {
                return Err(DatumError::UnknownName(format!("G{n}")));
            }
            a[0][1] = -1;
            a[1][0] = -3;
        }
        other => return Err(DatumError::UnknownName(other.to_string())),
    }
    Ok(a)
}

fn simple_datum(family: char, n: usize, isogeny: Isogeny) -> Result<RootDatum, DatumError> {
    let cartan = cartan_matrix(family, n)?;
    let basis = |k: usize| -> Vec<BigInt> {
        (0..n).map(|i| if i == k { BigInt::one() } else { BigInt::zero() }).collect()
    };
    let (simple_roots, simple_coroots): (Vec<_>, Vec<_>) = match isogeny {
        Isogeny::SimplyConnected => (
            (0..n)
                .map(|i| cartan[i].iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            (0..n).map(basis).collect(),
        ),
        Isogeny::Adjoint => (
            (0..n).map(basis).collect(),
            (0..n)
                .map(|j| (0..n).map(|i| BigInt::from(cartan[i][j])).collect())
                .collect(),
        ),
    };
    RootDatum::from_simples(simple_roots, simple_coroots)
}

/// Builds a datum from a catalog name such as `"A2:sc"`, `"G2"`, `"T1"` or a
/// product `"A1:sc x A1:sc"`. The isogeny tag defaults to `sc`.
pub fn build_named(spec: &str) -> Result<RootDatum, DatumError> {
    let mut datum: Option<RootDatum> = None;
    for raw in spec.split(['x', '*']) {
        let factor = parse_factor(raw.trim())?;
        datum = Some(match datum {
            None => factor,
            Some(d) => d.direct_sum(&factor),
        });
    }
    datum.ok_or_else(|| DatumError::UnknownName(spec.to_string()))
}

fn parse_factor(token: &str) -> Result<RootDatum, DatumError> {
    if token.is_empty() {
        return Err(DatumError::UnknownName(token.to_string()));
    }
    let (head, isogeny) = match token.split_once(':') {
        None => (token, Isogeny::SimplyConnected),
        Some((head, "sc")) => (head, Isogeny::SimplyConnected),
        Some((head, "ad")) => (head, Isogeny::Adjoint),
        Some(_) => return Err(DatumError::UnknownName(token.to_string())),
    };
    let family = head.chars().next().unwrap();
    let n: usize = head[family.len_utf8()..]
        .parse()
        .map_err(|_| DatumError::UnknownName(token.to_string()))?;
    if family == 'T' {
        if n > 8 {
            return Err(DatumError::UnknownName(token.to_string()));
        }
        return Ok(RootDatum::torus(n));
    }
    simple_datum(family, n, isogeny).map_err(|e| match e {
        DatumError::UnknownName(_) => DatumError::UnknownName(token.to_string()),
        other => other,
    })
}

/// Catalog listing for the CLI: name, rank, and Weyl group order (by the
/// classical product formulas, so the large types need no enumeration).
pub fn catalog_entries() -> Vec<(String, usize, u128)> {
    let mut out = Vec::new();
    let weyl_order = |family: char, n: usize| -> u128 {
        let fact = |k: usize| -> u128 { (1..=k as u128).product::<u128>().max(1) };
        match family {
            'A' => fact(n + 1),
            'B' | 'C' => (1u128 << n) * fact(n),
            'D' => (1u128 << (n - 1)) * fact(n),
            'E' => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            'F' => 1152,
            _ => 12,
        }
    };
    let ranges: [(char, std::ops::RangeInclusive<usize>); 7] = [
        ('A', 1..=8),
        ('B', 2..=8),
        ('C', 2..=8),
        ('D', 3..=8),
        ('E', 6..=8),
        ('F', 4..=4),
        ('G', 2..=2),
    ];
    for (family, range) in ranges {
        for n in range {
            for tag in ["sc", "ad"] {
                out.push((format!("{family}{n}:{tag}"), n, weyl_order(family, n)));
            }
        }
    }
    for n in 1..=8 {
        out.push((format!("T{n}"), n, 1));
    }
    out
}
