//! Finite(ly generated) abelian groups in invariant-factor form, presented as
//! cokernels of integer matrices. These carry the coinvariants torsion,
//! Tate groups and component groups computed elsewhere in the crate.

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use crate::matrix::{smith_normal_form, IntMatrix};

/// Invariant factors `d_1 | d_2 | ...` (each >= 2) plus a free rank.
/// Coinvariant lattices can be infinite, so the free rank is kept here;
/// every Tate group has free rank zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl FiniteAbelianGroup {
    pub fn new(invariant_factors: Vec<BigInt>, free_rank: usize) -> Self {
        for d in &invariant_factors {
            assert!(*d >= BigInt::from(2), "invariant factor below 2");
        }
        for win in invariant_factors.windows(2) {
            assert!(win[1].is_multiple_of(&win[0]), "broken divisibility chain");
        }
        FiniteAbelianGroup { invariant_factors, free_rank }
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: vec![], free_rank: 0 }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn num_generators(&self) -> usize {
        self.invariant_factors.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion part.
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product::<BigInt>().max(BigInt::one())
    }

    /// Exponent of the torsion part (1 when torsion-free).
    pub fn exponent(&self) -> BigInt {
        self.invariant_factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// The torsion subgroup as a standalone group.
    pub fn torsion(&self) -> FiniteAbelianGroup {
        FiniteAbelianGroup { invariant_factors: self.invariant_factors.clone(), free_rank: 0 }
    }

    pub fn zero(&self) -> AbelianElement {
        AbelianElement::new(self.clone(), vec![BigInt::zero(); self.num_generators()])
    }

    pub fn generator(&self, i: usize) -> AbelianElement {
        let mut coords = vec![BigInt::zero(); self.num_generators()];
        coords[i] = BigInt::one();
        AbelianElement::new(self.clone(), coords)
    }

    /// All elements of the torsion subgroup (free coordinates stay zero).
    pub fn torsion_elements(&self) -> Vec<AbelianElement> {
        let mut out = vec![self.zero()];
        for (i, d) in self.invariant_factors.iter().enumerate() {
            let d: usize = usize::try_from(d.clone()).expect("factor fits usize for enumeration");
            let mut next = Vec::with_capacity(out.len() * d);
            for e in &out {
                for k in 0..d {
                    let mut coords = e.coords.clone();
                    coords[i] = BigInt::from(k);
                    next.push(AbelianElement::new(self.clone(), coords));
                }
            }
            out = next;
        }
        out
    }
}

/// An element in canonical coordinates: torsion coordinate `i` reduced into
/// `[0, d_i)`, free coordinates unreduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianElement {
    group: FiniteAbelianGroup,
    coords: Vec<BigInt>,
}

impl AbelianElement {
    pub fn new(group: FiniteAbelianGroup, coords: Vec<BigInt>) -> Self {
        assert_eq!(coords.len(), group.num_generators(), "coordinate count mismatch");
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(i, c)| match group.invariant_factors.get(i) {
                Some(d) => c.mod_floor(d),
                None => c,
            })
            .collect();
        AbelianElement { group, coords }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &AbelianElement) -> AbelianElement {
        assert_eq!(self.group, other.group, "elements of different groups");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        AbelianElement::new(self.group.clone(), coords)
    }

    pub fn neg(&self) -> AbelianElement {
        AbelianElement::new(self.group.clone(), self.coords.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &BigInt) -> AbelianElement {
        AbelianElement::new(self.group.clone(), self.coords.iter().map(|c| k * c).collect())
    }

    /// Order of a torsion element; `None` when a free coordinate is nonzero.
    pub fn order(&self) -> Option<BigInt> {
        let nt = self.group.invariant_factors.len();
        if self.coords[nt..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut ord = BigInt::one();
        for (c, d) in self.coords.iter().zip(&self.group.invariant_factors) {
            let g = c.gcd(d);
            ord = ord.lcm(&(d / &g));
        }
        Some(ord)
    }
}

/// The quotient map `Z^m -> Z^m / col-span(A)` produced by [`cokernel`].
///
/// `slots` records which Smith-basis coordinates survive: torsion slots keep
/// their invariant factor, free slots have none. Slots with `d_i = 1` are
/// dropped entirely.
#[derive(Debug, Clone)]
pub struct CokernelProjection {
    group: FiniteAbelianGroup,
    u: IntMatrix,
    u_inv: IntMatrix,
    torsion_slots: Vec<usize>,
    free_slots: Vec<usize>,
}

impl CokernelProjection {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Image of an ambient vector in the quotient.
    pub fn project(&self, v: &[BigInt]) -> AbelianElement {
        let w = self.u_inv.mul_vec(v);
        let coords: Vec<BigInt> = self
            .torsion_slots
            .iter()
            .chain(&self.free_slots)
            .map(|&i| w[i].clone())
            .collect();
        AbelianElement::new(self.group.clone(), coords)
    }

    /// A preimage of a quotient element; `project(lift(e)) == e`.
    pub fn lift(&self, e: &AbelianElement) -> Vec<BigInt> {
        assert_eq!(e.group(), &self.group);
        let mut w = vec![BigInt::zero(); self.u.cols()];
        let nt = self.torsion_slots.len();
        for (k, &i) in self.torsion_slots.iter().enumerate() {
            w[i] = e.coords()[k].clone();
        }
        for (k, &i) in self.free_slots.iter().enumerate() {
            w[i] = e.coords()[nt + k].clone();
        }
        self.u.mul_vec(&w)
    }
}

/// The quotient `Z^rows(A) / col-span(A)` with its projection map. The kernel
/// of the projection is exactly the column span.
pub fn cokernel(a: &IntMatrix) -> (FiniteAbelianGroup, CokernelProjection) {
    let snf = smith_normal_form(a);
    let m = a.rows();
    let t = m.min(a.cols());
    let mut factors = Vec::new();
    let mut torsion_slots = Vec::new();
    let mut free_slots = Vec::new();
    for i in 0..m {
        let d = if i < t { snf.d.at(i, i).clone() } else { BigInt::zero() };
        if d.is_zero() {
            free_slots.push(i);
        } else if !d.is_one() {
            torsion_slots.push(i);
            factors.push(d);
        }
    }
    let group = FiniteAbelianGroup::new(factors, free_slots.len());
    let proj = CokernelProjection {
        group: group.clone(),
        u: snf.u,
        u_inv: snf.u_inv,
        torsion_slots,
        free_slots,
    };
    (group, proj)
}
