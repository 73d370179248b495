//! Tate cohomology of a finite cyclic group acting on a lattice, the
//! Tate-Nakayama and DeBacker-Reeder isomorphism models, and the duality
//! pairings computed along three independent routes.
//!
//! Conventions fixed here once and used everywhere:
//!
//! * A `GammaLattice` is `Z^rank` with a finite-order operator `sigma` and a
//!   declared order `m` (`sigma^m = 1`; `m` need not be minimal, matching a
//!   Galois group acting through a proper quotient).
//! * The dual lattice carries the inverse-transpose action, so the dot
//!   product pairing is equivariant.
//! * Multiplicative groups of unramified extensions enter only through their
//!   valuation lattice: unit cohomology vanishes in the unramified case, so
//!   torus cocycles are lattice-valued and 2-cocycles in `E^x` become integer
//!   tables (`TwoCocycleZ`).
//! * `H^1(Gamma, T)` is modeled on the cocharacter side as `ker N / (sigma-1)L`
//!   via 2-periodicity; the identification `H^1(Gamma, X_*(T^)) =
//!   H^1(Gamma, X^*(T))` used silently in the sources is the identity map on
//!   these lattices.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

use crate::abelian::{cokernel, AbelianElement, CokernelProjection, FiniteAbelianGroup};
use crate::matrix::{dot, kernel_basis, solve_integer, solve_rational, vec_add, vec_is_zero,
    vec_neg, IntMatrix};
use crate::qmodz::QmodZ;

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("operator is not square")]
    NotSquare,
    #[error("declared order must be at least 1")]
    ZeroOrder,
    #[error("sigma^{m} is not the identity")]
    NotOrderM { m: usize },
    #[error("vector is not killed by the norm operator (class is not torsion)")]
    NotInNormKernel,
    #[error("vector does not lie in the expected kernel sublattice")]
    NotInKernel,
    #[error("2-cocycle identity violated at (sigma^{a}, sigma^{b}, sigma^{c})")]
    CocycleViolated { a: usize, b: usize, c: usize },
    #[error("vector length {got} does not match lattice rank {rank}")]
    Length { got: usize, rank: usize },
}

/// A lattice with a finite cyclic group action of declared order `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaLattice {
    sigma: IntMatrix,
    m: usize,
}

impl GammaLattice {
    pub fn new(sigma: IntMatrix, m: usize) -> Result<Self, CohomologyError> {
        if sigma.rows() != sigma.cols() {
            return Err(CohomologyError::NotSquare);
        }
        if m == 0 {
            return Err(CohomologyError::ZeroOrder);
        }
        if !sigma.pow(m).is_identity() {
            return Err(CohomologyError::NotOrderM { m });
        }
        Ok(GammaLattice { sigma, m })
    }

    pub fn rank(&self) -> usize {
        self.sigma.rows()
    }

    pub fn sigma(&self) -> &IntMatrix {
        &self.sigma
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The dual lattice with the inverse-transpose action.
    pub fn dual(&self) -> GammaLattice {
        let sigma = self
            .sigma
            .inverse_unimodular()
            .expect("finite-order operators are unimodular")
            .transpose();
        GammaLattice { sigma, m: self.m }
    }

    /// `N = 1 + sigma + ... + sigma^{m-1}`.
    pub fn norm(&self) -> IntMatrix {
        let mut acc = IntMatrix::zeros(self.rank(), self.rank());
        let mut pow = IntMatrix::identity(self.rank());
        for _ in 0..self.m {
            acc = acc.add(&pow);
            pow = pow.mul(&self.sigma);
        }
        acc
    }

    pub fn sigma_minus_id(&self) -> IntMatrix {
        self.sigma.sub(&IntMatrix::identity(self.rank()))
    }

    pub fn apply_pow(&self, k: usize, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = v.to_vec();
        for _ in 0..(k % self.m) {
            out = self.sigma.mul_vec(&out);
        }
        out
    }

    fn check_len(&self, v: &[BigInt]) -> Result<(), CohomologyError> {
        if v.len() != self.rank() {
            return Err(CohomologyError::Length { got: v.len(), rank: self.rank() });
        }
        Ok(())
    }

    pub fn in_norm_kernel(&self, v: &[BigInt]) -> Result<bool, CohomologyError> {
        self.check_len(v)?;
        Ok(vec_is_zero(&self.norm().mul_vec(v)))
    }
}

/// Which Tate group a presentation stands for. `HMinus1` and `H1Torus` are
/// the same quotient `ker N / (sigma-1)L` under 2-periodicity; the label
/// records provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TateKind {
    HMinus1,
    H1Torus,
    H0,
}

impl std::fmt::Display for TateKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TateKind::HMinus1 => write!(f, "H^-1"),
            TateKind::H1Torus => write!(f, "H^1(Gamma, T)"),
            TateKind::H0 => write!(f, "H^0"),
        }
    }
}

/// A Tate group presented as (kernel sublattice) / (relation sublattice),
/// with projection and representative lifting.
#[derive(Debug, Clone)]
pub struct TateGroup {
    kind: TateKind,
    lattice: GammaLattice,
    group: FiniteAbelianGroup,
    kernel: IntMatrix,
    proj: CokernelProjection,
}

/// A cohomology class: a representative lattice vector in the kernel
/// sublattice plus its coordinates in the presented quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub representative: Vec<BigInt>,
    pub element: AbelianElement,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }
}

impl TateGroup {
    pub fn kind(&self) -> TateKind {
        self.kind
    }

    pub fn lattice(&self) -> &GammaLattice {
        &self.lattice
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Projects a vector of the kernel sublattice to the quotient.
    pub fn project(&self, v: &[BigInt]) -> Result<AbelianElement, CohomologyError> {
        let coords = solve_integer(&self.kernel, v).ok_or(CohomologyError::NotInKernel)?;
        Ok(self.proj.project(&coords))
    }

    pub fn class_of(&self, v: &[BigInt]) -> Result<CohomologyClass, CohomologyError> {
        Ok(CohomologyClass { representative: v.to_vec(), element: self.project(v)? })
    }

    /// Every class with a lifted representative.
    pub fn classes(&self) -> Vec<CohomologyClass> {
        self.group
            .torsion_elements()
            .into_iter()
            .map(|e| {
                let coords = self.proj.lift(&e);
                CohomologyClass { representative: self.kernel.mul_vec(&coords), element: e }
            })
            .collect()
    }
}

fn tate_quotient(
    lattice: &GammaLattice,
    kernel_of: &IntMatrix,
    relations: &IntMatrix,
    kind: TateKind,
) -> TateGroup {
    let kernel = kernel_basis(kernel_of);
    let cols: Vec<Vec<BigInt>> = (0..relations.cols())
        .map(|j| {
            solve_integer(&kernel, &relations.col(j))
                .expect("relation generators lie in the kernel sublattice")
        })
        .collect();
    let b = if cols.is_empty() {
        IntMatrix::zeros(kernel.cols(), 0)
    } else {
        IntMatrix::from_columns(cols)
    };
    let (group, proj) = cokernel(&b);
    assert!(group.is_finite(), "Tate groups of lattices are finite");
    TateGroup { kind, lattice: lattice.clone(), group, kernel, proj }
}

/// `ker N / (sigma - 1) L`.
pub fn tate_h_minus1(lat: &GammaLattice) -> TateGroup {
    tate_quotient(lat, &lat.norm(), &lat.sigma_minus_id(), TateKind::HMinus1)
}

/// `H^1(Gamma, T(E))` in the valuation model on `L = X_*(T)`: the same
/// quotient as [`tate_h_minus1`] by 2-periodicity, labeled as `H^1`.
pub fn h1_torus_model(lat: &GammaLattice) -> TateGroup {
    tate_quotient(lat, &lat.norm(), &lat.sigma_minus_id(), TateKind::H1Torus)
}

/// `L^Gamma / N L`.
pub fn tate_h0(lat: &GammaLattice) -> TateGroup {
    tate_quotient(lat, &lat.sigma_minus_id(), &lat.norm(), TateKind::H0)
}

/// A quotient of the full lattice, e.g. the coinvariants `L / (sigma-1)L`.
/// Can have a free part; its torsion subgroup is what pairs with Tate groups.
#[derive(Debug, Clone)]
pub struct LatticeQuotient {
    group: FiniteAbelianGroup,
    proj: CokernelProjection,
}

impl LatticeQuotient {
    pub fn from_relations(relations: &IntMatrix) -> Self {
        let (group, proj) = cokernel(relations);
        LatticeQuotient { group, proj }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn torsion(&self) -> FiniteAbelianGroup {
        self.group.torsion()
    }

    pub fn project(&self, v: &[BigInt]) -> AbelianElement {
        self.proj.project(v)
    }

    pub fn lift(&self, e: &AbelianElement) -> Vec<BigInt> {
        self.proj.lift(e)
    }

    /// Torsion classes with lifted representatives.
    pub fn torsion_classes(&self) -> Vec<CohomologyClass> {
        self.group
            .torsion_elements()
            .into_iter()
            .map(|e| CohomologyClass { representative: self.proj.lift(&e), element: e })
            .collect()
    }
}

/// Coinvariants `L_Gamma = L / (sigma-1)L`. The torsion subgroup coincides
/// with `ker N / (sigma-1)L`; this is checked on every call.
pub fn coinvariants(lat: &GammaLattice) -> LatticeQuotient {
    let q = LatticeQuotient::from_relations(&lat.sigma_minus_id());
    let hm1 = tate_h_minus1(lat);
    assert_eq!(
        q.group.invariant_factors(),
        hm1.group().invariant_factors(),
        "coinvariants torsion must agree with ker N / (sigma-1)L"
    );
    let norm = lat.norm();
    for c in q.torsion_classes() {
        assert!(
            vec_is_zero(&norm.mul_vec(&c.representative)),
            "torsion lift escaped the norm kernel"
        );
    }
    q
}

/// The Tate-Nakayama map `[lambda] -> lambda(pi)` in the valuation model:
/// the identity on representatives.
pub fn tn_map(h1: &TateGroup, lambda: &[BigInt]) -> Result<CohomologyClass, CohomologyError> {
    if !h1.lattice().in_norm_kernel(lambda)? {
        return Err(CohomologyError::NotInNormKernel);
    }
    h1.class_of(lambda)
}

/// The DeBacker-Reeder map: `dr = tn . (lambda -> -lambda)`. Equivalently the
/// class of the cocycle with value `lambda` at Fi, normalized through
/// `z(sigma) = -sigma z(Fi)`.
pub fn dr_map(h1: &TateGroup, lambda: &[BigInt]) -> Result<CohomologyClass, CohomologyError> {
    tn_map(h1, &vec_neg(lambda))
}

/// Where a 1-cocycle value is prescribed: at the generator `sigma`, or at
/// `Fi = sigma^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Sigma,
    Fi,
}

/// A full 1-cocycle table `c : Gamma -> L`, `c(sigma^k)` at index `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCocycle {
    m: usize,
    values: Vec<Vec<BigInt>>,
}

impl LatticeCocycle {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn value(&self, k: usize) -> &[BigInt] {
        &self.values[k % self.m]
    }

    pub fn at_sigma(&self) -> &[BigInt] {
        self.value(1)
    }
}

/// Expands a prescribed value into the full cocycle via
/// `c(sigma^k) = sum_{i<k} sigma^i c(sigma)`.
pub fn cocycle_from_value(
    lat: &GammaLattice,
    anchor: Anchor,
    lambda: &[BigInt],
) -> Result<LatticeCocycle, CohomologyError> {
    if !lat.in_norm_kernel(lambda)? {
        return Err(CohomologyError::NotInNormKernel);
    }
    let base = match anchor {
        Anchor::Sigma => lambda.to_vec(),
        // z(sigma) = -sigma z(Fi) in additive notation
        Anchor::Fi => vec_neg(&lat.sigma().mul_vec(lambda)),
    };
    let mut values = Vec::with_capacity(lat.m());
    values.push(vec![BigInt::zero(); lat.rank()]);
    let mut shifted = base.clone();
    for k in 1..lat.m() {
        values.push(vec_add(&values[k - 1], &shifted));
        shifted = lat.sigma().mul_vec(&shifted);
    }
    let cocycle = LatticeCocycle { m: lat.m(), values };
    debug_assert!(cocycle_identity_holds(lat, &cocycle));
    Ok(cocycle)
}

fn cocycle_identity_holds(lat: &GammaLattice, c: &LatticeCocycle) -> bool {
    for a in 0..lat.m() {
        for b in 0..lat.m() {
            let lhs = c.value(a + b).to_vec();
            let rhs = vec_add(c.value(a), &lat.apply_pow(a, c.value(b)));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// A 2-cocycle `Gamma x Gamma -> Z` in the valuation model of `E^x` (unit
/// parts discarded). Entry `(a, b)` is the value at `(sigma^a, sigma^b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCocycleZ {
    m: usize,
    values: Vec<BigInt>,
}

impl TwoCocycleZ {
    pub fn new(m: usize, values: Vec<BigInt>) -> Result<Self, CohomologyError> {
        assert!(m >= 1);
        assert_eq!(values.len(), m * m, "table must be m x m");
        let b = TwoCocycleZ { m, values };
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    // trivial action: b(y,z) - b(xy,z) + b(x,yz) - b(x,y) = 0
                    let lhs = b.entry(y, z) - b.entry((x + y) % m, z) + b.entry(x, (y + z) % m)
                        - b.entry(x, y);
                    if !lhs.is_zero() {
                        return Err(CohomologyError::CocycleViolated { a: x, b: y, c: z });
                    }
                }
            }
        }
        Ok(b)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entry(&self, a: usize, b: usize) -> &BigInt {
        &self.values[(a % self.m) * self.m + (b % self.m)]
    }

    /// The fundamental class of an unramified degree-`m` extension:
    /// `(sigma^a, sigma^b) -> pi` exactly when `a + b >= m` (valuation 1).
    pub fn fundamental_class(m: usize) -> Self {
        let mut values = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                values.push(if a + b >= m { BigInt::one() } else { BigInt::zero() });
            }
        }
        TwoCocycleZ::new(m, values).expect("fundamental class table is a cocycle")
    }

    /// Differential of a 1-cochain `phi : Gamma -> Z`.
    pub fn coboundary(phi: &[BigInt]) -> Self {
        let m = phi.len();
        let mut values = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                values.push(&phi[b] - &phi[(a + b) % m] + &phi[a]);
            }
        }
        TwoCocycleZ::new(m, values).expect("coboundaries are cocycles")
    }

    pub fn invariant(&self) -> QmodZ {
        invariant_map(self)
    }
}

/// `inv : H^2(Gamma, E^x) -> Q/Z` in the valuation model: the column sum
/// `(1/m) sum_k b(sigma, sigma^k)`. Kills coboundaries and sends the
/// fundamental class to `1/m`.
pub fn invariant_map(b: &TwoCocycleZ) -> QmodZ {
    let total: BigInt = (0..b.m()).map(|k| b.entry(1, k).clone()).sum();
    QmodZ::new(total, BigInt::from(b.m()))
}

fn check_pairing_inputs(
    lat: &GammaLattice,
    c: &[BigInt],
    mu: &[BigInt],
) -> Result<GammaLattice, CohomologyError> {
    if !lat.in_norm_kernel(c)? {
        return Err(CohomologyError::NotInNormKernel);
    }
    let dual = lat.dual();
    if !dual.in_norm_kernel(mu)? {
        return Err(CohomologyError::NotInNormKernel);
    }
    Ok(dual)
}

/// Pairing route 1, through the exponential sequence: solve
/// `(sigma - 1) z = c` over Q and return `<mu, z>` mod Z.
pub fn pairing_standard(
    lat: &GammaLattice,
    c: &[BigInt],
    mu: &[BigInt],
) -> Result<QmodZ, CohomologyError> {
    let _ = check_pairing_inputs(lat, c, mu)?;
    let rhs: Vec<BigRational> = c.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let z = solve_rational(&lat.sigma_minus_id(), &rhs)
        .expect("(sigma-1)z = c is consistent for norm-kernel vectors");
    let value: BigRational = mu
        .iter()
        .zip(&z)
        .map(|(a, b)| BigRational::from_integer(a.clone()) * b)
        .sum();
    Ok(QmodZ::from_rational(&value))
}

/// Pairing route 2, the cup product into `H^0_T(Gamma, Z) = Z/m` followed by
/// `1/m`: `(1/m) sum_k <sigma^k mu, c(sigma^k)>`.
pub fn pairing_cup(
    lat: &GammaLattice,
    c: &[BigInt],
    mu: &[BigInt],
) -> Result<QmodZ, CohomologyError> {
    let dual = check_pairing_inputs(lat, c, mu)?;
    let cocycle = cocycle_from_value(lat, Anchor::Sigma, c)?;
    let mut total = BigInt::zero();
    let mut mu_k = mu.to_vec();
    for k in 0..lat.m() {
        total += dot(&mu_k, cocycle.value(k));
        mu_k = dual.sigma().mul_vec(&mu_k);
    }
    Ok(QmodZ::new(total, BigInt::from(lat.m())))
}

/// Pairing route 3, through class field theory: cup the character cocycle
/// with the torus cocycle `z(sigma) = "mu at pi"` into a valuation-valued
/// 2-cocycle `(tau, upsilon) -> <c(tau), tau z(upsilon)>`, then apply the
/// invariant map.
pub fn pairing_cft(
    lat: &GammaLattice,
    c: &[BigInt],
    mu: &[BigInt],
) -> Result<QmodZ, CohomologyError> {
    let dual = check_pairing_inputs(lat, c, mu)?;
    let a_cocycle = cocycle_from_value(lat, Anchor::Sigma, c)?;
    let z_cocycle = cocycle_from_value(&dual, Anchor::Sigma, mu)?;
    let m = lat.m();
    let mut values = Vec::with_capacity(m * m);
    for j in 0..m {
        for k in 0..m {
            values.push(dot(a_cocycle.value(j), &dual.apply_pow(j, z_cocycle.value(k))));
        }
    }
    let table = TwoCocycleZ::new(m, values)?;
    Ok(invariant_map(&table))
}

/// Whether the pairing identifies each side with the character group of the
/// other: equal orders plus injectivity of one side into the characters of
/// the other.
pub fn pairing_is_perfect(lat: &GammaLattice) -> Result<bool, CohomologyError> {
    let h1 = h1_torus_model(lat);
    let hm1 = tate_h_minus1(&lat.dual());
    if h1.group().order() != hm1.group().order() {
        return Ok(false);
    }
    for mu in hm1.classes() {
        if mu.is_zero() {
            continue;
        }
        let mut pairs_nontrivially = false;
        for c in h1.classes() {
            if !pairing_cup(lat, &c.representative, &mu.representative)?.is_zero() {
                pairs_nontrivially = true;
                break;
            }
        }
        if !pairs_nontrivially {
            return Ok(false);
        }
    }
    Ok(true)
}
