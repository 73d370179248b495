//! Exact combinatorics of unramified root data: integer matrices with Smith
//! normal form, root systems and Weyl groups, Tate cohomology of finite cyclic
//! lattice actions together with the duality pairings, endoscopic sign
//! invariants, and L-packet component-group bookkeeping.
//!
//! Every computation is exact. Integer data uses arbitrary precision, values
//! of characters and pairings live in `QmodZ` (a reduced rational modulo 1),
//! and no floating point appears anywhere in the crate.

pub mod abelian;
pub mod cohomology;
pub mod endoscopy;
pub mod gauss;
pub mod matrix;
pub mod packets;
pub mod qmodz;
pub mod root_datum;
pub mod suites;

pub use abelian::{cokernel, AbelianElement, CokernelProjection, FiniteAbelianGroup};
pub use cohomology::{
    coinvariants, dr_map, h1_torus_model, invariant_map, pairing_cft, pairing_cup,
    pairing_standard, tate_h0, tate_h_minus1, tn_map, Anchor, CohomologyClass, GammaLattice,
    LatticeCocycle, LatticeQuotient, TateGroup, TwoCocycleZ,
};
pub use endoscopy::{
    classify_orbits, det_equals_symmetric_parity, eps_l_unramified, eps_relative_rank,
    parity_claims, split_rank, three_signs, EndoscopicDatum, OrbitReport, ParityReport,
    SignReport, TorsionDualElement,
};
pub use gauss::gauss_sum_norm;
pub use matrix::{kernel_basis, smith_normal_form, solve_integer, solve_rational, IntMatrix,
    SmithDecomposition};
pub use packets::{DualTorusPoint, Normalization, ParameterCombinatorics, TrselpReport};
pub use qmodz::QmodZ;
pub use root_datum::{
    enumerate_based_automorphisms, weyl_from_word, weyl_group, BasedAutomorphism, FrobeniusTwist,
    RootDatum, WeylElement,
};
