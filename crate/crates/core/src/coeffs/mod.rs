//! Coefficients: modules-comodules, their symmetry conditions and the
//! correspondences between them.

mod algebra;
mod correspond;
mod examples;
mod module;
mod symmetry;


pub use algebra::{
    action_only, check_comodule_algebra, check_comodule_coalgebra, check_module_algebra, check_module_coalgebra,
    coaction_only, to_dense, unit_vector, FiniteAlgebra,
};
pub use correspond::{
    extract_pair, mpi_to_sayd, pair_module, staic_inverse, staic_transform, tensor_yd_ayd, twist, PROBE_BOUND,
};
pub use examples::GroupAlgebra;
pub use module::{kron, FinCoefModule, Side};
pub use symmetry::{
    check_ayd, check_compatibility, check_sayd, check_stability, check_yd, AntipodePower, SymmetryCertificate,
    SymmetryKind,
};
