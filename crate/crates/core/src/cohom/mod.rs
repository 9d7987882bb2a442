//! Exact linear algebra and cyclic cohomology of finite cocyclic modules.

mod complex;
mod matrix;

#[cfg(test)]
mod tests;

pub use complex::{
    bicomplex_oracle_hc, certify_cocycle, cohomology, lambda_complex_hc, CocycleVerdict, CohomologyReport, DegreeData, Method,
};
pub use matrix::{ExactMatrix, Rref};
