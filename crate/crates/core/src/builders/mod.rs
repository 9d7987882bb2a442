//! Named constructions. Every builder certifies its output before returning it.

mod certify;
mod crossed;
mod factorization;
mod finite;
mod group;
mod matched;
mod named;

pub use certify::{certification_report, certify, CertifyConfig, FINITE_MAX_LEN};
pub use finite::{add_into, basis_vec, sanitize_labels, Coords, FiniteHopf, FiniteRealization};
pub use crossed::{
    check_crossed_product_formula, crossed_product_algebra, crossed_product_coalgebra, ComoduleCoalgebraData,
    CrossedProductAlgebra, FiniteCoalgebra, ModuleAlgebraData,
};
pub use factorization::{bicrossed_from_factorization, Bicrossed, FactorizationData};
pub use group::FiniteGroupData;
pub use matched::{MatchedPairData, Pair};
pub use named::{
    build_cm_h1, build_enveloping, build_ground, build_function_algebra, build_group_algebra, build_slq2, LieData, H1_DELTA, H1_X,
    H1_Y, SLQ_U, SLQ_V, SLQ_X, SLQ_Y,
};

#[cfg(test)]
mod tests;
