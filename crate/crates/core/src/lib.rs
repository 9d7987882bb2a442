//! Exact symbolic engine for presented Hopf algebras and their Hopf-cyclic
//! cohomology.
//!
//! Layers, bottom up: [`scalar`] and [`ncalg`] (exact arithmetic, rewriting,
//! tensors), [`hopf`] (structure maps, characters, modular pairs),
//! [`builders`] (named constructions), [`coeffs`] (coefficient modules),
//! [`cocyclic`] (cocyclic modules and their checks) and [`cohom`] (exact
//! linear algebra and cohomology).

pub mod builders;
pub mod cocyclic;
pub mod coeffs;
pub mod cohom;
pub mod error;
pub mod hopf;
pub mod ncalg;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use ncalg::{Alphabet, Family, GenSymbol, NCPoly, RewriteSystem, TensorElem, Word};
pub use hopf::{Character, HopfPresentation, ModularPair};
pub use report::{CheckLine, Report};
pub use scalar::Scalar;
