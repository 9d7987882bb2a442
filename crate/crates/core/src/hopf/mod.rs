//! Presented Hopf algebras: structure maps extended from generator tables,
//! convolution, characters, twisted antipodes and modular pairs.

mod axioms;
mod character;
mod mpi;
mod ops;
mod presentation;

pub use axioms::{check_hopf_axioms, check_hopf_axioms_exhaustive, check_hopf_axioms_on, probe_words, ProbeConfig};
pub use character::Character;
pub use mpi::{check_mpi, generator_probes, ModularPair, MpiVerdict, MpiWitness};
pub use ops::{
    antipode_map, apply_map, character_map, convolution_unit, convolve, diagonal_action, identity_map,
    twisted_antipode_by_convolution, LinearMap, TwistedAntipode,
};
pub use presentation::{DerivedFamily, HopfPresentation, HopfTables};
