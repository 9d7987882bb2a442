//! Cocyclic modules: the Connes–Moscovici module on tensor powers of `H`,
//! the type A, B and C families, the characteristic map and the checkers.

mod axioms;
mod charmap;
mod cm;
mod finite;
mod intertwine;
mod type_a;
mod type_b;
mod type_c;

#[cfg(test)]
mod tests;

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::scalar::Scalar;

pub use axioms::{basis_probes, sampled_probes, verify_cocyclic_axioms};
pub use charmap::{char_map, check_trace, CharMap, TraceVerdict};
pub use cm::{cm_cyclic, cm_degeneracy, cm_face, CmModule};
pub use finite::{ColumnSolver, FiniteLevels, LevelSpace, MatrixCocyclic, MultiIndex};
pub use intertwine::{check_commutes, check_intertwiner, TypeCToCm};
pub use type_a::TypeA;
pub use type_b::TypeB;
pub use type_c::TypeC;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Cm,
    TypeA,
    TypeB,
    TypeC,
    Twisted,
    PlainAlgebra,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Cm => "CM",
            Family::TypeA => "type A",
            Family::TypeB => "type B",
            Family::TypeC => "type C",
            Family::Twisted => "twisted",
            Family::PlainAlgebra => "plain algebra",
        };
        f.write_str(s)
    }
}

/// A cocyclic module, level by level.
///
/// `face(n, i)` maps level `n` to `n + 1` for `0 ≤ i ≤ n + 1`,
/// `degeneracy(n, i)` maps level `n` to `n − 1` for `0 ≤ i < n`, and
/// `cyclic(n)` acts on level `n`. Elements are compared exactly, so they
/// must be kept in a canonical form.
pub trait CocyclicModule: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn family(&self) -> Family;
    fn zero(&self, n: usize) -> Self::Elem;
    fn add_scaled(&self, acc: &mut Self::Elem, x: &Self::Elem, c: &Scalar);
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn face(&self, n: usize, i: usize, x: &Self::Elem) -> Result<Self::Elem>;
    fn degeneracy(&self, n: usize, i: usize, x: &Self::Elem) -> Result<Self::Elem>;
    fn cyclic(&self, n: usize, x: &Self::Elem) -> Result<Self::Elem>;
    fn show(&self, x: &Self::Elem) -> String;
}

/// `b = Σ_{i=0}^{n+1} (−1)^i δ_i` from level `n` to `n + 1`.
pub fn hochschild_b<M: CocyclicModule>(inst: &M, n: usize, x: &M::Elem) -> Result<M::Elem> {
    let mut acc = inst.zero(n + 1);
    for i in 0..=n + 1 {
        let sign = if i % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
        inst.add_scaled(&mut acc, &inst.face(n, i, x)?, &sign);
    }
    Ok(acc)
}

/// `λ = (−1)^n τ_n`; the identity at level 0.
pub fn lambda_op<M: CocyclicModule>(inst: &M, n: usize, x: &M::Elem) -> Result<M::Elem> {
    if n == 0 {
        return Ok(x.clone());
    }
    let t = inst.cyclic(n, x)?;
    if n.is_multiple_of(2) {
        return Ok(t);
    }
    let mut acc = inst.zero(n);
    inst.add_scaled(&mut acc, &t, &Scalar::int(-1));
    Ok(acc)
}

/// `x − λx`.
pub fn one_minus_lambda<M: CocyclicModule>(inst: &M, n: usize, x: &M::Elem) -> Result<M::Elem> {
    let mut acc = x.clone();
    inst.add_scaled(&mut acc, &lambda_op(inst, n, x)?, &Scalar::int(-1));
    Ok(acc)
}

/// `x − y`.
pub fn difference<M: CocyclicModule>(inst: &M, x: &M::Elem, y: &M::Elem) -> M::Elem {
    let mut acc = x.clone();
    inst.add_scaled(&mut acc, y, &Scalar::int(-1));
    acc
}
