//! Free noncommutative polynomials over indexed alphabets, template
//! rewriting to normal form, and sparse tensor powers.

mod poly;
mod rewrite;
mod symbol;
mod tensor;

pub use poly::{NCPoly, PolyDisplay};
pub use rewrite::{
    termination_cmp, Bindings, Budget, IndexExpr, IndexPat, IndexVar, RewriteSystem, RhsSym, RhsTerm, Rule, SymPattern,
};
pub use symbol::{Alphabet, Family, FamilyId, GenSymbol, Named, Word};
pub use tensor::{SlotOp, TensorDisplay, TensorElem};

#[cfg(test)]
mod tests;
