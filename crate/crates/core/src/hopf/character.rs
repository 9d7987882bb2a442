use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hopf::presentation::HopfPresentation;
use crate::ncalg::{GenSymbol, NCPoly, TensorElem, Word};
use crate::scalar::Scalar;

/// A scalar per base generator, extended multiplicatively. Members of a
/// derived family past the base are commutators and evaluate to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: BTreeMap<GenSymbol, Scalar>,
}

impl Character {
    pub fn new(values: BTreeMap<GenSymbol, Scalar>) -> Self {
        Character { values }
    }

    /// The counit as a character.
    pub fn counit(h: &HopfPresentation) -> Self {
        Character { values: h.tables().counit.clone() }
    }

    /// Values by generator name. Missing generators default to the counit.
    pub fn from_named(h: &HopfPresentation, named: &[(&str, Option<u32>, Scalar)]) -> Result<Self> {
        let mut values = h.tables().counit.clone();
        for (name, idx, v) in named {
            values.insert(h.alphabet().symbol(name, *idx)?, v.clone());
        }
        Ok(Character { values })
    }

    pub fn values(&self) -> &BTreeMap<GenSymbol, Scalar> {
        &self.values
    }

    pub fn gen_value(&self, h: &HopfPresentation, g: GenSymbol) -> Result<Scalar> {
        if let Some(v) = self.values.get(&g) {
            return Ok(v.clone());
        }
        if h.derived().iter().any(|d| d.family == g.family && g.index > d.base) {
            return Ok(Scalar::zero());
        }
        Err(Error::MissingTable { table: "character", generator: h.alphabet().symbol_name(g) })
    }

    pub fn eval_word(&self, h: &HopfPresentation, w: &Word) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for &g in w.symbols() {
            acc = &acc * &self.gen_value(h, g)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, h: &HopfPresentation, p: &NCPoly) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (w, c) in p.terms() {
            acc = &acc + &(c * &self.eval_word(h, w)?);
        }
        Ok(acc)
    }

    /// Applies the character to slot `i`.
    pub fn eval_slot(&self, h: &HopfPresentation, t: &TensorElem, i: usize) -> Result<TensorElem> {
        if i >= t.degree() {
            return Err(Error::IndexOutOfRange { index: i, level: t.degree() });
        }
        t.map_linear(t.degree() - 1, |k| {
            let mut key = k.to_vec();
            let w = key.remove(i);
            Ok(TensorElem::pure(key, self.eval_word(h, &w)?))
        })
    }

    /// Checks that every rule instance (indices up to `bound`) is respected.
    pub fn validate(&self, h: &HopfPresentation, bound: u32) -> Result<()> {
        let rs = h.rewrite();
        for rule in rs.rules() {
            for b in rule.instances(bound) {
                let lhs = rule.lhs_word(&b).expect("bound instance");
                let rhs = rule.instantiate_rhs(&b)?;
                let l = self.eval_word(h, &lhs)?;
                let mut r = Scalar::zero();
                for (c, w) in &rhs {
                    r = &r + &(c * &self.eval_word(h, w)?);
                }
                if l != r {
                    return Err(Error::InvalidCharacter(format!(
                        "{}: value {} on the left, {} on the right",
                        h.show_word(&lhs),
                        l,
                        r
                    )));
                }
            }
        }
        Ok(())
    }

    /// `δ ∘ S`, the convolution inverse of `δ`.
    pub fn compose_antipode(&self, h: &HopfPresentation, bound: u32) -> Result<Character> {
        let mut values = BTreeMap::new();
        for g in h.generators(bound) {
            if h.derived().iter().any(|d| d.family == g.family && g.index > d.base) {
                continue;
            }
            values.insert(g, self.eval(h, &h.gen_antipode(g)?)?);
        }
        Ok(Character { values })
    }
}
