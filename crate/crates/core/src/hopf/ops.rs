use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::Result;
use crate::hopf::character::Character;
use crate::hopf::presentation::HopfPresentation;
use crate::ncalg::{NCPoly, TensorElem, Word};

/// A linear map from the presentation to itself, given on basis words.
pub type LinearMap<'a> = Box<dyn Fn(&Word) -> Result<NCPoly> + Send + Sync + 'a>;

/// `(f * g)(c) = f(c1) g(c2)`.
pub fn convolve<'a>(h: &'a HopfPresentation, f: LinearMap<'a>, g: LinearMap<'a>) -> LinearMap<'a> {
    Box::new(move |w: &Word| {
        let d = h.coproduct_word(w)?;
        let mut out = NCPoly::zero();
        for (k, c) in d.terms() {
            let a = f(&k[0])?;
            if a.is_zero() {
                continue;
            }
            let b = g(&k[1])?;
            out.add_scaled(&h.mul(&a, &b)?, c);
        }
        Ok(out)
    })
}

/// The convolution unit `c ↦ ε(c)·1`.
pub fn convolution_unit(h: &HopfPresentation) -> LinearMap<'_> {
    Box::new(move |w: &Word| Ok(NCPoly::constant(h.counit_word(w)?)))
}

pub fn identity_map<'a>() -> LinearMap<'a> {
    Box::new(|w: &Word| Ok(NCPoly::word(w.clone())))
}

pub fn antipode_map(h: &HopfPresentation) -> LinearMap<'_> {
    Box::new(move |w: &Word| h.antipode_word(w))
}

/// A character viewed as a map into scalars times the unit.
pub fn character_map<'a>(h: &'a HopfPresentation, delta: &'a Character) -> LinearMap<'a> {
    Box::new(move |w: &Word| Ok(NCPoly::constant(delta.eval_word(h, w)?)))
}

/// Applies a linear map to a polynomial.
pub fn apply_map(f: &LinearMap<'_>, p: &NCPoly) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        out.add_scaled(&f(w)?, c);
    }
    Ok(out)
}

/// The twisted antipode `h ↦ δ(h1) S(h2)`.
///
/// Computed on generators from the coproduct and extended
/// anti-multiplicatively; words are memoized.
#[derive(Debug)]
pub struct TwistedAntipode<'a> {
    h: &'a HopfPresentation,
    delta: Character,
    inverse: bool,
    memo: RwLock<HashMap<Word, NCPoly>>,
}

impl<'a> TwistedAntipode<'a> {
    pub fn new(h: &'a HopfPresentation, delta: &Character) -> Self {
        TwistedAntipode { h, delta: delta.clone(), inverse: false, memo: RwLock::new(HashMap::new()) }
    }

    /// The composition inverse `h ↦ δ(h2) S⁻¹(h1)`.
    pub fn inverse(h: &'a HopfPresentation, delta: &Character) -> Self {
        TwistedAntipode { h, delta: delta.clone(), inverse: true, memo: RwLock::new(HashMap::new()) }
    }

    pub fn presentation(&self) -> &'a HopfPresentation {
        self.h
    }

    pub fn delta(&self) -> &Character {
        &self.delta
    }

    fn on_generator(&self, w: &Word) -> Result<NCPoly> {
        let d = self.h.coproduct_word(w)?;
        let mut out = NCPoly::zero();
        for (k, c) in d.terms() {
            if self.inverse {
                let e = self.delta.eval_word(self.h, &k[1])?;
                if e.is_zero() {
                    continue;
                }
                out.add_scaled(&self.h.antipode_inverse_word(&k[0])?, &(c * &e));
            } else {
                let e = self.delta.eval_word(self.h, &k[0])?;
                if e.is_zero() {
                    continue;
                }
                out.add_scaled(&self.h.antipode_word(&k[1])?, &(c * &e));
            }
        }
        Ok(out)
    }

    pub fn apply_word(&self, w: &Word) -> Result<NCPoly> {
        if let Some(p) = self.memo.read().expect("memo poisoned").get(w) {
            return Ok(p.clone());
        }
        let out = match w.symbols() {
            [] => NCPoly::one(),
            [_] => self.on_generator(w)?,
            s => {
                let (head, last) = s.split_at(s.len() - 1);
                let a = self.apply_word(&Word::from_slice(last))?;
                let b = self.apply_word(&Word::from_slice(head))?;
                self.h.mul(&a, &b)?
            }
        };
        self.memo.write().expect("memo poisoned").insert(w.clone(), out.clone());
        Ok(out)
    }

    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.apply_word(w)?, c);
        }
        Ok(out)
    }

    /// Applies the map to slot `i` of a tensor.
    pub fn apply_slot(&self, t: &TensorElem, i: usize) -> Result<TensorElem> {
        t.map_linear(t.degree(), |k| {
            let p = self.apply_word(&k[i])?;
            let mut out = TensorElem::zero(k.len());
            for (w, c) in p.terms() {
                let mut key = k.to_vec();
                key[i] = w.clone();
                out.add_term(key, c.clone());
            }
            Ok(out)
        })
    }
}

/// The twisted antipode as a [`LinearMap`] computed directly from the
/// convolution `δ * S`, without the anti-multiplicative shortcut.
pub fn twisted_antipode_by_convolution<'a>(h: &'a HopfPresentation, delta: &'a Character) -> LinearMap<'a> {
    convolve(h, character_map(h, delta), antipode_map(h))
}

/// Diagonal action `h·(x1 ⊗ … ⊗ xn) = h(1)x1 ⊗ … ⊗ h(n)xn`.
pub fn diagonal_action(h: &HopfPresentation, a: &NCPoly, t: &TensorElem) -> Result<TensorElem> {
    let n = t.degree();
    if n == 0 {
        return Ok(t.scale(&h.counit(a)?));
    }
    let legs = h.iterated_coproduct(a, n - 1)?;
    h.tensor_mul(&legs, t)
}
