use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::ncalg::poly::{write_term, NCPoly};
use crate::ncalg::symbol::{Alphabet, Word};
use crate::scalar::Scalar;

/// A sparse element of the `degree`-fold tensor power. Degree 0 holds a bare
/// scalar under the empty key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElem {
    degree: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

/// A per-slot linear operator given on basis words.
pub type SlotOp<'a> = &'a dyn Fn(&Word) -> Result<NCPoly>;

impl TensorElem {
    pub fn zero(degree: usize) -> Self {
        TensorElem { degree, terms: BTreeMap::new() }
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut t = TensorElem::zero(0);
        t.add_term(Vec::new(), c);
        t
    }

    pub fn pure(words: Vec<Word>, c: Scalar) -> Self {
        let mut t = TensorElem::zero(words.len());
        t.add_term(words, c);
        t
    }

    pub fn from_poly(p: &NCPoly) -> Self {
        let mut t = TensorElem::zero(1);
        for (w, c) in p.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    /// Tensor product of single-slot polynomials.
    pub fn from_polys(ps: &[NCPoly]) -> Self {
        let mut acc = TensorElem::scalar(Scalar::one());
        for p in ps {
            acc = acc.tensor(&TensorElem::from_poly(p));
        }
        acc
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Word]) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The scalar of a degree-0 element.
    pub fn as_scalar(&self) -> Option<Scalar> {
        (self.degree == 0).then(|| self.coeff(&[]))
    }

    /// Degree-1 element as a polynomial.
    pub fn to_poly(&self) -> Option<NCPoly> {
        (self.degree == 1).then(|| NCPoly::from_terms(self.terms.iter().map(|(k, c)| (k[0].clone(), c.clone()))))
    }

    pub fn add_term(&mut self, key: Vec<Word>, c: Scalar) {
        debug_assert_eq!(key.len(), self.degree);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElem, c: &Scalar) {
        debug_assert_eq!(self.degree, other.degree);
        if c.is_zero() {
            return;
        }
        for (k, d) in &other.terms {
            self.add_term(k.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorElem {
        let mut out = TensorElem::zero(self.degree);
        out.add_scaled(self, c);
        out
    }

    pub fn tensor(&self, other: &TensorElem) -> TensorElem {
        let mut out = TensorElem::zero(self.degree + other.degree);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut k = a.clone();
                k.extend(b.iter().cloned());
                out.add_term(k, c * d);
            }
        }
        out
    }

    /// Linear extension of a map defined on basis tuples.
    pub fn map_linear<F>(&self, target_degree: usize, mut f: F) -> Result<TensorElem>
    where
        F: FnMut(&[Word]) -> Result<TensorElem>,
    {
        let mut out = TensorElem::zero(target_degree);
        for (k, c) in &self.terms {
            let img = f(k)?;
            if img.degree != target_degree && !img.is_zero() {
                return Err(Error::DegreeMismatch { expected: target_degree, got: img.degree });
            }
            out.add_scaled(&img, c);
        }
        Ok(out)
    }

    /// Applies `ops[i]` to slot `i` and multiplies out.
    pub fn apply_slots(&self, ops: &[SlotOp<'_>]) -> Result<TensorElem> {
        if ops.len() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: ops.len() });
        }
        self.map_linear(self.degree, |k| {
            let mut acc = TensorElem::scalar(Scalar::one());
            for (op, w) in ops.iter().zip(k) {
                let p = op(w)?;
                if p.is_zero() {
                    return Ok(TensorElem::zero(self.degree));
                }
                acc = acc.tensor(&TensorElem::from_poly(&p));
            }
            Ok(acc)
        })
    }

    /// Cyclic left rotation of the slots: `a1 ⊗ … ⊗ an ↦ a2 ⊗ … ⊗ an ⊗ a1`.
    pub fn rotate_left(&self) -> TensorElem {
        let mut out = TensorElem::zero(self.degree);
        for (k, c) in &self.terms {
            let mut k2 = k.clone();
            if !k2.is_empty() {
                k2.rotate_left(1);
            }
            out.add_term(k2, c.clone());
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> TensorDisplay<'a> {
        TensorDisplay { alphabet, elem: self }
    }
}

impl Add for &TensorElem {
    type Output = TensorElem;
    fn add(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &TensorElem {
    type Output = TensorElem;
    fn sub(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::int(-1));
        out
    }
}

impl Neg for &TensorElem {
    type Output = TensorElem;
    fn neg(self) -> TensorElem {
        self.scale(&Scalar::int(-1))
    }
}

pub struct TensorDisplay<'a> {
    alphabet: &'a Alphabet,
    elem: &'a TensorElem,
}

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.elem.terms.iter().enumerate() {
            let body = k.iter().map(|w| self.alphabet.word_name(w)).collect::<Vec<_>>().join(" ox ");
            let unit = k.is_empty();
            write_term(f, i == 0, c, &body, unit)?;
        }
        Ok(())
    }
}
