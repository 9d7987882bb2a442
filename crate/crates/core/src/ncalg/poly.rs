use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::ncalg::symbol::{Alphabet, GenSymbol, Word};
use crate::scalar::Scalar;

/// A sparse linear combination of words. Zero coefficients are never stored.
///
/// Products here are raw concatenations; reduction to normal form is the job
/// of [`crate::ncalg::RewriteSystem`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::monomial(Word::unit(), Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::monomial(Word::unit(), c)
    }

    pub fn word(w: Word) -> Self {
        NCPoly::monomial(w, Scalar::one())
    }

    pub fn gen(g: GenSymbol) -> Self {
        NCPoly::word(Word::single(g))
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(iter: I) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The scalar part if this is a multiple of the unit word.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::unit()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect() }
    }

    /// Concatenation product without reduction.
    pub fn concat(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a.concat(b), c * d);
            }
        }
        out
    }

    /// Largest word under the derived word order.
    pub fn max_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> PolyDisplay<'a> {
        PolyDisplay { alphabet, poly: self }
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::int(-1));
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&Scalar::int(-1))
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

pub struct PolyDisplay<'a> {
    alphabet: &'a Alphabet,
    poly: &'a NCPoly,
}

/// Writes `c*w` with the coefficient omitted when it is one.
pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Scalar, body: &str, body_is_unit: bool) -> fmt::Result {
    let neg = c.as_rational().map(|r| r < &num::BigRational::from_integer(0.into())).unwrap_or(false);
    let mag = if neg { -c } else { c.clone() };
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    if body_is_unit {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{mag}*{body}")
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.poly.terms.iter().enumerate() {
            write_term(f, i == 0, c, &self.alphabet.word_name(w), w.is_unit())?;
        }
        Ok(())
    }
}
