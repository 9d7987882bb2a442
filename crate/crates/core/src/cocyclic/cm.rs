use std::collections::HashMap;

use crate::builders::FINITE_MAX_LEN;
use crate::cocyclic::finite::{FiniteLevels, LevelSpace, MultiIndex};
use crate::cocyclic::{CocyclicModule, Family};
use crate::error::{Error, Result};
use crate::hopf::{diagonal_action, HopfPresentation, ModularPair, TwistedAntipode};
use crate::ncalg::{NCPoly, TensorElem, Word};
use crate::scalar::Scalar;

/// `δ_i` on `H^⊗n`: insert 1 in front, apply `Δ` to slot `i`, or append `σ`.
pub fn cm_face(h: &HopfPresentation, pair: &ModularPair, i: usize, n: usize, t: &TensorElem) -> Result<TensorElem> {
    if t.degree() != n && !t.is_zero() {
        return Err(Error::DegreeMismatch { expected: n, got: t.degree() });
    }
    if i > n + 1 {
        return Err(Error::IndexOutOfRange { index: i, level: n });
    }
    if t.is_zero() {
        return Ok(TensorElem::zero(n + 1));
    }
    let out = if i == 0 {
        TensorElem::from_poly(&NCPoly::one()).tensor(t)
    } else if i == n + 1 {
        t.tensor(&TensorElem::from_poly(&pair.sigma))
    } else {
        h.coproduct_slot(t, i - 1)?
    };
    h.normalize_tensor(&out)
}

/// `σ_i` on `H^⊗n`: the counit on slot `i` (counting from 0), `0 ≤ i < n`.
pub fn cm_degeneracy(h: &HopfPresentation, i: usize, n: usize, t: &TensorElem) -> Result<TensorElem> {
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, level: n });
    }
    if t.is_zero() {
        return Ok(TensorElem::zero(n - 1));
    }
    h.counit_slot(t, i)
}

/// `τ_n(h1 ⊗ … ⊗ hn) = S̃_δ(h1)·(h2 ⊗ … ⊗ hn ⊗ σ)`; the identity on level 0.
pub fn cm_cyclic(st: &TwistedAntipode<'_>, sigma: &NCPoly, n: usize, t: &TensorElem) -> Result<TensorElem> {
    if n == 0 || t.is_zero() {
        return Ok(t.clone());
    }
    let h = st.presentation();
    let mut out = TensorElem::zero(n);
    for (k, c) in t.terms() {
        let head = st.apply_word(&k[0])?;
        if head.is_zero() {
            continue;
        }
        let rest = TensorElem::pure(k[1..].to_vec(), c.clone()).tensor(&TensorElem::from_poly(sigma));
        out.add_scaled(&diagonal_action(h, &head, &rest)?, &Scalar::one());
    }
    h.normalize_tensor(&out)
}

/// The Connes–Moscovici cocyclic module of `(H, δ, σ)` on `{H^⊗n}`.
#[derive(Debug)]
pub struct CmModule<'a> {
    h: &'a HopfPresentation,
    pair: ModularPair,
    st: TwistedAntipode<'a>,
    basis: Option<(Vec<Word>, HashMap<Word, usize>)>,
}

impl<'a> CmModule<'a> {
    /// No check on the pair: negative controls use non-involutive pairs.
    pub fn new(h: &'a HopfPresentation, pair: &ModularPair) -> Result<Self> {
        let pair = ModularPair::new(pair.delta.clone(), h.normalize(&pair.sigma)?);
        let basis = match h.finite_basis(FINITE_MAX_LEN) {
            Ok(words) => {
                let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
                Some((words, index))
            }
            Err(_) => None,
        };
        Ok(CmModule { h, st: TwistedAntipode::new(h, &pair.delta), pair, basis })
    }

    pub fn presentation(&self) -> &'a HopfPresentation {
        self.h
    }

    pub fn pair(&self) -> &ModularPair {
        &self.pair
    }

    pub fn twisted_antipode(&self) -> &TwistedAntipode<'a> {
        &self.st
    }

    fn words(&self) -> Result<&(Vec<Word>, HashMap<Word, usize>)> {
        self.basis.as_ref().ok_or_else(|| Error::NotFiniteDimensional(self.h.name().to_string()))
    }

    /// Basis words of `H` when it is finite-dimensional.
    pub fn basis_words(&self) -> Result<&[Word]> {
        Ok(&self.words()?.0)
    }

    fn radix(&self, n: usize) -> Result<MultiIndex> {
        Ok(MultiIndex::new(vec![self.words()?.0.len(); n]))
    }

    /// Basis tensor of level `n` with multi-index `idx`.
    pub fn basis_tensor(&self, n: usize, idx: usize) -> Result<TensorElem> {
        let (words, _) = self.words()?;
        let digits = self.radix(n)?.decode(idx);
        Ok(TensorElem::pure(digits.into_iter().map(|d| words[d].clone()).collect(), Scalar::one()))
    }

    pub fn to_vector(&self, n: usize, t: &TensorElem) -> Result<Vec<Scalar>> {
        let (_, index) = self.words()?;
        let radix = self.radix(n)?;
        let mut v = vec![Scalar::zero(); radix.total()];
        for (k, c) in self.h.normalize_tensor(t)?.terms() {
            let digits: Vec<usize> = k
                .iter()
                .map(|w| index.get(w).copied().ok_or_else(|| Error::Invalid(format!("{} is not a basis word", self.h.show_word(w)))))
                .collect::<Result<_>>()?;
            let i = radix.encode(&digits);
            v[i] = &v[i] + c;
        }
        Ok(v)
    }

    pub fn from_vector(&self, n: usize, v: &[Scalar]) -> Result<TensorElem> {
        let mut t = TensorElem::zero(n);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                t.add_scaled(&self.basis_tensor(n, i)?, c);
            }
        }
        Ok(t)
    }
}

impl CocyclicModule for CmModule<'_> {
    type Elem = TensorElem;

    fn family(&self) -> Family {
        Family::Cm
    }

    fn zero(&self, n: usize) -> TensorElem {
        TensorElem::zero(n)
    }

    fn add_scaled(&self, acc: &mut TensorElem, x: &TensorElem, c: &Scalar) {
        acc.add_scaled(x, c);
    }

    fn is_zero(&self, x: &TensorElem) -> bool {
        x.is_zero()
    }

    fn face(&self, n: usize, i: usize, x: &TensorElem) -> Result<TensorElem> {
        cm_face(self.h, &self.pair, i, n, x)
    }

    fn degeneracy(&self, n: usize, i: usize, x: &TensorElem) -> Result<TensorElem> {
        cm_degeneracy(self.h, i, n, x)
    }

    fn cyclic(&self, n: usize, x: &TensorElem) -> Result<TensorElem> {
        cm_cyclic(&self.st, &self.pair.sigma, n, x)
    }

    fn show(&self, x: &TensorElem) -> String {
        self.h.show_tensor(x)
    }
}

impl FiniteLevels for CmModule<'_> {
    fn level_family(&self) -> Family {
        Family::Cm
    }

    fn ambient_dim(&self, n: usize) -> Result<usize> {
        Ok(self.radix(n)?.total())
    }

    fn level_space(&self, n: usize) -> Result<LevelSpace> {
        Ok(LevelSpace::full(self.ambient_dim(n)?))
    }

    fn ambient_face(&self, n: usize, i: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.to_vector(n + 1, &cm_face(self.h, &self.pair, i, n, &self.from_vector(n, v)?)?)
    }

    fn ambient_degeneracy(&self, n: usize, i: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.to_vector(n - 1, &cm_degeneracy(self.h, i, n, &self.from_vector(n, v)?)?)
    }

    fn ambient_cyclic(&self, n: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.to_vector(n, &cm_cyclic(&self.st, &self.pair.sigma, n, &self.from_vector(n, v)?)?)
    }
}
