use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::ncalg::{Alphabet, FamilyId, GenSymbol, NCPoly, RewriteSystem, TensorElem, Word};
use crate::scalar::Scalar;

/// An indexed family whose members past the base are defined by
/// `g_{n+1} = raiser * g_n - g_n * raiser`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedFamily {
    pub family: FamilyId,
    pub base: u32,
    pub raiser: GenSymbol,
}

/// Structure-map tables on the base generators.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct HopfTables {
    pub coproduct: BTreeMap<GenSymbol, TensorElem>,
    pub counit: BTreeMap<GenSymbol, Scalar>,
    pub antipode: BTreeMap<GenSymbol, NCPoly>,
    pub antipode_inverse: Option<BTreeMap<GenSymbol, NCPoly>>,
}

#[derive(Debug, Default)]
struct Memo {
    gen_coproduct: RwLock<HashMap<GenSymbol, TensorElem>>,
    gen_antipode: RwLock<HashMap<GenSymbol, NCPoly>>,
    gen_antipode_inv: RwLock<HashMap<GenSymbol, NCPoly>>,
    word_coproduct: RwLock<HashMap<Word, TensorElem>>,
    word_antipode: RwLock<HashMap<Word, NCPoly>>,
}

fn read<K: std::hash::Hash + Eq, V: Clone>(m: &RwLock<HashMap<K, V>>, k: &K) -> Option<V> {
    m.read().expect("memo poisoned").get(k).cloned()
}

fn write<K: std::hash::Hash + Eq, V>(m: &RwLock<HashMap<K, V>>, k: K, v: V) {
    m.write().expect("memo poisoned").insert(k, v);
}

/// A presented bialgebra with antipode. Structure maps extend from the tables
/// as algebra maps (coproduct, counit) and anti-algebra maps (antipode).
#[derive(Debug)]
pub struct HopfPresentation {
    name: String,
    rewrite: RewriteSystem,
    derived: Vec<DerivedFamily>,
    tables: HopfTables,
    notes: Vec<String>,
    memo: Memo,
}

impl Clone for HopfPresentation {
    fn clone(&self) -> Self {
        HopfPresentation::new(
            self.name.clone(),
            self.rewrite.clone(),
            self.derived.clone(),
            self.tables.clone(),
        )
        .with_notes(self.notes.clone())
    }
}

impl PartialEq for HopfPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.rewrite == other.rewrite && self.derived == other.derived && self.tables == other.tables
    }
}

impl HopfPresentation {
    pub fn new(name: impl Into<String>, rewrite: RewriteSystem, derived: Vec<DerivedFamily>, tables: HopfTables) -> Self {
        HopfPresentation { name: name.into(), rewrite, derived, tables, notes: Vec::new(), memo: Memo::default() }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn rewrite(&self) -> &RewriteSystem {
        &self.rewrite
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.rewrite.alphabet()
    }

    pub fn derived(&self) -> &[DerivedFamily] {
        &self.derived
    }

    pub fn tables(&self) -> &HopfTables {
        &self.tables
    }

    pub fn has_antipode_inverse(&self) -> bool {
        self.tables.antipode_inverse.is_some()
    }

    pub fn is_finite_alphabet(&self) -> bool {
        !self.alphabet().has_indexed()
    }

    pub fn gen(&self, name: &str, index: Option<u32>) -> Result<NCPoly> {
        Ok(NCPoly::gen(self.alphabet().symbol(name, index)?))
    }

    /// Generators with indexed families enumerated up to `max_index`.
    pub fn generators(&self, max_index: u32) -> Vec<GenSymbol> {
        self.alphabet().generators(max_index)
    }

    pub fn show(&self, p: &NCPoly) -> String {
        p.display(self.alphabet()).to_string()
    }

    pub fn show_tensor(&self, t: &TensorElem) -> String {
        t.display(self.alphabet()).to_string()
    }

    pub fn show_word(&self, w: &Word) -> String {
        self.alphabet().word_name(w)
    }

    // ---- algebra ----

    pub fn normalize(&self, p: &NCPoly) -> Result<NCPoly> {
        self.rewrite.normalize(p)
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        self.rewrite.mul(a, b)
    }

    pub fn mul_words(&self, a: &Word, b: &Word) -> Result<NCPoly> {
        self.rewrite.normalize_word(&a.concat(b))
    }

    pub fn product(&self, factors: &[NCPoly]) -> Result<NCPoly> {
        let mut acc = NCPoly::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Every slot reduced to normal form.
    pub fn normalize_tensor(&self, t: &TensorElem) -> Result<TensorElem> {
        t.map_linear(t.degree(), |k| {
            let ps: Vec<NCPoly> = k.iter().map(|w| self.rewrite.normalize_word(w)).collect::<Result<_>>()?;
            Ok(TensorElem::from_polys(&ps))
        })
    }

    /// Slotwise product in the tensor power.
    pub fn tensor_mul(&self, a: &TensorElem, b: &TensorElem) -> Result<TensorElem> {
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch { expected: a.degree(), got: b.degree() });
        }
        let mut out = TensorElem::zero(a.degree());
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let ps: Vec<NCPoly> = ka.iter().zip(kb).map(|(x, y)| self.mul_words(x, y)).collect::<Result<_>>()?;
                if ps.iter().any(|p| p.is_zero()) {
                    continue;
                }
                out.add_scaled(&TensorElem::from_polys(&ps), &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Collapses a tensor into the algebra by multiplying its slots in order.
    pub fn multiply_out(&self, t: &TensorElem) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (k, c) in t.terms() {
            let w: Word = k.iter().flat_map(|w| w.symbols().iter().copied()).collect();
            out.add_scaled(&self.rewrite.normalize_word(&w)?, c);
        }
        Ok(out)
    }

    fn derivation(&self, g: GenSymbol) -> Option<&DerivedFamily> {
        self.derived.iter().find(|d| d.family == g.family && g.index > d.base)
    }

    fn missing(&self, table: &'static str, g: GenSymbol) -> Error {
        Error::MissingTable { table, generator: self.alphabet().symbol_name(g) }
    }

    // ---- coproduct ----

    pub fn gen_coproduct(&self, g: GenSymbol) -> Result<TensorElem> {
        if let Some(t) = self.tables.coproduct.get(&g) {
            return Ok(t.clone());
        }
        if let Some(t) = read(&self.memo.gen_coproduct, &g) {
            return Ok(t);
        }
        let d = self.derivation(g).ok_or_else(|| self.missing("coproduct", g))?.clone();
        let prev = self.gen_coproduct(GenSymbol::indexed(g.family, g.index - 1))?;
        let r = self.gen_coproduct(d.raiser)?;
        let t = &self.tensor_mul(&r, &prev)? - &self.tensor_mul(&prev, &r)?;
        write(&self.memo.gen_coproduct, g, t.clone());
        Ok(t)
    }

    /// Coproduct of a word, which need not be in normal form.
    pub fn coproduct_word(&self, w: &Word) -> Result<TensorElem> {
        if let Some(t) = read(&self.memo.word_coproduct, w) {
            return Ok(t);
        }
        let t = match w.symbols() {
            [] => TensorElem::pure(vec![Word::unit(), Word::unit()], Scalar::one()),
            [g] => self.gen_coproduct(*g)?,
            s => {
                let (head, last) = s.split_at(s.len() - 1);
                let a = self.coproduct_word(&Word::from_slice(head))?;
                self.tensor_mul(&a, &self.gen_coproduct(last[0])?)?
            }
        };
        write(&self.memo.word_coproduct, w.clone(), t.clone());
        Ok(t)
    }

    pub fn coproduct(&self, h: &NCPoly) -> Result<TensorElem> {
        let mut out = TensorElem::zero(2);
        for (w, c) in h.terms() {
            out.add_scaled(&self.coproduct_word(w)?, c);
        }
        Ok(out)
    }

    /// Applies the coproduct to slot `i`, raising the degree by one.
    pub fn coproduct_slot(&self, t: &TensorElem, i: usize) -> Result<TensorElem> {
        if i >= t.degree() {
            return Err(Error::IndexOutOfRange { index: i, level: t.degree() });
        }
        t.map_linear(t.degree() + 1, |k| {
            let d = self.coproduct_word(&k[i])?;
            let mut out = TensorElem::zero(k.len() + 1);
            for (pair, c) in d.terms() {
                let mut key = Vec::with_capacity(k.len() + 1);
                key.extend_from_slice(&k[..i]);
                key.extend(pair.iter().cloned());
                key.extend_from_slice(&k[i + 1..]);
                out.add_term(key, c.clone());
            }
            Ok(out)
        })
    }

    /// `n`-fold iterated coproduct, a tensor of degree `n + 1`, expanding the
    /// first slot each time.
    pub fn iterated_coproduct(&self, h: &NCPoly, n: usize) -> Result<TensorElem> {
        let mut t = TensorElem::from_poly(h);
        for _ in 0..n {
            t = self.coproduct_slot(&t, 0)?;
        }
        Ok(t)
    }

    /// Same, expanding the last slot each time.
    pub fn iterated_coproduct_right(&self, h: &NCPoly, n: usize) -> Result<TensorElem> {
        let mut t = TensorElem::from_poly(h);
        for _ in 0..n {
            let last = t.degree() - 1;
            t = self.coproduct_slot(&t, last)?;
        }
        Ok(t)
    }

    /// Sweedler legs of `w` in degree `n`: `Δ^{n-1}(w)` as a tensor of degree `n`.
    pub fn legs(&self, w: &Word, n: usize) -> Result<TensorElem> {
        if n == 0 {
            return Ok(TensorElem::scalar(self.counit_word(w)?));
        }
        self.iterated_coproduct(&NCPoly::word(w.clone()), n - 1)
    }

    // ---- counit ----

    pub fn gen_counit(&self, g: GenSymbol) -> Result<Scalar> {
        if let Some(c) = self.tables.counit.get(&g) {
            return Ok(c.clone());
        }
        // a commutator of scalars
        self.derivation(g).map(|_| Scalar::zero()).ok_or_else(|| self.missing("counit", g))
    }

    pub fn counit_word(&self, w: &Word) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for &g in w.symbols() {
            acc = &acc * &self.gen_counit(g)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn counit(&self, h: &NCPoly) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (w, c) in h.terms() {
            acc = &acc + &(c * &self.counit_word(w)?);
        }
        Ok(acc)
    }

    /// Applies the counit to slot `i`, lowering the degree by one.
    pub fn counit_slot(&self, t: &TensorElem, i: usize) -> Result<TensorElem> {
        if i >= t.degree() {
            return Err(Error::IndexOutOfRange { index: i, level: t.degree() });
        }
        t.map_linear(t.degree() - 1, |k| {
            let e = self.counit_word(&k[i])?;
            let mut key = k.to_vec();
            key.remove(i);
            Ok(TensorElem::pure(key, e))
        })
    }

    // ---- antipode ----

    fn derived_anti(&self, g: GenSymbol, inverse: bool) -> Result<NCPoly> {
        let d = self.derivation(g).ok_or_else(|| self.missing(if inverse { "antipode inverse" } else { "antipode" }, g))?.clone();
        let prev = GenSymbol::indexed(g.family, g.index - 1);
        let (sp, sr) = if inverse {
            (self.gen_antipode_inverse(prev)?, self.gen_antipode_inverse(d.raiser)?)
        } else {
            (self.gen_antipode(prev)?, self.gen_antipode(d.raiser)?)
        };
        Ok(&self.mul(&sp, &sr)? - &self.mul(&sr, &sp)?)
    }

    pub fn gen_antipode(&self, g: GenSymbol) -> Result<NCPoly> {
        if let Some(p) = self.tables.antipode.get(&g) {
            return Ok(p.clone());
        }
        if let Some(p) = read(&self.memo.gen_antipode, &g) {
            return Ok(p);
        }
        let p = self.derived_anti(g, false)?;
        write(&self.memo.gen_antipode, g, p.clone());
        Ok(p)
    }

    pub fn gen_antipode_inverse(&self, g: GenSymbol) -> Result<NCPoly> {
        let table = self.tables.antipode_inverse.as_ref().ok_or_else(|| self.missing("antipode inverse", g))?;
        if let Some(p) = table.get(&g) {
            return Ok(p.clone());
        }
        if let Some(p) = read(&self.memo.gen_antipode_inv, &g) {
            return Ok(p);
        }
        let p = self.derived_anti(g, true)?;
        write(&self.memo.gen_antipode_inv, g, p.clone());
        Ok(p)
    }

    pub fn antipode_word(&self, w: &Word) -> Result<NCPoly> {
        if let Some(p) = read(&self.memo.word_antipode, w) {
            return Ok(p);
        }
        let mut acc = NCPoly::one();
        for &g in w.symbols().iter().rev() {
            acc = self.mul(&acc, &self.gen_antipode(g)?)?;
        }
        write(&self.memo.word_antipode, w.clone(), acc.clone());
        Ok(acc)
    }

    pub fn antipode(&self, h: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in h.terms() {
            out.add_scaled(&self.antipode_word(w)?, c);
        }
        Ok(out)
    }

    pub fn antipode_inverse_word(&self, w: &Word) -> Result<NCPoly> {
        let mut acc = NCPoly::one();
        for &g in w.symbols().iter().rev() {
            acc = self.mul(&acc, &self.gen_antipode_inverse(g)?)?;
        }
        Ok(acc)
    }

    pub fn antipode_inverse(&self, h: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in h.terms() {
            out.add_scaled(&self.antipode_inverse_word(w)?, c);
        }
        Ok(out)
    }

    /// `S^k` for `k >= 0`, or `(S^{-1})^{-k}` for negative `k`.
    pub fn antipode_power(&self, h: &NCPoly, k: i32) -> Result<NCPoly> {
        let mut p = h.clone();
        for _ in 0..k.unsigned_abs() {
            p = if k > 0 { self.antipode(&p)? } else { self.antipode_inverse(&p)? };
        }
        Ok(p)
    }

    /// Grouplike certificate: `Δσ = σ⊗σ` and `ε(σ) = 1`.
    pub fn is_grouplike(&self, sigma: &NCPoly) -> Result<bool> {
        let d = self.coproduct(sigma)?;
        let s = TensorElem::from_polys(&[sigma.clone(), sigma.clone()]);
        Ok(d == s && self.counit(sigma)?.is_one())
    }

    pub fn is_primitive(&self, x: &NCPoly) -> Result<bool> {
        let d = self.coproduct(x)?;
        let expect = &TensorElem::from_polys(&[x.clone(), NCPoly::one()]) + &TensorElem::from_polys(&[NCPoly::one(), x.clone()]);
        Ok(d == expect)
    }

    // ---- finite bases ----

    /// All normal words, provided none is longer than `max_len`.
    pub fn finite_basis(&self, max_len: usize) -> Result<Vec<Word>> {
        if !self.is_finite_alphabet() {
            return Err(Error::NotFiniteDimensional(format!("{} has an infinite generator family", self.name)));
        }
        let gens = self.generators(0);
        let mut out = vec![Word::unit()];
        let mut frontier = vec![Word::unit()];
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for &g in &gens {
                    let mut v = w.clone();
                    v.0.push(g);
                    if self.rewrite.is_normal(&v) {
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                out.sort();
                return Ok(out);
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        Err(Error::NotFiniteDimensional(format!("{} has normal words longer than {max_len}", self.name)))
    }
}
