//! Template rewrite rules and reduction to normal form.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::ncalg::poly::NCPoly;
use crate::ncalg::symbol::{Alphabet, FamilyId, GenSymbol, Word};
use crate::scalar::Scalar;

/// Index variables bound by a template left-hand side.
pub type IndexVar = u8;

const MAX_VARS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexPat {
    /// Unindexed family.
    None,
    Fixed(u32),
    Var(IndexVar),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymPattern {
    pub family: FamilyId,
    pub index: IndexPat,
}

impl SymPattern {
    pub fn plain(family: FamilyId) -> Self {
        SymPattern { family, index: IndexPat::None }
    }
    pub fn fixed(g: GenSymbol) -> Self {
        let index = if g.index == 0 { IndexPat::None } else { IndexPat::Fixed(g.index) };
        SymPattern { family: g.family, index }
    }
    pub fn var(family: FamilyId, v: IndexVar) -> Self {
        SymPattern { family, index: IndexPat::Var(v) }
    }
}

/// Index of a right-hand side symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexExpr {
    None,
    Const(u32),
    /// `var + offset`.
    Var(IndexVar, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RhsSym {
    pub family: FamilyId,
    pub index: IndexExpr,
}

impl RhsSym {
    pub fn fixed(g: GenSymbol) -> Self {
        let index = if g.index == 0 { IndexExpr::None } else { IndexExpr::Const(g.index) };
        RhsSym { family: g.family, index }
    }
}

/// One right-hand side term: `coeff * (var if present) * word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsTerm {
    pub coeff: Scalar,
    pub index_factor: Option<IndexVar>,
    pub word: Vec<RhsSym>,
}

/// `lhs -> rhs`, applicable when every `a < b` condition holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Vec<SymPattern>,
    pub conditions: Vec<(IndexVar, IndexVar)>,
    pub rhs: Vec<RhsTerm>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bindings([Option<u32>; MAX_VARS]);

impl Bindings {
    pub fn get(&self, v: IndexVar) -> Option<u32> {
        self.0.get(v as usize).copied().flatten()
    }
}

impl Rule {
    /// A rule with no index variables.
    pub fn fixed(lhs: &Word, rhs: &NCPoly) -> Rule {
        Rule {
            lhs: lhs.symbols().iter().map(|&g| SymPattern::fixed(g)).collect(),
            conditions: Vec::new(),
            rhs: rhs
                .terms()
                .map(|(w, c)| RhsTerm {
                    coeff: c.clone(),
                    index_factor: None,
                    word: w.symbols().iter().map(|&g| RhsSym::fixed(g)).collect(),
                })
                .collect(),
        }
    }

    pub fn is_template(&self) -> bool {
        self.lhs.iter().any(|p| matches!(p.index, IndexPat::Var(_)))
    }

    pub fn vars(&self) -> Vec<IndexVar> {
        let mut vs: Vec<IndexVar> = self
            .lhs
            .iter()
            .filter_map(|p| match p.index {
                IndexPat::Var(v) => Some(v),
                _ => None,
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    fn match_at(&self, w: &[GenSymbol], pos: usize) -> Option<Bindings> {
        if pos + self.lhs.len() > w.len() {
            return None;
        }
        let mut b = Bindings::default();
        for (p, g) in self.lhs.iter().zip(&w[pos..]) {
            if p.family != g.family {
                return None;
            }
            match p.index {
                IndexPat::None => {
                    if g.index != 0 {
                        return None;
                    }
                }
                IndexPat::Fixed(n) => {
                    if g.index != n {
                        return None;
                    }
                }
                IndexPat::Var(v) => {
                    let slot = &mut b.0[v as usize];
                    match slot {
                        Some(n) if *n != g.index => return None,
                        Some(_) => {}
                        None => *slot = Some(g.index),
                    }
                }
            }
        }
        for &(a, c) in &self.conditions {
            match (b.get(a), b.get(c)) {
                (Some(x), Some(y)) if x < y => {}
                _ => return None,
            }
        }
        Some(b)
    }

    /// The left-hand side as a concrete word under `b`.
    pub fn lhs_word(&self, b: &Bindings) -> Option<Word> {
        self.lhs
            .iter()
            .map(|p| {
                let index = match p.index {
                    IndexPat::None => 0,
                    IndexPat::Fixed(n) => n,
                    IndexPat::Var(v) => b.get(v)?,
                };
                Some(GenSymbol { family: p.family, index })
            })
            .collect()
    }

    /// The right-hand side under `b`; errors if an index drops below 1.
    pub fn instantiate_rhs(&self, b: &Bindings) -> Result<Vec<(Scalar, Word)>> {
        let mut out = Vec::with_capacity(self.rhs.len());
        for t in &self.rhs {
            let mut c = t.coeff.clone();
            if let Some(v) = t.index_factor {
                let n = b.get(v).ok_or_else(|| Error::Invalid("unbound index variable in rule".into()))?;
                c = &c * &Scalar::int(n as i64);
            }
            let mut word = Word::unit();
            for s in &t.word {
                let index = match s.index {
                    IndexExpr::None => 0,
                    IndexExpr::Const(n) => n,
                    IndexExpr::Var(v, off) => {
                        let n = b.get(v).ok_or_else(|| Error::Invalid("unbound index variable in rule".into()))? as i64 + off;
                        if n < 1 {
                            return Err(Error::BadIndex { family: format!("#{}", s.family), detail: format!("index {n} < 1") });
                        }
                        n as u32
                    }
                };
                word.0.push(GenSymbol { family: s.family, index });
            }
            out.push((c, word));
        }
        Ok(out)
    }

    /// All instances with index variables in `1..=bound` satisfying the conditions.
    pub fn instances(&self, bound: u32) -> Vec<Bindings> {
        let vars = self.vars();
        let mut out = Vec::new();
        let mut b = Bindings::default();
        fn rec(rule: &Rule, vars: &[IndexVar], k: usize, bound: u32, b: &mut Bindings, out: &mut Vec<Bindings>) {
            if k == vars.len() {
                let ok = rule.conditions.iter().all(|&(a, c)| b.get(a) < b.get(c));
                if ok && rule.instantiate_rhs(b).is_ok() {
                    out.push(*b);
                }
                return;
            }
            for n in 1..=bound {
                b.0[vars[k] as usize] = Some(n);
                rec(rule, vars, k + 1, bound, b, out);
            }
            b.0[vars[k] as usize] = None;
        }
        rec(self, &vars, 0, bound, &mut b, &mut out);
        out
    }
}

/// Word order used to certify termination: weight, then length, then the
/// derived lexicographic order on symbols.
pub fn termination_cmp(alphabet: &Alphabet, a: &Word, b: &Word) -> Ordering {
    alphabet
        .word_weight(a)
        .cmp(&alphabet.word_weight(b))
        .then(a.len().cmp(&b.len()))
        .then_with(|| a.cmp(b))
}

/// Default bounds for normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub steps: usize,
    pub depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { steps: 2_000_000, depth: 400 }
    }
}

/// An ordered list of rules over an alphabet, with a shared normal-form cache.
#[derive(Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    buckets: HashMap<(FamilyId, Option<u32>), Vec<usize>>,
    budget: Budget,
    cache: RwLock<HashMap<Word, NCPoly>>,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        RewriteSystem::with_budget(self.alphabet.clone(), self.rules.clone(), self.budget)
    }
}

impl PartialEq for RewriteSystem {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.rules == other.rules
    }
}

struct Counter {
    steps: usize,
    budget: Budget,
}

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, rules: Vec<Rule>) -> Self {
        RewriteSystem::with_budget(alphabet, rules, Budget::default())
    }

    pub fn with_budget(alphabet: Alphabet, rules: Vec<Rule>, budget: Budget) -> Self {
        let mut buckets: HashMap<(FamilyId, Option<u32>), Vec<usize>> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            if let Some(first) = r.lhs.first() {
                let key = match first.index {
                    IndexPat::Fixed(n) => (first.family, Some(n)),
                    IndexPat::None => (first.family, Some(0)),
                    IndexPat::Var(_) => (first.family, None),
                };
                buckets.entry(key).or_default().push(i);
            }
        }
        RewriteSystem { alphabet, rules, buckets, budget, cache: RwLock::new(HashMap::new()) }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    fn candidates(&self, g: GenSymbol) -> impl Iterator<Item = usize> + '_ {
        let a = self.buckets.get(&(g.family, Some(g.index))).map(|v| v.as_slice()).unwrap_or(&[]);
        let b = self.buckets.get(&(g.family, None)).map(|v| v.as_slice()).unwrap_or(&[]);
        // merge two ascending lists to keep declaration order
        let (mut i, mut j) = (0, 0);
        std::iter::from_fn(move || {
            let next = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) if x < y => {
                    i += 1;
                    x
                }
                (Some(_), Some(&y)) => {
                    j += 1;
                    y
                }
                (Some(&x), None) => {
                    i += 1;
                    x
                }
                (None, Some(&y)) => {
                    j += 1;
                    y
                }
                (None, None) => return None,
            };
            Some(next)
        })
    }

    /// Leftmost redex: position, rule, bindings.
    pub fn find_redex(&self, w: &Word) -> Option<(usize, usize, Bindings)> {
        let s = w.symbols();
        for pos in 0..s.len() {
            for ri in self.candidates(s[pos]) {
                if let Some(b) = self.rules[ri].match_at(s, pos) {
                    return Some((pos, ri, b));
                }
            }
        }
        None
    }

    /// Every redex in `w`.
    pub fn all_redexes(&self, w: &Word) -> Vec<(usize, usize, Bindings)> {
        let s = w.symbols();
        let mut out = Vec::new();
        for pos in 0..s.len() {
            for ri in self.candidates(s[pos]) {
                if let Some(b) = self.rules[ri].match_at(s, pos) {
                    out.push((pos, ri, b));
                }
            }
        }
        out
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    /// One rewrite step at the given redex.
    pub fn rewrite_at(&self, w: &Word, pos: usize, rule: usize, b: &Bindings) -> Result<Vec<(Scalar, Word)>> {
        let r = &self.rules[rule];
        let s = w.symbols();
        let (pre, post) = (&s[..pos], &s[pos + r.lhs.len()..]);
        Ok(r
            .instantiate_rhs(b)?
            .into_iter()
            .map(|(c, mid)| {
                let mut v = Word::from_slice(pre);
                v.0.extend_from_slice(mid.symbols());
                v.0.extend_from_slice(post);
                (c, v)
            })
            .collect())
    }

    pub fn normalize_word(&self, w: &Word) -> Result<NCPoly> {
        let mut counter = Counter { steps: 0, budget: self.budget };
        self.nf_word(w, 0, &mut counter)
    }

    fn nf_word(&self, w: &Word, depth: usize, counter: &mut Counter) -> Result<NCPoly> {
        if let Some(p) = self.cache.read().expect("normal-form cache poisoned").get(w) {
            return Ok(p.clone());
        }
        let out = match self.find_redex(w) {
            None => NCPoly::word(w.clone()),
            Some((pos, ri, b)) => {
                counter.steps += 1;
                if counter.steps > counter.budget.steps || depth > counter.budget.depth {
                    return Err(Error::NonTerminating {
                        budget: if depth > counter.budget.depth { counter.budget.depth } else { counter.budget.steps },
                        word: self.alphabet.word_name(w),
                    });
                }
                let mut acc = NCPoly::zero();
                for (c, v) in self.rewrite_at(w, pos, ri, &b)? {
                    let sub = self.nf_word(&v, depth + 1, counter)?;
                    acc.add_scaled(&sub, &c);
                }
                acc
            }
        };
        self.cache.write().expect("normal-form cache poisoned").insert(w.clone(), out.clone());
        Ok(out)
    }

    pub fn normalize(&self, p: &NCPoly) -> Result<NCPoly> {
        let mut counter = Counter { steps: 0, budget: self.budget };
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let nf = self.nf_word(w, 0, &mut counter)?;
            out.add_scaled(&nf, c);
        }
        Ok(out)
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        self.normalize(&a.concat(b))
    }

    /// Normalization choosing a random redex at every step, bypassing the cache.
    pub fn normalize_random<R: Rng>(&self, p: &NCPoly, rng: &mut R) -> Result<NCPoly> {
        let mut pending: BTreeMap<Word, Scalar> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = NCPoly::zero();
        let mut steps = 0usize;
        while let Some(w) = {
            let n = pending.len();
            if n == 0 {
                None
            } else {
                let k = rng.gen_range(0..n);
                pending.keys().nth(k).cloned()
            }
        } {
            let c = pending.remove(&w).expect("key present");
            let redexes = self.all_redexes(&w);
            if redexes.is_empty() {
                out.add_term(w, c);
                continue;
            }
            steps += 1;
            if steps > self.budget.steps {
                return Err(Error::NonTerminating { budget: self.budget.steps, word: self.alphabet.word_name(&w) });
            }
            let (pos, ri, b) = redexes[rng.gen_range(0..redexes.len())];
            for (d, v) in self.rewrite_at(&w, pos, ri, &b)? {
                let e = &c * &d;
                let slot = pending.entry(v).or_insert_with(Scalar::zero);
                *slot = &*slot + &e;
            }
            pending.retain(|_, s| !s.is_zero());
        }
        Ok(out)
    }

    /// First instance (up to `bound`) of a rule whose right-hand side is not
    /// strictly below its left-hand side in the termination order.
    pub fn check_termination(&self, bound: u32) -> std::result::Result<(), String> {
        for (i, r) in self.rules.iter().enumerate() {
            for b in r.instances(bound) {
                let lhs = r.lhs_word(&b).expect("bound instance");
                let rhs = r.instantiate_rhs(&b).map_err(|e| e.to_string())?;
                for (c, w) in rhs {
                    if c.is_zero() {
                        continue;
                    }
                    if termination_cmp(&self.alphabet, &w, &lhs) != Ordering::Less {
                        return Err(format!(
                            "rule {i}: {} does not decrease to {}",
                            self.alphabet.word_name(&lhs),
                            self.alphabet.word_name(&w)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Resolves every overlap and inclusion ambiguity among rule instances
    /// with indices up to `bound`. Returns the first unresolved ambiguity.
    pub fn check_confluence(&self, bound: u32) -> std::result::Result<usize, String> {
        let mut inst: Vec<(usize, Bindings, Word)> = Vec::new();
        for (i, r) in self.rules.iter().enumerate() {
            for b in r.instances(bound) {
                let w = r.lhs_word(&b).expect("bound instance");
                inst.push((i, b, w));
            }
        }
        let mut checked = 0usize;
        let resolve = |word: &Word, first: (usize, usize, &Bindings), second: (usize, usize, &Bindings)| -> std::result::Result<(), String> {
            let one = self.rewrite_at(word, first.0, first.1, first.2).map_err(|e| e.to_string())?;
            let two = self.rewrite_at(word, second.0, second.1, second.2).map_err(|e| e.to_string())?;
            let p1 = self.normalize(&NCPoly::from_terms(one.into_iter().map(|(c, w)| (w, c)))).map_err(|e| e.to_string())?;
            let p2 = self.normalize(&NCPoly::from_terms(two.into_iter().map(|(c, w)| (w, c)))).map_err(|e| e.to_string())?;
            if p1 != p2 {
                return Err(format!(
                    "ambiguity on {}: {} vs {}",
                    self.alphabet.word_name(word),
                    p1.display(&self.alphabet),
                    p2.display(&self.alphabet)
                ));
            }
            Ok(())
        };
        for (ri, bi, li) in &inst {
            for (rj, bj, lj) in &inst {
                let (a, b) = (li.symbols(), lj.symbols());
                // suffix of a equals prefix of b
                for k in 1..a.len().min(b.len()) {
                    if a[a.len() - k..] == b[..k] {
                        let mut w = Word::from_slice(a);
                        w.0.extend_from_slice(&b[k..]);
                        resolve(&w, (0, *ri, bi), (a.len() - k, *rj, bj))?;
                        checked += 1;
                    }
                }
                // b inside a
                if b.len() <= a.len() {
                    for pos in 0..=(a.len() - b.len()) {
                        if a[pos..pos + b.len()] != *b {
                            continue;
                        }
                        if pos == 0 && b.len() == a.len() && ri == rj && bi == bj {
                            continue;
                        }
                        resolve(li, (0, *ri, bi), (pos, *rj, bj))?;
                        checked += 1;
                    }
                }
            }
        }
        Ok(checked)
    }

    /// Drop cached normal forms.
    pub fn clear_cache(&self) {
        self.cache.write().expect("normal-form cache poisoned").clear();
    }
}
