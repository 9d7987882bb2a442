//! Crossed product algebras `A ⋊ H` and crossed product coalgebras `H ⋊ D`.

use std::collections::BTreeMap;

use crate::builders::finite::{add_into, basis_vec, Coords, FiniteHopf};
use crate::builders::matched::{add_pair, Pair};
use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::ncalg::{Alphabet, FamilyId, GenSymbol, NCPoly, RewriteSystem, Rule, Word};
use crate::report::{CheckLine, Report};
use crate::scalar::Scalar;

/// An algebra `A` by rewriting, with `H` acting on generators.
#[derive(Clone, Debug)]
pub struct ModuleAlgebraData {
    pub algebra: RewriteSystem,
    /// `(h, a) -> h ▷ a` for generators `h` of `H` and `a` of `A`.
    pub action: BTreeMap<(GenSymbol, GenSymbol), NCPoly>,
}

impl ModuleAlgebraData {
    /// `h ▷ p` for a word `h` of `H`, extended by `g ▷ (ab) = (g1 ▷ a)(g2 ▷ b)`.
    pub fn act(&self, h: &HopfPresentation, hw: &Word, p: &NCPoly) -> Result<NCPoly> {
        let mut acc = p.clone();
        for &g in hw.symbols().iter().rev() {
            let mut next = NCPoly::zero();
            for (w, c) in acc.terms() {
                next.add_scaled(&self.act_gen_word(h, g, w.symbols())?, c);
            }
            acc = next;
        }
        Ok(acc)
    }

    pub fn act_poly(&self, h: &HopfPresentation, hp: &NCPoly, p: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in hp.terms() {
            out.add_scaled(&self.act(h, w, p)?, c);
        }
        Ok(out)
    }

    fn act_gen_word(&self, h: &HopfPresentation, g: GenSymbol, w: &[GenSymbol]) -> Result<NCPoly> {
        match w {
            [] => Ok(NCPoly::constant(h.gen_counit(g)?)),
            [a] => self.action.get(&(g, *a)).cloned().ok_or_else(|| Error::MissingTable {
                table: "module algebra action",
                generator: format!("{} on {}", h.alphabet().symbol_name(g), self.algebra.alphabet().symbol_name(*a)),
            }),
            [a, rest @ ..] => {
                let head = NCPoly::gen(*a);
                let tail = NCPoly::word(Word::from_slice(rest));
                let mut out = NCPoly::zero();
                for (legs, c) in h.gen_coproduct(g)?.terms() {
                    let x = self.act(h, &legs[0], &head)?;
                    let y = self.act(h, &legs[1], &tail)?;
                    out.add_scaled(&self.algebra.mul(&x, &y)?, c);
                }
                Ok(out)
            }
        }
    }

    /// The action respects the relations of `A` and of `H` (instances up to
    /// `bound` for templates).
    pub fn check(&self, h: &HopfPresentation, bound: u32) -> Result<()> {
        let fail = |s: String| Err(Error::NotModuleAlgebra(s));
        let a_gens = self.algebra.alphabet().generators(bound);
        for rule in self.algebra.rules() {
            for b in rule.instances(bound.max(1)) {
                let Some(lhs) = rule.lhs_word(&b) else { continue };
                let rhs: NCPoly = NCPoly::from_terms(rule.instantiate_rhs(&b)?.into_iter().map(|(c, w)| (w, c)));
                for g in h.generators(bound) {
                    let l = self.algebra.normalize(&self.act_gen_word(h, g, lhs.symbols())?)?;
                    let mut r = NCPoly::zero();
                    for (w, c) in rhs.terms() {
                        r.add_scaled(&self.act_gen_word(h, g, w.symbols())?, c);
                    }
                    let r = self.algebra.normalize(&r)?;
                    if l != r {
                        return fail(format!(
                            "{} ▷ ({}) differs from its rewrite",
                            h.alphabet().symbol_name(g),
                            self.algebra.alphabet().word_name(&lhs)
                        ));
                    }
                }
            }
        }
        for rule in h.rewrite().rules() {
            for b in rule.instances(bound.max(1)) {
                let Some(lhs) = rule.lhs_word(&b) else { continue };
                let rhs: NCPoly = NCPoly::from_terms(rule.instantiate_rhs(&b)?.into_iter().map(|(c, w)| (w, c)));
                for &a in &a_gens {
                    let x = NCPoly::gen(a);
                    if self.act(h, &lhs, &x)? != self.act_poly(h, &rhs, &x)? {
                        return fail(format!("action ignores the relation {} of H", h.show_word(&lhs)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `A ⋊ H` as one rewrite system: the families of `A`, then those of `H`,
/// with `h a → Σ (h1 ▷ a) h2` for generators.
#[derive(Clone, Debug)]
pub struct CrossedProductAlgebra {
    pub rewrite: RewriteSystem,
    a_families: usize,
}

impl CrossedProductAlgebra {
    /// Embeds a polynomial of `A`.
    pub fn embed_a(&self, p: &NCPoly) -> NCPoly {
        p.clone()
    }

    /// Embeds a polynomial of `H`.
    pub fn embed_h(&self, p: &NCPoly) -> NCPoly {
        shift_poly(p, self.a_families as FamilyId)
    }

    /// The normal form of `a ⊗ h`.
    pub fn pure(&self, a: &NCPoly, h: &NCPoly) -> Result<NCPoly> {
        self.rewrite.mul(&self.embed_a(a), &self.embed_h(h))
    }

    pub fn mul(&self, x: &NCPoly, y: &NCPoly) -> Result<NCPoly> {
        self.rewrite.mul(x, y)
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.rewrite.alphabet()
    }
}

fn shift_word(w: &Word, by: FamilyId) -> Word {
    w.symbols().iter().map(|g| GenSymbol { family: g.family + by, index: g.index }).collect()
}

fn shift_poly(p: &NCPoly, by: FamilyId) -> NCPoly {
    NCPoly::from_terms(p.terms().map(|(w, c)| (shift_word(w, by), c.clone())))
}

fn fixed_rules(rs: &RewriteSystem, by: FamilyId) -> Result<Vec<Rule>> {
    let mut out = Vec::new();
    for rule in rs.rules() {
        for b in rule.instances(1) {
            let Some(lhs) = rule.lhs_word(&b) else { continue };
            let rhs = NCPoly::from_terms(rule.instantiate_rhs(&b)?.into_iter().map(|(c, w)| (shift_word(&w, by), c)));
            out.push(Rule::fixed(&shift_word(&lhs, by), &rhs));
        }
    }
    Ok(out)
}

/// Builds `A ⋊ H` after checking the module-algebra structure. The combined
/// rewrite system is certified terminating and confluent.
pub fn crossed_product_algebra(a: &ModuleAlgebraData, h: &HopfPresentation) -> Result<CrossedProductAlgebra> {
    if a.algebra.alphabet().has_indexed() || h.alphabet().has_indexed() {
        return Err(Error::Invalid("crossed products need finite alphabets".into()));
    }
    a.check(h, 0)?;
    let na = a.algebra.alphabet().families().len();
    let mut families = a.algebra.alphabet().families().to_vec();
    for f in h.alphabet().families() {
        if families.iter().any(|g| g.name == f.name) {
            return Err(Error::Invalid(format!("generator name {} is used by both factors", f.name)));
        }
        families.push(f.clone());
    }
    let by = na as FamilyId;
    let mut rules = fixed_rules(&a.algebra, 0)?;
    rules.extend(fixed_rules(h.rewrite(), by)?);
    for g in h.generators(0) {
        for x in a.algebra.alphabet().generators(0) {
            let mut rhs = NCPoly::zero();
            for (legs, c) in h.gen_coproduct(g)?.terms() {
                let acted = a.act(h, &legs[0], &NCPoly::gen(x))?;
                rhs.add_scaled(&acted.concat(&NCPoly::word(shift_word(&legs[1], by))), c);
            }
            let lhs = Word::from_slice(&[GenSymbol { family: g.family + by, index: g.index }, x]);
            rules.push(Rule::fixed(&lhs, &rhs));
        }
    }
    let rewrite = RewriteSystem::new(Alphabet::new(families), rules);
    rewrite.check_termination(1).map_err(|w| Error::Uncertified(format!("crossed product rules: {w}")))?;
    rewrite.check_confluence(1).map_err(|w| Error::Uncertified(format!("crossed product rules: {w}")))?;
    Ok(CrossedProductAlgebra { rewrite, a_families: na })
}

/// Compares the rewrite system with `(a⊗g)(b⊗h) = a(g1 ▷ b) ⊗ g2 h` on all
/// pairs of the given probe monomials.
pub fn check_crossed_product_formula(
    cp: &CrossedProductAlgebra,
    a: &ModuleAlgebraData,
    h: &HopfPresentation,
    a_probes: &[NCPoly],
    h_probes: &[NCPoly],
) -> Result<CheckLine> {
    let mut line = CheckLine::new("crossed product formula");
    for x in a_probes {
        for g in h_probes {
            for y in a_probes {
                for k in h_probes {
                    let lhs = cp.mul(&cp.pure(x, g)?, &cp.pure(y, k)?)?;
                    let mut rhs = NCPoly::zero();
                    for (legs, c) in h.coproduct(g)?.terms() {
                        let left = a.algebra.mul(x, &a.act(h, &legs[0], y)?)?;
                        let right = h.mul(&NCPoly::word(legs[1].clone()), k)?;
                        rhs.add_scaled(&cp.pure(&left, &right)?, c);
                    }
                    let ok = lhs == rhs;
                    line.record(ok, || format!("({} ⊗ {})({} ⊗ {})", a.algebra.alphabet().word_name(&max_or_unit(x)), h.show(g), a.algebra.alphabet().word_name(&max_or_unit(y)), h.show(k)));
                    if !ok {
                        return Ok(line);
                    }
                }
            }
        }
    }
    Ok(line)
}

fn max_or_unit(p: &NCPoly) -> Word {
    p.max_word().cloned().unwrap_or_else(Word::unit)
}

/// A right `H`-comodule coalgebra `D`; only the coalgebra part of `d` is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleCoalgebraData {
    pub h: FiniteHopf,
    pub d: FiniteHopf,
    /// `coaction[i] = ρ(d_i)` as `(D index, H index) -> coefficient`.
    pub coaction: Vec<Pair>,
}

impl ComoduleCoalgebraData {
    pub fn new(h: FiniteHopf, d: FiniteHopf, coaction: Vec<Pair>) -> Result<Self> {
        if coaction.len() != d.dim() {
            return Err(Error::Invalid("coaction table has the wrong length".into()));
        }
        check_right_comodule_coalgebra(&d, &h, &coaction).map_err(Error::NotComoduleCoalgebra)?;
        Ok(ComoduleCoalgebraData { h, d, coaction })
    }

    /// `H` coacting on itself by `h ↦ h(2) ⊗ S(h(1)) h(3)`.
    pub fn co_conjugation(h: &FiniteHopf) -> Result<Self> {
        let mut coaction = Vec::new();
        for i in 0..h.dim() {
            let mut rho = Pair::new();
            for ((a, bc), c) in &h.coproduct[i] {
                for ((b, d), c2) in &h.coproduct[*bc] {
                    let right = h.mul(&h.antipode[*a], &basis_vec(*d));
                    for (k, v) in right {
                        add_pair(&mut rho, (*b, k), &v * &(c * c2));
                    }
                }
            }
            coaction.push(rho);
        }
        ComoduleCoalgebraData::new(h.clone(), h.clone(), coaction)
    }

    /// `D = k` with the trivial coaction.
    pub fn trivial(h: &FiniteHopf) -> Self {
        let coaction = vec![h.unit.iter().map(|(j, c)| ((0, *j), c.clone())).collect()];
        ComoduleCoalgebraData { h: h.clone(), d: FiniteHopf::ground(), coaction }
    }
}

/// Coassociativity, counitality and compatibility of a right coaction of
/// `h` on the coalgebra `d`, exhaustively.
pub(crate) fn check_right_comodule_coalgebra(d: &FiniteHopf, h: &FiniteHopf, coaction: &[Pair]) -> std::result::Result<(), String> {
    type Triple = BTreeMap<(usize, usize, usize), Scalar>;
    let add3 = |m: &mut Triple, k: (usize, usize, usize), c: Scalar| {
        let e = m.entry(k).or_insert_with(Scalar::zero);
        *e = &*e + &c;
    };
    let clean = |mut m: Triple| {
        m.retain(|_, c| !c.is_zero());
        m
    };
    for i in 0..d.dim() {
        let rho = &coaction[i];
        let mut lhs = Triple::new();
        let mut rhs = Triple::new();
        for ((k, l), c) in rho {
            for ((k2, l2), c2) in &coaction[*k] {
                add3(&mut lhs, (*k2, *l2, *l), c * c2);
            }
            for ((l1, l2), c2) in &h.coproduct[*l] {
                add3(&mut rhs, (*k, *l1, *l2), c * c2);
            }
        }
        if clean(lhs) != clean(rhs) {
            return Err(format!("coaction is not coassociative on {}", d.labels[i]));
        }
        let mut back = Coords::new();
        let mut eps = Coords::new();
        for ((k, l), c) in rho {
            add_into(&mut back, &basis_vec(*k), &(c * &h.counit[*l]));
            add_into(&mut eps, &basis_vec(*l), &(c * &d.counit[*k]));
        }
        if back != basis_vec(i) {
            return Err(format!("coaction is not counital on {}", d.labels[i]));
        }
        let mut want = Coords::new();
        add_into(&mut want, &h.unit, &d.counit[i]);
        if eps != want {
            return Err(format!("ε(d(0))d(1) != ε(d)1 on {}", d.labels[i]));
        }
        let mut lhs = Triple::new();
        for ((k, l), c) in rho {
            for ((k1, k2), c2) in &d.coproduct[*k] {
                add3(&mut lhs, (*k1, *k2, *l), c * c2);
            }
        }
        let mut rhs = Triple::new();
        for ((x1, x2), c) in &d.coproduct[i] {
            for ((a, la), ca) in &coaction[*x1] {
                for ((b, lb), cb) in &coaction[*x2] {
                    for (l, cl) in &h.mult[*la][*lb] {
                        add3(&mut rhs, (*a, *b, *l), &(c * ca) * &(cb * cl));
                    }
                }
            }
        }
        if clean(lhs) != clean(rhs) {
            return Err(format!("coaction does not respect the coproduct on {}", d.labels[i]));
        }
    }
    Ok(())
}

/// A finite-dimensional coalgebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCoalgebra {
    pub labels: Vec<String>,
    pub coproduct: Vec<Pair>,
    pub counit: Vec<Scalar>,
}

impl FiniteCoalgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Coassociativity and both counit laws on every basis element.
    pub fn check(&self) -> Report {
        let mut coassoc = CheckLine::new("coassociativity");
        let mut counit = CheckLine::new("counit");
        for i in 0..self.dim() {
            let mut l: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut r: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut left_id = Coords::new();
            let mut right_id = Coords::new();
            for ((a, b), c) in &self.coproduct[i] {
                for ((a1, a2), c2) in &self.coproduct[*a] {
                    let e = l.entry((*a1, *a2, *b)).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * c2);
                }
                for ((b1, b2), c2) in &self.coproduct[*b] {
                    let e = r.entry((*a, *b1, *b2)).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * c2);
                }
                add_into(&mut left_id, &basis_vec(*b), &(c * &self.counit[*a]));
                add_into(&mut right_id, &basis_vec(*a), &(c * &self.counit[*b]));
            }
            l.retain(|_, c| !c.is_zero());
            r.retain(|_, c| !c.is_zero());
            coassoc.record(l == r, || self.labels[i].clone());
            counit.record(left_id == basis_vec(i) && right_id == basis_vec(i), || self.labels[i].clone());
        }
        Report { lines: vec![coassoc, counit] }
    }
}

/// `H ⋊ D` on the basis `h_i ⊗ d_j`, indexed `i·dim D + j`, with
/// `Δ(h⊗d) = h1 ⊗ d1(0) ⊗ h2 d1(1) ⊗ d2` and `ε(h⊗d) = ε(h)ε(d)`.
/// Certified exhaustively.
pub fn crossed_product_coalgebra(data: &ComoduleCoalgebraData) -> Result<FiniteCoalgebra> {
    let (h, d) = (&data.h, &data.d);
    check_right_comodule_coalgebra(d, h, &data.coaction).map_err(Error::NotComoduleCoalgebra)?;
    let nd = d.dim();
    let idx = |i: usize, j: usize| i * nd + j;
    let mut coproduct = Vec::new();
    let mut counit = Vec::new();
    let mut labels = Vec::new();
    for i in 0..h.dim() {
        for j in 0..nd {
            let mut t = Pair::new();
            for ((h1, h2), ch) in &h.coproduct[i] {
                for ((d1, d2), cd) in &d.coproduct[j] {
                    for ((k, l), cr) in &data.coaction[*d1] {
                        for (m, cm) in &h.mult[*h2][*l] {
                            add_pair(&mut t, (idx(*h1, *k), idx(*m, *d2)), &(ch * cd) * &(cr * cm));
                        }
                    }
                }
            }
            coproduct.push(t);
            counit.push(&h.counit[i] * &d.counit[j]);
            labels.push(format!("{}{}", h.labels[i], d.labels[j]));
        }
    }
    let c = FiniteCoalgebra { labels, coproduct, counit };
    if let Some(l) = c.check().first_failure() {
        return Err(Error::Uncertified(format!("crossed product coalgebra: {l}")));
    }
    Ok(c)
}
