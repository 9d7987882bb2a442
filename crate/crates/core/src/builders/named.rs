use std::collections::BTreeMap;

use crate::builders::certify::{certify, CertifyConfig};
use crate::builders::finite::FiniteHopf;
use crate::builders::group::FiniteGroupData;
use crate::error::{Error, Result};
use crate::hopf::{DerivedFamily, HopfPresentation, HopfTables};
use crate::ncalg::{
    Alphabet, Family, GenSymbol, IndexExpr, IndexVar, NCPoly, RewriteSystem, RhsSym, RhsTerm, Rule, SymPattern, TensorElem,
    Word,
};
use crate::scalar::Scalar;

fn sym(family: u16) -> RhsSym {
    RhsSym { family, index: IndexExpr::None }
}

fn term(c: Scalar, factor: Option<IndexVar>, word: Vec<RhsSym>) -> RhsTerm {
    RhsTerm { coeff: c, index_factor: factor, word }
}

fn g(family: u16) -> NCPoly {
    NCPoly::gen(GenSymbol::plain(family))
}

fn tensor2(pairs: &[(Scalar, NCPoly, NCPoly)]) -> TensorElem {
    let mut t = TensorElem::zero(2);
    for (c, a, b) in pairs {
        t.add_scaled(&TensorElem::from_polys(&[a.clone(), b.clone()]), c);
    }
    t
}

fn primitive(x: &NCPoly) -> TensorElem {
    tensor2(&[(Scalar::one(), x.clone(), NCPoly::one()), (Scalar::one(), NCPoly::one(), x.clone())])
}

/// Group algebra `kG`, certified exhaustively.
pub fn build_group_algebra(group: &FiniteGroupData) -> Result<HopfPresentation> {
    let real = FiniteHopf::group_algebra(group).realize(&format!("kG{}", group.order()))?;
    certify(&real.presentation, &CertifyConfig::finite())?;
    Ok(real.presentation)
}

/// The ground field `k` as a Hopf algebra with no generators.
pub fn build_ground() -> Result<HopfPresentation> {
    let real = FiniteHopf::ground().realize("k")?;
    certify(&real.presentation, &CertifyConfig::finite())?;
    Ok(real.presentation)
}

/// Functions on a finite group in the delta basis, certified exhaustively.
pub fn build_function_algebra(group: &FiniteGroupData) -> Result<HopfPresentation> {
    let real = FiniteHopf::function_algebra(group).realize(&format!("FG{}", group.order()))?;
    certify(&real.presentation, &CertifyConfig::finite())?;
    Ok(real.presentation)
}

/// Generator families of the Connes–Moscovici algebra, in PBW order.
pub const H1_DELTA: u16 = 0;
pub const H1_X: u16 = 1;
pub const H1_Y: u16 = 2;

/// The Connes–Moscovici Hopf algebra in codimension one.
///
/// Normal words are `δ-monomial · X^a · Y^b` with the δ's sorted. `Δ(δ_n)`
/// and `S(δ_n)` for `n ≥ 2` come from `δ_{n+1} = [X, δ_n]`.
pub fn build_cm_h1() -> Result<HopfPresentation> {
    let h = cm_h1_uncertified();
    certify(&h, &CertifyConfig { bound: 3, random_monomials: 10, max_degree: 2, seed: 1 })?;
    Ok(h)
}

pub(crate) fn cm_h1_uncertified() -> HopfPresentation {
    let alphabet =
        Alphabet::new(vec![Family::indexed("delta"), Family::plain("X"), Family::plain("Y").with_weight(0)]);
    let one = Scalar::one;
    let dv = |v: IndexVar, off: i64| RhsSym { family: H1_DELTA, index: IndexExpr::Var(v, off) };
    let rules = vec![
        // [Y, X] = X
        Rule {
            lhs: vec![SymPattern::plain(H1_Y), SymPattern::plain(H1_X)],
            conditions: vec![],
            rhs: vec![term(one(), None, vec![sym(H1_X), sym(H1_Y)]), term(one(), None, vec![sym(H1_X)])],
        },
        // [Y, δ_n] = n δ_n
        Rule {
            lhs: vec![SymPattern::plain(H1_Y), SymPattern::var(H1_DELTA, 0)],
            conditions: vec![],
            rhs: vec![term(one(), None, vec![dv(0, 0), sym(H1_Y)]), term(one(), Some(0), vec![dv(0, 0)])],
        },
        // [X, δ_n] = δ_{n+1}
        Rule {
            lhs: vec![SymPattern::plain(H1_X), SymPattern::var(H1_DELTA, 0)],
            conditions: vec![],
            rhs: vec![term(one(), None, vec![dv(0, 0), sym(H1_X)]), term(one(), None, vec![dv(0, 1)])],
        },
        // [δ_k, δ_l] = 0
        Rule {
            lhs: vec![SymPattern::var(H1_DELTA, 0), SymPattern::var(H1_DELTA, 1)],
            conditions: vec![(1, 0)],
            rhs: vec![term(one(), None, vec![dv(1, 0), dv(0, 0)])],
        },
    ];
    let rewrite = RewriteSystem::new(alphabet, rules);
    let d1 = NCPoly::gen(GenSymbol::indexed(H1_DELTA, 1));
    let (x, y) = (g(H1_X), g(H1_Y));
    let d1y = d1.concat(&y);
    let mut t = HopfTables::default();
    let gx = GenSymbol::plain(H1_X);
    let gy = GenSymbol::plain(H1_Y);
    let gd = GenSymbol::indexed(H1_DELTA, 1);
    t.coproduct.insert(gx, &primitive(&x) + &tensor2(&[(one(), d1.clone(), y.clone())]));
    t.coproduct.insert(gy, primitive(&y));
    t.coproduct.insert(gd, primitive(&d1));
    for s in [gx, gy, gd] {
        t.counit.insert(s, Scalar::zero());
    }
    t.antipode.insert(gx, &(-&x) + &d1y);
    t.antipode.insert(gy, -&y);
    t.antipode.insert(gd, -&d1);
    let mut inv = BTreeMap::new();
    inv.insert(gx, &(&(-&x) + &d1y) + &d1);
    inv.insert(gy, -&y);
    inv.insert(gd, -&d1);
    t.antipode_inverse = Some(inv);
    let derived = vec![DerivedFamily { family: H1_DELTA, base: 1, raiser: gx }];
    HopfPresentation::new("cm_h1", rewrite, derived, t).with_notes(vec![
        "order delta_1 < delta_2 < ... < X < Y; normal words delta-monomial * X^a * Y^b".into(),
        "termination order: weight (delta_n = n, X = 1, Y = 0), then length, then lexicographic".into(),
    ])
}

pub const SLQ_X: u16 = 0;
pub const SLQ_U: u16 = 1;
pub const SLQ_V: u16 = 2;
pub const SLQ_Y: u16 = 3;

/// Functions on quantum `SL(2)` over `ℚ(q)`, variables ordered `x < u < v < y`.
///
/// The unit relations are oriented as `yx → 1 + q·uv` and `uv → q·xy − q`,
/// so `xy` is normal and `yx` rewrites.
pub fn build_slq2() -> Result<HopfPresentation> {
    let h = slq2_uncertified();
    certify(&h, &CertifyConfig { bound: 0, random_monomials: 20, max_degree: 3, seed: 2 })?;
    Ok(h)
}

pub(crate) fn slq2_uncertified() -> HopfPresentation {
    let alphabet = Alphabet::new(["x", "u", "v", "y"].iter().map(|n| Family::plain(n)).collect());
    let q = Scalar::q();
    let w = |s: &[u16]| Word::from_slice(&s.iter().map(|&f| GenSymbol::plain(f)).collect::<Vec<_>>());
    let mono = |c: Scalar, s: &[u16]| NCPoly::monomial(w(s), c);
    let rules = vec![
        Rule::fixed(&w(&[SLQ_U, SLQ_X]), &mono(q.clone(), &[SLQ_X, SLQ_U])),
        Rule::fixed(&w(&[SLQ_V, SLQ_X]), &mono(q.clone(), &[SLQ_X, SLQ_V])),
        Rule::fixed(&w(&[SLQ_Y, SLQ_U]), &mono(q.clone(), &[SLQ_U, SLQ_Y])),
        Rule::fixed(&w(&[SLQ_Y, SLQ_V]), &mono(q.clone(), &[SLQ_V, SLQ_Y])),
        Rule::fixed(&w(&[SLQ_V, SLQ_U]), &mono(Scalar::one(), &[SLQ_U, SLQ_V])),
        Rule::fixed(&w(&[SLQ_Y, SLQ_X]), &(&NCPoly::one() + &mono(q.clone(), &[SLQ_U, SLQ_V]))),
        Rule::fixed(&w(&[SLQ_U, SLQ_V]), &(&mono(q.clone(), &[SLQ_X, SLQ_Y]) - &NCPoly::constant(q.clone()))),
    ];
    let rewrite = RewriteSystem::new(alphabet, rules);
    let (x, u, v, y) = (g(SLQ_X), g(SLQ_U), g(SLQ_V), g(SLQ_Y));
    let one = Scalar::one;
    let mut t = HopfTables::default();
    let gs = |f| GenSymbol::plain(f);
    t.coproduct.insert(gs(SLQ_X), tensor2(&[(one(), x.clone(), x.clone()), (one(), u.clone(), v.clone())]));
    t.coproduct.insert(gs(SLQ_U), tensor2(&[(one(), x.clone(), u.clone()), (one(), u.clone(), y.clone())]));
    t.coproduct.insert(gs(SLQ_V), tensor2(&[(one(), v.clone(), x.clone()), (one(), y.clone(), v.clone())]));
    t.coproduct.insert(gs(SLQ_Y), tensor2(&[(one(), v.clone(), u.clone()), (one(), y.clone(), y.clone())]));
    t.counit.insert(gs(SLQ_X), one());
    t.counit.insert(gs(SLQ_Y), one());
    t.counit.insert(gs(SLQ_U), Scalar::zero());
    t.counit.insert(gs(SLQ_V), Scalar::zero());
    t.antipode.insert(gs(SLQ_X), y.clone());
    t.antipode.insert(gs(SLQ_Y), x.clone());
    t.antipode.insert(gs(SLQ_U), u.scale(&(-&q)));
    t.antipode.insert(gs(SLQ_V), v.scale(&(-&q.inv())));
    let mut inv = BTreeMap::new();
    inv.insert(gs(SLQ_X), y.clone());
    inv.insert(gs(SLQ_Y), x.clone());
    inv.insert(gs(SLQ_U), u.scale(&(-&q.inv())));
    inv.insert(gs(SLQ_V), v.scale(&(-&q)));
    t.antipode_inverse = Some(inv);
    HopfPresentation::new("slq2", rewrite, Vec::new(), t).with_notes(vec![
        "order x < u < v < y, degree-lexicographic".into(),
        "orientation: yx -> 1 + q*u*v and u*v -> q*x*y - q; x*y is normal".into(),
    ])
}

/// A finite-dimensional Lie algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieData {
    pub labels: Vec<String>,
    /// `[x_i, x_j]` for `i < j` as `(k, c)` pairs; omitted pairs commute.
    pub brackets: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
}

impl LieData {
    pub fn new(labels: Vec<String>, brackets: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>) -> Result<Self> {
        let n = labels.len();
        for (&(i, j), v) in &brackets {
            if i >= j || j >= n || v.iter().any(|(k, _)| *k >= n) {
                return Err(Error::Invalid(format!("bracket entry ({i}, {j}) must satisfy i < j < {n}")));
            }
        }
        let l = LieData { labels, brackets };
        l.check_jacobi()?;
        Ok(l)
    }

    /// `[x_i, x_j]` as a coefficient vector.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.labels.len()];
        let (a, b, sign) = if i < j { (i, j, Scalar::one()) } else { (j, i, Scalar::int(-1)) };
        if a == b {
            return out;
        }
        if let Some(v) = self.brackets.get(&(a, b)) {
            for (k, c) in v {
                out[*k] = &out[*k] + &(c * &sign);
            }
        }
        out
    }

    fn bracket_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.labels.len();
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if a[i].is_zero() || b[j].is_zero() {
                    continue;
                }
                let c = &a[i] * &b[j];
                for (k, v) in self.bracket(i, j).into_iter().enumerate() {
                    out[k] = &out[k] + &(&v * &c);
                }
            }
        }
        out
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.labels.len();
        let e = |i: usize| (0..n).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect::<Vec<_>>();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.bracket_vec(&e(i), &self.bracket(j, k));
                    let b = self.bracket_vec(&e(j), &self.bracket(k, i));
                    let c = self.bracket_vec(&e(k), &self.bracket(i, j));
                    if (0..n).any(|t| !(&(&a[t] + &b[t]) + &c[t]).is_zero()) {
                        return Err(Error::JacobiFailure(format!(
                            "{}, {}, {}",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Affine Lie algebra with basis `Y, X` and `[Y, X] = X`.
    pub fn affine() -> Self {
        LieData::new(vec!["Y".into(), "X".into()], BTreeMap::from([((0, 1), vec![(1, Scalar::one())])])).expect("affine")
    }

    /// `sl2` with basis `e, f, h`.
    pub fn sl2() -> Self {
        LieData::new(
            vec!["e".into(), "f".into(), "h".into()],
            BTreeMap::from([
                ((0, 1), vec![(2, Scalar::one())]),
                ((0, 2), vec![(0, Scalar::int(-2))]),
                ((1, 2), vec![(1, Scalar::int(2))]),
            ]),
        )
        .expect("sl2")
    }

    pub fn abelian(n: usize) -> Self {
        LieData::new((0..n).map(|i| format!("t{i}")).collect(), BTreeMap::new()).expect("abelian")
    }
}

/// Universal enveloping algebra with the PBW rules `x_j x_i → x_i x_j + [x_j, x_i]`
/// for `j > i`, primitive generators and `S(x) = −x`.
pub fn build_enveloping(l: &LieData) -> Result<HopfPresentation> {
    l.check_jacobi()?;
    let n = l.labels.len();
    let alphabet = Alphabet::new(l.labels.iter().map(|s| Family::plain(s)).collect());
    let mut rules = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = Word::from_slice(&[GenSymbol::plain(j as u16), GenSymbol::plain(i as u16)]);
            let mut rhs = NCPoly::word(Word::from_slice(&[GenSymbol::plain(i as u16), GenSymbol::plain(j as u16)]));
            for (k, c) in l.bracket(j, i).into_iter().enumerate() {
                rhs.add_term(Word::single(GenSymbol::plain(k as u16)), c);
            }
            rules.push(Rule::fixed(&lhs, &rhs));
        }
    }
    let rewrite = RewriteSystem::new(alphabet, rules);
    let mut t = HopfTables::default();
    let mut inv = BTreeMap::new();
    for i in 0..n {
        let s = GenSymbol::plain(i as u16);
        let x = NCPoly::gen(s);
        t.coproduct.insert(s, primitive(&x));
        t.counit.insert(s, Scalar::zero());
        t.antipode.insert(s, -&x);
        inv.insert(s, -&x);
    }
    t.antipode_inverse = Some(inv);
    let h = HopfPresentation::new("enveloping", rewrite, Vec::new(), t);
    certify(&h, &CertifyConfig { bound: 0, random_monomials: 20, max_degree: 3, seed: 3 })?;
    Ok(h)
}
