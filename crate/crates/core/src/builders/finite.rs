//! Finite-dimensional Hopf algebras from structure constants, and their
//! conversion to presentations.

use std::collections::BTreeMap;

use crate::builders::group::FiniteGroupData;
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::{HopfPresentation, HopfTables};
use crate::ncalg::{Alphabet, Family, FamilyId, GenSymbol, NCPoly, RewriteSystem, Rule, TensorElem, Word};
use crate::scalar::Scalar;

/// Sparse coordinates in a fixed basis.
pub type Coords = BTreeMap<usize, Scalar>;

pub fn basis_vec(i: usize) -> Coords {
    let mut c = Coords::new();
    c.insert(i, Scalar::one());
    c
}

pub fn add_into(acc: &mut Coords, v: &Coords, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(Scalar::zero);
        *e = &*e + &(x * c);
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

/// Structure constants of a finite-dimensional Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHopf {
    pub labels: Vec<String>,
    pub unit: Coords,
    /// `mult[i][j]` is the product of basis elements `i` and `j`.
    pub mult: Vec<Vec<Coords>>,
    pub coproduct: Vec<BTreeMap<(usize, usize), Scalar>>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Coords>,
}

impl FiniteHopf {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn group_algebra(g: &FiniteGroupData) -> Self {
        let n = g.order();
        FiniteHopf {
            labels: g.labels().to_vec(),
            unit: basis_vec(g.identity()),
            mult: (0..n).map(|a| (0..n).map(|b| basis_vec(g.mul(a, b))).collect()).collect(),
            coproduct: (0..n).map(|a| BTreeMap::from([((a, a), Scalar::one())])).collect(),
            counit: vec![Scalar::one(); n],
            antipode: (0..n).map(|a| basis_vec(g.inv(a))).collect(),
        }
    }

    /// Functions on a finite group in the delta basis.
    pub fn function_algebra(g: &FiniteGroupData) -> Self {
        let n = g.order();
        let mut coproduct = vec![BTreeMap::new(); n];
        for b in 0..n {
            for c in 0..n {
                coproduct[g.mul(b, c)].insert((b, c), Scalar::one());
            }
        }
        FiniteHopf {
            labels: g.labels().iter().map(|l| format!("d{l}")).collect(),
            unit: (0..n).map(|a| (a, Scalar::one())).collect(),
            mult: (0..n).map(|a| (0..n).map(|b| if a == b { basis_vec(a) } else { Coords::new() }).collect()).collect(),
            coproduct,
            counit: (0..n).map(|a| if a == g.identity() { Scalar::one() } else { Scalar::zero() }).collect(),
            antipode: (0..n).map(|a| basis_vec(g.inv(a))).collect(),
        }
    }

    /// The ground field as a one-dimensional Hopf algebra.
    pub fn ground() -> Self {
        FiniteHopf {
            labels: vec!["1".into()],
            unit: basis_vec(0),
            mult: vec![vec![basis_vec(0)]],
            coproduct: vec![BTreeMap::from([((0, 0), Scalar::one())])],
            counit: vec![Scalar::one()],
            antipode: vec![basis_vec(0)],
        }
    }

    /// `A ⊗ B` on the basis `a_i ⊗ b_j`, indexed `i·dim B + j`.
    pub fn tensor(a: &FiniteHopf, b: &FiniteHopf) -> Self {
        let nb = b.dim();
        let idx = |i: usize, j: usize| i * nb + j;
        let outer = |x: &Coords, y: &Coords| -> Coords {
            let mut out = Coords::new();
            for (i, c) in x {
                for (j, d) in y {
                    add_into(&mut out, &basis_vec(idx(*i, *j)), &(c * d));
                }
            }
            out
        };
        let pairs: Vec<(usize, usize)> = (0..a.dim()).flat_map(|i| (0..nb).map(move |j| (i, j))).collect();
        let mut coproduct = Vec::new();
        for &(i, j) in &pairs {
            let mut t = BTreeMap::new();
            for ((i1, i2), c) in &a.coproduct[i] {
                for ((j1, j2), d) in &b.coproduct[j] {
                    let e = t.entry((idx(*i1, *j1), idx(*i2, *j2))).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * d);
                }
            }
            t.retain(|_, c: &mut Scalar| !c.is_zero());
            coproduct.push(t);
        }
        FiniteHopf {
            labels: pairs.iter().map(|&(i, j)| format!("{}{}", a.labels[i], b.labels[j])).collect(),
            unit: outer(&a.unit, &b.unit),
            mult: pairs
                .iter()
                .map(|&(i, j)| pairs.iter().map(|&(k, l)| outer(&a.mult[i][k], &b.mult[j][l])).collect())
                .collect(),
            coproduct,
            counit: pairs.iter().map(|&(i, j)| &a.counit[i] * &b.counit[j]).collect(),
            antipode: pairs.iter().map(|&(i, j)| outer(&a.antipode[i], &b.antipode[j])).collect(),
        }
    }

    pub fn mul(&self, a: &Coords, b: &Coords) -> Coords {
        let mut out = Coords::new();
        for (i, x) in a {
            for (j, y) in b {
                add_into(&mut out, &self.mult[*i][*j], &(x * y));
            }
        }
        out
    }

    pub fn apply_antipode(&self, a: &Coords) -> Coords {
        let mut out = Coords::new();
        for (i, x) in a {
            add_into(&mut out, &self.antipode[*i], x);
        }
        out
    }

    pub fn counit_of(&self, a: &Coords) -> Scalar {
        a.iter().fold(Scalar::zero(), |acc, (i, x)| &acc + &(x * &self.counit[*i]))
    }

    /// Coproduct of a vector as `(i, j) -> coefficient`.
    pub fn coproduct_of(&self, a: &Coords) -> BTreeMap<(usize, usize), Scalar> {
        let mut out: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (i, x) in a {
            for (k, c) in &self.coproduct[*i] {
                let e = out.entry(*k).or_insert_with(Scalar::zero);
                *e = &*e + &(x * c);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn antipode_matrix(&self) -> ExactMatrix {
        let cols: Vec<Vec<(usize, Scalar)>> =
            self.antipode.iter().map(|c| c.iter().map(|(i, x)| (*i, x.clone())).collect()).collect();
        ExactMatrix::from_sparse_cols(self.dim(), &cols)
    }

    /// Inverse of the antipode by matrix inversion.
    pub fn antipode_inverse(&self) -> Result<Vec<Coords>> {
        let inv = self.antipode_matrix().inverse()?;
        Ok((0..self.dim())
            .map(|j| (0..self.dim()).filter_map(|i| { let v = inv.get(i, j); (!v.is_zero()).then_some((i, v)) }).collect())
            .collect())
    }

    /// The presentation whose generators are the basis elements other than a
    /// pivot, where the pivot is traded for the unit.
    pub fn realize(&self, name: &str) -> Result<FiniteRealization> {
        let n = self.dim();
        let pivot = *self
            .unit
            .iter()
            .find(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Invalid("unit is zero".into()))?;
        let u_p = self.unit[&pivot].clone();
        let gens: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
        let names = sanitize_labels(&gens.iter().map(|&i| self.labels[i].clone()).collect::<Vec<_>>());
        let alphabet = Alphabet::new(names.iter().map(|l| Family::plain(l)).collect());
        let family_of: BTreeMap<usize, FamilyId> = gens.iter().enumerate().map(|(f, &i)| (i, f as FamilyId)).collect();

        // old coordinates -> polynomial in the new basis
        let to_poly = |v: &Coords| -> NCPoly {
            let vp = v.get(&pivot).cloned().unwrap_or_else(Scalar::zero);
            let ratio = &vp / &u_p;
            let mut p = NCPoly::constant(ratio.clone());
            for &i in &gens {
                let vi = v.get(&i).cloned().unwrap_or_else(Scalar::zero);
                let ui = self.unit.get(&i).cloned().unwrap_or_else(Scalar::zero);
                let c = &vi - &(&ratio * &ui);
                p.add_term(Word::single(GenSymbol::plain(family_of[&i])), c);
            }
            p
        };
        let embed: Vec<NCPoly> = (0..n).map(|i| to_poly(&basis_vec(i))).collect();

        let mut rules = Vec::new();
        for &i in &gens {
            for &j in &gens {
                let lhs = Word::from_slice(&[GenSymbol::plain(family_of[&i]), GenSymbol::plain(family_of[&j])]);
                rules.push(Rule::fixed(&lhs, &to_poly(&self.mult[i][j])));
            }
        }
        let rewrite = RewriteSystem::new(alphabet, rules);

        let to_tensor = |t: &BTreeMap<(usize, usize), Scalar>| -> TensorElem {
            let mut out = TensorElem::zero(2);
            for ((a, b), c) in t {
                out.add_scaled(&TensorElem::from_polys(&[embed[*a].clone(), embed[*b].clone()]), c);
            }
            out
        };
        let inverse = self.antipode_inverse()?;
        let mut tables = HopfTables::default();
        let mut sinv = BTreeMap::new();
        for &i in &gens {
            let g = GenSymbol::plain(family_of[&i]);
            tables.coproduct.insert(g, to_tensor(&self.coproduct[i]));
            tables.counit.insert(g, self.counit[i].clone());
            tables.antipode.insert(g, to_poly(&self.antipode[i]));
            sinv.insert(g, to_poly(&inverse[i]));
        }
        tables.antipode_inverse = Some(sinv);
        let presentation = HopfPresentation::new(name, rewrite, Vec::new(), tables);
        Ok(FiniteRealization { presentation, embed, pivot, unit: self.unit.clone(), gens })
    }
}

/// Identifier-safe, unique labels for the expression grammar.
pub fn sanitize_labels(labels: &[String]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for l in labels {
        let mut s: String = l.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        if s.is_empty() || !s.chars().next().unwrap().is_ascii_alphabetic() {
            s = format!("b{s}");
        }
        if s == "q" || s == "ox" {
            s = format!("{s}0");
        }
        let base = s.clone();
        let mut k = 1;
        while out.contains(&s) {
            s = format!("{base}x{k}");
            k += 1;
        }
        out.push(s);
    }
    out
}

/// A presentation of a [`FiniteHopf`] together with the basis change.
#[derive(Clone, Debug)]
pub struct FiniteRealization {
    pub presentation: HopfPresentation,
    /// Basis element `i` of the structure data as a normal polynomial.
    pub embed: Vec<NCPoly>,
    pivot: usize,
    unit: Coords,
    /// Structure-data index of each generator family.
    gens: Vec<usize>,
}

impl FiniteRealization {
    /// Coordinates of a normal polynomial in the structure-data basis.
    pub fn coords(&self, p: &NCPoly) -> Result<Coords> {
        let mut out = Coords::new();
        for (w, c) in p.terms() {
            match w.symbols() {
                [] => add_into(&mut out, &self.unit, c),
                [g] => add_into(&mut out, &basis_vec(self.gens[g.family as usize]), c),
                _ => return Err(Error::Invalid(format!("word {} is not in the finite basis", self.presentation.show_word(w)))),
            }
        }
        Ok(out)
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// The generator standing for structure-data basis element `i`, if it is not the pivot.
    pub fn generator(&self, i: usize) -> Option<GenSymbol> {
        self.gens.iter().position(|&g| g == i).map(|f| GenSymbol::plain(f as FamilyId))
    }
}
