//! Validation: a JobSpec becomes a [`Job`] with every expression parsed and
//! every name resolved. Engine objects are built later, inside the tasks.

use std::collections::BTreeMap;

use hopfcyc::builders::{basis_vec, FactorizationData, FiniteCoalgebra, ModuleAlgebraData};
use hopfcyc::coeffs::{FinCoefModule, FiniteAlgebra, Side};
use hopfcyc::cohom::ExactMatrix;
use hopfcyc::ncalg::Family;
use hopfcyc::{Alphabet, Character, GenSymbol, HopfPresentation, ModularPair, NCPoly, RewriteSystem, Scalar, TensorElem};
use sha2::{Digest, Sha256};

use crate::builtins;
use crate::expr::{parse_poly, parse_scalar, parse_tensor, FieldMode};
use crate::inline::{build_inline, orient, uses_q};
use crate::spec::{
    AlgebraSpec, CoactionChoice, CoalgebraSpec, FieldChoice, InstanceSpec, JobSpec, ModuleAlgebraSpec, ModuleSpec, ProbeSpec,
    SideSpec, TaskSpec,
};
use crate::InputError;

pub enum ModuleDef {
    Table(FinCoefModule),
    Pair(String),
    Sayd(String),
    LeftRegular,
    Adjoint,
    Coproduct,
}

pub enum AlgebraDef {
    Table(FiniteAlgebra),
    Regular,
}

pub enum CoalgebraDef {
    Table(FiniteCoalgebra),
    Regular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Cm { pair: String },
    TypeA { algebra: String, action: String, coefficients: String },
    TypeB { algebra: String, coaction: String, coefficients: String },
    TypeC { coalgebra: String, action: String, coefficients: String },
    Twisted { algebra: String, action: String, sigma: NCPoly },
    Plain { algebra: String },
}

pub enum Task {
    CheckHopf { probes: Option<ProbeSpec>, exhaustive: Option<bool> },
    CheckMpi { pair: String, max_index: Option<u32> },
    CheckSayd { module: String, bound: Option<u32>, skip_stability: bool },
    VerifyCocyclic { instance: Instance, levels: usize, samples: Option<usize> },
    CertifyCocycle { pair: String, level: usize, candidate: TensorElem },
    Cohomology { instance: Instance, max_degree: usize },
    CharMap { algebra: String, action: String, trace: Vec<Scalar>, pair: String, levels: usize },
    BuildBicrossed { factorization: FactorizationData },
    CrossedProduct { algebra: Option<ModuleAlgebraData>, coaction: Option<CoactionChoice> },
}

pub struct TaskEntry {
    pub kind: &'static str,
    pub label: Option<String>,
    pub task: Task,
}

pub struct Job {
    pub field: FieldMode,
    pub h: HopfPresentation,
    pub pairs: BTreeMap<String, ModularPair>,
    pub modules: BTreeMap<String, ModuleDef>,
    pub algebras: BTreeMap<String, AlgebraDef>,
    pub coalgebras: BTreeMap<String, CoalgebraDef>,
    pub tasks: Vec<TaskEntry>,
    /// SHA-256 of the input bytes, hex.
    pub digest: String,
}

impl Job {
    /// Parses, validates and fingerprints a JobSpec document.
    pub fn load(text: &str) -> Result<Job, InputError> {
        let spec = crate::parse_jobspec(text)?;
        let mut job = validate(&spec)?;
        job.digest = hex::encode(Sha256::digest(text.as_bytes()));
        Ok(job)
    }
}

fn side(s: SideSpec) -> Side {
    match s {
        SideSpec::Left => Side::Left,
        SideSpec::Right => Side::Right,
    }
}

/// A single generator named by `src`, written as in expressions.
fn generator(h_alpha: &Alphabet, src: &str, path: &str, field: FieldMode) -> Result<GenSymbol, InputError> {
    let p = parse_poly(src, h_alpha, field).map_err(|e| InputError::expr(path, e))?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if w.len() == 1 && c.is_one() => Ok(w.symbols()[0]),
        _ => Err(InputError::schema(path, format!("`{src}` is not a generator"))),
    }
}

fn labels_alphabet(labels: &[String], path: &str) -> Result<Alphabet, InputError> {
    let mut fams: Vec<Family> = Vec::new();
    for l in labels {
        let ok = l.chars().next().is_some_and(char::is_alphabetic) && l.chars().all(char::is_alphanumeric) && l != "q" && l != "ox";
        if !ok || fams.iter().any(|f| &f.name == l) {
            return Err(InputError::schema(path, format!("`{l}` is not a valid, unique basis label")));
        }
        fams.push(Family::plain(l));
    }
    Ok(Alphabet::new(fams))
}

/// A linear combination of basis labels as sparse coordinates.
fn linear(p: &NCPoly, path: &str) -> Result<BTreeMap<usize, Scalar>, InputError> {
    let mut out = BTreeMap::new();
    for (w, c) in p.terms() {
        if w.len() != 1 {
            return Err(InputError::schema(path, "expected a linear combination of basis labels"));
        }
        out.insert(w.symbols()[0].family as usize, c.clone());
    }
    Ok(out)
}

fn matrix(rows: &[Vec<String>], dim: usize, path: &str, field: FieldMode) -> Result<ExactMatrix, InputError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(InputError::schema(path, format!("expected a {dim}x{dim} matrix")));
    }
    let mut out = Vec::with_capacity(dim);
    for (i, r) in rows.iter().enumerate() {
        let row = r
            .iter()
            .enumerate()
            .map(|(j, s)| parse_scalar(s, field).map_err(|e| InputError::expr(format!("{path}[{i}][{j}]"), e)))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(row);
    }
    Ok(ExactMatrix::from_rows(out))
}

fn normalize(h: &HopfPresentation, p: &NCPoly, path: &str) -> Result<NCPoly, InputError> {
    h.normalize(p).map_err(|e| InputError::schema(path, e.to_string()))
}

fn module(h: &HopfPresentation, spec: &ModuleSpec, path: &str, field: FieldMode) -> Result<ModuleDef, InputError> {
    Ok(match spec {
        ModuleSpec::Table { dim, action_side, coaction_side, action, coaction } => {
            let mut acts = BTreeMap::new();
            for (g, m) in action {
                let p = format!("{path}.action.{g}");
                acts.insert(generator(h.alphabet(), g, &p, field)?, matrix(m, *dim, &p, field)?);
            }
            let table = match coaction {
                None => (0..*dim).map(|i| (0..*dim).map(|j| if i == j { NCPoly::one() } else { NCPoly::zero() }).collect()).collect(),
                Some(rows) => {
                    if rows.len() != *dim || rows.iter().any(|r| r.len() != *dim) {
                        return Err(InputError::schema(format!("{path}.coaction"), format!("expected a {dim}x{dim} table")));
                    }
                    let mut out = Vec::new();
                    for (i, r) in rows.iter().enumerate() {
                        let mut row = Vec::new();
                        for (j, s) in r.iter().enumerate() {
                            let p = format!("{path}.coaction[{i}][{j}]");
                            let poly = parse_poly(s, h.alphabet(), field).map_err(|e| InputError::expr(&p, e))?;
                            row.push(normalize(h, &poly, &p)?);
                        }
                        out.push(row);
                    }
                    out
                }
            };
            let m = FinCoefModule::new(*dim, side(*action_side), side(*coaction_side), acts, table)
                .map_err(|e| InputError::schema(path, e.to_string()))?;
            ModuleDef::Table(m)
        }
        ModuleSpec::Pair { pair } => ModuleDef::Pair(pair.clone()),
        ModuleSpec::Sayd { pair } => ModuleDef::Sayd(pair.clone()),
        ModuleSpec::LeftRegular => ModuleDef::LeftRegular,
        ModuleSpec::Adjoint => ModuleDef::Adjoint,
        ModuleSpec::Coproduct => ModuleDef::Coproduct,
    })
}

fn algebra(spec: &AlgebraSpec, path: &str, field: FieldMode) -> Result<AlgebraDef, InputError> {
    let AlgebraSpec::Table { basis, unit, mult } = spec else {
        return Ok(AlgebraDef::Regular);
    };
    let alpha = labels_alphabet(basis, &format!("{path}.basis"))?;
    let n = basis.len();
    let unit_idx = basis
        .iter()
        .position(|b| b == unit)
        .ok_or_else(|| InputError::schema(format!("{path}.unit"), format!("`{unit}` is not a basis label")))?;
    if mult.len() != n || mult.iter().any(|r| r.len() != n) {
        return Err(InputError::schema(format!("{path}.mult"), format!("expected a {n}x{n} table")));
    }
    let mut table = Vec::new();
    for (i, r) in mult.iter().enumerate() {
        let mut row = Vec::new();
        for (j, s) in r.iter().enumerate() {
            let p = format!("{path}.mult[{i}][{j}]");
            let poly = parse_poly(s, &alpha, field).map_err(|e| InputError::expr(&p, e))?;
            row.push(linear(&poly, &p)?);
        }
        table.push(row);
    }
    Ok(AlgebraDef::Table(FiniteAlgebra { labels: basis.clone(), unit: basis_vec(unit_idx), mult: table }))
}

fn coalgebra(spec: &CoalgebraSpec, path: &str, field: FieldMode) -> Result<CoalgebraDef, InputError> {
    let CoalgebraSpec::Table { basis, counit, coproduct } = spec else {
        return Ok(CoalgebraDef::Regular);
    };
    let alpha = labels_alphabet(basis, &format!("{path}.basis"))?;
    let n = basis.len();
    if counit.len() != n || coproduct.len() != n {
        return Err(InputError::schema(path, format!("counit and coproduct need {n} entries")));
    }
    let counit = counit
        .iter()
        .enumerate()
        .map(|(i, s)| parse_scalar(s, field).map_err(|e| InputError::expr(format!("{path}.counit[{i}]"), e)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut pairs = Vec::new();
    for (i, s) in coproduct.iter().enumerate() {
        let p = format!("{path}.coproduct[{i}]");
        let t = parse_tensor(s, &alpha, field).map_err(|e| InputError::expr(&p, e))?;
        if t.degree() != 2 {
            return Err(InputError::schema(&p, "expected a tensor with two factors"));
        }
        let mut pair = BTreeMap::new();
        for (legs, c) in t.terms() {
            if legs.iter().any(|w| w.len() != 1) {
                return Err(InputError::schema(&p, "each factor must be a single basis label"));
            }
            pair.insert((legs[0].symbols()[0].family as usize, legs[1].symbols()[0].family as usize), c.clone());
        }
        pairs.push(pair);
    }
    Ok(CoalgebraDef::Table(FiniteCoalgebra { labels: basis.clone(), coproduct: pairs, counit }))
}

fn module_algebra(h: &HopfPresentation, spec: &ModuleAlgebraSpec, path: &str, field: FieldMode) -> Result<ModuleAlgebraData, InputError> {
    let alpha = labels_alphabet(&spec.generators, &format!("{path}.generators"))?;
    let mut rules = Vec::new();
    for (i, r) in spec.relations.iter().enumerate() {
        let p = format!("{path}.relations[{i}]");
        let poly = parse_poly(r, &alpha, field).map_err(|e| InputError::expr(&p, e))?;
        rules.push(orient(&alpha, &poly).ok_or_else(|| InputError::schema(&p, "relation has no non-constant word"))?);
    }
    let rewrite = RewriteSystem::new(alpha.clone(), rules);
    let mut action = BTreeMap::new();
    for (hg, row) in &spec.action {
        let g = generator(h.alphabet(), hg, &format!("{path}.action.{hg}"), field)?;
        for (ag, v) in row {
            let p = format!("{path}.action.{hg}.{ag}");
            let a = alpha.symbol(ag, None).map_err(|_| InputError::schema(&p, format!("unknown generator `{ag}` of the algebra")))?;
            let poly = parse_poly(v, &alpha, field).map_err(|e| InputError::expr(&p, e))?;
            action.insert((g, a), rewrite.normalize(&poly).map_err(|e| InputError::schema(&p, e.to_string()))?);
        }
    }
    Ok(ModuleAlgebraData { algebra: rewrite, action })
}

struct Names<'a> {
    pairs: &'a BTreeMap<String, ModularPair>,
    modules: &'a BTreeMap<String, ModuleDef>,
    algebras: &'a BTreeMap<String, AlgebraDef>,
    coalgebras: &'a BTreeMap<String, CoalgebraDef>,
}

impl Names<'_> {
    fn check(&self, kind: &str, name: &str, path: &str) -> Result<String, InputError> {
        let known = match kind {
            "pair" => self.pairs.contains_key(name),
            "module" => self.modules.contains_key(name),
            "algebra" => self.algebras.contains_key(name),
            _ => self.coalgebras.contains_key(name),
        };
        if known {
            Ok(name.to_string())
        } else {
            Err(InputError::schema(path, format!("no {kind} named `{name}`")))
        }
    }

    fn instance(&self, h: &HopfPresentation, spec: &InstanceSpec, path: &str, field: FieldMode) -> Result<Instance, InputError> {
        let p = |f: &str| format!("{path}.{f}");
        Ok(match spec {
            InstanceSpec::Cm { pair } => Instance::Cm { pair: self.check("pair", pair, &p("pair"))? },
            InstanceSpec::TypeA { algebra, action, coefficients } => Instance::TypeA {
                algebra: self.check("algebra", algebra, &p("algebra"))?,
                action: self.check("module", action, &p("action"))?,
                coefficients: self.check("module", coefficients, &p("coefficients"))?,
            },
            InstanceSpec::TypeB { algebra, coaction, coefficients } => Instance::TypeB {
                algebra: self.check("algebra", algebra, &p("algebra"))?,
                coaction: self.check("module", coaction, &p("coaction"))?,
                coefficients: self.check("module", coefficients, &p("coefficients"))?,
            },
            InstanceSpec::TypeC { coalgebra, action, coefficients } => Instance::TypeC {
                coalgebra: self.check("coalgebra", coalgebra, &p("coalgebra"))?,
                action: self.check("module", action, &p("action"))?,
                coefficients: self.check("module", coefficients, &p("coefficients"))?,
            },
            InstanceSpec::Twisted { algebra, action, sigma } => {
                let s = parse_poly(sigma, h.alphabet(), field).map_err(|e| InputError::expr(p("sigma"), e))?;
                Instance::Twisted {
                    algebra: self.check("algebra", algebra, &p("algebra"))?,
                    action: self.check("module", action, &p("action"))?,
                    sigma: normalize(h, &s, &p("sigma"))?,
                }
            }
            InstanceSpec::Plain { algebra } => Instance::Plain { algebra: self.check("algebra", algebra, &p("algebra"))? },
        })
    }
}

pub fn validate(spec: &JobSpec) -> Result<Job, InputError> {
    let field = match spec.field {
        FieldChoice::Rational => FieldMode::Rational,
        FieldChoice::RationalFunction => FieldMode::RationalFunction,
    };
    let ps = &spec.presentation;
    let h = match (&ps.builtin, &ps.inline) {
        (Some(name), None) => builtins::load(name, ps.params.as_ref())?,
        (None, Some(inline)) => {
            if ps.params.is_some() {
                return Err(InputError::schema("presentation.params", "params only apply to builtins"));
            }
            build_inline(inline, field)?
        }
        _ => return Err(InputError::schema("presentation", "give exactly one of `builtin` and `inline`")),
    };
    if field == FieldMode::Rational && uses_q(&h) {
        return Err(InputError::schema("field", format!("{} has coefficients in Q(q); set \"field\": \"rational-function\"", h.name())));
    }

    let mut characters = BTreeMap::new();
    for (name, table) in &spec.characters {
        let mut values = h.tables().counit.clone();
        for (g, v) in table {
            let p = format!("characters.{name}.{g}");
            let sym = generator(h.alphabet(), g, &p, field)?;
            values.insert(sym, parse_scalar(v, field).map_err(|e| InputError::expr(&p, e))?);
        }
        characters.insert(name.clone(), Character::new(values));
    }
    let mut pairs = BTreeMap::new();
    for (name, p) in &spec.pairs {
        let path = format!("pairs.{name}");
        let delta = match p.delta.as_str() {
            "counit" => Character::counit(&h),
            c => characters
                .get(c)
                .cloned()
                .ok_or_else(|| InputError::schema(format!("{path}.delta"), format!("no character named `{c}`")))?,
        };
        let s = parse_poly(&p.sigma, h.alphabet(), field).map_err(|e| InputError::expr(format!("{path}.sigma"), e))?;
        pairs.insert(name.clone(), ModularPair::new(delta, normalize(&h, &s, &format!("{path}.sigma"))?));
    }
    let mut modules = BTreeMap::new();
    for (name, m) in &spec.modules {
        modules.insert(name.clone(), module(&h, m, &format!("modules.{name}"), field)?);
    }
    let mut algebras = BTreeMap::new();
    for (name, a) in &spec.algebras {
        algebras.insert(name.clone(), algebra(a, &format!("algebras.{name}"), field)?);
    }
    let mut coalgebras = BTreeMap::new();
    for (name, c) in &spec.coalgebras {
        coalgebras.insert(name.clone(), coalgebra(c, &format!("coalgebras.{name}"), field)?);
    }
    let names = Names { pairs: &pairs, modules: &modules, algebras: &algebras, coalgebras: &coalgebras };
    for (name, m) in &modules {
        if let ModuleDef::Pair(p) | ModuleDef::Sayd(p) = m {
            names.check("pair", p, &format!("modules.{name}.pair"))?;
        }
    }

    let mut tasks = Vec::new();
    for (i, t) in spec.tasks.iter().enumerate() {
        let path = format!("tasks[{i}]");
        let p = |f: &str| format!("{path}.{f}");
        let task = match t {
            TaskSpec::CheckHopf { probes, exhaustive, .. } => Task::CheckHopf { probes: probes.clone(), exhaustive: *exhaustive },
            TaskSpec::CheckMpi { pair, max_index, .. } => {
                Task::CheckMpi { pair: names.check("pair", pair, &p("pair"))?, max_index: *max_index }
            }
            TaskSpec::CheckSayd { module, bound, skip_stability, .. } => Task::CheckSayd {
                module: names.check("module", module, &p("module"))?,
                bound: *bound,
                skip_stability: *skip_stability,
            },
            TaskSpec::VerifyCocyclic { instance, levels, samples, .. } => Task::VerifyCocyclic {
                instance: names.instance(&h, instance, &p("instance"), field)?,
                levels: *levels,
                samples: *samples,
            },
            TaskSpec::CertifyCocycle { pair, level, candidate, .. } => {
                let t = parse_tensor(candidate, h.alphabet(), field).map_err(|e| InputError::expr(p("candidate"), e))?;
                let t = match (t.to_poly(), *level) {
                    (Some(c), 0) => match c.as_constant() {
                        Some(s) => TensorElem::scalar(s),
                        None => return Err(InputError::schema(p("candidate"), "a level-0 candidate is a scalar")),
                    },
                    _ if t.degree() == *level => t,
                    _ => {
                        return Err(InputError::schema(
                            p("candidate"),
                            format!("candidate has {} tensor factors but level is {level}", t.degree()),
                        ))
                    }
                };
                let t = h.normalize_tensor(&t).map_err(|e| InputError::schema(p("candidate"), e.to_string()))?;
                Task::CertifyCocycle { pair: names.check("pair", pair, &p("pair"))?, level: *level, candidate: t }
            }
            TaskSpec::Cohomology { instance, max_degree, .. } => {
                Task::Cohomology { instance: names.instance(&h, instance, &p("instance"), field)?, max_degree: *max_degree }
            }
            TaskSpec::CharMap { algebra, action, trace, pair, levels, .. } => Task::CharMap {
                algebra: names.check("algebra", algebra, &p("algebra"))?,
                action: names.check("module", action, &p("action"))?,
                trace: trace
                    .iter()
                    .enumerate()
                    .map(|(k, s)| parse_scalar(s, field).map_err(|e| InputError::expr(format!("{path}.trace[{k}]"), e)))
                    .collect::<Result<_, _>>()?,
                pair: names.check("pair", pair, &p("pair"))?,
                levels: *levels,
            },
            TaskSpec::BuildBicrossed { factorization, .. } => {
                Task::BuildBicrossed { factorization: builtins::factorization(factorization, &p("factorization"))? }
            }
            TaskSpec::CrossedProduct { algebra, coaction, .. } => {
                if algebra.is_none() && coaction.is_none() {
                    return Err(InputError::schema(&path, "give `algebra`, `coaction` or both"));
                }
                Task::CrossedProduct {
                    algebra: algebra.as_ref().map(|a| module_algebra(&h, a, &p("algebra"), field)).transpose()?,
                    coaction: *coaction,
                }
            }
        };
        tasks.push(TaskEntry { kind: t.kind(), label: t.label().map(str::to_string), task });
    }
    Ok(Job { field, h, pairs, modules, algebras, coalgebras, tasks, digest: String::new() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load_err(text: &str) -> InputError {
        match Job::load(text) {
            Ok(_) => panic!("expected an input error"),
            Err(e) => e,
        }
    }

    const H1: &str = r#""presentation": {"builtin": "cm_h1"}, "characters": {"d": {"Y": "1"}}, "pairs": {"p": {"delta": "d"}}"#;

    #[test]
    fn unknown_names_point_at_the_task() {
        let e = load_err(&format!(r#"{{{H1}, "tasks": [{{"task": "check-mpi", "pair": "nope"}}]}}"#));
        assert!(matches!(&e, InputError::Schema { path, .. } if path == "tasks[0].pair"), "{e}");
    }

    #[test]
    fn candidate_degree_must_match_the_level() {
        let e = load_err(&format!(r#"{{{H1}, "tasks": [{{"task": "certify-cocycle", "pair": "p", "level": 2, "candidate": "X"}}]}}"#));
        assert!(matches!(e, InputError::Schema { .. }), "{e}");
        let e = load_err(&format!(r#"{{{H1}, "tasks": [{{"task": "certify-cocycle", "pair": "p", "level": 0, "candidate": "X"}}]}}"#));
        assert!(e.to_string().contains("scalar"), "{e}");
        Job::load(&format!(r#"{{{H1}, "tasks": [{{"task": "certify-cocycle", "pair": "p", "level": 0, "candidate": "3"}}]}}"#)).unwrap();
    }

    #[test]
    fn characters_default_to_the_counit() {
        let job = Job::load(&format!(r#"{{{H1}, "tasks": []}}"#)).unwrap();
        let h = &job.h;
        let delta = &job.pairs["p"].delta;
        let x = h.alphabet().symbol("X", None).unwrap();
        assert_eq!(delta.gen_value(h, x).unwrap(), Scalar::zero());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = load_err("{\"presentation\": {\"builtin\": \"ground\"},\n \"tasks\": [,]}");
        assert!(matches!(e, InputError::Json { line: 2, .. }), "{e}");
    }

    #[test]
    fn digest_is_of_the_input_bytes() {
        let a = Job::load(r#"{"presentation": {"builtin": "ground"}, "tasks": []}"#).unwrap();
        let b = Job::load(r#"{"presentation": {"builtin": "ground"},  "tasks": []}"#).unwrap();
        assert_eq!(a.digest.len(), 64);
        assert_ne!(a.digest, b.digest);
    }
}
