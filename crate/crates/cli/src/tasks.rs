//! Task execution. Independent tasks run on the rayon pool; reports keep the
//! declaration order.

use std::time::Instant;

use hopfcyc::builders::{
    bicrossed_from_factorization, certification_report, check_crossed_product_formula, crossed_product_algebra,
    crossed_product_coalgebra, CertifyConfig, ComoduleCoalgebraData, FiniteCoalgebra, ModuleAlgebraData, FINITE_MAX_LEN,
};
use hopfcyc::cocyclic::{
    basis_probes, check_commutes, check_trace, sampled_probes, verify_cocyclic_axioms, CharMap, CmModule, MatrixCocyclic, TypeA,
    TypeB, TypeC,
};
use hopfcyc::coeffs::{check_ayd, check_stability, mpi_to_sayd, pair_module, AntipodePower, FinCoefModule, FiniteAlgebra, Side, PROBE_BOUND};
use hopfcyc::cohom::{certify_cocycle, cohomology};
use hopfcyc::hopf::{check_hopf_axioms, check_mpi, generator_probes, ProbeConfig};
use hopfcyc::{CheckLine, HopfPresentation, ModularPair, NCPoly, Report, Result, Word};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::finite::FiniteView;
use crate::job::{AlgebraDef, CoalgebraDef, Instance, Job, ModuleDef, Task};
use crate::report::{Engine, PresentationSummary, RunReport, TaskReport, Timing, Verdict};
use crate::spec::CoactionChoice;

/// Command-line overrides shared by every task.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    /// Caps `levels` and `max_degree`.
    pub max_level: Option<usize>,
    /// Random monomials for sampled checks.
    pub probe_budget: Option<usize>,
}

impl RunOptions {
    fn cap(&self, n: usize) -> usize {
        self.max_level.map_or(n, |m| n.min(m))
    }
}

struct Outcome {
    checks: Vec<CheckLine>,
    data: Value,
}

impl Outcome {
    fn new(report: Report, data: Value) -> Self {
        Outcome { checks: report.lines, data }
    }
}

fn line(name: &str, ok: bool, checked: usize, witness: impl FnOnce() -> String) -> CheckLine {
    let mut l = CheckLine::new(name);
    if ok {
        l.checked = checked;
    } else {
        l.fail(witness());
        l.checked = checked.max(1);
    }
    l
}

struct Ctx<'a> {
    job: &'a Job,
    opts: RunOptions,
}

impl<'a> Ctx<'a> {
    fn h(&self) -> &'a HopfPresentation {
        &self.job.h
    }

    fn pair(&self, name: &str) -> &'a ModularPair {
        &self.job.pairs[name]
    }

    fn view(&self) -> Result<FiniteView<'a>> {
        FiniteView::new(self.h())
    }

    fn module(&self, name: &str) -> Result<FinCoefModule> {
        match &self.job.modules[name] {
            ModuleDef::Table(m) => Ok(m.clone()),
            ModuleDef::Pair(p) => pair_module(self.h(), self.pair(p)),
            ModuleDef::Sayd(p) => mpi_to_sayd(self.h(), self.pair(p)),
            ModuleDef::LeftRegular => self.view()?.left_regular(),
            ModuleDef::Adjoint => self.view()?.adjoint(),
            ModuleDef::Coproduct => self.view()?.coproduct_coaction(),
        }
    }

    fn algebra(&self, name: &str) -> Result<FiniteAlgebra> {
        match &self.job.algebras[name] {
            AlgebraDef::Table(a) => Ok(a.clone()),
            AlgebraDef::Regular => self.view()?.algebra(),
        }
    }

    fn coalgebra(&self, name: &str) -> Result<FiniteCoalgebra> {
        match &self.job.coalgebras[name] {
            CoalgebraDef::Table(c) => Ok(c.clone()),
            CoalgebraDef::Regular => self.view()?.coalgebra(),
        }
    }

    fn materialize(&self, inst: &Instance, levels: usize) -> Result<MatrixCocyclic> {
        let h = self.h();
        match inst {
            Instance::Cm { pair } => MatrixCocyclic::materialize(&CmModule::new(h, self.pair(pair))?, levels),
            Instance::TypeA { algebra, action, coefficients } => MatrixCocyclic::materialize(
                &TypeA::new(h, self.algebra(algebra)?, self.module(action)?, self.module(coefficients)?)?,
                levels,
            ),
            Instance::TypeB { algebra, coaction, coefficients } => MatrixCocyclic::materialize(
                &TypeB::new(h, self.algebra(algebra)?, self.module(coaction)?, self.module(coefficients)?)?,
                levels,
            ),
            Instance::TypeC { coalgebra, action, coefficients } => MatrixCocyclic::materialize(
                &TypeC::new(h, self.coalgebra(coalgebra)?, self.module(action)?, self.module(coefficients)?)?,
                levels,
            ),
            Instance::Twisted { algebra, action, sigma } => {
                MatrixCocyclic::materialize(&TypeA::twisted(h, self.algebra(algebra)?, self.module(action)?, sigma)?, levels)
            }
            Instance::Plain { algebra } => MatrixCocyclic::materialize(&TypeA::plain(self.algebra(algebra)?)?, levels),
        }
    }

    fn probe_config(&self, max_index: u32, monomials: usize, max_degree: usize) -> ProbeConfig {
        ProbeConfig {
            max_index,
            random_monomials: self.opts.probe_budget.unwrap_or(monomials),
            max_degree,
            seed: self.opts.seed,
        }
    }

    fn run(&self, task: &Task) -> Result<Outcome> {
        match task {
            Task::CheckHopf { probes, exhaustive } => self.check_hopf(probes.as_ref(), *exhaustive),
            Task::CheckMpi { pair, max_index } => self.check_mpi(pair, max_index.unwrap_or(4)),
            Task::CheckSayd { module, bound, skip_stability } => self.check_sayd(module, bound.unwrap_or(PROBE_BOUND), *skip_stability),
            Task::VerifyCocyclic { instance, levels, samples } => self.verify_cocyclic(instance, self.opts.cap(*levels), *samples),
            Task::CertifyCocycle { pair, level, candidate } => {
                let cm = CmModule::new(self.h(), self.pair(pair))?;
                let v = certify_cocycle(&cm, *level, candidate)?;
                let h = self.h();
                let b = v.b_residual.is_zero();
                let l = v.lambda_residual.is_zero();
                let report = Report {
                    lines: vec![
                        line("b(x) = 0", b, 1, || format!("b(x) = {}", h.show_tensor(&v.b_residual))),
                        line("(1 − λ)x = 0", l, 1, || format!("(1 − λ)x = {}", h.show_tensor(&v.lambda_residual))),
                    ],
                };
                let data = json!({
                    "level": level,
                    "candidate": h.show_tensor(candidate),
                    "b_residual": h.show_tensor(&v.b_residual),
                    "lambda_residual": h.show_tensor(&v.lambda_residual),
                });
                Ok(Outcome::new(report, data))
            }
            Task::Cohomology { instance, max_degree } => {
                let d = self.opts.cap(*max_degree);
                let m = self.materialize(instance, d + 2)?;
                let (lambda, bicomplex, agree) = cohomology(&m, d)?;
                let mut report = Report { lines: vec![agree] };
                report.extend(lambda.checks.clone());
                report.extend(bicomplex.checks.clone());
                let data = json!({
                    "max_degree": d,
                    "cochains": lambda.degrees.iter().map(|x| x.cochains).collect::<Vec<_>>(),
                    "hochschild": lambda.degrees.iter().map(|x| x.hochschild).collect::<Vec<_>>(),
                    "cyclic": lambda.cyclic_dims(),
                    "cyclic_bicomplex": bicomplex.cyclic_dims(),
                    "excluded_parameters": lambda.excluded,
                });
                Ok(Outcome::new(report, data))
            }
            Task::CharMap { algebra, action, trace, pair, levels } => self.char_map(algebra, action, trace, pair, self.opts.cap(*levels)),
            Task::BuildBicrossed { factorization } => {
                let b = bicrossed_from_factorization(factorization)?;
                let h = &b.realization.presentation;
                let dim = h.finite_basis(FINITE_MAX_LEN)?.len();
                let order = factorization.group().order();
                let mut report = certification_report(h, &CertifyConfig::finite());
                report.push(line("dimension equals the group order", dim == order, 1, || format!("{dim} vs {order}")));
                let data = json!({ "dimension": dim, "generators": h.generators(0).iter().map(|g| h.alphabet().symbol_name(*g)).collect::<Vec<_>>() });
                Ok(Outcome::new(report, data))
            }
            Task::CrossedProduct { algebra, coaction } => self.crossed_product(algebra.as_ref(), *coaction),
        }
    }

    fn check_hopf(&self, probes: Option<&crate::spec::ProbeSpec>, exhaustive: Option<bool>) -> Result<Outcome> {
        let h = self.h();
        let finite = h.finite_basis(FINITE_MAX_LEN).ok().map(|b| b.len());
        let exhaustive = exhaustive.unwrap_or(finite.is_some());
        let p = probes.cloned().unwrap_or(crate::spec::ProbeSpec { max_index: None, random_monomials: None, max_degree: None });
        let cfg = self.probe_config(p.max_index.unwrap_or(4), p.random_monomials.unwrap_or(50), p.max_degree.unwrap_or(3));
        let report = if exhaustive {
            if finite.is_none() {
                return Err(hopfcyc::Error::NotFiniteDimensional(format!("{} has no finite basis", h.name())));
            }
            certification_report(h, &CertifyConfig::finite())
        } else {
            let mut r = certification_report(
                h,
                &CertifyConfig { bound: cfg.max_index, random_monomials: 0, max_degree: 0, seed: cfg.seed },
            );
            r.lines.truncate(2);
            r.extend(check_hopf_axioms(h, &cfg));
            r
        };
        let data = json!({
            "exhaustive": exhaustive,
            "dimension": finite,
            "probes": if exhaustive { Value::Null } else { json!({"max_index": cfg.max_index, "random_monomials": cfg.random_monomials, "max_degree": cfg.max_degree, "seed": cfg.seed}) },
        });
        Ok(Outcome::new(report, data))
    }

    fn check_mpi(&self, pair: &str, max_index: u32) -> Result<Outcome> {
        let h = self.h();
        let p = self.pair(pair);
        let mut lines = Vec::new();
        let valid = p.delta.validate(h, max_index);
        lines.push(line("δ is a character", valid.is_ok(), 1, || valid.clone().unwrap_err().to_string()));
        let v = check_mpi(h, p, &generator_probes(h, max_index))?;
        let ds = p.delta_of_sigma(h)?;
        lines.push(line("δ(σ) = 1", v.modular, 1, || format!("δ(σ) = {ds}")));
        let w = v.witness.clone();
        lines.push(line("S̃_δ² = Ad σ", v.involutive, v.probes_checked, || {
            let w = w.unwrap();
            format!("on {}: {} vs {}", w.probe, w.twisted_square, w.conjugate)
        }));
        let data = json!({ "delta_of_sigma": ds.to_string(), "witness": v.witness });
        Ok(Outcome { checks: lines, data })
    }

    fn check_sayd(&self, module: &str, bound: u32, skip_stability: bool) -> Result<Outcome> {
        let h = self.h();
        let m = self.module(module)?;
        let mut lines = Vec::new();
        let valid = m.validate(h, bound);
        lines.push(line("module and comodule axioms", valid.is_ok(), 1, || valid.clone().unwrap_err().to_string()));
        let cert = check_ayd(h, &m, AntipodePower::ayd(m.action_side(), m.coaction_side()), bound)?;
        lines.push(line("anti-Yetter–Drinfeld", cert.pass, cert.checked, || cert.witness.clone().unwrap_or_default()));
        if !skip_stability {
            let st = check_stability(h, &m)?;
            lines.push(line("stable", st.pass, st.checked, || st.witness.clone().unwrap_or_default()));
        }
        let data = json!({ "dimension": m.dim(), "action_side": side(m.action_side()), "coaction_side": side(m.coaction_side()) });
        Ok(Outcome { checks: lines, data })
    }

    fn verify_cocyclic(&self, inst: &Instance, levels: usize, samples: Option<usize>) -> Result<Outcome> {
        let h = self.h();
        if let (Instance::Cm { pair }, false) = (inst, h.is_finite_alphabet()) {
            let cm = CmModule::new(h, self.pair(pair))?;
            let per_level = samples.or(self.opts.probe_budget).unwrap_or(8);
            let cfg = ProbeConfig { max_index: 3, random_monomials: per_level, max_degree: 2, seed: self.opts.seed };
            let report = verify_cocyclic_axioms(&cm, levels, &sampled_probes(h, cfg, per_level))?;
            let data = json!({ "family": "CM", "levels": levels, "exhaustive": false, "samples_per_level": per_level, "seed": self.opts.seed });
            return Ok(Outcome::new(report, data));
        }
        let m = self.materialize(inst, levels + 2)?;
        let report = verify_cocyclic_axioms(&m, levels, &basis_probes(&m))?;
        let data = json!({ "family": m_family(inst), "levels": levels, "exhaustive": true, "dimensions": m.dims() });
        Ok(Outcome::new(report, data))
    }

    fn char_map(&self, algebra: &str, action: &str, trace: &[hopfcyc::Scalar], pair: &str, levels: usize) -> Result<Outcome> {
        let h = self.h();
        let a = self.algebra(algebra)?;
        let act = self.module(action)?;
        let p = self.pair(pair);
        let v = check_trace(h, &a, &act, trace, p)?;
        let mut report = Report { lines: vec![v.invariance.clone(), v.sigma_trace.clone(), v.ibp.clone()] };
        report.push(line("σ-trace ⇒ (δ-invariance ⇔ integration by parts)", v.lemma_consistent, 1, || {
            format!("invariance {}, integration by parts {}", v.invariance.pass, v.ibp.pass)
        }));
        if v.admissible() {
            let chi = CharMap::new(h, a.clone(), act, trace.to_vec(), p)?;
            let cm = CmModule::new(h, p)?;
            let maps = chi.matrices(&cm, levels + 2)?;
            let src = MatrixCocyclic::materialize(&cm, levels + 2)?;
            let dst = MatrixCocyclic::materialize(&TypeA::plain(a)?, levels + 2)?;
            report.extend(check_commutes(&src, &dst, &maps)?);
        }
        Ok(Outcome::new(report, json!({ "admissible": v.admissible(), "levels": levels })))
    }

    fn crossed_product(&self, algebra: Option<&ModuleAlgebraData>, coaction: Option<CoactionChoice>) -> Result<Outcome> {
        let h = self.h();
        let mut report = Report::default();
        let mut data = serde_json::Map::new();
        if let Some(a) = algebra {
            let checked = a.check(h, 0);
            report.push(line("module algebra", checked.is_ok(), 1, || checked.clone().unwrap_err().to_string()));
            if checked.is_ok() {
                let cp = crossed_product_algebra(a, h)?;
                let one = NCPoly::one();
                let mut a_probes = vec![one.clone()];
                a_probes.extend(a.algebra.alphabet().generators(0).into_iter().map(NCPoly::gen));
                let mut h_probes = vec![one];
                h_probes.extend(h.generators(0).into_iter().map(NCPoly::gen));
                report.push(check_crossed_product_formula(&cp, a, h, &a_probes, &h_probes)?);
                let names: Vec<String> = cp.alphabet().families().iter().map(|f| f.name.clone()).collect();
                data.insert("algebra_generators".into(), json!(names));
            }
        }
        if let Some(choice) = coaction {
            let fh = self.view()?.structure()?;
            let d = match choice {
                CoactionChoice::CoConjugation => ComoduleCoalgebraData::co_conjugation(&fh)?,
                CoactionChoice::Trivial => ComoduleCoalgebraData::trivial(&fh),
            };
            let c = crossed_product_coalgebra(&d)?;
            report.extend(c.check());
            data.insert("coalgebra_dimension".into(), json!(c.dim()));
        }
        Ok(Outcome::new(report, Value::Object(data)))
    }
}

fn side(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

fn m_family(inst: &Instance) -> &'static str {
    match inst {
        Instance::Cm { .. } => "CM",
        Instance::TypeA { .. } => "type A",
        Instance::TypeB { .. } => "type B",
        Instance::TypeC { .. } => "type C",
        Instance::Twisted { .. } => "twisted",
        Instance::Plain { .. } => "plain algebra",
    }
}

fn summary(h: &HopfPresentation) -> PresentationSummary {
    let a = h.alphabet();
    let generators = a.families().iter().map(|f| if f.indexed { format!("{}_n", f.name) } else { f.name.clone() }).collect();
    let dimension = if h.is_finite_alphabet() { h.finite_basis(FINITE_MAX_LEN).ok().map(|b: Vec<Word>| b.len()) } else { None };
    PresentationSummary { name: h.name().to_string(), generators, dimension }
}

pub fn run(job: &Job, opts: RunOptions) -> RunReport {
    let start = Instant::now();
    let ctx = Ctx { job, opts };
    let results: Vec<(TaskReport, f64)> = job
        .tasks
        .par_iter()
        .enumerate()
        .map(|(index, entry)| {
            let t0 = Instant::now();
            let (verdict, checks, data, error) = match ctx.run(&entry.task) {
                Ok(o) => {
                    let v = if o.checks.iter().all(|l| l.pass) { Verdict::Pass } else { Verdict::Fail };
                    (v, o.checks, o.data, None)
                }
                Err(e) => (Verdict::Error, Vec::new(), Value::Null, Some(e.to_string())),
            };
            let report = TaskReport { index, task: entry.kind, label: entry.label.clone(), verdict, checks, data, error };
            (report, t0.elapsed().as_secs_f64() * 1e3)
        })
        .collect();
    let (tasks, tasks_ms): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let verdict = if tasks.iter().all(|t| t.verdict == Verdict::Pass) { Verdict::Pass } else { Verdict::Fail };
    RunReport {
        engine: Engine { name: "hopfcyc", version: env!("CARGO_PKG_VERSION") },
        input_sha256: job.digest.clone(),
        seed: opts.seed,
        presentation: summary(&job.h),
        verdict,
        tasks,
        timing: Timing { total_ms: start.elapsed().as_secs_f64() * 1e3, tasks_ms },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_text(text: &str, opts: RunOptions) -> RunReport {
        run(&Job::load(text).unwrap(), opts)
    }

    #[test]
    fn report_order_is_declaration_order() {
        let r = run_text(
            r#"{"presentation": {"builtin": "group_algebra", "params": {"group": {"cyclic": 3}}},
                "pairs": {"t": {"delta": "counit"}},
                "tasks": [{"task": "cohomology", "instance": {"family": "cm", "pair": "t"}, "max_degree": 2},
                          {"task": "check-hopf", "label": "second"},
                          {"task": "check-mpi", "pair": "t"}]}"#,
            RunOptions::default(),
        );
        let kinds: Vec<&str> = r.tasks.iter().map(|t| t.task).collect();
        assert_eq!(kinds, ["cohomology", "check-hopf", "check-mpi"]);
        assert_eq!(r.tasks[1].label.as_deref(), Some("second"));
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.presentation.dimension, Some(3));
    }

    #[test]
    fn probe_budget_overrides_sampling() {
        let r = run_text(
            r#"{"presentation": {"builtin": "cm_h1"}, "tasks": [{"task": "check-hopf"}]}"#,
            RunOptions { probe_budget: Some(3), ..RunOptions::default() },
        );
        assert_eq!(r.tasks[0].data["probes"]["random_monomials"], 3);
        assert_eq!(r.tasks[0].verdict, Verdict::Pass);
    }

    #[test]
    fn exhaustive_checks_need_a_finite_basis() {
        let r = run_text(
            r#"{"presentation": {"builtin": "cm_h1"}, "tasks": [{"task": "check-hopf", "exhaustive": true}]}"#,
            RunOptions::default(),
        );
        assert_eq!(r.tasks[0].verdict, Verdict::Error);
        assert_eq!(r.exit_code(), crate::EXIT_FAIL);
    }

    #[test]
    fn options_cap_levels() {
        let o = RunOptions { max_level: Some(2), ..RunOptions::default() };
        assert_eq!(o.cap(5), 2);
        assert_eq!(o.cap(1), 1);
        assert_eq!(RunOptions::default().cap(7), 7);
    }
}
