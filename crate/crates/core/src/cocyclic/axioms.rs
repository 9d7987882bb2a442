use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cocyclic::{difference, CocyclicModule, MatrixCocyclic};
use crate::error::Result;
use crate::hopf::{probe_words, HopfPresentation, ProbeConfig};
use crate::ncalg::{TensorElem, Word};
use crate::report::{CheckLine, Report};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug)]
enum Op {
    Face(usize),
    Degen(usize),
    Cyclic,
}

fn apply<M: CocyclicModule>(inst: &M, mut n: usize, ops: &[Op], x: &M::Elem) -> Result<M::Elem> {
    let mut y = x.clone();
    for op in ops {
        y = match *op {
            Op::Face(i) => {
                let r = inst.face(n, i, &y)?;
                n += 1;
                r
            }
            Op::Degen(i) => {
                let r = inst.degeneracy(n, i, &y)?;
                n -= 1;
                r
            }
            Op::Cyclic => inst.cyclic(n, &y)?,
        };
    }
    Ok(y)
}

fn show_ops(ops: &[Op]) -> String {
    if ops.is_empty() {
        return "id".into();
    }
    ops.iter()
        .rev()
        .map(|op| match op {
            Op::Face(i) => format!("δ{i}"),
            Op::Degen(i) => format!("σ{i}"),
            Op::Cyclic => "τ".into(),
        })
        .collect::<Vec<_>>()
        .join("∘")
}

struct Suite<'a, M: CocyclicModule> {
    inst: &'a M,
    probes: Vec<Vec<M::Elem>>,
}

impl<M: CocyclicModule> Suite<'_, M> {
    /// Records `lhs x = rhs x` for every probe at level `n`; ops are in
    /// application order.
    fn check(&self, line: &mut CheckLine, n: usize, lhs: &[Op], rhs: &[Op]) -> Result<()> {
        for x in &self.probes[n] {
            let a = apply(self.inst, n, lhs, x)?;
            let b = apply(self.inst, n, rhs, x)?;
            let ok = self.inst.is_zero(&difference(self.inst, &a, &b));
            line.record(ok, || {
                format!(
                    "level {n}: {} vs {} on {}: {} vs {}",
                    show_ops(lhs),
                    show_ops(rhs),
                    self.inst.show(x),
                    self.inst.show(&a),
                    self.inst.show(&b)
                )
            });
        }
        Ok(())
    }
}

/// Every cosimplicial and cyclic identity with source level at most
/// `max_level`, on the given probes (`probes(n)` for level `n`, needed up to
/// `max_level + 1`). The periodicity `τ_n^{n+1} = id` gets one line per level.
pub fn verify_cocyclic_axioms<M: CocyclicModule>(
    inst: &M,
    max_level: usize,
    probes: &dyn Fn(usize) -> Result<Vec<M::Elem>>,
) -> Result<Report> {
    let suite = Suite { inst, probes: (0..=max_level + 1).map(probes).collect::<Result<_>>()? };
    let mut faces = CheckLine::new("δj δi = δi δ(j-1) for i < j");
    let mut degens = CheckLine::new("σj σi = σi σ(j+1) for i ≤ j");
    let mut mixed_low = CheckLine::new("σj δi = δi σ(j-1) for i < j");
    let mut mixed_id = CheckLine::new("σj δi = id for i = j, j+1");
    let mut mixed_high = CheckLine::new("σj δi = δ(i-1) σj for i > j+1");
    let mut cyc_face = CheckLine::new("τ δi = δ(i-1) τ for i ≥ 1");
    let mut cyc_face0 = CheckLine::new("τ δ0 = δ(last)");
    let mut cyc_degen = CheckLine::new("τ σi = σ(i-1) τ for i ≥ 1");
    let mut cyc_degen0 = CheckLine::new("τ σ0 = σ(last) τ²");
    let mut periodic = Vec::new();
    for n in 0..=max_level {
        for j in 0..=n + 2 {
            for i in 0..j {
                suite.check(&mut faces, n, &[Op::Face(i), Op::Face(j)], &[Op::Face(j - 1), Op::Face(i)])?;
            }
        }
        if n >= 2 {
            for j in 0..=n - 2 {
                for i in 0..=j {
                    suite.check(&mut degens, n, &[Op::Degen(i), Op::Degen(j)], &[Op::Degen(j + 1), Op::Degen(i)])?;
                }
            }
        }
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = [Op::Face(i), Op::Degen(j)];
                if i < j {
                    suite.check(&mut mixed_low, n, &lhs, &[Op::Degen(j - 1), Op::Face(i)])?;
                } else if i == j || i == j + 1 {
                    suite.check(&mut mixed_id, n, &lhs, &[])?;
                } else {
                    suite.check(&mut mixed_high, n, &lhs, &[Op::Degen(j), Op::Face(i - 1)])?;
                }
            }
        }
        for i in 1..=n + 1 {
            suite.check(&mut cyc_face, n, &[Op::Face(i), Op::Cyclic], &[Op::Cyclic, Op::Face(i - 1)])?;
        }
        suite.check(&mut cyc_face0, n, &[Op::Face(0), Op::Cyclic], &[Op::Face(n + 1)])?;
        if n >= 1 {
            for i in 1..n {
                suite.check(&mut cyc_degen, n, &[Op::Degen(i), Op::Cyclic], &[Op::Cyclic, Op::Degen(i - 1)])?;
            }
            suite.check(&mut cyc_degen0, n, &[Op::Degen(0), Op::Cyclic], &[Op::Cyclic, Op::Cyclic, Op::Degen(n - 1)])?;
        }
        let mut line = CheckLine::new(format!("τ{n}^{} = id", n + 1));
        suite.check(&mut line, n, &vec![Op::Cyclic; n + 1], &[])?;
        periodic.push(line);
    }
    let mut report = Report::default();
    for l in [faces, degens, mixed_low, mixed_id, mixed_high, cyc_face, cyc_face0, cyc_degen, cyc_degen0] {
        report.push(l);
    }
    for l in periodic {
        report.push(l);
    }
    Ok(report)
}

/// Unit coordinate vectors of each level: exhaustive probes.
pub fn basis_probes(m: &MatrixCocyclic) -> impl Fn(usize) -> Result<Vec<Vec<Scalar>>> + '_ {
    move |n| Ok((0..m.dim(n)).map(|i| m.unit(n, i)).collect())
}

/// Random probes `h1 ⊗ … ⊗ hn` for the CM module of an infinite-dimensional
/// presentation: each slot is a normal monomial drawn from [`probe_words`]
/// (generators included), plus the unit. Level 0 gets the scalar 1.
pub fn sampled_probes<'a>(
    h: &'a HopfPresentation,
    cfg: ProbeConfig,
    per_level: usize,
) -> impl Fn(usize) -> Result<Vec<TensorElem>> + 'a {
    move |n| {
        if n == 0 {
            return Ok(vec![TensorElem::scalar(Scalar::one())]);
        }
        let mut pool = probe_words(h, &cfg)?;
        pool.push(Word::unit());
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64).wrapping_mul(0x9e37_79b9));
        Ok((0..per_level)
            .map(|_| TensorElem::pure((0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect(), Scalar::one()))
            .collect())
    }
}
