use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::hopf::presentation::HopfPresentation;
use crate::ncalg::{NCPoly, TensorElem, Word};
use crate::report::{CheckLine, Report};
use crate::scalar::Scalar;

/// Probe selection for axiom checks on possibly infinite presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    /// Highest index used for indexed families.
    pub max_index: u32,
    pub random_monomials: usize,
    pub max_degree: usize,
    pub seed: u64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { max_index: 4, random_monomials: 50, max_degree: 3, seed: 0 }
    }
}

/// Generators followed by random normal monomials.
pub fn probe_words(h: &HopfPresentation, cfg: &ProbeConfig) -> Result<Vec<Word>> {
    let gens = h.generators(cfg.max_index);
    let mut out: Vec<Word> = gens.iter().map(|&g| Word::single(g)).collect();
    if gens.is_empty() || cfg.max_degree == 0 {
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut attempts = 0;
    let mut added = 0;
    while added < cfg.random_monomials && attempts < cfg.random_monomials * 20 {
        attempts += 1;
        let len = rng.gen_range(1..=cfg.max_degree);
        let w: Word = (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
        let nf = h.rewrite().normalize_word(&w)?;
        let words: Vec<&Word> = nf.terms().map(|(w, _)| w).filter(|w| !w.is_unit()).collect();
        if words.is_empty() {
            continue;
        }
        out.push(words[rng.gen_range(0..words.len())].clone());
        added += 1;
    }
    Ok(out)
}

fn record(line: &mut CheckLine, r: Result<Option<String>>) {
    match r {
        Ok(None) => line.record(true, String::new),
        Ok(Some(w)) => line.fail(w),
        Err(e) => line.fail(format!("error: {e}")),
    }
}

/// Checks the bialgebra and antipode axioms on the given probe words, plus
/// well-definedness of every structure map on every rule instance with
/// indices up to `max_index`.
pub fn check_hopf_axioms_on(h: &HopfPresentation, probes: &[Word], max_index: u32) -> Report {
    let mut report = Report::default();

    let mut coassoc = CheckLine::new("coassociativity");
    let mut counit = CheckLine::new("counit");
    let mut anti = CheckLine::new("antipode identity");
    let mut inverse = h.has_antipode_inverse().then(|| CheckLine::new("antipode inverse"));

    for w in probes {
        let p = NCPoly::word(w.clone());
        let name = h.show_word(w);
        record(
            &mut coassoc,
            (|| {
                let d = h.coproduct_word(w)?;
                let left = h.coproduct_slot(&d, 0)?;
                let right = h.coproduct_slot(&d, 1)?;
                Ok((left != right).then(|| format!("{name}: {} vs {}", h.show_tensor(&left), h.show_tensor(&right))))
            })(),
        );
        record(
            &mut counit,
            (|| {
                let d = h.coproduct_word(w)?;
                let a = h.counit_slot(&d, 0)?.to_poly().unwrap_or_default();
                let b = h.counit_slot(&d, 1)?.to_poly().unwrap_or_default();
                Ok((a != p || b != p).then(|| format!("{name}: {} and {}", h.show(&a), h.show(&b))))
            })(),
        );
        record(
            &mut anti,
            (|| {
                let d = h.coproduct_word(w)?;
                let mut left = NCPoly::zero();
                let mut right = NCPoly::zero();
                for (k, c) in d.terms() {
                    left.add_scaled(&h.mul(&h.antipode_word(&k[0])?, &NCPoly::word(k[1].clone()))?, c);
                    right.add_scaled(&h.mul(&NCPoly::word(k[0].clone()), &h.antipode_word(&k[1])?)?, c);
                }
                let e = NCPoly::constant(h.counit_word(w)?);
                Ok((left != e || right != e).then(|| {
                    format!("{name}: (S*I) = {}, (I*S) = {}, expected {}", h.show(&left), h.show(&right), h.show(&e))
                }))
            })(),
        );
        if let Some(line) = inverse.as_mut() {
            record(
                line,
                (|| {
                    let a = h.antipode(&h.antipode_inverse_word(w)?)?;
                    let b = h.antipode_inverse(&h.antipode_word(w)?)?;
                    let nf = h.normalize(&p)?;
                    Ok((a != nf || b != nf).then(|| format!("{name}: S(S^-1) = {}, S^-1(S) = {}", h.show(&a), h.show(&b))))
                })(),
            );
        }
    }

    let mut delta_rel = CheckLine::new("coproduct respects relations");
    let mut eps_rel = CheckLine::new("counit respects relations");
    let mut s_rel = CheckLine::new("antipode respects relations");
    let mut sinv_rel = h.has_antipode_inverse().then(|| CheckLine::new("antipode inverse respects relations"));
    for rule in h.rewrite().rules() {
        for b in rule.instances(max_index) {
            let lhs = rule.lhs_word(&b).expect("bound instance");
            let rhs = match rule.instantiate_rhs(&b) {
                Ok(r) => r,
                Err(e) => {
                    delta_rel.fail(format!("error: {e}"));
                    continue;
                }
            };
            let name = h.show_word(&lhs);
            record(
                &mut delta_rel,
                (|| {
                    let l = h.coproduct_word(&lhs)?;
                    let mut r = TensorElem::zero(2);
                    for (c, w) in &rhs {
                        r.add_scaled(&h.coproduct_word(w)?, c);
                    }
                    Ok((l != r).then(|| format!("{name}: {} vs {}", h.show_tensor(&l), h.show_tensor(&r))))
                })(),
            );
            record(
                &mut eps_rel,
                (|| {
                    let l = h.counit_word(&lhs)?;
                    let mut r = Scalar::zero();
                    for (c, w) in &rhs {
                        r = &r + &(c * &h.counit_word(w)?);
                    }
                    Ok((l != r).then(|| format!("{name}: {l} vs {r}")))
                })(),
            );
            record(
                &mut s_rel,
                (|| {
                    let l = h.antipode_word(&lhs)?;
                    let mut r = NCPoly::zero();
                    for (c, w) in &rhs {
                        r.add_scaled(&h.antipode_word(w)?, c);
                    }
                    Ok((l != r).then(|| format!("{name}: {} vs {}", h.show(&l), h.show(&r))))
                })(),
            );
            if let Some(line) = sinv_rel.as_mut() {
                record(
                    line,
                    (|| {
                        let l = h.antipode_inverse_word(&lhs)?;
                        let mut r = NCPoly::zero();
                        for (c, w) in &rhs {
                            r.add_scaled(&h.antipode_inverse_word(w)?, c);
                        }
                        Ok((l != r).then(|| format!("{name}: {} vs {}", h.show(&l), h.show(&r))))
                    })(),
                );
            }
        }
    }

    report.push(coassoc);
    report.push(counit);
    report.push(delta_rel);
    report.push(eps_rel);
    report.push(s_rel);
    report.push(anti);
    if let Some(l) = sinv_rel {
        report.push(l);
    }
    if let Some(l) = inverse {
        report.push(l);
    }
    report
}

/// Probe-based check: generators plus random normal monomials.
pub fn check_hopf_axioms(h: &HopfPresentation, cfg: &ProbeConfig) -> Report {
    match probe_words(h, cfg) {
        Ok(probes) => check_hopf_axioms_on(h, &probes, cfg.max_index),
        Err(e) => {
            let mut line = CheckLine::new("probe generation");
            line.fail(format!("error: {e}"));
            Report { lines: vec![line] }
        }
    }
}

/// Exhaustive check over a finite normal-word basis.
pub fn check_hopf_axioms_exhaustive(h: &HopfPresentation, max_len: usize) -> Result<Report> {
    let basis = h.finite_basis(max_len)?;
    Ok(check_hopf_axioms_on(h, &basis, 0))
}
