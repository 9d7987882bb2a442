use crate::error::{Error, Result};
use crate::hopf::{check_hopf_axioms, check_hopf_axioms_exhaustive, HopfPresentation, ProbeConfig};
use crate::report::Report;

/// How hard a builder checks its output before returning it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyConfig {
    /// Index bound for template instances; ignored by finite alphabets.
    pub bound: u32,
    pub random_monomials: usize,
    pub max_degree: usize,
    pub seed: u64,
}

impl CertifyConfig {
    /// Exhaustive over the normal-word basis.
    pub fn finite() -> Self {
        CertifyConfig { bound: 0, random_monomials: 0, max_degree: 0, seed: 0 }
    }
}

/// Longest normal word accepted when enumerating a finite basis.
pub const FINITE_MAX_LEN: usize = 16;

/// Termination, confluence and Hopf axioms. Finite-dimensional presentations
/// are checked on their whole basis.
pub fn certification_report(h: &HopfPresentation, cfg: &CertifyConfig) -> Report {
    let mut report = Report::default();
    let mut term = crate::report::CheckLine::new("rules decrease");
    match h.rewrite().check_termination(cfg.bound.max(1)) {
        Ok(()) => term.record(true, String::new),
        Err(w) => term.fail(w),
    }
    report.push(term);
    let mut conf = crate::report::CheckLine::new("rules confluent");
    match h.rewrite().check_confluence(cfg.bound.max(1)) {
        Ok(n) => conf.checked = n.max(1),
        Err(w) => conf.fail(w),
    }
    report.push(conf);
    let axioms = match h.finite_basis(FINITE_MAX_LEN) {
        Ok(_) => match check_hopf_axioms_exhaustive(h, FINITE_MAX_LEN) {
            Ok(r) => r,
            Err(e) => {
                let mut l = crate::report::CheckLine::new("hopf axioms");
                l.fail(e.to_string());
                Report { lines: vec![l] }
            }
        },
        Err(_) => check_hopf_axioms(
            h,
            &ProbeConfig {
                max_index: cfg.bound,
                random_monomials: cfg.random_monomials,
                max_degree: cfg.max_degree,
                seed: cfg.seed,
            },
        ),
    };
    report.extend(axioms);
    report
}

pub fn certify(h: &HopfPresentation, cfg: &CertifyConfig) -> Result<()> {
    let r = certification_report(h, cfg);
    match r.first_failure() {
        None => Ok(()),
        Some(l) => Err(Error::Uncertified(format!("{}: {}", h.name(), l))),
    }
}
