//! One line per acceptance criterion. Exits non-zero if any criterion fails
//! or runs over its time budget.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopfcyc::builders::{bicrossed_from_factorization, build_cm_h1, build_ground, build_slq2, FactorizationData, FINITE_MAX_LEN};
use hopfcyc::cocyclic::{
    basis_probes, check_commutes, check_intertwiner, check_trace, verify_cocyclic_axioms, CharMap, CmModule, FiniteLevels,
    MatrixCocyclic, TypeA, TypeB, TypeCToCm,
};
use hopfcyc::coeffs::{
    check_ayd, check_stability, coaction_only, extract_pair, mpi_to_sayd, pair_module, staic_inverse, staic_transform,
    tensor_yd_ayd, AntipodePower, FinCoefModule, FiniteAlgebra, Side,
};
use hopfcyc::cohom::{certify_cocycle, cohomology};
use hopfcyc::hopf::{check_hopf_axioms, check_hopf_axioms_exhaustive, check_mpi, generator_probes, ProbeConfig};
use hopfcyc::{Character, ModularPair, NCPoly, Report, Result, Scalar};

use common::*;

/// Pass flag and a one-line detail.
type Outcome = Result<(bool, String)>;

fn from_report(r: &Report) -> (bool, String) {
    match r.first_failure() {
        None => (true, format!("{} identities, {} instances", r.lines.len(), r.lines.iter().map(|l| l.checked).sum::<usize>())),
        Some(l) => (false, l.to_string()),
    }
}

fn c1_h1_structure() -> Outcome {
    let h = build_cm_h1()?;
    let cfg = ProbeConfig { max_index: 4, random_monomials: 50, max_degree: 3, seed: 1 };
    Ok(from_report(&check_hopf_axioms(&h, &cfg)))
}

fn c2_antipode_order() -> Outcome {
    let h = build_cm_h1()?;
    let x = h.gen("X", None)?;
    let want = h.normalize(&(&x + &h.gen("delta", Some(1))?))?;
    let s2 = h.antipode_power(&x, 2)?;
    if s2 != want {
        return Ok((false, format!("S²(X) = {}", h.show(&s2))));
    }
    for n in 1..=8 {
        if h.antipode_power(&x, n)? == x {
            return Ok((false, format!("S^{n}(X) = X")));
        }
    }
    Ok((true, format!("S²(X) = {}; Sⁿ(X) ≠ X for n ≤ 8", h.show(&s2))))
}

fn c3_mpi_resolution() -> Outcome {
    let h = build_cm_h1()?;
    let probes = generator_probes(&h, 3);
    let assignments = [("delta(Y) = 1, delta(X) = 0", "Y"), ("delta(X) = 1, delta(Y) = 0", "X")];
    let mut passing = Vec::new();
    let mut notes = Vec::new();
    for (name, gen) in assignments {
        let delta = Character::from_named(&h, &[(gen, None, Scalar::one())])?;
        if let Err(e) = delta.validate(&h, 3) {
            notes.push(format!("{name}: not a character ({e})"));
            continue;
        }
        let v = check_mpi(&h, &ModularPair::new(delta, NCPoly::one()), &probes)?;
        if v.pass() {
            passing.push(name);
        } else {
            notes.push(format!("{name}: S̃² ≠ id"));
        }
    }
    let golden = include_str!("golden/mpi_resolution.txt").trim();
    let ok = passing.len() == 1 && passing[0] == golden;
    Ok((ok, format!("passing: {passing:?} (golden: {golden}); {}", notes.join("; "))))
}

fn c4_slq2() -> Outcome {
    let h = build_slq2()?;
    let q = Scalar::q();
    let delta = Character::from_named(&h, &[("x", None, q.clone()), ("y", None, q.inv()), ("u", None, Scalar::zero()), ("v", None, Scalar::zero())])?;
    delta.validate(&h, 0)?;
    let v = check_mpi(&h, &ModularPair::new(delta, NCPoly::one()), &generator_probes(&h, 0))?;
    Ok(match v.witness {
        None => (v.pass(), format!("{} generators", v.probes_checked)),
        Some(w) => (false, format!("S̃²({}) = {}, expected {}", w.probe, w.twisted_square, w.conjugate)),
    })
}

fn c5_cocycles() -> Outcome {
    let h = build_cm_h1()?;
    let cm = CmModule::new(&h, &h1_pair(&h))?;
    for (name, n, x) in h1_cocycles(&h) {
        let v = certify_cocycle(&cm, n, &x)?;
        if !v.pass {
            return Ok((false, format!("{name}: b = {}, (1 − λ) = {}", h.show_tensor(&v.b_residual), h.show_tensor(&v.lambda_residual))));
        }
    }
    Ok((true, "δ₁, δ₂ − ½δ₁², F".into()))
}

fn suite<F: FiniteLevels>(name: &str, inst: &F) -> Result<(bool, String)> {
    let m = MatrixCocyclic::materialize(inst, 6)?;
    let r = verify_cocyclic_axioms(&m, 4, &basis_probes(&m))?;
    let (ok, d) = from_report(&r);
    Ok((ok, format!("{name}: {d}")))
}

fn c6_axiom_suites() -> Outcome {
    let z3 = z(3);
    let z2 = z(2);
    let mut parts = Vec::new();
    let mut all = true;
    let mut add = |r: (bool, String)| {
        all &= r.0;
        parts.push(r.1);
    };
    add(suite("CM kℤ/3", &CmModule::new(z3.h(), &ModularPair::trivial(z3.h()))?)?);
    let (a, act) = sign_algebra(&z2);
    let m = FinCoefModule::one_dim(&z2.h().tables().counit, &z2.element(1), Side::Left, Side::Right);
    add(suite("type A", &TypeA::new(z2.h(), a, act, m)?)?);
    let diag: Vec<Vec<NCPoly>> =
        (0..2).map(|i| (0..2).map(|j| if i == j { z2.element(i) } else { NCPoly::zero() }).collect()).collect();
    let co = coaction_only(2, Side::Right, diag)?;
    let m = FinCoefModule::one_dim(&z2.h().tables().counit, &z2.element(1), Side::Right, Side::Right);
    add(suite("type B", &TypeB::new(z2.h(), FiniteAlgebra::from_hopf(z2.structure()), co, m)?)?);
    add(suite("type C", &type_c_regular(&z2, &z2.pair(sign(&z2), 0)?))?);
    Ok((all, parts.join("; ")))
}

fn c7_unstable() -> Outcome {
    let z2 = z(2);
    let pair = z2.pair(sign(&z2), 1)?;
    let m = pair_module(z2.h(), &pair)?;
    let ayd = check_ayd(z2.h(), &m, AntipodePower::ayd(Side::Right, Side::Left), 0)?.pass;
    let stable = check_stability(z2.h(), &m)?.pass;
    let cm = CmModule::new(z2.h(), &pair)?;
    let mat = MatrixCocyclic::materialize(&cm, 3)?;
    let r = verify_cocyclic_axioms(&mat, 1, &basis_probes(&mat))?;
    let line = r.line("τ1^2 = id").cloned();
    Ok(match line {
        Some(l) if !l.pass && ayd && !stable => (true, format!("AYD, not stable; {l}")),
        other => (false, format!("AYD {ayd}, stable {stable}, line {other:?}")),
    })
}

fn c8_type_c_is_cm() -> Outcome {
    let mut parts = Vec::new();
    for order in [2, 3] {
        let kg = z(order);
        let pair = ModularPair::trivial(kg.h());
        let c = type_c_regular(&kg, &pair);
        let cm = CmModule::new(kg.h(), &pair)?;
        let (src, dst) = (MatrixCocyclic::materialize(&c, 5)?, MatrixCocyclic::materialize(&cm, 5)?);
        let (maps, kills) = TypeCToCm::new(&cm, kg.realization().embed.clone()).matrices(&c, 5)?;
        let mut r = check_intertwiner(&src, &dst, &maps)?;
        r.push(kills);
        let (ok, d) = from_report(&r);
        if !ok {
            return Ok((false, format!("kℤ/{order}: {d}")));
        }
        parts.push(format!("kℤ/{order}: {d}"));
    }
    Ok((true, parts.join("; ")))
}

fn c9_char_map() -> Outcome {
    let z2 = z(2);
    let (a, _) = conjugation_algebra(&z2);
    let act = conjugation_algebra(&z2).1;
    let pair = ModularPair::trivial(z2.h());
    let chi = CharMap::new(z2.h(), a.clone(), act, vec![Scalar::one(), Scalar::zero()], &pair)?;
    let cm = CmModule::new(z2.h(), &pair)?;
    let maps = chi.matrices(&cm, 5)?;
    let src = MatrixCocyclic::materialize(&cm, 5)?;
    let dst = MatrixCocyclic::materialize(&TypeA::plain(a)?, 5)?;
    let (ok, d) = from_report(&check_commutes(&src, &dst, &maps)?);
    if !ok {
        return Ok((false, format!("χ_τ: {d}")));
    }
    // random traces on kS₃ under conjugation; half are class functions
    let s3 = s3();
    let (a, act) = conjugation_algebra(&s3);
    let classes = s3.group().conjugacy_classes();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut verdicts = Vec::new();
    for k in 0..10 {
        let mut trace = vec![Scalar::zero(); 6];
        for class in &classes {
            let v = rng.gen_range(-4..=4);
            for &x in class {
                trace[x] = Scalar::int(if k % 2 == 1 { rng.gen_range(-4..=4) } else { v });
            }
        }
        let v = check_trace(s3.h(), &a, &act, &trace, &ModularPair::trivial(s3.h()))?;
        if v.sigma_trace.pass && v.invariance.pass != v.ibp.pass {
            return Ok((false, format!("trace {k}: invariance {} but IBP {}", v.invariance, v.ibp)));
        }
        verdicts.push((v.sigma_trace.pass, v.invariance.pass));
    }
    let invariant = verdicts.iter().filter(|v| v.1).count();
    Ok((true, format!("χ_τ: {d}; 10 traces, {invariant} invariant, all consistent")))
}

fn c10_bicrossed() -> Outcome {
    let b = bicrossed_from_factorization(&FactorizationData::s3_c3_c2())?;
    let h = &b.realization.presentation;
    let dim = h.finite_basis(FINITE_MAX_LEN)?.len();
    let r = check_hopf_axioms_exhaustive(h, FINITE_MAX_LEN)?;
    let (ok, d) = from_report(&r);
    Ok((ok && dim == 6, format!("dimension {dim}; {d}")))
}

fn c11_cohomology() -> Outcome {
    let ground = build_ground()?;
    let z2 = z(2);
    let z3 = z(3);
    let (a, act) = sign_algebra(&z2);
    let twisted = TypeA::twisted(z2.h(), a, act, &z2.element(1))?;
    let instances = vec![
        ("H = k", MatrixCocyclic::materialize(&CmModule::new(&ground, &ModularPair::trivial(&ground))?, 5)?),
        ("CM kℤ/2", MatrixCocyclic::materialize(&CmModule::new(z2.h(), &ModularPair::trivial(z2.h()))?, 5)?),
        ("CM kℤ/3", MatrixCocyclic::materialize(&CmModule::new(z3.h(), &ModularPair::trivial(z3.h()))?, 5)?),
        ("twisted k[t]/(t²−1)", MatrixCocyclic::materialize(&twisted, 5)?),
    ];
    let mut parts = Vec::new();
    for (name, m) in &instances {
        let (l, b, agree) = cohomology(m, 3)?;
        let ok = agree.pass && l.checks.pass() && b.checks.pass();
        let d = format!("{name}: HC = {:?}", l.cyclic_dims());
        if !ok {
            return Ok((false, format!("{d}; {agree}; {}; {}", l.checks, b.checks)));
        }
        parts.push(d);
    }
    Ok((true, parts.join("; ")))
}

fn c12_coefficients() -> Outcome {
    let z2 = z(2);
    let z3 = z(3);
    let s3 = s3();
    let one = |_: usize| Scalar::one();
    let cases = [
        (&z2, z2.pair(one, 0)?),
        (&z2, z2.pair(one, 1)?),
        (&z2, z2.pair(sign(&z2), 0)?),
        (&z3, z3.pair(one, 1)?),
        (&s3, s3.pair(sign(&s3), 0)?),
    ];
    for (kg, pair) in &cases {
        let m = mpi_to_sayd(kg.h(), pair)?;
        let back = extract_pair(&m)?;
        if back.delta.values() != pair.delta.values() || back.sigma != kg.h().normalize(&pair.sigma)? {
            return Ok((false, "mpi_to_sayd does not round-trip".into()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let classes = s3.group().conjugacy_classes();
    for k in 0..20 {
        let chi = |s: bool| {
            let kg = &s3;
            move |a: usize| if s && kg.order_of(a).is_multiple_of(2) { Scalar::int(-1) } else { Scalar::one() }
        };
        let m = s3.regular_graded(rng.gen_range(0..6), chi(rng.gen()))?;
        let n = if rng.gen() {
            s3.conjugation_module(&classes[rng.gen_range(0..classes.len())], chi(rng.gen()))?
        } else {
            s3.regular_graded(rng.gen_range(0..6), chi(rng.gen()))?
        };
        let t = tensor_yd_ayd(s3.h(), &m, &n)?;
        if !check_ayd(s3.h(), &t, AntipodePower::ayd(Side::Left, Side::Left), 0)?.pass {
            return Ok((false, format!("tensor {k} is not AYD")));
        }
    }
    let h = build_cm_h1()?;
    let pair = h1_pair(&h);
    let m = mpi_to_sayd(&h, &pair)?;
    let yd = staic_transform(&h, &pair, &m)?;
    if staic_inverse(&h, &pair, &yd)? != m {
        return Ok((false, "transform does not round-trip on H₁".into()));
    }
    let pair = s3.pair(sign(&s3), 0)?;
    let m = s3.regular_graded(2, sign(&s3))?.convert_action(s3.h(), false)?;
    if staic_inverse(s3.h(), &pair, &staic_transform(s3.h(), &pair, &m)?)? != m {
        return Ok((false, "transform does not round-trip on kS₃".into()));
    }
    Ok((true, "5 pairs, 20 tensors, 2 transforms".into()))
}

type Criterion = (u32, &'static str, u64, fn() -> Outcome);

const CRITERIA: [Criterion; 12] = [
    (1, "H₁ structure certification", 10, c1_h1_structure),
    (2, "antipode non-involutivity", 5, c2_antipode_order),
    (3, "MPI resolution on H₁", 5, c3_mpi_resolution),
    (4, "SL_q(2) twisted antipode", 5, c4_slq2),
    (5, "H₁ cyclic cocycles", 30, c5_cocycles),
    (6, "cocyclic axiom suites", 60, c6_axiom_suites),
    (7, "unstable AYD breaks periodicity", 5, c7_unstable),
    (8, "type C ≅ CM", 30, c8_type_c_is_cm),
    (9, "characteristic map and integration by parts", 30, c9_char_map),
    (10, "bicrossed S₃ = C₃·C₂", 10, c10_bicrossed),
    (11, "cohomology oracle agreement", 120, c11_cohomology),
    (12, "coefficient correspondences", 60, c12_coefficients),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (id, name, budget, run) in CRITERIA {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = took <= Duration::from_secs(budget);
        let tag = if ok && in_time { "PASS" } else { "FAIL" };
        let late = if in_time { "" } else { " over budget" };
        println!("criterion {id:>2} {tag} [{:.2}s / {budget}s{late}] {name}: {detail}", took.as_secs_f64());
        if !(ok && in_time) {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
