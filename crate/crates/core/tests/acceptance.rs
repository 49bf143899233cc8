//! One line per acceptance criterion. Exits non-zero if any fails.
//!
//! Run alone with `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use diffexp::law::corpus::corpus;
use diffexp::law::{find_law, run_registry, CheckConfig, LawReport, RunReport, Suite};

type Criterion = fn(&CheckConfig) -> Verdict;

struct Verdict {
    pass: bool,
    detail: String,
}

fn run(ids: &[&str], cfg: &CheckConfig) -> Vec<LawReport> {
    ids.iter().map(|id| find_law(id).unwrap_or_else(|e| panic!("{e}")).execute(cfg)).collect()
}

/// Every report in `reports` passed, or the first one that did not.
fn all_pass(reports: &[LawReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.pass) {
        None => Ok(()),
        Some(r) => Err(format!("{} failed: {}", r.id, r.witnesses.first().cloned().unwrap_or_default())),
    }
}

fn max_residual(reports: &[LawReport]) -> f64 {
    reports.iter().map(|r| r.max_residual).fold(0.0, f64::max)
}

fn verdict(result: Result<String, String>) -> Verdict {
    match result {
        Ok(detail) => Verdict { pass: true, detail },
        Err(detail) => Verdict { pass: false, detail },
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn differential_axioms(cfg: &CheckConfig) -> Verdict {
    let ((reports, fd, n), took) = timed(|| {
        let ids = ["smooth.cd1", "smooth.cd2", "smooth.cd3", "smooth.cd4", "smooth.cd5", "smooth.cd6", "smooth.cd7"];
        (run(&ids, cfg), run(&["smooth.fd_oracle"], cfg), corpus(cfg).len())
    });
    verdict((|| {
        if n < 50 {
            return Err(format!("corpus has only {n} maps"));
        }
        all_pass(&reports)?;
        all_pass(&fd)?;
        if took > Duration::from_secs(60) {
            return Err(format!("took {took:?}"));
        }
        Ok(format!(
            "{n} maps × {} points, max residual {:.1e}; finite differences within {:.1e}; {:.1?}",
            cfg.samples,
            max_residual(&reports),
            fd[0].max_residual,
            took
        ))
    })())
}

fn exponential_diagrams(cfg: &CheckConfig) -> Verdict {
    let ids =
        ["dem.left", "dem.right", "exp.real", "exp.complex", "exp.split", "exp.dual", "exp.pointwise", "exp.tangent"];
    let reports = run(&ids, cfg);
    let negatives = run(&["neg.identity_as_exp", "neg.zero_as_exp"], cfg);
    verdict((|| {
        all_pass(&reports)?;
        if let Some(r) = negatives.iter().find(|r| r.pass) {
            return Err(format!("{} held", r.id));
        }
        Ok(format!(
            "{} laws on [−3,3]ⁿ, max residual {:.1e}; identity and zero rejected",
            ids.len(),
            max_residual(&reports)
        ))
    })())
}

fn induced_multiplications(cfg: &CheckConfig) -> Verdict {
    let ids = ["rigs.mult.real", "rigs.mult.pointwise", "rigs.mult.dual", "rigs.mult.complex", "rigs.mult.split"];
    let reports = run(&ids, cfg);
    verdict(all_pass(&reports).map(|_| {
        format!(
            "five closed forms at {} points each, max residual {:.1e}",
            reports[0].parts[0].checked,
            max_residual(&reports)
        )
    }))
}

fn rig_round_trip(cfg: &CheckConfig) -> Verdict {
    let reports = run(&["rigs.roundtrip", "rigs.laws"], cfg);
    verdict((|| {
        all_pass(&reports)?;
        let rt = &reports[0];
        for needed in ["complex", "split"] {
            if !rt.parts.iter().any(|p| p.label.contains(needed)) {
                return Err(format!("round trip does not cover {needed}"));
            }
        }
        Ok(format!("round trip and D² identity max residual {:.1e}; rig laws for every induced rig", rt.max_residual))
    })())
}

fn dynamics(cfg: &CheckConfig) -> Verdict {
    let reports = run(&["dyn.exp_solution", "dyn.canonical_solution", "dyn.flat", "dyn.uniqueness"], cfg);
    verdict(all_pass(&reports).map(|_| {
        format!(
            "solutions, canonical solutions, flat identities, uniqueness; max residual {:.1e}",
            max_residual(&reports)
        )
    }))
}

fn rel_exactness(cfg: &CheckConfig) -> Verdict {
    let ids = [
        "rel.comonad",
        "rel.comonoid",
        "rel.seely",
        "rel.bialgebra",
        "rel.d1",
        "rel.d2",
        "rel.d3",
        "rel.d4",
        "rel.d5",
        "rel.cd1",
        "rel.cd2",
        "rel.cd3",
        "rel.cd4",
    ];
    let (reports, took) = timed(|| run(&ids, cfg));
    verdict((|| {
        all_pass(&reports)?;
        if let Some(r) = reports.iter().find(|r| !r.witnesses.is_empty()) {
            return Err(format!("{} reported a counterexample", r.id));
        }
        if took > Duration::from_secs(120) {
            return Err(format!("took {took:?}"));
        }
        let pairs: u64 = reports.iter().map(|r| r.checked).sum();
        Ok(format!(
            "{} families, {pairs} comparisons, zero counterexamples at degree {}; {:.1?}",
            ids.len(),
            cfg.max_degree,
            took
        ))
    })())
}

fn bang_algebras(cfg: &CheckConfig) -> Verdict {
    let ids = [
        "rel.copy_dual_dea",
        "rel.mu_dea",
        "rel.copy_dual_roundtrip",
        "rel.mu_roundtrip",
        "rel.characterizations_agree",
    ];
    let reports = run(&ids, cfg);
    let eps = &run(&["rel.neg.epsilon_as_exp"], cfg)[0];
    verdict((|| {
        all_pass(&reports)?;
        if eps.pass || eps.witnesses.is_empty() {
            return Err("ε was not rejected with a witness".into());
        }
        Ok(format!("copy-dual and μ hold exactly, characterizations agree; ε rejected: {}", eps.witnesses[0]))
    })())
}

fn reproducibility(cfg: &CheckConfig) -> Verdict {
    let names: Vec<String> = Suite::ALL.iter().map(|s| s.name().to_string()).collect();
    let report = || RunReport::new(cfg, names.clone(), run_registry(&Suite::ALL, cfg).unwrap());
    let (a, b) = (report(), report());
    verdict((|| {
        if a.to_json() != b.to_json() {
            return Err("JSON reports differ".into());
        }
        for run in [&a, &b] {
            for id in ["neg.identity_as_exp", "neg.zero_as_exp", "rel.neg.epsilon_as_exp"] {
                let law = run.laws.iter().find(|l| l.id == id).ok_or(format!("{id} missing"))?;
                if law.pass {
                    return Err(format!("{id} held"));
                }
            }
        }
        if !a.ok() {
            return Err(format!("{} laws did not behave as registered", a.summary.unexpected));
        }
        Ok(format!(
            "{} laws, {} bytes of JSON identical across two runs; negative controls failed both times",
            a.laws.len(),
            a.to_json().len()
        ))
    })())
}

fn main() {
    let cfg = CheckConfig::default();
    let criteria: [(&str, Criterion); 8] = [
        ("differential axioms over the corpus", differential_axioms),
        ("exponential diagrams and their negatives", exponential_diagrams),
        ("induced multiplications match closed forms", induced_multiplications),
        ("rig round trip", rig_round_trip),
        ("dynamical systems", dynamics),
        ("relational model exactness", rel_exactness),
        ("differential exponential algebras", bang_algebras),
        ("reproducible reports", reproducibility),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check(&cfg);
        failed += usize::from(!v.pass);
        println!("criterion {}: {} {name}: {}", i + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
