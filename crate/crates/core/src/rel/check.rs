use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{universe, Elem, RelError, RelMor};
use crate::law::{CheckConfig, LawReport, Model, PartReport, MAX_WITNESSES};

/// Accumulates exact comparisons of relations on bounded windows.
pub struct RelCheck {
    id: String,
    degree: usize,
    budget: Option<Duration>,
    start: Instant,
    record_timings: bool,
    parts: Vec<PartReport>,
    witnesses: Vec<String>,
    checked: u64,
    mismatches: u64,
    timed_out: bool,
}

/// Pairs present on one side only, for one input.
struct Diff {
    input: Elem,
    lhs_only: Vec<Elem>,
    rhs_only: Vec<Elem>,
}

impl RelCheck {
    pub fn new(id: &str, cfg: &CheckConfig) -> RelCheck {
        RelCheck {
            id: id.to_string(),
            degree: cfg.max_degree,
            budget: cfg.time_budget,
            start: Instant::now(),
            record_timings: cfg.record_timings,
            parts: Vec::new(),
            witnesses: Vec::new(),
            checked: 0,
            mismatches: 0,
            timed_out: false,
        }
    }

    /// Cap the degree for this law below the run-wide setting. Used by the
    /// laws whose windows grow too fast to enumerate at the default depth.
    pub fn max_degree(mut self, d: usize) -> RelCheck {
        self.degree = self.degree.min(d);
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn witness(&mut self, w: String) {
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    fn over_budget(&mut self) -> bool {
        if let Some(b) = self.budget {
            if !self.timed_out && self.start.elapsed() > b {
                self.timed_out = true;
                self.witnesses.insert(0, format!("time budget of {b:?} exceeded"));
                self.witnesses.truncate(MAX_WITNESSES);
            }
        }
        self.timed_out
    }

    /// Compare `r` and `s` on every input and output of rank at most the degree.
    pub fn compare(&mut self, label: &str, r: &RelMor, s: &RelMor) -> Result<bool, RelError> {
        let d = self.degree;
        self.compare_at_degree(label, d, r, s)
    }

    pub fn compare_at_degree(&mut self, label: &str, d: usize, r: &RelMor, s: &RelMor) -> Result<bool, RelError> {
        for (side, x, y) in [("domains", r.dom(), s.dom()), ("codomains", r.cod(), s.cod())] {
            if x != y {
                return Err(RelError::TypeMismatch {
                    context: format!("{label}: {side}"),
                    expected: x.to_string(),
                    found: y.to_string(),
                });
            }
        }
        let inputs = universe(r.dom(), d)?;
        let mut part = PartReport { label: label.to_string(), pass: true, checked: 0, max_residual: 0.0 };
        if self.over_budget() {
            part.pass = false;
            self.parts.push(part);
            return Ok(false);
        }
        let diffs: Vec<Result<Option<Diff>, RelError>> = inputs
            .par_iter()
            .map(|a| {
                let (ir, is) = (r.image(a, d)?, s.image(a, d)?);
                if ir == is {
                    return Ok(None);
                }
                Ok(Some(Diff {
                    input: a.clone(),
                    lhs_only: ir.difference(&is).cloned().collect(),
                    rhs_only: is.difference(&ir).cloned().collect(),
                }))
            })
            .collect();
        part.checked = inputs.len() as u64;
        self.checked += inputs.len() as u64;
        for diff in diffs {
            let Some(diff) = diff? else { continue };
            let n = (diff.lhs_only.len() + diff.rhs_only.len()) as u64;
            part.pass = false;
            part.max_residual += n as f64;
            self.mismatches += n;
            for (side, bs) in [("lhs", &diff.lhs_only), ("rhs", &diff.rhs_only)] {
                for b in bs {
                    self.witness(format!("{label}: ({}, {b}) only in {side}", diff.input));
                }
            }
        }
        if self.over_budget() {
            part.pass = false;
        }
        let pass = part.pass;
        self.parts.push(part);
        Ok(pass)
    }

    /// Compare two finite sets of pairs produced by some other means.
    pub fn compare_pairs(&mut self, label: &str, lhs: &BTreeSet<(Elem, Elem)>, rhs: &BTreeSet<(Elem, Elem)>) -> bool {
        let only_l: Vec<_> = lhs.difference(rhs).cloned().collect();
        let only_r: Vec<_> = rhs.difference(lhs).cloned().collect();
        let n = (only_l.len() + only_r.len()) as u64;
        for (side, ps) in [("lhs", &only_l), ("rhs", &only_r)] {
            for (a, b) in ps {
                self.witness(format!("{label}: ({a}, {b}) only in {side}"));
            }
        }
        self.checked += lhs.len().max(rhs.len()) as u64;
        self.mismatches += n;
        self.parts.push(PartReport {
            label: label.to_string(),
            pass: n == 0,
            checked: lhs.len().max(rhs.len()) as u64,
            max_residual: n as f64,
        });
        n == 0
    }

    /// Record a yes/no obligation, such as a membership spot check.
    pub fn require(&mut self, label: &str, holds: bool, detail: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !holds {
            self.mismatches += 1;
            self.witness(format!("{label}: {}", detail()));
        }
        self.parts.push(PartReport {
            label: label.to_string(),
            pass: holds,
            checked: 1,
            max_residual: if holds { 0.0 } else { 1.0 },
        });
        holds
    }

    pub fn finish(self) -> LawReport {
        LawReport {
            pass: !self.timed_out && self.parts.iter().all(|p| p.pass),
            id: self.id,
            paper_ref: String::new(),
            model: Model::Rel,
            expect_pass: true,
            checked: self.checked,
            window: format!("inputs and outputs of rank ≤ {}", self.degree),
            tol: 0.0,
            max_residual: self.mismatches as f64,
            witnesses: self.witnesses,
            parts: self.parts,
            note: None,
            elapsed: if self.record_timings { self.start.elapsed().as_secs_f64() } else { 0.0 },
        }
    }
}

/// Compare two relations exactly on inputs and outputs of rank at most `degree`.
pub fn assert_rel_equal(law_id: &str, r: &RelMor, s: &RelMor, degree: usize) -> Result<LawReport, RelError> {
    let cfg = CheckConfig { max_degree: degree, ..CheckConfig::default() };
    let mut check = RelCheck::new(law_id, &cfg);
    check.compare("equal", r, s)?;
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rel::RelObj;

    #[test]
    fn epsilon_is_not_copy_dual() {
        let x2 = RelObj::base(2);
        let r = assert_rel_equal("t", &RelMor::epsilon(&x2), &RelMor::copy_dual_e(&x2), 3).unwrap();
        assert!(!r.pass);
        let w = r.witnesses.join("\n");
        assert!(w.contains("([], x) only in rhs"), "{w}");
        assert!(w.contains("([], y) only in rhs"), "{w}");
        assert!(w.contains("([x, x], x) only in rhs"), "{w}");
    }

    #[test]
    fn identity_equals_itself() {
        let x = RelObj::bang(&RelObj::base(2));
        let id = RelMor::identity(&x);
        let r = assert_rel_equal("t", &id, &id, 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.checked, 10);
    }

    #[test]
    fn mismatched_types_error() {
        let a = RelMor::identity(&RelObj::base(1));
        let b = RelMor::identity(&RelObj::base(2));
        assert!(assert_rel_equal("t", &a, &b, 2).is_err());
    }
}
