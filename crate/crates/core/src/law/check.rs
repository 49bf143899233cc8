use std::time::{Duration, Instant};

use super::{CheckConfig, LawReport, Model, PartReport, Sampler};
use crate::smooth::{Point, SmoothError, SmoothMap};

/// Witnesses kept per law.
/// Both sides of one comparison, or why they could not be computed.
pub type Sides = Result<(Vec<f64>, Vec<f64>), SmoothError>;

pub const MAX_WITNESSES: usize = 3;

/// Scale-aware residual `max_i |aᵢ − bᵢ| / (1 + max(|aᵢ|, |bᵢ|))`.
pub fn scaled_residual(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let r = (x - y).abs() / (1.0 + x.abs().max(y.abs()));
            if r.is_nan() {
                f64::INFINITY
            } else {
                r
            }
        })
        .fold(0.0, f64::max)
}

fn absolute_residual(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).map(|r| if r.is_nan() { f64::INFINITY } else { r }).fold(0.0, f64::max)
}

fn fmt_vec(v: &[f64]) -> String {
    Point::new(v.to_vec()).map(|p| p.to_string()).unwrap_or_else(|_| format!("{v:?}"))
}

/// Accumulates the pointwise comparisons making up one SMOOTH law.
///
/// Each labelled part draws its own sample stream keyed by the law id and the
/// label, so adding a part never shifts the samples of another.
pub struct SmoothCheck {
    id: String,
    seed: u64,
    samples: usize,
    tol: f64,
    sample_box: (f64, f64),
    budget: Option<Duration>,
    start: Instant,
    record_timings: bool,
    parts: Vec<PartReport>,
    witnesses: Vec<String>,
    checked: u64,
    timed_out: bool,
    absolute: bool,
}

impl SmoothCheck {
    pub fn new(id: &str, cfg: &CheckConfig) -> SmoothCheck {
        SmoothCheck {
            id: id.to_string(),
            seed: cfg.seed,
            samples: cfg.samples,
            tol: cfg.tol,
            sample_box: cfg.sample_box,
            budget: cfg.time_budget,
            start: Instant::now(),
            record_timings: cfg.record_timings,
            parts: Vec::new(),
            witnesses: Vec::new(),
            checked: 0,
            timed_out: false,
            absolute: false,
        }
    }

    /// Measure plain absolute error instead of the scale-aware residual.
    pub fn absolute(mut self) -> SmoothCheck {
        self.absolute = true;
        self
    }

    /// Pin the tolerance for this law regardless of the run-wide setting.
    pub fn tol(mut self, tol: f64) -> SmoothCheck {
        self.tol = tol;
        self
    }

    pub fn samples(mut self, samples: usize) -> SmoothCheck {
        self.samples = samples;
        self
    }

    pub fn sample_box(mut self, lo: f64, hi: f64) -> SmoothCheck {
        self.sample_box = (lo, hi);
        self
    }

    pub fn current_tol(&self) -> f64 {
        self.tol
    }

    fn over_budget(&mut self) -> bool {
        if let Some(b) = self.budget {
            if self.start.elapsed() > b {
                if !self.timed_out {
                    self.witnesses.insert(0, format!("time budget of {:?} exceeded", b));
                    self.witnesses.truncate(MAX_WITNESSES);
                }
                self.timed_out = true;
            }
        }
        self.timed_out
    }

    fn witness(&mut self, w: String) {
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    /// Compare two maps at sampled points. Errors only on a dimension mismatch.
    pub fn compare(&mut self, label: &str, lhs: &SmoothMap, rhs: &SmoothMap) -> Result<bool, SmoothError> {
        if lhs.dom() != rhs.dom() {
            return Err(SmoothError::dims(format!("{label}: domains"), lhs.dom(), rhs.dom()));
        }
        if lhs.cod() != rhs.cod() {
            return Err(SmoothError::dims(format!("{label}: codomains"), lhs.cod(), rhs.cod()));
        }
        Ok(self.compare_with(label, lhs.dom(), |x| Ok((lhs.eval(x)?.into_coords(), rhs.eval(x)?.into_coords()))))
    }

    /// Compare two pointwise computations of the same quantity at sampled
    /// points of `ℝ^dim`.
    pub fn compare_with(
        &mut self,
        label: &str,
        dim: usize,
        sides: impl Fn(&Point) -> Result<(Vec<f64>, Vec<f64>), SmoothError>,
    ) -> bool {
        let sampler = Sampler::new(self.seed, &format!("{}/{}", self.id, label), self.sample_box);
        let mut part = PartReport { label: label.to_string(), pass: true, checked: 0, max_residual: 0.0 };
        for i in 0..self.samples {
            if self.over_budget() {
                part.pass = false;
                break;
            }
            let x = sampler.point(i, dim);
            self.record(&mut part, &x.to_string(), sides(&x));
        }
        self.close(part)
    }

    /// Compare at explicitly chosen inputs (spot checks against closed forms).
    pub fn compare_at(&mut self, label: &str, cases: &[(String, Sides)]) -> bool {
        let mut part = PartReport { label: label.to_string(), pass: true, checked: 0, max_residual: 0.0 };
        for (input, sides) in cases {
            self.record(&mut part, input, sides.clone());
        }
        self.close(part)
    }

    /// Record a yes/no obligation that is not a residual comparison.
    pub fn require(&mut self, label: &str, holds: bool, detail: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !holds {
            self.witness(format!("{label}: {}", detail()));
        }
        self.parts.push(PartReport {
            label: label.to_string(),
            pass: holds,
            checked: 1,
            max_residual: if holds { 0.0 } else { f64::INFINITY },
        });
        holds
    }

    fn record(&mut self, part: &mut PartReport, input: &str, sides: Result<(Vec<f64>, Vec<f64>), SmoothError>) {
        part.checked += 1;
        self.checked += 1;
        let residual = match &sides {
            Ok((a, b)) if self.absolute => absolute_residual(a, b),
            Ok((a, b)) => scaled_residual(a, b),
            Err(_) => f64::INFINITY,
        };
        part.max_residual = part.max_residual.max(residual);
        if residual > self.tol {
            part.pass = false;
            let label = part.label.clone();
            match sides {
                Ok((a, b)) => self.witness(format!(
                    "{label} at {input}: lhs {} vs rhs {} (residual {residual:.3e})",
                    fmt_vec(&a),
                    fmt_vec(&b)
                )),
                Err(e) => self.witness(format!("{label} at {input}: {e}")),
            }
        }
    }

    fn close(&mut self, part: PartReport) -> bool {
        let pass = part.pass;
        self.parts.push(part);
        pass
    }

    pub fn finish(self) -> LawReport {
        let pass = !self.timed_out && self.parts.iter().all(|p| p.pass);
        let max_residual = self.parts.iter().map(|p| p.max_residual).fold(0.0, f64::max);
        LawReport {
            id: self.id,
            paper_ref: String::new(),
            model: Model::Smooth,
            pass,
            expect_pass: true,
            checked: self.checked,
            window: format!("{} samples per part on [{}, {}]^n", self.samples, self.sample_box.0, self.sample_box.1),
            tol: self.tol,
            max_residual,
            witnesses: self.witnesses,
            parts: self.parts,
            note: None,
            elapsed: if self.record_timings { self.start.elapsed().as_secs_f64() } else { 0.0 },
        }
    }
}

/// Compare two maps at `cfg.samples` seeded points of `cfg.sample_box`.
pub fn assert_smooth_equal(
    law_id: &str,
    lhs: &SmoothMap,
    rhs: &SmoothMap,
    cfg: &CheckConfig,
) -> Result<LawReport, SmoothError> {
    let mut check = SmoothCheck::new(law_id, cfg);
    check.compare("equal", lhs, rhs)?;
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflexive_comparison_has_zero_residual() {
        let e = SmoothMap::exp();
        let r = assert_smooth_equal("t.refl", &e, &e, &CheckConfig::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_residual, 0.0);
        assert_eq!(r.checked, 64);
    }

    #[test]
    fn exp_is_not_identity() {
        let r =
            assert_smooth_equal("t.neg", &SmoothMap::exp(), &SmoothMap::identity(1), &CheckConfig::default()).unwrap();
        assert!(!r.pass);
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn mismatched_dimensions_error() {
        let err = assert_smooth_equal("t.dims", &SmoothMap::exp(), &SmoothMap::mul(), &CheckConfig::default());
        assert!(err.is_err());
    }

    #[test]
    fn residual_is_scale_aware() {
        assert!(scaled_residual(&[1e6], &[1e6 + 1.0]) < 1e-5);
        assert!((scaled_residual(&[0.0], &[1.0]) - 0.5).abs() < 1e-15);
    }
}
