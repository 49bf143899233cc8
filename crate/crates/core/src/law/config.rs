use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::smooth::Point;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("samples must be at least 1")]
    NoSamples,
    #[error("tolerance must be a positive finite number, got {0}")]
    BadTolerance(f64),
    #[error("sample box [{0}, {1}] must have finite bounds with lo < hi")]
    BadBox(f64, f64),
    #[error("max degree must lie in 1..={max}, got {got}")]
    BadDegree { got: usize, max: usize },
    #[error("unknown suite `{given}`; valid suites: {valid}")]
    UnknownSuite { given: String, valid: String },
    #[error("unknown law id `{0}`")]
    UnknownLaw(String),
}

/// Largest accepted REL degree bound. Beyond this every `!!X` window is far
/// past the enumeration cap anyway.
pub const MAX_DEGREE_CAP: usize = 6;

/// Run-wide settings shared by every law check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckConfig {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    /// Every coordinate is drawn uniformly from `[lo, hi]`.
    #[serde(skip)]
    pub sample_box: (f64, f64),
    pub max_degree: usize,
    #[serde(skip)]
    pub time_budget: Option<Duration>,
    /// When false, elapsed times are reported as zero so that reports are
    /// byte-identical between runs.
    #[serde(skip)]
    pub record_timings: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 42,
            samples: 64,
            tol: 1e-9,
            sample_box: (-2.0, 2.0),
            max_degree: 3,
            time_budget: None,
            record_timings: false,
        }
    }
}

impl CheckConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.samples == 0 {
            return Err(ConfigError::NoSamples);
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(ConfigError::BadTolerance(self.tol));
        }
        let (lo, hi) = self.sample_box;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(ConfigError::BadBox(lo, hi));
        }
        if self.max_degree == 0 || self.max_degree > MAX_DEGREE_CAP {
            return Err(ConfigError::BadDegree { got: self.max_degree, max: MAX_DEGREE_CAP });
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_box(mut self, lo: f64, hi: f64) -> Self {
        self.sample_box = (lo, hi);
        self
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = d;
        self
    }
}

/// 64-bit FNV-1a, used to turn law ids into stream keys.
pub fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic sample points keyed by `(seed, stream key, index)`.
///
/// Each index gets its own generator, so points do not depend on how many
/// were drawn before or on which thread drew them.
#[derive(Debug, Clone)]
pub struct Sampler {
    key: u64,
    lo: f64,
    hi: f64,
}

impl Sampler {
    pub fn new(seed: u64, stream: &str, sample_box: (f64, f64)) -> Sampler {
        Sampler { key: splitmix(seed ^ splitmix(fnv1a(stream))), lo: sample_box.0, hi: sample_box.1 }
    }

    pub fn sample_box(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn rng(&self, index: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(splitmix(self.key ^ splitmix(index as u64)))
    }

    pub fn point(&self, index: usize, dim: usize) -> Point {
        let mut rng = self.rng(index);
        let coords = (0..dim).map(|_| rng.gen_range(self.lo..=self.hi)).collect();
        Point::new(coords).expect("box bounds are finite")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        CheckConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_settings() {
        assert_eq!(CheckConfig::default().with_samples(0).validate(), Err(ConfigError::NoSamples));
        assert!(CheckConfig::default().with_tol(-1.0).validate().is_err());
        assert!(CheckConfig::default().with_box(1.0, 1.0).validate().is_err());
        assert!(CheckConfig::default().with_max_degree(0).validate().is_err());
    }

    #[test]
    fn sampler_is_deterministic_and_keyed() {
        let a = Sampler::new(7, "law.a", (-2.0, 2.0));
        let b = Sampler::new(7, "law.b", (-2.0, 2.0));
        assert_eq!(a.point(3, 4), a.point(3, 4));
        assert_ne!(a.point(3, 4), b.point(3, 4));
        assert!(a.point(0, 8).coords().iter().all(|c| (-2.0..=2.0).contains(c)));
    }
}
