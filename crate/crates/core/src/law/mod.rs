//! Law registry and execution engine.

mod check;
mod config;
pub mod corpus;
pub mod laws;
pub mod registry;
mod report;

pub use check::{assert_smooth_equal, scaled_residual, Sides, SmoothCheck, MAX_WITNESSES};
pub use config::{fnv1a, CheckConfig, ConfigError, Sampler, MAX_DEGREE_CAP};
pub use laws::registry;
pub use registry::{find_law, lint, parse_suites, run_registry, LawError, LawFn, LawSpec, Suite};
pub use report::{ConfigSummary, LawReport, Model, PartReport, RunReport, Summary, REPORT_VERSION};
