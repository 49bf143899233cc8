use serde::Serialize;

use super::CheckConfig;

/// Which model a law is checked in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Model {
    #[serde(rename = "SMOOTH")]
    Smooth,
    #[serde(rename = "REL")]
    Rel,
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Model::Smooth => "SMOOTH",
            Model::Rel => "REL",
        })
    }
}

/// Outcome of one equation inside a law (e.g. one of the two `dem` diagrams).
#[derive(Debug, Clone, Serialize)]
pub struct PartReport {
    pub label: String,
    pub pass: bool,
    pub checked: u64,
    pub max_residual: f64,
}

/// Outcome of one law check.
#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub id: String,
    pub paper_ref: String,
    pub model: Model,
    /// Whether the law held on every sampled point or enumerated pair.
    pub pass: bool,
    /// False for negative controls, which are expected to fail.
    pub expect_pass: bool,
    /// Sample points evaluated (SMOOTH) or input elements enumerated (REL).
    pub checked: u64,
    pub window: String,
    pub tol: f64,
    /// Scale-aware residual for SMOOTH; number of mismatching pairs for REL.
    pub max_residual: f64,
    pub witnesses: Vec<String>,
    pub parts: Vec<PartReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed: f64,
}

impl LawReport {
    /// True when the outcome differs from what the registry expects.
    pub fn unexpected(&self) -> bool {
        self.pass != self.expect_pass
    }

    pub fn part(&self, label: &str) -> Option<&PartReport> {
        self.parts.iter().find(|p| p.label == label)
    }

    /// A failed report for a check that could not be carried out at all.
    pub fn errored(id: &str, model: Model, message: String) -> LawReport {
        LawReport {
            id: id.to_string(),
            paper_ref: String::new(),
            model,
            pass: false,
            expect_pass: true,
            checked: 0,
            window: String::new(),
            tol: 0.0,
            max_residual: f64::INFINITY,
            witnesses: vec![message.clone()],
            parts: Vec::new(),
            note: Some(message),
            elapsed: 0.0,
        }
    }
}

pub const REPORT_VERSION: &str = "1.0";

#[derive(Debug, Clone, Serialize)]
pub struct ConfigSummary {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub max_degree: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Laws whose outcome differs from the expectation (includes negative
    /// controls that unexpectedly held).
    pub unexpected: usize,
}

/// A whole run: the document written by `check --format json`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub version: String,
    pub config: ConfigSummary,
    pub suites: Vec<String>,
    pub laws: Vec<LawReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(cfg: &CheckConfig, suites: Vec<String>, laws: Vec<LawReport>) -> RunReport {
        let passed = laws.iter().filter(|l| l.pass).count();
        let unexpected = laws.iter().filter(|l| l.unexpected()).count();
        RunReport {
            version: REPORT_VERSION.to_string(),
            config: ConfigSummary { seed: cfg.seed, samples: cfg.samples, tol: cfg.tol, max_degree: cfg.max_degree },
            suites,
            summary: Summary { total: laws.len(), passed, failed: laws.len() - passed, unexpected },
            laws,
        }
    }

    /// Every law behaved as expected.
    pub fn ok(&self) -> bool {
        self.summary.unexpected == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only serializable data")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        s.push_str("# Law check report\n\n");
        s.push_str(&format!(
            "seed {} · samples {} · tol {:e} · max degree {} · suites {}\n\n",
            self.config.seed,
            self.config.samples,
            self.config.tol,
            self.config.max_degree,
            self.suites.join(", ")
        ));
        s.push_str("| law | model | result | expected | checked | max residual | witness |\n");
        s.push_str("|---|---|---|---|---|---|---|\n");
        for l in &self.laws {
            let result = if l.pass { "pass" } else { "fail" };
            let expected = if l.expect_pass { "pass" } else { "fail" };
            let witness = l.witnesses.first().map(String::as_str).unwrap_or("");
            s.push_str(&format!(
                "| {} | {} | {}{} | {} | {} | {:.3e} | {} |\n",
                l.id,
                l.model,
                result,
                if l.unexpected() { " (UNEXPECTED)" } else { "" },
                expected,
                l.checked,
                l.max_residual,
                witness.replace('|', "\\|")
            ));
        }
        s.push_str(&format!(
            "\n{} laws: {} held, {} failed, {} unexpected\n",
            self.summary.total, self.summary.passed, self.summary.failed, self.summary.unexpected
        ));
        s
    }
}
