//! Law specifications, the registry lint, and the parallel runner.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use super::{CheckConfig, ConfigError, LawReport, Model};
use crate::rel::RelError;
use crate::smooth::SmoothError;

/// A group of laws that can be selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    SmoothAxioms,
    Exponentials,
    Rigs,
    Dynamics,
    Rel,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::SmoothAxioms, Suite::Exponentials, Suite::Rigs, Suite::Dynamics, Suite::Rel];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SmoothAxioms => "smooth-axioms",
            Suite::Exponentials => "exponentials",
            Suite::Rigs => "rigs",
            Suite::Dynamics => "dynamics",
            Suite::Rel => "rel",
        }
    }

    pub fn parse(s: &str) -> Result<Suite, ConfigError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| ConfigError::UnknownSuite {
            given: s.to_string(),
            valid: Suite::ALL.map(Suite::name).join(", "),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a law could not be evaluated at all. Ordinary failures are reported
/// in the [`LawReport`], not raised.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum LawError {
    #[error(transparent)]
    Smooth(#[from] SmoothError),
    #[error(transparent)]
    Rel(#[from] RelError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

pub type LawFn = fn(&str, &CheckConfig) -> Result<LawReport, LawError>;

/// One registered law: where it comes from, the two sides it compares, and
/// the procedure that checks it.
#[derive(Clone)]
pub struct LawSpec {
    pub id: &'static str,
    pub suite: Suite,
    pub model: Model,
    /// Citation with a quoted anchor phrase.
    pub paper_ref: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
    /// How the law is instantiated and compared.
    pub method: &'static str,
    /// False for negative controls.
    pub expect_pass: bool,
    /// Infrastructure checks that cite no source text.
    pub plumbing: bool,
    pub run: LawFn,
}

impl fmt::Debug for LawSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LawSpec").field("id", &self.id).field("suite", &self.suite).finish_non_exhaustive()
    }
}

impl LawSpec {
    pub fn new(
        id: &'static str,
        suite: Suite,
        model: Model,
        paper_ref: &'static str,
        sides: (&'static str, &'static str),
        method: &'static str,
        run: LawFn,
    ) -> LawSpec {
        LawSpec {
            id,
            suite,
            model,
            paper_ref,
            lhs: sides.0,
            rhs: sides.1,
            method,
            expect_pass: true,
            plumbing: false,
            run,
        }
    }

    /// Mark as a deliberately false law that must fail.
    pub fn negative(mut self) -> LawSpec {
        self.expect_pass = false;
        self
    }

    pub fn plumbing(mut self) -> LawSpec {
        self.plumbing = true;
        self
    }

    /// Run the check and stamp the registry metadata onto the report.
    pub fn execute(&self, cfg: &CheckConfig) -> LawReport {
        let mut report = match (self.run)(self.id, cfg) {
            Ok(r) => r,
            Err(e) => LawReport::errored(self.id, self.model, e.to_string()),
        };
        report.id = self.id.to_string();
        report.paper_ref = self.paper_ref.to_string();
        report.model = self.model;
        report.expect_pass = self.expect_pass;
        if !self.expect_pass {
            report.note.get_or_insert_with(|| "negative control: expected to fail".to_string());
        }
        report
    }

    /// Multi-line description used by `explain`.
    pub fn explain(&self) -> String {
        let expectation = if self.expect_pass { "holds" } else { "must FAIL (negative control)" };
        format!(
            "{id}\n  model:     {model}\n  suite:     {suite}\n  reference: {r}\n  lhs:       {l}\n  rhs:       {rh}\n  method:    {m}\n  expected:  {expectation}\n",
            id = self.id,
            model = self.model,
            suite = self.suite,
            r = self.paper_ref,
            l = self.lhs,
            rh = self.rhs,
            m = self.method,
        )
    }

    /// The quoted anchor phrase of the reference, if there is one.
    pub fn quote_anchor(&self) -> Option<&'static str> {
        let start = self.paper_ref.find('"')?;
        let rest = &self.paper_ref[start + 1..];
        let end = rest.find('"')?;
        Some(&rest[..end]).filter(|q| q.trim().chars().count() >= 4)
    }
}

/// Problems with a list of specs: duplicate ids, missing quote anchors on
/// non-plumbing laws, or empty sides.
pub fn lint(specs: &[LawSpec]) -> Vec<String> {
    let mut problems = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for s in specs {
        if !seen.insert(s.id) {
            problems.push(format!("{}: duplicate id", s.id));
        }
        if !s.plumbing && s.quote_anchor().is_none() {
            problems.push(format!("{}: reference has no quoted anchor", s.id));
        }
        if s.lhs.is_empty() || s.rhs.is_empty() {
            problems.push(format!("{}: missing a side", s.id));
        }
    }
    problems
}

/// Resolve suite names; an empty selection means every suite.
pub fn parse_suites(names: &[String]) -> Result<Vec<Suite>, ConfigError> {
    if names.is_empty() {
        return Ok(Suite::ALL.to_vec());
    }
    let mut out: Vec<Suite> = names.iter().map(|n| Suite::parse(n)).collect::<Result<_, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Look a law up by id.
pub fn find_law(id: &str) -> Result<LawSpec, ConfigError> {
    super::laws::registry().into_iter().find(|s| s.id == id).ok_or_else(|| ConfigError::UnknownLaw(id.to_string()))
}

/// Run every law in the selected suites, in parallel, ordered by id.
pub fn run_registry(suites: &[Suite], cfg: &CheckConfig) -> Result<Vec<LawReport>, ConfigError> {
    cfg.validate()?;
    let specs: Vec<LawSpec> = super::laws::registry().into_iter().filter(|s| suites.contains(&s.suite)).collect();
    let mut reports: Vec<LawReport> = specs.par_iter().map(|s| s.execute(cfg)).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::law::laws::registry;

    #[test]
    fn registry_is_clean() {
        let specs = registry();
        assert!(lint(&specs).is_empty(), "{:?}", lint(&specs));
        assert!(specs.len() >= 60, "only {} laws", specs.len());
    }

    #[test]
    fn lint_catches_problems() {
        let mut specs = registry();
        let mut dup = specs[0].clone();
        dup.paper_ref = "Def 9.9";
        specs.push(dup);
        let problems = lint(&specs);
        assert!(problems.iter().any(|p| p.contains("duplicate")));
        assert!(problems.iter().any(|p| p.contains("no quoted anchor")));
    }

    #[test]
    fn suites_parse() {
        assert_eq!(parse_suites(&[]).unwrap().len(), 5);
        assert_eq!(parse_suites(&["rel".into(), "rel".into()]).unwrap(), vec![Suite::Rel]);
        let err = parse_suites(&["bogus".into()]).unwrap_err();
        assert!(err.to_string().contains("smooth-axioms"), "{err}");
    }

    #[test]
    fn every_suite_is_populated() {
        let specs = registry();
        for s in Suite::ALL {
            assert!(specs.iter().any(|l| l.suite == s), "{s} is empty");
        }
        let negatives: Vec<_> = specs.iter().filter(|s| !s.expect_pass).map(|s| s.id).collect();
        for id in ["neg.identity_as_exp", "neg.zero_as_exp", "rel.neg.epsilon_as_exp"] {
            assert!(negatives.contains(&id), "{id} missing");
        }
    }

    #[test]
    fn unknown_law_is_reported() {
        assert_eq!(find_law("nope").unwrap_err(), ConfigError::UnknownLaw("nope".into()));
        assert_eq!(find_law("rel.cd3").unwrap().paper_ref, "\"Linear Rule: η ε = 1\"");
    }
}
