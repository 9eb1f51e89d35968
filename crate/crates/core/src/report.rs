use std::collections::BTreeMap;

/// One identity check: `residual <= threshold`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Check {
    pub residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

/// Named residuals with verdicts, plus unjudged diagnostics and notices.
/// Keys are kept sorted so serialised reports are stable.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ResidualReport {
    checks: BTreeMap<String, Check>,
    diagnostics: BTreeMap<String, f64>,
    notices: Vec<String>,
}

impl ResidualReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, name: impl Into<String>, residual: f64, threshold: f64) {
        let pass = residual <= threshold;
        self.checks.insert(name.into(), Check { residual, threshold, pass });
    }

    /// Records a residual that carries no verdict.
    pub fn diagnostic(&mut self, name: impl Into<String>, value: f64) {
        self.diagnostics.insert(name.into(), value);
    }

    pub fn notice(&mut self, msg: impl Into<String>) {
        self.notices.push(msg.into());
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.get(name)
    }

    pub fn checks(&self) -> impl Iterator<Item = (&str, &Check)> {
        self.checks.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn diagnostics(&self) -> impl Iterator<Item = (&str, f64)> {
        self.diagnostics.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn notices(&self) -> &[String] {
        &self.notices
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, c)| !c.pass).map(|(k, _)| k.as_str()).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.values().map(|c| c.residual).fold(0.0, f64::max)
    }

    /// Folds `other` in with every key prefixed by `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: ResidualReport) {
        for (k, v) in other.checks {
            self.checks.insert(format!("{prefix}{k}"), v);
        }
        for (k, v) in other.diagnostics {
            self.diagnostics.insert(format!("{prefix}{k}"), v);
        }
        self.notices.extend(other.notices);
    }
}
