use serde::Serialize;

/// Outcome of a batch of exact checks: how many ran and which failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Appends another report's counts and failures, prefixing failures with its suite name.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        let name = other.suite;
        self.failures.extend(other.failures.into_iter().map(|f| format!("{name}: {f}")));
    }
}
