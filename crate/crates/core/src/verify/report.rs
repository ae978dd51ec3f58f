use std::fmt;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The outcome of one named identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// Which identity the check exercises.
    pub reference: String,
    pub status: Status,
    /// A failing input and what went wrong, or the reason for a skip.
    pub counterexample: Option<String>,
    pub millis: u128,
}

impl Check {
    /// Times `f`; `Err(msg)` becomes a failure carrying `msg`.
    pub fn run(name: &str, reference: &str, f: impl FnOnce() -> Result<(), String>) -> Check {
        let start = Instant::now();
        let outcome = f();
        let millis = start.elapsed().as_millis();
        let (status, counterexample) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(msg) => (Status::Fail, Some(msg)),
        };
        Check {
            name: name.to_string(),
            reference: reference.to_string(),
            status,
            counterexample,
            millis,
        }
    }

    pub fn skipped(name: &str, reference: &str, reason: &str) -> Check {
        Check {
            name: name.to_string(),
            reference: reference.to_string(),
            status: Status::Skipped,
            counterexample: Some(reason.to_string()),
            millis: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(f, "{tag} {} ({} ms)", self.name, self.millis)?;
        if let Some(c) = &self.counterexample {
            write!(f, ": {c}")?;
        }
        Ok(())
    }
}

/// Checks sorted by name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report { checks }
    }

    pub fn extend(&mut self, more: Vec<Check>) {
        self.checks.extend(more);
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let fails = self.failures().count();
        let skips = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Skipped)
            .count();
        write!(
            f,
            "{} checks, {} failed, {} skipped",
            self.checks.len(),
            fails,
            skips
        )
    }
}

/// `Err` with a readable mismatch message unless `got == want`.
pub fn expect_eq<T: PartialEq + fmt::Display>(
    what: impl fmt::Display,
    got: &T,
    want: &T,
) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}
