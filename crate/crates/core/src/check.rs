use serde::Serialize;

/// Outcome of one named verification inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of cases examined.
    pub cases: usize,
    /// First counterexample, or a short summary on success.
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, cases: usize, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: true, cases, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, cases: usize, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, cases, detail: detail.into() }
    }

    /// Runs `cases`, stopping at the first one that returns `Err(description)`.
    pub fn run<I, T>(name: impl Into<String>, cases: I, mut test: impl FnMut(T) -> Result<(), String>) -> Self
    where
        I: IntoIterator<Item = T>,
    {
        let name = name.into();
        let mut count = 0;
        for case in cases {
            count += 1;
            if let Err(detail) = test(case) {
                return Self::fail(name, count, detail);
            }
        }
        Self::pass(name, count, "ok")
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
