//! Validation reports: per-law verdicts with the first witnessing tuple.

use std::fmt;

/// One violated law together with the first witness found.
/// `witness` holds element names, in the order the law quantifies them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at ({})", self.law, self.witness.join(", "))
    }
}

/// Outcome of running a validator: empty means every law holds.
/// Validators record at most one witness per law.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn record(&mut self, law: &'static str, witness: Vec<String>) {
        if self.violations.iter().all(|v| v.law != law) {
            self.violations.push(Violation { law, witness });
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "all laws hold")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}
