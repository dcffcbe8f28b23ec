use std::fmt;

use serde::Serialize;

/// One violated law, with the indices that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: &'static str,
    pub witness: Vec<usize>,
    pub detail: String,
}

/// The outcome of a validator: empty iff every checked law holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: &'static str, witness: Vec<usize>, detail: impl Into<String>) {
        self.violations.push(Violation {
            law,
            witness,
            detail: detail.into(),
        });
    }

    /// Appends another report, prefixing each detail with `context`.
    pub fn extend_from(&mut self, context: &str, other: ValidationReport) {
        for v in other.violations {
            self.violations.push(Violation {
                law: v.law,
                witness: v.witness,
                detail: format!("{context}: {}", v.detail),
            });
        }
    }

    pub fn has(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn into_result(self, what: &'static str) -> crate::Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(crate::Error::Invalid { what, report: self })
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}: {}", v.law, v.detail)?;
        }
        Ok(())
    }
}
