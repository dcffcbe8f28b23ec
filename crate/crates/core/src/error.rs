use thiserror::Error;

use crate::category::{MorId, ObId};
use crate::report::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A table refers to an object, morphism or element that does not exist.
    #[error("{what} index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    /// Structurally malformed input that is not a range error (duplicate
    /// table entries, wrong table lengths).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// The input is well-formed but violates the laws of its structure.
    #[error("invalid {what}: {report}")]
    Invalid {
        what: &'static str,
        report: ValidationReport,
    },

    #[error("quiver has a directed cycle through vertex {vertex}")]
    CyclicQuiver { vertex: usize },

    #[error("enumeration exceeded the cap of {cap} candidate checks")]
    EnumerationCapExceeded { cap: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("object {0} is not initial")]
    NotInitial(ObId),

    #[error("object {0} is not terminal")]
    NotTerminal(ObId),

    #[error("no limit exists for diagram {diagram}")]
    MissingLimit { diagram: String },

    #[error("no colimit exists for diagram {diagram}")]
    MissingColimit { diagram: String },

    #[error("transport is not strictly functorial at the pair ({g}, {f})")]
    StrictnessViolation { g: MorId, f: MorId },

    #[error("no universal morphism from object {object}")]
    NoUniversalMorphism { object: ObId },
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }

    pub(crate) fn range(what: &'static str, index: usize, bound: usize) -> Self {
        Error::IndexOutOfRange { what, index, bound }
    }
}

/// Counts candidate checks made by an exhaustive search and stops it once the
/// configured cap is exceeded.
#[derive(Debug, Clone)]
pub struct Budget {
    cap: usize,
    used: usize,
}

pub const DEFAULT_CAP: usize = 1_000_000;

impl Budget {
    pub fn new(cap: usize) -> Self {
        Budget { cap, used: 0 }
    }

    pub fn used(&self) -> usize {
        self.used
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            Err(Error::EnumerationCapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn charge(&mut self, n: usize) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.cap {
            Err(Error::EnumerationCapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }
}
