//! Residual reports shared by the field lab, the verification suites and
//! the CLI: one labeled entry per checked equation with the measured
//! max-magnitude residual and its tolerance verdict.

use serde::{Deserialize, Serialize};

/// Default tolerance for identities evaluated on analytic modes.
pub const ANALYTIC_TOL: f64 = 1e-12;

/// Tolerance for Richardson-extrapolated grid results.
pub const GRID_EXTRAP_TOL: f64 = 1e-8;

/// One checked equation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualEntry {
    pub equation: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualEntry {
    pub fn new(equation: impl Into<String>, max_residual: f64, tolerance: f64) -> ResidualEntry {
        ResidualEntry {
            equation: equation.into(),
            max_residual,
            tolerance,
            pass: max_residual.is_finite() && max_residual <= tolerance,
        }
    }
}

/// An ordered list of checked equations; serializes as a plain JSON array.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResidualReport {
    pub entries: Vec<ResidualEntry>,
}

impl ResidualReport {
    pub fn new() -> ResidualReport {
        ResidualReport::default()
    }

    pub fn record(&mut self, equation: impl Into<String>, max_residual: f64, tolerance: f64) {
        self.entries
            .push(ResidualEntry::new(equation, max_residual, tolerance));
    }

    pub fn push(&mut self, entry: ResidualEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: ResidualReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ResidualEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}
