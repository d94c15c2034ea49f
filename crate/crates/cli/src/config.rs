use std::path::PathBuf;

use gcdirac::algebra::{StructureConstantsTable, TableData};
use gcdirac::dirac::Branch;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchSelection {
    Positive,
    Negative,
    #[default]
    Both,
}

impl BranchSelection {
    pub fn branches(self) -> &'static [Branch] {
        match self {
            BranchSelection::Positive => &[Branch::Positive],
            BranchSelection::Negative => &[Branch::Negative],
            BranchSelection::Both => &Branch::BOTH,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
    /// Replacement structure constants; `None` runs against the built-in
    /// table. Left unvalidated so that a malformed table shows up as a failed
    /// check.
    pub table: Option<TableData>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 0,
            format: Format::Text,
            table: None,
        }
    }
}

/// Axis ranges and grid sizes for the spinor-ratio surface.
#[derive(Debug, Clone)]
pub struct Fig1Config {
    pub m_min: f64,
    pub m_max: f64,
    pub m_steps: usize,
    pub p_min: f64,
    pub p_max: f64,
    pub p_steps: usize,
    pub branch: BranchSelection,
    pub output: Option<PathBuf>,
}

impl Default for Fig1Config {
    fn default() -> Self {
        Self {
            m_min: 0.5,
            m_max: 5.0,
            m_steps: 50,
            p_min: -5.0,
            p_max: 5.0,
            p_steps: 50,
            branch: BranchSelection::Both,
            output: None,
        }
    }
}

fn check_axis(name: &str, min: f64, max: f64, steps: usize) -> Result<(), CliError> {
    if !(min.is_finite() && max.is_finite()) {
        return Err(CliError::Usage(format!("{name} range must be finite")));
    }
    if min > max {
        return Err(CliError::Usage(format!("{name}-min {min} exceeds {name}-max {max}")));
    }
    match (min == max, steps) {
        (true, 1) => Ok(()),
        (true, _) => Err(CliError::Usage(format!(
            "{name} range is a single point; {name}-steps must be 1, got {steps}"
        ))),
        (false, n) if n >= 2 => Ok(()),
        (false, n) => Err(CliError::Usage(format!(
            "{name}-steps must be at least 2 for a non-degenerate range, got {n}"
        ))),
    }
}

impl Fig1Config {
    pub fn validate(&self) -> Result<(), CliError> {
        check_axis("m", self.m_min, self.m_max, self.m_steps)?;
        check_axis("p", self.p_min, self.p_max, self.p_steps)?;
        if self.m_min <= 0.0 {
            return Err(CliError::Usage(format!(
                "mass range must be strictly positive, got m-min {}",
                self.m_min
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Builtin {
    #[default]
    Gc,
    Complex,
    Real,
    Quaternion,
}

impl Builtin {
    pub fn table(self) -> StructureConstantsTable {
        match self {
            Builtin::Gc => StructureConstantsTable::gc(),
            Builtin::Complex => StructureConstantsTable::complex(),
            Builtin::Real => StructureConstantsTable::real(),
            Builtin::Quaternion => StructureConstantsTable::quaternion(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PropsConfig {
    /// JSON table file; takes precedence over `builtin`.
    pub table: Option<PathBuf>,
    pub builtin: Builtin,
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
}

impl Default for PropsConfig {
    fn default() -> Self {
        Self {
            table: None,
            builtin: Builtin::Gc,
            samples: 1000,
            seed: 0,
            format: Format::Text,
        }
    }
}
