use std::fmt;

use thiserror::Error;

/// Which Motzkin-word constraint a letter breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordViolation {
    FirstNotOne,
    ZeroLetter,
    RiseTooLarge,
    EqualAdjacent,
}

impl fmt::Display for WordViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordViolation::FirstNotOne => "first letter not 1",
            WordViolation::ZeroLetter => "letter below 1",
            WordViolation::RiseTooLarge => "rise larger than 1",
            WordViolation::EqualAdjacent => "equal adjacent",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Motzkin word at position {position}: {reason}")]
    InvalidWord { position: usize, reason: WordViolation },
    #[error("invalid restricted Catalan word at position {position}: {reason}")]
    InvalidCatalanWord { position: usize, reason: String },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("malformed path at step {step}: {reason}")]
    MalformedPath { step: usize, reason: String },
    #[error("path touches the axis before its end (after step {step})")]
    NotPrimitive { step: usize },
    #[error("path has a horizontal step at index {step}")]
    HasFlatStep { step: usize },
    #[error("Dyck path contains the factor UDU at step {step}")]
    ContainsUdu { step: usize },
    #[error("divisor is not a unit: {0}")]
    NonUnitDivisor(String),
    #[error("square root needs constant term 1")]
    NonUnitConstant,
    #[error("exponent of {var} exceeds its cap {cap}")]
    CapExceeded { var: char, cap: u32 },
    #[error("exact shift by x^{shift} failed: coefficient of x^{index} is nonzero")]
    ShiftResidue { shift: usize, index: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
