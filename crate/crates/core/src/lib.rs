//! Exact enumeration and verification toolkit for Motzkin words and their
//! polyominoes.
//!
//! - [`word`]: words, exhaustive generation, area / semiperimeter /
//!   interior-point / last-letter statistics, ASCII drawings
//! - [`bijections`]: maps to Motzkin paths, restricted Catalan words,
//!   primitive Łukasiewicz paths and UDU-avoiding Dyck paths
//! - [`series`]: truncated power series with polynomial coefficients and the
//!   generating functions built on them
//! - [`formulas`]: closed forms, recurrences, triangles, asymptotics
//! - [`verify`]: the cross-check suite
//! - [`export`]: CSV, b-file and JSON writers

pub mod bijections;
pub mod error;
pub mod export;
pub mod formulas;
pub mod series;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::{MotzkinWord, PolyominoStats};
