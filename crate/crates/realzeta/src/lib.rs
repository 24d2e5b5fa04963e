//! Real, signed and complexified topological zeta functions of real plane
//! curve germs, computed from an explicit embedded resolution.

pub mod algebraic;
pub mod arith;
pub mod covering;
pub mod dual_graph;
pub mod monodromy;
pub mod parse;
pub mod report;
pub mod resolution;
pub mod zeta;

use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, ThisError)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("input error: {0}")]
    Input(String),
    #[error("algebra error: {0}")]
    Algebra(String),
    #[error("resolution error: {0}")]
    Resolution(String),
    #[error("zeta error: {0}")]
    Zeta(String),
}

pub type Result<T> = std::result::Result<T, Error>;
