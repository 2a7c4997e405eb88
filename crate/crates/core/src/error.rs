// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in a cyclotomic field")]
    DivisionByZero,
    /// A documented precondition (parameter range, family shape) was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An arithmetic result contradicts an invariant that must hold exactly.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    /// The automatic analysis cannot conclude and needs a human.
    #[error("manual analysis required: {0}")]
    ManualAnalysis(String),
    #[error("closure exceeded the bound of {0} elements")]
    BoundExceeded(usize),
    #[error("group/representation mismatch: {0}")]
    Mismatch(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
