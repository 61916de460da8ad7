use std::path::PathBuf;

use thiserror::Error;

use crate::spec::SpecError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Spec { path: String, source: SpecError },
    #[error(transparent)]
    Algebra(#[from] paramres_core::Error),
    #[error("cannot access {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("no parameter sequence named `{0}`")]
    UnknownSop(String),
    #[error("the ring has no parameter sequence; add a [sop <name>] section")]
    NoSop,
    #[error("`{0}` is not a system of parameters")]
    NotSop(String),
    #[error("unknown built-in ring `{0}`")]
    UnknownRing(String),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
