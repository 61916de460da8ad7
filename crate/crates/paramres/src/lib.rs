//! Ring-spec files, experiment orchestration and reports on top of
//! `paramres-core`.

pub mod corpus;
pub mod error;
pub mod experiments;
pub mod report;
pub mod spec;

pub use error::{HarnessError, Result};
pub use experiments::{reproduce_example, Experiment, Settings};
pub use report::{ExperimentReport, Status, Value, Verdict};
pub use spec::{LoadedRing, RingSpecFile, SpecError};
