//! Command-line front end for `elliptic_weyl`: problem parsing, presets for
//! the worked examples, report assembly and text/JSON output.

pub mod app;
pub mod emit;
pub mod error;
pub mod input;
pub mod report;

pub use error::CliError;
pub use input::{presets, ProblemInput};
pub use report::{run_report, Report};
