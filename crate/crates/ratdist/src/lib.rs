//! File formats and command implementations for the `ratdist` tool.
//!
//! The exact arithmetic lives in `ratdist-core`; this crate adds JSON and
//! CSV encodings and one function per subcommand, each returning a
//! [`CommandResult`] that the binary prints and turns into an exit code.

pub mod commands;
pub mod format;

pub use commands::{
    cmd_approx, cmd_multiples, cmd_scan, cmd_transform, cmd_verify, ApproxLimits, CommandResult, Direction, Payload,
    Shape, Status,
};
