//! Verification harness and table emitter over `snakelab-core`.

pub mod cache;
pub mod checks;
pub mod table;

pub use checks::{catalog, run_all, run_check, Check, CheckResult, Status, UnknownCheck};
pub use table::{emit_table, Format, Object};
