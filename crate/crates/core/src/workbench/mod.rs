//! Document parsing, analysis reports and DOT output behind the `ftw` binary.

mod document;
mod dot;
mod report;

pub use document::{parse_document, to_table_document, Derivation, Document, TableEntry};
pub use dot::{emit_dot, emit_dot_frame, emit_dot_poset};
pub use report::{run_analyze, run_iso, AnalyzeOptions};
