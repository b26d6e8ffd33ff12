//! Command-line surface of the rickart ring engine.

mod commands;
pub mod element;
pub mod emit;
mod error;
pub mod expr;
pub mod source;
pub mod spec_doc;

pub use commands::{run_command, Outcome};
pub use element::parse_element;
pub use emit::{emit_certificate, Format};
pub use error::{CliError, Result};
pub use expr::{parse_construction, print};
pub use spec_doc::{parse_ring_spec, serialize_ring};
