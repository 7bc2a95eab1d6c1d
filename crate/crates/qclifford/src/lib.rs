//! File formats and command implementations for the `qclifford` tool.
//!
//! ```
//! use qclifford::commands::{census, table, Format};
//!
//! let sig = "Cl(0,2)".parse().unwrap();
//! assert!(table(sig, Format::Csv).unwrap().starts_with(",1,e1,e2,e12\n"));
//! assert!(census(sig).contains("\"minus\": 3"));
//! ```

pub mod commands;
pub mod error;
pub mod formats;

pub use error::{CliError, Result};
