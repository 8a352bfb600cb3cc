//! Command-line front end: expression parsing, subcommands and reports.

pub mod commands;
pub mod expr;
pub mod report;

pub use commands::{execute, run, Cli, CliError, Command, Format, Outcome};
pub use expr::{parse_expr, parse_poly, parse_ring, Expr, ParseError, ParseErrorKind, Vocabulary};
pub use report::Record;
