//! Instance files, fixtures, seeded generation, Graphviz export, JSON
//! reports, the verification suite and the `mhl` command line, on top of
//! [`mhl_core`].

pub mod cli;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod instance;
pub mod report;
pub mod verify;

pub use error::InputError;
pub use instance::{parse_instance, parse_instance_file, read_instance, Instance, InstanceFile};
pub use report::{Report, Verdict};
