pub mod characters;
pub mod config;
pub mod error;
pub mod face;
pub mod gset;
pub mod indicators;
pub mod linalg;
pub mod modules;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod repr;
pub mod suites;

pub use config::Caps;
pub use error::{Error, Result};
