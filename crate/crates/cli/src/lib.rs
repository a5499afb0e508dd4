//! Command-line front end: instance files, generators, solver commands and
//! verification campaigns that emit checkable certificates.

pub mod app;
pub mod campaigns;
pub mod certificate;
pub mod check;
pub mod error;
pub mod io;

pub use app::run;
pub use certificate::{recheck, Certificate};
pub use error::CliError;
