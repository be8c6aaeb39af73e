//! Command-line tool and JSON formats for [`sergeev_core`].

pub mod cli;
pub mod json;
pub mod report;

pub use report::VerificationReport;
