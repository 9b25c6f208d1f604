//! The `mi` command-line front end.

pub mod app;
pub mod spec;
pub mod svg;

pub use app::run;
