//! Command-line workbench for planar open book monodromies: a text format
//! for factorizations, a catalog of lens space monodromies, scenario
//! verifications and structured reports.

pub mod catalog;
pub mod cli;
pub mod dsl;
pub mod plumbing_io;
pub mod report;
pub mod scenarios;
