//! Instance generators, the theorem suite, corpus reports and the
//! counterexample search.

pub mod builtin;
pub mod generators;
pub mod report;
pub mod search;
pub mod suite;

pub use report::{verify_corpus, InstanceReport, Report, Summary};
pub use suite::{run_theorem_suite, CorpusInstance, Status, TheoremVerdict, THEOREMS};
