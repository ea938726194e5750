//! Enumeration-backed verification of the extremal results, bounds and
//! closed forms, with report types shared by the CLI.

mod bounds;
mod checks;
mod formula_audit;
mod ranking;
mod reproduce;

use thiserror::Error;

pub use bounds::{all_bound_reports, check_pendant_bound, check_pendant_pair_bound, BoundKind, BoundReport};
pub use checks::{
    check_degree_bounds, check_lemma, check_theorem, compare_prediction, matching_oracle_check, oracle_fingerprints,
    CheckReport, Finding, LemmaId, TheoremId,
};
pub use formula_audit::{documented_delta, formula_audit, AuditedFormula, FormulaAuditRow, FormulaStatus};
pub use ranking::{rank_classes, rank_many, rank_order, RankingRecord};
pub use reproduce::{compare_cell, reproduce_tables, CellReport, CellStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("no unicyclic graph of order {n} has matching number {m}")]
    EmptyClass { n: usize, m: usize },
    #[error("out of range: {0}")]
    Range(String),
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("unknown identifier {0:?}")]
    UnknownId(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error(transparent)]
    Enumeration(#[from] crate::enumeration::EnumerationError),
    #[error(transparent)]
    Family(#[from] crate::families::FamilyError),
    #[error(transparent)]
    Matching(#[from] crate::matching::MatchingError),
    #[error(transparent)]
    Formula(#[from] crate::formulas::FormulaError),
}
