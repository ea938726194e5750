//! Eccentric distance sum and related distance invariants on unicyclic
//! graphs, named extremal families, exhaustive enumeration up to
//! isomorphism, and an audit layer that checks closed forms and extremal
//! claims against exhaustive computation.

pub mod audit;
pub mod enumeration;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod tables;

use thiserror::Error;

pub use enumeration::{
    enumerate_unicyclic, unicyclic_canonical_code, ClassFilter, UnicyclicClass, UnicyclicCode, UnicyclicEnumerator,
};
pub use families::{parse_family_spec, FamilySpec, NamedTag};
pub use formulas::{eval, Evaluation, FormulaId, Rank};
pub use graph::{degree_distance, eds, girth, wiener, Graph, InvariantReport};
pub use matching::matching_number;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Matching(#[from] matching::MatchingError),
    #[error(transparent)]
    Family(#[from] families::FamilyError),
    #[error(transparent)]
    Enumeration(#[from] enumeration::EnumerationError),
    #[error(transparent)]
    Formula(#[from] formulas::FormulaError),
    #[error(transparent)]
    Audit(#[from] audit::AuditError),
}
