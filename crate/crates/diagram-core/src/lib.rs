//! Core types for tangled circuit diagrams: multigraphs of components,
//! diagram terms, the typing judgement, and desugaring of derived
//! generators.
//!
//! All values are immutable after construction and safe to share across
//! threads.

mod desugar;
mod multigraph;
mod term;
mod typecheck;

pub use desugar::desugar;
pub use multigraph::{Multigraph, Word};
pub use term::{DiagramTerm, FlatTerm};
pub use typecheck::{typecheck, Interface};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("interface mismatch: codomain {expected} does not meet domain {found}")]
    InterfaceMismatch { expected: String, found: String },
}
