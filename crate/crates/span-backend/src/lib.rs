//! Span-of-finite-sets semantics for structure-only tangle diagrams, and
//! coloring counts with an independent brute-force oracle.

mod coloring;
mod span;

pub use coloring::{brute_force_colorings, brute_force_solutions, eval_colorings};
pub use span::{BTuple, FiniteSpan};

#[derive(Debug, Clone, thiserror::Error)]
pub enum SpanError {
    #[error("diagram is not closed: {0}")]
    NotClosed(String),
    #[error("diagram contains named components")]
    HasComponents,
    #[error("span interface mismatch: width {expected} vs {found}")]
    InterfaceMismatch { expected: usize, found: usize },
    #[error("span is not an arrow: {0}")]
    NotAnArrow(String),
    #[error(transparent)]
    Diagram(#[from] diagram_core::DiagramError),
}
