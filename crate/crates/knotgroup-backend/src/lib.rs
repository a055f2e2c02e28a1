//! Group-presentation semantics for tangles: diagrams evaluate to cospans
//! of presentations by pushout, closed diagrams to knot-group
//! presentations, with Tietze simplification and homomorphism counting.

mod cospan;
mod homcount;
mod presentation;
mod tietze;

pub use cospan::{eval_presentation, structure_cospan, CospanKind, PresentationCospan};
pub use homcount::{hom_count, hom_count_budgeted, DEFAULT_GENERATOR_LIMIT};
pub use presentation::{
    cyclic_canonical, cyclic_reduce, default_names, free_reduce, gen_lit, invert, lit_gen,
    substitute, GWord, Presentation,
};
pub use tietze::{tietze_simplify, DEFAULT_MAX_PASSES};

#[derive(Debug, Clone, thiserror::Error)]
pub enum KnotGroupError {
    #[error("diagram is not closed: {0}")]
    NotClosed(String),
    #[error("diagram contains named components")]
    HasComponents,
    #[error("cospan interface mismatch: width {expected} vs {found}")]
    InterfaceMismatch { expected: usize, found: usize },
    #[error("bad word: {0}")]
    BadWord(String),
    #[error("hom-count budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    Diagram(#[from] diagram_core::DiagramError),
}
