//! Linear-relation semantics for analogue circuits: diagrams of resistors,
//! capacitors, and inductors evaluate to homogeneous exact-rational
//! relations over boundary current/voltage ports with first-order state.

mod components;
mod eval;
mod system;

pub use components::{
    braid_system, cap_system, component_system, counit_system, cup_system, fork_system,
    identity_system, join_system, unit_system, ComponentKind,
};
pub use eval::eval_linres;
pub use system::{rat, rref, LinearSystem, PortVar, Quantity, Rat, Side};

#[derive(Debug, Clone, thiserror::Error)]
pub enum LinresError {
    #[error("interface mismatch: {expected} output wires vs {found} input wires")]
    InterfaceMismatch { expected: usize, found: usize },
    #[error("component {0:?} has no binding")]
    UnboundComponent(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error(transparent)]
    Diagram(#[from] diagram_core::DiagramError),
}
