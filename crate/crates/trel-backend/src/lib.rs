//! Relational semantics for tangled circuit diagrams: diagrams evaluate to
//! relations between powers of a (data x group) alphabet, with the braiding
//! acting by conjugation. Plain group relations are the singleton-data
//! special case.

mod axioms;
mod eval;
mod relation;
mod sampling;
mod structure;
mod validate;

pub use axioms::axiom_suite;
pub use eval::{eval_in_env, eval_trel, scalar_of, Scalar, TrelEnv};
pub use relation::{enumerate_coords, Alphabet, Coord, GRelation, RelTuple};
pub use sampling::{random_validated_relation, random_validated_relation_decorated};
pub use structure::{apply_braid, braid_relation, structure_relation, BraidSign, StructureKind};
pub use validate::{conj_tuple_coords, validate_relation, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrelError {
    #[error("interface mismatch: {0}")]
    InterfaceMismatch(String),
    #[error("relations live over different groups")]
    GroupMismatch,
    #[error("component {0:?} has no binding")]
    UnboundComponent(String),
    #[error("binding for {component:?} is not an arrow: {violation}")]
    InvalidBinding { component: String, violation: Violation },
    #[error("relation of width {in_width} -> {out_width} is not a scalar")]
    NotScalar { in_width: usize, out_width: usize },
    #[error("width mismatch: {0}")]
    WidthMismatch(String),
    #[error(transparent)]
    Diagram(#[from] diagram_core::DiagramError),
}

#[cfg(test)]
mod shareability {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn relations_are_shareable_across_threads() {
        assert_send_sync::<crate::GRelation>();
        assert_send_sync::<crate::TrelEnv>();
    }
}
