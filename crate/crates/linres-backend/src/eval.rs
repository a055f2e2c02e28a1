//! Evaluation of circuit diagrams into canonical linear systems.

use diagram_core::{typecheck, DiagramTerm, Multigraph};
use tcd_dsl::{LinresBindings, LinresComponent};

use crate::components::{
    braid_system, cap_system, component_system, counit_system, cup_system, fork_system,
    identity_system, join_system, unit_system, ComponentKind,
};
use crate::system::LinearSystem;
use crate::LinresError;

/// Structural recursion over the term; the result is canonical.
pub fn eval_linres(
    term: &DiagramTerm,
    mg: &Multigraph,
    bindings: &LinresBindings,
) -> Result<LinearSystem, LinresError> {
    typecheck(term, mg)?;
    eval_rec(term, bindings)
}

fn eval_rec(term: &DiagramTerm, bindings: &LinresBindings) -> Result<LinearSystem, LinresError> {
    match term {
        DiagramTerm::Gen(name) => {
            let component = bindings
                .components
                .get(name)
                .ok_or_else(|| LinresError::UnboundComponent(name.clone()))?;
            let kind = match component {
                LinresComponent::Resistor(r) => ComponentKind::Resistor(r.clone()),
                LinresComponent::Capacitor(c) => ComponentKind::Capacitor(c.clone()),
                LinresComponent::Inductor(l) => ComponentKind::Inductor(l.clone()),
            };
            component_system(&kind)
        }
        DiagramTerm::Id(w) => Ok(identity_system(w.len())),
        DiagramTerm::Compose(f, g) => eval_rec(f, bindings)?.compose(&eval_rec(g, bindings)?),
        DiagramTerm::Tensor(f, g) => Ok(eval_rec(f, bindings)?.tensor(&eval_rec(g, bindings)?)),
        DiagramTerm::Braid(a, b) | DiagramTerm::BraidInv(a, b) => Ok(braid_system(a.len(), b.len())),
        DiagramTerm::Mul(_) => Ok(join_system()),
        DiagramTerm::Comul(_) => Ok(fork_system()),
        DiagramTerm::Unit(_) => Ok(unit_system()),
        DiagramTerm::Counit(_) => Ok(counit_system()),
        DiagramTerm::Cup(_) => Ok(cup_system()),
        DiagramTerm::Cap(_) => Ok(cap_system()),
    }
}
