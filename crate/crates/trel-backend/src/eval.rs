//! Functorial evaluation of diagram terms into relations.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use diagram_core::{typecheck, DiagramTerm, Multigraph, Word};
use group_core::FiniteGroup;
use tcd_dsl::{TrelBindings, TupleEntry};

use crate::relation::{Alphabet, GRelation, RelTuple};
use crate::structure::{braid_relation, structure_relation, BraidSign, StructureKind};
use crate::validate::{conj_tuple_coords, validate_relation};
use crate::TrelError;

/// A scalar relation `I -> I` is either empty or the one-point set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Scalar {
    Empty,
    Point,
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Empty => f.write_str("empty"),
            Scalar::Point => f.write_str("point"),
        }
    }
}

pub fn scalar_of(r: &GRelation) -> Result<Scalar, TrelError> {
    if r.in_width() != 0 || r.out_width() != 0 {
        return Err(TrelError::NotScalar {
            in_width: r.in_width(),
            out_width: r.out_width(),
        });
    }
    Ok(if r.is_empty() { Scalar::Empty } else { Scalar::Point })
}

/// Evaluation context: the group, per-wire data alphabets, and resolved,
/// validated component relations.
pub struct TrelEnv {
    group: Arc<FiniteGroup>,
    wire_alpha: BTreeMap<String, Alphabet>,
    components: BTreeMap<String, GRelation>,
}

impl TrelEnv {
    /// Resolves bindings against a multigraph: widths are checked against
    /// component interfaces, seeds are closed under diagonal conjugation
    /// where requested, and every bound relation must pass validation.
    pub fn resolve(mg: &Multigraph, bindings: &TrelBindings) -> Result<TrelEnv, TrelError> {
        let group = Arc::new(bindings.group.clone());
        let mut wire_alpha = BTreeMap::new();
        for wire in mg.wires() {
            let alpha = match bindings.data.get(wire) {
                Some(symbols) => Alphabet::new(symbols.clone()),
                None => Alphabet::singleton(),
            };
            wire_alpha.insert(wire.clone(), alpha);
        }
        let mut components = BTreeMap::new();
        for (name, spec) in &bindings.components {
            let (dom, cod) = mg
                .component(name)
                .ok_or_else(|| TrelError::UnboundComponent(format!(
                    "binding names component {:?} which is not in the multigraph",
                    name
                )))?;
            let in_alpha = word_alphabets(&wire_alpha, dom);
            let out_alpha = word_alphabets(&wire_alpha, cod);
            let width = in_alpha.len() + out_alpha.len();
            let mut tuples: BTreeSet<RelTuple> = BTreeSet::new();
            for entry_tuple in &spec.tuples {
                if entry_tuple.len() != width {
                    return Err(TrelError::WidthMismatch(format!(
                        "component {:?} has interface width {} but a bound tuple has width {}",
                        name,
                        width,
                        entry_tuple.len()
                    )));
                }
                let alphas = in_alpha.iter().chain(out_alpha.iter());
                let mut tuple = Vec::with_capacity(width);
                for (entry, alpha) in entry_tuple.iter().zip(alphas) {
                    tuple.push(resolve_entry(name, entry, alpha)?);
                }
                tuples.insert(tuple);
            }
            if spec.conj_closure {
                let seeds: Vec<RelTuple> = tuples.iter().cloned().collect();
                let probe = GRelation::new(
                    group.clone(),
                    in_alpha.clone(),
                    out_alpha.clone(),
                    Vec::new(),
                );
                for seed in seeds {
                    for h in 0..group.order() {
                        tuples.insert(conj_tuple_coords(&probe, &seed, h));
                    }
                }
            }
            let relation = GRelation::new(group.clone(), in_alpha, out_alpha, tuples);
            if let Err(violation) = validate_relation(&relation) {
                return Err(TrelError::InvalidBinding {
                    component: name.clone(),
                    violation,
                });
            }
            components.insert(name.clone(), relation);
        }
        Ok(TrelEnv { group, wire_alpha, components })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn alphabets(&self, word: &Word) -> Vec<Alphabet> {
        word_alphabets(&self.wire_alpha, word)
    }

    pub fn component(&self, name: &str) -> Option<&GRelation> {
        self.components.get(name)
    }
}

fn word_alphabets(wire_alpha: &BTreeMap<String, Alphabet>, word: &Word) -> Vec<Alphabet> {
    word.0
        .iter()
        .map(|w| wire_alpha.get(w).cloned().unwrap_or_else(Alphabet::singleton))
        .collect()
}

fn resolve_entry(
    component: &str,
    entry: &TupleEntry,
    alpha: &Alphabet,
) -> Result<(u16, u16), TrelError> {
    let data = match &entry.data {
        None => {
            if alpha.is_singleton() {
                0
            } else {
                return Err(TrelError::WidthMismatch(format!(
                    "component {:?}: coordinate needs a data symbol from a non-singleton alphabet",
                    component
                )));
            }
        }
        Some(sym) => alpha.index_of(sym).ok_or_else(|| {
            TrelError::WidthMismatch(format!(
                "component {:?}: data symbol {:?} is not in the wire's alphabet",
                component, sym
            ))
        })?,
    };
    Ok((data as u16, entry.group as u16))
}

/// Evaluates a typechecked term by structural recursion. Every `Gen` leaf
/// must be bound; the result is canonical.
pub fn eval_trel(
    term: &DiagramTerm,
    mg: &Multigraph,
    bindings: &TrelBindings,
) -> Result<GRelation, TrelError> {
    let env = TrelEnv::resolve(mg, bindings)?;
    eval_in_env(term, mg, &env)
}

/// Evaluation against an already-resolved environment; useful when one
/// program is evaluated many times.
pub fn eval_in_env(
    term: &DiagramTerm,
    mg: &Multigraph,
    env: &TrelEnv,
) -> Result<GRelation, TrelError> {
    typecheck(term, mg)?;
    eval_rec(term, env)
}

fn eval_rec(term: &DiagramTerm, env: &TrelEnv) -> Result<GRelation, TrelError> {
    let group = env.group().clone();
    let wire_alpha = |x: &str| env.alphabets(&Word::single(x)).remove(0);
    match term {
        DiagramTerm::Gen(name) => env
            .component(name)
            .cloned()
            .ok_or_else(|| TrelError::UnboundComponent(name.clone())),
        DiagramTerm::Id(word) => Ok(GRelation::identity(group, env.alphabets(word))),
        DiagramTerm::Compose(f, g) => eval_rec(f, env)?.compose(&eval_rec(g, env)?),
        DiagramTerm::Tensor(f, g) => eval_rec(f, env)?.tensor(&eval_rec(g, env)?),
        DiagramTerm::Braid(a, b) => Ok(braid_relation(
            group,
            env.alphabets(a),
            env.alphabets(b),
            BraidSign::Positive,
        )),
        DiagramTerm::BraidInv(a, b) => Ok(braid_relation(
            group,
            env.alphabets(a),
            env.alphabets(b),
            BraidSign::Negative,
        )),
        DiagramTerm::Mul(x) => Ok(structure_relation(StructureKind::Mul, group, wire_alpha(x))),
        DiagramTerm::Comul(x) => Ok(structure_relation(StructureKind::Comul, group, wire_alpha(x))),
        DiagramTerm::Unit(x) => Ok(structure_relation(StructureKind::Unit, group, wire_alpha(x))),
        DiagramTerm::Counit(x) => {
            Ok(structure_relation(StructureKind::Counit, group, wire_alpha(x)))
        }
        DiagramTerm::Cup(x) => Ok(structure_relation(StructureKind::Cup, group, wire_alpha(x))),
        DiagramTerm::Cap(x) => Ok(structure_relation(StructureKind::Cap, group, wire_alpha(x))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tcd_dsl::{parse_program, parse_trel_bindings};

    fn eval_main(program_text: &str, bindings_text: &str) -> GRelation {
        let program = parse_program(program_text).unwrap();
        let bindings = parse_trel_bindings(bindings_text).unwrap();
        let (_, term, _) = program.default_diagram().unwrap();
        eval_trel(term, &program.multigraph, &bindings).unwrap()
    }

    const S3_ONLY: &str = r#"{"group":{"builtin":"S3"},"components":{}}"#;

    #[test]
    fn unknot_is_a_point() {
        let r = eval_main("wire X\ndiagram main = cup(X) ; cap(X)", S3_ONLY);
        assert_eq!(scalar_of(&r).unwrap(), Scalar::Point);
    }

    #[test]
    fn empty_diagram_scalar() {
        let r = eval_main("wire X\ndiagram main = id(I)", S3_ONLY);
        assert_eq!(scalar_of(&r).unwrap(), Scalar::Point);
    }

    #[test]
    fn scalar_of_rejects_wide_relations() {
        let r = eval_main("wire X\ndiagram main = id(X)", S3_ONLY);
        assert!(matches!(scalar_of(&r), Err(TrelError::NotScalar { .. })));
    }

    #[test]
    fn unbound_component_reported() {
        let program = parse_program("wire X\ncomp R : X -> X\ndiagram main = R").unwrap();
        let bindings = parse_trel_bindings(S3_ONLY).unwrap();
        let (_, term, _) = program.default_diagram().unwrap();
        let err = eval_trel(term, &program.multigraph, &bindings).unwrap_err();
        assert!(matches!(err, TrelError::UnboundComponent(_)));
    }

    #[test]
    fn invalid_binding_carries_violation() {
        let program = parse_program("wire X\ncomp R : I -> X,X\ndiagram main = R ; cap(X)").unwrap();
        let bindings = parse_trel_bindings(
            r#"{"group":{"builtin":"S3"},
                "components":{"R":{"explicit":[["(1 2)","e"]]}}}"#,
        )
        .unwrap();
        let (_, term, _) = program.default_diagram().unwrap();
        let err = eval_trel(term, &program.multigraph, &bindings).unwrap_err();
        assert!(matches!(err, TrelError::InvalidBinding { .. }), "{:?}", err);
    }

    #[test]
    fn width_mismatch_in_binding() {
        let program = parse_program("wire X\ncomp R : X -> X\ndiagram main = R").unwrap();
        let bindings = parse_trel_bindings(
            r#"{"group":{"builtin":"S3"},
                "components":{"R":{"explicit":[["e","e","e"]]}}}"#,
        )
        .unwrap();
        let (_, term, _) = program.default_diagram().unwrap();
        let err = eval_trel(term, &program.multigraph, &bindings).unwrap_err();
        assert!(matches!(err, TrelError::WidthMismatch(_)));
    }

    #[test]
    fn decorated_component_evaluates_end_to_end() {
        // A data-carrying wire: the component relates (lo, g) pairs to
        // themselves only when the twist is absent, so data survives
        // through evaluation.
        let program = parse_program(
            "wire X\ncomp R : X -> X\ndiagram main = R ; comul(X) ; mul(X)",
        )
        .unwrap();
        let bindings = parse_trel_bindings(
            r#"{"group":{"builtin":"S3"},
                "data":{"X":["lo","hi"]},
                "components":{"R":{"conj_closure":[["lo:(1 2)","lo:(1 2)"],
                                                    ["hi:e","hi:e"]]}}}"#,
        )
        .unwrap();
        let (_, term, _) = program.default_diagram().unwrap();
        let rel = eval_trel(term, &program.multigraph, &bindings).unwrap();
        // R itself has the three lo-conjugates plus the hi identity pair;
        // comul;mul is the identity, so the composite equals R.
        assert_eq!(rel.len(), 4);
        let rendered = rel.render();
        assert!(rendered.contains("lo:(1 2) \u{2192} lo:(1 2)"), "{}", rendered);
        assert!(rendered.contains("hi:() \u{2192} hi:()"), "{}", rendered);
    }

    #[test]
    fn conjugacy_closure_produces_valid_binding() {
        // Closure of the four-transposition seed: 6 tuples, passes validation,
        // and composing R with its converse-shaped partner gives a point.
        let program = parse_program(
            "wire X\ncomp R : I -> X,X,X,X\ncomp S : X,X,X,X -> I\ndiagram main = R ; S",
        )
        .unwrap();
        let bindings = parse_trel_bindings(
            r#"{"group":{"builtin":"S3"},
                "components":{
                  "R":{"conj_closure":[["(1 2)","(1 3)","(2 3)","(1 3)"]]},
                  "S":{"conj_closure":[["(1 2)","(1 3)","(2 3)","(1 3)"]]}}}"#,
        )
        .unwrap();
        let (_, term, _) = program.default_diagram().unwrap();
        let r = eval_trel(term, &program.multigraph, &bindings).unwrap();
        assert_eq!(scalar_of(&r).unwrap(), Scalar::Point);
    }
}
