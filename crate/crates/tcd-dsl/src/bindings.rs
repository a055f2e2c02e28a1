//! Backend binding files: JSON assignments of groups and relations (trel)
//! or circuit element parameters (linres) to the components of a program.
//!
//! Keeping bindings separate from programs lets one program be evaluated
//! under many assignments.

use std::collections::BTreeMap;

use group_core::{FiniteGroup, Permutation};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::Value;

use crate::DslError;

/// Group assignment plus per-component relation seeds for the relational
/// backend. Group literals are resolved to element indices at parse time;
/// data symbols stay textual until a component interface fixes which wire
/// each coordinate belongs to.
#[derive(Clone, Debug)]
pub struct TrelBindings {
    pub group: FiniteGroup,
    /// Optional data alphabet per wire type; absent wires carry the
    /// singleton alphabet.
    pub data: BTreeMap<String, Vec<String>>,
    pub components: BTreeMap<String, RelationSpec>,
}

/// Tuples for one component: either the relation verbatim or seeds to be
/// closed under diagonal conjugation.
#[derive(Clone, Debug)]
pub struct RelationSpec {
    pub conj_closure: bool,
    pub tuples: Vec<Vec<TupleEntry>>,
}

/// One coordinate of a bound tuple: optional data symbol and a group
/// element index.
#[derive(Clone, Debug)]
pub struct TupleEntry {
    pub data: Option<String>,
    pub group: usize,
}

/// Circuit element kinds for the linear-relation backend. Parameters are
/// positive exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinresComponent {
    Resistor(BigRational),
    Capacitor(BigRational),
    Inductor(BigRational),
}

#[derive(Clone, Debug, Default)]
pub struct LinresBindings {
    pub components: BTreeMap<String, LinresComponent>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BindingKind {
    Trel,
    Linres,
}

#[derive(Clone, Debug)]
pub enum Bindings {
    Trel(TrelBindings),
    Linres(LinresBindings),
}

pub fn parse_bindings(kind: BindingKind, text: &str) -> Result<Bindings, DslError> {
    match kind {
        BindingKind::Trel => parse_trel_bindings(text).map(Bindings::Trel),
        BindingKind::Linres => parse_linres_bindings(text).map(Bindings::Linres),
    }
}

fn json_root(text: &str) -> Result<Value, DslError> {
    serde_json::from_str(text).map_err(|e| DslError::Syntax {
        line: e.line(),
        col: e.column(),
        msg: format!("bad JSON: {}", e),
    })
}

pub fn parse_trel_bindings(text: &str) -> Result<TrelBindings, DslError> {
    let root = json_root(text)?;
    let obj = root
        .as_object()
        .ok_or_else(|| DslError::BadBinding("top level must be an object".into()))?;
    let compat = obj
        .get("compat_cycles")
        .and_then(Value::as_bool)
        .unwrap_or(false);
    let group_spec = obj
        .get("group")
        .ok_or_else(|| DslError::BadBinding("missing \"group\"".into()))?;
    let (group, degree) = parse_group(group_spec, compat)?;

    let mut data = BTreeMap::new();
    if let Some(dval) = obj.get("data") {
        let dobj = dval
            .as_object()
            .ok_or_else(|| DslError::BadBinding("\"data\" must map wires to symbol lists".into()))?;
        for (wire, syms) in dobj {
            let list = syms
                .as_array()
                .ok_or_else(|| DslError::BadBinding(format!("data for {:?} must be a list", wire)))?;
            let mut alphabet = Vec::new();
            for s in list {
                let sym = s
                    .as_str()
                    .ok_or_else(|| DslError::BadBinding("data symbols must be strings".into()))?;
                if sym.contains(':') {
                    return Err(DslError::BadBinding(format!(
                        "data symbol {:?} may not contain ':'",
                        sym
                    )));
                }
                if alphabet.iter().any(|a| a == sym) {
                    return Err(DslError::BadBinding(format!("data symbol {:?} repeated", sym)));
                }
                alphabet.push(sym.to_string());
            }
            if alphabet.is_empty() {
                return Err(DslError::BadBinding(format!("data alphabet for {:?} is empty", wire)));
            }
            data.insert(wire.clone(), alphabet);
        }
    }

    let mut components = BTreeMap::new();
    if let Some(cval) = obj.get("components") {
        let cobj = cval
            .as_object()
            .ok_or_else(|| DslError::BadBinding("\"components\" must be an object".into()))?;
        for (name, spec) in cobj {
            let sobj = spec
                .as_object()
                .ok_or_else(|| DslError::BadBinding(format!("binding for {:?} must be an object", name)))?;
            let (conj_closure, tuples_val) = if let Some(t) = sobj.get("explicit") {
                (false, t)
            } else if let Some(t) = sobj.get("conj_closure") {
                (true, t)
            } else {
                return Err(DslError::BadBinding(format!(
                    "binding for {:?} needs \"explicit\" or \"conj_closure\"",
                    name
                )));
            };
            let rows = tuples_val
                .as_array()
                .ok_or_else(|| DslError::BadBinding(format!("tuples for {:?} must be a list", name)))?;
            let mut tuples = Vec::new();
            let mut width: Option<usize> = None;
            for row in rows {
                let entries = row
                    .as_array()
                    .ok_or_else(|| DslError::BadBinding("each tuple must be a list".into()))?;
                match width {
                    None => width = Some(entries.len()),
                    Some(w) if w != entries.len() => {
                        return Err(DslError::WidthMismatch(format!(
                            "component {:?} mixes tuple widths {} and {}",
                            name,
                            w,
                            entries.len()
                        )))
                    }
                    _ => {}
                }
                let mut tuple = Vec::new();
                for entry in entries {
                    let lit = entry
                        .as_str()
                        .ok_or_else(|| DslError::BadBinding("tuple entries must be strings".into()))?;
                    tuple.push(parse_entry(lit, &group, degree, compat)?);
                }
                tuples.push(tuple);
            }
            components.insert(name.clone(), RelationSpec { conj_closure, tuples });
        }
    }
    Ok(TrelBindings { group, data, components })
}

/// Resolves a group spec; also reports the permutation degree when the
/// group came with one, so cycle literals can be normalized.
fn parse_group(spec: &Value, compat: bool) -> Result<(FiniteGroup, Option<usize>), DslError> {
    let obj = spec
        .as_object()
        .ok_or_else(|| DslError::BadBinding("\"group\" must be an object".into()))?;
    if let Some(name) = obj.get("builtin") {
        let name = name
            .as_str()
            .ok_or_else(|| DslError::BadBinding("builtin name must be a string".into()))?;
        let group = FiniteGroup::builtin(name)?;
        return Ok((group, builtin_degree(name)));
    }
    if let Some(deg) = obj.get("perm_degree") {
        let degree = deg
            .as_u64()
            .ok_or_else(|| DslError::BadBinding("perm_degree must be a number".into()))?
            as usize;
        let gens_val = obj
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| DslError::BadBinding("permutation group needs \"generators\"".into()))?;
        let mut gens = Vec::new();
        for g in gens_val {
            let lit = g
                .as_str()
                .ok_or_else(|| DslError::BadBinding("generators must be strings".into()))?;
            gens.push(Permutation::parse(lit, degree, compat)?);
        }
        let group =
            FiniteGroup::from_permutations(degree, &gens, group_core::DEFAULT_CLOSURE_CAP)?;
        return Ok((group, Some(degree)));
    }
    if let Some(table) = obj.get("table") {
        let rows = table
            .as_array()
            .ok_or_else(|| DslError::BadBinding("\"table\" must be a list of rows".into()))?;
        let mut parsed = Vec::new();
        for row in rows {
            let cells = row
                .as_array()
                .ok_or_else(|| DslError::BadBinding("table rows must be lists".into()))?;
            let mut out = Vec::new();
            for c in cells {
                out.push(c.as_u64().ok_or_else(|| {
                    DslError::BadBinding("table entries must be nonnegative integers".into())
                })? as usize);
            }
            parsed.push(out);
        }
        let group = FiniteGroup::from_table(parsed, None)?;
        return Ok((group, None));
    }
    Err(DslError::BadBinding(
        "\"group\" needs \"builtin\", \"perm_degree\", or \"table\"".into(),
    ))
}

fn builtin_degree(name: &str) -> Option<usize> {
    match name {
        "D3" => Some(3),
        "D4" => Some(4),
        _ => name[1..].parse::<usize>().ok(),
    }
}

/// One tuple coordinate: `"lit"` or `"sym:lit"` where `lit` names a group
/// element (cycle notation, an element name, or a bare index).
fn parse_entry(
    text: &str,
    group: &FiniteGroup,
    degree: Option<usize>,
    compat: bool,
) -> Result<TupleEntry, DslError> {
    let (data, lit) = match text.split_once(':') {
        Some((sym, rest)) => (Some(sym.trim().to_string()), rest.trim()),
        None => (None, text.trim()),
    };
    let group_idx = resolve_element(lit, group, degree, compat)?;
    Ok(TupleEntry { data, group: group_idx })
}

fn resolve_element(
    lit: &str,
    group: &FiniteGroup,
    degree: Option<usize>,
    compat: bool,
) -> Result<usize, DslError> {
    if let Some(idx) = group.element_by_name(lit) {
        return Ok(idx);
    }
    if let Some(degree) = degree {
        let perm = Permutation::parse(lit, degree, compat)?;
        let canon = perm.cycle_notation();
        return group.element_by_name(&canon).ok_or_else(|| {
            DslError::BadPermutation(format!("{} is not an element of the bound group", canon))
        });
    }
    if let Ok(idx) = lit.parse::<usize>() {
        if idx < group.order() {
            return Ok(idx);
        }
    }
    Err(DslError::BadPermutation(format!(
        "cannot resolve {:?} as a group element",
        lit
    )))
}

pub fn parse_linres_bindings(text: &str) -> Result<LinresBindings, DslError> {
    let root = json_root(text)?;
    let obj = root
        .as_object()
        .ok_or_else(|| DslError::BadBinding("top level must be an object".into()))?;
    let mut components = BTreeMap::new();
    if let Some(cval) = obj.get("components") {
        let cobj = cval
            .as_object()
            .ok_or_else(|| DslError::BadBinding("\"components\" must be an object".into()))?;
        for (name, spec) in cobj {
            let sobj = spec
                .as_object()
                .ok_or_else(|| DslError::BadBinding(format!("binding for {:?} must be an object", name)))?;
            let kind = sobj
                .get("kind")
                .and_then(Value::as_str)
                .ok_or_else(|| DslError::BadBinding(format!("binding for {:?} needs \"kind\"", name)))?;
            let component = match kind {
                "resistor" => LinresComponent::Resistor(positive_param(sobj, "ohms")?),
                "capacitor" => LinresComponent::Capacitor(positive_param(sobj, "farads")?),
                "inductor" => LinresComponent::Inductor(positive_param(sobj, "henries")?),
                other => {
                    return Err(DslError::BadBinding(format!(
                        "unknown component kind {:?}",
                        other
                    )))
                }
            };
            components.insert(name.clone(), component);
        }
    }
    Ok(LinresBindings { components })
}

fn positive_param(
    obj: &serde_json::Map<String, Value>,
    key: &str,
) -> Result<BigRational, DslError> {
    let raw = obj
        .get(key)
        .ok_or_else(|| DslError::BadParam(format!("missing parameter {:?}", key)))?;
    let text = match raw {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(DslError::BadParam(format!("{:?} must be a rational string", key))),
    };
    let value = parse_rational(&text)?;
    if !value.is_positive() {
        return Err(DslError::BadParam(format!("{:?} must be positive, got {}", key, text)));
    }
    Ok(value)
}

/// Rationals written `"p/q"` or as integer strings.
pub fn parse_rational(text: &str) -> Result<BigRational, DslError> {
    let bad = || DslError::BadParam(format!("cannot parse rational {:?}", text));
    let s = text.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugacy_closure_binding_parses() {
        let text = r#"{"group":{"builtin":"S3"},
            "components":{"R":{"conj_closure":[["(1 2)","(1 3)","(2 3)","(1 3)"]]}}}"#;
        let b = parse_trel_bindings(text).unwrap();
        assert_eq!(b.group.order(), 6);
        let spec = &b.components["R"];
        assert!(spec.conj_closure);
        assert_eq!(spec.tuples[0].len(), 4);
        let names: Vec<&str> = spec.tuples[0]
            .iter()
            .map(|e| b.group.name(e.group))
            .collect();
        assert_eq!(names, vec!["(1 2)", "(1 3)", "(2 3)", "(1 3)"]);
    }

    #[test]
    fn out_of_range_permutation_rejected() {
        let text = r#"{"group":{"builtin":"S3"},
            "components":{"R":{"explicit":[["(1 4)"]]}}}"#;
        let err = parse_trel_bindings(text).unwrap_err();
        assert!(matches!(err, DslError::Group(_) | DslError::BadPermutation(_)), "{:?}", err);
    }

    #[test]
    fn ragged_tuples_rejected() {
        let text = r#"{"group":{"builtin":"S3"},
            "components":{"R":{"explicit":[["e"],["e","e"]]}}}"#;
        assert!(matches!(
            parse_trel_bindings(text),
            Err(DslError::WidthMismatch(_))
        ));
    }

    #[test]
    fn decorated_entries_carry_symbols() {
        let text = r#"{"group":{"builtin":"C2"},
            "data":{"X":["lo","hi"]},
            "components":{"R":{"explicit":[["lo:e","hi:(1 2)"]]}}}"#;
        let b = parse_trel_bindings(text).unwrap();
        let tuple = &b.components["R"].tuples[0];
        assert_eq!(tuple[0].data.as_deref(), Some("lo"));
        assert_eq!(tuple[1].data.as_deref(), Some("hi"));
        assert_eq!(b.data["X"], vec!["lo", "hi"]);
    }

    #[test]
    fn resistor_binding_parses() {
        let text = r#"{"components":{"r1":{"kind":"resistor","ohms":"2"}}}"#;
        let b = parse_linres_bindings(text).unwrap();
        assert_eq!(
            b.components["r1"],
            LinresComponent::Resistor(BigRational::from_integer(2.into()))
        );
    }

    #[test]
    fn nonpositive_parameter_rejected() {
        let text = r#"{"components":{"c":{"kind":"capacitor","farads":"0"}}}"#;
        assert!(matches!(parse_linres_bindings(text), Err(DslError::BadParam(_))));
        let text = r#"{"components":{"l":{"kind":"inductor","henries":"-1/2"}}}"#;
        assert!(matches!(parse_linres_bindings(text), Err(DslError::BadParam(_))));
    }

    #[test]
    fn rationals_parse_both_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), parse_rational("1/2").unwrap());
        assert_eq!(parse_rational("4").unwrap(), BigRational::from_integer(4.into()));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn compat_mode_accepts_two_digit_transpositions() {
        let text = r#"{"group":{"builtin":"S3"},"compat_cycles":true,
            "components":{"R":{"explicit":[["12","13"]]}}}"#;
        let b = parse_trel_bindings(text).unwrap();
        let names: Vec<&str> = b.components["R"].tuples[0]
            .iter()
            .map(|e| b.group.name(e.group))
            .collect();
        assert_eq!(names, vec!["(1 2)", "(1 3)"]);
    }
}
