//! Coloring counts of closed structure-only diagrams, two independent ways:
//! compositionally in spans of finite sets, and by direct constraint search
//! over wire-segment assignments. The second is the oracle for the first.

use std::sync::Arc;

use diagram_core::{typecheck, DiagramTerm, Multigraph};
use group_core::FiniteGroup;

use crate::span::{BTuple, FiniteSpan};
use crate::SpanError;

/// Builds the one-wire multigraph a structure-only term lives over, and
/// checks the term is closed and component-free.
fn closed_structure_check(term: &DiagramTerm, group_name: &str) -> Result<Multigraph, SpanError> {
    if term.has_components() {
        return Err(SpanError::HasComponents);
    }
    let mut wires = Vec::new();
    collect_wires(term, &mut wires);
    let mut mg = Multigraph::new();
    for w in &wires {
        mg.add_wire(w.clone());
    }
    if wires.is_empty() {
        mg.add_wire("X");
    }
    let iface = typecheck(term, &mg).map_err(SpanError::Diagram)?;
    if !iface.is_closed() {
        return Err(SpanError::NotClosed(format!(
            "diagram has interface {} over {}",
            iface, group_name
        )));
    }
    Ok(mg)
}

fn collect_wires(term: &DiagramTerm, out: &mut Vec<String>) {
    let mut push = |name: &str| {
        if !out.iter().any(|w| w == name) {
            out.push(name.to_string());
        }
    };
    match term {
        DiagramTerm::Gen(_) => {}
        DiagramTerm::Id(w) | DiagramTerm::Braid(w, _) | DiagramTerm::BraidInv(w, _) => {
            for n in &w.0 {
                push(n);
            }
            if let DiagramTerm::Braid(_, b) | DiagramTerm::BraidInv(_, b) = term {
                for n in &b.0 {
                    push(n);
                }
            }
        }
        DiagramTerm::Compose(f, g) | DiagramTerm::Tensor(f, g) => {
            collect_wires(f, out);
            collect_wires(g, out);
        }
        DiagramTerm::Mul(x)
        | DiagramTerm::Comul(x)
        | DiagramTerm::Unit(x)
        | DiagramTerm::Counit(x)
        | DiagramTerm::Cup(x)
        | DiagramTerm::Cap(x) => push(x),
    }
}

/// Compositional evaluation in spans: pullback for composition, product for
/// tensor, the crossing as a function span. Returns the apex size of the
/// resulting closed span.
///
/// Leaves are applied to the running state span directly (the pullback
/// against a function span computed pointwise), so identity wires never
/// materialize product spans.
pub fn eval_colorings(term: &DiagramTerm, group: &FiniteGroup) -> Result<u64, SpanError> {
    closed_structure_check(term, "the coloring group")?;
    let g = Arc::new(group.clone());
    let unit_state = FiniteSpan::new(g.clone(), 0, 0, vec![(vec![], vec![])]);
    let result = apply_term(term, unit_state, 0, &g)?;
    Ok(result.apex_size())
}

/// Applies `term` to the wire slice starting at `offset` of the state
/// span's right boundary.
fn apply_term(
    term: &DiagramTerm,
    state: FiniteSpan,
    offset: usize,
    g: &Arc<FiniteGroup>,
) -> Result<FiniteSpan, SpanError> {
    match term {
        DiagramTerm::Gen(_) => Err(SpanError::HasComponents),
        DiagramTerm::Id(_) => Ok(state),
        DiagramTerm::Compose(f, s) => {
            let mid = apply_term(f, state, offset, g)?;
            apply_term(s, mid, offset, g)
        }
        DiagramTerm::Tensor(f, s) => {
            let fw = term_out_width(f);
            let left = apply_term(f, state, offset, g)?;
            apply_term(s, left, offset + fw, g)
        }
        leaf => {
            let dw = term_in_width(leaf);
            let mut elements = Vec::new();
            for ((l, r), m) in state.support_unordered() {
                let slice = &r[offset..offset + dw];
                for image in leaf_images(leaf, slice, g) {
                    let mut out = r[..offset].to_vec();
                    out.extend_from_slice(&image);
                    out.extend_from_slice(&r[offset + dw..]);
                    for _ in 0..m {
                        elements.push((l.clone(), out.clone()));
                    }
                }
            }
            let new_width = state.right_width() - dw + term_out_width(leaf);
            Ok(FiniteSpan::new(g.clone(), state.left_width(), new_width, elements))
        }
    }
}

/// Output tuples a structure leaf relates to the given input tuple.
fn leaf_images(leaf: &DiagramTerm, input: &[u16], g: &FiniteGroup) -> Vec<Vec<u16>> {
    let order = g.order() as u16;
    match leaf {
        DiagramTerm::Braid(_, _) => vec![braid_image(g, &[input[0]], &[input[1]], true)],
        DiagramTerm::BraidInv(_, _) => vec![braid_image(g, &[input[0]], &[input[1]], false)],
        DiagramTerm::Mul(_) => {
            vec![vec![g.mul(input[0] as usize, input[1] as usize) as u16]]
        }
        DiagramTerm::Comul(_) => (0..order)
            .map(|a| {
                let b = g.mul(g.inv(a as usize), input[0] as usize) as u16;
                vec![a, b]
            })
            .collect(),
        DiagramTerm::Unit(_) => vec![vec![0]],
        DiagramTerm::Counit(_) => {
            if input[0] as usize == g.identity() {
                vec![vec![]]
            } else {
                vec![]
            }
        }
        DiagramTerm::Cup(_) => (0..order)
            .map(|x| vec![x, g.inv(x as usize) as u16])
            .collect(),
        DiagramTerm::Cap(_) => {
            if g.mul(input[0] as usize, input[1] as usize) == g.identity() {
                vec![vec![]]
            } else {
                vec![]
            }
        }
        _ => unreachable!("composite terms handled above"),
    }
}

fn term_out_width(term: &DiagramTerm) -> usize {
    match term {
        DiagramTerm::Gen(_) => 0,
        DiagramTerm::Id(w) => w.len(),
        DiagramTerm::Compose(_, s) => term_out_width(s),
        DiagramTerm::Tensor(f, s) => term_out_width(f) + term_out_width(s),
        DiagramTerm::Braid(a, b) | DiagramTerm::BraidInv(a, b) => a.len() + b.len(),
        DiagramTerm::Mul(_) | DiagramTerm::Unit(_) => 1,
        DiagramTerm::Comul(_) | DiagramTerm::Cup(_) => 2,
        DiagramTerm::Counit(_) | DiagramTerm::Cap(_) => 0,
    }
}

fn braid_image(g: &FiniteGroup, x: &[u16], y: &[u16], positive: bool) -> BTuple {
    let mut out = Vec::with_capacity(x.len() + y.len());
    if positive {
        let xbar = g.product(x.iter().map(|&v| v as usize));
        out.extend(y.iter().map(|&v| g.conj(v as usize, xbar) as u16));
        out.extend_from_slice(x);
    } else {
        let ybar_inv = g.inv(g.product(y.iter().map(|&v| v as usize)));
        out.extend_from_slice(y);
        out.extend(x.iter().map(|&v| g.conj(v as usize, ybar_inv) as u16));
    }
    out
}

/// One equation imposed by a leaf on wire segments.
#[derive(Clone, Debug)]
enum WireConstraint {
    /// Positive or negative crossing: outputs are the braid image of inputs.
    Crossing { ins: [usize; 2], outs: [usize; 2], positive: bool },
    /// Cup/cap: the two segments multiply to the identity.
    Dual { pair: [usize; 2] },
    /// Product of `ins` equals the single output (mul) or vice versa (comul
    /// uses the same shape with sides swapped).
    Product { ins: Vec<usize>, out: usize },
    /// Segment forced to the identity (unit/counit).
    Pinned { var: usize },
}

/// The wire-segment constraint system of a closed structure-only diagram:
/// one variable per segment, one constraint bundle per leaf. Identity wires
/// pass segments through without creating new ones.
struct SegmentSystem {
    nvars: usize,
    constraints: Vec<WireConstraint>,
}

fn build_segments(term: &DiagramTerm) -> Result<SegmentSystem, SpanError> {
    let mut system = SegmentSystem { nvars: 0, constraints: Vec::new() };
    let boundary = walk(term, Vec::new(), &mut system)?;
    debug_assert!(boundary.is_empty());
    Ok(system)
}

/// Threads segment variables through the term, returning the output
/// segment list.
fn walk(
    term: &DiagramTerm,
    inputs: Vec<usize>,
    sys: &mut SegmentSystem,
) -> Result<Vec<usize>, SpanError> {
    let fresh = |sys: &mut SegmentSystem, n: usize| -> Vec<usize> {
        let start = sys.nvars;
        sys.nvars += n;
        (start..start + n).collect()
    };
    match term {
        DiagramTerm::Gen(_) => Err(SpanError::HasComponents),
        DiagramTerm::Id(_) => Ok(inputs),
        DiagramTerm::Compose(f, g) => {
            let mid = walk(f, inputs, sys)?;
            walk(g, mid, sys)
        }
        DiagramTerm::Tensor(f, g) => {
            let fw = term_in_width(f);
            let (left, right) = inputs.split_at(fw);
            let mut out = walk(f, left.to_vec(), sys)?;
            out.extend(walk(g, right.to_vec(), sys)?);
            Ok(out)
        }
        DiagramTerm::Braid(a, b) | DiagramTerm::BraidInv(a, b) => {
            // Multi-wire crossings are exercised through their single-wire
            // expansion; expand here so the constraint shapes stay binary.
            if a.len() + b.len() != 2 || a.len() != 1 {
                let expanded = diagram_core::desugar(term);
                return walk(&expanded, inputs, sys);
            }
            let outs = fresh(sys, 2);
            sys.constraints.push(WireConstraint::Crossing {
                ins: [inputs[0], inputs[1]],
                outs: [outs[0], outs[1]],
                positive: matches!(term, DiagramTerm::Braid(_, _)),
            });
            Ok(outs)
        }
        DiagramTerm::Mul(_) => {
            let out = fresh(sys, 1);
            sys.constraints.push(WireConstraint::Product {
                ins: inputs.clone(),
                out: out[0],
            });
            Ok(out)
        }
        DiagramTerm::Comul(_) => {
            let outs = fresh(sys, 2);
            sys.constraints.push(WireConstraint::Product {
                ins: outs.clone(),
                out: inputs[0],
            });
            Ok(outs)
        }
        DiagramTerm::Unit(_) => {
            let out = fresh(sys, 1);
            sys.constraints.push(WireConstraint::Pinned { var: out[0] });
            Ok(out)
        }
        DiagramTerm::Counit(_) => {
            sys.constraints.push(WireConstraint::Pinned { var: inputs[0] });
            Ok(Vec::new())
        }
        DiagramTerm::Cup(_) => {
            let outs = fresh(sys, 2);
            sys.constraints.push(WireConstraint::Dual { pair: [outs[0], outs[1]] });
            Ok(outs)
        }
        DiagramTerm::Cap(_) => {
            sys.constraints.push(WireConstraint::Dual { pair: [inputs[0], inputs[1]] });
            Ok(Vec::new())
        }
    }
}

fn term_in_width(term: &DiagramTerm) -> usize {
    match term {
        DiagramTerm::Gen(_) => unreachable!("components rejected earlier"),
        DiagramTerm::Id(w) => w.len(),
        DiagramTerm::Compose(f, _) => term_in_width(f),
        DiagramTerm::Tensor(f, g) => term_in_width(f) + term_in_width(g),
        DiagramTerm::Braid(a, b) | DiagramTerm::BraidInv(a, b) => a.len() + b.len(),
        DiagramTerm::Mul(_) | DiagramTerm::Cap(_) => 2,
        DiagramTerm::Comul(_) | DiagramTerm::Counit(_) => 1,
        DiagramTerm::Unit(_) | DiagramTerm::Cup(_) => 0,
    }
}

/// Direct search: assigns a group element to every wire segment and counts
/// assignments satisfying every leaf's equations. Independent of the span
/// calculus.
pub fn brute_force_colorings(term: &DiagramTerm, group: &FiniteGroup) -> Result<u64, SpanError> {
    Ok(brute_force_solutions(term, group)?.len() as u64)
}

/// The full solution set, one `Vec` per coloring, indexed by segment
/// creation order (cups before crossings left to right).
pub fn brute_force_solutions(
    term: &DiagramTerm,
    group: &FiniteGroup,
) -> Result<Vec<Vec<u16>>, SpanError> {
    closed_structure_check(term, "the coloring group")?;
    let sys = build_segments(term)?;
    // Check each constraint as soon as its last-created variable exists.
    let mut check_at: Vec<Vec<&WireConstraint>> = vec![Vec::new(); sys.nvars + 1];
    for c in &sys.constraints {
        let last = match c {
            WireConstraint::Crossing { ins, outs, .. } => {
                ins.iter().chain(outs.iter()).copied().max().unwrap()
            }
            WireConstraint::Dual { pair } => pair[0].max(pair[1]),
            WireConstraint::Product { ins, out } => {
                ins.iter().copied().chain([*out]).max().unwrap()
            }
            WireConstraint::Pinned { var } => *var,
        };
        check_at[last].push(c);
    }
    let mut solutions = Vec::new();
    let mut assignment = vec![0u16; sys.nvars];
    search(group, &check_at, &mut assignment, 0, sys.nvars, &mut solutions);
    Ok(solutions)
}

fn satisfied(group: &FiniteGroup, c: &WireConstraint, a: &[u16]) -> bool {
    match c {
        WireConstraint::Crossing { ins, outs, positive } => {
            let image = braid_image(group, &[a[ins[0]]], &[a[ins[1]]], *positive);
            image[0] == a[outs[0]] && image[1] == a[outs[1]]
        }
        WireConstraint::Dual { pair } => {
            group.mul(a[pair[0]] as usize, a[pair[1]] as usize) == group.identity()
        }
        WireConstraint::Product { ins, out } => {
            group.product(ins.iter().map(|&v| a[v] as usize)) == a[*out] as usize
        }
        WireConstraint::Pinned { var } => a[*var] as usize == group.identity(),
    }
}

fn search(
    group: &FiniteGroup,
    check_at: &[Vec<&WireConstraint>],
    assignment: &mut Vec<u16>,
    var: usize,
    nvars: usize,
    solutions: &mut Vec<Vec<u16>>,
) {
    if var == nvars {
        // Constraints with no variables (closed scalar diagrams).
        if check_at[nvars].iter().all(|c| satisfied(group, c, assignment)) {
            solutions.push(assignment.clone());
        }
        return;
    }
    for value in 0..group.order() as u16 {
        assignment[var] = value;
        if check_at[var].iter().all(|c| satisfied(group, c, assignment)) {
            search(group, check_at, assignment, var + 1, nvars, solutions);
        }
    }
}
