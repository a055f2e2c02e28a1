//! The Frobenius structure maps and the braiding, as concrete relations.
//!
//! On a single wire the multiplication is the graph of the group product,
//! the unit picks out the group identity, and the comultiplication and
//! counit are their converses. The self-duality maps pair each element with
//! its inverse. In decorated mode every structure map keeps the data symbol
//! equal across its legs.

use std::sync::Arc;

use group_core::FiniteGroup;

use crate::relation::{enumerate_coords, Alphabet, Coord, GRelation, RelTuple};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StructureKind {
    Mul,
    Comul,
    Unit,
    Counit,
    Cup,
    Cap,
}

/// The relation for one Frobenius/duality generator on a wire carrying
/// `data` symbols.
pub fn structure_relation(
    kind: StructureKind,
    group: Arc<FiniteGroup>,
    data: Alphabet,
) -> GRelation {
    let order = group.order() as u16;
    let one = vec![data.clone()];
    let two = vec![data.clone(), data.clone()];
    match kind {
        StructureKind::Mul => {
            let mut tuples = Vec::new();
            for d in 0..data.len() as u16 {
                for g in 0..order {
                    for h in 0..order {
                        let gh = group.mul(g as usize, h as usize) as u16;
                        tuples.push(vec![(d, g), (d, h), (d, gh)]);
                    }
                }
            }
            GRelation::new(group, two, one, tuples)
        }
        StructureKind::Comul => {
            structure_relation(StructureKind::Mul, group, data).reverse()
        }
        StructureKind::Unit => {
            let tuples: Vec<RelTuple> = (0..data.len() as u16).map(|d| vec![(d, 0)]).collect();
            GRelation::new(group, Vec::new(), one, tuples)
        }
        StructureKind::Counit => {
            structure_relation(StructureKind::Unit, group, data).reverse()
        }
        StructureKind::Cup => {
            let mut tuples = Vec::new();
            for d in 0..data.len() as u16 {
                for g in 0..order {
                    let ginv = group.inv(g as usize) as u16;
                    tuples.push(vec![(d, g), (d, ginv)]);
                }
            }
            GRelation::new(group, Vec::new(), two, tuples)
        }
        StructureKind::Cap => structure_relation(StructureKind::Cup, group, data).reverse(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BraidSign {
    Positive,
    Negative,
}

/// The braiding `tau_{m,n}` (or its inverse for [`BraidSign::Negative`]) as
/// a relation.
///
/// Positive: the graph of `(x, y) |-> (y^xbar, x)` where `xbar` is the
/// product of the group parts of the first block and conjugation acts
/// coordinatewise on group parts only; data parts just permute. Negative is
/// the graph of the inverse function `(x, y) |-> (y, x^(ybar^-1))`.
pub fn braid_relation(
    group: Arc<FiniteGroup>,
    first: Vec<Alphabet>,
    second: Vec<Alphabet>,
    sign: BraidSign,
) -> GRelation {
    let m = first.len();
    let mut in_alpha = first.clone();
    in_alpha.extend(second.iter().cloned());
    let mut out_alpha = second;
    out_alpha.extend(first);
    let tuples: Vec<RelTuple> = enumerate_coords(&group, &in_alpha)
        .map(|t| {
            let (x, y) = t.split_at(m);
            let mut full = t.clone();
            full.extend(apply_braid(&group, x, y, sign));
            full
        })
        .collect();
    GRelation::new(group, in_alpha, out_alpha, tuples)
}

/// The underlying function of the braiding on coordinate blocks.
pub fn apply_braid(group: &FiniteGroup, x: &[Coord], y: &[Coord], sign: BraidSign) -> Vec<Coord> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    match sign {
        BraidSign::Positive => {
            let xbar = group.product(x.iter().map(|&(_, g)| g as usize));
            out.extend(y.iter().map(|&(d, g)| (d, group.conj(g as usize, xbar) as u16)));
            out.extend_from_slice(x);
        }
        BraidSign::Negative => {
            let ybar_inv = group.inv(group.product(y.iter().map(|&(_, g)| g as usize)));
            out.extend_from_slice(y);
            out.extend(x.iter().map(|&(d, g)| (d, group.conj(g as usize, ybar_inv) as u16)));
        }
    }
    out
}
