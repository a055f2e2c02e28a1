//! Membership checking for the relational category: closure under diagonal
//! conjugation of group parts, and centrality of the input/output product
//! defect.

use crate::relation::{Coord, GRelation, RelTuple};

/// Why a relation is not an arrow of the category. Carries a witness tuple,
/// and the conjugator for the closure condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// Condition 1: conjugating `tuple` by `conjugator` leaves the set.
    NotConjugationClosed { tuple: RelTuple, conjugator: usize },
    /// Condition 2: input product times inverse output product is
    /// non-central; `defect` is that product.
    ProductNotCentral { tuple: RelTuple, defect: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotConjugationClosed { conjugator, .. } => {
                write!(f, "not closed under conjugation (witness conjugator index {})", conjugator)
            }
            Violation::ProductNotCentral { defect, .. } => {
                write!(f, "input/output product defect (index {}) lies outside the center", defect)
            }
        }
    }
}

/// Conjugates the group parts of a tuple by `h`, leaving data parts alone.
pub fn conj_tuple_coords(r: &GRelation, tuple: &[Coord], h: usize) -> RelTuple {
    tuple
        .iter()
        .map(|&(d, g)| (d, r.group().conj(g as usize, h) as u16))
        .collect()
}

/// Checks conditions 1) and 2) against the stored tuple set, so a failure
/// reports a concrete witness.
pub fn validate_relation(r: &GRelation) -> Result<(), Violation> {
    let group = r.group();
    for tuple in r.tuples() {
        let in_prod = group.product(r.inputs_of(tuple).iter().map(|&(_, g)| g as usize));
        let out_prod = group.product(r.outputs_of(tuple).iter().map(|&(_, g)| g as usize));
        let defect = group.mul(in_prod, group.inv(out_prod));
        if !group.is_central(defect) {
            return Err(Violation::ProductNotCentral { tuple: tuple.clone(), defect });
        }
        for h in 0..group.order() {
            let conj = conj_tuple_coords(r, tuple, h);
            if !r.contains(&conj) {
                return Err(Violation::NotConjugationClosed { tuple: tuple.clone(), conjugator: h });
            }
        }
    }
    Ok(())
}
