//! The executable axiom suite: the braided-category and Frobenius laws as
//! exact set equalities of canonical relations over a chosen group.

use std::sync::Arc;

use group_core::FiniteGroup;

use crate::relation::{Alphabet, GRelation};
use crate::structure::{braid_relation, structure_relation, BraidSign, StructureKind};
use crate::TrelError;

fn plain(width: usize) -> Vec<Alphabet> {
    vec![Alphabet::singleton(); width]
}

fn tau(group: &Arc<FiniteGroup>, m: usize, n: usize) -> GRelation {
    braid_relation(group.clone(), plain(m), plain(n), BraidSign::Positive)
}

fn idw(group: &Arc<FiniteGroup>, w: usize) -> GRelation {
    GRelation::identity(group.clone(), plain(w))
}

/// Runs every law and reports `(name, holds)` pairs. All comparisons are
/// exact equalities of canonical tuple sets.
pub fn axiom_suite(group: &FiniteGroup) -> Result<Vec<(String, bool)>, TrelError> {
    let g = Arc::new(group.clone());
    let mut results = Vec::new();
    let mut push = |name: String, holds: bool| results.push((name, holds));

    // Hexagons: tau_{m,n+p} splits one way, tau_{m+n,p} the other.
    for m in 0..=2usize {
        for n in 0..=2usize {
            for p in 0..=2usize {
                let b1_lhs = tau(&g, m, n + p);
                let b1_rhs = tau(&g, m, n)
                    .tensor(&idw(&g, p))?
                    .compose(&idw(&g, n).tensor(&tau(&g, m, p))?)?;
                push(format!("hexagon B1 m={} n={} p={}", m, n, p), b1_lhs == b1_rhs);

                let b2_lhs = tau(&g, m + n, p);
                let b2_rhs = idw(&g, m)
                    .tensor(&tau(&g, n, p))?
                    .compose(&tau(&g, m, p).tensor(&idw(&g, n))?)?;
                push(format!("hexagon B2 m={} n={} p={}", m, n, p), b2_lhs == b2_rhs);
            }
        }
    }

    // Yang-Baxter on G^3.
    {
        let s1 = tau(&g, 1, 1).tensor(&idw(&g, 1))?;
        let s2 = idw(&g, 1).tensor(&tau(&g, 1, 1))?;
        let lhs = s2.compose(&s1)?.compose(&s2)?;
        let rhs = s1.compose(&s2)?.compose(&s1)?;
        push("Yang-Baxter".to_string(), lhs == rhs);
    }

    let mul = structure_relation(StructureKind::Mul, g.clone(), Alphabet::singleton());
    let comul = structure_relation(StructureKind::Comul, g.clone(), Alphabet::singleton());
    let unit = structure_relation(StructureKind::Unit, g.clone(), Alphabet::singleton());
    let counit = structure_relation(StructureKind::Counit, g.clone(), Alphabet::singleton());
    let cup = structure_relation(StructureKind::Cup, g.clone(), Alphabet::singleton());
    let cap = structure_relation(StructureKind::Cap, g.clone(), Alphabet::singleton());
    let id1 = idw(&g, 1);
    let t = tau(&g, 1, 1);

    // Monoid and comonoid laws.
    {
        let assoc_l = mul.tensor(&id1)?.compose(&mul)?;
        let assoc_r = id1.tensor(&mul)?.compose(&mul)?;
        push("associativity".to_string(), assoc_l == assoc_r);
        let unit_l = unit.tensor(&id1)?.compose(&mul)?;
        let unit_r = id1.tensor(&unit)?.compose(&mul)?;
        push("unit law".to_string(), unit_l == id1 && unit_r == id1);
        let counit_l = comul.compose(&counit.tensor(&id1)?)?;
        let counit_r = comul.compose(&id1.tensor(&counit)?)?;
        push("counit law".to_string(), counit_l == id1 && counit_r == id1);
    }

    // Frobenius (D): both bent forms equal the straight-through composite.
    {
        let middle = mul.compose(&comul)?;
        let left = comul.tensor(&id1)?.compose(&id1.tensor(&mul)?)?;
        let right = id1.tensor(&comul)?.compose(&mul.tensor(&id1)?)?;
        push("Frobenius (D)".to_string(), left == middle && right == middle);
    }

    // Commutativity of the Frobenius structure.
    push("mul after twist".to_string(), t.compose(&mul)? == mul);
    push("twist after comul".to_string(), comul.compose(&t)? == comul);

    // Snake equations for the self-duality.
    {
        let left = id1.tensor(&cup)?.compose(&cap.tensor(&id1)?)?;
        let right = cup.tensor(&id1)?.compose(&id1.tensor(&cap)?)?;
        push("snake".to_string(), left == id1 && right == id1);
    }

    // Kink removal.
    push("cap after twist".to_string(), t.compose(&cap)? == cap);
    push("twist after cup".to_string(), cup.compose(&t)? == cup);

    // Braiding against the unit object.
    for m in 0..=2usize {
        let holds = tau(&g, m, 0) == idw(&g, m) && tau(&g, 0, m) == idw(&g, m);
        push(format!("twist against unit, width {}", m), holds);
    }

    Ok(results)
}
