//! Elimination of derived generators.
//!
//! Cups and caps unfold through the Frobenius structure (`cup = unit;comul`,
//! `cap = mul;counit`), and braids on words expand to composites of
//! single-wire crossings through the hexagon identities. Braids on the empty
//! word are identities.

use crate::multigraph::Word;
use crate::term::DiagramTerm;

/// Rewrites a typechecked term so that only single-wire `Braid`/`BraidInv`
/// leaves remain and no `Cup`/`Cap` occurs. Total on typechecked input,
/// interface-preserving, idempotent.
pub fn desugar(term: &DiagramTerm) -> DiagramTerm {
    match term {
        DiagramTerm::Compose(f, g) => desugar(f).then(desugar(g)),
        DiagramTerm::Tensor(f, g) => desugar(f).tensor(desugar(g)),
        DiagramTerm::Cup(x) => DiagramTerm::Unit(x.clone()).then(DiagramTerm::Comul(x.clone())),
        DiagramTerm::Cap(x) => DiagramTerm::Mul(x.clone()).then(DiagramTerm::Counit(x.clone())),
        DiagramTerm::Braid(a, b) => expand_braid(false, a, b),
        DiagramTerm::BraidInv(a, b) => expand_braid(true, a, b),
        other => other.clone(),
    }
}

/// Expands a block crossing into single-wire crossings.
///
/// The left-split is the second hexagon: crossing `a0·A'` past `B` first
/// crosses `A'`, then `a0`. The right-split is the first hexagon: crossing
/// `a0` past `b0·B'` crosses `b0` first, then `B'`. Negative crossings expand
/// by the mirrored rules, so the result stays the inverse of the matching
/// positive braid.
fn expand_braid(inv: bool, a: &Word, b: &Word) -> DiagramTerm {
    if a.is_empty() {
        return DiagramTerm::Id(b.clone());
    }
    if b.is_empty() {
        return DiagramTerm::Id(a.clone());
    }
    if a.len() == 1 && b.len() == 1 {
        return if inv {
            DiagramTerm::BraidInv(a.clone(), b.clone())
        } else {
            DiagramTerm::Braid(a.clone(), b.clone())
        };
    }
    if a.len() > 1 {
        let a0 = Word(vec![a.0[0].clone()]);
        let rest = Word(a.0[1..].to_vec());
        let inner = DiagramTerm::Id(a0.clone()).tensor(expand_braid(inv, &rest, b));
        let outer = expand_braid(inv, &a0, b).tensor(DiagramTerm::Id(rest));
        return inner.then(outer);
    }
    let b0 = Word(vec![b.0[0].clone()]);
    let rest = Word(b.0[1..].to_vec());
    let first = expand_braid(inv, a, &b0).tensor(DiagramTerm::Id(rest.clone()));
    let second = DiagramTerm::Id(b0).tensor(expand_braid(inv, a, &rest));
    first.then(second)
}
