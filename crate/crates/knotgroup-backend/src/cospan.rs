//! Cospans of group presentations: a presentation with designated boundary
//! words on each side. Tangle diagrams evaluate by pushout (syntactic
//! amalgamation), giving the knot group for closed diagrams.

use diagram_core::{typecheck, DiagramTerm, Multigraph};

use crate::presentation::{default_names, free_reduce, gen_lit, invert, GWord, Presentation};
use crate::KnotGroupError;

/// A presentation with left/right boundary words, one per wire.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresentationCospan {
    /// Number of (unnamed) generators; names are assigned at the end.
    pub ngens: usize,
    pub relators: Vec<GWord>,
    pub left: Vec<GWord>,
    pub right: Vec<GWord>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CospanKind {
    Id,
    Cup,
    Cap,
    BraidPos,
    BraidNeg,
    Mul,
    Comul,
    Unit,
    Counit,
}

/// The generating cospans. The crossing boxes encode the wire equations of
/// the relational semantics: positive sends `(x, y)` to `(x y x^-1, x)`,
/// negative to `(y, y^-1 x y)`. The Frobenius boxes use the cogroup
/// structure of the free group on one generator: a fork's single boundary
/// word is the product of its two legs.
pub fn structure_cospan(kind: CospanKind) -> PresentationCospan {
    let x = gen_lit(0, false);
    let y = gen_lit(1, false);
    let xi = gen_lit(0, true);
    let yi = gen_lit(1, true);
    match kind {
        CospanKind::Id => PresentationCospan {
            ngens: 1,
            relators: vec![],
            left: vec![vec![x]],
            right: vec![vec![x]],
        },
        CospanKind::Cup => PresentationCospan {
            ngens: 2,
            relators: vec![vec![x, y]],
            left: vec![],
            right: vec![vec![x], vec![y]],
        },
        CospanKind::Cap => PresentationCospan {
            ngens: 2,
            relators: vec![vec![x, y]],
            left: vec![vec![x], vec![y]],
            right: vec![],
        },
        CospanKind::BraidPos => PresentationCospan {
            ngens: 2,
            relators: vec![],
            left: vec![vec![x], vec![y]],
            right: vec![vec![x, y, xi], vec![x]],
        },
        CospanKind::BraidNeg => PresentationCospan {
            ngens: 2,
            relators: vec![],
            left: vec![vec![x], vec![y]],
            right: vec![vec![y], vec![yi, x, y]],
        },
        CospanKind::Mul => PresentationCospan {
            ngens: 2,
            relators: vec![],
            left: vec![vec![x], vec![y]],
            right: vec![vec![x, y]],
        },
        CospanKind::Comul => PresentationCospan {
            ngens: 2,
            relators: vec![],
            left: vec![vec![x, y]],
            right: vec![vec![x], vec![y]],
        },
        CospanKind::Unit => PresentationCospan {
            ngens: 1,
            relators: vec![vec![x]],
            left: vec![],
            right: vec![vec![x]],
        },
        CospanKind::Counit => PresentationCospan {
            ngens: 1,
            relators: vec![vec![x]],
            left: vec![vec![x]],
            right: vec![],
        },
    }
}

fn shift_word(word: &[i32], by: usize) -> GWord {
    word.iter()
        .map(|&lit| if lit > 0 { lit + by as i32 } else { lit - by as i32 })
        .collect()
}

impl PresentationCospan {
    /// Pushout along the shared boundary: disjoint union plus one relator
    /// equating each matched boundary word pair.
    pub fn compose(&self, other: &PresentationCospan) -> Result<PresentationCospan, KnotGroupError> {
        if self.right.len() != other.left.len() {
            return Err(KnotGroupError::InterfaceMismatch {
                expected: self.right.len(),
                found: other.left.len(),
            });
        }
        let shift = self.ngens;
        let mut relators = self.relators.clone();
        relators.extend(other.relators.iter().map(|r| shift_word(r, shift)));
        for (mine, theirs) in self.right.iter().zip(&other.left) {
            let mut rel = mine.clone();
            rel.extend(invert(&shift_word(theirs, shift)));
            relators.push(free_reduce(&rel));
        }
        Ok(PresentationCospan {
            ngens: self.ngens + other.ngens,
            relators,
            left: self.left.clone(),
            right: other.right.iter().map(|r| shift_word(r, shift)).collect(),
        })
    }

    /// Disjoint union with concatenated boundaries.
    pub fn tensor(&self, other: &PresentationCospan) -> PresentationCospan {
        let shift = self.ngens;
        let mut relators = self.relators.clone();
        relators.extend(other.relators.iter().map(|r| shift_word(r, shift)));
        let mut left = self.left.clone();
        left.extend(other.left.iter().map(|w| shift_word(w, shift)));
        let mut right = self.right.clone();
        right.extend(other.right.iter().map(|w| shift_word(w, shift)));
        PresentationCospan { ngens: self.ngens + other.ngens, relators, left, right }
    }

    pub fn into_presentation(self) -> Result<Presentation, KnotGroupError> {
        if !self.left.is_empty() || !self.right.is_empty() {
            return Err(KnotGroupError::NotClosed(format!(
                "cospan has boundary {} -> {}",
                self.left.len(),
                self.right.len()
            )));
        }
        Ok(Presentation::new(default_names(self.ngens), self.relators)?)
    }
}

fn eval_cospan(term: &DiagramTerm) -> Result<PresentationCospan, KnotGroupError> {
    match term {
        DiagramTerm::Gen(_) => Err(KnotGroupError::HasComponents),
        DiagramTerm::Id(w) => {
            let mut acc =
                PresentationCospan { ngens: 0, relators: vec![], left: vec![], right: vec![] };
            for _ in 0..w.len() {
                acc = acc.tensor(&structure_cospan(CospanKind::Id));
            }
            Ok(acc)
        }
        DiagramTerm::Compose(f, g) => eval_cospan(f)?.compose(&eval_cospan(g)?),
        DiagramTerm::Tensor(f, g) => Ok(eval_cospan(f)?.tensor(&eval_cospan(g)?)),
        DiagramTerm::Braid(a, b) | DiagramTerm::BraidInv(a, b) => {
            if a.len() + b.len() != 2 || a.len() != 1 {
                let expanded = diagram_core::desugar(term);
                return eval_cospan(&expanded);
            }
            Ok(structure_cospan(match term {
                DiagramTerm::Braid(_, _) => CospanKind::BraidPos,
                _ => CospanKind::BraidNeg,
            }))
        }
        DiagramTerm::Mul(_) => Ok(structure_cospan(CospanKind::Mul)),
        DiagramTerm::Comul(_) => Ok(structure_cospan(CospanKind::Comul)),
        DiagramTerm::Unit(_) => Ok(structure_cospan(CospanKind::Unit)),
        DiagramTerm::Counit(_) => Ok(structure_cospan(CospanKind::Counit)),
        DiagramTerm::Cup(_) => Ok(structure_cospan(CospanKind::Cup)),
        DiagramTerm::Cap(_) => Ok(structure_cospan(CospanKind::Cap)),
    }
}

/// Evaluates a closed structure-only diagram to its group presentation:
/// one generator per cospan generator in evaluation order, relators from
/// the boxes and the pushout matchings.
pub fn eval_presentation(term: &DiagramTerm) -> Result<Presentation, KnotGroupError> {
    if term.has_components() {
        return Err(KnotGroupError::HasComponents);
    }
    // Typecheck over a synthesized one-wire-per-name multigraph.
    let mut names = Vec::new();
    collect_wire_names(term, &mut names);
    let mut mg = Multigraph::new();
    for n in &names {
        mg.add_wire(n.clone());
    }
    if names.is_empty() {
        mg.add_wire("X");
    }
    let iface = typecheck(term, &mg)?;
    if !iface.is_closed() {
        return Err(KnotGroupError::NotClosed(format!("diagram has interface {}", iface)));
    }
    eval_cospan(term)?.into_presentation()
}

fn collect_wire_names(term: &DiagramTerm, out: &mut Vec<String>) {
    let mut push = |n: &str| {
        if !out.iter().any(|w| w == n) {
            out.push(n.to_string());
        }
    };
    match term {
        DiagramTerm::Compose(f, g) | DiagramTerm::Tensor(f, g) => {
            collect_wire_names(f, out);
            collect_wire_names(g, out);
        }
        DiagramTerm::Id(w) => w.0.iter().for_each(|n| push(n)),
        DiagramTerm::Braid(a, b) | DiagramTerm::BraidInv(a, b) => {
            a.0.iter().chain(b.0.iter()).for_each(|n| push(n));
        }
        DiagramTerm::Mul(x)
        | DiagramTerm::Comul(x)
        | DiagramTerm::Unit(x)
        | DiagramTerm::Counit(x)
        | DiagramTerm::Cup(x)
        | DiagramTerm::Cap(x) => push(x),
        DiagramTerm::Gen(_) => {}
    }
}
