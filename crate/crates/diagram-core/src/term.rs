//! Abstract syntax of tangled circuit diagrams.
//!
//! Composition is written and stored in diagram order: `Compose(f, g)` runs
//! `f` first, matching wire pictures read left to right. Tensor and Compose
//! are binary in the AST; [`DiagramTerm::flatten`] gives the strict
//! (associativity-normalized) spine used for structural comparisons.

use std::collections::BTreeMap;

use crate::multigraph::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagramTerm {
    /// A named component of the multigraph.
    Gen(String),
    /// Identity on a word; `Id(I)` is the identity scalar diagram.
    Id(Word),
    /// `Compose(f, g)`: `f` then `g` (diagram order).
    Compose(Box<DiagramTerm>, Box<DiagramTerm>),
    Tensor(Box<DiagramTerm>, Box<DiagramTerm>),
    /// Positive crossing `A (x) B -> B (x) A`, first block over.
    Braid(Word, Word),
    /// Negative crossing `A (x) B -> B (x) A`, the inverse of `Braid(B, A)`.
    BraidInv(Word, Word),
    Mul(String),
    Comul(String),
    Unit(String),
    Counit(String),
    Cup(String),
    Cap(String),
}

impl DiagramTerm {
    pub fn then(self, next: DiagramTerm) -> DiagramTerm {
        DiagramTerm::Compose(Box::new(self), Box::new(next))
    }

    pub fn tensor(self, other: DiagramTerm) -> DiagramTerm {
        DiagramTerm::Tensor(Box::new(self), Box::new(other))
    }

    /// Composes a nonempty sequence in diagram order.
    pub fn pipeline(stages: Vec<DiagramTerm>) -> DiagramTerm {
        let mut it = stages.into_iter();
        let first = it.next().expect("pipeline of at least one stage");
        it.fold(first, |acc, t| acc.then(t))
    }

    /// Tensors a nonempty sequence left to right.
    pub fn row(factors: Vec<DiagramTerm>) -> DiagramTerm {
        let mut it = factors.into_iter();
        let first = it.next().expect("row of at least one factor");
        it.fold(first, |acc, t| acc.tensor(t))
    }

    /// Counts `Gen` leaves by component name.
    pub fn generator_census(&self) -> BTreeMap<String, usize> {
        let mut counts = BTreeMap::new();
        self.census_into(&mut counts);
        counts
    }

    fn census_into(&self, counts: &mut BTreeMap<String, usize>) {
        match self {
            DiagramTerm::Gen(name) => *counts.entry(name.clone()).or_insert(0) += 1,
            DiagramTerm::Compose(f, g) | DiagramTerm::Tensor(f, g) => {
                f.census_into(counts);
                g.census_into(counts);
            }
            _ => {}
        }
    }

    pub fn has_components(&self) -> bool {
        match self {
            DiagramTerm::Gen(_) => true,
            DiagramTerm::Compose(f, g) | DiagramTerm::Tensor(f, g) => {
                f.has_components() || g.has_components()
            }
            _ => false,
        }
    }

    /// The associativity-normal form: a composition spine of tensor rows of
    /// leaves. Compose and Tensor chains are flattened; nothing else changes.
    pub fn flatten(&self) -> FlatTerm {
        let mut stages = Vec::new();
        self.flatten_compose(&mut stages);
        FlatTerm { stages }
    }

    /// Rebuilds the term with every Compose and Tensor chain left-associated,
    /// recursively. Two terms equal up to strict associativity normalize to
    /// the same tree.
    pub fn normalized(&self) -> DiagramTerm {
        match self {
            DiagramTerm::Compose(_, _) => {
                let mut stages = Vec::new();
                self.collect_compose(&mut stages);
                DiagramTerm::pipeline(stages)
            }
            DiagramTerm::Tensor(_, _) => {
                let mut factors = Vec::new();
                self.collect_tensor(&mut factors);
                DiagramTerm::row(factors)
            }
            other => other.clone(),
        }
    }

    fn collect_compose(&self, out: &mut Vec<DiagramTerm>) {
        match self {
            DiagramTerm::Compose(f, g) => {
                f.collect_compose(out);
                g.collect_compose(out);
            }
            other => out.push(other.normalized()),
        }
    }

    fn collect_tensor(&self, out: &mut Vec<DiagramTerm>) {
        match self {
            DiagramTerm::Tensor(f, g) => {
                f.collect_tensor(out);
                g.collect_tensor(out);
            }
            other => out.push(other.normalized()),
        }
    }

    fn flatten_compose(&self, stages: &mut Vec<Vec<DiagramTerm>>) {
        match self {
            DiagramTerm::Compose(f, g) => {
                f.flatten_compose(stages);
                g.flatten_compose(stages);
            }
            other => {
                let mut factors = Vec::new();
                other.flatten_tensor(&mut factors);
                stages.push(factors);
            }
        }
    }

    fn flatten_tensor(&self, factors: &mut Vec<DiagramTerm>) {
        match self {
            DiagramTerm::Tensor(f, g) => {
                f.flatten_tensor(factors);
                g.flatten_tensor(factors);
            }
            other => factors.push(other.clone()),
        }
    }
}

/// Flattened form for structural equality: stages of tensor factors.
/// Tensor factors that are themselves compositions keep their own structure;
/// only top-level chains are flattened here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlatTerm {
    pub stages: Vec<Vec<DiagramTerm>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::Word;

    fn gen(name: &str) -> DiagramTerm {
        DiagramTerm::Gen(name.to_string())
    }

    #[test]
    fn census_counts_leaves() {
        let term = gen("R").tensor(gen("R")).then(gen("S"));
        let census = term.generator_census();
        assert_eq!(census.get("R"), Some(&2));
        assert_eq!(census.get("S"), Some(&1));
    }

    #[test]
    fn structure_only_term_has_empty_census() {
        let term = DiagramTerm::Cup("X".into()).then(DiagramTerm::Cap("X".into()));
        assert!(term.generator_census().is_empty());
        assert!(!term.has_components());
    }

    #[test]
    fn flatten_ignores_association() {
        let a = gen("a");
        let b = gen("b");
        let c = gen("c");
        let left = a.clone().then(b.clone()).then(c.clone());
        let right = a.then(b.then(c));
        assert_eq!(left.flatten(), right.flatten());
        assert_ne!(left, right);
    }

    #[test]
    fn flatten_ignores_tensor_association() {
        let row1 = gen("a").tensor(gen("b")).tensor(DiagramTerm::Id(Word::single("X")));
        let row2 = gen("a").tensor(gen("b").tensor(DiagramTerm::Id(Word::single("X"))));
        assert_eq!(row1.flatten(), row2.flatten());
    }
}
