//! Counting homomorphisms from a finitely presented group into a finite
//! group by backtracking with relator propagation: a relator whose
//! generators are otherwise assigned, and which mentions its last generator
//! exactly once, determines that generator's image.

use group_core::FiniteGroup;

use crate::presentation::{lit_gen, GWord, Presentation};
use crate::KnotGroupError;

/// Generator cap for unbudgeted calls.
pub const DEFAULT_GENERATOR_LIMIT: usize = 12;

/// Counts assignments of the generators into `group` killing every
/// relator. Errors when the presentation exceeds the default generator
/// limit; pass an explicit budget through [`hom_count_budgeted`] instead.
pub fn hom_count(p: &Presentation, group: &FiniteGroup) -> Result<u64, KnotGroupError> {
    if p.generator_count() > DEFAULT_GENERATOR_LIMIT {
        return Err(KnotGroupError::BudgetExceeded(format!(
            "{} generators exceed the default limit {}; supply a search budget",
            p.generator_count(),
            DEFAULT_GENERATOR_LIMIT
        )));
    }
    hom_count_budgeted(p, group, u64::MAX)
}

/// As [`hom_count`], but explores at most `max_nodes` search nodes and
/// fails if the budget runs out. The count is exact when it returns.
pub fn hom_count_budgeted(
    p: &Presentation,
    group: &FiniteGroup,
    max_nodes: u64,
) -> Result<u64, KnotGroupError> {
    let n = p.generator_count();
    // Empty relators mean the trivial quotient of the ambient free group is
    // inconsistent only if a nonempty reduced relator became empty; freely
    // reduced empties are tautologies.
    let relators: Vec<&GWord> = p.relators().iter().filter(|r| !r.is_empty()).collect();
    let mut state = Search {
        group,
        relators: &relators,
        assignment: vec![None; n],
        nodes: 0,
        max_nodes,
        count: 0,
    };
    state.run(0)?;
    Ok(state.count)
}

struct Search<'a> {
    group: &'a FiniteGroup,
    relators: &'a [&'a GWord],
    assignment: Vec<Option<usize>>,
    nodes: u64,
    max_nodes: u64,
    count: u64,
}

impl Search<'_> {
    fn run(&mut self, mut next: usize) -> Result<(), KnotGroupError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(KnotGroupError::BudgetExceeded(format!(
                "search exceeded {} nodes",
                self.max_nodes
            )));
        }
        // Propagate all determined generators before branching.
        let trail_start = self.propagate()?;
        match trail_start {
            Propagation::Contradiction(trail) => {
                self.unwind(trail);
                return Ok(());
            }
            Propagation::Extended(trail) => {
                while next < self.assignment.len() && self.assignment[next].is_some() {
                    next += 1;
                }
                if next == self.assignment.len() {
                    if self.all_satisfied() {
                        self.count += 1;
                    }
                    self.unwind(trail);
                    return Ok(());
                }
                for value in 0..self.group.order() {
                    self.assignment[next] = Some(value);
                    if self.consistent() {
                        self.run(next + 1)?;
                    }
                    self.assignment[next] = None;
                }
                self.unwind(trail);
                Ok(())
            }
        }
    }

    fn unwind(&mut self, trail: Vec<usize>) {
        for g in trail {
            self.assignment[g] = None;
        }
    }

    /// Repeatedly solve relators with a single unassigned generator
    /// occurring once. Returns the trail of forced assignments.
    fn propagate(&mut self) -> Result<Propagation, KnotGroupError> {
        let mut trail = Vec::new();
        loop {
            let mut progressed = false;
            for rel in self.relators {
                match self.solve_relator(rel) {
                    RelatorState::Violated => {
                        return Ok(Propagation::Contradiction(trail));
                    }
                    RelatorState::Forced(gen, value) => {
                        self.assignment[gen] = Some(value);
                        trail.push(gen);
                        progressed = true;
                    }
                    RelatorState::Open | RelatorState::Satisfied => {}
                }
            }
            if !progressed {
                return Ok(Propagation::Extended(trail));
            }
        }
    }

    /// Classifies a relator under the current partial assignment.
    fn solve_relator(&self, rel: &GWord) -> RelatorState {
        let mut unassigned: Option<usize> = None;
        let mut occurrences = 0usize;
        for &lit in rel.iter() {
            let g = lit_gen(lit);
            if self.assignment[g].is_none() {
                match unassigned {
                    None => {
                        unassigned = Some(g);
                        occurrences = 1;
                    }
                    Some(og) if og == g => occurrences += 1,
                    Some(_) => return RelatorState::Open,
                }
            }
        }
        match unassigned {
            None => {
                if self.word_value(rel) == Some(self.group.identity()) {
                    RelatorState::Satisfied
                } else {
                    RelatorState::Violated
                }
            }
            Some(gen) if occurrences == 1 => {
                // rel = u g^e v = 1 with u, v fully assigned: solve for g.
                let pos = rel.iter().position(|&l| lit_gen(l) == gen).unwrap();
                let u = self.word_value(&rel[..pos]).unwrap();
                let v = self.word_value(&rel[pos + 1..]).unwrap();
                // u * g^e * v = 1  =>  g^e = u^-1 v^-1.
                let target = self.group.mul(self.group.inv(u), self.group.inv(v));
                let value = if rel[pos] > 0 { target } else { self.group.inv(target) };
                RelatorState::Forced(gen, value)
            }
            Some(_) => RelatorState::Open,
        }
    }

    /// Value of a fully assigned word, or None if something is unassigned.
    fn word_value(&self, word: &[i32]) -> Option<usize> {
        let mut acc = self.group.identity();
        for &lit in word {
            let value = self.assignment[lit_gen(lit)]?;
            let value = if lit > 0 { value } else { self.group.inv(value) };
            acc = self.group.mul(acc, value);
        }
        Some(acc)
    }

    fn consistent(&self) -> bool {
        self.relators
            .iter()
            .all(|rel| !matches!(self.solve_relator(rel), RelatorState::Violated))
    }

    fn all_satisfied(&self) -> bool {
        self.relators
            .iter()
            .all(|rel| matches!(self.solve_relator(rel), RelatorState::Satisfied))
    }
}

enum RelatorState {
    Satisfied,
    Violated,
    Forced(usize, usize),
    Open,
}

enum Propagation {
    Contradiction(Vec<usize>),
    Extended(Vec<usize>),
}
