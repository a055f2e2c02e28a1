//! Tietze simplification: delete trivial relators, eliminate generators
//! that some relator defines in terms of the others, keep everything
//! freely and cyclically reduced. Each pass preserves the presented group.

use std::collections::BTreeSet;

use crate::presentation::{
    cyclic_canonical, cyclic_reduce, invert, lit_gen, substitute, GWord, Presentation,
};

pub const DEFAULT_MAX_PASSES: usize = 64;

/// Runs elimination passes to a fixpoint or `max_passes`. Deterministic:
/// always eliminates the lowest-index eliminable generator first.
pub fn tietze_simplify(p: &Presentation, max_passes: usize) -> Presentation {
    let mut names: Vec<String> = p.generator_names().to_vec();
    let mut relators: Vec<GWord> = p.relators().to_vec();
    for _ in 0..max_passes {
        relators = tidy(relators);
        match find_elimination(names.len(), &relators) {
            None => break,
            Some((gen, rel_idx, replacement)) => {
                relators.remove(rel_idx);
                relators = relators
                    .iter()
                    .map(|r| substitute(r, gen, &replacement))
                    .collect();
                // Renumber: drop the eliminated generator.
                names.remove(gen);
                relators = relators
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|&lit| {
                                let g = lit_gen(lit);
                                debug_assert_ne!(g, gen);
                                if g > gen {
                                    if lit > 0 {
                                        lit - 1
                                    } else {
                                        lit + 1
                                    }
                                } else {
                                    lit
                                }
                            })
                            .collect()
                    })
                    .collect();
            }
        }
    }
    relators = tidy(relators);
    Presentation::new(names, relators).expect("renumbering keeps relators in range")
}

/// Cyclically reduces, drops empty relators, deduplicates up to rotation
/// and inversion.
fn tidy(relators: Vec<GWord>) -> Vec<GWord> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relators {
        let reduced = cyclic_reduce(&r);
        if reduced.is_empty() {
            continue;
        }
        if seen.insert(cyclic_canonical(&reduced)) {
            out.push(reduced);
        }
    }
    out
}

/// A generator occurring exactly once in some relator can be eliminated:
/// rotate the relator so the occurrence leads, then `g = inverse(rest)`.
/// Picks the lowest-index such generator.
fn find_elimination(ngens: usize, relators: &[GWord]) -> Option<(usize, usize, GWord)> {
    let mut best: Option<(usize, usize, GWord)> = None;
    for (idx, rel) in relators.iter().enumerate() {
        let mut counts = vec![0usize; ngens];
        for &lit in rel {
            counts[lit_gen(lit)] += 1;
        }
        for (pos, &lit) in rel.iter().enumerate() {
            let g = lit_gen(lit);
            if counts[g] != 1 {
                continue;
            }
            if best.as_ref().is_some_and(|(bg, _, _)| *bg <= g) {
                continue;
            }
            // Rotate so the occurrence is first: rel = g^e . rest.
            let mut rest: GWord = rel[pos + 1..].to_vec();
            rest.extend_from_slice(&rel[..pos]);
            // g^e = rest^-1, so g = rest^-1 (e=+1) or g = rest (e=-1).
            let replacement = if lit > 0 { invert(&rest) } else { rest };
            best = Some((g, idx, replacement));
        }
    }
    best
}
