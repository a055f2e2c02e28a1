//! Finitely presented groups: named generators and freely reduced relator
//! words. Words are signed generator sequences; `k+1` and `-(k+1)` encode
//! generator `k` and its inverse.

use crate::KnotGroupError;

pub type GWord = Vec<i32>;

pub fn gen_lit(gen: usize, inverse: bool) -> i32 {
    let v = gen as i32 + 1;
    if inverse {
        -v
    } else {
        v
    }
}

pub fn lit_gen(lit: i32) -> usize {
    (lit.unsigned_abs() - 1) as usize
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(word: &[i32]) -> GWord {
    let mut out: GWord = Vec::with_capacity(word.len());
    for &lit in word {
        if out.last() == Some(&-lit) {
            out.pop();
        } else {
            out.push(lit);
        }
    }
    out
}

/// Conjugation-normalizes: trims matching inverse ends after free
/// reduction.
pub fn cyclic_reduce(word: &[i32]) -> GWord {
    let mut w = free_reduce(word);
    while w.len() >= 2 && *w.first().unwrap() == -*w.last().unwrap() {
        w.remove(0);
        w.pop();
    }
    w
}

pub fn invert(word: &[i32]) -> GWord {
    word.iter().rev().map(|&l| -l).collect()
}

/// Replaces generator `target` by `replacement` (and its inverse by the
/// inverse), freely reducing.
pub fn substitute(word: &[i32], target: usize, replacement: &[i32]) -> GWord {
    let mut out = Vec::with_capacity(word.len());
    for &lit in word {
        if lit_gen(lit) == target {
            if lit > 0 {
                out.extend_from_slice(replacement);
            } else {
                out.extend(invert(replacement));
            }
        } else {
            out.push(lit);
        }
    }
    free_reduce(&out)
}

/// The canonical representative of a relator up to cyclic rotation and
/// inversion, for deduplication.
pub fn cyclic_canonical(word: &[i32]) -> GWord {
    let w = cyclic_reduce(word);
    if w.is_empty() {
        return w;
    }
    let mut best: Option<GWord> = None;
    for candidate in [w.clone(), invert(&w)] {
        for shift in 0..candidate.len() {
            let mut rotated = candidate[shift..].to_vec();
            rotated.extend_from_slice(&candidate[..shift]);
            if best.as_ref().map_or(true, |b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}

/// A group presentation. Relators are stored freely reduced; generator
/// names are for display only.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<GWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<GWord>) -> Result<Presentation, KnotGroupError> {
        let n = generators.len();
        let reduced: Vec<GWord> = relators.iter().map(|r| free_reduce(r)).collect();
        for r in &reduced {
            for &lit in r {
                if lit_gen(lit) >= n {
                    return Err(KnotGroupError::BadWord(format!(
                        "relator references generator {} of {}",
                        lit_gen(lit),
                        n
                    )));
                }
            }
        }
        Ok(Presentation { generators, relators: reduced })
    }

    /// Free group of the given rank with default segment names.
    pub fn free(rank: usize) -> Presentation {
        Presentation {
            generators: default_names(rank),
            relators: Vec::new(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[GWord] {
        &self.relators
    }

    /// Text form: generators, a bar, then relator words; uppercase letters
    /// are inverses of single-letter generators.
    pub fn render(&self) -> String {
        let gens = self.generators.join(", ");
        let rels = self
            .relators
            .iter()
            .map(|r| self.render_word(r))
            .collect::<Vec<_>>()
            .join(", ");
        format!("\u{27e8} {} | {} \u{27e9}", gens, rels)
    }

    pub fn render_word(&self, word: &[i32]) -> String {
        word.iter()
            .map(|&lit| {
                let name = &self.generators[lit_gen(lit)];
                if lit > 0 {
                    name.clone()
                } else if name.len() == 1 && name.chars().next().unwrap().is_ascii_lowercase() {
                    name.to_ascii_uppercase()
                } else {
                    format!("{}^-1", name)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "generators": self.generators,
            "relators": self.relators.iter().map(|r| self.render_word(r)).collect::<Vec<_>>(),
        })
    }
}

/// Deterministic segment names: single letters skipping `i`, then `x<n>`.
pub fn default_names(count: usize) -> Vec<String> {
    let letters: Vec<char> = ('a'..='z').filter(|&c| c != 'i').collect();
    (0..count)
        .map(|k| {
            if k < letters.len() {
                letters[k].to_string()
            } else {
                format!("x{}", k - letters.len())
            }
        })
        .collect()
}
