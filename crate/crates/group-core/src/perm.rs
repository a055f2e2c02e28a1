//! Permutations on points `1..=degree`, stored 0-based, with cycle-notation
//! parsing and printing.
//!
//! Product convention: `(p * q)` applies `q` first, then `p`. Under this
//! convention `(1 2)(1 3) = (1 3 2)`.

use std::fmt;

use crate::GroupError;

/// A permutation of `{0, .., degree-1}`; `map[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            map: (0..degree).collect(),
        }
    }

    /// Builds from an image table, checking it is a bijection.
    pub fn from_images(map: Vec<usize>) -> Result<Self, GroupError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &img in &map {
            if img >= n {
                return Err(GroupError::BadPermutation(format!(
                    "image {} out of range for degree {}",
                    img + 1,
                    n
                )));
            }
            if seen[img] {
                return Err(GroupError::BadPermutation(format!(
                    "point {} repeated",
                    img + 1
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.map[point]
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn product(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            map: (0..self.degree()).map(|i| self.map[other.map[i]]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &img) in self.map.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Parses cycle notation: `"e"` or `"()"` for the identity, cycles with
    /// points separated by whitespace or commas, e.g. `"(1 2)"`, `"(1 2 3)(4 5)"`.
    ///
    /// With `compat` set, a bare two-digit token like `"12"` is read as the
    /// transposition `(1 2)`, matching a common shorthand. Off by default.
    pub fn parse(text: &str, degree: usize, compat: bool) -> Result<Self, GroupError> {
        let s = text.trim();
        if s == "e" || s == "()" {
            return Ok(Permutation::identity(degree));
        }
        if compat && s.len() == 2 && s.chars().all(|c| c.is_ascii_digit()) {
            let a = s[0..1].parse::<usize>().unwrap();
            let b = s[1..2].parse::<usize>().unwrap();
            return Self::from_cycles(&[vec![a, b]], degree);
        }
        if !s.starts_with('(') {
            return Err(GroupError::BadPermutation(format!(
                "expected cycle notation, got {:?}",
                text
            )));
        }
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(GroupError::BadPermutation(format!(
                    "unexpected text {:?} after cycles",
                    rest
                )));
            }
            let close = rest.find(')').ok_or_else(|| {
                GroupError::BadPermutation(format!("unclosed cycle in {:?}", text))
            })?;
            let body = &rest[1..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let p = tok.parse::<usize>().map_err(|_| {
                    GroupError::BadPermutation(format!("bad point {:?} in {:?}", tok, text))
                })?;
                cycle.push(p);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::from_cycles(&cycles, degree)
    }

    /// Builds from 1-based cycles.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self, GroupError> {
        let mut map: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                if from == 0 || from > degree {
                    return Err(GroupError::BadPermutation(format!(
                        "point {} out of range 1..={}",
                        from, degree
                    )));
                }
                if used[from - 1] {
                    return Err(GroupError::BadPermutation(format!("point {} repeated", from)));
                }
                used[from - 1] = true;
                map[from - 1] = to - 1;
                if to == 0 || to > degree {
                    return Err(GroupError::BadPermutation(format!(
                        "point {} out of range 1..={}",
                        to, degree
                    )));
                }
            }
        }
        Self::from_images(map)
    }

    /// Cycle-notation rendering; the identity prints as `"()"`.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            loop {
                seen[p] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.map[p];
                if p == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}
