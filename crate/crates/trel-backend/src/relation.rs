//! Extensional relations between powers of a `(data x group)` alphabet.
//!
//! A coordinate is a pair of a data symbol and a group element; plain
//! group-relation mode is the special case where every wire carries the
//! singleton data alphabet. Tuple sets are kept sorted and deduplicated, so
//! equality of relations is equality of canonical values.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use group_core::FiniteGroup;

use crate::TrelError;

/// Data alphabet of one wire: an ordered list of symbols. The singleton
/// alphabet is the plain-mode default.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet(Arc<Vec<String>>);

impl Alphabet {
    pub fn new(symbols: Vec<String>) -> Alphabet {
        assert!(!symbols.is_empty(), "alphabet must be nonempty");
        Alphabet(Arc::new(symbols))
    }

    pub fn singleton() -> Alphabet {
        Alphabet(Arc::new(vec!["*".to_string()]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn symbol(&self, idx: usize) -> &str {
        &self.0[idx]
    }

    pub fn index_of(&self, sym: &str) -> Option<usize> {
        self.0.iter().position(|s| s == sym)
    }
}

/// One coordinate: `(data index, group element index)`.
pub type Coord = (u16, u16);

/// A tuple of coordinates, inputs first, then outputs.
pub type RelTuple = Vec<Coord>;

/// A relation `G^m -> G^n` (decorated by data alphabets), canonically
/// ordered, with the ambient group attached.
#[derive(Clone, Debug)]
pub struct GRelation {
    group: Arc<FiniteGroup>,
    in_alpha: Vec<Alphabet>,
    out_alpha: Vec<Alphabet>,
    tuples: Vec<RelTuple>,
}

impl PartialEq for GRelation {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other)
            && self.in_alpha == other.in_alpha
            && self.out_alpha == other.out_alpha
            && self.tuples == other.tuples
    }
}

impl Eq for GRelation {}

impl GRelation {
    pub fn new(
        group: Arc<FiniteGroup>,
        in_alpha: Vec<Alphabet>,
        out_alpha: Vec<Alphabet>,
        tuples: impl IntoIterator<Item = RelTuple>,
    ) -> GRelation {
        let width = in_alpha.len() + out_alpha.len();
        let set: BTreeSet<RelTuple> = tuples
            .into_iter()
            .inspect(|t| assert_eq!(t.len(), width, "tuple width must match the interface"))
            .collect();
        GRelation {
            group,
            in_alpha,
            out_alpha,
            tuples: set.into_iter().collect(),
        }
    }

    pub fn empty(group: Arc<FiniteGroup>, in_alpha: Vec<Alphabet>, out_alpha: Vec<Alphabet>) -> GRelation {
        GRelation::new(group, in_alpha, out_alpha, Vec::new())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn in_width(&self) -> usize {
        self.in_alpha.len()
    }

    pub fn out_width(&self) -> usize {
        self.out_alpha.len()
    }

    pub fn in_alphabets(&self) -> &[Alphabet] {
        &self.in_alpha
    }

    pub fn out_alphabets(&self) -> &[Alphabet] {
        &self.out_alpha
    }

    pub fn tuples(&self) -> &[RelTuple] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, tuple: &[Coord]) -> bool {
        self.tuples.binary_search_by(|t| t.as_slice().cmp(tuple)).is_ok()
    }

    pub fn inputs_of<'t>(&self, tuple: &'t [Coord]) -> &'t [Coord] {
        &tuple[..self.in_width()]
    }

    pub fn outputs_of<'t>(&self, tuple: &'t [Coord]) -> &'t [Coord] {
        &tuple[self.in_width()..]
    }

    /// Groups are compared by multiplication table, with a pointer shortcut.
    pub fn same_group(&self, other: &GRelation) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
            || (self.group.order() == other.group.order()
                && self.group.multiplication_table() == other.group.multiplication_table())
    }

    /// The identity relation on the given alphabets.
    pub fn identity(group: Arc<FiniteGroup>, alphabets: Vec<Alphabet>) -> GRelation {
        let tuples = enumerate_coords(&group, &alphabets).map(|t| {
            let mut pair = t.clone();
            pair.extend_from_slice(&t);
            pair
        });
        let tuples: Vec<RelTuple> = tuples.collect();
        GRelation::new(group, alphabets.clone(), alphabets, tuples)
    }

    /// The converse relation (inputs and outputs swapped).
    pub fn reverse(&self) -> GRelation {
        let m = self.in_width();
        let tuples = self.tuples.iter().map(|t| {
            let mut rev = t[m..].to_vec();
            rev.extend_from_slice(&t[..m]);
            rev
        });
        GRelation::new(
            self.group.clone(),
            self.out_alpha.clone(),
            self.in_alpha.clone(),
            tuples.collect::<Vec<_>>(),
        )
    }

    /// Relational composition via an indexed join on the middle interface.
    pub fn compose(&self, other: &GRelation) -> Result<GRelation, TrelError> {
        if !self.same_group(other) {
            return Err(TrelError::GroupMismatch);
        }
        if self.out_alpha != other.in_alpha {
            return Err(TrelError::InterfaceMismatch(format!(
                "cannot compose: codomain width {} does not meet domain width {}",
                self.out_width(),
                other.in_width()
            )));
        }
        let m = other.in_width();
        let mut by_prefix: HashMap<&[Coord], Vec<&[Coord]>> = HashMap::new();
        for t in &other.tuples {
            by_prefix.entry(&t[..m]).or_default().push(&t[m..]);
        }
        let mut out = BTreeSet::new();
        let k = self.in_width();
        for t in &self.tuples {
            if let Some(suffixes) = by_prefix.get(&t[k..]) {
                for suffix in suffixes {
                    let mut joined = t[..k].to_vec();
                    joined.extend_from_slice(suffix);
                    out.insert(joined);
                }
            }
        }
        Ok(GRelation::new(
            self.group.clone(),
            self.in_alpha.clone(),
            other.out_alpha.clone(),
            out,
        ))
    }

    /// Coordinate-concatenated product relation.
    pub fn tensor(&self, other: &GRelation) -> Result<GRelation, TrelError> {
        if !self.same_group(other) {
            return Err(TrelError::GroupMismatch);
        }
        let mut in_alpha = self.in_alpha.clone();
        in_alpha.extend(other.in_alpha.iter().cloned());
        let mut out_alpha = self.out_alpha.clone();
        out_alpha.extend(other.out_alpha.iter().cloned());
        let (m, n) = (self.in_width(), other.in_width());
        let mut tuples = Vec::with_capacity(self.len() * other.len());
        for s in &self.tuples {
            for t in &other.tuples {
                let mut joined = s[..m].to_vec();
                joined.extend_from_slice(&t[..n]);
                joined.extend_from_slice(&s[m..]);
                joined.extend_from_slice(&t[n..]);
                tuples.push(joined);
            }
        }
        Ok(GRelation::new(self.group.clone(), in_alpha, out_alpha, tuples))
    }

    /// Canonical text form: one tuple per line, inputs, an arrow, outputs.
    /// Coordinates print in cycle notation, prefixed by their data symbol
    /// outside plain mode. An empty side prints as `*`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for t in &self.tuples {
            let side = |coords: &[Coord], alphas: &[Alphabet]| -> String {
                if coords.is_empty() {
                    return "*".to_string();
                }
                coords
                    .iter()
                    .zip(alphas)
                    .map(|(&(d, g), a)| {
                        if a.is_singleton() {
                            self.group.name(g as usize).to_string()
                        } else {
                            format!("{}:{}", a.symbol(d as usize), self.group.name(g as usize))
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            out.push_str(&side(self.inputs_of(t), &self.in_alpha));
            out.push_str(" \u{2192} ");
            out.push_str(&side(self.outputs_of(t), &self.out_alpha));
            out.push('\n');
        }
        out
    }

    /// JSON mirror of [`GRelation::render`].
    pub fn to_json(&self) -> serde_json::Value {
        let coord_strings = |coords: &[Coord], alphas: &[Alphabet]| -> Vec<serde_json::Value> {
            coords
                .iter()
                .zip(alphas)
                .map(|(&(d, g), a)| {
                    let s = if a.is_singleton() {
                        self.group.name(g as usize).to_string()
                    } else {
                        format!("{}:{}", a.symbol(d as usize), self.group.name(g as usize))
                    };
                    serde_json::Value::String(s)
                })
                .collect()
        };
        let tuples: Vec<serde_json::Value> = self
            .tuples
            .iter()
            .map(|t| {
                serde_json::json!({
                    "in": coord_strings(self.inputs_of(t), &self.in_alpha),
                    "out": coord_strings(self.outputs_of(t), &self.out_alpha),
                })
            })
            .collect();
        serde_json::json!({
            "in_width": self.in_width(),
            "out_width": self.out_width(),
            "tuples": tuples,
        })
    }
}

/// All coordinate tuples over the given alphabets (full product).
pub fn enumerate_coords<'a>(
    group: &'a FiniteGroup,
    alphabets: &'a [Alphabet],
) -> impl Iterator<Item = RelTuple> + 'a {
    let widths: Vec<usize> = alphabets.iter().map(|a| a.len() * group.order()).collect();
    let total: usize = widths.iter().product();
    let order = group.order();
    (0..total).map(move |mut ix| {
        let mut tuple = Vec::with_capacity(alphabets.len());
        for &w in &widths {
            let c = ix % w;
            ix /= w;
            tuple.push(((c / order) as u16, (c % order) as u16));
        }
        tuple
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::builtin("S3").unwrap())
    }

    fn plain(w: usize) -> Vec<Alphabet> {
        vec![Alphabet::singleton(); w]
    }

    #[test]
    fn identity_has_group_order_tuples() {
        let g = s3();
        let id1 = GRelation::identity(g.clone(), plain(1));
        assert_eq!(id1.len(), 6);
        let id2 = GRelation::identity(g, plain(2));
        assert_eq!(id2.len(), 36);
    }

    #[test]
    fn compose_with_identity_is_identity_map() {
        let g = s3();
        let tuples = vec![vec![(0u16, 1u16), (0, 2)], vec![(0, 0), (0, 0)]];
        let r = GRelation::new(g.clone(), plain(1), plain(1), tuples);
        let id = GRelation::identity(g, plain(1));
        assert_eq!(r.compose(&id).unwrap(), r);
        assert_eq!(id.compose(&r).unwrap(), r);
    }

    #[test]
    fn empty_annihilates_composition_and_tensor() {
        let g = s3();
        let e = GRelation::empty(g.clone(), plain(0), plain(1));
        let id = GRelation::identity(g.clone(), plain(1));
        assert!(e.compose(&id).unwrap().is_empty());
        assert!(e.tensor(&id).unwrap().is_empty());
    }

    #[test]
    fn tensor_of_identities_is_bigger_identity() {
        let g = s3();
        let id1 = GRelation::identity(g.clone(), plain(1));
        let id2 = GRelation::identity(g.clone(), plain(2));
        assert_eq!(id1.tensor(&id1).unwrap(), id2);
    }

    #[test]
    fn composition_is_associative_on_canonical_sets() {
        let g = s3();
        // Three small handmade relations G -> G.
        let a = GRelation::new(g.clone(), plain(1), plain(1), vec![
            vec![(0u16, 0u16), (0, 1)],
            vec![(0, 1), (0, 2)],
            vec![(0, 1), (0, 3)],
        ]);
        let b = GRelation::new(g.clone(), plain(1), plain(1), vec![
            vec![(0u16, 1u16), (0, 4)],
            vec![(0, 2), (0, 5)],
            vec![(0, 3), (0, 4)],
        ]);
        let c = GRelation::new(g.clone(), plain(1), plain(1), vec![
            vec![(0u16, 4u16), (0, 0)],
            vec![(0, 5), (0, 5)],
        ]);
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn width_mismatch_is_an_error() {
        let g = s3();
        let id1 = GRelation::identity(g.clone(), plain(1));
        let id2 = GRelation::identity(g, plain(2));
        assert!(matches!(id1.compose(&id2), Err(TrelError::InterfaceMismatch(_))));
    }

    #[test]
    fn group_mismatch_is_an_error() {
        let a = GRelation::identity(s3(), plain(1));
        let b = GRelation::identity(
            Arc::new(group_core::FiniteGroup::builtin("C4").unwrap()),
            plain(1),
        );
        assert!(matches!(a.compose(&b), Err(TrelError::GroupMismatch)));
        assert!(matches!(a.tensor(&b), Err(TrelError::GroupMismatch)));
    }

    #[test]
    fn render_uses_cycle_notation() {
        let g = s3();
        let t12 = g.element_by_name("(1 2)").unwrap() as u16;
        let r = GRelation::new(g, plain(1), plain(1), vec![vec![(0, t12), (0, 0)]]);
        assert_eq!(r.render(), "(1 2) \u{2192} ()\n");
    }
}
