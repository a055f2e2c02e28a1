//! Spans of finite sets, represented extensionally up to isomorphism by a
//! multiplicity map on (left leg, right leg) value pairs. Composition is the
//! pullback join, so the apex of a composite closed diagram counts exactly
//! the assignments to all intermediate wires.
//!
//! Boundary tuples are packed into 64-bit keys (7 bits per coordinate),
//! which caps boundary widths at 9 wires; the coloring path never exceeds
//! that.

use std::collections::HashMap;
use std::sync::Arc;

use group_core::FiniteGroup;

use crate::SpanError;

/// A tuple of group element indices on one boundary.
pub type BTuple = Vec<u16>;

const COORD_BITS: u32 = 7;
pub(crate) const MAX_WIDTH: usize = (64 / COORD_BITS as usize) - 1;

fn pack(tuple: &[u16]) -> u64 {
    debug_assert!(tuple.len() <= MAX_WIDTH);
    let mut key = 0u64;
    for &v in tuple.iter().rev() {
        debug_assert!((v as u64) < (1 << COORD_BITS));
        key = (key << COORD_BITS) | v as u64;
    }
    key
}

fn unpack(mut key: u64, width: usize) -> BTuple {
    let mut out = Vec::with_capacity(width);
    for _ in 0..width {
        out.push((key & ((1 << COORD_BITS) - 1)) as u16);
        key >>= COORD_BITS;
    }
    out
}

/// A span `G^left <- S -> G^right`. The apex is stored as multiplicities of
/// boundary-value pairs; this is the canonical extensional form of its
/// isomorphism class (only leg fibers and cardinalities are observable).
#[derive(Clone, Debug)]
pub struct FiniteSpan {
    group: Arc<FiniteGroup>,
    left_width: usize,
    right_width: usize,
    apex: HashMap<(u64, u64), u64>,
}

impl PartialEq for FiniteSpan {
    fn eq(&self, other: &Self) -> bool {
        self.left_width == other.left_width
            && self.right_width == other.right_width
            && self.apex == other.apex
            && (Arc::ptr_eq(&self.group, &other.group)
                || self.group.multiplication_table() == other.group.multiplication_table())
    }
}

impl Eq for FiniteSpan {}

impl FiniteSpan {
    pub fn new(
        group: Arc<FiniteGroup>,
        left_width: usize,
        right_width: usize,
        elements: impl IntoIterator<Item = (BTuple, BTuple)>,
    ) -> FiniteSpan {
        assert!(left_width <= MAX_WIDTH && right_width <= MAX_WIDTH);
        let mut apex = HashMap::new();
        for (l, r) in elements {
            assert_eq!(l.len(), left_width);
            assert_eq!(r.len(), right_width);
            *apex.entry((pack(&l), pack(&r))).or_insert(0) += 1;
        }
        FiniteSpan { group, left_width, right_width, apex }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn left_width(&self) -> usize {
        self.left_width
    }

    pub fn right_width(&self) -> usize {
        self.right_width
    }

    /// Total apex size, multiplicities included.
    pub fn apex_size(&self) -> u64 {
        self.apex.values().sum()
    }

    /// Apex support in arbitrary order, for hot paths that only fold over
    /// it.
    pub(crate) fn support_unordered(&self) -> impl Iterator<Item = ((BTuple, BTuple), u64)> + '_ {
        self.apex
            .iter()
            .map(|(&(l, r), &m)| ((unpack(l, self.left_width), unpack(r, self.right_width)), m))
    }

    /// Apex support in a deterministic order.
    pub fn support(&self) -> Vec<((BTuple, BTuple), u64)> {
        let mut entries: Vec<_> = self
            .apex
            .iter()
            .map(|(&(l, r), &m)| ((unpack(l, self.left_width), unpack(r, self.right_width)), m))
            .collect();
        entries.sort();
        entries
    }

    pub fn identity(group: Arc<FiniteGroup>, width: usize) -> FiniteSpan {
        let order = group.order();
        let total = order.pow(width as u32);
        let mut apex = HashMap::with_capacity(total);
        let mut t = vec![0u16; width];
        for mut ix in 0..total {
            for slot in t.iter_mut() {
                *slot = (ix % order) as u16;
                ix /= order;
            }
            let key = pack(&t);
            apex.insert((key, key), 1);
        }
        FiniteSpan { group, left_width: width, right_width: width, apex }
    }

    /// Pullback composition: apex pairs agreeing on the middle boundary,
    /// with multiplicities multiplying.
    pub fn compose(&self, other: &FiniteSpan) -> Result<FiniteSpan, SpanError> {
        if self.right_width != other.left_width {
            return Err(SpanError::InterfaceMismatch {
                expected: self.right_width,
                found: other.left_width,
            });
        }
        let mut by_left: HashMap<u64, Vec<(u64, u64)>> = HashMap::new();
        for (&(l, r), &m) in &other.apex {
            by_left.entry(l).or_default().push((r, m));
        }
        let mut apex: HashMap<(u64, u64), u64> = HashMap::new();
        for (&(l, mid), &m1) in &self.apex {
            if let Some(rights) = by_left.get(&mid) {
                for &(r, m2) in rights {
                    *apex.entry((l, r)).or_insert(0) += m1 * m2;
                }
            }
        }
        Ok(FiniteSpan {
            group: self.group.clone(),
            left_width: self.left_width,
            right_width: other.right_width,
            apex,
        })
    }

    /// Product span with concatenated boundaries.
    pub fn tensor(&self, other: &FiniteSpan) -> FiniteSpan {
        let lshift = COORD_BITS * self.left_width as u32;
        let rshift = COORD_BITS * self.right_width as u32;
        let mut apex = HashMap::with_capacity(self.apex.len() * other.apex.len());
        for (&(l1, r1), &m1) in &self.apex {
            for (&(l2, r2), &m2) in &other.apex {
                let key = (l1 | (l2 << lshift), r1 | (r2 << rshift));
                *apex.entry(key).or_insert(0) += m1 * m2;
            }
        }
        FiniteSpan {
            group: self.group.clone(),
            left_width: self.left_width + other.left_width,
            right_width: self.right_width + other.right_width,
            apex,
        }
    }

    /// Checks the two membership conditions for user-supplied spans: the
    /// diagonal conjugation action permutes the apex (preserving
    /// multiplicity), and every apex element's boundary product defect is
    /// central. Structure spans satisfy both by construction.
    pub fn validate(&self) -> Result<(), SpanError> {
        let g = &self.group;
        for ((l, r), m) in self.support() {
            let lp = g.product(l.iter().map(|&x| x as usize));
            let rp = g.product(r.iter().map(|&x| x as usize));
            let defect = g.mul(lp, g.inv(rp));
            if !g.is_central(defect) {
                return Err(SpanError::NotAnArrow(format!(
                    "boundary product defect {} is not central",
                    g.name(defect)
                )));
            }
            for h in 0..g.order() {
                let lc: BTuple = l.iter().map(|&x| g.conj(x as usize, h) as u16).collect();
                let rc: BTuple = r.iter().map(|&x| g.conj(x as usize, h) as u16).collect();
                if self.apex.get(&(pack(&lc), pack(&rc))) != Some(&m) {
                    return Err(SpanError::NotAnArrow(format!(
                        "conjugation by {} does not permute the apex",
                        g.name(h)
                    )));
                }
            }
        }
        Ok(())
    }
}
