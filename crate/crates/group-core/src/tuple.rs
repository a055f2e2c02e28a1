//! Fixed-width tuples of group elements and their diagonal conjugacy
//! closure: the smallest superset closed under conjugating every coordinate
//! simultaneously by one group element.

use std::collections::BTreeSet;

use crate::FiniteGroup;

/// A tuple of element indices; width is fixed by context.
pub type GroupTuple = Vec<usize>;

/// Conjugates every coordinate of `tuple` by `h` (diagonal action).
pub fn conj_tuple(group: &FiniteGroup, tuple: &[usize], h: usize) -> GroupTuple {
    tuple.iter().map(|&x| group.conj(x, h)).collect()
}

/// Closure of `seeds` under the diagonal conjugation action of the whole
/// group. Output is sorted lexicographically and deduplicated.
pub fn conjugacy_closure(group: &FiniteGroup, seeds: &[GroupTuple]) -> Vec<GroupTuple> {
    let mut out: BTreeSet<GroupTuple> = BTreeSet::new();
    for seed in seeds {
        for h in 0..group.order() {
            out.insert(conj_tuple(group, seed, h));
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::builtin("S3").unwrap()
    }

    fn elem(g: &FiniteGroup, name: &str) -> usize {
        g.element_by_name(name).unwrap()
    }

    /// The running four-transposition seed (12,13,23,13) as element indices.
    fn transposition_seed(g: &FiniteGroup) -> GroupTuple {
        vec![
            elem(g, "(1 2)"),
            elem(g, "(1 3)"),
            elem(g, "(2 3)"),
            elem(g, "(1 3)"),
        ]
    }

    #[test]
    fn transposition_seed_orbit_has_six_tuples() {
        let g = s3();
        let seed = transposition_seed(&g);
        // Whole-tuple product must be the identity for the seed to be usable
        // as an I -> G^4 relation later.
        assert_eq!(g.product(seed.iter().copied()), g.identity());
        let closure = conjugacy_closure(&g, &[seed.clone()]);
        assert_eq!(closure.len(), 6);
        // Orbit enumeration oracle: one pass over all conjugators.
        let oracle: BTreeSet<GroupTuple> =
            (0..g.order()).map(|h| conj_tuple(&g, &seed, h)).collect();
        assert_eq!(closure, oracle.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn identity_pair_is_fixed() {
        let g = s3();
        let closure = conjugacy_closure(&g, &[vec![0, 0]]);
        assert_eq!(closure, vec![vec![0, 0]]);
    }

    #[test]
    fn three_cycle_orbit_is_its_class() {
        let g = s3();
        let c = elem(&g, "(1 2 3)");
        let closure = conjugacy_closure(&g, &[vec![c]]);
        let class: BTreeSet<GroupTuple> = [elem(&g, "(1 2 3)"), elem(&g, "(1 3 2)")]
            .into_iter()
            .map(|x| vec![x])
            .collect();
        assert_eq!(closure, class.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        let g = FiniteGroup::builtin("D4").unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let orbit = conjugacy_closure(&g, &[vec![a, b]]);
                assert_eq!(g.order() % orbit.len(), 0);
            }
        }
    }

    #[test]
    fn closure_agrees_with_inverse_conjugation() {
        // Closing under h |-> h x h^-1 and under h |-> h^-1 x h give the same
        // set once quantified over the whole group.
        let g = s3();
        let seed = transposition_seed(&g);
        let closure = conjugacy_closure(&g, &[seed.clone()]);
        let alt: BTreeSet<GroupTuple> = (0..g.order())
            .map(|h| {
                seed.iter()
                    .map(|&x| g.mul(g.mul(g.inv(h), x), h))
                    .collect::<Vec<_>>()
            })
            .collect();
        assert_eq!(closure, alt.into_iter().collect::<Vec<_>>());
    }
}
