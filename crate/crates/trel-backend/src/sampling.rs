//! Random validated relations for property testing: seed tuples are drawn
//! with a central product defect by construction (solve the last group
//! coordinate), then closed under diagonal conjugation. The result always
//! satisfies both membership conditions.

use std::collections::BTreeSet;
use std::sync::Arc;

use group_core::FiniteGroup;
use rand::Rng;

use crate::relation::{Alphabet, GRelation, RelTuple};
use crate::validate::{conj_tuple_coords, validate_relation};

/// Draws a nonempty validated relation with the given widths over the
/// singleton data alphabet, from at most `max_seeds` seeds.
pub fn random_validated_relation(
    group: &Arc<FiniteGroup>,
    in_width: usize,
    out_width: usize,
    max_seeds: usize,
    rng: &mut impl Rng,
) -> GRelation {
    random_validated_relation_decorated(
        group,
        vec![Alphabet::singleton(); in_width],
        vec![Alphabet::singleton(); out_width],
        max_seeds,
        rng,
    )
}

/// Decorated variant: data parts are drawn uniformly from each coordinate's
/// alphabet; conjugation closure leaves them fixed, so validity is
/// unaffected.
pub fn random_validated_relation_decorated(
    group: &Arc<FiniteGroup>,
    in_alpha: Vec<Alphabet>,
    out_alpha: Vec<Alphabet>,
    max_seeds: usize,
    rng: &mut impl Rng,
) -> GRelation {
    let width = in_alpha.len() + out_alpha.len();
    let order = group.order();
    let center = group.center().to_vec();
    let n_seeds = rng.gen_range(1..=max_seeds.max(1));
    let mut tuples: BTreeSet<RelTuple> = BTreeSet::new();
    for _ in 0..n_seeds {
        let mut tuple: RelTuple = Vec::with_capacity(width);
        for alpha in in_alpha.iter().chain(out_alpha.iter()) {
            let d = rng.gen_range(0..alpha.len()) as u16;
            let g = rng.gen_range(0..order) as u16;
            tuple.push((d, g));
        }
        if width > 0 {
            // Overwrite the last group coordinate so that
            // in-product * (out-product)^-1 is a random central element.
            let z = center[rng.gen_range(0..center.len())];
            let m = in_alpha.len();
            let in_prefix: Vec<usize> = tuple[..m.min(width - 1)]
                .iter()
                .map(|&(_, g)| g as usize)
                .collect();
            let last = if out_alpha.is_empty() {
                // Need the whole input product equal to z.
                let prefix = group.product(in_prefix.iter().copied());
                group.mul(group.inv(prefix), z)
            } else {
                // Need out-product = z^-1 * in-product.
                let in_prod = group.product(in_prefix.iter().copied());
                let out_prefix = group.product(
                    tuple[m..width - 1].iter().map(|&(_, g)| g as usize),
                );
                group.mul(group.inv(out_prefix), group.mul(group.inv(z), in_prod))
            };
            tuple.last_mut().unwrap().1 = last as u16;
        }
        tuples.insert(tuple);
    }
    let probe = GRelation::new(group.clone(), in_alpha.clone(), out_alpha.clone(), Vec::new());
    let seeds: Vec<RelTuple> = tuples.iter().cloned().collect();
    for seed in seeds {
        for h in 0..order {
            tuples.insert(conj_tuple_coords(&probe, &seed, h));
        }
    }
    let relation = GRelation::new(group.clone(), in_alpha, out_alpha, tuples);
    debug_assert_eq!(validate_relation(&relation), Ok(()));
    relation
}
