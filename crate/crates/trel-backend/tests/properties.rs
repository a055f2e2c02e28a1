//! Relation-level properties: the braiding's naturality, the behaviour of
//! twists against components, and closure of validity under the
//! operations. Random relations come from the seeded validated sampler.

use std::sync::Arc;

use group_core::FiniteGroup;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trel_backend::{
    braid_relation, random_validated_relation, structure_relation, validate_relation, Alphabet,
    BraidSign, GRelation, StructureKind,
};

fn s3() -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::builtin("S3").unwrap())
}

fn plain(w: usize) -> Vec<Alphabet> {
    vec![Alphabet::singleton(); w]
}

fn tau(g: &Arc<FiniteGroup>, m: usize, n: usize) -> GRelation {
    braid_relation(g.clone(), plain(m), plain(n), BraidSign::Positive)
}

fn tau_inv(g: &Arc<FiniteGroup>, m: usize, n: usize) -> GRelation {
    braid_relation(g.clone(), plain(m), plain(n), BraidSign::Negative)
}

fn idw(g: &Arc<FiniteGroup>, w: usize) -> GRelation {
    GRelation::identity(g.clone(), plain(w))
}

/// A single crossing at strand `pos` among `wires` strands.
fn crossing(g: &Arc<FiniteGroup>, wires: usize, pos: usize, positive: bool) -> GRelation {
    let one = if positive { tau(g, 1, 1) } else { tau_inv(g, 1, 1) };
    let mut acc = if pos == 0 { one.clone() } else { idw(g, pos) };
    if pos > 0 {
        acc = acc.tensor(&one).unwrap();
    }
    if pos + 2 < wires {
        acc = acc.tensor(&idw(g, wires - pos - 2)).unwrap();
    }
    acc
}

fn braid_word(g: &Arc<FiniteGroup>, wires: usize, word: &[(usize, bool)]) -> GRelation {
    let mut acc = idw(g, wires);
    for &(pos, positive) in word {
        acc = acc.compose(&crossing(g, wires, pos, positive)).unwrap();
    }
    acc
}

/// The strand permutation of a braid word: position -> final position.
fn word_permutation(wires: usize, word: &[(usize, bool)]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..wires).collect();
    for &(pos, _) in word {
        perm.swap(pos, pos + 1);
    }
    perm
}

#[test]
fn naturality_of_the_twist() {
    let g = s3();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let p = rng.gen_range(0..=2);
        let m = rng.gen_range(0..=2);
        let n = rng.gen_range(0..=2);
        let r = random_validated_relation(&g, p, m, 2, &mut rng);
        // (R tensor 1_n) ; tau_{m,n} = tau_{p,n} ; (1_n tensor R).
        let lhs = r.tensor(&idw(&g, n)).unwrap().compose(&tau(&g, m, n)).unwrap();
        let rhs = tau(&g, p, n).compose(&idw(&g, n).tensor(&r).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // Mirror: (1_n tensor R) ; tau_{n, m} = tau_{n, p} ; (R tensor 1_n).
        let lhs2 = idw(&g, n).tensor(&r).unwrap().compose(&tau(&g, n, m)).unwrap();
        let rhs2 = tau(&g, n, p).compose(&r.tensor(&idw(&g, n)).unwrap()).unwrap();
        assert_eq!(lhs2, rhs2);
    }
}

#[test]
fn single_twist_collapses_against_a_component() {
    // For any R : X (x) Y -> I, precomposing with the positive or negative
    // crossing gives the same composite.
    let g = s3();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let r = random_validated_relation(&g, 2, 0, 2, &mut rng);
        let pos = tau(&g, 1, 1).compose(&r).unwrap();
        let neg = tau_inv(&g, 1, 1).compose(&r).unwrap();
        assert_eq!(pos, neg);
    }
}

#[test]
fn even_twists_vanish_between_components() {
    let g = s3();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let r = random_validated_relation(&g, 0, 2, 2, &mut rng);
        let s = random_validated_relation(&g, 2, 0, 2, &mut rng);
        let direct = r.compose(&s).unwrap();
        let mut twisted = r.clone();
        for n in 1..=3usize {
            for _ in 0..2 {
                twisted = twisted.compose(&tau(&g, 1, 1)).unwrap();
            }
            let composite = twisted.compose(&s).unwrap();
            assert_eq!(composite, direct, "failed at {} full twists", n);
        }
    }
}

#[test]
fn flash_example_equation() {
    // S (eps x eps x 1 x 1)(1 x tau' x tau' x 1)(1 x 1 x eta x eta) R
    //   = S tau tau R, for R : I -> X^2, S : X^2 -> I.
    let g = s3();
    let eta = structure_relation(StructureKind::Cup, g.clone(), Alphabet::singleton());
    let eps = structure_relation(StructureKind::Cap, g.clone(), Alphabet::singleton());
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..50 {
        let r = random_validated_relation(&g, 0, 2, 2, &mut rng);
        let s = random_validated_relation(&g, 2, 0, 2, &mut rng);
        let stage1 = idw(&g, 2).tensor(&eta).unwrap().tensor(&eta).unwrap();
        let stage2 = idw(&g, 1)
            .tensor(&tau_inv(&g, 1, 1))
            .unwrap()
            .tensor(&tau_inv(&g, 1, 1))
            .unwrap()
            .tensor(&idw(&g, 1))
            .unwrap();
        let stage3 = eps.tensor(&eps).unwrap().tensor(&idw(&g, 2)).unwrap();
        let lhs = r
            .compose(&stage1)
            .unwrap()
            .compose(&stage2)
            .unwrap()
            .compose(&stage3)
            .unwrap()
            .compose(&s)
            .unwrap();
        let rhs = r
            .compose(&tau(&g, 1, 1))
            .unwrap()
            .compose(&tau(&g, 1, 1))
            .unwrap()
            .compose(&s)
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn three_wire_composites_depend_only_on_the_permutation() {
    let g = s3();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let r = random_validated_relation(&g, 0, 3, 2, &mut rng);
        let s = random_validated_relation(&g, 3, 0, 2, &mut rng);
        for _ in 0..10 {
            let len = rng.gen_range(0..=6);
            let word: Vec<(usize, bool)> = (0..len)
                .map(|_| (rng.gen_range(0..2), rng.gen_bool(0.5)))
                .collect();
            // Flipping crossing signs preserves the permutation.
            let flipped: Vec<(usize, bool)> = word
                .iter()
                .map(|&(p, sgn)| (p, if rng.gen_bool(0.5) { !sgn } else { sgn }))
                .collect();
            assert_eq!(word_permutation(3, &word), word_permutation(3, &flipped));
            let b1 = braid_word(&g, 3, &word);
            let b2 = braid_word(&g, 3, &flipped);
            let c1 = r.compose(&b1).unwrap().compose(&s).unwrap();
            let c2 = r.compose(&b2).unwrap().compose(&s).unwrap();
            assert_eq!(c1, c2, "word {:?} vs {:?}", word, flipped);
        }
    }
}

#[test]
fn validity_is_closed_under_compose_and_tensor() {
    let g = s3();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let m = rng.gen_range(0..=2);
        let k = rng.gen_range(0..=2);
        let n = rng.gen_range(0..=2);
        let r = random_validated_relation(&g, m, k, 2, &mut rng);
        let s = random_validated_relation(&g, k, n, 2, &mut rng);
        let composed = r.compose(&s).unwrap();
        assert_eq!(validate_relation(&composed), Ok(()));
        let tensored = r.tensor(&s).unwrap();
        assert_eq!(validate_relation(&tensored), Ok(()));
    }
}

#[test]
fn braid_against_unit_is_identity_on_relations() {
    let g = s3();
    for m in 0..=3 {
        assert_eq!(tau(&g, m, 0), idw(&g, m));
        assert_eq!(tau(&g, 0, m), idw(&g, m));
        assert_eq!(tau_inv(&g, m, 0), idw(&g, m));
    }
}

#[test]
fn composition_is_associative_on_random_relations() {
    let g = s3();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let a = random_validated_relation(&g, rng.gen_range(0..=2), 1, 2, &mut rng);
        let b = random_validated_relation(&g, 1, 2, 2, &mut rng);
        let c = random_validated_relation(&g, 2, rng.gen_range(0..=2), 2, &mut rng);
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn abelian_groups_accept_every_relation() {
    // Over an abelian group both membership conditions are vacuous, so any
    // tuple set whatsoever validates.
    let g = Arc::new(FiniteGroup::builtin("C4").unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..30 {
        let tuples: Vec<Vec<(u16, u16)>> = (0..rng.gen_range(0..6))
            .map(|_| {
                (0..3)
                    .map(|_| (0u16, rng.gen_range(0..4) as u16))
                    .collect()
            })
            .collect();
        let r = GRelation::new(g.clone(), plain(1), plain(2), tuples);
        assert_eq!(validate_relation(&r), Ok(()));
    }
}

#[test]
fn five_wire_pair_distinguished_by_a_twist_on_the_first_two() {
    // The four-wire separation argument persists with extra straight
    // wires: two components joined by five wires, the first two tangled,
    // evaluate differently from the straight wiring.
    let g = s3();
    let e = |name: &str| {
        (0u16, g.element_by_name(name).unwrap() as u16)
    };
    let seed = vec![e("(1 2)"), e("(1 3)"), e("(2 3)"), e("(1 3)"), e("()")];
    let probe = GRelation::empty(g.clone(), plain(0), plain(5));
    let mut tuples = std::collections::BTreeSet::new();
    for h in 0..g.order() {
        tuples.insert(trel_backend::conj_tuple_coords(&probe, &seed, h));
    }
    let r = GRelation::new(g.clone(), plain(0), plain(5), tuples.clone());
    let s = GRelation::new(g.clone(), plain(5), plain(0), tuples);
    assert_eq!(validate_relation(&r), Ok(()));
    let straight = r.compose(&s).unwrap();
    assert!(!straight.is_empty());
    let full_twist = crossing(&g, 5, 0, true)
        .compose(&crossing(&g, 5, 0, true))
        .unwrap();
    let twisted = r.compose(&full_twist).unwrap().compose(&s).unwrap();
    assert!(twisted.is_empty());
}

#[test]
fn half_twist_closed_form_on_central_triples() {
    // For triples with central product, conjugating any entry by the
    // product of the others collapses: x y x^-1 = z^-1 y z and so on, and
    // the three-strand half twist acts as (x,y,z) |-> (z, x y x^-1, x) no
    // matter which way it turns.
    let g = s3();
    let order = g.order();
    let central = |a: usize, b: usize, c: usize| {
        g.is_central(g.product([a, b, c]))
    };
    let conj = |v: usize, h: usize| g.conj(v, h);
    let half = braid_word(&g, 3, &[(0, true), (1, true), (0, true)]);
    let half_inv = braid_word(&g, 3, &[(0, false), (1, false), (0, false)]);
    for x in 0..order {
        for y in 0..order {
            for z in 0..order {
                if !central(x, y, z) {
                    continue;
                }
                assert_eq!(conj(y, x), conj(y, g.inv(z)));
                assert_eq!(conj(z, y), conj(z, g.inv(x)));
                assert_eq!(conj(x, z), conj(x, g.inv(y)));
                let input: Vec<(u16, u16)> =
                    [x, y, z].iter().map(|&v| (0u16, v as u16)).collect();
                let expected: Vec<(u16, u16)> = vec![
                    (0, z as u16),
                    (0, conj(y, x) as u16),
                    (0, x as u16),
                ];
                let mut tuple = input.clone();
                tuple.extend(expected.iter().copied());
                assert!(half.contains(&tuple), "half twist image of ({},{},{})", x, y, z);
                assert!(half_inv.contains(&tuple), "mirror image of ({},{},{})", x, y, z);
            }
        }
    }
}

#[test]
fn core_laws_hold_over_every_small_builtin_group() {
    // Yang-Baxter, Frobenius (D), commutativity, snake, and kink removal
    // over every builtin group of order at most 24.
    use trel_backend::{structure_relation, StructureKind};
    let names = [
        "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "S2", "S3", "S4",
        "D3", "D4",
    ];
    for name in names {
        let g = Arc::new(FiniteGroup::builtin(name).unwrap());
        assert!(g.order() <= 24, "{}", name);
        let idw1 = GRelation::identity(g.clone(), plain(1));
        let t = braid_relation(g.clone(), plain(1), plain(1), BraidSign::Positive);
        let s1 = t.tensor(&idw1).unwrap();
        let s2 = idw1.tensor(&t).unwrap();
        let yb_left = s1.compose(&s2).unwrap().compose(&s1).unwrap();
        let yb_right = s2.compose(&s1).unwrap().compose(&s2).unwrap();
        assert_eq!(yb_left, yb_right, "Yang-Baxter over {}", name);

        let mul = structure_relation(StructureKind::Mul, g.clone(), Alphabet::singleton());
        let comul = structure_relation(StructureKind::Comul, g.clone(), Alphabet::singleton());
        let cup = structure_relation(StructureKind::Cup, g.clone(), Alphabet::singleton());
        let cap = structure_relation(StructureKind::Cap, g.clone(), Alphabet::singleton());
        let middle = mul.compose(&comul).unwrap();
        let left = comul.tensor(&idw1).unwrap().compose(&idw1.tensor(&mul).unwrap()).unwrap();
        let right = idw1.tensor(&comul).unwrap().compose(&mul.tensor(&idw1).unwrap()).unwrap();
        assert_eq!(left, middle, "Frobenius over {}", name);
        assert_eq!(right, middle, "Frobenius over {}", name);
        assert_eq!(t.compose(&mul).unwrap(), mul, "commutativity over {}", name);
        assert_eq!(comul.compose(&t).unwrap(), comul, "cocommutativity over {}", name);
        let snake = idw1.tensor(&cup).unwrap().compose(&cap.tensor(&idw1).unwrap()).unwrap();
        assert_eq!(snake, idw1, "snake over {}", name);
        assert_eq!(t.compose(&cap).unwrap(), cap, "kink removal over {}", name);
        assert_eq!(cup.compose(&t).unwrap(), cup, "kink removal over {}", name);
    }
}

#[test]
fn validator_catches_mutations_of_valid_relations() {
    let g = s3();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut closure_failures = 0;
    for _ in 0..60 {
        let r = random_validated_relation(&g, 1, 1, 2, &mut rng);
        // Dropping one tuple from a nontrivial orbit must break closure.
        if r.len() > 1 {
            let keep: Vec<_> = r.tuples()[1..].to_vec();
            let broken = GRelation::new(g.clone(), plain(1), plain(1), keep);
            if validate_relation(&broken).is_err() {
                closure_failures += 1;
            }
        }
        // Inserting a tuple with a noncentral defect must break condition 2.
        let t12 = g.element_by_name("(1 2)").unwrap() as u16;
        let mut tuples = r.tuples().to_vec();
        tuples.push(vec![(0, t12), (0, 0)]);
        let skew = GRelation::new(g.clone(), plain(1), plain(1), tuples);
        assert!(validate_relation(&skew).is_err());
    }
    // Orbits of size one exist (central pairs), but most samples are bigger.
    assert!(closure_failures > 20, "only {} closure failures", closure_failures);
}
