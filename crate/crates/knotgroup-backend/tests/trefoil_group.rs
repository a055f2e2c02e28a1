//! The trefoil's presentation: evaluated by pushout, simplified by Tietze
//! moves, and cross-checked against the hand-listed wire-equation
//! presentation through hom counts.

use diagram_core::{DiagramTerm as T, Word};
use group_core::FiniteGroup;
use knotgroup_backend::{
    default_names, eval_presentation, hom_count, hom_count_budgeted, structure_cospan,
    tietze_simplify, CospanKind, Presentation, DEFAULT_MAX_PASSES,
};

fn wx() -> Word {
    Word::single("X")
}

fn trefoil() -> T {
    let idx = || T::Id(wx());
    T::pipeline(vec![
        T::Cup("X".into()).tensor(T::Cup("X".into())),
        T::row(vec![idx(), T::Braid(wx(), wx()), idx()]),
        T::row(vec![idx(), idx(), T::BraidInv(wx(), wx())]),
        T::row(vec![idx(), T::Braid(wx(), wx()), idx()]),
        T::Cap("X".into()).tensor(T::Cap("X".into())),
    ])
}

fn unknot() -> T {
    T::Cup("X".into()).then(T::Cap("X".into()))
}

/// The wire-equation presentation read off the annotated trefoil diagram:
/// generators a..k (one per wire segment, skipping i), relators ab=1, b=f,
/// be=cf, c=h, cg=dh, ad=1, ej=1, j=g, fj=gk, hk=1.
fn listed_trefoil_presentation() -> Presentation {
    let names: Vec<String> = ["a", "b", "c", "d", "e", "f", "g", "h", "j", "k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let g = |name: &str| names.iter().position(|n| n == name).unwrap() as i32 + 1;
    let eq = |lhs: Vec<i32>, rhs: Vec<i32>| -> Vec<i32> {
        let mut w = lhs;
        w.extend(rhs.iter().rev().map(|&l| -l));
        w
    };
    let relators = vec![
        vec![g("a"), g("b")],
        eq(vec![g("b")], vec![g("f")]),
        eq(vec![g("b"), g("e")], vec![g("c"), g("f")]),
        eq(vec![g("c")], vec![g("h")]),
        eq(vec![g("c"), g("g")], vec![g("d"), g("h")]),
        vec![g("a"), g("d")],
        vec![g("e"), g("j")],
        eq(vec![g("j")], vec![g("g")]),
        eq(vec![g("f"), g("j")], vec![g("g"), g("k")]),
        vec![g("h"), g("k")],
    ];
    Presentation::new(names, relators).unwrap()
}

#[test]
fn raw_trefoil_matches_listed_presentation_by_hom_counts() {
    let raw = eval_presentation(&trefoil()).unwrap();
    let listed = listed_trefoil_presentation();
    for name in ["C2", "C3", "S3"] {
        let g = FiniteGroup::builtin(name).unwrap();
        let ours = hom_count_budgeted(&raw, &g, 50_000_000).unwrap();
        let theirs = hom_count_budgeted(&listed, &g, 50_000_000).unwrap();
        assert_eq!(ours, theirs, "hom counts into {} differ", name);
    }
}

#[test]
fn trefoil_simplifies_to_two_generators_one_relator() {
    let raw = eval_presentation(&trefoil()).unwrap();
    let simple = tietze_simplify(&raw, DEFAULT_MAX_PASSES);
    assert_eq!(simple.generator_count(), 2);
    assert_eq!(simple.relators().len(), 1);
    // The relator is x y x Y X Y up to rotation, inversion, and swapping
    // the two generator names.
    let relator = &simple.relators()[0];
    assert_eq!(relator.len(), 6);
    let canon = knotgroup_backend::cyclic_canonical(relator);
    let braid = knotgroup_backend::cyclic_canonical(&[1, 2, 1, -2, -1, -2]);
    let braid_swapped = knotgroup_backend::cyclic_canonical(&[2, 1, 2, -1, -2, -1]);
    assert!(canon == braid || canon == braid_swapped, "relator {:?}", relator);
}

#[test]
fn simplification_preserves_hom_counts() {
    for term in [trefoil(), unknot(), unknot().tensor(unknot())] {
        let raw = eval_presentation(&term).unwrap();
        let simple = tietze_simplify(&raw, DEFAULT_MAX_PASSES);
        for name in ["C2", "C3", "S3"] {
            let g = FiniteGroup::builtin(name).unwrap();
            let before = hom_count_budgeted(&raw, &g, 50_000_000).unwrap();
            let after = hom_count(&simple, &g).unwrap();
            assert_eq!(before, after, "{} changed under simplification", name);
        }
    }
}

#[test]
fn trefoil_hom_counts_match_colorings() {
    let raw = eval_presentation(&trefoil()).unwrap();
    let simple = tietze_simplify(&raw, DEFAULT_MAX_PASSES);
    let s3 = FiniteGroup::builtin("S3").unwrap();
    assert_eq!(hom_count(&simple, &s3).unwrap(), 12);
    let c2 = FiniteGroup::builtin("C2").unwrap();
    assert_eq!(hom_count(&simple, &c2).unwrap(), 2);
}

#[test]
fn unknot_group_is_free_of_rank_one() {
    let raw = eval_presentation(&unknot()).unwrap();
    let simple = tietze_simplify(&raw, DEFAULT_MAX_PASSES);
    assert_eq!(simple.generator_count(), 1);
    assert!(simple.relators().is_empty());
    let s3 = FiniteGroup::builtin("S3").unwrap();
    assert_eq!(hom_count(&simple, &s3).unwrap(), 6);
}

#[test]
fn disjoint_unknots_give_free_rank_two() {
    let raw = eval_presentation(&unknot().tensor(unknot())).unwrap();
    let simple = tietze_simplify(&raw, DEFAULT_MAX_PASSES);
    assert_eq!(simple.generator_count(), 2);
    assert!(simple.relators().is_empty());
    let s3 = FiniteGroup::builtin("S3").unwrap();
    assert_eq!(hom_count(&simple, &s3).unwrap(), 36);
}

#[test]
fn cyclic_hom_counts_equal_n() {
    // Abelianized knot groups are infinite cyclic, so maps into C_n are
    // free choices of one image.
    for term in [trefoil(), unknot()] {
        let raw = eval_presentation(&term).unwrap();
        let simple = tietze_simplify(&raw, DEFAULT_MAX_PASSES);
        for n in 2..=6usize {
            let g = FiniteGroup::builtin(&format!("C{}", n)).unwrap();
            assert_eq!(hom_count(&simple, &g).unwrap(), n as u64);
        }
    }
}

#[test]
fn identity_composed_with_identity_simplifies_to_identity() {
    let two_ids = structure_cospan(CospanKind::Id)
        .compose(&structure_cospan(CospanKind::Id))
        .unwrap();
    assert_eq!(two_ids.ngens, 2);
    let p = Presentation::new(default_names(2), two_ids.relators.clone()).unwrap();
    let simple = tietze_simplify(&p, DEFAULT_MAX_PASSES);
    assert_eq!(simple.generator_count(), 1);
    assert!(simple.relators().is_empty());
    assert_eq!(two_ids.left.len(), 1);
    assert_eq!(two_ids.right.len(), 1);
}

#[test]
fn cup_cospan_shape() {
    let cup = structure_cospan(CospanKind::Cup);
    assert_eq!(cup.ngens, 2);
    assert_eq!(cup.relators, vec![vec![1, 2]]);
    assert!(cup.left.is_empty());
    assert_eq!(cup.right, vec![vec![1], vec![2]]);
}

#[test]
fn braid_cospan_second_output_is_first_input() {
    let b = structure_cospan(CospanKind::BraidPos);
    assert_eq!(b.right[1], b.left[0]);
    assert_eq!(b.right[0], vec![1, 2, -1]);
}

#[test]
fn wiggle_insertion_keeps_hom_counts() {
    // trefoil with an extra crossing pair on the middle wires.
    let idx = || T::Id(wx());
    let wiggled = T::pipeline(vec![
        T::Cup("X".into()).tensor(T::Cup("X".into())),
        T::row(vec![idx(), T::Braid(wx(), wx()), idx()]),
        T::row(vec![idx(), T::Braid(wx(), wx()), idx()]),
        T::row(vec![idx(), T::BraidInv(wx(), wx()), idx()]),
        T::row(vec![idx(), idx(), T::BraidInv(wx(), wx())]),
        T::row(vec![idx(), T::Braid(wx(), wx()), idx()]),
        T::Cap("X".into()).tensor(T::Cap("X".into())),
    ]);
    let s3 = FiniteGroup::builtin("S3").unwrap();
    let base = tietze_simplify(&eval_presentation(&trefoil()).unwrap(), DEFAULT_MAX_PASSES);
    let more = tietze_simplify(&eval_presentation(&wiggled).unwrap(), DEFAULT_MAX_PASSES);
    assert_eq!(hom_count(&base, &s3).unwrap(), hom_count(&more, &s3).unwrap());
}

#[test]
fn sugared_and_desugared_presentations_agree_by_hom_counts() {
    for term in [trefoil(), unknot()] {
        let sugared = eval_presentation(&term).unwrap();
        let plain = eval_presentation(&diagram_core::desugar(&term)).unwrap();
        for name in ["C2", "C3", "S3"] {
            let g = FiniteGroup::builtin(name).unwrap();
            assert_eq!(
                hom_count_budgeted(&sugared, &g, 50_000_000).unwrap(),
                hom_count_budgeted(&plain, &g, 50_000_000).unwrap(),
                "{}",
                name
            );
        }
    }
}
