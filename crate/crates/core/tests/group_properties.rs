use proptest::prelude::*;

use hskein::groups::{GroupElem, GroupModel};

fn f2() -> GroupModel {
    GroupModel::free(2)
}

fn z3() -> GroupModel {
    GroupModel::free_abelian(3)
}

fn arb_word(max: usize) -> impl Strategy<Value = GroupElem> {
    prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2]), 0..=max).prop_map(|ls| f2().word(&ls).unwrap())
}

fn arb_vec() -> impl Strategy<Value = GroupElem> {
    prop::collection::vec(-4i64..=4, 3).prop_map(|v| z3().abelian_elem(v, vec![]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conj_class_is_constant_on_orbits(x in arb_word(8), g in arb_word(6)) {
        let m = f2();
        prop_assert_eq!(m.conj_class(&m.conjugate(&g, &x)), m.conj_class(&x));
        let c = m.conj_class(&x);
        prop_assert_eq!(m.conj_class(c.rep()), c.clone());
        prop_assert!(m.length(c.rep()) <= m.length(&x));
    }

    #[test]
    fn abelian_conjugation_is_trivial(x in arb_vec(), g in arb_vec()) {
        let m = z3();
        let c = m.conj_class(&m.conjugate(&g, &x));
        prop_assert_eq!(c.rep(), &x);
    }
}

proptest! {
    #[test]
    fn merge_depends_only_on_the_double_coset(
        a in arb_word(3),
        b in arb_word(3),
        g in arb_word(4),
        k in -3i64..=3,
        l in -3i64..=3,
    ) {
        let m = f2();
        let g2 = m.mul_all([&m.pow(&a, k), &g, &m.pow(&b, l)]);
        prop_assert_eq!(m.merge_classes(&a, &g, &b), m.merge_classes(&a, &g2, &b));
    }

    #[test]
    fn abelian_merge_is_the_sum(a in arb_vec(), b in arb_vec(), g in arb_vec()) {
        let m = z3();
        prop_assert_eq!(m.merge_classes(&a, &g, &b), m.conj_class(&m.mul(&a, &b)));
    }

    #[test]
    fn inverse_class_inverts(x in arb_word(6)) {
        let m = f2();
        let c = m.conj_class(&x);
        prop_assert_eq!(m.inverse_class(&c), m.conj_class(&m.inv(&x)));
        prop_assert_eq!(m.inverse_class(&m.inverse_class(&c)), c);
    }
}

/// w = a^m g b^n for some |m|, |n| ≤ 4.
fn related(m: &GroupModel, a: &GroupElem, b: &GroupElem, g: &GroupElem, w: &GroupElem) -> bool {
    (-4..=4).any(|i| (-4..=4).any(|j| m.mul_all([&m.pow(a, i), g, &m.pow(b, j)]) == *w))
}

#[test]
fn free_double_coset_reps_are_distinct() {
    let m = f2();
    let gens = m.elements_up_to(2);
    for a in gens.iter().filter(|x| !x.is_identity() && m.length(x) <= 2) {
        for b in gens.iter().filter(|x| !x.is_identity() && m.length(x) == 1) {
            let reps = m.double_cosets(a, b, 2).unwrap();
            for (i, r) in reps.iter().enumerate() {
                assert!(!m.in_double_coset(a, &m.identity(), b, &r.g), "trivial coset returned");
                for s in &reps[i + 1..] {
                    assert!(
                        !related(&m, a, b, &r.g, &s.g),
                        "{} ~ {}",
                        m.render(&r.g),
                        m.render(&s.g)
                    );
                    assert!(!m.in_double_coset(a, &r.g, b, &s.g));
                }
            }
        }
    }
}

#[test]
fn abelian_double_coset_reps_are_distinct() {
    let m = z3();
    let b1 = m.parse_elem("b1").unwrap();
    for b in ["b1^-1", "b2", "b1*b2"] {
        let b = m.parse_elem(b).unwrap();
        let reps = m.double_cosets(&b1, &b, 2).unwrap();
        assert!(!reps.is_empty());
        for (i, r) in reps.iter().enumerate() {
            for s in &reps[i + 1..] {
                assert!(!m.in_double_coset(&b1, &r.g, &b, &s.g));
            }
        }
    }
}

#[test]
fn worked_examples() {
    let m = f2();
    let w = |s: &str| m.parse_elem(s).unwrap();
    assert_eq!(m.conj_class(&w("x*x*y*x^-1")), m.conj_class(&w("x*y")));
    assert_eq!(m.conj_class(&w("y^-1*x*y")), m.conj_class(&w("x")));
    assert_eq!(m.merge_classes(&w("x"), &w("1"), &w("y")), m.conj_class(&w("x*y")));
    assert_eq!(
        m.merge_classes(&w("x"), &w("y*x"), &w("y")),
        m.conj_class(&w("x*y*x*y*x^-1*y^-1"))
    );
    assert_eq!(m.cyclic_subgroup_member(&w("x^2"), &w("x^3")), Some(3));
    assert_eq!(m.cyclic_subgroup_member(&w("x"), &w("y")), None);
    let t = GroupModel::free_abelian(1);
    let g = t.generator(0);
    assert!(t.double_cosets(&g, &g, 5).unwrap().is_empty());
}
