use proptest::prelude::*;

use hskein::groups::{GroupElem, GroupModel};
use hskein::wrap::{descendants, homology_class, skein_closure, StarClosure, WrapClass};
use hskein::Exec;

fn z3() -> GroupModel {
    GroupModel::free_abelian(3)
}

fn f2() -> GroupModel {
    GroupModel::free(2)
}

fn arb_abelian_class(max_len: usize) -> impl Strategy<Value = WrapClass> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..=max_len).prop_map(|vs| {
        let m = z3();
        let elems: Vec<GroupElem> = vs.into_iter().map(|v| m.abelian_elem(v, vec![]).unwrap()).collect();
        WrapClass::from_elems(&m, &elems)
    })
}

fn arb_free_class(max_len: usize) -> impl Strategy<Value = WrapClass> {
    let word = prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2]), 0..=3);
    prop::collection::vec(word, 0..=max_len).prop_map(|ws| {
        let m = f2();
        let elems: Vec<GroupElem> = ws.iter().map(|w| m.word(w).unwrap()).collect();
        WrapClass::from_elems(&m, &elems)
    })
}

proptest! {
    #[test]
    fn descendants_drop_one_component(a in arb_abelian_class(5)) {
        let m = z3();
        for d in descendants(&a, &m, 1) {
            prop_assert_eq!(d.len() + 1, a.len());
            prop_assert_eq!(homology_class(&d, &m), homology_class(&a, &m));
        }
    }

    #[test]
    fn free_descendants_preserve_homology(a in arb_free_class(4)) {
        let m = f2();
        for d in descendants(&a, &m, 1) {
            prop_assert_eq!(d.len() + 1, a.len());
            prop_assert_eq!(homology_class(&d, &m), homology_class(&a, &m));
        }
    }

    #[test]
    fn closure_is_closed_and_idempotent(seeds in prop::collection::vec(arb_abelian_class(4), 1..3)) {
        let m = z3();
        let c = skein_closure(seeds.clone(), &m, 1, Exec::Sequential);
        prop_assert!(c.is_closed(&m));
        prop_assert!(seeds.iter().all(|s| c.members.contains(s)));
        let again = skein_closure(c.members.iter().cloned(), &m, 1, Exec::Sequential);
        prop_assert_eq!(&again, &c);
        prop_assert_eq!(skein_closure(seeds, &m, 1, Exec::default()), c);
    }

    #[test]
    fn u_action_composes(a in arb_abelian_class(3), i in 0usize..4, j in 0usize..4) {
        let m = z3();
        prop_assert_eq!(a.u_act(&m, 0), a.clone());
        prop_assert_eq!(a.u_act(&m, i).u_act(&m, j), a.u_act(&m, i + j));
        prop_assert_eq!(a.u_act(&m, i).trivial_count(), a.trivial_count() + i);
        prop_assert!(StarClosure::new([a.clone()]).contains(&a.u_act(&m, i)));
        prop_assert_eq!(a.u_act(&m, i).without_trivial(), a.without_trivial());
    }
}

#[test]
fn free_closure_matches_in_both_modes() {
    let m = f2();
    let seed = WrapClass::parse(&m, "<x, y, x^-1*y>").unwrap();
    for bound in 0..=2 {
        let seq = skein_closure([seed.clone()], &m, bound, Exec::Sequential);
        let par = skein_closure([seed.clone()], &m, bound, Exec::default());
        assert_eq!(seq, par);
        assert!(seq.is_closed(&m));
    }
}

#[test]
fn trivial_links_are_the_unknots() {
    let m = z3();
    let t = StarClosure::trivial_links();
    assert!(t.contains(&WrapClass::empty()));
    assert!(t.contains(&WrapClass::parse(&m, "<1,1,1>").unwrap()));
    assert!(!t.contains(&WrapClass::parse(&m, "<1,b1>").unwrap()));
}
