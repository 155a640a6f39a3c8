use proptest::prelude::*;

use hskein::paths::{CrossingEvent, Label, PathWord};
use hskein::ring::RPoly;

fn arb_events() -> impl Strategy<Value = Vec<CrossingEvent>> {
    prop::collection::vec((prop::bool::ANY, 0..3u8), 0..8).prop_map(|es| {
        es.into_iter()
            .map(|(pos, k)| CrossingEvent::new(if pos { 1 } else { -1 }, Label::symbol(&format!("K{k}"))))
            .collect()
    })
}

fn qpow(k: i64) -> RPoly {
    RPoly::monomial(1, k, 0)
}

proptest! {
    #[test]
    fn literal_round_trips(events in arb_events()) {
        let p = PathWord::new(Label::symbol("P"), Label::symbol("Q"), events);
        prop_assert_eq!(PathWord::parse(&p.render(None), None).unwrap(), p);
    }

    #[test]
    fn s_is_a_cocycle(e1 in arb_events(), e2 in arb_events()) {
        let a = PathWord::new(Label::symbol("P"), Label::symbol("Q"), e1);
        let b = PathWord::new(Label::symbol("Q"), Label::symbol("R"), e2);
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.index(), a.index() + b.index());
        prop_assert_eq!(ab.s_eval(), a.s_eval() + b.s_eval().scale(&qpow(2 * a.index())));
        prop_assert!(b.compose(&b).is_err());
    }

    #[test]
    fn inverse_path_negates(events in arb_events()) {
        let p = PathWord::new(Label::symbol("P"), Label::symbol("Q"), events);
        let inv = p.invert();
        prop_assert_eq!(inv.index(), -p.index());
        prop_assert_eq!(inv.s_eval(), p.s_eval().scale(&-qpow(-2 * p.index())));
        let lp = p.compose(&inv).unwrap();
        prop_assert!(lp.s_eval().is_zero());
        prop_assert!(lp.s_if().is_zero());
    }

    #[test]
    fn loop_values_augment_to_zero(events in arb_events()) {
        let p = PathWord::looped(Label::symbol("K"), events);
        for (_, c) in p.s_if().iter() {
            prop_assert_eq!(c.augment(), 0.into());
        }
    }
}
