use std::collections::BTreeSet;

use crate::exec::Exec;
use crate::groups::GroupModel;

use super::WrapClass;

/// First-order descendants ⟨(aᵢ g aⱼ g⁻¹)°, α∖{aᵢ, aⱼ}⟩ over pairs i < j and conjugators g of
/// length ≤ `conj_bound`. Abelian models ignore the bound, the conjugator being irrelevant.
pub fn descendants(alpha: &WrapClass, model: &GroupModel, conj_bound: usize) -> BTreeSet<WrapClass> {
    let mut out = BTreeSet::new();
    if alpha.len() < 2 {
        return out;
    }
    let conjugators = if model.is_abelian() {
        vec![model.identity()]
    } else {
        model.elements_up_to(conj_bound)
    };
    let cs = alpha.classes();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let rest: Vec<_> = cs
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i && *k != j)
                .map(|(_, c)| c.clone())
                .collect();
            for g in &conjugators {
                let merged = model.merge_classes(cs[i].rep(), g, cs[j].rep());
                let mut v = rest.clone();
                v.push(merged);
                out.insert(WrapClass::new(v));
            }
        }
    }
    out
}

/// A set of wrapping classes closed under descendants at `closure_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinClosedSet {
    pub members: BTreeSet<WrapClass>,
    pub closure_bound: usize,
}

impl SkeinClosedSet {
    pub fn is_closed(&self, model: &GroupModel) -> bool {
        self.members
            .iter()
            .all(|a| descendants(a, model, self.closure_bound).is_subset(&self.members))
    }
}

/// Least descendant-closed superset of `seeds`, computed frontier by frontier.
pub fn skein_closure<I>(seeds: I, model: &GroupModel, conj_bound: usize, exec: Exec) -> SkeinClosedSet
where
    I: IntoIterator<Item = WrapClass>,
{
    let mut members: BTreeSet<WrapClass> = seeds.into_iter().collect();
    let mut frontier: Vec<WrapClass> = members.iter().cloned().collect();
    while !frontier.is_empty() {
        let found = exec.map(&frontier, |a| descendants(a, model, conj_bound));
        frontier = Vec::new();
        for d in found.into_iter().flatten() {
            if members.insert(d.clone()) {
                frontier.push(d);
            }
        }
        frontier.sort();
    }
    SkeinClosedSet {
        members,
        closure_bound: conj_bound,
    }
}

/// C*: every class of C with any number of trivial classes adjoined. Membership only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarClosure {
    bases: BTreeSet<WrapClass>,
}

impl StarClosure {
    pub fn new<I: IntoIterator<Item = WrapClass>>(bases: I) -> Self {
        StarClosure {
            bases: bases.into_iter().collect(),
        }
    }

    /// 𝔱(M) = ⟨⟩*.
    pub fn trivial_links() -> Self {
        StarClosure::new([WrapClass::empty()])
    }

    pub fn contains(&self, beta: &WrapClass) -> bool {
        let core = beta.without_trivial();
        self.bases
            .iter()
            .any(|a| a.without_trivial() == core && a.trivial_count() <= beta.trivial_count())
    }
}

/// Sum of the abelianized entries, free part only.
pub fn homology_class(alpha: &WrapClass, model: &GroupModel) -> Vec<i64> {
    let mut v = vec![0; model.abelianize(&model.identity()).len()];
    for c in alpha.classes() {
        for (x, y) in v.iter_mut().zip(model.abelianize(c.rep())) {
            *x += y;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3() -> GroupModel {
        GroupModel::free_abelian(3)
    }

    fn w(g: &GroupModel, s: &str) -> WrapClass {
        WrapClass::parse(g, s).unwrap()
    }

    #[test]
    fn z3_descendants() {
        let g = z3();
        let d = descendants(&w(&g, "<b1,b2,b3>"), &g, 0);
        let expected: BTreeSet<_> = ["<b1+b2,b3>", "<b1+b3,b2>", "<b2+b3,b1>"]
            .iter()
            .map(|s| w(&g, s))
            .collect();
        assert_eq!(d, expected);
        assert!(descendants(&w(&g, "<b1>"), &g, 3).is_empty());
    }

    #[test]
    fn z3_closure() {
        let g = z3();
        let c = skein_closure([w(&g, "<b1,b2,b3>")], &g, 0, Exec::Sequential);
        assert_eq!(c.members.len(), 5);
        assert!(c.members.contains(&w(&g, "<b1+b2+b3>")));
        assert!(c.is_closed(&g));
        assert!(skein_closure([], &g, 0, Exec::default()).members.is_empty());
        assert_eq!(skein_closure([w(&g, "<b1>")], &g, 0, Exec::default()).members.len(), 1);
    }

    #[test]
    fn star_membership() {
        let g = z3();
        assert!(StarClosure::trivial_links().contains(&w(&g, "<1,1,1>")));
        let s = StarClosure::new([w(&g, "<b1>")]);
        assert!(!s.contains(&w(&g, "<b1,b2>")));
        assert!(s.contains(&w(&g, "<1,b1>")));
        assert!(!StarClosure::new([w(&g, "<1,b1>")]).contains(&w(&g, "<b1>")));
    }

    #[test]
    fn homology_examples() {
        let g = z3();
        assert_eq!(homology_class(&w(&g, "<b1,b2>"), &g), vec![1, 1, 0]);
        assert_eq!(homology_class(&w(&g, "<b1,b1^-1>"), &g), vec![0, 0, 0]);
        let f = GroupModel::free(2);
        assert_eq!(homology_class(&w(&f, "<x*y*x^-1>"), &f), vec![0, 1]);
    }
}
