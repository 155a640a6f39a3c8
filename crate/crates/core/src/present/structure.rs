use crate::groups::{Centralizer, ConjClass, GroupElem};
use crate::intersect::{ManifoldData, SelfHomotopy};
use crate::wrap::WrapClass;

use super::{Bounds, Generator, GeneratorKind, Mode, Reduction};

fn centralizer_generators(m: &ManifoldData, a: &ConjClass) -> Vec<GroupElem> {
    match m.pi1.centralizer_data(a.rep()) {
        Centralizer::Cyclic { root, .. } => vec![root],
        Centralizer::WholeGroup { .. } => m.pi1.generators(),
    }
}

/// Θ generators for a in α: centralizer generators, then sphere classes. A trivial component
/// only carries the sphere classes.
fn theta_generators(m: &ManifoldData, alpha: &WrapClass, a: &ConjClass, out: &mut Vec<Generator>) {
    let hs = if a.is_trivial() {
        vec![]
    } else {
        centralizer_generators(m, a)
    };
    let spheres = m.sphere_subgroup.iter().map(|s| SelfHomotopy::Sphere(s.clone()));
    for h in hs.into_iter().map(SelfHomotopy::Centralizer).chain(spheres) {
        out.push(Generator {
            source: alpha.clone(),
            kind: GeneratorKind::Theta { a: a.clone(), h },
            entry: None,
        });
    }
}

/// Unordered pairs of occurrences, one per pair of classes.
fn class_pairs(alpha: &WrapClass) -> Vec<(ConjClass, ConjClass)> {
    let cs = alpha.classes();
    let mut out: Vec<(ConjClass, ConjClass)> = Vec::new();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let p = (cs[i].clone(), cs[j].clone());
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

fn delta_generators(m: &ManifoldData, alpha: &WrapClass, bounds: Bounds, out: &mut Vec<Generator>) {
    let coset = if m.pi1.is_abelian() {
        bounds.coset
    } else {
        bounds.coset.min(bounds.conj)
    };
    for (a, b) in class_pairs(alpha) {
        if a.is_trivial() || b.is_trivial() {
            continue;
        }
        let Ok(reps) = m.pi1.double_cosets(a.rep(), b.rep(), coset) else {
            continue;
        };
        for r in reps {
            out.push(Generator {
                source: alpha.clone(),
                kind: GeneratorKind::Delta {
                    a: a.rep().clone(),
                    b: b.rep().clone(),
                    g: r.g,
                },
                entry: None,
            });
        }
    }
}

/// The generators attached to α before reduction.
///
/// In R mode T(a) is included when α∖a has a nontrivial class and D(a,b) when a, b are
/// nontrivial and α∖{a,b} has a nontrivial class. In R[u] mode α should be trivial-free; T(a)
/// needs |α| ≥ 2, D(a,b) needs |α| ≥ 3, and every sphere class gives an S generator.
pub fn structure_set(m: &ManifoldData, alpha: &WrapClass, mode: Mode, bounds: Bounds) -> Vec<Generator> {
    let mut out = Vec::new();
    match mode {
        Mode::R => {
            for a in alpha.distinct() {
                if alpha.remove_one(a).is_some_and(|r| !r.is_all_trivial()) {
                    theta_generators(m, alpha, a, &mut out);
                }
            }
            let mut pairs = Vec::new();
            delta_generators(m, alpha, bounds, &mut pairs);
            out.extend(pairs.into_iter().filter(|g| {
                match &g.kind {
                    GeneratorKind::Delta { a, b, .. } => alpha
                        .remove_one(&m.pi1.conj_class(a))
                        .and_then(|r| r.remove_one(&m.pi1.conj_class(b)))
                        .is_some_and(|r| !r.is_all_trivial()),
                    _ => true,
                }
            }));
        }
        Mode::Ru => {
            if alpha.len() >= 2 {
                for a in alpha.distinct() {
                    theta_generators(m, alpha, a, &mut out);
                }
            }
            if alpha.len() >= 3 {
                delta_generators(m, alpha, bounds, &mut out);
            }
            for s in &m.sphere_subgroup {
                out.push(Generator {
                    source: alpha.clone(),
                    kind: GeneratorKind::Sphere { s: s.clone() },
                    entry: None,
                });
            }
        }
    }
    out
}

fn peripheral(m: &ManifoldData, x: &GroupElem) -> Vec<bool> {
    let id = m.pi1.identity();
    m.boundary_tori
        .iter()
        .map(|(t1, t2)| m.pi1.is_abelian() && m.pi1.in_double_coset(t1, &id, t2, x))
        .collect()
}

fn same_torus(m: &ManifoldData, xs: &[&GroupElem], y: &GroupElem) -> bool {
    let py = peripheral(m, y);
    xs.iter()
        .any(|x| peripheral(m, x).iter().zip(&py).any(|(a, b)| *a && *b))
}

pub(crate) fn reduction_for(m: &ManifoldData, g: &Generator) -> Option<Reduction> {
    let model = &m.pi1;
    match &g.kind {
        GeneratorKind::Delta { a, b, g } => {
            if m.flags.cyclic_pi1 {
                return Some(Reduction::CyclicGroup);
            }
            let (root, _) = model.root(a);
            if model.power_of(b, &root).is_some() && model.power_of(g, &root).is_some() {
                return Some(Reduction::CommonRoot);
            }
            same_torus(m, &[a, b], g).then_some(Reduction::Peripheral)
        }
        GeneratorKind::Theta { a, h } => {
            if m.flags.surface_product {
                return Some(Reduction::SurfaceProduct);
            }
            let SelfHomotopy::Centralizer(h) = h else {
                return None;
            };
            if m.flags.pi2_zero && model.cyclic_subgroup_member(a.rep(), h).is_some() {
                return Some(Reduction::CyclicCentralizer);
            }
            same_torus(m, &[a.rep()], h).then_some(Reduction::Peripheral)
        }
        GeneratorKind::Sphere { .. } => None,
    }
}

/// Splits generators into survivors and those whose relation vanishes by a reduction rule.
pub fn reduce_structure_set(m: &ManifoldData, gens: Vec<Generator>) -> (Vec<Generator>, Vec<(Generator, Reduction)>) {
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for g in gens {
        match reduction_for(m, &g) {
            Some(r) => dropped.push((g, r)),
            None => kept.push(g),
        }
    }
    (kept, dropped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::lookup;

    fn count(gens: &[Generator]) -> (usize, usize, usize) {
        let t = gens
            .iter()
            .filter(|g| matches!(g.kind, GeneratorKind::Theta { .. }))
            .count();
        let d = gens
            .iter()
            .filter(|g| matches!(g.kind, GeneratorKind::Delta { .. }))
            .count();
        (t, d, gens.len() - t - d)
    }

    #[test]
    fn singleton_has_empty_structure_set() {
        let m = lookup("t3").unwrap();
        assert!(structure_set(&m, &m.wrap("<b1>").unwrap(), Mode::R, Bounds::default()).is_empty());
        let s = lookup("s2xs1").unwrap();
        let gens = structure_set(&s, &s.wrap("<a>").unwrap(), Mode::Ru, Bounds::default());
        assert_eq!(count(&gens), (0, 0, 1));
    }

    #[test]
    fn t3_structure_set() {
        let m = lookup("t3").unwrap();
        let alpha = m.wrap("<b1,b2,b3>").unwrap();
        let gens = structure_set(&m, &alpha, Mode::R, Bounds::default());
        let (t, d, _) = count(&gens);
        assert_eq!(t, 9);
        assert_eq!(d, 6);
        for pair in [("b1", "b2"), ("b1", "b3"), ("b2", "b3")] {
            let (a, b) = (m.pi1.parse_elem(pair.0).unwrap(), m.pi1.parse_elem(pair.1).unwrap());
            assert!(gens
                .iter()
                .any(|g| matches!(&g.kind, GeneratorKind::Delta { a: x, b: y, .. } if *x == a && *y == b)));
        }
        let (kept, dropped) = reduce_structure_set(&m, gens);
        assert_eq!(dropped.len(), 3);
        assert!(dropped.iter().all(|(_, r)| *r == Reduction::CyclicCentralizer));
        assert_eq!(kept.len(), 12);
    }

    #[test]
    fn filters() {
        let s = lookup("s2xs1").unwrap();
        let gens = structure_set(
            &s,
            &s.wrap("<a,a,a^-1>").unwrap(),
            Mode::R,
            Bounds { conj: 1, coset: 2 },
        );
        let (_, dropped) = reduce_structure_set(&s, gens);
        assert!(dropped
            .iter()
            .all(|(g, _)| !matches!(g.kind, GeneratorKind::Theta { .. }) || !s.flags.pi2_zero));
        let t2 = lookup("t2xi").unwrap();
        let gens = structure_set(&t2, &t2.wrap("<b1,b1,b2>").unwrap(), Mode::R, Bounds::default());
        assert!(!gens.is_empty());
        let (kept, dropped) = reduce_structure_set(&t2, gens);
        assert!(kept.is_empty());
        assert!(dropped.iter().any(|(_, r)| *r == Reduction::SurfaceProduct));
        assert!(dropped.iter().any(|(_, r)| *r == Reduction::Peripheral));
    }
}
