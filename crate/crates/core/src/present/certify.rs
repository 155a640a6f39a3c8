//! Torsion certificates.
//!
//! A relation r = c·w with c a nonzero non-unit shows c·σ(w) = 0, so σ(w) is torsion once
//! σ(w) ≠ 0. Two tests show σ(w) ≠ 0: its image under q ↦ 1, z ↦ 0 in the free abelian group
//! on wrapping classes is nonzero (augmentation), or its z = 0 part is nonzero in the summand
//! ℤ[q±1]/(q^{2λ(β)} − 1) of some class β (linking).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::groups::GroupElem;
use crate::intersect::ManifoldData;
use crate::ring::{LaurentPoly, RPoly, UPoly};
use crate::wrap::{USkeinVector, WrapClass};

use super::generators::{delta_generator, to_ungraded, DeltaValue};
use super::PresentationMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateKind {
    /// Nonzero image under q ↦ 1, z ↦ 0.
    Augmentation { image: Vec<(WrapClass, BigInt)> },
    /// Nonzero z = 0 coefficient on `class` modulo q^{2λ} − 1.
    Linking {
        class: WrapClass,
        lambda: u64,
        residue: LaurentPoly,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Row of the presentation supplying the relation, if any.
    pub row: Option<usize>,
    /// c with c·σ(element) = 0.
    pub annihilator: RPoly,
    pub element: USkeinVector,
    pub kind: CertificateKind,
}

/// Content z^k·g(q) of a vector: k the least z-degree, g the gcd of all q-coefficients.
fn content(v: &USkeinVector) -> Option<(u32, LaurentPoly)> {
    let mut zmin: Option<u32> = None;
    let mut g = LaurentPoly::zero();
    for (_, c) in v.iter() {
        for (_, r) in c.u_terms() {
            for (k, p) in r.z_terms() {
                zmin = Some(zmin.map_or(k, |z| z.min(k)));
                g = g.gcd(p);
            }
        }
    }
    Some((zmin?, g))
}

fn divide(v: &USkeinVector, zmin: u32, g: &LaurentPoly) -> USkeinVector {
    v.map_coeffs(|c| {
        UPoly::from_u_coeffs(c.u_terms().map(|(d, r)| {
            let r = RPoly::from_z_coeffs(
                r.z_terms()
                    .map(|(k, p)| (k - zmin, p.exact_div(g).expect("content divides"))),
            );
            (d, r)
        }))
    })
}

/// Flattens u-powers back into trivial classes and specializes each coefficient with `f`.
fn flatten<T, F>(m: &ManifoldData, v: &USkeinVector, f: F) -> BTreeMap<WrapClass, T>
where
    T: Zero + Clone + std::ops::AddAssign,
    F: Fn(&RPoly) -> T,
{
    let mut out: BTreeMap<WrapClass, T> = BTreeMap::new();
    for (k, c) in v.iter() {
        for (d, r) in c.u_terms() {
            *out.entry(k.u_act(&m.pi1, d as usize)).or_insert_with(T::zero) += f(r);
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

fn reduce_mod(p: &LaurentPoly, lambda: u64) -> LaurentPoly {
    if lambda == 0 {
        return p.clone();
    }
    let period = 2 * lambda as i64;
    LaurentPoly::from_terms(p.terms().map(|(e, c)| (e.rem_euclid(period), c.clone())))
}

/// Certificate for a single relation, or `None` when neither test applies.
pub fn certify_relation(m: &ManifoldData, relation: &USkeinVector) -> Option<Certificate> {
    let (zmin, g) = content(relation)?;
    if zmin == 0 && g.is_unit() {
        return None;
    }
    let annihilator = RPoly::from(g.clone()).z_shift(zmin);
    let element = divide(relation, zmin, &g);
    let image = flatten(m, &element, RPoly::augment);
    if !image.is_empty() {
        let image = image.into_iter().collect();
        return Some(Certificate {
            row: None,
            annihilator,
            element,
            kind: CertificateKind::Augmentation { image },
        });
    }
    if !m.pi1.is_abelian() {
        return None;
    }
    for (class, p) in flatten(m, &element, RPoly::at_z_zero) {
        let lambda = m.lambda(&class).ok()?;
        let residue = reduce_mod(&p, lambda);
        if !residue.is_zero() {
            let kind = CertificateKind::Linking { class, lambda, residue };
            return Some(Certificate {
                row: None,
                annihilator,
                element,
                kind,
            });
        }
    }
    None
}

/// Certificates from every row of `p`.
pub fn torsion_certificates(m: &ManifoldData, p: &PresentationMatrix) -> Vec<Certificate> {
    p.nonzero_rows()
        .filter_map(|(i, r)| certify_relation(m, &r.values).map(|c| Certificate { row: Some(i), ..c }))
        .collect()
}

/// First certificate whose torsion element involves `alpha`, or the first overall.
pub fn torsion_certificate(m: &ManifoldData, p: &PresentationMatrix, alpha: Option<&WrapClass>) -> Option<Certificate> {
    torsion_certificates(m, p).into_iter().find(|c| {
        alpha.is_none_or(|a| {
            c.element
                .keys()
                .any(|k| k == a || k.without_trivial() == a.without_trivial())
        })
    })
}

/// Δ̃(⟨a, a⁻¹⟩, (a, a⁻¹), g) = ⟨(aga⁻¹g⁻¹)°⟩ − ⟨1⟩ for a non-commuting pair, with its
/// certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonAbelianWitness {
    pub a: GroupElem,
    pub g: GroupElem,
    pub alpha: WrapClass,
    pub value: DeltaValue,
    pub certificate: Certificate,
}

/// Searches elements of length ≤ `bound` for a non-commuting pair.
pub fn nonabelian_witness(m: &ManifoldData, bound: usize) -> Option<NonAbelianWitness> {
    let model = &m.pi1;
    let elems = model.elements_up_to(bound);
    for a in elems.iter().filter(|a| !a.is_identity()) {
        for g in &elems {
            if model.commutes(a, g) {
                continue;
            }
            let ainv = model.inv(a);
            let alpha = WrapClass::from_elems(model, [a, &ainv]);
            let value = delta_generator(m, &alpha, a, &ainv, g, &[]).ok()?;
            let certificate = certify_relation(m, &to_ungraded(&value.relation))?;
            return Some(NonAbelianWitness {
                a: a.clone(),
                g: g.clone(),
                alpha,
                value,
                certificate,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::lookup;
    use crate::present::{theta_generator, to_ungraded};

    #[test]
    fn example_6_6_certificate() {
        let m = lookup("t3").unwrap();
        let t = &m.theta_entries[1];
        let row = to_ungraded(&theta_generator(&m, &t.alpha, &t.component, &t.events).unwrap());
        let c = certify_relation(&m, &row).unwrap();
        assert_eq!(c.annihilator, RPoly::z());
        assert!(matches!(c.kind, CertificateKind::Augmentation { ref image } if image.len() == 2));
        let h = &m.theta_entries[0];
        let row = to_ungraded(&theta_generator(&m, &h.alpha, &h.component, &h.events).unwrap());
        assert!(certify_relation(&m, &row).is_none());
    }

    #[test]
    fn delta_example_certificate_uses_linking() {
        let m = lookup("t3").unwrap();
        let d = &m.delta_entries[0];
        let v = delta_generator(&m, &d.alpha, &d.pair.0, &d.pair.1, &d.g, &d.events).unwrap();
        let c = certify_relation(&m, &to_ungraded(&v.relation)).unwrap();
        match c.kind {
            CertificateKind::Linking { class, lambda, .. } => {
                assert_eq!(class, m.wrap("<1,b2>").unwrap());
                assert_eq!(lambda, 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn free_group_witness() {
        let m = lookup("f1xi").unwrap();
        let w = nonabelian_witness(&m, 1).unwrap();
        assert_ne!(w.value.banded, w.value.standard);
        assert!(matches!(w.certificate.kind, CertificateKind::Augmentation { .. }));
        assert!(nonabelian_witness(&lookup("t3").unwrap(), 2).is_none());
    }

    #[test]
    fn reduction_mod_lambda() {
        let p = LaurentPoly::from_terms([(4, 1), (0, -1)]);
        assert!(reduce_mod(&p, 2).is_zero());
        assert!(!reduce_mod(&p, 3).is_zero());
    }
}
