//! Relation values of single Θ, Δ and sphere generators, and the default crossing data.

use crate::groups::{ConjClass, GroupElem};
use crate::intersect::{EventSpec, ManifoldData, SelfHomotopy};
use crate::paths::{CrossingEvent, Label, LabelVector, PathWord};
use crate::ring::{LaurentPoly, RPoly, UPoly};
use crate::wrap::{homology_class, SkeinVector, USkeinVector, WrapClass};

use super::PresentError;

/// Value of a Δ generator together with the pieces it is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaValue {
    /// α(1,2;g), the banded link expanded by the path.
    pub banded: WrapClass,
    /// α(1,2;1), the standard banding.
    pub standard: WrapClass,
    /// δ(g), the index of the band path.
    pub delta: i64,
    pub tilde: SkeinVector,
    /// z(q⁻¹ − q)·Δ̃.
    pub relation: SkeinVector,
}

pub(crate) fn to_skein(v: &LabelVector) -> SkeinVector {
    SkeinVector::from_terms(v.iter().map(|(k, c)| match k {
        Label::Wrap(w) => (w.clone(), c.clone()),
        Label::Symbol(s) => panic!("symbolic state <{s}> in a relation"),
    }))
}

/// Rewrites keys with trivial entries as u-powers of trivial-free keys.
pub fn to_graded(v: &SkeinVector) -> USkeinVector {
    USkeinVector::from_terms(v.iter().map(|(k, c)| {
        (
            k.without_trivial(),
            UPoly::from(c.clone()).u_shift(k.trivial_count() as u32),
        )
    }))
}

pub fn to_ungraded(v: &SkeinVector) -> USkeinVector {
    v.map_coeffs(|c| UPoly::from(c.clone()))
}

/// z(q⁻¹ − q).
pub fn delta_factor() -> RPoly {
    RPoly::monomial(1, -1, 1) - RPoly::monomial(1, 1, 1)
}

/// Turns event entries into crossing events on `state`, where `moving` is the component that
/// sweeps across the others.
fn resolve(
    m: &ManifoldData,
    state: &WrapClass,
    moving: &ConjClass,
    events: &[EventSpec],
) -> Result<Vec<CrossingEvent>, PresentError> {
    let model = &m.pi1;
    let rest = state
        .remove_one(moving)
        .ok_or_else(|| PresentError::NotInAlpha(model.render_class(moving)))?;
    let id = model.identity();
    events
        .iter()
        .map(|e| match e {
            EventSpec::With { class, sign } => {
                let others = rest
                    .remove_one(class)
                    .ok_or_else(|| PresentError::NotInAlpha(model.render_class(class)))?;
                let merged = model.merge_classes(moving.rep(), &id, class.rep());
                Ok(CrossingEvent::new(*sign, others.with(merged)))
            }
            EventSpec::Explicit { smoothed, sign } => Ok(CrossingEvent::new(*sign, smoothed.clone())),
        })
        .collect()
}

/// Θ(α, a, h): s_if of the self-homotopy loop at α given by `events`.
pub fn theta_generator(
    m: &ManifoldData,
    alpha: &WrapClass,
    a: &ConjClass,
    events: &[EventSpec],
) -> Result<SkeinVector, PresentError> {
    let path = PathWord::looped(alpha.clone(), resolve(m, alpha, a, events)?);
    Ok(to_skein(&path.s_if()))
}

/// Sphere generator on a trivial-free α: (u(q^{2ε}−1) + zq·G(ε))α + z²·tail, with G(ε) the
/// geometric sum. `With` events fix ε; explicit smoothings make up the tail.
pub fn theta_sphere_generator(
    m: &ManifoldData,
    alpha: &WrapClass,
    events: &[EventSpec],
) -> Result<USkeinVector, PresentError> {
    if alpha.trivial_count() > 0 {
        return Err(PresentError::NotReduced(alpha.render(&m.pi1)));
    }
    let mut out = USkeinVector::zero();
    let mut before = 0i64;
    for e in events {
        let eps = e.sign() as i64;
        match e {
            EventSpec::With { class, .. } if !alpha.contains(class) => {
                return Err(PresentError::NotInAlpha(m.pi1.render_class(class)));
            }
            EventSpec::With { .. } => {}
            EventSpec::Explicit { smoothed, .. } => {
                let c = RPoly::monomial(eps, 2 * before + eps, 2);
                out.add_term(
                    smoothed.without_trivial(),
                    UPoly::from(c).u_shift(smoothed.trivial_count() as u32),
                );
            }
        }
        before += eps;
    }
    let lead_u = RPoly::from(LaurentPoly::monomial(1, 2 * before) - LaurentPoly::one());
    let lead_z = RPoly::from(LaurentPoly::geometric_sum(before).shift(1)).z_shift(1);
    out.add_term(alpha.clone(), UPoly::from_u_coeffs([(1, lead_u), (0, lead_z)]));
    Ok(out)
}

/// Δ̃ = s_f(γ_g) − α(1,2;1) and Δ = z(q⁻¹−q)Δ̃ for the pair (a, b) re-banded along g. The band
/// path γ_g runs from the banded link to the standard link of α(1,2;g); `events` are its
/// crossings, with the merged component as the moving one.
pub fn delta_generator(
    m: &ManifoldData,
    alpha: &WrapClass,
    a: &GroupElem,
    b: &GroupElem,
    g: &GroupElem,
    events: &[EventSpec],
) -> Result<DeltaValue, PresentError> {
    let model = &m.pi1;
    if a.is_identity() || b.is_identity() {
        return Err(PresentError::TrivialPair);
    }
    let (ca, cb) = (model.conj_class(a), model.conj_class(b));
    let rest = alpha
        .remove_one(&ca)
        .and_then(|r| r.remove_one(&cb))
        .ok_or_else(|| PresentError::NotInAlpha(format!("{}, {}", model.render(a), model.render(b))))?;
    let merged = model.merge_classes(a, g, b);
    let banded = rest.with(merged.clone());
    let standard = rest.with(model.merge_classes(a, &model.identity(), b));
    let path = PathWord::new(
        Label::symbol("banded"),
        banded.clone(),
        resolve(m, &banded, &merged, events)?,
    );
    let mut tilde = to_skein(&path.s_f());
    tilde.add_term(standard.clone(), -RPoly::one());
    let relation = tilde.scale(&delta_factor());
    Ok(DeltaValue {
        banded,
        standard,
        delta: path.index(),
        tilde,
        relation,
    })
}

fn signed_events(class: &ConjClass, n: i64) -> impl Iterator<Item = EventSpec> + '_ {
    let sign = if n < 0 { -1 } else { 1 };
    (0..n.unsigned_abs()).map(move |_| EventSpec::With {
        class: class.clone(),
        sign,
    })
}

/// One crossing per unit of each intersection number, in component order. `None` where the
/// numbers are not determined by the descriptor (non-abelian models with other components).
pub fn default_theta_events(
    m: &ManifoldData,
    alpha: &WrapClass,
    a: &ConjClass,
    h: &SelfHomotopy,
) -> Option<Vec<EventSpec>> {
    let rest = alpha.remove_one(a)?;
    if rest.is_empty() {
        return Some(vec![]);
    }
    if !m.pi1.is_abelian() {
        return None;
    }
    let id = m.pi1.identity();
    let (x, s) = match h {
        SelfHomotopy::Centralizer(x) => (x, None),
        SelfHomotopy::Sphere(s) => (&id, Some(s.as_slice())),
    };
    let mut out = Vec::new();
    for c in rest.distinct() {
        let n = m.iota_f(a.rep(), x, s, &WrapClass::new(vec![c.clone()])).ok()? * rest.multiplicity(c) as i64;
        out.extend(signed_events(c, n));
    }
    Some(out)
}

/// Band crossings from the intersection of τ(a, g) with the remaining components.
pub fn default_delta_events(
    m: &ManifoldData,
    alpha: &WrapClass,
    a: &GroupElem,
    b: &GroupElem,
    g: &GroupElem,
) -> Option<Vec<EventSpec>> {
    let model = &m.pi1;
    let rest = alpha
        .remove_one(&model.conj_class(a))?
        .remove_one(&model.conj_class(b))?;
    if rest.is_empty() {
        return Some(vec![]);
    }
    if !model.is_abelian() {
        return None;
    }
    let t = m.torus(a, g);
    let mut out = Vec::new();
    for c in rest.distinct() {
        let hc = homology_class(&WrapClass::new(vec![c.clone()]), model);
        out.extend(signed_events(c, m.pair(&t, &hc) * rest.multiplicity(c) as i64));
    }
    Some(out)
}

/// Crossings of a sphere, swept by an added trivial component, with every component of α.
pub fn default_sphere_events(m: &ManifoldData, alpha: &WrapClass, s: &[i64]) -> Option<Vec<EventSpec>> {
    if !m.pi1.is_abelian() && !alpha.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    for c in alpha.distinct() {
        let hc = homology_class(&WrapClass::new(vec![c.clone()]), &m.pi1);
        out.extend(signed_events(c, m.pair(s, &hc) * alpha.multiplicity(c) as i64));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::lookup;
    use crate::wrap::render_vector;

    #[test]
    fn example_6_6_values() {
        let m = lookup("t3").unwrap();
        let alpha = m.wrap("<b1,b2,b3>").unwrap();
        let out: Vec<String> = m
            .theta_entries
            .iter()
            .map(|t| render_vector(&theta_generator(&m, &alpha, &t.component, &t.events).unwrap(), &m.pi1))
            .collect();
        assert_eq!(out[0], "z*q*<b1*b2, b3> + (q^2 - 1)*<b1, b2, b3>");
        assert_eq!(out[1], "z*q*<b1*b2, b3> - z*q*<b1*b3, b2>");
    }

    #[test]
    fn empty_events_give_zero() {
        let m = lookup("t3").unwrap();
        let alpha = m.wrap("<b1,b2,b3>").unwrap();
        let b1 = m.pi1.conj_class(&m.pi1.generator(0));
        assert!(theta_generator(&m, &alpha, &b1, &[]).unwrap().is_zero());
        let d = delta_generator(
            &m,
            &alpha,
            &m.pi1.generator(0),
            &m.pi1.generator(1),
            &m.pi1.generator(2),
            &[],
        )
        .unwrap();
        assert!(d.tilde.is_zero() && d.relation.is_zero());
    }

    #[test]
    fn delta_example() {
        let m = lookup("t3").unwrap();
        let d = &m.delta_entries[0];
        let v = delta_generator(&m, &d.alpha, &d.pair.0, &d.pair.1, &d.g, &d.events).unwrap();
        assert_eq!(v.delta, -1);
        assert_eq!(render_vector(&v.tilde, &m.pi1), "(-1 + q^-2)*<1, b2> - z*q^-1*<b2>");
        let defaults = default_delta_events(&m, &d.alpha, &d.pair.0, &d.pair.1, &d.g).unwrap();
        assert_eq!(defaults, d.events);
    }

    #[test]
    fn sphere_generator_leading_terms() {
        let m = lookup("s2xs1").unwrap();
        let alpha = m.wrap("<a>").unwrap();
        assert!(theta_sphere_generator(&m, &alpha, &[]).unwrap().is_zero());
        let ev = default_sphere_events(&m, &alpha, &[1]).unwrap();
        let v = theta_sphere_generator(&m, &alpha, &ev).unwrap();
        assert_eq!(v.coeff(&alpha).to_string(), "z*q^2 + z*q + u*q^2 - u");
        assert!(theta_sphere_generator(&m, &m.wrap("<1,a>").unwrap(), &[]).is_err());
    }

    #[test]
    fn default_theta_events_follow_intersections() {
        let m = lookup("t3").unwrap();
        for t in &m.theta_entries {
            assert_eq!(
                default_theta_events(&m, &t.alpha, &t.component, &t.h).unwrap(),
                t.events
            );
        }
    }
}
