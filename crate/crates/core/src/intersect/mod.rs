//! Manifold descriptors and the quantities computed from intersection data: ι_f, ι(α, a),
//! λ(α), the linking module, linking numbers and the freeness verdicts.

mod catalog;
mod descriptor;

use num_integer::Integer;

use crate::groups::{ConjClass, GroupElem, GroupModel};
use crate::paths::{Label, PathWord};
use crate::ring::LaurentPoly;
use crate::wrap::{homology_class, WrapClass};

pub use catalog::{catalog_names, catalog_source, lookup, lookup_or_load};
pub use descriptor::{DeltaEntry, DescriptorError, EventSpec, Flags, ManifoldData, SelfHomotopy, ThetaEntry};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntersectError {
    #[error("unsupported model: {0}")]
    Unsupported(String),
    #[error("class {0} does not occur in the wrapping class")]
    NotInAlpha(String),
    #[error("path ends at {found}, expected the standard link {expected}")]
    EndpointMismatch { expected: String, found: String },
}

/// One summand ℤ[q±1]/(q^{2λ}−1) of the linking module; λ = 0 is a free summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingSummand {
    pub alpha: WrapClass,
    pub lambda: u64,
    pub annihilator: LaurentPoly,
}

impl LinkingSummand {
    pub fn is_free(&self) -> bool {
        self.lambda == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HVerdict {
    Free,
    Torsion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CVerdict {
    Free,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub h: HVerdict,
    pub h_clause: String,
    pub c: CVerdict,
    pub c_clause: String,
    /// Inputs taken on trust from the descriptor, with their values.
    pub assertions: Vec<(String, String)>,
}

impl ManifoldData {
    fn require_abelian(&self) -> Result<(), IntersectError> {
        if self.pi1.is_abelian() {
            Ok(())
        } else {
            Err(IntersectError::Unsupported(format!(
                "intersection data needs an abelian fundamental group, {} has {}",
                self.name,
                self.pi1.kind()
            )))
        }
    }

    /// τ(a, h) ∈ H₂, bilinear in the free parts.
    pub fn torus(&self, a: &GroupElem, h: &GroupElem) -> Vec<i64> {
        let av = self.pi1.abelianize(a);
        let hv = self.pi1.abelianize(h);
        let mut out = vec![0; self.h2_rank];
        for (i, x) in av.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, y) in hv.iter().enumerate().filter(|(_, y)| **y != 0) {
                for (o, t) in out.iter_mut().zip(&self.torus_class[i][j]) {
                    *o += x * y * t;
                }
            }
        }
        out
    }

    /// ι(x, y) for x ∈ H₂ and y in the free part of H₁.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        self.pairing
            .iter()
            .zip(x)
            .map(|(row, xk)| xk * row.iter().zip(y).map(|(p, yj)| p * yj).sum::<i64>())
            .sum()
    }

    /// ι_f(a, h, s, β) = ι(τ(a, h) + s, [β]).
    pub fn iota_f(
        &self,
        a: &GroupElem,
        h: &GroupElem,
        sphere: Option<&[i64]>,
        beta: &WrapClass,
    ) -> Result<i64, IntersectError> {
        self.require_abelian()?;
        let mut x = self.torus(a, h);
        if let Some(s) = sphere {
            for (o, v) in x.iter_mut().zip(s) {
                *o += v;
            }
        }
        Ok(self.pair(&x, &homology_class(beta, &self.pi1)))
    }

    /// ι(α, a): the nonnegative generator of ι_f(π₁(LM, f), α∖a) ⊂ ℤ.
    pub fn iota_alpha_a(&self, alpha: &WrapClass, a: &ConjClass) -> Result<u64, IntersectError> {
        self.require_abelian()?;
        let rest = alpha
            .remove_one(a)
            .ok_or_else(|| IntersectError::NotInAlpha(self.pi1.render_class(a)))?;
        let mut g = 0i64;
        for e in self.pi1.generators() {
            g = g.gcd(&self.iota_f(a.rep(), &e, None, &rest)?);
        }
        let id = self.pi1.identity();
        for s in &self.sphere_subgroup {
            g = g.gcd(&self.iota_f(a.rep(), &id, Some(s), &rest)?);
        }
        Ok(g.unsigned_abs())
    }

    /// λ(α): gcd of ι(α, a) over the entries of α; 0 for ⟨⟩.
    pub fn lambda(&self, alpha: &WrapClass) -> Result<u64, IntersectError> {
        let mut g = 0u64;
        for a in alpha.distinct() {
            g = g.gcd(&self.iota_alpha_a(alpha, a)?);
        }
        Ok(g)
    }

    pub fn linking_module<'a, I>(&self, alphas: I) -> Result<Vec<LinkingSummand>, IntersectError>
    where
        I: IntoIterator<Item = &'a WrapClass>,
    {
        alphas
            .into_iter()
            .map(|a| {
                let lambda = self.lambda(a)?;
                Ok(LinkingSummand {
                    alpha: a.clone(),
                    lambda,
                    annihilator: LaurentPoly::cyclotomic_q2(lambda),
                })
            })
            .collect()
    }

    /// ℓ_α(γ(0)) = ε(γ) mod λ(α) for a path γ ending at the standard link of α.
    pub fn linking_number(&self, alpha: &WrapClass, gamma: &PathWord) -> Result<i64, IntersectError> {
        if gamma.end != Label::Wrap(alpha.clone()) {
            return Err(IntersectError::EndpointMismatch {
                expected: alpha.render(&self.pi1),
                found: gamma.end.render(Some(&self.pi1)),
            });
        }
        let lambda = self.lambda(alpha)? as i64;
        let idx = gamma.index();
        Ok(if lambda == 0 { idx } else { idx.rem_euclid(lambda) })
    }

    pub fn freeness_verdict(&self) -> Verdict {
        let abelian = self.pi1.is_abelian();
        let (h, h_clause) = if !abelian {
            (
                HVerdict::Torsion,
                format!("fundamental group {} is not abelian", self.pi1.kind()),
            )
        } else if 2 * self.b1 == self.b1_boundary {
            (HVerdict::Free, "abelian, 2b1=b1(∂)".to_string())
        } else {
            (
                HVerdict::Torsion,
                format!("abelian, 2b1={} but b1(∂)={}", 2 * self.b1, self.b1_boundary),
            )
        };
        let (c, c_clause) = if self.flags.pi2_zero && self.flags.atoroidal {
            (CVerdict::Free, "pi2=0 and atoroidal".to_string())
        } else {
            let mut missing = Vec::new();
            if !self.flags.pi2_zero {
                missing.push("pi2=0");
            }
            if !self.flags.atoroidal {
                missing.push("atoroidal");
            }
            (CVerdict::Undecided, format!("not declared: {}", missing.join(", ")))
        };
        Verdict {
            h,
            h_clause,
            c,
            c_clause,
            assertions: vec![
                ("b1".into(), self.b1.to_string()),
                ("b1_boundary".into(), self.b1_boundary.to_string()),
                ("pi2_zero".into(), self.flags.pi2_zero.to_string()),
                ("atoroidal".into(), self.flags.atoroidal.to_string()),
            ],
        }
    }

    /// Parses a wrapping-class literal in this manifold's group.
    pub fn wrap(&self, src: &str) -> Result<WrapClass, crate::groups::GroupError> {
        WrapClass::parse(&self.pi1, src)
    }

    pub fn model(&self) -> &GroupModel {
        &self.pi1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t3_iota_f() {
        let m = lookup("t3").unwrap();
        let p = |s: &str| m.pi1.parse_elem(s).unwrap();
        assert_eq!(m.iota_f(&p("b1"), &p("b2"), None, &m.wrap("<b3>").unwrap()), Ok(1));
        assert_eq!(m.iota_f(&p("b1"), &p("1"), None, &m.wrap("<b3>").unwrap()), Ok(0));
    }

    #[test]
    fn s2xs1_sphere_pairing() {
        let m = lookup("s2xs1").unwrap();
        let id = m.pi1.identity();
        assert_eq!(m.iota_f(&id, &id, Some(&[1]), &m.wrap("<a,a>").unwrap()), Ok(2));
        let alpha = m.wrap("<a,a,a^-1>").unwrap();
        let ainv = m.pi1.conj_class(&m.pi1.parse_elem("a^-1").unwrap());
        assert_eq!(m.iota_alpha_a(&alpha, &ainv), Ok(2));
        assert_eq!(m.lambda(&alpha), Ok(2));
    }

    #[test]
    fn t3_lambdas() {
        let m = lookup("t3").unwrap();
        let alpha = m.wrap("<b1,b2,b3>").unwrap();
        assert_eq!(m.lambda(&alpha), Ok(1));
        assert_eq!(m.lambda(&m.wrap("<1,b2>").unwrap()), Ok(0));
        let one = m.pi1.conj_class(&m.pi1.identity());
        assert_eq!(m.iota_alpha_a(&m.wrap("<1,b2>").unwrap(), &one), Ok(0));
        assert!(matches!(
            m.iota_alpha_a(&alpha, &one),
            Err(IntersectError::NotInAlpha(_))
        ));
    }

    #[test]
    fn linking_numbers() {
        let m = lookup("s2xs1").unwrap();
        let alpha = m.wrap("<a,a,a^-1>").unwrap();
        let ev = crate::paths::CrossingEvent::new(1, Label::symbol("A"));
        let gamma = PathWord::new(Label::symbol("K"), alpha.clone(), vec![ev.clone(), ev.clone(), ev]);
        assert_eq!(m.linking_number(&alpha, &gamma), Ok(1));
        assert_eq!(m.linking_number(&alpha, &PathWord::constant(alpha.clone())), Ok(0));
        assert!(m
            .linking_number(&alpha, &PathWord::constant(Label::symbol("K")))
            .is_err());
    }

    #[test]
    fn verdicts() {
        assert_eq!(lookup("s1xd2").unwrap().freeness_verdict().h, HVerdict::Free);
        assert_eq!(lookup("t3").unwrap().freeness_verdict().h, HVerdict::Torsion);
        assert_eq!(lookup("s2xs1").unwrap().freeness_verdict().h, HVerdict::Torsion);
    }
}
