use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Mul, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::rational_pow;
use super::{monomial_body, LaurentPoly, RingError, Unit};

/// An element of R = ℤ[q±1, z]: a map from z-degree to a nonzero Laurent coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RPoly {
    terms: BTreeMap<u32, LaurentPoly>,
}

/// Image of an [`RPoly`] under one of the allowed specializations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    /// Nothing substituted.
    Unchanged(RPoly),
    /// q kept, z sent to an integer.
    Laurent(LaurentPoly),
    /// q kept, z sent to a non-integral rational; rational coefficients by exponent.
    RationalLaurent(BTreeMap<i64, BigRational>),
    /// q sent to a nonzero rational, z kept; rational coefficients by z-degree.
    ZPoly(BTreeMap<u32, BigRational>),
    /// Both variables substituted.
    Scalar(BigRational),
}

impl RPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn q() -> Self {
        Self::from(LaurentPoly::q())
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from(LaurentPoly::constant(c))
    }

    /// c · q^q_exp · z^z_deg
    pub fn monomial(c: impl Into<BigInt>, q_exp: i64, z_deg: u32) -> Self {
        let mut p = RPoly::zero();
        p.add_coeff(z_deg, LaurentPoly::monomial(c, q_exp));
        p
    }

    /// Builds from (z-degree, coefficient) pairs, merging duplicates.
    pub fn from_z_coeffs<I: IntoIterator<Item = (u32, LaurentPoly)>>(iter: I) -> Self {
        let mut p = RPoly::zero();
        for (k, c) in iter {
            p.add_coeff(k, c);
        }
        p
    }

    fn add_coeff(&mut self, z_deg: u32, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(z_deg).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&z_deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn z_terms(&self) -> impl DoubleEndedIterator<Item = (u32, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn z_coeff(&self, z_deg: u32) -> LaurentPoly {
        self.terms.get(&z_deg).cloned().unwrap_or_default()
    }

    pub fn min_z_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn max_z_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn as_unit(&self) -> Option<Unit> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.get(&0)?.as_unit()
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        match self.terms.len() {
            0 => None,
            1 => self.terms.get(&0),
            _ => None,
        }
    }

    /// Multiplies by z^k.
    pub fn z_shift(&self, k: u32) -> RPoly {
        RPoly {
            terms: self.terms.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> RPoly {
        RPoly::from_z_coeffs(self.terms.iter().map(|(k, x)| (*k, x * c)))
    }

    pub fn apply_unit(&self, u: Unit) -> RPoly {
        RPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.apply_unit(u))).collect(),
        }
    }

    /// `Some(u)` when `self == u · other` for a unit ±q^k.
    pub fn eq_up_to_unit(&self, other: &RPoly) -> Option<Unit> {
        if self.is_zero() || other.is_zero() {
            return (self.is_zero() && other.is_zero()).then_some(Unit::ONE);
        }
        let (k, c) = self.terms.iter().next()?;
        let u = c.eq_up_to_unit(&other.terms.get(k)?.clone())?;
        (other.apply_unit(u) == *self).then_some(u)
    }

    /// Augmentation q ↦ 1, z ↦ 0.
    pub fn augment(&self) -> BigInt {
        self.terms.get(&0).map(LaurentPoly::eval_one).unwrap_or_default()
    }

    /// Image under z ↦ value with q kept.
    pub fn at_z(&self, z: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in &self.terms {
            out += &c.scale(&num_traits::pow(z.clone(), *k as usize));
        }
        out
    }

    /// Image under z ↦ 0, the ℒ-specialization.
    pub fn at_z_zero(&self) -> LaurentPoly {
        self.z_coeff(0)
    }

    /// Image under q ↦ 1, the 𝒞-specialization, as integer coefficients by z-degree.
    pub fn at_q_one(&self) -> BTreeMap<u32, BigInt> {
        self.terms
            .iter()
            .map(|(k, c)| (*k, c.eval_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Ring homomorphism sending q and/or z to rational values; `None` keeps the variable.
    pub fn specialize(&self, q: Option<&BigRational>, z: Option<&BigRational>) -> Result<Specialized, RingError> {
        if q.is_some_and(Zero::is_zero) {
            return Err(RingError::ZeroSubstitution);
        }
        Ok(match (q, z) {
            (None, None) => Specialized::Unchanged(self.clone()),
            (None, Some(z)) if z.is_integer() => Specialized::Laurent(self.at_z(&z.to_integer())),
            (None, Some(z)) => {
                let mut out: BTreeMap<i64, BigRational> = BTreeMap::new();
                for (k, c) in &self.terms {
                    let zk = num_traits::pow(z.clone(), *k as usize);
                    for (e, x) in c.terms() {
                        *out.entry(e).or_insert_with(BigRational::zero) += BigRational::from_integer(x.clone()) * &zk;
                    }
                }
                out.retain(|_, v| !v.is_zero());
                Specialized::RationalLaurent(out)
            }
            (Some(q), None) => {
                let mut out = BTreeMap::new();
                for (k, c) in &self.terms {
                    let v = c.eval(q)?;
                    if !v.is_zero() {
                        out.insert(*k, v);
                    }
                }
                Specialized::ZPoly(out)
            }
            (Some(q), Some(z)) => {
                let mut acc = BigRational::zero();
                for (k, c) in &self.terms {
                    acc += c.eval(q)? * rational_pow(z, *k as i64);
                }
                Specialized::Scalar(acc)
            }
        })
    }

    /// Divides every z-coefficient exactly by `d` in ℤ[q±1].
    pub fn exact_div_laurent(&self, d: &LaurentPoly) -> Option<RPoly> {
        let mut out = RPoly::zero();
        for (k, c) in &self.terms {
            out.add_coeff(*k, c.exact_div(d)?);
        }
        Some(out)
    }

    /// Gcd in ℤ[q±1] of all z-coefficients.
    pub fn laurent_content(&self) -> LaurentPoly {
        self.terms.values().fold(LaurentPoly::zero(), |acc, c| acc.gcd(c))
    }
}

impl From<LaurentPoly> for RPoly {
    fn from(p: LaurentPoly) -> Self {
        let mut r = RPoly::zero();
        r.add_coeff(0, p);
        r
    }
}

impl From<i64> for RPoly {
    fn from(c: i64) -> Self {
        RPoly::constant(c)
    }
}

impl Zero for RPoly {
    fn zero() -> Self {
        RPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for RPoly {
    fn one() -> Self {
        RPoly::one()
    }
}

impl Neg for RPoly {
    type Output = RPoly;
    fn neg(self) -> RPoly {
        RPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for &RPoly {
    type Output = RPoly;
    fn neg(self) -> RPoly {
        -self.clone()
    }
}

impl AddAssign<&RPoly> for RPoly {
    fn add_assign(&mut self, rhs: &RPoly) {
        for (k, c) in &rhs.terms {
            self.add_coeff(*k, c.clone());
        }
    }
}

impl SubAssign<&RPoly> for RPoly {
    fn sub_assign(&mut self, rhs: &RPoly) {
        for (k, c) in &rhs.terms {
            self.add_coeff(*k, -c);
        }
    }
}

impl Mul<&RPoly> for &RPoly {
    type Output = RPoly;
    fn mul(self, rhs: &RPoly) -> RPoly {
        let mut out = RPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_coeff(ka + kb, ca * cb);
            }
        }
        out
    }
}

super::forward_binops!(RPoly);

impl fmt::Debug for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RPoly({self})")
    }
}

impl fmt::Display for RPoly {
    /// Monomials sorted by z-degree ascending, then q-exponent descending: `q^2 - 1 + z*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            for (e, x) in c.terms().rev() {
                let (neg, body) = monomial_body(x, &[("z", *k as i64), ("q", e)]);
                super::write_signed(f, &mut first, neg, &body)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> RPoly {
        RPoly::monomial(1, e, 0)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn additive_inverse_and_identity() {
        let a = q(1) - q(-1);
        let b = q(-1) - q(1);
        assert!((a + b).is_zero());
        assert_eq!(q(2) + RPoly::zero(), q(2));
    }

    #[test]
    fn hand_sum() {
        // (1 + zq) + (q² − 1) = q² + zq
        let lhs = (RPoly::one() + RPoly::monomial(1, 1, 1)) + (q(2) - RPoly::one());
        assert_eq!(lhs, q(2) + RPoly::monomial(1, 1, 1));
    }

    #[test]
    fn products() {
        assert_eq!((q(1) - q(-1)) * (q(1) + q(-1)), q(2) - q(-2));
        assert!((RPoly::z() * (q(-1) - q(1)) * RPoly::zero()).is_zero());
        assert_eq!((RPoly::one() + q(1)) * (RPoly::one() - q(1)), RPoly::one() - q(2));
    }

    #[test]
    fn specializations() {
        let a = q(2) - RPoly::one();
        assert_eq!(
            a.specialize(Some(&rat(1)), None).unwrap(),
            Specialized::ZPoly(BTreeMap::new())
        );
        let b = &a + &RPoly::monomial(1, 1, 1);
        assert_eq!(
            b.specialize(None, Some(&rat(0))).unwrap(),
            Specialized::Laurent(LaurentPoly::from_terms([(2, 1), (0, -1)]))
        );
        let c = RPoly::z() * q(1) * (RPoly::one() + q(1));
        assert_eq!(
            c.specialize(Some(&rat(1)), Some(&rat(1))).unwrap(),
            Specialized::Scalar(rat(2))
        );
        assert_eq!(c.specialize(Some(&rat(0)), None), Err(RingError::ZeroSubstitution));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            c.specialize(None, Some(&half)).unwrap(),
            Specialized::RationalLaurent([(1, half.clone()), (2, half.clone())].into_iter().collect())
        );
    }

    #[test]
    fn display_grammar() {
        let p = q(2) - RPoly::one() + RPoly::monomial(1, 1, 1);
        assert_eq!(p.to_string(), "q^2 - 1 + z*q");
        assert_eq!(RPoly::monomial(-3, -1, 2).to_string(), "-3*z^2*q^-1");
    }

    #[test]
    fn unit_comparison() {
        let p = RPoly::one() - q(2) - RPoly::monomial(1, 1, 1);
        let shifted = p.apply_unit(Unit {
            negative: true,
            exponent: -2,
        });
        assert_eq!(
            shifted.eq_up_to_unit(&p),
            Some(Unit {
                negative: true,
                exponent: -2
            })
        );
        assert_eq!(p.eq_up_to_unit(&(q(2) - RPoly::one())), None);
    }
}
