use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Mul, Neg, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;
use super::RingError;

/// An element of ℤ[q, q⁻¹], stored as a sparse map from exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

/// A unit ±q^k of ℤ[q±1].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unit {
    pub negative: bool,
    pub exponent: i64,
}

impl Unit {
    pub const ONE: Unit = Unit {
        negative: false,
        exponent: 0,
    };

    pub fn to_poly(self) -> LaurentPoly {
        let c = if self.negative { -1 } else { 1 };
        LaurentPoly::monomial(c, self.exponent)
    }

    pub fn inverse(self) -> Unit {
        Unit {
            negative: self.negative,
            exponent: -self.exponent,
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_poly(), f)
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly { terms }
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, exponent: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns the unit if this polynomial is ±q^k; units of ℤ[q±1] are exactly these.
    pub fn as_unit(&self) -> Option<Unit> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some(Unit {
                negative: false,
                exponent: *e,
            })
        } else if (-c).is_one() {
            Some(Unit {
                negative: true,
                exponent: *e,
            })
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn apply_unit(&self, u: Unit) -> LaurentPoly {
        let p = self.shift(u.exponent);
        if u.negative {
            -p
        } else {
            p
        }
    }

    pub fn pow(&self, mut n: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Image under q ↦ 1.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc + c)
    }

    /// Image under q ↦ value; q is a unit so the value must be nonzero.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational, RingError> {
        if q.is_zero() {
            return Err(RingError::ZeroSubstitution);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * rational_pow(q, *e);
        }
        Ok(acc)
    }

    /// `Some(u)` when `self == u · other`.
    pub fn eq_up_to_unit(&self, other: &LaurentPoly) -> Option<Unit> {
        if self.is_zero() || other.is_zero() {
            return (self.is_zero() && other.is_zero()).then_some(Unit::ONE);
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (se, sc) = self.terms.iter().next()?;
        let (oe, oc) = other.terms.iter().next()?;
        let negative = if sc == oc {
            false
        } else if *sc == -oc {
            true
        } else {
            return None;
        };
        let u = Unit {
            negative,
            exponent: se - oe,
        };
        (other.apply_unit(u) == *self).then_some(u)
    }

    /// q^{2λ} − 1, and 0 for λ = 0.
    pub fn cyclotomic_q2(lambda: u64) -> LaurentPoly {
        if lambda == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_terms([(2 * lambda as i64, 1), (0, -1)])
    }

    /// The Laurent polynomial p with p·(1 − q) = 1 − q^{2ε}.
    pub fn geometric_sum(eps: i64) -> LaurentPoly {
        match eps.cmp(&0) {
            std::cmp::Ordering::Equal => LaurentPoly::zero(),
            std::cmp::Ordering::Greater => LaurentPoly::from_terms((0..2 * eps).map(|e| (e, 1))),
            std::cmp::Ordering::Less => LaurentPoly::from_terms((2 * eps..0).map(|e| (e, -1))),
        }
    }

    /// Normalizes away the unit part: lowest exponent 0, positive leading coefficient.
    pub fn unit_normal(&self) -> (LaurentPoly, Unit) {
        let Some(lo) = self.min_exp() else {
            return (LaurentPoly::zero(), Unit::ONE);
        };
        let lead_negative = self.terms.values().next_back().is_some_and(|c| c.is_negative());
        let u = Unit {
            negative: lead_negative,
            exponent: -lo,
        };
        (self.apply_unit(u), u.inverse())
    }

    /// Integer content (gcd of coefficients), nonnegative.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Greatest common divisor in ℤ[q±1], normalized with `unit_normal`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.unit_normal().0;
        }
        if other.is_zero() {
            return self.unit_normal().0;
        }
        let c = self.content().gcd(&other.content());
        let a = QPoly::from_laurent(&self.unit_normal().0);
        let b = QPoly::from_laurent(&other.unit_normal().0);
        let g = a.gcd(&b).to_primitive_laurent();
        g.scale(&c).unit_normal().0
    }

    /// Exact division in ℤ[q±1]; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let d_lo = divisor.min_exp()?;
        let d_hi = divisor.max_exp()?;
        let d_lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        // divide from the top; the remainder's span shrinks by at least one each step
        while let Some(r_hi) = rem.max_exp() {
            let r_lo = rem.min_exp()?;
            if r_hi - r_lo < d_hi - d_lo {
                return None;
            }
            let (qc, r) = rem.coeff(r_hi).div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            let step = LaurentPoly::monomial(qc, r_hi - d_hi);
            rem = &rem - &(&step * divisor);
            quotient += step;
        }
        Some(quotient)
    }
}

pub(crate) fn rational_pow(q: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

super::forward_binops!(LaurentPoly);

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms by descending exponent, e.g. `q^2 - 1 + ...` style `q^2 - q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let (neg, body) = monomial_body(c, &[("q", *e)]);
            super::write_signed(f, &mut first, neg, &body)?;
        }
        Ok(())
    }
}

/// Renders `c * var^e * ...` without sign; returns (is_negative, body).
pub(crate) fn monomial_body(c: &BigInt, vars: &[(&str, i64)]) -> (bool, String) {
    let mut factors: Vec<String> = Vec::new();
    for (name, e) in vars {
        match e {
            0 => {}
            1 => factors.push((*name).to_string()),
            _ => factors.push(format!("{name}^{e}")),
        }
    }
    let abs = c.abs();
    if factors.is_empty() {
        return (c.is_negative(), abs.to_string());
    }
    if !abs.is_one() {
        factors.insert(0, abs.to_string());
    }
    (c.is_negative(), factors.join("*"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = lp(&[(1, 1), (-1, -1)]);
        let b = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn units() {
        assert!(lp(&[(3, -1)]).is_unit());
        assert!(!lp(&[(3, 2)]).is_unit());
        assert!(!lp(&[(0, 1), (1, 1)]).is_unit());
        assert!(!LaurentPoly::zero().is_unit());
    }

    #[test]
    fn cyclotomic() {
        assert!(LaurentPoly::cyclotomic_q2(0).is_zero());
        assert_eq!(LaurentPoly::cyclotomic_q2(1), lp(&[(2, 1), (0, -1)]));
        assert_eq!(LaurentPoly::cyclotomic_q2(2), lp(&[(4, 1), (0, -1)]));
    }

    #[test]
    fn geometric_sum_small_cases() {
        assert!(LaurentPoly::geometric_sum(0).is_zero());
        assert_eq!(LaurentPoly::geometric_sum(1), lp(&[(0, 1), (1, 1)]));
        assert_eq!(LaurentPoly::geometric_sum(-1), lp(&[(-1, -1), (-2, -1)]));
    }

    #[test]
    fn geometric_sum_identity() {
        let one_minus_q = lp(&[(0, 1), (1, -1)]);
        for eps in -10..=10 {
            let lhs = &LaurentPoly::geometric_sum(eps) * &one_minus_q + LaurentPoly::monomial(1, 2 * eps);
            assert_eq!(lhs, LaurentPoly::one(), "eps = {eps}");
        }
    }

    #[test]
    fn up_to_unit() {
        let p = lp(&[(0, 1), (2, -1)]);
        let u = lp(&[(2, -1)]);
        let pu = &p * &u;
        assert_eq!(
            pu.eq_up_to_unit(&p),
            Some(Unit {
                negative: true,
                exponent: 2
            })
        );
        assert_eq!(p.eq_up_to_unit(&lp(&[(0, 1), (2, 1)])), None);
    }

    #[test]
    fn gcd_and_division() {
        let qm1 = lp(&[(1, 1), (0, -1)]);
        let qp1 = lp(&[(1, 1), (0, 1)]);
        let a = (&qm1 * &qp1).shift(-3).scale(&BigInt::from(6));
        let b = (&qm1 * &qm1).scale(&BigInt::from(4));
        assert_eq!(a.gcd(&b), qm1.scale(&BigInt::from(2)));
        assert_eq!(a.exact_div(&qm1), Some(qp1.shift(-3).scale(&BigInt::from(6))));
        assert_eq!(qp1.exact_div(&qm1), None);
        assert_eq!(lp(&[(0, 3)]).exact_div(&lp(&[(0, 2)])), None);
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(2, 1), (0, -1)]).to_string(), "q^2 - 1");
        assert_eq!(lp(&[(-1, -3), (1, 1)]).to_string(), "q - 3*q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
