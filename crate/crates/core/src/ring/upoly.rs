use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Mul, Neg, SubAssign};

use num_traits::{One, Zero};

use super::{monomial_body, RPoly};

/// An element of ℤ[q±1, z, u]: a map from u-degree to a nonzero [`RPoly`].
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct UPoly {
    terms: BTreeMap<u32, RPoly>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        RPoly::one().into()
    }

    pub fn u() -> Self {
        UPoly::from_u_coeffs([(1, RPoly::one())])
    }

    pub fn from_u_coeffs<I: IntoIterator<Item = (u32, RPoly)>>(iter: I) -> Self {
        let mut p = UPoly::zero();
        for (k, c) in iter {
            p.add_coeff(k, c);
        }
        p
    }

    fn add_coeff(&mut self, u_deg: u32, c: RPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(u_deg).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&u_deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn u_terms(&self) -> impl DoubleEndedIterator<Item = (u32, &RPoly)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn u_coeff(&self, u_deg: u32) -> RPoly {
        self.terms.get(&u_deg).cloned().unwrap_or_default()
    }

    /// The element as an [`RPoly`] when it has no u-terms.
    pub fn to_rpoly(&self) -> Option<RPoly> {
        match self.terms.keys().next_back() {
            None => Some(RPoly::zero()),
            Some(0) => Some(self.u_coeff(0)),
            Some(_) => None,
        }
    }

    pub fn u_shift(&self, k: u32) -> UPoly {
        UPoly {
            terms: self.terms.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &RPoly) -> UPoly {
        UPoly::from_u_coeffs(self.terms.iter().map(|(k, x)| (*k, x * c)))
    }
}

impl From<RPoly> for UPoly {
    fn from(p: RPoly) -> Self {
        UPoly::from_u_coeffs([(0, p)])
    }
}

impl Zero for UPoly {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for UPoly {
    fn one() -> Self {
        UPoly::one()
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -self.clone()
    }
}

impl AddAssign<&UPoly> for UPoly {
    fn add_assign(&mut self, rhs: &UPoly) {
        for (k, c) in &rhs.terms {
            self.add_coeff(*k, c.clone());
        }
    }
}

impl SubAssign<&UPoly> for UPoly {
    fn sub_assign(&mut self, rhs: &UPoly) {
        for (k, c) in &rhs.terms {
            self.add_coeff(*k, -c);
        }
    }
}

impl Mul<&UPoly> for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        let mut out = UPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_coeff(ka + kb, ca * cb);
            }
        }
        out
    }
}

super::forward_binops!(UPoly);

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (ku, r) in &self.terms {
            for (kz, c) in r.z_terms() {
                for (e, x) in c.terms().rev() {
                    let (neg, body) = monomial_body(x, &[("u", *ku as i64), ("z", kz as i64), ("q", e)]);
                    super::write_signed(f, &mut first, neg, &body)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_grading() {
        let p = UPoly::u() * UPoly::from(RPoly::monomial(1, 2, 0) - RPoly::one());
        assert_eq!(p.to_string(), "u*q^2 - u");
        assert!(p.to_rpoly().is_none());
        assert_eq!(UPoly::from(RPoly::z()).to_rpoly(), Some(RPoly::z()));
        assert_eq!(p.u_coeff(1), RPoly::monomial(1, 2, 0) - RPoly::one());
    }
}
