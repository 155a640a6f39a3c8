use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_traits::Zero;

use crate::ring::{LaurentPoly, RPoly, UPoly};

/// Coefficient rings usable in a [`LinComb`].
pub trait Coeff: Clone + PartialEq + Zero + Neg<Output = Self> + for<'a> AddAssign<&'a Self> + fmt::Display {
    fn times(&self, other: &Self) -> Self;
}

macro_rules! coeff_impl {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            fn times(&self, other: &Self) -> Self {
                self * other
            }
        }
    )*};
}
coeff_impl!(LaurentPoly, RPoly, UPoly);

/// A finite formal combination Σ c_k·k with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn term(key: K, c: C) -> Self {
        let mut v = Self::zero();
        v.add_term(key, c);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, key: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &C)> + '_ {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, x)| (k.clone(), c.times(x))))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LinComb<K, D> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    /// Relabels keys, merging coefficients of keys that collide.
    pub fn map_keys<K2: Ord + Clone>(&self, f: impl Fn(&K) -> K2) -> LinComb<K2, C> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Linear extension of a key substitution.
    pub fn substitute<K2: Ord + Clone>(&self, f: impl Fn(&K) -> LinComb<K2, C>) -> LinComb<K2, C> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out += &f(k).scale(c);
        }
        out
    }

    /// `c1*k1 + c2*k2 - …` with parenthesized multi-term coefficients.
    pub fn render(&self, key: impl Fn(&K) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let ks = key(k);
            let cs = c.to_string();
            let single = !cs[1..].contains(" + ") && !cs[1..].contains(" - ");
            let (neg, body) = match cs.as_str() {
                "1" => (false, ks),
                "-1" => (true, ks),
                _ if single && cs.starts_with('-') => (true, format!("{}*{ks}", &cs[1..])),
                _ if single => (false, format!("{cs}*{ks}")),
                _ => (false, format!("({cs})*{ks}")),
            };
            match (i == 0, neg) {
                (true, false) => out.push_str(&body),
                (true, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Default for LinComb<K, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, C: Coeff> AddAssign<&LinComb<K, C>> for LinComb<K, C> {
    fn add_assign(&mut self, rhs: &LinComb<K, C>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone, C: Coeff> AddAssign for LinComb<K, C> {
    fn add_assign(&mut self, rhs: LinComb<K, C>) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord + Clone, C: Coeff> Add for LinComb<K, C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone, C: Coeff> Add for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn add(self, rhs: Self) -> LinComb<K, C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Neg for LinComb<K, C> {
    type Output = Self;
    fn neg(self) -> Self {
        LinComb {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: Ord + Clone, C: Coeff> Neg for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn neg(self) -> LinComb<K, C> {
        -self.clone()
    }
}

impl<K: Ord + Clone, C: Coeff> Sub for LinComb<K, C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Ord + Clone, C: Coeff> Sub for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn sub(self, rhs: Self) -> LinComb<K, C> {
        self + &(-rhs)
    }
}

impl<K: Ord + Clone + fmt::Debug, C: Coeff> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| format!("{k:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_and_rendering() {
        let q = RPoly::q;
        let mut v: LinComb<&str, RPoly> = LinComb::term("A", q());
        v.add_term("B", -(RPoly::monomial(1, 2, 0) - RPoly::one()));
        v.add_term("C", RPoly::monomial(-1, 1, 1));
        assert_eq!(v.render(|k| k.to_string()), "q*A + (-q^2 + 1)*B - z*q*C");
        v.add_term("A", -q());
        assert_eq!(v.len(), 2);
        assert!((&v - &v).is_zero());
    }

    #[test]
    fn substitution_is_linear() {
        let v: LinComb<u8, LaurentPoly> = LinComb::from_terms([(1, LaurentPoly::q()), (2, LaurentPoly::one())]);
        let w = v.substitute(|k| LinComb::from_terms([(0u8, LaurentPoly::from(*k as i64))]));
        assert_eq!(w.coeff(&0), LaurentPoly::q() + LaurentPoly::from(2));
    }
}
