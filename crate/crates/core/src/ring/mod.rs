//! Exact coefficient rings: ℤ[q±1], R = ℤ[q±1, z], the extension ℤ[q±1, z, u], and ℚ[q]
//! for Euclidean normal forms.

mod laurent;
mod parse;
mod qpoly;
mod rpoly;
mod upoly;

use std::fmt;

pub use laurent::{LaurentPoly, Unit};
pub use parse::parse_upoly;
pub use qpoly::QPoly;
pub use rpoly::{RPoly, Specialized};
pub use upoly::UPoly;

pub(crate) use laurent::monomial_body;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("q is a unit and cannot be specialized to 0")]
    ZeroSubstitution,
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("expression contains the variable u where a polynomial in q and z was expected")]
    UnexpectedU,
}

/// Writes ` + body` / ` - body` (or a leading `-body`) for sum rendering.
pub(crate) fn write_signed(f: &mut fmt::Formatter<'_>, first: &mut bool, negative: bool, body: &str) -> fmt::Result {
    match (*first, negative) {
        (true, false) => f.write_str(body)?,
        (true, true) => write!(f, "-{body}")?,
        (false, false) => write!(f, " + {body}")?,
        (false, true) => write!(f, " - {body}")?,
    }
    *first = false;
    Ok(())
}

/// Derives the owned/borrowed operator variants from `&T * &T`, `T += &T` and `T -= &T`.
macro_rules! forward_binops {
    ($t:ty) => {
        impl std::ops::Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                out += rhs;
                out
            }
        }
        impl std::ops::Add<$t> for $t {
            type Output = $t;
            fn add(mut self, rhs: $t) -> $t {
                self += &rhs;
                self
            }
        }
        impl std::ops::Add<&$t> for $t {
            type Output = $t;
            fn add(mut self, rhs: &$t) -> $t {
                self += rhs;
                self
            }
        }
        impl std::ops::Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                out -= rhs;
                out
            }
        }
        impl std::ops::Sub<$t> for $t {
            type Output = $t;
            fn sub(mut self, rhs: $t) -> $t {
                self -= &rhs;
                self
            }
        }
        impl std::ops::Sub<&$t> for $t {
            type Output = $t;
            fn sub(mut self, rhs: &$t) -> $t {
                self -= rhs;
                self
            }
        }
        impl std::ops::Mul<$t> for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::ops::Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                &self * rhs
            }
        }
        impl std::ops::AddAssign<$t> for $t {
            fn add_assign(&mut self, rhs: $t) {
                *self += &rhs;
            }
        }
        impl std::ops::SubAssign<$t> for $t {
            fn sub_assign(&mut self, rhs: $t) {
                *self -= &rhs;
            }
        }
        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(iter: I) -> $t {
                iter.fold(<$t>::zero(), |acc, x| acc + x)
            }
        }
    };
}
pub(crate) use forward_binops;
