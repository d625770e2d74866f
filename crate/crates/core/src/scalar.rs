//! Scalar abstractions.
//!
//! Geometry is written against [`ExactField`], an exact ordered field whose
//! elements convert losslessly to and from [`BigRational`]. Floating point
//! types deliberately do not implement it: hull construction and lattice
//! counting depend on exact sign tests.
//!
//! The hull kernel works on integer vectors through [`ExactInteger`], which
//! lets it run in `i128` and fall back to [`BigInt`] on overflow.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Signed, ToPrimitive};

/// An exact ordered field embedded in the rationals.
pub trait ExactField: Clone + Debug + Display + Ord + Signed + FromPrimitive + Send + Sync + 'static {
    fn to_rational(&self) -> BigRational;
    fn from_rational(q: &BigRational) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every exact field contains the integers")
    }

    fn is_integral(&self) -> bool {
        self.to_rational().is_integer()
    }
}

impl ExactField for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

macro_rules! impl_exact_field_prim {
    ($t:ty) => {
        impl ExactField for Ratio<$t> {
            fn to_rational(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }

            fn from_rational(q: &BigRational) -> Option<Self> {
                Some(Ratio::new(q.numer().to_owned().try_into().ok()?, q.denom().to_owned().try_into().ok()?))
            }

            fn is_integral(&self) -> bool {
                self.is_integer()
            }
        }
    };
}

impl_exact_field_prim!(i64);
impl_exact_field_prim!(i128);

/// Integer arithmetic with overflow detection, used by the hull kernel.
pub trait ExactInteger: Clone + Debug + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul {
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl ExactInteger for BigInt {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

macro_rules! impl_exact_integer_prim {
    ($t:ty, $to:ident) => {
        impl ExactInteger for $t {
            fn from_bigint(v: &BigInt) -> Option<Self> {
                v.$to()
            }

            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
        }
    };
}

impl_exact_integer_prim!(i64, to_i64);
impl_exact_integer_prim!(i128, to_i128);

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a, F: ExactField>(values: impl IntoIterator<Item = &'a F>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.to_rational().denom()))
}

/// Floor of a rational as a `BigInt`.
pub fn floor_big(q: &BigRational) -> BigInt {
    q.floor().to_integer()
}

/// Convert an integral rational to `i64`, if it fits.
pub fn rational_to_i64(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Serialize a rational as the string `p/q` (or `p` when integral).
pub fn serialize_rational<S: serde::Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

pub fn serialize_opt_rational<S: serde::Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

pub fn serialize_integer<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
