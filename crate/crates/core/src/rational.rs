//! Exact rational points in `N_Q` and `M_Q`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::LatticePoint;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn int128(n: i128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Reduced `p/q` (or `p` when integral).
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(int(x), int(y))
    }

    /// `(x, y) / d`.
    pub fn over(x: i64, y: i64, d: i64) -> Self {
        Self::new(rat(x, d), rat(y, d))
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, o: &RationalPoint) -> RationalPoint {
        RationalPoint::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &RationalPoint) -> RationalPoint {
        RationalPoint::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, k: &Rational) -> RationalPoint {
        RationalPoint::new(&self.x * k, &self.y * k)
    }

    /// Euclidean pairing, used for the duality `M_Q x N_Q -> Q`.
    pub fn pair(&self, o: &RationalPoint) -> Rational {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn to_lattice(&self) -> Option<LatticePoint> {
        if !self.x.is_integer() || !self.y.is_integer() {
            return None;
        }
        let x = i64::try_from(self.x.numer()).ok()?;
        let y = i64::try_from(self.y.numer()).ok()?;
        Some(LatticePoint::new(x, y))
    }

    /// Common denominator of both coordinates.
    pub fn denominator(&self) -> BigInt {
        num_integer::lcm(self.x.denom().clone(), self.y.denom().clone())
    }
}

impl From<LatticePoint> for RationalPoint {
    fn from(p: LatticePoint) -> Self {
        RationalPoint::from_ints(p.x, p.y)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", format_rational(&self.x), format_rational(&self.y))
    }
}

/// `det(a, b)` over the rationals.
pub fn rdet(a: &RationalPoint, b: &RationalPoint) -> Rational {
    &a.x * &b.y - &a.y * &b.x
}

/// `det(b - a, c - a)`, twice the signed area of the triangle.
pub fn rcross(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Rational {
    rdet(&b.sub(a), &c.sub(a))
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Serde adapter writing rationals as reduced `"p/q"` strings.
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let p = |s: &str| parse_rational(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")));
        Ok(RationalPoint::new(p(&x)?, p(&y)?))
    }
}
