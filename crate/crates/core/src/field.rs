//! Exact scalars: rationals and residues modulo a prime.
//!
//! A [`Scalar`] always knows which field it lives in. Mixing fields in
//! arithmetic is a programming error and panics; fallible entry points
//! (parsing, algebra construction) check field agreement up front and return
//! [`Error::FieldMismatch`] instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

/// Ground field descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Field {
    Q,
    Fp { p: u64 },
}

impl Field {
    pub fn fp(p: u64) -> Result<Field> {
        if !(2..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Fp { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp { p } => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Fp { .. })
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp { p } => Scalar::Fp { r: n.rem_euclid(p as i64) as u64, p },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            Field::Q => Scalar::Q(BigRational::from_integer(n.clone())),
            Field::Fp { p } => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Fp { r: r.to_u64().expect("residue fits"), p }
            }
        }
    }

    /// `num/den` in this field; `None` when `den` vanishes here.
    pub fn ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den);
        d.inv().map(|di| self.from_i64(num) * di)
    }

    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let err = || Error::ParseScalar { text: text.to_string(), field: *self };
        let t = text.trim();
        match *self {
            Field::Q => {
                let (num, den) = match t.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (t, "1"),
                };
                let num = BigInt::from_str(num).map_err(|_| err())?;
                let den = BigInt::from_str(den).map_err(|_| err())?;
                if den.is_zero() {
                    return Err(err());
                }
                Ok(Scalar::Q(BigRational::new(num, den)))
            }
            Field::Fp { .. } => {
                let n = BigInt::from_str(t).map_err(|_| err())?;
                Ok(self.from_bigint(&n))
            }
        }
    }

    /// Number of elements, `None` for Q.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Q => None,
            Field::Fp { p } => Some(*p),
        }
    }

    /// The `idx`-th element of F_p in the order 0, 1, ..., p-1.
    pub fn element(&self, idx: u64) -> Scalar {
        match *self {
            Field::Q => self.from_i64(idx as i64),
            Field::Fp { p } => Scalar::Fp { r: idx % p, p },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp { p } => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `F5`, `Fp5`, `Fp:5`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Q);
        }
        let rest = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("Fp"))
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let p: u64 = rest.parse().map_err(|_| Error::InvalidField(s.to_string()))?;
        Field::fp(p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p < 2^31 so products fit in u64.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// An exact field element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { r: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { r, .. } => *r == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { r, p } => Scalar::Fp { r: inv_mod(*r, *p), p: *p },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign of a rational; `None` over F_p.
    pub fn signum(&self) -> Option<Ordering> {
        match self {
            Scalar::Q(q) => Some(q.cmp(&BigRational::zero())),
            Scalar::Fp { .. } => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }

    /// Height used to order search points: |numerator| + |denominator| over Q,
    /// the residue over F_p.
    pub fn height(&self) -> BigInt {
        match self {
            Scalar::Q(q) => q.numer().abs() + q.denom(),
            Scalar::Fp { r, .. } => BigInt::from(*r),
        }
    }

    fn check(&self, other: &Scalar) {
        let (a, b) = (self.field(), other.field());
        if a != b {
            panic!("{}", Error::FieldMismatch(a, b));
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { r, .. } => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(_) => write!(f, "{self}"),
            Scalar::Fp { r, p } => write!(f, "{r} mod {p}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { r: a, p }, Scalar::Fp { r: b, .. }) => Scalar::Fp { r: (a + b) % p, p: *p },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { r: a, p }, Scalar::Fp { r: b, .. }) => Scalar::Fp { r: (a + p - b) % p, p: *p },
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { r: a, p }, Scalar::Fp { r: b, .. }) => Scalar::Fp { r: a * b % p, p: *p },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { r, p } => Scalar::Fp { r: (p - r) % p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parse a comma-separated vector of scalars, e.g. `"1,0,-1/2"`.
pub fn parse_vector(field: Field, text: &str) -> Result<Vec<Scalar>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| field.parse(t)).collect()
}

pub fn format_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}
