//! Exact scalars over ℚ or a prime field GF(p).
//!
//! Rationals keep an `i64` fast path and fall back to arbitrary precision
//! on overflow. Every value is canonical (reduced, positive denominator,
//! and small whenever it fits), so derived equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Validates a prime field characteristic.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) && p <= u32::MAX as u64 {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::InvalidField(format!("{p} is not a supported prime")))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    /// Parses a scalar in this field's canonical text form.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar(s.to_string());
        match self {
            FieldSpec::Rationals => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (s, None),
                };
                let n = BigInt::from_str(n).map_err(|_| bad())?;
                let d = match d {
                    Some(d) => {
                        if d.starts_with('+') || d.starts_with('-') {
                            return Err(bad());
                        }
                        BigInt::from_str(d).map_err(|_| bad())?
                    }
                    None => BigInt::one(),
                };
                if !d.is_positive() || !n.gcd(&d).is_one() {
                    return Err(bad());
                }
                let r = Rational::from_big(BigRational::new_raw(n, d));
                // reject non-canonical spellings such as "+3" or "007"
                if r.to_string() != s {
                    return Err(bad());
                }
                Ok(Scalar::Q(r))
            }
            FieldSpec::Prime(p) => {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let v: u64 = s.parse().map_err(|_| bad())?;
                if v >= p || v.to_string() != s {
                    return Err(bad());
                }
                Ok(Scalar::P(Fp { r: v, p }))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF {p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact rational number in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    /// numerator, denominator > 0, gcd = 1
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    pub fn from_i64(n: i64) -> Self {
        Rational::Small(n, 1)
    }

    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(BigRational::new_raw(n.into(), d.into()))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational::new reduces; new_raw callers have already reduced
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw((*n).into(), (*d).into()),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    fn add(&self, o: &Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, o) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            return Rational::from_i128(a * d + c * b, b * d);
        }
        Rational::from_big(self.to_big() + o.to_big())
    }

    fn mul(&self, o: &Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, o) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            return Rational::from_i128(a * c, b * d);
        }
        Rational::from_big(self.to_big() * o.to_big())
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational::Small(m, *d),
                None => Rational::from_big(-self.to_big()),
            },
            Rational::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }

    fn inv(&self) -> Option<Rational> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rational::Small(n, d) => Rational::from_i128(*d as i128, *n as i128),
            Rational::Big(b) => Rational::from_big(b.recip()),
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Rational::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

/// Residue in GF(p), `0 <= r < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    r: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        let r = v.rem_euclid(p as i64) as u64;
        Fp { r, p }
    }

    pub fn residue(self) -> u64 {
        self.r
    }

    /// Inverse via extended Euclid.
    fn inv(self) -> Option<Fp> {
        if self.r == 0 {
            return None;
        }
        let (mut a, mut b) = (self.r as i128, self.p as i128);
        let (mut x0, mut x1) = (1i128, 0i128);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        debug_assert_eq!(a, 1);
        Some(Fp { r: x0.rem_euclid(self.p as i128) as u64, p: self.p })
    }
}

/// A field element tagged with its field kind.
///
/// Arithmetic between scalars of different fields is a logic error and
/// panics; the matrix layer rejects field mismatches before any arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    P(Fp),
}

impl Scalar {
    pub fn from_i64(field: FieldSpec, v: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Q(Rational::from_i64(v)),
            FieldSpec::Prime(p) => Scalar::P(Fp::new(v, p)),
        }
    }

    /// `n/d` reduced into `field`; `None` when `d` vanishes there.
    pub fn from_ratio(field: FieldSpec, n: i64, d: i64) -> Option<Self> {
        let den = Scalar::from_i64(field, d).inv()?;
        Some(&Scalar::from_i64(field, n) * &den)
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::P(x) => FieldSpec::Prime(x.p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::P(x) => x.r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => matches!(r, Rational::Small(1, 1)),
            Scalar::P(x) => x.r == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => r.inv().map(Scalar::Q),
            Scalar::P(x) => x.inv().map(Scalar::P),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::from_i64(self.field(), 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self += a * b`, the inner-loop primitive of every contraction.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::P(s), Scalar::P(x), Scalar::P(y)) => {
                debug_assert!(s.p == x.p && x.p == y.p);
                let p = s.p as u128;
                s.r = ((s.r as u128 + x.r as u128 * y.r as u128) % p) as u64;
            }
            _ => *self = &*self + &(a * b),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::P(x) => write!(f, "{}", x.r),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Some(a.to_big().cmp(&b.to_big())),
            (Scalar::P(a), Scalar::P(b)) if a.p == b.p => Some(a.r.cmp(&b.r)),
            _ => None,
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch in scalar arithmetic: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::P(a), Scalar::P(b)) if a.p == b.p => {
                let s = a.r + b.r;
                Scalar::P(Fp { r: if s >= a.p { s - a.p } else { s }, p: a.p })
            }
            _ => mismatch(self, o),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::P(a), Scalar::P(b)) if a.p == b.p => Scalar::P(Fp {
                r: ((a.r as u128 * b.r as u128) % a.p as u128) as u64,
                p: a.p,
            }),
            _ => mismatch(self, o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::P(a) => Scalar::P(Fp { r: if a.r == 0 { 0 } else { a.p - a.r }, p: a.p }),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(FieldSpec::Rationals, n, d).unwrap()
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert_eq!(q(0, 5).to_string(), "0");
        assert_eq!((&q(1, 3) + &q(2, 3)).to_string(), "1");
    }

    #[test]
    fn rational_overflow_promotes_and_demotes() {
        let big = Scalar::from_i64(FieldSpec::Rationals, i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Q(Rational::Big(_))));
        let back = &sq * &big.inv().unwrap();
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Q(Rational::Small(..))));
        let min = Scalar::from_i64(FieldSpec::Rationals, i64::MIN);
        assert_eq!((-&min).to_string(), "9223372036854775808");
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::prime(7).unwrap();
        for v in 1..7 {
            let x = Scalar::from_i64(f, v);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
        assert_eq!(Scalar::from_i64(f, 2).pow(3), f.one());
    }

    #[test]
    fn parse_rejects_non_canonical() {
        let f = FieldSpec::Rationals;
        assert_eq!(f.parse_scalar("-3/4").unwrap(), q(-3, 4));
        for bad in ["2/4", "1/-2", "+3", "007", "1/0", "x", "", "3/1"] {
            assert!(f.parse_scalar(bad).is_err(), "{bad}");
        }
        let g = FieldSpec::prime(7).unwrap();
        assert_eq!(g.parse_scalar("6").unwrap(), Scalar::from_i64(g, -1));
        for bad in ["7", "-1", "06", ""] {
            assert!(g.parse_scalar(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn non_prime_characteristic_rejected() {
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = &q(1, 2) * &Scalar::from_i64(FieldSpec::Prime(5), 1);
    }
}
