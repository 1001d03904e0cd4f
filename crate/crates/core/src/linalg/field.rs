//! Exact scalars over the rationals or a prime field.
//!
//! A [`Scalar`] always knows which field it lives in. Mixing fields in one
//! arithmetic operation is a programming error and panics; the public matrix
//! and subspace entry points check field tags first and return
//! [`Error::FieldMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    /// Moduli are limited to 32 bits so that products fit in a `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(Prime),
}

impl Field {
    pub fn gf(p: u64) -> Result<Self> {
        Prime::new(p).map(Field::Prime)
    }

    pub fn check_same(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self, other))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p.get(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF {}", p.get()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: Prime },
}

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues lie in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, v: i64) -> Self {
        match field {
            Field::Rationals => Scalar(Repr::Rational(BigRational::from_integer(v.into()))),
            Field::Prime(p) => {
                let m = p.get() as i128;
                let r = (v as i128).rem_euclid(m) as u64;
                Scalar(Repr::Residue {
                    value: r,
                    modulus: p,
                })
            }
        }
    }

    pub fn from_bigint(field: Field, v: &BigInt) -> Self {
        match field {
            Field::Rationals => Scalar(Repr::Rational(BigRational::from_integer(v.clone()))),
            Field::Prime(p) => {
                let m = BigInt::from(p.get());
                let r = ((v % &m) + &m) % &m;
                let value = r.to_string().parse::<u64>().expect("residue fits in u64");
                Scalar(Repr::Residue { value, modulus: p })
            }
        }
    }

    /// `num / den` in the given field. Fails when `den` vanishes there.
    pub fn from_fraction(field: Field, num: &BigInt, den: &BigInt) -> Result<Self> {
        let d = Self::from_bigint(field, den);
        let inv = d.inv().ok_or(Error::DivisionByZero)?;
        Ok(&Self::from_bigint(field, num) * &inv)
    }

    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Rational(_) => Field::Rationals,
            Repr::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: pow_mod(*value, modulus.get() - 2, modulus.get()),
                modulus: *modulus,
            }),
        })
    }

    /// True for rationals with a negative value. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_negative(),
            Repr::Residue { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Residue { value, .. } => Some(*value),
            Repr::Rational(_) => None,
        }
    }

    /// `self - a * b`, the workhorse of elimination.
    pub fn sub_mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.0, &a.0, &b.0) {
            (
                Repr::Residue { value: s, modulus },
                Repr::Residue { value: x, .. },
                Repr::Residue { value: y, .. },
            ) => {
                let p = modulus.get();
                let prod = (x * y) % p;
                Scalar(Repr::Residue {
                    value: (s + p - prod) % p,
                    modulus: *modulus,
                })
            }
            _ => self - &(a * b),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                Scalar(Repr::Residue {
                    value: (a + b) % modulus.get(),
                    modulus: *modulus,
                })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a - b)),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                let p = modulus.get();
                Scalar(Repr::Residue {
                    value: (a + p - b) % p,
                    modulus: *modulus,
                })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                Scalar(Repr::Residue {
                    value: a * b % modulus.get(),
                    modulus: *modulus,
                })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(a) => Scalar(Repr::Rational(-a)),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: (modulus.get() - value) % modulus.get(),
                modulus: *modulus,
            }),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(7).is_ok());
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert_eq!(Prime::new(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let q = Field::Rationals;
        let a = Scalar::from_fraction(q, &BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(a.to_string(), "-2/3");
        let b = &a * &Scalar::from_i64(q, -3);
        assert!(b.to_string() == "2");
    }

    #[test]
    fn residues_reduce() {
        let f = Field::gf(5).unwrap();
        assert_eq!(Scalar::from_i64(f, -1).as_residue(), Some(4));
        let half = Scalar::from_fraction(f, &BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half.as_residue(), Some(3));
        assert!((&half * &Scalar::from_i64(f, 2)).is_one());
        assert_eq!(
            Scalar::from_fraction(f, &BigInt::from(1), &BigInt::from(10)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn inverse_of_every_nonzero_residue() {
        let f = Field::gf(7).unwrap();
        for v in 1..7 {
            let x = Scalar::from_i64(f, v);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(Scalar::zero(f).inv().is_none());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = &Scalar::one(Field::Rationals) + &Scalar::one(Field::gf(3).unwrap());
    }
}
