use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ambient ring a [`Scalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    /// The prime field 𝔽_p.
    PrimeField(u64),
    /// The rationals.
    Rational,
    /// The ring ℤ/p² (stores p, not p²). Supports arithmetic only.
    PrimeSquare(u64),
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Domain {
    pub fn prime_field(p: u64) -> Result<Self> {
        // keep p² inside u64 so products fit in u128
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::NotPrime(p));
        }
        Ok(Domain::PrimeField(p))
    }

    pub fn prime_square(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::NotPrime(p));
        }
        Ok(Domain::PrimeSquare(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::PrimeSquare(_))
    }

    /// Modulus of the residue representation, `None` for ℚ.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            Domain::PrimeField(p) => Some(p),
            Domain::PrimeSquare(p) => Some(p * p),
            Domain::Rational => None,
        }
    }

    /// Characteristic of the ring (0 for ℚ).
    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Domain::PrimeField(p) => Scalar::Fp {
                value: v.rem_euclid(p as i64) as u64,
                p,
            },
            Domain::PrimeSquare(p) => Scalar::Zp2 {
                value: v.rem_euclid((p * p) as i64) as u64,
                p,
            },
            Domain::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
        }
    }

    /// Parses `"3"`, `"-1"` or (over ℚ) `"1/2"`.
    pub fn parse(&self, literal: &str) -> Result<Scalar> {
        let bad = || Error::BadScalar(literal.to_string());
        let s = literal.trim();
        match *self {
            Domain::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Q(BigRational::new(num, den)))
            }
            _ => {
                let m = self.modulus().expect("residue domain") as i128;
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), Some(d.trim())),
                    None => (s, None),
                };
                let num: i128 = num.parse().map_err(|_| bad())?;
                let value = self.from_i64(num.rem_euclid(m) as i64);
                match den {
                    None => Ok(value),
                    Some(d) => {
                        let d: i128 = d.parse().map_err(|_| bad())?;
                        value.checked_div(&self.from_i64(d.rem_euclid(m) as i64))
                    }
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Domain::PrimeField(p) => format!("F{p}"),
            Domain::Rational => "Q".to_string(),
            Domain::PrimeSquare(p) => format!("Z/{}", p * p),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// An exact scalar in canonical form: residues in `[0, m)`, reduced fractions
/// with positive denominator. Equality is representational equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { value: u64, p: u64 },
    Q(BigRational),
    Zp2 { value: u64, p: u64 },
}

/// Binary operation selector for [`Scalar::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Fp { p, .. } => Domain::PrimeField(*p),
            Scalar::Q(_) => Domain::Rational,
            Scalar::Zp2 { p, .. } => Domain::PrimeSquare(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { value, .. } | Scalar::Zp2 { value, .. } => *value == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { value, .. } | Scalar::Zp2 { value, .. } => *value == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    /// Residue in `[0, m)` for the modular domains.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp { value, .. } | Scalar::Zp2 { value, .. } => Some(*value),
            Scalar::Q(_) => None,
        }
    }

    fn check_domain(&self, other: &Scalar) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch(
                self.domain().label(),
                other.domain().label(),
            ))
        }
    }

    fn modular(&self, value: u128) -> Scalar {
        match self {
            Scalar::Fp { p, .. } => Scalar::Fp {
                value: (value % *p as u128) as u64,
                p: *p,
            },
            Scalar::Zp2 { p, .. } => Scalar::Zp2 {
                value: (value % (*p as u128 * *p as u128)) as u64,
                p: *p,
            },
            Scalar::Q(_) => unreachable!("modular arithmetic on a rational"),
        }
    }

    fn modulus(&self) -> u128 {
        self.domain().modulus().expect("residue domain") as u128
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            _ => self.modular(self.residue().unwrap() as u128 + other.residue().unwrap() as u128),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            _ => {
                let m = self.modulus();
                self.modular(self.residue().unwrap() as u128 + m - other.residue().unwrap() as u128)
            }
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            _ => self.modular(self.residue().unwrap() as u128 * other.residue().unwrap() as u128),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_domain(other)?;
        let inv = other.inverse()?;
        self.try_mul(&inv)
    }

    /// Multiplicative inverse; fails on zero and on non-units of ℤ/p².
    pub fn inverse(&self) -> Result<Scalar> {
        let fail = || Error::DivisionByNonUnit(self.to_string());
        match self {
            Scalar::Q(q) => {
                if q.is_zero() {
                    Err(fail())
                } else {
                    Ok(Scalar::Q(q.recip()))
                }
            }
            _ => {
                let m = self.modulus() as u64;
                inverse_mod(self.residue().unwrap(), m)
                    .map(|v| self.modular(v as u128))
                    .ok_or_else(fail)
            }
        }
    }

    pub fn is_unit(&self) -> bool {
        self.inverse().is_ok()
    }

    pub fn apply(&self, op: ScalarOp, other: &Scalar) -> Result<Scalar> {
        match op {
            ScalarOp::Add => self.try_add(other),
            ScalarOp::Sub => self.try_sub(other),
            ScalarOp::Mul => self.try_mul(other),
            ScalarOp::Div => self.checked_div(other),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.domain().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact rational value when the domain is ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            _ => None,
        }
    }

    /// Signed small-integer view, mostly for tests and reports.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Q(_) => None,
            _ => self.residue().map(|v| v as i64),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { value, .. } | Scalar::Zp2 { value, .. } => write!(f, "{value}"),
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else if q.is_negative() {
                    write!(f, "-{}/{}", q.numer().abs(), q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

// The operator impls panic on mixed domains. Every container in this crate
// fixes one domain at construction, so a mismatch here is a bug.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar domain mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar domain mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar domain mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            _ => {
                let m = self.modulus();
                self.modular(m - self.residue().unwrap() as u128)
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_product() {
        let f5 = Domain::prime_field(5).unwrap();
        let r = f5.from_i64(3).apply(ScalarOp::Mul, &f5.from_i64(4)).unwrap();
        assert_eq!(r, f5.from_i64(2));
    }

    #[test]
    fn rational_sum() {
        let q = Domain::Rational;
        let a = q.parse("1/2").unwrap();
        let b = q.parse("1/3").unwrap();
        assert_eq!(a.apply(ScalarOp::Add, &b).unwrap(), q.parse("5/6").unwrap());
        assert_eq!(q.parse("2/-4").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn prime_square_rejects_zero_divisor() {
        let z9 = Domain::prime_square(3).unwrap();
        let err = z9.from_i64(1).apply(ScalarOp::Div, &z9.from_i64(3)).unwrap_err();
        assert!(matches!(err, Error::DivisionByNonUnit(_)));
        assert_eq!(z9.from_i64(2).inverse().unwrap(), z9.from_i64(5));
    }

    #[test]
    fn field_zero_division_fails() {
        let f7 = Domain::prime_field(7).unwrap();
        assert!(f7.one().checked_div(&f7.zero()).is_err());
        assert!(Domain::Rational.one().checked_div(&Domain::Rational.zero()).is_err());
    }

    #[test]
    fn mismatched_domains() {
        let a = Domain::prime_field(5).unwrap().one();
        let b = Domain::prime_field(7).unwrap().one();
        assert!(matches!(a.try_add(&b), Err(Error::DomainMismatch(..))));
    }

    #[test]
    fn canonical_negation() {
        let f5 = Domain::prime_field(5).unwrap();
        assert_eq!(f5.parse("-1").unwrap(), f5.from_i64(4));
        assert_eq!(-f5.from_i64(0), f5.zero());
        assert_eq!(f5.parse("1/2").unwrap(), f5.from_i64(3));
    }

    #[test]
    fn non_prime_moduli_rejected() {
        assert_eq!(Domain::prime_field(9), Err(Error::NotPrime(9)));
        assert_eq!(Domain::prime_square(1), Err(Error::NotPrime(1)));
    }
}
