//! Field and integral-domain scalars used by the elimination kernels.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arithmetic needed by Gaussian elimination. Values carry their own context
/// (the modulus for [`Fp`]), so no global zero or one is required.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; only called on nonzero values.
    fn inv(&self) -> Self;
}

/// Arithmetic needed by fraction-free (Bareiss) elimination.
pub trait IntegralDomain: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / divisor`, failing unless the quotient lies in the domain.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;
}

/// Element of the prime field `Z/pZ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        Fp { value: v, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Reduces a rational `a/b`; `None` when `p` divides the denominator.
    pub fn from_rational(q: &BigRational, modulus: u64) -> Option<Self> {
        let p = BigInt::from(modulus);
        let num = (q.numer() % &p + &p) % &p;
        let den = (q.denom() % &p + &p) % &p;
        if Zero::is_zero(&den) {
            return None;
        }
        let to_u64 = |b: &BigInt| u64::try_from(b).expect("reduced below modulus");
        let d = Fp { value: to_u64(&den), modulus };
        Some(Fp { value: to_u64(&num), modulus }.mul(&d.inv()))
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp { value: 1 % self.modulus, modulus: self.modulus };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Field for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp { value: ((self.value as u128 + other.value as u128) % self.modulus as u128) as u64, modulus: self.modulus }
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let m = self.modulus as u128;
        Fp { value: ((self.value as u128 + m - other.value as u128) % m) as u64, modulus: self.modulus }
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp { value: ((self.value as u128 * other.value as u128) % self.modulus as u128) as u64, modulus: self.modulus }
    }

    fn neg(&self) -> Self {
        Fp { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }

    fn inv(&self) -> Self {
        debug_assert!(self.value != 0);
        self.pow(self.modulus - 2)
    }
}

impl Field for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl IntegralDomain for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if Zero::is_zero(divisor) || !Zero::is_zero(&(self % divisor)) {
            return Err(Error::InexactDivision);
        }
        Ok(self / divisor)
    }
}

/// Coefficient field selector used across the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    /// The rationals.
    Rational,
    /// `Z/pZ` for a prime `p`.
    Prime(u64),
}

impl FieldKind {
    pub const F2: FieldKind = FieldKind::Prime(2);
    /// Large prime used for rank spot checks.
    pub const SPOT_CHECK: FieldKind = FieldKind::Prime(1_000_003);

    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldKind::Prime(p))
        } else {
            Err(Error::InvalidModulus(p))
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "q"),
            FieldKind::Prime(2) => write!(f, "f2"),
            FieldKind::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl std::str::FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(FieldKind::Rational),
            "f2" | "F2" => Ok(FieldKind::F2),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Input(format!("unknown field '{s}' (expected f2, fp:<p> or q)")))?;
                FieldKind::prime(p)
            }
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

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Short decimal rendering of a rational, `p/q` when not integral.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let p = 7;
        let a = Fp::new(3, p);
        let b = Fp::new(-2, p);
        assert_eq!(b.value(), 5);
        assert_eq!(a.add(&b).value(), 1);
        assert_eq!(a.mul(&a.inv()).value(), 1);
        assert_eq!(a.sub(&b).value(), 5);
    }

    #[test]
    fn fp_from_rational() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(Fp::from_rational(&q, 7).unwrap().value(), 4);
        assert!(Fp::from_rational(&q, 2).is_none());
        let neg = BigRational::new(BigInt::from(-3), BigInt::from(1));
        assert_eq!(Fp::from_rational(&neg, 5).unwrap().value(), 2);
    }

    #[test]
    fn field_kind_parsing() {
        assert_eq!("f2".parse::<FieldKind>().unwrap(), FieldKind::F2);
        assert_eq!("q".parse::<FieldKind>().unwrap(), FieldKind::Rational);
        assert_eq!("fp:1000003".parse::<FieldKind>().unwrap(), FieldKind::Prime(1_000_003));
        assert!("fp:9".parse::<FieldKind>().is_err());
        assert!("r".parse::<FieldKind>().is_err());
    }

    #[test]
    fn bigint_exact_division() {
        let a = BigInt::from(12);
        assert_eq!(a.exact_div(&BigInt::from(4)).unwrap(), BigInt::from(3));
        assert!(a.exact_div(&BigInt::from(5)).is_err());
    }
}
