//! Exact coefficient fields.
//!
//! Elements of `GF(p)` need their modulus to do arithmetic, so a field is a
//! context object handing out and combining plain element values. The
//! rationals wrap `num_rational::BigRational` and lean on `num-traits` for
//! everything.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 32003;

pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// `acc -= f * b`
    fn sub_mul_assign(&self, acc: &mut Self::Elem, f: &Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(f, b));
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }
}

/// `GF(p)` for a prime `p < 2^32`; products of two residues fit in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        self.pow(*a, self.p - 2)
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn parse_elem(&self, s: &str) -> Result<u64> {
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let num = self.parse_elem(num)?;
            let den = self.parse_elem(den)?;
            if den == 0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(self.mul(&num, &self.inv(&den)));
        }
        let v: BigInt = t
            .parse()
            .map_err(|_| Error::Parse(format!("bad field element {s:?}")))?;
        let r = ((v % self.p) + self.p) % self.p;
        Ok(r.try_into().expect("residue fits in u64"))
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn sub_mul_assign(&self, acc: &mut u64, f: &u64, b: &u64) {
        let t = f * b % self.p;
        *acc = self.sub(acc, &t);
    }

    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b % self.p) % self.p;
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero rational");
        a.recip()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let t = s.trim();
        let bad = || Error::Parse(format!("bad rational {s:?}"));
        match t.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(num, den))
            }
            None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
        }
    }

    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Which field a computation runs over. Serialized as the decimal prime or
/// `"Q"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl FieldSpec {
    pub fn prime_field(self) -> Result<PrimeField> {
        match self {
            FieldSpec::Prime(p) => PrimeField::new(p),
            FieldSpec::Rationals => Err(Error::SamplingOverRationals),
        }
    }

    pub fn validate(self) -> Result<Self> {
        if let FieldSpec::Prime(p) = self {
            PrimeField::new(p)?;
        }
        Ok(self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "{p}"),
            FieldSpec::Rationals => f.write_str("Q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let p: u64 = inner
            .parse()
            .map_err(|_| Error::Parse(format!("bad field {s:?}; expected a prime or Q")))?;
        FieldSpec::Prime(p).validate()
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_checks() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert_eq!(PrimeField::new(32004), Err(Error::NotPrime(32004)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(4_294_967_311).is_err());
    }

    #[test]
    fn field_spec_text() {
        assert_eq!("32003".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(32003));
        assert_eq!("GF(2)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert!("9".parse::<FieldSpec>().is_err());
        let json = serde_json::to_string(&FieldSpec::Prime(7)).unwrap();
        assert_eq!(json, "\"7\"");
        assert_eq!(serde_json::from_str::<FieldSpec>("\"Q\"").unwrap(), FieldSpec::Rationals);
    }

    #[test]
    fn element_parsing() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.parse_elem("-1").unwrap(), 6);
        assert_eq!(f.parse_elem("3/2").unwrap(), 5);
        assert!(f.parse_elem("1/7").is_err());
        let q = Rationals;
        let x = q.parse_elem("-6/4").unwrap();
        assert_eq!(q.format_elem(&x), "-3/2");
        assert_eq!(q.format_elem(&q.from_i64(5)), "5");
    }

    proptest! {
        #[test]
        fn prime_field_inverse(a in 1u64..32003) {
            let f = PrimeField::default();
            prop_assert_eq!(f.mul(&a, &f.inv(&a)), 1);
            prop_assert_eq!(f.add(&a, &f.neg(&a)), 0);
        }
    }
}
