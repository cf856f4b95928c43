//! Coefficient rings and exact scalars.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Tag for the coefficient ring of a computation: `Z`, `Q`, or `Z/p`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RingSpec {
    Z,
    Q,
    Zp(u64),
}

fn is_prime(p: u64) -> bool {
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

impl RingSpec {
    /// `Z/p`; rejects non-prime moduli.
    pub fn zp(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(RingSpec::Zp(p))
        } else {
            Err(Error::Invalid(format!("modulus {p} is not prime")))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, RingSpec::Z)
    }

    /// The field computations over this ring embed into: `Q` for `Z`,
    /// the ring itself otherwise.
    pub fn fraction_field(self) -> RingSpec {
        match self {
            RingSpec::Z => RingSpec::Q,
            other => other,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Z => write!(f, "Z"),
            RingSpec::Q => write!(f, "Q"),
            RingSpec::Zp(p) => write!(f, "Zp:{p}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" => Ok(RingSpec::Z),
            "Q" => Ok(RingSpec::Q),
            _ => {
                if let Some(p) = s.strip_prefix("Zp:") {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::Invalid(format!("bad modulus in ring {s:?}")))?;
                    RingSpec::zp(p)
                } else {
                    Err(Error::Invalid(format!(
                        "unknown ring {s:?} (expected Z, Q, or Zp:<p>)"
                    )))
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Value {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
}

/// An exact scalar tagged with its ring.
///
/// Arithmetic between scalars of different rings is a programming error and
/// panics; public entry points validate rings before mixing operands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coefficient {
    ring: RingSpec,
    value: Value,
}

impl Coefficient {
    pub fn zero(ring: RingSpec) -> Self {
        Self::from_i64(ring, 0)
    }

    pub fn one(ring: RingSpec) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn from_i64(ring: RingSpec, n: i64) -> Self {
        Self::from_bigint(ring, BigInt::from(n))
    }

    pub fn from_bigint(ring: RingSpec, n: BigInt) -> Self {
        let value = match ring {
            RingSpec::Z => Value::Int(n),
            RingSpec::Q => Value::Rat(BigRational::from_integer(n)),
            RingSpec::Zp(p) => Value::Mod(reduce_mod(&n, p)),
        };
        Coefficient { ring, value }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_zero(),
            Value::Rat(r) => r.is_zero(),
            Value::Mod(m) => *m == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_one(),
            Value::Rat(r) => r.is_one(),
            Value::Mod(m) => *m == 1,
        }
    }

    /// `+1` or `-1`.
    pub fn is_unit_sized(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.abs().is_one(),
            Value::Rat(r) => r.numer().abs().is_one() && r.denom().is_one(),
            Value::Mod(m) => {
                let RingSpec::Zp(p) = self.ring else { unreachable!() };
                *m == 1 || *m == p - 1
            }
        }
    }

    /// The underlying integer, if this is a `Z` scalar.
    pub fn as_bigint(&self) -> Option<&BigInt> {
        match &self.value {
            Value::Int(n) => Some(n),
            _ => None,
        }
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(
            self.ring, rhs.ring,
            "internal ring mismatch: {} vs {}",
            self.ring, rhs.ring
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let value = match (&self.value, &rhs.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Mod(a), Value::Mod(b)) => {
                let RingSpec::Zp(p) = self.ring else { unreachable!() };
                Value::Mod((a + b) % p)
            }
            _ => unreachable!(),
        };
        Coefficient { ring: self.ring, value }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let value = match &self.value {
            Value::Int(n) => Value::Int(-n),
            Value::Rat(r) => Value::Rat(-r),
            Value::Mod(m) => {
                let RingSpec::Zp(p) = self.ring else { unreachable!() };
                Value::Mod(if *m == 0 { 0 } else { p - m })
            }
        };
        Coefficient { ring: self.ring, value }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let value = match (&self.value, &rhs.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Mod(a), Value::Mod(b)) => {
                let RingSpec::Zp(p) = self.ring else { unreachable!() };
                Value::Mod(((*a as u128 * *b as u128) % p as u128) as u64)
            }
            _ => unreachable!(),
        };
        Coefficient { ring: self.ring, value }
    }

    pub fn mul_i64(&self, n: i64) -> Self {
        self.mul(&Coefficient::from_i64(self.ring, n))
    }

    /// Multiplicative inverse.  Over `Z` only the units survive.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Invalid("cannot invert zero".into()));
        }
        let value = match &self.value {
            Value::Int(n) => {
                if n.abs().is_one() {
                    Value::Int(n.clone())
                } else {
                    return Err(Error::Invalid(format!("{n} is not a unit in Z")));
                }
            }
            Value::Rat(r) => Value::Rat(r.recip()),
            Value::Mod(m) => {
                let RingSpec::Zp(p) = self.ring else { unreachable!() };
                Value::Mod(mod_inverse(*m, p))
            }
        };
        Ok(Coefficient { ring: self.ring, value })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Re-tag a `Z` scalar into its fraction field `Q`; other rings pass
    /// through unchanged.
    pub fn into_fraction_field(self) -> Self {
        match self.value {
            Value::Int(n) => Coefficient::from_bigint(RingSpec::Q, n),
            _ => self,
        }
    }

    /// Exact string form: integers as decimal, rationals as `a/b`.
    pub fn to_exact_string(&self) -> String {
        match &self.value {
            Value::Int(n) => n.to_string(),
            Value::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Value::Mod(m) => m.to_string(),
        }
    }

    /// Parse an exact scalar: decimal integer, or `a/b` over `Q`.
    pub fn parse(ring: RingSpec, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("bad coefficient {s:?} for ring {ring}"));
        match ring {
            RingSpec::Z | RingSpec::Zp(_) => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Self::from_bigint(ring, n))
            }
            RingSpec::Q => {
                if let Some((num, den)) = s.split_once('/') {
                    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
                    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
                    if den.is_zero() {
                        return Err(bad());
                    }
                    Ok(Coefficient {
                        ring,
                        value: Value::Rat(BigRational::new(num, den)),
                    })
                } else {
                    let n = BigInt::from_str(s).map_err(|_| bad())?;
                    Ok(Self::from_bigint(ring, n))
                }
            }
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

fn reduce_mod(n: &BigInt, p: u64) -> u64 {
    use num::ToPrimitive;
    let p_big = BigInt::from(p);
    let mut r = n % &p_big;
    if r.sign() == num::bigint::Sign::Minus {
        r += &p_big;
    }
    r.to_u64().expect("residue fits u64")
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    let mut acc: u128 = 1;
    let m = p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}
