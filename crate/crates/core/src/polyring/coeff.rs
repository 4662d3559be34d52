//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field. Products of two residues must
/// fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 32) - 1;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// `F_p`, checking that `p` is prime and within range.
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_PRIME {
            return Err(Error::InvalidCharacteristic(format!(
                "modulus {p} exceeds the supported maximum {MAX_PRIME}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidCharacteristic(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// `Q` for 0, `F_p` otherwise.
    pub fn from_characteristic(c: u64) -> Result<Field> {
        if c == 0 {
            Ok(Field::Rationals)
        } else {
            Field::prime(c)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coefficient {
        match self {
            Field::Rationals => Coefficient::Rational(BigRational::zero()),
            Field::Prime(p) => Coefficient::Residue { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coefficient {
        match self {
            Field::Rationals => Coefficient::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coefficient::Residue {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coefficient {
        match self {
            Field::Rationals => Coefficient::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Coefficient::Residue {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: *p,
                }
            }
        }
    }

    /// Image of `num/den` in this field; fails when `den` vanishes.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coefficient> {
        if den.is_zero() {
            return Err(Error::MalformedCoefficient("zero denominator".into()));
        }
        match self {
            Field::Rationals => Ok(Coefficient::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let d = self.from_bigint(den);
                if d.is_zero() {
                    return Err(Error::MalformedCoefficient(format!(
                        "denominator {den} vanishes modulo {p}"
                    )));
                }
                Ok(self.from_bigint(num).mul(&d.inv()))
            }
        }
    }

    /// Image of a coefficient of another field in this one. Rationals map to
    /// `F_p` by reduction; residues map to themselves.
    pub fn convert(&self, c: &Coefficient) -> Result<Coefficient> {
        match (self, c) {
            (Field::Rationals, Coefficient::Rational(_)) => Ok(c.clone()),
            (Field::Prime(p), Coefficient::Residue { modulus, .. }) if p == modulus => Ok(c.clone()),
            (Field::Prime(_), Coefficient::Rational(r)) => self.from_fraction(r.numer(), r.denom()),
            _ => Err(Error::RingMismatch(format!(
                "cannot map coefficient {c} into {self}"
            ))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An element of `Q` (always in lowest terms) or of `F_p` (always reduced).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn field(&self) -> Field {
        match self {
            Coefficient::Rational(_) => Field::Rationals,
            Coefficient::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Residue { value, .. } => *value == 1,
        }
    }

    #[inline]
    pub fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Residue { value: a, modulus: p }, Coefficient::Residue { value: b, .. }) => {
                let s = a + b;
                Coefficient::Residue {
                    value: if s >= *p { s - p } else { s },
                    modulus: *p,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    #[inline]
    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    #[inline]
    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Residue { value: a, modulus: p }, Coefficient::Residue { value: b, .. }) => {
                Coefficient::Residue {
                    value: a * b % p,
                    modulus: *p,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    #[inline]
    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coefficient {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(a.recip()),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn pow(&self, e: u64) -> Coefficient {
        match self {
            Coefficient::Rational(a) => {
                let e = i32::try_from(e).expect("exponent too large for rational power");
                Coefficient::Rational(num_traits::Pow::pow(a, e))
            }
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: pow_mod(*value, e, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Residue value for `F_p` elements.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Coefficient::Residue { value, .. } => Some(*value),
            Coefficient::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coefficient::Rational(r) => Some(r),
            Coefficient::Residue { .. } => None,
        }
    }

    /// True when a leading `-` should be printed in place of `+`.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Residue { .. } => false,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

/// Deterministic trial division; adequate for moduli below 2^32.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes `p` with `lo <= p <= hi`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let n = hi as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2) as usize..=n)
        .filter(|&k| sieve[k])
        .map(|k| k as u64)
        .collect()
}
