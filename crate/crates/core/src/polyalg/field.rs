//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A coefficient field, identified by its characteristic.
///
/// Characteristic 0 means the rationals; a prime `p` means `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    characteristic: u64,
}

/// Largest supported prime; keeps residue products inside `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

impl Field {
    pub const RATIONALS: Field = Field { characteristic: 0 };

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic != 0 && (characteristic > MAX_PRIME || !is_prime(characteristic)) {
            return Err(Error::InvalidField(characteristic));
        }
        Ok(Field { characteristic })
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidField(0));
        }
        Self::new(p)
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    /// True when the characteristic divides `n` (the modular case for a group of order `n`).
    pub fn divides(&self, n: u64) -> bool {
        self.characteristic != 0 && n % self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from_integer(v.clone())),
            p => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Modular {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// Maps `num/den` into the field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        match self.characteristic {
            0 => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            _ => {
                let d = self.from_bigint(den);
                if d.is_zero() {
                    return Err(Error::Parse(format!(
                        "denominator {den} vanishes in characteristic {}",
                        self.characteristic
                    )));
                }
                Ok(self.from_bigint(num).mul(&d.inv()))
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rational(_) => self.characteristic == 0,
            Scalar::Modular { modulus, .. } => *modulus == self.characteristic,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "QQ"),
            p => write!(f, "GF({p})"),
        }
    }
}

/// A field element. Mixing elements of different fields is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::RATIONALS,
            Scalar::Modular { modulus, .. } => Field {
                characteristic: *modulus,
            },
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: (a * b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Canonical JSON coefficient string: `"num/den"` or `"k mod p"`.
    pub fn to_json_string(&self) -> String {
        match self {
            Scalar::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Scalar::Modular { value, modulus } => format!("{value} mod {modulus}"),
        }
    }

    pub fn from_json_string(field: Field, s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some((k, p)) = s.split_once("mod") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
            if p != field.characteristic() {
                return Err(Error::FieldMismatch);
            }
            let k: BigInt = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad residue in {s:?}")))?;
            return Ok(field.from_bigint(&k));
        }
        if !field.is_rational() {
            return Err(Error::FieldMismatch);
        }
        parse_ratio(field, s)
    }

    /// Sign-aware rendering used by the text format: returns (negative, magnitude).
    pub(crate) fn split_sign(&self) -> (bool, String) {
        match self {
            Scalar::Rational(r) => {
                let neg = r.is_negative();
                let abs = r.abs();
                if abs.is_integer() {
                    (neg, abs.numer().to_string())
                } else {
                    (neg, format!("{}/{}", abs.numer(), abs.denom()))
                }
            }
            Scalar::Modular { value, .. } => (false, value.to_string()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

pub(crate) fn parse_ratio(field: Field, s: &str) -> Result<Scalar> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    field.from_ratio(&num, &den)
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

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
