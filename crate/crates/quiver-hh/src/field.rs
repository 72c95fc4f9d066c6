//! Ground-field arithmetic: exact rationals and prime fields F_p.
//!
//! A [`FieldDescriptor`] names the field and owns all arithmetic; a
//! [`Scalar`] is a value tagged with its representation. Every scalar in a
//! computation must come from the same descriptor, and operations panic on a
//! representation mismatch since that is always a programming error.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field of a presentation or computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    /// The rational numbers, with arbitrary-precision arithmetic.
    Rationals,
    /// The prime field F_p for a prime `p` that fits in `u64`.
    Prime(u64),
}

/// An element of the field named by a [`FieldDescriptor`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n.is_multiple_of(small) {
            return false;
        }
    }
    // Deterministic Miller-Rabin for all n < 2^64 with this witness set.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl FieldDescriptor {
    /// Builds the prime-field descriptor, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldDescriptor::Prime(p))
        } else {
            Err(Error::BadScalar {
                text: p.to_string(),
                message: "field characteristic must be prime".into(),
            })
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Rational(BigRational::zero()),
            FieldDescriptor::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Rational(BigRational::one()),
            FieldDescriptor::Prime(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldDescriptor::Prime(p) => {
                // rem_euclid needs the modulus in the signed type's range,
                // so primes past i64::MAX reduce through i128.
                let r = if *p <= i64::MAX as u64 {
                    n.rem_euclid(*p as i64) as u64
                } else {
                    (n as i128).rem_euclid(*p as i128) as u64
                };
                Scalar::Mod(r % p)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod(m) => *m == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldDescriptor::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (FieldDescriptor::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar representation does not match field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldDescriptor::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldDescriptor::Prime(p), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("scalar representation does not match field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldDescriptor::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (FieldDescriptor::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(mul_mod(*x, *y, *p))
            }
            _ => panic!("scalar representation does not match field"),
        }
    }

    /// Multiplicative inverse; panics on zero, which callers must exclude.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldDescriptor::Rationals, Scalar::Rational(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rational(x.recip())
            }
            (FieldDescriptor::Prime(p), Scalar::Mod(x)) => {
                assert!(*x != 0, "inverse of zero");
                Scalar::Mod(pow_mod(*x, p - 2, *p))
            }
            _ => panic!("scalar representation does not match field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Parses a scalar literal: an integer or a fraction `num/den`.
    ///
    /// Literals are read as exact rationals; over F_p the value reduces mod p
    /// (a fraction whose denominator vanishes mod p is rejected).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = |message: &str| Error::BadScalar {
            text: text.to_string(),
            message: message.to_string(),
        };
        if text.is_empty() {
            return Err(bad("empty scalar"));
        }
        let (num_text, den_text) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        match self {
            FieldDescriptor::Rationals => {
                let num: BigInt = num_text
                    .parse()
                    .map_err(|_| bad("numerator is not an integer"))?;
                let den: BigInt = match den_text {
                    Some(d) => d.parse().map_err(|_| bad("denominator is not an integer"))?,
                    None => BigInt::one(),
                };
                if den.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldDescriptor::Prime(p) => {
                let num: i128 = num_text
                    .parse()
                    .map_err(|_| bad("numerator is not an integer"))?;
                let den: i128 = match den_text {
                    Some(d) => d.parse().map_err(|_| bad("denominator is not an integer"))?,
                    None => 1,
                };
                if den == 0 {
                    return Err(bad("zero denominator"));
                }
                let num_r = num.rem_euclid(*p as i128) as u64;
                let den_r = den.rem_euclid(*p as i128) as u64;
                if den_r == 0 {
                    return Err(bad("denominator vanishes in the prime field"));
                }
                Ok(Scalar::Mod(mul_mod(num_r, pow_mod(den_r, p - 2, *p), *p)))
            }
        }
    }

    /// Renders a scalar the way the report and `.quiver` formats expect.
    pub fn format_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(m) => m.to_string(),
        }
    }

    /// Returns true when the scalar is a negative rational, used only to
    /// choose between `+` and `-` when pretty-printing linear combinations.
    pub fn is_negative(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Mod(_) => false,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "F{p}"),
        }
    }
}
