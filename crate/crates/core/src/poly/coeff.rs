use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Field {
    Rationals,
    /// `GF(p)`; `p` is a prime below `2^32`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..(1 << 32)).contains(&p) || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::BadParameters(format!("{p} is not a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coefficient {
        match *self {
            Field::Rationals => Coefficient::Rational(BigRational::from_integer(v.into())),
            Field::Prime(p) => Coefficient::Modular { value: v.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// `num / den`, reduced into the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coefficient> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        match *self {
            Field::Rationals => Ok(Coefficient::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let modp = |x: &BigInt| x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits");
                let n = Coefficient::Modular { value: modp(num), modulus: p };
                let d = Coefficient::Modular { value: modp(den), modulus: p };
                Ok(n.mul(&d.inverse()?))
            }
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

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn field(&self) -> Field {
        match self {
            Coefficient::Rational(_) => Field::Rationals,
            Coefficient::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Modular { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Modular { value: a, modulus: p }, Coefficient::Modular { value: b, .. }) => {
                Coefficient::Modular { value: (a + b) % p, modulus: *p }
            }
            _ => panic!("coefficients from different fields"),
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Modular { value, modulus } => {
                Coefficient::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Modular { value: a, modulus: p }, Coefficient::Modular { value: b, .. }) => {
                Coefficient::Modular { value: a * b % p, modulus: *p }
            }
            _ => panic!("coefficients from different fields"),
        }
    }

    pub fn inverse(&self) -> Result<Coefficient> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(match self {
            Coefficient::Rational(a) => Coefficient::Rational(a.recip()),
            Coefficient::Modular { value, modulus } => {
                // Fermat: a^(p-2)
                let (mut base, mut exp, mut acc) = (*value, modulus - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % modulus;
                    }
                    base = base * base % modulus;
                    exp >>= 1;
                }
                Coefficient::Modular { value: acc, modulus: *modulus }
            }
        })
    }

    pub fn div(&self, other: &Coefficient) -> Result<Coefficient> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Sign used for display; residues above `p/2` print as negatives.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(a) => a.is_negative(),
            Coefficient::Modular { value, modulus } => *value > modulus / 2,
        }
    }

    pub fn abs(&self) -> Coefficient {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
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
            Coefficient::Modular { value, modulus } => {
                if self.is_negative() {
                    write!(f, "-{}", modulus - value)
                } else {
                    write!(f, "{value}")
                }
            }
        }
    }
}
