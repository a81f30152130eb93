//! Exact scalars over the supported ground fields: Q and F_p.
//!
//! Rationals are arbitrary-precision and always kept in lowest terms with a
//! positive denominator (guaranteed by [`num::BigRational`]); prime-field
//! residues are kept in `[0, p)`. Mixing scalars from different fields is a
//! programming error and panics.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::Error;

/// Ground field over which all linear algebra in the crate is performed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers.
    Rationals,
    /// The prime field F_p.
    PrimeField(u64),
}

impl FieldSpec {
    /// F_p, verifying that `p` is actually prime.
    pub fn prime_field(p: u64) -> Result<Self, Error> {
        if is_prime_u64(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64);
                Scalar::Mod {
                    value: r as u64,
                    modulus: *p,
                }
            }
        }
    }

    /// Parse the canonical string form: `"3"`, `"-2/7"` over Q, `"5"` over F_p.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, Error> {
        let fail = || Error::ScalarParse {
            text: text.to_string(),
            field: self.to_string(),
        };
        let text = text.trim();
        match self {
            FieldSpec::Rationals => {
                let (num_str, den_str) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let numer: BigInt = num_str.parse().map_err(|_| fail())?;
                let denom: BigInt = den_str.parse().map_err(|_| fail())?;
                if denom.is_zero() {
                    return Err(fail());
                }
                Ok(Scalar::Rational(BigRational::new(numer, denom)))
            }
            FieldSpec::PrimeField(p) => {
                let n: i128 = text.parse().map_err(|_| fail())?;
                let r = n.rem_euclid(*p as i128);
                Ok(Scalar::Mod {
                    value: r as u64,
                    modulus: *p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Mod {
                    value: a,
                    modulus: p,
                },
                Scalar::Mod {
                    value: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields in scalar addition"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Mod {
                    value: a,
                    modulus: p,
                },
                Scalar::Mod {
                    value: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod {
                    value: mul_mod(*a, *b, *p),
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields in scalar multiplication"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Mod { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Mod {
                        value: inv_mod(*value, *modulus),
                        modulus: *modulus,
                    })
                }
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv().expect("division by zero"))
    }

    /// `self += c * other`, the inner loop of all elimination routines.
    pub fn add_mul_assign(&mut self, c: &Scalar, other: &Scalar) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        *self = self.add(&c.mul(other));
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
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

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so Fermat suffices.
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for all u64 inputs.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = FieldSpec::Rationals;
        let a = q.parse_scalar("3/7").unwrap();
        let b = q.parse_scalar("7/3").unwrap();
        assert!(a.mul(&b).is_one());
        assert_eq!(a.add(&a).to_string(), "6/7");
        assert_eq!(q.parse_scalar("-4/6").unwrap().to_string(), "-2/3");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f7 = FieldSpec::prime_field(7).unwrap();
        let five = f7.from_i64(5);
        let three = f7.from_i64(3);
        assert_eq!(five.mul(&three).to_string(), "1");
        assert_eq!(five.inv().unwrap().to_string(), "3");
        assert_eq!(f7.from_i64(-1).to_string(), "6");
    }

    #[test]
    fn primality_is_enforced() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(7).is_ok());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(91).is_err());
        assert!(FieldSpec::prime_field(1_000_003).is_ok());
    }

    #[test]
    fn scalar_parse_rejects_garbage() {
        let q = FieldSpec::Rationals;
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("x").is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn rational() -> impl Strategy<Value = Scalar> {
            (-20i64..21, 1i64..13).prop_map(|(n, d)| {
                Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
            })
        }

        fn residue() -> impl Strategy<Value = Scalar> {
            (0i64..7).prop_map(|v| FieldSpec::PrimeField(7).from_i64(v))
        }

        proptest! {
            #[test]
            fn rationals_satisfy_field_axioms(a in rational(), b in rational(), c in rational()) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                prop_assert!(a.add(&a.neg()).is_zero());
                if !a.is_zero() {
                    prop_assert!(a.mul(&a.inv().unwrap()).is_one());
                }
            }

            #[test]
            fn prime_field_satisfies_field_axioms(a in residue(), b in residue(), c in residue()) {
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                prop_assert!(a.add(&a.neg()).is_zero());
                if !a.is_zero() {
                    prop_assert!(a.mul(&a.inv().unwrap()).is_one());
                }
            }

            // Canonical string forms round-trip through parsing.
            #[test]
            fn display_parse_round_trip(a in rational()) {
                let q = FieldSpec::Rationals;
                prop_assert_eq!(q.parse_scalar(&a.to_string()).unwrap(), a);
            }
        }
    }
}
