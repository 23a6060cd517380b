//! Exact rational scalars and dense rational linear algebra.
//!
//! Every comparison made anywhere in the crate goes through these types, so
//! strict and non-strict inequalities are decided without tolerances.

mod matrix;

pub use matrix::{dot, mat_vec, nullspace, rank, RatMatrix};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// A dense vector of rationals; its length is its dimension.
pub type RatVector = Vec<Rational>;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `numer / denom` in canonical form. Panics on a zero denominator; use
/// [`checked_div`] for untrusted input.
pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

pub fn int_vec(values: &[i64]) -> RatVector {
    values.iter().map(|&v| int(v)).collect()
}

pub fn zeros(dim: usize) -> RatVector {
    vec![Rational::zero(); dim]
}

pub fn unit(dim: usize, index: usize) -> RatVector {
    let mut v = zeros(dim);
    v[index] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Parses `"p/q"` or `"p"` (optional sign, decimal digits).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numer, denom))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

/// Positive rescaling of a nonzero vector to coprime integer entries.
/// The zero vector is returned unchanged.
pub fn primitive(v: &[Rational]) -> RatVector {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let lcm_denom = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm_denom.clone())).to_integer())
        .collect();
    let gcd = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    scaled
        .into_iter()
        .map(|x| Rational::from_integer(x / &gcd))
        .collect()
}

/// [`primitive`] followed by a sign flip making the first nonzero entry
/// positive. Only valid for directions whose sign is irrelevant (lines).
pub fn primitive_unsigned(v: &[Rational]) -> RatVector {
    let mut p = primitive(v);
    if p.iter()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_negative)
    {
        for x in &mut p {
            *x = -&*x;
        }
    }
    p
}

pub fn scale(v: &[Rational], factor: &Rational) -> RatVector {
    v.iter().map(|x| x * factor).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(v: &[Rational]) -> RatVector {
    v.iter().map(|x| -x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fraction_arithmetic() {
        assert_eq!(frac(1, 2) + frac(1, 3), frac(5, 6));
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(2, 4).numer(), &BigInt::from(1));
        assert_eq!(frac(7, 3).cmp(&frac(21, 9)), std::cmp::Ordering::Equal);
        assert_eq!(frac(-3, -6), frac(1, 2));
        assert_eq!(frac(3, -6).denom(), &BigInt::from(2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(checked_div(&int(1), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&int(1), &int(4)).unwrap(), frac(1, 4));
    }

    #[test]
    fn text_form() {
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&frac(-3, 2)), "-3/2");
        assert_eq!(format_rational(&int(-7)), "-7");
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(primitive(&[frac(1, 2), frac(-3, 4)]), int_vec(&[2, -3]));
        assert_eq!(primitive(&[int(-4), int(0)]), int_vec(&[-1, 0]));
        assert_eq!(primitive_unsigned(&[int(-4), int(2)]), int_vec(&[2, -1]));
        assert_eq!(primitive(&zeros(2)), zeros(2));
    }

    fn any_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn field_laws_hold_exactly(a in any_rational(), b in any_rational(), c in any_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        }

        #[test]
        fn canonical_form_is_idempotent(n in -10_000i64..10_000, d in 1i64..10_000) {
            let once = frac(n, d);
            let twice = Rational::new(once.numer().clone(), once.denom().clone());
            prop_assert_eq!(&once, &twice);
            prop_assert_eq!(once.numer().gcd(once.denom()), BigInt::one());
        }

        #[test]
        fn text_round_trip(a in any_rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
        }
    }
}
