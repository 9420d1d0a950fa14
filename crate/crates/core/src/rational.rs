//! Exact rationals and a few helpers for building and printing them.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `num / den` reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Formats `r` with `digits` significant decimal digits, rounding half to even.
///
/// Zero prints as `0`. Values are written positionally (no exponent), which
/// is fine for the magnitudes the bench tables produce.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let abs = r.abs();
    let ten = BigInt::from(10);

    // Find `exp` with 10^(digits-1) <= abs * 10^exp < 10^digits.
    let low = ten.pow(digits as u32 - 1);
    let high = &low * &ten;
    let mut exp: i64 = 0;
    let mut scaled = abs.clone();
    while scaled.floor().to_integer() >= high {
        scaled /= Rational::from_integer(ten.clone());
        exp -= 1;
    }
    while scaled.floor().to_integer() < low {
        scaled *= Rational::from_integer(ten.clone());
        exp += 1;
    }
    let mut mantissa = round_half_even(&scaled);
    if mantissa == high {
        mantissa = low.clone();
        exp -= 1;
    }

    let text = mantissa.to_string();
    let body = if exp <= 0 {
        let zeros = "0".repeat((-exp) as usize);
        format!("{text}{zeros}")
    } else {
        let exp = exp as usize;
        if exp >= text.len() {
            format!("0.{}{}", "0".repeat(exp - text.len()), text)
        } else {
            let (whole, frac) = text.split_at(text.len() - exp);
            format!("{whole}.{frac}")
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn round_half_even(r: &Rational) -> BigInt {
    let floor = r.floor().to_integer();
    let frac = r - Rational::from_integer(floor.clone());
    let half = ratio(1, 2);
    if frac > half || (frac == half && floor.is_odd()) {
        floor + BigInt::one()
    } else {
        floor
    }
}

/// Parses `a` or `a/b` into a reduced rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim().parse::<BigInt>().ok()?, b.trim().parse::<BigInt>().ok()?),
        None => (text.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.sign() == Sign::NoSign {
        return None;
    }
    Some(Rational::new(num, den))
}
