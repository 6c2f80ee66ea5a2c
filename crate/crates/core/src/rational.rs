//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `-p`, or `p/q` with `q != 0`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Lowest-terms string with positive denominator; integers print without `/1`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// `Some(n)` when `q` is an integer that fits in `i64`.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.to_integer()).ok()
}

pub fn is_nonneg_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}

pub fn is_positive_integer(q: &Rational) -> bool {
    q.is_integer() && q.is_positive()
}

/// Bit size of numerator plus denominator, used to rank pivots.
pub(crate) fn bit_size(q: &Rational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

/// Writes `c*body` as one term of a sum: unit coefficients are dropped and
/// later terms are joined with ` + ` or ` - `.
pub(crate) fn write_term(
    f: &mut std::fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    body: &dyn std::fmt::Display,
) -> std::fmt::Result {
    let magnitude = c.abs();
    match (first, c.is_negative()) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    if magnitude.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{}*{body}", format_rational(&magnitude))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational(" -2/4 ").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("6/-4").unwrap(), frac(-3, 2));
        assert_eq!(format_rational(&frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(0)), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }
}
