//! Exact rational arithmetic used on every correctness path.
//!
//! All quantities in this crate (budgets, prices, cut capacities, flow
//! amounts, sweep parameters) are [`Rational`] values. Floating point never
//! appears anywhere a result depends on it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for small integer rationals.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d` rationals. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Error produced when a token is not a valid `a` or `a/b` rational.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational `{token}`: {reason}")]
pub struct ParseRationalError {
    pub token: String,
    pub reason: String,
}

/// Parses the text form used throughout the crate: `a` or `a/b` with
/// arbitrary-precision integers and `b > 0`.
pub fn parse_rational(token: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason: &str| ParseRationalError {
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let mut parts = token.splitn(2, '/');
    let numer = parts.next().ok_or_else(|| err("empty token"))?;
    let numer = BigInt::from_str(numer).map_err(|_| err("numerator is not an integer"))?;
    match parts.next() {
        None => Ok(Rational::from_integer(numer)),
        Some(denom) => {
            let denom = BigInt::from_str(denom).map_err(|_| err("denominator is not an integer"))?;
            if denom <= BigInt::zero() {
                return Err(err("denominator must be positive"));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Canonical text form: `a` for integers, `a/b` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` has denominator 1.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]` (Stern-Brocot descent). Requires `lo <= hi`.
pub fn simplest_in_interval(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi, "simplest_in_interval needs lo <= hi");
    if lo == hi {
        return lo.clone();
    }
    if lo.is_negative() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_in_interval(&-hi.clone(), &-lo.clone());
    }
    simplest_nonneg(lo, hi)
}

fn simplest_nonneg(lo: &Rational, hi: &Rational) -> Rational {
    // An integer in [lo, hi] always wins; otherwise recurse on the
    // fractional parts with the interval reciprocated and flipped.
    let lo_ceil = lo.ceil();
    if &lo_ceil <= hi {
        return lo_ceil;
    }
    let whole = lo.floor();
    let inv_lo = (hi - &whole).recip();
    let inv_hi = (lo - &whole).recip();
    whole + simplest_nonneg(&inv_lo, &inv_hi).recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for token in ["0", "5", "-3", "7/2", "-9/4", "123456789012345678901/7"] {
            let r = parse_rational(token).unwrap();
            assert_eq!(format_rational(&r), token);
        }
    }

    #[test]
    fn parse_reduces_to_lowest_terms() {
        let r = parse_rational("6/4").unwrap();
        assert_eq!(format_rational(&r), "3/2");
        let r = parse_rational("4/2").unwrap();
        assert_eq!(format_rational(&r), "2");
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        for token in ["", "x", "1/0", "1/-2", "1/2/3", "1.5"] {
            assert!(parse_rational(token).is_err(), "accepted {token:?}");
        }
    }

    #[test]
    fn simplest_picks_minimal_denominator() {
        // 1/2 is the simplest rational strictly between 0.4 and 0.6.
        let lo = ratio(2, 5);
        let hi = ratio(3, 5);
        assert_eq!(simplest_in_interval(&lo, &hi), ratio(1, 2));
        // Integers beat everything.
        assert_eq!(simplest_in_interval(&ratio(5, 2), &rat(4)), rat(3));
        // Degenerate interval.
        assert_eq!(simplest_in_interval(&ratio(7, 3), &ratio(7, 3)), ratio(7, 3));
        // Around a breakpoint-style value.
        let target = ratio(13, 7);
        let eps = ratio(1, 1000);
        assert_eq!(simplest_in_interval(&(&target - &eps), &(&target + &eps)), target);
    }

    proptest::proptest! {
        #[test]
        fn simplest_lands_inside(n in -200i64..200, d in 1i64..50, w in 1i64..30) {
            let lo = ratio(n, d);
            let hi = &lo + ratio(1, w);
            let s = simplest_in_interval(&lo, &hi);
            proptest::prop_assert!(lo <= s && s <= hi);
        }
    }
}
