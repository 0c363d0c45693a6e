//! Exact membership grades.
//!
//! A [`Grade`] is a rational number in `[0, 1]`. All arithmetic on grades is
//! carried out on [`Rational`] with overflow checks, and the result is only
//! turned back into a grade once it is known to lie in the unit interval.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Rational);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    /// Returns `None` when `value` is outside `[0, 1]`.
    pub fn new(value: Rational) -> Option<Grade> {
        if value < Rational::zero() || value > Rational::one() {
            None
        } else {
            Some(Grade(value))
        }
    }

    pub fn from_fraction(numer: i64, denom: i64) -> Result<Grade> {
        if denom == 0 {
            return Err(Error::Parse {
                line: 0,
                message: "zero denominator".into(),
            });
        }
        let value = Rational::new(numer, denom);
        Grade::new(value).ok_or(Error::ValueOutOfRange {
            what: "grade",
            value,
        })
    }

    pub fn value(self) -> Rational {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Grade> {
        let value = parse_rational(s)?;
        Grade::new(value).ok_or(Error::ValueOutOfRange {
            what: "grade",
            value,
        })
    }
}

pub(crate) fn add(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_add(&b).ok_or(Error::ArithmeticOverflow)
}

pub(crate) fn sub(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_sub(&b).ok_or(Error::ArithmeticOverflow)
}

pub(crate) fn mul(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_mul(&b).ok_or(Error::ArithmeticOverflow)
}

/// Parses `p/q`, an integer, or an exact decimal such as `0.25` or `-.5`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = |message: String| Error::Parse { line: 0, message };
    if s.is_empty() {
        return Err(bad("empty number".into()));
    }
    if let Some((p, q)) = s.split_once('/') {
        let numer: i64 = p
            .trim()
            .parse()
            .map_err(|_| bad(format!("invalid numerator in {s:?}")))?;
        let denom: i64 = q
            .trim()
            .parse()
            .map_err(|_| bad(format!("invalid denominator in {s:?}")))?;
        if denom == 0 {
            return Err(bad(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(numer, denom));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad(format!("invalid number {s:?}")));
    }
    let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
    if !digits_ok(int_part) || !digits_ok(frac_part) {
        return Err(bad(format!("invalid number {s:?}")));
    }
    let overflow = || bad(format!("number {s:?} is too large"));
    let mut numer: i64 = 0;
    let mut denom: i64 = 1;
    for b in int_part.bytes().chain(frac_part.bytes()) {
        numer = numer
            .checked_mul(10)
            .and_then(|n| n.checked_add(i64::from(b - b'0')))
            .ok_or_else(overflow)?;
    }
    for _ in 0..frac_part.len() {
        denom = denom.checked_mul(10).ok_or_else(overflow)?;
    }
    if negative {
        numer = -numer;
    }
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn decimals_parse_exactly() {
        assert_eq!(parse_rational("0.25").unwrap(), r(1, 4));
        assert_eq!(parse_rational("0.04").unwrap(), r(1, 25));
        assert_eq!(parse_rational(".5").unwrap(), r(1, 2));
        assert_eq!(parse_rational("1").unwrap(), r(1, 1));
        assert_eq!(parse_rational("-0.1").unwrap(), r(-1, 10));
        assert_eq!(parse_rational(" 3/6 ").unwrap(), r(1, 2));
    }

    #[test]
    fn malformed_numbers_are_rejected() {
        for s in ["", ".", "1/0", "abc", "0.2.5", "1e3", "--1"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn grades_stay_in_the_unit_interval() {
        assert!("1.5".parse::<Grade>().is_err());
        assert!("-1/4".parse::<Grade>().is_err());
        assert_eq!("1/1".parse::<Grade>().unwrap(), Grade::ONE);
        assert_eq!("0".parse::<Grade>().unwrap(), Grade::ZERO);
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(Grade::from_fraction(6, 60).unwrap().to_string(), "1/10");
        assert_eq!(Grade::ONE.to_string(), "1");
        assert_eq!(Grade::ZERO.to_string(), "0");
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::new(i64::MAX, 1);
        assert_eq!(mul(big, big), Err(Error::ArithmeticOverflow));
    }
}
