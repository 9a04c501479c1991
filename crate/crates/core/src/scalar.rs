//! Exact rational scalars.
//!
//! Every structure constant, matrix entry and cochain value is a
//! [`Scalar`], an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. There is no floating-point path anywhere in the
//! crate: identities are compared with exact equality.

use num::{BigInt, BigRational, One, Zero};
use std::str::FromStr;
use thiserror::Error;

/// Exact rational number (lowest terms, positive denominator).
pub type Scalar = BigRational;

/// Error raised when a rational literal cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational literal {literal:?}: {reason}")]
pub struct ScalarParseError {
    pub literal: String,
    pub reason: &'static str,
}

/// The scalar `n`.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The scalar `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "zero denominator");
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// `(-1)^e` for a mod-2 exponent given as a boolean (`true` = odd).
pub fn sign(odd: bool) -> Scalar {
    if odd {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// Parses `"p/q"`, `"p"`, with an optional leading sign on `p`.
///
/// Whitespace around the literal and around the slash is ignored. Decimal
/// points and exponents are rejected so that no float ever leaks in.
pub fn parse_scalar(literal: &str) -> Result<Scalar, ScalarParseError> {
    let err = |reason| ScalarParseError {
        literal: literal.to_string(),
        reason,
    };
    let text = literal.trim();
    if text.is_empty() {
        return Err(err("empty literal"));
    }
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let parse_int = |s: &str, allow_sign: bool| -> Result<BigInt, ScalarParseError> {
        let digits = if allow_sign {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("expected an integer or p/q"));
        }
        BigInt::from_str(s).map_err(|_| err("expected an integer or p/q"))
    };
    let numer = parse_int(num_text, true)?;
    let denom = match den_text {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Scalar::new(numer, denom))
}

/// Formats a scalar as `"p"` or `"p/q"`, the inverse of [`parse_scalar`].
pub fn format_scalar(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse_scalar(" +1 / 2 ").unwrap(), ratio(1, 2));
        assert_eq!(parse_scalar("0/5").unwrap(), int(0));
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "1.5", "1e3", "1/0", "a/b", "1/-2", "--1", "/3", "3/"] {
            assert!(parse_scalar(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn format_round_trips() {
        for v in [int(0), int(-7), ratio(5, 3), ratio(-1, 2)] {
            assert_eq!(parse_scalar(&format_scalar(&v)).unwrap(), v);
        }
        assert_eq!(format_scalar(&ratio(6, -4)), "-3/2");
    }

    #[test]
    fn huge_values_stay_exact() {
        let big = parse_scalar("123456789012345678901234567890/7").unwrap();
        let back = &big * int(7);
        assert_eq!(format_scalar(&back), "123456789012345678901234567890");
    }
}
