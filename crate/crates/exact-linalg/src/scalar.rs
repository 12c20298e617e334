//! The ground field: arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

/// Exact rational scalar. Always stored reduced with a positive denominator.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `num/den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational `{input}`: {reason}")]
pub struct ScalarParseError {
    pub input: String,
    pub reason: String,
}

/// Parses `p` or `p/q` with optional sign, e.g. `-3/2`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let err = |reason: &str| ScalarParseError {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    let mut parts = text.splitn(2, '/');
    let num_part = parts.next().unwrap_or("").trim();
    let num = BigInt::from_str(num_part).map_err(|_| err("numerator is not an integer"))?;
    match parts.next() {
        None => Ok(Scalar::from_integer(num)),
        Some(den_part) => {
            let den =
                BigInt::from_str(den_part.trim()).map_err(|_| err("denominator is not an integer"))?;
            if den.is_zero() {
                return Err(err("denominator is zero"));
            }
            Ok(Scalar::new(num, den))
        }
    }
}

/// Formats a scalar as `p` or `p/q` with q > 0.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "5", "-7", "1/2", "-3/4", "22/7"] {
            let s = parse_scalar(text).unwrap();
            assert_eq!(format_scalar(&s), text);
        }
    }

    #[test]
    fn parse_normalizes_sign_and_gcd() {
        assert_eq!(parse_scalar("4/-6").unwrap(), ratio(-2, 3));
        assert_eq!(format_scalar(&parse_scalar("4/-6").unwrap()), "-2/3");
        assert_eq!(parse_scalar(" 6 / 4 ").unwrap(), ratio(3, 2));
    }

    #[test]
    fn parse_rejects_zero_denominator_and_garbage() {
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1/2/3").is_err());
        assert!(parse_scalar("").is_err());
    }
}
