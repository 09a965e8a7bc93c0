//! Exact rational scalars over ℚ with arbitrary-precision integers.
//!
//! Every value is kept in canonical reduced form (gcd(|p|, q) = 1, q ≥ 1),
//! so equality is structural and no rounding ever occurs. The textual
//! grammar used by file formats and reports is
//!
//! ```text
//! rational := '-'? digits ( '/' nonzero-digits )?
//! ```
//!
//! with the denominator always positive and the printed form always reduced.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. `BigRational` keeps values reduced with a
/// positive denominator, which is exactly the canonical form required here.
pub type Scalar = BigRational;

/// Error produced when a string does not match the rational grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseScalarError {
    pub literal: String,
    pub reason: String,
}

fn err(literal: &str, reason: &str) -> ParseScalarError {
    ParseScalarError {
        literal: literal.to_owned(),
        reason: reason.to_owned(),
    }
}

/// Parse a rational literal: `-? digits ( '/' nonzero-digits )?`.
///
/// Stricter than `BigRational::from_str`: no sign on the denominator,
/// no whitespace, denominator must be nonzero.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseScalarError> {
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };

    let unsigned = num_text.strip_prefix('-').unwrap_or(num_text);
    if unsigned.is_empty() || !unsigned.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(text, "numerator must be -? digits"));
    }
    let numer: BigInt = num_text.parse().expect("digits already validated");

    let denom = match den_text {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(text, "denominator must be digits"));
            }
            let d: BigInt = d.parse().expect("digits already validated");
            if d.is_zero() {
                return Err(err(text, "denominator must be nonzero"));
            }
            d
        }
    };

    Ok(Scalar::new(numer, denom))
}

/// Render a scalar in the canonical grammar: `p` when the denominator is 1,
/// `p/q` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q` (`q` must be nonzero).
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// True when the canonical form of `value` is negative.
pub fn is_negative(value: &Scalar) -> bool {
    value.numer().is_negative()
}
