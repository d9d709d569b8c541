//! Arbitrary-precision rationals, stored in lowest terms with positive
//! denominator (guaranteed by `num-rational`), plus the text syntax used by
//! the CLI and fixture files ("3/7", "-2", "0").

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::error::CoreError;

pub type Rational = num_rational::BigRational;

/// Parses "n", "n/d" with optional sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, CoreError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(CoreError::Parse("empty rational".into()));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| CoreError::Parse(format!("bad integer `{num}`")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| CoreError::Parse(format!("bad integer `{d}`")))?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(CoreError::Parse(format!("zero denominator in `{t}`")));
    }
    Ok(Rational::new(n, d))
}

/// Renders in the same syntax `parse_rational` accepts.
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal expansion with `digits` places after the point, truncated toward
/// zero. Exact and deterministic; used only for display.
pub fn decimal_string(r: &Rational, digits: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (a.numer() * &scale) / a.denom();
    let (int_part, frac_part) = (&scaled / &scale, &scaled % &scale);
    let mut frac = frac_part.to_string();
    while frac.len() < digits {
        frac.insert(0, '0');
    }
    let sign = if neg && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// Sign as -1, 0, 1.
pub fn sign_of(r: &Rational) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(format_rational(&parse_rational("3/7").unwrap()), "3/7");
        assert_eq!(format_rational(&parse_rational("-6/4").unwrap()), "-3/2");
        assert_eq!(format_rational(&parse_rational(" 2 ").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn decimals() {
        let r = parse_rational("1/3").unwrap();
        assert_eq!(decimal_string(&r, 5), "0.33333");
        let r = parse_rational("-5/4").unwrap();
        assert_eq!(decimal_string(&r, 2), "-1.25");
    }
}
