//! Exact rational scalars.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p/q"` or `"p"`; whitespace around the parts is ignored.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats_canonically() {
        assert_eq!(parse_rational("10/12"), Some(ratio(5, 6)));
        assert_eq!(parse_rational(" 3 "), Some(int(3)));
        assert_eq!(parse_rational("-4/2"), Some(int(-2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
        assert_eq!(format_rational(&ratio(10, 12)), "5/6");
        assert_eq!(format_rational(&int(2)), "2");
        assert_eq!(format_rational(&ratio(3, -6)), "-1/2");
    }

    #[test]
    fn floor_and_ceil_are_exact() {
        assert_eq!(ratio(7, 3).floor(), int(2));
        assert_eq!(ratio(7, 3).ceil(), int(3));
        assert_eq!(ratio(-7, 3).floor(), int(-3));
        assert_eq!(int(4).floor(), int(4));
    }

    #[test]
    fn common_denominator_is_lcm() {
        let values = [ratio(1, 4), ratio(5, 6), int(3)];
        assert_eq!(common_denominator(&values), BigInt::from(12));
    }
}
