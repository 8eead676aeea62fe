//! Helpers for arbitrary-precision rationals: construction, parsing,
//! canonical residues modulo `Z` and `2Z`, and exact square roots.

use super::{Int, Rat};
use num_traits::{Signed, Zero};

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `n/d`; panics on `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(Int::from(n), Int::from(d))
}

/// Parse a rational from a decimal-free string: `"p"` or `"p/q"`, with an
/// optional leading sign.  Whitespace around the parts is tolerated.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num
        .parse()
        .map_err(|_| format!("invalid integer numerator {num:?}"))?;
    let d: Int = den
        .parse()
        .map_err(|_| format!("invalid integer denominator {den:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Canonical representative of `x` modulo `Z`, in `[0, 1)`.
pub fn rat_mod_one(x: &Rat) -> Rat {
    let f = x.floor();
    x - f
}

/// Canonical representative of `x` modulo `2Z`, in `[0, 2)`.
pub fn rat_mod_two(x: &Rat) -> Rat {
    let half = x / rat(2);
    let f = half.floor() * rat(2);
    x - f
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let num = x.numer().magnitude().sqrt();
    let den = x.denom().magnitude().sqrt();
    if &(&num * &num) == x.numer().magnitude() && &(&den * &den) == x.denom().magnitude() {
        Some(Rat::new(Int::from(num), Int::from(den)))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rat("3/7").unwrap(), rat_frac(3, 7));
        assert_eq!(parse_rat("-4/6").unwrap(), rat_frac(-2, 3));
        assert_eq!(parse_rat("5").unwrap(), rat(5));
        assert_eq!(parse_rat(" -12 / 8 ").unwrap(), rat_frac(-3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/2").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn canonical_residues() {
        assert_eq!(rat_mod_one(&rat_frac(-1, 2)), rat_frac(1, 2));
        assert_eq!(rat_mod_one(&rat_frac(9, 4)), rat_frac(1, 4));
        assert_eq!(rat_mod_two(&rat_frac(-1, 2)), rat_frac(3, 2));
        assert_eq!(rat_mod_two(&rat_frac(19, 8)), rat_frac(3, 8));
        assert_eq!(rat_mod_two(&rat(2)), rat(0));
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(rat_sqrt(&rat_frac(9, 4)), Some(rat_frac(3, 2)));
        assert_eq!(rat_sqrt(&rat(0)), Some(rat(0)));
        assert_eq!(rat_sqrt(&rat(2)), None);
        assert_eq!(rat_sqrt(&rat(-4)), None);
    }
}
