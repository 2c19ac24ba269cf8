//! Exact-rational helpers: factorials, binomials, conversions and parsing.

use crate::error::{Error, Result};
use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient n! / (n_1! ... n_k!) for a composition of n.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let n: u64 = parts.iter().sum();
    let mut acc = factorial(n);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Correctly scaled conversion to f64.
///
/// `Ratio::to_f64` divides the float images of numerator and denominator,
/// which turns e.g. 1/200! into NaN because the denominator overflows.
/// This version rescales by a power of two first so any value inside the
/// f64 range converts with full precision.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let sign = if r.numer().sign() == Sign::Minus { -1.0 } else { 1.0 };
    let num = r.numer().abs();
    let den = r.denom().clone();
    let shift = num.bits() as i64 - den.bits() as i64;
    // Scale so the quotient carries ~80 significant bits before rounding.
    let extra = 80i64;
    let scaled = if shift - extra >= 0 {
        (&num >> (shift - extra) as u64) / &den
    } else {
        (&num << (extra - shift) as u64) / &den
    };
    match scaled.to_f64() {
        Some(q) => sign * q * 2f64.powi((shift - extra) as i32),
        None => f64::NAN,
    }
}

/// Formats a rational as `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q`, a plain integer, or a finite decimal such as `1.3` into an
/// exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("bad rational numerator: {p:?}")))?;
        let den: BigInt = q
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("bad rational denominator: {q:?}")))?;
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{}{}", int.trim_start_matches('-'), frac);
        let num: BigInt = digits
            .parse()
            .map_err(|_| Error::domain(format!("bad decimal: {s:?}")))?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let r = BigRational::new(num, den);
        return Ok(if int.starts_with('-') { -r } else { r });
    }
    let num: BigInt = s
        .parse()
        .map_err(|_| Error::domain(format!("bad rational: {s:?}")))?;
    Ok(BigRational::from_integer(num))
}

/// Difference in units of the last place between two finite floats of the
/// same sign; `u64::MAX` when signs differ or an argument is not finite.
pub fn ulp_diff(a: f64, b: f64) -> u64 {
    if !a.is_finite() || !b.is_finite() {
        return u64::MAX;
    }
    if a == b {
        return 0;
    }
    if (a < 0.0) != (b < 0.0) {
        // Straddling zero: count through ±0.
        return ulp_diff(a.abs(), 0.0).saturating_add(ulp_diff(b.abs(), 0.0));
    }
    let (x, y) = (a.abs().to_bits(), b.abs().to_bits());
    x.abs_diff(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 7), BigInt::zero());
        assert_eq!(multinomial(&[1, 1]), BigInt::from(2));
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
    }

    #[test]
    fn conversion_handles_huge_denominators() {
        let tiny = BigRational::new(BigInt::one(), factorial(150));
        let f = rat_to_f64(&tiny);
        assert!(f > 0.0 && f < 1e-260, "1/150! -> {f}");
        // below the subnormal range the honest answer is zero
        assert_eq!(rat_to_f64(&BigRational::new(BigInt::one(), factorial(200))), 0.0);
        let third = rat(1, 3);
        assert_eq!(rat_to_f64(&third), 1.0 / 3.0);
        assert_eq!(rat_to_f64(&rat(-7, 2)), -3.5);
        assert_eq!(rat_to_f64(&BigRational::zero()), 0.0);
    }

    #[test]
    fn parsing_round_trips() {
        assert_eq!(parse_rational("13/10").unwrap(), rat(13, 10));
        assert_eq!(parse_rational("1.3").unwrap(), rat(13, 10));
        assert_eq!(parse_rational("-2.25").unwrap(), rat(-9, 4));
        assert_eq!(parse_rational("42").unwrap(), rat_int(42));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(format_rational(&rat(1, 2)), "1/2");
        assert_eq!(format_rational(&rat_int(11)), "11");
    }

    #[test]
    fn ulp_distance() {
        assert_eq!(ulp_diff(1.0, 1.0), 0);
        assert_eq!(ulp_diff(1.0, 1.0 + f64::EPSILON), 1);
        assert!(ulp_diff(1.0, -1.0) > 1 << 60);
    }
}
