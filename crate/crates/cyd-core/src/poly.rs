//! Dense univariate polynomials with exact coefficients.
//!
//! [`RationalPolynomial`] carries simplex-integral results and the `V_k`
//! family; [`IntegerPolynomial`] carries cardinality generating polynomials
//! in `q`. Both store ascending-degree coefficient vectors with no trailing
//! zeros.

use crate::rational::{rat_to_f64, self};
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial over the rationals, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    /// c · x^deg
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        RationalPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> BigRational {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Antiderivative vanishing at zero: ∫₀ˣ p(t) dt.
    pub fn integral(&self) -> Self {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j + 1] = c / BigRational::from_integer(BigInt::from(j as u64 + 1));
        }
        RationalPolynomial::new(out)
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        RationalPolynomial { coeffs: out }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        RationalPolynomial::new(out)
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{}", rational::format_rational(c))?,
                1 => write!(f, "{}*x", rational::format_rational(c))?,
                _ => write!(f, "{}*x^{}", rational::format_rational(c), deg)?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `q` with big-integer coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntegerPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// q^deg
    pub fn monomial(deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = BigInt::one();
        IntegerPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest degree with a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Ascending coefficients as decimal strings, explicit zeros included.
    /// This is the JSON wire format: the coefficients outgrow f64 quickly.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }

    /// Sum of coefficients, i.e. the evaluation at q = 1.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntegerPolynomial::new(out)
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn integral_and_shift() {
        // p = 1 + 2x, ∫ = x + x²
        let p = RationalPolynomial::new(vec![rat(1, 1), rat(2, 1)]);
        let q = p.integral();
        assert_eq!(q.coeff(1), rat(1, 1));
        assert_eq!(q.coeff(2), rat(1, 1));
        assert_eq!(q.coeff(0), rat(0, 1));
        assert_eq!(p.shift(2).coeff(3), rat(2, 1));
        assert_eq!(p.eval(&rat(3, 1)), rat(7, 1));
    }

    #[test]
    fn arithmetic_trims_trailing_zeros() {
        let p = RationalPolynomial::new(vec![rat(1, 1), rat(1, 1)]);
        let q = RationalPolynomial::new(vec![rat(0, 1), rat(-1, 1)]);
        let s = &p + &q;
        assert_eq!(s.degree(), Some(0));
        let d = &p - &p;
        assert!(d.is_zero());
        assert!(d.degree().is_none());
    }

    #[test]
    fn product_matches_hand_expansion() {
        // (1+x)(1-x) = 1 - x²
        let a = RationalPolynomial::new(vec![rat(1, 1), rat(1, 1)]);
        let b = RationalPolynomial::new(vec![rat(1, 1), rat(-1, 1)]);
        let p = &a * &b;
        assert_eq!(p.coeff(0), rat(1, 1));
        assert_eq!(p.coeff(1), rat(0, 1));
        assert_eq!(p.coeff(2), rat(-1, 1));
    }

    #[test]
    fn integer_poly_basics() {
        let q3 = IntegerPolynomial::monomial(3);
        let q4 = IntegerPolynomial::monomial(4);
        let p = &q3 + &q4;
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.lowest_degree(), Some(3));
        assert_eq!(p.eval_one(), BigInt::from(2));
        assert_eq!(p.coeff_strings(), vec!["0", "0", "0", "1", "1"]);
        let sq = &p * &p;
        assert_eq!(sq.coeff(7), BigInt::from(2));
    }
}
