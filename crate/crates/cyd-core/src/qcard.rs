//! q- and z-cardinality of ℕ-graded finite sets.
//!
//! A finite set with weights in ℕ has q-cardinality Σ q^{w(i)} ∈ ℕ\[q\];
//! substituting q = e^{−z} gives the z-cardinality, the generating series
//! of the power sums of the weights. The worked families are the graded
//! interval \[n\]_q, the symmetric group graded by inversions (\[n\]_q!), and
//! Y(m, n) graded by area.

use crate::diagram::young_area_histogram;
use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;
use num::{BigInt, One, ToPrimitive, Zero};

/// A finite multiset of nonnegative integer weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSet {
    weights: Vec<u64>,
}

impl GradedSet {
    pub fn new(weights: Vec<u64>) -> Self {
        GradedSet { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Σ q^{w(i)} as a polynomial.
    pub fn q_cardinality(&self) -> IntegerPolynomial {
        let deg = self.weights.iter().copied().max().unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for &w in &self.weights {
            coeffs[w as usize] += 1;
        }
        IntegerPolynomial::new(coeffs)
    }
}

/// \[n\]_q = 1 + q + … + q^{n−1}, the q-cardinality of {0, …, n−1}.
pub fn q_integer(n: u64) -> Result<IntegerPolynomial> {
    if n == 0 {
        return Err(Error::domain("q_integer needs n >= 1"));
    }
    Ok(IntegerPolynomial::new(vec![BigInt::one(); n as usize]))
}

/// \[n\]_q! = Π_{k=1..n} \[k\]_q.
pub fn q_factorial(n: u64) -> Result<IntegerPolynomial> {
    if n == 0 {
        return Err(Error::domain("q_factorial needs n >= 1"));
    }
    let mut acc = IntegerPolynomial::one();
    for k in 1..=n {
        acc = &acc * &q_integer(k)?;
    }
    Ok(acc)
}

/// Σ_{α ∈ S_n} q^{inv(α)} by direct enumeration of all permutations;
/// equals \[n\]_q!. Guarded at n ≤ 8.
pub fn perm_inv_qcard(n: u64) -> Result<IntegerPolynomial> {
    if n == 0 {
        return Err(Error::domain("perm_inv_qcard needs n >= 1"));
    }
    if n > 8 {
        return Err(Error::resource(format!("permutation enumeration is capped at n <= 8, got {n}")));
    }
    let n = n as usize;
    let max_inv = n * (n - 1) / 2;
    let mut coeffs = vec![BigInt::zero(); max_inv + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm, iterative.
    let mut counters = vec![0usize; n];
    coeffs[inversions(&perm)] += 1;
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            coeffs[inversions(&perm)] += 1;
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(IntegerPolynomial::new(coeffs))
}

fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

/// |Y(m,n)|_q = Σ_a |Y(m,n,a)| q^a by the recursion
/// |Y(m,1)|_q = q^m,  |Y(m,n+1)|_q = q^m Σ_{l=1..m} |Y(l,n)|_q.
/// Support lies in degrees [m+n−1, mn].
pub fn young_qcard(m: u64, n: u64) -> Result<IntegerPolynomial> {
    if m == 0 || n == 0 {
        return Err(Error::domain("young_qcard needs m >= 1 and n >= 1"));
    }
    // row[l-1] = |Y(l, level)|_q for l = 1..=m
    let mut row: Vec<IntegerPolynomial> =
        (1..=m).map(|l| IntegerPolynomial::monomial(l as usize)).collect();
    for _level in 1..n {
        let mut next = Vec::with_capacity(m as usize);
        let mut running = IntegerPolynomial::zero();
        for l in 1..=m as usize {
            running = &running + &row[l - 1];
            // |Y(l, level+1)|_q = q^l Σ_{j<=l} |Y(j, level)|_q
            let mut coeffs = vec![BigInt::zero(); l];
            coeffs.extend(running.coeffs().iter().cloned());
            next.push(IntegerPolynomial::new(coeffs));
        }
        row = next;
    }
    Ok(row[m as usize - 1].clone())
}

/// Area histogram of Y(m,n) as a polynomial, by explicit enumeration of
/// the partitions; the oracle for [`young_qcard`]. Guarded at m, n ≤ 10.
pub fn young_qcard_oracle(m: u64, n: u64) -> Result<IntegerPolynomial> {
    if m > 10 || n > 10 {
        return Err(Error::resource(format!(
            "partition enumeration is capped at m, n <= 10, got ({m}, {n})"
        )));
    }
    let hist = young_area_histogram(m, n)?;
    let deg = hist.keys().max().copied().unwrap_or(0) as usize;
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (area, count) in hist {
        coeffs[area as usize] = BigInt::from(count);
    }
    Ok(IntegerPolynomial::new(coeffs))
}

/// z-cardinality: the polynomial evaluated at q = e^{−z}.
pub fn z_cardinality(p: &IntegerPolynomial, z: f64) -> f64 {
    p.eval_f64((-z).exp())
}

/// Power sums s_k = Σ_a coeff_a · aᵏ for k = 0..=k_max. The z-cardinality
/// is Σ_k s_k (−z)ᵏ/k!.
pub fn power_sum_coeffs(p: &IntegerPolynomial, k_max: usize) -> Vec<BigInt> {
    (0..=k_max)
        .map(|k| {
            let mut acc = BigInt::zero();
            for (a, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc += c * BigInt::from(a).pow(k as u32);
                }
            }
            acc
        })
        .collect()
}

/// Partial sum Σ_{k≤K} s_k (−z)ᵏ/k! of the power-sum expansion.
pub fn power_sum_partial(p: &IntegerPolynomial, z: f64, k_max: usize) -> f64 {
    let sums = power_sum_coeffs(p, k_max);
    let mut acc = 0.0;
    let mut zk_over_kfact = 1.0;
    for (k, s) in sums.iter().enumerate() {
        if k > 0 {
            zk_over_kfact *= -z / k as f64;
        }
        acc += s.to_f64().unwrap_or(f64::NAN) * zk_over_kfact;
    }
    acc
}

/// |lℕ|_q / |ℕ|_q = (1−q)/(1−q^l) = 1/\[l\]_q for 0 < q < 1. The two
/// closed forms are evaluated independently and must agree to 4 ulps.
pub fn q_card_multiples_ratio(l: u64, q: f64) -> Result<f64> {
    if l == 0 {
        return Err(Error::domain("q_card_multiples_ratio needs l >= 1"));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::domain(format!("q must lie in (0, 1), got {q}")));
    }
    let ratio = (1.0 - q) / (1.0 - q.powi(l as i32));
    let mut geom = 0.0;
    for j in 0..l {
        geom += q.powi(j as i32);
    }
    let alt = 1.0 / geom;
    if crate::rational::ulp_diff(ratio, alt) > 4 {
        return Err(Error::numeric(format!(
            "closed forms disagree beyond 4 ulps: {ratio} vs {alt}"
        )));
    }
    Ok(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(1).unwrap(), IntegerPolynomial::one());
        let q3 = q_integer(3).unwrap();
        assert_eq!(q3.coeffs(), &[BigInt::one(), BigInt::one(), BigInt::one()]);
        assert_eq!(q3.eval_one(), BigInt::from(3));
        assert!(q_integer(0).is_err());
    }

    #[test]
    fn q_factorials_match_inversion_enumeration() {
        let f2 = q_factorial(2).unwrap();
        assert_eq!(f2.coeff_strings(), vec!["1", "1"]);
        let f3 = q_factorial(3).unwrap();
        assert_eq!(f3.coeff_strings(), vec!["1", "2", "2", "1"]);
        for n in 1..=6 {
            assert_eq!(q_factorial(n).unwrap(), perm_inv_qcard(n).unwrap(), "n = {n}");
        }
        assert_eq!(
            q_factorial(5).unwrap().eval_one(),
            BigInt::from(120)
        );
        assert_eq!(perm_inv_qcard(4).unwrap().degree(), Some(6));
        assert!(perm_inv_qcard(9).is_err());
    }

    #[test]
    fn young_polynomials() {
        assert_eq!(young_qcard(3, 1).unwrap(), IntegerPolynomial::monomial(3));
        let y22 = young_qcard(2, 2).unwrap();
        assert_eq!(y22.coeff_strings(), vec!["0", "0", "0", "1", "1"]);
        assert_eq!(y22, young_qcard_oracle(2, 2).unwrap());
        for m in 1..=6 {
            for n in 1..=6 {
                let p = young_qcard(m, n).unwrap();
                assert_eq!(p, young_qcard_oracle(m, n).unwrap(), "({m}, {n})");
                assert_eq!(p, young_qcard(n, m).unwrap(), "symmetry ({m}, {n})");
                assert_eq!(p.lowest_degree(), Some((m + n - 1) as usize));
                assert_eq!(p.degree(), Some((m * n) as usize));
            }
        }
    }

    #[test]
    fn z_cardinality_of_y22() {
        let p = young_qcard(2, 2).unwrap();
        let z = 0.3f64;
        let expect = (-3.0 * z).exp() + (-4.0 * z).exp();
        assert!((z_cardinality(&p, z) - expect).abs() < 1e-15);
        assert_eq!(z_cardinality(&p, 0.0), 2.0);
    }

    #[test]
    fn power_sums() {
        let p = young_qcard(2, 2).unwrap();
        let s = power_sum_coeffs(&p, 2);
        assert_eq!(s, vec![BigInt::from(2), BigInt::from(7), BigInt::from(25)]);
        assert_eq!(power_sum_coeffs(&IntegerPolynomial::one(), 3), vec![
            BigInt::one(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero()
        ]);
        // Taylor partial sums converge to the evaluation
        let approx = power_sum_partial(&p, 0.5, 40);
        assert!((approx - z_cardinality(&p, 0.5)).abs() < 1e-12);
        // finite difference of z_cardinality at 0 is −s₁
        let h = 1e-6;
        let fd = (z_cardinality(&p, h) - z_cardinality(&p, -h)) / (2.0 * h);
        assert!((fd + 7.0).abs() < 1e-6);
    }

    #[test]
    fn multiples_ratio() {
        assert_eq!(q_card_multiples_ratio(1, 0.37).unwrap(), 1.0);
        let r = q_card_multiples_ratio(2, 0.5).unwrap();
        assert!((r - 1.0 / 1.5).abs() < 1e-15);
        let r = q_card_multiples_ratio(3, 0.9).unwrap();
        assert!((r - 1.0 / 2.71).abs() < 1e-12);
        assert!(q_card_multiples_ratio(3, 1.5).is_err());
        assert!(q_card_multiples_ratio(0, 0.5).is_err());
    }

    #[test]
    fn graded_set_histogram() {
        let s = GradedSet::new(vec![3, 4, 4, 0]);
        let p = s.q_cardinality();
        assert_eq!(p.coeff_strings(), vec!["1", "0", "0", "1", "2"]);
        assert_eq!(p.eval_one(), BigInt::from(4));
    }
}
