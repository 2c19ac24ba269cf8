//! Integration over the ordered k-simplex Δᵏ_x = {0 ≤ x₁ ≤ … ≤ x_k ≤ x}.
//!
//! The exact coefficient formulas here (monomial, divided-power and
//! gap-monomial families) are paired with independent oracles that compute
//! the same integrals by iterated univariate polynomial integration, so each
//! closed form can be checked by machine.

use crate::error::{Error, Result};
use crate::poly::RationalPolynomial;
use crate::rational::{binomial, factorial, rat_to_f64};
use crate::series::{KahanSum, SeriesValue};
use num::{BigInt, BigRational, One, Zero};

/// The domain Δᵏ_x itself: dimension and edge length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexDomain {
    dimension: usize,
    edge: f64,
}

impl SimplexDomain {
    pub fn new(dimension: usize, edge: f64) -> Result<Self> {
        if !(edge >= 0.0) {
            return Err(Error::domain(format!("simplex edge must be >= 0, got {edge}")));
        }
        Ok(SimplexDomain { dimension, edge })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn edge(&self) -> f64 {
        self.edge
    }

    pub fn volume(&self) -> f64 {
        simplex_volume(self.dimension, self.edge)
    }
}

/// A tuple of nonnegative integer exponents with partial-sum accessors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndex(Vec<u64>);

impl MultiIndex {
    pub fn new(a: impl Into<Vec<u64>>) -> Self {
        MultiIndex(a.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// |a|_i = a₁ + … + a_i (1-based, i ≤ len).
    pub fn partial_sum(&self, i: usize) -> u64 {
        self.0[..i].iter().sum()
    }

    /// |a| = a₁ + … + a_k.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// a! = a₁! ⋯ a_k!
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &ai in &self.0 {
            acc *= factorial(ai);
        }
        acc
    }
}

impl From<&[u64]> for MultiIndex {
    fn from(a: &[u64]) -> Self {
        MultiIndex(a.to_vec())
    }
}

/// Coefficient of xᵏ in vol(Δᵏ_x): exactly 1/k!.
pub fn simplex_volume_coeff(k: usize) -> BigRational {
    BigRational::new(BigInt::one(), factorial(k as u64))
}

/// vol(Δᵏ_x) = xᵏ/k! evaluated numerically.
pub fn simplex_volume(k: usize, x: f64) -> f64 {
    rat_to_f64(&simplex_volume_coeff(k)) * x.powi(k as i32)
}

/// Cartesian from affine coordinates: x_i = z₀ + … + z_{i-1}, edge Σ z_i.
pub fn affine_to_cartesian(z: &[f64]) -> Result<(Vec<f64>, f64)> {
    for (i, &zi) in z.iter().enumerate() {
        if !(zi >= 0.0) {
            return Err(Error::domain(format!("affine coordinate z[{i}] = {zi} is negative")));
        }
    }
    let mut xs = Vec::with_capacity(z.len().saturating_sub(1));
    let mut acc = 0.0;
    for &zi in &z[..z.len().saturating_sub(1)] {
        acc += zi;
        xs.push(acc);
    }
    let total = acc + z.last().copied().unwrap_or(0.0);
    Ok((xs, total))
}

/// Affine from Cartesian coordinates: z_i = x_{i+1} − x_i with x₀ = 0,
/// x_{k+1} = x.
pub fn cartesian_to_affine(xs: &[f64], x: f64) -> Result<Vec<f64>> {
    let mut prev = 0.0;
    for (i, &xi) in xs.iter().enumerate() {
        if !(xi >= prev) {
            return Err(Error::domain(format!(
                "cartesian coordinates must be nondecreasing: x[{i}] = {xi} < {prev}"
            )));
        }
        prev = xi;
    }
    if !(x >= prev) {
        return Err(Error::domain(format!("edge {x} is below the last coordinate {prev}")));
    }
    let mut z = Vec::with_capacity(xs.len() + 1);
    let mut last = 0.0;
    for &xi in xs {
        z.push(xi - last);
        last = xi;
    }
    z.push(x - last);
    Ok(z)
}

/// ∫_{Δᵏ_x} x₁^{a₁} ⋯ x_k^{a_k} dx = c · x^{|a|+k} with
/// c = 1 / Π_{i=1..k} (|a|_i + i).
pub fn monomial_integral_coeff(a: &MultiIndex) -> Result<BigRational> {
    if a.is_empty() {
        return Err(Error::domain("monomial integral needs at least one exponent"));
    }
    let mut denom = BigInt::one();
    let mut partial = 0u64;
    for (i, &ai) in a.entries().iter().enumerate() {
        partial += ai;
        denom *= BigInt::from(partial + i as u64 + 1);
    }
    Ok(BigRational::new(BigInt::one(), denom))
}

/// Same integral computed independently by iterated exact polynomial
/// integration; returns the coefficient of x^{|a|+k}.
pub fn monomial_integral_oracle(a: &MultiIndex) -> Result<BigRational> {
    if a.is_empty() {
        return Err(Error::domain("monomial integral needs at least one exponent"));
    }
    let mut p = RationalPolynomial::one();
    for &ai in a.entries() {
        p = p.shift(ai as usize).integral();
    }
    let deg = (a.total() + a.len() as u64) as usize;
    debug_assert_eq!(p.degree(), Some(deg));
    Ok(p.coeff(deg))
}

/// ∫_{Δᵏ_x} x₁^{(a₁)} ⋯ x_k^{(a_k)} dx = c · x^{(|a|+k)} with
/// c = Π_{i=2..k} C(|a|_i + i − 1, a_i).
pub fn divided_power_integral_coeff(a: &MultiIndex) -> Result<BigRational> {
    if a.is_empty() {
        return Err(Error::domain("divided-power integral needs at least one exponent"));
    }
    let mut acc = BigInt::one();
    let mut partial = a.entries()[0];
    for (i, &ai) in a.entries().iter().enumerate().skip(1) {
        partial += ai;
        acc *= binomial(partial + i as u64, ai);
    }
    Ok(BigRational::from_integer(acc))
}

/// ∫_{Δᵏ_x} x₁^{a₁}(x₂−x₁)^{a₂} ⋯ (x−x_k)^{a_{k+1}} dx
///   = a₁! ⋯ a_{k+1}! / (|a|+k)! · x^{|a|+k},  where a has length k+1.
pub fn gap_integral_coeff(a: &MultiIndex) -> Result<BigRational> {
    if a.is_empty() {
        return Err(Error::domain("gap integral needs at least one exponent"));
    }
    let k = a.len() as u64 - 1;
    Ok(BigRational::new(a.factorial(), factorial(a.total() + k)))
}

/// Gap-monomial integral via iterated polynomial integration: repeatedly
/// apply P ↦ ∫₀^X P(t) (X−t)^a dt expanded through the binomial theorem.
pub fn gap_integral_oracle(a: &MultiIndex) -> Result<BigRational> {
    if a.is_empty() {
        return Err(Error::domain("gap integral needs at least one exponent"));
    }
    let mut p = RationalPolynomial::monomial(BigRational::one(), a.entries()[0] as usize);
    for &ai in &a.entries()[1..] {
        let mut next = RationalPolynomial::zero();
        for j in 0..=ai {
            let c = BigRational::from_integer(binomial(ai, j));
            let sign = if j % 2 == 0 { c } else { -c };
            let piece = p.shift(j as usize).integral().shift((ai - j) as usize);
            next = &next + &piece.scale(&sign);
        }
        p = next;
    }
    let deg = (a.total() + a.len() as u64 - 1) as usize;
    debug_assert_eq!(p.degree(), Some(deg));
    Ok(p.coeff(deg))
}

fn check_recursion_range(k: u64, n: u64, what: &str) -> Result<()> {
    if k == 0 {
        return Err(Error::domain(format!("{what} needs k >= 1")));
    }
    if n <= k {
        return Err(Error::domain(format!("{what} needs n >= k+1, got k={k}, n={n}")));
    }
    Ok(())
}

/// T_{k,n} = Σ_{0<n₁<…<n_k<n} n₁⋯n_k via the recursion
/// T_{1,n} = n(n−1)/2,  T_{k+1,n} = Σ_{i=k+1}^{n−1} i·T_{k,i}.
pub fn t_number(k: u64, n: u64) -> Result<BigInt> {
    check_recursion_range(k, n, "T_{k,n}")?;
    let mut row: Vec<BigInt> = (0..=n).map(|m| BigInt::from(m * m.saturating_sub(1) / 2)).collect();
    for level in 2..=k {
        let mut next = vec![BigInt::zero(); n as usize + 1];
        for m in (level + 1)..=n {
            let mut acc = BigInt::zero();
            for i in level..m {
                acc += BigInt::from(i) * &row[i as usize];
            }
            next[m as usize] = acc;
        }
        row = next;
    }
    Ok(row[n as usize].clone())
}

/// Brute-force T_{k,n} over all integer chains 0 < n₁ < … < n_k < n.
pub fn t_number_oracle(k: u64, n: u64) -> Result<BigInt> {
    check_recursion_range(k, n, "T_{k,n}")?;
    let mut total = BigInt::zero();
    for_each_chain(k as usize, n, &mut |chain| {
        let mut prod = BigInt::one();
        for &v in chain {
            prod *= v;
        }
        total += prod;
    });
    Ok(total)
}

/// U_{k,n} = Σ_{0<n₁<…<n_k<n} n₁(n₂−n₁)⋯(n−n_k) via
/// U_{1,n} = (n−1)n(n+1)/6,  U_{k+1,n} = Σ_{i=k+1}^{n−1} (n−i)·U_{k,i}.
pub fn u_number(k: u64, n: u64) -> Result<BigInt> {
    check_recursion_range(k, n, "U_{k,n}")?;
    let mut row: Vec<BigInt> =
        (0..=n).map(|m| BigInt::from(m.saturating_sub(1) * m * (m + 1) / 6)).collect();
    for level in 2..=k {
        let mut next = vec![BigInt::zero(); n as usize + 1];
        for m in (level + 1)..=n {
            let mut acc = BigInt::zero();
            for i in level..m {
                acc += BigInt::from(m - i) * &row[i as usize];
            }
            next[m as usize] = acc;
        }
        row = next;
    }
    Ok(row[n as usize].clone())
}

/// Brute-force U_{k,n} over all integer chains.
pub fn u_number_oracle(k: u64, n: u64) -> Result<BigInt> {
    check_recursion_range(k, n, "U_{k,n}")?;
    let mut total = BigInt::zero();
    for_each_chain(k as usize, n, &mut |chain| {
        let mut prod = BigInt::from(chain[0]);
        for w in chain.windows(2) {
            prod *= w[1] - w[0];
        }
        prod *= n - chain[chain.len() - 1];
        total += prod;
    });
    Ok(total)
}

fn for_each_chain(k: usize, n: u64, f: &mut impl FnMut(&[u64])) {
    let mut chain = vec![0u64; k];
    fn rec(chain: &mut Vec<u64>, depth: usize, k: usize, n: u64, f: &mut impl FnMut(&[u64])) {
        if depth == k {
            f(chain);
            return;
        }
        let lo = if depth == 0 { 1 } else { chain[depth - 1] + 1 };
        for v in lo..n {
            chain[depth] = v;
            rec(chain, depth + 1, k, n, f);
        }
    }
    rec(&mut chain, 0, k, n, f);
}

/// V_k(x) = x^{2k+1}/(2k+1)!, the continuous limit of the U numbers.
pub fn v_polynomial(k: u64) -> Result<RationalPolynomial> {
    if k == 0 {
        return Err(Error::domain("V_k needs k >= 1"));
    }
    let c = BigRational::new(BigInt::one(), factorial(2 * k + 1));
    Ok(RationalPolynomial::monomial(c, 2 * k as usize + 1))
}

/// One step of the defining recursion: V ↦ ∫₀ˣ (x−t) V(t) dt, carried out
/// by exact polynomial integration.
pub fn v_recursion_step(v: &RationalPolynomial) -> RationalPolynomial {
    &v.integral().shift(1) - &v.shift(1).integral()
}

/// Number of compositions of n into exactly `parts` positive parts:
/// C(n−1, parts−1). Zero when parts > n.
pub fn composition_count(n: u64, parts: u64) -> Result<BigInt> {
    if n == 0 || parts == 0 {
        return Err(Error::domain("composition counts need n >= 1 and parts >= 1"));
    }
    Ok(binomial(n - 1, parts - 1))
}

/// Visits every weak composition (parts may be zero) of `total` into
/// exactly `parts` parts.
pub fn for_each_weak_composition(total: u64, parts: usize, f: &mut impl FnMut(&[u64])) {
    assert!(parts >= 1);
    let mut buf = vec![0u64; parts];
    fn rec(buf: &mut Vec<u64>, idx: usize, remaining: u64, f: &mut impl FnMut(&[u64])) {
        if idx + 1 == buf.len() {
            buf[idx] = remaining;
            f(buf);
            return;
        }
        for v in 0..=remaining {
            buf[idx] = v;
            rec(buf, idx + 1, remaining - v, f);
        }
    }
    rec(&mut buf, 0, total, f);
}

/// Visits every composition of n into positive parts (all lengths).
pub fn for_each_composition(n: u64, f: &mut impl FnMut(&[u64])) {
    assert!((1..=30).contains(&n), "composition enumeration is exponential in n");
    // Compositions of n correspond to subsets of the n-1 internal gaps.
    let gaps = n - 1;
    let mut parts = Vec::with_capacity(n as usize);
    for mask in 0u64..(1u64 << gaps) {
        parts.clear();
        let mut run = 1u64;
        for g in 0..gaps {
            if mask >> g & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        f(&parts);
    }
}

/// κ(x) = Σ_{k≥1} vol(Δᵏ_x) = Σ_{k≥1} xᵏ/k! = eˣ − 1, summed as a series
/// with a geometric tail bound.
pub fn kappa(x: f64) -> Result<SeriesValue> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!("kappa needs x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(SeriesValue::exact(0.0));
    }
    let mut acc = KahanSum::new();
    let mut term = x;
    let mut k = 1u64;
    loop {
        acc.add(term);
        let ratio = x / (k + 1) as f64;
        let next = term * ratio;
        if ratio < 0.5 && next < acc.value() / (1u64 << 60) as f64 {
            let truncation = next / (1.0 - ratio);
            let rounding = (k as f64 + 4.0) * f64::EPSILON * acc.value();
            return Ok(SeriesValue {
                value: acc.value(),
                terms_used: k as usize,
                tail_bound: truncation + rounding,
            });
        }
        term = next;
        k += 1;
    }
}

/// Σ_k ∫_{Δᵏ_x} x₁⋯x_k dx = Σ_k c_k x^{2k} with c_k the all-ones monomial
/// coefficient; the sum converges to e^{x²/2} − 1.
pub fn composition_volume_sum(x: f64) -> Result<SeriesValue> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("composition_volume_sum needs x > 0, got {x}")));
    }
    let u = x * x;
    let mut acc = KahanSum::new();
    let mut k = 1usize;
    loop {
        let coeff = monomial_integral_coeff(&MultiIndex::new(vec![1; k]))?;
        let term = rat_to_f64(&coeff) * u.powi(k as i32);
        acc.add(term);
        // Next term relative to this one: (x²/2)/(k+1).
        let ratio = u / 2.0 / (k as f64 + 1.0);
        let next = term * ratio;
        if ratio < 0.5 && next < acc.value() / (1u64 << 60) as f64 {
            let truncation = next / (1.0 - ratio);
            let rounding = (k as f64 + 4.0) * f64::EPSILON * acc.value();
            return Ok(SeriesValue {
                value: acc.value(),
                terms_used: k,
                tail_bound: truncation + rounding,
            });
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn simplex_volume_examples() {
        assert_eq!(simplex_volume(0, 5.0), 1.0);
        assert_eq!(simplex_volume(2, 3.0), 4.5);
        assert_eq!(simplex_volume_coeff(3), rat(1, 6));
        assert!(SimplexDomain::new(2, -1.0).is_err());
    }

    #[test]
    fn coordinate_charts_are_inverse() {
        let (xs, x) = affine_to_cartesian(&[0.5, 0.3, 0.2]).unwrap();
        assert_eq!(xs, vec![0.5, 0.8]);
        assert_eq!(x, 1.0);
        let z = cartesian_to_affine(&xs, x).unwrap();
        assert!(z.iter().zip([0.5, 0.3, 0.2]).all(|(a, b)| (a - b).abs() < 1e-15));

        let (xs, x) = affine_to_cartesian(&[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(xs, vec![1.0, 1.0]);
        assert_eq!(x, 1.0);

        assert_eq!(cartesian_to_affine(&[], 2.0).unwrap(), vec![2.0]);
        assert!(cartesian_to_affine(&[3.0, 1.0], 5.0).is_err());
        assert!(affine_to_cartesian(&[0.5, -0.1]).is_err());
    }

    #[test]
    fn monomial_coefficients() {
        assert_eq!(monomial_integral_coeff(&MultiIndex::new(vec![1, 1])).unwrap(), rat(1, 8));
        assert_eq!(monomial_integral_coeff(&MultiIndex::new(vec![0, 0, 0])).unwrap(), rat(1, 6));
        assert_eq!(monomial_integral_coeff(&MultiIndex::new(vec![2])).unwrap(), rat(1, 3));
        assert!(monomial_integral_coeff(&MultiIndex::new(vec![])).is_err());
    }

    #[test]
    fn oracle_agrees_on_small_indices() {
        for a in [vec![1, 1], vec![2, 3], vec![0, 4, 1], vec![3], vec![1, 0, 2, 1]] {
            let a = MultiIndex::new(a);
            assert_eq!(
                monomial_integral_coeff(&a).unwrap(),
                monomial_integral_oracle(&a).unwrap(),
                "mismatch at {a:?}"
            );
        }
    }

    #[test]
    fn divided_power_examples() {
        assert_eq!(divided_power_integral_coeff(&MultiIndex::new(vec![5])).unwrap(), rat_int(1));
        assert_eq!(divided_power_integral_coeff(&MultiIndex::new(vec![1, 1])).unwrap(), rat_int(3));
        assert_eq!(
            divided_power_integral_coeff(&MultiIndex::new(vec![0, 0, 0, 0])).unwrap(),
            rat_int(1)
        );
    }

    #[test]
    fn divided_power_consistency_with_monomial() {
        // coeff_dp / (|a|+k)! = coeff_mono / a!
        for a in [vec![1, 1], vec![2, 0, 1], vec![3, 2]] {
            let a = MultiIndex::new(a);
            let lhs = divided_power_integral_coeff(&a).unwrap()
                / BigRational::from_integer(factorial(a.total() + a.len() as u64));
            let rhs = monomial_integral_coeff(&a).unwrap()
                / BigRational::from_integer(a.factorial());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gap_examples_and_oracle() {
        assert_eq!(gap_integral_coeff(&MultiIndex::new(vec![1, 1])).unwrap(), rat(1, 6));
        assert_eq!(gap_integral_coeff(&MultiIndex::new(vec![0, 0, 0])).unwrap(), rat(1, 2));
        assert_eq!(gap_integral_coeff(&MultiIndex::new(vec![1, 1, 1])).unwrap(), rat(1, 120));
        for a in [vec![1, 1], vec![2, 3], vec![1, 0, 2], vec![4, 4]] {
            let a = MultiIndex::new(a);
            assert_eq!(gap_integral_coeff(&a).unwrap(), gap_integral_oracle(&a).unwrap());
        }
    }

    #[test]
    fn t_numbers() {
        assert_eq!(t_number(1, 5).unwrap(), BigInt::from(10));
        assert_eq!(t_number(2, 4).unwrap(), BigInt::from(11));
        assert_eq!(t_number(2, 3).unwrap(), BigInt::from(2));
        assert_eq!(t_number(2, 4).unwrap(), t_number_oracle(2, 4).unwrap());
        assert!(t_number(3, 3).is_err());
    }

    #[test]
    fn u_numbers() {
        assert_eq!(u_number(1, 3).unwrap(), BigInt::from(4));
        assert_eq!(u_number(1, 2).unwrap(), BigInt::from(1));
        assert_eq!(u_number(2, 4).unwrap(), BigInt::from(6));
        assert_eq!(u_number(2, 4).unwrap(), u_number_oracle(2, 4).unwrap());
    }

    #[test]
    fn v_polynomials_satisfy_recursion() {
        let v1 = v_polynomial(1).unwrap();
        assert_eq!(v1, RationalPolynomial::monomial(rat(1, 6), 3));
        let v2 = v_polynomial(2).unwrap();
        assert_eq!(v2, RationalPolynomial::monomial(rat(1, 120), 5));
        assert_eq!(v_recursion_step(&v1), v2);
    }

    #[test]
    fn composition_counts() {
        assert_eq!(composition_count(4, 2).unwrap(), BigInt::from(3));
        assert_eq!(composition_count(1, 1).unwrap(), BigInt::from(1));
        assert_eq!(composition_count(4, 9).unwrap(), BigInt::zero());
        let total: BigInt = (1..=4).map(|p| composition_count(4, p).unwrap()).sum();
        assert_eq!(total, BigInt::from(8));
    }

    #[test]
    fn composition_enumeration_matches_counts() {
        let mut count = 0u64;
        for_each_composition(6, &mut |parts| {
            assert_eq!(parts.iter().sum::<u64>(), 6);
            count += 1;
        });
        assert_eq!(count, 32);
    }

    #[test]
    fn kappa_is_exp_minus_one() {
        let k1 = kappa(1.0).unwrap();
        assert!((k1.value - (1f64.exp() - 1.0)).abs() <= k1.tail_bound);
        assert!((k1.value - 1.718281828).abs() < 1e-8);
        let small = kappa(1e-9).unwrap();
        assert!(small.value < 2e-9);
        assert!(kappa(-1.0).is_err());
    }

    #[test]
    fn composition_volume_sum_matches_gaussian_exponential() {
        let s = composition_volume_sum(1.0).unwrap();
        assert!((s.value - (0.5f64.exp() - 1.0)).abs() < 1e-12);
        let s2 = composition_volume_sum(2.0).unwrap();
        assert!((s2.value - (2f64.exp() - 1.0)).abs() < 1e-12);
    }
}
