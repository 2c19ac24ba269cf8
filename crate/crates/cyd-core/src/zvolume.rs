//! z-volumes of diagram spaces: ∫ e^{−z·area} over D_n(x,y) and D(x,y).
//!
//! The integrals reduce to the exact rational coefficients
//! d_{n,l} = Σ_{l₁+⋯+l_n = l} 1/Π_i (|l|_i + i), computed by a prefix-sum
//! recursion and bounded by C(l+n−1, n−1)/n!. That bound powers rigorous
//! truncation estimates for the alternating series in z.

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, rat_to_f64};
use crate::series::{KahanSum, SeriesValue};
use crate::simplex::for_each_weak_composition;
use num::{BigInt, BigRational, One, Zero};

/// Memoized table of the coefficients d_{n,l}, grown on demand.
///
/// Row n is filled from the prefix sums of row n−1:
/// d_{1,l} = 1/(l+1) and d_{n,l} = (Σ_{i≤l} d_{n−1,i}) / (n+l) for n ≥ 2.
#[derive(Debug, Default)]
pub struct DCoeffTable {
    rows: Vec<Vec<BigRational>>,
    prefixes: Vec<BigRational>,
}

impl DCoeffTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Make every d_{n,l} with n ≤ n_max, l ≤ l_max available. All rows
    /// always share the same number of columns; growth in either direction
    /// costs one rational division per new entry.
    pub fn ensure(&mut self, n_max: usize, l_max: usize) {
        assert!(n_max >= 1);
        if self.rows.is_empty() {
            self.rows.push(Vec::new());
            self.prefixes.push(BigRational::zero());
        }
        // Extend existing rows to the requested column count.
        let have = self.rows[0].len();
        for l in have..=l_max {
            for n in 1..=self.rows.len() {
                let d = if n == 1 {
                    BigRational::new(BigInt::one(), BigInt::from(l as u64 + 1))
                } else {
                    &self.prefixes[n - 2] / BigRational::from_integer(BigInt::from((n + l) as u64))
                };
                self.prefixes[n - 1] += &d;
                self.rows[n - 1].push(d);
            }
        }
        // Add full-width rows, tracking the prefix of the row above as the
        // columns are scanned.
        let cols = self.rows[0].len();
        for n in self.rows.len() + 1..=n_max {
            let mut prev_prefix = BigRational::zero();
            let mut own_prefix = BigRational::zero();
            let mut row = Vec::with_capacity(cols);
            for l in 0..cols {
                prev_prefix += &self.rows[n - 2][l];
                let d = &prev_prefix / BigRational::from_integer(BigInt::from((n + l) as u64));
                own_prefix += &d;
                row.push(d);
            }
            self.rows.push(row);
            self.prefixes.push(own_prefix);
        }
    }

    pub fn get(&self, n: u64, l: u64) -> &BigRational {
        &self.rows[n as usize - 1][l as usize]
    }
}

/// d_{n,l} by the prefix-sum recursion.
pub fn d_coeff(n: u64, l: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::domain("d_coeff needs n >= 1"));
    }
    let mut table = DCoeffTable::new();
    table.ensure(n as usize, l as usize);
    Ok(table.get(n, l).clone())
}

/// d_{n,l} by the defining sum over weak compositions of l into n parts.
/// Guarded so the enumeration stays under ~10⁷ visited entries.
pub fn d_coeff_direct(n: u64, l: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::domain("d_coeff_direct needs n >= 1"));
    }
    let count = binomial(l + n - 1, n - 1);
    if BigInt::from(n) * &count > BigInt::from(10_000_000u64) {
        return Err(Error::resource(format!(
            "direct d-coefficient sum over {count} compositions of {l} into {n} parts"
        )));
    }
    let mut total = BigRational::zero();
    for_each_weak_composition(l, n as usize, &mut |parts| {
        let mut denom = BigInt::one();
        let mut partial = 0u64;
        for (i, &li) in parts.iter().enumerate() {
            partial += li;
            denom *= BigInt::from(partial + i as u64 + 1);
        }
        total += BigRational::new(BigInt::one(), denom);
    });
    Ok(total)
}

/// The bound d_{n,l} ≤ C(l+n−1, n−1)/n! from dropping the partial sums.
pub fn d_coeff_bound(n: u64, l: u64) -> BigRational {
    BigRational::new(binomial(l + n - 1, n - 1), factorial(n))
}

/// Closed form of the first-order coefficient: d_{n,1} = n/(2·n!).
pub fn d_n1_closed(n: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(2u32) * factorial(n))
}

/// Largest |xyz| the alternating series accepts before e^{|xyz|}-sized
/// terms threaten the f64 range.
const XYZ_LIMIT: f64 = 700.0;

/// z-volume of D_n(x,y): ∫ e^{−z·area}. Equals e^{−xyz} for n = 1 and
/// x^{n−1}y^{n−1} Σ_l (l+n) d_{n,l}/(l+n−1)! (−xyz)^l for n ≥ 2.
/// At z = 0 this is vol(D_n(x,y)).
pub fn vol_z_dn(n: u64, x: f64, y: f64, z: f64) -> Result<SeriesValue> {
    if n == 0 {
        return Err(Error::domain("vol_z_dn needs n >= 1"));
    }
    if !(x >= 0.0 && y >= 0.0) {
        return Err(Error::domain(format!("vol_z_dn needs x, y >= 0, got ({x}, {y})")));
    }
    let u = x * y * z;
    if !u.is_finite() || u.abs() > XYZ_LIMIT {
        return Err(Error::numeric(format!("|xyz| = {} is outside the supported range", u.abs())));
    }
    if n == 1 {
        return Ok(SeriesValue::exact((-u).exp()));
    }
    let l_cap = 4.0 * u.abs() + 90.0;
    if (n as f64) * l_cap > 2e6 {
        return Err(Error::resource(format!(
            "d-coefficient table of ~{} entries for n = {n}, |xyz| = {}",
            (n as f64) * l_cap,
            u.abs()
        )));
    }
    let mut table = DCoeffTable::new();
    table.ensure(n as usize, l_cap as usize);

    // term_l = (l+n) d_{n,l}/(l+n−1)! · (−u)^l, stepped by the exact
    // coefficient ratio; majorant m_l = (l+n)/(n!(n−1)!l!) · |u|^l from the
    // d bound. Both start at 1/((n−1)!)².
    let c0 = BigRational::new(BigInt::from(n), factorial(n - 1) * factorial(n));
    let mut term = rat_to_f64(&c0);
    let mut majorant = term;
    let mut acc = KahanSum::new();
    let mut sum_abs = 0.0;
    let mut l = 0u64;
    let (value, terms, tail) = loop {
        acc.add(term);
        sum_abs += term.abs();
        let ratio_m = ((l + n + 1) as f64 / (l + n) as f64) * u.abs() / (l + 1) as f64;
        let next_m = majorant * ratio_m;
        if ratio_m < 0.5 && next_m <= f64::EPSILON * acc.value().abs() + 1e-290 {
            let truncation = next_m / (1.0 - ratio_m);
            let rounding = (3 * l + 8) as f64 * f64::EPSILON * sum_abs;
            break (acc.value(), l + 1, truncation + rounding);
        }
        if l as usize + 1 > l_cap as usize {
            return Err(Error::numeric(format!(
                "z-volume series for n = {n} did not settle within {l} terms"
            )));
        }
        // c_{l+1}/c_l = (l+n+1)·d_{n,l+1} / ((l+n)²·d_{n,l})
        let num = BigRational::from_integer(BigInt::from(l + n + 1)) * table.get(n, l + 1);
        let den =
            BigRational::from_integer(BigInt::from((l + n) * (l + n))) * table.get(n, l);
        term *= -u * rat_to_f64(&(num / den));
        majorant = next_m;
        l += 1;
    };
    let value_scaled = value * x.powi(n as i32 - 1) * y.powi(n as i32 - 1);
    let tail_scale = x.powi(n as i32 - 1) * y.powi(n as i32 - 1);
    Ok(SeriesValue {
        value: value_scaled,
        terms_used: terms as usize,
        tail_bound: tail * tail_scale + 2.0 * f64::EPSILON * value_scaled.abs(),
    })
}

/// Total z-volume of D(x,y):
/// e^{−xyz} + Σ_{k≥1} (k+1) (Σ_{l=0}^{k−1} d_{k−l+1,l} (−z)^l) (xy)^k/k!.
/// At z = 0 this is ρ(x,y); it is dominated by I₀(2√(xy)) for z ≥ 0.
pub fn vol_z_d(x: f64, y: f64, z: f64) -> Result<SeriesValue> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::domain(format!("vol_z_d needs x, y > 0, got ({x}, {y})")));
    }
    if !(z >= 0.0) {
        return Err(Error::domain(format!("vol_z_d needs z >= 0, got {z}")));
    }
    let u = x * y;
    let v = u * z;
    if !(u + v).is_finite() || u + v > 64.0 {
        return Err(Error::resource(format!(
            "xy(1+z) = {} exceeds the supported range of the double series",
            u + v
        )));
    }

    let mut table = DCoeffTable::new();
    let mut acc = KahanSum::new();
    let mut sum_abs = (-v).exp();
    acc.add((-v).exp());
    // b_k = (k+1)(u+v)^k/k! dominates |term_k|.
    let mut b = 1.0f64;
    let mut u_pow_over_fact = 1.0f64; // u^k / k!
    let mut k = 1u64;
    loop {
        table.ensure(k as usize + 1, k as usize - 1);
        // A_k = Σ_{l=0}^{k−1} d_{k−l+1,l} (−z)^l, stepped by exact ratios.
        let mut inner = KahanSum::new();
        let mut inner_term = rat_to_f64(table.get(k + 1, 0));
        let mut inner_abs = 0.0;
        for l in 0..k {
            inner.add(inner_term);
            inner_abs += inner_term.abs();
            if l + 1 < k {
                let ratio = table.get(k - l, l + 1) / table.get(k - l + 1, l);
                inner_term *= -z * rat_to_f64(&ratio);
            }
        }
        u_pow_over_fact *= u / k as f64;
        b *= ((k + 1) as f64 / k as f64) * (u + v) / k as f64;
        let term = (k + 1) as f64 * inner.value() * u_pow_over_fact;
        acc.add(term);
        sum_abs += (k + 1) as f64 * inner_abs * u_pow_over_fact;
        let ratio_b = ((k + 2) as f64 / (k + 1) as f64) * (u + v) / (k + 1) as f64;
        let next_b = b * ratio_b;
        if ratio_b < 0.5 && next_b <= f64::EPSILON * acc.value().abs() {
            let truncation = next_b / (1.0 - ratio_b);
            let rounding = (4 * k + 8) as f64 * f64::EPSILON * sum_abs;
            return Ok(SeriesValue {
                value: acc.value(),
                terms_used: k as usize + 1,
                tail_bound: truncation + rounding,
            });
        }
        k += 1;
    }
}

/// Σ_n vol_z(D_n(x,y)) truncated at n_max: the other summation order for
/// [`vol_z_d`], used as a cross-check.
pub fn vol_z_d_by_blocks(x: f64, y: f64, z: f64, n_max: u64) -> Result<f64> {
    let mut acc = KahanSum::new();
    for n in 1..=n_max {
        acc.add(vol_z_dn(n, x, y, z)?.value);
    }
    Ok(acc.value())
}

/// Mean area of a uniform diagram in D_n(x,y): xy·(n+1)/(2n). Follows from
/// the l = 1 coefficient d_{n,1} = n/(2·n!).
pub fn mean_area(n: u64, x: f64, y: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("mean_area needs n >= 1"));
    }
    Ok(rat_to_f64(&BigRational::new(BigInt::from(n + 1), BigInt::from(2 * n))) * x * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::volume::{rho, vol_dn};

    #[test]
    fn d_coefficients_small_values() {
        assert_eq!(d_coeff(1, 5).unwrap(), rat(1, 6));
        assert_eq!(d_coeff(2, 1).unwrap(), rat(1, 2));
        assert_eq!(d_coeff(3, 0).unwrap(), rat(1, 6));
        for n in 1..=8u64 {
            assert_eq!(d_coeff(n, 0).unwrap(), BigRational::new(BigInt::one(), factorial(n)));
        }
    }

    #[test]
    fn recursion_matches_direct_sum() {
        for n in 1..=6u64 {
            for l in 0..=8u64 {
                assert_eq!(d_coeff(n, l).unwrap(), d_coeff_direct(n, l).unwrap(), "({n}, {l})");
            }
        }
        assert_eq!(d_coeff_direct(2, 1).unwrap(), rat(1, 2));
        assert_eq!(d_coeff_direct(1, 5).unwrap(), rat(1, 6));
        assert_eq!(d_coeff_direct(3, 0).unwrap(), rat(1, 6));
    }

    #[test]
    fn direct_sum_guard() {
        assert!(d_coeff_direct(12, 40).is_err());
    }

    #[test]
    fn bound_and_first_order_closed_form() {
        for n in 1..=12u64 {
            for l in 0..=10u64 {
                let d = d_coeff(n, l).unwrap();
                assert!(d > BigRational::zero());
                assert!(d <= d_coeff_bound(n, l), "bound fails at ({n}, {l})");
            }
            assert_eq!(d_coeff(n, 1).unwrap(), d_n1_closed(n), "n = {n}");
        }
    }

    #[test]
    fn table_grows_in_both_directions() {
        let mut t = DCoeffTable::new();
        t.ensure(2, 3);
        t.ensure(5, 1);
        t.ensure(5, 6);
        let mut fresh = DCoeffTable::new();
        fresh.ensure(5, 6);
        for n in 1..=5u64 {
            for l in 0..=6u64 {
                assert_eq!(t.get(n, l), fresh.get(n, l), "({n}, {l})");
            }
        }
    }

    #[test]
    fn vol_z_reduces_to_volume_at_zero() {
        for n in 1..=8u64 {
            let vz = vol_z_dn(n, 1.3, 0.8, 0.0).unwrap();
            let v = vol_dn(n, 1.3, 0.8).unwrap();
            assert_eq!(vz.value, v, "n = {n}");
        }
    }

    #[test]
    fn single_block_z_volume_is_exponential() {
        let vz = vol_z_dn(1, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(vz.value, (-1.0f64).exp());
        assert_eq!(vz.tail_bound, 0.0);
    }

    #[test]
    fn total_z_volume_at_zero_is_rho() {
        for (x, y) in [(1.0, 1.0), (0.5, 1.7), (2.0, 2.0)] {
            let vz = vol_z_d(x, y, 0.0).unwrap();
            let r = rho(x, y).unwrap();
            assert!(
                (vz.value - r.value).abs() < 1e-12 * r.value,
                "({x}, {y}): {} vs {}",
                vz.value,
                r.value
            );
        }
    }

    #[test]
    fn summation_orders_agree() {
        let total = vol_z_d(1.0, 1.0, 1.0).unwrap();
        let by_blocks = vol_z_d_by_blocks(1.0, 1.0, 1.0, 25).unwrap();
        assert!(
            (total.value - by_blocks).abs() < 1e-10,
            "{} vs {}",
            total.value,
            by_blocks
        );
    }

    #[test]
    fn dominated_by_bessel() {
        let i0 = crate::volume::bessel_i(0, 2.0).unwrap().value;
        for z in [0.0, 0.5, 1.0, 2.0] {
            let vz = vol_z_d(1.0, 1.0, z).unwrap();
            assert!(vz.value <= i0 + vz.tail_bound + 1e-13, "z = {z}");
        }
        let v1 = vol_z_d(1.0, 1.0, 2.0).unwrap().value;
        assert!(v1 < i0);
    }

    #[test]
    fn nonincreasing_in_z() {
        let mut prev = f64::INFINITY;
        for z in [0.0, 0.5, 1.0, 2.0] {
            let v = vol_z_d(1.5, 0.9, z).unwrap().value;
            assert!(v < prev + 1e-13);
            prev = v;
        }
    }

    #[test]
    fn mean_area_values() {
        assert_eq!(mean_area(1, 2.0, 3.0).unwrap(), 6.0);
        assert_eq!(mean_area(2, 1.0, 1.0).unwrap(), 0.75);
        assert_eq!(mean_area(10, 1.0, 1.0).unwrap(), 0.55);
        assert!(mean_area(0, 1.0, 1.0).is_err());
    }

    #[test]
    fn range_guards() {
        assert!(vol_z_dn(2, 5.0, 5.0, 10.0).is_ok());
        assert!(vol_z_dn(2, 100.0, 100.0, 1.0).is_err());
        assert!(vol_z_d(10.0, 10.0, 1.0).is_err());
        assert!(vol_z_d(1.0, 1.0, -0.5).is_err());
    }
}
