//! Truncated series evaluation with rigorous error bounds.

use serde::Serialize;

/// Numeric value of a convergent series together with how it was obtained.
///
/// `tail_bound` dominates the truncation error (geometric majorant of the
/// dropped tail) plus an allowance for the floating-point rounding of the
/// summation itself, so `value` is within `tail_bound` of the mathematical
/// sum whenever the terms were computed to relative accuracy O(ε).
#[derive(Debug, Clone, Copy, Serialize, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

impl SeriesValue {
    /// A value known in closed form: no truncation occurred.
    pub fn exact(value: f64) -> Self {
        SeriesValue { value, terms_used: 0, tail_bound: 0.0 }
    }

    /// Rescale by a constant factor (value and bound alike).
    pub fn scaled(self, c: f64) -> Self {
        SeriesValue {
            value: c * self.value,
            terms_used: self.terms_used,
            tail_bound: c.abs() * self.tail_bound + 2.0 * f64::EPSILON * (c * self.value).abs(),
        }
    }

    /// Shift by a constant (exact in the bound up to one rounding).
    pub fn offset(self, c: f64) -> Self {
        let value = self.value + c;
        SeriesValue {
            value,
            terms_used: self.terms_used,
            tail_bound: self.tail_bound + f64::EPSILON * value.abs(),
        }
    }
}

/// Compensated (Kahan) accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        // `carry` holds the negated low-order bits lost so far.
        self.sum - self.carry
    }
}

/// Relative threshold at which another term stops mattering.
const TERM_CUTOFF: f64 = 1.0 / (1u64 << 60) as f64;

/// F_k(u) = Σ_{n≥0} uⁿ / (n! (n+k)!)  for u ≥ 0.
///
/// This single kernel carries every Bessel-flavoured series in the crate:
///
/// - vol(D(x,y))                  = F₀(xy)
/// - I_k(t)                       = (t/2)^k F_k((t/2)²)
/// - ∂^k/∂y^k vol = ∫_{Δ^k_x} vol = x^k F_k(xy)
/// - ∂^k/∂x^k vol                 = y^k F_k(xy)
///
/// Terms are positive with ratio u/((n+1)(n+k+1)), which is strictly
/// decreasing, so once it drops below 1/2 the dropped tail is dominated by a
/// geometric series. Summation stops when the next term falls below
/// 2⁻⁶⁰ of the partial sum and the ratio test guarantees the bound.
pub fn bessel_kernel(k: u32, u: f64) -> SeriesValue {
    assert!(u >= 0.0, "bessel_kernel requires u >= 0");
    // term at n = 0: 1/k!
    let mut term = 1.0;
    for i in 1..=k as u64 {
        term /= i as f64;
    }
    let mut acc = KahanSum::new();
    let mut n = 0u64;
    loop {
        acc.add(term);
        let ratio = u / ((n + 1) as f64 * (n + 1 + k as u64) as f64);
        let next = term * ratio;
        n += 1;
        if ratio < 0.5 && next < TERM_CUTOFF * acc.value() {
            let truncation = next / (1.0 - ratio);
            let rounding = (n as f64 + 4.0) * f64::EPSILON * acc.value();
            return SeriesValue {
                value: acc.value(),
                terms_used: n as usize,
                tail_bound: truncation + rounding,
            };
        }
        term = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_at_zero_is_inverse_factorial() {
        assert_eq!(bessel_kernel(0, 0.0).value, 1.0);
        assert_eq!(bessel_kernel(3, 0.0).value, 1.0 / 6.0);
    }

    #[test]
    fn kernel_reproduces_bessel_i0_of_two() {
        // I₀(2) = F₀(1)
        let s = bessel_kernel(0, 1.0);
        assert!((s.value - 2.2795853023360673).abs() < 1e-14);
        assert!(s.tail_bound < 1e-13);
        assert!(s.terms_used > 5);
    }

    #[test]
    fn bound_covers_truth_at_large_argument() {
        // F₀(100) = I₀(20); reference from an independent high-precision source.
        let s = bessel_kernel(0, 100.0);
        let i0_20 = 4.355828255955353e7;
        assert!((s.value - i0_20).abs() <= s.tail_bound + 1e-7 * i0_20.abs());
    }

    #[test]
    fn kahan_beats_naive_on_adversarial_input() {
        let mut k = KahanSum::new();
        let mut naive = 0.0f64;
        k.add(1.0);
        naive += 1.0;
        for _ in 0..20 {
            k.add(1e-17);
            naive += 1e-17;
        }
        // true sum 1 + 2e-16 rounds up; naive accumulation loses every term
        assert!(k.value() > 1.0);
        assert_eq!(naive, 1.0);
    }
}
