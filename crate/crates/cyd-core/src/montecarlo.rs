//! Seeded Monte Carlo estimators for the analytic quantities.
//!
//! Sampling is uniform on the product-of-simplices coordinates of a path
//! space: sort independent uniforms (order statistics). Estimators are
//! deterministic functions of (seed, stream count, sample count): each
//! stream owns an independent ChaCha substream, per-stream moments are
//! accumulated in sample order, and streams are reduced in ascending index
//! order regardless of how many worker threads run them.

use crate::diagram::DirectedPath;
use crate::error::{Error, Result};
use crate::quad::adaptive_simpson;
use crate::rational::rat_to_f64;
use crate::simplex::{monomial_integral_coeff, simplex_volume, MultiIndex};
use crate::volume::vol_dn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

/// A Monte Carlo mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Address of one reproducible random stream: ChaCha12 keyed by `seed`
/// with 2⁶⁴ independent streams. Identical (seed, stream, count) always
/// reproduces identical draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RngStream {
    pub seed: u64,
    pub stream: u64,
}

impl RngStream {
    pub fn rng(&self) -> ChaCha12Rng {
        let mut rng = ChaCha12Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// Running mean and second central moment (Welford).
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn combine(a: Moments, b: Moments) -> Moments {
        if a.count == 0 {
            return b;
        }
        if b.count == 0 {
            return a;
        }
        let count = a.count + b.count;
        let delta = b.mean - a.mean;
        let mean = a.mean + delta * (b.count as f64 / count as f64);
        let m2 = a.m2 + b.m2 + delta * delta * (a.count as f64 * b.count as f64 / count as f64);
        Moments { count, mean, m2 }
    }
}

/// Runs `f` once per sample, split across `streams` substreams of `seed`,
/// and returns mean·scale with its standard error. The reduction order is
/// fixed (ascending stream index), so results are bit-stable under any
/// thread count.
pub fn estimate_streams<F>(
    samples: u64,
    seed: u64,
    streams: u64,
    scale: f64,
    f: F,
) -> Result<Estimate>
where
    F: Fn(&mut ChaCha12Rng) -> f64 + Sync,
{
    if samples == 0 {
        return Err(Error::domain("need at least one sample"));
    }
    if streams == 0 || streams > samples {
        return Err(Error::domain(format!(
            "stream count must lie in 1..=samples, got {streams} for {samples} samples"
        )));
    }
    let per = samples / streams;
    let extra = samples % streams;
    let partials: Vec<Moments> = (0..streams)
        .into_par_iter()
        .map(|s| {
            let mut rng = RngStream { seed, stream: s }.rng();
            let count = per + u64::from(s < extra);
            let mut w = Moments::default();
            for _ in 0..count {
                w.push(f(&mut rng));
            }
            w
        })
        .collect();
    let total = partials.into_iter().fold(Moments::default(), Moments::combine);
    let variance = if total.count > 1 { (total.m2 / (total.count - 1) as f64).max(0.0) } else { 0.0 };
    Ok(Estimate {
        mean: total.mean * scale,
        std_error: (variance / total.count as f64).sqrt() * scale.abs(),
        samples,
        seed,
    })
}

/// A uniform point of Δᵏ_x: k independent uniforms on [0, x], sorted.
/// The i-th coordinate has mean i·x/(k+1).
pub fn sample_simplex(k: usize, x: f64, rng: &mut ChaCha12Rng) -> Vec<f64> {
    let mut v: Vec<f64> = (0..k).map(|_| rng.random::<f64>() * x).collect();
    v.sort_unstable_by(|a, b| a.partial_cmp(b).expect("uniform draws are never NaN"));
    v
}

/// A uniform element of P_n(x, y): independent simplex points for the
/// abscissas and ordinates.
pub fn sample_path(n: usize, x: f64, y: f64, rng: &mut ChaCha12Rng) -> DirectedPath<f64> {
    let xs = sample_simplex(n - 1, x, rng);
    let ys = sample_simplex(n - 1, y, rng);
    DirectedPath::new(x, y, xs, ys).expect("sorted samples form a valid path")
}

/// Exact value of the monomial simplex integral at edge x, for reference
/// output next to the estimates.
pub fn monomial_integral_value(a: &MultiIndex, x: f64) -> Result<f64> {
    let coeff = monomial_integral_coeff(a)?;
    Ok(rat_to_f64(&coeff) * x.powi((a.total() + a.len() as u64) as i32))
}

/// Monte Carlo estimate of ∫_{Δᵏ_x} x₁^{a₁}⋯x_k^{a_k} dx: the sample mean
/// of the monomial times vol(Δᵏ_x).
pub fn mc_monomial_integral(
    a: &MultiIndex,
    x: f64,
    samples: u64,
    seed: u64,
    streams: u64,
) -> Result<Estimate> {
    if a.is_empty() {
        return Err(Error::domain("monomial integral needs at least one exponent"));
    }
    if !(x > 0.0) {
        return Err(Error::domain(format!("edge must be positive, got {x}")));
    }
    let k = a.len();
    let exponents: Vec<i32> = a.entries().iter().map(|&e| e as i32).collect();
    let scale = simplex_volume(k, x);
    estimate_streams(samples, seed, streams, scale, move |rng| {
        let pt = sample_simplex(k, x, rng);
        let mut prod = 1.0;
        for (v, &e) in pt.iter().zip(&exponents) {
            if e != 0 {
                prod *= v.powi(e);
            }
        }
        prod
    })
}

/// Monte Carlo estimate of vol_z(D_n(x,y)): the sample mean of e^{−z·area}
/// times vol(D_n(x,y)).
pub fn mc_vol_z(
    n: u64,
    x: f64,
    y: f64,
    z: f64,
    samples: u64,
    seed: u64,
    streams: u64,
) -> Result<Estimate> {
    check_path_space(n, x, y)?;
    let scale = vol_dn(n, x, y)?;
    estimate_streams(samples, seed, streams, scale, move |rng| {
        (-z * sample_path(n as usize, x, y, rng).area()).exp()
    })
}

/// Monte Carlo estimate of vol(D̂_n(x,y,w)) = vol(area⁻¹[0, w]): the
/// fraction of diagrams with area ≤ w, times vol(D_n(x,y)). Always bounded
/// by vol(D_n(x,y)).
pub fn mc_vol_hat(
    n: u64,
    x: f64,
    y: f64,
    w: f64,
    samples: u64,
    seed: u64,
    streams: u64,
) -> Result<Estimate> {
    check_path_space(n, x, y)?;
    if !(w > 0.0 && w <= x * y) {
        return Err(Error::domain(format!("threshold must lie in (0, xy], got {w}")));
    }
    let scale = vol_dn(n, x, y)?;
    estimate_streams(samples, seed, streams, scale, move |rng| {
        f64::from(sample_path(n as usize, x, y, rng).area() <= w)
    })
}

/// Monte Carlo estimate of the mean area of a uniform diagram in D_n(x,y);
/// the analytic value is xy(n+1)/(2n).
pub fn mc_mean_area(
    n: u64,
    x: f64,
    y: f64,
    samples: u64,
    seed: u64,
    streams: u64,
) -> Result<Estimate> {
    check_path_space(n, x, y)?;
    estimate_streams(samples, seed, streams, 1.0, move |rng| {
        sample_path(n as usize, x, y, rng).area()
    })
}

fn check_path_space(n: u64, x: f64, y: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("path spaces need n >= 1"));
    }
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::domain(format!("path spaces need x, y > 0, got ({x}, {y})")));
    }
    Ok(())
}

/// Deterministic reference for the two-block truncated-area volume:
/// vol(D̂_2(x,y,w)) = ∫₀^y min(max((w − x(y−y₁))/y₁, 0), x) dy₁ by
/// quadrature over the free corner height y₁.
pub fn vol_hat_two_block_quadrature(x: f64, y: f64, w: f64, tol: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::domain("quadrature oracle needs x, y > 0"));
    }
    if !(w > 0.0 && w <= x * y) {
        return Err(Error::domain(format!("threshold must lie in (0, xy], got {w}")));
    }
    let len = move |y1: f64| {
        if y1 <= 0.0 {
            return if x * (y - y1) <= w { x } else { 0.0 };
        }
        ((w - x * (y - y1)) / y1).clamp(0.0, x)
    };
    adaptive_simpson(&len, 0.0, y, tol, 1 << 20)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zvolume::{mean_area, vol_z_dn};

    #[test]
    fn simplex_samples_are_sorted_and_reproducible() {
        let mut rng = RngStream { seed: 7, stream: 0 }.rng();
        let a = sample_simplex(6, 2.0, &mut rng);
        assert!(a.windows(2).all(|w| w[0] <= w[1]));
        assert!(a.iter().all(|&v| (0.0..=2.0).contains(&v)));
        let mut rng2 = RngStream { seed: 7, stream: 0 }.rng();
        let b = sample_simplex(6, 2.0, &mut rng2);
        assert_eq!(a, b);
        let mut rng3 = RngStream { seed: 7, stream: 1 }.rng();
        assert_ne!(sample_simplex(6, 2.0, &mut rng3), a);
    }

    #[test]
    fn order_statistic_mean() {
        // E[x₁] = x/(k+1) for k = 2
        let est = estimate_streams(100_000, 11, 4, 1.0, |rng| sample_simplex(2, 1.0, rng)[0])
            .unwrap();
        assert!((est.mean - 1.0 / 3.0).abs() < 3.0 * est.std_error);
        assert!(est.std_error > 0.0);
    }

    #[test]
    fn estimates_are_deterministic() {
        let a = mc_vol_z(3, 1.0, 1.0, 1.0, 20_000, 42, 4).unwrap();
        let b = mc_vol_z(3, 1.0, 1.0, 1.0, 20_000, 42, 4).unwrap();
        assert_eq!(a, b);
        let c = mc_vol_z(3, 1.0, 1.0, 1.0, 20_000, 43, 4).unwrap();
        assert_ne!(a.mean, c.mean);
    }

    #[test]
    fn parallel_reduction_matches_serial() {
        let samples = 30_001u64;
        let streams = 7u64;
        let par = estimate_streams(samples, 5, streams, 2.0, |rng| rng.random::<f64>()).unwrap();
        // Independent serial evaluation of the same contract.
        let per = samples / streams;
        let extra = samples % streams;
        let mut total = Moments::default();
        for s in 0..streams {
            let mut rng = RngStream { seed: 5, stream: s }.rng();
            let mut w = Moments::default();
            for _ in 0..per + u64::from(s < extra) {
                w.push(rng.random::<f64>());
            }
            total = Moments::combine(total, w);
        }
        assert_eq!(par.mean, total.mean * 2.0);
    }

    #[test]
    fn zero_variance_cases_are_exact() {
        // constant integrand: a = (0)
        let est = mc_monomial_integral(&MultiIndex::new(vec![0]), 1.5, 2_000, 1, 2).unwrap();
        assert_eq!(est.mean, 1.5);
        assert_eq!(est.std_error, 0.0);
        // single-block space: only one diagram
        let est = mc_vol_z(1, 2.0, 1.5, 0.7, 2_000, 1, 2).unwrap();
        assert_eq!(est.mean, vol_z_dn(1, 2.0, 1.5, 0.7).unwrap().value);
        assert_eq!(est.std_error, 0.0);
        // z = 0 degenerates to the volume
        let est = mc_vol_z(4, 1.0, 2.0, 0.0, 2_000, 1, 2).unwrap();
        assert_eq!(est.mean, vol_dn(4, 1.0, 2.0).unwrap());
    }

    #[test]
    fn monomial_estimates_cover_exact_values() {
        let a = MultiIndex::new(vec![1, 1]);
        let est = mc_monomial_integral(&a, 1.0, 200_000, 31, 4).unwrap();
        let exact = monomial_integral_value(&a, 1.0).unwrap();
        assert!((est.mean - exact).abs() < 3.0 * est.std_error, "{est:?} vs {exact}");
    }

    #[test]
    fn mean_area_estimate_matches_formula() {
        let est = mc_mean_area(2, 1.0, 1.0, 100_000, 9, 4).unwrap();
        let exact = mean_area(2, 1.0, 1.0).unwrap();
        assert!((est.mean - exact).abs() < 3.0 * est.std_error);
    }

    #[test]
    fn vol_hat_edges() {
        // w = xy accepts everything
        let est = mc_vol_hat(3, 1.0, 1.0, 1.0, 5_000, 3, 2).unwrap();
        assert_eq!(est.mean, vol_dn(3, 1.0, 1.0).unwrap());
        // one block has area exactly xy
        let est = mc_vol_hat(1, 1.0, 1.0, 0.5, 5_000, 3, 2).unwrap();
        assert_eq!(est.mean, 0.0);
        assert!(mc_vol_hat(2, 1.0, 1.0, 1.5, 5_000, 3, 2).is_err());
    }

    #[test]
    fn vol_hat_quadrature_oracle_agrees() {
        let w = 0.75;
        let exact = vol_hat_two_block_quadrature(1.0, 1.0, w, 1e-10).unwrap();
        // closed form for x = y = 1: w − (1−w) ln(1−w) ... derived by hand:
        // ∫_{1−w}^1 (w − 1 + t)/t dt = w + (1−w) ln(1−w)
        let hand = w + (1.0 - w) * (1.0 - w).ln();
        assert!((exact - hand).abs() < 1e-9, "{exact} vs {hand}");
        let est = mc_vol_hat(2, 1.0, 1.0, w, 200_000, 12, 4).unwrap();
        assert!((est.mean - exact).abs() < 3.0 * est.std_error);
    }

    #[test]
    fn coverage_calibration() {
        // The 3-SE interval should cover the exact value in almost all of
        // 100 independent seeds.
        let a = MultiIndex::new(vec![1, 1]);
        let exact = monomial_integral_value(&a, 1.0).unwrap();
        let mut covered = 0;
        for seed in 0..100u64 {
            let est = mc_monomial_integral(&a, 1.0, 10_000, seed, 1).unwrap();
            if (est.mean - exact).abs() <= 3.0 * est.std_error {
                covered += 1;
            }
        }
        assert!(covered >= 95, "only {covered}/100 seeds covered the exact value");
    }

    #[test]
    fn input_validation() {
        assert!(estimate_streams(0, 1, 1, 1.0, |_| 0.0).is_err());
        assert!(estimate_streams(10, 1, 0, 1.0, |_| 0.0).is_err());
        assert!(estimate_streams(10, 1, 11, 1.0, |_| 0.0).is_err());
        assert!(mc_vol_z(0, 1.0, 1.0, 1.0, 100, 1, 1).is_err());
        assert!(mc_monomial_integral(&MultiIndex::new(vec![]), 1.0, 100, 1, 1).is_err());
    }
}
