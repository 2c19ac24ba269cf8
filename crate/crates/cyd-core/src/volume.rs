//! Volumes of diagram spaces.
//!
//! The total volume of the space of diagrams with corner (x, y) is the
//! entire function ρ(x, y) = Σ (xy)ⁿ/(n!n!) = I₀(2√(xy)). Everything in
//! this module is a relative of that series: the modified Bessel family,
//! per-block-count volumes, derivative/antiderivative shifts, the bounded
//! region variants, exact power and reciprocal series in u = xy, the
//! leading asymptote, and the continuous binomial bracket.

use crate::error::{Error, Result};
use crate::quad::adaptive_simpson;
use crate::rational::{factorial, multinomial, rat_to_f64};
use crate::series::{bessel_kernel, SeriesValue};
use crate::simplex::{for_each_composition, for_each_weak_composition};
use num::{BigInt, BigRational, One, Zero};

pub use crate::simplex::composition_volume_sum;

/// Exact rational coefficients c₀..c_N of a series in the single variable
/// u = xy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffSeq {
    coeffs: Vec<BigRational>,
}

impl CoeffSeq {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        CoeffSeq { coeffs }
    }

    /// Coefficients of ρ: c_n = 1/(n!n!).
    pub fn rho(n_max: usize) -> Self {
        let coeffs = (0..=n_max as u64)
            .map(|n| {
                let f = factorial(n);
                BigRational::new(BigInt::one(), &f * &f)
            })
            .collect();
        CoeffSeq { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Cauchy product truncated to the shorter input length.
    pub fn convolve(&self, other: &CoeffSeq) -> CoeffSeq {
        let n = self.len().min(other.len());
        let mut out = vec![BigRational::zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                out[i + j] += self.coeff(i) * other.coeff(j);
            }
        }
        CoeffSeq { coeffs: out }
    }

    /// Multiplicative inverse as a formal power series (c₀ must be nonzero).
    pub fn reciprocal(&self) -> Result<CoeffSeq> {
        if self.is_empty() || self.coeff(0).is_zero() {
            return Err(Error::domain("series with zero constant term has no reciprocal"));
        }
        let c0_inv = BigRational::one() / self.coeff(0);
        let mut out = vec![BigRational::zero(); self.len()];
        out[0] = c0_inv.clone();
        for n in 1..self.len() {
            let mut acc = BigRational::zero();
            for j in 1..=n {
                acc += self.coeff(j) * &out[n - j];
            }
            out[n] = -acc * &c0_inv;
        }
        Ok(CoeffSeq { coeffs: out })
    }
}

/// Modified Bessel function I_k(t) for integer order, t ≥ 0, by its
/// everywhere-convergent series (t/2)ᵏ Σ (t/2)²ᵐ/(m!(k+m)!).
pub fn bessel_i(k: u32, t: f64) -> Result<SeriesValue> {
    if !(t >= 0.0) {
        return Err(Error::domain(format!("bessel_i needs t >= 0, got {t}")));
    }
    let h = 0.5 * t;
    let kern = bessel_kernel(k, h * h);
    if k == 0 {
        Ok(kern)
    } else {
        Ok(kern.scaled(h.powi(k as i32)))
    }
}

/// ρ(x, y) = vol(D(x, y)) = Σ (xy)ⁿ/(n!n!) = I₀(2√(xy)).
pub fn rho(x: f64, y: f64) -> Result<SeriesValue> {
    if !(x >= 0.0 && y >= 0.0) {
        return Err(Error::domain(format!("rho needs x, y >= 0, got ({x}, {y})")));
    }
    Ok(bessel_kernel(0, x * y))
}

/// ∂ρ/∂x = Σ xⁿy^{n+1}/(n!(n+1)!) = √(y/x) I₁(2√(xy)).
pub fn rho_dx(x: f64, y: f64) -> Result<SeriesValue> {
    if !(x >= 0.0 && y >= 0.0) {
        return Err(Error::domain(format!("rho_dx needs x, y >= 0, got ({x}, {y})")));
    }
    Ok(bessel_kernel(1, x * y).scaled(y))
}

/// vol(D_n(x, y)) = x^{n-1} y^{n-1} / ((n-1)!(n-1)!): the volume of the
/// space of n-block diagrams. Decreasing in n once n > √(xy).
pub fn vol_dn(n: u64, x: f64, y: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("vol_dn needs n >= 1"));
    }
    if !(x >= 0.0 && y >= 0.0) {
        return Err(Error::domain(format!("vol_dn needs x, y >= 0, got ({x}, {y})")));
    }
    let f = factorial(n - 1);
    let coeff = rat_to_f64(&BigRational::new(BigInt::one(), &f * &f));
    Ok(coeff * x.powi(n as i32 - 1) * y.powi(n as i32 - 1))
}

/// The shift family Σ x^{n+k}yⁿ/((n+k)!n!): simultaneously the k-th
/// y-derivative of ρ, its k-fold x-antiderivative over the simplex, and
/// (x/y)^{k/2} I_k(2√(xy)) when y > 0.
pub fn f_shift(k: u32, x: f64, y: f64) -> Result<SeriesValue> {
    if !(x >= 0.0 && y >= 0.0) {
        return Err(Error::domain(format!("f_shift needs x, y >= 0, got ({x}, {y})")));
    }
    let kern = bessel_kernel(k, x * y);
    if k == 0 {
        Ok(kern)
    } else {
        Ok(kern.scaled(x.powi(k as i32)))
    }
}

/// Exact k-th x-derivative of ρ: Σ xⁿy^{n+k}/(n!(n+k)!) = (y/x)^{k/2} I_k.
pub fn deriv_x_exact(k: u32, x: f64, y: f64) -> Result<SeriesValue> {
    if !(x >= 0.0 && y >= 0.0) {
        return Err(Error::domain(format!("deriv_x_exact needs x, y >= 0, got ({x}, {y})")));
    }
    let kern = bessel_kernel(k, x * y);
    if k == 0 {
        Ok(kern)
    } else {
        Ok(kern.scaled(y.powi(k as i32)))
    }
}

/// Diagram spaces with an inequality on width and/or height.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionKind {
    /// Width = x, height = y.
    D,
    /// Width ≤ x, height = y.
    D1,
    /// Width = x, height ≤ y.
    D2,
    /// Width ≤ x, height ≤ y.
    D3,
}

/// Volumes of the bounded diagram spaces:
/// vol(D¹) = ∫₀ˣ ρ(s,y) ds = √(x/y) I₁(2√(xy)),
/// vol(D²) = √(y/x) I₁(2√(xy)),  vol(D³) = ρ(x,y) − 1.
pub fn vol_region(kind: RegionKind, x: f64, y: f64) -> Result<SeriesValue> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::domain(format!("vol_region needs x, y > 0, got ({x}, {y})")));
    }
    let u = x * y;
    Ok(match kind {
        RegionKind::D => bessel_kernel(0, u),
        RegionKind::D1 => bessel_kernel(1, u).scaled(x),
        RegionKind::D2 => bessel_kernel(1, u).scaled(y),
        RegionKind::D3 => bessel_kernel(0, u).offset(-1.0),
    })
}

/// Central-difference residuals of the two differential equations
/// (x∂x − y∂y)ρ = 0 and (∂x∂y − 1)ρ = 0; both are O(h²).
pub fn pde_residual(x: f64, y: f64, h: f64) -> Result<(f64, f64)> {
    if !(h > 0.0) || !(x - h > 0.0) || !(y - h > 0.0) {
        return Err(Error::domain(format!(
            "finite differences need 0 < h < min(x, y), got h = {h} at ({x}, {y})"
        )));
    }
    let r = |a: f64, b: f64| rho(a, b).map(|s| s.value);
    let dx = (r(x + h, y)? - r(x - h, y)?) / (2.0 * h);
    let dy = (r(x, y + h)? - r(x, y - h)?) / (2.0 * h);
    let r1 = x * dx - y * dy;
    let dxy = (r(x + h, y + h)? - r(x + h, y - h)? - r(x - h, y + h)? + r(x - h, y - h)?)
        / (4.0 * h * h);
    let r2 = dxy - r(x, y)?;
    Ok((r1, r2))
}

/// k-th x-derivative of ρ by its integral representation
/// (1/π)(y/x)^{k/2} ∫₀^π e^{2√(xy)cosθ} cos(kθ) dθ, evaluated by adaptive
/// Simpson quadrature. The tolerance is absolute for order-one values and
/// relative for large ones.
pub fn integral_rep(k: u32, x: f64, y: f64, tol: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::domain(format!("integral_rep needs x, y > 0, got ({x}, {y})")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let z = 2.0 * (x * y).sqrt();
    let g = move |theta: f64| (z * theta.cos()).exp() * (k as f64 * theta).cos();
    // The integrand peaks at e^z; scale the absolute tolerance so the
    // request stays meaningful for large arguments.
    let scale = z.exp().max(1.0);
    let integral = adaptive_simpson(&g, 0.0, std::f64::consts::PI, tol * scale, 1 << 20)?;
    Ok((y / x).powf(0.5 * k as f64) / std::f64::consts::PI * integral)
}

/// Leading large-argument behaviour of the k-th x-derivative of ρ:
/// (1/(2√π)) x^{-k/2-1/4} y^{k/2-1/4} e^{2√(xy)}. The rational prefactor
/// is 1 for every k; the relative error decays like (4k²−1)/(16√(xy)).
pub fn asymptote(k: u32, x: f64, y: f64) -> f64 {
    let kk = k as f64;
    1.0 / (2.0 * std::f64::consts::PI.sqrt())
        * x.powf(-0.5 * kk - 0.25)
        * y.powf(0.5 * kk - 0.25)
        * (2.0 * (x * y).sqrt()).exp()
}

/// Exact coefficients of ρᵏ in u = xy up to degree `n_max`. The coefficient
/// of uⁿ is Σ_{n₁+⋯+n_k=n} multinomial(n; n₁..n_k)² / (n!n!).
pub fn power_series_coeffs(k: u64, n_max: usize) -> Result<CoeffSeq> {
    if k == 0 {
        return Err(Error::domain("power_series_coeffs needs k >= 1"));
    }
    let base = CoeffSeq::rho(n_max);
    let mut acc = base.clone();
    for _ in 1..k {
        acc = acc.convolve(&base);
    }
    Ok(acc)
}

/// Coefficient of uⁿ in ρᵏ computed directly from the squared-multinomial
/// sum; an oracle for [`power_series_coeffs`].
pub fn power_coeff_direct(k: u64, n: u64) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::domain("power coefficients need k >= 1"));
    }
    if n == 0 {
        return Ok(BigRational::one());
    }
    let mut total = BigInt::zero();
    for_each_weak_composition(n, k as usize, &mut |parts| {
        let m = multinomial(parts);
        total += &m * &m;
    });
    let f = factorial(n);
    Ok(BigRational::new(total, &f * &f))
}

/// Exact coefficients of 1/ρ in u = xy up to degree `n_max`.
pub fn reciprocal_series_coeffs(n_max: usize) -> CoeffSeq {
    CoeffSeq::rho(n_max).reciprocal().expect("rho has unit constant term")
}

/// Coefficient of uⁿ in 1/ρ from the signed compositions formula
/// Σ_{k≥1} Σ_{n₁+⋯+n_k=n, nᵢ≥1} (−1)ᵏ multinomial(n; n₁..n_k)² / (n!n!);
/// an oracle for [`reciprocal_series_coeffs`].
pub fn reciprocal_coeff_direct(n: u64) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let mut total = BigInt::zero();
    for_each_composition(n, &mut |parts| {
        let m = multinomial(parts);
        let sq = &m * &m;
        if parts.len() % 2 == 1 {
            total -= sq;
        } else {
            total += sq;
        }
    });
    let f = factorial(n);
    BigRational::new(total, &f * &f)
}

/// Continuous binomial bracket {x \ s} = 2ρ(s, x−s) + (x/(x−s))·∂ρ/∂x(s, x−s).
///
/// The second summand equals x·Σ (s(x−s))ⁿ/(n!(n+1)!), which extends
/// analytically to s = x where the bracket takes the value 2 + x.
pub fn cont_binomial(x: f64, s: f64) -> Result<f64> {
    if !(s >= 0.0 && s <= x) {
        return Err(Error::domain(format!("cont_binomial needs 0 <= s <= x, got s={s}, x={x}")));
    }
    let u = s * (x - s);
    Ok(2.0 * bessel_kernel(0, u).value + x * bessel_kernel(1, u).value)
}
