//! Adaptive Simpson quadrature with an interval budget.

use crate::error::{Error, Result};

/// Integrates `f` over [a, b] to absolute tolerance `tol` by adaptive
/// Simpson subdivision with Richardson correction. The subdivision budget
/// caps runaway refinement; when it is exhausted the achieved error is
/// reported in the error instead of silently returning a bad value.
pub fn adaptive_simpson(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    max_intervals: usize,
) -> Result<f64> {
    if !(b >= a) || !tol.is_finite() || tol <= 0.0 {
        return Err(Error::domain(format!("bad quadrature request: [{a}, {b}], tol {tol}")));
    }
    if a == b {
        return Ok(0.0);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut state = State { remaining: max_intervals, leaked: 0.0 };
    let value = refine(f, a, fa, m, fm, b, fb, whole, tol, &mut state);
    if state.leaked > tol {
        return Err(Error::numeric(format!(
            "quadrature interval budget exhausted: achieved error ~{:.3e}, requested {:.3e}",
            state.leaked, tol
        )));
    }
    Ok(value)
}

struct State {
    remaining: usize,
    // Total uncorrected discrepancy of panels accepted only because the
    // budget ran out.
    leaked: f64,
}

#[allow(clippy::too_many_arguments)]
fn refine(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    state: &mut State,
) -> f64 {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    if state.remaining == 0 {
        state.leaked += delta.abs() / 15.0;
        return left + right + delta / 15.0;
    }
    state.remaining -= 1;
    refine(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, state)
        + refine(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, state)
}
