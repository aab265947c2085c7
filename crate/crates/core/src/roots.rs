//! Threshold functionals of the Bessel integral and their transcendental
//! roots.
//!
//! For α > −1, β < α+1 the integral ∫₀ˣ t^{−β} J_α(t) dt has the closed form
//!
//! ```text
//! x^{α−β+1} / [2^α (α−β+1) Γ(α+1)] · ₁F₂((α−β+1)/2; α+1, (α−β+3)/2; −x²/4)
//! ```
//!
//! The functional A(β) evaluates it at x = j_{α,2}; its unique zero β(α)
//! (for −1 < α ≤ 1/2) is the exact positivity threshold, bounded by
//! max(−α−1, −1/2) < β(α) ≤ −(α+1)/3. G(α) = A(α; β=α) has the unique zero
//! ᾱ ∈ (−1/2, −1/4].
//!
//! Root solving uses the closed form (fast, smooth in β); the adaptive
//! quadrature route exists as an independent cross-check and is what the
//! oracle suite compares against.

use crate::bessel::bessel_zero;
use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::quad;
use crate::series::{eval_pfq_auto, HyperParams, DEFAULT_MAX_TERMS, DEFAULT_TOL};
use std::collections::HashMap;

/// Default bracket-width tolerance for the root solvers.
pub const DEFAULT_ROOT_TOL: f64 = 1e-9;

/// Inset from the open bracket endpoints.
const ENDPOINT_INSET: f64 = 1e-6;

/// A solved root with its final bracket and residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub value: f64,
    pub bracket: (f64, f64),
    pub residual: f64,
    pub iterations: usize,
}

/// One row of the β(α) comparison table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaTableRow {
    pub alpha: f64,
    pub beta_of_alpha: f64,
    /// −(α+1)/3
    pub upper_bound: f64,
    /// upper_bound − beta_of_alpha
    pub gap: f64,
}

fn require_integral_domain(alpha: f64, beta: f64, x: f64) -> Result<()> {
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!("α = {alpha} must be > -1")));
    }
    if !(beta < alpha + 1.0) {
        return Err(Error::Domain(format!(
            "β = {beta} must be < α+1 = {}",
            alpha + 1.0
        )));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("x = {x} must be > 0")));
    }
    Ok(())
}

/// ∫₀ˣ t^{−β} J_α(t) dt by termwise integration (closed ₁F₂ form).
pub fn integral_closed_form(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    require_integral_domain(alpha, beta, x)?;
    let e = alpha - beta + 1.0;
    let params = HyperParams::f12(e / 2.0, alpha + 1.0, e / 2.0 + 1.0)?;
    let f = eval_pfq_auto(&params, -x * x / 4.0, DEFAULT_TOL, DEFAULT_MAX_TERMS)?;
    Ok(x.powf(e) / (2.0f64.powf(alpha) * e * gamma(alpha + 1.0)) * f.value)
}

/// ∫₀ˣ t^{−β} J_α(t) dt by termwise power-series integration on [0, ε] and
/// adaptive Gauss–Kronrod on [ε, x]; the independent oracle route.
pub fn integral_quadrature(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    require_integral_domain(alpha, beta, x)?;
    let eps = 0.5f64.min(x / 4.0);

    // Σ_k (−1)^k / (k! Γ(α+k+1) 2^{α+2k}) · ε^{α−β+2k+1} / (α−β+2k+1)
    let mut head = 0.0f64;
    let mut coef = 1.0 / (gamma(alpha + 1.0) * 2.0f64.powf(alpha));
    let mut pow = eps.powf(alpha - beta + 1.0);
    let mut k = 0usize;
    loop {
        let term = coef * pow / (alpha - beta + 2.0 * k as f64 + 1.0);
        head += term;
        if term.abs() <= 1e-17 * head.abs().max(1e-30) || k > 300 {
            break;
        }
        coef /= -4.0 * (k as f64 + 1.0) * (alpha + k as f64 + 1.0);
        pow *= eps * eps;
        k += 1;
    }

    let f = |t: f64| Ok(t.powf(-beta) * crate::bessel::bessel_j(alpha, t)?);
    let tail = quad::adaptive(&f, eps, x, 1e-11)?;
    Ok(head + tail)
}

/// A(β) = ∫₀^{j_{α,2}} t^{−β} J_α(t) dt for −1 < α ≤ 1/2, −1/2 ≤ β < α+1.
///
/// The lower endpoint is admitted: A(−1/2) is where the α = 1/2 threshold
/// sits exactly.
pub fn a_function(alpha: f64, beta: f64) -> Result<f64> {
    if !(alpha > -1.0 && alpha <= 0.5) {
        return Err(Error::Domain(format!("α = {alpha} must lie in (-1, 1/2]")));
    }
    if !(beta >= -0.5 && beta < alpha + 1.0) {
        return Err(Error::Domain(format!(
            "β = {beta} must lie in [-1/2, α+1)"
        )));
    }
    let j2 = bessel_zero(alpha, 2)?.value;
    integral_closed_form(alpha, beta, j2)
}

/// G(α) = ∫₀^{j_{α,2}} t^{−α} J_α(t) dt for α > −1/2.
pub fn g_function(alpha: f64) -> Result<f64> {
    if !(alpha > -0.5) {
        return Err(Error::Domain(format!("α = {alpha} must be > -1/2")));
    }
    let j2 = bessel_zero(alpha, 2)?.value;
    integral_closed_form(alpha, alpha, j2)
}

/// Brent's method on a bracketed sign change; never leaves the bracket.
fn brent<F>(f: &F, a0: f64, b0: f64, fa0: f64, fb0: f64, xtol: f64) -> Result<RootResult>
where
    F: Fn(f64) -> Result<f64>,
{
    let (mut a, mut b, mut fa, mut fb) = (a0, b0, fa0, fb0);
    if fa == 0.0 {
        return Ok(RootResult {
            value: a,
            bracket: (a, a),
            residual: 0.0,
            iterations: 0,
        });
    }
    if fa.signum() == fb.signum() {
        return Err(Error::BracketFailed {
            lo: a,
            hi: b,
            f_lo: fa,
            f_hi: fb,
        });
    }
    let (mut c, mut fc) = (a, fa);
    let (mut d, mut e) = (b - a, b - a);
    for iter in 1..=200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(RootResult {
                value: b,
                bracket: (b.min(c), b.max(c)),
                residual: fb.abs(),
                iterations: iter,
            });
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // inverse quadratic / secant step
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 {
            d
        } else {
            tol1.copysign(xm)
        };
        fb = f(b)?;
    }
    Ok(RootResult {
        value: b,
        bracket: (b.min(c), b.max(c)),
        residual: fb.abs(),
        iterations: 200,
    })
}

/// Bracket a sign change on [lo, hi], sampling the interior first and then
/// expanding `lo` outward by a few multiples of δ. The outward expansion
/// covers roots that sit exactly on the a-priori bound (β(1/2) = −1/2 does).
fn bracket_and_solve<F>(f: &F, lo: f64, hi: f64, xtol: f64) -> Result<RootResult>
where
    F: Fn(f64) -> Result<f64>,
{
    let f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_hi == 0.0 {
        return Ok(RootResult {
            value: hi,
            bracket: (hi, hi),
            residual: 0.0,
            iterations: 0,
        });
    }
    if f_lo.signum() != f_hi.signum() || f_lo == 0.0 {
        return brent(f, lo, hi, f_lo, f_hi, xtol);
    }
    const PROBES: usize = 64;
    if hi > lo {
        let mut prev = (lo, f_lo);
        for i in 1..=PROBES {
            let x = lo + (hi - lo) * i as f64 / PROBES as f64;
            let fx = f(x)?;
            if fx.signum() != prev.1.signum() {
                return brent(f, prev.0, x, prev.1, fx, xtol);
            }
            prev = (x, fx);
        }
    }
    let mut outer = (lo, f_lo);
    for i in 1..=PROBES {
        let x = lo - 8.0 * ENDPOINT_INSET * i as f64;
        let fx = f(x)?;
        if fx.signum() != outer.1.signum() {
            return brent(f, x, outer.0, fx, outer.1, xtol);
        }
        outer = (x, fx);
    }
    Err(Error::BracketFailed {
        lo,
        hi,
        f_lo,
        f_hi,
    })
}

/// Solve A(β) = 0 for the positivity threshold β(α), −1 < α ≤ 1/2.
///
/// The initial bracket (max(−α−1, −1/2) + δ, −(α+1)/3] comes from the
/// a-priori bounds on β(α); a bracketing failure would contradict the
/// existence/uniqueness theory and is reported as such.
pub fn beta_root(alpha: f64, tol: f64) -> Result<RootResult> {
    if !(alpha > -1.0 && alpha <= 0.5) {
        return Err(Error::Domain(format!("α = {alpha} must lie in (-1, 1/2]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("tol must be > 0".into()));
    }
    let j2 = bessel_zero(alpha, 2)?.value;
    let f = |beta: f64| integral_closed_form(alpha, beta, j2);
    let lo = (-alpha - 1.0).max(-0.5) + ENDPOINT_INSET;
    let hi = -(alpha + 1.0) / 3.0;
    bracket_and_solve(&f, lo, hi, tol)
}

/// Solve G(α) = 0 for ᾱ on (−1/2, −1/4].
pub fn alpha_bar(tol: f64) -> Result<RootResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain("tol must be > 0".into()));
    }
    let f = |alpha: f64| g_function(alpha);
    bracket_and_solve(&f, -0.5 + ENDPOINT_INSET, -0.25, tol)
}

/// β(α) rows with the −(α+1)/3 bound and the gap; deterministic.
pub fn beta_table(alphas: &[f64]) -> Result<Vec<BetaTableRow>> {
    alphas
        .iter()
        .map(|&alpha| {
            let root = beta_root(alpha, DEFAULT_ROOT_TOL)?;
            let upper_bound = -(alpha + 1.0) / 3.0;
            Ok(BetaTableRow {
                alpha,
                beta_of_alpha: root.value,
                upper_bound,
                gap: upper_bound - root.value,
            })
        })
        .collect()
}

/// Small cache for j_{α,2}, keyed by the bit pattern of α.
#[derive(Debug, Default)]
pub struct ZeroCache {
    map: HashMap<u64, f64>,
}

impl ZeroCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn j2(&mut self, alpha: f64) -> Result<f64> {
        if let Some(&v) = self.map.get(&alpha.to_bits()) {
            return Ok(v);
        }
        let v = bessel_zero(alpha, 2)?.value;
        self.map.insert(alpha.to_bits(), v);
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn closed_form_small_x_expansion() {
        // ∫₀ˣ J₀ = x − x³/12 + x⁵/320 − x⁷/16128 + …
        let x = 0.1;
        let got = integral_closed_form(0.0, 0.0, x).unwrap();
        let expect = x - x.powi(3) / 12.0 + x.powi(5) / 320.0 - x.powi(7) / 16128.0;
        assert!((got - expect).abs() < 1e-13, "diff {:e}", got - expect);
    }

    #[test]
    fn closed_form_vanishes_at_full_sine_period() {
        // ∫₀^{2π} √t J_{1/2}(t) dt = √(2/π) ∫₀^{2π} sin t dt = 0
        let got = integral_closed_form(0.5, -0.5, 2.0 * PI).unwrap();
        assert!(got.abs() < 1e-10, "got {got}");
        let via_quad = integral_quadrature(0.5, -0.5, 2.0 * PI).unwrap();
        assert!(via_quad.abs() < 1e-9, "got {via_quad}");
    }

    #[test]
    fn quadrature_matches_closed_form() {
        // frozen cross-checks, including a negative-order path
        let cases = [
            (0.0, 0.0, 1.0, 0.919_730_410_09),
            (-0.5, -0.25, 5.0, -0.139_201_552_302),
            (0.3, -0.2, 8.0, 1.042_051_031_54),
        ];
        for &(alpha, beta, x, frozen) in &cases {
            let cf = integral_closed_form(alpha, beta, x).unwrap();
            let q = integral_quadrature(alpha, beta, x).unwrap();
            assert!((cf - frozen).abs() < 1e-9, "closed {cf} vs {frozen}");
            assert!((cf - q).abs() < 1e-8, "closed {cf} vs quad {q}");
        }
    }

    #[test]
    fn a_function_signs() {
        assert!(a_function(0.5, -0.5).unwrap().abs() < 1e-10);
        let a00 = a_function(0.0, 0.0).unwrap();
        assert!((a00 - 0.668_845_832_318).abs() < 1e-9);
        let neg = a_function(0.0, -0.45).unwrap();
        assert!((neg - (-0.202_682_899_511)).abs() < 1e-9);
    }

    #[test]
    fn g_function_values() {
        // G(1/2) = √(2/π) · Si(2π)
        let g = g_function(0.5).unwrap();
        assert!((g - 1.131_521_247_474_47).abs() < 1e-10, "got {g}");
        assert!(g_function(-0.25).unwrap() > 0.0);
        assert!(g_function(-0.45).unwrap() < 0.0);
    }

    #[test]
    fn beta_root_exact_endpoint() {
        let r = beta_root(0.5, 1e-10).unwrap();
        assert!((r.value - (-0.5)).abs() < 1e-8, "β(1/2) = {}", r.value);
    }

    #[test]
    fn beta_root_reference_values() {
        // 12-digit reference roots computed independently at high precision
        let refs = [
            (-0.5, -0.191_556_220_438),
            (0.0, -0.354_509_621_245),
            (0.4, -0.471_996_139_683),
        ];
        for &(alpha, expect) in &refs {
            let r = beta_root(alpha, 1e-10).unwrap();
            assert!(
                (r.value - expect).abs() < 1e-8,
                "β({alpha}) = {} vs {expect}",
                r.value
            );
            assert!(r.residual <= 1e-9);
            assert!(r.bracket.0 <= r.value && r.value <= r.bracket.1);
        }
    }

    #[test]
    fn beta_root_near_left_limit() {
        let r = beta_root(-0.99, 1e-10).unwrap();
        assert!((r.value - (-0.004_246_842_866)).abs() < 1e-8);
        assert!(r.value > -0.01 && r.value < 0.0);
    }

    #[test]
    fn alpha_bar_matches_reference() {
        let r = alpha_bar(1e-10).unwrap();
        assert!(
            (r.value - (-0.269_387_028_589)).abs() < 1e-7,
            "ᾱ = {}",
            r.value
        );
        assert!(r.residual <= 1e-9);
        // fixed-point consistency: β(ᾱ) = ᾱ
        let fixed = beta_root(r.value, 1e-10).unwrap();
        assert!((fixed.value - r.value).abs() < 1e-6);
    }

    #[test]
    fn beta_table_rows_and_bounds() {
        let alphas: Vec<f64> = (0..10).map(|i| -0.5 + 0.1 * i as f64).collect();
        let rows = beta_table(&alphas).unwrap();
        assert_eq!(rows.len(), 10);
        for row in &rows {
            // the distance peaks at 0.02601, near α = −0.3
            assert!(row.gap <= 0.0261, "gap {} too large", row.gap);
            assert!(row.beta_of_alpha <= row.upper_bound);
            assert!(row.beta_of_alpha > (-row.alpha - 1.0).max(-0.5));
        }
        // gap shrinks toward α = 1/2
        assert!((rows[9].gap - 0.0053).abs() < 5e-4);
    }

    #[test]
    fn domain_guards() {
        assert!(matches!(beta_root(0.6, 1e-9), Err(Error::Domain(_))));
        assert!(matches!(a_function(0.0, -0.6), Err(Error::Domain(_))));
        assert!(matches!(g_function(-0.5), Err(Error::Domain(_))));
        assert!(matches!(
            integral_closed_form(0.0, 1.5, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn zero_cache_consistency() {
        let mut cache = ZeroCache::new();
        let first = cache.j2(0.5).unwrap();
        let second = cache.j2(0.5).unwrap();
        assert_eq!(first, second);
        assert!((first - 2.0 * PI).abs() < 1e-10);
    }
}
