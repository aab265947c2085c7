//! Bessel function J_α, its normalized companion 𝕁_α, positive zeros and
//! the interlacing check.
//!
//! 𝕁_α(x) = ₀F₁(α+1; −x²/4) shares its positive zeros with J_α but avoids
//! the (t/2)^α prefactor, which misbehaves near 0 for negative orders; all
//! zero finding therefore runs on 𝕁_α. Zeros are located by forward scanning
//! with step π/8 (consecutive Bessel zeros are never that close for the
//! orders used here) followed by bisection.

use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::series::{eval_pfq_auto, HyperParams, SeriesValue, DEFAULT_MAX_TERMS, DEFAULT_TOL};
use std::f64::consts::PI;

/// Scan start; the first positive zero of 𝕁_α exceeds 2√(α+1) ≥ 0.02 for
/// every order above −0.9999.
const SCAN_START: f64 = 1e-3;
const SCAN_STEP: f64 = PI / 8.0;
const SCAN_LIMIT: f64 = 200.0;

/// A located zero of 𝕁_α (equivalently of J_α).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroResult {
    pub order: f64,
    pub index: usize,
    pub value: f64,
    pub bracket: (f64, f64),
    pub residual: f64,
}

fn require_order(alpha: f64) -> Result<()> {
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!("order α = {alpha} must be > -1")));
    }
    Ok(())
}

/// Normalized Bessel function 𝕁_α(x) = ₀F₁(α+1; −x²/4), with diagnostics.
pub fn jj_series(alpha: f64, x: f64) -> Result<SeriesValue> {
    require_order(alpha)?;
    let params = HyperParams::f01(alpha + 1.0)?;
    eval_pfq_auto(&params, -x * x / 4.0, DEFAULT_TOL, DEFAULT_MAX_TERMS)
}

/// Normalized Bessel function 𝕁_α(x).
pub fn jj(alpha: f64, x: f64) -> Result<f64> {
    Ok(jj_series(alpha, x)?.value)
}

/// Bessel function of the first kind J_α(t) = (t/2)^α / Γ(α+1) · 𝕁_α(t).
pub fn bessel_j(alpha: f64, t: f64) -> Result<f64> {
    require_order(alpha)?;
    if t < 0.0 {
        return Err(Error::Domain(format!("argument t = {t} must be >= 0")));
    }
    if t == 0.0 {
        // exact limit of the prefactor
        return Ok(if alpha == 0.0 {
            1.0
        } else if alpha > 0.0 {
            0.0
        } else {
            f64::INFINITY
        });
    }
    Ok((t / 2.0).powf(alpha) / gamma(alpha + 1.0) * jj(alpha, t)?)
}

/// k-th positive zero j_{α,k}, by scan + bisection on 𝕁_α.
pub fn bessel_zero(alpha: f64, k: usize) -> Result<ZeroResult> {
    require_order(alpha)?;
    if k == 0 {
        return Err(Error::InvalidParams("zero index k must be >= 1".into()));
    }
    let f = |x: f64| jj(alpha, x);

    let mut lo = SCAN_START;
    let mut f_lo = f(lo)?;
    let mut found = 0usize;
    let (mut lo, mut hi) = loop {
        let hi = lo + SCAN_STEP;
        if hi > SCAN_LIMIT {
            return Err(Error::ScanExhausted {
                found,
                wanted: k,
                limit: SCAN_LIMIT,
            });
        }
        let f_hi = f(hi)?;
        if f_lo.signum() != f_hi.signum() && f_lo != 0.0 {
            found += 1;
            if found == k {
                break (lo, hi);
            }
        }
        lo = hi;
        f_lo = f_hi;
    };

    let mut f_lo = f(lo)?;
    let mut iterations = 0usize;
    while hi - lo > 1e-13 * 0.5 * (lo + hi) {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        iterations += 1;
        if iterations > 200 {
            break;
        }
    }
    let value = 0.5 * (lo + hi);
    Ok(ZeroResult {
        order: alpha,
        index: k,
        value,
        bracket: (lo, hi),
        residual: f(value)?.abs(),
    })
}

/// Verify j_{α,k} < j_{α+1,k} < j_{α,k+1} for k = 1…k_max.
pub fn check_interlacing(alpha: f64, k_max: usize) -> Result<bool> {
    require_order(alpha)?;
    let own: Vec<f64> = (1..=k_max + 1)
        .map(|k| bessel_zero(alpha, k).map(|z| z.value))
        .collect::<Result<_>>()?;
    let up: Vec<f64> = (1..=k_max)
        .map(|k| bessel_zero(alpha + 1.0, k).map(|z| z.value))
        .collect::<Result<_>>()?;
    for k in 0..k_max {
        if !(own[k] < up[k] && up[k] < own[k + 1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jj_at_zero_is_one() {
        assert_eq!(jj(0.7, 0.0).unwrap(), 1.0);
        assert_eq!(jj(-0.5, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn jj_half_is_sinc() {
        // 𝕁_{1/2}(x) = sin(x)/x
        assert!(jj(0.5, PI).unwrap().abs() < 1e-13);
        let v = jj(0.5, PI / 2.0).unwrap();
        assert!((v - 2.0 / PI).abs() < 1e-14);
        for &x in &[0.4, 1.7, 5.0, 11.0] {
            assert!((jj(0.5, x).unwrap() - x.sin() / x).abs() < 1e-13);
        }
    }

    #[test]
    fn jj_minus_half_is_cosine() {
        for &x in &[0.3, 1.0, 2.5, 7.7] {
            assert!((jj(-0.5, x).unwrap() - x.cos()).abs() < 1e-13);
        }
    }

    #[test]
    fn bessel_j_known_values() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        // J_{1/2}(t) = sqrt(2t/π) sin(t)/t
        let t = PI / 2.0;
        let expect = (2.0 * t / PI).sqrt() * t.sin() / t;
        assert!((bessel_j(0.5, t).unwrap() - expect).abs() < 1e-14);
        assert!(bessel_j(0.5, 2.0 * PI).unwrap().abs() < 1e-14);
        // J_0 reference values
        assert!((bessel_j(0.0, 1.0).unwrap() - 0.765_197_686_557_966_6).abs() < 1e-14);
        assert!((bessel_j(0.0, 5.0).unwrap() - (-0.177_596_771_314_338_3)).abs() < 1e-14);
    }

    #[test]
    fn bessel_j_rejects_negative_argument() {
        assert!(matches!(bessel_j(0.5, -1.0), Err(Error::Domain(_))));
        assert!(matches!(bessel_j(-1.0, 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn zeros_of_half_order_are_multiples_of_pi() {
        for k in 1..=4 {
            let z = bessel_zero(0.5, k).unwrap();
            assert!(
                (z.value - k as f64 * PI).abs() < 1e-10,
                "j_{{1/2,{k}}} = {}",
                z.value
            );
            assert!(z.residual < 1e-11);
        }
    }

    #[test]
    fn second_zero_of_order_zero() {
        let z = bessel_zero(0.0, 2).unwrap();
        assert!((z.value - 5.520_078_110_286_310_6).abs() < 1e-10);
    }

    #[test]
    fn zeros_match_reference_table() {
        // (α, k, j_{α,k}) — classical tables
        let cases = [
            (0.0, 1, 2.404_825_557_695_773),
            (0.0, 4, 11.791_534_439_014_282),
            (1.0, 1, 3.831_705_970_207_512),
            (1.0, 4, 13.323_691_936_314_223),
            (-0.9, 1, 0.647_830_880_750_377_3),
            (-0.9, 3, 7.187_031_390_507_711),
            (1.5, 2, 7.725_251_836_937_707),
        ];
        for &(alpha, k, expect) in &cases {
            let z = bessel_zero(alpha, k).unwrap();
            assert!(
                (z.value - expect).abs() < 1e-9,
                "j_{{{alpha},{k}}} = {} vs {expect}",
                z.value
            );
        }
    }

    #[test]
    fn zero_residuals_are_small() {
        for &alpha in &[-0.9, -0.5, 0.0, 0.5, 1.0] {
            for k in 1..=4 {
                let z = bessel_zero(alpha, k).unwrap();
                assert!(
                    z.residual <= 1e-11,
                    "residual {} at α = {alpha}, k = {k}",
                    z.residual
                );
                assert!(z.bracket.0 <= z.value && z.value <= z.bracket.1);
            }
        }
    }

    #[test]
    fn interlacing_holds() {
        assert!(check_interlacing(0.5, 3).unwrap());
        assert!(check_interlacing(0.0, 5).unwrap());
        assert!(check_interlacing(-0.5, 3).unwrap());
    }

    #[test]
    fn scan_exhaustion_reports() {
        // j_{500,1} ≈ 515 lies beyond the 200 scan cap, and the series for
        // that order stays well-conditioned across the whole scan range
        let r = bessel_zero(500.0, 1);
        assert!(matches!(r, Err(Error::ScanExhausted { .. })), "{r:?}");
    }
}
