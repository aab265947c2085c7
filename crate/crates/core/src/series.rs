//! Pochhammer symbols and generalized hypergeometric series ₚF_q.
//!
//! Infinite series are summed by the recursive term ratio with compensated
//! (Neumaier) accumulation. The stopping rule requires three consecutive
//! terms below `tol·|partial sum|`: the ₁F₂/₀F₁ series met here have terms
//! that grow before they decay, so a single small term proves nothing.
//!
//! Terminating series are summed in the binomial form
//!
//! ```text
//! Σ_{k=0}^{n} (-1)^k C(n,k) Π(αᵢ)_k / Π(βⱼ)_k · z^k
//! ```
//!
//! Sums that would lose more digits to cancellation than the configured
//! budget allows fail loudly with [`Error::CancellationBudgetExceeded`]
//! instead of returning garbage. Since every series here is normalized to
//! F(0) = 1, cancellation is measured against `max(|value|, 1)`; an extended
//! double-double path raises the usable range from |z| ≈ 100 to ≈ 1100.

use crate::dd::Dd;
use crate::error::{Error, Result};

/// Default relative tolerance for the stopping rule.
pub const DEFAULT_TOL: f64 = 1e-14;
/// Default term budget.
pub const DEFAULT_MAX_TERMS: usize = 10_000;
/// Default cancellation budget for the plain f64 path.
pub const DEFAULT_CANCELLATION_BUDGET: f64 = 1e12;
/// Cancellation budget for the double-double path (~32 digits of headroom).
pub const EXTENDED_CANCELLATION_BUDGET: f64 = 1e28;

/// Numerator/denominator parameters of a ₚF_q series.
///
/// Denominator parameters must not be zero or a negative integer (the series
/// would be undefined). For terminating use, the first numerator is the
/// designated one and must equal −n.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperParams {
    numerators: Vec<f64>,
    denominators: Vec<f64>,
}

impl HyperParams {
    pub fn new(numerators: Vec<f64>, denominators: Vec<f64>) -> Result<Self> {
        for &p in numerators.iter().chain(denominators.iter()) {
            if !p.is_finite() {
                return Err(Error::InvalidParams(format!(
                    "non-finite parameter {p}"
                )));
            }
        }
        for &b in &denominators {
            if b <= 0.0 && b == b.floor() {
                return Err(Error::InvalidParams(format!(
                    "denominator parameter {b} is zero or a negative integer"
                )));
            }
        }
        Ok(HyperParams {
            numerators,
            denominators,
        })
    }

    /// ₀F₁(b; ·)
    pub fn f01(b: f64) -> Result<Self> {
        Self::new(vec![], vec![b])
    }

    /// ₁F₂(a; b, c; ·)
    pub fn f12(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(vec![a], vec![b, c])
    }

    pub fn numerators(&self) -> &[f64] {
        &self.numerators
    }

    pub fn denominators(&self) -> &[f64] {
        &self.denominators
    }
}

/// A computed series sum with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    /// Upper bound on the truncation error under the stopping rule, floored
    /// by the rounding noise `max_term · 2ε` of the accumulation.
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    /// Largest |term| met while summing; `max_term_magnitude / |value|`
    /// quantifies cancellation.
    pub max_term_magnitude: f64,
    pub converged: bool,
}

/// Rising factorial (α)_k = α(α+1)⋯(α+k−1), with (α)_0 = 1.
///
/// Exact for small integer inputs; overflow propagates as infinity.
pub fn pochhammer(alpha: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= alpha + i as f64;
    }
    acc
}

/// Neumaier variant of compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Compensated {
    sum: f64,
    c: f64,
}

impl Compensated {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.c
    }
}

fn cancellation_check(max_term: f64, value: f64, budget: f64) -> Result<()> {
    let ratio = max_term / value.abs().max(1.0);
    if ratio > budget {
        Err(Error::CancellationBudgetExceeded { ratio, budget })
    } else {
        Ok(())
    }
}

/// Sum ₚF_q(α₁…α_p; β₁…β_q; z) with the three-small-terms stopping rule.
pub fn eval_pfq(
    params: &HyperParams,
    z: f64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesValue> {
    eval_pfq_with_budget(params, z, tol, max_terms, DEFAULT_CANCELLATION_BUDGET)
}

/// As [`eval_pfq`] with an explicit cancellation budget.
pub fn eval_pfq_with_budget(
    params: &HyperParams,
    z: f64,
    tol: f64,
    max_terms: usize,
    budget: f64,
) -> Result<SeriesValue> {
    if tol <= 0.0 {
        return Err(Error::InvalidParams("tol must be > 0".into()));
    }
    let mut term = 1.0_f64;
    let mut sum = Compensated::default();
    sum.add(term);
    let mut max_term = 1.0_f64;
    let mut small = 0usize;
    let mut terms_used = 1usize;

    for k in 0..max_terms {
        let kf = k as f64;
        let mut ratio = z / (kf + 1.0);
        for &a in &params.numerators {
            ratio *= a + kf;
        }
        for &b in &params.denominators {
            ratio /= b + kf;
        }
        term *= ratio;
        if !term.is_finite() {
            return Err(Error::NotConverged {
                max_terms,
                last_term: term,
            });
        }
        sum.add(term);
        terms_used += 1;
        max_term = max_term.max(term.abs());

        if term.abs() <= tol * sum.value().abs() {
            small += 1;
            if small == 3 {
                let value = sum.value();
                cancellation_check(max_term, value, budget)?;
                return Ok(SeriesValue {
                    value,
                    abs_error_estimate: term.abs().max(max_term * 2.0 * f64::EPSILON),
                    terms_used,
                    max_term_magnitude: max_term,
                    converged: true,
                });
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NotConverged {
        max_terms,
        last_term: term,
    })
}

/// Double-double variant of [`eval_pfq`] for badly cancelling arguments.
pub fn eval_pfq_extended(
    params: &HyperParams,
    z: f64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesValue> {
    if tol <= 0.0 {
        return Err(Error::InvalidParams("tol must be > 0".into()));
    }
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut max_term = 1.0_f64;
    let mut small = 0usize;
    let mut terms_used = 1usize;

    for k in 0..max_terms {
        let kf = k as f64;
        let mut num = Dd::from_f64(z);
        let mut den = Dd::from_f64(kf + 1.0);
        for &a in &params.numerators {
            num = num.mul_f64(a + kf);
        }
        for &b in &params.denominators {
            den = den.mul_f64(b + kf);
        }
        term = term.mul(num.div(den));
        if !term.hi.is_finite() {
            return Err(Error::NotConverged {
                max_terms,
                last_term: term.hi,
            });
        }
        sum = sum.add(term);
        terms_used += 1;
        max_term = max_term.max(term.hi.abs());

        if term.abs().hi <= tol * sum.abs().hi {
            small += 1;
            if small == 3 {
                let value = sum.to_f64();
                cancellation_check(max_term, value, EXTENDED_CANCELLATION_BUDGET)?;
                return Ok(SeriesValue {
                    value,
                    abs_error_estimate: term.hi.abs().max(max_term * 1e-30),
                    terms_used,
                    max_term_magnitude: max_term,
                    converged: true,
                });
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NotConverged {
        max_terms,
        last_term: term.hi,
    })
}

/// Plain f64 path for |z| ≤ 100, double-double beyond.
pub fn eval_pfq_auto(
    params: &HyperParams,
    z: f64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesValue> {
    if z.abs() <= 100.0 {
        eval_pfq(params, z, tol, max_terms)
    } else {
        eval_pfq_extended(params, z, tol, max_terms)
    }
}

/// Exact finite sum of a terminating series in binomial form.
///
/// The first numerator of `params` is the designated one and must equal −n;
/// the remaining numerators enter the Pochhammer products. Summed forward
/// with compensated accumulation.
pub fn eval_terminating(params: &HyperParams, n: usize, z: f64) -> Result<f64> {
    let designated = *params.numerators.first().ok_or_else(|| {
        Error::InvalidParams("terminating series needs a designated numerator".into())
    })?;
    if designated != -(n as f64) {
        return Err(Error::InvalidParams(format!(
            "designated numerator {designated} does not equal -{n}"
        )));
    }
    let rest = &params.numerators[1..];

    let mut term = 1.0_f64;
    let mut sum = Compensated::default();
    sum.add(term);
    for k in 0..n {
        let kf = k as f64;
        let mut ratio = -z * (n - k) as f64 / (kf + 1.0);
        for &a in rest {
            ratio *= a + kf;
        }
        for &b in &params.denominators {
            let d = b + kf;
            if d == 0.0 {
                return Err(Error::UndefinedDenominator { k: k + 1 });
            }
            ratio /= d;
        }
        term *= ratio;
        sum.add(term);
    }
    Ok(sum.value())
}
