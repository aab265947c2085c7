//! Saalschütz and Whipple identities for terminating series, and the
//! positivity certification of the Saalschützian ₄F₃ family
//!
//! ```text
//! Θ_n = ₄F₃[−n, n+α₁, α₂, α₃; β₁, β₂, β₃]   (z = 1)
//! ```
//!
//! Whipple's transformation recasts Θ_n as Ω_n / [(1+σ)_n (β₃)_n] where Ω_n
//! is a k-sum free of alternating-sign factors except its first term, with
//! σ = α₁ + α₂ − β₃. Under the hypothesis block
//!
//! ```text
//! (A1)  1 + α₁ + α₂ + α₃ = β₁ + β₂ + β₃          (Saalschützian balance)
//! (A2)  0 < α₂ < β₃ ≤ 2 + α₁
//! (A3)  0 < α₃ < min(β₁, β₂)
//! (A4)  (1+α₁) α₂ α₃ ≤ β₁ β₂ β₃
//! ```
//!
//! one has Θ₁ ≥ 0 and Θ_n > 0 for n ≥ 2; [`certify_theta_positive`] checks
//! this numerically. The exact-rational twins in [`rational`] are what the
//! property suites use: the direct sums at n = 30..50 cancel through ~10¹⁶,
//! far beyond f64.

use crate::error::{Error, Result};
use crate::exact::{pochhammer_rat, Rat};
use crate::series::{eval_terminating, pochhammer, Compensated, HyperParams};
use num_traits::{One, Zero};

/// Absolute tolerance on the Saalschützian balance (A1).
pub const BALANCE_TOL: f64 = 1e-12;

/// The six parameters of a Saalschützian terminating ₄F₃, plus σ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaalschutzParams {
    pub alpha1: f64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub beta3: f64,
    sigma: f64,
}

impl SaalschutzParams {
    /// Enforces the balance (A1) to within [`BALANCE_TOL`] and derives
    /// σ = α₁ + α₂ − β₃.
    pub fn new(
        alpha1: f64,
        alpha2: f64,
        alpha3: f64,
        beta1: f64,
        beta2: f64,
        beta3: f64,
    ) -> Result<Self> {
        let gap = 1.0 + alpha1 + alpha2 + alpha3 - (beta1 + beta2 + beta3);
        if !gap.is_finite() || gap.abs() > BALANCE_TOL {
            return Err(Error::InvalidParams(format!(
                "Saalschützian balance violated: 1+Σα−Σβ = {gap:e}"
            )));
        }
        Ok(SaalschutzParams {
            alpha1,
            alpha2,
            alpha3,
            beta1,
            beta2,
            beta3,
            sigma: alpha1 + alpha2 - beta3,
        })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }
}

/// Evaluation of the four hypothesis conditions, inequalities exactly as
/// written (strict vs. non-strict).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaConditionReport {
    pub a1_holds: bool,
    pub a2_holds: bool,
    pub a3_holds: bool,
    pub a4_holds: bool,
    pub all_hold: bool,
}

/// Check (A1)–(A4) with exact inequality semantics.
pub fn check_lemma_conditions(p: &SaalschutzParams) -> LemmaConditionReport {
    let a1 = (1.0 + p.alpha1 + p.alpha2 + p.alpha3 - (p.beta1 + p.beta2 + p.beta3)).abs()
        <= BALANCE_TOL;
    let a2 = 0.0 < p.alpha2 && p.alpha2 < p.beta3 && p.beta3 <= 2.0 + p.alpha1;
    let a3 = 0.0 < p.alpha3 && p.alpha3 < p.beta1.min(p.beta2);
    let a4 = (1.0 + p.alpha1) * p.alpha2 * p.alpha3 <= p.beta1 * p.beta2 * p.beta3;
    LemmaConditionReport {
        a1_holds: a1,
        a2_holds: a2,
        a3_holds: a3,
        a4_holds: a4,
        all_hold: a1 && a2 && a3 && a4,
    }
}

fn slack(x: f64, y: f64) -> f64 {
    1e-12 * (1.0 + x.abs() + y.abs())
}

/// (A1)–(A4) with ε-slack on every inequality, so that measure-zero boundary
/// configurations (where the conclusion still holds degenerately) are
/// admitted by the certification guards.
pub(crate) fn conditions_hold_with_slack(p: &SaalschutzParams) -> bool {
    let a1 = (1.0 + p.alpha1 + p.alpha2 + p.alpha3 - (p.beta1 + p.beta2 + p.beta3)).abs()
        <= BALANCE_TOL;
    let a2 = p.alpha2 > -slack(p.alpha2, 0.0)
        && p.alpha2 < p.beta3 + slack(p.alpha2, p.beta3)
        && p.beta3 <= 2.0 + p.alpha1 + slack(p.beta3, p.alpha1);
    let m = p.beta1.min(p.beta2);
    let a3 = p.alpha3 > -slack(p.alpha3, 0.0) && p.alpha3 < m + slack(p.alpha3, m);
    let lhs = (1.0 + p.alpha1) * p.alpha2 * p.alpha3;
    let rhs = p.beta1 * p.beta2 * p.beta3;
    let a4 = lhs <= rhs + slack(lhs, rhs);
    a1 && a2 && a3 && a4
}

/// Saalschütz's summation of a balanced terminating ₃F₂:
/// (β₁−α₂)_n (β₂−α₂)_n / [(β₁)_n (β₂)_n].
pub fn saalschutz_sum(n: usize, alpha1: f64, alpha2: f64, beta1: f64, beta2: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    let gap = 1.0 + alpha1 + alpha2 - (beta1 + beta2);
    if gap.abs() > BALANCE_TOL {
        return Err(Error::InvalidParams(format!(
            "balance violated: 1+α₁+α₂−β₁−β₂ = {gap:e}"
        )));
    }
    let d1 = pochhammer(beta1, n);
    let d2 = pochhammer(beta2, n);
    if d1 == 0.0 || d2 == 0.0 {
        return Err(Error::UndefinedDenominator { k: n });
    }
    Ok(pochhammer(beta1 - alpha2, n) * pochhammer(beta2 - alpha2, n) / (d1 * d2))
}

fn theta_params(p: &SaalschutzParams, n: usize) -> Result<HyperParams> {
    HyperParams::new(
        vec![-(n as f64), n as f64 + p.alpha1, p.alpha2, p.alpha3],
        vec![p.beta1, p.beta2, p.beta3],
    )
}

/// Θ_n by direct terminating summation at z = 1.
pub fn theta_direct(p: &SaalschutzParams, n: usize) -> Result<f64> {
    eval_terminating(&theta_params(p, n)?, n, 1.0)
}

/// The factor (σ)_k (1+σ/2)_k / (σ/2)_k, which must be read as 1 at k = 0
/// and (1+σ)_{k−1} (2k+σ) for k ≥ 1.
fn sigma_factor(sigma: f64, k: usize) -> f64 {
    if k == 0 {
        1.0
    } else {
        pochhammer(1.0 + sigma, k - 1) * (2.0 * k as f64 + sigma)
    }
}

/// A_{n,k}: the alternating-capable part of the k-th Ω_n term.
fn omega_term_a(p: &SaalschutzParams, n: usize, k: usize) -> f64 {
    let kf = k as f64;
    let nf = n as f64;
    let mut binom = 1.0_f64;
    for i in 0..k.min(n - k) {
        binom = binom * (nf - i as f64) / (i as f64 + 1.0);
    }
    binom
        * pochhammer(kf + 1.0 + p.alpha1 - p.beta3, n - k)
        * pochhammer(p.beta3 - p.alpha2, n - k)
        * pochhammer(nf + p.alpha1, k)
        / pochhammer(nf + 1.0 + p.sigma, k)
}

/// B_k: the strictly positive part of the k-th Ω_n term under (A).
fn omega_term_b(p: &SaalschutzParams, k: usize) -> f64 {
    pochhammer(p.alpha2, k) * pochhammer(p.beta1 - p.alpha3, k)
        * pochhammer(p.beta2 - p.alpha3, k)
        / (pochhammer(p.beta1, k) * pochhammer(p.beta2, k))
        * sigma_factor(p.sigma, k)
}

/// Ω_n by the explicit Whipple-transformed k-sum.
pub fn omega_series(p: &SaalschutzParams, n: usize) -> Result<f64> {
    // (β₁)_k, (β₂)_k and (n+1+σ)_k appear in denominators for k ≤ n
    for i in 0..n {
        let s = i as f64;
        if p.beta1 + s == 0.0 || p.beta2 + s == 0.0 || n as f64 + 1.0 + p.sigma + s == 0.0 {
            return Err(Error::UndefinedDenominator { k: i + 1 });
        }
    }
    let mut sum = Compensated::default();
    for k in 0..=n {
        sum.add(omega_term_a(p, n, k) * omega_term_b(p, k));
    }
    Ok(sum.value())
}

/// Closed form of Ω₁:
/// (β₁+β₂−α₃)[β₁β₂β₃ − (1+α₁)α₂α₃] / (β₁β₂).
pub fn omega1_closed(p: &SaalschutzParams) -> f64 {
    (p.beta1 + p.beta2 - p.alpha3)
        * (p.beta1 * p.beta2 * p.beta3 - (1.0 + p.alpha1) * p.alpha2 * p.alpha3)
        / (p.beta1 * p.beta2)
}

/// Outcome of a Θ-positivity certification run.
///
/// The signs are decided in exact rational arithmetic (every f64 parameter
/// is a dyadic rational), so direct f64 summation noise — which reaches
/// unit scale near n = 30 — cannot contaminate the verdict. The slack ε
/// only absorbs parameter-construction rounding: Θ₁ at an (A4)-equality
/// boundary is a difference of two products the caller balanced to 1e-12.
#[derive(Debug, Clone)]
pub struct ThetaCertificate {
    /// thetas[i] = Θ_{i+1} (f64 image of the exact value)
    pub thetas: Vec<f64>,
    /// Slack on the Θ₁ ≥ 0 clause.
    pub epsilon: f64,
    /// Θ₁ ≥ −ε
    pub first_nonneg: bool,
    /// Θ_n > 0 for 2 ≤ n ≤ n_max, exactly
    pub rest_positive: bool,
    pub certified: bool,
    pub conditions: LemmaConditionReport,
}

fn to_rational(p: &SaalschutzParams) -> rational::ParamsUnchecked {
    let conv = |x: f64| Rat::from_float(x).expect("finite parameter");
    rational::ParamsUnchecked {
        alpha: [conv(p.alpha1), conv(p.alpha2), conv(p.alpha3)],
        beta: [conv(p.beta1), conv(p.beta2), conv(p.beta3)],
    }
}

/// Evaluate Θ_n for n = 1…n_max and certify the sign pattern Θ₁ ≥ −ε,
/// Θ_n > 0 (n ≥ 2). Errors with [`Error::ConditionsViolated`] when the
/// hypotheses (A1)–(A4) fail beyond ε-slack.
pub fn certify_theta_positive(p: &SaalschutzParams, n_max: usize) -> Result<ThetaCertificate> {
    if n_max == 0 {
        return Err(Error::InvalidParams("n_max must be positive".into()));
    }
    if !conditions_hold_with_slack(p) {
        let rep = check_lemma_conditions(p);
        return Err(Error::ConditionsViolated(format!(
            "(A1)={} (A2)={} (A3)={} (A4)={}",
            rep.a1_holds, rep.a2_holds, rep.a3_holds, rep.a4_holds
        )));
    }
    let pr = to_rational(p);
    let epsilon =
        1e-12 * (1.0 + ((1.0 + p.alpha1) * p.alpha2 * p.alpha3 / (p.beta1 * p.beta2 * p.beta3)).abs());
    let mut thetas = Vec::with_capacity(n_max);
    let mut first_nonneg = true;
    let mut rest_positive = true;
    for n in 1..=n_max {
        let exact = pr.theta(n)?;
        let value = crate::exact::rat_to_f64(&exact);
        if n == 1 {
            first_nonneg = value >= -epsilon;
        } else if crate::exact::sign(&exact) <= 0 {
            rest_positive = false;
        }
        thetas.push(value);
    }
    Ok(ThetaCertificate {
        first_nonneg,
        rest_positive,
        certified: first_nonneg && rest_positive,
        conditions: check_lemma_conditions(p),
        thetas,
        epsilon,
    })
}

/// Exact-rational twins of the Θ/Ω machinery.
pub mod rational {
    use super::*;
    use crate::exact::terminating_pfq_rat;

    /// Saalschützian parameters in exact arithmetic (balance holds exactly).
    #[derive(Debug, Clone, PartialEq)]
    pub struct Params {
        pub alpha: [Rat; 3],
        pub beta: [Rat; 3],
        pub sigma: Rat,
    }

    impl Params {
        pub fn new(alpha: [Rat; 3], beta: [Rat; 3]) -> Result<Self> {
            let gap = Rat::one() + &alpha[0] + &alpha[1] + &alpha[2]
                - &beta[0]
                - &beta[1]
                - &beta[2];
            if !gap.is_zero() {
                return Err(Error::InvalidParams(
                    "exact Saalschützian balance violated".into(),
                ));
            }
            let sigma = alpha[0].clone() + &alpha[1] - &beta[2];
            Ok(Params { alpha, beta, sigma })
        }

        /// Strict-inequality hypothesis check, exactly.
        pub fn conditions_hold(&self) -> bool {
            let zero = Rat::zero();
            let a2 = self.alpha[1] > zero
                && self.alpha[1] < self.beta[2]
                && self.beta[2] <= Rat::from_integer(2.into()) + &self.alpha[0];
            let m = self.beta[0].clone().min(self.beta[1].clone());
            let a3 = self.alpha[2] > zero && self.alpha[2] < m;
            let a4 = (Rat::one() + &self.alpha[0]) * &self.alpha[1] * &self.alpha[2]
                <= self.beta[0].clone() * &self.beta[1] * &self.beta[2];
            a2 && a3 && a4
        }
    }

    /// Θ_n exactly.
    pub fn theta(p: &Params, n: usize) -> Result<Rat> {
        let nums = [
            Rat::from_integer(n.into()) + &p.alpha[0],
            p.alpha[1].clone(),
            p.alpha[2].clone(),
        ];
        terminating_pfq_rat(&nums, &p.beta, n, &Rat::one())
    }

    fn sigma_factor(sigma: &Rat, k: usize) -> Rat {
        if k == 0 {
            Rat::one()
        } else {
            pochhammer_rat(&(Rat::one() + sigma), k - 1)
                * (Rat::from_integer((2 * k).into()) + sigma)
        }
    }

    /// A_{n,k} exactly.
    pub fn a_nk(p: &Params, n: usize, k: usize) -> Rat {
        let nf = Rat::from_integer(n.into());
        let kf = Rat::from_integer(k.into());
        let binom = Rat::from_integer(crate::exact::binomial(n, k));
        binom
            * pochhammer_rat(&(kf + Rat::one() + &p.alpha[0] - &p.beta[2]), n - k)
            * pochhammer_rat(&(p.beta[2].clone() - &p.alpha[1]), n - k)
            * pochhammer_rat(&(nf.clone() + &p.alpha[0]), k)
            / pochhammer_rat(&(nf + Rat::one() + &p.sigma), k)
    }

    /// B_k exactly.
    pub fn b_k(p: &Params, k: usize) -> Rat {
        pochhammer_rat(&p.alpha[1], k)
            * pochhammer_rat(&(p.beta[0].clone() - &p.alpha[2]), k)
            * pochhammer_rat(&(p.beta[1].clone() - &p.alpha[2]), k)
            / (pochhammer_rat(&p.beta[0], k) * pochhammer_rat(&p.beta[1], k))
            * sigma_factor(&p.sigma, k)
    }

    /// Ω_n exactly.
    pub fn omega(p: &Params, n: usize) -> Rat {
        (0..=n).map(|k| a_nk(p, n, k) * b_k(p, k)).sum()
    }

    /// Closed form of Ω₁, exactly.
    pub fn omega1_closed(p: &Params) -> Rat {
        (p.beta[0].clone() + &p.beta[1] - &p.alpha[2])
            * (p.beta[0].clone() * &p.beta[1] * &p.beta[2]
                - (Rat::one() + &p.alpha[0]) * &p.alpha[1] * &p.alpha[2])
            / (p.beta[0].clone() * &p.beta[1])
    }

    /// Θ_n · (1+σ)_n (β₃)_n, the left side of the Whipple equivalence.
    pub fn theta_scaled(p: &Params, n: usize) -> Result<Rat> {
        Ok(theta(p, n)?
            * pochhammer_rat(&(Rat::one() + &p.sigma), n)
            * pochhammer_rat(&p.beta[2], n))
    }

    /// Parameters rationalized from f64 without the exact-balance demand
    /// (f64 callers only balance to 1e-12).
    #[derive(Debug, Clone)]
    pub struct ParamsUnchecked {
        pub alpha: [Rat; 3],
        pub beta: [Rat; 3],
    }

    impl ParamsUnchecked {
        pub fn theta(&self, n: usize) -> Result<Rat> {
            let nums = [
                Rat::from_integer(n.into()) + &self.alpha[0],
                self.alpha[1].clone(),
                self.alpha[2].clone(),
            ];
            terminating_pfq_rat(&nums, &self.beta, n, &Rat::one())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_to_f64, sign};

    fn boundary_point() -> SaalschutzParams {
        SaalschutzParams::new(1.0, 1.0, 1.0, 2.0, 1.0, 1.0).unwrap()
    }

    /// The Λ-corner family mapped through the Saalschützian ν choice.
    fn interior_point() -> SaalschutzParams {
        // (a, b, c) = (1, 3, 3), ν = 7/4
        SaalschutzParams::new(3.5, 2.75, 1.0, 2.25, 3.0, 3.0).unwrap()
    }

    #[test]
    fn constructor_enforces_balance() {
        assert!(SaalschutzParams::new(1.0, 1.0, 1.0, 2.0, 1.0, 1.1).is_err());
        let p = boundary_point();
        assert_eq!(p.sigma(), 1.0); // 1 + 1 − 1
    }

    #[test]
    fn saalschutz_zero_numerator_factor() {
        assert_eq!(saalschutz_sum(1, 0.0, 1.0, 1.0, 1.0).unwrap(), 0.0);
        assert_eq!(saalschutz_sum(2, 0.0, 1.0, 1.0, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn saalschutz_matches_direct_sum() {
        // n = 2: direct ₃F₂[−2, 2, 1; 1, 1] = 1 − 4 + 3 = 0
        let direct = eval_terminating(
            &HyperParams::new(vec![-2.0, 2.0, 1.0], vec![1.0, 1.0]).unwrap(),
            2,
            1.0,
        )
        .unwrap();
        assert_eq!(direct, 0.0);

        // n = 3 with (α₁, α₂, β₁, β₂) = (1, 0.5, 2, 0.5)
        let closed = saalschutz_sum(3, 1.0, 0.5, 2.0, 0.5).unwrap();
        let direct = eval_terminating(
            &HyperParams::new(vec![-3.0, 3.0 + 1.0, 0.5], vec![2.0, 0.5]).unwrap(),
            3,
            1.0,
        )
        .unwrap();
        assert!((closed - direct).abs() <= 1e-12 * closed.abs().max(1.0));
    }

    #[test]
    fn theta_two_term_closed_form() {
        let p = interior_point();
        let got = theta_direct(&p, 1).unwrap();
        let expect =
            1.0 - (1.0 + p.alpha1) * p.alpha2 * p.alpha3 / (p.beta1 * p.beta2 * p.beta3);
        assert!((got - expect).abs() < 1e-14);
    }

    #[test]
    fn theta_boundary_vanishes() {
        let p = boundary_point();
        assert_eq!(theta_direct(&p, 1).unwrap(), 0.0);
    }

    #[test]
    fn theta_with_zero_alpha2_is_one() {
        let p = SaalschutzParams::new(1.0, 0.0, 1.0, 1.5, 0.5, 1.0).unwrap();
        for n in 1..6 {
            assert_eq!(theta_direct(&p, n).unwrap(), 1.0);
        }
    }

    #[test]
    fn whipple_transform_small_n() {
        // both float routes cancel through ~10⁴ by n = 8; past that the
        // exact-rational suite is the authority
        let p = interior_point();
        for n in 1..=8 {
            let lhs = theta_direct(&p, n).unwrap();
            let denom =
                pochhammer(1.0 + p.sigma(), n) * pochhammer(p.beta3, n);
            let rhs = omega_series(&p, n).unwrap() / denom;
            assert!(
                (lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0),
                "n = {n}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn omega1_closed_matches_series() {
        let p = interior_point();
        let series = omega_series(&p, 1).unwrap();
        let closed = omega1_closed(&p);
        assert!((series - closed).abs() < 1e-12 * closed.abs().max(1.0));

        let b = boundary_point();
        assert!(omega1_closed(&b).abs() < 1e-14);
        assert!(omega_series(&b, 1).unwrap().abs() < 1e-14);
    }

    #[test]
    fn condition_report_semantics() {
        // interior point satisfies everything
        let rep = check_lemma_conditions(&interior_point());
        assert!(rep.all_hold);

        // α₂ = β₃ violates the strict part of (A2)
        let p = SaalschutzParams::new(1.0, 1.5, 1.0, 1.5, 1.5, 1.5).unwrap();
        assert!(!check_lemma_conditions(&p).a2_holds);

        // the boundary point sits on the strict edge of (A2)/(A3): under
        // verbatim strict semantics the report must say "does not hold",
        // even though (A4) holds with equality
        let rep = check_lemma_conditions(&boundary_point());
        assert!(rep.a1_holds && rep.a4_holds);
        assert!(!rep.all_hold);

        // the Λ-corner image (a, b, c) = (1, 1.5, 2), ν = 1/2 likewise
        // fails strict (A3): α₃ = 1 = β₁
        let lam = SaalschutzParams::new(1.0, 1.5, 1.0, 1.0, 1.5, 2.0).unwrap();
        let rep = check_lemma_conditions(&lam);
        assert!(rep.a1_holds && rep.a2_holds && rep.a4_holds && !rep.a3_holds);
    }

    #[test]
    fn certify_interior_point() {
        let cert = certify_theta_positive(&interior_point(), 30).unwrap();
        assert!(cert.certified);
        assert!(cert.thetas[0] > 0.0);
    }

    #[test]
    fn certify_boundary_point_degenerates() {
        // all Θ_n vanish identically at this equality-boundary point, and
        // the exact evaluation sees that literally
        let cert = certify_theta_positive(&boundary_point(), 10).unwrap();
        assert!(cert.first_nonneg);
        assert!(!cert.rest_positive);
        for t in &cert.thetas {
            assert_eq!(*t, 0.0);
        }
    }

    #[test]
    fn certify_rejects_strong_violation() {
        // balanced but (A3), (A4) badly violated; Θ₁ < 0 is visible directly
        let p = SaalschutzParams::new(1.0, 1.0, 1.0, 0.25, 0.25, 3.5).unwrap();
        assert!(matches!(
            certify_theta_positive(&p, 5),
            Err(Error::ConditionsViolated(_))
        ));
        assert!(theta_direct(&p, 1).unwrap() < 0.0);
    }

    #[test]
    fn rational_theta_vanishes_on_boundary_for_all_n() {
        let p = rational::Params::new(
            [rat(1, 1), rat(1, 1), rat(1, 1)],
            [rat(2, 1), rat(1, 1), rat(1, 1)],
        )
        .unwrap();
        for n in 1..=50 {
            let t = rational::theta(&p, n).unwrap();
            assert_eq!(sign(&t), 0, "Θ_{n} nonzero on the degenerate boundary");
        }
    }

    #[test]
    fn rational_whipple_exact_equality() {
        let p = rational::Params::new(
            [rat(7, 2), rat(11, 4), rat(1, 1)],
            [rat(9, 4), rat(3, 1), rat(3, 1)],
        )
        .unwrap();
        for n in [1usize, 2, 5, 17, 30] {
            let lhs = rational::theta_scaled(&p, n).unwrap();
            let rhs = rational::omega(&p, n);
            assert_eq!(lhs, rhs, "Whipple equivalence fails at n = {n}");
        }
    }

    #[test]
    fn rational_omega1_closed_form() {
        let p = rational::Params::new(
            [rat(7, 2), rat(11, 4), rat(1, 1)],
            [rat(9, 4), rat(3, 1), rat(3, 1)],
        )
        .unwrap();
        assert_eq!(rational::omega(&p, 1), rational::omega1_closed(&p));
    }

    #[test]
    fn rational_matches_float_theta() {
        let p = interior_point();
        let pr = rational::Params::new(
            [rat(7, 2), rat(11, 4), rat(1, 1)],
            [rat(9, 4), rat(3, 1), rat(3, 1)],
        )
        .unwrap();
        for n in 1..=10 {
            let f = theta_direct(&p, n).unwrap();
            let r = rat_to_f64(&rational::theta(&pr, n).unwrap());
            assert!((f - r).abs() <= 1e-9 * r.abs().max(1.0), "n = {n}");
        }
    }
}
