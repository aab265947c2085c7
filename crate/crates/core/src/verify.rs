//! Seeded, reproducible verification suites.
//!
//! Each suite draws dyadic rational parameters (multiples of 1/16, which are
//! exact in both `BigRational` and `f64`) from a ChaCha8 stream, so a (seed,
//! n) pair pins the whole run. Identity checks that cancel beyond what f64
//! carries (terminating sums at n = 30..50 lose ~16 digits) run in exact
//! rational arithmetic; the float paths are cross-checked on the
//! well-conditioned small-n subset.

use crate::error::Result;
use crate::exact::{rat_to_f64, sign, Rat};
use crate::expansion::{phi_by_squares, saalschutzian_nu, ExpansionContext};
use crate::identities::{
    check_lemma_conditions, omega_series, rational, saalschutz_sum, theta_direct,
    SaalschutzParams,
};
use crate::regions::F12Point;
use crate::series::{eval_pfq_auto, eval_terminating, HyperParams, DEFAULT_MAX_TERMS, DEFAULT_TOL};
use crate::exact::{pochhammer_rat, terminating_pfq_rat};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The on-demand suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Whipple,
    Saalschutz,
    Lemma,
    Gasper,
    Interlacing,
    Oracle,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        match name {
            "whipple" => Some(Suite::Whipple),
            "saalschutz" => Some(Suite::Saalschutz),
            "lemma" => Some(Suite::Lemma),
            "gasper" => Some(Suite::Gasper),
            "interlacing" => Some(Suite::Interlacing),
            "oracle" => Some(Suite::Oracle),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Whipple => "whipple",
            Suite::Saalschutz => "saalschutz",
            Suite::Lemma => "lemma",
            Suite::Gasper => "gasper",
            Suite::Interlacing => "interlacing",
            Suite::Oracle => "oracle",
        }
    }

    /// Default draw count when the caller does not pass one.
    pub fn default_draws(&self) -> usize {
        match self {
            Suite::Whipple | Suite::Saalschutz => 200,
            Suite::Lemma => 100,
            Suite::Gasper => 20,
            Suite::Interlacing => 4,
            Suite::Oracle => 100,
        }
    }
}

/// One named check inside a suite.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub label: String,
    pub passed: bool,
    /// Worst-case deviation met while checking (0 for exact equalities).
    pub worst: f64,
}

/// Result of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub draws: usize,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
    pub max_deviation: f64,
}

impl SuiteReport {
    fn from_checks(suite: &'static str, seed: u64, draws: usize, checks: Vec<CheckOutcome>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        let max_deviation = checks.iter().fold(0.0f64, |m, c| m.max(c.worst));
        SuiteReport {
            suite,
            seed,
            draws,
            checks,
            passed,
            max_deviation,
        }
    }
}

/// Run one suite with `n` primary draws.
pub fn run_suite(suite: Suite, seed: u64, n: usize) -> Result<SuiteReport> {
    match suite {
        Suite::Whipple => whipple_suite(seed, n),
        Suite::Saalschutz => saalschutz_suite(seed, n),
        Suite::Lemma => lemma_suite(seed, n),
        Suite::Gasper => gasper_suite(seed, n),
        Suite::Interlacing => interlacing_suite(n),
        Suite::Oracle => oracle_suite(),
    }
}

fn r16(k: i64) -> Rat {
    Rat::new(BigInt::from(k), BigInt::from(16))
}

fn f16(k: i64) -> f64 {
    k as f64 / 16.0
}

/// Relative gap between two rationals, as f64 (0 when exactly equal).
fn rel_gap(lhs: &Rat, rhs: &Rat) -> f64 {
    if lhs == rhs {
        return 0.0;
    }
    let diff = (lhs.clone() - rhs).abs();
    let scale = lhs.clone().abs().max(rhs.clone().abs()).max(Rat::one());
    rat_to_f64(&(diff / scale))
}

/// Draw a balanced Saalschützian six-tuple in sixteenths; None on rejection.
fn draw_balanced(rng: &mut ChaCha8Rng) -> Option<([i64; 3], [i64; 3])> {
    let a1 = rng.gen_range(1..=40);
    let a2 = rng.gen_range(1..=40);
    let a3 = rng.gen_range(1..=40);
    let b1 = rng.gen_range(8..=48);
    let b2 = rng.gen_range(8..=48);
    let b3 = 16 + a1 + a2 + a3 - b1 - b2;
    // keep denominators and the transform's (n+1+σ)_k safely nonzero:
    // β₃ > 0 and 1+σ = β₁+β₂−α₃ > 0
    if b3 <= 0 || b1 + b2 - a3 <= 0 {
        return None;
    }
    Some(([a1, a2, a3], [b1, b2, b3]))
}

fn whipple_suite(seed: u64, n_draws: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut exact_worst = 0.0f64;
    let mut exact_ok = true;
    let mut float_worst = 0.0f64;
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < n_draws && attempts < n_draws * 50 {
        attempts += 1;
        let Some((a, b)) = draw_balanced(&mut rng) else {
            continue;
        };
        let n = accepted % 30 + 1;
        accepted += 1;
        let p = rational::Params::new(
            [r16(a[0]), r16(a[1]), r16(a[2])],
            [r16(b[0]), r16(b[1]), r16(b[2])],
        )?;
        let lhs = rational::theta_scaled(&p, n)?;
        let rhs = rational::omega(&p, n);
        let gap = rel_gap(&lhs, &rhs);
        exact_worst = exact_worst.max(gap);
        if lhs != rhs {
            exact_ok = false;
        }
        // float-path sanity check where f64 conditioning permits (the two
        // routes cancel through ~10^4 by n = 8)
        if n <= 8 {
            let pf = SaalschutzParams::new(
                f16(a[0]),
                f16(a[1]),
                f16(a[2]),
                f16(b[0]),
                f16(b[1]),
                f16(b[2]),
            )?;
            let theta = theta_direct(&pf, n)?;
            let denom = crate::series::pochhammer(1.0 + pf.sigma(), n)
                * crate::series::pochhammer(pf.beta3, n);
            let omega = omega_series(&pf, n)?;
            let gap = (theta * denom - omega).abs()
                / (theta * denom).abs().max(omega.abs()).max(1.0);
            float_worst = float_worst.max(gap);
        }
    }
    let checks = vec![
        CheckOutcome {
            label: format!("transform identity, exact rational ({accepted} draws, n <= 30)"),
            passed: exact_ok && accepted >= n_draws,
            worst: exact_worst,
        },
        CheckOutcome {
            label: "float-path sanity (n <= 8)".into(),
            passed: float_worst <= 1e-7,
            worst: float_worst,
        },
    ];
    Ok(SuiteReport::from_checks("whipple", seed, accepted, checks))
}

fn saalschutz_suite(seed: u64, n_draws: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut exact_worst = 0.0f64;
    let mut exact_ok = true;
    let mut float_worst = 0.0f64;
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < n_draws && attempts < n_draws * 50 {
        attempts += 1;
        let a1 = rng.gen_range(1..=40);
        let a2 = rng.gen_range(1..=40);
        let b1 = rng.gen_range(8..=48);
        let b2 = 16 + a1 + a2 - b1;
        if b2 <= 0 {
            continue;
        }
        let n = accepted % 30 + 1;
        accepted += 1;
        let (ra1, ra2, rb1, rb2) = (r16(a1), r16(a2), r16(b1), r16(b2));
        let lhs = terminating_pfq_rat(
            &[Rat::from_integer(n.into()) + &ra1, ra2.clone()],
            &[rb1.clone(), rb2.clone()],
            n,
            &Rat::one(),
        )?;
        let rhs = pochhammer_rat(&(rb1.clone() - &ra2), n) * pochhammer_rat(&(rb2.clone() - &ra2), n)
            / (pochhammer_rat(&rb1, n) * pochhammer_rat(&rb2, n));
        let gap = rel_gap(&lhs, &rhs);
        exact_worst = exact_worst.max(gap);
        if lhs != rhs {
            exact_ok = false;
        }
        if n <= 10 {
            let closed = saalschutz_sum(n, f16(a1), f16(a2), f16(b1), f16(b2))?;
            let direct = eval_terminating(
                &HyperParams::new(
                    vec![-(n as f64), n as f64 + f16(a1), f16(a2)],
                    vec![f16(b1), f16(b2)],
                )?,
                n,
                1.0,
            )?;
            let gap = (closed - direct).abs() / closed.abs().max(direct.abs()).max(1.0);
            float_worst = float_worst.max(gap);
        }
    }
    let checks = vec![
        CheckOutcome {
            label: format!("summation identity, exact rational ({accepted} draws, n <= 30)"),
            passed: exact_ok && accepted >= n_draws,
            worst: exact_worst,
        },
        CheckOutcome {
            label: "float-path sanity (n <= 10)".into(),
            passed: float_worst <= 1e-9,
            worst: float_worst,
        },
    ];
    Ok(SuiteReport::from_checks("saalschutz", seed, accepted, checks))
}

/// Draw a parameter set satisfying (A1)–(A4) with strict interior margins.
fn draw_a_valid(rng: &mut ChaCha8Rng) -> Option<rational::Params> {
    let a1 = rng.gen_range(2..=40);
    let a2 = rng.gen_range(2..=32);
    let b3 = a2 + rng.gen_range(1..=24);
    if b3 > 32 + a1 {
        return None; // (A2) β₃ ≤ 2+α₁
    }
    let a3 = rng.gen_range(2..=32);
    let s = 16 + a1 + a2 + a3 - b3; // β₁+β₂ in sixteenths
    if s < 2 * a3 + 2 {
        return None; // need β₁, β₂ > α₃
    }
    let b1 = rng.gen_range(a3 + 1..=s - a3 - 1);
    let b2 = s - b1;
    let p = rational::Params::new([r16(a1), r16(a2), r16(a3)], [r16(b1), r16(b2), r16(b3)])
        .expect("balance holds by construction");
    if p.conditions_hold() {
        Some(p)
    } else {
        None
    }
}

/// Case-II draw: (A) plus β₃ > 1+α₁ and β₃ < 1+α₂.
fn draw_case2(rng: &mut ChaCha8Rng) -> Option<rational::Params> {
    let a2 = rng.gen_range(18..=32); // α₂ ∈ [1.125, 2]
    let d = rng.gen_range(4..=15);
    let b3 = a2 + d; // α₂ < β₃ < 1+α₂
    let a1_hi = a2 + d - 17; // β₃ > 1+α₁
    if a1_hi < 1 {
        return None;
    }
    let a1 = rng.gen_range(1..=a1_hi);
    let a3 = rng.gen_range(2..=32);
    let s = 16 + a1 + a2 + a3 - b3;
    if s < 2 * a3 + 2 {
        return None;
    }
    let b1 = rng.gen_range(a3 + 1..=s - a3 - 1);
    let b2 = s - b1;
    let p = rational::Params::new([r16(a1), r16(a2), r16(a3)], [r16(b1), r16(b2), r16(b3)])
        .expect("balance holds by construction");
    if p.conditions_hold() {
        Some(p)
    } else {
        None
    }
}

/// Case-I draw: (A) plus β₃ > 1+α₁ and β₃ ≥ 1+α₂.
fn draw_case1(rng: &mut ChaCha8Rng) -> Option<rational::Params> {
    let a2 = rng.gen_range(2..=32);
    let e = rng.gen_range(0..=8);
    let b3 = 16 + a2 + e; // β₃ ≥ 1+α₂
    let a1_hi = a2 + e - 1; // β₃ > 1+α₁
    let a1_lo = (a2 + e - 16).max(1); // β₃ ≤ 2+α₁
    if a1_hi < a1_lo {
        return None;
    }
    let a1 = rng.gen_range(a1_lo..=a1_hi);
    let a3 = rng.gen_range(2..=32);
    let s = 16 + a1 + a2 + a3 - b3;
    if s < 2 * a3 + 2 {
        return None;
    }
    let b1 = rng.gen_range(a3 + 1..=s - a3 - 1);
    let b2 = s - b1;
    let p = rational::Params::new([r16(a1), r16(a2), r16(a3)], [r16(b1), r16(b2), r16(b3)])
        .expect("balance holds by construction");
    if p.conditions_hold() {
        Some(p)
    } else {
        None
    }
}

fn lemma_suite(seed: u64, n_draws: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    // Θ-sign certification over (A)-valid draws, exact, n up to 50
    let mut ok = true;
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < n_draws && attempts < n_draws * 200 {
        attempts += 1;
        let Some(p) = draw_a_valid(&mut rng) else {
            continue;
        };
        accepted += 1;
        let t1 = rational::theta(&p, 1)?;
        if sign(&t1) < 0 {
            ok = false;
        }
        for n in 2..=50 {
            if sign(&rational::theta(&p, n)?) <= 0 {
                ok = false;
                break;
            }
        }
    }
    checks.push(CheckOutcome {
        label: format!("Θ₁ ≥ 0 and Θ_n > 0 (2 ≤ n ≤ 50), exact, {accepted} draws"),
        passed: ok && accepted >= n_draws,
        worst: 0.0,
    });

    // the equality-boundary case (1,1,1; 2,1,1): every Θ_n degenerates to 0
    let boundary = rational::Params::new(
        [Rat::one(), Rat::one(), Rat::one()],
        [
            Rat::from_integer(2.into()),
            Rat::one(),
            Rat::one(),
        ],
    )?;
    let mut boundary_ok = sign(&rational::theta(&boundary, 1)?) == 0;
    for n in 2..=50 {
        if sign(&rational::theta(&boundary, n)?) < 0 {
            boundary_ok = false;
        }
    }
    checks.push(CheckOutcome {
        label: "boundary case (1,1,1;2,1,1): Θ₁ = 0 and Θ_n ≥ 0 exactly".into(),
        passed: boundary_ok,
        worst: 0.0,
    });

    // (A7): Ω_n > (2+α₁−β₃)_{n−1} (1+β₃−α₂)_{n−1} Ω₁ on case I
    let subset = (n_draws / 5).max(10);
    let mut ok7 = true;
    let mut got = 0usize;
    let mut tries = 0usize;
    while got < subset && tries < subset * 400 {
        tries += 1;
        let Some(p) = draw_case1(&mut rng) else {
            continue;
        };
        got += 1;
        let omega1 = rational::omega(&p, 1);
        for n in 2..=30 {
            let lhs = rational::omega(&p, n);
            let two = Rat::from_integer(2.into());
            let rhs = pochhammer_rat(&(two + &p.alpha[0] - &p.beta[2]), n - 1)
                * pochhammer_rat(&(Rat::one() + &p.beta[2] - &p.alpha[1]), n - 1)
                * omega1.clone();
            if lhs <= rhs {
                ok7 = false;
                break;
            }
        }
    }
    checks.push(CheckOutcome {
        label: format!("lower bound (A7) on case I, exact, {got} draws, n ≤ 30"),
        passed: ok7 && got >= subset.min(10),
        worst: 0.0,
    });

    // The monotone-factor bounds (A8)/(A9) hold where the g > 1 argument
    // is valid, which is β₃ > 1+α₂ strictly (the sign of the k-free
    // cross-difference (1+α₂−β₃)(2n+1+α₁) decides the direction). On the
    // printed case β₃ < 1+α₂ the direction flips; the suite verifies both
    // the valid range and the flip, since the lemma's conclusion is
    // already certified directly above.
    let induction_bounds = |p: &rational::Params, strict_range: bool| -> bool {
        let factor = |n: usize| -> Rat {
            let nf = Rat::from_integer(n.into());
            (nf.clone() + Rat::one())
                * (nf.clone() + Rat::one() + &p.alpha[0] - &p.beta[2])
                * (nf.clone() + Rat::one() + &p.sigma)
                / (nf + &p.alpha[0])
        };
        for n in 1..=20 {
            let lhs = rational::omega(&p, n + 1);
            let rhs = rational::a_nk(&p, n + 1, n + 1) * rational::b_k(&p, n + 1)
                + factor(n) * rational::omega(&p, n);
            if (lhs > rhs) != strict_range {
                return false;
            }
        }
        for &n in &[2usize, 5, 9, 14] {
            let f = factor(n);
            for k in 2..=n {
                let lhs = rational::a_nk(&p, n + 1, k);
                let rhs = rational::a_nk(&p, n, k) * f.clone();
                if (lhs > rhs) != strict_range {
                    return false;
                }
            }
        }
        true
    };

    let mut ok89 = true;
    let mut got_strict = 0usize;
    let mut tries_strict = 0usize;
    while got_strict < subset && tries_strict < subset * 400 {
        tries_strict += 1;
        let Some(p) = draw_case1(&mut rng) else {
            continue;
        };
        // strict part of case I: β₃ > 1+α₂ with margin, where g > 1 holds
        if p.beta[2] <= Rat::one() + &p.alpha[1] {
            continue;
        }
        got_strict += 1;
        if !induction_bounds(&p, true) {
            ok89 = false;
        }
    }
    checks.push(CheckOutcome {
        label: format!(
            "induction bounds (A8)/(A9) on their valid range β₃ > 1+α₂, exact, {got_strict} draws"
        ),
        passed: ok89 && got_strict >= subset.min(10),
        worst: 0.0,
    });

    // (A10) on case II as printed, plus the (A8)/(A9) direction flip there
    let mut ok10 = true;
    let mut flipped = true;
    let mut got2 = 0usize;
    let mut tries2 = 0usize;
    while got2 < subset && tries2 < subset * 400 {
        tries2 += 1;
        let Some(p) = draw_case2(&mut rng) else {
            continue;
        };
        got2 += 1;
        let factor = |n: usize| -> Rat {
            let nf = Rat::from_integer(n.into());
            (nf.clone() + Rat::one())
                * (nf.clone() + Rat::one() + &p.alpha[0] - &p.beta[2])
                * (nf.clone() + Rat::one() + &p.sigma)
                / (nf + &p.alpha[0])
        };
        for &n in &[2usize, 5, 9, 14] {
            let lhs0 = rational::a_nk(&p, n + 1, 0);
            let rhs0 = rational::a_nk(&p, n, 0) * factor(n);
            if lhs0 <= rhs0 {
                ok10 = false;
            }
        }
        if !induction_bounds(&p, false) {
            flipped = false;
        }
    }
    checks.push(CheckOutcome {
        label: format!("initial-term bound (A10) on case II, exact, {got2} draws"),
        passed: ok10 && got2 >= subset.min(10),
        worst: 0.0,
    });
    checks.push(CheckOutcome {
        label: "printed case-II direction of (A8)/(A9) flips (counterexamples reproduced)".into(),
        passed: flipped && got2 >= subset.min(10),
        worst: 0.0,
    });

    // float-path certification agrees on a small-n subset
    let mut float_worst = 0.0f64;
    let mut rng2 = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut got3 = 0usize;
    let mut tries3 = 0usize;
    while got3 < 20 && tries3 < 4000 {
        tries3 += 1;
        let Some(p) = draw_a_valid(&mut rng2) else {
            continue;
        };
        got3 += 1;
        let pf = SaalschutzParams::new(
            rat_to_f64(&p.alpha[0]),
            rat_to_f64(&p.alpha[1]),
            rat_to_f64(&p.alpha[2]),
            rat_to_f64(&p.beta[0]),
            rat_to_f64(&p.beta[1]),
            rat_to_f64(&p.beta[2]),
        )?;
        debug_assert!(check_lemma_conditions(&pf).all_hold);
        for n in 1..=10 {
            let f = theta_direct(&pf, n)?;
            let e = rat_to_f64(&rational::theta(&p, n)?);
            float_worst = float_worst.max((f - e).abs() / e.abs().max(1.0));
        }
    }
    checks.push(CheckOutcome {
        label: "float-path Θ agrees with exact (n ≤ 10)".into(),
        passed: float_worst <= 1e-8,
        worst: float_worst,
    });

    Ok(SuiteReport::from_checks("lemma", seed, n_draws, checks))
}

fn gasper_suite(seed: u64, n_draws: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..n_draws {
        let a = 0.2 + 2.3 * rng.gen::<f64>();
        let b = a + 0.6 + 2.4 * rng.gen::<f64>();
        let c = a + 0.6 + 2.4 * rng.gen::<f64>();
        let x = 0.5 + 9.5 * rng.gen::<f64>();
        let p = F12Point::new(a, b, c)?;
        let ctx = ExpansionContext::saalschutzian(p)?;
        debug_assert!(ctx.nu > -0.5);
        let via_squares = phi_by_squares(&ctx, x)?.value;
        let direct = eval_pfq_auto(
            &HyperParams::f12(a, b, c)?,
            -x * x / 4.0,
            DEFAULT_TOL,
            DEFAULT_MAX_TERMS,
        )?
        .value;
        worst = worst.max((via_squares - direct).abs() / direct.abs().max(1e-12));
    }
    let nu_probe = saalschutzian_nu(&F12Point::new(1.0, 1.5, 2.0)?);
    let checks = vec![
        CheckOutcome {
            label: format!("sums-of-squares identity vs direct series ({n_draws} draws, x ≤ 10)"),
            passed: worst <= 1e-8,
            worst,
        },
        CheckOutcome {
            label: "Saalschützian ν at the corner is a−1/2".into(),
            passed: (nu_probe - 0.5).abs() < 1e-15,
            worst: (nu_probe - 0.5).abs(),
        },
    ];
    Ok(SuiteReport::from_checks("gasper", seed, n_draws, checks))
}

fn interlacing_suite(k_max: usize) -> Result<SuiteReport> {
    let k_max = k_max.clamp(2, 8);
    let orders = [-0.9, -0.5, 0.0, 0.5, 1.0, 1.5];
    let mut all = true;
    for &alpha in &orders {
        if !crate::bessel::check_interlacing(alpha, k_max)? {
            all = false;
        }
    }
    let mut worst_residual = 0.0f64;
    for &alpha in &[-0.9, -0.5, 0.0, 0.5, 1.0] {
        for k in 1..=4 {
            let z = crate::bessel::bessel_zero(alpha, k)?;
            worst_residual = worst_residual.max(z.residual);
        }
    }
    let checks = vec![
        CheckOutcome {
            label: format!("zero interlacing j_a,k < j_a+1,k < j_a,k+1 (k ≤ {k_max})"),
            passed: all,
            worst: 0.0,
        },
        CheckOutcome {
            label: "zero residuals |𝕁(j)| ≤ 1e-11 (k ≤ 4)".into(),
            passed: worst_residual <= 1e-11,
            worst: worst_residual,
        },
    ];
    Ok(SuiteReport::from_checks(
        "interlacing",
        0,
        orders.len(),
        checks,
    ))
}

fn oracle_suite() -> Result<SuiteReport> {
    let alphas = [-0.5, -0.2, 0.0, 0.25, 0.5];
    let betas = [-0.45, -0.2, 0.0, 0.2, 0.45];
    let xs = [1.0, 3.0, 6.5, 12.0];
    let mut worst = 0.0f64;
    let mut count = 0usize;
    for &alpha in &alphas {
        for &beta in &betas {
            for &x in &xs {
                let cf = crate::roots::integral_closed_form(alpha, beta, x)?;
                let q = crate::roots::integral_quadrature(alpha, beta, x)?;
                worst = worst.max((cf - q).abs());
                count += 1;
            }
        }
    }
    let checks = vec![CheckOutcome {
        label: format!("closed form vs adaptive quadrature on {count}-point grid"),
        passed: worst <= 1e-8,
        worst,
    }];
    Ok(SuiteReport::from_checks("oracle", 0, count, checks))
}
