//! Sums-of-squares Bessel expansion of Φ(x) = ₁F₂(a; b, c; −x²/4):
//!
//! ```text
//! Φ(x) = Γ²(ν+1) (x/4)^{−2ν} { J²_ν(x/2)
//!        + Σ_{n≥1} C(n,ν) (2n+2ν)/(n+2ν) (2ν+1)_n/n! · J²_{ν+n}(x/2) }
//! ```
//!
//! with terminating coefficients
//! C(n,ν) = ₄F₃[−n, n+2ν, ν+1, a; ν+1/2, b, c]. The choice
//! ν = (b+c−a−3/2)/2 makes that ₄F₃ Saalschützian, so the Θ-positivity
//! machinery certifies C(1,ν) ≥ 0 and C(n,ν) > 0 whenever the translated
//! conditions
//!
//! ```text
//! (i)   c > b − a + 1/2   and  b ≥ a − 1/2
//! (ii)  c > 3a + 1/2 − b  and  b > a
//! (iii) c ≥ a + a/(2(b−a))
//! ```
//!
//! hold; positivity of Φ then follows from the interlacing of Bessel zeros
//! when ν > −1/2.

use crate::bessel::bessel_j;
use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::regions::F12Point;
use crate::series::{eval_terminating, HyperParams, SeriesValue};

/// Truncation order and ν for one expansion run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionContext {
    pub point: F12Point,
    pub nu: f64,
    pub n_terms: usize,
}

impl ExpansionContext {
    /// ν is free except that 2ν must not be a negative integer.
    pub fn new(point: F12Point, nu: f64, n_terms: usize) -> Result<Self> {
        let two_nu = 2.0 * nu;
        if two_nu < 0.0 && two_nu == two_nu.floor() {
            return Err(Error::InvalidParams(format!(
                "2ν = {two_nu} must not be a negative integer"
            )));
        }
        if n_terms == 0 {
            return Err(Error::InvalidParams("n_terms must be >= 1".into()));
        }
        Ok(ExpansionContext { point, nu, n_terms })
    }

    /// Context with the Saalschützian ν and the default 60-term truncation.
    pub fn saalschutzian(point: F12Point) -> Result<Self> {
        Self::new(point, saalschutzian_nu(&point), 60)
    }
}

/// The ν that balances the coefficient ₄F₃: ν = (b + c − a − 3/2)/2.
pub fn saalschutzian_nu(p: &F12Point) -> f64 {
    (p.b + p.c - p.a - 1.5) / 2.0
}

/// C(n,ν) = ₄F₃[−n, n+2ν, ν+1, a; ν+1/2, b, c] at unit argument.
pub fn c_coefficient(n: usize, nu: f64, p: &F12Point) -> Result<f64> {
    let params = HyperParams::new(
        vec![-(n as f64), n as f64 + 2.0 * nu, nu + 1.0, p.a],
        vec![nu + 0.5, p.b, p.c],
    )?;
    eval_terminating(&params, n, 1.0)
}

/// Evaluate the truncated expansion at x; the error estimate is the last
/// included term. The coefficient (2ν+1)_n/n! grows only polynomially while
/// J²_{ν+n}(x/2) decays super-exponentially in n at fixed x, so the
/// truncation is benign.
pub fn phi_by_squares(ctx: &ExpansionContext, x: f64) -> Result<SeriesValue> {
    if !(ctx.nu > -0.5) {
        return Err(Error::Domain(format!("ν = {} must be > -1/2", ctx.nu)));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("x = {x} must be > 0")));
    }
    let nu = ctx.nu;
    let prefactor = gamma(nu + 1.0).powi(2) * (x / 4.0).powf(-2.0 * nu);

    let j0 = bessel_j(nu, x / 2.0)?;
    let mut sum = j0 * j0;
    let mut max_term = (sum * prefactor).abs();
    let mut last = 0.0f64;
    let mut poch_ratio = 1.0f64; // (2ν+1)_n / n!
    for n in 1..=ctx.n_terms {
        let nf = n as f64;
        poch_ratio *= (2.0 * nu + nf) / nf;
        let jn = bessel_j(nu + nf, x / 2.0)?;
        let c = c_coefficient(n, nu, &ctx.point)?;
        last = c * (2.0 * nf + 2.0 * nu) / (nf + 2.0 * nu) * poch_ratio * jn * jn;
        sum += last;
        max_term = max_term.max((last * prefactor).abs());
    }
    Ok(SeriesValue {
        value: prefactor * sum,
        abs_error_estimate: (prefactor * last).abs(),
        terms_used: ctx.n_terms + 1,
        max_term_magnitude: max_term,
        converged: true,
    })
}

/// The three translated positivity conditions, literals exactly as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct W5Report {
    /// c > b − a + 1/2 and b ≥ a − 1/2
    pub cond1: bool,
    /// c > 3a + 1/2 − b and b > a
    pub cond2: bool,
    /// c ≥ a + a/(2(b−a)), IEEE division (b = a gives c ≥ ∞, i.e. false)
    pub cond3: bool,
    pub all: bool,
}

/// Evaluate the translated conditions verbatim.
pub fn w5_conditions(p: &F12Point) -> W5Report {
    let (a, b, c) = (p.a, p.b, p.c);
    let cond1 = c > b - a + 0.5 && b >= a - 0.5;
    let cond2 = c > 3.0 * a + 0.5 - b && b > a;
    let cond3 = c >= a + a / (2.0 * (b - a));
    W5Report {
        cond1,
        cond2,
        cond3,
        all: cond1 && cond2 && cond3,
    }
}

fn slack(x: f64, y: f64) -> f64 {
    1e-12 * (1.0 + x.abs() + y.abs())
}

/// The conditions with ε-slack on each strict literal, admitting the
/// measure-zero boundary configurations (corner points) where the
/// coefficients degenerate to zero but never to negative values.
fn w5_holds_with_slack(p: &F12Point) -> bool {
    let (a, b, c) = (p.a, p.b, p.c);
    let c1 = c > b - a + 0.5 - slack(c, b - a + 0.5) && b >= a - 0.5 - slack(b, a - 0.5);
    let lower = 3.0 * a + 0.5 - b;
    let c2 = c > lower - slack(c, lower) && b > a - slack(a, b);
    let c3 = 2.0 * (b - a) * (c - a) >= a - slack(2.0 * (b - a) * (c - a), a);
    c1 && c2 && c3
}

/// Result of certifying the expansion coefficients' signs.
///
/// Signs are decided in exact rational arithmetic: the alternating ₄F₃
/// sums cancel through ~10²⁵ by n = 40, far beyond f64.
#[derive(Debug, Clone)]
pub struct ExpansionCertificate {
    pub nu: f64,
    /// coefficients[i] = C(i+1, ν) (f64 image of the exact value)
    pub coefficients: Vec<f64>,
    /// C(1,ν) ≥ −ε with ε = 1e-12·(1 + the two-term scale of C(1,ν))
    pub first_nonneg: bool,
    /// C(n,ν) > 0 for 2 ≤ n ≤ n_max, exactly
    pub rest_positive: bool,
    pub certified: bool,
    pub conditions: W5Report,
}

/// Compute C(n,ν) for n = 1…n_max under the Saalschützian ν and certify
/// C(1,ν) ≥ −ε, C(n,ν) > 0 for n ≥ 2. Errors when the translated
/// conditions fail beyond ε-slack.
pub fn certify_expansion_positive(p: &F12Point, n_max: usize) -> Result<ExpansionCertificate> {
    use crate::exact::{rat_to_f64, sign, terminating_pfq_rat, Rat};
    use num_traits::One;

    if n_max == 0 {
        return Err(Error::InvalidParams("n_max must be positive".into()));
    }
    if !w5_holds_with_slack(p) {
        let rep = w5_conditions(p);
        return Err(Error::ConditionsViolated(format!(
            "translated conditions fail: ({}) ({}) ({})",
            rep.cond1, rep.cond2, rep.cond3
        )));
    }
    let nu = saalschutzian_nu(p);
    let conv = |x: f64| Rat::from_float(x).expect("finite parameter");
    let (rnu, ra, rb, rc) = (conv(nu), conv(p.a), conv(p.b), conv(p.c));
    let two_nu = rnu.clone() + &rnu;
    let dens = [
        rnu.clone() + conv(0.5),
        rb.clone(),
        rc.clone(),
    ];
    let mut coefficients = Vec::with_capacity(n_max);
    let mut first_nonneg = true;
    let mut rest_positive = true;
    let eps = 1e-12 * (1.0 + (2.0 * (nu + 1.0) * p.a / (p.b * p.c)).abs());
    for n in 1..=n_max {
        let nums = [
            Rat::from_integer(n.into()) + &two_nu,
            rnu.clone() + Rat::one(),
            ra.clone(),
        ];
        let exact = terminating_pfq_rat(&nums, &dens, n, &Rat::one())?;
        let value = rat_to_f64(&exact);
        if n == 1 {
            first_nonneg = value >= -eps;
        } else if sign(&exact) <= 0 {
            rest_positive = false;
        }
        coefficients.push(value);
    }
    Ok(ExpansionCertificate {
        nu,
        first_nonneg,
        rest_positive,
        certified: first_nonneg && rest_positive,
        conditions: w5_conditions(p),
        coefficients,
    })
}
