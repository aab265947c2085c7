//! Exact inequality classifiers for the positivity regions of
//! Φ(x) = ₁F₂(a; b, c; −x²/4) and of the normalized Bessel integrals.
//!
//! In the (b, c) plane the corner set Λ = {(a+1/2, 2a), (2a, a+1/2)} anchors
//! a Newton diagram P_a; two strips O_a hug its lower edge, and N_a is the
//! rest of the open positive quadrant. P_a extends to the rational region
//!
//! ```text
//! P_a* = { b > a, c > a, c ≥ max(3a+1/2−b, a + a/(2(b−a))) }
//! ```
//!
//! whose hyperbola condition is evaluated here in the division-free form
//! 2(b−a)(c−a) ≥ a together with b+c ≥ 3a+1/2 (algebraically identical).
//! The (α, β) classifiers map through a = (α−β+1)/2, b = α+1,
//! c = a + γ + 1 (γ = 0 for the plain integral).
//!
//! Boundary semantics follow the printed strict/non-strict inequalities
//! exactly; only the measure-zero set Λ carries a tolerance.

use crate::error::{Error, Result};
use crate::roots;
use std::fmt;

/// Equality tolerance for the measure-zero corner set Λ.
pub const DEFAULT_LAMBDA_TOL: f64 = 1e-12;

/// Parameters (a, b, c) of Φ(x) = ₁F₂(a; b, c; −x²/4); all positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F12Point {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl F12Point {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && c > 0.0) {
            return Err(Error::InvalidParams(format!(
                "(a, b, c) = ({a}, {b}, {c}) must all be positive"
            )));
        }
        Ok(F12Point { a, b, c })
    }
}

/// Parameters (α, β) of ∫₀ˣ t^{−β} J_α(t) dt with α > −1, β < α+1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AskeyPoint {
    pub alpha: f64,
    pub beta: f64,
}

impl AskeyPoint {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::InvalidParams(format!("α = {alpha} must be > -1")));
        }
        if !(beta < alpha + 1.0) {
            return Err(Error::InvalidParams(format!(
                "β = {beta} must be < α+1 = {}",
                alpha + 1.0
            )));
        }
        Ok(AskeyPoint { alpha, beta })
    }
}

/// Parameters (α, β, γ) of ∫₀ˣ (x²−t²)^γ t^{−β} J_α(t) dt.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasperPoint {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl GasperPoint {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::InvalidParams(format!("α = {alpha} must be > -1")));
        }
        if !(gamma > -1.0) {
            return Err(Error::InvalidParams(format!("γ = {gamma} must be > -1")));
        }
        if !(beta < alpha + 1.0) {
            return Err(Error::InvalidParams(format!(
                "β = {beta} must be < α+1 = {}",
                alpha + 1.0
            )));
        }
        Ok(GasperPoint { alpha, beta, gamma })
    }
}

/// Classification verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    StrictlyPositive,
    NonnegativeWithZeros,
    AlternatesInSign,
    FailsNecessary,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::StrictlyPositive => "StrictlyPositive",
            Verdict::NonnegativeWithZeros => "NonnegativeWithZeros",
            Verdict::AlternatesInSign => "AlternatesInSign",
            Verdict::FailsNecessary => "FailsNecessary",
            Verdict::Unknown => "Unknown",
        })
    }
}

/// Which result justifies a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Justification {
    ThmA,
    ThmN1,
    ThmN2,
    ThmN3,
    ThmN4,
    Lambda,
    Necessity,
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Justification::ThmA => "ThmA",
            Justification::ThmN1 => "ThmN1",
            Justification::ThmN2 => "ThmN2",
            Justification::ThmN3 => "ThmN3",
            Justification::ThmN4 => "ThmN4",
            Justification::Lambda => "Lambda",
            Justification::Necessity => "Necessity",
        })
    }
}

/// Verdict plus justification tag. Legal pairs:
/// StrictlyPositive ↔ {ThmA, ThmN2, ThmN3, ThmN4},
/// NonnegativeWithZeros ↔ {Lambda}, AlternatesInSign ↔ {ThmN1},
/// FailsNecessary ↔ {Necessity}, Unknown ↔ none.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionLabel {
    pub verdict: Verdict,
    pub justification: Option<Justification>,
}

impl RegionLabel {
    fn new(verdict: Verdict, justification: Option<Justification>) -> Self {
        debug_assert!(Self::pair_is_legal(verdict, justification));
        RegionLabel {
            verdict,
            justification,
        }
    }

    pub fn pair_is_legal(verdict: Verdict, justification: Option<Justification>) -> bool {
        use Justification::*;
        use Verdict::*;
        match (verdict, justification) {
            (StrictlyPositive, Some(ThmA | ThmN2 | ThmN3 | ThmN4)) => true,
            (NonnegativeWithZeros, Some(Lambda)) => true,
            (AlternatesInSign, Some(ThmN1)) => true,
            (FailsNecessary, Some(Necessity)) => true,
            (Unknown, None) => true,
            _ => false,
        }
    }
}

/// Is (b, c) one of the two Λ corners, within `tol`?
pub fn lambda_membership(p: &F12Point, tol: f64) -> bool {
    let (a, b, c) = (p.a, p.b, p.c);
    ((b - (a + 0.5)).abs() <= tol && (c - 2.0 * a).abs() <= tol)
        || ((b - 2.0 * a).abs() <= tol && (c - (a + 0.5)).abs() <= tol)
}

/// Newton diagram P_a: the closed hull of the two upper-right quadrants at
/// the Λ corners, characterized by b ≥ m, c ≥ m, b+c ≥ 3a+1/2 with
/// m = min(a+1/2, 2a). (The corner-segment edge lies on b+c = 3a+1/2.)
pub fn in_newton_diagram(p: &F12Point) -> bool {
    let m = (p.a + 0.5).min(2.0 * p.a);
    p.b >= m && p.c >= m && p.b + p.c >= 3.0 * p.a + 0.5
}

/// The two symmetric strips O_a below the diagram's lower edge.
pub fn in_o_strip(p: &F12Point) -> bool {
    let (a, b, c) = (p.a, p.b, p.c);
    let upper = if a >= 0.5 { a + 0.5 } else { 2.0 * a };
    (a < b && b < upper && c >= 3.0 * a + 0.5 - b)
        || (a < c && c < upper && b >= 3.0 * a + 0.5 - c)
}

/// Rational extension P_a*: b > a, c > a, b+c ≥ 3a+1/2 and
/// 2(b−a)(c−a) ≥ a (the division-free form of the hyperbola condition).
pub fn in_p_star(p: &F12Point) -> bool {
    let (a, b, c) = (p.a, p.b, p.c);
    b > a && c > a && b + c >= 3.0 * a + 0.5 && 2.0 * (b - a) * (c - a) >= a
}

/// Classify (b, c) for Φ(x) = ₁F₂(a; b, c; −x²/4).
///
/// Precedence: Λ → NonnegativeWithZeros; P_a* ∖ Λ → StrictlyPositive;
/// the strips not covered by P_a* → Unknown; the rest of the open positive
/// quadrant (N_a) → AlternatesInSign.
pub fn classify_f12(p: &F12Point) -> RegionLabel {
    if lambda_membership(p, DEFAULT_LAMBDA_TOL) {
        RegionLabel::new(Verdict::NonnegativeWithZeros, Some(Justification::Lambda))
    } else if in_p_star(p) {
        RegionLabel::new(Verdict::StrictlyPositive, Some(Justification::ThmN2))
    } else if in_o_strip(p) {
        RegionLabel::new(Verdict::Unknown, None)
    } else {
        // P_a ⊆ P_a*, so falling through the diagram is impossible here
        debug_assert!(!in_newton_diagram(p));
        RegionLabel::new(Verdict::AlternatesInSign, Some(Justification::ThmN1))
    }
}

/// Cell-level classifier for grids; (b, c) outside the open positive
/// quadrant carries no verdict.
pub fn classify_f12_cell(a: f64, b: f64, c: f64) -> RegionLabel {
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return RegionLabel::new(Verdict::Unknown, None);
    }
    classify_f12(&F12Point { a, b, c })
}

/// Map (α, β) to the (a, b, c) of the normalized integrand:
/// a = (α−β+1)/2, b = α+1, c = a+1.
pub fn askey_to_f12(q: &AskeyPoint) -> F12Point {
    let a = (q.alpha - q.beta + 1.0) / 2.0;
    F12Point {
        a,
        b: q.alpha + 1.0,
        c: a + 1.0,
    }
}

/// Map (α, β, γ): a = (α−β+1)/2, b = α+1, c = a+γ+1.
pub fn gasper_to_f12(q: &GasperPoint) -> F12Point {
    let a = (q.alpha - q.beta + 1.0) / 2.0;
    F12Point {
        a,
        b: q.alpha + 1.0,
        c: a + q.gamma + 1.0,
    }
}

/// Classification mode for the (α, β) plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AskeyMode {
    /// Only the explicit inequality regions.
    TheoremsOnly,
    /// Additionally resolve −1 < α ≤ 1/2 by comparing β against the
    /// computed threshold root β(α).
    Exact,
}

/// The classical positivity polygon
/// 𝒫 = {α>−1, 0≤β<α+1} ∪ {α≥0, max(−α,−1/2)≤β≤0}.
pub fn in_askey_classic(alpha: f64, beta: f64) -> bool {
    (alpha > -1.0 && 0.0 <= beta && beta < alpha + 1.0)
        || (alpha >= 0.0 && (-alpha).max(-0.5) <= beta && beta <= 0.0)
}

/// The extended region 𝒫* = {α>−1, max(−1/2, −(α+1)/3) ≤ β < α+1}.
pub fn in_askey_star(alpha: f64, beta: f64) -> bool {
    alpha > -1.0 && beta >= (-0.5f64).max(-(alpha + 1.0) / 3.0) && beta < alpha + 1.0
}

fn classify_askey_theorems(alpha: f64, beta: f64) -> RegionLabel {
    // necessary window: α > −1, −α−1 < β < α+1, β ≥ −1/2
    if beta < -0.5 || beta <= -alpha - 1.0 || beta >= alpha + 1.0 || alpha <= -1.0 {
        return RegionLabel::new(Verdict::FailsNecessary, Some(Justification::Necessity));
    }
    if (alpha - 0.5).abs() <= DEFAULT_LAMBDA_TOL && (beta + 0.5).abs() <= DEFAULT_LAMBDA_TOL {
        return RegionLabel::new(Verdict::NonnegativeWithZeros, Some(Justification::Lambda));
    }
    if in_askey_star(alpha, beta) {
        let tag = if in_askey_classic(alpha, beta) {
            Justification::ThmA
        } else {
            Justification::ThmN3
        };
        return RegionLabel::new(Verdict::StrictlyPositive, Some(tag));
    }
    RegionLabel::new(Verdict::Unknown, None)
}

/// Cell-level (α, β) classifier (theorem regions only).
pub fn classify_askey_cell(alpha: f64, beta: f64) -> RegionLabel {
    classify_askey_theorems(alpha, beta)
}

/// Classify a valid (α, β) point.
///
/// In [`AskeyMode::Exact`] the residual region with −1 < α ≤ 1/2 is
/// resolved against the computed root β(α): above → StrictlyPositive,
/// below → FailsNecessary, equality (within root accuracy) → the
/// measure-zero nonnegative case.
pub fn classify_askey(q: &AskeyPoint, mode: AskeyMode) -> Result<RegionLabel> {
    let base = classify_askey_theorems(q.alpha, q.beta);
    if mode == AskeyMode::TheoremsOnly
        || base.verdict != Verdict::Unknown
        || !(q.alpha <= 0.5)
    {
        return Ok(base);
    }
    let root = roots::beta_root(q.alpha, roots::DEFAULT_ROOT_TOL)?;
    let eq_tol = 2e-9;
    Ok(if q.beta > root.value + eq_tol {
        RegionLabel::new(Verdict::StrictlyPositive, Some(Justification::ThmN3))
    } else if q.beta < root.value - eq_tol {
        RegionLabel::new(Verdict::FailsNecessary, Some(Justification::Necessity))
    } else {
        RegionLabel::new(Verdict::NonnegativeWithZeros, Some(Justification::Lambda))
    })
}

/// Gasper's original region 𝒮_γ.
pub fn in_gasper_region(alpha: f64, beta: f64, gamma: f64) -> bool {
    if gamma <= -0.5 {
        alpha >= gamma + 0.5 && alpha - 2.0 * gamma - 1.0 <= beta && beta < alpha + 1.0
    } else {
        (alpha > -1.0 && 0.0 <= beta && beta < alpha + 1.0)
            || (alpha >= gamma + 0.5 && -(gamma + 0.5) <= beta && beta <= 0.0)
    }
}

/// The extended region 𝒮_γ* =
/// {α>−1, max(−(γ+1/2), −(2γ+1)/(2γ+3)·(α+1)) ≤ β < α+1}.
pub fn in_gasper_star(alpha: f64, beta: f64, gamma: f64) -> bool {
    let floor = (-(gamma + 0.5)).max(-(2.0 * gamma + 1.0) / (2.0 * gamma + 3.0) * (alpha + 1.0));
    alpha > -1.0 && beta >= floor && beta < alpha + 1.0
}

/// Cell-level (α, β) classifier at fixed γ.
pub fn classify_gasper_cell(alpha: f64, beta: f64, gamma: f64) -> RegionLabel {
    // necessary window: β ≥ −(γ+1/2), −α−1 < β < α+1
    if beta < -(gamma + 0.5) || beta <= -alpha - 1.0 || beta >= alpha + 1.0 || alpha <= -1.0 {
        return RegionLabel::new(Verdict::FailsNecessary, Some(Justification::Necessity));
    }
    let t = DEFAULT_LAMBDA_TOL;
    let corner = (alpha - (gamma + 0.5)).abs() <= t && (beta + (gamma + 0.5)).abs() <= t;
    let half_line = (gamma + 0.5).abs() <= t && beta.abs() <= t;
    if corner || half_line {
        return RegionLabel::new(Verdict::NonnegativeWithZeros, Some(Justification::Lambda));
    }
    if in_gasper_star(alpha, beta, gamma) {
        return RegionLabel::new(Verdict::StrictlyPositive, Some(Justification::ThmN4));
    }
    RegionLabel::new(Verdict::Unknown, None)
}

/// Classification of a valid (α, β, γ) point plus the membership flag for
/// Gasper's original region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasperClassification {
    pub label: RegionLabel,
    pub in_gasper_region: bool,
}

pub fn classify_gasper(q: &GasperPoint) -> GasperClassification {
    GasperClassification {
        label: classify_gasper_cell(q.alpha, q.beta, q.gamma),
        in_gasper_region: in_gasper_region(q.alpha, q.beta, q.gamma),
    }
}

/// What a region grid ranges over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridKind {
    /// Fixed a; axes are (b, c).
    F12 { a: f64 },
    /// Axes are (α, β).
    Askey,
    /// Fixed γ; axes are (α, β).
    Gasper { gamma: f64 },
}

/// Row-major grid of labels (axis1 outer, axis2 inner); deterministic.
#[derive(Debug, Clone)]
pub struct RegionGrid {
    pub kind: GridKind,
    pub axis1: Vec<f64>,
    pub axis2: Vec<f64>,
    pub labels: Vec<RegionLabel>,
}

fn linspace(range: (f64, f64), n: usize) -> Vec<f64> {
    let (lo, hi) = range;
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Evaluate the classifier over a rectangle.
pub fn region_grid(
    kind: GridKind,
    range1: (f64, f64),
    range2: (f64, f64),
    res1: usize,
    res2: usize,
) -> Result<RegionGrid> {
    if res1 < 2 || res2 < 2 {
        return Err(Error::InvalidParams(
            "grid resolution must be at least 2 per axis".into(),
        ));
    }
    match kind {
        GridKind::F12 { a } if !(a > 0.0) => {
            return Err(Error::InvalidParams(format!("a = {a} must be positive")))
        }
        GridKind::Gasper { gamma } if !(gamma > -1.0) => {
            return Err(Error::InvalidParams(format!("γ = {gamma} must be > -1")))
        }
        _ => {}
    }
    let axis1 = linspace(range1, res1);
    let axis2 = linspace(range2, res2);
    let mut labels = Vec::with_capacity(res1 * res2);
    for &u in &axis1 {
        for &v in &axis2 {
            labels.push(match kind {
                GridKind::F12 { a } => classify_f12_cell(a, u, v),
                GridKind::Askey => classify_askey_cell(u, v),
                GridKind::Gasper { gamma } => classify_gasper_cell(u, v, gamma),
            });
        }
    }
    Ok(RegionGrid {
        kind,
        axis1,
        axis2,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f12(a: f64, b: f64, c: f64) -> F12Point {
        F12Point::new(a, b, c).unwrap()
    }

    #[test]
    fn lambda_corners() {
        assert!(lambda_membership(&f12(1.0, 1.5, 2.0), DEFAULT_LAMBDA_TOL));
        assert!(lambda_membership(&f12(1.0, 2.0, 1.5), DEFAULT_LAMBDA_TOL));
        assert!(!lambda_membership(&f12(1.0, 1.5, 2.1), DEFAULT_LAMBDA_TOL));
    }

    #[test]
    fn newton_diagram_membership() {
        assert!(in_newton_diagram(&f12(1.0, 1.5, 2.0)));
        assert!(in_newton_diagram(&f12(1.0, 1.55, 1.96))); // 3.51 ≥ 3.5
        assert!(!in_newton_diagram(&f12(1.0, 1.5, 1.9))); // 3.4 < 3.5
    }

    #[test]
    fn o_strip_membership() {
        assert!(in_o_strip(&f12(1.0, 1.2, 2.4))); // 1 < 1.2 < 1.5, 2.4 ≥ 2.3
        assert!(!in_o_strip(&f12(1.0, 1.2, 2.2))); // 2.2 < 2.3
        assert!(in_o_strip(&f12(0.25, 0.3, 1.0))); // small-a branch
    }

    #[test]
    fn p_star_membership() {
        assert!(in_p_star(&f12(1.0, 3.0, 3.0)));
        assert!(!in_p_star(&f12(1.0, 1.2, 2.4))); // 2·0.2·1.4 = 0.56 < 1
        assert!(in_p_star(&f12(1.0, 1.5, 2.0))); // Λ sits on the hyperbola
    }

    #[test]
    fn p_subset_of_p_star_on_a_grid() {
        for ai in 1..=10 {
            let a = ai as f64 * 0.3;
            for bi in 0..60 {
                for ci in 0..60 {
                    let b = 0.05 + bi as f64 * 0.11;
                    let c = 0.05 + ci as f64 * 0.11;
                    let p = f12(a, b, c);
                    if in_newton_diagram(&p) {
                        assert!(in_p_star(&p), "P ⊄ P* at ({a}, {b}, {c})");
                    }
                    // swap symmetry of P*
                    let q = f12(a, c, b);
                    assert_eq!(in_p_star(&p), in_p_star(&q));
                }
            }
        }
    }

    #[test]
    fn classify_f12_examples() {
        assert_eq!(
            classify_f12(&f12(1.0, 1.5, 2.0)).verdict,
            Verdict::NonnegativeWithZeros
        );
        assert_eq!(
            classify_f12(&f12(1.0, 1.2, 1.2)).verdict,
            Verdict::AlternatesInSign
        );
        assert_eq!(classify_f12(&f12(1.0, 1.2, 2.4)).verdict, Verdict::Unknown);
        let sp = classify_f12(&f12(1.0, 3.0, 3.0));
        assert_eq!(sp.verdict, Verdict::StrictlyPositive);
        assert_eq!(sp.justification, Some(Justification::ThmN2));
    }

    #[test]
    fn classify_partition_is_exhaustive_and_legal() {
        for ai in [0.2, 0.5, 0.8, 1.0, 2.3] {
            for bi in 0..50 {
                for ci in 0..50 {
                    let p = f12(ai, 0.04 + bi as f64 * 0.13, 0.04 + ci as f64 * 0.13);
                    let l = classify_f12(&p);
                    assert!(RegionLabel::pair_is_legal(l.verdict, l.justification));
                    // exactly one of the four partition cells
                    let lam = lambda_membership(&p, DEFAULT_LAMBDA_TOL);
                    let star = in_p_star(&p) && !lam;
                    let strip = in_o_strip(&p) && !in_p_star(&p) && !lam;
                    let rest = !lam && !in_p_star(&p) && !in_o_strip(&p);
                    assert_eq!(
                        1,
                        lam as u8 + star as u8 + strip as u8 + rest as u8
                    );
                }
            }
        }
    }

    #[test]
    fn askey_map_examples() {
        let p = askey_to_f12(&AskeyPoint::new(0.5, -0.5).unwrap());
        assert_eq!((p.a, p.b, p.c), (1.0, 1.5, 2.0));
        let p = askey_to_f12(&AskeyPoint::new(0.0, 0.0).unwrap());
        assert_eq!((p.a, p.b, p.c), (0.5, 1.0, 1.5));
        // β = α cancels to a = 1/2
        let p = askey_to_f12(&AskeyPoint::new(1.7, 1.7).unwrap());
        assert_eq!((p.a, p.b, p.c), (0.5, 2.7, 1.5));
    }

    #[test]
    fn gasper_map_examples() {
        // γ = 0 reduces to the plain map
        let q = GasperPoint::new(0.3, -0.2, 0.0).unwrap();
        let viag = gasper_to_f12(&q);
        let via = askey_to_f12(&AskeyPoint::new(0.3, -0.2).unwrap());
        assert_eq!(viag, via);
        // (γ+1/2, −(γ+1/2), γ) lands on a Λ corner
        let g = 0.75;
        let q = GasperPoint::new(g + 0.5, -(g + 0.5), g).unwrap();
        let p = gasper_to_f12(&q);
        assert_eq!((p.a, p.b, p.c), (g + 1.0, g + 1.5, 2.0 * (g + 1.0)));
        assert!(lambda_membership(&p, DEFAULT_LAMBDA_TOL));
        // (α, 0, −1/2) lands on the swapped Λ corner
        let q = GasperPoint::new(1.3, 0.0, -0.5).unwrap();
        let p = gasper_to_f12(&q);
        assert_eq!((p.a, p.b, p.c), (1.15, 2.3, 1.65));
        assert!(lambda_membership(&p, DEFAULT_LAMBDA_TOL));
    }

    #[test]
    fn classify_askey_theorem_regions() {
        let sp = classify_askey(&AskeyPoint::new(0.0, 0.0).unwrap(), AskeyMode::TheoremsOnly)
            .unwrap();
        assert_eq!(sp.verdict, Verdict::StrictlyPositive);
        assert_eq!(sp.justification, Some(Justification::ThmA));

        let nz = classify_askey(&AskeyPoint::new(0.5, -0.5).unwrap(), AskeyMode::TheoremsOnly)
            .unwrap();
        assert_eq!(nz.verdict, Verdict::NonnegativeWithZeros);

        let fails =
            classify_askey(&AskeyPoint::new(0.0, -0.7).unwrap(), AskeyMode::TheoremsOnly)
                .unwrap();
        assert_eq!(fails.verdict, Verdict::FailsNecessary);

        // the triangle −(α+1)/3 ≤ β < min(0, −α) is newly strict-positive
        let tri = classify_askey(&AskeyPoint::new(0.2, -0.35).unwrap(), AskeyMode::TheoremsOnly)
            .unwrap();
        assert_eq!(tri.verdict, Verdict::StrictlyPositive);
        assert_eq!(tri.justification, Some(Justification::ThmN3));

        let unk = classify_askey(&AskeyPoint::new(0.0, -0.4).unwrap(), AskeyMode::TheoremsOnly)
            .unwrap();
        assert_eq!(unk.verdict, Verdict::Unknown);
    }

    #[test]
    fn classify_gasper_examples() {
        let q = GasperPoint::new(2.0, -0.5, 1.0).unwrap();
        let c = classify_gasper(&q);
        assert_eq!(c.label.verdict, Verdict::StrictlyPositive);
        assert_eq!(c.label.justification, Some(Justification::ThmN4));
        assert!(c.in_gasper_region); // β = −0.5 ≥ −(γ+1/2) = −1.5, α ≥ 1.5

        let q = GasperPoint::new(1.0, 0.0, -0.5).unwrap();
        assert_eq!(
            classify_gasper(&q).label.verdict,
            Verdict::NonnegativeWithZeros
        );

        let q = GasperPoint::new(0.5, -0.5, 0.0).unwrap();
        assert_eq!(
            classify_gasper(&q).label.verdict,
            Verdict::NonnegativeWithZeros
        );
    }

    #[test]
    fn gasper_gamma_zero_matches_askey_on_grid() {
        for ai in 0..30 {
            for bi in 0..30 {
                let alpha = -1.2 + ai as f64 * 0.15;
                let beta = -1.2 + bi as f64 * 0.15;
                let g = classify_gasper_cell(alpha, beta, 0.0);
                let a = classify_askey_cell(alpha, beta);
                assert_eq!(g.verdict, a.verdict, "at ({alpha}, {beta})");
            }
        }
    }

    #[test]
    fn grid_shape_and_determinism() {
        let g1 = region_grid(GridKind::F12 { a: 1.0 }, (0.5, 4.0), (0.5, 4.0), 8, 8).unwrap();
        assert_eq!(g1.labels.len(), 64);
        // cell nearest (3, 3) is strictly positive
        let bi = g1.axis1.iter().position(|&b| (b - 3.0).abs() < 0.3).unwrap();
        let ci = g1.axis2.iter().position(|&c| (c - 3.0).abs() < 0.3).unwrap();
        assert_eq!(
            g1.labels[bi * 8 + ci].verdict,
            Verdict::StrictlyPositive
        );
        let g2 = region_grid(GridKind::F12 { a: 1.0 }, (0.5, 4.0), (0.5, 4.0), 8, 8).unwrap();
        assert_eq!(g1.labels, g2.labels);
    }

    #[test]
    fn askey_grid_necessity_band() {
        let g = region_grid(GridKind::Askey, (-1.0, 3.0), (-1.0, 3.0), 9, 9).unwrap();
        for (i, &alpha) in g.axis1.iter().enumerate() {
            for (j, &beta) in g.axis2.iter().enumerate() {
                if beta < -0.5 {
                    assert_eq!(
                        g.labels[i * 9 + j].verdict,
                        Verdict::FailsNecessary,
                        "at ({alpha}, {beta})"
                    );
                }
            }
        }
    }

    #[test]
    fn grid_rejects_degenerate_resolution() {
        assert!(region_grid(GridKind::Askey, (0.0, 1.0), (0.0, 1.0), 1, 8).is_err());
    }
}
