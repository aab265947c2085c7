//! Property-based invariants: algebraic identities of the series layer and
//! structural invariants of the region classifiers.

use hyperbessel::bessel;
use hyperbessel::gamma::gamma;
use hyperbessel::regions::{
    self, classify_askey_cell, classify_f12_cell, in_askey_star, AskeyPoint, F12Point,
    RegionLabel, Verdict,
};
use hyperbessel::series::{
    eval_pfq, eval_pfq_extended, eval_terminating, pochhammer, HyperParams, DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn pochhammer_splitting(alpha in -8.0f64..8.0, n in 0usize..20, split in 0usize..20) {
        let k = split.min(n);
        let whole = pochhammer(alpha, n);
        let parts = pochhammer(alpha, k) * pochhammer(alpha + k as f64, n - k);
        prop_assert!(
            (whole - parts).abs() <= 1e-13 * whole.abs().max(1e-300),
            "({alpha})_{n} = {whole} vs split {parts}"
        );
    }

    #[test]
    fn term_ratio_tolerance_consistency(
        a in 0.3f64..3.0,
        b in 0.3f64..3.5,
        c in 0.3f64..3.5,
        z in -20.0f64..0.0,
    ) {
        let p = HyperParams::f12(a, b, c).unwrap();
        let t = 1e-8;
        let coarse = eval_pfq(&p, z, t, DEFAULT_MAX_TERMS).unwrap().value;
        let fine = eval_pfq(&p, z, t / 10.0, DEFAULT_MAX_TERMS).unwrap().value;
        prop_assert!((coarse - fine).abs() <= 10.0 * t * fine.abs().max(1e-30));
    }

    #[test]
    fn terminating_matches_full_run(
        n in 1usize..9,
        a in 0.2f64..2.5,
        b in 0.4f64..3.0,
        c in 0.4f64..3.0,
        z in 0.2f64..1.5,
    ) {
        let p = HyperParams::new(vec![-(n as f64), a, c], vec![b, c + 0.3]).unwrap();
        let finite = eval_terminating(&p, n, z).unwrap();
        let infinite = eval_pfq(&p, z, DEFAULT_TOL, DEFAULT_MAX_TERMS).unwrap().value;
        prop_assert!(
            (finite - infinite).abs() <= 1e-12 * finite.abs().max(1.0),
            "{finite} vs {infinite}"
        );
    }

    #[test]
    fn classifier_labels_are_legal_and_swap_invariant(
        a in 0.05f64..3.0,
        b in 0.05f64..6.0,
        c in 0.05f64..6.0,
    ) {
        let l = classify_f12_cell(a, b, c);
        prop_assert!(RegionLabel::pair_is_legal(l.verdict, l.justification));
        // the region geometry is symmetric in (b, c)
        let swapped = classify_f12_cell(a, c, b);
        prop_assert_eq!(l.verdict, swapped.verdict);
    }

    #[test]
    fn newton_diagram_inside_rational_extension(
        a in 0.05f64..3.0,
        b in 0.05f64..6.0,
        c in 0.05f64..6.0,
    ) {
        let p = F12Point::new(a, b, c).unwrap();
        if regions::in_newton_diagram(&p) {
            prop_assert!(regions::in_p_star(&p));
        }
    }

    #[test]
    fn askey_and_f12_classifiers_agree(
        alpha in -0.95f64..3.0,
        beta in -2.0f64..2.0,
    ) {
        prop_assume!(beta < alpha + 1.0);
        let q = AskeyPoint::new(alpha, beta).unwrap();
        let askey = classify_askey_cell(alpha, beta);
        let f12 = regions::classify_f12(&regions::askey_to_f12(&q));
        match askey.verdict {
            // positive verdicts must agree exactly
            Verdict::StrictlyPositive | Verdict::NonnegativeWithZeros => {
                prop_assert_eq!(askey.verdict, f12.verdict)
            }
            // the necessity region maps into the alternation region
            Verdict::FailsNecessary => prop_assert!(matches!(
                f12.verdict,
                Verdict::AlternatesInSign | Verdict::FailsNecessary
            )),
            _ => {}
        }
    }
}

#[test]
fn new_triangle_is_strictly_positive() {
    // the trapezoid −1 < α < 1/2, −1/2 ≤ β < min(0, −α), restricted to
    // β ≥ −(α+1)/3, is labeled strictly positive throughout
    let mut cells = 0usize;
    for i in 0..120 {
        for j in 0..60 {
            let alpha = -0.999 + 1.498 * i as f64 / 119.0;
            let beta = -0.5 + 0.5 * j as f64 / 59.0;
            if beta >= 0.0f64.min(-alpha) || beta < -(alpha + 1.0) / 3.0 {
                continue;
            }
            cells += 1;
            assert!(in_askey_star(alpha, beta));
            let label = classify_askey_cell(alpha, beta);
            assert_eq!(
                label.verdict,
                Verdict::StrictlyPositive,
                "at ({alpha}, {beta})"
            );
        }
    }
    assert!(cells > 500, "triangle sampling too sparse: {cells}");
}

#[test]
fn squared_bessel_identity() {
    // 𝕁²_α(x) = ₁F₂(α+1/2; α+1, 2α+1; −x²), α > −1/2
    for &alpha in &[-0.4, -0.1, 0.0, 0.5, 1.0, 2.5] {
        let params = HyperParams::f12(alpha + 0.5, alpha + 1.0, 2.0 * alpha + 1.0).unwrap();
        let mut x = 0.5;
        while x <= 10.0 {
            let jj = bessel::jj(alpha, x).unwrap();
            let lhs = jj * jj;
            let rhs = eval_pfq_extended(&params, -x * x, DEFAULT_TOL, DEFAULT_MAX_TERMS)
                .unwrap()
                .value;
            let scale = lhs.abs().max(rhs.abs());
            if scale > 1e-6 {
                assert!(
                    (lhs - rhs).abs() <= 1e-11 * scale,
                    "α = {alpha}, x = {x}: {lhs} vs {rhs}"
                );
            } else {
                // at a double zero both sides vanish; compare absolutely
                assert!((lhs - rhs).abs() <= 1e-13);
            }
            x += 0.5;
        }
    }
}

#[test]
fn prefactor_scaling_identity() {
    // J_α(t) computed termwise with per-term gamma values agrees with
    // (t/2)^α / Γ(α+1) · 𝕁_α(t) — an independent route through Γ(α+k+1)
    for &alpha in &[-0.7, -0.5, 0.0, 0.5, 1.3, 2.0] {
        let mut t = 0.4;
        while t <= 20.0 {
            let via_jj = bessel::bessel_j(alpha, t).unwrap();
            let mut direct = 0.0f64;
            let mut k = 0usize;
            loop {
                let term = (-1.0f64).powi(k as i32) * (t / 2.0).powf(alpha + 2.0 * k as f64)
                    / (pochhammer(1.0, k) * gamma(alpha + k as f64 + 1.0));
                direct += term;
                if term.abs() < 1e-18 * direct.abs().max(1e-10) || k > 80 {
                    break;
                }
                k += 1;
            }
            assert!(
                (via_jj - direct).abs() <= 1e-12 * via_jj.abs().max(0.01),
                "α = {alpha}, t = {t}: {via_jj} vs {direct}"
            );
            t += 1.7;
        }
    }
}
