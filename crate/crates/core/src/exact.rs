//! Exact-rational mode for terminating sums.
//!
//! When all parameters are rational with small denominators (the property
//! suites draw dyadics, which also convert losslessly to f64), terminating
//! series and the Whipple-transform machinery can be evaluated in exact
//! `BigRational` arithmetic. The identity suites rely on this: the direct
//! ₄F₃ sums at n = 30..50 cancel through ~10¹⁶, far beyond what f64 carries.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Exact conversion of a finite f64 (dyadic rationals round-trip losslessly).
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

/// (α)_k in exact arithmetic.
pub fn pochhammer_rat(alpha: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    let mut f = alpha.clone();
    for _ in 0..k {
        acc *= &f;
        f += Rat::one();
    }
    acc
}

/// Binomial coefficient C(n, k).
pub fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Terminating ₚF_q in binomial form, exactly:
/// Σ_{k=0}^{n} (−1)^k C(n,k) Π(αᵢ)_k / Π(βⱼ)_k · z^k.
///
/// `nums` lists the numerator parameters other than the designated −n.
pub fn terminating_pfq_rat(nums: &[Rat], dens: &[Rat], n: usize, z: &Rat) -> Result<Rat> {
    let mut sum = Rat::zero();
    let mut num_poch: Vec<Rat> = nums.to_vec();
    let mut den_poch: Vec<Rat> = dens.to_vec();
    let mut term = Rat::one();
    sum += &term;
    for k in 0..n {
        let mut ratio = -z * Rat::from_integer(BigInt::from(n - k))
            / Rat::from_integer(BigInt::from(k + 1));
        for a in num_poch.iter_mut() {
            ratio *= &*a;
            *a += Rat::one();
        }
        for b in den_poch.iter_mut() {
            if b.is_zero() {
                return Err(Error::UndefinedDenominator { k: k + 1 });
            }
            ratio /= &*b;
            *b += Rat::one();
        }
        term *= ratio;
        sum += &term;
    }
    Ok(sum)
}

/// Best-effort f64 image of a rational (for reporting only).
pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    let num = r.numer();
    let den = r.denom();
    // shift each side into f64 range independently, then recombine the
    // power-of-two exponents
    let sn = num.bits().saturating_sub(53);
    let sd = den.bits().saturating_sub(53);
    let nf = (num >> sn).to_f64().unwrap_or(f64::NAN);
    let df = (den >> sd).to_f64().unwrap_or(f64::NAN);
    let exp = (sn as i64 - sd as i64).clamp(-2100, 2100) as i32;
    (nf / df) * 2f64.powi(exp)
}

/// Sign of a rational as −1, 0, +1.
pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
