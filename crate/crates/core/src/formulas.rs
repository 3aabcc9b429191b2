//! Closed-form color totals over labeled trees and their large-n limits.
//!
//! The per-vertex color fractions are finite alternating binomial sums,
//!
//! ```text
//! N_B(n) / n^(n-1) = 1 + sum_{l=1..n} (-l/n)^l (2/l - 1) C(n,l)
//! N_R(n) / n^(n-1) =  -2 sum_{l=1..n} (-l/n)^l (1/l - 1) C(n,l)
//! N_G(n) / n^(n-1) =   - sum_{l=1..n} (-l/n)^l C(n,l)
//! ```
//!
//! evaluated here over the common denominator `n^n` with big integers. The
//! limits are expressed through `t = T(-1)`, the real root of `t = -e^t`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::bcoloring::Color;
use crate::error::{Error, Result};

fn pow(base: usize, exp: usize) -> BigInt {
    BigInt::from(base).pow(exp as u32)
}

/// The exact fraction `N_c(n) / n^(n-1)`.
pub fn finite_size_fraction_exact(color: Color, n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    // sum over l of (-1)^l l^(l-1) C(n,l) n^(n-l) * weight(l), over n^n.
    // (-l/n)^l / l = (-1)^l l^(l-1) / n^l.
    let weight = |l: i64| -> i64 {
        match color {
            Color::Brown => 2 - l,
            Color::Red => -2 * (1 - l),
            Color::Green => -l,
        }
    };
    let mut numer = BigInt::zero();
    let mut binom = BigInt::from(1);
    let mut n_pow = pow(n, n);
    for l in 1..=n {
        binom = binom * BigInt::from(n - l + 1) / BigInt::from(l);
        n_pow /= BigInt::from(n);
        let mut term = pow(l, l - 1) * &binom * &n_pow * BigInt::from(weight(l as i64));
        if l % 2 == 1 {
            term = -term;
        }
        numer += term;
    }
    let denom = pow(n, n);
    if color == Color::Brown {
        numer += &denom;
    }
    Ok(BigRational::new(numer, denom))
}

/// `N_c(n) / n^(n-1)` as a float; converges to the matching asymptotic fraction.
pub fn finite_size_fraction(color: Color, n: usize) -> Result<f64> {
    let exact = finite_size_fraction_exact(color, n)?;
    exact.to_f64().ok_or_else(|| Error::Inconsistency(format!("fraction for n = {n} not representable")))
}

/// Total number of `color` vertices over all labeled trees on `n` vertices.
pub fn closed_form_color_total(color: Color, n: usize) -> Result<BigUint> {
    let total = finite_size_fraction_exact(color, n)? * BigRational::from_integer(pow(n, n - 1));
    if !total.is_integer() || total.is_negative() {
        return Err(Error::NonIntegral { what: color.name(), n });
    }
    Ok(total.to_integer().to_biguint().expect("checked non-negative"))
}

/// Large-n limits of the per-vertex color fractions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticConstants {
    /// `T(-1)`, the root of `t = -e^t`.
    pub t1: f64,
    /// `T'(-1) = -t1 / (1 - t1)`.
    pub t1p: f64,
    /// `1 + T'(-1) + 2 T(-1)`
    pub brown_frac: f64,
    /// `-2 (T'(-1) + T(-1))`
    pub red_frac: f64,
    /// `T'(-1)`
    pub green_frac: f64,
    /// Fraction of vertices in a minimum vertex cover: `brown + red / 2`.
    pub cover_frac: f64,
}

/// Root of `t + e^t` on `[-1, 0]`: bisection down to a `1e-3` bracket, then
/// Newton steps kept inside the bracket until a step is below `tolerance`.
fn root_of_t_plus_exp_t(tolerance: f64) -> f64 {
    let h = |t: f64| t + t.exp();
    let (mut lo, mut hi) = (-1.0f64, 0.0f64);
    while hi - lo > 1e-3 {
        let mid = 0.5 * (lo + hi);
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut t = 0.5 * (lo + hi);
    for _ in 0..100 {
        let step = h(t) / (1.0 + t.exp());
        let next = t - step;
        if step.abs() < tolerance {
            return next;
        }
        t = if (lo..=hi).contains(&next) { next } else { 0.5 * (lo + hi) };
        if h(t) < 0.0 {
            lo = t;
        } else {
            hi = t;
        }
    }
    t
}

pub fn asymptotic_constants(tolerance: f64) -> Result<AsymptoticConstants> {
    if !(tolerance > 0.0 && tolerance <= 1e-6) {
        return Err(Error::InvalidArgument(format!("tolerance {tolerance} must lie in (0, 1e-6]")));
    }
    let t1 = root_of_t_plus_exp_t(tolerance);
    let t1p = -t1 / (1.0 - t1);
    let brown_frac = 1.0 + t1p + 2.0 * t1;
    let red_frac = -2.0 * (t1p + t1);
    let green_frac = t1p;
    Ok(AsymptoticConstants { t1, t1p, brown_frac, red_frac, green_frac, cover_frac: brown_frac + red_frac / 2.0 })
}
