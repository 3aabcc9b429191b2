//! Truncated power series with exact rational coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `x^0..=x^N`. Binary
//! operations on series of different orders truncate to the smaller one.

mod systems;

pub use systems::{
    color_series, cover_series, matching_series, solve_color_system, solve_cover_system, solve_matching_system,
    solve_refined_systems, tree_function, tree_function_by_iteration, SeriesSystem, DEFAULT_ORDER,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigRational::one())
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, BigRational::one())
    }

    /// `c * x^k`, truncated (to zero if `k > order`).
    pub fn monomial(order: usize, k: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigRational) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Truncates or zero-pads to `order`.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Number of leading coefficients on which `self` and `other` agree.
    pub fn agreement(&self, other: &Series) -> usize {
        self.coeffs.iter().zip(&other.coeffs).take_while(|(a, b)| a == b).count()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        Series::from_fn(order, |i| if i >= k { self.coeffs[i - k].clone() } else { BigRational::zero() })
    }

    /// Divides by `x`; the constant term must vanish. The top coefficient
    /// becomes unknown and the order drops by one.
    pub fn div_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesPrecondition("div_x needs a zero constant term"));
        }
        if self.order() == 0 {
            return Err(Error::SeriesPrecondition("div_x needs order >= 1"));
        }
        Ok(Series { coeffs: self.coeffs[1..].to_vec() })
    }

    pub fn derivative(&self) -> Self {
        let order = self.order();
        Series::from_fn(
            order,
            |k| {
                if k < order {
                    &self.coeffs[k + 1] * rat(k as i64 + 1)
                } else {
                    BigRational::zero()
                }
            },
        )
    }

    /// `exp(self)`; the constant term must vanish.
    ///
    /// Uses `n g_n = sum_{k=1..n} k f_k g_{n-k}`, from `g' = f' g`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesPrecondition("exp needs a zero constant term"));
        }
        let order = self.order();
        let weighted: Vec<BigRational> = self.coeffs.iter().enumerate().map(|(k, f)| f * rat(k as i64)).collect();
        let mut g = Vec::with_capacity(order + 1);
        g.push(BigRational::one());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !weighted[k].is_zero() {
                    acc += &weighted[k] * &g[n - k];
                }
            }
            g.push(acc / rat(n as i64));
        }
        Ok(Series { coeffs: g })
    }

    /// `self(inner(x))`; `inner` must have a zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::SeriesPrecondition("compose needs an inner series with zero constant term"));
        }
        let order = self.order().min(inner.order());
        let inner = inner.with_order(order);
        let mut acc = Series::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `n! [x^n]`, the count an exponential generating function encodes.
    pub fn egf_count(&self, n: usize) -> BigRational {
        let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
        &self.coeffs[n] * BigRational::from_integer(fact)
    }

    /// `n! [x^n]` for every `n`, failing if any is not an integer.
    pub fn egf_counts(&self) -> Result<Vec<BigInt>> {
        (0..=self.order())
            .map(|n| {
                let c = self.egf_count(n);
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral { what: "egf coefficient", n })
                }
            })
            .collect()
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("({c})x^{k}")).collect();
        write!(f, "{} + O(x^{})", if terms.is_empty() { "0".into() } else { terms.join(" + ") }, self.order() + 1)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series { (&self).$m(&rhs) }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $m(self, rhs: &Series) -> Series { (&self).$m(rhs) }
        }
        impl $tr<Series> for &Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}
