//! The tree function and the fixed-point systems for colored, covered and
//! matched trees, all specialized to a single variable `x` (every vertex
//! weight set to `x`).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::Series;
use crate::bcoloring::Color;
use crate::error::{Error, Result};

/// Truncation order used when the caller has no preference.
pub const DEFAULT_ORDER: usize = 30;

/// Named solution of a fixed-point system.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSystem {
    pub name: &'static str,
    pub order: usize,
    pub iterations: usize,
    unknowns: BTreeMap<&'static str, Series>,
}

impl SeriesSystem {
    pub fn get(&self, name: &str) -> &Series {
        self.unknowns.get(name).unwrap_or_else(|| panic!("{} has no series named {name}", self.name))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.unknowns.keys().copied()
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// Solves `X = step(X)` from `X = 0`.
///
/// Every right-hand side here carries a factor `x` (or more) in front of its
/// dependence on the unknowns, so iteration `k` is exact through order `k`.
/// That lets iteration `k` run at truncation `min(k, order)`; the residual is
/// checked against that bound at each step. Returns the solution and the
/// number of iterations.
fn solve_fixed_point(
    system: &'static str,
    order: usize,
    unknowns: usize,
    step: impl Fn(usize, &[Series]) -> Result<Vec<Series>>,
) -> Result<(Vec<Series>, usize)> {
    let mut cur = vec![Series::zero(0); unknowns];
    for k in 1..=order + 2 {
        let working = k.min(order);
        let padded: Vec<Series> = cur.iter().map(|s| s.with_order(working)).collect();
        let next = step(working, &padded)?;
        let agreement = next.iter().zip(&padded).map(|(a, b)| a.agreement(b)).min().unwrap_or(0);
        if agreement < k.min(working + 1) {
            return Err(Error::NonConvergence { system, iterations: k });
        }
        if working == order && agreement == order + 1 {
            return Ok((next, k));
        }
        cur = next;
    }
    Err(Error::NonConvergence { system, iterations: order + 2 })
}

/// The tree function `T(x) = sum n^(n-1)/n! x^n`, from its closed-form coefficients.
pub fn tree_function(order: usize) -> Series {
    let mut fact = BigInt::one();
    Series::from_fn(order, |n| {
        if n == 0 {
            return BigRational::from_integer(0.into());
        }
        fact *= n;
        BigRational::new(BigInt::from(n).pow(n as u32 - 1), fact.clone())
    })
}

/// The tree function as the fixed point of `T = x exp(T)`.
pub fn tree_function_by_iteration(order: usize) -> Result<Series> {
    let (mut sol, _) = solve_fixed_point("tree function", order, 1, |w, cur| Ok(vec![Series::x(w) * cur[0].exp()?]))?;
    Ok(sol.remove(0))
}

/// Closed forms for the color-total generating functions:
/// green `-T(-T)`, red `T(-T)^2`, brown `T + T(-T) - T(-T)^2`.
pub fn color_series(color: Color, order: usize) -> Result<Series> {
    let t = tree_function(order);
    let t_neg_t = t.compose(&-&t)?;
    let sq = &t_neg_t * &t_neg_t;
    Ok(match color {
        Color::Green => -t_neg_t,
        Color::Red => sq,
        Color::Brown => &(&t + &t_neg_t) - &sq,
    })
}

/// Colored rooted trees: green `G`, quasi-brown `U`, brown `B`, red `R`,
/// quasi-red `Q`, with every vertex weighted by `x`:
///
/// ```text
/// G = x e^U            U = x e^(B+R) (e^G - 1)
/// B = x e^(B+R) (e^G - 1 - G)
/// R = x Q e^(B+R)      Q = x e^(B+R)
/// ```
///
/// Also returns `F`, the unrooted colored-tree function, assembled from the
/// solution. Checks `B + R + G = T` and `Q e^Q = T` before returning.
pub fn solve_color_system(order: usize) -> Result<SeriesSystem> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let (sol, iterations) = solve_fixed_point("color system", order, 5, |w, cur| {
        let [g, u, b, r, q] = [&cur[0], &cur[1], &cur[2], &cur[3], &cur[4]];
        let x = Series::x(w);
        let one = Series::one(w);
        let e_s = (b + r).exp()?;
        let e_g = g.exp()?;
        let x_e_s = &x * &e_s;
        Ok(vec![&x * &u.exp()?, &x_e_s * &(&e_g - &one), &x_e_s * &(&(&e_g - &one) - g), &x_e_s * q, x_e_s])
    })?;
    let [g, u, b, r, q]: [Series; 5] = sol.try_into().expect("five unknowns");
    let x = Series::x(order);
    let one = Series::one(order);
    let s = &b + &r;
    let e_s = s.exp()?;
    let e_g = g.exp()?;
    let f = &(&(&(-&(&s * &s + &q * &q).scale(&half()) - &g * &u) + &(&x * &e_s) * &(&(&e_g - &one) - &g))
        + &(&x * &u.exp()?))
        + &(&(&x * &q) * &e_s);

    let t = tree_function(order);
    if &s + &g != t {
        return Err(Error::Inconsistency("color system: B + R + G differs from T".into()));
    }
    if &q * &q.exp()? != t {
        return Err(Error::Inconsistency("color system: Q e^Q differs from T".into()));
    }
    let unknowns = BTreeMap::from([("G", g), ("U", u), ("B", b), ("R", r), ("Q", q), ("F", f)]);
    Ok(SeriesSystem { name: "color system", order, iterations, unknowns })
}

/// `T(x^2 e^{2U})`, shared by the cover equations.
fn t_of_x2_e2u(t: &Series, u: &Series) -> Result<Series> {
    let w = u.order();
    let arg = Series::x(w).shift(1) * u.scale_int(2).exp()?;
    t.with_order(w).compose(&arg)
}

fn solve_u_vc(order: usize) -> Result<(Series, usize)> {
    // x U e^U = T(x^2 e^{2U}) (e^{x e^U} - 1), solved for U as
    // U = e^{-U} T(x^2 e^{2U}) (e^{x e^U} - 1) / x.
    // The division by x is done at one order higher and truncated back.
    let t = tree_function(order + 1);
    let (mut sol, it) = solve_fixed_point("cover function U", order, 1, |w, cur| {
        let u = cur[0].with_order(w + 1);
        let x = Series::x(w + 1);
        let e_u = u.exp()?;
        let rhs = t_of_x2_e2u(&t, &u)? * ((&x * &e_u).exp()? - Series::one(w + 1));
        Ok(vec![(rhs * (-&u).exp()?).div_x()?])
    })?;
    Ok((sol.remove(0), it))
}

/// Generating function `sum N_vc(n)/n! x^n` of the total number of minimum
/// vertex covers over labeled trees:
///
/// ```text
/// F_vc = (1 - U) x e^U - U T(x^2 e^{2U}) + U - U^2/2
/// x U e^U = T(x^2 e^{2U}) (e^{x e^U} - 1)
/// ```
pub fn cover_series(order: usize) -> Result<Series> {
    let (u, _) = solve_u_vc(order)?;
    let x = Series::x(order);
    let one = Series::one(order);
    let x_e_u = &x * &u.exp()?;
    let r = t_of_x2_e2u(&tree_function(order), &u)?;
    Ok(&(&(&(&one - &u) * &x_e_u) - &(&u * &r)) + &(&u - &(&u * &u).scale(&half())))
}

fn solve_u_m(order: usize) -> Result<(Series, usize)> {
    let (mut sol, it) = solve_fixed_point("matching function U", order, 1, |w, cur| {
        let u = &cur[0];
        let x = Series::x(w);
        let x2 = x.shift(1);
        let exponent = &(&(&x * &u.exp()?) - &(&x2 * &u.scale_int(2).exp()?)) + &u.scale_int(3);
        Ok(vec![x2 * exponent.exp()?])
    })?;
    Ok((sol.remove(0), it))
}

/// Generating function `sum N_m(n)/n! x^n` of the total number of maximum
/// matchings over labeled trees:
///
/// ```text
/// F_m = -(x e^U + U)^2 / 2 + (1 + U x e^U) x e^U + U - U^2
/// U = x^2 exp(-x^2 e^{2U} + x e^U + 3U)
/// ```
pub fn matching_series(order: usize) -> Result<Series> {
    let (u, _) = solve_u_m(order)?;
    let x = Series::x(order);
    let one = Series::one(order);
    let x_e_u = &x * &u.exp()?;
    let a = &x_e_u + &u;
    let first = -(&a * &a).scale(&half());
    let second = &(&one + &(&u * &x_e_u)) * &x_e_u;
    Ok(&(&first + &second) + &(&u - &(&u * &u)))
}

/// Covered rooted trees, split by root color and, for red roots, by whether
/// the cover contains the root:
///
/// ```text
/// B  = x (e^G - 1 - G) e^(B+R+ +R-)     G  = x e^U
/// R+ = x Q- e^(B+R+ +R-)                R- = x Q+ e^(B+R+)
/// U  = x (e^G - 1) e^(B+R+ +R-)
/// Q+ = x e^(B+R+ +R-)                   Q- = x e^(B+R+)
/// ```
///
/// Also returns `F` (the unrooted cover function assembled from these) and
/// `Rt = T(x^2 e^{2U})`. Checks `B + R+ = U`, `G = Q-` and `R+ = R- = Rt`.
pub fn solve_cover_system(order: usize) -> Result<SeriesSystem> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let (sol, iterations) = solve_fixed_point("cover system", order, 7, |w, cur| {
        let [b, g, rp, rm, u, qp, qm] = [&cur[0], &cur[1], &cur[2], &cur[3], &cur[4], &cur[5], &cur[6]];
        let x = Series::x(w);
        let one = Series::one(w);
        let e_all = (&(b + rp) + rm).exp()?;
        let e_bp = (b + rp).exp()?;
        let e_g = g.exp()?;
        let x_e_all = &x * &e_all;
        Ok(vec![
            &x_e_all * &(&(&e_g - &one) - g),
            &x * &u.exp()?,
            &x_e_all * qm,
            &(&x * qp) * &e_bp,
            &x_e_all * &(&e_g - &one),
            x_e_all,
            &x * &e_bp,
        ])
    })?;
    let [b, g, rp, rm, u, qp, qm]: [Series; 7] = sol.try_into().expect("seven unknowns");
    let x = Series::x(order);
    let one = Series::one(order);
    let e_all = (&(&b + &rp) + &rm).exp()?;
    let e_bp = (&b + &rp).exp()?;
    let e_g = g.exp()?;
    let gains = &(&(&(&x * &u.exp()?) + &(&(&x * &(&(&e_g - &one) - &g)) * &e_all)) + &(&(&x * &qm) * &e_all))
        + &(&(&x * &qp) * &e_bp);
    let losses = &(&(&(&(&g * &u) + &(&b * &b + &rp * &rp).scale(&half())) + &(&rp * &rm)) + &(&b * &(&rp + &rm)))
        + &(&qp * &qm);
    let f = &gains - &losses;

    let rt = t_of_x2_e2u(&tree_function(order), &u)?;
    if &b + &rp != u {
        return Err(Error::Inconsistency("cover system: B + R+ differs from U".into()));
    }
    if g != qm {
        return Err(Error::Inconsistency("cover system: G differs from Q-".into()));
    }
    if rp != rm || rp != rt {
        return Err(Error::Inconsistency("cover system: R+, R- and T(x^2 e^{2U}) differ".into()));
    }
    let unknowns = BTreeMap::from([
        ("B", b),
        ("G", g),
        ("R+", rp),
        ("R-", rm),
        ("U", u),
        ("Q+", qp),
        ("Q-", qm),
        ("F", f),
        ("Rt", rt),
    ]);
    Ok(SeriesSystem { name: "cover system", order, iterations, unknowns })
}

/// Matched rooted trees:
///
/// ```text
/// G+ = x U- e^(U+)                      G- = x e^(U+)
/// B  = x G- (e^(G+ + G-) - 1) e^(B+R)   R  = x Q e^(B+R)
/// U+ = x G- e^(G+ + G- + B + R)         U- = x (e^(G+ + G-) - 1) e^(B+R)
/// Q  = x e^(B+R)
/// ```
///
/// Also returns `F` (the unrooted matching function) and `Gt = U+ - x^2 e^{2U+}`.
/// Checks `B + R = U+`, `Q = G-` and `G+ = Gt`.
pub fn solve_matching_system(order: usize) -> Result<SeriesSystem> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let (sol, iterations) = solve_fixed_point("matching system", order, 7, |w, cur| {
        let [gp, gm, b, r, up, um, q] = [&cur[0], &cur[1], &cur[2], &cur[3], &cur[4], &cur[5], &cur[6]];
        let x = Series::x(w);
        let one = Series::one(w);
        let e_s = (b + r).exp()?;
        let e_gg = (gp + gm).exp()?;
        let e_up = up.exp()?;
        let x_e_s = &x * &e_s;
        Ok(vec![
            &(&x * um) * &e_up,
            &x * &e_up,
            &(&x_e_s * gm) * &(&e_gg - &one),
            &x_e_s * q,
            &(&x * gm) * &(&e_gg * &e_s),
            &x_e_s * &(&e_gg - &one),
            x_e_s,
        ])
    })?;
    let [gp, gm, b, r, up, um, q]: [Series; 7] = sol.try_into().expect("seven unknowns");
    let x = Series::x(order);
    let one = Series::one(order);
    let s = &b + &r;
    let e_s = s.exp()?;
    let e_up = up.exp()?;
    let e_gg = (&gp + &gm).exp()?;
    let gains = &(&(&(&(&x * &um) * &e_up) + &(&x * &e_up)) + &(&(&(&x * &gm) * &(&e_gg - &one)) * &e_s))
        + &(&(&x * &q) * &e_s);
    let losses = &(&(&gp * &up) + &(&gm * &(&up + &um))) + &(&s * &s + &q * &q).scale(&half());
    let f = &gains - &losses;

    let gt = &up - &(x.shift(1) * up.scale_int(2).exp()?);
    if s != up {
        return Err(Error::Inconsistency("matching system: B + R differs from U+".into()));
    }
    if q != gm {
        return Err(Error::Inconsistency("matching system: Q differs from G-".into()));
    }
    if gp != gt {
        return Err(Error::Inconsistency("matching system: G+ differs from U - x^2 e^{2U}".into()));
    }
    let unknowns = BTreeMap::from([
        ("G+", gp),
        ("G-", gm),
        ("B", b),
        ("R", r),
        ("U+", up),
        ("U-", um),
        ("Q", q),
        ("F", f),
        ("Gt", gt),
    ]);
    Ok(SeriesSystem { name: "matching system", order, iterations, unknowns })
}

/// Both refined systems: covered trees, then matched trees.
pub fn solve_refined_systems(order: usize) -> Result<(SeriesSystem, SeriesSystem)> {
    Ok((solve_cover_system(order)?, solve_matching_system(order)?))
}
