//! Exhaustive enumeration of labeled trees and uniform random sampling.
//!
//! Trees on `n >= 3` vertices are walked as Prüfer sequences with an
//! odometer. Fixing the first digit splits the space into `n` shards of
//! `n^(n-3)` trees each; shard totals merge by plain addition.

use std::ops::AddAssign;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bcoloring::{bcolor_rooted, Color};
use crate::counting::{decimal, summarize_rooted};
use crate::error::{Error, Result};
use crate::tree::{decode_into, LabeledTree, PruferSequence, RootedView, NONE};

pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// Name of the generator behind [`sample_random_tree`]; fixed so seeded runs
/// reproduce across machines.
pub const RNG_ALGORITHM: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

/// Exact totals over all `n^(n-2)` labeled trees on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationTotals {
    pub n: usize,
    #[serde(serialize_with = "decimal")]
    pub trees: BigUint,
    #[serde(serialize_with = "decimal")]
    pub total_brown: BigUint,
    #[serde(serialize_with = "decimal")]
    pub total_red: BigUint,
    #[serde(serialize_with = "decimal")]
    pub total_green: BigUint,
    #[serde(serialize_with = "decimal")]
    pub total_vc_count: BigUint,
    #[serde(serialize_with = "decimal")]
    pub total_mm_count: BigUint,
}

impl EnumerationTotals {
    pub fn zero(n: usize) -> Self {
        EnumerationTotals {
            n,
            trees: BigUint::default(),
            total_brown: BigUint::default(),
            total_red: BigUint::default(),
            total_green: BigUint::default(),
            total_vc_count: BigUint::default(),
            total_mm_count: BigUint::default(),
        }
    }

    pub const CSV_HEADER: &'static str = "n,trees,brown,red,green,vc,mm";

    /// `n,trees,brown,red,green,vc,mm`
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.trees,
            self.total_brown,
            self.total_red,
            self.total_green,
            self.total_vc_count,
            self.total_mm_count
        )
    }
}

impl AddAssign<&EnumerationTotals> for EnumerationTotals {
    fn add_assign(&mut self, rhs: &EnumerationTotals) {
        assert_eq!(self.n, rhs.n, "merging totals for different n");
        self.trees += &rhs.trees;
        self.total_brown += &rhs.total_brown;
        self.total_red += &rhs.total_red;
        self.total_green += &rhs.total_green;
        self.total_vc_count += &rhs.total_vc_count;
        self.total_mm_count += &rhs.total_mm_count;
    }
}

#[derive(Default)]
struct Accumulator {
    trees: u128,
    brown: u128,
    red: u128,
    green: u128,
    vc: u128,
    mm: u128,
}

impl Accumulator {
    fn add_view(&mut self, view: &RootedView) -> Result<()> {
        let s = summarize_rooted::<u64>(view)?;
        self.trees += 1;
        self.brown += s.n_brown as u128;
        self.red += s.n_red as u128;
        self.green += s.n_green as u128;
        self.vc += s.vc_count as u128;
        self.mm += s.mm_count as u128;
        Ok(())
    }

    fn into_totals(self, n: usize) -> EnumerationTotals {
        EnumerationTotals {
            n,
            trees: self.trees.into(),
            total_brown: self.brown.into(),
            total_red: self.red.into(),
            total_green: self.green.into(),
            total_vc_count: self.vc.into(),
            total_mm_count: self.mm.into(),
        }
    }
}

/// Number of shards [`enumerate_shard`] accepts for `n`.
pub fn shard_count(n: usize) -> usize {
    if n >= 3 {
        n
    } else {
        1
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    // u64 counts and u128 totals stay exact well past any feasible n; the
    // hard ceiling keeps that argument valid whatever cap is configured.
    let cap = cap.min(16);
    if n > cap {
        return Err(Error::CapExceeded { what: "enumeration", n, cap });
    }
    Ok(())
}

/// Calls `f` on every Prüfer sequence (zero-based digits) whose first digit
/// is `first`, or on all sequences when `first` is `None`.
fn for_each_sequence(n: usize, first: Option<usize>, mut f: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    let len = n - 2;
    let mut seq = vec![0; len];
    let fixed = match first {
        Some(d) if len > 0 => {
            seq[0] = d;
            1
        }
        _ => 0,
    };
    loop {
        f(&seq)?;
        let mut i = len;
        loop {
            if i == fixed {
                return Ok(());
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

/// Totals over one shard: the Prüfer sequences starting with `shard + 1`
/// (for `n <= 2`, the single shard 0 covers everything).
pub fn enumerate_shard(n: usize, shard: usize, cap: usize) -> Result<EnumerationTotals> {
    check_cap(n, cap)?;
    if shard >= shard_count(n) {
        return Err(Error::InvalidArgument(format!("shard {shard} out of range for n = {n}")));
    }
    let mut acc = Accumulator::default();
    if n == 1 {
        let view = RootedView { root: 0, parent: vec![NONE], order: vec![0] };
        acc.add_view(&view)?;
        return Ok(acc.into_totals(n));
    }
    let mut view = RootedView { root: n - 1, parent: vec![NONE; n], order: Vec::with_capacity(n) };
    let mut degree = vec![0; n];
    let first = (n >= 3).then_some(shard);
    for_each_sequence(n, first, |seq| {
        decode_into(n, seq.iter().copied(), &mut view.parent, &mut view.order, &mut degree);
        acc.add_view(&view)
    })?;
    Ok(acc.into_totals(n))
}

/// Exact totals over every labeled tree on `n` vertices, single-threaded.
pub fn enumerate_totals(n: usize, cap: usize) -> Result<EnumerationTotals> {
    enumerate_parallel(n, 1, cap, |_| {})
}

/// Same totals, with shards spread over `workers` threads. `on_shard` is
/// called with the number of finished shards after each one completes.
///
/// The result does not depend on `workers`: shard totals are exact and are
/// merged in shard order.
pub fn enumerate_parallel(
    n: usize,
    workers: usize,
    cap: usize,
    on_shard: impl Fn(usize) + Sync,
) -> Result<EnumerationTotals> {
    check_cap(n, cap)?;
    let shards = shard_count(n);
    let workers = workers.clamp(1, shards);
    let done = AtomicUsize::new(0);
    let results: Vec<Result<Vec<(usize, EnumerationTotals)>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (done, on_shard) = (&done, &on_shard);
                scope.spawn(move || {
                    (w..shards)
                        .step_by(workers)
                        .map(|s| {
                            let t = enumerate_shard(n, s, cap)?;
                            on_shard(done.fetch_add(1, Ordering::SeqCst) + 1);
                            Ok((s, t))
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
    });
    let mut parts = Vec::with_capacity(shards);
    for r in results {
        parts.extend(r?);
    }
    parts.sort_by_key(|(s, _)| *s);
    let mut total = EnumerationTotals::zero(n);
    for (_, t) in &parts {
        total += t;
    }
    Ok(total)
}

/// Every labeled tree on `n` vertices, in Prüfer odometer order.
pub fn all_trees(n: usize) -> impl Iterator<Item = LabeledTree> {
    let mut out: Box<dyn Iterator<Item = LabeledTree>> = match n {
        0 => Box::new(std::iter::empty()),
        1 => Box::new(std::iter::once(LabeledTree::single())),
        _ => Box::new(all_prufer(n).map(|p| p.to_tree())),
    };
    std::iter::from_fn(move || out.next())
}

/// Every Prüfer sequence for `n >= 2`, in odometer order.
pub fn all_prufer(n: usize) -> impl Iterator<Item = PruferSequence> {
    assert!(n >= 2, "Prüfer sequences need n >= 2");
    let len = n - 2;
    let mut seq = Some(vec![1; len]);
    std::iter::from_fn(move || {
        let cur = seq.take()?;
        let mut next = cur.clone();
        let mut i = len;
        seq = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            next[i] += 1;
            if next[i] <= n {
                break Some(next);
            }
            next[i] = 1;
        };
        Some(PruferSequence::new_unchecked(n, cur))
    })
}

fn random_prufer(n: usize, rng: &mut impl Rng) -> PruferSequence {
    PruferSequence::new_unchecked(n, (0..n - 2).map(|_| rng.gen_range(1..=n)).collect())
}

/// A uniformly random labeled tree (via a uniform Prüfer sequence),
/// determined by `seed`.
pub fn sample_random_tree(n: usize, seed: u64) -> Result<LabeledTree> {
    if n < 2 {
        return Err(Error::SampleTooSmall(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_prufer(n, &mut rng).to_tree())
}

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub mean: f64,
    pub std_err: f64,
}

impl Estimate {
    fn from_samples(xs: &[f64]) -> Self {
        let k = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / k;
        let std_err = if xs.len() > 1 {
            let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (k - 1.0);
            (var / k).sqrt()
        } else {
            f64::NAN
        };
        Estimate { mean, std_err }
    }

    /// Whether `target` lies within `sigmas` standard errors of the mean.
    pub fn within(&self, target: f64, sigmas: f64) -> bool {
        (self.mean - target).abs() <= sigmas * self.std_err
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ColorFractions {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub brown: Estimate,
    pub red: Estimate,
    pub green: Estimate,
}

/// Empirical per-tree color fractions over `samples` uniform random trees.
///
/// One generator seeded with `seed` feeds all samples in sequence.
pub fn monte_carlo_fractions(n: usize, samples: usize, seed: u64) -> Result<ColorFractions> {
    if n < 2 {
        return Err(Error::SampleTooSmall(n));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fractions = [Vec::with_capacity(samples), Vec::with_capacity(samples), Vec::with_capacity(samples)];
    for _ in 0..samples {
        let coloring = bcolor_rooted(&random_prufer(n, &mut rng).to_rooted());
        for (slot, color) in fractions.iter_mut().zip([Color::Brown, Color::Red, Color::Green]) {
            slot.push(coloring.count(color) as f64 / n as f64);
        }
    }
    let [brown, red, green] = fractions.map(|xs| Estimate::from_samples(&xs));
    Ok(ColorFractions { n, samples, seed, brown, red, green })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_totals() {
        let t1 = enumerate_totals(1, 10).unwrap();
        assert_eq!(t1.csv_row(), "1,1,0,0,1,1,1");
        let t2 = enumerate_totals(2, 10).unwrap();
        assert_eq!(t2.csv_row(), "2,1,0,2,0,2,1");
        let t3 = enumerate_totals(3, 10).unwrap();
        assert_eq!(t3.csv_row(), "3,3,3,0,6,3,6");
        let t4 = enumerate_totals(4, 10).unwrap();
        assert_eq!((t4.total_brown.clone(), t4.total_red.clone(), t4.total_green.clone()), (big(4), big(48), big(12)));
        assert_eq!((t4.total_vc_count, t4.total_mm_count), (big(40), big(24)));
    }

    #[test]
    fn shards_partition_the_space() {
        let n = 6;
        let mut merged = EnumerationTotals::zero(n);
        for s in 0..shard_count(n) {
            let part = enumerate_shard(n, s, 10).unwrap();
            assert_eq!(part.trees, big(6u64.pow(3)));
            merged += &part;
        }
        assert_eq!(merged, enumerate_totals(n, 10).unwrap());
        assert_eq!(merged, enumerate_parallel(n, 4, 10, |_| {}).unwrap());
        assert!(enumerate_shard(n, 6, 10).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(enumerate_totals(11, 10), Err(Error::CapExceeded { what: "enumeration", n: 11, cap: 10 }));
        assert_eq!(enumerate_totals(5, 4), Err(Error::CapExceeded { what: "enumeration", n: 5, cap: 4 }));
    }

    #[test]
    fn odometer_lists_every_sequence_once() {
        for n in 2..=6 {
            let seqs: BTreeSet<Vec<usize>> = all_prufer(n).map(|p| p.as_slice().to_vec()).collect();
            assert_eq!(seqs.len(), n.pow(n as u32 - 2));
            let trees: BTreeSet<_> = all_trees(n).map(|t| t.edges().to_vec()).collect();
            assert_eq!(trees.len(), seqs.len());
        }
        assert_eq!(all_trees(1).count(), 1);
    }

    #[test]
    fn sampling_is_deterministic_and_valid() {
        assert_eq!(sample_random_tree(40, 7).unwrap(), sample_random_tree(40, 7).unwrap());
        assert_ne!(sample_random_tree(40, 7).unwrap(), sample_random_tree(40, 8).unwrap());
        let big_tree = sample_random_tree(1000, 1).unwrap();
        assert_eq!(LabeledTree::from_edges(1000, big_tree.edges()).unwrap(), big_tree);
        assert_eq!(sample_random_tree(1, 0), Err(Error::SampleTooSmall(1)));
    }

    #[test]
    fn sampler_is_uniform_on_three_vertices() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut freq: BTreeMap<Vec<(usize, usize)>, usize> = BTreeMap::new();
        let draws = 30_000;
        for _ in 0..draws {
            *freq.entry(random_prufer(3, &mut rng).to_tree().edges().to_vec()).or_default() += 1;
        }
        assert_eq!(freq.len(), 3);
        for &c in freq.values() {
            assert!((c as f64 / draws as f64 - 1.0 / 3.0).abs() < 0.02);
        }
        // chi-square with 2 degrees of freedom, 99.9% quantile 13.8
        let expected = draws as f64 / 3.0;
        let chi2: f64 = freq.values().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        assert!(chi2 < 13.8, "chi2 = {chi2}");
    }

    #[test]
    fn monte_carlo_small() {
        let f = monte_carlo_fractions(50, 200, 3).unwrap();
        assert!((f.brown.mean + f.red.mean + f.green.mean - 1.0).abs() < 1e-12);
        assert_eq!(f, monte_carlo_fractions(50, 200, 3).unwrap());
        assert!(monte_carlo_fractions(50, 0, 3).is_err());
    }
}
