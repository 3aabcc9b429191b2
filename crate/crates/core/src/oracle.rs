//! Brute-force ground truth for small trees.
//!
//! Everything here works straight from the definitions by scanning vertex
//! or edge subsets, and shares no code with the DPs it is used to check.

use std::collections::BTreeSet;

use crate::bcoloring::{Color, Tricoloring};
use crate::error::{Error, Result};
use crate::tree::LabeledTree;

pub type VertexSet = BTreeSet<usize>;
pub type EdgeSet = BTreeSet<(usize, usize)>;

pub const DEFAULT_ORACLE_CAP: usize = 16;

/// Exhaustive solver with a configurable size cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_ORACLE_CAP }
    }
}

fn mask_to_vertices(mask: u64) -> VertexSet {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap }
    }

    fn check(&self, tree: &LabeledTree) -> Result<()> {
        // Bitmasks are u64, so the hard ceiling is 63 whatever the cap says.
        let cap = self.cap.min(63);
        if tree.n() > cap {
            return Err(Error::CapExceeded { what: "oracle", n: tree.n(), cap });
        }
        Ok(())
    }

    fn cover_masks(&self, tree: &LabeledTree) -> Result<Vec<u64>> {
        self.check(tree)?;
        let n = tree.n();
        let edge_masks: Vec<u64> = tree.edges().iter().map(|&(u, v)| 1 << (u - 1) | 1 << (v - 1)).collect();
        let is_cover = |s: u64| edge_masks.iter().all(|&e| s & e != 0);
        for k in 0..=n {
            let found: Vec<u64> = k_subsets(n, k).filter(|&s| is_cover(s)).collect();
            if !found.is_empty() {
                return Ok(found);
            }
        }
        unreachable!("the full vertex set is a cover")
    }

    fn matching_masks(&self, tree: &LabeledTree) -> Result<Vec<u64>> {
        self.check(tree)?;
        let edges = tree.edges();
        let mut best_size = 0;
        let mut best = Vec::new();
        for subset in 0u64..1 << edges.len() {
            let mut used = 0u64;
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    let m = 1 << (u - 1) | 1 << (v - 1);
                    if used & m != 0 {
                        ok = false;
                        break;
                    }
                    used |= m;
                }
            }
            if !ok {
                continue;
            }
            let size = subset.count_ones();
            if size > best_size {
                best_size = size;
                best.clear();
            }
            if size == best_size {
                best.push(subset);
            }
        }
        Ok(best)
    }

    /// Every minimum-cardinality vertex cover.
    pub fn all_minimal_vertex_covers(&self, tree: &LabeledTree) -> Result<Vec<VertexSet>> {
        Ok(self.cover_masks(tree)?.into_iter().map(mask_to_vertices).collect())
    }

    /// Every maximum-cardinality matching.
    pub fn all_maximal_matchings(&self, tree: &LabeledTree) -> Result<Vec<EdgeSet>> {
        let edges = tree.edges();
        Ok(self
            .matching_masks(tree)?
            .into_iter()
            .map(|s| (0..edges.len()).filter(|i| s >> i & 1 == 1).map(|i| edges[i]).collect())
            .collect())
    }

    /// Coloring read off the minimum vertex covers: brown in all of them,
    /// green in none, red edges joining degenerate vertices that never
    /// appear together.
    pub fn coloring_from_covers(&self, tree: &LabeledTree) -> Result<Tricoloring> {
        let covers = self.cover_masks(tree)?;
        let n = tree.n();
        let all = covers.iter().fold(u64::MAX, |acc, &c| acc & c);
        let any = covers.iter().fold(0, |acc, &c| acc | c);
        let degenerate = any & !all;
        let red_edges: Vec<(usize, usize)> = tree
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                let m: u64 = 1 << (u - 1) | 1 << (v - 1);
                degenerate & m == m && covers.iter().all(|&c| c & m != m)
            })
            .collect();
        let mut colors = Vec::with_capacity(n);
        for i in 0..n {
            let bit = 1u64 << i;
            colors.push(if all & bit != 0 {
                Color::Brown
            } else if any & bit == 0 {
                Color::Green
            } else if red_edges.iter().any(|&(u, v)| u == i + 1 || v == i + 1) {
                Color::Red
            } else {
                return Err(Error::Inconsistency(format!("degenerate vertex {} lies on no exclusive edge", i + 1)));
            });
        }
        Ok(Tricoloring::new(colors, red_edges))
    }

    /// Coloring read off the maximum matchings: red edges in all of them,
    /// green vertices exposed by at least one, brown for the rest.
    pub fn coloring_from_matchings(&self, tree: &LabeledTree) -> Result<Tricoloring> {
        let matchings = self.matching_masks(tree)?;
        let edges = tree.edges();
        let common = matchings.iter().fold(u64::MAX, |acc, &m| acc & m);
        let red_edges: Vec<(usize, usize)> =
            (0..edges.len()).filter(|i| common >> i & 1 == 1).map(|i| edges[i]).collect();
        let covered = |m: u64| {
            (0..edges.len())
                .filter(|i| m >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << (edges[i].0 - 1) | 1 << (edges[i].1 - 1))
        };
        let always_covered = matchings.iter().fold(u64::MAX, |acc, &m| acc & covered(m));
        let red_vertices = covered(common);
        let colors = (0..tree.n())
            .map(|i| {
                let bit = 1u64 << i;
                if always_covered & bit == 0 {
                    Color::Green
                } else if red_vertices & bit != 0 {
                    Color::Red
                } else {
                    Color::Brown
                }
            })
            .collect();
        Ok(Tricoloring::new(colors, red_edges))
    }
}

/// All k-element subsets of {0..n} as bitmasks, in increasing numeric order.
fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < limit).then_some(nxt)
        };
        Some(cur)
    })
}
