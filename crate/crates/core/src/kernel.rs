//! Kernel of the adjacency matrix over the rationals, and its relation to the
//! b-coloring: the kernel has dimension `N_G - N_B` and is supported exactly
//! on the green vertices.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bcoloring::{bcolor, Color};
use crate::error::{Error, Result};
use crate::tree::LabeledTree;

pub const DEFAULT_KERNEL_CAP: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub dimension: usize,
    /// Vertices where some kernel vector is nonzero.
    pub support: BTreeSet<usize>,
}

fn check_cap(tree: &LabeledTree, cap: usize) -> Result<()> {
    if tree.n() > cap {
        return Err(Error::CapExceeded { what: "kernel", n: tree.n(), cap });
    }
    Ok(())
}

/// Basis of the kernel read off the reduced row echelon form: one vector per
/// free column, equal to 1 there and 0 on the other free columns.
pub fn adjacency_kernel_basis(tree: &LabeledTree, cap: usize) -> Result<Vec<Vec<BigRational>>> {
    check_cap(tree, cap)?;
    let n = tree.n();
    let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for &(u, v) in tree.edges() {
        rows[u - 1][v - 1] = BigRational::one();
        rows[v - 1][u - 1] = BigRational::one();
    }

    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        // Sparsest candidate row keeps fill-in low.
        let Some(p) = (rank..n)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r].iter().filter(|x| !x.is_zero()).count())
        else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let nonzero: Vec<usize> = (0..n).filter(|&c| !rows[rank][c].is_zero()).collect();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &c in &nonzero {
                row[c] -= &factor * &pivot_row[c];
            }
        }
        pivots.push(col);
        rank += 1;
    }

    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        pivots.iter().for_each(|&c| v[c] = true);
        v
    };
    let basis = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut vec = vec![BigRational::zero(); n];
            vec[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                vec[pc] = -rows[r][f].clone();
            }
            vec
        })
        .collect();
    Ok(basis)
}

/// Dimension and support of the adjacency kernel, by exact elimination.
pub fn adjacency_kernel(tree: &LabeledTree, cap: usize) -> Result<KernelReport> {
    let basis = adjacency_kernel_basis(tree, cap)?;
    let support =
        basis.iter().flat_map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i + 1)).collect();
    Ok(KernelReport { dimension: basis.len(), support })
}

/// Kernel report next to what the b-coloring predicts for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelCheck {
    pub kernel: KernelReport,
    pub n_green: usize,
    pub n_brown: usize,
    pub green: BTreeSet<usize>,
    pub pass: bool,
}

pub fn kernel_check(tree: &LabeledTree, cap: usize) -> Result<KernelCheck> {
    let kernel = adjacency_kernel(tree, cap)?;
    let coloring = bcolor(tree);
    let green = coloring.vertices(Color::Green);
    let n_green = green.len();
    let n_brown = coloring.count(Color::Brown);
    let pass = n_green >= n_brown && kernel.dimension == n_green - n_brown && kernel.support == green;
    Ok(KernelCheck { kernel, n_green, n_brown, green, pass })
}

/// Whether `dim ker A = N_G - N_B` and the kernel support is the green set.
pub fn check_kernel_coloring(tree: &LabeledTree, cap: usize) -> Result<bool> {
    Ok(kernel_check(tree, cap)?.pass)
}
