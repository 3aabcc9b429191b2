//! b-colorings, vertex-cover and matching backbones, and exact enumerative
//! results for labeled trees.
//!
//! Every tree has a unique coloring of its vertices brown, green or red
//! (with red vertices paired by red edges) that describes both the minimum
//! vertex covers and the maximum matchings of the tree at once:
//!
//! * brown vertices are in every minimum cover and covered by every maximum
//!   matching, but not through a fixed edge;
//! * green vertices are in no minimum cover and left exposed by some
//!   maximum matching;
//! * red edges are in every maximum matching, and every minimum cover holds
//!   exactly one of their ends.
//!
//! ```
//! use tree_backbones::{bcolor, summarize, Color, LabeledTree};
//!
//! let p3 = LabeledTree::path(3)?;
//! assert_eq!(bcolor(&p3).colors(), &[Color::Green, Color::Brown, Color::Green]);
//!
//! let s = summarize(&p3)?;
//! assert_eq!(s.vc_size, s.n_brown + s.n_red / 2);
//! # Ok::<(), tree_backbones::Error>(())
//! ```
//!
//! Modules:
//!
//! * [`tree`]: labeled trees, Prüfer codec, rooted orders;
//! * [`bcoloring`]: the coloring and the backbone report;
//! * [`counting`]: optimum sizes and exact optimum counts;
//! * [`oracle`]: brute-force ground truth for small trees;
//! * [`enumeration`]: exhaustive totals over all `n^(n-2)` trees, sampling;
//! * [`series`]: exact-rational power series and the generating-function systems;
//! * [`formulas`]: closed-form color totals and asymptotic fractions;
//! * [`kernel`]: adjacency-matrix kernel against the coloring.

pub mod bcoloring;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod formulas;
pub mod kernel;
pub mod oracle;
pub mod series;
pub mod tree;

pub use bcoloring::{
    backbone_from_coloring, bcolor, bcolor_quadratic, verify_condition_iii, BackboneReport, Color, Tricoloring,
    Violation,
};
pub use counting::{max_matching_stats, min_vertex_cover_stats, summarize, CountSummary};
pub use enumeration::{
    enumerate_parallel, enumerate_totals, monte_carlo_fractions, sample_random_tree, EnumerationTotals,
};
pub use error::{Error, ErrorKind, Result};
pub use formulas::{asymptotic_constants, closed_form_color_total, finite_size_fraction, AsymptoticConstants};
pub use kernel::{adjacency_kernel, check_kernel_coloring, KernelReport};
pub use oracle::Oracle;
pub use series::Series;
pub use tree::{LabeledTree, PruferSequence, RootedView};
