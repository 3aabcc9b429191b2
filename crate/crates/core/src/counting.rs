//! Sizes and exact counts of minimum vertex covers and maximum matchings.

use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::bcoloring::{bcolor_rooted, Color};
use crate::error::{Error, Result};
use crate::tree::{LabeledTree, RootedView, NONE};

/// Arithmetic the counting DPs need from a count type.
///
/// The DPs run over `BigUint` on the public API. Enumeration uses `u64`,
/// which cannot overflow for n <= 63: both counts are bounded by the number
/// of vertex subsets (resp. edge subsets) of the tree.
pub trait Count: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> {}

impl<T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>> Count for T {}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Best<C> {
    size: usize,
    count: C,
}

impl<C: Count> Best<C> {
    fn unit() -> Self {
        Best { size: 0, count: C::one() }
    }

    fn product(&self, other: &Self) -> Self {
        Best { size: self.size + other.size, count: self.count.clone() * other.count.clone() }
    }

    fn pick(self, other: Self, prefer_larger: bool) -> Self {
        if self.size == other.size {
            Best { size: self.size, count: self.count + other.count }
        } else if (self.size > other.size) == prefer_larger {
            self
        } else {
            other
        }
    }
}

pub(crate) fn vertex_cover_rooted<C: Count>(view: &RootedView) -> (usize, C) {
    let n = view.n();
    let mut inside = vec![Best { size: 1, count: C::one() }; n];
    let mut outside = vec![Best::<C>::unit(); n];
    for &v in &view.order {
        let p = view.parent[v];
        if p != NONE {
            let either = inside[v].clone().pick(outside[v].clone(), false);
            inside[p] = inside[p].product(&either);
            outside[p] = outside[p].product(&inside[v]);
        }
    }
    let r = view.root;
    let best = inside[r].clone().pick(outside[r].clone(), false);
    (best.size, best.count)
}

pub(crate) fn matching_rooted<C: Count>(view: &RootedView) -> (usize, C) {
    let n = view.n();
    // Root of the subtree exposed / matched to one of its children.
    let mut exposed = vec![Best::<C>::unit(); n];
    let mut matched: Vec<Option<Best<C>>> = vec![None; n];
    let edge = Best { size: 1, count: C::one() };
    for &v in &view.order {
        let p = view.parent[v];
        if p == NONE {
            continue;
        }
        let best_v = match matched[v].clone() {
            Some(m) => exposed[v].clone().pick(m, true),
            None => exposed[v].clone(),
        };
        let via_v = exposed[p].product(&exposed[v]).product(&edge);
        matched[p] = Some(match matched[p].take() {
            Some(m) => m.product(&best_v).pick(via_v, true),
            None => via_v,
        });
        exposed[p] = exposed[p].product(&best_v);
    }
    let r = view.root;
    let best = match matched[r].clone() {
        Some(m) => exposed[r].clone().pick(m, true),
        None => exposed[r].clone(),
    };
    (best.size, best.count)
}

/// Minimum vertex cover size and the number of covers attaining it.
pub fn min_vertex_cover_stats(tree: &LabeledTree) -> (usize, BigUint) {
    vertex_cover_rooted(&tree.rooted(1).expect("vertex 1 exists"))
}

/// Maximum matching size and the number of matchings attaining it.
pub fn max_matching_stats(tree: &LabeledTree) -> (usize, BigUint) {
    matching_rooted(&tree.rooted(1).expect("vertex 1 exists"))
}

/// Per-tree optimum sizes, optimum counts and color counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountSummary {
    pub vc_size: usize,
    #[serde(serialize_with = "decimal")]
    pub vc_count: BigUint,
    pub mm_size: usize,
    #[serde(serialize_with = "decimal")]
    pub mm_count: BigUint,
    pub n_brown: usize,
    pub n_red: usize,
    pub n_green: usize,
}

pub(crate) fn decimal<S: Serializer>(value: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(value)
}

/// Summary in a caller-chosen count type, used by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawSummary<C> {
    pub vc_size: usize,
    pub vc_count: C,
    pub mm_size: usize,
    pub mm_count: C,
    pub n_brown: usize,
    pub n_red: usize,
    pub n_green: usize,
}

pub(crate) fn summarize_rooted<C: Count>(view: &RootedView) -> Result<RawSummary<C>> {
    let coloring = bcolor_rooted(view);
    let (vc_size, vc_count) = vertex_cover_rooted::<C>(view);
    let (mm_size, mm_count) = matching_rooted::<C>(view);
    let n_brown = coloring.count(Color::Brown);
    let n_red = coloring.count(Color::Red);
    let n_green = coloring.count(Color::Green);
    if !n_red.is_multiple_of(2) || n_brown + n_red + n_green != view.n() {
        return Err(Error::Inconsistency(format!(
            "color counts brown={n_brown} red={n_red} green={n_green} on {} vertices",
            view.n()
        )));
    }
    let predicted = n_brown + n_red / 2;
    if vc_size != mm_size || vc_size != predicted {
        return Err(Error::Inconsistency(format!(
            "cover size {vc_size}, matching size {mm_size}, brown + red/2 = {predicted}"
        )));
    }
    Ok(RawSummary { vc_size, vc_count, mm_size, mm_count, n_brown, n_red, n_green })
}

/// Runs the b-coloring and both counting DPs, checking that both optimum
/// sizes equal `n_brown + n_red / 2`.
pub fn summarize(tree: &LabeledTree) -> Result<CountSummary> {
    let raw = summarize_rooted::<BigUint>(&tree.rooted(1).expect("vertex 1 exists"))?;
    Ok(CountSummary {
        vc_size: raw.vc_size,
        vc_count: raw.vc_count,
        mm_size: raw.mm_size,
        mm_count: raw.mm_count,
        n_brown: raw.n_brown,
        n_red: raw.n_red,
        n_green: raw.n_green,
    })
}
