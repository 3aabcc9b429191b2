//! The b-coloring of a tree and the backbones it encodes.
//!
//! A vertex is green when some maximum matching leaves it exposed, an edge is
//! red when every maximum matching uses it, and the remaining vertices are
//! brown. Both quantities reduce to maximum-matching sizes of the tree with
//! one vertex or one edge deleted, which a subtree DP plus one rerooting pass
//! delivers for every vertex and edge at once.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::tree::{LabeledTree, RootedView, NONE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Brown,
    Green,
    Red,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::Brown => "brown",
            Color::Green => "green",
            Color::Red => "red",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A vertex coloring together with a set of red edges.
///
/// Nothing here is validated; [`verify_condition_iii`] checks a coloring
/// against a tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tricoloring {
    colors: Vec<Color>,
    red_edges: BTreeSet<(usize, usize)>,
}

impl Tricoloring {
    /// `colors[i]` is the color of vertex `i + 1`; red edges are normalized on entry.
    pub fn new(colors: Vec<Color>, red_edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let red_edges = red_edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Tricoloring { colors, red_edges }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v - 1]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn red_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.red_edges
    }

    pub fn vertices(&self, color: Color) -> BTreeSet<usize> {
        (1..=self.n()).filter(|&v| self.color(v) == color).collect()
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    /// One `id color` line per vertex, then one `u v red` line per red edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.colors.iter().enumerate() {
            out.push_str(&format!("{} {}\n", i + 1, c));
        }
        for (u, v) in &self.red_edges {
            out.push_str(&format!("{u} {v} red\n"));
        }
        out
    }
}

/// Backbones of minimal vertex covers and maximal matchings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BackboneReport {
    /// Vertices in every minimum vertex cover.
    pub vc_positive: BTreeSet<usize>,
    /// Vertices in no minimum vertex cover.
    pub vc_negative: BTreeSet<usize>,
    /// Edges between degenerate vertices that no minimum cover contains entirely.
    pub exclusive_edges: BTreeSet<(usize, usize)>,
    /// Edges in every maximum matching.
    pub mm_positive_edges: BTreeSet<(usize, usize)>,
    /// Vertices left exposed by some maximum matching.
    pub optional_vertices: BTreeSet<usize>,
    /// Vertices covered by every maximum matching but not by a backbone edge.
    pub unavoidable_vertices: BTreeSet<usize>,
}

pub fn backbone_from_coloring(coloring: &Tricoloring) -> BackboneReport {
    let brown = coloring.vertices(Color::Brown);
    let green = coloring.vertices(Color::Green);
    BackboneReport {
        vc_positive: brown.clone(),
        vc_negative: green.clone(),
        exclusive_edges: coloring.red_edges.clone(),
        mm_positive_edges: coloring.red_edges.clone(),
        optional_vertices: green,
        unavoidable_vertices: brown,
    }
}

/// Per-subtree maximum-matching data for a rooted tree (zero-based).
struct SubtreeMatching {
    /// max matching in the subtree of v with v left exposed
    exposed: Vec<usize>,
    /// max matching in the subtree of v
    best: Vec<usize>,
    /// number of children c with exposed[c] == best[c]
    free_children: Vec<usize>,
}

fn subtree_matching(view: &RootedView) -> SubtreeMatching {
    let n = view.n();
    let mut exposed = vec![0; n];
    let mut best = vec![0; n];
    let mut free_children = vec![0; n];
    for &v in &view.order {
        best[v] = exposed[v] + usize::from(free_children[v] > 0);
        let p = view.parent[v];
        if p != NONE {
            exposed[p] += best[v];
            if exposed[v] == best[v] {
                free_children[p] += 1;
            }
        }
    }
    SubtreeMatching { exposed, best, free_children }
}

/// Computes the b-coloring in linear time from a rooted view.
pub fn bcolor_rooted(view: &RootedView) -> Tricoloring {
    let n = view.n();
    let SubtreeMatching { exposed, best, free_children } = subtree_matching(view);
    let nu = best[view.root];

    // For v != root, the component above v (tree minus subtree(v)) rooted at
    // parent(v): its max matching with parent(v) exposed, and overall.
    let mut up_exposed = vec![0; n];
    let mut up_best = vec![0; n];
    // Sum of best and count of exposable roots over all components of T - v.
    let mut around_sum = vec![0; n];
    let mut around_free = vec![0; n];

    let mut colors = vec![Color::Brown; n];
    let mut red_edges = BTreeSet::new();
    for &v in view.order.iter().rev() {
        let p = view.parent[v];
        around_sum[v] = exposed[v];
        around_free[v] = free_children[v];
        if p != NONE {
            let v_free = usize::from(exposed[v] == best[v]);
            up_exposed[v] = around_sum[p] - best[v];
            up_best[v] = up_exposed[v] + usize::from(around_free[p] - v_free > 0);
            around_sum[v] += up_best[v];
            around_free[v] += usize::from(up_exposed[v] == up_best[v]);
            if best[v] + up_best[v] < nu {
                red_edges.insert(((v + 1).min(p + 1), (v + 1).max(p + 1)));
            }
        }
        debug_assert_eq!(around_sum[v] + usize::from(around_free[v] > 0), nu);
        if around_free[v] == 0 {
            colors[v] = Color::Green;
        }
    }
    for &(u, v) in &red_edges {
        colors[u - 1] = Color::Red;
        colors[v - 1] = Color::Red;
    }
    Tricoloring { colors, red_edges }
}

/// The b-coloring of `tree`, computed in O(n).
pub fn bcolor(tree: &LabeledTree) -> Tricoloring {
    let view = tree.rooted(1).expect("vertex 1 exists");
    bcolor_rooted(&view)
}

/// O(n²) reference: reroots the tree at every vertex and reruns the subtree DP.
pub fn bcolor_quadratic(tree: &LabeledTree) -> Tricoloring {
    let n = tree.n();
    let mut colors = vec![Color::Brown; n];
    let mut red_edges = BTreeSet::new();
    for v in 1..=n {
        let view = tree.rooted(v).expect("in range");
        let SubtreeMatching { exposed, best, free_children } = subtree_matching(&view);
        let r = v - 1;
        let nu = best[r];
        if exposed[r] == nu {
            colors[r] = Color::Green;
        }
        for &c in &tree.adj0()[r] {
            let c_free = usize::from(exposed[c] == best[c]);
            let rest = exposed[r] - best[c] + usize::from(free_children[r] - c_free > 0);
            if best[c] + rest < nu {
                red_edges.insert((v.min(c + 1), v.max(c + 1)));
            }
        }
    }
    for &(u, v) in &red_edges {
        colors[u - 1] = Color::Red;
        colors[v - 1] = Color::Red;
    }
    Tricoloring { colors, red_edges }
}

/// A failed clause of the characterization, with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// The coloring has the wrong number of vertices.
    VertexCount {
        expected: usize,
        got: usize,
    },
    RedEdgeNotInTree {
        edge: (usize, usize),
    },
    RedEdgeEndpointNotRed {
        edge: (usize, usize),
        vertex: usize,
    },
    /// A red vertex that is not the end of any red edge.
    UnmatchedRedVertex {
        vertex: usize,
    },
    /// A vertex shared by two or more red edges.
    AdjacentRedEdges {
        vertex: usize,
    },
    /// An edge with a green end whose other end is not brown.
    GreenNeighborNotBrown {
        edge: (usize, usize),
    },
    BrownWithFewGreenNeighbors {
        vertex: usize,
        green_neighbors: usize,
    },
}

/// Checks the partition property and the three local clauses that single out
/// the b-coloring. Returns every failure found; empty means valid.
pub fn verify_condition_iii(tree: &LabeledTree, coloring: &Tricoloring) -> Vec<Violation> {
    let n = tree.n();
    if coloring.n() != n {
        return vec![Violation::VertexCount { expected: n, got: coloring.n() }];
    }
    let mut out = Vec::new();
    let mut red_degree = vec![0usize; n + 1];
    for &(u, v) in &coloring.red_edges {
        let edge = (u, v);
        if u == 0 || v > n || !tree.has_edge(u, v) {
            out.push(Violation::RedEdgeNotInTree { edge });
            continue;
        }
        for w in [u, v] {
            red_degree[w] += 1;
            if coloring.color(w) != Color::Red {
                out.push(Violation::RedEdgeEndpointNotRed { edge, vertex: w });
            }
        }
    }
    for (v, &deg) in red_degree.iter().enumerate().skip(1) {
        if deg >= 2 {
            out.push(Violation::AdjacentRedEdges { vertex: v });
        }
        if coloring.color(v) == Color::Red && deg == 0 {
            out.push(Violation::UnmatchedRedVertex { vertex: v });
        }
    }
    for &(u, v) in tree.edges() {
        let (cu, cv) = (coloring.color(u), coloring.color(v));
        let bad = (cu == Color::Green && cv != Color::Brown) || (cv == Color::Green && cu != Color::Brown);
        if bad {
            out.push(Violation::GreenNeighborNotBrown { edge: (u, v) });
        }
    }
    for v in 1..=n {
        if coloring.color(v) == Color::Brown {
            let green_neighbors = tree.neighbors(v).filter(|&w| coloring.color(w) == Color::Green).count();
            if green_neighbors < 2 {
                out.push(Violation::BrownWithFewGreenNeighbors { vertex: v, green_neighbors });
            }
        }
    }
    out
}
