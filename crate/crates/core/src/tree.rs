//! Labeled trees, the Prüfer bijection and rooted traversal orders.
//!
//! Vertices are labeled `1..=n` on every public interface. Internally the
//! adjacency lists and rooted views are indexed from zero.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) const NONE: usize = usize::MAX;

/// A tree on the vertex set `1..=n`.
///
/// Construction always validates: the edge list has exactly `n - 1` distinct
/// edges, no loops, and connects every vertex. Edges are stored normalized
/// (`u < v`) and sorted, so two trees compare equal iff they have the same
/// edge set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl LabeledTree {
    /// Validates an edge list and builds the tree.
    ///
    /// Checks run in a fixed order (labels, loops, duplicates, connectivity,
    /// edge count), so an edge list with too few edges reports
    /// [`Error::Disconnected`] and one with too many reports
    /// [`Error::WrongEdgeCount`].
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for label in [u, v] {
                if label == 0 || label > n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        let tree = Self::from_normalized(n, seen.into_iter().collect());
        if let Some(unreached) = tree.first_unreachable() {
            return Err(Error::Disconnected { unreached });
        }
        if tree.edges.len() != n - 1 {
            return Err(Error::WrongEdgeCount { n, expected: n - 1, got: tree.edges.len() });
        }
        Ok(tree)
    }

    /// Builds without validation; `edges` must be normalized and sorted.
    fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        LabeledTree { n, edges, adj }
    }

    fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|&s| !s).map(|i| i + 1)
    }

    /// The single-vertex tree.
    pub fn single() -> Self {
        Self::from_normalized(1, Vec::new())
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_edges(n, &edges)
    }

    /// The star with center `1` and leaves `2..=n`.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (2..=n).map(|i| (1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as normalized `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v - 1].iter().map(|&w| w + 1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub(crate) fn adj0(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Roots the tree at `root` and lists vertices in post-order.
    pub fn rooted(&self, root: usize) -> Result<RootedView> {
        if root == 0 || root > self.n {
            return Err(Error::RootOutOfRange { root, n: self.n });
        }
        let r = root - 1;
        let mut parent = vec![NONE; self.n];
        let mut order = Vec::with_capacity(self.n);
        // (vertex, index of next neighbor to visit)
        let mut stack = vec![(r, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, i) = *top;
            if let Some(&w) = self.adj[u].get(i) {
                top.1 += 1;
                if w != parent[u] {
                    parent[w] = u;
                    stack.push((w, 0));
                }
            } else {
                order.push(u);
                stack.pop();
            }
        }
        Ok(RootedView { root: r, parent, order })
    }

    /// Prüfer code of this tree. Fails for the single-vertex tree.
    pub fn to_prufer(&self) -> Result<PruferSequence> {
        let n = self.n;
        if n < 2 {
            return Err(Error::PruferTooSmall(n));
        }
        let view = self.rooted(n)?;
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut seq = Vec::with_capacity(n - 2);
        let mut ptr = degree.iter().position(|&d| d == 1).expect("a tree has leaves");
        let mut leaf = ptr;
        for _ in 0..n - 2 {
            let next = view.parent[leaf];
            seq.push(next + 1);
            degree[next] -= 1;
            if degree[next] == 1 && next < ptr {
                leaf = next;
            } else {
                ptr += 1;
                while degree[ptr] != 1 {
                    ptr += 1;
                }
                leaf = ptr;
            }
        }
        Ok(PruferSequence { n, seq })
    }

    /// Edge-list text: `n` on the first line, then one `u v` line per edge.
    pub fn to_edge_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format. Blank lines and `#` comments are ignored.
    pub fn parse_edge_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing vertex count".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("vertex count: {e}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|e| Error::Parse(format!("edge line {line:?}: {e}"))))
                .collect::<Result<_>>()?;
            match nums.as_slice() {
                [u, v] => edges.push((*u, *v)),
                _ => return Err(Error::Parse(format!("edge line {line:?} must hold two labels"))),
            }
        }
        Self::from_edges(n, &edges)
    }
}

impl fmt::Debug for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledTree(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A Prüfer code: `n - 2` labels in `1..=n`, in bijection with labeled trees
/// on `n >= 2` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PruferSequence {
    n: usize,
    seq: Vec<usize>,
}

impl PruferSequence {
    pub fn new(n: usize, seq: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::PruferTooSmall(n));
        }
        if seq.len() != n - 2 {
            return Err(Error::PruferLength { n, expected: n - 2, got: seq.len() });
        }
        if let Some((position, &entry)) = seq.iter().enumerate().find(|(_, &e)| e == 0 || e > n) {
            return Err(Error::PruferEntryOutOfRange { entry, position, n });
        }
        Ok(PruferSequence { n, seq })
    }

    /// Caller guarantees the invariants.
    pub(crate) fn new_unchecked(n: usize, seq: Vec<usize>) -> Self {
        debug_assert!(n >= 2 && seq.len() == n - 2);
        PruferSequence { n, seq }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    /// Decodes to the labeled tree.
    pub fn to_tree(&self) -> LabeledTree {
        let view = self.to_rooted();
        let mut edges: Vec<_> = view
            .parent
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != NONE)
            .map(|(c, &p)| ((c + 1).min(p + 1), (c + 1).max(p + 1)))
            .collect();
        edges.sort_unstable();
        LabeledTree::from_normalized(self.n, edges)
    }

    /// Decodes straight into a view rooted at `n`.
    ///
    /// Each removed leaf gets the current sequence entry as its parent, so the
    /// removal order already lists children before parents.
    pub fn to_rooted(&self) -> RootedView {
        let n = self.n;
        let mut parent = vec![NONE; n];
        let mut order = Vec::with_capacity(n);
        decode_into(n, self.seq.iter().map(|&s| s - 1), &mut parent, &mut order, &mut vec![0; n]);
        RootedView { root: n - 1, parent, order }
    }

    /// Text form: `n` on the first line, the entries space-separated on the second.
    pub fn to_text(&self) -> String {
        let body: Vec<String> = self.seq.iter().map(usize::to_string).collect();
        format!("{}\n{}\n", self.n, body.join(" "))
    }
}

impl FromStr for PruferSequence {
    type Err = Error;

    /// Accepts `n` followed by the entries, separated by any whitespace
    /// (so both the one-line and the two-line layouts parse).
    fn from_str(s: &str) -> Result<Self> {
        let nums: Vec<usize> = s
            .split_whitespace()
            .map(|t| t.parse().map_err(|e| Error::Parse(format!("Prüfer token {t:?}: {e}"))))
            .collect::<Result<_>>()?;
        let (&n, seq) = nums.split_first().ok_or_else(|| Error::Parse("empty Prüfer input".into()))?;
        PruferSequence::new(n, seq.to_vec())
    }
}

/// Linear-time Prüfer decoding over zero-based labels. Fills `parent` and
/// `order` (children before parents, `n - 1` last). `degree` is scratch.
pub(crate) fn decode_into(
    n: usize,
    seq: impl Iterator<Item = usize> + Clone,
    parent: &mut [usize],
    order: &mut Vec<usize>,
    degree: &mut [usize],
) {
    degree.iter_mut().for_each(|d| *d = 1);
    for s in seq.clone() {
        degree[s] += 1;
    }
    parent.iter_mut().for_each(|p| *p = NONE);
    order.clear();
    let mut ptr = degree.iter().position(|&d| d == 1).expect("n >= 2 has a leaf");
    let mut leaf = ptr;
    for v in seq {
        parent[leaf] = v;
        order.push(leaf);
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    parent[leaf] = n - 1;
    order.push(leaf);
    order.push(n - 1);
}

/// A tree rooted at a chosen vertex: parent pointers plus an order in which
/// every vertex comes after all of its children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedView {
    pub(crate) root: usize,
    pub(crate) parent: Vec<usize>,
    pub(crate) order: Vec<usize>,
}

impl RootedView {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root + 1
    }

    /// Parent of `v`, or `None` for the root.
    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v - 1] {
            NONE => None,
            p => Some(p + 1),
        }
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&c| self.parent(c) == Some(v)).collect()
    }

    /// Vertices with every child listed before its parent; the root is last.
    pub fn order(&self) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().map(|&v| v + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_trees() {
        let t = LabeledTree::from_edges(1, &[]).unwrap();
        assert_eq!(t.n(), 1);
        assert!(t.edges().is_empty());
        let p3 = LabeledTree::from_edges(3, &[(2, 1), (2, 3)]).unwrap();
        assert_eq!(p3.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(p3, LabeledTree::path(3).unwrap());
    }

    #[test]
    fn validation_errors_are_distinct() {
        assert_eq!(LabeledTree::from_edges(4, &[(1, 2), (3, 4)]), Err(Error::Disconnected { unreached: 3 }));
        assert_eq!(
            LabeledTree::from_edges(3, &[(1, 2), (2, 3), (1, 3)]),
            Err(Error::WrongEdgeCount { n: 3, expected: 2, got: 3 })
        );
        assert_eq!(LabeledTree::from_edges(3, &[(1, 4), (2, 3)]), Err(Error::LabelOutOfRange { label: 4, n: 3 }));
        assert_eq!(LabeledTree::from_edges(3, &[(0, 1), (2, 3)]), Err(Error::LabelOutOfRange { label: 0, n: 3 }));
        assert_eq!(LabeledTree::from_edges(3, &[(1, 1), (2, 3)]), Err(Error::SelfLoop(1)));
        assert_eq!(LabeledTree::from_edges(3, &[(1, 2), (2, 1)]), Err(Error::DuplicateEdge(1, 2)));
        assert_eq!(LabeledTree::from_edges(0, &[]), Err(Error::EmptyTree));
    }

    #[test]
    fn prufer_examples() {
        let edge = PruferSequence::new(2, vec![]).unwrap().to_tree();
        assert_eq!(edge.edges(), &[(1, 2)]);
        let star = PruferSequence::new(4, vec![1, 1]).unwrap().to_tree();
        assert_eq!(star, LabeledTree::star(4).unwrap());
        assert_eq!(star.to_prufer().unwrap().as_slice(), &[1, 1]);
        assert_eq!(edge.to_prufer().unwrap().as_slice(), &[] as &[usize]);

        let trees: BTreeSet<_> =
            (1..=3).map(|s| PruferSequence::new(3, vec![s]).unwrap().to_tree().edges().to_vec()).collect();
        assert_eq!(trees.len(), 3);

        assert_eq!(LabeledTree::single().to_prufer(), Err(Error::PruferTooSmall(1)));
        assert_eq!(
            PruferSequence::new(4, vec![1, 5]),
            Err(Error::PruferEntryOutOfRange { entry: 5, position: 1, n: 4 })
        );
    }

    #[test]
    fn rooted_views() {
        let p3 = LabeledTree::path(3).unwrap();
        let view = p3.rooted(2).unwrap();
        assert_eq!(view.children(2), vec![1, 3]);
        assert_eq!(view.order().last(), Some(2));
        assert_eq!(view.parent(2), None);

        let single = LabeledTree::single().rooted(1).unwrap();
        assert_eq!(single.order().collect::<Vec<_>>(), vec![1]);
        assert_eq!(single.parent(1), None);

        assert_eq!(p3.rooted(4), Err(Error::RootOutOfRange { root: 4, n: 3 }));
    }

    #[test]
    fn decoded_view_is_consistent() {
        let seq = PruferSequence::new(7, vec![3, 3, 7, 1, 6]).unwrap();
        let tree = seq.to_tree();
        let view = seq.to_rooted();
        assert_eq!(view.root(), 7);
        let pos: Vec<usize> = {
            let mut pos = vec![0; 8];
            for (i, v) in view.order().enumerate() {
                pos[v] = i;
            }
            pos
        };
        for v in 1..=7 {
            if let Some(p) = view.parent(v) {
                assert!(tree.has_edge(v, p));
                assert!(pos[v] < pos[p]);
            }
        }
    }

    #[test]
    fn text_formats() {
        let t = LabeledTree::parse_edge_text("3\n1 2\n# middle\n\n2 3\n").unwrap();
        assert_eq!(t, LabeledTree::path(3).unwrap());
        assert_eq!(LabeledTree::parse_edge_text(&t.to_edge_text()).unwrap(), t);
        assert!(matches!(LabeledTree::parse_edge_text("3\n1 2 3\n"), Err(Error::Parse(_))));

        let p: PruferSequence = "4 1 1".parse().unwrap();
        assert_eq!(p.as_slice(), &[1, 1]);
        assert_eq!(p.to_text().parse::<PruferSequence>().unwrap(), p);
        let p2: PruferSequence = "2\n\n".parse().unwrap();
        assert_eq!(p2.to_tree().edges(), &[(1, 2)]);
    }
}
