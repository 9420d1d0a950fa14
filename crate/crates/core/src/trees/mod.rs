//! Free and spanning trees, the double broom `H_{a,b}`, and the structural
//! tools built on them: pendant/internal path extraction, membership in
//! `T_{a,b}`, and branch-shift transformations.

mod decompose;
mod segments;
mod shift;

pub use decompose::{decompose, Decomposition, DecomposeError};
pub use segments::{path_segments, PathSegment, PathSegments, SegmentKind};
pub use shift::{shift_transform, ShiftError, ShiftOutcome, ShiftVariant};

use std::collections::VecDeque;

use crate::graph::{mean_from_wiener, Graph, GraphError};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("tree must have at least one vertex")]
    Empty,
    #[error("a tree on {n} vertices has {expected} edges, got {got}")]
    EdgeCount { n: usize, expected: usize, got: usize },
    #[error("edge list does not form a tree")]
    NotATree,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge ({0}, {1}) is not in the tree")]
    MissingEdge(usize, usize),
    #[error("need a >= 2 and b >= 2, got a = {a}, b = {b}")]
    DoubleBroomRange { a: usize, b: usize },
}

/// A tree on vertices `0..n`, stored as sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::EdgeCount { n, expected: n - 1, got: edges.len() });
        }
        let g = Graph::from_edges(n, edges)?;
        if g.m() != n - 1 || !g.is_connected() {
            return Err(TreeError::NotATree);
        }
        Ok(Tree { adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect() })
    }

    /// Accepts a graph that happens to be a tree.
    pub fn from_graph(g: &Graph) -> Result<Self, TreeError> {
        Self::from_edges(g.n(), &g.edges())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n(), &self.edges()).expect("tree edges are valid")
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Swaps one edge for another, failing if the result is not a tree.
    pub fn replace_edge(&self, remove: (usize, usize), add: (usize, usize)) -> Result<Tree, TreeError> {
        if !self.has_edge(remove.0, remove.1) {
            return Err(TreeError::MissingEdge(remove.0, remove.1));
        }
        let key = (remove.0.min(remove.1), remove.0.max(remove.1));
        let mut edges: Vec<_> = self.edges().into_iter().filter(|&e| e != key).collect();
        edges.push(add);
        Tree::from_edges(self.n(), &edges)
    }

    /// Distances from `src` inside the tree.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([src]);
        dist[src] = 0;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Parent array and BFS order from `root`.
    fn rooted(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    order.push(y);
                }
            }
        }
        (parent, order)
    }

    /// Wiener index from edge cuts: each edge contributes `s (n - s)`.
    pub fn wiener_index(&self) -> u64 {
        let n = self.n() as u64;
        let (parent, order) = self.rooted(0);
        let mut size = vec![1u64; self.n()];
        let mut total = 0;
        for &v in order.iter().skip(1).rev() {
            size[parent[v]] += size[v];
            total += size[v] * (n - size[v]);
        }
        total
    }

    pub fn average_distance(&self) -> Result<Rational, GraphError> {
        if self.n() < 2 {
            return Err(GraphError::TooSmall);
        }
        Ok(mean_from_wiener(self.wiener_index(), self.n()))
    }

    pub fn diameter(&self) -> usize {
        let far = |src| {
            let d = self.distances_from(src);
            let (v, &len) = d.iter().enumerate().max_by_key(|&(i, &x)| (x, std::cmp::Reverse(i))).unwrap();
            (v, len)
        };
        let (a, _) = far(0);
        far(a).1
    }

    /// Centre vertices (one or two).
    pub fn centers(&self) -> Vec<usize> {
        let n = self.n();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &y in &self.adj[leaf] {
                    degree[y] -= 1;
                    if degree[y] == 1 {
                        next.push(y);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Isomorphism-invariant encoding (AHU on the centre).
    pub fn canonical_form(&self) -> Vec<u8> {
        self.centers()
            .into_iter()
            .map(|c| self.rooted_code(c))
            .min()
            .unwrap_or_default()
    }

    fn rooted_code(&self, root: usize) -> Vec<u8> {
        let (parent, order) = self.rooted(root);
        let mut codes: Vec<Vec<u8>> = vec![Vec::new(); self.n()];
        for &v in order.iter().rev() {
            let mut kids: Vec<Vec<u8>> = self.adj[v]
                .iter()
                .filter(|&&c| parent[c] == v)
                .map(|&c| std::mem::take(&mut codes[c]))
                .collect();
            kids.sort();
            let mut code = vec![b'('];
            for k in kids {
                code.extend(k);
            }
            code.push(b')');
            codes[v] = code;
        }
        std::mem::take(&mut codes[root])
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.n() == other.n() && self.canonical_form() == other.canonical_form()
    }
}

/// The double broom `H_{a,b}`: path `0..a` with `floor(b/2)` leaves on vertex
/// 0 and `ceil(b/2)` leaves on vertex `a - 1`.
///
/// Labels: the path first, then the leaves of vertex 0, then the leaves of
/// the far end.
pub fn h_ab(a: usize, b: usize) -> Result<Tree, TreeError> {
    if a < 2 || b < 2 {
        return Err(TreeError::DoubleBroomRange { a, b });
    }
    let mut edges: Vec<_> = (1..a).map(|v| (v - 1, v)).collect();
    let left = b / 2;
    for i in 0..b {
        let hub = if i < left { 0 } else { a - 1 };
        edges.push((hub, a + i));
    }
    Tree::from_edges(a + b, &edges)
}
