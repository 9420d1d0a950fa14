//! Simple undirected graphs, BFS distances and the Wiener index.

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::rational::Rational;

/// Errors raised while building or measuring a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("average distance needs at least two vertices")]
    TooSmall,
}

/// An undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and deduplicated, so equality of two
/// graphs is equality of their edge sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Parallel edges collapse into one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Self::from_edges(n, &edges)
    }

    /// The star `K_{1,n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Returns a copy of this graph with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut edges = self.edges();
        edges.push((u, v));
        Self::from_edges(self.n(), &edges)
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Full distance matrix, one BFS per source.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        (0..self.n())
            .map(|s| {
                self.bfs(s)
                    .into_iter()
                    .map(|d| d.ok_or(GraphError::Disconnected))
                    .collect()
            })
            .collect()
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Sum of `d(u, v)` over all unordered pairs.
    pub fn wiener_index(&self) -> Result<u64, GraphError> {
        let mut total = 0u64;
        for s in 0..self.n() {
            for d in self.bfs(s) {
                total += d.ok_or(GraphError::Disconnected)? as u64;
            }
        }
        Ok(total / 2)
    }

    /// Exact mean distance `W(G) / C(n, 2)`.
    pub fn average_distance(&self) -> Result<Rational, GraphError> {
        let n = self.n();
        if n < 2 {
            return Err(GraphError::TooSmall);
        }
        let w = self.wiener_index()?;
        Ok(mean_from_wiener(w, n))
    }

    pub fn structure_profile(&self) -> StructureProfile {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let pendant_vertices = (0..self.n()).filter(|&v| degrees[v] == 1).collect();
        let diameter = self.distance_matrix().ok().map(|rows| {
            rows.iter()
                .flat_map(|r| r.iter().copied())
                .max()
                .unwrap_or(0)
        });
        StructureProfile {
            connected: diameter.is_some(),
            diameter,
            degrees,
            pendant_vertices,
        }
    }

    /// True iff no edge joins two members of `set`.
    pub fn is_independent_set(&self, set: &[usize]) -> Result<bool, GraphError> {
        let n = self.n();
        let mut member = vec![false; n];
        for &v in set {
            if v >= n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            member[v] = true;
        }
        Ok(set
            .iter()
            .all(|&v| self.adj[v].iter().all(|&u| !member[u])))
    }
}

/// `W / C(n, 2)` as an exact rational.
pub(crate) fn mean_from_wiener(w: u64, n: usize) -> Rational {
    let pairs = (n as u64) * (n as u64 - 1) / 2;
    Rational::new(BigInt::from(w), BigInt::from(pairs))
}

/// Degree and distance summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureProfile {
    pub connected: bool,
    /// Maximum pairwise distance; `None` when disconnected.
    pub diameter: Option<usize>,
    pub degrees: Vec<usize>,
    pub pendant_vertices: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn construction_and_rejections() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.m(), 1);
        assert_eq!(c5().m(), 5);
        assert_eq!(c5(), Graph::cycle(5).unwrap());
        assert_eq!(Graph::from_edges(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::Empty));
        let dup = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(dup.m(), 2);
        assert_eq!(dup.neighbors(1), &[0, 2]);
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(Graph::path(4).unwrap().wiener_index().unwrap(), 10);
        assert_eq!(Graph::star(5).unwrap().wiener_index().unwrap(), 16);
        assert_eq!(Graph::complete(2).unwrap().wiener_index().unwrap(), 1);
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.wiener_index(), Err(GraphError::Disconnected));
    }

    #[test]
    fn average_distance_examples() {
        assert_eq!(Graph::star(5).unwrap().average_distance().unwrap(), ratio(8, 5));
        assert_eq!(Graph::path(4).unwrap().average_distance().unwrap(), ratio(5, 3));
        for n in 2..9 {
            assert_eq!(Graph::complete(n).unwrap().average_distance().unwrap(), ratio(1, 1));
        }
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(single.average_distance(), Err(GraphError::TooSmall));
    }

    #[test]
    fn profiles() {
        let p4 = Graph::path(4).unwrap().structure_profile();
        assert_eq!(p4.diameter, Some(3));
        assert_eq!(p4.pendant_vertices, vec![0, 3]);
        let c = c5().structure_profile();
        assert_eq!(c.diameter, Some(2));
        assert!(c.pendant_vertices.is_empty());
        let s = Graph::star(5).unwrap().structure_profile();
        assert_eq!(s.diameter, Some(2));
        assert_eq!(s.pendant_vertices, vec![1, 2, 3, 4]);
        let single = Graph::from_edges(1, &[]).unwrap().structure_profile();
        assert_eq!(single.diameter, Some(0));
        let split = Graph::from_edges(3, &[(0, 1)]).unwrap().structure_profile();
        assert!(!split.connected);
        assert_eq!(split.diameter, None);
    }

    #[test]
    fn independence_checks() {
        let g = c5();
        assert!(g.is_independent_set(&[0, 2]).unwrap());
        assert!(!g.is_independent_set(&[0, 1]).unwrap());
        assert!(g.is_independent_set(&[]).unwrap());
        assert!(g.is_independent_set(&[7]).is_err());
    }
}
