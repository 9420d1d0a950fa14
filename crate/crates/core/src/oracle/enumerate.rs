use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::OracleError;
use crate::graph::{mean_from_wiener, Graph};
use crate::rational::Rational;
use crate::trees::Tree;

/// Default cap on the number of spanning trees an enumeration may visit.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Number of spanning trees by the matrix-tree theorem, computed with
/// fraction-free (Bareiss) elimination over exact integers.
///
/// ```
/// use spanmu::graph::Graph;
/// use spanmu::oracle::kirchhoff_count;
///
/// assert_eq!(kirchhoff_count(&Graph::complete(5).unwrap()), 125u32.into());
/// ```
pub fn kirchhoff_count(g: &Graph) -> BigInt {
    let n = g.n();
    if n == 1 {
        return BigInt::one();
    }
    // Reduced Laplacian: drop row and column 0.
    let size = n - 1;
    let mut a: Vec<Vec<BigInt>> = (1..n)
        .map(|u| {
            (1..n)
                .map(|v| {
                    if u == v {
                        BigInt::from(g.degree(u))
                    } else if g.has_edge(u, v) {
                        BigInt::from(-1)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    (sign * &a[size - 1][size - 1]).abs()
}

/// Disjoint sets with an undo log, for include/exclude backtracking.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<(usize, usize)>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n], log: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.log.push((a, b));
        true
    }

    fn undo(&mut self) {
        let (a, b) = self.log.pop().expect("undo after union");
        self.parent[b] = b;
        self.size[a] -= self.size[b];
    }
}

struct Walker<'a, F> {
    n: usize,
    edges: &'a [(usize, usize)],
    /// 0 undecided, 1 included, 2 excluded.
    state: Vec<u8>,
    chosen: Vec<(usize, usize)>,
    dsu: Dsu,
    visit: F,
}

impl<F: FnMut(&[(usize, usize)])> Walker<'_, F> {
    /// Would `u` and `v` stay connected using only non-excluded edges other
    /// than edge `skip`?
    fn connected_without(&self, skip: usize) -> bool {
        let (u, v) = self.edges[skip];
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i != skip && self.state[i] != 2 {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    fn walk(&mut self, i: usize) {
        if self.chosen.len() + 1 == self.n {
            (self.visit)(&self.chosen);
            return;
        }
        if i == self.edges.len() {
            return;
        }
        let (u, v) = self.edges[i];
        if self.dsu.union(u, v) {
            self.state[i] = 1;
            self.chosen.push((u, v));
            self.walk(i + 1);
            self.chosen.pop();
            self.dsu.undo();
        }
        // Excluding a bridge of the remaining graph leads nowhere.
        if self.dsu.find(u) == self.dsu.find(v) || self.connected_without(i) {
            self.state[i] = 2;
            self.walk(i + 1);
        }
        self.state[i] = 0;
    }
}

/// Calls `visit` with the edge list of every spanning tree of `g`, in a
/// deterministic include-before-exclude order. Fails before visiting
/// anything if the matrix-tree count exceeds `cap`.
pub fn for_each_spanning_tree<F>(g: &Graph, cap: u64, visit: F) -> Result<u64, OracleError>
where
    F: FnMut(&[(usize, usize)]),
{
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let count = kirchhoff_count(g);
    let count = match count.to_u64() {
        Some(c) if c <= cap => c,
        _ => return Err(OracleError::Overflow { count, cap }),
    };
    let edges = g.edges();
    let mut w = Walker {
        n: g.n(),
        edges: &edges,
        state: vec![0; edges.len()],
        chosen: Vec::with_capacity(g.n()),
        dsu: Dsu::new(g.n()),
        visit,
    };
    w.walk(0);
    Ok(count)
}

/// Every spanning tree of `g`, collected.
pub fn spanning_trees(g: &Graph, cap: u64) -> Result<Vec<Tree>, OracleError> {
    let mut out = Vec::new();
    for_each_spanning_tree(g, cap, |edges| {
        out.push(Tree::from_edges(g.n(), edges).expect("enumerated edge sets are trees"));
    })?;
    Ok(out)
}

/// Wiener index of a tree given by its edge list, via edge cuts.
fn tree_wiener(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut size = vec![1u64; n];
    let mut total = 0;
    for &x in order.iter().rev().filter(|&&x| x != 0) {
        total += size[x] * (n as u64 - size[x]);
        size[parent[x]] += size[x];
    }
    total
}

/// Exact minimum-average-distance spanning tree by exhaustive search.
/// Ties go to the first tree in enumeration order.
pub fn mrct(g: &Graph, cap: u64) -> Result<(Tree, Rational), OracleError> {
    let n = g.n();
    if n < 2 {
        return Err(OracleError::TooSmall);
    }
    let mut best: Option<(u64, Vec<(usize, usize)>)> = None;
    for_each_spanning_tree(g, cap, |edges| {
        let w = tree_wiener(n, edges);
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
            best = Some((w, edges.to_vec()));
        }
    })?;
    let (w, edges) = best.expect("connected graphs have a spanning tree");
    let tree = Tree::from_edges(n, &edges).expect("enumerated edge sets are trees");
    Ok((tree, mean_from_wiener(w, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn counts() {
        assert_eq!(kirchhoff_count(&Graph::complete(4).unwrap()), BigInt::from(16));
        assert_eq!(kirchhoff_count(&Graph::cycle(5).unwrap()), BigInt::from(5));
        assert_eq!(kirchhoff_count(&Graph::path(4).unwrap()), BigInt::from(1));
        assert_eq!(kirchhoff_count(&Graph::complete(1).unwrap()), BigInt::from(1));
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(kirchhoff_count(&disconnected), BigInt::zero());
    }

    #[test]
    fn enumeration_matches_counts() {
        for g in [Graph::complete(4).unwrap(), Graph::cycle(5).unwrap(), Graph::path(4).unwrap()] {
            let trees = spanning_trees(&g, DEFAULT_CAP).unwrap();
            assert_eq!(BigInt::from(trees.len()), kirchhoff_count(&g));
            let mut unique = trees.clone();
            unique.sort_by_key(Tree::edges);
            unique.dedup();
            assert_eq!(unique.len(), trees.len());
        }
    }

    #[test]
    fn cap_overflow() {
        let k6 = Graph::complete(6).unwrap();
        match spanning_trees(&k6, 100) {
            Err(OracleError::Overflow { count, cap }) => {
                assert_eq!(count, BigInt::from(1296));
                assert_eq!(cap, 100);
            }
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn small_mrct() {
        let (t, mu) = mrct(&Graph::complete(4).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(mu, ratio(3, 2));
        assert_eq!(t.leaves().len(), 3);
        let (_, mu) = mrct(&Graph::cycle(5).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(mu, int(2));
    }
}
