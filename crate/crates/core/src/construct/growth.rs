use std::collections::BTreeMap;

use sha2::{Digest, Sha256};

use super::ConstructError;
use crate::graph::Graph;
use crate::trees::{Decomposition, Tree};

/// One growth step: `x` joins the independent core through midpoint `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthStep {
    pub x: usize,
    pub z: usize,
    /// `z` entered the base tree in this step.
    pub z_was_new: bool,
}

/// Audit record of the dominating base-tree growth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTrace {
    pub start: usize,
    pub steps: Vec<GrowthStep>,
    /// The independent core, in insertion order.
    pub independent: Vec<usize>,
    /// Sorted base-tree vertices.
    pub base: Vec<usize>,
    pub base_edges: Vec<(usize, usize)>,
}

impl GrowthTrace {
    /// Size of the independent core.
    pub fn k(&self) -> usize {
        self.independent.len()
    }

    /// Order of the base tree.
    pub fn t(&self) -> usize {
        self.base.len()
    }

    /// Hex SHA-256 of the step sequence.
    pub fn digest(&self) -> String {
        let mut text = format!("start={}", self.start);
        for s in &self.steps {
            text.push_str(&format!(";{}:{}:{}", s.x, s.z, u8::from(s.z_was_new)));
        }
        hex::encode(Sha256::digest(text.as_bytes()))
    }
}

/// Grows an independent core `A` and a base tree spanning it, one vertex at
/// distance exactly two from `A` at a time, until every vertex outside the
/// base has a neighbour in `A`.
///
/// Candidates are scanned by ascending id; for each, the smallest-id
/// partner `y` in `A` and then the smallest common neighbour `z` are used.
/// An already-present `z` only gains the edge `xz` so the base stays a tree.
pub fn grow_dominating_tree(g: &Graph, start: usize) -> Result<GrowthTrace, ConstructError> {
    let n = g.n();
    if start >= n {
        return Err(ConstructError::StartOutOfRange(start));
    }
    if !g.is_connected() {
        return Err(ConstructError::Disconnected);
    }
    let mut in_base = vec![false; n];
    let mut in_core = vec![false; n];
    // Number of core neighbours of each vertex.
    let mut core_nbrs = vec![0usize; n];

    let mut independent = vec![start];
    let mut base_edges = Vec::new();
    let mut steps = Vec::new();
    in_base[start] = true;
    in_core[start] = true;
    for &u in g.neighbors(start) {
        core_nbrs[u] += 1;
    }

    loop {
        let next = (0..n).find(|&x| {
            !in_base[x] && core_nbrs[x] == 0 && g.neighbors(x).iter().any(|&z| core_nbrs[z] > 0)
        });
        let Some(x) = next else { break };
        let mut sorted_core = independent.clone();
        sorted_core.sort_unstable();
        let (y, z) = sorted_core
            .iter()
            .find_map(|&y| {
                g.neighbors(x)
                    .iter()
                    .copied()
                    .find(|&z| g.has_edge(z, y))
                    .map(|z| (y, z))
            })
            .expect("x is at distance two from the core");

        let z_was_new = !in_base[z];
        base_edges.push((x.min(z), x.max(z)));
        if z_was_new {
            base_edges.push((y.min(z), y.max(z)));
            in_base[z] = true;
        }
        in_base[x] = true;
        in_core[x] = true;
        independent.push(x);
        for &u in g.neighbors(x) {
            core_nbrs[u] += 1;
        }
        steps.push(GrowthStep { x, z, z_was_new });
    }

    if let Some(w) = (0..n).find(|&w| !in_base[w] && core_nbrs[w] == 0) {
        return Err(ConstructError::Internal(format!(
            "vertex {w} is outside the base tree and not dominated by the core"
        )));
    }
    let base = (0..n).filter(|&v| in_base[v]).collect();
    Ok(GrowthTrace { start, steps, independent, base, base_edges })
}

/// Hangs every vertex outside the base on a core neighbour, choosing the
/// one with the smallest total base-tree distance (then smallest id).
pub fn attach_pendants(g: &Graph, trace: &GrowthTrace) -> Result<(Tree, Decomposition), ConstructError> {
    let n = g.n();
    let mut in_base = vec![false; n];
    for &v in &trace.base {
        in_base[v] = true;
    }
    let mut base_adj = vec![Vec::new(); n];
    for &(a, b) in &trace.base_edges {
        base_adj[a].push(b);
        base_adj[b].push(a);
    }
    let mut spread = vec![usize::MAX; n];
    for &a in &trace.independent {
        let mut dist = vec![usize::MAX; n];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        let mut total = 0;
        while let Some(x) = queue.pop_front() {
            total += dist[x];
            for &y in &base_adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        spread[a] = total;
    }

    let mut edges = trace.base_edges.clone();
    let mut pendants = BTreeMap::new();
    for w in (0..n).filter(|&w| !in_base[w]) {
        let hub = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&h| spread[h] != usize::MAX)
            .min_by_key(|&h| (spread[h], h))
            .ok_or_else(|| ConstructError::Internal(format!("vertex {w} has no core neighbour")))?;
        edges.push((w, hub));
        pendants.insert(w, hub);
    }
    let tree = Tree::from_edges(n, &edges).map_err(|e| ConstructError::Internal(e.to_string()))?;
    Ok((tree, Decomposition { base: trace.base.clone(), pendants }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::trees::decompose;

    #[test]
    fn cycle_growth() {
        let g = Graph::cycle(5).unwrap();
        let trace = grow_dominating_tree(&g, 0).unwrap();
        assert_eq!(trace.independent, vec![0, 2]);
        assert_eq!(trace.base, vec![0, 1, 2]);
        assert_eq!((trace.k(), trace.t()), (2, 3));
        let (tree, dec) = attach_pendants(&g, &trace).unwrap();
        assert_eq!(dec.pendants.get(&3), Some(&2));
        assert_eq!(dec.pendants.get(&4), Some(&0));
        assert_eq!(tree.wiener_index(), 20);
        assert_eq!(tree.average_distance().unwrap(), ratio(2, 1));
    }

    #[test]
    fn complete_graph_growth() {
        let g = Graph::complete(4).unwrap();
        for v in 0..4 {
            let trace = grow_dominating_tree(&g, v).unwrap();
            assert_eq!(trace.independent, vec![v]);
            assert_eq!(trace.base, vec![v]);
        }
        let (tree, _) = attach_pendants(&g, &grow_dominating_tree(&g, 0).unwrap()).unwrap();
        assert_eq!(tree.average_distance().unwrap(), ratio(3, 2));
    }

    #[test]
    fn path_growth_from_end() {
        let g = Graph::path(5).unwrap();
        let trace = grow_dominating_tree(&g, 0).unwrap();
        assert_eq!(trace.independent, vec![0, 2, 4]);
        assert_eq!(trace.t(), 5);
        assert_eq!(trace.t(), 2 * trace.k() - 1);
    }

    #[test]
    fn attached_tree_is_in_tab() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]).unwrap();
        for start in 0..6 {
            let trace = grow_dominating_tree(&g, start).unwrap();
            let (tree, dec) = attach_pendants(&g, &trace).unwrap();
            assert_eq!(decompose(&tree, &trace.base).unwrap(), dec);
            assert!(g.is_independent_set(&trace.independent).unwrap());
            assert!(trace.t() < 2 * trace.k());
        }
    }

    #[test]
    fn digest_is_stable() {
        let g = Graph::cycle(7).unwrap();
        let a = grow_dominating_tree(&g, 0).unwrap().digest();
        let b = grow_dominating_tree(&g, 0).unwrap().digest();
        let c = grow_dominating_tree(&g, 1).unwrap().digest();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(grow_dominating_tree(&g, 0), Err(ConstructError::Disconnected)));
        assert!(matches!(grow_dominating_tree(&g, 9), Err(ConstructError::StartOutOfRange(9))));
    }
}
