use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::OracleError;
use crate::trees::Tree;

/// Largest order accepted by [`all_labeled_trees`].
pub const MAX_LABELED_ORDER: usize = 9;

/// The labeled tree with Prüfer sequence `seq` on `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Result<Tree, OracleError> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(OracleError::Prufer(format!("label {bad} out of range for {n} vertices")));
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf remains");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Ok(Tree::from_edges(n, &edges).expect("decoded sequences give trees"))
}

/// Prüfer sequence of a tree with at least two vertices.
pub fn prufer_encode(t: &Tree) -> Result<Vec<usize>, OracleError> {
    let n = t.n();
    if n < 2 {
        return Err(OracleError::Prufer("need at least two vertices".into()));
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut seq = Vec::with_capacity(n - 2);
    while seq.len() + 2 < n {
        let Reverse(leaf) = leaves.pop().expect("a leaf remains");
        removed[leaf] = true;
        let next = *t.neighbors(leaf).iter().find(|&&u| !removed[u]).expect("leaf has a neighbour");
        seq.push(next);
        degree[next] -= 1;
        if degree[next] == 1 {
            leaves.push(Reverse(next));
        }
    }
    Ok(seq)
}

/// All `n^(n-2)` labeled trees on `n` vertices, in lexicographic order of
/// their Prüfer sequences.
///
/// ```
/// use spanmu::oracle::all_labeled_trees;
///
/// assert_eq!(all_labeled_trees(4).unwrap().count(), 16);
/// ```
pub fn all_labeled_trees(n: usize) -> Result<impl Iterator<Item = Tree>, OracleError> {
    if !(1..=MAX_LABELED_ORDER).contains(&n) {
        return Err(OracleError::Order(n));
    }
    let len = n.saturating_sub(2);
    let total = if n == 1 { 1 } else { n.pow(len as u32) };
    Ok((0..total).map(move |mut code| {
        if n == 1 {
            return Tree::from_edges(1, &[]).expect("single vertex");
        }
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        prufer_decode(&seq).expect("sequence in range")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_counts() {
        assert_eq!(all_labeled_trees(1).unwrap().count(), 1);
        assert_eq!(all_labeled_trees(2).unwrap().count(), 1);
        assert_eq!(all_labeled_trees(3).unwrap().count(), 3);
        assert_eq!(all_labeled_trees(5).unwrap().count(), 125);
        assert!(all_labeled_trees(0).is_err());
        assert!(all_labeled_trees(10).is_err());
    }

    #[test]
    fn round_trip() {
        for t in all_labeled_trees(6).unwrap() {
            assert_eq!(prufer_decode(&prufer_encode(&t).unwrap()).unwrap(), t);
        }
    }

    #[test]
    fn known_sequence() {
        let t = prufer_decode(&[0, 0, 1, 5]).unwrap();
        assert_eq!(t.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 5), (4, 5)]);
        assert_eq!(prufer_encode(&t).unwrap(), vec![0, 0, 1, 5]);
        assert!(prufer_decode(&[7]).is_err());
    }
}
