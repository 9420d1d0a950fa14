use std::collections::BTreeMap;

use super::Tree;

/// A tree split into a base subtree plus leaves hanging off it, i.e. a
/// witness of membership in `T_{a,b}` with `a = |base|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Sorted base vertices.
    pub base: Vec<usize>,
    /// Each non-base vertex mapped to its base neighbour.
    pub pendants: BTreeMap<usize, usize>,
}

impl Decomposition {
    pub fn a(&self) -> usize {
        self.base.len()
    }

    pub fn b(&self) -> usize {
        self.pendants.len()
    }

    /// Number of leaves attached to `v`.
    pub fn attached_to(&self, v: usize) -> usize {
        self.pendants.values().filter(|&&h| h == v).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecomposeError {
    #[error("base set is empty")]
    EmptyBase,
    #[error("base vertex {0} out of range")]
    OutOfRange(usize),
    #[error("base does not induce a subtree")]
    BaseNotSubtree,
    #[error("vertex {0} is outside the base but is not a leaf attached to it")]
    NotAttachedLeaf(usize),
}

/// Checks that `t` is `base` plus leaves attached to base vertices.
pub fn decompose(t: &Tree, base: &[usize]) -> Result<Decomposition, DecomposeError> {
    if base.is_empty() {
        return Err(DecomposeError::EmptyBase);
    }
    let n = t.n();
    let mut in_base = vec![false; n];
    for &v in base {
        if v >= n {
            return Err(DecomposeError::OutOfRange(v));
        }
        in_base[v] = true;
    }
    let mut sorted: Vec<usize> = base.to_vec();
    sorted.sort_unstable();
    sorted.dedup();

    // A vertex set of a tree induces a subtree iff it is connected.
    let mut seen = vec![false; n];
    let mut stack = vec![sorted[0]];
    seen[sorted[0]] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for &y in t.neighbors(x) {
            if in_base[y] && !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    if reached != sorted.len() {
        return Err(DecomposeError::BaseNotSubtree);
    }

    let mut pendants = BTreeMap::new();
    for v in (0..n).filter(|&v| !in_base[v]) {
        match t.neighbors(v) {
            [hub] if in_base[*hub] => {
                pendants.insert(v, *hub);
            }
            _ => return Err(DecomposeError::NotAttachedLeaf(v)),
        }
    }
    Ok(Decomposition { base: sorted, pendants })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::trees::h_ab;

    fn p5() -> Tree {
        Tree::from_graph(&Graph::path(5).unwrap()).unwrap()
    }

    #[test]
    fn double_broom_base() {
        let d = decompose(&h_ab(3, 4).unwrap(), &[0, 1, 2]).unwrap();
        assert_eq!(d.b(), 4);
        assert_eq!(d.attached_to(0), 2);
        assert_eq!(d.attached_to(2), 2);
    }

    #[test]
    fn path_bases() {
        let d = decompose(&p5(), &[1, 2, 3]).unwrap();
        assert_eq!(d.b(), 2);
        assert_eq!(decompose(&p5(), &[0, 1]), Err(DecomposeError::NotAttachedLeaf(2)));
        assert_eq!(decompose(&p5(), &[0, 2]), Err(DecomposeError::BaseNotSubtree));
        assert_eq!(decompose(&p5(), &[]), Err(DecomposeError::EmptyBase));
        assert_eq!(decompose(&p5(), &(0..5).collect::<Vec<_>>()).unwrap().b(), 0);
    }
}
