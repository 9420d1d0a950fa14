use super::{Tree, TreeError};

/// How `u` and `w` sit relative to the pivot `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftVariant {
    /// `u` and `w` are neighbours of `v`.
    Adjacent,
    /// `u` and `w` are two steps from `v`, each through a degree-2 vertex.
    Subdivided,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShiftError {
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("u and w must be distinct and different from v")]
    Degenerate,
    #[error("u and w are not both adjacent to v, nor both behind degree-2 vertices next to v")]
    NotPositioned,
    #[error("v carries no branch besides the u- and w-sides")]
    NoBranches,
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Both candidate trees of a branch shift, plus the component orders
/// needed to predict their Wiener indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftOutcome {
    pub toward_u: Tree,
    pub toward_w: Tree,
    pub variant: ShiftVariant,
    /// Order of the moved branch set `M`.
    pub moved: usize,
    /// Order of the component of `t - v` containing `u`.
    pub u_side: usize,
    /// Order of the component of `t - v` containing `w`.
    pub w_side: usize,
}

impl ShiftOutcome {
    /// Predicted `W(toward_w) - W(t)`.
    pub fn predicted_delta_w(&self) -> i64 {
        self.delta(self.u_side as i64, self.w_side as i64)
    }

    /// Predicted `W(toward_u) - W(t)`.
    pub fn predicted_delta_u(&self) -> i64 {
        self.delta(self.w_side as i64, self.u_side as i64)
    }

    // Moving M one step away from the `stay` side gains one unit against
    // `stay` and v, loses one against `toward`. The subdivided shift moves
    // two steps; the subdivision vertex on the target side keeps its distance.
    fn delta(&self, stay: i64, toward: i64) -> i64 {
        let m = self.moved as i64;
        match self.variant {
            ShiftVariant::Adjacent => m * (stay - toward + 1),
            ShiftVariant::Subdivided => 2 * m * (stay - toward + 2),
        }
    }
}

/// Moves every branch of `v` that avoids the `u`- and `w`-sides onto `u`
/// (first tree) or onto `w` (second tree). Vertex ids are preserved.
pub fn shift_transform(t: &Tree, v: usize, u: usize, w: usize) -> Result<ShiftOutcome, ShiftError> {
    let n = t.n();
    for x in [v, u, w] {
        if x >= n {
            return Err(ShiftError::OutOfRange(x));
        }
    }
    if u == w || u == v || w == v {
        return Err(ShiftError::Degenerate);
    }

    let gate = |target: usize| -> Option<(usize, bool)> {
        if t.has_edge(v, target) {
            return Some((target, true));
        }
        t.neighbors(v)
            .iter()
            .copied()
            .find(|&s| t.degree(s) == 2 && t.has_edge(s, target))
            .map(|s| (s, false))
    };
    let ((gate_u, adj_u), (gate_w, adj_w)) = match (gate(u), gate(w)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(ShiftError::NotPositioned),
    };
    if adj_u != adj_w || gate_u == gate_w {
        return Err(ShiftError::NotPositioned);
    }
    let variant = if adj_u { ShiftVariant::Adjacent } else { ShiftVariant::Subdivided };

    let roots: Vec<usize> = t
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&x| x != gate_u && x != gate_w)
        .collect();
    if roots.is_empty() {
        return Err(ShiftError::NoBranches);
    }

    let base: Vec<(usize, usize)> = t
        .edges()
        .into_iter()
        .filter(|&(a, b)| !((a == v && roots.contains(&b)) || (b == v && roots.contains(&a))))
        .collect();
    let rebuild = |hub: usize| {
        let mut edges = base.clone();
        edges.extend(roots.iter().map(|&r| (hub, r)));
        Tree::from_edges(n, &edges)
    };

    let u_side = component_order(t, gate_u, v);
    let w_side = component_order(t, gate_w, v);
    Ok(ShiftOutcome {
        toward_u: rebuild(u)?,
        toward_w: rebuild(w)?,
        variant,
        moved: n - 1 - u_side - w_side,
        u_side,
        w_side,
    })
}

/// Order of the component of `t - blocked` containing `start`.
fn component_order(t: &Tree, start: usize, blocked: usize) -> usize {
    let mut seen = vec![false; t.n()];
    seen[blocked] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 0;
    while let Some(x) = stack.pop() {
        count += 1;
        for &y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn claw_to_path() {
        // v = 0 with u = 1, w = 2, extra leaf 3.
        let claw = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let out = shift_transform(&claw, 0, 1, 2).unwrap();
        assert_eq!(claw.wiener_index(), 9);
        assert_eq!(out.toward_u.wiener_index(), 10);
        assert_eq!(out.toward_w.wiener_index(), 10);
        let p4 = Tree::from_graph(&Graph::path(4).unwrap()).unwrap();
        assert!(out.toward_u.is_isomorphic(&p4));
        assert_eq!(out.predicted_delta_w(), 1);
        assert_eq!(out.predicted_delta_u(), 1);
    }

    #[test]
    fn symmetric_sides_gain_branch_order() {
        // path 1-2-0-3-4 with branch 0-5-6 (|M| = 2, |P| = |Q| = 2)
        let t = Tree::from_edges(7, &[(1, 2), (2, 0), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let out = shift_transform(&t, 0, 2, 3).unwrap();
        let base = t.wiener_index() as i64;
        assert_eq!(out.toward_w.wiener_index() as i64 - base, 2);
        assert_eq!(out.predicted_delta_w(), 2);
    }

    #[test]
    fn subdivided_variant() {
        // u = 1 behind 2, w = 4 behind 3; branch 0-5
        let t = Tree::from_edges(6, &[(1, 2), (2, 0), (0, 3), (3, 4), (0, 5)]).unwrap();
        let out = shift_transform(&t, 0, 1, 4).unwrap();
        assert_eq!(out.variant, ShiftVariant::Subdivided);
        let base = t.wiener_index() as i64;
        assert_eq!(out.toward_w.wiener_index() as i64 - base, out.predicted_delta_w());
        assert_eq!(out.toward_u.wiener_index() as i64 - base, out.predicted_delta_u());
    }

    #[test]
    fn rejects_bad_positions() {
        let p3 = Tree::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(shift_transform(&p3, 1, 0, 2), Err(ShiftError::NoBranches));
        let claw = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(shift_transform(&claw, 0, 1, 4), Err(ShiftError::NotPositioned));
        assert_eq!(shift_transform(&claw, 0, 1, 1), Err(ShiftError::Degenerate));
        assert_eq!(shift_transform(&claw, 0, 1, 9), Err(ShiftError::OutOfRange(9)));
    }
}
