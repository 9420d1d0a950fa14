//! The spanning-tree construction and its certificates.
//!
//! A run has three stages. [`grow_dominating_tree`] builds an independent
//! core `A` of size `k` and a base tree of order `t <= 2k - 1` that
//! dominates the rest of the graph; [`attach_pendants`] hangs every other
//! vertex on the core, giving a tree in `T_{t, n-t}`; [`refine`] runs the
//! case analysis that sharpens `k + 1` to the refined bound, possibly
//! swapping one edge. Every result carries a [`Certificate`] that
//! [`verify_certificate`] re-checks from scratch.

mod certificate;
mod growth;
mod refine;

pub use certificate::{verify_certificate, Case, Certificate, Rejection, UnknownCase, Witness};
pub use growth::{attach_pendants, grow_dominating_tree, GrowthStep, GrowthTrace};
pub use refine::refine;

use crate::graph::Graph;
use crate::trees::Tree;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("start vertex {0} out of range")]
    StartOutOfRange(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Starts {
    #[default]
    All,
    One(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub starts: Starts,
    pub refine: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { starts: Starts::All, refine: true }
    }
}

/// Output of [`build_spanning_tree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub tree: Tree,
    pub certificate: Certificate,
    pub trace: GrowthTrace,
}

/// Runs the pipeline from one start vertex.
pub fn construct_from(g: &Graph, start: usize, refine_cases: bool) -> Result<Construction, ConstructError> {
    let trace = grow_dominating_tree(g, start)?;
    let (tree, dec) = attach_pendants(g, &trace)?;
    let (tree, certificate) = if refine_cases {
        refine(g, &tree, &dec, &trace)?
    } else {
        refine::unrefined(g, &tree, &trace)?
    };
    Ok(Construction { tree, certificate, trace })
}

/// Best result over the requested starts: smallest μ, then smallest start.
///
/// ```
/// use spanmu::construct::{build_spanning_tree, BuildOptions, Case};
/// use spanmu::graph::Graph;
/// use spanmu::rational::ratio;
///
/// let out = build_spanning_tree(&Graph::complete(5).unwrap(), BuildOptions::default()).unwrap();
/// assert_eq!(out.certificate.case, Case::Star);
/// assert_eq!(out.certificate.mu, ratio(8, 5));
/// ```
pub fn build_spanning_tree(g: &Graph, opts: BuildOptions) -> Result<Construction, ConstructError> {
    if g.n() < 2 {
        return Err(ConstructError::TooSmall);
    }
    if !g.is_connected() {
        return Err(ConstructError::Disconnected);
    }
    let starts: Vec<usize> = match opts.starts {
        Starts::All => (0..g.n()).collect(),
        Starts::One(v) if v < g.n() => vec![v],
        Starts::One(v) => return Err(ConstructError::StartOutOfRange(v)),
    };
    let mut best: Option<Construction> = None;
    for s in starts {
        let run = construct_from(g, s, opts.refine)?;
        if best.as_ref().is_none_or(|b| run.certificate.mu < b.certificate.mu) {
            best = Some(run);
        }
    }
    Ok(best.expect("at least one start"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mis::independence_number;
    use crate::rational::{int, ratio};

    fn one(g: &Graph, v: usize) -> Construction {
        build_spanning_tree(g, BuildOptions { starts: Starts::One(v), refine: true }).unwrap()
    }

    #[test]
    fn cycle_five() {
        let g = Graph::cycle(5).unwrap();
        let out = one(&g, 0);
        assert_eq!(out.certificate.case, Case::Case2T4);
        assert_eq!(out.certificate.mu, int(2));
        assert_eq!(out.certificate.bound, int(3));
        assert_eq!(
            out.certificate.witness,
            Some(Witness::SwappedEdge { removed: (1, 2), added: (3, 4) })
        );
        assert_eq!(verify_certificate(&g, &out.tree, &out.certificate, Some(2)), Ok(()));
    }

    #[test]
    fn complete_graphs_give_stars() {
        for n in 2..10 {
            let g = Graph::complete(n).unwrap();
            let out = build_spanning_tree(&g, BuildOptions::default()).unwrap();
            assert_eq!(out.certificate.case, Case::Star);
            assert_eq!(out.certificate.mu, int(2) - ratio(2, n as i64));
        }
    }

    #[test]
    fn single_edge() {
        let g = Graph::path(2).unwrap();
        let out = build_spanning_tree(&g, BuildOptions::default()).unwrap();
        assert_eq!(out.certificate.mu, int(1));
    }

    #[test]
    fn path_graph_is_trivial() {
        let g = Graph::path(5).unwrap();
        let out = one(&g, 0);
        assert_eq!(out.certificate.case, Case::PathTrivial);
        assert_eq!(out.certificate.mu, int(2));
    }

    #[test]
    fn no_refine_uses_k_plus_one() {
        let g = Graph::cycle(7).unwrap();
        let out = build_spanning_tree(&g, BuildOptions { starts: Starts::All, refine: false }).unwrap();
        assert_eq!(out.certificate.case, Case::ThNewFallback);
        assert_eq!(out.certificate.bound, int(out.certificate.k as i64 + 1));
    }

    #[test]
    fn every_start_verifies() {
        let graphs = [
            Graph::cycle(9).unwrap(),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 3), (2, 6)]).unwrap(),
            Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (6, 7), (1, 7)]).unwrap(),
        ];
        for g in &graphs {
            let alpha = independence_number(g);
            for v in 0..g.n() {
                let out = one(g, v);
                assert!(out.certificate.mu < int(alpha as i64 + 1));
                assert_eq!(verify_certificate(g, &out.tree, &out.certificate, Some(alpha)), Ok(()));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(build_spanning_tree(&g, BuildOptions::default()), Err(ConstructError::Disconnected));
        let c = Graph::cycle(4).unwrap();
        let opts = BuildOptions { starts: Starts::One(7), refine: true };
        assert_eq!(build_spanning_tree(&c, opts), Err(ConstructError::StartOutOfRange(7)));
    }
}
