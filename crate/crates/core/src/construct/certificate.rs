use std::fmt;
use std::str::FromStr;

use crate::formulas::{bound_of, BoundSource};
use crate::graph::Graph;
use crate::rational::{int, ratio, Rational};
use crate::trees::Tree;

/// Which branch of the case analysis justified the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    Star,
    PathTrivial,
    LeAdd,
    LeExtra,
    Diameter,
    PendantCount,
    Case1T1,
    Case1T2,
    Case1ParityAdd,
    Case1ParityExtra,
    Case2T3,
    Case2T4,
    EnlargedIndep,
    ThNewFallback,
}

impl Case {
    pub const ALL: [Case; 14] = [
        Case::Star,
        Case::PathTrivial,
        Case::LeAdd,
        Case::LeExtra,
        Case::Diameter,
        Case::PendantCount,
        Case::Case1T1,
        Case::Case1T2,
        Case::Case1ParityAdd,
        Case::Case1ParityExtra,
        Case::Case2T3,
        Case::Case2T4,
        Case::EnlargedIndep,
        Case::ThNewFallback,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Case::Star => "STAR",
            Case::PathTrivial => "PATH_TRIVIAL",
            Case::LeAdd => "LE_ADD",
            Case::LeExtra => "LE_EXTRA",
            Case::Diameter => "DIAMETER",
            Case::PendantCount => "PENDANT_COUNT",
            Case::Case1T1 => "CASE1_T1",
            Case::Case1T2 => "CASE1_T2",
            Case::Case1ParityAdd => "CASE1_PARITY_ADD",
            Case::Case1ParityExtra => "CASE1_PARITY_EXTRA",
            Case::Case2T3 => "CASE2_T3",
            Case::Case2T4 => "CASE2_T4",
            Case::EnlargedIndep => "ENLARGED_INDEP",
            Case::ThNewFallback => "TH_NEW_FALLBACK",
        }
    }

    /// The bound this case certifies at core size `k`, capped at `k + 1`.
    /// `None` when the case is meaningless for `k`.
    pub fn bound(self, k: usize) -> Option<Rational> {
        if k == 0 {
            return None;
        }
        let kk = k as i64;
        let raw = match self {
            Case::Star => {
                if k != 1 {
                    return None;
                }
                int(2)
            }
            Case::PathTrivial
            | Case::LeAdd
            | Case::Diameter
            | Case::PendantCount
            | Case::Case1T1
            | Case::Case1T2
            | Case::Case1ParityAdd
            | Case::Case2T3 => int(kk) + ratio(1, 2),
            Case::LeExtra | Case::Case1ParityExtra => bound_of(BoundSource::LeExtra, k).ok()?.value,
            Case::Case2T4 => bound_of(BoundSource::LeFinal2, k).ok()?.value,
            Case::EnlargedIndep => int(kk) + ratio(3, 2),
            Case::ThNewFallback => int(kk + 1),
        };
        Some(raw.min(int(kk + 1)))
    }

    /// Cases whose witness is an independent set of size `k + 1`.
    pub fn enlarges_core(self) -> bool {
        self == Case::EnlargedIndep
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown case name {0:?}")]
pub struct UnknownCase(pub String);

impl FromStr for Case {
    type Err = UnknownCase;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Case::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownCase(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    IndependentSet(Vec<usize>),
    /// The edge swap that produced the case tree.
    SwappedEdge { removed: (usize, usize), added: (usize, usize) },
}

/// Machine-checkable claim `mu(tree) < bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub case: Case,
    pub k: usize,
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub mu: Rational,
    pub bound: Rational,
    pub witness: Option<Witness>,
    pub trace_digest: String,
}

/// First failed check of [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rejection {
    #[error("tree is not a spanning tree of the graph")]
    NotSpanningTree,
    #[error("certificate n/m do not match the graph")]
    GraphMismatch,
    #[error("core size k = {k} and base order t = {t} are inconsistent")]
    TraceShape { k: usize, t: usize },
    #[error("recorded mu does not match the tree")]
    MuMismatch,
    #[error("recorded bound does not match the case at this k")]
    BoundMismatch,
    #[error("mu is not strictly below the bound")]
    MuNotBelowBound,
    #[error("witness is missing or of the wrong kind")]
    WitnessKind,
    #[error("witness vertex out of range")]
    WitnessOutOfRange,
    #[error("witness set is not independent")]
    WitnessNotIndependent,
    #[error("witness set has the wrong size")]
    WitnessSize,
    #[error("witness edge is not in the graph")]
    WitnessEdgeMissing,
    #[error("core size exceeds the independence number")]
    KExceedsAlpha,
    #[error("bound exceeds the refined bound at alpha")]
    BoundAboveRefined,
}

impl Rejection {
    /// Stable kebab-case code.
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::NotSpanningTree => "not-spanning-tree",
            Rejection::GraphMismatch => "graph-mismatch",
            Rejection::TraceShape { .. } => "trace-shape",
            Rejection::MuMismatch => "mu-mismatch",
            Rejection::BoundMismatch => "bound-mismatch",
            Rejection::MuNotBelowBound => "mu-not-below-bound",
            Rejection::WitnessKind => "witness-kind",
            Rejection::WitnessOutOfRange => "witness-out-of-range",
            Rejection::WitnessNotIndependent => "witness-not-independent",
            Rejection::WitnessSize => "witness-size",
            Rejection::WitnessEdgeMissing => "witness-edge-missing",
            Rejection::KExceedsAlpha => "k-exceeds-alpha",
            Rejection::BoundAboveRefined => "bound-above-refined",
        }
    }
}

/// Re-derives every claim of `cert` about `tree` as a spanning tree of `g`.
/// With `alpha`, also checks the claims against the independence number.
pub fn verify_certificate(
    g: &Graph,
    tree: &Tree,
    cert: &Certificate,
    alpha: Option<usize>,
) -> Result<(), Rejection> {
    let n = g.n();
    if tree.n() != n || tree.edges().iter().any(|&(a, b)| !g.has_edge(a, b)) {
        return Err(Rejection::NotSpanningTree);
    }
    if cert.n != n || cert.m != g.m() {
        return Err(Rejection::GraphMismatch);
    }
    let (k, t) = (cert.k, cert.t);
    if k == 0 || t == 0 || t > n || t + 1 > 2 * k {
        return Err(Rejection::TraceShape { k, t });
    }
    let mu = tree.average_distance().map_err(|_| Rejection::NotSpanningTree)?;
    if mu != cert.mu {
        return Err(Rejection::MuMismatch);
    }
    if cert.case.bound(k).as_ref() != Some(&cert.bound) {
        return Err(Rejection::BoundMismatch);
    }
    if mu >= cert.bound {
        return Err(Rejection::MuNotBelowBound);
    }

    let needs_set = cert.case.enlarges_core();
    match &cert.witness {
        Some(Witness::IndependentSet(set)) => {
            if set.iter().any(|&v| v >= n) {
                return Err(Rejection::WitnessOutOfRange);
            }
            let expected = if needs_set { k + 1 } else { k };
            let mut distinct = set.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != set.len() || set.len() != expected {
                return Err(Rejection::WitnessSize);
            }
            if !g.is_independent_set(set).unwrap_or(false) {
                return Err(Rejection::WitnessNotIndependent);
            }
        }
        Some(Witness::SwappedEdge { removed, added }) => {
            if needs_set {
                return Err(Rejection::WitnessKind);
            }
            for &(a, b) in [removed, added] {
                if a >= n || b >= n {
                    return Err(Rejection::WitnessOutOfRange);
                }
                if !g.has_edge(a, b) {
                    return Err(Rejection::WitnessEdgeMissing);
                }
            }
        }
        None => {
            if needs_set {
                return Err(Rejection::WitnessKind);
            }
        }
    }

    if let Some(alpha) = alpha {
        let core = if needs_set { k + 1 } else { k };
        if core > alpha {
            return Err(Rejection::KExceedsAlpha);
        }
        let refined = bound_of(BoundSource::Th1, alpha).map_err(|_| Rejection::KExceedsAlpha)?;
        if cert.bound > refined.value {
            return Err(Rejection::BoundAboveRefined);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_names_round_trip() {
        for c in Case::ALL {
            assert_eq!(c.as_str().parse::<Case>().unwrap(), c);
        }
        assert!("NOPE".parse::<Case>().is_err());
    }

    #[test]
    fn case_bounds() {
        assert_eq!(Case::Star.bound(1), Some(int(2)));
        assert_eq!(Case::Star.bound(2), None);
        assert_eq!(Case::LeAdd.bound(3), Some(ratio(7, 2)));
        // Capped at k + 1 for small k.
        assert_eq!(Case::Case2T4.bound(2), Some(int(3)));
        assert_eq!(Case::EnlargedIndep.bound(2), Some(int(3)));
        assert_eq!(Case::Case2T4.bound(8), Some(ratio(8, 1) + ratio(1, 2) + ratio(28, 64)));
        assert_eq!(Case::Case1ParityExtra.bound(3), None);
        assert_eq!(Case::Case1ParityExtra.bound(4), Some(ratio(9, 2) + ratio(1, 6)));
    }

    #[test]
    fn star_certificate_checks() {
        let g = Graph::complete(4).unwrap();
        let tree = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut cert = Certificate {
            case: Case::Star,
            k: 1,
            t: 1,
            n: 4,
            m: 6,
            mu: ratio(3, 2),
            bound: int(2),
            witness: Some(Witness::IndependentSet(vec![0])),
            trace_digest: String::new(),
        };
        assert_eq!(verify_certificate(&g, &tree, &cert, Some(1)), Ok(()));
        cert.mu = ratio(5, 2);
        assert_eq!(verify_certificate(&g, &tree, &cert, None), Err(Rejection::MuMismatch));
        cert.mu = ratio(3, 2);
        cert.bound = int(3);
        assert_eq!(verify_certificate(&g, &tree, &cert, None), Err(Rejection::BoundMismatch));
        cert.bound = int(2);
        cert.witness = Some(Witness::IndependentSet(vec![0, 1]));
        assert_eq!(verify_certificate(&g, &tree, &cert, None), Err(Rejection::WitnessSize));
    }
}
