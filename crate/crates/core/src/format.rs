//! The plain-text graph format and the JSON certificate document.
//!
//! ```text
//! spanmu-graph v1
//! # comment lines are ignored
//! 3 2
//! 0 1
//! 1 2
//! ```

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::construct::{Case, Certificate, Witness};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::trees::Tree;

pub const GRAPH_HEADER: &str = "spanmu-graph v1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Graph { line: usize, msg: String },
    #[error("certificate: {0}")]
    Certificate(String),
}

fn at(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Graph { line, msg: msg.into() }
}

/// Parses a graph file. Edge lines must have `u < v` and may not repeat.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, GRAPH_HEADER)) => {}
        Some((i, _)) => return Err(at(i, format!("expected header {GRAPH_HEADER:?}"))),
        None => return Err(at(0, "empty file")),
    }
    let numbers = |i: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let mut it = l.split_ascii_whitespace().map(|w| w.parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(at(i, format!("expected two non-negative integers, got {l:?}"))),
        }
    };
    let (i, counts) = lines.next().ok_or_else(|| at(0, "missing \"n m\" line"))?;
    let (n, m) = numbers(i, counts)?;
    if n == 0 {
        return Err(at(i, "n must be positive"));
    }
    let mut edges = Vec::with_capacity(m);
    for (i, l) in lines {
        let (u, v) = numbers(i, l)?;
        if u >= v {
            return Err(at(i, format!("edge {u} {v} must have u < v")));
        }
        if v >= n {
            return Err(at(i, format!("vertex {v} out of range for n = {n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(at(0, format!("header says {m} edges, found {}", edges.len())));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| at(0, e.to_string()))?;
    if g.m() != m {
        return Err(at(0, "repeated edge"));
    }
    Ok(g)
}

/// Writes `g` in the graph format, edges in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{GRAPH_HEADER}\n{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A rational as decimal strings, in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDoc {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalDoc {
    fn from(r: &Rational) -> Self {
        RationalDoc { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

impl RationalDoc {
    pub fn to_rational(&self) -> Result<Rational, FormatError> {
        let parse = |s: &str| s.parse::<BigInt>().map_err(|_| FormatError::Certificate(format!("bad integer {s:?}")));
        let (num, den) = (parse(&self.num)?, parse(&self.den)?);
        if den <= BigInt::from(0) {
            return Err(FormatError::Certificate("denominator must be positive".into()));
        }
        Ok(Rational::new(num, den))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessDoc {
    IndependentSet(Vec<usize>),
    SwappedEdge { removed: [usize; 2], added: [usize; 2] },
}

/// JSON form of a certificate together with the tree it certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub case: String,
    pub k: usize,
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub mu: RationalDoc,
    pub bound: RationalDoc,
    pub alpha: Option<usize>,
    pub witness: Option<WitnessDoc>,
    pub trace_digest: String,
    /// Tree edges as `[u, v]` pairs.
    pub tree: Vec<[usize; 2]>,
}

impl CertificateDoc {
    pub fn new(cert: &Certificate, tree: &Tree, alpha: Option<usize>) -> Self {
        let witness = cert.witness.as_ref().map(|w| match w {
            Witness::IndependentSet(s) => WitnessDoc::IndependentSet(s.clone()),
            Witness::SwappedEdge { removed, added } => WitnessDoc::SwappedEdge {
                removed: [removed.0, removed.1],
                added: [added.0, added.1],
            },
        });
        CertificateDoc {
            case: cert.case.to_string(),
            k: cert.k,
            t: cert.t,
            n: cert.n,
            m: cert.m,
            mu: (&cert.mu).into(),
            bound: (&cert.bound).into(),
            alpha,
            witness,
            trace_digest: cert.trace_digest.clone(),
            tree: tree.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn certificate(&self) -> Result<Certificate, FormatError> {
        let case: Case = self.case.parse().map_err(|e: crate::construct::UnknownCase| FormatError::Certificate(e.to_string()))?;
        let witness = self.witness.as_ref().map(|w| match w {
            WitnessDoc::IndependentSet(s) => Witness::IndependentSet(s.clone()),
            WitnessDoc::SwappedEdge { removed, added } => Witness::SwappedEdge {
                removed: (removed[0], removed[1]),
                added: (added[0], added[1]),
            },
        });
        Ok(Certificate {
            case,
            k: self.k,
            t: self.t,
            n: self.n,
            m: self.m,
            mu: self.mu.to_rational()?,
            bound: self.bound.to_rational()?,
            witness,
            trace_digest: self.trace_digest.clone(),
        })
    }

    /// The tree on `self.n` vertices.
    pub fn tree(&self) -> Result<Tree, FormatError> {
        let edges: Vec<(usize, usize)> = self.tree.iter().map(|e| (e[0], e[1])).collect();
        Tree::from_edges(self.n, &edges).map_err(|e| FormatError::Certificate(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str(text).map_err(|e| FormatError::Certificate(e.to_string()))
    }
}
