use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{prufer_decode, OracleError};
use crate::graph::Graph;
use crate::rational::{parse_rational, Rational};

/// Retries allowed when conditioning a random graph on connectivity.
pub const GNP_RETRIES: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Path `P_{2k-2}` with a clique glued at each end; independence number `k`.
    ExtremalDumbbell,
    GnpConnected,
    RandomTreePlusEdges,
    Cycle,
    Complete,
    Path,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::ExtremalDumbbell,
        FamilyKind::GnpConnected,
        FamilyKind::RandomTreePlusEdges,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::Path,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::ExtremalDumbbell => "EXTREMAL_DUMBBELL",
            FamilyKind::GnpConnected => "GNP_CONNECTED",
            FamilyKind::RandomTreePlusEdges => "RANDOM_TREE_PLUS_EDGES",
            FamilyKind::Cycle => "CYCLE",
            FamilyKind::Complete => "COMPLETE",
            FamilyKind::Path => "PATH",
        }
    }

    /// Accepted keys; the first `required` of them must be present.
    fn keys(self) -> (&'static [&'static str], usize) {
        match self {
            FamilyKind::ExtremalDumbbell => (&["n", "k"], 2),
            FamilyKind::GnpConnected => (&["n", "p"], 2),
            FamilyKind::RandomTreePlusEdges => (&["n", "extra"], 1),
            FamilyKind::Cycle | FamilyKind::Complete | FamilyKind::Path => (&["n"], 1),
        }
    }

    /// Whether output depends on the seed.
    pub fn is_random(self) -> bool {
        matches!(self, FamilyKind::GnpConnected | FamilyKind::RandomTreePlusEdges)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A graph family member, written `KIND(:key=value)*(:seed=UINT)?`.
///
/// ```
/// use spanmu::oracle::{generate, FamilySpec};
///
/// let spec: FamilySpec = "EXTREMAL_DUMBBELL:n=8:k=2".parse().unwrap();
/// let g = generate(&spec).unwrap();
/// assert_eq!((g.n(), g.m()), (8, 13));
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    /// In the order written.
    pub params: Vec<(String, Rational)>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: &[(&str, Rational)], seed: Option<u64>) -> Result<Self, OracleError> {
        let spec = FamilySpec {
            kind,
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn param(&self, key: &str) -> Option<&Rational> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    fn int_param(&self, key: &str) -> Result<usize, OracleError> {
        let v = self.param(key).ok_or_else(|| bad(format!("{} needs {key}", self.kind)))?;
        if !v.is_integer() {
            return Err(bad(format!("{key} must be an integer")));
        }
        v.to_integer().to_usize().ok_or_else(|| bad(format!("{key} must be a non-negative integer")))
    }

    /// The same spec with a different seed.
    pub fn with_seed(&self, seed: u64) -> Self {
        FamilySpec { seed: Some(seed), ..self.clone() }
    }

    /// The spec string without its seed.
    pub fn name(&self) -> String {
        let mut s = self.kind.as_str().to_string();
        for (k, v) in &self.params {
            s.push_str(&format!(":{k}={v}"));
        }
        s
    }

    /// Checks keys and value ranges for the kind.
    pub fn validate(&self) -> Result<(), OracleError> {
        let (allowed, required) = self.kind.keys();
        for (i, (k, _)) in self.params.iter().enumerate() {
            if !allowed.contains(&k.as_str()) {
                return Err(bad(format!("{} does not take {k}", self.kind)));
            }
            if self.params[..i].iter().any(|(prev, _)| prev == k) {
                return Err(bad(format!("{k} given twice")));
            }
        }
        for key in &allowed[..required] {
            if self.param(key).is_none() {
                return Err(bad(format!("{} needs {key}", self.kind)));
            }
        }
        let n = self.int_param("n")?;
        match self.kind {
            FamilyKind::ExtremalDumbbell => {
                let k = self.int_param("k")?;
                if k < 2 || n < 2 * k {
                    return Err(infeasible(format!("EXTREMAL_DUMBBELL needs k >= 2 and n >= 2k, got n={n}, k={k}")));
                }
            }
            FamilyKind::GnpConnected => {
                let p = self.param("p").expect("checked above");
                if p < &Rational::zero() || p > &Rational::from_integer(1.into()) {
                    return Err(infeasible(format!("p = {p} is not a probability")));
                }
                if p.numer().to_u64().is_none() || p.denom().to_u64().is_none() {
                    return Err(infeasible("p has too large a denominator"));
                }
                if n < 1 {
                    return Err(infeasible("n must be positive"));
                }
            }
            FamilyKind::RandomTreePlusEdges => {
                let extra = if self.param("extra").is_some() { self.int_param("extra")? } else { 0 };
                let room = (n * n.saturating_sub(1) / 2).saturating_sub(n.saturating_sub(1));
                if n < 1 || extra > room {
                    return Err(infeasible(format!("cannot add {extra} edges to a tree on {n} vertices")));
                }
            }
            FamilyKind::Cycle if n < 3 => return Err(infeasible("CYCLE needs n >= 3")),
            FamilyKind::Complete | FamilyKind::Path if n < 1 => return Err(infeasible("n must be positive")),
            _ => {}
        }
        Ok(())
    }
}

fn bad(msg: impl Into<String>) -> OracleError {
    OracleError::Spec(msg.into())
}

fn infeasible(msg: impl Into<String>) -> OracleError {
    OracleError::Infeasible(msg.into())
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())?;
        if let Some(seed) = self.seed {
            write!(f, ":seed={seed}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.trim().split(':');
        let head = parts.next().unwrap_or_default();
        let kind = FamilyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == head)
            .ok_or_else(|| bad(format!("unknown family {head:?}")))?;
        let mut params = Vec::new();
        let mut seed = None;
        for part in parts {
            if seed.is_some() {
                return Err(bad("seed must come last"));
            }
            let (key, value) = part.split_once('=').ok_or_else(|| bad(format!("expected key=value, got {part:?}")))?;
            if key == "seed" {
                seed = Some(value.parse::<u64>().map_err(|_| bad(format!("bad seed {value:?}")))?);
                continue;
            }
            if key.is_empty() || !key.bytes().all(|b| b.is_ascii_lowercase() || b == b'_') {
                return Err(bad(format!("bad key {key:?}")));
            }
            let v = parse_rational(value).ok_or_else(|| bad(format!("bad value {value:?} for {key}")))?;
            params.push((key.to_string(), v));
        }
        let spec = FamilySpec { kind, params, seed };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the graph named by `spec`; a pure function of the spec.
pub fn generate(spec: &FamilySpec) -> Result<Graph, OracleError> {
    spec.validate()?;
    let n = spec.int_param("n")?;
    let seed = spec.seed.unwrap_or(0);
    let g = match spec.kind {
        FamilyKind::ExtremalDumbbell => dumbbell(n, spec.int_param("k")?),
        FamilyKind::GnpConnected => {
            let p = spec.param("p").expect("validated");
            let num = p.numer().to_u64().expect("validated");
            let den = p.denom().to_u64().expect("validated");
            return gnp_connected(n, num, den, seed);
        }
        FamilyKind::RandomTreePlusEdges => {
            let extra = if spec.param("extra").is_some() { spec.int_param("extra")? } else { 0 };
            random_tree_plus_edges(n, extra, seed)
        }
        FamilyKind::Cycle => Graph::cycle(n),
        FamilyKind::Complete => Graph::complete(n),
        FamilyKind::Path => Graph::path(n),
    };
    g.map_err(|e| infeasible(e.to_string()))
}

/// Path `0..2k-2`, then the other vertices of a clique of order
/// `floor((n-2k)/2) + 2` glued at vertex 0, then those of a clique of order
/// `ceil((n-2k)/2) + 2` glued at vertex `2k-3`.
fn dumbbell(n: usize, k: usize) -> Result<Graph, crate::graph::GraphError> {
    let len = 2 * k - 2;
    let spare = n - 2 * k;
    let mut edges: Vec<(usize, usize)> = (1..len).map(|v| (v - 1, v)).collect();
    let mut next = len;
    for (hub, order) in [(0, spare / 2 + 2), (len - 1, spare.div_ceil(2) + 2)] {
        let members: Vec<usize> = std::iter::once(hub).chain(next..next + order - 1).collect();
        next += order - 1;
        for (i, &a) in members.iter().enumerate() {
            edges.extend(members[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    Graph::from_edges(n, &edges)
}

fn gnp_connected(n: usize, num: u64, den: u64, seed: u64) -> Result<Graph, OracleError> {
    for attempt in 0..GNP_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_range(0..den) < num {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).map_err(|e| infeasible(e.to_string()))?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(OracleError::RetriesExhausted(GNP_RETRIES))
}

/// Uniform labeled tree (random Prüfer sequence) plus `extra` distinct
/// random non-edges.
fn random_tree_plus_edges(n: usize, extra: usize, seed: u64) -> Result<Graph, crate::graph::GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = if n >= 2 {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        prufer_decode(&seq).expect("sequence in range").edges()
    } else {
        Vec::new()
    };
    let tree = Graph::from_edges(n, &edges)?;
    let mut spare: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    spare.shuffle(&mut rng);
    edges.extend(spare.into_iter().take(extra));
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mis::independence_number;
    use crate::rational::ratio;

    #[test]
    fn parse_and_display() {
        let s: FamilySpec = "GNP_CONNECTED:n=12:p=1/4:seed=9".parse().unwrap();
        assert_eq!(s.kind, FamilyKind::GnpConnected);
        assert_eq!(s.param("p"), Some(&ratio(1, 4)));
        assert_eq!(s.seed, Some(9));
        assert_eq!(s.to_string(), "GNP_CONNECTED:n=12:p=1/4:seed=9");
        assert_eq!(s.name(), "GNP_CONNECTED:n=12:p=1/4");
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "NOPE:n=3",
            "CYCLE",
            "CYCLE:n=2",
            "CYCLE:n=x",
            "CYCLE:n=5:m=2",
            "CYCLE:seed=1:n=5",
            "CYCLE:n=5:n=6",
            "GNP_CONNECTED:n=5:p=3/2",
            "EXTREMAL_DUMBBELL:n=5:k=3",
            "COMPLETE:n=1/2",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn simple_families() {
        let g = generate(&"COMPLETE:n=4".parse().unwrap()).unwrap();
        assert_eq!(g, Graph::complete(4).unwrap());
        assert_eq!(generate(&"CYCLE:n=5".parse().unwrap()).unwrap().m(), 5);
        assert_eq!(generate(&"PATH:n=4".parse().unwrap()).unwrap().m(), 3);
    }

    #[test]
    fn dumbbell_shape() {
        let g = generate(&"EXTREMAL_DUMBBELL:n=8:k=2".parse().unwrap()).unwrap();
        assert_eq!((g.n(), g.m()), (8, 13));
        assert!(g.has_edge(0, 1));
        assert_eq!(independence_number(&g), 2);
        let g = generate(&"EXTREMAL_DUMBBELL:n=20:k=4".parse().unwrap()).unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(independence_number(&g), 4);
    }

    #[test]
    fn random_families_are_deterministic() {
        for s in ["GNP_CONNECTED:n=10:p=1/3:seed=4", "RANDOM_TREE_PLUS_EDGES:n=10:extra=4:seed=4"] {
            let spec: FamilySpec = s.parse().unwrap();
            let a = generate(&spec).unwrap();
            assert_eq!(a, generate(&spec).unwrap());
            assert!(a.is_connected());
        }
        let g = generate(&"RANDOM_TREE_PLUS_EDGES:n=10:extra=4:seed=1".parse().unwrap()).unwrap();
        assert_eq!(g.m(), 13);
    }

    #[test]
    fn impossible_gnp() {
        let spec: FamilySpec = "GNP_CONNECTED:n=5:p=0".parse().unwrap();
        assert_eq!(generate(&spec), Err(OracleError::RetriesExhausted(GNP_RETRIES)));
    }
}
