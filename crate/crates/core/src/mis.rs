//! Exact maximum independent sets by branch and bound.
//!
//! Branching picks a maximum-degree vertex of the remaining candidate set
//! (smallest id on ties) and tries "take it" before "drop it". Subproblems
//! are pruned with a greedy clique cover, whose size bounds the independence
//! number of the candidates from above. Vertices of degree 0 or 1 in the
//! candidate set are taken without branching.

use std::time::{Duration, Instant};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisResult {
    /// Sorted vertex ids.
    pub set: Vec<usize>,
    pub alpha: usize,
}

/// Result of a budgeted solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MisOutcome {
    Exact(MisResult),
    /// The time budget ran out before optimality was proven.
    Unknown,
}

impl MisOutcome {
    pub fn alpha(&self) -> Option<usize> {
        match self {
            MisOutcome::Exact(r) => Some(r.alpha),
            MisOutcome::Unknown => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn minus(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(i * 64 + bit)
            })
        })
    }
}

struct Solver<'g> {
    graph: &'g Graph,
    /// Open neighbourhoods as bitsets.
    nbrs: Vec<Bits>,
    best: usize,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl<'g> Solver<'g> {
    fn new(graph: &'g Graph, deadline: Option<Instant>) -> Self {
        let n = graph.n();
        let nbrs = (0..n)
            .map(|v| {
                let mut b = Bits::empty(n);
                for &u in graph.neighbors(v) {
                    b.insert(u);
                }
                b
            })
            .collect();
        Solver { graph, nbrs, best: 0, deadline, nodes: 0, timed_out: false }
    }

    /// Greedy clique cover size of `cand`; an upper bound on its alpha.
    fn clique_cover(&self, cand: &Bits) -> usize {
        let mut left = cand.clone();
        let mut cliques = 0;
        while let Some(v) = left.first() {
            cliques += 1;
            left.remove(v);
            let mut common = self.nbrs[v].clone();
            for (a, b) in common.0.iter_mut().zip(&left.0) {
                *a &= b;
            }
            while let Some(u) = common.first() {
                left.remove(u);
                for (a, b) in common.0.iter_mut().zip(&self.nbrs[u].0) {
                    *a &= b;
                }
                common.remove(u);
            }
        }
        cliques
    }

    fn out_of_time(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// Largest independent set size within `cand`, given `taken` already.
    fn search(&mut self, mut cand: Bits, mut taken: usize) {
        if self.out_of_time() {
            return;
        }
        // Degree 0/1 vertices always belong to some maximum set.
        loop {
            let low = cand.iter().find(|&v| self.nbrs[v].and_count(&cand) <= 1);
            match low {
                Some(v) => {
                    taken += 1;
                    cand.remove(v);
                    cand.minus(&self.nbrs[v]);
                }
                None => break,
            }
        }
        if cand.is_empty() {
            self.best = self.best.max(taken);
            return;
        }
        if taken + self.clique_cover(&cand) <= self.best {
            return;
        }
        let pivot = cand
            .iter()
            .max_by_key(|&v| (self.nbrs[v].and_count(&cand), std::cmp::Reverse(v)))
            .unwrap();

        let mut with = cand.clone();
        with.remove(pivot);
        with.minus(&self.nbrs[pivot]);
        self.search(with, taken + 1);

        cand.remove(pivot);
        self.search(cand, taken);
    }

    /// Exact alpha of the subgraph induced by `cand`, or `None` on timeout.
    fn alpha_of(&mut self, cand: Bits) -> Option<usize> {
        self.best = 0;
        self.search(cand, 0);
        (!self.timed_out).then_some(self.best)
    }
}

/// Maximum independent set; the lexicographically least one among all
/// maximum sets (compared as ascending vertex lists).
pub fn max_independent_set(g: &Graph) -> MisResult {
    match max_independent_set_within(g, None) {
        MisOutcome::Exact(r) => r,
        MisOutcome::Unknown => unreachable!("no deadline was set"),
    }
}

/// As [`max_independent_set`], giving up after `budget`.
pub fn max_independent_set_within(g: &Graph, budget: Option<Duration>) -> MisOutcome {
    let deadline = budget.map(|b| Instant::now() + b);
    let n = g.n();
    let mut solver = Solver::new(g, deadline);
    let Some(alpha) = solver.alpha_of(Bits::full(n)) else {
        return MisOutcome::Unknown;
    };

    // Walk vertices in order, keeping v whenever the rest can still be
    // completed to a maximum set.
    let mut set = Vec::with_capacity(alpha);
    let mut avail = Bits::full(n);
    for v in 0..n {
        if set.len() == alpha {
            break;
        }
        if !avail.contains(v) {
            continue;
        }
        let mut rest = avail.clone();
        for u in 0..=v {
            rest.remove(u);
        }
        rest.minus(&solver.nbrs[v]);
        let need = alpha - set.len() - 1;
        let fits = need == 0 || {
            let Some(a) = solver.alpha_of(rest) else {
                return MisOutcome::Unknown;
            };
            a >= need
        };
        if fits {
            set.push(v);
            avail.minus(&solver.nbrs[v]);
        }
        avail.remove(v);
    }
    debug_assert_eq!(set.len(), alpha);
    debug_assert!(solver.graph.is_independent_set(&set).unwrap_or(false));
    MisOutcome::Exact(MisResult { set, alpha })
}

pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).alpha
}
