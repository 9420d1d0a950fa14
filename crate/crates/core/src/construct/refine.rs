use std::collections::BTreeMap;

use super::certificate::{Case, Certificate, Witness};
use super::growth::GrowthTrace;
use super::ConstructError;
use crate::graph::Graph;
use crate::trees::{path_segments, Decomposition, Tree};

/// What the case analysis settled on before the final μ comparison.
struct Verdict {
    case: Case,
    candidate: Option<Tree>,
    witness: Option<Witness>,
    /// The bound is only claimed if the exact μ confirms it.
    guarded: bool,
}

impl Verdict {
    fn plain(case: Case, core: &[usize]) -> Self {
        Verdict { case, candidate: None, witness: Some(Witness::IndependentSet(core.to_vec())), guarded: false }
    }
}

fn internal(trace: &GrowthTrace, msg: impl std::fmt::Display) -> ConstructError {
    ConstructError::Internal(format!("{msg}; trace: {trace:?}"))
}

/// Certificate without running the case machine: the star bound when the
/// base is a single vertex, otherwise `k + 1`.
pub(crate) fn unrefined(g: &Graph, tree: &Tree, trace: &GrowthTrace) -> Result<(Tree, Certificate), ConstructError> {
    let core = sorted_core(trace);
    let case = if trace.t() == 1 { Case::Star } else { Case::ThNewFallback };
    finish(g, tree, trace, Verdict::plain(case, &core))
}

/// Runs the case analysis on a tree produced by `attach_pendants` and
/// returns the emitted tree with its certificate.
pub fn refine(
    g: &Graph,
    tree: &Tree,
    dec: &Decomposition,
    trace: &GrowthTrace,
) -> Result<(Tree, Certificate), ConstructError> {
    let verdict = dispatch(g, tree, dec, trace)?;
    finish(g, tree, trace, verdict)
}

fn sorted_core(trace: &GrowthTrace) -> Vec<usize> {
    let mut core = trace.independent.clone();
    core.sort_unstable();
    core
}

fn finish(
    g: &Graph,
    tree: &Tree,
    trace: &GrowthTrace,
    verdict: Verdict,
) -> Result<(Tree, Certificate), ConstructError> {
    let k = trace.k();
    let mu_tree = tree.average_distance().map_err(|e| internal(trace, e))?;
    let (emitted, mu) = match verdict.candidate {
        Some(c) => {
            let mu_c = c.average_distance().map_err(|e| internal(trace, e))?;
            if mu_c < mu_tree {
                (c, mu_c)
            } else {
                (tree.clone(), mu_tree)
            }
        }
        None => (tree.clone(), mu_tree),
    };
    let mut case = verdict.case;
    let mut witness = verdict.witness;
    let mut bound = case.bound(k);
    if verdict.guarded && bound.as_ref().is_none_or(|b| mu >= *b) {
        case = Case::ThNewFallback;
        witness = Some(Witness::IndependentSet(sorted_core(trace)));
        bound = case.bound(k);
    }
    let bound = bound.ok_or_else(|| internal(trace, format!("{case} has no bound at k = {k}")))?;
    if mu >= bound {
        return Err(internal(trace, format!("{case}: mu {mu} is not below {bound}")));
    }
    let cert = Certificate {
        case,
        k,
        t: trace.t(),
        n: g.n(),
        m: g.m(),
        mu,
        bound,
        witness,
        trace_digest: trace.digest(),
    };
    Ok((emitted, cert))
}

/// The base tree relabelled to `0..t`, with the map back to graph ids.
fn local_base(trace: &GrowthTrace) -> Result<(Tree, Vec<usize>), ConstructError> {
    let ids = trace.base.clone();
    let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = trace.base_edges.iter().map(|(a, b)| (index[a], index[b])).collect();
    let local = Tree::from_edges(ids.len(), &edges).map_err(|e| internal(trace, e))?;
    Ok((local, ids))
}

fn dispatch(
    g: &Graph,
    tree: &Tree,
    dec: &Decomposition,
    trace: &GrowthTrace,
) -> Result<Verdict, ConstructError> {
    let (k, t, n) = (trace.k(), trace.t(), g.n());
    let core = sorted_core(trace);
    if t == 1 {
        return Ok(Verdict::plain(Case::Star, &core));
    }
    if t + 2 <= 2 * k {
        return Ok(Verdict::plain(Case::LeAdd, &core));
    }
    if t + 1 != 2 * k {
        return Err(internal(trace, format!("base order {t} exceeds 2k - 1 for k = {k}")));
    }
    if t == n {
        return Ok(Verdict::plain(Case::PathTrivial, &core));
    }

    let (local, ids) = local_base(trace)?;
    let segs = path_segments(&local);
    if !segs.is_path {
        if let Some(s) = segs.segments.iter().find(|s| s.len() % 2 == 1) {
            return Err(internal(trace, format!("odd base segment of length {}", s.len())));
        }
        let case = if k >= 4 { Case::LeExtra } else { Case::ThNewFallback };
        return Ok(Verdict::plain(case, &core));
    }

    // Walk the base path from its smaller-id end.
    let start = (0..t).filter(|&i| local.degree(i) <= 1).min().expect("a path has an end");
    let mut path = vec![start];
    while path.len() < t {
        let cur = *path.last().unwrap();
        let prev = path.len().checked_sub(2).map(|i| path[i]);
        let next = local.neighbors(cur).iter().copied().find(|&x| Some(x) != prev).unwrap();
        path.push(next);
    }
    let path: Vec<usize> = path.into_iter().map(|i| ids[i]).collect();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in path.iter().enumerate() {
        pos[v] = i;
    }
    if let Some((w, h)) = dec.pendants.iter().find(|(_, &h)| pos[h] % 2 == 1) {
        return Err(internal(trace, format!("pendant {w} hangs on even path position of {h}")));
    }

    if tree.diameter() < 2 * k {
        return Ok(Verdict::plain(Case::Diameter, &core));
    }
    if let Some(v) = chord_case(g, tree, &path, trace)? {
        return Ok(v);
    }
    no_chord_case(g, tree, dec, &path, &core, trace)
}

fn chord_case(g: &Graph, tree: &Tree, path: &[usize], trace: &GrowthTrace) -> Result<Option<Verdict>, ConstructError> {
    let len = path.len();
    let swap = |remove: (usize, usize), add: (usize, usize)| -> Result<(Tree, Witness), ConstructError> {
        let t1 = tree.replace_edge(remove, add).map_err(|e| internal(trace, e))?;
        Ok((t1, Witness::SwappedEdge { removed: remove, added: add }))
    };
    let mut parity = None;
    for i in 0..len {
        for j in i + 2..len {
            if !g.has_edge(path[i], path[j]) {
                continue;
            }
            if tree.degree(path[i + 1]) == 2 {
                let (c, w) = swap((path[i], path[i + 1]), (path[i], path[j]))?;
                return Ok(Some(Verdict { case: Case::Case1T1, candidate: Some(c), witness: Some(w), guarded: false }));
            }
            if tree.degree(path[j - 1]) == 2 {
                let (c, w) = swap((path[j], path[j - 1]), (path[j], path[i]))?;
                return Ok(Some(Verdict { case: Case::Case1T2, candidate: Some(c), witness: Some(w), guarded: false }));
            }
            if parity.is_none() {
                parity = Some((i, j));
            }
        }
    }
    let Some((i, j)) = parity else { return Ok(None) };
    let (c, w) = swap((path[i], path[i + 1]), (path[i], path[j]))?;
    // Legs of the stripped tree around v_j, counted with the centre.
    let legs = [len - j, j - i, i + 2];
    let case = if legs.iter().any(|l| l % 2 == 0) { Case::Case1ParityAdd } else { Case::Case1ParityExtra };
    Ok(Some(Verdict { case, candidate: Some(c), witness: Some(w), guarded: true }))
}

/// Smallest pendant of `path[end]` with no graph edge to the rest of the path.
fn free_pendant(g: &Graph, dec: &Decomposition, path: &[usize], end: usize) -> Option<usize> {
    dec.pendants
        .iter()
        .filter(|(_, &h)| h == path[end])
        .map(|(&u, _)| u)
        .find(|&u| path.iter().enumerate().all(|(i, &v)| i == end || !g.has_edge(u, v)))
}

fn no_chord_case(
    g: &Graph,
    tree: &Tree,
    dec: &Decomposition,
    path: &[usize],
    core: &[usize],
    trace: &GrowthTrace,
) -> Result<Verdict, ConstructError> {
    let last = path.len() - 1;
    let Some(u) = free_pendant(g, dec, path, 0) else {
        return t3(g, tree, dec, path, core, trace);
    };
    let Some(w) = free_pendant(g, dec, path, last) else {
        let reversed: Vec<usize> = path.iter().rev().copied().collect();
        return t3(g, tree, dec, &reversed, core, trace);
    };
    if !g.has_edge(u, w) {
        let mut set = vec![u, w];
        set.extend(path.iter().skip(1).step_by(2).copied());
        set.sort_unstable();
        if !g.is_independent_set(&set).unwrap_or(false) {
            return Err(internal(trace, "enlarged set is not independent"));
        }
        return Ok(Verdict { case: Case::EnlargedIndep, candidate: None, witness: Some(Witness::IndependentSet(set)), guarded: false });
    }

    let counts = |p: &[usize]| -> Vec<usize> { p.iter().step_by(2).map(|&v| dec.attached_to(v)).collect() };
    let mut path = path.to_vec();
    let mut a = counts(&path);
    let least = *a.iter().min().unwrap();
    if (1..a.len()).all(|i| a[i] != least) {
        path.reverse();
        a = counts(&path);
    }
    let pick = (1..a.len()).find(|&i| a[i] == least).expect("minimizer away from position one");
    let removed = (path[2 * pick - 1], path[2 * pick]);
    let c = tree.replace_edge(removed, (u, w)).map_err(|e| internal(trace, e))?;
    Ok(Verdict {
        case: Case::Case2T4,
        candidate: Some(c),
        witness: Some(Witness::SwappedEdge { removed, added: (u.min(w), u.max(w)) }),
        guarded: false,
    })
}

/// Every pendant of `path[0]` moves to its first graph neighbour among the
/// rest of the path, leaving `path[0]` a leaf of `path[1]`.
fn t3(
    g: &Graph,
    tree: &Tree,
    dec: &Decomposition,
    path: &[usize],
    core: &[usize],
    trace: &GrowthTrace,
) -> Result<Verdict, ConstructError> {
    let end = path[0];
    let mut edges: Vec<(usize, usize)> = tree
        .edges()
        .into_iter()
        .filter(|&(a, b)| !(a == end && dec.pendants.get(&b) == Some(&end)) && !(b == end && dec.pendants.get(&a) == Some(&end)))
        .collect();
    for (&x, _) in dec.pendants.iter().filter(|(_, &h)| h == end) {
        let hub = path[1..]
            .iter()
            .copied()
            .find(|&v| g.has_edge(x, v))
            .ok_or_else(|| internal(trace, format!("pendant {x} has no other path neighbour")))?;
        edges.push((x, hub));
    }
    let c = Tree::from_edges(tree.n(), &edges).map_err(|e| internal(trace, e))?;
    Ok(Verdict { case: Case::Case2T3, candidate: Some(c), witness: Some(Witness::IndependentSet(core.to_vec())), guarded: false })
}
