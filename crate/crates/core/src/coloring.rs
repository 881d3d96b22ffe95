//! Proper 3-colorings with a pre-colored root, and their translation to and
//! from mountain/valley assignments through crossing edges.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;
use thiserror::Error;

use crate::cone::{Mv, MvAssignment};
use crate::oracle::{enumerate_locally_valid, is_locally_valid, OracleError};
use crate::pattern::CreasePattern;
use crate::saw::{check_saw_invariants, SawGraph, SawId};
use crate::scalar::Scalar;
use crate::{Count, CreaseId};

/// Colors in `0..3` keyed by SAW vertex.
pub type ThreeColoring = BTreeMap<SawId, u8>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring is not proper: {0}")]
    ImproperColoring(String),
    #[error("assignment has no value for crease {0}")]
    MissingCrease(CreaseId),
    #[error("the crossing colors admit no proper completion")]
    NoCompletion,
    #[error("the crossing colors admit more than one completion")]
    AmbiguousCompletion,
}

/// Colorings materialized up to a cap, with the exact total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringEnumeration {
    pub colorings: Vec<ThreeColoring>,
    pub count: Count,
    pub cap_exceeded: bool,
}

/// Breadth-first order from `root`, then any unreached vertices.
fn bfs_order(adj: &BTreeMap<SawId, Vec<SawId>>, root: SawId) -> Vec<SawId> {
    let mut seen = BTreeSet::new();
    let mut order = Vec::with_capacity(adj.len());
    let starts = std::iter::once(root).chain(adj.keys().copied());
    for s in starts {
        if !adj.contains_key(&s) || !seen.insert(s) {
            continue;
        }
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            order.push(u);
            for &w in &adj[&u] {
                if seen.insert(w) {
                    q.push_back(w);
                }
            }
        }
    }
    order
}

/// Exact number of proper 3-colorings with the root colored 0.
///
/// Dynamic programming over a breadth-first vertex order: the state is the
/// coloring of the frontier, the assigned vertices that still have
/// unassigned neighbours.
pub fn count_colorings(g: &SawGraph) -> Count {
    count_colorings_rooted(g, g.root)
}

pub fn count_colorings_rooted(g: &SawGraph, root: SawId) -> Count {
    let adj = g.neighbours();
    if adj.is_empty() {
        return Count::default();
    }
    let order = bfs_order(&adj, root);
    let pos: HashMap<SawId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // step at which each vertex leaves the frontier
    let last_need: Vec<usize> = order
        .iter()
        .enumerate()
        .map(|(i, v)| adj[v].iter().map(|w| pos[w]).max().unwrap_or(i).max(i))
        .collect();

    let mut frontier: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<u8>, BigUint> = HashMap::from([(Vec::new(), BigUint::from(1u32))]);
    for (i, v) in order.iter().enumerate() {
        let nbr_slots: Vec<usize> = frontier
            .iter()
            .enumerate()
            .filter(|(_, &f)| adj[v].iter().any(|w| pos[w] == f))
            .map(|(k, _)| k)
            .collect();
        let colors: &[u8] = if i == 0 { &[0] } else { &[0, 1, 2] };
        let mut keep: Vec<usize> = (0..frontier.len()).filter(|&k| last_need[frontier[k]] > i).collect();
        let add_self = last_need[i] > i;
        let mut next: HashMap<Vec<u8>, BigUint> = HashMap::with_capacity(states.len());
        for (state, n) in &states {
            for &c in colors {
                if nbr_slots.iter().any(|&k| state[k] == c) {
                    continue;
                }
                let mut key: Vec<u8> = keep.iter().map(|&k| state[k]).collect();
                if add_self {
                    key.push(c);
                }
                *next.entry(key).or_default() += n;
            }
        }
        let mut new_frontier: Vec<usize> = keep.drain(..).map(|k| frontier[k]).collect();
        if add_self {
            new_frontier.push(i);
        }
        frontier = new_frontier;
        states = next;
        if states.is_empty() {
            return Count::default();
        }
    }
    states.into_values().sum()
}

fn proper_partial(adj: &BTreeMap<SawId, Vec<SawId>>, col: &BTreeMap<SawId, u8>, v: SawId, c: u8) -> bool {
    adj[&v].iter().all(|w| col.get(w) != Some(&c))
}

/// Colorings in lexicographic order of `(color of smallest id, ...)`, at most
/// `cap` of them; the count is exact.
pub fn enumerate_colorings(g: &SawGraph, cap: usize) -> ColoringEnumeration {
    let adj = g.neighbours();
    let ids: Vec<SawId> = adj.keys().copied().collect();
    let mut out = Vec::new();
    let mut col = BTreeMap::new();
    fn rec(
        ids: &[SawId],
        k: usize,
        root: SawId,
        adj: &BTreeMap<SawId, Vec<SawId>>,
        col: &mut BTreeMap<SawId, u8>,
        out: &mut Vec<ThreeColoring>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        if k == ids.len() {
            out.push(col.clone());
            return;
        }
        let v = ids[k];
        for c in 0..3u8 {
            if (v == root && c != 0) || !proper_partial(adj, col, v, c) {
                continue;
            }
            col.insert(v, c);
            rec(ids, k + 1, root, adj, col, out, cap);
            col.remove(&v);
        }
    }
    rec(&ids, 0, g.root, &adj, &mut col, &mut out, cap);
    let count = count_colorings(g);
    ColoringEnumeration {
        cap_exceeded: count > BigUint::from(out.len()),
        colorings: out,
        count,
    }
}

fn check_proper(g: &SawGraph, s: &ThreeColoring) -> Result<(), ColoringError> {
    for v in g.vertex_ids() {
        match s.get(&v) {
            Some(&c) if c < 3 => {}
            _ => return Err(ColoringError::ImproperColoring(format!("vertex {v} has no valid color"))),
        }
    }
    for (a, b) in g.underlying_edges() {
        if s[&a] == s[&b] {
            return Err(ColoringError::ImproperColoring(format!("edge ({a}, {b}) is monochromatic")));
        }
    }
    Ok(())
}

/// MV value carried by a crossing from a vertex colored `t` to one colored `h`.
pub fn crossing_value(t: u8, h: u8) -> Mv {
    if (h + 3 - t) % 3 == 1 {
        Mv::Mountain
    } else {
        Mv::Valley
    }
}

pub fn coloring_to_mv(g: &SawGraph, s: &ThreeColoring) -> Result<MvAssignment, ColoringError> {
    check_proper(g, s)?;
    Ok(g.crossings
        .iter()
        .map(|(&c, &(t, h))| (c, crossing_value(s[&t], s[&h])))
        .collect())
}

fn offset(m: Mv) -> u8 {
    match m {
        Mv::Mountain => 1,
        Mv::Valley => 2,
    }
}

/// The unique proper coloring (root 0) whose crossings carry `mv`.
pub fn mv_to_coloring(g: &SawGraph, mv: &MvAssignment) -> Result<ThreeColoring, ColoringError> {
    // Crossing constraints fix colors up to a shift within each
    // crossing-connected class; propagate them first.
    let mut links: BTreeMap<SawId, Vec<(SawId, u8)>> = BTreeMap::new();
    for (&c, &(t, h)) in &g.crossings {
        let d = offset(mv.get(c).ok_or(ColoringError::MissingCrease(c))?);
        links.entry(t).or_default().push((h, d));
        links.entry(h).or_default().push((t, 3 - d));
    }
    let mut class: BTreeMap<SawId, (SawId, u8)> = BTreeMap::new();
    for v in g.vertex_ids() {
        if class.contains_key(&v) {
            continue;
        }
        class.insert(v, (v, 0));
        let mut q = VecDeque::from([v]);
        while let Some(u) = q.pop_front() {
            let (_, ou) = class[&u];
            for &(w, d) in links.get(&u).map(|l| l.as_slice()).unwrap_or(&[]) {
                let ow = (ou + d) % 3;
                match class.get(&w) {
                    Some(&(_, x)) if x != ow => return Err(ColoringError::NoCompletion),
                    Some(_) => {}
                    None => {
                        class.insert(w, (v, ow));
                        q.push_back(w);
                    }
                }
            }
        }
    }
    // One unknown per class; the root's class is pinned.
    let (root_rep, root_off) = class[&g.root];
    let reps: Vec<SawId> = {
        let mut r: Vec<SawId> = class.values().map(|&(r, _)| r).collect::<BTreeSet<_>>().into_iter().collect();
        r.sort_by_key(|&x| x != root_rep);
        r
    };
    let mut constraints: BTreeMap<SawId, Vec<(SawId, u8)>> = BTreeMap::new();
    for (a, b) in g.underlying_edges() {
        let (ra, oa) = class[&a];
        let (rb, ob) = class[&b];
        // base[ra] + oa != base[rb] + ob
        if ra == rb {
            if oa == ob {
                return Err(ColoringError::NoCompletion);
            }
            continue;
        }
        constraints.entry(ra).or_default().push((rb, (ob + 3 - oa) % 3));
        constraints.entry(rb).or_default().push((ra, (oa + 3 - ob) % 3));
    }
    let mut base: BTreeMap<SawId, u8> = BTreeMap::new();
    let mut found: Option<BTreeMap<SawId, u8>> = None;
    let mut solutions = 0;
    fn rec(
        reps: &[SawId],
        k: usize,
        pinned: (SawId, u8),
        cons: &BTreeMap<SawId, Vec<(SawId, u8)>>,
        base: &mut BTreeMap<SawId, u8>,
        found: &mut Option<BTreeMap<SawId, u8>>,
        solutions: &mut usize,
    ) {
        if *solutions >= 2 {
            return;
        }
        if k == reps.len() {
            *solutions += 1;
            *found = Some(base.clone());
            return;
        }
        let r = reps[k];
        for c in 0..3u8 {
            if r == pinned.0 && c != pinned.1 {
                continue;
            }
            // base[r] != base[o] + d for each constraint
            let ok = cons
                .get(&r)
                .map(|l| l.iter().all(|&(o, d)| base.get(&o).is_none_or(|&bo| (bo + d) % 3 != c)))
                .unwrap_or(true);
            if ok {
                base.insert(r, c);
                rec(reps, k + 1, pinned, cons, base, found, solutions);
                base.remove(&r);
            }
        }
    }
    let pinned = (root_rep, (3 - root_off) % 3);
    rec(&reps, 0, pinned, &constraints, &mut base, &mut found, &mut solutions);
    match (solutions, found) {
        (0, _) | (_, None) => Err(ColoringError::NoCompletion),
        (1, Some(b)) => Ok(class.iter().map(|(&v, &(r, o))| (v, (b[&r] + o) % 3)).collect()),
        _ => Err(ColoringError::AmbiguousCompletion),
    }
}

/// Outcome of [`verify_bijection`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub colorings: Count,
    pub assignments: Count,
    pub passed: bool,
    /// First failure found, if any.
    pub counterexample: Option<String>,
}

/// Colorings enumerated at most by [`verify_bijection`].
pub const VERIFY_ENUMERATION_CAP: usize = 200_000;

/// Checks that `g` is a SAW graph of `cp`: structure, equal counts,
/// injectivity into locally valid assignments and round trips both ways.
pub fn verify_bijection<S: Scalar>(cp: &CreasePattern<S>, g: &SawGraph) -> Result<BijectionReport, OracleError> {
    let oracle = enumerate_locally_valid(cp, VERIFY_ENUMERATION_CAP)?;
    let colorings = enumerate_colorings(g, VERIFY_ENUMERATION_CAP);
    let mut report = BijectionReport {
        colorings: colorings.count.clone(),
        assignments: oracle.count.clone(),
        passed: false,
        counterexample: None,
    };
    let fail = |mut r: BijectionReport, why: String| {
        r.counterexample = Some(why);
        Ok(r)
    };
    if let Err(e) = check_saw_invariants(cp, g) {
        return fail(report, format!("structure: {e}"));
    }
    if colorings.count != oracle.count {
        return fail(report, format!("{} colorings but {} assignments", colorings.count, oracle.count));
    }
    if colorings.cap_exceeded || oracle.cap_exceeded {
        return fail(report, "too many colorings to enumerate".into());
    }
    let mut images = BTreeSet::new();
    for s in &colorings.colorings {
        let mv = match coloring_to_mv(g, s) {
            Ok(m) => m,
            Err(e) => return fail(report, format!("{e} for coloring {s:?}")),
        };
        if !is_locally_valid(cp, &mv)? {
            return fail(report, format!("coloring {s:?} maps to invalid assignment {mv:?}"));
        }
        match mv_to_coloring(g, &mv) {
            Ok(back) if back == *s => {}
            Ok(back) => return fail(report, format!("round trip of {s:?} gave {back:?}")),
            Err(e) => return fail(report, format!("round trip of {s:?}: {e}")),
        }
        if !images.insert(mv.clone()) {
            return fail(report, format!("assignment {mv:?} has two preimages"));
        }
    }
    for mv in &oracle.witnesses {
        match mv_to_coloring(g, mv).and_then(|s| coloring_to_mv(g, &s)) {
            Ok(back) if back == *mv => {}
            Ok(back) => return fail(report, format!("round trip of {mv:?} gave {back:?}")),
            Err(e) => return fail(report, format!("assignment {mv:?}: {e}")),
        }
    }
    report.passed = true;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: u32, edges: &[(u32, u32)]) -> SawGraph {
        let mut g = SawGraph::default();
        for _ in 0..n {
            g.add_vertex(0);
        }
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    fn exhaustive(g: &SawGraph) -> usize {
        let ids: Vec<SawId> = g.vertex_ids().collect();
        let edges = g.underlying_edges();
        let n = ids.len() as u32;
        (0..3usize.pow(n))
            .filter(|&code| {
                let col: BTreeMap<SawId, usize> =
                    ids.iter().enumerate().map(|(i, &v)| (v, code / 3usize.pow(i as u32) % 3)).collect();
                col[&g.root] == 0 && edges.iter().all(|(a, b)| col[a] != col[b])
            })
            .count()
    }

    #[test]
    fn small_counts() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(count_colorings(&c4), Count::from(6u32));
        assert_eq!(count_colorings(&graph(2, &[(0, 1)])), Count::from(2u32));
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(count_colorings(&k4), Count::default());
        let mut grid = Vec::new();
        for r in 0..3u32 {
            for c in 0..3u32 {
                if c < 2 {
                    grid.push((3 * r + c, 3 * r + c + 1));
                }
                if r < 2 {
                    grid.push((3 * r + c, 3 * r + c + 3));
                }
            }
        }
        let g = graph(9, &grid);
        assert_eq!(count_colorings(&g), Count::from(exhaustive(&g)));
        // 246 proper 3-colourings of the 3x3 grid, a third with the root fixed
        assert_eq!(exhaustive(&g), 82);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let e = enumerate_colorings(&tri, 10);
        let rows: Vec<Vec<u8>> = e.colorings.iter().map(|s| s.values().copied().collect()).collect();
        assert_eq!(rows, vec![vec![0, 1, 2], vec![0, 2, 1]]);
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let e = enumerate_colorings(&c4, 4);
        assert_eq!(e.colorings.len(), 4);
        assert!(e.cap_exceeded);
        assert_eq!(e.count, Count::from(6u32));
    }

    #[test]
    fn crossing_translation() {
        let mut g = graph(2, &[]);
        g.set_crossing(0, 0, 1);
        let s: ThreeColoring = [(0, 0), (1, 1)].into();
        assert_eq!(coloring_to_mv(&g, &s).unwrap().get(0), Some(Mv::Mountain));
        let s: ThreeColoring = [(0, 0), (1, 2)].into();
        assert_eq!(coloring_to_mv(&g, &s).unwrap().get(0), Some(Mv::Valley));
        let bad: ThreeColoring = [(0, 1), (1, 1)].into();
        assert!(matches!(coloring_to_mv(&g, &bad), Err(ColoringError::ImproperColoring(_))));
        let mv = MvAssignment::from_pairs([(0, Mv::Valley)]);
        assert_eq!(mv_to_coloring(&g, &mv).unwrap(), [(0, 0), (1, 2)].into());
    }

    #[test]
    fn completion_must_be_unique() {
        // a pendant vertex off a crossing is free to take two colors
        let mut g = graph(3, &[(1, 2)]);
        g.set_crossing(0, 0, 1);
        let mv = MvAssignment::from_pairs([(0, Mv::Mountain)]);
        assert_eq!(mv_to_coloring(&g, &mv), Err(ColoringError::AmbiguousCompletion));
        // a triangle closing the crossing forces the third color
        g.add_edge(0, 2);
        assert_eq!(mv_to_coloring(&g, &mv).unwrap(), [(0, 0), (1, 1), (2, 2)].into());
    }
}
