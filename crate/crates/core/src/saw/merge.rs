//! Naive merging of two SAW graphs along a boundary window.
//!
//! This is the tempting shortcut that tiling must avoid: identifying an
//! undirected boundary edge of one graph with one of the other can couple
//! crease parities that the pattern leaves free.

use std::collections::{BTreeMap, BTreeSet};

use crate::saw::graph::{ordered, SawGraph, SawId};
use crate::CreaseId;

/// Boundary windows `crossing, undirected, crossing` whose two crossings are
/// distinct creases of `shared`, as the four vertices along the walk.
fn windows(g: &SawGraph, shared: &BTreeSet<CreaseId>) -> Vec<[SawId; 4]> {
    let n = g.boundary.len();
    (0..n)
        .filter_map(|i| {
            let (s0, s1, s2) = (g.boundary[i], g.boundary[(i + 1) % n], g.boundary[(i + 2) % n]);
            match (s0.crease, s1.crease, s2.crease) {
                (Some(x), None, Some(y)) if x != y && shared.contains(&x) && shared.contains(&y) => {
                    Some([s0.from, s0.to, s1.to, s2.to])
                }
                _ => None,
            }
        })
        .collect()
}

/// Glue `h` onto `g` by identifying a `crossing, undirected, crossing`
/// window over the creases in `shared` on each walk, including the
/// undirected edge. When the crossings disagree in direction, every
/// crossing of `h` is reversed first, which keeps its coloring count.
/// Returns the first window pair whose faces match, or `None`.
pub fn naive_window_merge(g: &SawGraph, h: &SawGraph, shared: &BTreeSet<CreaseId>) -> Option<SawGraph> {
    let offset = g.next_id();
    for reverse in [false, true] {
        let mut h2 = h.clone();
        if reverse {
            for v in h2.crossings.values_mut() {
                *v = (v.1, v.0);
            }
        }
        let map: BTreeMap<SawId, SawId> = h2.faces.keys().map(|&v| (v, v + offset)).collect();
        let h2 = h2.relabelled(&map);
        for wg in windows(g, shared) {
            for wh in windows(&h2, shared) {
                // the walks run opposite ways along the seam
                let ident: BTreeMap<SawId, SawId> = (0..4).map(|i| (wh[3 - i], wg[i])).collect();
                if ident.iter().any(|(a, b)| h2.faces[a] != g.faces[b]) {
                    continue;
                }
                if let Some(m) = glue(g, &h2, &ident) {
                    return Some(m);
                }
            }
        }
    }
    None
}

fn glue(g: &SawGraph, h: &SawGraph, ident: &BTreeMap<SawId, SawId>) -> Option<SawGraph> {
    let m = |v: SawId| *ident.get(&v).unwrap_or(&v);
    let mut out = g.clone();
    for (&v, &f) in &h.faces {
        if !ident.contains_key(&v) {
            out.faces.insert(v, f);
        }
    }
    for &(a, b) in &h.edges {
        if m(a) == m(b) {
            return None;
        }
        out.edges.insert(ordered(m(a), m(b)));
    }
    for (&c, &(t, hd)) in &h.crossings {
        let e = (m(t), m(hd));
        match out.crossings.get(&c) {
            Some(&old) if old != e => return None,
            Some(_) => {}
            None => {
                out.crossings.insert(c, e);
            }
        }
    }
    out.boundary.clear();
    Some(out.compacted())
}
