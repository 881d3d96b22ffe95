//! Whole-pattern SAW graphs by tiling single-vertex graphs along shared
//! creases.

use std::collections::{BTreeMap, BTreeSet};

use crate::pattern::CreasePattern;
use crate::saw::graph::{ordered, BoundaryStep, SawGraph, SawId};
use crate::saw::single::{single_vertex_saw_variants, SingleVertexSaw};
use crate::saw::surgery::{insert_prism, insert_triangle};
use crate::saw::SawError;
use crate::scalar::Scalar;
use crate::{CreaseId, VertexId};

struct Local {
    /// Creases in counterclockwise order.
    creases: Vec<CreaseId>,
    saw: SingleVertexSaw,
}

impl Local {
    fn ccw_next(&self, c: CreaseId) -> CreaseId {
        let i = self.creases.iter().position(|&x| x == c).unwrap();
        self.creases[(i + 1) % self.creases.len()]
    }
}

/// SAW graph of the whole pattern.
pub fn tile<S: Scalar>(cp: &CreasePattern<S>) -> Result<SawGraph, SawError> {
    tile_with_start(cp, None)
}

fn locals_of<S: Scalar>(cp: &CreasePattern<S>) -> Result<BTreeMap<VertexId, Local>, SawError> {
    let mut locals = BTreeMap::new();
    for v in cp.interior_vertices() {
        let cone = cp.cone_at(v.id)?;
        let mut saw = single_vertex_saw_variants(&cone).map_err(|e| SawError::UnsupportedVertex {
            vertex: v.id,
            reason: e.to_string(),
        })?;
        let sectors = cp.sector_faces(v.id).expect("interior vertex");
        for f in saw.graph.faces.values_mut() {
            let i = cone.creases.iter().position(|&c| c as usize == *f).expect("sector label");
            *f = sectors[i];
        }
        locals.insert(v.id, Local { creases: cone.creases, saw });
    }
    Ok(locals)
}

/// Interior-to-interior adjacency through creases.
fn adjacency<S: Scalar>(
    cp: &CreasePattern<S>,
    locals: &BTreeMap<VertexId, Local>,
) -> BTreeMap<VertexId, Vec<(CreaseId, VertexId)>> {
    let mut nbrs: BTreeMap<VertexId, Vec<(CreaseId, VertexId)>> = locals.keys().map(|&v| (v, Vec::new())).collect();
    for c in cp.creases() {
        if locals.contains_key(&c.a) && locals.contains_key(&c.b) {
            nbrs.get_mut(&c.a).unwrap().push((c.id, c.b));
            nbrs.get_mut(&c.b).unwrap().push((c.id, c.a));
        }
    }
    nbrs
}

/// SAW graph of the interior vertices in `subset` alone, which must be
/// connected through creases. Faces keep the pattern's ids and the outer walk
/// is tracked, so the result can be merged further.
pub fn tile_subset<S: Scalar>(cp: &CreasePattern<S>, subset: &BTreeSet<VertexId>) -> Result<SawGraph, SawError> {
    let mut locals = locals_of(cp)?;
    locals.retain(|v, _| subset.contains(v));
    if locals.len() != subset.len() || subset.is_empty() {
        return Err(SawError::DisconnectedInterior);
    }
    let nbrs = adjacency(cp, &locals);
    let comp: Vec<VertexId> = subset.iter().copied().collect();
    comp.iter()
        .find_map(|&s| build_component(&comp, s, &locals, &nbrs))
        .ok_or(SawError::DisconnectedInterior)
}

/// Like [`tile`], but the component containing `start` grows from it.
pub fn tile_with_start<S: Scalar>(cp: &CreasePattern<S>, start: Option<VertexId>) -> Result<SawGraph, SawError> {
    let locals = locals_of(cp)?;
    let nbrs = adjacency(cp, &locals);

    let mut units: Vec<(SawGraph, bool)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut roots: Vec<VertexId> = start.into_iter().filter(|s| locals.contains_key(s)).collect();
    roots.extend(locals.keys().copied());
    for r in roots {
        if seen.contains(&r) {
            continue;
        }
        let mut comp = vec![r];
        seen.insert(r);
        let mut k = 0;
        while k < comp.len() {
            for &(_, w) in &nbrs[&comp[k]] {
                if seen.insert(w) {
                    comp.push(w);
                }
            }
            k += 1;
        }
        let starts = std::iter::once(r).chain(comp.iter().copied().filter(|&v| v != r));
        let built = starts
            .into_iter()
            .find_map(|s| build_component(&comp, s, &locals, &nbrs))
            .ok_or(SawError::DisconnectedInterior)?;
        units.push((built, true));
    }

    for c in cp.creases() {
        if !locals.contains_key(&c.a) && !locals.contains_key(&c.b) {
            let (l, r) = cp.crease_faces(c.id).expect("crease faces");
            let mut g = SawGraph::default();
            let a = g.add_vertex(l);
            let b = g.add_vertex(r);
            g.set_crossing(c.id, a, b);
            units.push((g, false));
        }
    }

    let mut g = merge_units(units, cp.faces().len());
    let root_face = g.faces.values().min().copied().unwrap_or(0);
    g.root = g.faces.iter().find(|(_, &f)| f == root_face).map(|(&v, _)| v).unwrap_or(0);
    Ok(g.compacted())
}

/// Join units at shared faces by identifying one vertex of each.
fn merge_units(units: Vec<(SawGraph, bool)>, faces: usize) -> SawGraph {
    if units.is_empty() {
        let mut g = SawGraph::default();
        for f in 0..faces {
            g.add_vertex(f);
        }
        return g;
    }
    let track = units.len() == 1 && units[0].1;
    let mut pending: Vec<SawGraph> = units.into_iter().map(|u| u.0).collect();
    let mut acc = pending.remove(0);
    while !pending.is_empty() {
        let acc_faces: BTreeMap<usize, SawId> = acc.faces.iter().rev().map(|(&v, &f)| (f, v)).collect();
        let pick = pending
            .iter()
            .enumerate()
            .find_map(|(i, u)| {
                u.faces
                    .iter()
                    .find_map(|(&v, f)| acc_faces.get(f).map(|&a| (i, v, a)))
            });
        let Some((i, v, a)) = pick else {
            // no shared face; keep the pieces together anyway
            let u = pending.remove(0);
            let v = *u.faces.keys().next().unwrap();
            let a = *acc.faces.keys().next().unwrap();
            acc = glue(&acc, &u, &[(v, a)]);
            continue;
        };
        let u = pending.remove(i);
        acc = glue(&acc, &u, &[(v, a)]);
    }
    if !track {
        acc.boundary.clear();
    }
    acc
}

/// Disjoint union of `g` and `h`, identifying each `(h vertex, g vertex)` pair.
fn glue(g: &SawGraph, h: &SawGraph, ident: &[(SawId, SawId)]) -> SawGraph {
    let mut out = g.clone();
    let mut next = g.next_id();
    let fixed: BTreeMap<SawId, SawId> = ident.iter().copied().collect();
    let mut map = BTreeMap::new();
    for (&v, &f) in &h.faces {
        let id = match fixed.get(&v) {
            Some(&t) => t,
            None => {
                let id = next;
                next += 1;
                out.faces.insert(id, f);
                id
            }
        };
        map.insert(v, id);
    }
    for &(a, b) in &h.edges {
        out.edges.insert(ordered(map[&a], map[&b]));
    }
    for (&c, &(t, hd)) in &h.crossings {
        out.crossings.entry(c).or_insert((map[&t], map[&hd]));
    }
    out
}

fn build_component(
    comp: &[VertexId],
    start: VertexId,
    locals: &BTreeMap<VertexId, Local>,
    nbrs: &BTreeMap<VertexId, Vec<(CreaseId, VertexId)>>,
) -> Option<SawGraph> {
    let mut g = locals[&start].saw.graph.clone();
    let mut added = BTreeSet::from([start]);
    while added.len() < comp.len() {
        let mut cands: Vec<(usize, VertexId, BTreeSet<CreaseId>)> = comp
            .iter()
            .filter(|v| !added.contains(v))
            .map(|&v| {
                let shared: BTreeSet<CreaseId> =
                    nbrs[&v].iter().filter(|(_, w)| added.contains(w)).map(|&(c, _)| c).collect();
                (shared.len(), v, shared)
            })
            .filter(|(k, _, _)| *k > 0)
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let next = cands
            .into_iter()
            .find_map(|(_, u, shared)| attach(&g, &locals[&u], &shared).map(|m| (u, m)));
        let (u, merged) = next?;
        g = merged;
        added.insert(u);
    }
    Some(g)
}

/// Crossing creases in walk order for the shared block, if the block is
/// contiguous (ignoring undirected steps).
fn band_in_walk(g: &SawGraph, shared: &BTreeSet<CreaseId>) -> Option<Vec<CreaseId>> {
    let cross: Vec<CreaseId> = g.boundary.iter().filter_map(|s| s.crease).collect();
    let n = cross.len();
    let k = shared.len();
    if k == 0 || k >= n || cross.iter().filter(|c| shared.contains(c)).count() != k {
        return None;
    }
    let first = (0..n).find(|&i| shared.contains(&cross[i]) && !shared.contains(&cross[(i + n - 1) % n]))?;
    let band: Vec<CreaseId> = (0..k).map(|i| cross[(first + i) % n]).collect();
    band.iter().all(|c| shared.contains(c)).then_some(band)
}

fn tail_face(g: &SawGraph, c: CreaseId) -> usize {
    g.faces[&g.crossing(c).unwrap().0]
}

/// Index range (cyclic, inclusive) of the steps from crease `a` to crease `b`.
fn band_steps(g: &SawGraph, a: CreaseId, b: CreaseId) -> (usize, usize) {
    let pa = g.boundary_position(a).unwrap();
    let pb = g.boundary_position(b).unwrap();
    let n = g.boundary.len();
    (pa, (pb + n - pa) % n + 1)
}

/// Move undirected steps out of the band between crossings `a` and `b` with
/// prism insertions.
fn clean_band(mut g: SawGraph, a: CreaseId, b: CreaseId) -> Option<SawGraph> {
    loop {
        let (p0, len) = band_steps(&g, a, b);
        let n = g.boundary.len();
        let at = |i: usize| g.boundary[(p0 + i) % n];
        let Some(i) = (0..len).find(|&i| at(i).crease.is_none()) else {
            return Some(g);
        };
        let left = (0..i).filter(|&x| at(x).crease.is_some()).count();
        let right = (i..len).filter(|&x| at(x).crease.is_some()).count();
        g = if left <= right {
            let c = at(i - 1).crease.unwrap();
            insert_prism(&g, c, (at(i).from, at(i).to)).ok()?
        } else {
            let mut last = i;
            while at(last + 1).crease.is_none() {
                last += 1;
            }
            let c = at(last + 1).crease.unwrap();
            insert_prism(&g, c, (at(last).from, at(last).to)).ok()?
        };
    }
}

/// Union-find over vertex ids.
fn find(p: &mut BTreeMap<SawId, SawId>, x: SawId) -> SawId {
    let up = *p.get(&x).unwrap_or(&x);
    if up == x {
        return x;
    }
    let r = find(p, up);
    p.insert(x, r);
    r
}

fn attach(g: &SawGraph, u: &Local, shared: &BTreeSet<CreaseId>) -> Option<SawGraph> {
    let band = band_in_walk(g, shared)?;
    let k = band.len();
    // the walk around u meets the band creases in reverse
    if (1..k).any(|i| u.ccw_next(band[i]) != band[i - 1]) {
        return None;
    }
    let h = u
        .saw
        .variants()
        .min_by_key(|h| band.iter().filter(|&&c| tail_face(g, c) != tail_face(h, c)).count())?;
    let mut g = g.clone();
    for &c in &band {
        if tail_face(&g, c) != tail_face(&h, c) {
            g = insert_triangle(&g, c).ok()?;
        }
    }
    let g = clean_band(g, band[0], band[k - 1])?;
    let h = clean_band(h, band[k - 1], band[0])?;

    let (gp, _) = band_steps(&g, band[0], band[k - 1]);
    let (hp, _) = band_steps(&h, band[k - 1], band[0]);
    let (gn, hn) = (g.boundary.len(), h.boundary.len());
    let gs = |i: usize| g.boundary[(gp + i) % gn];
    let hs = |i: usize| h.boundary[(hp + i) % hn];
    // q[i] on the walk of g, r[i] on the walk of h, in the same face
    let mut q = vec![gs(0).from];
    q.extend((0..k).map(|i| gs(i).to));
    let mut r = vec![hs(k - 1).to];
    r.extend((0..k).rev().map(|i| hs(i).from));
    for i in 0..=k {
        if g.faces[&q[i]] != h.faces[&r[i]] {
            return None;
        }
    }

    // identify q[i] ~ r[i]; several r may coincide, which merges q's
    let offset = g.next_id();
    let hid = |v: SawId| v + offset;
    let mut parent = BTreeMap::new();
    for i in 0..=k {
        let (a, b) = (find(&mut parent, q[i]), find(&mut parent, hid(r[i])));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            parent.insert(hi, lo);
        }
    }
    let mut all = g.clone();
    for (&v, &f) in &h.faces {
        all.faces.insert(hid(v), f);
    }
    for &(a, b) in &h.edges {
        all.edges.insert((hid(a), hid(b)));
    }
    let ids: Vec<SawId> = all.faces.keys().copied().collect();
    let map: BTreeMap<SawId, SawId> = ids.iter().map(|&v| (v, find(&mut parent, v))).collect();
    if map.iter().any(|(v, m)| all.faces[v] != all.faces[m]) {
        return None;
    }
    for &(a, b) in &all.edges {
        if map[&a] == map[&b] {
            return None;
        }
    }
    for (&c, &(t, hd)) in &h.crossings {
        let mapped = (map[&hid(t)], map[&hid(hd)]);
        match g.crossings.get(&c) {
            Some(&(gt, gh)) => {
                if (map[&gt], map[&gh]) != mapped {
                    return None;
                }
            }
            None => {
                if mapped.0 == mapped.1 {
                    return None;
                }
                all.crossings.insert(c, (hid(t), hid(hd)));
            }
        }
    }
    let mut boundary: Vec<BoundaryStep> = (k..gn).map(|i| gs(i)).collect();
    boundary.extend((k..hn).map(|i| {
        let s = hs(i);
        BoundaryStep {
            from: hid(s.from),
            to: hid(s.to),
            crease: s.crease,
        }
    }));
    all.boundary = boundary;
    // compact away the merged ids
    let keep: BTreeSet<SawId> = map.values().copied().collect();
    all.faces.retain(|v, _| keep.contains(v));
    let mut out = all.relabelled(&map);
    out.root = map[&g.root];
    Some(out)
}

