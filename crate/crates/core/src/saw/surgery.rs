//! Boundary surgery that keeps the coloring count: triangle insertion
//! reverses a crossing, prism insertion swaps a crossing with an adjacent
//! undirected boundary edge.

use crate::saw::graph::{ordered, BoundaryStep, SawGraph};
use crate::saw::SawError;
use crate::CreaseId;

/// Reverse the boundary crossing over `c` by closing a triangle on it.
///
/// For the crossing `t -> h`, a new vertex `w` in the face of `h` takes over
/// the crossing as `w -> t`; `{t, h}` stays as an undirected edge and `{w, h}`
/// joins the boundary.
pub fn insert_triangle(g: &SawGraph, c: CreaseId) -> Result<SawGraph, SawError> {
    let pos = g.boundary_position(c).ok_or(SawError::NotBoundaryEdge(c))?;
    let (t, h) = g.crossing(c).ok_or(SawError::NotBoundaryEdge(c))?;
    let mut out = g.clone();
    let w = out.add_vertex(g.faces[&h]);
    out.add_edge(t, h);
    out.add_edge(w, t);
    out.add_edge(w, h);
    out.set_crossing(c, w, t);
    let s = g.boundary[pos];
    let steps = if s.from == t {
        [
            BoundaryStep { from: t, to: w, crease: Some(c) },
            BoundaryStep { from: w, to: h, crease: None },
        ]
    } else {
        [
            BoundaryStep { from: h, to: w, crease: None },
            BoundaryStep { from: w, to: t, crease: Some(c) },
        ]
    };
    out.boundary.splice(pos..=pos, steps);
    Ok(out)
}

/// Attach a triangular prism to the boundary crossing over `c` (between `u`
/// and `v`) and the undirected boundary edge `{v, w}` next to it.
///
/// New vertices `y, z` join `u` in a triangle and `x` joins `v, w`; the rungs
/// are `{u, v}`, `{y, x}` and `{z, w}`. The crossing moves to `z -- w` with
/// the same orientation relative to `u -- v`, so on the boundary the pair
/// `u, v, w` becomes `u, z, w` with `{u, z}` undirected.
pub fn insert_prism(g: &SawGraph, c: CreaseId, plain: (u32, u32)) -> Result<SawGraph, SawError> {
    let pc = g.boundary_position(c).ok_or(SawError::NotBoundaryEdge(c))?;
    let (t, h) = g.crossing(c).ok_or(SawError::NotBoundaryEdge(c))?;
    let key = ordered(plain.0, plain.1);
    let n = g.boundary.len();
    let pp = g
        .boundary
        .iter()
        .position(|s| s.crease.is_none() && ordered(s.from, s.to) == key)
        .ok_or(SawError::NotBoundaryEdges)?;
    let crossing_first = if (pc + 1) % n == pp {
        true
    } else if (pp + 1) % n == pc {
        false
    } else {
        return Err(SawError::EdgesNotAdjacent);
    };
    let (sc, sp) = (g.boundary[pc], g.boundary[pp]);
    // boundary order u, v, w or w, v, u
    let (u, v, w) = if crossing_first {
        (sc.from, sc.to, sp.to)
    } else {
        (sc.to, sc.from, sp.from)
    };
    if u == w || v == u {
        return Err(SawError::EdgesNotAdjacent);
    }
    let mut out = g.clone();
    let y = out.add_vertex(g.faces[&u]);
    let z = out.add_vertex(g.faces[&u]);
    let x = out.add_vertex(g.faces[&v]);
    for (a, b) in [(u, v), (u, y), (y, z), (u, z), (v, x), (x, w), (y, x), (z, w)] {
        out.add_edge(a, b);
    }
    if (t, h) == (u, v) {
        out.set_crossing(c, z, w);
    } else {
        out.set_crossing(c, w, z);
    }
    let first = pc.min(pp);
    let steps = if crossing_first {
        [
            BoundaryStep { from: u, to: z, crease: None },
            BoundaryStep { from: z, to: w, crease: Some(c) },
        ]
    } else {
        [
            BoundaryStep { from: w, to: z, crease: Some(c) },
            BoundaryStep { from: z, to: u, crease: None },
        ]
    };
    if first + 1 < n && pc.max(pp) == first + 1 {
        out.boundary.splice(first..=first + 1, steps);
    } else {
        // the pair wraps around the end of the walk
        out.boundary.pop();
        out.boundary.remove(0);
        out.boundary.push(steps[0]);
        out.boundary.insert(0, steps[1]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{count_colorings, enumerate_colorings};
    use crate::saw::{deg4_saw, Deg4Kind};

    #[test]
    fn triangle_reverses_and_keeps_count() {
        let g = deg4_saw(Deg4Kind::BirdsFoot, 0).unwrap();
        for &c in g.crossings.keys() {
            let h = insert_triangle(&g, c).unwrap();
            assert_eq!(count_colorings(&h), count_colorings(&g));
            assert_eq!(h.check_boundary(), Ok(()));
            let (t, _) = g.crossing(c).unwrap();
            assert_eq!(h.crossing(c).unwrap().1, t);
        }
        assert_eq!(insert_triangle(&g, 99), Err(SawError::NotBoundaryEdge(99)));
    }

    #[test]
    fn prism_swaps_and_keeps_count() {
        // the all-equal graph ends its walk with an undirected step
        let g = deg4_saw(Deg4Kind::AllEqual, 0).unwrap();
        let n = g.boundary.len();
        let plain = g.boundary[n - 1];
        assert!(plain.crease.is_none());
        for c in [g.boundary[n - 2].crease.unwrap(), g.boundary[0].crease.unwrap()] {
            let h = insert_prism(&g, c, (plain.from, plain.to)).unwrap();
            assert_eq!(count_colorings(&h), count_colorings(&g));
            assert_eq!(h.check_boundary(), Ok(()));
            assert_eq!(h.vertex_count(), g.vertex_count() + 3);
        }
        let middle = g.boundary[1].crease.unwrap();
        assert_eq!(insert_prism(&g, middle, (plain.from, plain.to)), Err(SawError::EdgesNotAdjacent));
    }

    #[test]
    fn prism_colors_are_forced() {
        let g = deg4_saw(Deg4Kind::AllEqual, 0).unwrap();
        let n = g.boundary.len();
        let plain = g.boundary[n - 1];
        let c = g.boundary[n - 2].crease.unwrap();
        let h = insert_prism(&g, c, (plain.from, plain.to)).unwrap();
        let old: Vec<u32> = g.faces.keys().copied().collect();
        let all = enumerate_colorings(&h, 1000);
        let mut seen = std::collections::BTreeSet::new();
        for s in &all.colorings {
            let restricted: Vec<u8> = old.iter().map(|v| s[v]).collect();
            assert!(seen.insert(restricted), "prism vertices must be determined by the rest");
        }
    }
}
