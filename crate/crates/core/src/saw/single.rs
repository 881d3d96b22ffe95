//! SAW graphs of single vertices, built along the crimp recursion.

use std::collections::BTreeMap;

use crate::cone::ConeVertex;
use crate::saw::gadgets::{add_even_gadget, add_odd_gadget};
use crate::saw::graph::{BoundaryStep, SawGraph};
use crate::saw::SawError;
use crate::scalar::Scalar;
use crate::single_vertex::{crimp_trace, kawasaki_check};
use crate::CreaseId;

/// A single-vertex SAW graph with the crossing groups that may be reversed.
///
/// Reversing every crossing of one `odd_groups` entry keeps the graph a SAW
/// graph, and so does reversing an even number of `base_units` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleVertexSaw {
    pub graph: SawGraph,
    pub odd_groups: Vec<Vec<CreaseId>>,
    pub base_units: Vec<Vec<CreaseId>>,
}

#[derive(Clone, Copy, Debug)]
enum Group {
    Odd(usize),
    Base(usize),
}

impl SingleVertexSaw {
    pub fn variant_count(&self) -> usize {
        let b = self.base_units.len().max(1);
        (1 << (b - 1)) << self.odd_groups.len()
    }

    /// Variant 0 is the graph as built.
    pub fn variant(&self, k: usize) -> Option<SawGraph> {
        if k >= self.variant_count() {
            return None;
        }
        let b = self.base_units.len().max(1);
        let base_choices = 1usize << (b - 1);
        let (base_k, odd_mask) = (k % base_choices, k / base_choices);
        // the base_k-th subset of base units with even size
        let base_mask = (0usize..1 << self.base_units.len())
            .filter(|m| m.count_ones() % 2 == 0)
            .nth(base_k)
            .unwrap_or(0);
        let mut g = self.graph.clone();
        for (i, unit) in self.base_units.iter().enumerate() {
            if base_mask >> i & 1 == 1 {
                unit.iter().for_each(|&c| g.flip_crossing(c));
            }
        }
        for (i, grp) in self.odd_groups.iter().enumerate() {
            if odd_mask >> i & 1 == 1 {
                grp.iter().for_each(|&c| g.flip_crossing(c));
            }
        }
        Some(g)
    }

    pub fn variants(&self) -> impl Iterator<Item = SawGraph> + '_ {
        (0..self.variant_count()).filter_map(|k| self.variant(k))
    }
}

/// Default SAW graph of a vertex.
pub fn single_vertex_saw<S: Scalar>(cone: &ConeVertex<S>) -> Result<SawGraph, SawError> {
    Ok(single_vertex_saw_variants(cone)?.graph)
}

fn step(from: u32, to: u32, crease: Option<CreaseId>) -> BoundaryStep {
    BoundaryStep { from, to, crease }
}

/// SAW graph of a vertex whose recursion only meets runs of length at most
/// three and ends in an all-equal cone of degree 2 or 4.
///
/// Vertices are placed in sectors named by their starting crease.
pub fn single_vertex_saw_variants<S: Scalar>(cone: &ConeVertex<S>) -> Result<SingleVertexSaw, SawError> {
    if !kawasaki_check(cone) {
        return Err(SawError::KawasakiViolation);
    }
    let trace = crimp_trace(cone);
    if let Some(j) = trace.steps.iter().map(|(r, _)| r.j).max() {
        if j > 3 {
            return Err(SawError::NotThreeNice(j));
        }
    }
    let t = &trace.terminal;
    let mut g = SawGraph::default();
    let mut group_of: BTreeMap<CreaseId, Group> = BTreeMap::new();
    let mut odd_groups: Vec<Vec<CreaseId>> = Vec::new();
    let mut base_units: Vec<Vec<CreaseId>> = Vec::new();
    match t.degree() {
        2 => {
            let (a, b) = (t.creases[0], t.creases[1]);
            let p = g.add_vertex(a as usize);
            let q = g.add_vertex(b as usize);
            g.set_crossing(a, p, q);
            g.set_crossing(b, p, q);
            g.boundary = vec![step(p, q, Some(b)), step(q, p, Some(a))];
        }
        4 => {
            let c = &t.creases;
            let face = |i: usize| c[i] as usize;
            let b0 = g.add_vertex(face(0));
            let b1 = g.add_vertex(face(1));
            let b2 = g.add_vertex(face(2));
            let b3 = g.add_vertex(face(3));
            let b4 = g.add_vertex(face(0));
            let x = g.add_vertex(face(0));
            g.set_crossing(c[1], b0, b1);
            g.set_crossing(c[2], b1, b2);
            g.set_crossing(c[3], b2, b3);
            g.set_crossing(c[0], b3, b4);
            for (u, v) in [(b4, b0), (x, b0), (x, b2), (x, b4)] {
                g.add_edge(u, v);
            }
            g.boundary = vec![
                step(b0, b1, Some(c[1])),
                step(b1, b2, Some(c[2])),
                step(b2, b3, Some(c[3])),
                step(b3, b4, Some(c[0])),
                step(b4, b0, None),
            ];
        }
        d => return Err(SawError::AllEqualHighDegree(d)),
    }
    for &c in &t.creases {
        group_of.insert(c, Group::Base(base_units.len()));
        base_units.push(vec![c]);
    }

    // cones[i] is the cone before step i
    let mut cones = vec![cone.clone()];
    cones.extend(trace.steps.iter().map(|(_, c)| c.clone()));
    for (i, (run, _)) in trace.steps.iter().enumerate().rev() {
        let before = &cones[i];
        let n = before.degree();
        let j = run.j;
        let c = |k: isize| before.creases[((run.start as isize + k).rem_euclid(n as isize)) as usize];
        let run_creases: Vec<CreaseId> = (0..=j as isize).map(c).collect();
        if j % 2 == 1 {
            let exit = c(j as isize + 1);
            let pos = g.boundary_position(exit).expect("every crossing is on the boundary");
            let v = g.boundary[pos].from;
            debug_assert_eq!(g.face_of(v), Some(c(-1) as usize));
            let faces: Vec<usize> = run_creases.iter().map(|&x| x as usize).collect();
            let path = add_odd_gadget(&mut g, v, &run_creases, &faces);
            let last = *path.last().unwrap();
            let (t, h) = g.crossing(exit).unwrap();
            if t == v {
                g.set_crossing(exit, last, h);
            } else {
                g.set_crossing(exit, t, last);
            }
            g.boundary[pos].from = last;
            let steps: Vec<BoundaryStep> =
                (0..=j).map(|k| step(path[k], path[k + 1], Some(run_creases[k]))).collect();
            g.boundary.splice(pos..pos, steps);
            for &x in &run_creases {
                group_of.insert(x, Group::Odd(odd_groups.len()));
            }
            odd_groups.push(run_creases);
        } else {
            let survivor = c(0);
            let after = c(j as isize);
            for f in g.faces.values_mut() {
                if *f == survivor as usize {
                    *f = after as usize;
                }
            }
            let pos = g.boundary_position(survivor).expect("every crossing is on the boundary");
            let BoundaryStep { from: a, to: b, .. } = g.boundary[pos];
            let (t, _) = g.crossing(survivor).unwrap();
            let faces = [run_creases[0] as usize, run_creases[1] as usize];
            let [_, w1, w2, _] = add_even_gadget(&mut g, a, b, &run_creases, &faces);
            if t != a {
                for &x in &run_creases {
                    g.flip_crossing(x);
                }
            }
            g.boundary.splice(
                pos..=pos,
                [
                    step(a, w1, Some(run_creases[0])),
                    step(w1, w2, Some(run_creases[1])),
                    step(w2, b, Some(run_creases[2])),
                ],
            );
            let grp = group_of[&survivor];
            for &x in &run_creases[1..] {
                group_of.insert(x, grp);
                match grp {
                    Group::Odd(k) => odd_groups[k].push(x),
                    Group::Base(k) => base_units[k].push(x),
                }
            }
        }
    }
    g.root = 0;
    debug_assert_eq!(g.check_boundary(), Ok(()));
    Ok(SingleVertexSaw {
        graph: g,
        odd_groups,
        base_units,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{count_colorings, verify_bijection};
    use crate::generators::single_vertex;
    use crate::saw::tile;
    use crate::single_vertex::count_single_vertex_mv;
    use crate::Rational;

    fn cone(a: &[i64]) -> ConeVertex<Rational> {
        ConeVertex::from_angles(a.iter().map(|&x| Rational::from_int(x)).collect())
    }

    const SUPPORTED: &[&[i64]] = &[
        &[180, 180],
        &[60, 60, 120, 120],
        &[90, 45, 90, 135],
        &[90, 90, 90, 90],
        &[30, 30, 30, 70, 120, 80],
        &[45, 45, 90, 45, 45, 90],
        &[30, 30, 30, 40, 50, 60, 70, 50],
        &[100, 40, 40, 80, 40, 60],
    ];

    #[test]
    fn counts_match_the_recursion() {
        for a in SUPPORTED {
            let c = cone(a);
            let s = single_vertex_saw_variants(&c).unwrap();
            assert_eq!(s.graph.check_boundary(), Ok(()));
            for g in s.variants() {
                assert_eq!(count_colorings(&g), count_single_vertex_mv(&c).unwrap(), "{a:?}");
            }
        }
    }

    #[test]
    fn graphs_biject_with_assignments() {
        for a in SUPPORTED {
            let cp = single_vertex(&cone(a)).unwrap();
            let g = tile(&cp).unwrap();
            let r = verify_bijection(&cp, &g).unwrap();
            assert!(r.passed, "{a:?}: {:?}", r.counterexample);
        }
    }

    #[test]
    fn rejects_unsupported_vertices() {
        assert_eq!(single_vertex_saw(&cone(&[60; 6])), Err(SawError::AllEqualHighDegree(6)));
        assert_eq!(single_vertex_saw(&cone(&[90, 90, 45, 135])), Err(SawError::KawasakiViolation));
        let four_run = cone(&[20, 20, 20, 20, 100, 60, 40, 80]);
        assert_eq!(single_vertex_saw(&four_run), Err(SawError::NotThreeNice(4)));
    }
}
