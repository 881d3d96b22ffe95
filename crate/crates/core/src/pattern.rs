//! Crease patterns as planar straight-line graphs with derived faces.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::cone::ConeVertex;
use crate::geometry::{
    cmp_direction, direction_f64, exact_direction, in_polygon, on_segment, segments_conflict,
    signed_area2, Point,
};
use crate::scalar::Scalar;
use crate::{CreaseId, FaceId, VertexId};

/// Declared angles may differ from the drawn geometry by at most this many
/// degrees; coordinates of irrational-angle patterns are approximations.
const DECLARED_ANGLE_SLACK_DEG: f64 = 0.05;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("creases {0} and {1} intersect away from a shared endpoint")]
    CrossingCreases(String, String),
    #[error("interior vertex {0} has odd degree {1}")]
    OddDegreeInteriorVertex(VertexId, usize),
    #[error("crease {crease} references undeclared vertex {vertex}")]
    DanglingCrease { crease: CreaseId, vertex: VertexId },
    #[error("duplicate {0} id {1}")]
    DuplicateId(&'static str, u32),
    #[error("crease {0} has identical endpoints")]
    DegenerateCrease(CreaseId),
    #[error("vertex {0} lies outside the paper region")]
    VertexOutsideRegion(VertexId),
    #[error("paper region needs at least three non-collinear corners")]
    DegenerateRegion,
    #[error("interior vertex {0} has no creases")]
    IsolatedVertex(VertexId),
    #[error("crease graph is not connected to the paper boundary")]
    Disconnected,
    #[error("declared angles at vertex {vertex}: {reason}")]
    BadAngles { vertex: VertexId, reason: String },
    #[error("vertex {0} is not an interior vertex")]
    NotInteriorVertex(VertexId),
    #[error("vertex {0} has non-rational sector angles and no declared angle list")]
    MissingAngles(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex<S> {
    pub id: VertexId,
    pub pos: Point<S>,
    pub on_boundary: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Crease {
    pub id: CreaseId,
    pub a: VertexId,
    pub b: VertexId,
}

/// Side of a face: either a crease or a piece of the paper boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeRef {
    Crease(CreaseId),
    Boundary(usize),
}

/// A bounded face, walked counterclockwise. `corners[i]` is the start of `sides[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Face<S> {
    pub id: FaceId,
    pub corners: Vec<Point<S>>,
    pub sides: Vec<EdgeRef>,
}

impl<S> Face<S> {
    pub fn creases(&self) -> impl Iterator<Item = CreaseId> + '_ {
        self.sides.iter().filter_map(|s| match s {
            EdgeRef::Crease(c) => Some(*c),
            EdgeRef::Boundary(_) => None,
        })
    }
}

/// Raw input to [`CreasePattern::build`].
#[derive(Clone, Debug)]
pub struct PatternInput<S> {
    pub vertices: Vec<(VertexId, Point<S>)>,
    pub creases: Vec<Crease>,
    pub region: Vec<Point<S>>,
    /// Sector angles in degrees, counterclockwise starting at the lowest crease id.
    pub angles: BTreeMap<VertexId, Vec<S>>,
}

impl<S> Default for PatternInput<S> {
    fn default() -> Self {
        PatternInput {
            vertices: Vec::new(),
            creases: Vec::new(),
            region: Vec::new(),
            angles: BTreeMap::new(),
        }
    }
}

/// Incidence of a crease at a vertex, in counterclockwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Spoke {
    pub crease: CreaseId,
    pub other: VertexId,
}

#[derive(Clone, Debug)]
pub struct CreasePattern<S> {
    vertices: Vec<Vertex<S>>,
    creases: Vec<Crease>,
    region: Vec<Point<S>>,
    angles: BTreeMap<VertexId, Vec<S>>,
    faces: Vec<Face<S>>,
    /// (left, right) face of each crease oriented `a -> b`.
    crease_faces: BTreeMap<CreaseId, (FaceId, FaceId)>,
    spokes: BTreeMap<VertexId, Vec<Spoke>>,
    /// Face of sector `i` (between spokes `i` and `i + 1`) around each vertex.
    sectors: BTreeMap<VertexId, Vec<FaceId>>,
    boundary_segments: usize,
    node_count: usize,
}

/// Temporary node for the face walk: declared vertices then leftover corners.
struct Graph<S> {
    points: Vec<Point<S>>,
    /// half-edges as (from, to, edge)
    half: Vec<(usize, usize, EdgeRef)>,
}

impl<S: Scalar> CreasePattern<S> {
    pub fn build(input: PatternInput<S>) -> Result<Self, PatternError> {
        let PatternInput {
            mut vertices,
            mut creases,
            region,
            angles,
        } = input;
        vertices.sort_by_key(|v| v.0);
        creases.sort();
        for w in vertices.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(PatternError::DuplicateId("vertex", w[0].0));
            }
        }
        for w in creases.windows(2) {
            if w[0].id == w[1].id {
                return Err(PatternError::DuplicateId("crease", w[0].id));
            }
        }

        let mut region = region;
        if region.len() < 3 || signed_area2(&region).is_zero() {
            return Err(PatternError::DegenerateRegion);
        }
        if signed_area2(&region).is_negative() {
            region.reverse();
        }

        let index: BTreeMap<VertexId, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.0, i)).collect();
        for c in &creases {
            for v in [c.a, c.b] {
                if !index.contains_key(&v) {
                    return Err(PatternError::DanglingCrease {
                        crease: c.id,
                        vertex: v,
                    });
                }
            }
            if c.a == c.b || vertices[index[&c.a]].1 == vertices[index[&c.b]].1 {
                return Err(PatternError::DegenerateCrease(c.id));
            }
        }

        let nr = region.len();
        let mut verts = Vec::with_capacity(vertices.len());
        for (id, pos) in &vertices {
            if !in_polygon(pos, &region) {
                return Err(PatternError::VertexOutsideRegion(*id));
            }
            let on_boundary = (0..nr).any(|i| on_segment(pos, &region[i], &region[(i + 1) % nr]));
            verts.push(Vertex {
                id: *id,
                pos: pos.clone(),
                on_boundary,
            });
        }

        // Nodes: every declared vertex, plus region corners not already declared.
        let mut points: Vec<Point<S>> = verts.iter().map(|v| v.pos.clone()).collect();
        let mut corner_node = Vec::with_capacity(nr);
        for c in &region {
            match points.iter().position(|p| p == c) {
                Some(i) => corner_node.push(i),
                None => {
                    points.push(c.clone());
                    corner_node.push(points.len() - 1);
                }
            }
        }

        // Split region sides at every node lying on them.
        let mut boundary: Vec<(usize, usize)> = Vec::new();
        for i in 0..nr {
            let (a, b) = (&region[i], &region[(i + 1) % nr]);
            let (dx, dy) = b.sub(a);
            let mut on: Vec<(S, usize)> = points
                .iter()
                .enumerate()
                .filter(|(_, p)| on_segment(p, a, b))
                .map(|(k, p)| {
                    let (px, py) = p.sub(a);
                    (px * dx.clone() + py * dy.clone(), k)
                })
                .collect();
            on.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("ordered scalar"));
            for w in on.windows(2) {
                boundary.push((w[0].1, w[1].1));
            }
        }
        let _ = corner_node;

        // Planarity.
        let seg = |c: &Crease| (&verts[index[&c.a]].pos, &verts[index[&c.b]].pos);
        for (i, c1) in creases.iter().enumerate() {
            let (p0, p1) = seg(c1);
            for c2 in &creases[i + 1..] {
                let (q0, q1) = seg(c2);
                if segments_conflict(p0, p1, q0, q1) {
                    return Err(PatternError::CrossingCreases(
                        format!("{}", c1.id),
                        format!("{}", c2.id),
                    ));
                }
            }
            for (k, (a, b)) in boundary.iter().enumerate() {
                if segments_conflict(p0, p1, &points[*a], &points[*b]) {
                    return Err(PatternError::CrossingCreases(
                        format!("{}", c1.id),
                        format!("boundary segment {k}"),
                    ));
                }
            }
        }

        let mut degree: BTreeMap<VertexId, usize> = BTreeMap::new();
        for c in &creases {
            *degree.entry(c.a).or_default() += 1;
            *degree.entry(c.b).or_default() += 1;
        }
        for v in &verts {
            if v.on_boundary {
                continue;
            }
            match degree.get(&v.id).copied().unwrap_or(0) {
                0 => return Err(PatternError::IsolatedVertex(v.id)),
                d if d % 2 == 1 => return Err(PatternError::OddDegreeInteriorVertex(v.id, d)),
                _ => {}
            }
        }

        let mut half = Vec::new();
        for c in &creases {
            let (a, b) = (index[&c.a], index[&c.b]);
            half.push((a, b, EdgeRef::Crease(c.id)));
            half.push((b, a, EdgeRef::Crease(c.id)));
        }
        for (k, &(a, b)) in boundary.iter().enumerate() {
            half.push((a, b, EdgeRef::Boundary(k)));
            half.push((b, a, EdgeRef::Boundary(k)));
        }
        let graph = Graph { points, half };
        if !graph.connected() {
            return Err(PatternError::Disconnected);
        }
        let node_count = graph.points.len();
        let walk = graph.faces();

        let mut faces = Vec::new();
        let mut face_of_half = vec![usize::MAX; graph.half.len()];
        for cycle in &walk {
            let corners: Vec<Point<S>> = cycle.iter().map(|&h| graph.points[graph.half[h].0].clone()).collect();
            if !signed_area2(&corners).is_positive() {
                continue; // outer face
            }
            let id = faces.len();
            for &h in cycle {
                face_of_half[h] = id;
            }
            faces.push(Face {
                id,
                corners,
                sides: cycle.iter().map(|&h| graph.half[h].2).collect(),
            });
        }

        let mut crease_faces = BTreeMap::new();
        for (k, c) in creases.iter().enumerate() {
            let left = face_of_half[2 * k];
            let right = face_of_half[2 * k + 1];
            debug_assert!(left != usize::MAX && right != usize::MAX);
            crease_faces.insert(c.id, (left, right));
        }

        let mut spokes = BTreeMap::new();
        let mut sectors = BTreeMap::new();
        for (vi, v) in verts.iter().enumerate() {
            let mut out: Vec<(usize, CreaseId, VertexId)> = Vec::new();
            for (h, &(from, to, e)) in graph.half.iter().enumerate() {
                if from == vi {
                    if let EdgeRef::Crease(c) = e {
                        out.push((h, c, verts[to].id));
                    }
                }
            }
            if out.is_empty() {
                continue;
            }
            out.sort_by(|x, y| {
                cmp_direction(
                    &graph.points[graph.half[x.0].1].sub(&v.pos),
                    &graph.points[graph.half[y.0].1].sub(&v.pos),
                )
            });
            let start = (0..out.len()).min_by_key(|&i| out[i].1).unwrap();
            out.rotate_left(start);
            if !v.on_boundary {
                sectors.insert(v.id, out.iter().map(|o| face_of_half[o.0]).collect::<Vec<_>>());
            }
            spokes.insert(
                v.id,
                out.iter()
                    .map(|o| Spoke {
                        crease: o.1,
                        other: o.2,
                    })
                    .collect::<Vec<_>>(),
            );
        }

        let cp = CreasePattern {
            vertices: verts,
            creases,
            region,
            angles,
            faces,
            crease_faces,
            spokes,
            sectors,
            boundary_segments: boundary.len(),
            node_count,
        };
        cp.check_declared_angles()?;
        Ok(cp)
    }

    fn check_declared_angles(&self) -> Result<(), PatternError> {
        for (&v, list) in &self.angles {
            let vert = self.vertex(v).ok_or(PatternError::UnknownVertex(v))?;
            if vert.on_boundary {
                return Err(PatternError::BadAngles {
                    vertex: v,
                    reason: "angles may only be declared for interior vertices".into(),
                });
            }
            let spokes = &self.spokes[&v];
            let bad = |reason: String| PatternError::BadAngles { vertex: v, reason };
            if list.len() != spokes.len() {
                return Err(bad(format!("{} angles for {} creases", list.len(), spokes.len())));
            }
            let mut total = S::zero();
            for a in list {
                if !a.is_positive() || *a >= S::full_turn() {
                    return Err(bad(format!("angle {a:?} outside (0, 360)")));
                }
                total = total + a.clone();
            }
            if total != S::full_turn() {
                return Err(bad(format!("angles sum to {total:?}, not 360")));
            }
            let drawn = self.drawn_angles_f64(v);
            for (i, (a, d)) in list.iter().zip(&drawn).enumerate() {
                if (a.to_f64_lossy() - d).abs() > DECLARED_ANGLE_SLACK_DEG {
                    return Err(bad(format!(
                        "sector {i} declared {:.4} but drawn {:.4}",
                        a.to_f64_lossy(),
                        d
                    )));
                }
            }
        }
        Ok(())
    }

    fn drawn_angles_f64(&self, v: VertexId) -> Vec<f64> {
        let dirs: Vec<f64> = self.spokes[&v]
            .iter()
            .map(|s| direction_f64(&self.vertex(s.other).unwrap().pos.sub(&self.vertex(v).unwrap().pos)))
            .collect();
        let n = dirs.len();
        (0..n)
            .map(|i| {
                let d = dirs[(i + 1) % n] - dirs[i];
                if d <= 0.0 {
                    d + 360.0
                } else {
                    d
                }
            })
            .collect()
    }

    /// The input this pattern was built from (region counterclockwise).
    pub fn to_input(&self) -> PatternInput<S> {
        PatternInput {
            vertices: self.vertices.iter().map(|v| (v.id, v.pos.clone())).collect(),
            creases: self.creases.clone(),
            region: self.region.clone(),
            angles: self.angles.clone(),
        }
    }

    pub fn vertices(&self) -> &[Vertex<S>] {
        &self.vertices
    }

    pub fn vertex(&self, id: VertexId) -> Option<&Vertex<S>> {
        self.vertices
            .binary_search_by_key(&id, |v| v.id)
            .ok()
            .map(|i| &self.vertices[i])
    }

    pub fn creases(&self) -> &[Crease] {
        &self.creases
    }

    pub fn crease(&self, id: CreaseId) -> Option<&Crease> {
        self.creases
            .binary_search_by_key(&id, |c| c.id)
            .ok()
            .map(|i| &self.creases[i])
    }

    pub fn crease_ids(&self) -> Vec<CreaseId> {
        self.creases.iter().map(|c| c.id).collect()
    }

    pub fn region(&self) -> &[Point<S>] {
        &self.region
    }

    pub fn declared_angles(&self) -> &BTreeMap<VertexId, Vec<S>> {
        &self.angles
    }

    pub fn faces(&self) -> &[Face<S>] {
        &self.faces
    }

    /// (left, right) faces of a crease oriented from `a` to `b`.
    pub fn crease_faces(&self, c: CreaseId) -> Option<(FaceId, FaceId)> {
        self.crease_faces.get(&c).copied()
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = &Vertex<S>> {
        self.vertices.iter().filter(|v| !v.on_boundary)
    }

    pub fn is_interior(&self, v: VertexId) -> bool {
        self.vertex(v).is_some_and(|x| !x.on_boundary)
    }

    /// Counterclockwise crease incidences at `v`, starting at the lowest crease id.
    pub fn spokes(&self, v: VertexId) -> &[Spoke] {
        self.spokes.get(&v).map(|s| s.as_slice()).unwrap_or(&[])
    }

    /// Face of each sector around interior vertex `v`, aligned with [`Self::cone_at`].
    pub fn sector_faces(&self, v: VertexId) -> Option<&[FaceId]> {
        self.sectors.get(&v).map(|s| s.as_slice())
    }

    /// Nodes in the planar graph including region corners (used for Euler checks).
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn boundary_segment_count(&self) -> usize {
        self.boundary_segments
    }

    /// Creases with both endpoints on the paper boundary.
    pub fn free_creases(&self) -> Vec<CreaseId> {
        self.creases
            .iter()
            .filter(|c| !self.is_interior(c.a) && !self.is_interior(c.b))
            .map(|c| c.id)
            .collect()
    }

    /// The cyclic angle/crease sequence around an interior vertex.
    pub fn cone_at(&self, v: VertexId) -> Result<ConeVertex<S>, PatternError> {
        let vert = self.vertex(v).ok_or(PatternError::UnknownVertex(v))?;
        if vert.on_boundary {
            return Err(PatternError::NotInteriorVertex(v));
        }
        let spokes = &self.spokes[&v];
        let creases: Vec<CreaseId> = spokes.iter().map(|s| s.crease).collect();
        if let Some(list) = self.angles.get(&v) {
            return Ok(ConeVertex::new(list.clone(), creases));
        }
        let mut dirs = Vec::with_capacity(spokes.len());
        for s in spokes {
            let d = self.vertex(s.other).unwrap().pos.sub(&vert.pos);
            dirs.push(exact_direction(&d).ok_or(PatternError::MissingAngles(v))?);
        }
        let n = dirs.len();
        let angles = (0..n)
            .map(|i| {
                let mut d = dirs[(i + 1) % n] - dirs[i];
                if d <= 0 {
                    d += 360;
                }
                S::degrees(d)
            })
            .collect();
        Ok(ConeVertex::new(angles, creases))
    }
}

impl<S: Scalar> Graph<S> {
    fn connected(&self) -> bool {
        let n = self.points.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b, _) in &self.half {
            adj[a].push(b);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Face cycles of half-edges, each with the face on its left.
    fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.points.len();
        let mut around: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (h, &(from, _, _)) in self.half.iter().enumerate() {
            around[from].push(h);
        }
        for (u, list) in around.iter_mut().enumerate() {
            list.sort_by(|&x, &y| {
                cmp_direction(
                    &self.points[self.half[x].1].sub(&self.points[u]),
                    &self.points[self.half[y].1].sub(&self.points[u]),
                )
            });
        }
        let twin = |h: usize| h ^ 1;
        let mut pos_in_around = vec![0usize; self.half.len()];
        for list in &around {
            for (i, &h) in list.iter().enumerate() {
                pos_in_around[h] = i;
            }
        }
        // next(u->v) = v -> (neighbour preceding u in ccw order around v)
        let next = |h: usize| {
            let t = twin(h);
            let v = self.half[h].1;
            let list = &around[v];
            let i = pos_in_around[t];
            list[(i + list.len() - 1) % list.len()]
        };
        let mut used = BTreeSet::new();
        let mut cycles = Vec::new();
        for h0 in 0..self.half.len() {
            if used.contains(&h0) {
                continue;
            }
            let mut cyc = Vec::new();
            let mut h = h0;
            loop {
                used.insert(h);
                cyc.push(h);
                h = next(h);
                if h == h0 {
                    break;
                }
            }
            cycles.push(cyc);
        }
        cycles
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn pt(x: i64, y: i64) -> Point<Rational> {
        Point::new(r(x), r(y))
    }

    fn square(side: i64) -> Vec<Point<Rational>> {
        vec![pt(0, 0), pt(side, 0), pt(side, side), pt(0, side)]
    }

    pub(crate) fn cross_pattern() -> CreasePattern<Rational> {
        let input = PatternInput {
            vertices: vec![
                (0, pt(1, 1)),
                (1, pt(2, 1)),
                (2, pt(1, 2)),
                (3, pt(0, 1)),
                (4, pt(1, 0)),
            ],
            creases: vec![
                Crease { id: 0, a: 0, b: 1 },
                Crease { id: 1, a: 0, b: 2 },
                Crease { id: 2, a: 0, b: 3 },
                Crease { id: 3, a: 0, b: 4 },
            ],
            region: square(2),
            angles: BTreeMap::new(),
        };
        CreasePattern::build(input).unwrap()
    }

    #[test]
    fn symmetric_cross() {
        let cp = cross_pattern();
        assert_eq!(cp.faces().len(), 4);
        assert_eq!(cp.interior_vertices().count(), 1);
        let cone = cp.cone_at(0).unwrap();
        assert_eq!(cone.angles, vec![r(90); 4]);
        assert_eq!(cone.creases, vec![0, 1, 2, 3]);
        assert_eq!(cone.cone_total(), r(360));
        // Euler with the outer face
        let v = cp.node_count() as i64;
        let e = (cp.creases().len() + cp.boundary_segment_count()) as i64;
        let f = cp.faces().len() as i64 + 1;
        assert_eq!(v - e + f, 2);
        // sector faces are distinct and match the crease sides
        let sec = cp.sector_faces(0).unwrap();
        let uniq: BTreeSet<_> = sec.iter().collect();
        assert_eq!(uniq.len(), 4);
        let (l, _) = cp.crease_faces(0).unwrap();
        assert_eq!(l, sec[0]);
    }

    #[test]
    fn empty_square_has_one_face() {
        let input = PatternInput {
            region: square(1),
            ..Default::default()
        };
        let cp = CreasePattern::build(input).unwrap();
        assert_eq!(cp.faces().len(), 1);
        assert_eq!(cp.interior_vertices().count(), 0);
    }

    #[test]
    fn rejects_bad_patterns() {
        let mut input = PatternInput {
            vertices: vec![(0, pt(0, 0)), (1, pt(2, 2)), (2, pt(0, 2)), (3, pt(2, 0))],
            creases: vec![Crease { id: 0, a: 0, b: 1 }, Crease { id: 1, a: 2, b: 3 }],
            region: square(2),
            angles: BTreeMap::new(),
        };
        assert!(matches!(
            CreasePattern::build(input.clone()),
            Err(PatternError::CrossingCreases(..))
        ));
        input.creases = vec![Crease { id: 0, a: 0, b: 9 }];
        assert_eq!(
            CreasePattern::build(input.clone()).unwrap_err(),
            PatternError::DanglingCrease { crease: 0, vertex: 9 }
        );
        // three creases at an interior point
        let input = PatternInput {
            vertices: vec![(0, pt(1, 1)), (1, pt(2, 1)), (2, pt(1, 2)), (3, pt(0, 1))],
            creases: vec![
                Crease { id: 0, a: 0, b: 1 },
                Crease { id: 1, a: 0, b: 2 },
                Crease { id: 2, a: 0, b: 3 },
            ],
            region: square(2),
            angles: BTreeMap::new(),
        };
        assert_eq!(
            CreasePattern::build(input).unwrap_err(),
            PatternError::OddDegreeInteriorVertex(0, 3)
        );
    }

    #[test]
    fn degree_two_straight_vertex() {
        let input = PatternInput {
            vertices: vec![(0, pt(1, 1)), (1, pt(2, 1)), (2, pt(0, 1))],
            creases: vec![Crease { id: 0, a: 0, b: 1 }, Crease { id: 1, a: 0, b: 2 }],
            region: square(2),
            angles: BTreeMap::new(),
        };
        let cp = CreasePattern::build(input).unwrap();
        assert_eq!(cp.cone_at(0).unwrap().angles, vec![r(180), r(180)]);
        assert_eq!(cp.cone_at(1).unwrap_err(), PatternError::NotInteriorVertex(1));
    }

    #[test]
    fn rotation_gives_cyclic_shift() {
        // same cross, crease ids permuted: output starts at the lowest id
        let input = PatternInput {
            vertices: vec![(0, pt(1, 1)), (1, pt(2, 1)), (2, pt(1, 2)), (3, pt(0, 1)), (4, pt(1, 0))],
            creases: vec![
                Crease { id: 7, a: 0, b: 1 },
                Crease { id: 4, a: 0, b: 2 },
                Crease { id: 5, a: 0, b: 3 },
                Crease { id: 6, a: 0, b: 4 },
            ],
            region: square(2),
            angles: BTreeMap::new(),
        };
        let cone = CreasePattern::build(input).unwrap().cone_at(0).unwrap();
        assert_eq!(cone.creases, vec![4, 5, 6, 7]);
    }

    #[test]
    fn declared_angles_are_checked_against_drawing() {
        let mut input = PatternInput {
            vertices: vec![(0, pt(1, 1)), (1, pt(2, 1)), (2, pt(1, 2)), (3, pt(0, 1)), (4, pt(1, 0))],
            creases: (0..4).map(|i| Crease { id: i, a: 0, b: i + 1 }).collect(),
            region: square(2),
            angles: BTreeMap::new(),
        };
        input.angles.insert(0, vec![r(80), r(100), r(90), r(90)]);
        assert!(matches!(
            CreasePattern::build(input.clone()),
            Err(PatternError::BadAngles { .. })
        ));
        input.angles.insert(0, vec![r(90); 4]);
        assert!(CreasePattern::build(input).is_ok());
    }
}
