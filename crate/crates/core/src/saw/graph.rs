//! The SAW graph data structure.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::CreaseId;

pub type SawId = u32;

/// One step of the counterclockwise walk around the outer face.
///
/// `crease` is set when the step is the crossing edge over that crease; the
/// crossing's own direction is stored separately in [`SawGraph::crossings`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryStep {
    pub from: SawId,
    pub to: SawId,
    pub crease: Option<CreaseId>,
}

/// A graph whose pre-colored proper 3-colorings encode MV assignments.
///
/// `faces` places every vertex in a face of the crease pattern. For graphs of
/// a single vertex the face is named by the crease that starts the sector
/// counterclockwise; for whole patterns it is the pattern's face id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SawGraph {
    pub faces: BTreeMap<SawId, usize>,
    /// Undirected edges with `a < b`. Crossing endpoints are adjacent too,
    /// whether or not the pair is repeated here.
    pub edges: BTreeSet<(SawId, SawId)>,
    /// Crease to `(tail, head)`.
    pub crossings: BTreeMap<CreaseId, (SawId, SawId)>,
    pub root: SawId,
    /// Counterclockwise outer walk; empty when not tracked.
    pub boundary: Vec<BoundaryStep>,
}

pub(crate) fn ordered(a: SawId, b: SawId) -> (SawId, SawId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl SawGraph {
    pub fn vertex_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = SawId> + '_ {
        self.faces.keys().copied()
    }

    pub fn face_of(&self, v: SawId) -> Option<usize> {
        self.faces.get(&v).copied()
    }

    pub fn crossing(&self, c: CreaseId) -> Option<(SawId, SawId)> {
        self.crossings.get(&c).copied()
    }

    /// Every adjacent pair, once, with `a < b`.
    pub fn underlying_edges(&self) -> BTreeSet<(SawId, SawId)> {
        let mut all = self.edges.clone();
        for &(t, h) in self.crossings.values() {
            all.insert(ordered(t, h));
        }
        all
    }

    /// Neighbour lists keyed by vertex id.
    pub fn neighbours(&self) -> BTreeMap<SawId, Vec<SawId>> {
        let mut adj: BTreeMap<SawId, Vec<SawId>> = self.faces.keys().map(|&v| (v, Vec::new())).collect();
        for (a, b) in self.underlying_edges() {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.neighbours();
        let Some(&start) = adj.keys().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[&u] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == adj.len()
    }

    pub fn with_root(&self, root: SawId) -> SawGraph {
        assert!(self.faces.contains_key(&root), "root must be a vertex");
        SawGraph {
            root,
            ..self.clone()
        }
    }

    pub fn next_id(&self) -> SawId {
        self.faces.keys().next_back().map_or(0, |v| v + 1)
    }

    pub fn add_vertex(&mut self, face: usize) -> SawId {
        let id = self.next_id();
        self.faces.insert(id, face);
        id
    }

    pub fn add_edge(&mut self, a: SawId, b: SawId) {
        assert_ne!(a, b, "self loop");
        self.edges.insert(ordered(a, b));
    }

    pub fn set_crossing(&mut self, c: CreaseId, tail: SawId, head: SawId) {
        assert_ne!(tail, head, "self loop");
        self.crossings.insert(c, (tail, head));
    }

    /// Reverse the crossing over `c`.
    pub fn flip_crossing(&mut self, c: CreaseId) {
        if let Some(e) = self.crossings.get_mut(&c) {
            *e = (e.1, e.0);
        }
    }

    /// Position of the boundary step crossing `c`.
    pub fn boundary_position(&self, c: CreaseId) -> Option<usize> {
        self.boundary.iter().position(|s| s.crease == Some(c))
    }

    /// Checks that the walk is closed and its crossing steps agree with
    /// `crossings` and `edges`.
    pub fn check_boundary(&self) -> Result<(), String> {
        let n = self.boundary.len();
        for (i, s) in self.boundary.iter().enumerate() {
            let next = &self.boundary[(i + 1) % n];
            if s.to != next.from {
                return Err(format!("boundary step {i} ends at {} but step {} starts at {}", s.to, (i + 1) % n, next.from));
            }
            match s.crease {
                Some(c) => match self.crossings.get(&c) {
                    Some(&(t, h)) if ordered(t, h) == ordered(s.from, s.to) => {}
                    _ => return Err(format!("boundary step {i} does not match the crossing over crease {c}")),
                },
                None => {
                    if !self.edges.contains(&ordered(s.from, s.to)) {
                        return Err(format!("boundary step {i} ({}, {}) is not an edge", s.from, s.to));
                    }
                }
            }
        }
        Ok(())
    }

    /// Renumber vertices `0..n` in id order.
    pub fn compacted(&self) -> SawGraph {
        let map: BTreeMap<SawId, SawId> = self.faces.keys().enumerate().map(|(i, &v)| (v, i as SawId)).collect();
        self.relabelled(&map)
    }

    pub(crate) fn relabelled(&self, map: &BTreeMap<SawId, SawId>) -> SawGraph {
        let m = |v: SawId| map[&v];
        let mut edges = BTreeSet::new();
        for &(a, b) in &self.edges {
            if m(a) != m(b) {
                edges.insert(ordered(m(a), m(b)));
            }
        }
        SawGraph {
            faces: self.faces.iter().map(|(&v, &f)| (m(v), f)).collect(),
            edges,
            crossings: self.crossings.iter().map(|(&c, &(t, h))| (c, (m(t), m(h)))).collect(),
            root: m(self.root),
            boundary: self
                .boundary
                .iter()
                .map(|s| BoundaryStep {
                    from: m(s.from),
                    to: m(s.to),
                    crease: s.crease,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let mut g = SawGraph::default();
        let a = g.add_vertex(0);
        let b = g.add_vertex(1);
        let c = g.add_vertex(2);
        g.set_crossing(7, a, b);
        g.add_edge(c, b);
        assert_eq!(g.underlying_edges().len(), 2);
        assert!(g.is_connected());
        g.flip_crossing(7);
        assert_eq!(g.crossing(7), Some((b, a)));
        g.boundary = vec![
            BoundaryStep { from: a, to: b, crease: Some(7) },
            BoundaryStep { from: b, to: a, crease: Some(7) },
        ];
        assert!(g.check_boundary().is_ok());
        g.boundary[1].crease = None;
        assert!(g.check_boundary().is_err());
    }
}
