//! The degree-4 catalog and the baby gadgets for minimal runs.

use crate::cone::ConeVertex;
use crate::saw::graph::{SawGraph, SawId};
use crate::saw::single::single_vertex_saw_variants;
use crate::saw::SawError;
use crate::{CreaseId, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Deg4Kind {
    BirdsFoot,
    Blb,
    AllEqual,
}

impl Deg4Kind {
    /// A flat representative cone of the kind.
    pub fn cone(self) -> ConeVertex<Rational> {
        let a: &[i64] = match self {
            Deg4Kind::BirdsFoot => &[60, 60, 120, 120],
            Deg4Kind::Blb => &[90, 45, 90, 135],
            Deg4Kind::AllEqual => &[90, 90, 90, 90],
        };
        ConeVertex::from_angles(a.iter().map(|&x| Rational::from_int(x)).collect())
    }
}

/// SAW graph of a degree-4 vertex under one of its legal orientation sets.
pub fn deg4_saw(kind: Deg4Kind, variant: usize) -> Result<SawGraph, SawError> {
    let svs = single_vertex_saw_variants(&kind.cone())?;
    svs.variant(variant).ok_or(SawError::UnknownVariant {
        variant,
        available: svs.variant_count(),
    })
}

/// A gadget with the two terminals through which it is spliced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetFragment {
    pub graph: SawGraph,
    pub terminals: (SawId, SawId),
}

/// Adds the path `w0 -> w1 -> ... -> w_{j+1}` over `creases` (one per step)
/// with the interior vertices that force `s(w0) = s(w_{j+1})`. `faces[k]` is
/// the placement of `w_{k+1}`. Returns the path.
pub(crate) fn add_odd_gadget(g: &mut SawGraph, w0: SawId, creases: &[CreaseId], faces: &[usize]) -> Vec<SawId> {
    let j = creases.len() - 1;
    assert!(j == 1 || j == 3);
    let mut path = vec![w0];
    for k in 0..=j {
        let w = g.add_vertex(faces[k]);
        g.set_crossing(creases[k], path[k], w);
        path.push(w);
    }
    let hub = g.add_vertex(faces[0]);
    if j == 1 {
        for &w in &path {
            g.add_edge(hub, w);
        }
    } else {
        g.add_edge(path[0], hub);
        g.add_edge(path[1], hub);
        g.add_edge(path[4], hub);
        g.add_edge(path[1], path[4]);
    }
    path
}

/// Adds the path `w0 -> w1 -> w2 -> w3` over `creases` plus the chord `{w0, w3}`.
pub(crate) fn add_even_gadget(g: &mut SawGraph, w0: SawId, w3: SawId, creases: &[CreaseId], faces: &[usize]) -> [SawId; 4] {
    let w1 = g.add_vertex(faces[0]);
    let w2 = g.add_vertex(faces[1]);
    g.set_crossing(creases[0], w0, w1);
    g.set_crossing(creases[1], w1, w2);
    g.set_crossing(creases[2], w2, w3);
    g.add_edge(w0, w3);
    [w0, w1, w2, w3]
}

/// The gadget for a minimal run of `j` equal angles, crossing creases
/// `1..=j+1`; sector `k` lies between creases `k` and `k + 1`.
pub fn baby_gadget(j: usize) -> Result<GadgetFragment, SawError> {
    let creases: Vec<CreaseId> = (1..=j as CreaseId + 1).collect();
    let faces: Vec<usize> = (1..=j + 1).collect();
    let mut g = SawGraph::default();
    let w0 = g.add_vertex(0);
    let terminals = match j {
        1 | 3 => {
            let path = add_odd_gadget(&mut g, w0, &creases, &faces);
            (w0, *path.last().unwrap())
        }
        2 => {
            let w3 = g.add_vertex(3);
            add_even_gadget(&mut g, w0, w3, &creases, &faces);
            (w0, w3)
        }
        _ => return Err(SawError::UnsupportedJ(j)),
    };
    g.root = w0;
    Ok(GadgetFragment { graph: g, terminals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::count_colorings;
    use crate::single_vertex::count_single_vertex_mv;
    use crate::Count;

    #[test]
    fn degree_four_catalog() {
        for (kind, want) in [(Deg4Kind::BirdsFoot, 6u32), (Deg4Kind::Blb, 4), (Deg4Kind::AllEqual, 8)] {
            assert_eq!(count_single_vertex_mv(&kind.cone()).unwrap(), Count::from(want));
            let g = deg4_saw(kind, 0).unwrap();
            assert_eq!(count_colorings(&g), Count::from(want), "{kind:?}");
            assert_eq!(g.crossings.len(), 4);
        }
        let n = single_vertex_saw_variants(&Deg4Kind::AllEqual.cone()).unwrap().variant_count();
        assert!(matches!(deg4_saw(Deg4Kind::AllEqual, n), Err(SawError::UnknownVariant { .. })));
    }

    #[test]
    fn baby_gadget_counts() {
        let want = [(1, 2u32), (2, 6), (3, 6)];
        for (j, n) in want {
            let f = baby_gadget(j).unwrap();
            assert_eq!(count_colorings(&f.graph), Count::from(n), "j = {j}");
            assert_eq!(f.graph.crossings.len(), j + 1);
        }
        assert_eq!(baby_gadget(4), Err(SawError::UnsupportedJ(4)));
    }

    #[test]
    fn odd_gadgets_force_equal_terminals() {
        for j in [1, 3] {
            let f = baby_gadget(j).unwrap();
            let all = crate::coloring::enumerate_colorings(&f.graph, 100);
            let (a, b) = f.terminals;
            assert!(all.colorings.iter().all(|s| s[&a] == s[&b]));
        }
    }
}
