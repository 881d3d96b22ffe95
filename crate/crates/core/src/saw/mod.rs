//! SAW graphs: gadgets, the single-vertex recursion, boundary surgery and
//! whole-pattern tiling.

mod gadgets;
mod graph;
mod merge;
mod single;
mod surgery;
mod tile;
mod waterbomb;

use std::collections::BTreeSet;

use thiserror::Error;

pub use gadgets::{baby_gadget, deg4_saw, Deg4Kind, GadgetFragment};
pub use graph::{BoundaryStep, SawGraph, SawId};
pub use single::{single_vertex_saw, single_vertex_saw_variants, SingleVertexSaw};
pub use surgery::{insert_prism, insert_triangle};
pub use merge::naive_window_merge;
pub use tile::{tile, tile_subset, tile_with_start};
pub use waterbomb::{is_waterbomb, split_waterbomb};

use crate::pattern::{CreasePattern, PatternError};
use crate::scalar::Scalar;
use crate::{CreaseId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SawError {
    #[error("variant {variant} is not one of the {available} legal orientation sets")]
    UnknownVariant { variant: usize, available: usize },
    #[error("no baby gadget for a run of {0} equal angles")]
    UnsupportedJ(usize),
    #[error("vertex is not flat-foldable (Kawasaki)")]
    KawasakiViolation,
    #[error("the crimp recursion meets a run of {0} equal angles; only runs up to 3 are supported")]
    NotThreeNice(usize),
    #[error("all-equal cone of degree {0} has no known SAW graph")]
    AllEqualHighDegree(usize),
    #[error("crease {0} has no crossing edge on the boundary")]
    NotBoundaryEdge(CreaseId),
    #[error("the crossing and the undirected edge are not adjacent on the boundary")]
    EdgesNotAdjacent,
    #[error("the undirected edge is not on the boundary")]
    NotBoundaryEdges,
    #[error("vertex {0} is not a splittable waterbomb vertex")]
    NotWaterbomb(VertexId),
    #[error("vertex {vertex} is unsupported: {reason}")]
    UnsupportedVertex { vertex: VertexId, reason: String },
    #[error("no clipping order attaches every interior vertex along a contiguous boundary arc")]
    DisconnectedInterior,
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// SAW graph of `cp`, splitting waterbomb vertices whose single-vertex graph
/// is unavailable into bird's feet first. Returns the pattern the graph
/// belongs to, which is `cp` itself unless a split happened.
pub fn build_saw<S: Scalar>(cp: &CreasePattern<S>) -> Result<(CreasePattern<S>, SawGraph), SawError> {
    let mut cur = cp.clone();
    loop {
        match tile(&cur) {
            Ok(g) => return Ok((cur, g)),
            Err(SawError::UnsupportedVertex { vertex, reason }) => {
                if is_waterbomb(&cur.cone_at(vertex)?).is_none() {
                    return Err(SawError::UnsupportedVertex { vertex, reason });
                }
                cur = split_waterbomb(&cur, vertex)?;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Structural conditions of a whole-pattern SAW graph: every face hosts a
/// vertex, every crease has exactly one crossing edge between its two faces,
/// no other crossings, and the graph is connected.
pub fn check_saw_invariants<S: Scalar>(cp: &CreasePattern<S>, g: &SawGraph) -> Result<(), String> {
    let nf = cp.faces().len();
    if let Some((v, f)) = g.faces.iter().find(|(_, &f)| f >= nf) {
        return Err(format!("vertex {v} placed in unknown face {f}"));
    }
    let hosted: BTreeSet<usize> = g.faces.values().copied().collect();
    if let Some(f) = (0..nf).find(|f| !hosted.contains(f)) {
        return Err(format!("face {f} hosts no vertex"));
    }
    let crossed: BTreeSet<CreaseId> = g.crossings.keys().copied().collect();
    let creases: BTreeSet<CreaseId> = cp.crease_ids().into_iter().collect();
    if crossed != creases {
        return Err("crossing edges do not match the creases one to one".into());
    }
    for (&c, &(t, h)) in &g.crossings {
        let (l, r) = cp.crease_faces(c).expect("crease exists");
        let pair = (g.faces[&t], g.faces[&h]);
        if pair != (l, r) && pair != (r, l) {
            return Err(format!("crossing over crease {c} joins faces {pair:?}, not {:?}", (l, r)));
        }
    }
    if !g.faces.contains_key(&g.root) {
        return Err("root is not a vertex".into());
    }
    if !g.is_connected() {
        return Err("graph is disconnected".into());
    }
    Ok(())
}
