//! Export to the FOLD format with floating-point coordinates.

use serde_json::{json, Value};

use crate::cone::{Mv, MvAssignment};
use crate::geometry::{on_segment, Point};
use crate::pattern::CreasePattern;
use crate::scalar::Scalar;

/// FOLD `creasePattern` frame. Region corners that are not pattern vertices
/// become extra vertices so the paper outline can be listed as `B` edges.
pub fn to_fold<S: Scalar>(cp: &CreasePattern<S>, mv: Option<&MvAssignment>) -> Value {
    let mut points: Vec<Point<S>> = cp.vertices().iter().map(|v| v.pos.clone()).collect();
    for c in cp.region() {
        if !points.contains(c) {
            points.push(c.clone());
        }
    }
    let index = |id: u32| cp.vertices().iter().position(|v| v.id == id).unwrap();
    let mut edges = Vec::new();
    let mut kinds = Vec::new();
    let region = cp.region();
    for i in 0..region.len() {
        let (a, b) = (&region[i], &region[(i + 1) % region.len()]);
        let d = b.sub(a);
        let mut on: Vec<(S, usize)> = points
            .iter()
            .enumerate()
            .filter(|(_, p)| on_segment(p, a, b))
            .map(|(k, p)| {
                let e = p.sub(a);
                (e.0 * d.0.clone() + e.1 * d.1.clone(), k)
            })
            .collect();
        on.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        for w in on.windows(2) {
            edges.push(json!([w[0].1, w[1].1]));
            kinds.push("B");
        }
    }
    for c in cp.creases() {
        edges.push(json!([index(c.a), index(c.b)]));
        kinds.push(match mv.and_then(|m| m.get(c.id)) {
            Some(Mv::Mountain) => "M",
            Some(Mv::Valley) => "V",
            None => "U",
        });
    }
    let coords: Vec<Value> = points.iter().map(|p| json!([p.x.to_f64_lossy(), p.y.to_f64_lossy()])).collect();
    json!({
        "file_spec": 1.1,
        "file_creator": "flatfold",
        "frame_classes": ["creasePattern"],
        "vertices_coords": coords,
        "edges_vertices": edges,
        "edges_assignment": kinds,
    })
}
