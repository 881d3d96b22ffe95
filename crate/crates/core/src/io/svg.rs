//! Deterministic SVG drawings of patterns with optional MV assignment and
//! SAW graph overlay.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::coloring::ThreeColoring;
use crate::cone::{Mv, MvAssignment};
use crate::pattern::CreasePattern;
use crate::saw::{SawGraph, SawId};
use crate::scalar::Scalar;

/// Fill colors of SAW vertices colored 0, 1 and 2.
pub const COLOR_FILLS: [&str; 3] = ["#f2c12e", "#2e9e4f", "#d6402b"];
const MOUNTAIN: &str = "#b03a2e";
const VALLEY: &str = "#1f5fa8";
const UNASSIGNED: &str = "#888888";
const SIZE: f64 = 800.0;
const MARGIN: f64 = 20.0;

struct Frame {
    min: (f64, f64),
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (MARGIN + (x - self.min.0) * self.scale, MARGIN + (self.max_y - y) * self.scale)
    }
}

/// Drawing positions of SAW vertices: the face centroid, fanned out on a
/// small circle when a face hosts several vertices.
pub fn saw_positions<S: Scalar>(cp: &CreasePattern<S>, g: &SawGraph) -> BTreeMap<SawId, (f64, f64)> {
    let mut by_face: BTreeMap<usize, Vec<SawId>> = BTreeMap::new();
    for (&v, &f) in &g.faces {
        by_face.entry(f).or_default().push(v);
    }
    let mut out = BTreeMap::new();
    for (f, vs) in by_face {
        let Some(face) = cp.faces().get(f) else { continue };
        let pts: Vec<(f64, f64)> = face.corners.iter().map(|p| p.to_f64()).collect();
        let n = pts.len() as f64;
        let c = (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n);
        let r = 0.3 * pts.iter().map(|p| (p.0 - c.0).hypot(p.1 - c.1)).fold(f64::INFINITY, f64::min);
        let k = vs.len();
        for (i, v) in vs.into_iter().enumerate() {
            let p = if k == 1 {
                c
            } else {
                let t = std::f64::consts::TAU * i as f64 / k as f64;
                (c.0 + r * t.cos(), c.1 + r * t.sin())
            };
            out.insert(v, p);
        }
    }
    out
}

/// SVG 1.1 drawing. Mountains are solid, valleys dashed, unassigned creases
/// grey; SAW crossings are arrows from tail to head.
pub fn render_svg<S: Scalar>(
    cp: &CreasePattern<S>,
    mv: Option<&MvAssignment>,
    saw: Option<&SawGraph>,
    coloring: Option<&ThreeColoring>,
) -> String {
    let region: Vec<(f64, f64)> = cp.region().iter().map(|p| p.to_f64()).collect();
    let min_x = region.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = region.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = region.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = region.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let frame = Frame { min: (min_x, min_y), max_y, scale: (SIZE - 2.0 * MARGIN) / span };
    let w = 2.0 * MARGIN + (max_x - min_x) * frame.scale;
    let h = 2.0 * MARGIN + (max_y - min_y) * frame.scale;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"0 0 {w:.2} {h:.2}\">"
    );
    s.push_str("<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333333\"/></marker></defs>\n");
    let poly: Vec<String> = region
        .iter()
        .map(|&p| {
            let (x, y) = frame.map(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        s,
        "<polygon id=\"paper\" points=\"{}\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"2\"/>",
        poly.join(" ")
    );
    s.push_str("<g id=\"creases\" stroke-width=\"2\">\n");
    for c in cp.creases() {
        let a = frame.map(cp.vertex(c.a).unwrap().pos.to_f64());
        let b = frame.map(cp.vertex(c.b).unwrap().pos.to_f64());
        let (class, style) = match mv.and_then(|m| m.get(c.id)) {
            Some(Mv::Mountain) => ("mountain", format!("stroke=\"{MOUNTAIN}\"")),
            Some(Mv::Valley) => ("valley", format!("stroke=\"{VALLEY}\" stroke-dasharray=\"8,5\"")),
            None => ("unassigned", format!("stroke=\"{UNASSIGNED}\"")),
        };
        let _ = writeln!(
            s,
            "<line data-crease=\"{}\" class=\"{class}\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" {style}/>",
            c.id, a.0, a.1, b.0, b.1
        );
    }
    s.push_str("</g>\n");
    if let Some(g) = saw {
        let pos: BTreeMap<SawId, (f64, f64)> =
            saw_positions(cp, g).into_iter().map(|(v, p)| (v, frame.map(p))).collect();
        let radius = 5.0;
        s.push_str("<g id=\"saw\" stroke=\"#333333\" stroke-width=\"1.2\">\n");
        let directed: std::collections::BTreeSet<(SawId, SawId)> =
            g.crossings.values().map(|&(t, h)| (t.min(h), t.max(h))).collect();
        for &(a, b) in &g.edges {
            if directed.contains(&(a, b)) {
                continue;
            }
            let (p, q) = (pos[&a], pos[&b]);
            let _ = writeln!(
                s,
                "<line class=\"edge\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>",
                p.0, p.1, q.0, q.1
            );
        }
        for (&c, &(t, hd)) in &g.crossings {
            let (p, q) = (pos[&t], pos[&hd]);
            let len = (q.0 - p.0).hypot(q.1 - p.1).max(1e-9);
            let k = ((len - radius) / len).max(0.0);
            let end = (p.0 + (q.0 - p.0) * k, p.1 + (q.1 - p.1) * k);
            let _ = writeln!(
                s,
                "<line class=\"crossing\" data-crease=\"{c}\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" marker-end=\"url(#arrow)\"/>",
                p.0, p.1, end.0, end.1
            );
        }
        for (&v, &(x, y)) in &pos {
            let fill = coloring
                .and_then(|col| col.get(&v))
                .map(|&c| COLOR_FILLS[c as usize % 3])
                .unwrap_or("#555555");
            let _ = writeln!(
                s,
                "<circle data-vertex=\"{v}\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{radius}\" fill=\"{fill}\"/>"
            );
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}
