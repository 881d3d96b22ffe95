//! Parametric crease-pattern families: Miura-ori and its modified and snake
//! variants, joined triangle twists, the bird base, and single vertices.
//!
//! Every generator declares the sector angles of its interior vertices, so
//! coordinates only need to be close to the intended geometry.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::cone::ConeVertex;
use crate::geometry::{on_segment, Point};
use crate::pattern::{Crease, CreasePattern, PatternError, PatternInput};
use crate::saw::{naive_window_merge, tile_subset, SawGraph};
use crate::scalar::Scalar;
use crate::{CreaseId, ExactPattern, Rational, VertexId};

#[derive(Debug, Error)]
pub enum GeneratorError {
    #[error("mask has {got} entries but the pattern has {expected} zig-zag columns")]
    BadMaskLength { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// Default acute angle of Miura parallelograms, in degrees.
pub const MIURA_ANGLE: i64 = 60;

/// Acute angle of snake tessellations. Pinched vertices then have sectors
/// `(a, a, 180 - 2a, a, a, 180 - 2a)`, a waterbomb only when `a < 60`.
pub const SNAKE_ANGLE: i64 = 45;

/// Coordinates are rounded to multiples of `1 / GRID`.
const GRID: i64 = 1_000_000;

/// Nearest multiple of `1 / GRID`.
pub fn rat(x: f64) -> Rational {
    Rational::from_int((x * GRID as f64).round() as i64) / Rational::from_int(GRID)
}

pub fn pt(x: f64, y: f64) -> Point<Rational> {
    Point::new(rat(x), rat(y))
}

fn deg(x: f64) -> Rational {
    // nominal directions are multiples of 1/8 degree
    Rational::from_int((x * 8.0).round() as i64) / Rational::from_int(8)
}

/// Accumulates vertices, creases with their intended directions, and the
/// paper region; coincident vertices are merged.
#[derive(Default)]
pub struct PatternBuilder {
    ids: BTreeMap<Point<Rational>, VertexId>,
    vertices: Vec<(VertexId, Point<Rational>)>,
    creases: Vec<Crease>,
    seen: BTreeSet<(VertexId, VertexId)>,
    dirs: BTreeMap<VertexId, Vec<(CreaseId, Rational)>>,
    region: Vec<Point<Rational>>,
}

impl PatternBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, p: Point<Rational>) -> VertexId {
        if let Some(&id) = self.ids.get(&p) {
            return id;
        }
        let id = self.vertices.len() as VertexId;
        self.ids.insert(p.clone(), id);
        self.vertices.push((id, p));
        id
    }

    /// Crease from `a` to `b` leaving `a` at `dir` degrees. Zero-length and
    /// repeated creases are ignored.
    pub fn crease(&mut self, a: VertexId, b: VertexId, dir: f64) -> Option<CreaseId> {
        self.crease_exact(a, b, deg(dir))
    }

    /// Like [`PatternBuilder::crease`] with an exact direction.
    pub fn crease_exact(&mut self, a: VertexId, b: VertexId, dir: Rational) -> Option<CreaseId> {
        if a == b || !self.seen.insert((a.min(b), a.max(b))) {
            return None;
        }
        let id = self.creases.len() as CreaseId;
        self.creases.push(Crease { id, a, b });
        let back = &dir + Rational::from_int(180);
        let there = dir;
        self.dirs.entry(a).or_default().push((id, there));
        self.dirs.entry(b).or_default().push((id, back));
        Some(id)
    }

    pub fn region(&mut self, poly: Vec<Point<Rational>>) {
        let mut r: Vec<Point<Rational>> = Vec::with_capacity(poly.len());
        for p in poly {
            if r.last() != Some(&p) {
                r.push(p);
            }
        }
        if r.len() > 1 && r.first() == r.last() {
            r.pop();
        }
        self.region = r;
    }

    fn on_region_boundary(&self, p: &Point<Rational>) -> bool {
        let n = self.region.len();
        (0..n).any(|i| on_segment(p, &self.region[i], &self.region[(i + 1) % n]))
    }

    pub fn build(self) -> Result<ExactPattern, PatternError> {
        let full = Rational::full_turn();
        let mut angles = BTreeMap::new();
        for (id, p) in &self.vertices {
            if self.on_region_boundary(p) {
                continue;
            }
            let Some(list) = self.dirs.get(id) else { continue };
            let mut list: Vec<(CreaseId, Rational)> = list
                .iter()
                .map(|(c, d)| {
                    let mut d = d.clone();
                    while d >= full {
                        d -= full.clone();
                    }
                    while d < Rational::from_int(0) {
                        d += full.clone();
                    }
                    (*c, d)
                })
                .collect();
            list.sort_by(|x, y| x.1.cmp(&y.1));
            let n = list.len();
            let sectors: Vec<Rational> = (0..n)
                .map(|i| {
                    let d = list[(i + 1) % n].1.clone() - list[i].1.clone();
                    if d <= Rational::from_int(0) {
                        d + full.clone()
                    } else {
                        d
                    }
                })
                .collect();
            let cone = ConeVertex::new(sectors, list.iter().map(|x| x.0).collect());
            let k = (0..n).min_by_key(|&i| cone.creases[i]).unwrap();
            angles.insert(*id, cone.rotated(k).angles);
        }
        CreasePattern::build(PatternInput {
            vertices: self.vertices,
            creases: self.creases,
            region: self.region,
            angles,
        })
    }
}

fn check_size(m: usize, n: usize) -> Result<(), GeneratorError> {
    if m == 0 || n == 0 {
        return Err(GeneratorError::BadParameter(format!("grid size {m}x{n} must be at least 1x1")));
    }
    Ok(())
}

/// Grid of `m` rows by `n` columns of cells. Vertex column `i` zig-zags with
/// sign `sigma[i]`, columns are `spacing` units apart, and creases leave the
/// horizontal lines at `theta` degrees. Coincident vertices merge.
fn zigzag_grid(m: usize, n: usize, sigma: &[i64], spacing: i64, theta: i64) -> Result<ExactPattern, GeneratorError> {
    if !(1..90).contains(&theta) {
        return Err(GeneratorError::BadParameter(format!("angle {theta} must lie strictly between 0 and 90")));
    }
    let t = theta as f64;
    let h = t.to_radians().tan();
    let mut b = PatternBuilder::new();
    let pos = |i: usize, j: usize| {
        let x = Rational::from_int(i as i64 * spacing + sigma[i] * (j as i64 % 2));
        Point::new(x, rat(h * j as f64))
    };
    let mut id = vec![vec![0; m + 1]; n + 1];
    for (i, col) in id.iter_mut().enumerate() {
        for (j, v) in col.iter_mut().enumerate() {
            *v = b.vertex(pos(i, j));
        }
    }
    for j in 1..m {
        for i in 0..n {
            b.crease(id[i][j], id[i + 1][j], 0.0);
        }
    }
    for i in 1..n {
        for j in 0..m {
            let dx = sigma[i] * (1 - 2 * (j as i64 % 2));
            let dir = if dx > 0 { t } else { 180.0 - t };
            b.crease(id[i][j], id[i][j + 1], dir);
        }
    }
    let mut region = Vec::new();
    region.extend((0..=n).map(|i| pos(i, 0)));
    region.extend((1..=m).map(|j| pos(n, j)));
    region.extend((0..n).rev().map(|i| pos(i, m)));
    region.extend((1..m).rev().map(|j| pos(0, j)));
    b.region(region);
    Ok(b.build()?)
}

/// The `m x n` Miura-ori: `m` rows and `n` columns of parallelograms with
/// bird's-foot interior vertices.
pub fn miura(m: usize, n: usize) -> Result<ExactPattern, GeneratorError> {
    miura_with_angle(m, n, MIURA_ANGLE)
}

pub fn miura_with_angle(m: usize, n: usize, theta: i64) -> Result<ExactPattern, GeneratorError> {
    check_size(m, n)?;
    zigzag_grid(m, n, &vec![1; n + 1], 3, theta)
}

/// Miura-ori with the zig-zag vertex columns flagged in `mask` (one entry per
/// column, `n + 1` in all) reflected left to right.
pub fn modified_miura(m: usize, n: usize, mask: &[bool]) -> Result<ExactPattern, GeneratorError> {
    modified_miura_with_angle(m, n, mask, MIURA_ANGLE)
}

pub fn modified_miura_with_angle(m: usize, n: usize, mask: &[bool], theta: i64) -> Result<ExactPattern, GeneratorError> {
    check_size(m, n)?;
    if mask.len() != n + 1 {
        return Err(GeneratorError::BadMaskLength { expected: n + 1, got: mask.len() });
    }
    let sigma: Vec<i64> = mask.iter().map(|&r| if r { -1 } else { 1 }).collect();
    zigzag_grid(m, n, &sigma, 3, theta)
}

/// Reflection mask whose pinched column pairs in [`snake`] are all interior.
pub fn snake_mask(n: usize) -> Vec<bool> {
    let mut mask: Vec<bool> = (0..=n).map(|i| i % 2 == 0).collect();
    if n % 2 == 0 {
        mask[n] = false;
    }
    mask
}

/// Snake tessellation: the modified Miura-ori with [`snake_mask`] whose
/// facing heels are contracted, so every odd interior row carries degree-6
/// waterbomb vertices between pinched column pairs.
pub fn snake(m: usize, n: usize) -> Result<ExactPattern, GeneratorError> {
    check_size(m, n)?;
    let sigma: Vec<i64> = snake_mask(n).iter().map(|&r| if r { -1 } else { 1 }).collect();
    zigzag_grid(m, n, &sigma, 2, SNAKE_ANGLE)
}

/// A twist placed by its three corners; `turn` rotates the local layout.
struct Twist {
    corners: [(f64, f64); 3],
    turn: f64,
}

impl Twist {
    /// Directions of the triangle edges and the two pleat rays at corner `k`.
    fn rays(&self, k: usize) -> [f64; 2] {
        let base = self.turn + 120.0 * k as f64;
        [base + 120.0, base + 240.0]
    }
}

/// One, two or three triangle twists joined along shared pleats. Each
/// corner is a bird's foot with sectors (60, 60, 120, 120).
pub fn triangle_twist(count: usize) -> Result<ExactPattern, GeneratorError> {
    if !(1..=3).contains(&count) {
        return Err(GeneratorError::BadParameter(format!("twist count {count} must be 1, 2 or 3")));
    }
    let s = 3f64.sqrt() / 2.0;
    let first = Twist { corners: [(0.0, 0.0), (1.0, 0.0), (0.5, s)], turn: 0.0 };
    // half turn about (3, s/2): its leftward pleat continues the first twist's rightward one
    let (px, py) = (3.0, s / 2.0);
    let flip = |(x, y): (f64, f64)| (2.0 * px - x, 2.0 * py - y);
    let second = Twist { corners: first.corners.map(flip), turn: 180.0 };
    // translate the first twist so its down-left pleat meets the second's up-right one
    let nrm = (s, -0.5);
    let dir = (0.5, s);
    let dot = |a: (f64, f64), b: (f64, f64)| a.0 * b.0 + a.1 * b.1;
    let off = dot(nrm, second.corners[1]);
    let shift = (off * nrm.0 + 8.0 * dir.0, off * nrm.1 + 8.0 * dir.1);
    let third = Twist { corners: first.corners.map(|(x, y)| (x + shift.0, y + shift.1)), turn: 0.0 };
    let twists: Vec<Twist> = [first, second, third].into_iter().take(count).collect();
    // (twist, corner, ray) pairs joined by a shared pleat crease
    let joins: &[((usize, usize, usize), (usize, usize, usize))] = &[
        ((0, 2, 0), (1, 1, 1)),
        ((0, 1, 1), (1, 2, 0)),
        ((1, 0, 1), (2, 1, 0)),
        ((1, 1, 0), (2, 0, 1)),
    ];
    let (xmin, xmax, ymin, ymax) = (-4.0, 12.0, -5.0, 10.0);
    let mut b = PatternBuilder::new();
    let ids: Vec<[VertexId; 3]> = twists
        .iter()
        .map(|t| t.corners.map(|(x, y)| b.vertex(pt(x, y))))
        .collect();
    let mut used = BTreeSet::new();
    for &(p, q) in joins {
        if p.0 < count && q.0 < count {
            b.crease(ids[p.0][p.1], ids[q.0][q.1], twists[p.0].rays(p.1)[p.2]);
            used.insert(p);
            used.insert(q);
        }
    }
    for (ti, t) in twists.iter().enumerate() {
        for k in 0..3 {
            let base = t.turn + 120.0 * k as f64;
            b.crease(ids[ti][k], ids[ti][(k + 1) % 3], base);
            for (r, &d) in t.rays(k).iter().enumerate() {
                if used.contains(&(ti, k, r)) {
                    continue;
                }
                let (x, y) = t.corners[k];
                let (dx, dy) = (d.to_radians().cos(), d.to_radians().sin());
                let mut hits = Vec::new();
                if dx > 1e-9 {
                    hits.push(((xmax - x) / dx, Some(xmax), None));
                }
                if dx < -1e-9 {
                    hits.push(((xmin - x) / dx, Some(xmin), None));
                }
                if dy > 1e-9 {
                    hits.push(((ymax - y) / dy, None, Some(ymax)));
                }
                if dy < -1e-9 {
                    hits.push(((ymin - y) / dy, None, Some(ymin)));
                }
                let (l, fx, fy) = hits.into_iter().min_by(|a, b| a.0.total_cmp(&b.0)).unwrap();
                let end = Point::new(
                    fx.map(|v| rat(v)).unwrap_or_else(|| rat(x + l * dx)),
                    fy.map(|v| rat(v)).unwrap_or_else(|| rat(y + l * dy)),
                );
                let e = b.vertex(end);
                b.crease(ids[ti][k], e, d);
            }
        }
    }
    b.region(vec![pt(xmin, ymin), pt(xmax, ymin), pt(xmax, ymax), pt(xmin, ymax)]);
    Ok(b.build()?)
}

/// Two joined triangle twists with the wrong SAW graph: each twist is tiled
/// on its own and the two are glued along two crossings and the undirected
/// edge between them. The shared edge ties the parities of creases in
/// different twists together, so the coloring count falls short of the
/// assignment count.
pub fn bad_twist_merge() -> Result<(ExactPattern, SawGraph), GeneratorError> {
    let cp = triangle_twist(2)?;
    let first: BTreeSet<VertexId> = [0, 1, 2].into();
    let second: BTreeSet<VertexId> = [3, 4, 5].into();
    let shared: BTreeSet<CreaseId> = cp
        .creases()
        .iter()
        .filter(|c| first.contains(&c.a) && second.contains(&c.b) || second.contains(&c.a) && first.contains(&c.b))
        .map(|c| c.id)
        .collect();
    let tile = |s: &BTreeSet<VertexId>| tile_subset(&cp, s).map_err(|e| GeneratorError::BadParameter(e.to_string()));
    let (g, h) = (tile(&first)?, tile(&second)?);
    let merged = naive_window_merge(&g, &h, &shared)
        .ok_or_else(|| GeneratorError::BadParameter("the twist graphs share no mergeable window".into()))?;
    Ok((cp, merged))
}

/// The bird base on the unit square, the crease pattern underlying the
/// flapping bird: diagonals, book folds, eight 22.5 degree kite creases and
/// the petal-fold diamond.
pub fn crane() -> Result<ExactPattern, GeneratorError> {
    let t = 0.5 * (2f64.sqrt() - 1.0);
    let half = Rational::from_int(1) / Rational::from_int(2);
    let one = Rational::from_int(1);
    // quarter turn about the centre, exact on rationals
    let rot = |p: &Point<Rational>| Point::new(one.clone() - p.y.clone(), p.x.clone());
    let corner = Point::new(Rational::from_int(0), Rational::from_int(0));
    let mid = Point::new(half.clone(), Rational::from_int(0));
    let centre = Point::new(half.clone(), half.clone());
    let d_bottom = Point::new(half.clone(), rat(t));
    let d_left = Point::new(rat(t), half.clone());
    let e_left = Point::new(rat((0.5 + t) / 2.0), rat((0.5 + t) / 2.0));
    let e_right = Point::new(rat((1.5 - t) / 2.0), rat((0.5 + t) / 2.0));
    // (from, to, direction) in the bottom quadrant
    let mut items: Vec<(Point<Rational>, Point<Rational>, f64)> = vec![
        (corner.clone(), e_left.clone(), 45.0),
        (e_left.clone(), centre.clone(), 45.0),
        (mid.clone(), d_bottom.clone(), 90.0),
        (d_bottom.clone(), centre.clone(), 90.0),
        (corner.clone(), d_bottom.clone(), 22.5),
        (corner.clone(), d_left.clone(), 67.5),
        (d_bottom.clone(), e_left.clone(), 135.0),
        (d_bottom.clone(), e_right.clone(), 45.0),
    ];
    let mut b = PatternBuilder::new();
    for k in 0..4 {
        for (p, q, d) in &items {
            let (a, c) = (b.vertex(p.clone()), b.vertex(q.clone()));
            b.crease(a, c, d + 90.0 * k as f64);
        }
        items = items.iter().map(|(p, q, d)| (rot(p), rot(q), *d)).collect();
    }
    b.region(vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)]);
    Ok(b.build()?)
}

/// A single interior vertex with the given sector angles (summing to 360),
/// creases labelled as in `cone` and the first crease pointing along +x.
pub fn single_vertex(cone: &ConeVertex<Rational>) -> Result<ExactPattern, GeneratorError> {
    if cone.cone_total() != Rational::full_turn() || cone.degree() < 2 {
        return Err(GeneratorError::BadParameter("sector angles must sum to 360 over at least two creases".into()));
    }
    if cone.angles.iter().any(|a| *a <= Rational::from_int(0) || *a > Rational::from_int(180)) {
        return Err(GeneratorError::BadParameter("sector angles must lie in (0, 180]".into()));
    }
    let mut b = PatternBuilder::new();
    let centre = b.vertex(pt(0.0, 0.0));
    let at = |d: f64| pt(d.to_radians().cos(), d.to_radians().sin());
    let mut region = Vec::new();
    let mut ends = Vec::new();
    let mut dir = Rational::from_int(0);
    for a in &cone.angles {
        ends.push(dir.clone());
        let d = dir.to_f64_lossy();
        region.push(at(d));
        region.push(at(d + a.to_f64_lossy() / 2.0));
        dir += a;
    }
    // the builder numbers creases in insertion order, so insert by crease id
    let mut order: Vec<usize> = (0..cone.degree()).collect();
    order.sort_by_key(|&i| cone.creases[i]);
    let mut labels = BTreeMap::new();
    for &i in &order {
        let e = b.vertex(at(ends[i].to_f64_lossy()));
        let id = b.crease_exact(centre, e, ends[i].clone()).unwrap();
        labels.insert(id, cone.creases[i]);
    }
    b.region(region);
    let cp = b.build()?;
    let mut input = cp.to_input();
    for c in input.creases.iter_mut() {
        c.id = labels[&c.id];
    }
    Ok(CreasePattern::build(input)?)
}

/// A generator choice with its parameters, as used by the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    Miura { m: usize, n: usize, angle: i64 },
    ModifiedMiura { m: usize, n: usize, mask: Vec<bool> },
    Snake { m: usize, n: usize },
    TriangleTwist { count: usize },
    Crane,
}

impl PatternSpec {
    pub fn generate(&self) -> Result<ExactPattern, GeneratorError> {
        match self {
            PatternSpec::Miura { m, n, angle } => miura_with_angle(*m, *n, *angle),
            PatternSpec::ModifiedMiura { m, n, mask } => modified_miura(*m, *n, mask),
            PatternSpec::Snake { m, n } => snake(*m, *n),
            PatternSpec::TriangleTwist { count } => triangle_twist(*count),
            PatternSpec::Crane => crane(),
        }
    }
}
