//! Shared helpers: an independent layer-order oracle for single vertices,
//! random flat-foldable cones and random SAW graphs.

#![allow(dead_code)]

use std::collections::BTreeSet;

use flatfold::generators::{miura, single_vertex, triangle_twist};
use flatfold::saw::{single_vertex_saw, tile, SawGraph};
use flatfold::{ConeVertex, ExactCone, Rational};
use rand::Rng;

enum Rule {
    /// Sector `j` may not lie strictly between `u` and `v`.
    NotBetween(usize, usize, usize),
    /// Pairs `(a, b)` and `(c, d)` may not interleave.
    NoInterleave(usize, usize, usize, usize),
    /// `u` lies above `v`.
    Above(usize, usize),
}

impl Rule {
    fn last(&self) -> usize {
        match *self {
            Rule::NotBetween(a, b, c) => a.max(b).max(c),
            Rule::NoInterleave(a, b, c, d) => a.max(b).max(c).max(d),
            Rule::Above(a, b) => a.max(b),
        }
    }

    /// `level[k]` is the height of sector `k` in the stack.
    fn holds(&self, level: &[usize]) -> bool {
        let between = |j: usize, u: usize, v: usize| {
            let (lo, hi) = (level[u].min(level[v]), level[u].max(level[v]));
            lo < level[j] && level[j] < hi
        };
        match *self {
            Rule::NotBetween(j, u, v) => !between(j, u, v),
            Rule::NoInterleave(a, b, c, d) => between(c, a, b) == between(d, a, b),
            Rule::Above(u, v) => level[u] > level[v],
        }
    }
}

/// Inserts sectors one at a time into a stack, checking each rule as soon as
/// all of its sectors are placed.
fn stack(k: usize, order: &mut Vec<usize>, by_last: &[Vec<Rule>], n: usize) -> bool {
    if k == n {
        return true;
    }
    for at in 0..=order.len() {
        order.insert(at, k);
        let mut level = vec![0; n];
        for (h, &s) in order.iter().enumerate() {
            level[s] = h;
        }
        if by_last[k].iter().all(|r| r.holds(&level)) && stack(k + 1, order, by_last, n) {
            return true;
        }
        order.remove(at);
    }
    false
}

/// Whether the vertex with integer sector angles `a` (summing to `full`)
/// folds flat under `mv` (true = mountain), decided by searching for a
/// stacking of the sectors with no crease passing through another layer.
///
/// Crease `k` joins sectors `k-1` and `k`; sector `k` is face up when `k` is
/// even. A mountain puts the face-up sector above its neighbour.
pub fn folds_flat(a: &[i64], full: i64, mv: &[bool]) -> bool {
    let n = a.len();
    if n % 2 == 1 {
        return false;
    }
    // folded crease positions on a circle of circumference `full`, doubled so
    // sample points between them stay integral
    let mut p = vec![0i64; n + 1];
    for k in 0..n {
        p[k + 1] = if k % 2 == 0 { p[k] + a[k] } else { p[k] - a[k] };
    }
    if p[n] != 0 {
        return false;
    }
    let m = 2 * full;
    let pos: Vec<i64> = p[..n].iter().map(|x| (2 * x).rem_euclid(m)).collect();
    // sector k runs from pos[k] forward (k even) or backward (k odd)
    let covers = |k: usize, x: i64| {
        let len = 2 * a[k];
        let off = if k % 2 == 0 { (x - pos[k]).rem_euclid(m) } else { (pos[k] - x).rem_euclid(m) };
        off > 0 && off < len
    };
    let marks: Vec<i64> = pos.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let nm = marks.len();
    // one sample in each gap between consecutive marks
    let samples: Vec<i64> = (0..nm)
        .map(|i| {
            let gap = (marks[(i + 1) % nm] - marks[i]).rem_euclid(m);
            let gap = if gap == 0 { m } else { gap };
            (marks[i] + gap / 2).rem_euclid(m)
        })
        .collect();
    let nearest = |x: i64, forward: bool| {
        let i = marks.binary_search(&x).unwrap();
        if forward {
            samples[i]
        } else {
            samples[(i + nm - 1) % nm]
        }
    };

    let mut rules = Vec::new();
    // each crease: its two sectors leave it on one side
    let crease_side: Vec<(usize, usize, i64)> = (0..n)
        .map(|k| {
            let (u, v) = ((k + n - 1) % n, k);
            // sector k leaves pos[k] forward when k is even
            (u, v, nearest(pos[k], k % 2 == 0))
        })
        .collect();
    for (k, &(u, v, s)) in crease_side.iter().enumerate() {
        let up_above = mv[k] == (u % 2 == 0);
        rules.push(if up_above { Rule::Above(u, v) } else { Rule::Above(v, u) });
        for j in 0..n {
            if j != u && j != v && covers(j, s) && covers(j, pos[k]) {
                rules.push(Rule::NotBetween(j, u, v));
            }
        }
        for (l, &(u2, v2, s2)) in crease_side.iter().enumerate().skip(k + 1) {
            if pos[l] == pos[k] && s2 == s && u2 != u && u2 != v && v2 != u && v2 != v {
                rules.push(Rule::NoInterleave(u, v, u2, v2));
            }
        }
    }
    let mut by_last: Vec<Vec<Rule>> = (0..n).map(|_| Vec::new()).collect();
    for r in rules {
        by_last[r.last()].push(r);
    }
    stack(0, &mut Vec::with_capacity(n), &by_last, n)
}

/// Number of assignments of the cone that fold flat, by exhausting all
/// `2^n` of them against [`folds_flat`].
pub fn layer_count(cone: &ExactCone) -> u64 {
    let den = cone.angles.iter().fold(1i64, |acc, x| {
        let d: i64 = x.denom().try_into().unwrap();
        acc / gcd(acc, d) * d
    });
    let ints: Vec<i64> = cone
        .angles
        .iter()
        .map(|x| (x * Rational::from_integer(den.into())).to_integer().try_into().unwrap())
        .collect();
    let full: i64 = ints.iter().sum();
    let n = ints.len();
    (0u32..1 << n)
        .filter(|bits| {
            let mv: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 0).collect();
            let mountains = mv.iter().filter(|&&x| x).count() as i64;
            (2 * mountains - n as i64).abs() == 2 && folds_flat(&ints, full, &mv)
        })
        .count() as u64
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A random flat-foldable cone of even degree in `4..=max_degree` with
/// rational angles. Angles come from a small palette so equal runs are
/// common.
pub fn random_cone<R: Rng>(rng: &mut R, max_degree: usize) -> ExactCone {
    let half = rng.gen_range(2..=max_degree / 2);
    let den: i64 = rng.gen_range(1..=3);
    let total = 180 * den;
    let mut parts = |k: usize| -> Vec<i64> {
        let unit = [5, 10, 15, 30][rng.gen_range(0..4)];
        let slots = total / unit;
        loop {
            let mut cuts: Vec<i64> = (0..k - 1).map(|_| rng.gen_range(1..slots)).collect();
            cuts.sort();
            cuts.dedup();
            if cuts.len() != k - 1 {
                continue;
            }
            let mut out = Vec::new();
            let mut prev = 0;
            for c in cuts.into_iter().chain([slots]) {
                out.push((c - prev) * unit);
                prev = c;
            }
            // repeat a value now and then to create equal runs
            if k > 2 && rng.gen_bool(0.5) {
                let i = rng.gen_range(0..k - 1);
                let (x, y) = (out[i], out[i + 1]);
                if (x + y) % 2 == 0 {
                    out[i] = (x + y) / 2;
                    out[i + 1] = (x + y) / 2;
                }
            }
            return out;
        }
    };
    let even = parts(half);
    let odd = parts(half);
    let angles: Vec<Rational> = (0..2 * half)
        .map(|i| {
            let v = if i % 2 == 0 { even[i / 2] } else { odd[i / 2] };
            Rational::new(v.into(), den.into())
        })
        .collect();
    let cone = ConeVertex::from_angles(angles);
    let k = rng.gen_range(0..cone.degree());
    cone.rotated(k)
}

/// The `m x n` grid graph with plain edges only.
pub fn grid_graph(m: usize, n: usize) -> SawGraph {
    let mut g = SawGraph::default();
    for _ in 0..m * n {
        g.add_vertex(0);
    }
    let id = |i: usize, j: usize| (i * n + j) as u32;
    for i in 0..m {
        for j in 0..n {
            if i + 1 < m {
                g.add_edge(id(i, j), id(i + 1, j));
            }
            if j + 1 < n {
                g.add_edge(id(i, j), id(i, j + 1));
            }
        }
    }
    g
}

/// A SAW graph drawn from the generators: a random supported single vertex,
/// a small Miura-ori or a triangle twist.
pub fn random_saw<R: Rng>(rng: &mut R) -> SawGraph {
    match rng.gen_range(0..4) {
        0 => {
            let (m, n) = (rng.gen_range(2..=3), rng.gen_range(2..=3));
            tile(&miura(m, n).unwrap()).unwrap()
        }
        1 => tile(&triangle_twist(rng.gen_range(1..=2)).unwrap()).unwrap(),
        _ => loop {
            let cone = random_cone(rng, 8);
            if let Ok(g) = single_vertex_saw(&cone) {
                return g;
            }
        },
    }
}

/// A random boundary surgery: a triangle on a random crossing, or a prism on
/// a crossing with an undirected boundary neighbour.
pub fn random_surgery<R: Rng>(rng: &mut R, g: &SawGraph) -> Option<SawGraph> {
    let n = g.boundary.len();
    if n == 0 {
        return None;
    }
    let crossings: Vec<usize> = (0..n).filter(|&i| g.boundary[i].crease.is_some()).collect();
    let i = crossings[rng.gen_range(0..crossings.len())];
    let c = g.boundary[i].crease.unwrap();
    let plain: Vec<_> = [(i + 1) % n, (i + n - 1) % n]
        .into_iter()
        .map(|j| g.boundary[j])
        .filter(|s| s.crease.is_none())
        .collect();
    if !plain.is_empty() && rng.gen_bool(0.5) {
        let s = plain[rng.gen_range(0..plain.len())];
        flatfold::saw::insert_prism(g, c, (s.from, s.to)).ok()
    } else {
        flatfold::saw::insert_triangle(g, c).ok()
    }
}

/// The pattern of a lone cone, for oracle comparisons.
pub fn cone_pattern(cone: &ExactCone) -> flatfold::ExactPattern {
    single_vertex(cone).unwrap()
}

