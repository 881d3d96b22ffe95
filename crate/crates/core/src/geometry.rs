//! Exact planar predicates over any [`Scalar`].

use std::cmp::Ordering;

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn sub(&self, o: &Point<S>) -> (S, S) {
        (self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64_lossy(), self.y.to_f64_lossy())
    }
}

pub fn cross<S: Scalar>(a: &(S, S), b: &(S, S)) -> S {
    a.0.clone() * b.1.clone() - a.1.clone() * b.0.clone()
}

fn sign<S: Scalar>(v: &S) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of the turn `a -> b -> c`: 1 left, -1 right, 0 collinear.
pub fn orient<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> i8 {
    sign(&cross(&b.sub(a), &c.sub(a)))
}

/// `p` lies on the closed segment `ab`.
pub fn on_segment<S: Scalar>(p: &Point<S>, a: &Point<S>, b: &Point<S>) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    let (lo_x, hi_x) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (lo_y, hi_y) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    &p.x >= lo_x && &p.x <= hi_x && &p.y >= lo_y && &p.y <= hi_y
}

/// Do two closed segments meet anywhere other than at endpoints they share?
pub fn segments_conflict<S: Scalar>(
    a0: &Point<S>,
    a1: &Point<S>,
    b0: &Point<S>,
    b1: &Point<S>,
) -> bool {
    let shared: Vec<&Point<S>> = [a0, a1]
        .into_iter()
        .filter(|p| *p == b0 || *p == b1)
        .collect();
    let o1 = orient(a0, a1, b0);
    let o2 = orient(a0, a1, b1);
    let o3 = orient(b0, b1, a0);
    let o4 = orient(b0, b1, a1);
    if o1 == 0 && o2 == 0 {
        // collinear: conflict when they overlap in more than a shared endpoint
        let overlap = on_segment(b0, a0, a1)
            || on_segment(b1, a0, a1)
            || on_segment(a0, b0, b1)
            || on_segment(a1, b0, b1);
        if !overlap {
            return false;
        }
        if shared.len() == 1 {
            // touching end to end is fine, anything else overlaps
            let s = shared[0];
            let a_other = if a0 == s { a1 } else { a0 };
            let b_other = if b0 == s { b1 } else { b0 };
            return !(!on_segment(b_other, a0, a1) && !on_segment(a_other, b0, b1));
        }
        return true;
    }
    if !shared.is_empty() {
        return false;
    }
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(b0, a0, a1))
        || (o2 == 0 && on_segment(b1, a0, a1))
        || (o3 == 0 && on_segment(a0, b0, b1))
        || (o4 == 0 && on_segment(a1, b0, b1))
}

/// Twice the signed area of a polygon (positive for counterclockwise).
pub fn signed_area2<S: Scalar>(poly: &[Point<S>]) -> S {
    let n = poly.len();
    let mut acc = S::zero();
    for i in 0..n {
        let p = &poly[i];
        let q = &poly[(i + 1) % n];
        acc = acc + (p.x.clone() * q.y.clone() - q.x.clone() * p.y.clone());
    }
    acc
}

/// Closed point-in-polygon test (boundary counts as inside).
pub fn in_polygon<S: Scalar>(p: &Point<S>, poly: &[Point<S>]) -> bool {
    let n = poly.len();
    for i in 0..n {
        if on_segment(p, &poly[i], &poly[(i + 1) % n]) {
            return true;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            // x-coordinate of the crossing compared without division
            let lhs = (p.x.clone() - a.x.clone()) * (b.y.clone() - a.y.clone());
            let rhs = (b.x.clone() - a.x.clone()) * (p.y.clone() - a.y.clone());
            let left = if b.y > a.y { lhs < rhs } else { lhs > rhs };
            if left {
                inside = !inside;
            }
        }
    }
    inside
}

fn half<S: Scalar>(d: &(S, S)) -> u8 {
    if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular order of direction vectors starting at +x.
pub fn cmp_direction<S: Scalar>(a: &(S, S), b: &(S, S)) -> Ordering {
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let c = cross(a, b);
    if c.is_positive() {
        Ordering::Less
    } else if c.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// Exact direction in degrees when the vector is axis-aligned or diagonal.
pub fn exact_direction<S: Scalar>(d: &(S, S)) -> Option<i64> {
    let (x, y) = d;
    let deg = if y.is_zero() {
        if x.is_positive() {
            0
        } else {
            180
        }
    } else if x.is_zero() {
        if y.is_positive() {
            90
        } else {
            270
        }
    } else if x.abs() == y.abs() {
        match (x.is_positive(), y.is_positive()) {
            (true, true) => 45,
            (false, true) => 135,
            (false, false) => 225,
            (true, false) => 315,
        }
    } else {
        return None;
    };
    Some(deg)
}

/// Direction in degrees as a float, in `[0, 360)`.
pub fn direction_f64<S: Scalar>(d: &(S, S)) -> f64 {
    let a = d.1.to_f64_lossy().atan2(d.0.to_f64_lossy()).to_degrees();
    if a < 0.0 {
        a + 360.0
    } else {
        a
    }
}
