//! Splitting a degree-6 waterbomb vertex into two bird's feet sharing a heel.

use crate::cone::ConeVertex;
use crate::geometry::Point;
use crate::pattern::{Crease, CreasePattern};
use crate::saw::SawError;
use crate::scalar::Scalar;
use crate::single_vertex::kawasaki_check;
use crate::VertexId;

/// Rotation `r` such that, read from position `r`, the angles are
/// `(a, a, b, c, c, b)` with `a + b + c = 180` and `a, c < b`: the two
/// middle creases are collinear, both equal pairs are strict minima, and each
/// half is a bird's foot once the vertex is pulled apart along them.
pub fn is_waterbomb<S: Scalar>(cone: &ConeVertex<S>) -> Option<usize> {
    if cone.degree() != 6 || !kawasaki_check(cone) {
        return None;
    }
    (0..6).find(|&r| {
        let a = |i: usize| &cone.angles[(r + i) % 6];
        a(0) == a(1)
            && a(3) == a(4)
            && a(2) == a(5)
            && a(1).clone() + a(2).clone() + a(3).clone() == S::degrees(180)
            && a(0) < a(2)
            && a(3) < a(2)
    })
}

fn normalized<S: Scalar>(angles: Vec<S>, creases: Vec<u32>) -> Vec<S> {
    let c = ConeVertex::new(angles, creases);
    let k = (0..c.degree()).min_by_key(|&i| c.creases[i]).unwrap_or(0);
    c.rotated(k).angles
}

/// Replace waterbomb vertex `v` by two bird's-foot vertices a tiny step
/// apart along its middle creases, joined by a new heel crease.
///
/// The moved creases change direction by far less than the angle slack, so
/// every vertex whose creases move gets its original angles declared.
pub fn split_waterbomb<S: Scalar>(cp: &CreasePattern<S>, v: VertexId) -> Result<CreasePattern<S>, SawError> {
    let not = || SawError::NotWaterbomb(v);
    let cone = cp.cone_at(v).map_err(|_| not())?;
    let r = is_waterbomb(&cone).ok_or_else(not)?;
    let a = |i: usize| cone.angles[(r + i) % 6].clone();
    let c = |i: usize| cone.creases[(r + i) % 6];

    let mut input = cp.to_input();
    let pos = cp.vertex(v).unwrap().pos.clone();
    let crease_of = |id| cp.crease(id).unwrap();
    let far = |id| {
        let k: &Crease = crease_of(id);
        let o = if k.a == v { k.b } else { k.a };
        cp.vertex(o).unwrap().pos.clone()
    };
    let (dx, dy) = far(c(1)).sub(&pos);
    let min_len = cone
        .creases
        .iter()
        .map(|&id| {
            let (x, y) = far(id).sub(&pos);
            (x.to_f64_lossy().powi(2) + y.to_f64_lossy().powi(2)).sqrt()
        })
        .fold(f64::INFINITY, f64::min);
    let dlen = (dx.to_f64_lossy().powi(2) + dy.to_f64_lossy().powi(2)).sqrt();
    let steps = (1e5 * dlen / min_len).ceil() as i64;
    let t = S::from_int(1) / S::from_int(steps.max(1));
    let shift = (dx * t.clone(), dy * t);
    let vb = Point::new(pos.x.clone() + shift.0.clone(), pos.y.clone() + shift.1.clone());
    let va = Point::new(pos.x.clone() - shift.0, pos.y.clone() - shift.1);

    let new_v = cp.vertices().iter().map(|x| x.id).max().unwrap() + 1;
    let heel = cp.crease_ids().into_iter().max().unwrap() + 1;
    for (id, p) in input.vertices.iter_mut() {
        if *id == v {
            *p = vb.clone();
        }
    }
    input.vertices.push((new_v, va));
    for k in input.creases.iter_mut() {
        if [c(3), c(4), c(5)].contains(&k.id) {
            if k.a == v {
                k.a = new_v;
            } else {
                k.b = new_v;
            }
        }
    }
    input.creases.push(Crease { id: heel, a: new_v, b: v });

    for &id in &cone.creases {
        let k = crease_of(id);
        let o = if k.a == v { k.b } else { k.a };
        if cp.is_interior(o) && !input.angles.contains_key(&o) {
            input.angles.insert(o, cp.cone_at(o)?.angles);
        }
    }
    input.angles.insert(
        v,
        normalized(vec![a(0), a(1), a(2) + a(3), a(4) + a(5)], vec![c(0), c(1), c(2), heel]),
    );
    input.angles.insert(
        new_v,
        normalized(vec![a(3), a(4), a(5) + a(0), a(1) + a(2)], vec![c(3), c(4), c(5), heel]),
    );
    Ok(CreasePattern::build(input)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{miura, single_vertex, snake};
    use crate::oracle::count_locally_valid;
    use crate::Rational;

    fn cone(a: &[i64]) -> ConeVertex<Rational> {
        ConeVertex::from_angles(a.iter().map(|&x| Rational::from_int(x)).collect())
    }

    #[test]
    fn recognises_waterbombs() {
        assert_eq!(is_waterbomb(&cone(&[45, 45, 90, 45, 45, 90])), Some(0));
        assert_eq!(is_waterbomb(&cone(&[90, 30, 30, 120, 60, 30])), None);
        assert!(is_waterbomb(&cone(&[90, 40, 40, 100, 30, 60])).is_none());
        assert_eq!(is_waterbomb(&cone(&[90, 40, 40, 90, 50, 50])), Some(1));
        // equal sectors everywhere are not strict minima
        assert_eq!(is_waterbomb(&cone(&[60; 6])), None);
    }

    #[test]
    fn split_preserves_count() {
        let cp = single_vertex(&cone(&[45, 45, 90, 45, 45, 90])).unwrap();
        let v = cp.interior_vertices().next().unwrap().id;
        let split = split_waterbomb(&cp, v).unwrap();
        assert_eq!(split.interior_vertices().count(), 2);
        assert_eq!(split.creases().len(), 7);
        assert_eq!(count_locally_valid(&split).unwrap(), count_locally_valid(&cp).unwrap());
        for w in split.interior_vertices() {
            let c = split.cone_at(w.id).unwrap();
            let mut a: Vec<Rational> = c.angles.clone();
            a.sort();
            assert_eq!(a, cone(&[45, 45, 135, 135]).angles);
        }
    }

    #[test]
    fn snake_split_matches_miura() {
        let cp = snake(2, 3).unwrap();
        let v = cp
            .interior_vertices()
            .find(|v| is_waterbomb(&cp.cone_at(v.id).unwrap()).is_some())
            .unwrap()
            .id;
        let split = split_waterbomb(&cp, v).unwrap();
        assert_eq!(count_locally_valid(&split).unwrap(), count_locally_valid(&miura(2, 3).unwrap()).unwrap());
        let bird = miura(2, 2).unwrap();
        let b = bird.interior_vertices().next().unwrap().id;
        assert_eq!(split_waterbomb(&bird, b).unwrap_err(), SawError::NotWaterbomb(b));
    }
}
