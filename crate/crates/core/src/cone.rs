//! Mountain/valley labels and the single-vertex cone representation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;
use crate::CreaseId;

/// Fold direction of a single crease: mountain is `+1`, valley is `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Mv {
    Mountain,
    Valley,
}

impl Mv {
    pub const BOTH: [Mv; 2] = [Mv::Mountain, Mv::Valley];

    pub fn sign(self) -> i8 {
        match self {
            Mv::Mountain => 1,
            Mv::Valley => -1,
        }
    }

    pub fn from_sign(v: i64) -> Option<Mv> {
        match v {
            1 => Some(Mv::Mountain),
            -1 => Some(Mv::Valley),
            _ => None,
        }
    }

    pub fn flipped(self) -> Mv {
        match self {
            Mv::Mountain => Mv::Valley,
            Mv::Valley => Mv::Mountain,
        }
    }
}

impl From<Mv> for i8 {
    fn from(m: Mv) -> i8 {
        m.sign()
    }
}

impl TryFrom<i8> for Mv {
    type Error = String;
    fn try_from(v: i8) -> Result<Mv, String> {
        Mv::from_sign(v as i64).ok_or_else(|| format!("MV value must be 1 or -1, got {v}"))
    }
}

impl fmt::Display for Mv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mv::Mountain => "M",
            Mv::Valley => "V",
        })
    }
}

/// Total map from crease id to fold direction.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MvAssignment(pub BTreeMap<CreaseId, Mv>);

impl MvAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, c: CreaseId) -> Option<Mv> {
        self.0.get(&c).copied()
    }

    pub fn set(&mut self, c: CreaseId, m: Mv) {
        self.0.insert(c, m);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (CreaseId, Mv)> + '_ {
        self.0.iter().map(|(&c, &m)| (c, m))
    }

    /// Values for `creases` in the given order; `None` if any is missing.
    pub fn values_for(&self, creases: &[CreaseId]) -> Option<Vec<Mv>> {
        creases.iter().map(|&c| self.get(c)).collect()
    }

    pub fn restricted_to(&self, creases: &[CreaseId]) -> MvAssignment {
        MvAssignment(
            creases
                .iter()
                .filter_map(|&c| self.get(c).map(|m| (c, m)))
                .collect(),
        )
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (CreaseId, Mv)>) -> Self {
        MvAssignment(pairs.into_iter().collect())
    }
}

impl FromIterator<(CreaseId, Mv)> for MvAssignment {
    fn from_iter<I: IntoIterator<Item = (CreaseId, Mv)>>(iter: I) -> Self {
        MvAssignment(iter.into_iter().collect())
    }
}

/// The cyclic neighbourhood of one vertex: `angles[i]` is the sector between
/// `creases[i]` and `creases[(i + 1) % n]`, counterclockwise.
///
/// After crimping the total may differ from 360 degrees (the paper is then a
/// cone); nothing here assumes a flat total.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeVertex<S> {
    pub angles: Vec<S>,
    pub creases: Vec<CreaseId>,
}

impl<S: Scalar> ConeVertex<S> {
    pub fn new(angles: Vec<S>, creases: Vec<CreaseId>) -> Self {
        assert_eq!(
            angles.len(),
            creases.len(),
            "a cone needs one sector angle per crease"
        );
        ConeVertex { angles, creases }
    }

    /// Cone with creases labelled `0..n`.
    pub fn from_angles(angles: Vec<S>) -> Self {
        let creases = (0..angles.len() as CreaseId).collect();
        ConeVertex { angles, creases }
    }

    pub fn degree(&self) -> usize {
        self.angles.len()
    }

    pub fn cone_total(&self) -> S {
        self.angles.iter().fold(S::zero(), |acc, a| acc + a.clone())
    }

    pub fn all_equal(&self) -> bool {
        self.angles.windows(2).all(|w| w[0] == w[1])
    }

    /// Cyclic shift so that position `k` becomes position 0.
    pub fn rotated(&self, k: usize) -> Self {
        let n = self.degree();
        let angles = (0..n).map(|i| self.angles[(i + k) % n].clone()).collect();
        let creases = (0..n).map(|i| self.creases[(i + k) % n]).collect();
        ConeVertex { angles, creases }
    }

    /// Mirror image: the crease order is reversed and every sector keeps its
    /// two bounding creases.
    pub fn reflected(&self) -> Self {
        let n = self.degree();
        let creases: Vec<CreaseId> = (0..n).map(|i| self.creases[(n - i) % n]).collect();
        // sector between creases[(n-i)%n] and creases[(n-i-1)%n] is angles[(n-i-1)%n]
        let angles = (0..n).map(|i| self.angles[(2 * n - i - 1) % n].clone()).collect();
        ConeVertex { angles, creases }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_keeps_sector_neighbours() {
        let c = ConeVertex::<f64>::from_angles(vec![45.0, 30.0, 75.0, 90.0]);
        let r = c.reflected();
        assert_eq!(r.creases, vec![0, 3, 2, 1]);
        // sector between crease 0 and 3 is the 90 degree one
        assert_eq!(r.angles, vec![90.0, 75.0, 30.0, 45.0]);
        assert_eq!(r.cone_total(), 240.0);
    }

    #[test]
    fn mv_serde_is_signed_integer() {
        let a = MvAssignment::from_pairs([(0, Mv::Mountain), (3, Mv::Valley)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"0":1,"3":-1}"#);
        let back: MvAssignment = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<MvAssignment>(r#"{"0":2}"#).is_err());
    }
}
