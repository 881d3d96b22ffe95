//! Brute-force ground truth: depth-first enumeration of locally valid
//! mountain/valley assignments of a whole crease pattern.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use thiserror::Error;

use crate::cone::{ConeVertex, Mv, MvAssignment};
use crate::pattern::{CreasePattern, PatternError};
use crate::scalar::Scalar;
use crate::single_vertex::{count_single_vertex_mv, enumerate_single_vertex_mv, kawasaki_check};
use crate::{Count, CreaseId, VertexId};

pub const DEFAULT_BRUTE_LIMIT: usize = 40;
pub const BRUTE_LIMIT_ENV: &str = "FLATFOLD_BRUTE_LIMIT";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("vertex {0} violates Kawasaki's condition")]
    KawasakiViolation(VertexId),
    #[error("pattern has {creases} creases, above the brute-force limit of {limit}")]
    LimitExceeded { creases: usize, limit: usize },
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalValidityReport {
    pub count: Count,
    /// Witnesses in search order, at most `cap` of them.
    pub witnesses: Vec<MvAssignment>,
    /// Set when more than `cap` assignments exist; `count` is still exact.
    pub cap_exceeded: bool,
    pub per_vertex_counts: BTreeMap<VertexId, Count>,
}

/// The brute-force crease limit, overridable through `FLATFOLD_BRUTE_LIMIT`.
pub fn brute_limit() -> usize {
    std::env::var(BRUTE_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BRUTE_LIMIT)
}

struct VertexTable {
    /// Search positions of the cone's creases, in cone order.
    positions: Vec<usize>,
    valid: HashSet<u64>,
}

struct Search<'a> {
    order: Vec<CreaseId>,
    /// Vertices whose last crease is assigned at each position.
    completes: Vec<Vec<usize>>,
    tables: Vec<VertexTable>,
    cap: usize,
    witnesses: &'a mut Vec<MvAssignment>,
    leaves: BigUint,
}

fn cones<S: Scalar>(cp: &CreasePattern<S>) -> Result<Vec<(VertexId, ConeVertex<S>)>, OracleError> {
    let mut out = Vec::new();
    for v in cp.interior_vertices() {
        let cone = cp.cone_at(v.id)?;
        if !kawasaki_check(&cone) {
            return Err(OracleError::KawasakiViolation(v.id));
        }
        out.push((v.id, cone));
    }
    Ok(out)
}

/// Vertex-clustered crease order: each interior vertex's creases in turn,
/// then the creases touching no interior vertex.
fn clustered_order<S: Scalar>(cp: &CreasePattern<S>, cones: &[(VertexId, ConeVertex<S>)]) -> Vec<CreaseId> {
    let mut seen = HashSet::new();
    let mut order = Vec::new();
    for (_, cone) in cones {
        for &c in &cone.creases {
            if seen.insert(c) {
                order.push(c);
            }
        }
    }
    for c in cp.crease_ids() {
        if seen.insert(c) {
            order.push(c);
        }
    }
    order
}

fn mask_of(values: impl Iterator<Item = Mv>) -> u64 {
    values
        .enumerate()
        .fold(0, |m, (i, v)| if v == Mv::Valley { m | 1 << i } else { m })
}

impl Search<'_> {
    fn new<'w, S: Scalar>(
        cones: &[(VertexId, ConeVertex<S>)],
        order: Vec<CreaseId>,
        cap: usize,
        witnesses: &'w mut Vec<MvAssignment>,
    ) -> Search<'w> {
        let pos: BTreeMap<CreaseId, usize> = order.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut completes = vec![Vec::new(); order.len()];
        let mut tables = Vec::new();
        for (_, cone) in cones {
            let positions: Vec<usize> = cone.creases.iter().map(|c| pos[c]).collect();
            let all = enumerate_single_vertex_mv(cone, usize::MAX).expect("Kawasaki checked");
            let valid = all
                .iter()
                .map(|m| mask_of(cone.creases.iter().map(|&c| m.get(c).unwrap())))
                .collect();
            if let Some(&last) = positions.iter().max() {
                completes[last].push(tables.len());
            }
            tables.push(VertexTable { positions, valid });
        }
        Search {
            order,
            completes,
            tables,
            cap,
            witnesses,
            leaves: BigUint::default(),
        }
    }

    fn run(&mut self, assign: &mut Vec<Mv>) {
        let k = assign.len();
        if k == self.order.len() {
            self.leaves += 1u32;
            if self.witnesses.len() < self.cap {
                self.witnesses
                    .push(self.order.iter().copied().zip(assign.iter().copied()).collect());
            }
            return;
        }
        for m in Mv::BOTH {
            assign.push(m);
            let ok = self.completes[k].iter().all(|&t| {
                let tab = &self.tables[t];
                tab.valid.contains(&mask_of(tab.positions.iter().map(|&p| assign[p])))
            });
            if ok {
                self.run(assign);
            }
            assign.pop();
        }
    }
}

fn search<S: Scalar>(
    cp: &CreasePattern<S>,
    order: Option<Vec<CreaseId>>,
    cap: usize,
    limit: usize,
) -> Result<LocalValidityReport, OracleError> {
    let n = cp.creases().len();
    if n > limit {
        return Err(OracleError::LimitExceeded { creases: n, limit });
    }
    let cones = cones(cp)?;
    let order = order.unwrap_or_else(|| clustered_order(cp, &cones));
    let mut witnesses = Vec::new();
    let mut s = Search::new(&cones, order, cap, &mut witnesses);
    s.run(&mut Vec::with_capacity(n));
    let count = s.leaves;
    let per_vertex_counts = cones
        .iter()
        .map(|(v, c)| (*v, count_single_vertex_mv(c).expect("Kawasaki checked")))
        .collect();
    Ok(LocalValidityReport {
        cap_exceeded: count > BigUint::from(cap),
        count,
        witnesses,
        per_vertex_counts,
    })
}

/// All locally valid assignments (up to `cap` witnesses) and their exact count.
pub fn enumerate_locally_valid<S: Scalar>(
    cp: &CreasePattern<S>,
    cap: usize,
) -> Result<LocalValidityReport, OracleError> {
    search(cp, None, cap, brute_limit())
}

/// Exact number of locally valid assignments, limited by [`brute_limit`].
pub fn count_locally_valid<S: Scalar>(cp: &CreasePattern<S>) -> Result<Count, OracleError> {
    count_locally_valid_with_limit(cp, brute_limit())
}

pub fn count_locally_valid_with_limit<S: Scalar>(cp: &CreasePattern<S>, limit: usize) -> Result<Count, OracleError> {
    Ok(search(cp, None, 0, limit)?.count)
}

/// Count using a caller-chosen crease order (every crease exactly once).
pub fn count_with_order<S: Scalar>(cp: &CreasePattern<S>, order: Vec<CreaseId>) -> Result<Count, OracleError> {
    let mut sorted = order.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, cp.crease_ids(), "order must be a permutation of the creases");
    Ok(search(cp, Some(order), 0, usize::MAX)?.count)
}

/// Whether every interior vertex accepts the restriction of `mv`.
pub fn is_locally_valid<S: Scalar>(cp: &CreasePattern<S>, mv: &MvAssignment) -> Result<bool, OracleError> {
    for (v, cone) in cones(cp)? {
        match crate::single_vertex::is_valid_single_vertex(&cone, mv) {
            Ok(true) => {}
            Ok(false) => return Ok(false),
            Err(crate::single_vertex::SingleVertexError::MissingCrease(_)) => return Ok(false),
            Err(_) => return Err(OracleError::KawasakiViolation(v)),
        }
    }
    Ok(cp.crease_ids().iter().all(|&c| mv.get(c).is_some()))
}
