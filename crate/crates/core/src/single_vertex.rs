//! Single-vertex flat-foldability: Kawasaki, Maekawa, Big-Little-Big and the
//! crimp recursion that reduces a vertex to an all-equal-angle cone.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::cone::{ConeVertex, Mv, MvAssignment};
use crate::scalar::Scalar;
use crate::{Count, CreaseId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SingleVertexError {
    #[error("vertex violates Kawasaki's condition")]
    KawasakiViolation,
    #[error("all sector angles are equal; use the base case")]
    AllAnglesEqual,
    #[error("invalid run: {0}")]
    InvalidRun(String),
    #[error("{count} assignments exceed the cap of {cap}")]
    CapExceeded { count: Count, cap: usize },
    #[error("assignment has no value for crease {0}")]
    MissingCrease(CreaseId),
}

/// A maximal run of `j` consecutive equal sector angles, strictly smaller than
/// both cyclic neighbours. `creases` are the `j + 1` creases bounding the run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinRun {
    pub start: usize,
    pub j: usize,
    pub creases: Vec<CreaseId>,
}

/// The crimp recursion from a vertex down to its all-equal base cone.
#[derive(Clone, Debug, PartialEq)]
pub struct CrimpTrace<S> {
    /// Each run together with the cone it produced.
    pub steps: Vec<(MinRun, ConeVertex<S>)>,
    pub terminal: ConeVertex<S>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Niceness {
    /// All sector angles were equal to begin with.
    AllEqual,
    /// Longest equal-angle run met during the recursion.
    MaxRun(usize),
}

impl Niceness {
    pub fn is_three_nice(self) -> bool {
        matches!(self, Niceness::MaxRun(j) if j <= 3)
    }
}

/// Even degree and zero alternating angle sum.
pub fn kawasaki_check<S: Scalar>(cone: &ConeVertex<S>) -> bool {
    let n = cone.degree();
    if n < 2 || n % 2 == 1 {
        return false;
    }
    let mut sum = S::zero();
    for (i, a) in cone.angles.iter().enumerate() {
        if i % 2 == 0 {
            sum = sum + a.clone();
        } else {
            sum = sum - a.clone();
        }
    }
    sum.is_zero()
}

fn mv_sum(values: &[Mv]) -> i64 {
    values.iter().map(|m| m.sign() as i64).sum()
}

/// Mountains minus valleys is plus or minus two.
pub fn maekawa_check(values: &[Mv]) -> bool {
    mv_sum(values).abs() == 2
}

/// Constraint on the `j + 1` creases bounding a minimal run of `j` equal angles.
pub fn blb_condition(j: usize, values: &[Mv]) -> bool {
    if j == 0 || values.len() != j + 1 {
        return false;
    }
    let s = mv_sum(values);
    if j % 2 == 1 {
        s == 0
    } else {
        s.abs() == 1
    }
}

/// Every minimal run, ordered by start index.
pub fn find_min_runs<S: Scalar>(cone: &ConeVertex<S>) -> Result<Vec<MinRun>, SingleVertexError> {
    let n = cone.degree();
    let a = &cone.angles;
    if n == 0 || cone.all_equal() {
        return Err(SingleVertexError::AllAnglesEqual);
    }
    let p = (0..n).find(|&i| a[i] != a[(i + n - 1) % n]).unwrap();
    let mut runs = Vec::new();
    let mut k = 0;
    while k < n {
        let s = (p + k) % n;
        let mut len = 1;
        while k + len < n && a[(s + len) % n] == a[s] {
            len += 1;
        }
        let before = &a[(s + n - 1) % n];
        let after = &a[(s + len) % n];
        if *before > a[s] && *after > a[s] {
            runs.push(MinRun {
                start: s,
                j: len,
                creases: (0..=len).map(|i| cone.creases[(s + i) % n]).collect(),
            });
        }
        k += len;
    }
    runs.sort_by_key(|r| r.start);
    Ok(runs)
}

fn check_run<S: Scalar>(cone: &ConeVertex<S>, run: &MinRun) -> Result<(), SingleVertexError> {
    let n = cone.degree();
    let bad = |m: &str| Err(SingleVertexError::InvalidRun(m.to_string()));
    if run.j == 0 || run.j + 2 > n || run.start >= n {
        return bad("run length out of range");
    }
    let a = &cone.angles;
    let x = &a[run.start];
    if (1..run.j).any(|i| a[(run.start + i) % n] != *x) {
        return bad("angles in the run differ");
    }
    if a[(run.start + n - 1) % n] <= *x || a[(run.start + run.j) % n] <= *x {
        return bad("run is not a strict local minimum");
    }
    let expect: Vec<CreaseId> = (0..=run.j).map(|i| cone.creases[(run.start + i) % n]).collect();
    if expect != run.creases {
        return bad("bounding creases do not match the cone");
    }
    Ok(())
}

/// Rotate so the lowest crease id comes first.
fn normalized<S: Scalar>(cone: ConeVertex<S>) -> ConeVertex<S> {
    let k = (0..cone.degree()).min_by_key(|&i| cone.creases[i]).unwrap_or(0);
    if k == 0 {
        cone
    } else {
        cone.rotated(k)
    }
}

/// Fold away a minimal run.
///
/// Odd `j`: the run and both neighbours collapse into one sector of size
/// `a[s-1] - a[s] + a[s+j]` and all `j + 1` bounding creases disappear.
/// Even `j`: the run angles and all bounding creases but the first are
/// removed; the first crease survives between the two neighbours.
pub fn crimp<S: Scalar>(cone: &ConeVertex<S>, run: &MinRun) -> Result<ConeVertex<S>, SingleVertexError> {
    check_run(cone, run)?;
    let n = cone.degree();
    let j = run.j;
    // index 0 is the left neighbour, the run occupies 1..=j
    let r = cone.rotated((run.start + n - 1) % n);
    let (angles, creases) = if j % 2 == 1 {
        let merged = r.angles[0].clone() - r.angles[1].clone() + r.angles[j + 1].clone();
        let mut angles = vec![merged];
        angles.extend_from_slice(&r.angles[j + 2..]);
        let mut creases = vec![r.creases[0]];
        creases.extend_from_slice(&r.creases[j + 2..]);
        (angles, creases)
    } else {
        let mut angles = vec![r.angles[0].clone()];
        angles.extend_from_slice(&r.angles[j + 1..]);
        let mut creases = vec![r.creases[0], r.creases[1]];
        creases.extend_from_slice(&r.creases[j + 2..]);
        (angles, creases)
    };
    Ok(normalized(ConeVertex::new(angles, creases)))
}

/// Crimp recursion choosing the first run each time.
pub fn crimp_trace<S: Scalar>(cone: &ConeVertex<S>) -> CrimpTrace<S> {
    crimp_trace_with(cone, |_| 0)
}

/// Crimp recursion with a caller-chosen run index at every step.
pub fn crimp_trace_with<S: Scalar>(
    cone: &ConeVertex<S>,
    mut pick: impl FnMut(&[MinRun]) -> usize,
) -> CrimpTrace<S> {
    let mut steps = Vec::new();
    let mut cur = cone.clone();
    while let Ok(runs) = find_min_runs(&cur) {
        let run = runs[pick(&runs).min(runs.len() - 1)].clone();
        match crimp(&cur, &run) {
            Ok(next) => {
                steps.push((run, next.clone()));
                cur = next;
            }
            Err(_) => break,
        }
    }
    CrimpTrace {
        steps,
        terminal: cur,
    }
}

fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::default();
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

fn run_factor(j: usize) -> Count {
    if j % 2 == 1 {
        binomial(j + 1, (j + 1) / 2)
    } else {
        binomial(j + 1, j / 2)
    }
}

fn base_count(degree: usize) -> Count {
    let n = degree / 2;
    if degree % 2 == 1 || n == 0 {
        return Count::default();
    }
    BigUint::from(2u32) * binomial(degree, n - 1)
}

/// Count implied by a crimp trace.
pub fn count_from_trace<S: Scalar>(trace: &CrimpTrace<S>) -> Count {
    if !trace.terminal.all_equal() {
        return Count::default();
    }
    trace
        .steps
        .iter()
        .fold(base_count(trace.terminal.degree()), |acc, (run, _)| acc * run_factor(run.j))
}

fn require_kawasaki<S: Scalar>(cone: &ConeVertex<S>) -> Result<(), SingleVertexError> {
    if kawasaki_check(cone) {
        Ok(())
    } else {
        Err(SingleVertexError::KawasakiViolation)
    }
}

/// Number of valid assignments, from the closed-form factors of the recursion.
pub fn count_single_vertex_mv<S: Scalar>(cone: &ConeVertex<S>) -> Result<Count, SingleVertexError> {
    require_kawasaki(cone)?;
    Ok(count_from_trace(&crimp_trace(cone)))
}

fn valid_rec<S: Scalar>(cone: &ConeVertex<S>, vals: &mut std::collections::BTreeMap<CreaseId, Mv>) -> bool {
    let Ok(runs) = find_min_runs(cone) else {
        let v: Vec<Mv> = cone.creases.iter().map(|c| vals[c]).collect();
        return maekawa_check(&v);
    };
    let run = &runs[0];
    let v: Vec<Mv> = run.creases.iter().map(|c| vals[c]).collect();
    if !blb_condition(run.j, &v) {
        return false;
    }
    let Ok(next) = crimp(cone, run) else {
        return false;
    };
    if run.j % 2 == 0 {
        let majority = if mv_sum(&v) > 0 { Mv::Mountain } else { Mv::Valley };
        vals.insert(run.creases[0], majority);
    }
    valid_rec(&next, vals)
}

/// Whether `mv` is a locally flat-foldable assignment of the vertex.
pub fn is_valid_single_vertex<S: Scalar>(
    cone: &ConeVertex<S>,
    mv: &MvAssignment,
) -> Result<bool, SingleVertexError> {
    require_kawasaki(cone)?;
    let mut vals = std::collections::BTreeMap::new();
    for &c in &cone.creases {
        vals.insert(c, mv.get(c).ok_or(SingleVertexError::MissingCrease(c))?);
    }
    Ok(valid_rec(cone, &mut vals))
}

/// All `len`-vectors with the given sign sum.
fn vectors_with_sum(len: usize, sum: i64) -> Vec<Vec<Mv>> {
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << len) {
        let v: Vec<Mv> = (0..len)
            .map(|i| if bits >> i & 1 == 1 { Mv::Valley } else { Mv::Mountain })
            .collect();
        if mv_sum(&v) == sum {
            out.push(v);
        }
    }
    out
}

fn enumerate_rec<S: Scalar>(cone: &ConeVertex<S>) -> Vec<MvAssignment> {
    let Ok(runs) = find_min_runs(cone) else {
        let n = cone.degree();
        return [2, -2]
            .iter()
            .flat_map(|&s| vectors_with_sum(n, s))
            .map(|v| cone.creases.iter().copied().zip(v).collect())
            .collect();
    };
    let run = &runs[0];
    let next = crimp(cone, run).expect("first run is valid");
    let sub = enumerate_rec(&next);
    let mut out = Vec::new();
    for base in sub {
        let target = if run.j % 2 == 1 {
            0
        } else {
            base.get(run.creases[0]).expect("survivor is assigned").sign() as i64
        };
        for v in vectors_with_sum(run.j + 1, target) {
            let mut m = base.clone();
            for (&c, &x) in run.creases.iter().zip(&v) {
                m.set(c, x);
            }
            out.push(m);
        }
    }
    out
}

/// Materialize every valid assignment, refusing when there are more than `cap`.
pub fn enumerate_single_vertex_mv<S: Scalar>(
    cone: &ConeVertex<S>,
    cap: usize,
) -> Result<Vec<MvAssignment>, SingleVertexError> {
    let count = count_single_vertex_mv(cone)?;
    if count > BigUint::from(cap) {
        return Err(SingleVertexError::CapExceeded { count, cap });
    }
    let mut all = enumerate_rec(cone);
    all.sort();
    Ok(all)
}

/// Longest run met by the deterministic recursion, or [`Niceness::AllEqual`].
pub fn niceness<S: Scalar>(cone: &ConeVertex<S>) -> Result<Niceness, SingleVertexError> {
    require_kawasaki(cone)?;
    if cone.all_equal() {
        return Ok(Niceness::AllEqual);
    }
    let trace = crimp_trace(cone);
    Ok(Niceness::MaxRun(trace.steps.iter().map(|(r, _)| r.j).max().unwrap_or(0)))
}
