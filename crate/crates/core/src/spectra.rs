//! Lee homology, reduced Khovanov homology and rank inequalities from spectral sequences.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cube::{Ring, Variant};
use crate::diagram::{ArcId, LinkDiagram};
use crate::homology::{compute, ComputeError, GradedAbelianGroup, GradedRankTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error(transparent)]
    Compute(#[from] ComputeError),
    #[error("tables are over different fields: {0:?} and {1:?}")]
    FieldMismatch(Ring, Ring),
    #[error("Lee homology has rank {got}, expected {expected}")]
    LeeRank { got: usize, expected: usize },
}

/// How the nonzero homological degree of the Lee generators relates to the linking number.
/// The direct computation on the positive Hopf link puts them in degree 2·lk.
pub const LEE_DEGREE_PER_LINKING: i64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeeResult {
    pub ranks_by_i: BTreeMap<i64, usize>,
    pub total: usize,
}

impl LeeResult {
    pub fn to_json(&self) -> Value {
        json!({"schema": "khovanov.lee/1", "ranks_by_i": self.ranks_by_i, "total": self.total,
               "degree_per_linking": LEE_DEGREE_PER_LINKING})
    }
}

/// Rational homology of the Lee complex, graded by i only.
pub fn lee_homology(d: &LinkDiagram) -> Result<LeeResult, SpectraError> {
    let g = compute(d, Variant::Lee, Ring::Rationals, None)?;
    let mut ranks_by_i = BTreeMap::new();
    for (k, s) in &g.table {
        *ranks_by_i.entry(k.i).or_insert(0) += s.free;
    }
    let total = ranks_by_i.values().sum();
    let expected = 1usize << d.component_count().max(1);
    if total != expected {
        return Err(SpectraError::LeeRank { got: total, expected });
    }
    Ok(LeeResult { ranks_by_i, total })
}

pub fn reduced_kh(d: &LinkDiagram, basepoint: ArcId, ring: Ring) -> Result<GradedAbelianGroup, SpectraError> {
    Ok(compute(d, Variant::Reduced, ring, Some(basepoint))?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub grading: Option<i64>,
    pub lhs: i64,
    pub rhs: i64,
}

impl Comparison {
    pub fn slack(&self) -> i64 {
        self.lhs - self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound: &'static str,
    pub comparisons: Vec<Comparison>,
    pub satisfied: bool,
    /// Grading of minimal slack (the first violation when unsatisfied).
    pub witness: Option<i64>,
}

impl BoundReport {
    fn new(bound: &'static str, comparisons: Vec<Comparison>) -> Self {
        let satisfied = comparisons.iter().all(|c| c.slack() >= 0);
        let witness = comparisons.iter().min_by_key(|c| c.slack()).and_then(|c| c.grading);
        BoundReport { bound, comparisons, satisfied, witness }
    }

    /// Gradings where the inequality fails.
    pub fn violations(&self) -> Vec<Option<i64>> {
        self.comparisons.iter().filter(|c| c.slack() < 0).map(|c| c.grading).collect()
    }

    pub fn is_equality(&self) -> bool {
        self.comparisons.iter().all(|c| c.slack() == 0)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .comparisons
            .iter()
            .map(|c| json!({"grading": c.grading, "lhs": c.lhs, "rhs": c.rhs, "slack": c.slack()}))
            .collect();
        json!({"schema": "khovanov.bound/1", "bound": self.bound, "satisfied": self.satisfied,
               "witness": self.witness, "comparisons": rows})
    }
}

/// rank^l Kh(L) ≥ rank^{l+2lk} of the tensor product of the components' Kh, l = i − j.
pub fn batson_seed_check(kh_l: &GradedRankTable, parts: &[GradedRankTable], lk: i64) -> Result<BoundReport, SpectraError> {
    for p in parts {
        if p.field != kh_l.field {
            return Err(SpectraError::FieldMismatch(kh_l.field, p.field));
        }
    }
    let mut prod = GradedRankTable::new(kh_l.field, [(crate::cube::Grading::new(0, 0, 0), 1)]);
    for p in parts {
        prod = prod.tensor(&p.forget_k());
    }
    let lhs = kh_l.by_l();
    let rhs = prod.by_l();
    let mut ls: Vec<i64> = lhs.keys().copied().collect();
    ls.extend(rhs.keys().map(|l| l - 2 * lk));
    ls.sort_unstable();
    ls.dedup();
    let comparisons = ls
        .into_iter()
        .map(|l| Comparison {
            grading: Some(l),
            lhs: lhs.get(&l).copied().unwrap_or(0) as i64,
            rhs: rhs.get(&(l + 2 * lk)).copied().unwrap_or(0) as i64,
        })
        .collect();
    Ok(BoundReport::new("batson-seed", comparisons))
}

/// 2^(n−1) · rank of reduced Kh ≥ rank of knot Floer homology.
pub fn dowlin_bound_check(reduced_rank: u64, hfk_rank: u64, components: u32) -> BoundReport {
    let lhs = (reduced_rank << components.saturating_sub(1)) as i64;
    BoundReport::new("dowlin", vec![Comparison { grading: None, lhs, rhs: hfk_rank as i64 }])
}

/// Lee rank bounds Kh rank over the rationals from above, degree by degree.
pub fn lee_bound_check(kh: &GradedRankTable, lee: &LeeResult) -> BoundReport {
    let by_i = kh.by_i();
    let comparisons = lee
        .ranks_by_i
        .iter()
        .map(|(&i, &r)| Comparison { grading: Some(i), lhs: by_i.get(&i).copied().unwrap_or(0) as i64, rhs: r as i64 })
        .collect();
    BoundReport::new("lee", comparisons)
}

/// Over the two-element field, unreduced rank is twice the reduced rank for knots.
pub fn shumakovitch_check(plain_f2_rank: u64, reduced_f2_rank: u64) -> BoundReport {
    let c = Comparison { grading: None, lhs: plain_f2_rank as i64, rhs: 2 * reduced_f2_rank as i64 };
    let mut r = BoundReport::new("shumakovitch", vec![c]);
    r.satisfied = r.is_equality();
    r
}
