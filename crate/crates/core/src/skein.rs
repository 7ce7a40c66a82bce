//! Skein triples at a crossing of an annular diagram and rank-level checks of the
//! associated exact triangle.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cube::Grading;
use crate::diagram::{AnnularDiagram, ArcId, DiagramError, LinkDiagram, RayStep};
use crate::homology::GradedRankTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("no crossing {0}")]
    UnknownCrossing(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("tables are over different fields")]
    FieldMismatch,
}

/// A shift [i]{j}: homological degree up by `i`, quantum degree up by `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shift {
    pub i: i64,
    pub j: i64,
}

impl Shift {
    pub fn apply(&self, t: &GradedRankTable) -> GradedRankTable {
        t.shift(self.i, self.j)
    }
}

#[derive(Debug, Clone)]
pub struct SkeinTriple {
    pub link: AnnularDiagram,
    pub crossing: usize,
    pub sign: i8,
    pub l0: AnnularDiagram,
    pub l1: AnnularDiagram,
    pub shift0: Shift,
    pub shift1: Shift,
    /// Change in the number of negative crossings of the unoriented resolution relative to
    /// its orientation as first traced.
    pub reorientation: i64,
}

impl SkeinTriple {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": "khovanov.skein/1",
            "crossing": self.crossing,
            "sign": self.sign,
            "l0": {"pd": self.l0.base().to_pd(), "n_minus": self.l0.base().n_minus(), "shift": self.shift0},
            "l1": {"pd": self.l1.base().to_pd(), "n_minus": self.l1.base().n_minus(), "shift": self.shift1},
            "reorientation": self.reorientation,
        })
    }
}

/// Smoothing of crossing `c` (0 or 1) with the axis carried along. Arcs keep the direction in
/// which they are traced through the smoothing; `reverse` then flips whole components.
pub fn resolve_crossing(d: &AnnularDiagram, c: usize, one: bool, reverse: &[usize]) -> Result<AnnularDiagram, SkeinError> {
    let base = d.base();
    if c >= base.crossing_count() {
        return Err(SkeinError::UnknownCrossing(c));
    }
    let (raw, pieces) = base.smooth(c, one);
    let heads = base.inherited_heads(c, &pieces);
    // whether each new arc ends up oriented along its traced direction
    let mut agree: BTreeMap<ArcId, bool> = BTreeMap::new();
    let new = LinkDiagram::assemble(&raw, &mut |t| {
        let keep = heads.get(&t[0].0) == Some(&t[0].2);
        for &(a, _, h) in t {
            agree.insert(a, (heads.get(&a) == Some(&h)) == keep);
        }
        Ok(keep)
    })?;
    let ray = d
        .ray()
        .iter()
        .map(|s| {
            let (arc, same) = pieces[&s.arc];
            let along = same == agree.get(&arc).copied().unwrap_or(true);
            RayStep { arc, left_to_right: s.left_to_right == along }
        })
        .collect();
    let a = AnnularDiagram::from_ray(new, ray);
    if reverse.is_empty() {
        Ok(a)
    } else {
        Ok(a.reverse_components(reverse)?)
    }
}

/// Resolutions at `c` with the grading shifts of the exact triangle
/// AKh(L) → AKh(L0)[..]{..} → AKh(L1)[..]{..} → AKh(L)[1].
///
/// The oriented resolution inherits its orientation. The other is oriented to make its
/// homological shift as small as possible in absolute value (ties: fewest reversals, then
/// lowest component indices).
pub fn skein_triple(d: &AnnularDiagram, c: usize) -> Result<SkeinTriple, SkeinError> {
    let base = d.base();
    if c >= base.crossing_count() {
        return Err(SkeinError::UnknownCrossing(c));
    }
    let sign = base.crossings()[c].sign;
    let nm = base.n_minus() as i64;
    // the 0-smoothing of a positive crossing is the oriented one
    let oriented_one = sign < 0;
    let oriented = resolve_crossing(d, c, oriented_one, &[])?;
    let traced = resolve_crossing(d, c, !oriented_one, &[])?;
    let k = traced.base().component_count();
    let mut best: Option<(i64, usize, Vec<usize>, AnnularDiagram)> = None;
    for mask in 0..1u64 << k.min(16) {
        let which: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).collect();
        let a = if which.is_empty() { traced.clone() } else { traced.reverse_components(&which)? };
        let m = a.base().n_minus() as i64;
        let hom = if sign > 0 { m - nm + 1 } else { m - nm };
        let key = (hom.abs(), which.len());
        if best.as_ref().map_or(true, |b| key < (b.0, b.1)) {
            best = Some((key.0, key.1, which, a));
        }
    }
    let (_, _, _, other) = best.unwrap();
    let e = other.base().n_minus() as i64 - traced.base().n_minus() as i64;
    let (l0, l1) = if oriented_one { (other, oriented) } else { (oriented, other) };
    let (shift0, shift1) = if sign > 0 {
        let m1 = l1.base().n_minus() as i64;
        (Shift { i: 0, j: 1 }, Shift { i: m1 - nm + 1, j: 3 * m1 - 3 * nm + 2 })
    } else {
        let m0 = l0.base().n_minus() as i64;
        (Shift { i: m0 - nm, j: 3 * m0 - 3 * nm + 1 }, Shift { i: 0, j: -1 })
    };
    Ok(SkeinTriple { link: d.clone(), crossing: c, sign, l0, l1, shift0, shift1, reorientation: e })
}

/// Effect of reversing strands on AKh: a uniform shift [e]{3e} where e is the change in the
/// number of negative crossings.
pub fn orientation_shift(akh: &GradedRankTable, e: i64) -> GradedRankTable {
    akh.shift(e, 3 * e)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockStatus {
    pub j: i64,
    pub k: i64,
    pub euler: bool,
    /// Homological degrees where a rank inequality fails.
    pub violations: Vec<i64>,
    pub split: bool,
    pub forced_split: bool,
}

impl BlockStatus {
    pub fn ok(&self) -> bool {
        self.euler && self.violations.is_empty() && (self.split || !self.forced_split)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub blocks: Vec<BlockStatus>,
    pub split: bool,
    pub ok: bool,
}

impl ExactnessReport {
    pub fn to_json(&self) -> Value {
        json!({"schema": "khovanov.exactness/1", "ok": self.ok, "split": self.split, "blocks": self.blocks})
    }
}

/// Rank consequences of exactness of ... → L^i → B^i → C^{i+1} → L^{i+1} → ..., where `b`
/// and `c` are the already shifted second and third terms and every map preserves (j, k).
pub fn verify_exactness(l: &GradedRankTable, b: &GradedRankTable, c: &GradedRankTable) -> Result<ExactnessReport, SkeinError> {
    if l.field != b.field || l.field != c.field {
        return Err(SkeinError::FieldMismatch);
    }
    let mut keys: BTreeSet<(i64, i64)> = BTreeSet::new();
    let mut degrees: BTreeMap<(i64, i64), BTreeSet<i64>> = BTreeMap::new();
    for t in [l, b, c] {
        for g in t.table.keys() {
            keys.insert((g.j, g.k));
            let d = degrees.entry((g.j, g.k)).or_default();
            d.insert(g.i);
            d.insert(g.i - 1);
            d.insert(g.i + 1);
        }
    }
    let mut blocks = Vec::new();
    for &(j, k) in &keys {
        let r = |t: &GradedRankTable, i: i64| t.get(Grading::new(i, j, k)) as i64;
        let mut chi = 0;
        let mut violations = Vec::new();
        let mut split = true;
        let mut forced = true;
        for &i in &degrees[&(j, k)] {
            let s = if i.rem_euclid(2) == 0 { 1 } else { -1 };
            chi += s * (r(l, i) - r(b, i) - r(c, i));
            let ok = r(l, i) <= r(b, i) + r(c, i)
                && r(b, i) <= r(l, i) + r(c, i + 1)
                && r(c, i + 1) <= r(b, i) + r(l, i + 1);
            if !ok {
                violations.push(i);
            }
            if r(l, i) != r(b, i) + r(c, i) {
                split = false;
            }
            if r(b, i) > 0 && r(c, i + 1) > 0 {
                forced = false;
            }
        }
        blocks.push(BlockStatus { j, k, euler: chi == 0, violations, split, forced_split: forced });
    }
    let ok = blocks.iter().all(|b| b.ok());
    let split = blocks.iter().all(|b| b.split);
    Ok(ExactnessReport { blocks, split, ok })
}
