//! The cube of resolutions as an explicit trigraded chain complex.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{AnnularDiagram, ArcId, LinkDiagram, ResolutionState, StateCircles};
use crate::homology::IntegerMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plain,
    Reduced,
    Annular,
    Lee,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Integers,
    Rationals,
    Field2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Grading {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl Grading {
    pub fn new(i: i64, j: i64, k: i64) -> Self {
        Grading { i, j, k }
    }

    pub fn shift(self, di: i64, dj: i64) -> Self {
        Grading { i: self.i + di, j: self.j + dj, k: self.k }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub state: ResolutionState,
    /// Bit c set when circle c carries the minus label.
    pub minus: u64,
    pub grading: Grading,
}

impl Generator {
    pub fn label(&self, circle: usize) -> Label {
        if self.minus >> circle & 1 == 1 {
            Label::Minus
        } else {
            Label::Plus
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubeError {
    #[error("the reduced variant needs a basepoint")]
    MissingBasepoint,
    #[error("basepoint {0} is not an arc of the diagram")]
    BadBasepoint(ArcId),
    #[error("the annular variant needs an annular diagram")]
    NotAnnular,
    #[error("the Lee variant is computed over the rationals only")]
    LeeRing,
    #[error("states must differ in exactly one bit, from 0 to 1")]
    NotAnEdge,
    #[error("diagram too large for an explicit cube ({0} crossings)")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Copy)]
pub enum Input<'a> {
    Link(&'a LinkDiagram),
    Annular(&'a AnnularDiagram),
}

impl<'a> From<&'a LinkDiagram> for Input<'a> {
    fn from(d: &'a LinkDiagram) -> Self {
        Input::Link(d)
    }
}

impl<'a> From<&'a AnnularDiagram> for Input<'a> {
    fn from(d: &'a AnnularDiagram) -> Self {
        Input::Annular(d)
    }
}

impl<'a> Input<'a> {
    pub fn base(&self) -> &'a LinkDiagram {
        match self {
            Input::Link(d) => d,
            Input::Annular(a) => a.base(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriGradedComplex {
    pub variant: Variant,
    pub ring: Ring,
    groups: BTreeMap<i64, Vec<Generator>>,
    differentials: BTreeMap<i64, IntegerMatrix>,
}

pub fn cube_sign(state: &ResolutionState, flipped: usize) -> i8 {
    let before = state.bits & ((1u64 << flipped) - 1);
    if before.count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// One elementary saddle: the circles involved and the label map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EdgeMap {
    /// Circles `from` of the source merge into circle `into` of the target.
    Merge { from: [usize; 2], into: usize, terms: Vec<([Label; 2], Label)> },
    /// Circle `from` splits into circles `into` of the target.
    Split { from: usize, into: [usize; 2], terms: Vec<(Label, [Label; 2])> },
}

fn k_of(l: Label, essential: bool) -> i64 {
    match (essential, l) {
        (false, _) => 0,
        (true, Label::Plus) => 1,
        (true, Label::Minus) => -1,
    }
}

/// The Frobenius map on the circles touched by a saddle from `from` to `to`.
pub fn edge_map(from: &StateCircles, to: &StateCircles, variant: Variant) -> Result<EdgeMap, CubeError> {
    let diff = from.state.bits ^ to.state.bits;
    if diff.count_ones() != 1 || from.state.bits & diff != 0 || from.state.len != to.state.len {
        return Err(CubeError::NotAnEdge);
    }
    let c = diff.trailing_zeros() as usize;
    let [a, b] = from.incidence[c];
    let [x, y] = to.incidence[c];
    let ess = |s: &StateCircles, i: usize| s.circles[i].winding != 0;
    use Label::*;
    if a != b {
        let mut terms = vec![([Plus, Plus], Plus), ([Plus, Minus], Minus), ([Minus, Plus], Minus)];
        if variant == Variant::Lee {
            terms.push(([Minus, Minus], Plus));
        }
        if variant == Variant::Annular {
            terms.retain(|&([p, q], r)| k_of(p, ess(from, a)) + k_of(q, ess(from, b)) == k_of(r, ess(to, x)));
        }
        Ok(EdgeMap::Merge { from: [a, b], into: x, terms })
    } else {
        let mut terms = vec![(Plus, [Plus, Minus]), (Plus, [Minus, Plus]), (Minus, [Minus, Minus])];
        if variant == Variant::Lee {
            terms.push((Minus, [Plus, Plus]));
        }
        if variant == Variant::Annular {
            terms.retain(|&(p, [q, r])| k_of(p, ess(from, a)) == k_of(q, ess(to, x)) + k_of(r, ess(to, y)));
        }
        Ok(EdgeMap::Split { from: a, into: [x, y], terms })
    }
}

struct StateData {
    arc_circle: Vec<u32>,
    count: usize,
    essential: u64,
}

pub fn build_complex<'a>(
    input: impl Into<Input<'a>>,
    variant: Variant,
    ring: Ring,
    basepoint: Option<ArcId>,
) -> Result<TriGradedComplex, CubeError> {
    let input = input.into();
    let d = input.base();
    let n = d.crossing_count();
    if n > 30 {
        return Err(CubeError::TooLarge(n));
    }
    if variant == Variant::Lee && ring != Ring::Rationals {
        return Err(CubeError::LeeRing);
    }
    let ray = match (variant, input) {
        (Variant::Annular, Input::Annular(a)) => Some(a.ray_signs()),
        (Variant::Annular, Input::Link(_)) => return Err(CubeError::NotAnnular),
        _ => None,
    };
    let base_arc = match (variant, basepoint) {
        (Variant::Reduced, None) => return Err(CubeError::MissingBasepoint),
        (Variant::Reduced, Some(b)) => Some(d.arc_index(b).ok_or(CubeError::BadBasepoint(b))?),
        _ => None,
    };
    let states: Vec<StateData> = (0..1u64 << n)
        .into_par_iter()
        .map(|s| {
            let (arc_circle, count) = d.circles_of(s);
            let mut essential = 0u64;
            if let Some(r) = &ray {
                for (c, path) in d.circle_paths(s).iter().enumerate() {
                    let w: i32 = path.iter().map(|&(a, f)| if f { r[a] } else { -r[a] }).sum();
                    assert!(w.abs() <= 1, "circle winding {w} outside [-1, 1]");
                    if w != 0 {
                        essential |= 1 << c;
                    }
                }
            }
            StateData { arc_circle, count, essential }
        })
        .collect();
    let (np, nm) = (d.n_plus() as i64, d.n_minus() as i64);
    let reduced_shift = if variant == Variant::Reduced { 1 } else { 0 };
    // basepoint circle in each state, if reduced
    let fixed = |s: usize| base_arc.map(|a| states[s].arc_circle[a] as usize);
    let mask_count = |s: usize| 1usize << (states[s].count - fixed(s).map_or(0, |_| 1));
    let expand = |s: usize, local: u64| -> u64 {
        match fixed(s) {
            None => local,
            Some(b) => {
                let low = local & ((1 << b) - 1);
                let high = local >> b;
                (high << (b + 1)) | (1 << b) | low
            }
        }
    };
    let compress = |s: usize, mask: u64| -> Option<u64> {
        match fixed(s) {
            None => Some(mask),
            Some(b) => {
                if mask >> b & 1 == 0 {
                    return None;
                }
                Some(((mask >> (b + 1)) << b) | (mask & ((1 << b) - 1)))
            }
        }
    };

    let mut offset = vec![0usize; 1 << n];
    let mut sizes: BTreeMap<i64, usize> = BTreeMap::new();
    for s in 0..1usize << n {
        let i = s.count_ones() as i64 - nm;
        let e = sizes.entry(i).or_insert(0);
        offset[s] = *e;
        *e += mask_count(s);
    }
    let mut groups: BTreeMap<i64, Vec<Generator>> = BTreeMap::new();
    for s in 0..1usize << n {
        let h = s.count_ones() as i64;
        let i = h - nm;
        let sd = &states[s];
        let g = groups.entry(i).or_default();
        for local in 0..mask_count(s) as u64 {
            let mask = expand(s, local);
            let minus = mask.count_ones() as i64;
            let plus = sd.count as i64 - minus;
            let k = if ray.is_some() {
                let e = sd.essential;
                (e & !mask).count_ones() as i64 - (e & mask).count_ones() as i64
            } else {
                0
            };
            let j = plus - minus + h + np - 2 * nm + reduced_shift;
            g.push(Generator { state: ResolutionState::new(s as u64, n), minus: mask, grading: Grading { i, j, k } });
        }
    }

    let slot_arc = d.slot_arcs();
    let lee = variant == Variant::Lee;
    let annular = ray.is_some();
    // entries (row, col, value) of d^i for each source state
    let entries: Vec<(i64, Vec<(usize, usize, i8)>)> = (0..1usize << n)
        .into_par_iter()
        .map(|s| {
            let i = s.count_ones() as i64 - nm;
            let src = &states[s];
            let mut out = Vec::new();
            for c in 0..n {
                if s >> c & 1 == 1 {
                    continue;
                }
                let t = s | 1 << c;
                let tgt = &states[t];
                let sign = cube_sign(&ResolutionState::new(s as u64, n), c);
                let sa = slot_arc[c];
                let a = src.arc_circle[sa[0] as usize] as usize;
                let b = src.arc_circle[sa[2] as usize] as usize;
                let x = tgt.arc_circle[sa[0] as usize] as usize;
                let y = tgt.arc_circle[sa[1] as usize] as usize;
                // target circle of each untouched source circle
                let mut perm = vec![usize::MAX; src.count];
                for (arc, &cc) in src.arc_circle.iter().enumerate() {
                    let cc = cc as usize;
                    if cc != a && cc != b && perm[cc] == usize::MAX {
                        perm[cc] = tgt.arc_circle[arc] as usize;
                    }
                }
                let ess_s = |q: usize| src.essential >> q & 1 == 1;
                let ess_t = |q: usize| tgt.essential >> q & 1 == 1;
                let kv = |minus: bool, e: bool| -> i64 {
                    if !e {
                        0
                    } else if minus {
                        -1
                    } else {
                        1
                    }
                };
                for local in 0..mask_count(s) as u64 {
                    let mask = expand(s, local);
                    let mut rest = 0u64;
                    for q in 0..src.count {
                        if q != a && q != b && mask >> q & 1 == 1 {
                            rest |= 1 << perm[q];
                        }
                    }
                    let col = offset[s] + local as usize;
                    let mut push = |tmask: u64| {
                        if let Some(tl) = compress(t, tmask) {
                            out.push((offset[t] + tl as usize, col, sign));
                        }
                    };
                    let ma = mask >> a & 1 == 1;
                    if a != b {
                        let mb = mask >> b & 1 == 1;
                        let result = match (ma, mb) {
                            (false, false) => Some(false),
                            (true, false) | (false, true) => Some(true),
                            (true, true) => lee.then_some(false),
                        };
                        if let Some(r) = result {
                            if !annular || kv(ma, ess_s(a)) + kv(mb, ess_s(b)) == kv(r, ess_t(x)) {
                                push(rest | if r { 1 << x } else { 0 });
                            }
                        }
                    } else {
                        let mut terms: Vec<(bool, bool)> = Vec::with_capacity(2);
                        if !ma {
                            terms.push((false, true));
                            terms.push((true, false));
                        } else {
                            terms.push((true, true));
                            if lee {
                                terms.push((false, false));
                            }
                        }
                        for (p, q) in terms {
                            if annular && kv(ma, ess_s(a)) != kv(p, ess_t(x)) + kv(q, ess_t(y)) {
                                continue;
                            }
                            let m = rest | if p { 1 << x } else { 0 } | if q { 1 << y } else { 0 };
                            push(m);
                        }
                    }
                }
            }
            (i, out)
        })
        .collect();
    let mut triplets: BTreeMap<i64, Vec<(usize, usize, i8)>> = BTreeMap::new();
    for (i, e) in entries {
        triplets.entry(i).or_default().extend(e);
    }
    let mut differentials = BTreeMap::new();
    for (&i, g) in &groups {
        let rows = groups.get(&(i + 1)).map_or(0, |v| v.len());
        let t = triplets.remove(&i).unwrap_or_default();
        differentials.insert(i, IntegerMatrix::from_triplets(rows, g.len(), t.into_iter().map(|(r, c, v)| (r, c, v as i64))));
    }
    Ok(TriGradedComplex { variant, ring, groups, differentials })
}

impl TriGradedComplex {
    pub fn new(
        variant: Variant,
        ring: Ring,
        groups: BTreeMap<i64, Vec<Generator>>,
        differentials: BTreeMap<i64, IntegerMatrix>,
    ) -> Self {
        TriGradedComplex { variant, ring, groups, differentials }
    }

    pub fn groups(&self) -> &BTreeMap<i64, Vec<Generator>> {
        &self.groups
    }

    pub fn generators(&self, i: i64) -> &[Generator] {
        self.groups.get(&i).map_or(&[], |v| v.as_slice())
    }

    /// The differential from degree i to degree i+1.
    pub fn differential(&self, i: i64) -> Option<&IntegerMatrix> {
        self.differentials.get(&i)
    }

    pub fn len(&self) -> usize {
        self.groups.values().map(|v| v.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn with_ring(mut self, ring: Ring) -> Self {
        self.ring = ring;
        self
    }

    /// Checks d∘d = 0 over the integers.
    pub fn d_squared_is_zero(&self) -> bool {
        self.differentials.iter().all(|(&i, d)| match self.differentials.get(&(i + 1)) {
            Some(e) if e.cols() == d.rows() => e.mul(d).is_zero(),
            _ => true,
        })
    }

    /// Checks that every differential entry joins generators of equal j (and k when annular).
    pub fn preserves_gradings(&self) -> bool {
        if self.variant == Variant::Lee {
            return true;
        }
        self.differentials.iter().all(|(&i, d)| {
            d.iter().all(|(r, c, _)| {
                let a = self.groups[&i][c].grading;
                let b = self.groups[&(i + 1)][r].grading;
                a.j == b.j && a.k == b.k
            })
        })
    }
}
