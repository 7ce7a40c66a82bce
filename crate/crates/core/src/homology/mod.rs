//! Exact graded homology over the integers, the rationals and the two-element field.

mod matrix;
mod reduce;
mod tables;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::cube::{build_complex, CubeError, Generator, Grading, Input, Ring, TriGradedComplex, Variant};
use crate::diagram::ArcId;

pub use matrix::{smith_normal_form, IntegerMatrix, SmithForm};
pub use reduce::{Coefficient, Reducer, F2};
pub use tables::{GradedAbelianGroup, GradedRankTable, Summand};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("d∘d is not zero in degree {0}")]
    NotAComplex(i64),
    #[error("expected an integral table, got {0:?}")]
    NotIntegral(Ring),
    #[error("rank tables must be over a field, got {0:?}")]
    NotAField(Ring),
    #[error("field mismatch: {0:?} vs {1:?}")]
    FieldMismatch(Ring, Ring),
}

type BlockKey = (i64, i64);

struct Block {
    key: BlockKey,
    gens: Vec<(i64, usize)>,
    entries: Vec<(usize, usize, BigInt)>,
}

fn blocks(c: &TriGradedComplex) -> Vec<Block> {
    let lee = c.variant == Variant::Lee;
    let key = |g: &Generator| if lee { (0, 0) } else { (g.grading.j, g.grading.k) };
    let mut local: BTreeMap<(i64, usize), (BlockKey, usize)> = BTreeMap::new();
    let mut out: BTreeMap<BlockKey, Block> = BTreeMap::new();
    for (&i, gens) in c.groups() {
        for (idx, g) in gens.iter().enumerate() {
            let k = key(g);
            let b = out.entry(k).or_insert_with(|| Block { key: k, gens: vec![], entries: vec![] });
            local.insert((i, idx), (k, b.gens.len()));
            b.gens.push((i, idx));
        }
    }
    for &i in c.groups().keys() {
        let Some(d) = c.differential(i) else { continue };
        for (r, col, v) in d.iter() {
            let (kc, x) = local[&(i, col)];
            let (kr, y) = local[&(i + 1, r)];
            assert_eq!(kc, kr, "differential mixes gradings");
            out.get_mut(&kc).unwrap().entries.push((x, y, v.clone()));
        }
    }
    out.into_values().collect()
}

fn reduce_block<R: Coefficient>(b: &Block) -> Reducer<R> {
    let degree = b.gens.iter().map(|g| g.0).collect();
    let mut r = Reducer::new(degree, b.entries.iter().map(|(x, y, v)| (*x, *y, R::from_int(v))));
    r.run();
    r
}

/// Homology of the block over a field: every nonzero entry cancels, so survivors are the basis.
fn field_block<R: Coefficient>(b: &Block) -> BTreeMap<i64, Summand> {
    let r = reduce_block::<R>(b);
    let mut out: BTreeMap<i64, Summand> = BTreeMap::new();
    for x in r.survivors() {
        assert!(r.out[x].is_empty(), "field reduction left a nonzero entry");
        out.entry(r.degree[x]).or_default().free += 1;
    }
    out
}

fn integer_block(b: &Block) -> BTreeMap<i64, Summand> {
    let r = reduce_block::<BigInt>(b);
    let alive = r.survivors();
    let mut by_deg: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for &x in &alive {
        by_deg.entry(r.degree[x]).or_default().push(x);
    }
    let pos: BTreeMap<usize, usize> =
        by_deg.values().flat_map(|v| v.iter().enumerate().map(|(p, &x)| (x, p))).collect();
    let mut rank: BTreeMap<i64, usize> = BTreeMap::new();
    let mut torsion: BTreeMap<i64, Vec<BigInt>> = BTreeMap::new();
    for (&i, src) in &by_deg {
        let Some(tgt) = by_deg.get(&(i + 1)) else { continue };
        let mut m = IntegerMatrix::new(tgt.len(), src.len());
        for &x in src {
            for (y, v) in &r.out[x] {
                m.set(pos[y], pos[&x], v.clone());
            }
        }
        if m.is_zero() {
            continue;
        }
        let snf = smith_normal_form(&m);
        rank.insert(i, snf.rank());
        let t: Vec<BigInt> = snf.diagonal.into_iter().filter(|d| !d.is_one()).collect();
        if !t.is_empty() {
            torsion.insert(i + 1, t);
        }
    }
    let mut out = BTreeMap::new();
    for (&i, v) in &by_deg {
        let free = v.len() - rank.get(&i).copied().unwrap_or(0) - rank.get(&(i - 1)).copied().unwrap_or(0);
        let s = Summand { free, torsion: torsion.remove(&i).unwrap_or_default() };
        if !s.is_zero() {
            out.insert(i, s);
        }
    }
    out
}

/// Graded homology, computed per (j, k) block in parallel (per i only for Lee complexes).
pub fn homology(c: &TriGradedComplex) -> Result<GradedAbelianGroup, HomologyError> {
    if cfg!(debug_assertions) && c.len() <= 4096 {
        for &i in c.groups().keys() {
            if let (Some(d), Some(e)) = (c.differential(i), c.differential(i + 1)) {
                if e.cols() == d.rows() && !e.mul(d).is_zero() {
                    return Err(HomologyError::NotAComplex(i));
                }
            }
        }
    }
    let bs = blocks(c);
    let ring = c.ring;
    let parts: Vec<(BlockKey, BTreeMap<i64, Summand>)> = bs
        .par_iter()
        .map(|b| {
            let h = match ring {
                Ring::Integers => integer_block(b),
                Ring::Rationals => field_block::<BigRational>(b),
                Ring::Field2 => field_block::<F2>(b),
            };
            (b.key, h)
        })
        .collect();
    let mut table = BTreeMap::new();
    for ((j, k), h) in parts {
        for (i, s) in h {
            if !s.is_zero() {
                table.insert(Grading { i, j, k }, s);
            }
        }
    }
    Ok(GradedAbelianGroup { ring, table })
}

/// Gaussian elimination of every ±1 entry; the result is chain homotopy equivalent to `c`.
pub fn simplify(c: &TriGradedComplex) -> TriGradedComplex {
    let bs = blocks(c);
    let reduced: Vec<(Vec<(i64, usize)>, Reducer<BigInt>)> =
        bs.par_iter().map(|b| (b.gens.clone(), reduce_block::<BigInt>(b))).collect();
    let mut groups: BTreeMap<i64, Vec<Generator>> = BTreeMap::new();
    let mut place: Vec<BTreeMap<usize, usize>> = Vec::new();
    for (gens, r) in &reduced {
        let mut p = BTreeMap::new();
        for x in r.survivors() {
            let (i, idx) = gens[x];
            let g = groups.entry(i).or_default();
            p.insert(x, g.len());
            g.push(c.generators(i)[idx].clone());
        }
        place.push(p);
    }
    let mut triplets: BTreeMap<i64, Vec<(usize, usize, BigInt)>> = BTreeMap::new();
    for ((gens, r), p) in reduced.iter().zip(&place) {
        for x in r.survivors() {
            for (y, v) in &r.out[x] {
                triplets.entry(gens[x].0).or_default().push((p[y], p[&x], v.clone()));
            }
        }
    }
    let mut diffs = BTreeMap::new();
    for (&i, g) in &groups {
        let rows = groups.get(&(i + 1)).map_or(0, |v| v.len());
        let mut m = IntegerMatrix::new(rows, g.len());
        for (r, col, v) in triplets.remove(&i).unwrap_or_default() {
            m.set(r, col, v);
        }
        diffs.insert(i, m);
    }
    TriGradedComplex::new(c.variant, c.ring, groups, diffs)
}

/// Ranks over a field from an integral table, by universal coefficients.
pub fn rank_table(g: &GradedAbelianGroup, field: Ring) -> Result<GradedRankTable, HomologyError> {
    if field == Ring::Integers {
        return Err(HomologyError::NotAField(field));
    }
    if g.ring != Ring::Integers {
        if g.ring == field {
            return Ok(GradedRankTable::new(field, g.table.iter().map(|(&k, s)| (k, s.free))));
        }
        return Err(HomologyError::NotIntegral(g.ring));
    }
    let two = BigInt::from(2);
    let even = |s: &Summand| s.torsion.iter().filter(|t| num_traits::Zero::is_zero(&(*t % &two))).count();
    let mut t = BTreeMap::new();
    for (&k, s) in &g.table {
        *t.entry(k).or_insert(0) += s.free;
        if field == Ring::Field2 {
            let e = even(s);
            *t.entry(k).or_insert(0) += e;
            *t.entry(k.shift(-1, 0)).or_insert(0) += e;
        }
    }
    Ok(GradedRankTable::new(field, t))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComputeError {
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// Build the complex and take homology in one step.
pub fn compute<'a>(
    input: impl Into<Input<'a>>,
    variant: Variant,
    ring: Ring,
    basepoint: Option<ArcId>,
) -> Result<GradedAbelianGroup, ComputeError> {
    let c = build_complex(input, variant, ring, basepoint)?;
    Ok(homology(&c)?)
}

/// Ranks over a field, computed directly over that field.
pub fn field_ranks<'a>(input: impl Into<Input<'a>>, variant: Variant, field: Ring) -> Result<GradedRankTable, ComputeError> {
    if field == Ring::Integers {
        return Err(HomologyError::NotAField(field).into());
    }
    let g = compute(input, variant, field, None)?;
    Ok(rank_table(&g, field)?)
}

#[cfg(test)]
mod tests;
