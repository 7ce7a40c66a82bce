use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cube::{Grading, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Summand {
    pub free: usize,
    /// Torsion coefficients ≥ 2, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl Summand {
    pub fn free(n: usize) -> Self {
        Summand { free: n, torsion: vec![] }
    }

    pub fn with_torsion(free: usize, torsion: &[u64]) -> Self {
        Summand { free, torsion: torsion.iter().map(|&t| BigInt::from(t)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for Summand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free {
            0 => {}
            1 => parts.push("Z".to_string()),
            n => parts.push(format!("Z^{n}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        f.write_str(&parts.join("+"))
    }
}

fn torsion_json(t: &BigInt) -> Value {
    match u64::try_from(t) {
        Ok(v) => json!(v),
        Err(_) => json!(t.to_string()),
    }
}

fn pad_rows(rows: Vec<Vec<String>>) -> String {
    let w: Vec<usize> = (0..rows[0].len()).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap()).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&w).map(|(x, &w)| format!("{x:>w$}")).collect();
        writeln!(out, "{}", cells.join(",")).unwrap();
    }
    out
}

/// Homology with integer (or field) coefficients, keyed by (i, j, k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAbelianGroup {
    pub ring: Ring,
    pub table: BTreeMap<Grading, Summand>,
}

impl GradedAbelianGroup {
    pub fn new(ring: Ring, entries: impl IntoIterator<Item = (Grading, Summand)>) -> Self {
        let table = entries.into_iter().filter(|(_, s)| !s.is_zero()).collect();
        GradedAbelianGroup { ring, table }
    }

    pub fn get(&self, g: Grading) -> Summand {
        self.table.get(&g).cloned().unwrap_or_default()
    }

    pub fn free_rank(&self) -> usize {
        self.table.values().map(|s| s.free).sum()
    }

    pub fn torsion_count(&self) -> usize {
        self.table.values().map(|s| s.torsion.len()).sum()
    }

    pub fn shift(&self, di: i64, dj: i64) -> Self {
        GradedAbelianGroup { ring: self.ring, table: self.table.iter().map(|(g, s)| (g.shift(di, dj), s.clone())).collect() }
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .table
            .iter()
            .map(|(g, s)| {
                json!({"i": g.i, "j": g.j, "k": g.k, "free": s.free,
                       "torsion": s.torsion.iter().map(torsion_json).collect::<Vec<_>>()})
            })
            .collect();
        json!({"schema": "khovanov.homology/1", "ring": self.ring, "entries": entries})
    }

    pub fn to_csv(&self) -> String {
        let mut rows = vec![vec!["i".into(), "j".into(), "k".into(), "free".into(), "torsion".into()]];
        for (g, s) in &self.table {
            let t: Vec<String> = s.torsion.iter().map(|t| t.to_string()).collect();
            rows.push(vec![g.i.to_string(), g.j.to_string(), g.k.to_string(), s.free.to_string(), t.join(" ")]);
        }
        pad_rows(rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let field = match self.ring {
            Ring::Integers => None,
            Ring::Rationals => Some("Q"),
            Ring::Field2 => Some("F2"),
        };
        for (g, s) in &self.table {
            let cell = match field {
                None => s.to_string(),
                Some(f) if s.free == 1 => f.to_string(),
                Some(f) => format!("{f}^{}", s.free),
            };
            writeln!(out, "i={:>3} j={:>4} k={:>3}  {}", g.i, g.j, g.k, cell).unwrap();
        }
        out
    }
}

/// Ranks over a field, keyed by (i, j, k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRankTable {
    pub field: Ring,
    pub table: BTreeMap<Grading, usize>,
}

impl GradedRankTable {
    pub fn new(field: Ring, entries: impl IntoIterator<Item = (Grading, usize)>) -> Self {
        let mut table = BTreeMap::new();
        for (g, r) in entries {
            *table.entry(g).or_insert(0) += r;
        }
        table.retain(|_, r| *r > 0);
        GradedRankTable { field, table }
    }

    pub fn empty(field: Ring) -> Self {
        GradedRankTable { field, table: BTreeMap::new() }
    }

    pub fn get(&self, g: Grading) -> usize {
        self.table.get(&g).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.table.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn shift(&self, di: i64, dj: i64) -> Self {
        GradedRankTable::new(self.field, self.table.iter().map(|(g, &r)| (g.shift(di, dj), r)))
    }

    pub fn mirror(&self) -> Self {
        GradedRankTable::new(self.field, self.table.iter().map(|(g, &r)| (Grading::new(-g.i, -g.j, -g.k), r)))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        GradedRankTable::new(self.field, self.table.iter().chain(&other.table).map(|(g, &r)| (*g, r)))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut t = Vec::new();
        for (a, &r) in &self.table {
            for (b, &s) in &other.table {
                t.push((Grading::new(a.i + b.i, a.j + b.j, a.k + b.k), r * s));
            }
        }
        GradedRankTable::new(self.field, t)
    }

    /// Forget the annular grading.
    pub fn forget_k(&self) -> Self {
        GradedRankTable::new(self.field, self.table.iter().map(|(g, &r)| (Grading::new(g.i, g.j, 0), r)))
    }

    /// Graded Euler characteristic as coefficients of q^j (and the annular grading).
    pub fn euler(&self) -> BTreeMap<(i64, i64), i64> {
        let mut e = BTreeMap::new();
        for (g, &r) in &self.table {
            *e.entry((g.j, g.k)).or_insert(0) += if g.i % 2 == 0 { r as i64 } else { -(r as i64) };
        }
        e.retain(|_, v| *v != 0);
        e
    }

    /// Ranks along the lines i − j = l.
    pub fn by_l(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for (g, &r) in &self.table {
            *m.entry(g.i - g.j).or_insert(0) += r;
        }
        m
    }

    pub fn by_i(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for (g, &r) in &self.table {
            *m.entry(g.i).or_insert(0) += r;
        }
        m
    }

    pub fn max_k(&self) -> Option<i64> {
        self.table.keys().map(|g| g.k).max()
    }

    pub fn rank_at_k(&self, k: i64) -> usize {
        self.table.iter().filter(|(g, _)| g.k == k).map(|(_, r)| r).sum()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> =
            self.table.iter().map(|(g, r)| json!({"i": g.i, "j": g.j, "k": g.k, "rank": r})).collect();
        json!({"schema": "khovanov.ranks/1", "field": self.field, "entries": entries})
    }

    pub fn to_csv(&self) -> String {
        let mut rows = vec![vec!["i".into(), "j".into(), "k".into(), "rank".into()]];
        for (g, r) in &self.table {
            rows.push(vec![g.i.to_string(), g.j.to_string(), g.k.to_string(), r.to_string()]);
        }
        pad_rows(rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (g, r) in &self.table {
            writeln!(out, "i={:>3} j={:>4} k={:>3}  {}", g.i, g.j, g.k, r).unwrap();
        }
        out
    }
}
