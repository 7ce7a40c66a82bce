use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer matrix; zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::one());
        }
        m
    }

    pub fn from_triplets(rows: usize, cols: usize, t: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut m = Self::new(rows, cols);
        for (r, c, v) in t {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            let e = m.entries.entry((r, c)).or_default();
            *e += v;
            if e.is_zero() {
                m.entries.remove(&(r, c));
            }
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let t = rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v)));
        Self::from_triplets(rows.len(), cols, t)
    }

    pub fn from_big_dense(a: &[Vec<BigInt>], rows: usize, cols: usize) -> Self {
        let mut m = Self::new(rows, cols);
        for (r, row) in a.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.entries.insert((r, c), v.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols);
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &BigInt)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(r, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    *acc.entry((r, c)).or_default() += a * b;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        IntegerMatrix { rows: self.rows, cols: other.cols, entries: acc }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut a = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            a[r][c] = v.clone();
        }
        a
    }
}

/// Diagonal form with certificates: `u * m * v` is diagonal with `diagonal` on its leading
/// entries, each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Recomputes u·m·v and compares with the claimed diagonal form.
    pub fn verify(&self, m: &IntegerMatrix) -> bool {
        let d = self.u.mul(m).mul(&self.v);
        let expect = IntegerMatrix::from_big_dense(
            &(0..m.rows)
                .map(|r| {
                    (0..m.cols)
                        .map(|c| if r == c && r < self.diagonal.len() { self.diagonal[r].clone() } else { BigInt::zero() })
                        .collect()
                })
                .collect::<Vec<_>>(),
            m.rows,
            m.cols,
        );
        d == expect && self.diagonal.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

fn swap_rows(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    a.swap(i, j);
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i -= q * row_t
fn row_sub(a: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
    let (src, dst) = if i < t {
        let (lo, hi) = a.split_at_mut(t);
        (&hi[0], &mut lo[i])
    } else {
        let (lo, hi) = a.split_at_mut(i);
        (&lo[t], &mut hi[0])
    };
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// col_j -= q * col_t
fn col_sub(a: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[t].is_zero() {
            let x = q * &row[t];
            row[j] -= x;
        }
    }
}

/// Smith normal form over the integers. Pivots are chosen by smallest absolute value, ties by
/// lowest (row, col).
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.to_dense();
    let mut u = IntegerMatrix::identity(r).to_dense();
    // v is tracked transposed so column operations become row operations
    let mut vt = IntegerMatrix::identity(c).to_dense();
    let mut diagonal = Vec::new();
    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            swap_rows(&mut a, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut a, t, pj);
            swap_rows(&mut vt, t, pj);
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..r {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&p);
                    row_sub(&mut a, i, t, &q);
                    row_sub(&mut u, i, t, &q);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..c {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&p);
                    col_sub(&mut a, j, t, &q);
                    row_sub(&mut vt, j, t, &q);
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !(&a[i][j] % &p).is_zero()));
            if let Some(i) = bad {
                let minus_one = -BigInt::one();
                row_sub(&mut a, t, i, &minus_one);
                row_sub(&mut u, t, i, &minus_one);
                continue;
            }
            break;
        }
        if a[t][t].is_zero() {
            break;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
        diagonal.push(a[t][t].clone());
    }
    let v: Vec<Vec<BigInt>> = (0..c).map(|i| (0..c).map(|j| vt[j][i].clone()).collect()).collect();
    SmithForm {
        diagonal,
        u: IntegerMatrix::from_big_dense(&u, r, r),
        v: IntegerMatrix::from_big_dense(&v, c, c),
    }
}
