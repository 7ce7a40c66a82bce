use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients usable by Gaussian elimination.
pub trait Coefficient: Clone + Send + Sync + std::fmt::Debug + PartialEq {
    fn from_int(v: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Inverse of a unit.
    fn inv(&self) -> Self;
}

impl Coefficient for BigInt {
    fn from_int(v: &BigInt) -> Self {
        v.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        debug_assert!(self.abs().is_one());
        self.clone()
    }
}

impl Coefficient for BigRational {
    fn from_int(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// The two-element field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct F2(pub bool);

impl Coefficient for F2 {
    fn from_int(v: &BigInt) -> Self {
        F2(v.bit(0))
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn is_unit(&self) -> bool {
        self.0
    }
    fn add(&self, o: &Self) -> Self {
        F2(self.0 ^ o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        F2(self.0 & o.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn inv(&self) -> Self {
        *self
    }
}

/// A based complex under cancellation of unit differential entries.
pub struct Reducer<R: Coefficient> {
    pub degree: Vec<i64>,
    pub alive: Vec<bool>,
    /// d(x) = Σ out[x][y] · y
    pub out: Vec<BTreeMap<usize, R>>,
    inc: Vec<BTreeSet<usize>>,
}

impl<R: Coefficient> Reducer<R> {
    /// `entries` are (source, target, value) with target in the degree above the source.
    pub fn new(degree: Vec<i64>, entries: impl IntoIterator<Item = (usize, usize, R)>) -> Self {
        let n = degree.len();
        let mut out: Vec<BTreeMap<usize, R>> = vec![BTreeMap::new(); n];
        let mut inc = vec![BTreeSet::new(); n];
        for (x, y, v) in entries {
            debug_assert_eq!(degree[y], degree[x] + 1);
            if !v.is_zero() {
                out[x].insert(y, v);
                inc[y].insert(x);
            }
        }
        Reducer { degree, alive: vec![true; n], out, inc }
    }

    fn cancel(&mut self, x: usize, y: usize) {
        let u_inv = self.out[x][&y].inv();
        let row: Vec<(usize, R)> = self.out[x].iter().filter(|(&z, _)| z != y).map(|(&z, v)| (z, v.clone())).collect();
        let sources: Vec<usize> = self.inc[y].iter().copied().filter(|&w| w != x).collect();
        for w in sources {
            let f = self.out[w][&y].mul(&u_inv).neg();
            for (z, c) in &row {
                let delta = f.mul(c);
                let e = self.out[w].entry(*z).or_insert_with(|| R::from_int(&BigInt::zero()));
                *e = e.add(&delta);
                if e.is_zero() {
                    self.out[w].remove(z);
                    self.inc[*z].remove(&w);
                } else {
                    self.inc[*z].insert(w);
                }
            }
        }
        for g in [x, y] {
            let outs: Vec<usize> = self.out[g].keys().copied().collect();
            for z in outs {
                self.inc[z].remove(&g);
            }
            let ins: Vec<usize> = self.inc[g].iter().copied().collect();
            for w in ins {
                self.out[w].remove(&g);
            }
            self.out[g].clear();
            self.inc[g].clear();
            self.alive[g] = false;
        }
    }

    /// Cancel unit entries until none remain. Deterministic: sources in index order, and for
    /// each source the unit target with the fewest incoming entries (then lowest index).
    pub fn run(&mut self) {
        loop {
            let mut changed = false;
            for x in 0..self.degree.len() {
                if !self.alive[x] {
                    continue;
                }
                let pick = self.out[x]
                    .iter()
                    .filter(|(_, v)| v.is_unit())
                    .map(|(&y, _)| (self.inc[y].len(), y))
                    .min();
                if let Some((_, y)) = pick {
                    self.cancel(x, y);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }

    pub fn survivors(&self) -> Vec<usize> {
        (0..self.degree.len()).filter(|&x| self.alive[x]).collect()
    }
}
