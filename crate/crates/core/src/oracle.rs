//! Kauffman-bracket state sum for the graded Euler characteristic of Khovanov homology,
//! computed straight from the PD data without building a chain complex.

use std::collections::BTreeMap;

use crate::diagram::LinkDiagram;

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

fn circles(d: &LinkDiagram, state: u64) -> usize {
    let n = d.crossing_count();
    let mut parent: Vec<usize> = (0..4 * n).collect();
    let join = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    };
    let mut first: BTreeMap<u32, usize> = BTreeMap::new();
    for (c, x) in d.crossings().iter().enumerate() {
        for s in 0..4 {
            let slot = 4 * c + s;
            match first.remove(&x.half_edges[s]) {
                Some(other) => join(&mut parent, slot, other),
                None => {
                    first.insert(x.half_edges[s], slot);
                }
            }
        }
        let pairs = if state >> c & 1 == 0 { [(0, 1), (2, 3)] } else { [(0, 3), (1, 2)] };
        for (a, b) in pairs {
            join(&mut parent, 4 * c + a, 4 * c + b);
        }
    }
    let roots = (0..4 * n).filter(|&s| find(&mut parent, s) == s).count();
    roots + d.loops().len()
}

/// Coefficients of sum_i (-1)^i q^j rank Kh^{i,j}, keyed by j.
pub fn kauffman_euler(d: &LinkDiagram) -> BTreeMap<i64, i64> {
    let n = d.crossing_count();
    let (np, nm) = (d.n_plus() as i64, d.n_minus() as i64);
    let mut out: BTreeMap<i64, i64> = BTreeMap::new();
    for state in 0..1u64 << n {
        let h = state.count_ones() as i64;
        let c = circles(d, state);
        let sign = if (h + nm) % 2 == 0 { 1 } else { -1 };
        // (q + 1/q)^c expanded
        let mut binom = 1i64;
        for t in 0..=c as i64 {
            let j = c as i64 - 2 * t + h + np - 2 * nm;
            *out.entry(j).or_insert(0) += sign * binom;
            binom = binom * (c as i64 - t) / (t + 1);
        }
    }
    out.retain(|_, v| *v != 0);
    out
}
