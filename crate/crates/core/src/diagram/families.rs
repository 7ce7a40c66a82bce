//! Named diagrams and the clasp-braid and twisted Whitehead families.

use super::{parse_pd, AnnularDiagram, LinkDiagram, Slice, Tangle};

pub fn unknot() -> LinkDiagram {
    parse_pd("PD[]").unwrap()
}

/// Unknot drawn with `k` Reidemeister-I kinks of alternating sign.
pub fn kinked_unknot(k: usize) -> LinkDiagram {
    let word: Vec<i32> = (0..k).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    let mut t = Tangle::new(1);
    for &g in &word {
        t = t.extend([Slice::Cup(1), Slice::Cross(0, g > 0), Slice::Cap(1)]);
    }
    t.closure().unwrap().base().clone()
}

pub fn braid(word: &[i32], strands: usize) -> LinkDiagram {
    LinkDiagram::from_braid_word(word, strands).unwrap()
}

pub fn hopf() -> LinkDiagram {
    braid(&[1, 1], 2)
}

pub fn unlink(k: usize) -> LinkDiagram {
    braid(&[], k)
}

pub fn right_trefoil() -> LinkDiagram {
    braid(&[1, 1, 1], 2)
}

pub fn left_trefoil() -> LinkDiagram {
    braid(&[-1, -1, -1], 2)
}

pub fn figure_eight() -> LinkDiagram {
    braid(&[1, -2, 1, -2], 3)
}

/// Closure of sigma^{-n} on two strands, with the braid axis.
pub fn sigma_closure(n: usize) -> AnnularDiagram {
    Tangle::braid(&vec![-1; n], 2).unwrap().closure().unwrap()
}

/// Closure of the identity braid on `k` strands, with the braid axis.
pub fn identity_closure(k: usize) -> AnnularDiagram {
    Tangle::new(k).closure().unwrap()
}

/// The two hooked caps: the strands arriving at the bottom join in a cap that passes over
/// one arm of a cup and under the other.
fn clasp_slices() -> [Slice; 4] {
    [Slice::Cup(1), Slice::Cross(2, false), Slice::Cross(0, false), Slice::Cap(1)]
}

/// Index of the highlighted clasp crossing in the clasp-braid diagrams.
pub const CLASP_CROSSING: usize = 1;

fn clasp_tangle(n: usize) -> Tangle {
    Tangle::new(2).extend(clasp_slices()).extend((0..n).map(|_| Slice::Cross(0, false)))
}

/// The annular clasp-braid knot L_n: a clasp followed by n half twists on two antiparallel
/// strands. Negative n is the mirror of L_{-n-1}.
pub fn clasp(n: i64) -> AnnularDiagram {
    if n < 0 {
        return clasp(-n - 1).mirror();
    }
    clasp_tangle(n as usize).closure().unwrap()
}

/// The twisted Whitehead link: the clasp knot with n twists together with its axis as a
/// second component. Negative n is the mirror of the (-n-1) link.
pub fn twisted_whitehead(n: i64) -> LinkDiagram {
    if n < 0 {
        return twisted_whitehead(-n - 1).mirror();
    }
    let axis = [
        Slice::Cup(0),
        Slice::Cross(1, false),
        Slice::Cross(2, false),
        Slice::Cross(0, true),
        Slice::Cross(1, true),
        Slice::Cap(2),
    ];
    clasp_tangle(n as usize).extend(axis).closure().unwrap().base().clone()
}

/// The Whitehead link as a five-crossing diagram.
pub fn whitehead() -> LinkDiagram {
    parse_pd(WHITEHEAD_PD).unwrap()
}

/// L7n2 as a seven-crossing diagram.
pub fn l7n2() -> LinkDiagram {
    twisted_whitehead(L7N2_TWIST)
}

pub const WHITEHEAD_PD: &str = "PD[X[6,1,7,2],X[10,7,5,8],X[4,5,1,6],X[2,10,3,9],X[8,4,9,3]]";
pub const L7N2_TWIST: i64 = -2;
