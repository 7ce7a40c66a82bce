use khovanov::cube::{Grading, Ring, Variant};
use khovanov::diagram::{families, AnnularDiagram};
use khovanov::homology::{field_ranks, GradedRankTable};
use khovanov::reference::{akh_clasp, akh_sigma};
use khovanov::skein::{orientation_shift, skein_triple, verify_exactness, Shift, SkeinError};

fn akh(a: &AnnularDiagram) -> GradedRankTable {
    field_ranks(a, Variant::Annular, Ring::Rationals).unwrap()
}

const C: usize = families::CLASP_CROSSING;

#[test]
fn clasp_triples_have_the_stated_shifts() {
    for n in 0..=5i64 {
        let t = skein_triple(&families::clasp(n), C).unwrap();
        let (l0, l1) = (akh(&t.l0), akh(&t.l1));
        if n == 0 {
            assert_eq!(t.sign, -1);
            assert_eq!((t.shift0, t.shift1), (Shift { i: -1, j: -2 }, Shift { i: 0, j: -1 }));
            assert_eq!(l0, akh_sigma(1).unwrap());
            assert_eq!(l1, akh(&families::identity_closure(2)));
        } else if n % 2 == 0 {
            assert_eq!(t.sign, -1);
            assert_eq!((t.shift0, t.shift1), (Shift { i: n - 1, j: 3 * n - 2 }, Shift { i: 0, j: -1 }));
            assert_eq!(l0, akh_sigma(n + 1).unwrap());
            assert_eq!(l1, orientation_shift(&akh_sigma(n).unwrap(), n));
        } else {
            assert_eq!(t.sign, 1);
            assert_eq!((t.shift0, t.shift1), (Shift { i: 0, j: 1 }, Shift { i: n + 2, j: 3 * n + 5 }));
            assert_eq!(l0, orientation_shift(&akh_sigma(n + 1).unwrap(), n + 1));
            assert_eq!(l1, akh_sigma(n).unwrap());
        }
    }
}

#[test]
fn clasp_triangles_split() {
    for n in -5..=5i64 {
        let l = families::clasp(n);
        let t = skein_triple(&l, C).unwrap();
        let b = t.shift0.apply(&akh(&t.l0));
        let c = t.shift1.apply(&akh(&t.l1));
        let r = verify_exactness(&akh(&l), &b, &c).unwrap();
        assert!(r.ok && r.split, "n={n}");
        if n >= 0 {
            assert_eq!(b.direct_sum(&c), akh_clasp(n), "n={n}");
        }
    }
}

#[test]
fn every_crossing_is_exact() {
    for a in [families::clasp(-3), families::clasp(2), families::clasp(3), families::sigma_closure(3), families::sigma_closure(4)] {
        let l = akh(&a);
        for c in 0..a.base().crossing_count() {
            let t = skein_triple(&a, c).unwrap();
            let r = verify_exactness(&l, &t.shift0.apply(&akh(&t.l0)), &t.shift1.apply(&akh(&t.l1))).unwrap();
            assert!(r.ok, "crossing {c}: {}", r.to_json());
        }
    }
}

#[test]
fn corrupted_table_is_caught() {
    let l = families::clasp(2);
    let t = skein_triple(&l, C).unwrap();
    let b = t.shift0.apply(&akh(&t.l0));
    let c = t.shift1.apply(&akh(&t.l1));
    let mut bad = akh(&l);
    let g = *bad.table.keys().next().unwrap();
    *bad.table.get_mut(&g).unwrap() -= 1;
    bad.table.retain(|_, r| *r > 0);
    assert!(!verify_exactness(&bad, &b, &c).unwrap().ok);
}

#[test]
fn orientation_shift_is_uniform() {
    let s = akh_sigma(3).unwrap();
    assert_eq!(orientation_shift(&s, 0), s);
    let shifted = orientation_shift(&s, 3);
    assert_eq!(shifted.get(Grading::new(3, -3 + 9 - 2, -2)), s.get(Grading::new(0, -5, -2)));
    assert_eq!(shifted.total(), s.total());
}

#[test]
fn bad_inputs() {
    assert!(matches!(skein_triple(&families::clasp(1), 99), Err(SkeinError::UnknownCrossing(99))));
    let q = akh(&families::clasp(1));
    let f2 = field_ranks(&families::clasp(1), Variant::Annular, Ring::Field2).unwrap();
    assert!(matches!(verify_exactness(&q, &f2, &q), Err(SkeinError::FieldMismatch)));
}
