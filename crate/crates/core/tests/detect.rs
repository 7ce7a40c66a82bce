use khovanov::cube::{Ring, Variant};
use khovanov::detect::{annular_detect, hfl_classify, kh_detect, linking_from_lee, Confidence, DetectError};
use khovanov::diagram::{families, AnnularDiagram, LinkDiagram};
use khovanov::homology::{compute, field_ranks, GradedAbelianGroup};
use khovanov::reference::{akh_clasp, hfl_twisted_whitehead, kh_reference, scale, shape, tensor, KnownLink, Shape, ShapeFamily};
use khovanov::spectra::{lee_homology, LeeResult};

fn kh(d: &LinkDiagram) -> GradedAbelianGroup {
    compute(d, Variant::Plain, Ring::Integers, None).unwrap()
}

fn annular(a: &AnnularDiagram) -> Vec<String> {
    let t = field_ranks(a, Variant::Annular, Ring::Rationals).unwrap();
    annular_detect(&t, a.base().component_count()).unwrap().verdict
}

fn has(v: &[String], s: &str) -> bool {
    v.iter().any(|l| l.contains(s))
}

#[test]
fn clasp_braids_are_certified() {
    for n in -6..=6 {
        let v = annular_detect(&akh_clasp(n), 1).unwrap();
        assert!(v.is_certified() && has(&v.verdict, "clasp-braid"), "n={n}");
        assert_eq!(v.evidence["rank_at_max"], 2);
    }
    for n in -3..=3 {
        assert!(has(&annular(&families::clasp(n)), "clasp-braid closure"));
    }
}

#[test]
fn braids_and_small_cases() {
    for n in [1, 3, 5] {
        let v = annular(&families::sigma_closure(n));
        assert!(has(&v, "braid closure") && !has(&v, "clasp"), "n={n}");
    }
    assert!(has(&annular(&families::identity_closure(1)), "1-braid"));
    let ball = AnnularDiagram::mark_axis_with_outer(&families::unknot(), 0, 0).unwrap();
    assert!(has(&annular(&ball), "3-ball"));
    let t = field_ranks(&families::sigma_closure(2), Variant::Annular, Ring::Rationals).unwrap();
    assert_eq!(annular_detect(&t, 2), Err(DetectError::NotAKnot(2)));
    // three strands: wrapping number 3 is outside the detected cases
    let a = khovanov::diagram::Tangle::braid(&[1, 2], 3).unwrap().closure().unwrap();
    let t = field_ranks(&a, Variant::Annular, Ring::Rationals).unwrap();
    let v = annular_detect(&t, 1).unwrap();
    assert!(!v.conclusive && v.confidence == Confidence::ConsistentOnly);
}

#[test]
fn kh_detects_whitehead_and_l7n2() {
    for (k, name) in [(KnownLink::Whitehead, "Whitehead link"), (KnownLink::L7n2, "L7n2")] {
        let v = kh_detect(&kh_reference(k)).unwrap();
        assert_eq!(v.verdict, vec![name.to_string()]);
        assert!(v.is_certified());
    }
    assert_eq!(kh_detect(&kh(&families::whitehead())).unwrap().verdict, vec!["Whitehead link"]);
    assert_eq!(kh_detect(&kh(&families::l7n2())).unwrap().verdict, vec!["L7n2"]);
    let m = kh_detect(&kh(&families::l7n2().mirror())).unwrap();
    assert_eq!((m.verdict[0].as_str(), m.confidence), ("mirror of L7n2", Confidence::ConsistentOnly));
    for d in [families::unlink(2), families::hopf(), families::twisted_whitehead(2)] {
        assert!(!kh_detect(&kh(&d)).unwrap().conclusive);
    }
    let q = compute(&families::hopf(), Variant::Plain, Ring::Rationals, None).unwrap();
    assert!(kh_detect(&q).is_err());
}

fn cube(n: i64) -> Shape {
    shape(ShapeFamily::B, n).unwrap()
}

fn stabilized(n: i64) -> Shape {
    let mut s = Shape::new();
    for (p, _) in cube(n - 1) {
        for (a, m) in [(-1, 1), (0, 2), (1, 1)] {
            s.insert(std::iter::once(a).chain(p.iter().copied()).collect(), m);
        }
    }
    s
}

fn labels(s: &Shape, n: usize) -> Vec<String> {
    hfl_classify(s, n).unwrap().verdict
}

#[test]
fn hfl_shapes_map_to_cases() {
    for n in [2usize, 3] {
        let d = n as i64 - 1;
        assert!(has(&labels(&cube(d), n), "case 1"));
        assert!(has(&labels(&scale(&cube(d), 2), n), "case 2"));
        let pe = tensor(&shape(ShapeFamily::P, d).unwrap(), &shape(ShapeFamily::E, d).unwrap());
        assert!(has(&labels(&pe, n), "case 3"));
        assert!(has(&labels(&stabilized(d), n), "case 4"));
        assert!(!has(&labels(&cube(d), n), "case 2"));
    }
    let pe = tensor(&shape(ShapeFamily::P, 1).unwrap(), &shape(ShapeFamily::E, 1).unwrap());
    let l = labels(&pe, 2);
    assert!(has(&l, "case 3") && has(&l, "case 4"));
}

#[test]
fn hfl_two_copies() {
    // two copies of B_2 offset by (2, -1)
    let b = cube(2);
    let mut s = b.clone();
    for (p, r) in &b {
        *s.entry(vec![p[0] + 2, p[1] - 1]).or_insert(0) += r;
    }
    let v = hfl_classify(&s, 3).unwrap();
    assert_eq!(v.verdict.len(), 1);
    assert!(has(&v.verdict, "case 5"));
    assert!(v.evidence["case5_note"].is_string());
}

#[test]
fn hfl_rank_bounds() {
    assert!(has(&labels(&Shape::from([(vec![0], 1)]), 2), "impossible"));
    assert!(has(&labels(&Shape::from([(vec![0], 5)]), 2), "outside"));
    let v = hfl_classify(&Shape::from([(vec![0], 3)]), 2).unwrap();
    assert!(!v.conclusive);
    assert_eq!(hfl_classify(&Shape::new(), 2), Err(DetectError::Empty));
    assert!(matches!(hfl_classify(&Shape::from([(vec![0, 0], 2)]), 2), Err(DetectError::Dimension { .. })));
}

#[test]
fn hfl_twisted_whitehead_is_clasp_braid() {
    for n in -6..=8 {
        let v = hfl_classify(&hfl_twisted_whitehead(n).top_slice(), 2).unwrap();
        assert!(has(&v.verdict, "case 3"), "n={n}");
        assert_eq!(v.confidence, Confidence::ConsistentOnly);
    }
}

#[test]
fn hfl_translation_invariance() {
    let pe = tensor(&shape(ShapeFamily::P, 2).unwrap(), &shape(ShapeFamily::E, 2).unwrap());
    let base = labels(&pe, 3);
    for (dx, dy) in [(5, -3), (-7, 0), (0, 11)] {
        let moved: Shape = pe.iter().map(|(p, &r)| (vec![p[0] + dx, p[1] + dy], r)).collect();
        assert_eq!(labels(&moved, 3), base);
    }
}

#[test]
fn linking_numbers_from_lee() {
    let lk = |d: &LinkDiagram| linking_from_lee(&lee_homology(d).unwrap()).unwrap();
    assert_eq!(lk(&families::hopf()), 1);
    assert_eq!(lk(&families::braid(&[-1, -1], 2)), -1);
    assert_eq!(lk(&families::unlink(2)), 0);
    for n in -3..=3 {
        assert_eq!(lk(&families::twisted_whitehead(n)), 0);
    }
    let knot = LeeResult { ranks_by_i: [(0, 2)].into(), total: 2 };
    assert_eq!(linking_from_lee(&knot), Err(DetectError::NotTwoComponents(2)));
}
