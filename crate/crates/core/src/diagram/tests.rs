use super::families::*;
use super::*;

#[test]
fn hopf_pd() {
    let d = parse_pd("PD[X[1,3,2,4],X[3,1,4,2]]").unwrap();
    assert_eq!((d.crossing_count(), d.component_count(), d.n_plus(), d.n_minus()), (2, 2, 2, 0));
    assert_eq!(d.linking_number(0, 1).unwrap(), 1);
    assert_eq!(parse_pd(&d.to_pd()).unwrap(), d);
}

#[test]
fn empty_pd_is_unknot() {
    let d = parse_pd(" PD[ ] ").unwrap();
    assert_eq!((d.crossing_count(), d.component_count()), (0, 1));
    assert_eq!(parse_pd(&d.to_pd()).unwrap(), d);
}

#[test]
fn pd_errors_carry_positions() {
    match parse_pd("PD[X[1,2,3,4],Y[1]]") {
        Err(DiagramError::Parse { pos, .. }) => assert_eq!(pos, 14),
        e => panic!("{e:?}"),
    }
    assert!(matches!(parse_pd("PD[X[1,1,2,3]]"), Err(DiagramError::ArcMultiplicity { .. })));
    assert!(matches!(parse_pd("PD[X[1,0,2,3]]"), Err(DiagramError::Parse { pos: 7, .. })));
    // under-strands of both crossings disagree about the direction of the same component
    assert!(matches!(parse_pd("PD[X[1,3,2,4],X[1,4,2,3]]"), Err(DiagramError::Orientation { .. })));
}

#[test]
fn braid_words() {
    let d = LinkDiagram::from_braid_word(&[-1], 2).unwrap();
    assert_eq!((d.crossing_count(), d.component_count(), d.n_minus()), (1, 1, 1));
    let d = LinkDiagram::from_braid_word(&[-1, -1], 2).unwrap();
    assert_eq!((d.component_count(), d.n_minus()), (2, 2));
    let d = LinkDiagram::from_braid_word(&[], 1).unwrap();
    assert_eq!((d.crossing_count(), d.component_count()), (0, 1));
    assert!(matches!(LinkDiagram::from_braid_word(&[2], 2), Err(DiagramError::BraidIndex { .. })));
    assert_eq!(parse_braid("braid(2; -1,-1,-1)").unwrap(), (2, vec![-1, -1, -1]));
    assert_eq!(parse_braid("3; 1 -2").unwrap(), (3, vec![1, -2]));
}

#[test]
fn braid_round_trip_and_signs() {
    for (w, s) in [(vec![1, 1, 1], 2), (vec![1, -2, 1, -2], 3), (vec![1, -2, 1, -2, -2], 3)] {
        let d = LinkDiagram::from_braid_word(&w, s).unwrap();
        assert_eq!(d.n_minus(), w.iter().filter(|&&g| g < 0).count());
        assert_eq!(parse_pd(&d.to_pd()).unwrap(), d);
        assert_eq!(d.mirror().mirror(), d);
        assert_eq!(d.mirror().n_minus(), d.n_plus());
    }
}

#[test]
fn hopf_resolutions() {
    let d = parse_pd("PD[X[1,3,2,4],X[3,1,4,2]]").unwrap();
    let count = |b: &[u8]| d.resolve(&ResolutionState::from_bits(b)).unwrap().circles.len();
    assert_eq!(count(&[0, 0]), 2);
    assert_eq!(count(&[1, 1]), 2);
    assert_eq!(count(&[0, 1]), 1);
    assert_eq!(count(&[1, 0]), 1);
}

#[test]
fn flipping_a_bit_changes_circle_count_by_one() {
    for d in [right_trefoil(), figure_eight(), whitehead(), twisted_whitehead(1), clasp(2).base().clone()] {
        let n = d.crossing_count();
        for s in 0..(1u64 << n) {
            let a = d.resolve(&ResolutionState::new(s, n)).unwrap().circles.len() as i64;
            for c in 0..n {
                let b = d.resolve(&ResolutionState::new(s ^ (1 << c), n)).unwrap().circles.len() as i64;
                assert_eq!((a - b).abs(), 1);
            }
        }
    }
}

#[test]
fn annular_unknots() {
    let d = braid(&[], 1);
    let inside = mark_axis(&d, 1).unwrap();
    let outside = mark_axis(&d, 0).unwrap();
    let st = ResolutionState::new(0, 0);
    assert_eq!(inside.resolve(&st).unwrap().circles[0].winding.abs(), 1);
    assert_eq!(outside.resolve(&st).unwrap().circles[0].winding, 0);
    let id2 = identity_closure(2);
    let c = id2.resolve(&st).unwrap();
    assert_eq!(c.circles.len(), 2);
    assert!(c.circles.iter().all(|c| c.winding.abs() == 1));
}

#[test]
fn braid_closure_windings() {
    for n in 1..=4 {
        let a = sigma_closure(n);
        let k = a.base().crossing_count();
        for s in 0..(1u64 << k) {
            let c = a.resolve(&ResolutionState::new(s, k)).unwrap();
            assert!(c.circles.iter().all(|c| c.winding.abs() <= 1));
        }
        // negative crossings: the all-ones state is the braid-like resolution
        let c = a.resolve(&ResolutionState::new((1 << k) - 1, k)).unwrap();
        assert_eq!(c.circles.len(), 2);
        assert!(c.circles.iter().all(|c| c.winding.abs() == 1));
    }
    let a = sigma_closure(1);
    let braidlike = a.resolve(&ResolutionState::new(1, 1)).unwrap();
    assert_eq!(braidlike.circles.len(), 2);
    assert!(braidlike.circles.iter().all(|c| c.winding.abs() == 1));
    let turnback = a.resolve(&ResolutionState::new(0, 1)).unwrap();
    assert_eq!(turnback.circles.len(), 1);
    assert_eq!(turnback.circles[0].winding, 0);
}

#[test]
fn clasp_diagrams() {
    for n in -3..=4 {
        let d = clasp(n);
        let b = d.base();
        assert_eq!(b.component_count(), 1, "L_{n}");
        let expect = if n >= 0 { n + 2 } else { -n + 1 };
        assert_eq!(b.crossing_count() as i64, expect);
        assert_eq!(parse_pd(&b.to_pd()).unwrap(), *b);
    }
    assert_eq!(clasp(2).base().crossing_count(), 4);
}

#[test]
fn linking_numbers() {
    assert_eq!(hopf().linking_number(0, 1).unwrap(), 1);
    assert_eq!(unlink(2).linking_number(0, 1).unwrap(), 0);
    for n in -3..=3 {
        let d = twisted_whitehead(n);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.linking_number(0, 1).unwrap(), 0);
    }
    assert_eq!(whitehead().linking_number(0, 1).unwrap(), 0);
    assert!(hopf().linking_number(0, 2).is_err());
}

#[test]
fn faces_satisfy_euler() {
    for d in [hopf(), right_trefoil(), whitehead(), twisted_whitehead(2)] {
        assert_eq!(d.faces().len(), d.crossing_count() + 2);
    }
}

#[test]
fn reversal_changes_signs_of_mixed_crossings() {
    let h = hopf();
    let r = h.reverse_components(&[1]).unwrap();
    assert_eq!(r.n_minus(), 2);
    assert_eq!(r.linking_number(0, 1).unwrap(), -1);
    assert_eq!(r.reverse_components(&[1]).unwrap(), h);
}
