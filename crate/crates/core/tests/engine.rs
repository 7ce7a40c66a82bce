use std::collections::BTreeMap;

use khovanov::corpus;
use khovanov::cube::{build_complex, Ring, Variant};
use khovanov::diagram::{families, AnnularDiagram, LinkDiagram, Tangle};
use khovanov::homology::{compute, field_ranks, homology, simplify, GradedAbelianGroup, GradedRankTable};
use khovanov::oracle::kauffman_euler;

fn kh(d: &LinkDiagram) -> GradedAbelianGroup {
    compute(d, Variant::Plain, Ring::Integers, None).unwrap()
}

fn akh(a: &AnnularDiagram) -> GradedRankTable {
    field_ranks(a, Variant::Annular, Ring::Rationals).unwrap()
}

fn closure(word: &[i32], strands: usize) -> AnnularDiagram {
    Tangle::braid(word, strands).unwrap().closure().unwrap()
}

#[test]
fn d_squared_vanishes_on_corpus() {
    for e in corpus::entries() {
        let d = &e.link;
        let bp = d.arcs()[0];
        for (v, r, b) in [
            (Variant::Plain, Ring::Integers, None),
            (Variant::Reduced, Ring::Integers, Some(bp)),
            (Variant::Lee, Ring::Rationals, None),
        ] {
            let c = build_complex(d, v, r, b).unwrap();
            assert!(c.d_squared_is_zero(), "{} {v:?}", e.name);
            assert!(c.preserves_gradings(), "{} {v:?}", e.name);
        }
        if let Some(a) = &e.annular {
            let c = build_complex(a, Variant::Annular, Ring::Integers, None).unwrap();
            assert!(c.d_squared_is_zero() && c.preserves_gradings(), "{} annular", e.name);
        }
    }
}

fn euler_by_j(t: &GradedRankTable) -> BTreeMap<i64, i64> {
    let mut e = BTreeMap::new();
    for ((j, _), c) in t.euler() {
        *e.entry(j).or_insert(0) += c;
    }
    e.retain(|_, v| *v != 0);
    e
}

#[test]
fn euler_matches_state_sum() {
    for e in corpus::entries().into_iter().filter(|e| e.link.crossing_count() <= 10) {
        let t = field_ranks(&e.link, Variant::Plain, Ring::Rationals).unwrap();
        assert_eq!(euler_by_j(&t), kauffman_euler(&e.link), "{}", e.name);
        if let Some(a) = &e.annular {
            assert_eq!(euler_by_j(&akh(a)), kauffman_euler(&e.link), "{} annular", e.name);
        }
    }
}

#[test]
fn state_sum_known_values() {
    // unnormalized Jones polynomial of the unknot and the positive Hopf link
    assert_eq!(kauffman_euler(&families::unknot()), BTreeMap::from([(-1, 1), (1, 1)]));
    assert_eq!(kauffman_euler(&families::hopf()), BTreeMap::from([(0, 1), (2, 1), (4, 1), (6, 1)]));
}

#[test]
fn reidemeister_pairs() {
    let u = kh(&families::unknot());
    for d in [families::kinked_unknot(1), families::kinked_unknot(2), families::braid(&[1, 2], 3), families::braid(&[1, 1, -1], 2)] {
        assert_eq!(kh(&d), u);
    }
    // R2 and R3 inside braids
    assert_eq!(kh(&families::braid(&[1, 2, 1, 1], 3)), kh(&families::braid(&[2, 1, 2, 1], 3)));
    assert_eq!(kh(&families::braid(&[1, 1, 1, 2, -2], 3)), kh(&families::braid(&[1, 1, 1], 3)));
    assert_eq!(kh(&families::whitehead()), kh(&families::twisted_whitehead(0)));
    assert_eq!(kh(&families::figure_eight()), kh(families::clasp(2).base()));
    assert_eq!(kh(&families::right_trefoil()), kh(families::clasp(1).base()));
    assert_eq!(kh(&families::left_trefoil()), kh(&families::right_trefoil().mirror()));
}

#[test]
fn annular_reidemeister_pairs() {
    assert_eq!(akh(&closure(&[1, -1, -1], 2)), akh(&closure(&[-1], 2)));
    assert_eq!(akh(&closure(&[1, 2, 1, -2], 3)), akh(&closure(&[2, 1, 2, -2], 3)));
    // conjugation is an annular isotopy
    assert_eq!(akh(&closure(&[2, 1, 1, -2], 3)), akh(&closure(&[1, 1], 3)));
}

#[test]
fn simplified_complex_has_same_homology() {
    for e in corpus::entries().into_iter().filter(|e| e.link.crossing_count() <= 8) {
        let c = build_complex(&e.link, Variant::Plain, Ring::Integers, None).unwrap();
        assert_eq!(homology(&simplify(&c)).unwrap(), homology(&c).unwrap(), "{}", e.name);
        if let Some(a) = &e.annular {
            let c = build_complex(a, Variant::Annular, Ring::Integers, None).unwrap();
            assert_eq!(homology(&simplify(&c)).unwrap(), homology(&c).unwrap(), "{} annular", e.name);
        }
    }
}

#[test]
fn deterministic_across_thread_counts() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let w = kh(&families::l7n2()).to_json().to_string();
            let a = compute(&families::clasp(3), Variant::Annular, Ring::Integers, None).unwrap().to_json().to_string();
            let c = build_complex(&families::whitehead(), Variant::Plain, Ring::Integers, None).unwrap();
            (w, a, simplify(&c))
        })
    };
    let one = run(1);
    for t in [2, 4, 8] {
        assert_eq!(run(t), one);
    }
}

#[test]
fn corpus_matches_generators() {
    let get = |n: &str| corpus::get(n).unwrap();
    assert_eq!(kh(&get("whitehead").link), kh(&families::whitehead()));
    assert_eq!(kh(&get("l7n2").link), kh(&families::l7n2()));
    for n in -4..=4i64 {
        let name = if n < 0 { format!("clasp_m{}", -n) } else { format!("clasp_{n}") };
        assert_eq!(akh(get(&name).annular.as_ref().unwrap()), akh(&families::clasp(n)), "{name}");
    }
    for n in 1..=6 {
        assert_eq!(akh(get(&format!("sigma_{n}")).annular.as_ref().unwrap()), akh(&families::sigma_closure(n)));
    }
}

#[test]
fn lee_needs_rationals() {
    assert!(build_complex(&families::hopf(), Variant::Lee, Ring::Integers, None).is_err());
    assert!(build_complex(&families::hopf(), Variant::Reduced, Ring::Integers, None).is_err());
    assert!(build_complex(&families::hopf(), Variant::Annular, Ring::Integers, None).is_err());
}
