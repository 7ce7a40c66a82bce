//! One PASS/FAIL line per acceptance criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use khovanov::corpus;
use khovanov::cube::{build_complex, Grading, Ring, Variant};
use khovanov::detect::{annular_detect, hfl_classify, kh_detect, linking_from_lee};
use khovanov::diagram::{families, AnnularDiagram, LinkDiagram};
use khovanov::homology::{compute, field_ranks, homology, simplify, GradedAbelianGroup, GradedRankTable};
use khovanov::oracle::kauffman_euler;
use khovanov::reference::{
    akh_clasp, akh_sigma, hfk_rank, hfk_twist_knot, hfl_twisted_whitehead, kh_reference, scale, shape, tensor, KnownLink, Shape,
    ShapeFamily,
};
use khovanov::skein::{skein_triple, verify_exactness, Shift};
use khovanov::spectra::{batson_seed_check, dowlin_bound_check, lee_homology, reduced_kh, shumakovitch_check};

const WHITEHEAD_LIMIT: Duration = Duration::from_secs(1);
const L7N2_LIMIT: Duration = Duration::from_secs(5);
const AKH_LIMIT: Duration = Duration::from_secs(10);
/// Largest diagrams for the Euler and simplification property checks.
const EULER_MAX_CROSSINGS: usize = 10;
const SIMPLIFY_MAX_CROSSINGS: usize = 8;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn kh(d: &LinkDiagram) -> GradedAbelianGroup {
    compute(d, Variant::Plain, Ring::Integers, None).unwrap()
}

fn akh(a: &AnnularDiagram) -> GradedRankTable {
    field_ranks(a, Variant::Annular, Ring::Rationals).unwrap()
}

fn f2(d: &LinkDiagram) -> GradedRankTable {
    field_ranks(d, Variant::Plain, Ring::Field2).unwrap()
}

fn criterion_1() -> Outcome {
    let d = families::whitehead();
    ensure(d.crossing_count() == 5, "diagram is not 5-crossing")?;
    let (g, t) = timed(|| kh(&d));
    ensure(g == kh_reference(KnownLink::Whitehead), "table differs")?;
    ensure(g.torsion_count() == 3, "expected three Z/2 summands")?;
    ensure(t < WHITEHEAD_LIMIT, format!("took {t:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn criterion_2() -> Outcome {
    let d = families::l7n2();
    ensure(d.crossing_count() == 7, "diagram is not 7-crossing")?;
    let (g, t) = timed(|| kh(&d));
    ensure(g == kh_reference(KnownLink::L7n2), "table differs")?;
    for (i, j) in [(-1, -4), (-4, -10), (-2, -6)] {
        ensure(g.get(Grading::new(i, j, 0)).torsion.len() == 1, format!("no Z/2 at ({i},{j})"))?;
    }
    ensure(t < L7N2_LIMIT, format!("took {t:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn criterion_3() -> Outcome {
    let mut worst = Duration::ZERO;
    for n in -2..=3 {
        let (t, dt) = timed(|| akh(&families::clasp(n)));
        ensure(t == akh_clasp(n), format!("clasp n={n} differs"))?;
        worst = worst.max(dt);
    }
    for n in 1..=6 {
        let (t, dt) = timed(|| akh(&families::sigma_closure(n)));
        ensure(t == akh_sigma(n as i64).unwrap(), format!("sigma n={n} differs"))?;
        worst = worst.max(dt);
    }
    ensure(worst < AKH_LIMIT, format!("slowest instance {worst:?}"))?;
    Ok(format!("slowest {worst:.2?}"))
}

fn criterion_4() -> Outcome {
    for n in 0..=5i64 {
        let l = families::clasp(n);
        let t = skein_triple(&l, families::CLASP_CROSSING).unwrap();
        let expect = match n {
            0 => (Shift { i: -1, j: -2 }, Shift { i: 0, j: -1 }),
            n if n % 2 == 0 => (Shift { i: n - 1, j: 3 * n - 2 }, Shift { i: 0, j: -1 }),
            n => (Shift { i: 0, j: 1 }, Shift { i: n + 2, j: 3 * n + 5 }),
        };
        ensure((t.shift0, t.shift1) == expect, format!("n={n}: shifts {:?} {:?}", t.shift0, t.shift1))?;
        let r = verify_exactness(&akh(&l), &t.shift0.apply(&akh(&t.l0)), &t.shift1.apply(&akh(&t.l1))).unwrap();
        ensure(r.ok && r.split, format!("n={n}: triangle does not split"))?;
    }
    Ok("n = 0..5".into())
}

fn criterion_5() -> Outcome {
    let entries = corpus::entries();
    for e in &entries {
        let l = lee_homology(&e.link).map_err(|x| format!("{}: {x}", e.name))?;
        ensure(l.total == 1 << e.link.component_count(), e.name)?;
    }
    for n in -5..=5 {
        let l = lee_homology(&families::twisted_whitehead(n)).unwrap();
        ensure(l.ranks_by_i.keys().all(|&i| i == 0), format!("L_{n} Lee off i=0"))?;
    }
    let lk = linking_from_lee(&lee_homology(&families::hopf()).unwrap()).unwrap();
    ensure(lk == 1, format!("Hopf lk {lk}"))?;
    Ok(format!("{} corpus diagrams", entries.len()))
}

fn criterion_6() -> Outcome {
    let w = families::whitehead();
    let plain = f2(&w).total() as u64;
    ensure(plain == 16, format!("field2 rank {plain}"))?;
    let red = reduced_kh(&w, w.arcs()[0], Ring::Field2).unwrap().free_rank() as u64;
    ensure(red == 8 && shumakovitch_check(plain, red).satisfied, format!("reduced rank {red}"))?;
    let d = dowlin_bound_check(red, 16, 2);
    ensure(d.satisfied && d.is_equality(), "Dowlin check")?;
    let u = f2(&families::unknot());
    ensure(batson_seed_check(&f2(&w), &[u.clone(), u.clone()], 0).unwrap().satisfied, "W vs unknot pair")?;
    let l7 = f2(&families::l7n2());
    ensure(batson_seed_check(&l7, &[u.clone(), f2(&families::left_trefoil())], 0).unwrap().satisfied, "L7n2 vs left trefoil")?;
    let wrong = batson_seed_check(&l7, &[u, f2(&families::right_trefoil())], 0).unwrap();
    ensure(!wrong.satisfied && wrong.violations().contains(&Some(-7)), "right trefoil not rejected at l=-7")?;
    Ok("right trefoil rejected at l=-7".into())
}

fn criterion_7() -> Outcome {
    for n in -10..=10i64 {
        let expect = match n {
            n if n > 1 => 4 * n + 10,
            n if n < -2 => -4 * n + 6,
            _ => 16,
        };
        ensure(hfl_twisted_whitehead(n).total() as i64 == expect, format!("HFL rank n={n}"))?;
    }
    for n in 3..=8 {
        let lhs = hfl_twisted_whitehead(n).total();
        let rhs = hfk_rank(&hfk_twist_knot(n - 2).unwrap()) + hfk_rank(&hfk_twist_knot(n + 2).unwrap()) + 8;
        ensure(lhs == rhs, format!("pairing identity n={n}: {lhs} vs {rhs}"))?;
    }
    Ok("n = -10..10; identity 3..8".into())
}

fn criterion_8() -> Outcome {
    for n in -4..=4 {
        let v = annular_detect(&akh_clasp(n), 1).unwrap();
        ensure(v.is_certified() && v.verdict.iter().any(|l| l == "clasp-braid closure"), format!("clasp n={n}"))?;
    }
    for n in [1, 3, 5] {
        let v = annular_detect(&akh(&families::sigma_closure(n)), 1).unwrap();
        ensure(v.is_certified() && v.verdict.iter().any(|l| l == "braid closure"), format!("sigma n={n}"))?;
    }
    ensure(kh_detect(&kh(&families::whitehead())).unwrap().verdict == ["Whitehead link"], "W not identified")?;
    ensure(kh_detect(&kh(&families::l7n2())).unwrap().verdict == ["L7n2"], "L7n2 not identified")?;
    for n in [2usize, 3] {
        let d = n as i64 - 1;
        let b = shape(ShapeFamily::B, d).unwrap();
        let pe = tensor(&shape(ShapeFamily::P, d).unwrap(), &shape(ShapeFamily::E, d).unwrap());
        let mut stab = Shape::new();
        for (p, _) in shape(ShapeFamily::B, d - 1).unwrap() {
            for (a, m) in [(-1, 1), (0, 2), (1, 1)] {
                stab.insert(std::iter::once(a).chain(p.iter().copied()).collect(), m);
            }
        }
        for (s, case) in [(b.clone(), "case 1"), (scale(&b, 2), "case 2"), (pe, "case 3"), (stab, "case 4")] {
            let v = hfl_classify(&s, n).unwrap();
            ensure(v.verdict.iter().any(|l| l.starts_with(case)), format!("n={n}: {case} missing"))?;
        }
    }
    Ok("all detectors".into())
}

fn euler_by_j(t: &GradedRankTable) -> BTreeMap<i64, i64> {
    let mut e = BTreeMap::new();
    for ((j, _), c) in t.euler() {
        *e.entry(j).or_insert(0) += c;
    }
    e.retain(|_, v| *v != 0);
    e
}

fn criterion_9() -> Outcome {
    let entries = corpus::entries();
    for e in &entries {
        let c = build_complex(&e.link, Variant::Plain, Ring::Integers, None).unwrap();
        ensure(c.d_squared_is_zero(), format!("d^2 on {}", e.name))?;
        if let Some(a) = &e.annular {
            let c = build_complex(a, Variant::Annular, Ring::Integers, None).unwrap();
            ensure(c.d_squared_is_zero(), format!("annular d^2 on {}", e.name))?;
        }
        if e.link.crossing_count() <= EULER_MAX_CROSSINGS {
            let t = field_ranks(&e.link, Variant::Plain, Ring::Rationals).unwrap();
            ensure(euler_by_j(&t) == kauffman_euler(&e.link), format!("Euler characteristic of {}", e.name))?;
        }
        if e.link.crossing_count() <= SIMPLIFY_MAX_CROSSINGS {
            ensure(homology(&simplify(&c)).unwrap() == homology(&c).unwrap(), format!("simplify on {}", e.name))?;
        }
    }
    let u = kh(&families::unknot());
    for d in [families::kinked_unknot(1), families::kinked_unknot(2), families::braid(&[1, 2], 3), families::braid(&[1, 1, -1], 2)] {
        ensure(kh(&d) == u, "unknot diagrams differ")?;
    }
    ensure(kh(&families::braid(&[1, 2, 1, 1], 3)) == kh(&families::braid(&[2, 1, 2, 1], 3)), "R3 pair")?;
    ensure(kh(&families::whitehead()) == kh(&families::twisted_whitehead(0)), "Whitehead diagrams differ")?;
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| {
            (kh(&families::l7n2()).to_json().to_string(), akh(&families::clasp(3)).to_json().to_string())
        })
    };
    let one = run(1);
    for t in [2, 4, 8] {
        ensure(run(t) == one, format!("output differs with {t} threads"))?;
    }
    Ok(format!("{} corpus diagrams", entries.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Kh(W) exact integral table", criterion_1),
        ("Kh(L7n2) exact integral table", criterion_2),
        ("AKh of clasp-braid and sigma families", criterion_3),
        ("skein triangles split with exact shifts", criterion_4),
        ("Lee ranks, gradings and linking", criterion_5),
        ("rank pipeline: Shumakovitch, Dowlin, Batson-Seed", criterion_6),
        ("HFL rank formulas and pairing identity", criterion_7),
        ("detection verdicts", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(note) => println!("PASS {} {name} ({note})", i + 1),
            Err(why) => {
                println!("FAIL {} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

