use std::collections::BTreeMap;

use serde_json::{json, Value};

use khovanov::corpus;
use khovanov::cube::{Grading, Ring, Variant};
use khovanov::detect::linking_from_lee;
use khovanov::diagram::{families, AnnularDiagram, LinkDiagram};
use khovanov::homology::{compute, field_ranks, GradedRankTable};
use khovanov::oracle::kauffman_euler;
use khovanov::reference::{akh_clasp, akh_sigma, hfk_rank, hfk_twist_knot, hfl_twisted_whitehead, kh_reference, KnownLink};
use khovanov::skein::{skein_triple, verify_exactness};
use khovanov::spectra::{batson_seed_check, dowlin_bound_check, lee_homology, reduced_kh, shumakovitch_check};

use crate::Failure;

pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: Value,
}

fn check(name: impl Into<String>, ok: bool, detail: Value) -> Check {
    Check { name: name.into(), ok, detail }
}

fn akh(a: &AnnularDiagram) -> Result<GradedRankTable, Failure> {
    Ok(field_ranks(a, Variant::Annular, Ring::Rationals)?)
}

fn f2(d: &LinkDiagram) -> Result<GradedRankTable, Failure> {
    Ok(field_ranks(d, Variant::Plain, Ring::Field2)?)
}

pub fn skein() -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    for n in -5..=5 {
        let l = families::clasp(n);
        let base = akh(&l)?;
        for c in 0..l.base().crossing_count() {
            let t = skein_triple(&l, c)?;
            let b = t.shift0.apply(&akh(&t.l0)?);
            let cc = t.shift1.apply(&akh(&t.l1)?);
            let r = verify_exactness(&base, &b, &cc)?;
            let must_split = c == families::CLASP_CROSSING;
            out.push(check(
                format!("clasp:{n} crossing {c}"),
                r.ok && (r.split || !must_split),
                json!({"sign": t.sign, "shift0": t.shift0, "shift1": t.shift1, "split": r.split}),
            ));
        }
    }
    Ok(out)
}

pub fn bounds() -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    for e in corpus::entries() {
        let lee = lee_homology(&e.link);
        out.push(check(format!("lee rank {}", e.name), lee.is_ok(), json!({"lee": lee.map(|l| l.to_json()).unwrap_or(Value::Null)})));
    }
    for n in -5..=5 {
        let l = lee_homology(&families::twisted_whitehead(n))?;
        out.push(check(format!("lee twisted:{n} at i=0"), l.ranks_by_i.keys().all(|&i| i == 0), l.to_json()));
    }
    let hopf = lee_homology(&families::hopf())?;
    let lk = linking_from_lee(&hopf)?;
    out.push(check("lee linking hopf", lk == 1, json!({"lk": lk})));
    for e in corpus::entries().into_iter().filter(|e| e.link.component_count() == 1) {
        let plain = f2(&e.link)?.total() as u64;
        let arc = e.link.arcs()[0];
        let red = reduced_kh(&e.link, arc, Ring::Field2)?.free_rank() as u64;
        let r = shumakovitch_check(plain, red);
        out.push(check(format!("shumakovitch {}", e.name), r.satisfied, r.to_json()));
    }
    let w = families::whitehead();
    let red = reduced_kh(&w, w.arcs()[0], Ring::Field2)?.free_rank() as u64;
    let r = dowlin_bound_check(red, 16, 2);
    out.push(check("dowlin whitehead", r.satisfied && r.is_equality(), r.to_json()));
    let u = f2(&families::unknot())?;
    let r = batson_seed_check(&f2(&w)?, &[u.clone(), u.clone()], 0)?;
    out.push(check("batson-seed whitehead", r.satisfied, r.to_json()));
    let r = batson_seed_check(&f2(&families::l7n2())?, &[u, f2(&families::left_trefoil())?], 0)?;
    out.push(check("batson-seed l7n2", r.satisfied, r.to_json()));
    Ok(out)
}

pub fn tables() -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    for n in -4..=4 {
        let ok = akh(&families::clasp(n))? == akh_clasp(n);
        out.push(check(format!("akh clasp:{n}"), ok, Value::Null));
    }
    for n in 1..=6 {
        let ok = akh(&families::sigma_closure(n as usize))? == akh_sigma(n)?;
        out.push(check(format!("akh sigma:{n}"), ok, Value::Null));
    }
    for (name, d, k) in [("whitehead", families::whitehead(), KnownLink::Whitehead), ("l7n2", families::l7n2(), KnownLink::L7n2)] {
        let ok = compute(&d, Variant::Plain, Ring::Integers, None)? == kh_reference(k);
        out.push(check(format!("kh {name}"), ok, Value::Null));
    }
    for n in -6..=8 {
        let t = hfl_twisted_whitehead(n);
        let expected = match n {
            n if n > 1 => 4 * n + 10,
            n if n < -2 => -4 * n + 6,
            _ => 16,
        };
        out.push(check(format!("hfl rank twisted:{n}"), t.total() as i64 == expected && t.is_symmetric(), json!({"rank": t.total(), "expected": expected})));
    }
    for n in 3..=8 {
        let lhs = hfl_twisted_whitehead(n).total();
        let rhs = hfk_rank(&hfk_twist_knot(n - 2)?) + hfk_rank(&hfk_twist_knot(n + 2)?) + 8;
        out.push(check(format!("hfk pairing n={n}"), lhs == rhs, json!({"lhs": lhs, "rhs": rhs})));
    }
    Ok(out)
}

fn euler_j(t: &GradedRankTable) -> BTreeMap<i64, i64> {
    let mut e = BTreeMap::new();
    for (g, &r) in &t.table {
        let Grading { i, j, .. } = *g;
        *e.entry(j).or_insert(0) += if i.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) };
    }
    e.retain(|_, v| *v != 0);
    e
}

pub fn euler() -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    for e in corpus::entries().into_iter().filter(|e| e.link.crossing_count() <= 10) {
        let oracle = kauffman_euler(&e.link);
        let engine = euler_j(&field_ranks(&e.link, Variant::Plain, Ring::Rationals)?);
        out.push(check(format!("euler {}", e.name), oracle == engine, json!({"crossings": e.link.crossing_count()})));
    }
    Ok(out)
}
