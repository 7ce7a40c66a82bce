use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::diagram::families;

#[test]
fn snf_small() {
    let m = IntegerMatrix::from_dense(&[vec![2, 4], vec![6, 8]]);
    let s = smith_normal_form(&m);
    assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
    assert!(s.verify(&m));
}

#[test]
fn snf_rank_deficient() {
    let m = IntegerMatrix::from_dense(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 5]]);
    let s = smith_normal_form(&m);
    assert_eq!(s.rank(), 2);
    assert!(s.verify(&m));
}

proptest! {
    #[test]
    fn snf_certificate(rows in 1usize..6, cols in 1usize..6, seed in proptest::collection::vec(-9i64..10, 36)) {
        let dense: Vec<Vec<i64>> = (0..rows).map(|r| (0..cols).map(|c| seed[r * 6 + c]).collect()).collect();
        let m = IntegerMatrix::from_dense(&dense);
        prop_assert!(smith_normal_form(&m).verify(&m));
    }
}

#[test]
fn reducer_cancels_units() {
    // x0 -> y0 with 1, x1 -> y0 with 2: one cancellation leaves x1 - 2 x0 as a cycle
    let mut r = Reducer::<BigInt>::new(vec![0, 0, 1], [(0, 2, BigInt::from(1)), (1, 2, BigInt::from(2))]);
    r.run();
    assert_eq!(r.survivors(), vec![1]);
}

#[test]
fn universal_coefficients() {
    let g = GradedAbelianGroup::new(Ring::Integers, [(Grading::new(0, 0, 0), Summand::with_torsion(1, &[2, 3]))]);
    let f2 = rank_table(&g, Ring::Field2).unwrap();
    assert_eq!(f2.get(Grading::new(0, 0, 0)), 2);
    assert_eq!(f2.get(Grading::new(-1, 0, 0)), 1);
    assert_eq!(rank_table(&g, Ring::Rationals).unwrap().total(), 1);
    assert!(rank_table(&g, Ring::Integers).is_err());
}

#[test]
fn trefoil() {
    let g = compute(&families::right_trefoil(), Variant::Plain, Ring::Integers, None).unwrap();
    let expect = GradedAbelianGroup::new(
        Ring::Integers,
        [
            (Grading::new(0, 1, 0), Summand::free(1)),
            (Grading::new(0, 3, 0), Summand::free(1)),
            (Grading::new(2, 5, 0), Summand::free(1)),
            (Grading::new(3, 9, 0), Summand::free(1)),
            (Grading::new(3, 7, 0), Summand::with_torsion(0, &[2])),
        ],
    );
    assert_eq!(g, expect);
}

#[test]
fn field_ranks_agree_with_uct() {
    for d in [families::whitehead(), families::figure_eight(), families::hopf()] {
        let z = compute(&d, Variant::Plain, Ring::Integers, None).unwrap();
        for f in [Ring::Rationals, Ring::Field2] {
            assert_eq!(rank_table(&z, f).unwrap(), field_ranks(&d, Variant::Plain, f).unwrap());
        }
    }
}

#[test]
fn table_formats() {
    let g = GradedAbelianGroup::new(Ring::Integers, [(Grading::new(-2, -6, 0), Summand::with_torsion(1, &[2]))]);
    assert_eq!(g.get(Grading::new(-2, -6, 0)).to_string(), "Z+Z/2");
    let header: Vec<String> = g.to_csv().lines().next().unwrap().split(',').map(|s| s.trim().to_string()).collect();
    assert_eq!(header, ["i", "j", "k", "free", "torsion"]);
    assert_eq!(g.to_json()["schema"], "khovanov.homology/1");
}
