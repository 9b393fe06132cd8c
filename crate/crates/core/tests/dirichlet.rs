mod common;

use common::{rows, Ref, PHI, SQRT2, SQRT3};
use num_bigint::BigInt;
use ratapprox::dirichlet::{
    census_meets_consecutive_pairs, half_square_census, hurwitz_scan, legendre_check, pigeonhole_witness,
};
use ratapprox::render::Style;
use ratapprox::scan::{brain_sequence, render_key, Kind};
use ratapprox::{AlphaSpec, Side};

const FIVE: [Ref; 5] = [Ref::Pi, PHI, SQRT2, SQRT3, Ref::E];

fn alpha(r: Ref) -> AlphaSpec {
    AlphaSpec::parse(&r.spec()).unwrap()
}

/// `q‖qα‖ < c` for the brute-force row, with `c = num/den`.
fn brute_census(r: Ref, n: u64) -> Vec<u64> {
    let scale = num_traits::pow(BigInt::from(10), common::DIGITS as usize);
    rows(r, n).into_iter().filter(|row| &row.dist * BigInt::from(row.q) * 2 < scale).map(|row| row.q).collect()
}

#[test]
fn witnesses_satisfy_their_bound() {
    for r in [Ref::Pi, PHI, SQRT2] {
        let a = alpha(r);
        let brute = rows(r, 50);
        let scale = num_traits::pow(BigInt::from(10), common::DIGITS as usize);
        for n in 1..=50u64 {
            let w = pigeonhole_witness(&a, n).unwrap();
            assert!(w.bound_ok && w.q >= 1 && w.q <= n && w.k > w.l, "{a} N={n}: {w:?}");
            assert_eq!(w.q, w.k - w.l);
            let row = &brute[(w.q - 1) as usize];
            if n >= 2 {
                // within 1/N ≤ 1/2 the numerator must be the nearest integer
                assert_eq!(w.p, row.p);
                assert!(&row.dist * BigInt::from(n) < scale);
            } else {
                assert!((&w.p - &row.p).magnitude() <= &1u32.into());
            }
        }
    }
}

#[test]
fn witness_examples() {
    let w = pigeonhole_witness(&AlphaSpec::Pi, 10).unwrap();
    assert!(w.q <= 10 && w.bound_ok);
    let w = pigeonhole_witness(&AlphaSpec::sqrt(2).unwrap(), 5).unwrap();
    assert!(w.q <= 5 && w.bound_ok);
}

#[test]
fn census_matches_brute_force() {
    for r in FIVE {
        assert_eq!(half_square_census(&alpha(r), 1000).unwrap(), brute_census(r, 1000), "{}", r.spec());
    }
    let pi = half_square_census(&AlphaSpec::Pi, 1000).unwrap();
    assert_eq!(pi, [1, 7, 14, 113, 226, 339, 452, 565, 678, 791, 904]);
    assert_eq!(half_square_census(&AlphaSpec::Pi, 1).unwrap(), [1]);
}

#[test]
fn phi_census_is_its_third_kind_set() {
    let census = half_square_census(&AlphaSpec::phi(), 1000).unwrap();
    let third = brain_sequence(&AlphaSpec::phi(), 1000, Kind::III).unwrap().denominators();
    assert_eq!(census, third);
    assert_eq!(census.len(), 15);
}

#[test]
fn census_meets_consecutive_second_kind_pairs() {
    for r in [Ref::Pi, PHI, SQRT2] {
        let a = alpha(r);
        let census = half_square_census(&a, 1000).unwrap();
        let second = brain_sequence(&a, 1000, Kind::II).unwrap().denominators();
        assert!(census_meets_consecutive_pairs(&second, &census), "{a}");
    }
}

#[test]
fn legendre_has_no_violations() {
    for r in FIVE {
        let rep = legendre_check(&alpha(r), 1000).unwrap();
        assert!(rep.ok(), "{}: {:?}", r.spec(), rep.violations);
    }
    let phi = legendre_check(&AlphaSpec::phi(), 1000).unwrap();
    assert!(phi.census_covers_convergents());
    assert!(legendre_check(&AlphaSpec::sqrt(2).unwrap(), 200).unwrap().ok());
}

#[test]
fn golden_ratio_hurwitz_structure() {
    let a = AlphaSpec::phi();
    let rep = hurwitz_scan(&a, 1000).unwrap();
    assert_eq!(rep.rows.len(), 15);
    assert!(rep.monotone());
    let find = |q: u64| rep.rows.iter().find(|r| r.record.q == q).unwrap();
    for (q, want) in [(377, "0.447212966"), (987, "0.447213504"), (610, "0.447213836")] {
        assert_eq!(render_key(&a, &find(q).record, Kind::III, Style::Paper).unwrap(), want);
    }
    // overestimates stay below 1/√5, underestimates above it
    for row in &rep.rows {
        assert_eq!(row.below, row.record.side == Side::Over, "q = {}", row.record.q);
    }
    assert_eq!(rep.below, [1, 3, 8, 21, 55, 144, 377, 987]);
}

#[test]
fn pi_113_is_below_the_hurwitz_constant() {
    let rep = hurwitz_scan(&AlphaSpec::Pi, 113).unwrap();
    assert!(rep.below.contains(&113));
}
