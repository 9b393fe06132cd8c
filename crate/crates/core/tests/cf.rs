mod common;

use common::{brute_convergents, brute_sequence, Ref, PHI, SQRT2, SQRT3};
use num_bigint::BigInt;
use ratapprox::cf::{
    convergents, first_kind_from_cf, nicf_expand, rcf_convergents_up_to, rcf_expand, second_kind_convergents,
    CfAlgorithm, PartialQuotient,
};
use ratapprox::render::{render_interval, Style};
use ratapprox::scan::{brain_sequence, Kind};
use ratapprox::train::{certify_nearest, certify_nearest_with, Precision};
use ratapprox::AlphaSpec;

const FIVE: [Ref; 5] = [Ref::Pi, PHI, SQRT2, SQRT3, Ref::E];

fn alpha(r: Ref) -> AlphaSpec {
    AlphaSpec::parse(&r.spec()).unwrap()
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[test]
fn pi_fifth_convergent_is_the_nearest_integer_of_33102_pi() {
    let e = rcf_expand(&AlphaSpec::Pi, 5).unwrap();
    let c = &e.convergents[4];
    assert_eq!(c.denom(), &BigInt::from(33102));
    let n = certify_nearest(&AlphaSpec::Pi, &33102.into()).unwrap();
    assert_eq!(c.numer(), &n.nearest_qa);
    assert_eq!(c.to_string(), "103993/33102");
}

#[test]
fn pi_nicf_last_distance() {
    let e = nicf_expand(&AlphaSpec::Pi, 4).unwrap();
    assert_eq!(strings(&e.convergents), ["3/1", "22/7", "355/113", "104348/33215"]);
    let n = certify_nearest(&AlphaSpec::Pi, &33215.into()).unwrap();
    assert_eq!(n.nearest_qa, 104348.into());
    // 1.10150175845E-05; the sixth significant digit is 0, not 1
    assert_eq!(render_interval(&n.dist, Style::Paper).as_deref(), Some("1.1015E-05"));
    let fine = Precision::default().with_dist_width(ratapprox::BigRational::new(1.into(), BigInt::from(10).pow(20)));
    let n = certify_nearest_with(&AlphaSpec::Pi, &33215.into(), &fine).unwrap();
    assert_eq!(render_interval(&n.dist, Style::Pretty { digits: 9 }).as_deref(), Some("0.0000110150176"));
}

#[test]
fn convergents_match_euclid_oracle() {
    for r in FIVE {
        let got = rcf_convergents_up_to(&alpha(r), 1_000_000).unwrap();
        let want = brute_convergents(r, 1_000_000);
        let got: Vec<(BigInt, BigInt)> = got.iter().map(|f| (f.numer().clone(), f.denom().clone())).collect();
        assert_eq!(got, want, "{}", r.spec());
    }
}

#[test]
fn convergents_equal_second_kind() {
    for r in FIVE {
        let a = alpha(r);
        let conv = second_kind_convergents(&rcf_convergents_up_to(&a, 1000).unwrap());
        let seq = brain_sequence(&a, 1000, Kind::II).unwrap();
        assert_eq!(strings(&conv), strings(&seq.fractions()), "{a}");
    }
}

#[test]
fn convergent_numerators_are_nearest_integers() {
    for r in FIVE {
        let a = alpha(r);
        let e = rcf_expand(&a, 12).unwrap();
        for c in second_kind_convergents(&e.convergents) {
            assert_eq!(certify_nearest(&a, c.denom()).unwrap().nearest_qa, *c.numer(), "{a} {c}");
        }
    }
}

#[test]
fn semiconvergents_reproduce_first_kind() {
    for r in FIVE {
        let a = alpha(r);
        let got = strings(&first_kind_from_cf(&a, 1000).unwrap());
        let brute: Vec<String> =
            brute_sequence(r, 1000, 1).iter().map(|s| s.replace(['+', '-'], "")).collect();
        assert_eq!(got, brute, "{a}");
    }
    let small = first_kind_from_cf(&AlphaSpec::sqrt(2).unwrap(), 50).unwrap();
    let scanned = brain_sequence(&AlphaSpec::sqrt(2).unwrap(), 50, Kind::I).unwrap();
    assert_eq!(strings(&small), strings(&scanned.fractions()));
}

#[test]
fn nicf_convergents_are_regular_convergents() {
    for a in [AlphaSpec::Pi, AlphaSpec::phi()] {
        let nicf = nicf_expand(&a, 8).unwrap();
        let rcf = rcf_expand(&a, 20).unwrap();
        for c in &nicf.convergents {
            assert!(rcf.convergents.contains(c), "{a}: {c}");
        }
    }
    // φ's NICF keeps every other convergent
    let nicf = nicf_expand(&AlphaSpec::phi(), 5).unwrap();
    assert_eq!(strings(&nicf.convergents), ["2/1", "5/3", "13/8", "34/21", "89/55"]);
}

#[test]
fn quotient_ranges() {
    for r in FIVE {
        let a = alpha(r);
        let rcf = rcf_expand(&a, 15).unwrap();
        assert!(rcf.quotients[1..].iter().all(|q| q.value >= 1.into() && q.sign == 1));
        let nicf = nicf_expand(&a, 15).unwrap();
        assert!(nicf.quotients[1..].iter().all(|q| q.value >= 2.into()));
    }
}

#[test]
fn tail_reconstruction_contains_alpha() {
    for r in FIVE {
        let a = alpha(r);
        for alg in [CfAlgorithm::Regular, CfAlgorithm::NearestInteger] {
            let e = ratapprox::cf::expand(&a, alg, 10).unwrap();
            let back = e.reconstruct();
            let fine = a.enclosure(&ratapprox::BigRational::new(1.into(), BigInt::from(10).pow(60))).unwrap();
            assert!(fine.is_subset_of(&back), "{a} {alg}");
        }
    }
}

#[test]
fn recurrence_from_hand_quotients() {
    let q = |v: i64, s: i8| PartialQuotient { value: v.into(), sign: s };
    let c = convergents(&[q(1, 1), q(2, 1), q(2, 1), q(2, 1)]);
    assert_eq!(strings(&c), ["1/1", "3/2", "7/5", "17/12"]);
    let c = convergents(&[q(2, 1), q(3, -1), q(3, -1)]);
    assert_eq!(strings(&c), ["2/1", "5/3", "13/8"]);
}

#[test]
fn display_format() {
    assert_eq!(rcf_expand(&AlphaSpec::phi(), 1).unwrap().to_string(), "1;");
    assert_eq!(nicf_expand(&AlphaSpec::phi(), 3).unwrap().to_string(), "2; - 3, - 3");
}

#[test]
fn short_digit_strings_run_out() {
    let a = AlphaSpec::parse("dec:3.14159").unwrap();
    assert!(rcf_expand(&a, 30).unwrap_err().is_precision());
}
