//! Dirichlet's theorem by pigeonhole, the `1/(2q²)` census, the
//! convergent criterion for that census, and the Hurwitz-constant scan.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::alpha::AlphaSpec;
use crate::cf::{rcf_convergents_up_to, second_kind_convergents};
use crate::error::{Error, Result};
use crate::fraction::{Fraction, Side};
use crate::scan::{compare_keys, decide_key, key_below, scan_records, ApproxRecord, Kind};
use crate::train::{certify_floor, refine_scaled, Precision};
use crate::BigRational;

/// Two of `kα mod 1`, `k = 0..=N`, landing in the same of the `N` bins
/// `[j/N, (j+1)/N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletWitness {
    pub n: u64,
    pub k: u64,
    pub l: u64,
    pub q: u64,
    pub p: BigInt,
    /// `|qα − p| < 1/N`, certified.
    pub bound_ok: bool,
}

impl DirichletWitness {
    pub fn fraction(&self) -> Fraction {
        Fraction::raw(self.p.clone(), self.q.into())
    }
}

/// `⌊N{kα}⌋ = ⌊Nkα⌋ − N⌊kα⌋`.
fn bin(alpha: &AlphaSpec, n: u64, k: u64) -> Result<(BigInt, BigInt)> {
    if k == 0 {
        return Ok((BigInt::from(0), BigInt::from(0)));
    }
    let floor_k = certify_floor(alpha, &BigInt::from(k))?;
    let floor_nk = certify_floor(alpha, &(BigInt::from(n) * BigInt::from(k)))?;
    Ok((floor_nk - BigInt::from(n) * &floor_k, floor_k))
}

pub fn pigeonhole_witness(alpha: &AlphaSpec, n: u64) -> Result<DirichletWitness> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be >= 1".into()));
    }
    let mut seen: HashMap<BigInt, (u64, BigInt)> = HashMap::new();
    for k in 0..=n {
        let (b, floor_k) = bin(alpha, n, k)?;
        if let Some((l, floor_l)) = seen.get(&b) {
            let (l, q) = (*l, k - *l);
            let p = floor_k - floor_l;
            let bound_ok = within(alpha, q, &p, &BigRational::new(BigInt::one(), n.into()))?;
            return Ok(DirichletWitness { n, k, l, q, p, bound_ok });
        }
        seen.insert(b, (k, floor_k));
    }
    unreachable!("N + 1 points in N bins always collide")
}

/// Certified `|qα − p| < bound`, refined until decided either way.
fn within(alpha: &AlphaSpec, q: u64, p: &BigInt, bound: &BigRational) -> Result<bool> {
    let p = BigRational::from_integer(p.clone());
    let start = BigRational::new(BigInt::one(), 4.into());
    refine_scaled(alpha, &q.into(), start, Precision::default().max_rounds, |enc| {
        let d = enc.shift(&-&p);
        if d.lo() > &-bound && d.hi() < bound {
            Some(true)
        } else if d.lo() >= bound || d.hi() <= &-bound {
            Some(false)
        } else {
            None
        }
    })
}

/// Denominators among `records` with `q‖qα‖ < 1/2`.
pub fn half_square_census_from_records(alpha: &AlphaSpec, records: &[ApproxRecord]) -> Result<Vec<u64>> {
    let half = BigRational::new(BigInt::one(), 2.into());
    let mut out = Vec::new();
    for rec in records {
        if key_below(alpha, rec, Kind::III, &half)? {
            out.push(rec.q);
        }
    }
    Ok(out)
}

/// `q ≤ N` with `q‖qα‖ < 1/2`, i.e. `|α − [qα]/q| < 1/(2q²)`.
pub fn half_square_census(alpha: &AlphaSpec, n: u64) -> Result<Vec<u64>> {
    half_square_census_from_records(alpha, &scan_records(alpha, n)?)
}

/// Of any two consecutive kind-II denominators at least one is in the census.
pub fn census_meets_consecutive_pairs(second_kind: &[u64], census: &[u64]) -> bool {
    second_kind
        .windows(2)
        .all(|w| census.contains(&w[0]) || census.contains(&w[1]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendreReport {
    pub n: u64,
    /// Reduced `[qα]/q` for every census member, duplicates removed.
    pub checked: Vec<Fraction>,
    /// Regular convergents with denominator `≤ N`.
    pub convergents: Vec<Fraction>,
    pub violations: Vec<Fraction>,
}

impl LegendreReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// True when every convergent (first one dropped if it shares `q = 1`
    /// with the second) was hit by the census.
    pub fn census_covers_convergents(&self) -> bool {
        second_kind_convergents(&self.convergents)
            .iter()
            .all(|c| self.checked.iter().any(|f| f.same_value(c)))
    }
}

pub fn legendre_check(alpha: &AlphaSpec, n: u64) -> Result<LegendreReport> {
    legendre_check_from_records(alpha, &scan_records(alpha, n)?)
}

/// As [`legendre_check`], over records for `q = 1..=N` in order.
pub fn legendre_check_from_records(alpha: &AlphaSpec, records: &[ApproxRecord]) -> Result<LegendreReport> {
    let n = records.len() as u64;
    let census = half_square_census_from_records(alpha, records)?;
    let convergents = rcf_convergents_up_to(alpha, n)?;
    let mut checked: Vec<Fraction> = Vec::new();
    for q in census {
        let f = records[(q - 1) as usize].reduced();
        if !checked.iter().any(|c| c.same_value(&f)) {
            checked.push(f);
        }
    }
    let violations = checked
        .iter()
        .filter(|f| !convergents.iter().any(|c| c.same_value(f)))
        .cloned()
        .collect();
    Ok(LegendreReport { n, checked, convergents, violations })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzRow {
    pub record: ApproxRecord,
    /// `q‖qα‖ < 1/√5`, decided as `5(q‖qα‖)² < 1`.
    pub below: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzReport {
    pub n: u64,
    /// Every `q ≤ N` with `q‖qα‖ < 1/√5`.
    pub below: Vec<u64>,
    /// The irreducible rows with `q‖qα‖ < 1`, in denominator order.
    pub rows: Vec<HurwitzRow>,
    /// Overestimates among `rows` have strictly increasing `q‖qα‖`.
    pub over_increasing: bool,
    /// Underestimates among `rows` have strictly decreasing `q‖qα‖`.
    pub under_decreasing: bool,
}

impl HurwitzReport {
    pub fn monotone(&self) -> bool {
        self.over_increasing && self.under_decreasing
    }
}

fn below_hurwitz(alpha: &AlphaSpec, rec: &ApproxRecord) -> Result<bool> {
    let five = BigRational::from_integer(5.into());
    let one = BigRational::one();
    decide_key(alpha, rec, Kind::III, |k| {
        debug_assert!(k.lo().is_positive());
        if &five * k.hi() * k.hi() < one {
            Some(true)
        } else if &five * k.lo() * k.lo() > one {
            Some(false)
        } else {
            None
        }
    })
}

fn strictly_monotone(alpha: &AlphaSpec, rows: &[&ApproxRecord], want: Ordering) -> Result<bool> {
    for w in rows.windows(2) {
        if compare_keys(alpha, w[0], w[1], Kind::III)? != want {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn hurwitz_scan(alpha: &AlphaSpec, n: u64) -> Result<HurwitzReport> {
    hurwitz_scan_from_records(alpha, &scan_records(alpha, n)?)
}

/// As [`hurwitz_scan`], over records for `q = 1..=N` in order.
pub fn hurwitz_scan_from_records(alpha: &AlphaSpec, records: &[ApproxRecord]) -> Result<HurwitzReport> {
    let n = records.len() as u64;
    let one = BigRational::one();
    let mut below = Vec::new();
    let mut rows = Vec::new();
    for rec in records {
        let b = below_hurwitz(alpha, rec)?;
        if b {
            below.push(rec.q);
        }
        if rec.irreducible && key_below(alpha, rec, Kind::III, &one)? {
            rows.push(HurwitzRow { record: rec.clone(), below: b });
        }
    }
    let side = |s: Side| rows.iter().map(|r| &r.record).filter(|r| r.side == s).collect::<Vec<_>>();
    let over_increasing = strictly_monotone(alpha, &side(Side::Over), Ordering::Less)?;
    let under_decreasing = strictly_monotone(alpha, &side(Side::Under), Ordering::Greater)?;
    Ok(HurwitzReport { n, below, rows, over_increasing, under_decreasing })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_small_cases() {
        let w = pigeonhole_witness(&AlphaSpec::phi(), 1).unwrap();
        assert_eq!((w.q, w.bound_ok), (1, true));
        assert!(w.p == 1.into() || w.p == 2.into());

        let w = pigeonhole_witness(&AlphaSpec::Pi, 10).unwrap();
        assert!(w.bound_ok && (1..=10).contains(&w.q));
    }

    #[test]
    fn census_for_q_one() {
        assert_eq!(half_square_census(&AlphaSpec::Pi, 1).unwrap(), vec![1]);
    }

    #[test]
    fn consecutive_pairs() {
        assert!(census_meets_consecutive_pairs(&[1, 7, 57], &[1, 57]));
        assert!(!census_meets_consecutive_pairs(&[1, 7, 57], &[1]));
    }

    #[test]
    fn legendre_for_pi_small() {
        let r = legendre_check(&AlphaSpec::Pi, 120).unwrap();
        assert!(r.ok());
        let c: Vec<String> = r.checked.iter().map(|f| f.to_string()).collect();
        assert_eq!(c, ["3/1", "22/7", "355/113"]);
    }

    #[test]
    fn hurwitz_for_pi_113() {
        let r = hurwitz_scan(&AlphaSpec::Pi, 113).unwrap();
        assert!(r.below.contains(&113));
        assert!(r.below.contains(&7));
    }
}
