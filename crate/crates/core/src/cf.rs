//! Regular and nearest-integer continued fractions with certified quotients.
//!
//! The complete quotient `x_k` is tracked as a Möbius image
//! `(Aα + B)/(Cα + D)` of `α` with an exact integer matrix. Each partial
//! quotient is read off the image of an enclosure of `α`; when the image is
//! too wide to decide it, the enclosure of `α` is refined and the image
//! recomputed.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::alpha::AlphaSpec;
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::interval::RationalInterval;
use crate::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CfAlgorithm {
    /// Floor-based: `x_{k+1} = 1/(x_k − ⌊x_k⌋)`.
    Regular,
    /// Nearest-integer: `x_{k+1} = 1/|x_k − [x_k]|`, the sign of
    /// `x_k − [x_k]` attached to the next reciprocal.
    NearestInteger,
}

impl fmt::Display for CfAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CfAlgorithm::Regular => "rcf",
            CfAlgorithm::NearestInteger => "nicf",
        })
    }
}

impl FromStr for CfAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rcf" => Ok(CfAlgorithm::Regular),
            "nicf" => Ok(CfAlgorithm::NearestInteger),
            _ => Err(Error::InvalidArgument(format!("unknown algorithm {s:?}, expected rcf or nicf"))),
        }
    }
}

/// `a_k` and the sign `s_k` in `x_{k−1} = a_{k−1} + s_k/x_k`.
/// `s_0` is `+1` by convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialQuotient {
    pub value: BigInt,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfExpansion {
    pub algorithm: CfAlgorithm,
    pub quotients: Vec<PartialQuotient>,
    pub convergents: Vec<Fraction>,
    /// Encloses the complete quotient following the last partial quotient.
    pub tail: RationalInterval,
}

impl CfExpansion {
    pub fn quotient_values(&self) -> Vec<BigInt> {
        self.quotients.iter().map(|q| q.value.clone()).collect()
    }

    /// Rebuilds an enclosure of `α` from the quotients and the tail
    /// enclosure, `α = (p_k x + s p_{k−1})/(q_k x + s q_{k−1})`.
    pub fn reconstruct(&self) -> RationalInterval {
        let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
        let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
        for pq in &self.quotients {
            let s = BigInt::from(pq.sign);
            let p2 = &pq.value * &p1 + &s * &p0;
            let q2 = &pq.value * &q1 + &s * &q0;
            (p0, q0, p1, q1) = (p1, q1, p2, q2);
        }
        // the sign joining the tail is not known yet; both readings are
        // covered by taking the hull of x ↦ (p1 x ± p0)/(q1 x ± q0)
        let eval = |x: &BigRational, s: i32| {
            let s = BigInt::from(s);
            (BigRational::from_integer(p1.clone()) * x + BigRational::from_integer(&s * &p0))
                / (BigRational::from_integer(q1.clone()) * x + BigRational::from_integer(&s * &q0))
        };
        let signs: &[i32] = match self.algorithm {
            CfAlgorithm::Regular => &[1],
            CfAlgorithm::NearestInteger => &[1, -1],
        };
        let pts: Vec<BigRational> = signs
            .iter()
            .flat_map(|&s| [eval(self.tail.lo(), s), eval(self.tail.hi(), s)])
            .collect();
        let lo = pts.iter().min().unwrap().clone();
        let hi = pts.iter().max().unwrap().clone();
        RationalInterval::new(lo, hi)
    }
}

impl fmt::Display for CfExpansion {
    /// `a0; s1 a1, s2 a2, ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut it = self.quotients.iter();
        if let Some(first) = it.next() {
            write!(f, "{};", first.value)?;
            for (i, pq) in it.enumerate() {
                let s = if pq.sign < 0 { '-' } else { '+' };
                write!(f, "{}{s} {}", if i == 0 { " " } else { ", " }, pq.value)?;
            }
        }
        Ok(())
    }
}

/// `(Aα + B)/(Cα + D)`.
#[derive(Clone, Debug)]
struct Mobius {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mobius {
    fn identity() -> Self {
        Mobius { a: BigInt::one(), b: BigInt::zero(), c: BigInt::zero(), d: BigInt::one() }
    }

    fn denom_at(&self, x: &BigRational) -> BigRational {
        BigRational::from_integer(self.c.clone()) * x + BigRational::from_integer(self.d.clone())
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        (BigRational::from_integer(self.a.clone()) * x + BigRational::from_integer(self.b.clone())) / self.denom_at(x)
    }

    /// Image of an open interval, or `None` if the pole may lie inside it.
    fn image(&self, i: &RationalInterval) -> Option<RationalInterval> {
        let (dl, dh) = (self.denom_at(i.lo()), self.denom_at(i.hi()));
        if dl.is_zero() || dh.is_zero() || dl.is_positive() != dh.is_positive() {
            return None;
        }
        let (x, y) = (self.eval(i.lo()), self.eval(i.hi()));
        match x.cmp(&y) {
            Ordering::Less => Some(RationalInterval::new(x, y)),
            Ordering::Greater => Some(RationalInterval::new(y, x)),
            Ordering::Equal => None,
        }
    }

    /// `x' = s/(x − a)`.
    fn step(&mut self, a: &BigInt, s: i8) {
        let s = BigInt::from(s);
        let na = &s * &self.c;
        let nb = &s * &self.d;
        let nc = &self.a - a * &self.c;
        let nd = &self.b - a * &self.d;
        *self = Mobius { a: na, b: nb, c: nc, d: nd };
    }
}

const START_BITS: usize = 64;
const REFINE_BITS: usize = 32;
const MAX_REFINEMENTS: usize = 64;

/// Produces partial quotients one at a time.
#[derive(Clone, Debug)]
pub struct CfStepper {
    alpha: AlphaSpec,
    algorithm: CfAlgorithm,
    tail: Mobius,
    pending_sign: i8,
    eps: BigRational,
    emitted: usize,
    last_tail: Option<RationalInterval>,
}

impl CfStepper {
    pub fn new(alpha: &AlphaSpec, algorithm: CfAlgorithm) -> Self {
        CfStepper {
            alpha: alpha.clone(),
            algorithm,
            tail: Mobius::identity(),
            pending_sign: 1,
            eps: BigRational::new(BigInt::one(), BigInt::one() << START_BITS),
            emitted: 0,
            last_tail: None,
        }
    }

    /// Enclosure of the complete quotient not yet consumed.
    pub fn tail_enclosure(&mut self) -> Result<RationalInterval> {
        for _ in 0..MAX_REFINEMENTS {
            let base = self.alpha.enclosure(&self.eps).map_err(|e| self.context(e))?;
            if let Some(img) = self.tail.image(&base) {
                return Ok(img);
            }
            self.refine();
        }
        Err(self.context(Error::PrecisionExhausted("tail pole unresolved".into())))
    }

    fn refine(&mut self) {
        self.eps /= BigRational::from_integer(BigInt::one() << REFINE_BITS);
    }

    fn context(&self, e: Error) -> Error {
        match e {
            Error::PrecisionExhausted(msg) => {
                Error::PrecisionExhausted(format!("{} quotient {}: {msg}", self.algorithm, self.emitted))
            }
            other => other,
        }
    }

    /// The next partial quotient, with the sign linking it to the previous one.
    pub fn next_quotient(&mut self) -> Result<PartialQuotient> {
        for _ in 0..MAX_REFINEMENTS {
            let tail = self.tail_enclosure()?;
            let decided = match self.algorithm {
                CfAlgorithm::Regular => tail.certain_floor().map(|a| (a, 1i8)),
                CfAlgorithm::NearestInteger => nearest_with_sign(&tail),
            };
            if let Some((a, next_sign)) = decided {
                let pq = PartialQuotient { value: a.clone(), sign: self.pending_sign };
                self.tail.step(&a, next_sign);
                self.pending_sign = next_sign;
                self.emitted += 1;
                self.last_tail = Some(tail);
                return Ok(pq);
            }
            self.refine();
        }
        Err(self.context(Error::PrecisionExhausted("partial quotient undecided".into())))
    }
}

/// `[x]` and the sign of `x − [x]` when the interval pins both.
fn nearest_with_sign(i: &RationalInterval) -> Option<(BigInt, i8)> {
    let two = BigRational::from_integer(2.into());
    let doubled = i.scale(&two);
    let m = doubled.lo().floor();
    if &m == doubled.lo() || doubled.hi() >= &(&m + BigRational::one()) {
        return None;
    }
    let m = m.to_integer();
    let floor = m.div_floor(&BigInt::from(2));
    if m.is_odd() {
        Some((floor + 1, -1))
    } else {
        Some((floor, 1))
    }
}

/// Convergents by `p_k = a_k p_{k−1} + s_k p_{k−2}` (likewise `q_k`),
/// seeded `p_{−1} = 1, q_{−1} = 0`.
pub fn convergents(quotients: &[PartialQuotient]) -> Vec<Fraction> {
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut out = Vec::with_capacity(quotients.len());
    for pq in quotients {
        let s = BigInt::from(pq.sign);
        let p2 = &pq.value * &p1 + &s * &p0;
        let q2 = &pq.value * &q1 + &s * &q0;
        assert!(p2.gcd(&q2).is_one(), "convergent {p2}/{q2} not coprime");
        out.push(Fraction::raw(p2.clone(), q2.clone()));
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    out
}

pub fn expand(alpha: &AlphaSpec, algorithm: CfAlgorithm, terms: usize) -> Result<CfExpansion> {
    if terms == 0 {
        return Err(Error::InvalidArgument("terms must be >= 1".into()));
    }
    let mut stepper = CfStepper::new(alpha, algorithm);
    let quotients = (0..terms).map(|_| stepper.next_quotient()).collect::<Result<Vec<_>>>()?;
    let tail = stepper.tail_enclosure()?;
    let convergents = convergents(&quotients);
    Ok(CfExpansion { algorithm, quotients, convergents, tail })
}

pub fn rcf_expand(alpha: &AlphaSpec, terms: usize) -> Result<CfExpansion> {
    expand(alpha, CfAlgorithm::Regular, terms)
}

pub fn nicf_expand(alpha: &AlphaSpec, terms: usize) -> Result<CfExpansion> {
    expand(alpha, CfAlgorithm::NearestInteger, terms)
}

/// Regular convergents with denominator `≤ n`, in order.
pub fn rcf_convergents_up_to(alpha: &AlphaSpec, n: u64) -> Result<Vec<Fraction>> {
    let limit = BigInt::from(n);
    let mut stepper = CfStepper::new(alpha, CfAlgorithm::Regular);
    let mut quotients = Vec::new();
    loop {
        quotients.push(stepper.next_quotient()?);
        let all = convergents(&quotients);
        if all.last().unwrap().denom() > &limit {
            let mut out = all;
            out.pop();
            return Ok(out);
        }
    }
}

/// Convergents as best approximations of the second kind: when `a_1 = 1`
/// the first two convergents share `q = 1` and only the second, closer one
/// is kept.
pub fn second_kind_convergents(convergents: &[Fraction]) -> Vec<Fraction> {
    let mut out: Vec<Fraction> = Vec::with_capacity(convergents.len());
    for c in convergents {
        if out.last().is_some_and(|prev| prev.denom() == c.denom()) {
            out.pop();
        }
        out.push(c.clone());
    }
    out
}

/// Certified comparison of `|α − x|` and `|α − y|` for distinct rationals.
pub fn compare_errors(alpha: &AlphaSpec, x: &BigRational, y: &BigRational) -> Result<Ordering> {
    if x == y {
        return Ok(Ordering::Equal);
    }
    let mut eps = BigRational::new(BigInt::one(), BigInt::one() << START_BITS);
    for _ in 0..MAX_REFINEMENTS {
        let a = alpha.enclosure(&eps)?;
        if let (Some(ex), Some(ey)) = (abs_error(&a, x), abs_error(&a, y)) {
            if let Some(o) = ex.certified_cmp(&ey) {
                return Ok(o);
            }
        }
        eps /= BigRational::from_integer(BigInt::one() << REFINE_BITS);
    }
    Err(Error::PrecisionExhausted(format!("cannot compare errors of {x} and {y}")))
}

/// Encloses `|α − x|` given `α ∈ a`, when `x` is outside `a`.
fn abs_error(a: &RationalInterval, x: &BigRational) -> Option<RationalInterval> {
    if x <= a.lo() {
        RationalInterval::try_new(a.lo() - x, a.hi() - x)
    } else if x >= a.hi() {
        RationalInterval::try_new(x - a.hi(), x - a.lo())
    } else {
        None
    }
}

/// Best approximations of the first kind with denominator `≤ n`, from
/// convergents and semiconvergents.
///
/// Candidates `(p_{k−1} + t p_k)/(q_{k−1} + t q_k)` for `1 ≤ t ≤ a_{k+1}`
/// arrive in increasing denominator; each is kept when its error is
/// certified smaller than that of the last kept fraction.
pub fn first_kind_from_cf(alpha: &AlphaSpec, n: u64) -> Result<Vec<Fraction>> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be >= 1".into()));
    }
    let limit = BigInt::from(n);
    let mut stepper = CfStepper::new(alpha, CfAlgorithm::Regular);
    let a0 = stepper.next_quotient()?.value;
    let (mut pm, mut qm) = (BigInt::one(), BigInt::zero());
    let (mut pk, mut qk) = (a0, BigInt::one());
    let mut kept = vec![Fraction::raw(pk.clone(), qk.clone())];

    loop {
        let a_next = stepper.next_quotient()?.value;
        let mut t = BigInt::one();
        while t <= a_next {
            let q = &qm + &t * &qk;
            if q > limit {
                return Ok(kept);
            }
            let cand = Fraction::raw(&pm + &t * &pk, q);
            let last = kept.last().unwrap();
            if compare_errors(alpha, &cand.to_rational(), &last.to_rational())? == Ordering::Less {
                if last.denom() == cand.denom() {
                    kept.pop();
                }
                kept.push(cand);
            }
            t += 1;
        }
        let pn = &a_next * &pk + &pm;
        let qn = &a_next * &qk + &qm;
        (pm, qm, pk, qk) = (pk, qk, pn, qn);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(e: &CfExpansion) -> Vec<i64> {
        e.quotients.iter().map(|q| i64::try_from(&q.value).unwrap() * q.sign as i64).collect()
    }

    #[test]
    fn pi_regular() {
        let e = rcf_expand(&AlphaSpec::Pi, 6).unwrap();
        assert_eq!(vals(&e), vec![3, 7, 15, 1, 292, 1]);
        let c: Vec<String> = e.convergents.iter().map(|f| f.to_string()).collect();
        assert_eq!(&c[..4], &["3/1", "22/7", "333/106", "355/113"]);
        assert_eq!(e.to_string(), "3; + 7, + 15, + 1, + 292, + 1");
    }

    #[test]
    fn phi_regular_is_all_ones() {
        let e = rcf_expand(&AlphaSpec::phi(), 5).unwrap();
        assert_eq!(vals(&e), vec![1, 1, 1, 1, 1]);
        let c: Vec<String> = e.convergents.iter().map(|f| f.to_string()).collect();
        assert_eq!(c, ["1/1", "2/1", "3/2", "5/3", "8/5"]);
    }

    #[test]
    fn sqrt2_regular() {
        let e = rcf_expand(&AlphaSpec::sqrt(2).unwrap(), 4).unwrap();
        assert_eq!(vals(&e), vec![1, 2, 2, 2]);
    }

    #[test]
    fn pi_nearest_integer() {
        let e = nicf_expand(&AlphaSpec::Pi, 4).unwrap();
        assert_eq!(vals(&e), vec![3, 7, 16, -294]);
        let c: Vec<String> = e.convergents.iter().map(|f| f.to_string()).collect();
        assert_eq!(c, ["3/1", "22/7", "355/113", "104348/33215"]);
        assert_eq!(e.to_string(), "3; + 7, + 16, - 294");
    }

    #[test]
    fn phi_nearest_integer() {
        let e = nicf_expand(&AlphaSpec::phi(), 4).unwrap();
        assert_eq!(vals(&e), vec![2, -3, -3, -3]);
        let c: Vec<String> = e.convergents.iter().map(|f| f.to_string()).collect();
        assert_eq!(&c[..3], &["2/1", "5/3", "13/8"]);
    }

    #[test]
    fn zero_terms_rejected() {
        assert!(rcf_expand(&AlphaSpec::Pi, 0).is_err());
    }

    #[test]
    fn duplicate_unit_denominator_is_collapsed() {
        let e = rcf_expand(&AlphaSpec::phi(), 4).unwrap();
        let c: Vec<String> = second_kind_convergents(&e.convergents).iter().map(|f| f.to_string()).collect();
        assert_eq!(c, ["2/1", "3/2", "5/3"]);
    }

    #[test]
    fn reconstruction_contains_alpha() {
        for alg in [CfAlgorithm::Regular, CfAlgorithm::NearestInteger] {
            let e = expand(&AlphaSpec::Pi, alg, 8).unwrap();
            let back = e.reconstruct();
            let a = AlphaSpec::Pi.enclosure(&BigRational::new(1.into(), BigInt::from(10).pow(40))).unwrap();
            assert!(back.intersects(&a), "{alg}");
        }
    }
}
