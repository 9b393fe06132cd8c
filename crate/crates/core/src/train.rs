//! Certified floor, nearest integer and distance to the nearest integer
//! for `qα`, and the fixed-denominator approximation `[qα]/q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::alpha::AlphaSpec;
use crate::error::{Error, Result};
use crate::fraction::{Fraction, Side};
use crate::interval::RationalInterval;
use crate::BigRational;

/// Refinement budget shared by every certified computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precision {
    /// Width requested for `‖qα‖` enclosures.
    pub dist_width: BigRational,
    /// Halvings allowed before giving up.
    pub max_rounds: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            dist_width: BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 12)),
            max_rounds: 256,
        }
    }
}

impl Precision {
    pub fn with_dist_width(&self, dist_width: BigRational) -> Precision {
        Precision {
            dist_width,
            max_rounds: self.max_rounds,
        }
    }
}

/// `[qα]` with its certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearestResult {
    pub q: BigInt,
    /// `⌊qα⌋`.
    pub floor_qa: BigInt,
    /// `[qα]`, the unique integer within 1/2 of `qα`.
    pub nearest_qa: BigInt,
    /// Encloses `‖qα‖ = |qα − [qα]|`, strictly inside `(0, 1/2)`.
    pub dist: RationalInterval,
    /// `Under` iff `qα > [qα]`.
    pub side: Side,
}

/// Tightens the enclosure of `qα` by halving its width from `start`
/// until `decide` accepts it.
pub(crate) fn refine_scaled<T>(
    alpha: &AlphaSpec,
    q: &BigInt,
    start: BigRational,
    max_rounds: u32,
    mut decide: impl FnMut(&RationalInterval) -> Option<T>,
) -> Result<T> {
    let half = BigRational::new(BigInt::one(), 2.into());
    let mut eps = start;
    for _ in 0..=max_rounds {
        let enc = alpha.scaled_enclosure(q, &eps).map_err(|e| e.at_q(q))?;
        if let Some(t) = decide(&enc) {
            return Ok(t);
        }
        eps *= &half;
    }
    Err(Error::PrecisionExhausted(format!(
        "no decision after {max_rounds} refinements"
    ))
    .at_q(q))
}

/// `m` with `m < qα < m + 1`.
pub fn certify_floor(alpha: &AlphaSpec, q: &BigInt) -> Result<BigInt> {
    check_q(q)?;
    let start = BigRational::new(BigInt::one(), 4.into());
    refine_scaled(alpha, q, start, Precision::default().max_rounds, |enc| {
        enc.certain_floor()
    })
}

pub fn certify_nearest(alpha: &AlphaSpec, q: &BigInt) -> Result<NearestResult> {
    certify_nearest_with(alpha, q, &Precision::default())
}

/// Refines until the enclosure of `2qα` holds no integer, which pins both
/// `⌊qα⌋` and `[qα]`, then keeps going until `‖qα‖` is known to
/// `precision.dist_width`.
pub fn certify_nearest_with(
    alpha: &AlphaSpec,
    q: &BigInt,
    precision: &Precision,
) -> Result<NearestResult> {
    check_q(q)?;
    let half = BigRational::new(BigInt::one(), 2.into());
    let two = BigRational::from_integer(2.into());
    let target = &precision.dist_width;
    let mut eps = BigRational::new(BigInt::one(), 4.into());
    for _ in 0..=precision.max_rounds {
        let enc = alpha.scaled_enclosure(q, &eps).map_err(|e| e.at_q(q))?;
        if let Some(res) = classify(q, &enc, &two) {
            if &res.dist.width() <= target {
                return Ok(res);
            }
            // decided; jump straight to the requested width
            eps = if &(&eps * &half) > target { target.clone() } else { &eps * &half };
            continue;
        }
        eps *= &half;
    }
    Err(Error::PrecisionExhausted(format!(
        "[qα] undecided after {} refinements",
        precision.max_rounds
    ))
    .at_q(q))
}

fn classify(q: &BigInt, enc: &RationalInterval, two: &BigRational) -> Option<NearestResult> {
    let doubled = enc.scale(two);
    let m = doubled.lo().floor();
    // 2qα must sit strictly inside (m, m + 1) with margin on both ends
    if &m == doubled.lo() || doubled.hi() >= &(&m + BigRational::one()) {
        return None;
    }
    let m = m.to_integer();
    let floor_qa = m.div_floor(&BigInt::from(2));
    let (nearest_qa, side) = if m.is_odd() {
        (&floor_qa + 1, Side::Over)
    } else {
        (floor_qa.clone(), Side::Under)
    };
    let r = BigRational::from_integer(nearest_qa.clone());
    let dist = match side {
        Side::Under => RationalInterval::new(enc.lo() - &r, enc.hi() - &r),
        Side::Over => RationalInterval::new(&r - enc.hi(), &r - enc.lo()),
    };
    Some(NearestResult {
        q: q.clone(),
        floor_qa,
        nearest_qa,
        dist,
        side,
    })
}

/// The fixed-denominator approximation `[qα]/q`, as computed and reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Train {
    pub raw: Fraction,
    pub reduced: Fraction,
}

pub fn train(alpha: &AlphaSpec, q: &BigInt) -> Result<Train> {
    let n = certify_nearest(alpha, q)?;
    let raw = Fraction::raw(n.nearest_qa, q.clone());
    let reduced = raw.reduce();
    Ok(Train { raw, reduced })
}

fn check_q(q: &BigInt) -> Result<()> {
    if q < &BigInt::one() {
        return Err(Error::InvalidArgument(format!("q must be >= 1, got {q}")));
    }
    Ok(())
}
