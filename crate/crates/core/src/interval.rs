use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::BigRational;

/// An open interval `(lo, hi)` with exact rational endpoints.
///
/// Produced by the oracles as a certificate `lo < x < hi` for some
/// irrational `x`; the endpoints themselves are never the certified value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    /// Panics unless `lo < hi`.
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo < hi, "empty interval ({lo}, {hi})");
        RationalInterval { lo, hi }
    }

    pub fn try_new(lo: BigRational, hi: BigRational) -> Option<Self> {
        (lo < hi).then_some(RationalInterval { lo, hi })
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// Strict membership, matching the open-interval reading.
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn intersects(&self, other: &RationalInterval) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }

    pub fn is_subset_of(&self, other: &RationalInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// `Some(Less)` if every point is below every point of `other`, and so on.
    /// `None` when the intervals overlap.
    pub fn certified_cmp(&self, other: &RationalInterval) -> Option<Ordering> {
        if self.hi <= other.lo {
            Some(Ordering::Less)
        } else if other.hi <= self.lo {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Decides `value < x` for the enclosed value, if the interval allows it.
    pub fn cmp_point(&self, x: &BigRational) -> Option<Ordering> {
        if &self.hi <= x {
            Some(Ordering::Less)
        } else if x <= &self.lo {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Multiplies by a nonzero rational, flipping the endpoints if negative.
    pub fn scale(&self, k: &BigRational) -> RationalInterval {
        assert!(!k.is_zero(), "scaling by zero");
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_positive() {
            RationalInterval::new(a, b)
        } else {
            RationalInterval::new(b, a)
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> RationalInterval {
        self.scale(&BigRational::from_integer(k.clone()))
    }

    pub fn shift(&self, k: &BigRational) -> RationalInterval {
        RationalInterval::new(&self.lo + k, &self.hi + k)
    }

    pub fn neg(&self) -> RationalInterval {
        RationalInterval::new(-&self.hi, -&self.lo)
    }

    /// The floor of every point of the interval, when they all agree.
    pub fn certain_floor(&self) -> Option<BigInt> {
        let m = self.lo.floor();
        (self.hi <= &m + BigRational::one()).then(|| m.to_integer())
    }

    /// Positive powers of an interval lying in `(0, ∞)`.
    pub fn pow_positive(&self, n: u32) -> RationalInterval {
        assert!(self.lo >= BigRational::zero(), "pow_positive needs lo >= 0");
        RationalInterval::new(
            num_traits::pow(self.lo.clone(), n as usize),
            num_traits::pow(self.hi.clone(), n as usize),
        )
    }

    /// Quotient of two intervals, both strictly positive.
    pub fn div_positive(&self, other: &RationalInterval) -> RationalInterval {
        assert!(self.lo >= BigRational::zero() && other.lo.is_positive());
        RationalInterval::new(&self.lo / &other.hi, &self.hi / &other.lo)
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    #[should_panic]
    fn rejects_empty() {
        RationalInterval::new(r(1, 2), r(1, 2));
    }

    #[test]
    fn floor_is_certain_only_without_interior_integer() {
        assert_eq!(RationalInterval::new(r(3, 1), r(4, 1)).certain_floor(), Some(3.into()));
        assert_eq!(RationalInterval::new(r(-7, 2), r(-3, 1)).certain_floor(), Some((-4).into()));
        assert_eq!(RationalInterval::new(r(5, 2), r(7, 2)).certain_floor(), None);
    }

    #[test]
    fn scale_by_negative_flips() {
        let i = RationalInterval::new(r(1, 3), r(1, 2)).scale(&r(-2, 1));
        assert_eq!((i.lo().clone(), i.hi().clone()), (r(-1, 1), r(-2, 3)));
    }

    #[test]
    fn touching_intervals_are_ordered() {
        let a = RationalInterval::new(r(0, 1), r(1, 1));
        let b = RationalInterval::new(r(1, 1), r(2, 1));
        assert_eq!(a.certified_cmp(&b), Some(Ordering::Less));
        assert!(!a.intersects(&b));
        let c = RationalInterval::new(r(1, 2), r(3, 2));
        assert_eq!(a.certified_cmp(&c), None);
    }
}
