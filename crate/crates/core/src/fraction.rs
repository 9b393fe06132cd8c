use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::BigRational;

/// Which side of `α` an approximation falls on.
///
/// `Under` (`+`) means `α − p/q > 0`, `Over` (`−`) means `α − p/q < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Under,
    Over,
}

impl Side {
    pub fn symbol(self) -> char {
        match self {
            Side::Under => '+',
            Side::Over => '-',
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Under => Side::Over,
            Side::Over => Side::Under,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An integer pair `p/q` with `q ≥ 1`, kept as given unless reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: BigInt,
    q: BigInt,
    reduced: bool,
}

impl Fraction {
    /// Keeps `p/q` exactly as given. Panics if `q < 1`.
    pub fn raw(p: BigInt, q: BigInt) -> Self {
        assert!(q >= BigInt::one(), "denominator must be >= 1, got {q}");
        let reduced = p.gcd(&q).is_one();
        Fraction { p, q, reduced }
    }

    /// Divides out `gcd(p, q)`. Panics if `q < 1`.
    pub fn reduced(p: BigInt, q: BigInt) -> Self {
        Fraction::raw(p, q).reduce()
    }

    pub fn reduce(&self) -> Fraction {
        if self.reduced {
            return self.clone();
        }
        let g = self.p.gcd(&self.q);
        Fraction {
            p: &self.p / &g,
            q: &self.q / &g,
            reduced: true,
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    /// `gcd(|p|, q) = 1`.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.p.clone(), self.q.clone())
    }

    /// Same rational value, regardless of representation.
    pub fn same_value(&self, other: &Fraction) -> bool {
        &self.p * &other.q == &other.p * &self.q
    }

    pub fn is_negative(&self) -> bool {
        self.p.is_negative()
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_divides_gcd() {
        let f = Fraction::raw(710.into(), 226.into());
        assert!(!f.is_reduced());
        let g = f.reduce();
        assert_eq!((g.numer().clone(), g.denom().clone()), (355.into(), 113.into()));
        assert!(g.is_reduced());
        assert!(f.same_value(&g));
    }

    #[test]
    fn negative_numerators_reduce() {
        let g = Fraction::reduced((-6).into(), 4.into());
        assert_eq!(g.to_string(), "-3/2");
    }

    #[test]
    #[should_panic]
    fn zero_denominator_panics() {
        Fraction::raw(1.into(), 0.into());
    }
}
