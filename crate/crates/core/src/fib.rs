//! Fibonacci numbers from the golden ratio: `ℱ₁ = 1`, `ℱ_{n+1} = [ℱ_n φ]`.
//!
//! Indexing starts `1, 2, 3, 5, …`, so `ℱ_n` is the usual `F_{n+1}`.

use num_bigint::BigInt;
use num_traits::One;

use crate::alpha::AlphaSpec;
use crate::error::{Error, Result};
use crate::interval::RationalInterval;
use crate::train::certify_nearest;
use crate::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibSequence {
    terms: Vec<BigInt>,
}

impl FibSequence {
    /// `terms()[0]` is `ℱ₁`.
    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// `ℱ_n`, 1-indexed.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.terms.get(i))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `ℱ_{n+2} = ℱ_{n+1} + ℱ_n` throughout.
    pub fn satisfies_additive_recurrence(&self) -> bool {
        self.terms.windows(3).all(|w| w[2] == &w[1] + &w[0])
    }
}

/// Iterates the nearest-integer map `x ↦ [xφ]` from 1.
pub fn fib_via_train(n_max: usize) -> Result<FibSequence> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be >= 1".into()));
    }
    let phi = AlphaSpec::phi();
    let mut terms = Vec::with_capacity(n_max);
    terms.push(BigInt::one());
    while terms.len() < n_max {
        let next = certify_nearest(&phi, terms.last().unwrap())?.nearest_qa;
        terms.push(next);
    }
    Ok(FibSequence { terms })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinetRow {
    pub n: usize,
    /// Certified nearest integer of `φⁿ/√5`.
    pub rounded: BigInt,
    pub expected: BigInt,
}

impl BinetRow {
    pub fn ok(&self) -> bool {
        self.rounded == self.expected
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinetReport {
    pub rows: Vec<BinetRow>,
}

impl BinetReport {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(BinetRow::ok)
    }
}

/// Checks term `n` against `[φⁿ⁺¹/√5]` for `n ≤ n_max` by interval powering.
/// The exponent is shifted by one because the sequence starts `1, 2`
/// rather than `1, 1`.
pub fn binet_round_check(n_max: usize) -> Result<BinetReport> {
    let fib = fib_via_train(n_max)?;
    let rows = (1..=n_max)
        .map(|n| {
            Ok(BinetRow {
                n,
                rounded: binet_nearest(n as u32 + 1)?,
                expected: fib.get(n).unwrap().clone(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(BinetReport { rows })
}

/// Nearest integer of `φⁿ/√5`.
pub fn binet_nearest(n: u32) -> Result<BigInt> {
    let phi = AlphaSpec::phi();
    let root5 = AlphaSpec::Sqrt(5.into());
    let two = BigRational::from_integer(2.into());
    // start near 2^-(n + 32) so the first try usually succeeds
    let mut eps = BigRational::new(BigInt::one(), BigInt::one() << (n as usize + 32));
    for _ in 0..64 {
        let value = phi
            .enclosure(&eps)?
            .pow_positive(n)
            .div_positive(&root5.enclosure(&eps)?);
        let shifted: RationalInterval = value.shift(&(BigRational::one() / &two));
        if let Some(m) = shifted.certain_floor() {
            return Ok(m);
        }
        eps /= BigRational::from_integer(BigInt::one() << 32usize);
    }
    Err(Error::PrecisionExhausted(format!("[φ^{n}/√5] undecided")))
}
