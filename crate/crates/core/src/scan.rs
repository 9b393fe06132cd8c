//! Best rational approximations of the first, second and third kinds.
//!
//! For each `1 ≤ q ≤ N` a [`ApproxRecord`] holds `[qα]` and enclosures of
//! the three keys
//!
//! - kind I: `‖qα‖/q = |α − [qα]/q|`,
//! - kind II: `‖qα‖`,
//! - kind III: `q‖qα‖`.
//!
//! Kinds I and II are running minima of their key over `q`; kind III keeps
//! every irreducible `[qα]/q` with `q‖qα‖ < 1`. [`brain_sequence`] computes
//! them in one streaming pass, [`table_mode`] reproduces the sorted
//! spreadsheet view, reducible rows included.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::alpha::AlphaSpec;
use crate::error::{Error, Result};
use crate::fraction::{Fraction, Side};
use crate::interval::RationalInterval;
use crate::render::{render_interval, Style};
use crate::train::{certify_nearest_with, NearestResult, Precision};
use crate::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    I,
    II,
    III,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::I, Kind::II, Kind::III];
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::I => "I",
            Kind::II => "II",
            Kind::III => "III",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "1" => Ok(Kind::I),
            "II" | "2" => Ok(Kind::II),
            "III" | "3" => Ok(Kind::III),
            _ => Err(Error::InvalidArgument(format!("unknown kind {s:?}, expected I, II or III"))),
        }
    }
}

/// One scanned denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxRecord {
    pub q: u64,
    /// `[qα]`.
    pub p: BigInt,
    /// Encloses `‖qα‖/q`.
    pub key1: RationalInterval,
    /// Encloses `‖qα‖`.
    pub key2: RationalInterval,
    /// Encloses `q‖qα‖`.
    pub key3: RationalInterval,
    pub side: Side,
    /// `gcd(p, q) = 1`.
    pub irreducible: bool,
}

impl ApproxRecord {
    pub fn from_nearest(n: NearestResult) -> Self {
        let q = u64::try_from(&n.q).expect("scanned denominators fit in u64");
        let qr = BigRational::from_integer(n.q.clone());
        let key1 = n.dist.scale(&(BigRational::one() / &qr));
        let key3 = n.dist.scale(&qr);
        let fraction = Fraction::raw(n.nearest_qa.clone(), n.q);
        ApproxRecord {
            q,
            p: n.nearest_qa,
            key1,
            key2: n.dist,
            key3,
            side: n.side,
            irreducible: fraction.is_reduced(),
        }
    }

    pub fn key(&self, kind: Kind) -> &RationalInterval {
        match kind {
            Kind::I => &self.key1,
            Kind::II => &self.key2,
            Kind::III => &self.key3,
        }
    }

    /// `[qα]/q` as scanned.
    pub fn fraction(&self) -> Fraction {
        Fraction::raw(self.p.clone(), self.q.into())
    }

    pub fn reduced(&self) -> Fraction {
        self.fraction().reduce()
    }
}

/// Certified record for one denominator.
pub fn record(alpha: &AlphaSpec, q: u64, precision: &Precision) -> Result<ApproxRecord> {
    certify_nearest_with(alpha, &BigInt::from(q), precision).map(ApproxRecord::from_nearest)
}

fn check_limit(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be >= 1".into()));
    }
    Ok(())
}

/// Records for `q = 1..=n` in denominator order.
pub fn scan_records(alpha: &AlphaSpec, n: u64) -> Result<Vec<ApproxRecord>> {
    check_limit(n)?;
    let precision = Precision::default();
    (1..=n).map(|q| record(alpha, q, &precision)).collect()
}

/// Same output as [`scan_records`], computed on `threads` worker threads.
/// On failure the error of the smallest failing `q` is returned.
pub fn scan_records_parallel(alpha: &AlphaSpec, n: u64, threads: usize) -> Result<Vec<ApproxRecord>> {
    check_limit(n)?;
    if threads <= 1 {
        return scan_records(alpha, n);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {threads} threads: {e}")))?;
    let precision = Precision::default();
    let results: Vec<Result<ApproxRecord>> = pool.install(|| {
        (1..=n)
            .into_par_iter()
            .map(|q| record(alpha, q, &precision))
            .collect()
    });
    results.into_iter().collect()
}

/// Widths tried after the default one when an enclosure is too coarse.
const REFINE_STEPS: u32 = 40;
const REFINE_BITS: usize = 20;

/// Applies `decide` to `rec`'s key for `kind`, re-certifying the record at
/// finer widths until it answers.
pub fn decide_key<T>(
    alpha: &AlphaSpec,
    rec: &ApproxRecord,
    kind: Kind,
    mut decide: impl FnMut(&RationalInterval) -> Option<T>,
) -> Result<T> {
    if let Some(t) = decide(rec.key(kind)) {
        return Ok(t);
    }
    let base = Precision::default();
    let mut width = base.dist_width.clone();
    for _ in 0..REFINE_STEPS {
        width /= BigRational::from_integer(BigInt::one() << REFINE_BITS);
        let fine = record(alpha, rec.q, &base.with_dist_width(width.clone()))?;
        if let Some(t) = decide(fine.key(kind)) {
            return Ok(t);
        }
    }
    Err(Error::PrecisionExhausted(format!("key of kind {kind} undecided")).at_q(rec.q))
}

/// Certified `key < threshold`. Equality is impossible for irrational `α`
/// and a rational threshold, so refinement always settles it.
pub fn key_below(alpha: &AlphaSpec, rec: &ApproxRecord, kind: Kind, threshold: &BigRational) -> Result<bool> {
    decide_key(alpha, rec, kind, |k| k.cmp_point(threshold).map(|o| o == Ordering::Less))
}

/// True when the two keys are exactly equal.
///
/// For kind I this happens only between `[qα]/q` and its multiples (equal
/// errors force equal fractions); for kinds II and III distinct `q` always
/// give distinct keys.
pub fn keys_equal(a: &ApproxRecord, b: &ApproxRecord, kind: Kind) -> bool {
    match kind {
        Kind::I => a.fraction().same_value(&b.fraction()),
        Kind::II | Kind::III => a.q == b.q,
    }
}

/// Exact comparison of two keys.
pub fn compare_keys(alpha: &AlphaSpec, a: &ApproxRecord, b: &ApproxRecord, kind: Kind) -> Result<Ordering> {
    if keys_equal(a, b, kind) {
        return Ok(Ordering::Equal);
    }
    if let Some(o) = a.key(kind).certified_cmp(b.key(kind)) {
        return Ok(o);
    }
    let base = Precision::default();
    let mut width = base.dist_width.clone();
    for _ in 0..REFINE_STEPS {
        width /= BigRational::from_integer(BigInt::one() << REFINE_BITS);
        let p = base.with_dist_width(width.clone());
        let (fa, fb) = (record(alpha, a.q, &p)?, record(alpha, b.q, &p)?);
        if let Some(o) = fa.key(kind).certified_cmp(fb.key(kind)) {
            return Ok(o);
        }
    }
    Err(Error::PrecisionExhausted(format!(
        "cannot separate kind {kind} keys of q = {} and q = {}",
        a.q, b.q
    )))
}

/// Renders a key, refining until every point of the enclosure agrees.
pub fn render_key(alpha: &AlphaSpec, rec: &ApproxRecord, kind: Kind, style: Style) -> Result<String> {
    decide_key(alpha, rec, kind, |k| render_interval(k, style))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrainItem {
    /// 1-based position in the sequence.
    pub k: usize,
    pub fraction: Fraction,
    pub record: ApproxRecord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrainSequence {
    pub kind: Kind,
    pub alpha: AlphaSpec,
    pub limit: u64,
    pub items: Vec<BrainItem>,
}

impl BrainSequence {
    pub fn fractions(&self) -> Vec<Fraction> {
        self.items.iter().map(|i| i.fraction.clone()).collect()
    }

    pub fn denominators(&self) -> Vec<u64> {
        self.items.iter().map(|i| i.record.q).collect()
    }

    /// Fractions written `p±/q`, e.g. `["3+/1", "22-/7"]`.
    pub fn signed_labels(&self) -> Vec<String> {
        self.items
            .iter()
            .map(|i| format!("{}{}/{}", i.fraction.numer(), i.record.side, i.fraction.denom()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Streams records and keeps kind-I/II running minima or kind-III members.
pub fn brain_sequence_from_records<I>(alpha: &AlphaSpec, n: u64, kind: Kind, records: I) -> Result<BrainSequence>
where
    I: IntoIterator<Item = Result<ApproxRecord>>,
{
    check_limit(n)?;
    let one = BigRational::one();
    let mut items: Vec<BrainItem> = Vec::new();
    for rec in records {
        let rec = rec?;
        let keep = match kind {
            Kind::I | Kind::II => match items.last() {
                None => true,
                Some(best) => compare_keys(alpha, &rec, &best.record, kind)? == Ordering::Less,
            },
            Kind::III => rec.irreducible && key_below(alpha, &rec, Kind::III, &one)?,
        };
        if keep {
            debug_assert!(rec.irreducible, "q = {} emitted reducible", rec.q);
            items.push(BrainItem {
                k: items.len() + 1,
                fraction: rec.reduced(),
                record: rec,
            });
        }
    }
    Ok(BrainSequence {
        kind,
        alpha: alpha.clone(),
        limit: n,
        items,
    })
}

/// Best approximations of the given kind with denominator `≤ n`.
pub fn brain_sequence(alpha: &AlphaSpec, n: u64, kind: Kind) -> Result<BrainSequence> {
    check_limit(n)?;
    let precision = Precision::default();
    brain_sequence_from_records(alpha, n, kind, (1..=n).map(|q| record(alpha, q, &precision)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableSelect {
    /// The first `k` rows after sorting.
    Top(usize),
    /// Every row whose key is below the threshold.
    Below(BigRational),
}

impl TableSelect {
    /// `Top(20)` for kinds I/II and `Below(1)` for kind III.
    pub fn default_for(kind: Kind) -> Self {
        match kind {
            Kind::I | Kind::II => TableSelect::Top(20),
            Kind::III => TableSelect::Below(BigRational::one()),
        }
    }
}

/// Sorts ascending by the kind's key; exactly equal keys by denominator.
pub fn sort_records(alpha: &AlphaSpec, records: &mut [ApproxRecord], kind: Kind) -> Result<()> {
    let mut failure = None;
    records.sort_by(|a, b| match compare_keys(alpha, a, b, kind) {
        Ok(Ordering::Equal) => a.q.cmp(&b.q),
        Ok(o) => o,
        Err(e) => {
            failure.get_or_insert(e);
            a.q.cmp(&b.q)
        }
    });
    failure.map_or(Ok(()), Err)
}

/// The spreadsheet view: all rows sorted by key, then selected.
pub fn table_from_records(
    alpha: &AlphaSpec,
    mut records: Vec<ApproxRecord>,
    kind: Kind,
    select: &TableSelect,
) -> Result<Vec<ApproxRecord>> {
    if let TableSelect::Below(t) = select {
        let mut kept = Vec::new();
        for rec in records {
            if key_below(alpha, &rec, kind, t)? {
                kept.push(rec);
            }
        }
        records = kept;
    }
    sort_records(alpha, &mut records, kind)?;
    if let TableSelect::Top(k) = select {
        records.truncate(*k);
    }
    Ok(records)
}

pub fn table_mode(alpha: &AlphaSpec, n: u64, kind: Kind, select: &TableSelect) -> Result<Vec<ApproxRecord>> {
    table_from_records(alpha, scan_records(alpha, n)?, kind, select)
}

/// Reads the best approximations off a fully sorted table: a row counts
/// when no row above it has a smaller denominator. For kind III the
/// irreducible rows are returned in denominator order instead.
pub fn sequence_from_table(sorted: &[ApproxRecord], kind: Kind) -> Vec<Fraction> {
    match kind {
        Kind::I | Kind::II => {
            let mut min_q = u64::MAX;
            let mut out = Vec::new();
            for rec in sorted {
                if rec.q < min_q {
                    min_q = rec.q;
                    out.push(rec.reduced());
                }
            }
            out.reverse();
            out
        }
        Kind::III => {
            let mut rows: Vec<&ApproxRecord> = sorted.iter().filter(|r| r.irreducible).collect();
            rows.sort_by_key(|r| r.q);
            rows.into_iter().map(ApproxRecord::reduced).collect()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inclusion {
    SecondInThird,
    ThirdInFirst,
}

impl fmt::Display for Inclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inclusion::SecondInThird => "II ⊆ III",
            Inclusion::ThirdInFirst => "III ⊆ I",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionWitness {
    pub relation: Inclusion,
    /// A member of the smaller set missing from the larger one.
    pub fraction: Fraction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    pub second_in_third: bool,
    pub third_in_first: bool,
    /// Kinds I and II coincide as sets (true for the golden ratio).
    pub first_equals_second: bool,
    pub witnesses: Vec<InclusionWitness>,
}

impl InclusionReport {
    pub fn holds(&self) -> bool {
        self.second_in_third && self.third_in_first
    }
}

pub fn inclusion_from_sequences(first: &BrainSequence, second: &BrainSequence, third: &BrainSequence) -> InclusionReport {
    let (f1, f2, f3) = (first.fractions(), second.fractions(), third.fractions());
    let mut witnesses = Vec::new();
    for f in &f2 {
        if !f3.contains(f) {
            witnesses.push(InclusionWitness { relation: Inclusion::SecondInThird, fraction: f.clone() });
        }
    }
    for f in &f3 {
        if !f1.contains(f) {
            witnesses.push(InclusionWitness { relation: Inclusion::ThirdInFirst, fraction: f.clone() });
        }
    }
    InclusionReport {
        second_in_third: !witnesses.iter().any(|w| w.relation == Inclusion::SecondInThird),
        third_in_first: !witnesses.iter().any(|w| w.relation == Inclusion::ThirdInFirst),
        first_equals_second: f1 == f2,
        witnesses,
    }
}

pub fn kind_inclusion_check(alpha: &AlphaSpec, n: u64) -> Result<InclusionReport> {
    let records = scan_records(alpha, n)?;
    let seq = |kind| brain_sequence_from_records(alpha, n, kind, records.iter().cloned().map(Ok));
    Ok(inclusion_from_sequences(&seq(Kind::I)?, &seq(Kind::II)?, &seq(Kind::III)?))
}
