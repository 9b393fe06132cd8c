//! Independent fixed-point reference values, built without the library's
//! enclosure code: Machin's formula for π, the factorial series for e and
//! integer square roots for quadratic irrationals. Values are integers
//! scaled by `10^DIGITS`, accurate to a few units in the last place.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub const DIGITS: u32 = 80;
const GUARD: u32 = 10;

fn ten_pow(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), n as usize)
}

/// `arctan(1/x) · scale` by the alternating series.
fn arctan_inv(x: i64, scale: &BigInt) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut term = scale / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 0i64;
    while !term.is_zero() {
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &x2;
        k += 1;
    }
    sum
}

/// π · 10^digits, truncated.
pub fn pi_fixed(digits: u32) -> BigInt {
    let scale = ten_pow(digits + GUARD);
    let v = (arctan_inv(5, &scale) * 4 - arctan_inv(239, &scale)) * 4;
    v / ten_pow(GUARD)
}

/// e · 10^digits, truncated.
pub fn e_fixed(digits: u32) -> BigInt {
    let scale = ten_pow(digits + GUARD);
    let mut term = scale.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    while !term.is_zero() {
        sum += &term;
        term /= BigInt::from(k);
        k += 1;
    }
    sum / ten_pow(GUARD)
}

/// `(a + b√d)/c · 10^digits`, floored.
pub fn quad_fixed(a: i64, b: i64, c: i64, d: i64, digits: u32) -> BigInt {
    let scale = ten_pow(digits);
    let root = (BigInt::from(d) * &scale * &scale).sqrt();
    // b√d: floor of a negative product needs the ceiling of the root
    let broot = if b >= 0 { BigInt::from(b) * root } else { BigInt::from(b) * (root + 1) };
    (BigInt::from(a) * &scale + broot).div_floor(&BigInt::from(c))
}

#[derive(Clone, Copy, Debug)]
pub enum Ref {
    Pi,
    E,
    Quad(i64, i64, i64, i64),
}

impl Ref {
    pub fn spec(&self) -> String {
        match self {
            Ref::Pi => "pi".into(),
            Ref::E => "e".into(),
            Ref::Quad(a, b, c, d) => format!("quad:{a},{b},{c},{d}"),
        }
    }

    pub fn fixed(&self, digits: u32) -> BigInt {
        match *self {
            Ref::Pi => pi_fixed(digits),
            Ref::E => e_fixed(digits),
            Ref::Quad(a, b, c, d) => quad_fixed(a, b, c, d, digits),
        }
    }
}

pub const PHI: Ref = Ref::Quad(1, 1, 2, 5);
pub const SQRT2: Ref = Ref::Quad(0, 1, 1, 2);
pub const SQRT3: Ref = Ref::Quad(0, 1, 1, 3);

/// One brute-force row: `[qα]`, sign (`true` = underestimate) and
/// `‖qα‖ · 10^DIGITS`.
#[derive(Clone, Debug)]
pub struct RefRow {
    pub q: u64,
    pub p: BigInt,
    pub under: bool,
    pub dist: BigInt,
}

pub fn rows(alpha: Ref, n: u64) -> Vec<RefRow> {
    let a = alpha.fixed(DIGITS);
    let scale = ten_pow(DIGITS);
    let half = &scale / 2;
    (1..=n)
        .map(|q| {
            let qa = &a * BigInt::from(q);
            let (fl, frac) = qa.div_mod_floor(&scale);
            let (p, under, dist) = if frac < half {
                (fl, true, frac)
            } else {
                (fl + 1, false, &scale - frac)
            };
            RefRow { q, p, under, dist }
        })
        .collect()
}

fn reduced(p: &BigInt, q: u64) -> (BigInt, BigInt) {
    let q = BigInt::from(q);
    let g = p.gcd(&q);
    (p / &g, q / g)
}

pub fn label(p: &BigInt, under: bool, q: u64) -> String {
    let (p, q) = reduced(p, q);
    format!("{p}{}/{q}", if under { '+' } else { '-' })
}

/// Kind I/II by brute-force prefix minimum; kind I keys are compared as
/// `dist_a · q_b < dist_b · q_a`.
pub fn brute_sequence(alpha: Ref, n: u64, kind: u8) -> Vec<String> {
    let rows = rows(alpha, n);
    let mut out = Vec::new();
    let mut best: Option<&RefRow> = None;
    for r in &rows {
        let better = match best {
            None => true,
            Some(b) => match kind {
                1 => &r.dist * BigInt::from(b.q) < &b.dist * BigInt::from(r.q),
                2 => r.dist < b.dist,
                _ => unreachable!(),
            },
        };
        if better {
            out.push(label(&r.p, r.under, r.q));
            best = Some(r);
        }
    }
    out
}

/// Kind III: irreducible rows with `q‖qα‖ < 1`.
pub fn brute_third_kind(alpha: Ref, n: u64) -> Vec<String> {
    let scale = ten_pow(DIGITS);
    rows(alpha, n)
        .into_iter()
        .filter(|r| r.p.gcd(&BigInt::from(r.q)).is_one() && &r.dist * BigInt::from(r.q) < scale)
        .map(|r| label(&r.p, r.under, r.q))
        .collect()
}

/// Regular continued fraction convergents with `q ≤ n`, by Euclid on the
/// fixed-point value (valid while the quotients stay far from the
/// fixed-point noise).
pub fn brute_convergents(alpha: Ref, n: u64) -> Vec<(BigInt, BigInt)> {
    let mut num = alpha.fixed(DIGITS);
    let mut den = ten_pow(DIGITS);
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut out = Vec::new();
    loop {
        let (a, r) = num.div_mod_floor(&den);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > BigInt::from(n) {
            return out;
        }
        out.push((p2.clone(), q2.clone()));
        assert!(r.is_positive());
        (num, den) = (den, r);
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
}
