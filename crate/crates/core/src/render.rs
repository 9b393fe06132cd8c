//! Decimal rendering of exact rationals.
//!
//! Two styles: [`Style::Pretty`] writes a plain decimal rounded half-even to
//! a number of significant digits; [`Style::Paper`] mimics an 11-character
//! spreadsheet "General" cell, e.g. `0.003406312`, `2.66764E-07`,
//! `1.5738E-05`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::interval::RationalInterval;
use crate::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Paper,
    Pretty { digits: u32 },
}

impl Default for Style {
    fn default() -> Self {
        Style::Pretty { digits: 9 }
    }
}

const CELL_WIDTH: usize = 11;
const SCI_MANTISSA_DECIMALS: i64 = 5;

pub fn render(x: &BigRational, style: Style) -> String {
    match style {
        Style::Paper => render_paper(x),
        Style::Pretty { digits } => render_significant(x, digits),
    }
}

/// Renders the enclosed value if every point of the interval renders the
/// same; callers refine and retry on `None`.
pub fn render_interval(i: &RationalInterval, style: Style) -> Option<String> {
    let lo = render(i.lo(), style);
    (lo == render(i.hi(), style)).then_some(lo)
}

pub fn round_half_even(x: &BigRational) -> BigInt {
    let n = x.floor();
    let frac = x - &n;
    let half = BigRational::new(BigInt::one(), 2.into());
    let n = n.to_integer();
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => n,
        std::cmp::Ordering::Greater => n + 1,
        std::cmp::Ordering::Equal if n.is_even() => n,
        std::cmp::Ordering::Equal => n + 1,
    }
}

fn pow10(e: i64) -> BigRational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `floor(log10 x)` for `x > 0`.
fn decimal_exponent(x: &BigRational) -> i64 {
    debug_assert!(x.is_positive());
    // start from a bit-length estimate, then correct
    let bits = x.numer().bits() as i64 - x.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while &pow10(e) > x {
        e -= 1;
    }
    while &pow10(e + 1) <= x {
        e += 1;
    }
    e
}

fn sign_prefix(x: &BigRational) -> &'static str {
    if x.is_negative() {
        "-"
    } else {
        ""
    }
}

/// Plain decimal with `digits` significant digits, rounded half-even.
pub fn render_significant(x: &BigRational, digits: u32) -> String {
    assert!(digits >= 1);
    if x.is_zero() {
        return "0".into();
    }
    let d = digits as i64;
    let ax = x.abs();
    let mut e = decimal_exponent(&ax);
    let mut m = round_half_even(&(&ax * pow10(d - 1 - e)));
    if m == num_traits::pow(BigInt::from(10), digits as usize) {
        e += 1;
        m /= 10;
    }
    let s = m.to_string();
    let body = if e >= d - 1 {
        format!("{s}{}", "0".repeat((e - d + 1) as usize))
    } else if e >= 0 {
        let (int, frac) = s.split_at((e + 1) as usize);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{s}", "0".repeat((-e - 1) as usize))
    };
    format!("{}{body}", sign_prefix(x))
}

pub fn render_paper(x: &BigRational) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let ax = x.abs();
    let int_digits = {
        let f = ax.floor().to_integer();
        if f.is_zero() {
            1
        } else {
            f.to_string().len()
        }
    };
    let small = ax < pow10(-4);
    let body = if small || int_digits + 1 >= CELL_WIDTH {
        paper_scientific(&ax)
    } else {
        let decimals = CELL_WIDTH - 1 - int_digits;
        let v = round_half_even(&(&ax * pow10(decimals as i64)));
        let scale = num_traits::pow(BigInt::from(10), decimals);
        let (int, frac) = v.div_rem(&scale);
        let frac = format!("{:0>width$}", frac.to_string(), width = decimals);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    format!("{}{body}", sign_prefix(x))
}

fn paper_scientific(ax: &BigRational) -> String {
    let mut e = decimal_exponent(ax);
    let mut m = round_half_even(&(ax * pow10(SCI_MANTISSA_DECIMALS - e)));
    let limit = num_traits::pow(BigInt::from(10), SCI_MANTISSA_DECIMALS as usize + 1);
    if m == limit {
        e += 1;
        m /= 10;
    }
    let s = m.to_string();
    let (lead, rest) = s.split_at(1);
    let rest = rest.trim_end_matches('0');
    let mantissa = if rest.is_empty() {
        lead.to_string()
    } else {
        format!("{lead}.{rest}")
    };
    let sign = if e < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", e.abs())
}
