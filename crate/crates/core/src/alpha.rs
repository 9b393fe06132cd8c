//! Descriptions of irrational constants and their certified enclosures.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::constants::{E_DIGITS, PI_DIGITS};
use crate::error::{Error, Result};
use crate::interval::RationalInterval;
use crate::BigRational;

/// An irrational number together with a way to enclose it.
///
/// Textual form (see [`AlphaSpec::parse`]):
/// `pi | e | phi | sqrt:<d> | quad:<a>,<b>,<c>,<d> | dec:<digits>[@<bound>]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlphaSpec {
    Pi,
    E,
    /// `√d`, `d` positive and not a perfect square.
    Sqrt(BigInt),
    /// `(a + b·√d)/c` with `b ≠ 0`, `c > 0`, `d` positive and not a square.
    Quadratic {
        a: BigInt,
        b: BigInt,
        c: BigInt,
        d: BigInt,
    },
    /// A user-supplied decimal `value` with `|α − value| < bound`.
    DecimalDigits {
        text: String,
        value: BigRational,
        bound: BigRational,
    },
}

impl AlphaSpec {
    /// The golden ratio `(1 + √5)/2`.
    pub fn phi() -> Self {
        AlphaSpec::Quadratic {
            a: 1.into(),
            b: 1.into(),
            c: 2.into(),
            d: 5.into(),
        }
    }

    pub fn sqrt(d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        check_radicand(&d, &format!("sqrt:{d}"))?;
        Ok(AlphaSpec::Sqrt(d))
    }

    pub fn quadratic(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        let text = format!("quad:{a},{b},{c},{d}");
        if !c.is_positive() {
            return Err(Error::parse(&text, "c must be positive"));
        }
        check_radicand(&d, &text)?;
        if b.is_zero() {
            return Err(Error::RationalValue(text));
        }
        Ok(AlphaSpec::Quadratic { a, b, c, d })
    }

    pub fn decimal(digits: &str, bound: Option<BigRational>) -> Result<Self> {
        let text = match &bound {
            Some(b) => format!("dec:{digits}@{b}"),
            None => format!("dec:{digits}"),
        };
        let (value, places) = parse_decimal(digits).ok_or_else(|| {
            Error::parse(&text, "expected a decimal literal such as 3.14159")
        })?;
        let bound = bound.unwrap_or_else(|| {
            BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), places))
        });
        if !bound.is_positive() {
            return Err(Error::parse(&text, "error bound must be positive"));
        }
        Ok(AlphaSpec::DecimalDigits { text, value, bound })
    }

    /// Parses the textual form. `phi` is sugar for `quad:1,1,2,5`.
    pub fn parse(spec: &str) -> Result<Self> {
        let s = spec.trim();
        match s {
            "pi" => return Ok(AlphaSpec::Pi),
            "e" => return Ok(AlphaSpec::E),
            "phi" => return Ok(AlphaSpec::phi()),
            _ => {}
        }
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(spec, "unknown constant"))?;
        let int = |t: &str| {
            BigInt::from_str(t.trim())
                .map_err(|_| Error::parse(spec, format!("{t:?} is not an integer")))
        };
        match head {
            "sqrt" => AlphaSpec::sqrt(int(body)?),
            "quad" => {
                let parts: Vec<&str> = body.split(',').collect();
                if parts.len() != 4 {
                    return Err(Error::parse(spec, "quad expects a,b,c,d"));
                }
                AlphaSpec::quadratic(
                    int(parts[0])?,
                    int(parts[1])?,
                    int(parts[2])?,
                    int(parts[3])?,
                )
            }
            "dec" => {
                let (digits, bound) = match body.split_once('@') {
                    Some((d, b)) => (
                        d,
                        Some(parse_rational(b).ok_or_else(|| {
                            Error::parse(spec, format!("{b:?} is not a rational bound"))
                        })?),
                    ),
                    None => (body, None),
                };
                AlphaSpec::decimal(digits, bound)
            }
            _ => Err(Error::parse(spec, format!("unknown constant {head:?}"))),
        }
    }

    /// True for constants that can be refined without limit.
    pub fn is_unbounded(&self) -> bool {
        matches!(self, AlphaSpec::Sqrt(_) | AlphaSpec::Quadratic { .. })
    }

    /// An interval `lo < α < hi` with `hi − lo < eps`.
    ///
    /// Quadratic irrationals refine without bound; `pi` and `e` are limited
    /// by the embedded digits and user decimals by their error bound, both
    /// reporting [`Error::PrecisionExhausted`] past that point.
    pub fn enclosure(&self, eps: &BigRational) -> Result<RationalInterval> {
        if !eps.is_positive() {
            return Err(Error::InvalidArgument(format!("eps must be positive, got {eps}")));
        }
        match self {
            AlphaSpec::Pi => truncated_digits_enclosure(PI_DIGITS, "pi", eps),
            AlphaSpec::E => truncated_digits_enclosure(E_DIGITS, "e", eps),
            AlphaSpec::Sqrt(d) => Ok(quadratic_enclosure(
                &BigInt::zero(),
                &BigInt::one(),
                &BigInt::one(),
                d,
                eps,
            )),
            AlphaSpec::Quadratic { a, b, c, d } => Ok(quadratic_enclosure(a, b, c, d, eps)),
            AlphaSpec::DecimalDigits { text, value, bound } => {
                let width = bound * BigRational::from_integer(2.into());
                if &width >= eps {
                    return Err(Error::PrecisionExhausted(format!(
                        "{text} certifies an interval of width {width}, finer than {eps} requested"
                    )));
                }
                Ok(RationalInterval::new(value - bound, value + bound))
            }
        }
    }

    /// An enclosure of `qα` of width `< eps`: the enclosure of `α` at
    /// `eps/q`, multiplied by `q` exactly.
    pub fn scaled_enclosure(&self, q: &BigInt, eps: &BigRational) -> Result<RationalInterval> {
        if !q.is_positive() {
            return Err(Error::InvalidArgument(format!("q must be >= 1, got {q}")));
        }
        let base = self.enclosure(&(eps / BigRational::from_integer(q.clone())))?;
        Ok(base.scale_int(q))
    }
}

impl fmt::Display for AlphaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaSpec::Pi => write!(f, "pi"),
            AlphaSpec::E => write!(f, "e"),
            AlphaSpec::Sqrt(d) => write!(f, "sqrt:{d}"),
            q if *q == AlphaSpec::phi() => write!(f, "phi"),
            AlphaSpec::Quadratic { a, b, c, d } => write!(f, "quad:{a},{b},{c},{d}"),
            AlphaSpec::DecimalDigits { text, .. } => write!(f, "{text}"),
        }
    }
}

impl FromStr for AlphaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlphaSpec::parse(s)
    }
}

fn check_radicand(d: &BigInt, text: &str) -> Result<()> {
    if !d.is_positive() {
        return Err(Error::parse(text, "radicand must be positive"));
    }
    let r = d.sqrt();
    if &r * &r == *d {
        return Err(Error::RationalValue(text.to_owned()));
    }
    Ok(())
}

/// Parses `[-]digits[.digits]`, returning the value and the number of
/// fractional digits.
fn parse_decimal(s: &str) -> Option<(BigRational, usize)> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut n = BigInt::from_str(&digits).ok()?;
    if neg {
        n = -n;
    }
    let scale = num_traits::pow(BigInt::from(10), frac_part.len());
    Some((BigRational::new(n, scale), frac_part.len()))
}

/// Accepts `p/q` or a decimal literal.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    parse_decimal(s).map(|(v, _)| v)
}

/// Smallest `n` with `10^-n < eps`, with `10^n` alongside.
fn decimal_places_for(eps: &BigRational) -> (usize, BigInt) {
    let mut n = 0;
    let mut pow = BigInt::one();
    while BigRational::new(BigInt::one(), pow.clone()) >= *eps {
        n += 1;
        pow *= 10;
    }
    (n, pow)
}

fn truncated_digits_enclosure(
    digits: &str,
    name: &str,
    eps: &BigRational,
) -> Result<RationalInterval> {
    let (int_part, frac_part) = digits.split_once('.').expect("embedded digits have a point");
    let (places, pow) = decimal_places_for(eps);
    if places > frac_part.len() {
        return Err(Error::PrecisionExhausted(format!(
            "{name} is embedded to {} decimal places, {places} needed for width {eps}",
            frac_part.len()
        )));
    }
    let truncated = BigInt::from_str(&format!("{int_part}{}", &frac_part[..places]))
        .expect("embedded digits are decimal");
    Ok(RationalInterval::new(
        BigRational::new(truncated.clone(), pow.clone()),
        BigRational::new(truncated + 1, pow),
    ))
}

/// Encloses `(a + b√d)/c` through `⌊√(d·4^s)⌋/2^s < √d < (⌊√(d·4^s)⌋ + 1)/2^s`.
fn quadratic_enclosure(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    d: &BigInt,
    eps: &BigRational,
) -> RationalInterval {
    // need |b| / (c · 2^s) < eps
    let ratio = BigRational::from_integer(b.abs()) / (eps * BigRational::from_integer(c.clone()));
    let s = ratio.ceil().to_integer().bits();
    let scaled: BigInt = d << (2 * s);
    let m = scaled.sqrt();
    let two_s = BigInt::one() << s;
    let root = RationalInterval::new(
        BigRational::new(m.clone(), two_s.clone()),
        BigRational::new(m + 1, two_s),
    );
    root.scale(&BigRational::new(b.clone(), c.clone()))
        .shift(&BigRational::new(a.clone(), c.clone()))
}
