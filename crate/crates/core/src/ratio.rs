//! Exact nonnegative rationals and the toughness value domain.
//!
//! Every threshold test in the crate goes through the integer helpers here:
//! fractions are compared by cross-multiplication (widened to `u128`) and never
//! divided.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A reduced fraction `num/den` with `den > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRatio", into = "RawRatio")]
pub struct ExactRatio {
    num: u64,
    den: u64,
}

#[derive(Serialize, Deserialize)]
struct RawRatio {
    num: u64,
    den: u64,
}

impl TryFrom<RawRatio> for ExactRatio {
    type Error = String;

    fn try_from(raw: RawRatio) -> Result<Self, String> {
        ExactRatio::new(raw.num, raw.den).ok_or_else(|| "zero denominator".to_string())
    }
}

impl From<ExactRatio> for RawRatio {
    fn from(r: ExactRatio) -> Self {
        RawRatio { num: r.num, den: r.den }
    }
}

const fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl ExactRatio {
    pub const ZERO: ExactRatio = ExactRatio { num: 0, den: 1 };
    pub const HALF: ExactRatio = ExactRatio { num: 1, den: 2 };
    pub const ONE: ExactRatio = ExactRatio { num: 1, den: 1 };

    /// Reduced `num/den`; `None` when `den == 0`.
    pub const fn new(num: u64, den: u64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = gcd(num, den);
        Some(ExactRatio { num: num / g, den: den / g })
    }

    pub const fn integer(k: u64) -> Self {
        ExactRatio { num: k, den: 1 }
    }

    #[inline]
    pub const fn num(self) -> u64 {
        self.num
    }

    #[inline]
    pub const fn den(self) -> u64 {
        self.den
    }

    /// `count >= self * mult`, as `count * den >= num * mult`.
    #[inline]
    pub fn le_scaled(self, mult: u64, count: u64) -> bool {
        (count as u128) * (self.den as u128) >= (self.num as u128) * (mult as u128)
    }

    /// `count >= 2 * self + 1`, as `count * den >= 2 * num + den`.
    #[inline]
    pub fn two_t_plus_one_le(self, count: u64) -> bool {
        (count as u128) * (self.den as u128) >= 2 * (self.num as u128) + (self.den as u128)
    }

    /// `a/b` compared with `self`, exactly.
    #[inline]
    pub fn cmp_fraction(self, a: u64, b: u64) -> Ordering {
        ((a as u128) * (self.den as u128)).cmp(&((self.num as u128) * (b as u128)))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        ((self.num as u128) * (other.den as u128)).cmp(&((other.num as u128) * (self.den as u128)))
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for ExactRatio {
    type Err = String;

    /// Accepts `"p/q"` or a bare integer `"p"`.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = n.parse::<u64>().map_err(|e| format!("bad numerator {n:?}: {e}"))?;
        let den = d.parse::<u64>().map_err(|e| format!("bad denominator {d:?}: {e}"))?;
        ExactRatio::new(num, den).ok_or_else(|| "zero denominator".to_string())
    }
}

/// Toughness: a nonnegative rational, or infinity for complete graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum ToughnessValue {
    Finite(ExactRatio),
    Infinite,
}

impl ToughnessValue {
    pub const ZERO: ToughnessValue = ToughnessValue::Finite(ExactRatio::ZERO);

    pub fn finite(self) -> Option<ExactRatio> {
        match self {
            ToughnessValue::Finite(r) => Some(r),
            ToughnessValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ToughnessValue::Infinite)
    }
}

impl Ord for ToughnessValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use ToughnessValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ToughnessValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ToughnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToughnessValue::Finite(r) => write!(f, "{r}"),
            ToughnessValue::Infinite => f.write_str("inf"),
        }
    }
}
