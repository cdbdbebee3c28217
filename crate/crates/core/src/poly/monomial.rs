use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::weight::WeightVector;
use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 16;

/// A monomial t_1^{a_1} ... t_h^{a_h}. Unused slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    h: u8,
    e: [u16; MAX_VARS],
}

impl Monomial {
    pub fn new(exponents: &[u32]) -> Result<Self> {
        if exponents.len() > MAX_VARS {
            return Err(Error::VariableCount { expected: MAX_VARS, found: exponents.len() });
        }
        let mut e = [0u16; MAX_VARS];
        for (slot, &a) in e.iter_mut().zip(exponents) {
            *slot = u16::try_from(a).map_err(|_| Error::Parse(format!("exponent {a} too large")))?;
        }
        Ok(Monomial { h: exponents.len() as u8, e })
    }

    pub(crate) fn from_raw(h: usize, e: [u16; MAX_VARS]) -> Self {
        Monomial { h: h as u8, e }
    }

    pub fn one(h: usize) -> Self {
        assert!(h <= MAX_VARS);
        Monomial { h: h as u8, e: [0; MAX_VARS] }
    }

    /// The variable t_j (1-based).
    pub fn var(h: usize, j: usize) -> Result<Self> {
        if j == 0 || j > h {
            return Err(Error::IndexOutOfRange { index: j, min: 1, max: h });
        }
        let mut m = Self::one(h);
        m.e[j - 1] = 1;
        Ok(m)
    }

    pub fn h(&self) -> usize {
        self.h as usize
    }

    pub fn exponents(&self) -> &[u16] {
        &self.e[..self.h as usize]
    }

    pub(crate) fn raw(&self) -> &[u16; MAX_VARS] {
        &self.e
    }

    /// Exponent of t_{j+1}.
    pub fn exponent(&self, j: usize) -> u32 {
        self.exponents()[j] as u32
    }

    pub fn degree(&self) -> u32 {
        self.exponents().iter().map(|&a| a as u32).sum()
    }

    pub fn weight(&self) -> WeightVector {
        WeightVector::of(self.exponents())
    }

    /// True when every exponent has the form 2^b - 1.
    pub fn is_spike(&self) -> bool {
        self.exponents().iter().all(|&a| (a as u32 + 1).is_power_of_two())
    }

    pub fn all_positive(&self) -> bool {
        self.exponents().iter().all(|&a| a > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.h != other.h {
            return Err(Error::VariableCount { expected: self.h(), found: other.h() });
        }
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(&other.e) {
            *a += b;
        }
        Ok(Monomial { h: self.h, e })
    }

    /// t^{2^r}.
    pub fn pow2(&self, r: u32) -> Monomial {
        let mut e = self.e;
        for a in e.iter_mut() {
            *a <<= r;
        }
        Monomial { h: self.h, e }
    }

    /// Position in the (weight, left-lex exponent) order.
    pub fn compare(&self, other: &Monomial) -> Result<Ordering> {
        if self.h != other.h {
            return Err(Error::VariableCount { expected: self.h(), found: other.h() });
        }
        let (d1, d2) = (self.degree(), other.degree());
        if d1 != d2 {
            return Err(Error::OrderUndefined(d1, d2));
        }
        Ok(self.order_key_cmp(other))
    }

    pub(crate) fn order_key_cmp(&self, other: &Monomial) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.exponents().cmp(other.exponents()))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.exponents().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{self}")
    }
}

pub(crate) fn parse_tuple(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected a parenthesized tuple, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad exponent {p:?}: {e}"))))
        .collect()
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Monomial::new(&parse_tuple(s)?)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exponents().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Monomial::new(&v).map_err(serde::de::Error::custom)
    }
}

/// All monomials of degree `n` in `h` variables, in left-lex order of exponents.
pub fn monomials(h: usize, n: u32) -> Vec<Monomial> {
    assert!(h <= MAX_VARS);
    let mut out = Vec::new();
    if h == 0 {
        if n == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut e = [0u16; MAX_VARS];
    fn rec(j: usize, h: usize, left: u32, e: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
        if j == h - 1 {
            e[j] = left as u16;
            out.push(Monomial::from_raw(h, *e));
            return;
        }
        for a in 0..=left {
            e[j] = a as u16;
            rec(j + 1, h, left - a, e, out);
        }
        e[j] = 0;
    }
    rec(0, h, n, &mut e, &mut out);
    out
}

/// C(n + h - 1, h - 1), the number of degree-n monomials in h variables.
pub fn monomial_count(h: usize, n: u32) -> usize {
    if h == 0 {
        return usize::from(n == 0);
    }
    let mut c: u128 = 1;
    for i in 1..h as u128 {
        c = c * (n as u128 + i) / i;
    }
    c as usize
}
