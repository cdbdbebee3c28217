use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// A GF(2) polynomial in `h` variables, held as its set of monomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    h: usize,
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero(h: usize) -> Self {
        Polynomial { h, terms: BTreeSet::new() }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial { h: m.h(), terms: BTreeSet::from([m]) }
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(h: usize, terms: I) -> Result<Self> {
        let mut p = Polynomial::zero(h);
        for m in terms {
            p.toggle(m)?;
        }
        Ok(p)
    }

    /// Adds one monomial (mod 2).
    pub fn toggle(&mut self, m: Monomial) -> Result<()> {
        if m.h() != self.h {
            return Err(Error::VariableCount { expected: self.h, found: m.h() });
        }
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
        Ok(())
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Degree check used by operations that need homogeneous input; zero passes.
    pub(crate) fn check_degree(&self, n: u32) -> Result<()> {
        match self.terms.iter().find(|m| m.degree() != n) {
            Some(m) => Err(Error::Degree { expected: n, found: m.degree() }),
            None => Ok(()),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        if other.h != self.h {
            return Err(Error::VariableCount { expected: self.h, found: other.h });
        }
        let terms = self.terms.symmetric_difference(&other.terms).copied().collect();
        Ok(Polynomial { h: self.h, terms })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if other.h != self.h {
            return Err(Error::VariableCount { expected: self.h, found: other.h });
        }
        let mut out = Polynomial::zero(self.h);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b)?)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Parses "(1,2)+(0,3)". Requires at least one term, since "0" has no variable count.
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let monos = s.split('+').map(|t| t.parse::<Monomial>()).collect::<Result<Vec<_>>>()?;
        let h = monos[0].h();
        Polynomial::from_terms(h, monos)
    }
}

impl Polynomial {
    /// Parses text, accepting "0" as the zero polynomial in `h` variables.
    pub fn parse_with(h: usize, s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(Polynomial::zero(h));
        }
        let p: Polynomial = s.parse()?;
        if p.h != h {
            return Err(Error::VariableCount { expected: h, found: p.h });
        }
        Ok(p)
    }
}
