use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// ω(t): entry i counts the exponents whose bit i-1 is set.
///
/// Stored without trailing zeros; comparison is left-lex with missing
/// entries read as zero.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        WeightVector(entries)
    }

    pub fn of(exponents: &[u16]) -> Self {
        let mut w = Vec::new();
        let mut bit = 0;
        loop {
            let mut any = false;
            let mut count = 0;
            for &a in exponents {
                let a = a as u32;
                if a >> bit != 0 {
                    any = true;
                    count += ((a >> bit) & 1) as u32;
                }
            }
            if !any {
                break;
            }
            w.push(count);
            bit += 1;
        }
        WeightVector::new(w)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Σ 2^{i-1} ω_i.
    pub fn degree(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &w)| w << i).sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

impl Ord for WeightVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        (0..n).map(|i| self.get(i).cmp(&other.get(i))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for WeightVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω{self}")
    }
}

/// Accepts "2,3", "(2,3)" or "()".
impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        if t.trim().is_empty() {
            return Ok(WeightVector::default());
        }
        let v = t
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad weight entry {p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightVector::new(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(WeightVector::of(&[15, 15, 0, 0, 0]).entries(), &[2, 2, 2, 2]);
        assert_eq!(WeightVector::of(&[15, 7, 3, 1, 0, 0]).entries(), &[4, 3, 2, 1]);
        assert!(WeightVector::of(&[0, 0]).entries().is_empty());
        assert_eq!(WeightVector::of(&[15, 7, 3, 1]).degree(), 26);
    }

    #[test]
    fn padded_comparison() {
        let a: WeightVector = "2,3".parse().unwrap();
        let b: WeightVector = "(2,3,0)".parse().unwrap();
        assert_eq!(a, b);
        let c: WeightVector = "2,1,1".parse().unwrap();
        assert!(c < a);
        assert!(WeightVector::default() < c);
        assert_eq!(a.to_string(), "(2,3)");
        assert!("2,x".parse::<WeightVector>().is_err());
    }
}
