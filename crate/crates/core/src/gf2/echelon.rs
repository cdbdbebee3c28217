use std::collections::BTreeSet;

use super::bitvec::BitVector;
use crate::error::{Error, Result};

/// Which column of a freshly reduced vector becomes its pivot.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum ColumnPriority {
    #[default]
    HighestIndex,
    LowestIndex,
    /// `rank[c]` is the priority of column `c`; the largest rank wins.
    Ranked(Vec<u32>),
}

impl ColumnPriority {
    fn choose(&self, v: &BitVector) -> Option<usize> {
        match self {
            ColumnPriority::HighestIndex => v.highest_one(),
            ColumnPriority::LowestIndex => v.lowest_one(),
            ColumnPriority::Ranked(rank) => v.ones().max_by_key(|&c| rank[c]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub reduced: BitVector,
    pub absorbed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub normal_form: BitVector,
    /// Pivot columns of the rows that were added to reach the normal form.
    pub coordinates: BTreeSet<usize>,
}

/// A subspace of GF(2)^n held in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    row_of: Vec<u32>,
    priority: ColumnPriority,
}

const NONE: u32 = u32::MAX;

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Self::with_priority(ambient, ColumnPriority::default())
    }

    pub fn with_priority(ambient: usize, priority: ColumnPriority) -> Self {
        if let ColumnPriority::Ranked(r) = &priority {
            assert_eq!(r.len(), ambient, "priority table must cover every column");
        }
        Echelon { ambient, rows: Vec::new(), pivots: Vec::new(), row_of: vec![NONE; ambient], priority }
    }

    pub fn ambient_len(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    /// Pivot column of each row, in row order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.row_of[c] != NONE
    }

    fn eliminate(&self, v: &mut BitVector, coords: Option<&mut BTreeSet<usize>>) {
        let mut coords = coords;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_unchecked(row);
                if let Some(c) = coords.as_deref_mut() {
                    c.insert(p);
                }
            }
        }
    }

    pub fn insert(&mut self, v: &BitVector) -> Result<Insertion> {
        if v.len() != self.ambient {
            return Err(Error::Dimension { expected: self.ambient, found: v.len() });
        }
        let mut reduced = v.clone();
        self.eliminate(&mut reduced, None);
        let Some(p) = self.priority.choose(&reduced) else {
            return Ok(Insertion { reduced, absorbed: true });
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_unchecked(&reduced);
            }
        }
        self.row_of[p] = self.rows.len() as u32;
        self.rows.push(reduced.clone());
        self.pivots.push(p);
        Ok(Insertion { reduced, absorbed: false })
    }

    pub fn reduce(&self, v: &BitVector) -> Result<Reduction> {
        if v.len() != self.ambient {
            return Err(Error::Dimension { expected: self.ambient, found: v.len() });
        }
        let mut normal_form = v.clone();
        let mut coordinates = BTreeSet::new();
        self.eliminate(&mut normal_form, Some(&mut coordinates));
        Ok(Reduction { normal_form, coordinates })
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        Ok(self.reduce(v)?.normal_form.is_zero())
    }

    /// Basis of the solutions of `row · x = 0` for every row of the echelon.
    pub fn null_space(&self) -> Vec<BitVector> {
        let mut out = Vec::new();
        for f in (0..self.ambient).filter(|&c| !self.is_pivot(c)) {
            let mut x = BitVector::unit(self.ambient, f);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if row.get(f) {
                    x.set(p, true);
                }
            }
            out.push(x);
        }
        out
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank(rows: &[BitVector], n_cols: usize) -> Result<usize> {
    let mut e = Echelon::new(n_cols);
    for r in rows {
        e.insert(r)?;
    }
    Ok(e.rank())
}

/// Basis of `{x : M x = 0}` where `M` has the given rows.
pub fn kernel_basis(rows: &[BitVector], n_cols: usize) -> Result<Vec<BitVector>> {
    let mut e = Echelon::new(n_cols);
    for r in rows {
        e.insert(r)?;
    }
    Ok(e.null_space())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn zero_vector_is_absorbed() {
        let mut e = Echelon::new(4);
        let ins = e.insert(&BitVector::zeros(4)).unwrap();
        assert!(ins.absorbed);
        assert!(ins.reduced.is_zero());
        assert_eq!(e.rank(), 0);
    }

    #[test]
    fn repeated_vector_is_absorbed() {
        let mut e = Echelon::new(5);
        assert!(!e.insert(&BitVector::unit(5, 3)).unwrap().absorbed);
        assert!(e.insert(&BitVector::unit(5, 3)).unwrap().absorbed);
    }

    #[test]
    fn third_row_is_sum_of_first_two() {
        let mut e = Echelon::new(4);
        for s in ["1100", "0110", "1010"] {
            e.insert(&bv(s)).unwrap();
        }
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn rows_stay_reduced() {
        let mut e = Echelon::new(4);
        for s in ["1100", "0110", "0011"] {
            e.insert(&bv(s)).unwrap();
        }
        for (i, row) in e.rows().iter().enumerate() {
            for (j, &p) in e.pivots().iter().enumerate() {
                assert_eq!(row.get(p), i == j);
            }
        }
    }

    #[test]
    fn length_mismatch() {
        let mut e = Echelon::new(3);
        assert!(matches!(e.insert(&BitVector::zeros(2)), Err(Error::Dimension { .. })));
        assert!(e.reduce(&BitVector::zeros(4)).is_err());
        assert!(kernel_basis(&[BitVector::zeros(2)], 3).is_err());
    }

    #[test]
    fn reduce_examples() {
        let mut e = Echelon::new(4);
        e.insert(&bv("1100")).unwrap();
        e.insert(&bv("0110")).unwrap();
        let r = e.reduce(&BitVector::zeros(4)).unwrap();
        assert!(r.normal_form.is_zero() && r.coordinates.is_empty());

        // 1010 = 1100 + 0110; in reduced form that is a single stored row.
        let v = bv("1010");
        let r = e.reduce(&v).unwrap();
        assert!(r.normal_form.is_zero());
        let mut back = r.normal_form.clone();
        for (row, p) in e.rows().iter().zip(e.pivots()) {
            if r.coordinates.contains(p) {
                back.xor_assign(row).unwrap();
            }
        }
        assert_eq!(back, v);

        for (row, &p) in e.rows().to_vec().iter().zip(e.pivots()) {
            let r = e.reduce(row).unwrap();
            assert!(r.normal_form.is_zero());
            assert_eq!(r.coordinates, BTreeSet::from([p]));
        }
    }

    #[test]
    fn pivot_priority_is_respected() {
        let mut hi = Echelon::new(4);
        hi.insert(&bv("0110")).unwrap();
        assert_eq!(hi.pivots(), &[2]);
        let mut lo = Echelon::with_priority(4, ColumnPriority::LowestIndex);
        lo.insert(&bv("0110")).unwrap();
        assert_eq!(lo.pivots(), &[1]);
        let mut ranked = Echelon::with_priority(4, ColumnPriority::Ranked(vec![0, 5, 1, 2]));
        ranked.insert(&bv("0111")).unwrap();
        assert_eq!(ranked.pivots(), &[1]);
    }

    #[test]
    fn kernel_examples() {
        let id: Vec<_> = ["100", "010", "001"].iter().map(|s| bv(s)).collect();
        assert!(kernel_basis(&id, 3).unwrap().is_empty());

        let zero = vec![BitVector::zeros(4), BitVector::zeros(4)];
        assert_eq!(kernel_basis(&zero, 4).unwrap().len(), 4);

        let m = vec![bv("110"), bv("011")];
        assert_eq!(kernel_basis(&m, 3).unwrap(), vec![bv("111")]);
    }
}
