//! Kameko's squaring map QP_n → QP_{(n-h)/2} and its kernel.

use crate::error::{Error, Result};
use crate::gf2::{BitVector, SparseEchelon};
use crate::hit::{HitSpace, Limits};
use crate::poly::{Monomial, MAX_VARS};

fn check_parity(h: usize, n: u32) -> Result<u32> {
    if (n as usize) < h || (n as usize - h) % 2 != 0 {
        return Err(Error::Parity { h, n });
    }
    Ok((n - h as u32) / 2)
}

/// Π t_j^{a_j} ↦ Π t_j^{(a_j - 1)/2} when every a_j is odd, otherwise zero.
pub fn kameko_down(t: &Monomial) -> Result<Option<Monomial>> {
    check_parity(t.h(), t.degree())?;
    if t.exponents().iter().any(|&a| a % 2 == 0) {
        return Ok(None);
    }
    let mut e = [0u16; MAX_VARS];
    for (slot, &a) in e.iter_mut().zip(t.exponents()) {
        *slot = (a - 1) / 2;
    }
    Ok(Some(Monomial::from_raw(t.h(), e)))
}

/// t ↦ t_1 ⋯ t_h t^2.
pub fn kameko_up(t: &Monomial) -> Monomial {
    let mut e = [0u16; MAX_VARS];
    for (slot, &a) in e.iter_mut().zip(t.exponents()) {
        *slot = 2 * a + 1;
    }
    Monomial::from_raw(t.h(), e)
}

/// A linear map between cohit spaces, stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohitMap {
    pub source_n: u32,
    pub target_n: u32,
    pub target_dim: usize,
    pub columns: Vec<BitVector>,
}

impl CohitMap {
    pub fn source_dim(&self) -> usize {
        self.columns.len()
    }

    fn echelon(&self) -> SparseEchelon {
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); self.target_dim];
        for (j, col) in self.columns.iter().enumerate() {
            for i in col.ones() {
                rows[i].push(j as u32);
            }
        }
        let mut e = SparseEchelon::new(self.source_dim());
        for r in &rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn kernel(&self) -> Vec<BitVector> {
        self.echelon().null_space()
    }

    pub fn apply(&self, x: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.target_dim);
        for i in x.ones() {
            out.xor_unchecked(&self.columns[i]);
        }
        out
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &CohitMap) -> Result<CohitMap> {
        if inner.target_n != self.source_n || inner.target_dim != self.source_dim() {
            return Err(Error::Dimension { expected: self.source_dim(), found: inner.target_dim });
        }
        Ok(CohitMap {
            source_n: inner.source_n,
            target_n: self.target_n,
            target_dim: self.target_dim,
            columns: inner.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn identity(n: u32, dim: usize) -> CohitMap {
        CohitMap { source_n: n, target_n: n, target_dim: dim, columns: (0..dim).map(|i| BitVector::unit(dim, i)).collect() }
    }
}

/// Matrix of the Kameko map between two computed hit spaces.
pub fn kameko_matrix(src: &HitSpace, dst: &HitSpace) -> Result<CohitMap> {
    let h = src.h();
    let target_n = check_parity(h, src.n())?;
    if dst.h() != h || dst.n() != target_n {
        return Err(Error::Degree { expected: target_n, found: dst.n() });
    }
    dst.normal_forms();
    let mut columns = Vec::new();
    for c in src.admissible_columns() {
        let col = match kameko_down(src.basis().monomial(c as usize))? {
            Some(m) => dst.reduce_columns(&[dst.basis().index_of(&m).expect("degree checked") as u32]),
            None => BitVector::zeros(dst.dim_cohit()),
        };
        columns.push(col);
    }
    Ok(CohitMap { source_n: src.n(), target_n, target_dim: dst.dim_cohit(), columns })
}

#[derive(Clone, Debug)]
pub struct KamekoPair {
    pub h: usize,
    pub n: u32,
    pub down: CohitMap,
    pub kernel: Vec<BitVector>,
}

impl KamekoPair {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }
}

pub fn kameko_pair(src: &HitSpace, dst: &HitSpace) -> Result<KamekoPair> {
    let down = kameko_matrix(src, dst)?;
    let kernel = down.kernel();
    Ok(KamekoPair { h: src.h(), n: src.n(), down, kernel })
}

pub fn kameko_kernel(h: usize, n: u32, limits: &Limits) -> Result<KamekoPair> {
    let m = check_parity(h, n)?;
    let src = HitSpace::compute(h, n, limits)?;
    let dst = HitSpace::compute(h, m, limits)?;
    kameko_pair(&src, &dst)
}

/// The Kameko map applied `times` times, starting in degree n.
pub fn kameko_iterate(h: usize, n: u32, times: u32, limits: &Limits) -> Result<CohitMap> {
    let mut hs = HitSpace::compute(h, n, limits)?;
    let mut acc = CohitMap::identity(n, hs.dim_cohit());
    for _ in 0..times {
        let m = check_parity(h, hs.n())?;
        let next = HitSpace::compute(h, m, limits)?;
        acc = kameko_matrix(&hs, &next)?.after(&acc)?;
        hs = next;
    }
    Ok(acc)
}
