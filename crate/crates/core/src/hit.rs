//! Hit subspaces Ā·P_n and admissible bases of QP_n.

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitVector, NormalForms, SparseEchelon};
use crate::poly::{for_each_sq_term, monomial_count, monomials, Monomial, Polynomial, WeightVector};

/// Default ceiling on the number of monomials in one computation.
pub const DEFAULT_MAX_COLUMNS: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_columns: usize,
    pub force: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_columns: DEFAULT_MAX_COLUMNS, force: false }
    }
}

impl Limits {
    pub fn forced() -> Self {
        Limits { force: true, ..Limits::default() }
    }

    pub fn check(&self, columns: usize) -> Result<()> {
        if columns > self.max_columns && !self.force {
            return Err(Error::Capacity { columns, limit: self.max_columns });
        }
        Ok(())
    }
}

/// The degree-n monomials in h variables, sorted by (weight, exponents).
#[derive(Debug)]
pub struct MonomialBasis {
    h: usize,
    n: u32,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    layers: Vec<(WeightVector, Range<usize>)>,
}

impl MonomialBasis {
    pub fn new(h: usize, n: u32) -> Self {
        let mut keyed: Vec<(WeightVector, Monomial)> = monomials(h, n).into_iter().map(|m| (m.weight(), m)).collect();
        keyed.sort();
        let mut layers: Vec<(WeightVector, Range<usize>)> = Vec::new();
        for (i, (w, _)) in keyed.iter().enumerate() {
            match layers.last_mut() {
                Some((lw, r)) if lw == w => r.end = i + 1,
                _ => layers.push((w.clone(), i..i + 1)),
            }
        }
        let monos: Vec<Monomial> = keyed.into_iter().map(|(_, m)| m).collect();
        let index = monos.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
        MonomialBasis { h, n, monos, index, layers }
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monos[i]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    /// Weight layers in increasing order, with their column ranges.
    pub fn layers(&self) -> &[(WeightVector, Range<usize>)] {
        &self.layers
    }

    pub fn layer(&self, w: &WeightVector) -> Option<Range<usize>> {
        self.layers.iter().find(|(lw, _)| lw == w).map(|(_, r)| r.clone())
    }

    /// Column indices of a polynomial of this degree.
    pub fn columns(&self, f: &Polynomial) -> Result<Vec<u32>> {
        if f.h() != self.h {
            return Err(Error::VariableCount { expected: self.h, found: f.h() });
        }
        f.check_degree(self.n)?;
        Ok(f.terms().map(|m| self.index[m]).collect())
    }
}

/// Echelon of Ā·P_n with pivots at the largest monomial of each relation.
#[derive(Debug)]
pub struct HitSpace {
    basis: Arc<MonomialBasis>,
    echelon: SparseEchelon,
    forms: OnceLock<NormalForms>,
}

impl HitSpace {
    /// Spans Ā·P_n by the images Sq^{2^k}(m), m of degree n - 2^k.
    pub fn compute(h: usize, n: u32, limits: &Limits) -> Result<HitSpace> {
        limits.check(monomial_count(h, n))?;
        let basis = Arc::new(MonomialBasis::new(h, n));
        let mut echelon = SparseEchelon::new(basis.len());
        let mut row = Vec::new();
        let mut k = 1u32;
        // Sq^k vanishes on degrees below k, so only 2k <= n contributes.
        while 2 * k <= n {
            for m in monomials(h, n - k) {
                row.clear();
                for_each_sq_term(k, &m, |t| row.push(basis.index[&t]));
                echelon.insert(&row);
            }
            k *= 2;
        }
        Ok(HitSpace { basis, echelon, forms: OnceLock::new() })
    }

    pub fn h(&self) -> usize {
        self.basis.h
    }

    pub fn n(&self) -> u32 {
        self.basis.n
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn echelon(&self) -> &SparseEchelon {
        &self.echelon
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn dim_cohit(&self) -> usize {
        self.basis.len() - self.echelon.rank()
    }

    /// Admissible monomials as column indices, increasing.
    pub fn admissible_columns(&self) -> Vec<u32> {
        self.echelon.free_columns()
    }

    pub fn is_hit(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.echelon.contains(&self.basis.columns(f)?))
    }

    /// Normal forms of every monomial over the admissibles (built on first use).
    pub fn normal_forms(&self) -> &NormalForms {
        self.forms.get_or_init(|| self.echelon.normal_forms())
    }

    /// Coordinates of [f] over the admissible basis.
    pub fn reduce_to_cohit(&self, f: &Polynomial) -> Result<BitVector> {
        Ok(self.reduce_columns(&self.basis.columns(f)?))
    }

    pub fn reduce_columns(&self, cols: &[u32]) -> BitVector {
        match self.forms.get() {
            Some(nf) => nf.reduce(cols),
            None => {
                let free = self.echelon.reduce(cols);
                let admissible = self.admissible_columns();
                BitVector::from_ones(
                    admissible.len(),
                    free.iter().map(|c| admissible.binary_search(c).expect("reduced onto a free column")),
                )
            }
        }
    }

    pub fn cohit_basis(&self) -> CohitBasis {
        let cols = self.admissible_columns();
        let admissibles: Vec<Monomial> = cols.iter().map(|&c| self.basis.monos[c as usize]).collect();
        CohitBasis::from_admissibles(self.h(), self.n(), admissibles)
    }

    pub fn weight_component(&self, w: &WeightVector) -> Result<WeightComponent> {
        if w.degree() != self.n() {
            return Err(Error::Degree { expected: self.n(), found: w.degree() });
        }
        Ok(self.cohit_basis().weight_component(w))
    }
}

/// The admissible monomials of degree n, indexed by weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CohitRecord", try_from = "CohitRecord")]
pub struct CohitBasis {
    pub h: usize,
    pub n: u32,
    pub admissibles: Vec<Monomial>,
    pub by_weight: BTreeMap<WeightVector, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightComponent {
    pub weight: WeightVector,
    pub dim: usize,
    pub dim_zero: usize,
    pub dim_positive: usize,
    /// Indices into the admissible list.
    pub members: Vec<usize>,
    pub zero: Vec<usize>,
    pub positive: Vec<usize>,
}

impl CohitBasis {
    pub fn from_admissibles(h: usize, n: u32, admissibles: Vec<Monomial>) -> Self {
        let mut by_weight: BTreeMap<WeightVector, Vec<usize>> = BTreeMap::new();
        for (i, m) in admissibles.iter().enumerate() {
            by_weight.entry(m.weight()).or_default().push(i);
        }
        CohitBasis { h, n, admissibles, by_weight }
    }

    pub fn dim(&self) -> usize {
        self.admissibles.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.admissibles.binary_search_by(|a| a.order_key_cmp(m)).ok()
    }

    /// Splits QP_n(ω) into classes with some zero exponent and classes with all exponents positive.
    pub fn weight_component(&self, w: &WeightVector) -> WeightComponent {
        let members = self.by_weight.get(w).cloned().unwrap_or_default();
        let (positive, zero): (Vec<usize>, Vec<usize>) =
            members.iter().partition(|&&i| self.admissibles[i].all_positive());
        WeightComponent {
            weight: w.clone(),
            dim: members.len(),
            dim_zero: zero.len(),
            dim_positive: positive.len(),
            members,
            zero,
            positive,
        }
    }

    /// dim (QP_n)^{>0}: classes of admissibles with every exponent positive.
    pub fn dim_positive(&self) -> usize {
        self.admissibles.iter().filter(|m| m.all_positive()).count()
    }
}

#[derive(Serialize, Deserialize)]
struct CohitRecord {
    h: usize,
    n: u32,
    dim: usize,
    admissibles: Vec<Monomial>,
    by_weight: BTreeMap<String, Vec<usize>>,
}

impl From<CohitBasis> for CohitRecord {
    fn from(c: CohitBasis) -> Self {
        let mut keyed: Vec<(WeightVector, Vec<usize>)> = c.by_weight.into_iter().collect();
        keyed.sort();
        CohitRecord {
            h: c.h,
            n: c.n,
            dim: c.admissibles.len(),
            admissibles: c.admissibles,
            by_weight: keyed.into_iter().map(|(w, v)| (w.to_string(), v)).collect(),
        }
    }
}

impl TryFrom<CohitRecord> for CohitBasis {
    type Error = Error;

    fn try_from(r: CohitRecord) -> Result<Self> {
        if r.dim != r.admissibles.len() {
            return Err(Error::Parse(format!("dim {} but {} admissibles", r.dim, r.admissibles.len())));
        }
        if r.admissibles.iter().any(|m| m.h() != r.h || m.degree() != r.n) {
            return Err(Error::Parse("admissible monomial of the wrong shape".into()));
        }
        let basis = CohitBasis::from_admissibles(r.h, r.n, r.admissibles);
        let mut stored = BTreeMap::new();
        for (k, v) in r.by_weight {
            stored.insert(k.parse::<WeightVector>()?, v);
        }
        if stored != basis.by_weight {
            return Err(Error::Parse("weight index does not match the admissible list".into()));
        }
        Ok(basis)
    }
}

/// Convenience: the hit space and its admissible basis.
pub fn cohit_basis(h: usize, n: u32, limits: &Limits) -> Result<CohitBasis> {
    Ok(HitSpace::compute(h, n, limits)?.cohit_basis())
}
