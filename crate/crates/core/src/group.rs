//! The S_h and GL_h actions on QP_n and their invariants.

use crate::error::{Error, Result};
use crate::gf2::{BitVector, SparseEchelon};
use crate::hit::HitSpace;
use crate::poly::{VariableMap, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Symmetric,
    General,
}

impl std::str::FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" | "sym" | "symmetric" => Ok(Group::Symmetric),
            "gl" | "general" => Ok(Group::General),
            other => Err(Error::Parse(format!("unknown group {other:?} (expected s or gl)"))),
        }
    }
}

/// θ_1..θ_{h-1} generate S_h; adding θ_h generates GL_h.
pub fn generators(group: Group, h: usize) -> Vec<VariableMap> {
    let last = match group {
        Group::Symmetric => h.saturating_sub(1),
        Group::General => h,
    };
    (1..=last).map(|j| VariableMap::theta(j, h).expect("index in range")).collect()
}

/// Matrix of a substitution acting on QP_n, column j being the image of the j-th admissible class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedEndo {
    pub dim: usize,
    pub columns: Vec<BitVector>,
}

pub fn induced_endo(map: &VariableMap, hs: &HitSpace) -> Result<InducedEndo> {
    let h = hs.h();
    if map.source_h() != h || map.target_h() != h {
        return Err(Error::VariableCount { expected: h, found: map.source_h().max(map.target_h()) });
    }
    let basis = hs.basis();
    hs.normal_forms();
    let mut columns = Vec::new();
    for c in hs.admissible_columns() {
        let image = map.apply_monomial(basis.monomial(c as usize))?;
        columns.push(hs.reduce_columns(&basis.columns(&image)?));
    }
    Ok(InducedEndo { dim: columns.len(), columns })
}

impl InducedEndo {
    pub fn identity(dim: usize) -> Self {
        InducedEndo { dim, columns: (0..dim).map(|i| BitVector::unit(dim, i)).collect() }
    }

    pub fn apply(&self, x: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.dim);
        for i in x.ones() {
            out.xor_unchecked(&self.columns[i]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &InducedEndo) -> InducedEndo {
        InducedEndo { dim: self.dim, columns: other.columns.iter().map(|c| self.apply(c)).collect() }
    }

    /// Rows of `self + I`, as column lists over the source coordinates.
    fn rows_plus_identity(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); self.dim];
        for (j, col) in self.columns.iter().enumerate() {
            for i in col.ones() {
                rows[i].push(j as u32);
            }
        }
        for (i, r) in rows.iter_mut().enumerate() {
            r.push(i as u32);
        }
        rows
    }
}

/// Common fixed vectors of the given endomorphisms: ∩ ker(A + I).
pub fn fixed_space(endos: &[InducedEndo], dim: usize) -> Vec<BitVector> {
    let mut e = SparseEchelon::new(dim);
    for a in endos {
        for row in a.rows_plus_identity() {
            e.insert(&row);
        }
    }
    e.null_space()
}

/// Basis of [QP_n]^G as coordinate vectors over the admissible basis.
pub fn invariants(hs: &HitSpace, group: Group) -> Result<Vec<BitVector>> {
    let endos = generators(group, hs.h())
        .iter()
        .map(|m| induced_endo(m, hs))
        .collect::<Result<Vec<_>>>()?;
    Ok(fixed_space(&endos, hs.dim_cohit()))
}

/// The action on QP_n(ω): substitute, reduce, keep the coordinates of weight ω.
pub fn weight_endo(map: &VariableMap, hs: &HitSpace, w: &WeightVector) -> Result<InducedEndo> {
    let cb = hs.cohit_basis();
    let layer = cb.weight_component(w).members;
    let full = induced_endo_on(map, hs, &layer)?;
    let mut columns = Vec::with_capacity(layer.len());
    for col in full {
        for i in col.ones() {
            if cb.admissibles[i].weight() > *w {
                return Err(Error::Invariant(format!(
                    "substitution raised weight {w} to {}",
                    cb.admissibles[i].weight()
                )));
            }
        }
        columns.push(BitVector::from_ones(layer.len(), layer.iter().enumerate().filter(|(_, &i)| col.get(i)).map(|(k, _)| k)));
    }
    Ok(InducedEndo { dim: layer.len(), columns })
}

fn induced_endo_on(map: &VariableMap, hs: &HitSpace, members: &[usize]) -> Result<Vec<BitVector>> {
    let basis = hs.basis();
    let adm = hs.admissible_columns();
    hs.normal_forms();
    members
        .iter()
        .map(|&i| {
            let image = map.apply_monomial(basis.monomial(adm[i] as usize))?;
            Ok(hs.reduce_columns(&basis.columns(&image)?))
        })
        .collect()
}

/// Basis of [QP_n(ω)]^G, as coordinate vectors over the admissibles of weight ω.
pub fn invariants_weight(hs: &HitSpace, w: &WeightVector, group: Group) -> Result<Vec<BitVector>> {
    if w.degree() != hs.n() {
        return Err(Error::Degree { expected: hs.n(), found: w.degree() });
    }
    let endos = generators(group, hs.h())
        .iter()
        .map(|m| weight_endo(m, hs, w))
        .collect::<Result<Vec<_>>>()?;
    let dim = hs.cohit_basis().weight_component(w).dim;
    Ok(fixed_space(&endos, dim))
}
