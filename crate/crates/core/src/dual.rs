//! The divided-power dual [P_n]^*, Ā-annihilated classes, GL_h-coinvariants and ψ_h.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{BitVector, Echelon, SparseEchelon};
use crate::group::{invariants, Group};
use crate::hit::{HitSpace, Limits, MonomialBasis};
use crate::lambda::{ext_group, Classification, LambdaAlgebra, LambdaElement, LambdaWord};
use crate::poly::{monomial_count, monomials, parse_tuple, Monomial, Polynomial, MAX_VARS};

/// x_1^{(a_1)} ⋯ x_h^{(a_h)}, dual to t_1^{a_1} ⋯ t_h^{a_h}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualMonomial(Monomial);

impl DualMonomial {
    pub fn new(exponents: &[u32]) -> Result<Self> {
        Ok(DualMonomial(Monomial::new(exponents)?))
    }

    /// The dual of a monomial with the same exponents.
    pub fn dual_of(m: Monomial) -> Self {
        DualMonomial(m)
    }

    pub fn monomial(&self) -> &Monomial {
        &self.0
    }

    pub fn h(&self) -> usize {
        self.0.h()
    }

    pub fn exponents(&self) -> &[u16] {
        self.0.exponents()
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }
}

impl fmt::Display for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

impl fmt::Debug for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for DualMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s.strip_prefix('d').ok_or_else(|| Error::Parse(format!("dual monomial must start with 'd': {s:?}")))?;
        DualMonomial::new(&parse_tuple(rest)?)
    }
}

/// A homogeneous element of [P_n]^*; repeated terms cancel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualElement {
    h: usize,
    n: u32,
    terms: BTreeSet<DualMonomial>,
}

impl DualElement {
    pub fn zero(h: usize, n: u32) -> Self {
        DualElement { h, n, terms: BTreeSet::new() }
    }

    pub fn from_monomial(m: DualMonomial) -> Self {
        DualElement { h: m.h(), n: m.degree(), terms: BTreeSet::from([m]) }
    }

    pub fn from_terms<I: IntoIterator<Item = DualMonomial>>(h: usize, n: u32, terms: I) -> Result<Self> {
        let mut e = DualElement::zero(h, n);
        for m in terms {
            e.toggle(m)?;
        }
        Ok(e)
    }

    pub fn toggle(&mut self, m: DualMonomial) -> Result<()> {
        if m.h() != self.h {
            return Err(Error::VariableCount { expected: self.h, found: m.h() });
        }
        if m.degree() != self.n {
            return Err(Error::Degree { expected: self.n, found: m.degree() });
        }
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
        Ok(())
    }

    pub fn add(&self, other: &DualElement) -> Result<DualElement> {
        let mut out = self.clone();
        for &m in &other.terms {
            out.toggle(m)?;
        }
        Ok(out)
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn degree(&self) -> u32 {
        self.n
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

    pub fn terms(&self) -> impl Iterator<Item = &DualMonomial> + '_ {
        self.terms.iter()
    }

    pub fn contains(&self, m: &DualMonomial) -> bool {
        self.terms.contains(m)
    }

    /// Parses "d(1,2)+d(0,3)", or "0".
    pub fn parse_with(h: usize, n: u32, s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(DualElement::zero(h, n));
        }
        let terms = s.split('+').map(str::parse).collect::<Result<Vec<DualMonomial>>>()?;
        DualElement::from_terms(h, n, terms)
    }
}

impl fmt::Display for DualElement {
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

impl fmt::Debug for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct DualRecord {
    h: usize,
    n: u32,
    terms: Vec<Vec<u32>>,
}

impl Serialize for DualElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|m| m.exponents().iter().map(|&a| a as u32).collect()).collect();
        DualRecord { h: self.h, n: self.n, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DualElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DualRecord::deserialize(d)?;
        let terms = r
            .terms
            .iter()
            .map(|t| DualMonomial::new(t))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        DualElement::from_terms(r.h, r.n, terms).map_err(serde::de::Error::custom)
    }
}

/// Calls `f` on each term of (x^{(a)})Sq^k, using
/// (x_1^{(a_1)} ⋯ x_h^{(a_h)})Sq^k = Σ_{Σk_j = k} Π binom(a_j - k_j, k_j) x_j^{(a_j - k_j)}.
/// Distinct splittings give distinct terms.
pub fn for_each_dual_sq_term(k: u32, a: &DualMonomial, mut f: impl FnMut(DualMonomial)) {
    let h = a.h();
    let e: Vec<u32> = a.exponents().iter().map(|&x| x as u32).collect();
    // binom(a - k, k) is odd iff k ⊆ a - k, which forces 2k ≤ a.
    let mut room = vec![0u32; h + 1];
    for j in (0..h).rev() {
        room[j] = room[j + 1] + e[j] / 2;
    }
    if room[0] < k {
        return;
    }
    let mut out = [0u16; MAX_VARS];
    fn go(j: usize, left: u32, e: &[u32], room: &[u32], out: &mut [u16; MAX_VARS], f: &mut dyn FnMut(DualMonomial)) {
        if j == e.len() {
            if left == 0 {
                f(DualMonomial(Monomial::from_raw(e.len(), *out)));
            }
            return;
        }
        let lo = left.saturating_sub(room[j + 1]);
        let hi = left.min(e[j] / 2);
        for kj in lo..=hi {
            let rest = e[j] - kj;
            if kj & rest == kj {
                out[j] = rest as u16;
                go(j + 1, left - kj, e, room, out, f);
            }
        }
    }
    go(0, k, &e, &room, &mut out, &mut f);
}

/// The right action ξ ↦ (ξ)Sq^k.
pub fn dual_sq(k: u32, xi: &DualElement) -> DualElement {
    let mut out = DualElement::zero(xi.h, xi.n.saturating_sub(k));
    if k > xi.n {
        return out;
    }
    for a in &xi.terms {
        for_each_dual_sq_term(k, a, |b| {
            if !out.terms.remove(&b) {
                out.terms.insert(b);
            }
        });
    }
    out
}

/// Squares that must vanish on an annihilated class of degree n: Sq^{2^i} with 2^{i+1} ≤ n.
/// Larger squares vanish anyway, since each factor contributes 2k_j ≤ a_j.
pub fn check_squares(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut k = 1u32;
    while 2 * k <= n {
        out.push(k);
        k *= 2;
    }
    out
}

/// Ok when ξ is killed by every positive square, otherwise the first square that survives.
pub fn check_annihilated(xi: &DualElement) -> Result<()> {
    for k in check_squares(xi.n) {
        if !dual_sq(k, xi).is_zero() {
            return Err(Error::NotAnnihilated(k));
        }
    }
    Ok(())
}

pub fn is_annihilated(xi: &DualElement) -> bool {
    check_annihilated(xi).is_ok()
}

/// ⟨f, ξ⟩: the number of shared exponent tuples, mod 2.
pub fn pairing(f: &Polynomial, xi: &DualElement) -> Result<bool> {
    if f.h() != xi.h {
        return Err(Error::VariableCount { expected: xi.h, found: f.h() });
    }
    if let Some(d) = f.degree() {
        if d != xi.n {
            return Err(Error::Degree { expected: xi.n, found: d });
        }
    }
    Ok(xi.terms.iter().filter(|m| f.contains(m.monomial())).count() % 2 == 1)
}

/// Ann_Ā[P_n]^*, solved directly from the right-action constraints.
///
/// Columns are the degree-n monomials in the same (weight, exponent) order as
/// the hit computation, so the free columns here index the kernel basis.
#[derive(Debug)]
pub struct AnnihilatedSpace {
    basis: MonomialBasis,
    constraints: SparseEchelon,
}

impl AnnihilatedSpace {
    pub fn compute(h: usize, n: u32, limits: &Limits) -> Result<Self> {
        limits.check(monomial_count(h, n))?;
        let basis = MonomialBasis::new(h, n);
        let mut constraints = SparseEchelon::new(basis.len());
        for k in check_squares(n) {
            // One constraint per target x^{(b)}: the coefficient of x^{(b)} in (ξ)Sq^k.
            let targets = monomials(h, n - k);
            let index: HashMap<Monomial, usize> = targets.iter().enumerate().map(|(i, m)| (*m, i)).collect();
            let mut rows: Vec<Vec<u32>> = vec![Vec::new(); targets.len()];
            for (c, a) in basis.monomials().iter().enumerate() {
                for_each_dual_sq_term(k, &DualMonomial(*a), |b| rows[index[b.monomial()]].push(c as u32));
            }
            for r in &rows {
                constraints.insert(r);
            }
        }
        Ok(AnnihilatedSpace { basis, constraints })
    }

    pub fn h(&self) -> usize {
        self.basis.h()
    }

    pub fn n(&self) -> u32 {
        self.basis.n()
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len() - self.constraints.rank()
    }

    /// Columns where the kernel basis has its distinguished coordinate.
    pub fn free_columns(&self) -> Vec<u32> {
        self.constraints.free_columns()
    }

    /// Kernel basis ξ_c, one per free column c: ξ_c restricted to the free columns is e_c.
    pub fn vectors(&self) -> Vec<BitVector> {
        self.constraints.null_space()
    }

    pub fn element(&self, v: &BitVector) -> DualElement {
        DualElement {
            h: self.h(),
            n: self.n(),
            terms: v.ones().map(|c| DualMonomial(*self.basis.monomial(c))).collect(),
        }
    }

    pub fn elements(&self) -> Vec<DualElement> {
        self.vectors().iter().map(|v| self.element(v)).collect()
    }

    /// Coordinates of an annihilated element against the kernel basis.
    pub fn coordinates(&self, xi: &DualElement) -> Result<BitVector> {
        check_annihilated(xi)?;
        let free = self.free_columns();
        let mut out = BitVector::zeros(free.len());
        for m in &xi.terms {
            let c = self.basis.index_of(m.monomial()).ok_or(Error::Degree { expected: self.n(), found: m.degree() })?;
            if let Ok(i) = free.binary_search(&(c as u32)) {
                out.flip(i);
            }
        }
        Ok(out)
    }
}

pub fn annihilated_basis(h: usize, n: u32, limits: &Limits) -> Result<Vec<DualElement>> {
    Ok(AnnihilatedSpace::compute(h, n, limits)?.elements())
}

/// Calls `f` on each term of θ_j^*(x^{(a)}), θ_j^* the transpose of the substitution θ_j.
pub fn for_each_theta_dual_term(j: usize, a: &DualMonomial, mut f: impl FnMut(DualMonomial)) {
    let h = a.h();
    assert!(j >= 1 && j <= h, "theta index {j} out of range for h = {h}");
    let mut e = *a.monomial().raw();
    if j < h {
        e.swap(j - 1, j);
        f(DualMonomial(Monomial::from_raw(h, e)));
        return;
    }
    if h == 1 {
        f(*a);
        return;
    }
    // t_1 ↦ t_1 + t_2: t^a occurs in θ(t^b) iff a_1 ⊆ b_1 and b_1 + b_2 = a_1 + a_2.
    let (a1, a2) = (e[0] as u32, e[1] as u32);
    let free = !a1 & (a1 + a2).next_power_of_two().wrapping_mul(2).wrapping_sub(1);
    let mut sub = free;
    loop {
        let b1 = a1 | sub;
        if b1 <= a1 + a2 {
            e[0] = b1 as u16;
            e[1] = (a1 + a2 - b1) as u16;
            f(DualMonomial(Monomial::from_raw(h, e)));
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
}

pub fn theta_dual(j: usize, xi: &DualElement) -> DualElement {
    let mut out = DualElement::zero(xi.h, xi.n);
    for a in &xi.terms {
        for_each_theta_dual_term(j, a, |b| {
            if !out.terms.remove(&b) {
                out.terms.insert(b);
            }
        });
    }
    out
}

/// Z/2 ⊗_{GL_h} Ann, computed on the dual side.
#[derive(Debug)]
pub struct CoinvariantSpace {
    pub ann: AnnihilatedSpace,
    vectors: Vec<BitVector>,
    relations: SparseEchelon,
}

impl CoinvariantSpace {
    pub fn compute(h: usize, n: u32, limits: &Limits) -> Result<Self> {
        if h == 0 {
            return Err(Error::VariableCount { expected: 1, found: 0 });
        }
        let ann = AnnihilatedSpace::compute(h, n, limits)?;
        let free = ann.free_columns();
        let d = free.len();
        let mut slot = vec![u32::MAX; ann.basis.len()];
        for (i, &c) in free.iter().enumerate() {
            slot[c as usize] = i as u32;
        }
        let vectors = ann.vectors();
        let mut relations = SparseEchelon::new(d);
        for j in 1..=h {
            for (f, xi) in vectors.iter().enumerate() {
                // Coordinates of (θ_j^* + 1)ξ_f: read θ_j^*ξ_f at the free columns.
                let mut acc = BitVector::zeros(d);
                acc.flip(f);
                for c in xi.ones() {
                    for_each_theta_dual_term(j, &DualMonomial(*ann.basis.monomial(c)), |b| {
                        let i = slot[ann.basis.index_of(b.monomial()).expect("same degree")];
                        if i != u32::MAX {
                            acc.flip(i as usize);
                        }
                    });
                }
                let row: Vec<u32> = acc.ones().map(|i| i as u32).collect();
                relations.insert(&row);
            }
        }
        Ok(CoinvariantSpace { ann, vectors, relations })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len() - self.relations.rank()
    }

    /// Annihilated elements pairing as a dual basis against the given invariants,
    /// which are coordinate vectors over the admissible basis of QP_n.
    pub fn representatives(&self, invariants: &[BitVector]) -> Result<Vec<DualElement>> {
        let d = self.vectors.len();
        let mut e = Echelon::new(d);
        for v in invariants {
            if v.len() != d {
                return Err(Error::Dimension { expected: d, found: v.len() });
            }
            e.insert(v)?;
        }
        if e.rank() != invariants.len() {
            return Err(Error::Invariant("invariant vectors are dependent".into()));
        }
        Ok(e.pivots().iter().map(|&p| self.ann.element(&self.vectors[p])).collect())
    }
}

#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub dim: usize,
    /// Basis of [QP_n]^{GL_h} in reduced echelon form.
    pub invariants: Vec<BitVector>,
    /// `representatives[i]` pairs to 1 with `invariants[i]` and to 0 with the others.
    pub representatives: Vec<DualElement>,
}

/// Coinvariants with representatives dual to the GL_h-invariants of QP_n.
pub fn coinvariants(h: usize, n: u32, limits: &Limits) -> Result<Coinvariants> {
    let co = CoinvariantSpace::compute(h, n, limits)?;
    let hs = HitSpace::compute(h, n, limits)?;
    if hs.admissible_columns() != co.ann.free_columns() {
        return Err(Error::Invariant("annihilated kernel is not indexed by the admissible monomials".into()));
    }
    let inv = invariants(&hs, Group::General)?;
    if inv.len() != co.dim() {
        return Err(Error::Invariant(format!(
            "{} coinvariants but {} invariants in degree {n}",
            co.dim(),
            inv.len()
        )));
    }
    let mut e = Echelon::new(hs.dim_cohit());
    for v in &inv {
        e.insert(v)?;
    }
    let rows: Vec<BitVector> = e.rows().to_vec();
    let representatives = co.representatives(&rows)?;
    Ok(Coinvariants { dim: co.dim(), invariants: rows, representatives })
}

/// ψ_h into the lambda algebra:
/// ψ_h(x^{(j_1..j_h)}) = Σ_{k ≥ j_h} ψ_{h-1}((x^{(j_1..j_{h-1})})Sq^{k - j_h}) λ_k.
pub fn psi(alg: &LambdaAlgebra, xi: &DualElement) -> LambdaElement {
    let mut memo = HashMap::new();
    let mut out = LambdaElement::zero();
    for m in &xi.terms {
        out = out.add(&psi_monomial(alg, m.monomial(), &mut memo));
    }
    out
}

fn psi_monomial(alg: &LambdaAlgebra, m: &Monomial, memo: &mut HashMap<Monomial, LambdaElement>) -> LambdaElement {
    let h = m.h();
    if h == 0 {
        return LambdaElement::from_word(LambdaWord::empty());
    }
    if let Some(v) = memo.get(m) {
        return v.clone();
    }
    let e = m.exponents();
    let last = e[h - 1] as u32;
    let prefix = DualMonomial(Monomial::new(&e[..h - 1].iter().map(|&a| a as u32).collect::<Vec<_>>()).expect("fewer variables"));
    let mut out = LambdaElement::zero();
    // (prefix)Sq^i vanishes once 2i exceeds the prefix degree.
    for i in 0..=prefix.degree() / 2 {
        let mut head = LambdaElement::zero();
        for_each_dual_sq_term(i, &prefix, |p| {
            head = head.add(&psi_monomial(alg, p.monomial(), memo));
        });
        if !head.is_zero() {
            out = out.add(&alg.times_lambda(&head, last + i));
        }
    }
    memo.insert(*m, out.clone());
    out
}

#[derive(Clone, Debug)]
pub struct TransferImage {
    pub psi: LambdaElement,
    pub classification: Classification,
}

/// ψ_h(ξ) and its class in Ext^{h,h+n}.
pub fn transfer_image(alg: &LambdaAlgebra, xi: &DualElement, limits: &Limits) -> Result<TransferImage> {
    if xi.h == 0 {
        return Err(Error::VariableCount { expected: 1, found: 0 });
    }
    check_annihilated(xi)?;
    let z = psi(alg, xi);
    let ext = ext_group(alg, xi.h, xi.n, limits)?;
    let classification = ext.classify(alg, &z)?;
    if !classification.is_cycle {
        return Err(Error::Invariant(format!("psi of an annihilated element is not a cycle: {z}")));
    }
    Ok(TransferImage { psi: z, classification })
}
