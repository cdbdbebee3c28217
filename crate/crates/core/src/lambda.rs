//! The mod-2 lambda algebra and Ext_A as its homology.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{BitVector, Echelon, SparseEchelon};
use crate::hit::Limits;
use crate::poly::binom2;

/// Longest supported word.
pub const MAX_LEN: usize = 12;

/// λ_{j_1} ⋯ λ_{j_s}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaWord {
    len: u8,
    j: [u16; MAX_LEN],
}

impl LambdaWord {
    pub fn new(indices: &[u32]) -> Result<Self> {
        if indices.len() > MAX_LEN {
            return Err(Error::Dimension { expected: MAX_LEN, found: indices.len() });
        }
        let mut j = [0u16; MAX_LEN];
        for (slot, &k) in j.iter_mut().zip(indices) {
            *slot = u16::try_from(k).map_err(|_| Error::Parse(format!("lambda index {k} too large")))?;
        }
        Ok(LambdaWord { len: indices.len() as u8, j })
    }

    pub fn empty() -> Self {
        LambdaWord { len: 0, j: [0; MAX_LEN] }
    }

    pub fn letter(k: u32) -> Self {
        let mut w = Self::empty();
        w.push(k);
        w
    }

    pub fn indices(&self) -> &[u16] {
        &self.j[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Internal degree Σ j_m.
    pub fn degree(&self) -> u32 {
        self.indices().iter().map(|&k| k as u32).sum()
    }

    /// Each index is at most twice its predecessor.
    pub fn is_admissible(&self) -> bool {
        self.indices().windows(2).all(|p| p[1] as u32 <= 2 * p[0] as u32)
    }

    fn last(&self) -> Option<u32> {
        self.indices().last().map(|&k| k as u32)
    }

    fn prefix(&self) -> LambdaWord {
        let mut w = *self;
        w.len -= 1;
        w.j[w.len as usize] = 0;
        w
    }

    fn push(&mut self, k: u32) {
        assert!((self.len as usize) < MAX_LEN, "lambda word longer than {MAX_LEN}");
        self.j[self.len as usize] = k as u16;
        self.len += 1;
    }

    fn with(&self, k: u32) -> LambdaWord {
        let mut w = *self;
        w.push(k);
        w
    }

    /// Sq^0: λ_j ↦ λ_{2j+1} letterwise.
    pub fn sq0(&self) -> LambdaWord {
        let mut w = *self;
        for k in w.j[..w.len as usize].iter_mut() {
            *k = 2 * *k + 1;
        }
        w
    }

    pub fn concat(&self, other: &LambdaWord) -> LambdaWord {
        let mut w = *self;
        for &k in other.indices() {
            w.push(k as u32);
        }
        w
    }
}

impl fmt::Display for LambdaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 0 {
            return f.write_str("1");
        }
        for (i, k) in self.indices().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "l{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses "l4 l6 l5 l3"; "1" is the empty word.
impl FromStr for LambdaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(LambdaWord::empty());
        }
        let idx = s
            .split_whitespace()
            .map(|tok| {
                tok.strip_prefix('l')
                    .and_then(|d| d.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad lambda letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if idx.is_empty() {
            return Err(Error::Parse("empty lambda word".into()));
        }
        LambdaWord::new(&idx)
    }
}

/// A GF(2) sum of lambda words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaElement {
    words: BTreeSet<LambdaWord>,
}

impl LambdaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: LambdaWord) -> Self {
        LambdaElement { words: BTreeSet::from([w]) }
    }

    pub fn from_words<I: IntoIterator<Item = LambdaWord>>(words: I) -> Self {
        let mut e = Self::zero();
        for w in words {
            e.toggle(w);
        }
        e
    }

    pub fn toggle(&mut self, w: LambdaWord) {
        if !self.words.remove(&w) {
            self.words.insert(w);
        }
    }

    pub fn add(&self, other: &LambdaElement) -> LambdaElement {
        LambdaElement { words: self.words.symmetric_difference(&other.words).copied().collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &LambdaWord> + '_ {
        self.words.iter()
    }

    pub fn contains(&self, w: &LambdaWord) -> bool {
        self.words.contains(w)
    }

    pub fn is_admissible(&self) -> bool {
        self.words.iter().all(|w| w.is_admissible())
    }

    /// (s, t) when all words share one bidegree.
    pub fn bidegree(&self) -> Option<(usize, u32)> {
        let mut it = self.words.iter().map(|w| (w.len(), w.degree()));
        let b = it.next()?;
        it.all(|c| c == b).then_some(b)
    }

    pub fn sq0(&self) -> LambdaElement {
        LambdaElement { words: self.words.iter().map(|w| w.sq0()).collect() }
    }
}

impl fmt::Display for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return f.write_str("0");
        }
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for LambdaElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(LambdaElement::zero());
        }
        let words = s.split('+').map(|w| w.parse::<LambdaWord>()).collect::<Result<Vec<_>>>()?;
        Ok(LambdaElement::from_words(words))
    }
}

impl Serialize for LambdaElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LambdaElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// λ_i λ_k with k > 2i, rewritten as Σ binom(n-j-1, j) λ_{i+n-j} λ_{2i+1+j} where k = 2i+1+n.
pub fn adem_pairs(i: u32, k: u32) -> Vec<(u32, u32)> {
    debug_assert!(k > 2 * i);
    let n = (k - 2 * i - 1) as i64;
    (0..=n)
        .filter(|&j| binom2(n - j - 1, j))
        .map(|j| (i + (n - j) as u32, 2 * i + 1 + j as u32))
        .collect()
}

/// δ(λ_k) = Σ_{j≥1} binom(k-j, j) λ_{k-j} λ_{j-1}.
pub fn delta_letter(k: u32) -> Vec<(u32, u32)> {
    let k = k as i64;
    (1..=k).filter(|&j| binom2(k - j, j)).map(|j| ((k - j) as u32, (j - 1) as u32)).collect()
}

type Words = Rc<Vec<LambdaWord>>;

fn xor_into(acc: &mut HashSet<LambdaWord>, w: LambdaWord) {
    if !acc.remove(&w) {
        acc.insert(w);
    }
}

fn sorted(acc: HashSet<LambdaWord>) -> Vec<LambdaWord> {
    let mut v: Vec<LambdaWord> = acc.into_iter().collect();
    v.sort_unstable();
    v
}

/// Memoized normal forms and differentials. Not shareable across threads;
/// each thread builds its own tables.
#[derive(Default)]
pub struct LambdaAlgebra {
    times: RefCell<HashMap<(LambdaWord, u16), Words>>,
    delta: RefCell<HashMap<LambdaWord, Words>>,
}

impl LambdaAlgebra {
    pub fn new() -> Self {
        Self::default()
    }

    /// Normal form of w·λ_k for admissible w.
    fn times_letter(&self, w: &LambdaWord, k: u32) -> Words {
        match w.last() {
            None => return Rc::new(vec![w.with(k)]),
            Some(i) if k <= 2 * i => return Rc::new(vec![w.with(k)]),
            _ => {}
        }
        if let Some(r) = self.times.borrow().get(&(*w, k as u16)) {
            return r.clone();
        }
        let i = w.last().unwrap();
        let u = w.prefix();
        let mut acc = HashSet::new();
        for (a, b) in adem_pairs(i, k) {
            for v in self.times_letter(&u, a).iter() {
                for x in self.times_letter(v, b).iter() {
                    xor_into(&mut acc, *x);
                }
            }
        }
        let r: Words = Rc::new(sorted(acc));
        self.times.borrow_mut().insert((*w, k as u16), r.clone());
        r
    }

    fn times_word(&self, start: &[LambdaWord], letters: &[u16]) -> Vec<LambdaWord> {
        let mut cur: Vec<LambdaWord> = start.to_vec();
        for &k in letters {
            let mut acc = HashSet::new();
            for v in &cur {
                for x in self.times_letter(v, k as u32).iter() {
                    xor_into(&mut acc, *x);
                }
            }
            cur = acc.into_iter().collect();
        }
        cur.sort_unstable();
        cur
    }

    pub fn normalize_word(&self, w: &LambdaWord) -> LambdaElement {
        if w.is_admissible() {
            return LambdaElement::from_word(*w);
        }
        LambdaElement::from_words(self.times_word(&[LambdaWord::empty()], w.indices()))
    }

    pub fn normalize(&self, e: &LambdaElement) -> LambdaElement {
        let mut out = LambdaElement::zero();
        for w in e.words() {
            for x in self.normalize_word(w).words() {
                out.toggle(*x);
            }
        }
        out
    }

    /// Normalized product.
    pub fn multiply(&self, a: &LambdaElement, b: &LambdaElement) -> LambdaElement {
        let a = self.normalize(a);
        let mut out = LambdaElement::zero();
        for v in b.words() {
            let starts: Vec<LambdaWord> = a.words().copied().collect();
            for x in self.times_word(&starts, v.indices()) {
                out.toggle(x);
            }
        }
        out
    }

    /// e·λ_k, with e already normalized.
    pub fn times_lambda(&self, e: &LambdaElement, k: u32) -> LambdaElement {
        let mut acc = HashSet::new();
        for w in e.words() {
            assert!(w.is_admissible(), "times_lambda expects a normalized element");
            for x in self.times_letter(w, k).iter() {
                xor_into(&mut acc, *x);
            }
        }
        LambdaElement::from_words(sorted(acc))
    }

    /// δ on an admissible word, via δ(u λ_k) = δ(u) λ_k + u δ(λ_k).
    fn delta_admissible(&self, w: &LambdaWord) -> Words {
        if w.is_empty() {
            return Rc::new(Vec::new());
        }
        if let Some(r) = self.delta.borrow().get(w) {
            return r.clone();
        }
        let k = w.last().unwrap();
        let u = w.prefix();
        let mut acc = HashSet::new();
        for v in self.delta_admissible(&u).iter() {
            for x in self.times_letter(v, k).iter() {
                xor_into(&mut acc, *x);
            }
        }
        for (a, b) in delta_letter(k) {
            for v in self.times_letter(&u, a).iter() {
                for x in self.times_letter(v, b).iter() {
                    xor_into(&mut acc, *x);
                }
            }
        }
        let r: Words = Rc::new(sorted(acc));
        self.delta.borrow_mut().insert(*w, r.clone());
        r
    }

    pub fn differential(&self, e: &LambdaElement) -> LambdaElement {
        let mut out = LambdaElement::zero();
        for w in self.normalize(e).words() {
            for x in self.delta_admissible(w).iter() {
                out.toggle(*x);
            }
        }
        out
    }

    /// Drops the memo tables.
    pub fn clear(&self) {
        self.times.borrow_mut().clear();
        self.delta.borrow_mut().clear();
    }
}

thread_local! {
    static ALGEBRA: LambdaAlgebra = LambdaAlgebra::new();
}

/// Runs `f` with this thread's shared memo tables.
pub fn with_algebra<R>(f: impl FnOnce(&LambdaAlgebra) -> R) -> R {
    ALGEBRA.with(f)
}

pub fn adem_normalize(e: &LambdaElement) -> LambdaElement {
    with_algebra(|a| a.normalize(e))
}

pub fn differential(e: &LambdaElement) -> LambdaElement {
    with_algebra(|a| a.differential(e))
}

pub fn sq0_lambda(w: &LambdaWord) -> LambdaWord {
    w.sq0()
}

/// Admissible words of length s and degree t, in lexicographic order.
pub fn lambda_basis(s: usize, t: u32) -> Vec<LambdaWord> {
    let mut out = Vec::new();
    if s == 0 {
        if t == 0 {
            out.push(LambdaWord::empty());
        }
        return out;
    }
    // Largest total reachable by r further letters after a letter of value v.
    fn reach(v: u64, r: usize) -> u64 {
        v.saturating_mul((1u64 << (r + 1).min(62)) - 2)
    }
    fn rec(w: LambdaWord, left: u32, r: usize, out: &mut Vec<LambdaWord>) {
        if r == 0 {
            if left == 0 {
                out.push(w);
            }
            return;
        }
        let cap = match w.last() {
            None => left,
            Some(p) => left.min(2 * p),
        };
        for k in 0..=cap {
            if reach(k as u64, r - 1) < (left - k) as u64 {
                continue;
            }
            rec(w.with(k), left - k, r - 1, out);
        }
    }
    rec(LambdaWord::empty(), t, s, &mut out);
    out
}

pub fn lambda_dim(s: usize, t: u32) -> usize {
    lambda_basis(s, t).len()
}

fn index_of(basis: &[LambdaWord]) -> HashMap<LambdaWord, u32> {
    basis.iter().enumerate().map(|(i, w)| (*w, i as u32)).collect()
}

fn delta_columns(alg: &LambdaAlgebra, w: &LambdaWord, index: &HashMap<LambdaWord, u32>, offset: u32) -> Vec<u32> {
    alg.delta_admissible(w).iter().map(|x| index[x] + offset).collect()
}

/// Rank of δ: Λ^{s,t} → Λ^{s+1,t-1}.
pub fn delta_rank(alg: &LambdaAlgebra, s: usize, t: u32) -> usize {
    if t == 0 && s == 0 {
        return 0;
    }
    let source = lambda_basis(s, t);
    if source.is_empty() || t == 0 {
        return 0;
    }
    let target = lambda_basis(s + 1, t - 1);
    let index = index_of(&target);
    let mut e = SparseEchelon::new(target.len());
    for w in &source {
        e.insert(&delta_columns(alg, w, &index, 0));
    }
    e.rank()
}

/// dim Ext^{s, s+t}, by ranks alone.
pub fn ext_dim(alg: &LambdaAlgebra, s: usize, t: u32) -> usize {
    let n = lambda_dim(s, t);
    n - delta_rank(alg, s, t) - delta_rank(alg, s - 1, t + 1)
}

/// Ext^{s,s+t} with representative cycles reduced against the boundaries.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub s: usize,
    pub t: u32,
    pub dim: usize,
    pub cycles: Vec<LambdaElement>,
    basis: Vec<LambdaWord>,
    index: HashMap<LambdaWord, u32>,
    boundaries: SparseEchelon,
    coords: Echelon,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_cycle: bool,
    pub is_boundary: bool,
    /// Coordinates of the class against `ExtGroup::cycles` (empty when not a cycle).
    pub coordinates: BitVector,
}

impl Classification {
    pub fn is_nonzero_class(&self) -> bool {
        self.is_cycle && !self.is_boundary
    }
}

pub fn ext_group(alg: &LambdaAlgebra, s: usize, t: u32, limits: &Limits) -> Result<ExtGroup> {
    if s == 0 {
        return Err(Error::IndexOutOfRange { index: 0, min: 1, max: MAX_LEN - 1 });
    }
    let basis = lambda_basis(s, t);
    let target = if t == 0 { Vec::new() } else { lambda_basis(s + 1, t - 1) };
    limits.check(basis.len() + target.len())?;
    let index = index_of(&basis);
    let n = basis.len() as u32;

    // Rows [x | δx] with δ-columns above the identity block; rows whose pivot
    // stays in the identity block span the cycles.
    let target_index = index_of(&target);
    let mut aug = SparseEchelon::new(basis.len() + target.len());
    for (i, w) in basis.iter().enumerate() {
        let mut row = delta_columns(alg, w, &target_index, n);
        row.push(i as u32);
        aug.insert(&row);
    }
    let cycles: Vec<Vec<u32>> = (0..basis.len())
        .filter_map(|c| aug.pivot_row(c).map(|r| r.to_vec()))
        .collect();

    let mut boundaries = SparseEchelon::new(basis.len());
    for v in lambda_basis(s - 1, t + 1) {
        boundaries.insert(&delta_columns(alg, &v, &index, 0));
    }

    let mut homology = boundaries.clone();
    let mut reps: Vec<Vec<u32>> = Vec::new();
    for z in &cycles {
        if homology.insert(z) {
            reps.push(boundaries.reduce(z));
        }
    }
    let k = reps.len();
    let mut coords = Echelon::new(k + basis.len());
    for (i, r) in reps.iter().enumerate() {
        let v = BitVector::from_ones(k + basis.len(), std::iter::once(i).chain(r.iter().map(|&c| k + c as usize)));
        coords.insert(&v)?;
    }
    let as_element = |cols: &[u32]| LambdaElement::from_words(cols.iter().map(|&c| basis[c as usize]));
    let reps_el: Vec<LambdaElement> = reps.iter().map(|r| as_element(r)).collect();
    let expected = cycles.len() - boundaries.rank();
    if k != expected {
        return Err(Error::Invariant(format!("homology rank {k} but cycles minus boundaries is {expected}")));
    }
    Ok(ExtGroup { s, t, dim: k, cycles: reps_el, basis, index, boundaries, coords })
}

impl ExtGroup {
    pub fn basis(&self) -> &[LambdaWord] {
        &self.basis
    }

    /// Decides whether z is a cycle and, if so, which class it represents.
    pub fn classify(&self, alg: &LambdaAlgebra, z: &LambdaElement) -> Result<Classification> {
        let z = alg.normalize(z);
        if let Some((s, t)) = z.bidegree() {
            if (s, t) != (self.s, self.t) {
                return Err(Error::Degree { expected: self.t, found: t });
            }
        }
        if !alg.differential(&z).is_zero() {
            return Ok(Classification { is_cycle: false, is_boundary: false, coordinates: BitVector::zeros(0) });
        }
        let cols: Vec<u32> = z.words().map(|w| self.index[w]).collect();
        let r = self.boundaries.reduce(&cols);
        let k = self.dim;
        let v = BitVector::from_ones(k + self.basis.len(), r.iter().map(|&c| k + c as usize));
        let nf = self.coords.reduce(&v)?.normal_form;
        if nf.ones().any(|i| i >= k) {
            return Err(Error::Invariant("cycle is not spanned by the homology representatives".into()));
        }
        let coordinates = BitVector::from_ones(k, nf.ones());
        Ok(Classification { is_cycle: true, is_boundary: r.is_empty(), coordinates })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> LambdaElement {
        s.parse().unwrap()
    }

    #[test]
    fn word_text() {
        let w: LambdaWord = "l4 l6 l5 l3".parse().unwrap();
        assert_eq!(w.indices(), &[4, 6, 5, 3]);
        assert_eq!(w.to_string(), "l4 l6 l5 l3");
        assert_eq!(w.degree(), 18);
        assert!(w.is_admissible());
        assert!(!"l1 l3".parse::<LambdaWord>().unwrap().is_admissible());
        assert!("l4 x".parse::<LambdaWord>().is_err());
        assert_eq!("1".parse::<LambdaWord>().unwrap(), LambdaWord::empty());
        assert_eq!(el("0"), LambdaElement::zero());
    }

    #[test]
    fn adem_example() {
        assert_eq!(adem_normalize(&el("l1 l15")), el("l13 l3 + l9 l7"));
        assert_eq!(adem_normalize(&el("l3 l1")), el("l3 l1"));
        // λ_i λ_{2i+1} = 0.
        assert!(adem_normalize(&el("l2 l5")).is_zero());
    }

    #[test]
    fn differential_examples() {
        assert_eq!(differential(&el("l2")), el("l1 l0"));
        assert!(differential(&el("l15")).is_zero());
        assert!(differential(&el("l0")).is_zero());
        for i in 0..7 {
            assert!(differential(&LambdaElement::from_word(LambdaWord::letter((1 << i) - 1))).is_zero());
        }
    }

    #[test]
    fn sq0_examples() {
        assert_eq!(sq0_lambda(&LambdaWord::letter(0)), LambdaWord::letter(1));
        assert_eq!(sq0_lambda(&"l1 l1 l1 l15".parse().unwrap()), "l3 l3 l3 l31".parse().unwrap());
    }

    #[test]
    fn basis_examples() {
        assert_eq!(lambda_basis(1, 9), vec![LambdaWord::letter(9)]);
        let b2: Vec<String> = lambda_basis(2, 3).iter().map(|w| w.to_string()).collect();
        assert_eq!(b2, vec!["l1 l2", "l2 l1", "l3 l0"]);
        assert_eq!(lambda_basis(0, 0), vec![LambdaWord::empty()]);
        assert!(lambda_basis(0, 3).is_empty());
    }

    #[test]
    fn basis_matches_filtered_enumeration() {
        for s in 1..4 {
            for t in 0..14u32 {
                let mut brute = Vec::new();
                let mut stack = vec![Vec::<u32>::new()];
                while let Some(v) = stack.pop() {
                    if v.len() == s {
                        if v.iter().sum::<u32>() == t {
                            brute.push(LambdaWord::new(&v).unwrap());
                        }
                        continue;
                    }
                    for k in 0..=t {
                        let mut w = v.clone();
                        w.push(k);
                        stack.push(w);
                    }
                }
                let mut brute: Vec<_> = brute.into_iter().filter(|w| w.is_admissible()).collect();
                brute.sort();
                assert_eq!(lambda_basis(s, t), brute, "s = {s}, t = {t}");
            }
        }
    }

    #[test]
    fn ext_in_stem_and_filtration_one() {
        let alg = LambdaAlgebra::new();
        for t in 0..64u32 {
            let expect = usize::from((t + 1).is_power_of_two());
            assert_eq!(ext_dim(&alg, 1, t), expect, "t = {t}");
        }
    }

    #[test]
    fn classify_boundary_and_classes() {
        let alg = LambdaAlgebra::new();
        let b = alg.differential(&el("l6"));
        assert_eq!(b, el("l5 l0 + l3 l2"));
        let g = ext_group(&alg, 2, 5, &Limits::default()).unwrap();
        let c = g.classify(&alg, &b).unwrap();
        assert!(c.is_cycle && c.is_boundary);
        assert!(c.coordinates.is_zero());

        let g2 = ext_group(&alg, 2, 2, &Limits::default()).unwrap();
        assert_eq!(g2.dim, 1);
        let c = g2.classify(&alg, &el("l1 l1")).unwrap();
        assert!(c.is_nonzero_class());
        assert_eq!(c.coordinates.count_ones(), 1);

        assert!(!g2.classify(&alg, &el("l2 l0")).unwrap().is_cycle);
    }

    #[test]
    fn filtration_zero_is_rejected() {
        let alg = LambdaAlgebra::new();
        assert!(ext_group(&alg, 0, 3, &Limits::default()).is_err());
    }
}
