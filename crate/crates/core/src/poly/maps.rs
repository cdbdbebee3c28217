use std::collections::HashSet;

use super::monomial::{Monomial, MAX_VARS};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// An algebra map Z/2[t_1..t_h] → Z/2[t_1..t_h'] sending each variable to a
/// linear form (given as the set of target variables it sums).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableMap {
    target: usize,
    images: Vec<Vec<u8>>,
}

impl VariableMap {
    /// `images[j]` lists the 0-based target variables summed in the image of t_{j+1}.
    pub fn new(target: usize, images: Vec<Vec<usize>>) -> Result<Self> {
        if images.len() > MAX_VARS || target > MAX_VARS {
            return Err(Error::VariableCount { expected: MAX_VARS, found: images.len().max(target) });
        }
        let mut out = Vec::with_capacity(images.len());
        for form in images {
            let mut set: Vec<u8> = Vec::new();
            for v in form {
                if v >= target {
                    return Err(Error::IndexOutOfRange { index: v + 1, min: 1, max: target });
                }
                match set.iter().position(|&x| x as usize == v) {
                    Some(i) => {
                        set.remove(i);
                    }
                    None => set.push(v as u8),
                }
            }
            set.sort_unstable();
            out.push(set);
        }
        Ok(VariableMap { target, images: out })
    }

    /// Builds a map from degree-one polynomials over the target variables.
    pub fn from_forms(target: usize, forms: &[Polynomial]) -> Result<Self> {
        let mut images = Vec::new();
        for f in forms {
            if f.h() != target {
                return Err(Error::VariableCount { expected: target, found: f.h() });
            }
            f.check_degree(1)?;
            images.push(f.terms().map(|m| m.exponents().iter().position(|&a| a == 1).unwrap()).collect());
        }
        Self::new(target, images)
    }

    pub fn identity(h: usize) -> Self {
        VariableMap { target: h, images: (0..h as u8).map(|j| vec![j]).collect() }
    }

    /// θ_j: the transposition of t_j and t_{j+1} for j < h; θ_h sends t_1 to t_1 + t_2.
    /// For h = 1 the group is trivial and θ_1 is the identity.
    pub fn theta(j: usize, h: usize) -> Result<Self> {
        if j == 0 || j > h {
            return Err(Error::IndexOutOfRange { index: j, min: 1, max: h });
        }
        let mut images: Vec<Vec<usize>> = (0..h).map(|i| vec![i]).collect();
        if j < h {
            images.swap(j - 1, j);
        } else if h >= 2 {
            images[0] = vec![0, 1];
        }
        Self::new(h, images)
    }

    /// q_l: Z/2[t_1..t_{h-1}] → Z/2[t_1..t_h], skipping the variable t_l.
    pub fn q_map(l: usize, h: usize) -> Result<Self> {
        if l == 0 || l > h {
            return Err(Error::IndexOutOfRange { index: l, min: 1, max: h });
        }
        let images = (1..h).map(|j| vec![if j < l { j - 1 } else { j }]).collect();
        Self::new(h, images)
    }

    /// φ_(u,v): Z/2[t_1..t_h] → Z/2[t_1..t_{h-1}], t_u ↦ t_{v-1}, later variables shift down.
    pub fn phi_uv(u: usize, v: usize, h: usize) -> Result<Self> {
        if u == 0 || u >= h {
            return Err(Error::IndexOutOfRange { index: u, min: 1, max: h.saturating_sub(1) });
        }
        if v <= u || v > h {
            return Err(Error::IndexOutOfRange { index: v, min: u + 1, max: h });
        }
        let images = (1..=h)
            .map(|j| {
                let target = match j.cmp(&u) {
                    std::cmp::Ordering::Less => j,
                    std::cmp::Ordering::Equal => v - 1,
                    std::cmp::Ordering::Greater => j - 1,
                };
                vec![target - 1]
            })
            .collect();
        Self::new(h - 1, images)
    }

    pub fn source_h(&self) -> usize {
        self.images.len()
    }

    pub fn target_h(&self) -> usize {
        self.target
    }

    /// Image of t_{j+1} as a polynomial.
    pub fn image(&self, j: usize) -> Polynomial {
        let terms = self.images[j].iter().map(|&v| Monomial::var(self.target, v as usize + 1).unwrap());
        Polynomial::from_terms(self.target, terms).unwrap()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &VariableMap) -> Result<VariableMap> {
        if inner.target != self.source_h() {
            return Err(Error::VariableCount { expected: self.source_h(), found: inner.target });
        }
        let images = inner
            .images
            .iter()
            .map(|form| form.iter().flat_map(|&v| self.images[v as usize].iter().map(|&w| w as usize)).collect())
            .collect();
        VariableMap::new(self.target, images)
    }

    /// Image of a single monomial, by expanding each power of a linear form.
    pub fn apply_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        if m.h() != self.source_h() {
            return Err(Error::VariableCount { expected: self.source_h(), found: m.h() });
        }
        let mut acc: HashSet<[u16; MAX_VARS]> = HashSet::from([[0u16; MAX_VARS]]);
        for (j, &a) in m.exponents().iter().enumerate() {
            if a == 0 {
                continue;
            }
            let form = &self.images[j];
            if form.is_empty() {
                return Ok(Polynomial::zero(self.target));
            }
            let powers = power_of_form(form, a);
            let mut next: HashSet<[u16; MAX_VARS]> = HashSet::new();
            for base in &acc {
                for p in &powers {
                    let mut e = *base;
                    for (x, y) in e.iter_mut().zip(p) {
                        *x += y;
                    }
                    if !next.remove(&e) {
                        next.insert(e);
                    }
                }
            }
            acc = next;
        }
        Polynomial::from_terms(self.target, acc.into_iter().map(|e| Monomial::from_raw(self.target, e)))
    }

    pub fn substitute(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.h() != self.source_h() {
            return Err(Error::VariableCount { expected: self.source_h(), found: f.h() });
        }
        let mut out = Polynomial::zero(self.target);
        for m in f.terms() {
            for t in self.apply_monomial(m)?.terms() {
                out.toggle(*t)?;
            }
        }
        Ok(out)
    }
}

/// Terms of (Σ_{v ∈ form} t_v)^a: each binary digit of `a` goes to one variable.
fn power_of_form(form: &[u8], a: u16) -> Vec<[u16; MAX_VARS]> {
    let bits: Vec<u16> = (0..16).filter(|b| a >> b & 1 == 1).map(|b| 1u16 << b).collect();
    let mut out = vec![[0u16; MAX_VARS]];
    for bit in bits {
        let mut next = Vec::with_capacity(out.len() * form.len());
        for e in &out {
            for &v in form {
                let mut f = *e;
                f[v as usize] += bit;
                next.push(f);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn theta_examples() {
        let t1 = p("(1,0,0,0)");
        assert_eq!(VariableMap::theta(1, 4).unwrap().substitute(&t1).unwrap(), p("(0,1,0,0)"));
        assert_eq!(VariableMap::theta(4, 4).unwrap().substitute(&t1).unwrap(), p("(1,0,0,0)+(0,1,0,0)"));
        let t2t3 = p("(0,1,1,0)");
        assert_eq!(VariableMap::theta(2, 4).unwrap().substitute(&t2t3).unwrap(), t2t3);
        assert!(VariableMap::theta(0, 4).is_err());
        assert!(VariableMap::theta(5, 4).is_err());
    }

    #[test]
    fn identity_is_identity() {
        let f = p("(3,1,0)+(0,2,2)");
        assert_eq!(VariableMap::identity(3).substitute(&f).unwrap(), f);
    }

    #[test]
    fn q_map_shifts() {
        let q = VariableMap::q_map(1, 6).unwrap();
        assert_eq!(q.source_h(), 5);
        for j in 0..5 {
            assert_eq!(q.image(j), Polynomial::from_monomial(Monomial::var(6, j + 2).unwrap()));
        }
        let q3 = VariableMap::q_map(3, 4).unwrap();
        assert_eq!(q3.substitute(&p("(1,2,3)")).unwrap(), p("(1,2,0,3)"));
    }

    #[test]
    fn phi_merges_slots() {
        let phi = VariableMap::phi_uv(1, 2, 6).unwrap();
        assert_eq!(phi.target_h(), 5);
        assert_eq!(phi.substitute(&p("(1,2,3,0,0,4)")).unwrap(), p("(3,3,0,0,4)"));
        assert!(VariableMap::phi_uv(2, 2, 6).is_err());
        assert!(VariableMap::phi_uv(1, 7, 6).is_err());
    }

    #[test]
    fn binomial_expansion() {
        // (t1 + t2)^3 = t1^3 + t1^2 t2 + t1 t2^2 + t2^3.
        let th = VariableMap::theta(2, 2).unwrap();
        assert_eq!(th.substitute(&p("(3,0)")).unwrap(), p("(3,0)+(2,1)+(1,2)+(0,3)"));
        // (t1 + t2)^2 = t1^2 + t2^2.
        assert_eq!(th.substitute(&p("(2,0)")).unwrap(), p("(2,0)+(0,2)"));
    }

    #[test]
    fn composition_matches_sequential_application() {
        let a = VariableMap::theta(3, 3).unwrap();
        let b = VariableMap::theta(1, 3).unwrap();
        let f = p("(2,1,3)+(1,1,1)");
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.substitute(&f).unwrap(), a.substitute(&b.substitute(&f).unwrap()).unwrap());
    }

    #[test]
    fn forms_round_trip() {
        let m = VariableMap::from_forms(2, &[p("(1,0)+(0,1)"), p("(0,1)")]).unwrap();
        assert_eq!(m, VariableMap::theta(2, 2).unwrap());
        assert!(VariableMap::from_forms(2, &[p("(2,0)")]).is_err());
        assert!(VariableMap::new(2, vec![vec![2]]).is_err());
    }

    #[test]
    fn variable_count_mismatch() {
        assert!(VariableMap::theta(1, 3).unwrap().substitute(&p("(1,0)")).is_err());
    }
}
