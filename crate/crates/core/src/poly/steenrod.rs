use super::monomial::{Monomial, MAX_VARS};
use super::polynomial::Polynomial;

/// Calls `f` on every term of Sq^k(t). The terms are pairwise distinct.
///
/// Sq^k(Π t_j^{a_j}) = Σ Π binom(a_j, k_j) t_j^{a_j + k_j} over Σ k_j = k, and
/// binom(a, b) is odd exactly when b is a bit-submask of a.
pub fn for_each_sq_term<F: FnMut(Monomial)>(k: u32, t: &Monomial, mut f: F) {
    let h = t.h();
    let a = *t.raw();
    let mut tail = [0u32; MAX_VARS + 1];
    for j in (0..h).rev() {
        tail[j] = tail[j + 1] + a[j] as u32;
    }
    if k > tail[0] {
        return;
    }
    let mut out = a;
    rec(0, h, k, &a, &tail, &mut out, &mut f);

    fn rec<F: FnMut(Monomial)>(
        j: usize,
        h: usize,
        left: u32,
        a: &[u16; MAX_VARS],
        tail: &[u32; MAX_VARS + 1],
        out: &mut [u16; MAX_VARS],
        f: &mut F,
    ) {
        if left == 0 {
            f(Monomial::from_raw(h, *out));
            return;
        }
        if j == h || tail[j] < left {
            return;
        }
        let aj = a[j] as u32;
        // Submasks of a_j not exceeding `left`, largest first.
        let mut s = aj;
        loop {
            if s <= left && tail[j + 1] >= left - s {
                out[j] = (aj + s) as u16;
                rec(j + 1, h, left - s, a, tail, out, f);
                out[j] = aj as u16;
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & aj;
        }
    }
}

/// Sq^k on a monomial.
pub fn sq_monomial(k: u32, t: &Monomial) -> Vec<Monomial> {
    let mut v = Vec::new();
    for_each_sq_term(k, t, |m| v.push(m));
    v
}

/// Sq^k on a polynomial.
pub fn sq(k: u32, f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(f.h());
    for t in f.terms() {
        for_each_sq_term(k, t, |m| out.toggle(m).expect("same variable count"));
    }
    out
}
