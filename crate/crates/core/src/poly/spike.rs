use super::arith::mu;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// The minimal spike of degree n: exponents 2^{β_j} - 1 with
/// β_1 > β_2 > ... > β_{r-1} >= β_r >= 1 and r = μ(n).
pub fn minimal_spike(h: usize, n: u32) -> Result<Monomial> {
    let r = mu(n) as usize;
    if r > h {
        return Err(Error::NoSpike { h, n, mu: r as u32 });
    }
    let betas = spike_betas(n, r).ok_or_else(|| Error::Invariant(format!("no spike pattern of length {r} for degree {n}")))?;
    let mut e = vec![0u32; h];
    for (slot, b) in e.iter_mut().zip(&betas) {
        *slot = (1u32 << b) - 1;
    }
    Monomial::new(&e)
}

fn spike_betas(n: u32, r: usize) -> Option<Vec<u32>> {
    fn rec(left: u32, slots: usize, cap: u32, out: &mut Vec<u32>) -> bool {
        if slots == 0 {
            return left == 0;
        }
        // The last two exponents may coincide; the others strictly decrease.
        let hi = if slots == 1 { cap } else { cap.saturating_sub(1) };
        for b in (1..=hi).rev() {
            let part = (1u32 << b) - 1;
            if part > left {
                continue;
            }
            out.push(b);
            let next_cap = if slots == 2 { b + 1 } else { b };
            if rec(left - part, slots - 1, next_cap, out) {
                return true;
            }
            out.pop();
        }
        false
    }
    if r == 0 {
        return (n == 0).then(Vec::new);
    }
    let mut out = Vec::new();
    let top = 32 - n.leading_zeros() + 1;
    rec(n, r, top + 1, &mut out).then_some(out)
}
