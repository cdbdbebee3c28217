//! QP_n dimension from the full spanning set Sq^i(m), i ≥ 1, with no 2-power reduction.
//! Usage: all_squares_dim <h> <n>

use hitcore::gf2::SparseEchelon;
use hitcore::hit::MonomialBasis;
use hitcore::poly::{for_each_sq_term, monomials};

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().unwrap()).collect();
    let (h, n) = (args[0] as usize, args[1]);
    let basis = MonomialBasis::new(h, n);
    let mut e = SparseEchelon::new(basis.len());
    let mut rows = Vec::new();
    for k in 1..=n / 2 {
        for m in monomials(h, n - k) {
            let mut row = Vec::new();
            for_each_sq_term(k, &m, |t| row.push(basis.index_of(&t).unwrap() as u32));
            rows.push(row);
        }
    }
    rows.reverse();
    for r in &rows {
        e.insert(r);
    }
    println!("h={h} n={n} dim={}", basis.len() - e.rank());
}
