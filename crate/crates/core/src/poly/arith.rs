use std::sync::OnceLock;

/// Binomial coefficient mod 2, zero outside `0 <= b <= a`.
pub fn binom2(a: i64, b: i64) -> bool {
    a >= 0 && b >= 0 && b <= a && (a & b) == b
}

/// Number of ones in the binary expansion.
pub fn alpha(n: u64) -> u32 {
    n.count_ones()
}

const MU_TABLE: usize = 4096;

/// Least number of parts of the form `2^u - 1` (u >= 1) summing to `n`.
pub fn mu(n: u32) -> u32 {
    static TABLE: OnceLock<Vec<u32>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = vec![u32::MAX; MU_TABLE];
        t[0] = 0;
        for m in 1..MU_TABLE {
            let mut part = 1usize;
            while part <= m {
                t[m] = t[m].min(t[m - part] + 1);
                part = 2 * part + 1;
            }
        }
        t
    });
    if (n as usize) < MU_TABLE {
        return table[n as usize];
    }
    // Large degrees: peel off the greatest part until the table applies.
    let mut best = u32::MAX;
    let mut part = 1u32;
    while part <= n {
        best = best.min(mu(n - part) + 1);
        part = 2 * part + 1;
    }
    best
}
