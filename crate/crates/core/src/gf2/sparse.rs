use super::bitvec::{word_count, BitVector};

const NONE: u32 = u32::MAX;

/// Streaming row echelon for large sparse systems.
///
/// Rows are column lists; the pivot of a stored row is its largest column and
/// every other entry lies below it. Stored rows are not back-reduced, so
/// insertion cost stays proportional to the rows actually touched.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    n_cols: usize,
    row_of: Vec<u32>,
    rows: Vec<Box<[u32]>>,
    acc: Vec<u64>,
}

impl SparseEchelon {
    pub fn new(n_cols: usize) -> Self {
        SparseEchelon { n_cols, row_of: vec![NONE; n_cols], rows: Vec::new(), acc: vec![0; word_count(n_cols)] }
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.row_of[c] != NONE
    }

    /// Stored row whose pivot is `c`, ascending with `c` last.
    pub fn pivot_row(&self, c: usize) -> Option<&[u32]> {
        match self.row_of[c] {
            NONE => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    pub fn free_columns(&self) -> Vec<u32> {
        (0..self.n_cols as u32).filter(|&c| !self.is_pivot(c as usize)).collect()
    }

    pub fn stored_entries(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Inserts a row given by its columns (repeats cancel). Returns true when
    /// the rank grew.
    pub fn insert(&mut self, cols: &[u32]) -> bool {
        let Some(top) = load(&mut self.acc, cols) else { return false };
        let mut w = top >> 6;
        loop {
            while self.acc[w] == 0 {
                if w == 0 {
                    return false;
                }
                w -= 1;
            }
            let c = (w << 6) | (63 - self.acc[w].leading_zeros() as usize);
            match self.row_of[c] {
                NONE => {
                    let row = drain(&mut self.acc, w);
                    self.row_of[c] = self.rows.len() as u32;
                    self.rows.push(row.into_boxed_slice());
                    return true;
                }
                r => {
                    for &d in self.rows[r as usize].iter() {
                        self.acc[(d >> 6) as usize] ^= 1u64 << (d & 63);
                    }
                }
            }
        }
    }

    /// Reduces a row against every pivot; the result is supported on free
    /// columns only, and is zero exactly when the row lies in the span.
    pub fn reduce(&self, cols: &[u32]) -> Vec<u32> {
        let mut acc = vec![0u64; self.acc.len()];
        let Some(top) = load(&mut acc, cols) else { return Vec::new() };
        let mut out = Vec::new();
        let mut w = top >> 6;
        loop {
            while acc[w] == 0 {
                if w == 0 {
                    out.reverse();
                    return out;
                }
                w -= 1;
            }
            let c = (w << 6) | (63 - acc[w].leading_zeros() as usize);
            match self.row_of[c] {
                NONE => {
                    acc[w] ^= 1u64 << (c & 63);
                    out.push(c as u32);
                }
                r => {
                    for &d in self.rows[r as usize].iter() {
                        acc[(d >> 6) as usize] ^= 1u64 << (d & 63);
                    }
                }
            }
        }
    }

    pub fn contains(&self, cols: &[u32]) -> bool {
        self.reduce(cols).is_empty()
    }

    /// Normal form of every column modulo the span, written over the free
    /// columns (in increasing order).
    pub fn normal_forms(&self) -> NormalForms {
        let free = self.free_columns();
        let mut index = vec![NONE; self.n_cols];
        for (i, &c) in free.iter().enumerate() {
            index[c as usize] = i as u32;
        }
        let stride = word_count(free.len());
        let mut table = vec![0u64; stride * self.n_cols];
        for c in 0..self.n_cols {
            let (done, rest) = table.split_at_mut(c * stride);
            let target = &mut rest[..stride];
            match self.pivot_row(c) {
                None => {
                    let i = index[c] as usize;
                    target[i >> 6] |= 1u64 << (i & 63);
                }
                Some(row) => {
                    for &d in &row[..row.len() - 1] {
                        let src = &done[d as usize * stride..(d as usize + 1) * stride];
                        for (t, s) in target.iter_mut().zip(src) {
                            *t ^= s;
                        }
                    }
                }
            }
        }
        NormalForms { free, index, stride, table }
    }

    /// Basis of `{x : r · x = 0 for every inserted row r}`, one vector per free column.
    pub fn null_space(&self) -> Vec<BitVector> {
        let nf = self.normal_forms();
        let mut out: Vec<BitVector> = (0..nf.dim()).map(|_| BitVector::zeros(self.n_cols)).collect();
        for c in 0..self.n_cols {
            for (wi, &w) in nf.words(c).iter().enumerate() {
                let mut x = w;
                while x != 0 {
                    let f = wi * 64 + x.trailing_zeros() as usize;
                    out[f].set(c, true);
                    x &= x - 1;
                }
            }
        }
        out
    }
}

fn load(acc: &mut [u64], cols: &[u32]) -> Option<usize> {
    let mut top = None;
    for &c in cols {
        acc[(c >> 6) as usize] ^= 1u64 << (c & 63);
        top = top.max(Some(c as usize));
    }
    top
}

/// Empties `acc[..=w]`, returning its ones in increasing order.
fn drain(acc: &mut [u64], w: usize) -> Vec<u32> {
    let mut out = Vec::new();
    for (wi, word) in acc[..=w].iter_mut().enumerate() {
        let mut x = *word;
        *word = 0;
        while x != 0 {
            out.push((wi * 64) as u32 + x.trailing_zeros());
            x &= x - 1;
        }
    }
    out
}

/// Dense table of normal forms, one bit row per column of the ambient space.
#[derive(Clone, Debug)]
pub struct NormalForms {
    free: Vec<u32>,
    index: Vec<u32>,
    stride: usize,
    table: Vec<u64>,
}

impl NormalForms {
    pub fn free_columns(&self) -> &[u32] {
        &self.free
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Position of a free column in `free_columns`.
    pub fn free_index(&self, c: usize) -> Option<usize> {
        match self.index[c] {
            NONE => None,
            i => Some(i as usize),
        }
    }

    pub fn words(&self, c: usize) -> &[u64] {
        &self.table[c * self.stride..(c + 1) * self.stride]
    }

    /// Normal form of the sum of the given columns.
    pub fn reduce(&self, cols: &[u32]) -> BitVector {
        let mut out = vec![0u64; self.stride];
        for &c in cols {
            for (o, s) in out.iter_mut().zip(self.words(c as usize)) {
                *o ^= s;
            }
        }
        BitVector::from_words(self.free.len(), out)
    }

    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_words(self.free.len(), self.words(c).to_vec())
    }
}
