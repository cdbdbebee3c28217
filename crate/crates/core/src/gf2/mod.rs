//! Linear algebra over GF(2).

mod bitvec;
mod echelon;
mod sparse;

pub use bitvec::BitVector;
pub use echelon::{kernel_basis, rank, ColumnPriority, Echelon, Insertion, Reduction};
pub use sparse::{NormalForms, SparseEchelon};
