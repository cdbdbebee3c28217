//! Computations for the mod-2 hit problem, the lambda algebra and the
//! algebraic transfer.

pub mod dual;
pub mod error;
pub mod gf2;
pub mod group;
pub mod hit;
pub mod kameko;
pub mod lambda;
pub mod poly;

pub use error::{Error, Result};
