//! The polynomial algebra Z/2[t_1..t_h] with its Steenrod action.

mod arith;
mod maps;
mod monomial;
mod polynomial;
mod spike;
mod steenrod;
mod weight;

pub use arith::{alpha, binom2, mu};
pub use maps::VariableMap;
pub use monomial::{monomial_count, monomials, Monomial, MAX_VARS};
pub(crate) use monomial::parse_tuple;
pub use polynomial::Polynomial;
pub use spike::minimal_spike;
pub use steenrod::{for_each_sq_term, sq, sq_monomial};
pub use weight::WeightVector;
