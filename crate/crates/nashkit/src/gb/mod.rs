//! Groebner machinery over the rationals: monomial orders, division with
//! cofactors, Buchberger's algorithm with reduced output, ideal algebra,
//! staircases, and local quotient dimensions with a Nakayama-style
//! certificate.

mod buchberger;
mod divide;
mod engine;
mod ideal;
mod local;
mod order;
mod staircase;

pub use buchberger::{groebner, GbCaps, GbError, GroebnerBasis};
pub use divide::{divide, Division};
pub use ideal::Ideal;
pub use local::{local_dimension, maximal_ideal_power, LocalConfig, LocalDimension, LocalError};
pub use order::{MonomialOrder, OrderKind};
pub use staircase::{staircase, Staircase};

use crate::poly::Polynomial;

/// Remainder of `p` under division by the basis.
pub fn normal_form(p: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    basis.normal_form(p)
}
