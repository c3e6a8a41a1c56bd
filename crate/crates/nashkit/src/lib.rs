//! Exact computation with second Jacobian matrices of polynomial
//! hypersurfaces: the labeled matrix and its maximal-minor ideal, the
//! decomposition of that ideal through Q-generators, a reduced Groebner
//! engine over the rationals, and second Nash blow-up local algebras with
//! contact-invariance experiments.

pub mod gb;
pub mod jac2;
pub mod nash;
pub mod poly;
pub mod qforms;

pub use poly::{Monomial, PolyMap, Polynomial, Rational};
