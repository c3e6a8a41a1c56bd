//! Dimension of a local quotient ring by truncation.
//!
//! For an ideal I whose generators vanish at the origin, the dimension of
//! the local ring modulo I is computed through the augmented ideals
//! I + m^N for doubling truncation levels N until the dimension
//! stabilizes. The stabilized value is then certified by the inclusion
//! m^N ⊆ I + m^(N+1): it forces m^N into I locally, so the truncated
//! staircase is the true one. An answer that fails certification within
//! the level cap is reported as uncertified, never as exact.

use std::fmt;

use num_traits::Zero;

use crate::poly::{Monomial, Polynomial};

use super::buchberger::{GbCaps, GbError, GroebnerBasis};
use super::ideal::Ideal;
use super::order::MonomialOrder;
use super::staircase::{staircase, Staircase};

#[derive(Clone, Debug)]
pub struct LocalConfig {
    pub caps: GbCaps,
    /// Largest truncation level attempted.
    pub level_cap: u32,
}

impl Default for LocalConfig {
    fn default() -> Self {
        LocalConfig {
            caps: GbCaps::default(),
            level_cap: 32,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalError {
    /// A generator with a nonzero constant term is a local unit; the
    /// quotient would be zero and the call is almost surely a mistake.
    NonVanishingGenerator { generator: String },
    /// Truncation needs a degree-compatible order.
    OrderNotGraded,
    Gb(GbError),
}

impl fmt::Display for LocalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalError::NonVanishingGenerator { generator } => {
                write!(f, "generator '{generator}' does not vanish at the origin")
            }
            LocalError::OrderNotGraded => {
                write!(f, "local dimension requires a degree-compatible monomial order")
            }
            LocalError::Gb(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LocalError {}

impl From<GbError> for LocalError {
    fn from(e: GbError) -> Self {
        LocalError::Gb(e)
    }
}

/// Outcome of a local dimension computation.
#[derive(Clone, Debug)]
pub struct LocalDimension {
    /// Certified dimension, or the value reached at the level cap.
    pub dim: usize,
    /// Truncation level the result was (or failed to be) certified at.
    pub level: u32,
    pub certified: bool,
    pub staircase: Staircase,
}

fn monomial_poly(m: Monomial) -> Polynomial {
    Polynomial::from_term(m, crate::poly::int(1))
}

/// Generators of m^degree: every monomial of that total degree.
pub fn maximal_ideal_power(n: usize, degree: u32) -> Ideal {
    Ideal::new(
        n,
        Monomial::all_of_degree(n, degree as u16)
            .into_iter()
            .map(monomial_poly)
            .collect(),
    )
}

/// The verified inclusion m^level ⊆ I + m^(level+1): every monomial of
/// total degree `level` reduces to zero.
fn certify(ideal: &Ideal, level: u32, order: &MonomialOrder, caps: &GbCaps) -> Result<bool, GbError> {
    let n = ideal.num_vars();
    let augmented = ideal.sum(&maximal_ideal_power(n, level + 1));
    let basis = augmented.groebner(order, caps)?;
    Ok(Monomial::all_of_degree(n, level as u16)
        .into_iter()
        .all(|m| basis.contains(&monomial_poly(m))))
}

/// Dimension of the local ring at the origin modulo `ideal`.
pub fn local_dimension(
    ideal: &Ideal,
    order: &MonomialOrder,
    config: &LocalConfig,
) -> Result<LocalDimension, LocalError> {
    if !order.is_degree_compatible() {
        return Err(LocalError::OrderNotGraded);
    }
    for g in ideal.generators() {
        if !g.constant_term().is_zero() {
            return Err(LocalError::NonVanishingGenerator {
                generator: g.to_string(),
            });
        }
    }

    let n = ideal.num_vars();
    let mut previous: Option<(u32, usize, GroebnerBasis)> = None;
    let mut level = 2u32;
    while level <= config.level_cap {
        let augmented = ideal.sum(&maximal_ideal_power(n, level));
        let basis = augmented.groebner(order, &config.caps)?;
        let dim = staircase(&basis, level).dimension();

        if let Some((prev_level, prev_dim, prev_basis)) = &previous {
            if *prev_dim == dim && certify(ideal, *prev_level, order, &config.caps)? {
                return Ok(LocalDimension {
                    dim,
                    level: *prev_level,
                    certified: true,
                    staircase: staircase(prev_basis, *prev_level),
                });
            }
        }
        previous = Some((level, dim, basis));
        level *= 2;
    }

    let (level, dim, basis) = previous.expect("level cap below the first truncation level");
    Ok(LocalDimension {
        dim,
        level,
        certified: false,
        staircase: staircase(&basis, level),
    })
}
