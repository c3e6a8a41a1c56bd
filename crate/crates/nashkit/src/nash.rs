//! Second Nash blow-up local algebras and contact-invariance experiments.
//!
//! For a polynomial germ with an isolated singularity at the origin, the
//! second Nash blow-up local algebra is the local quotient by the germ
//! together with its second Jacobian ideal. Its dimension and Hilbert
//! function are computed with the certified local-dimension engine and
//! compared across contact transformations `u * (F o phi)` for polynomial
//! units `u` and polynomial coordinate changes `phi` with polynomial
//! inverses, so every computation stays exact.

use std::fmt;

use num_traits::Zero;

use serde::Serialize;

use crate::gb::{local_dimension, Ideal, LocalConfig, LocalDimension, LocalError, MonomialOrder};
use crate::jac2::maximal_minors;
use crate::poly::{format_monomial, PolyMap, Polynomial};
use crate::qforms::jacobian_ideal;

#[derive(Debug, Clone)]
pub enum NashError {
    /// Some first partial does not vanish at the origin.
    SmoothAtOrigin,
    /// The polynomial does not vanish at the origin.
    NotAGerm,
    /// The Milnor number did not certify as finite.
    NonIsolatedSingularity,
    InvalidContactDatum(String),
    Local(LocalError),
}

impl fmt::Display for NashError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NashError::SmoothAtOrigin => write!(f, "the polynomial is smooth at the origin"),
            NashError::NotAGerm => write!(f, "the polynomial does not vanish at the origin"),
            NashError::NonIsolatedSingularity => {
                write!(f, "the singularity at the origin is not isolated")
            }
            NashError::InvalidContactDatum(msg) => write!(f, "invalid contact datum: {msg}"),
            NashError::Local(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for NashError {}

impl From<LocalError> for NashError {
    fn from(e: LocalError) -> Self {
        NashError::Local(e)
    }
}

/// Milnor number, or the signal that it failed to certify as finite
/// within the truncation-level cap (a non-isolated singularity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MilnorNumber {
    Finite(usize),
    Infinite,
}

impl MilnorNumber {
    pub fn is_finite(&self) -> bool {
        matches!(self, MilnorNumber::Finite(_))
    }
}

fn gradient_vanishes_at_origin(f: &Polynomial) -> bool {
    (1..=f.num_vars()).all(|k| f.derivative(k).constant_term().is_zero())
}

/// Milnor number of `f` at the origin: the local dimension of the
/// Jacobian ideal. Requires a singular point (all first partials vanish
/// at 0); finiteness is the isolatedness gate for everything downstream.
pub fn milnor_number(
    f: &Polynomial,
    order: &MonomialOrder,
    config: &LocalConfig,
) -> Result<MilnorNumber, NashError> {
    if !gradient_vanishes_at_origin(f) {
        return Err(NashError::SmoothAtOrigin);
    }
    let out = local_dimension(&jacobian_ideal(f), order, config)?;
    Ok(if out.certified {
        MilnorNumber::Finite(out.dim)
    } else {
        MilnorNumber::Infinite
    })
}

/// Dimension, staircase, and Hilbert function of a second Nash blow-up
/// local algebra, with its certification data and the Milnor number of
/// the input.
#[derive(Clone, Debug, Serialize)]
pub struct NashReport {
    pub dim: usize,
    /// Truncation level of the certificate (or the cap when uncertified).
    pub level: u32,
    pub certified: bool,
    pub staircase: Vec<String>,
    pub hilbert: Vec<usize>,
    pub milnor: usize,
}

impl NashReport {
    fn from_local(local: &LocalDimension, n: usize, milnor: usize) -> Self {
        NashReport {
            dim: local.dim,
            level: local.level,
            certified: local.certified,
            staircase: local
                .staircase
                .standard
                .iter()
                .map(|m| format_monomial(n, m))
                .collect(),
            hilbert: local.staircase.hilbert.clone(),
            milnor,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim,
            "N": self.level,
            "certified": self.certified,
            "staircase": self.staircase,
            "hilbert": self.hilbert,
            "milnor": self.milnor,
        })
    }
}

fn validate_germ(f: &Polynomial) -> Result<(), NashError> {
    if !f.constant_term().is_zero() {
        return Err(NashError::NotAGerm);
    }
    if !gradient_vanishes_at_origin(f) {
        return Err(NashError::SmoothAtOrigin);
    }
    Ok(())
}

/// The second Nash blow-up local algebra of the hypersurface germ of `f`:
/// the local quotient by `f` together with its second Jacobian ideal.
pub fn nash_algebra2(
    f: &Polynomial,
    order: &MonomialOrder,
    config: &LocalConfig,
) -> Result<NashReport, NashError> {
    validate_germ(f)?;
    let MilnorNumber::Finite(milnor) = milnor_number(f, order, config)? else {
        return Err(NashError::NonIsolatedSingularity);
    };
    let mut gens = vec![f.clone()];
    gens.extend(maximal_minors(f).generators().iter().cloned());
    let ideal = Ideal::new(f.num_vars(), gens);
    let local = local_dimension(&ideal, order, config)?;
    Ok(NashReport::from_local(&local, f.num_vars(), milnor))
}

/// A contact datum: a polynomial unit (nonzero constant term) and a
/// coordinate change fixing the origin with invertible linear part.
#[derive(Clone, Debug)]
pub struct ContactDatum {
    unit: Polynomial,
    phi: PolyMap,
}

impl ContactDatum {
    pub fn new(unit: Polynomial, phi: PolyMap) -> Result<Self, NashError> {
        if unit.constant_term().is_zero() {
            return Err(NashError::InvalidContactDatum(
                "the unit has zero constant term".to_string(),
            ));
        }
        if !phi.fixes_origin() {
            return Err(NashError::InvalidContactDatum(
                "the coordinate change must fix the origin".to_string(),
            ));
        }
        if phi.linear_part_det().is_zero() {
            return Err(NashError::InvalidContactDatum(
                "the linear part of the coordinate change is degenerate".to_string(),
            ));
        }
        if unit.num_vars() != phi.ambient_dim() {
            return Err(NashError::InvalidContactDatum(
                "unit and coordinate change dimensions differ".to_string(),
            ));
        }
        Ok(ContactDatum { unit, phi })
    }

    pub fn identity(n: usize) -> Self {
        ContactDatum {
            unit: Polynomial::one(n),
            phi: PolyMap::identity(n),
        }
    }

    pub fn unit(&self) -> &Polynomial {
        &self.unit
    }

    pub fn phi(&self) -> &PolyMap {
        &self.phi
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "u": self.unit.to_string(),
            "phi": self
                .phi
                .components()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
        })
    }
}

/// `u * (f o phi)`, checked to be singular at the origin.
pub fn contact_transform(f: &Polynomial, datum: &ContactDatum) -> Result<Polynomial, NashError> {
    validate_germ(f)?;
    if datum.phi.dim() != f.num_vars() {
        return Err(NashError::InvalidContactDatum(
            "coordinate change dimension does not match the polynomial".to_string(),
        ));
    }
    let g = &datum.unit * &f.compose(&datum.phi);
    debug_assert!(g.constant_term().is_zero());
    debug_assert!(gradient_vanishes_at_origin(&g));
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Side-by-side comparison of the second Nash blow-up local algebras of a
/// germ and its contact transform.
#[derive(Clone, Debug)]
pub struct ContactReport {
    pub f: NashReport,
    pub g: NashReport,
    pub transformed: Polynomial,
    pub verdict: Verdict,
    pub datum: ContactDatum,
}

impl ContactReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "verdict": self.verdict.as_str(),
            "datum": self.datum.to_json(),
        })
    }
}

/// Compute both algebras and compare dimension and Hilbert function.
/// An uncertified side yields an inconclusive verdict, never a false one.
pub fn contact_invariance_report(
    f: &Polynomial,
    datum: &ContactDatum,
    order: &MonomialOrder,
    config: &LocalConfig,
) -> Result<ContactReport, NashError> {
    let g = contact_transform(f, datum)?;
    let report_f = nash_algebra2(f, order, config)?;
    let report_g = nash_algebra2(&g, order, config)?;
    let verdict = if !report_f.certified || !report_g.certified {
        Verdict::Inconclusive
    } else if report_f.dim == report_g.dim && report_f.hilbert == report_g.hilbert {
        Verdict::True
    } else {
        Verdict::False
    };
    Ok(ContactReport {
        f: report_f,
        g: report_g,
        transformed: g,
        verdict,
        datum: datum.clone(),
    })
}
