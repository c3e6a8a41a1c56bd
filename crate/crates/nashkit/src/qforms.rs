//! Q-generators and the decomposition of the second Jacobian ideal as
//! the sum of a Jacobian-ideal power and a Q-ideal multiple.

use serde::Serialize;

use crate::gb::{GbCaps, GbError, Ideal, MonomialOrder};
use crate::jac2::maximal_minors;
use crate::poly::Polynomial;

/// The quadri-indexed generator
/// `f_ik*f_j*f_l - f_jk*f_i*f_l - f_il*f_j*f_k + f_jl*f_i*f_k`
/// for arbitrary indices in `1..=n`.
pub fn q_polynomial(f: &Polynomial, i: usize, j: usize, k: usize, l: usize) -> Polynomial {
    let n = f.num_vars();
    for idx in [i, j, k, l] {
        assert!(idx >= 1 && idx <= n, "index {idx} out of range 1..={n}");
    }
    let d = |a: usize| f.derivative(a);
    let dd = |a: usize, b: usize| f.derivative(a).derivative(b);
    let t1 = &(&dd(i, k) * &d(j)) * &d(l);
    let t2 = &(&dd(j, k) * &d(i)) * &d(l);
    let t3 = &(&dd(i, l) * &d(j)) * &d(k);
    let t4 = &(&dd(j, l) * &d(i)) * &d(k);
    &(&t1 - &t2) - &(&t3 - &t4)
}

/// Canonical index of a Q-generator: `i < j`, `k < l`, and
/// `(i, j) <= (k, l)`; every other index tuple gives the same generator
/// up to sign or zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QIndex {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl QIndex {
    pub fn new(i: usize, j: usize, k: usize, l: usize) -> Self {
        let (i, j) = (i.min(j), i.max(j));
        let (k, l) = (k.min(l), k.max(l));
        if (i, j) <= (k, l) {
            QIndex { i, j, k, l }
        } else {
            QIndex { i: k, j: l, k: i, l: j }
        }
    }
}

/// All canonical Q-indices for dimension `n`.
pub fn canonical_q_indices(n: usize) -> Vec<QIndex> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j));
        }
    }
    let mut out = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[a..] {
            out.push(QIndex { i, j, k, l });
        }
    }
    out
}

/// Generator for a canonical index.
pub fn q_generator(f: &Polynomial, q: QIndex) -> Polynomial {
    q_polynomial(f, q.i, q.j, q.k, q.l)
}

/// The ideal generated by all Q-generators. Empty (zero ideal) when
/// `n < 2`, where no index pair exists.
pub fn q_ideal(f: &Polynomial) -> Ideal {
    let n = f.num_vars();
    Ideal::new(
        n,
        canonical_q_indices(n)
            .into_iter()
            .map(|q| q_generator(f, q))
            .collect(),
    )
}

/// The Jacobian ideal, generated by the first partials.
pub fn jacobian_ideal(f: &Polynomial) -> Ideal {
    let n = f.num_vars();
    Ideal::new(n, (1..=n).map(|k| f.derivative(k)).collect())
}

/// Right-hand side of the decomposition: all degree-(n+1) products of
/// the first partials together with all products of `n-2` first partials
/// with a Q-generator. For `n = 2` the power factor is the unit ideal,
/// so the Q-generators appear verbatim.
pub fn rhs_decomposition(f: &Polynomial) -> Ideal {
    let n = f.num_vars();
    assert!(n >= 2, "the decomposition needs at least two variables");
    let j1 = jacobian_ideal(f);
    let power_part = j1.power(n as u32 + 1);
    let q_part = j1.power(n as u32 - 2).product(&q_ideal(f));
    power_part.sum(&q_part)
}

/// Report of a decomposition check, JSON-shaped as
/// `{verdict, j2_gb, rhs_gb, missing_in_rhs, missing_in_j2}`.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub verdict: bool,
    pub j2_gb: Vec<String>,
    pub rhs_gb: Vec<String>,
    /// Second-Jacobian generators that fail membership in the right-hand
    /// side; empty on success.
    pub missing_in_rhs: Vec<String>,
    /// Right-hand-side generators that fail membership in the second
    /// Jacobian ideal; empty on success.
    pub missing_in_j2: Vec<String>,
}

/// Check that the second Jacobian ideal equals the decomposition
/// right-hand side, with membership certificates in both directions.
pub fn verify_decomposition(
    f: &Polynomial,
    order: &MonomialOrder,
    caps: &GbCaps,
) -> Result<DecompositionReport, GbError> {
    let j2 = maximal_minors(f);
    let rhs = rhs_decomposition(f);
    let j2_gb = j2.groebner(order, caps)?;
    let rhs_gb = rhs.groebner(order, caps)?;

    let missing_in_rhs: Vec<String> = j2
        .generators()
        .iter()
        .filter(|g| !rhs_gb.contains(g))
        .map(|g| g.to_string())
        .collect();
    let missing_in_j2: Vec<String> = rhs
        .generators()
        .iter()
        .filter(|g| !j2_gb.contains(g))
        .map(|g| g.to_string())
        .collect();
    let verdict = j2_gb.elements() == rhs_gb.elements();

    Ok(DecompositionReport {
        verdict,
        j2_gb: j2_gb.elements().iter().map(|g| g.to_string()).collect(),
        rhs_gb: rhs_gb.elements().iter().map(|g| g.to_string()).collect(),
        missing_in_rhs,
        missing_in_j2,
    })
}

#[cfg(test)]
mod tests {
    use crate::poly::{parse_poly_in_dim, random_poly};

    use super::*;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_poly_in_dim(text, n).unwrap()
    }

    #[test]
    fn cusp_q_generator() {
        let f = p("x^3 - y^2", 2);
        assert_eq!(
            q_polynomial(&f, 1, 2, 1, 2),
            p("24*x*y^2 - 18*x^4", 2)
        );
    }

    #[test]
    fn q_vanishes_on_repeated_pair() {
        for seed in 0..10 {
            let f = random_poly(3, 4, 5, seed);
            assert!(q_polynomial(&f, 2, 2, 1, 3).is_zero());
            assert!(q_polynomial(&f, 1, 3, 2, 2).is_zero());
        }
    }

    #[test]
    fn q_antisymmetry_and_pair_swap() {
        for seed in 0..10 {
            let f = random_poly(4, 3, 6, seed);
            let q = q_polynomial(&f, 1, 2, 3, 4);
            assert_eq!(q_polynomial(&f, 2, 1, 3, 4), -q.clone());
            assert_eq!(q_polynomial(&f, 1, 2, 4, 3), -q.clone());
            assert_eq!(q_polynomial(&f, 2, 1, 4, 3), q);
            assert_eq!(q_polynomial(&f, 3, 4, 1, 2), q_polynomial(&f, 1, 2, 3, 4));
        }
    }

    #[test]
    fn canonical_index_counts() {
        assert_eq!(canonical_q_indices(2).len(), 1);
        assert_eq!(canonical_q_indices(3).len(), 6);
        assert_eq!(canonical_q_indices(1).len(), 0);
    }

    #[test]
    fn low_dimension_gives_zero_ideal() {
        let f = p("x^3", 1);
        assert!(q_ideal(&f).is_zero_ideal());
    }

    #[test]
    fn rhs_for_two_variables_contains_q_verbatim() {
        let f = p("x^3 - y^2", 2);
        let rhs = rhs_decomposition(&f);
        let q = q_polynomial(&f, 1, 2, 1, 2);
        assert!(rhs.generators().contains(&q));
    }

    #[test]
    fn rhs_generator_count_for_three_variables() {
        // Power part: multisets of size 4 from 3 partials = C(6,2) = 15.
        // Q part: 3 partials times at most 6 canonical Q-generators.
        let f = p("x^4 + y^4 + z^4 + x*y*z", 3);
        let j1 = jacobian_ideal(&f);
        assert_eq!(j1.power(4).generators().len(), 15);
        let rhs = rhs_decomposition(&f);
        assert!(rhs.generators().len() <= 15 + 18);
        assert!(rhs.generators().len() >= 15);
    }

    #[test]
    fn cusp_decomposition_verdict() {
        let f = p("x^3 - y^2", 2);
        let report =
            verify_decomposition(&f, &MonomialOrder::grevlex(2), &GbCaps::default()).unwrap();
        assert!(report.verdict);
        assert!(report.missing_in_rhs.is_empty());
        assert!(report.missing_in_j2.is_empty());
    }

    #[test]
    fn non_isolated_singularity_still_decomposes() {
        let f = p("x^2*y", 2);
        let report =
            verify_decomposition(&f, &MonomialOrder::grevlex(2), &GbCaps::default()).unwrap();
        assert!(report.verdict);
    }
}
