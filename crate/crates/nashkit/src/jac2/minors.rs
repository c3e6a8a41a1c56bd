//! Enumeration of the maximal minors of the second Jacobian matrix.
//!
//! All `(n+1) x (n+1)` column selections are enumerated in lexicographic
//! order over column positions. Selections that force a zero determinant
//! are filtered first: two `b_0j` columns share their only nonzero row,
//! and a column index set missing some variable leaves a zero row.
//! Surviving selections go through the optimized determinant engine.

use itertools::Itertools;
use rayon::prelude::*;

use crate::gb::Ideal;
use crate::poly::Polynomial;

use super::labels::ColLabel;
use super::matrix::{build_jac2, Jacobian2Matrix};

/// One nonzero maximal minor.
#[derive(Clone, Debug)]
pub struct MinorRecord {
    pub selection: Vec<ColLabel>,
    pub det: Polynomial,
}

impl MinorRecord {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "selection": self.selection.iter().map(|c| [c.i(), c.j()]).collect::<Vec<_>>(),
            "det": self.det.to_string(),
        })
    }
}

/// Full enumeration summary.
#[derive(Clone, Debug)]
pub struct MinorEnumeration {
    pub n: usize,
    /// Number of column selections enumerated.
    pub total_selections: usize,
    /// Selections skipped by the zero-determinant prefilters.
    pub prefiltered: usize,
    /// Nonzero minors in enumeration order.
    pub nonzero: Vec<MinorRecord>,
}

fn selection_is_degenerate(n: usize, selection: &[ColLabel]) -> bool {
    let zero_columns = selection.iter().filter(|c| c.has_zero_index()).count();
    if zero_columns >= 2 {
        return true;
    }
    let mut covered = vec![false; n + 1];
    for c in selection {
        covered[c.i()] = true;
        covered[c.j()] = true;
    }
    (1..=n).any(|i| !covered[i])
}

/// Enumerate every maximal minor of the second Jacobian matrix of `f`.
pub fn enumerate_maximal_minors(f: &Polynomial) -> MinorEnumeration {
    let matrix = build_jac2(f);
    enumerate_from_matrix(&matrix)
}

pub fn enumerate_from_matrix(matrix: &Jacobian2Matrix) -> MinorEnumeration {
    let n = matrix.n();
    let rows = matrix.rows().to_vec();
    let selections: Vec<Vec<ColLabel>> = matrix
        .cols()
        .iter()
        .copied()
        .combinations(n + 1)
        .collect();
    let total_selections = selections.len();

    let results: Vec<Option<MinorRecord>> = selections
        .into_par_iter()
        .map(|selection| {
            if selection_is_degenerate(n, &selection) {
                return None;
            }
            let det = matrix.grid(&rows, &selection).det();
            if det.is_zero() {
                None
            } else {
                Some(MinorRecord { selection, det })
            }
        })
        .collect();

    let mut prefiltered = 0;
    let mut nonzero = Vec::new();
    for r in results {
        match r {
            Some(rec) => nonzero.push(rec),
            None => prefiltered += 1,
        }
    }
    MinorEnumeration {
        n,
        total_selections,
        prefiltered,
        nonzero,
    }
}

impl MinorEnumeration {
    /// Generators of the second Jacobian ideal: nonzero minors with scalar
    /// multiples removed (first occurrence kept, sign as computed).
    pub fn ideal(&self) -> Ideal {
        let mut seen = std::collections::BTreeSet::new();
        let mut gens = Vec::new();
        for rec in &self.nonzero {
            let key = rec.det.monic_grevlex();
            if seen.insert(key) {
                gens.push(rec.det.clone());
            }
        }
        Ideal::new(self.n, gens)
    }
}

/// The second Jacobian ideal of `f`, generated by all maximal minors.
pub fn maximal_minors(f: &Polynomial) -> Ideal {
    enumerate_maximal_minors(f).ideal()
}

#[cfg(test)]
mod tests {
    use crate::gb::{GbCaps, MonomialOrder};
    use crate::poly::parse_poly_in_dim;

    use super::*;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_poly_in_dim(text, n).unwrap()
    }

    #[test]
    fn cusp_selection_count() {
        let e = enumerate_maximal_minors(&p("x^3 - y^2", 2));
        // C(5, 3) selections for n = 2.
        assert_eq!(e.total_selections, 10);
        assert!(e.nonzero.len() <= 10);
    }

    #[test]
    fn cusp_ideal_matches_reference_generators() {
        let order = MonomialOrder::grevlex(2);
        let caps = GbCaps::default();
        let j2 = maximal_minors(&p("x^3 - y^2", 2));
        let reference = Ideal::new(
            2,
            vec![
                p("x^6", 2),
                p("x^4*y", 2),
                p("x^2*y^2", 2),
                p("y^3", 2),
                p("4*x*y^2 - 3*x^4", 2),
            ],
        );
        assert!(j2.equal(&reference, &order, &caps).unwrap());
    }

    #[test]
    fn minor_determinants_match_oracle() {
        let f = p("x^3 - y^2 + x*y*z", 3);
        let matrix = build_jac2(&f);
        let rows = matrix.rows().to_vec();
        let e = enumerate_from_matrix(&matrix);
        for rec in e.nonzero.iter().take(20) {
            let oracle = matrix.grid(&rows, &rec.selection).det_cofactor();
            assert_eq!(rec.det, oracle);
        }
    }

    #[test]
    fn degenerate_prefilter_catches_zero_rows() {
        // n = 4 and columns over {1,2,3} only: row b4 is zero.
        let labels = [
            ColLabel::new(1, 1),
            ColLabel::new(1, 2),
            ColLabel::new(2, 2),
            ColLabel::new(2, 3),
            ColLabel::new(3, 3),
        ];
        assert!(selection_is_degenerate(4, &labels));
        // Two b_0j columns.
        let labels = [
            ColLabel::new(0, 1),
            ColLabel::new(0, 2),
            ColLabel::new(1, 2),
        ];
        assert!(selection_is_degenerate(2, &labels));
        let labels = [
            ColLabel::new(0, 1),
            ColLabel::new(1, 2),
            ColLabel::new(2, 2),
        ];
        assert!(!selection_is_degenerate(2, &labels));
    }

    #[test]
    fn single_variable_square() {
        // n = 1: one 2x2 minor, f1^2.
        let j2 = maximal_minors(&p("x^2", 1));
        assert_eq!(j2.generators(), &[p("4*x^2", 1)]);
    }
}
