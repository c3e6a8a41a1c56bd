//! The labeled second Jacobian matrix and labeled submatrices of it.

use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{rat, Polynomial};

use super::det::PolyMatrix;
use super::labels::{column_labels, row_labels, ColLabel, RowLabel};

/// The second Jacobian matrix of a polynomial: `n + 1` rows labeled
/// `b_0..b_n` and `n + n(n+1)/2` columns labeled `b_01..b_nn`. The
/// `(b_k, b_ij)` entry (with `i <= j`) is
///
/// * `1/2 * f_ii`  if `k = 0` and `i = j`,
/// * `f_ij`        if `k = 0` and `i != j` (so `f_j` in column `b_0j`),
/// * `f_j`         if `k = i >= 1`,
/// * `f_i`         if `k = j >= 1` and `i > 0`,
/// * `0`           otherwise,
///
/// where `f_k` and `f_ij` are first and second partials. Every column has
/// at most three nonzero entries.
#[derive(Clone, Debug)]
pub struct Jacobian2Matrix {
    n: usize,
    rows: Vec<RowLabel>,
    cols: Vec<ColLabel>,
    entries: Vec<Vec<Polynomial>>,
}

/// Construct the second Jacobian matrix of `f`.
pub fn build_jac2(f: &Polynomial) -> Jacobian2Matrix {
    let n = f.num_vars();
    assert!(n >= 1, "need at least one variable");
    let first: Vec<Polynomial> = (1..=n).map(|k| f.derivative(k)).collect();
    let second: Vec<Vec<Polynomial>> = (1..=n)
        .map(|i| (1..=n).map(|j| first[i - 1].derivative(j)).collect())
        .collect();

    let rows = row_labels(n);
    let cols = column_labels(n);
    let entries = rows
        .iter()
        .map(|&RowLabel(k)| {
            cols.iter()
                .map(|c| {
                    let (i, j) = (c.i(), c.j());
                    if k == 0 {
                        if i == j {
                            second[i - 1][j - 1].scale(&rat(1, 2))
                        } else if i == 0 {
                            first[j - 1].clone()
                        } else {
                            second[i - 1][j - 1].clone()
                        }
                    } else if k == i {
                        first[j - 1].clone()
                    } else if k == j && i > 0 {
                        first[i - 1].clone()
                    } else {
                        Polynomial::zero(n)
                    }
                })
                .collect()
        })
        .collect();

    Jacobian2Matrix {
        n,
        rows,
        cols,
        entries,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectionError {
    UnknownLabel(String),
    DuplicateLabel(String),
}

impl fmt::Display for SelectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelectionError::UnknownLabel(l) => write!(f, "unknown label {l}"),
            SelectionError::DuplicateLabel(l) => write!(f, "duplicate label {l}"),
        }
    }
}

impl std::error::Error for SelectionError {}

impl Jacobian2Matrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[RowLabel] {
        &self.rows
    }

    pub fn cols(&self) -> &[ColLabel] {
        &self.cols
    }

    pub fn entry(&self, row: RowLabel, col: ColLabel) -> &Polynomial {
        let r = row.0;
        let c = self
            .cols
            .iter()
            .position(|&x| x == col)
            .unwrap_or_else(|| panic!("unknown column {col}"));
        &self.entries[r][c]
    }

    /// Labeled submatrix; the selections are stored in parent order.
    pub fn submatrix(
        &self,
        rows: &[RowLabel],
        cols: &[ColLabel],
    ) -> Result<LabeledSubmatrix, SelectionError> {
        let mut row_sel = rows.to_vec();
        row_sel.sort();
        for w in row_sel.windows(2) {
            if w[0] == w[1] {
                return Err(SelectionError::DuplicateLabel(w[0].to_string()));
            }
        }
        if row_sel.iter().any(|r| r.0 > self.n) {
            let bad = row_sel.iter().find(|r| r.0 > self.n).unwrap();
            return Err(SelectionError::UnknownLabel(bad.to_string()));
        }
        let mut col_sel = cols.to_vec();
        col_sel.sort();
        for w in col_sel.windows(2) {
            if w[0] == w[1] {
                return Err(SelectionError::DuplicateLabel(w[0].to_string()));
            }
        }
        if let Some(bad) = col_sel.iter().find(|c| c.j() > self.n) {
            return Err(SelectionError::UnknownLabel(bad.to_string()));
        }
        let entries = row_sel
            .iter()
            .map(|&r| col_sel.iter().map(|&c| self.entry(r, c).clone()).collect())
            .collect();
        Ok(LabeledSubmatrix {
            n: self.n,
            rows: row_sel,
            cols: col_sel,
            entries,
        })
    }

    /// Plain grid of entries in exactly the given label order (labels may
    /// repeat); used to build the structured matrices of the identity
    /// harness, where row and column positions carry signs.
    pub fn grid(&self, rows: &[RowLabel], cols: &[ColLabel]) -> PolyMatrix {
        let data = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.entry(r, c).clone()))
            .collect();
        PolyMatrix::new(self.n, rows.len(), cols.len(), data)
    }

    /// JSON emission: `{n, rows, cols, entries}` with entries as
    /// polynomial strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "rows": self.rows.iter().map(|r| r.0).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(|c| [c.i(), c.j()]).collect::<Vec<_>>(),
            "entries": self
                .entries
                .iter()
                .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// The entry pattern of the matrix with symbolic first and second partials
/// `f_k`, `f_kl`, for rendering without a concrete polynomial.
pub fn symbolic_entries(n: usize) -> Vec<Vec<String>> {
    let rows = row_labels(n);
    let cols = column_labels(n);
    rows.iter()
        .map(|&RowLabel(k)| {
            cols.iter()
                .map(|c| {
                    let (i, j) = (c.i(), c.j());
                    if k == 0 {
                        if i == j {
                            format!("1/2*f_{i}{j}")
                        } else if i == 0 {
                            format!("f_{j}")
                        } else {
                            format!("f_{i}{j}")
                        }
                    } else if k == i {
                        format!("f_{j}")
                    } else if k == j && i > 0 {
                        format!("f_{i}")
                    } else {
                        "0".to_string()
                    }
                })
                .collect()
        })
        .collect()
}

/// A square or rectangular selection of rows and columns of a second
/// Jacobian matrix, with its labels.
#[derive(Clone, Debug)]
pub struct LabeledSubmatrix {
    n: usize,
    rows: Vec<RowLabel>,
    cols: Vec<ColLabel>,
    entries: Vec<Vec<Polynomial>>,
}

impl LabeledSubmatrix {
    pub(crate) fn from_parts(
        n: usize,
        rows: Vec<RowLabel>,
        cols: Vec<ColLabel>,
        entries: Vec<Vec<Polynomial>>,
    ) -> Self {
        LabeledSubmatrix {
            n,
            rows,
            cols,
            entries,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[RowLabel] {
        &self.rows
    }

    pub fn cols(&self) -> &[ColLabel] {
        &self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r][c]
    }

    /// Frequency of `index` among the column labels, counting `b_ii` twice.
    pub fn frequency(&self, index: usize) -> usize {
        self.cols.iter().map(|c| c.multiplicity(index)).sum()
    }

    /// Frequencies of every index occurring in the column labels.
    pub fn frequency_map(&self) -> BTreeMap<usize, usize> {
        let mut map = BTreeMap::new();
        for c in &self.cols {
            *map.entry(c.i()).or_insert(0) += 1;
            *map.entry(c.j()).or_insert(0) += 1;
        }
        map
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix {
        PolyMatrix::new(
            self.n,
            self.rows.len(),
            self.cols.len(),
            self.entries.iter().flatten().cloned().collect(),
        )
    }
}
