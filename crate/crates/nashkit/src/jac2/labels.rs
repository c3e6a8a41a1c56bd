//! Row and column labels of the second Jacobian matrix.

use std::fmt;

/// Row label `b_k` with `0 <= k <= n`; `b_0` marks the zero multi-index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowLabel(pub usize);

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.0)
    }
}

/// Column label `b_ij = b_i + b_j`, canonicalized so `i <= j`; `b_ji` is
/// identified with `b_ij`. `(0, 0)` is not a column label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColLabel {
    i: usize,
    j: usize,
}

impl ColLabel {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != 0 || j != 0, "(0, 0) is not a column label");
        ColLabel {
            i: i.min(j),
            j: i.max(j),
        }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn is_square(&self) -> bool {
        self.i == self.j
    }

    /// True for `b_0j` columns.
    pub fn has_zero_index(&self) -> bool {
        self.i == 0
    }

    /// Occurrences of `index` in the label, counting `b_ii` twice.
    pub fn multiplicity(&self, index: usize) -> usize {
        usize::from(self.i == index) + usize::from(self.j == index)
    }

    /// The index paired with `index`, if `index` occurs in the label.
    pub fn partner(&self, index: usize) -> Option<usize> {
        if self.i == index {
            Some(self.j)
        } else if self.j == index {
            Some(self.i)
        } else {
            None
        }
    }
}

impl fmt::Display for ColLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}{}", self.i, self.j)
    }
}

/// All row labels `b_0..b_n`.
pub fn row_labels(n: usize) -> Vec<RowLabel> {
    (0..=n).map(RowLabel).collect()
}

/// All column labels in their listed order: `b_01..b_0n`, then `b_11..b_1n`,
/// `b_22..b_2n`, ..., `b_nn` (graded lexicographic).
pub fn column_labels(n: usize) -> Vec<ColLabel> {
    let mut cols = Vec::with_capacity(n + n * (n + 1) / 2);
    for j in 1..=n {
        cols.push(ColLabel::new(0, j));
    }
    for i in 1..=n {
        for j in i..=n {
            cols.push(ColLabel::new(i, j));
        }
    }
    cols
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization_identifies_transposes() {
        assert_eq!(ColLabel::new(3, 1), ColLabel::new(1, 3));
    }

    #[test]
    fn listed_order_for_n3() {
        let names: Vec<String> = column_labels(3).iter().map(|c| c.to_string()).collect();
        assert_eq!(
            names,
            ["b01", "b02", "b03", "b11", "b12", "b13", "b22", "b23", "b33"]
        );
    }

    #[test]
    fn column_count_matches_shape() {
        for n in 1..=8 {
            assert_eq!(column_labels(n).len(), n + n * (n + 1) / 2);
        }
    }

    #[test]
    fn multiplicity_counts_squares_twice() {
        assert_eq!(ColLabel::new(1, 1).multiplicity(1), 2);
        assert_eq!(ColLabel::new(1, 4).multiplicity(1), 1);
        assert_eq!(ColLabel::new(1, 4).multiplicity(2), 0);
    }
}
