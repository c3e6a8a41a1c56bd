//! Block triangularization of square labeled submatrices.
//!
//! For a square submatrix whose rows are `b_0` plus the rows of its column
//! index set, diagonal blocks can be peeled off by row/column permutations:
//! first rows whose index occurs exactly once among the column labels, then
//! rows whose index occurs exactly twice but only inside its own square
//! label `b_ww`. What remains is the terminal block `D`; the determinant of
//! the source is the permutation parity times `det(D)` times the product of
//! the peeled diagonal entries.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::Polynomial;

use super::labels::{ColLabel, RowLabel};
use super::matrix::LabeledSubmatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisViolation(pub String);

impl fmt::Display for HypothesisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "block triangularization hypothesis violated: {}", self.0)
    }
}

impl std::error::Error for HypothesisViolation {}

/// One peeled diagonal block: row `t` pairs with column `t`.
#[derive(Clone, Debug)]
pub struct DiagonalBlock {
    pub rows: Vec<RowLabel>,
    pub cols: Vec<ColLabel>,
    pub diagonal: Vec<Polynomial>,
}

impl DiagonalBlock {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn det(&self) -> Polynomial {
        let n = self.diagonal[0].num_vars();
        self.diagonal
            .iter()
            .fold(Polynomial::one(n), |acc, d| &acc * d)
    }
}

/// Result of block triangularization.
///
/// Row permutation `row_order[t]` gives the source row position placed at
/// position `t` of the rearranged matrix; the terminal block sits top-left
/// and the first peeled block bottom-right. `parity` is the product of the
/// two permutation signs, so
/// `det(source) = parity * det(terminal) * prod(det(block))` exactly.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
    /// Peeled blocks in peel order; the first is the bottom-right one.
    pub blocks: Vec<DiagonalBlock>,
    pub terminal: LabeledSubmatrix,
    pub parity: i32,
    /// True when every nonzero row index of the terminal block occurs in
    /// at least two of its column labels (the generic situation; it can
    /// only fail when the source has two proportional rows and determinant
    /// zero).
    pub terminal_conforms: bool,
}

impl BlockDecomposition {
    /// `parity * det(terminal, by cofactor expansion) * prod(diagonals)`.
    pub fn determinant(&self) -> Polynomial {
        let mut det = self.terminal.to_poly_matrix().det_cofactor();
        for b in &self.blocks {
            det = &det * &b.det();
        }
        if self.parity < 0 {
            det = -det;
        }
        det
    }
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn frequencies(cols: &[ColLabel]) -> BTreeMap<usize, usize> {
    let mut map = BTreeMap::new();
    for c in cols {
        *map.entry(c.i()).or_insert(0) += 1;
        *map.entry(c.j()).or_insert(0) += 1;
    }
    map
}

/// Peel diagonal blocks from a square submatrix with rows `{b_0} u S` and
/// column indices exactly `S`.
pub fn block_triangularize(
    s: &LabeledSubmatrix,
) -> Result<BlockDecomposition, HypothesisViolation> {
    if !s.is_square() {
        return Err(HypothesisViolation(format!(
            "matrix is {}x{}, not square",
            s.rows().len(),
            s.cols().len()
        )));
    }
    if s.rows().first() != Some(&RowLabel(0)) {
        return Err(HypothesisViolation("row b0 is missing".to_string()));
    }
    if let Some(c) = s.cols().iter().find(|c| c.has_zero_index()) {
        return Err(HypothesisViolation(format!(
            "column {c} has index 0; column indices must be drawn from the nonzero row indices"
        )));
    }
    let row_set: Vec<usize> = s.rows().iter().skip(1).map(|r| r.0).collect();
    let col_index_set: Vec<usize> = {
        let mut v: Vec<usize> = s
            .cols()
            .iter()
            .flat_map(|c| [c.i(), c.j()])
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    if row_set != col_index_set {
        return Err(HypothesisViolation(format!(
            "nonzero row indices {row_set:?} differ from column index set {col_index_set:?}"
        )));
    }

    let mut live_rows: Vec<RowLabel> = s.rows().to_vec();
    let mut live_cols: Vec<ColLabel> = s.cols().to_vec();
    let mut blocks: Vec<DiagonalBlock> = Vec::new();

    let unique_col_of = |cols: &[ColLabel], idx: usize| -> ColLabel {
        *cols
            .iter()
            .find(|c| c.multiplicity(idx) > 0)
            .expect("index with frequency one has a hosting column")
    };

    loop {
        let freq = frequencies(&live_cols);
        let m_of = |idx: usize| freq.get(&idx).copied().unwrap_or(0);

        let singles: Vec<usize> = live_rows
            .iter()
            .skip(1)
            .map(|r| r.0)
            .filter(|&idx| m_of(idx) == 1)
            .collect();
        if !singles.is_empty() {
            let clean: Vec<usize> = singles
                .iter()
                .copied()
                .filter(|&idx| {
                    let partner = unique_col_of(&live_cols, idx).partner(idx).unwrap();
                    m_of(partner) >= 2
                })
                .collect();
            let chosen: Vec<usize> = if clean.is_empty() {
                // Two singletons share one column: the source rows are
                // proportional and the determinant is zero. Peel one of
                // them; its partner becomes a zero row of the terminal
                // block.
                vec![singles[0]]
            } else {
                clean
            };
            let block_cols: Vec<ColLabel> = chosen
                .iter()
                .map(|&idx| unique_col_of(&live_cols, idx))
                .collect();
            peel(s, &mut live_rows, &mut live_cols, &chosen, &block_cols, &mut blocks);
            continue;
        }

        let doubles: Vec<usize> = live_rows
            .iter()
            .skip(1)
            .map(|r| r.0)
            .filter(|&idx| m_of(idx) == 2 && live_cols.contains(&ColLabel::new(idx, idx)))
            .collect();
        if !doubles.is_empty() {
            let block_cols: Vec<ColLabel> = doubles
                .iter()
                .map(|&idx| ColLabel::new(idx, idx))
                .collect();
            peel(s, &mut live_rows, &mut live_cols, &doubles, &block_cols, &mut blocks);
            continue;
        }
        break;
    }

    // Terminal block, with rows and columns still in source order.
    let entries: Vec<Vec<Polynomial>> = live_rows
        .iter()
        .map(|r| {
            let rp = s.rows().iter().position(|x| x == r).unwrap();
            live_cols
                .iter()
                .map(|c| {
                    let cp = s.cols().iter().position(|x| x == c).unwrap();
                    s.entry(rp, cp).clone()
                })
                .collect()
        })
        .collect();
    let terminal =
        LabeledSubmatrix::from_parts(s.num_vars(), live_rows.clone(), live_cols.clone(), entries);

    let terminal_freq = frequencies(&live_cols);
    let terminal_conforms = live_rows
        .iter()
        .skip(1)
        .all(|r| terminal_freq.get(&r.0).copied().unwrap_or(0) >= 2);

    // Rearranged order: terminal first, then blocks from last peeled down
    // to the first, which lands bottom-right.
    let mut row_order: Vec<usize> = live_rows
        .iter()
        .map(|r| s.rows().iter().position(|x| x == r).unwrap())
        .collect();
    let mut col_order: Vec<usize> = live_cols
        .iter()
        .map(|c| s.cols().iter().position(|x| x == c).unwrap())
        .collect();
    for b in blocks.iter().rev() {
        row_order.extend(
            b.rows
                .iter()
                .map(|r| s.rows().iter().position(|x| x == r).unwrap()),
        );
        col_order.extend(
            b.cols
                .iter()
                .map(|c| s.cols().iter().position(|x| x == c).unwrap()),
        );
    }
    let parity = permutation_sign(&row_order) * permutation_sign(&col_order);

    Ok(BlockDecomposition {
        row_order,
        col_order,
        blocks,
        terminal,
        parity,
        terminal_conforms,
    })
}

fn peel(
    s: &LabeledSubmatrix,
    live_rows: &mut Vec<RowLabel>,
    live_cols: &mut Vec<ColLabel>,
    indices: &[usize],
    block_cols: &[ColLabel],
    blocks: &mut Vec<DiagonalBlock>,
) {
    let rows: Vec<RowLabel> = indices.iter().map(|&i| RowLabel(i)).collect();
    let diagonal: Vec<Polynomial> = rows
        .iter()
        .zip(block_cols)
        .map(|(r, c)| {
            let rp = s.rows().iter().position(|x| x == r).unwrap();
            let cp = s.cols().iter().position(|x| x == c).unwrap();
            s.entry(rp, cp).clone()
        })
        .collect();
    live_rows.retain(|r| !rows.contains(r));
    live_cols.retain(|c| !block_cols.contains(c));
    blocks.push(DiagonalBlock {
        rows,
        cols: block_cols.to_vec(),
        diagonal,
    });
}

/// Seeded random selection satisfying the block-triangularization
/// hypothesis: rows `{b_0} u S`, `r + 1` distinct columns whose index set
/// is exactly `S`, for a random `S` of size `r >= 2`.
pub fn random_selection(n: usize, seed: u64) -> (Vec<RowLabel>, Vec<ColLabel>) {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let r = rng.random_range(2..=n);
        let mut indices: Vec<usize> = (1..=n).collect();
        for i in (1..indices.len()).rev() {
            let j = rng.random_range(0..=i);
            indices.swap(i, j);
        }
        let mut subset: Vec<usize> = indices[..r].to_vec();
        subset.sort_unstable();

        let mut labels: Vec<ColLabel> = Vec::new();
        for (ai, &a) in subset.iter().enumerate() {
            for &b in &subset[ai..] {
                labels.push(ColLabel::new(a, b));
            }
        }
        // Try a few draws for this subset before resampling it.
        for _ in 0..8 {
            for i in (1..labels.len()).rev() {
                let j = rng.random_range(0..=i);
                labels.swap(i, j);
            }
            if labels.len() < r + 1 {
                break;
            }
            let mut chosen: Vec<ColLabel> = labels[..r + 1].to_vec();
            chosen.sort();
            let mut covered: Vec<usize> = chosen.iter().flat_map(|c| [c.i(), c.j()]).collect();
            covered.sort_unstable();
            covered.dedup();
            if covered == subset {
                let mut rows = vec![RowLabel(0)];
                rows.extend(subset.iter().map(|&i| RowLabel(i)));
                return (rows, chosen);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::jac2::matrix::build_jac2;
    use crate::poly::random_poly;

    use super::*;

    fn labels(pairs: &[(usize, usize)]) -> Vec<ColLabel> {
        pairs.iter().map(|&(i, j)| ColLabel::new(i, j)).collect()
    }

    #[test]
    fn worked_nine_by_nine_example() {
        let f = random_poly(8, 3, 14, 5);
        let m = build_jac2(&f);
        let cols = labels(&[
            (1, 1),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (3, 8),
            (4, 6),
            (6, 6),
            (7, 7),
        ]);
        let rows: Vec<RowLabel> = (0..=8).map(RowLabel).collect();
        let s = m.submatrix(&rows, &cols).unwrap();
        let d = block_triangularize(&s).unwrap();

        assert_eq!(d.blocks.len(), 3);
        assert_eq!(
            d.blocks[0].rows,
            vec![RowLabel(2), RowLabel(5), RowLabel(8)]
        );
        assert_eq!(d.blocks[0].cols, labels(&[(1, 2), (1, 5), (3, 8)]));
        assert_eq!(d.blocks[1].rows, vec![RowLabel(3)]);
        assert_eq!(d.blocks[1].cols, labels(&[(1, 3)]));
        assert_eq!(d.blocks[2].rows, vec![RowLabel(7)]);
        assert_eq!(d.blocks[2].cols, labels(&[(7, 7)]));
        assert_eq!(d.blocks[2].diagonal, vec![f.derivative(7)]);

        assert_eq!(
            d.terminal.rows(),
            &[RowLabel(0), RowLabel(1), RowLabel(4), RowLabel(6)]
        );
        assert_eq!(d.terminal.cols(), &labels(&[(1, 1), (1, 4), (4, 6), (6, 6)]));
        assert!(d.terminal_conforms);

        assert_eq!(d.determinant(), s.to_poly_matrix().det_cofactor());
    }

    #[test]
    fn already_terminal_selection_peels_nothing() {
        let f = random_poly(2, 3, 4, 9);
        let m = build_jac2(&f);
        let s = m
            .submatrix(
                &[RowLabel(0), RowLabel(1), RowLabel(2)],
                &labels(&[(1, 1), (1, 2), (2, 2)]),
            )
            .unwrap();
        let d = block_triangularize(&s).unwrap();
        assert!(d.blocks.is_empty());
        assert_eq!(d.parity, 1);
        assert_eq!(d.terminal.cols(), s.cols());
        assert!(d.terminal_conforms);
    }

    #[test]
    fn hypothesis_violations_are_errors() {
        let f = random_poly(3, 3, 4, 2);
        let m = build_jac2(&f);
        // Missing b0 row.
        let s = m
            .submatrix(&[RowLabel(1), RowLabel(2)], &labels(&[(1, 1), (1, 2)]))
            .unwrap();
        assert!(block_triangularize(&s).is_err());
        // Column with index 0.
        let s = m
            .submatrix(&[RowLabel(0), RowLabel(1)], &labels(&[(0, 1), (1, 1)]))
            .unwrap();
        assert!(block_triangularize(&s).is_err());
        // Row index 3 absent from the column index set.
        let s = m
            .submatrix(
                &[RowLabel(0), RowLabel(1), RowLabel(2), RowLabel(3)],
                &labels(&[(1, 1), (1, 2), (2, 2), (2, 3)]),
            )
            .unwrap();
        assert!(block_triangularize(&s).is_ok());
        let s = m
            .submatrix(
                &[RowLabel(0), RowLabel(1), RowLabel(3)],
                &labels(&[(1, 1), (1, 2), (1, 3)]),
            )
            .unwrap();
        assert!(block_triangularize(&s).is_err());
    }

    #[test]
    fn determinant_identity_on_random_selections() {
        let mut checked = 0;
        for seed in 0..60u64 {
            let n = 3 + (seed % 4) as usize;
            let f = random_poly(n, 3, 6, seed);
            let m = build_jac2(&f);
            let (rows, cols) = random_selection(n, 1000 + seed);
            let s = m.submatrix(&rows, &cols).unwrap();
            let d = block_triangularize(&s).unwrap();
            assert_eq!(
                d.determinant(),
                s.to_poly_matrix().det_cofactor(),
                "seed {seed}"
            );
            checked += 1;
        }
        assert_eq!(checked, 60);
    }

    #[test]
    fn paired_singleton_columns_give_zero_determinant() {
        // Indices 1 and 2 occur only in the shared column b12: the rows
        // b1 and b2 are proportional, so the determinant vanishes and the
        // terminal block keeps a zero row.
        let f = random_poly(5, 3, 10, 3);
        let m = build_jac2(&f);
        let cols = labels(&[(1, 2), (3, 3), (3, 4), (3, 5), (4, 4), (4, 5)]);
        let rows: Vec<RowLabel> = (0..=5).map(RowLabel).collect();
        let s = m.submatrix(&rows, &cols).unwrap();
        let d = block_triangularize(&s).unwrap();
        assert!(!d.terminal_conforms);
        assert!(d.determinant().is_zero());
        assert!(s.to_poly_matrix().det_cofactor().is_zero());
    }
}
