//! Symbolic determinants of polynomial matrices.
//!
//! Two engines: a plain cofactor expansion that serves as the oracle, and
//! an optimized engine that peels rows and columns with a single nonzero
//! entry (the entrywise form of block triangularization) before falling
//! back to cofactor expansion on the irreducible core.

use crate::poly::Polynomial;

/// A dense matrix of polynomials, row-major.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    n_vars: usize,
    nrows: usize,
    ncols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(n_vars: usize, nrows: usize, ncols: usize, data: Vec<Polynomial>) -> Self {
        assert_eq!(data.len(), nrows * ncols, "shape mismatch");
        PolyMatrix {
            n_vars,
            nrows,
            ncols,
            data,
        }
    }

    pub fn from_rows(n_vars: usize, rows: Vec<Vec<Polynomial>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        PolyMatrix {
            n_vars,
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n_vars
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.data[r * self.ncols + c]
    }

    /// Submatrix by position lists, preserving the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let data = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.entry(r, c).clone()))
            .collect();
        PolyMatrix::new(self.n_vars, rows.len(), cols.len(), data)
    }

    /// Naive cofactor expansion along the first row. The test oracle:
    /// no structural shortcuts beyond skipping zero coefficients.
    pub fn det_cofactor(&self) -> Polynomial {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let rows: Vec<usize> = (0..self.nrows).collect();
        let cols: Vec<usize> = (0..self.ncols).collect();
        self.det_cofactor_rec(&rows, &cols)
    }

    fn det_cofactor_rec(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one(self.n_vars);
        }
        let mut acc = Polynomial::zero(self.n_vars);
        let r = rows[0];
        let rest: Vec<usize> = rows[1..].to_vec();
        for (pos, &c) in cols.iter().enumerate() {
            let e = self.entry(r, c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&x| x != c)
                .collect();
            let minor = self.det_cofactor_rec(&rest, &sub_cols);
            let signed = if pos % 2 == 0 { minor } else { -minor };
            acc = &acc + &(e * &signed);
        }
        acc
    }

    /// Optimized determinant: repeatedly peel zero rows/columns and rows or
    /// columns holding a single nonzero entry, tracking the cofactor signs,
    /// then expand the remaining core along its sparsest row.
    pub fn det(&self) -> Polynomial {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let rows: Vec<usize> = (0..self.nrows).collect();
        let cols: Vec<usize> = (0..self.ncols).collect();
        self.det_peeling(rows, cols)
    }

    fn det_peeling(&self, mut rows: Vec<usize>, mut cols: Vec<usize>) -> Polynomial {
        let mut factor = Polynomial::one(self.n_vars);
        let mut sign_flip = false;

        'peel: loop {
            if rows.is_empty() {
                return if sign_flip { -factor } else { factor };
            }
            for (rp, &r) in rows.iter().enumerate() {
                let mut nonzero = None;
                let mut count = 0;
                for (cp, &c) in cols.iter().enumerate() {
                    if !self.entry(r, c).is_zero() {
                        count += 1;
                        nonzero = Some((cp, c));
                        if count > 1 {
                            break;
                        }
                    }
                }
                match (count, nonzero) {
                    (0, _) => return Polynomial::zero(self.n_vars),
                    (1, Some((cp, c))) => {
                        if (rp + cp) % 2 == 1 {
                            sign_flip = !sign_flip;
                        }
                        factor = &factor * self.entry(r, c);
                        rows.remove(rp);
                        cols.remove(cp);
                        continue 'peel;
                    }
                    _ => {}
                }
            }
            for (cp, &c) in cols.iter().enumerate() {
                let mut nonzero = None;
                let mut count = 0;
                for (rp, &r) in rows.iter().enumerate() {
                    if !self.entry(r, c).is_zero() {
                        count += 1;
                        nonzero = Some((rp, r));
                        if count > 1 {
                            break;
                        }
                    }
                }
                match (count, nonzero) {
                    (0, _) => return Polynomial::zero(self.n_vars),
                    (1, Some((rp, r))) => {
                        if (rp + cp) % 2 == 1 {
                            sign_flip = !sign_flip;
                        }
                        factor = &factor * self.entry(r, c);
                        rows.remove(rp);
                        cols.remove(cp);
                        continue 'peel;
                    }
                    _ => {}
                }
            }
            break;
        }

        // Cofactor expansion of the core along its sparsest row.
        let sparsest = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, &r)| cols.iter().filter(|&&c| !self.entry(r, c).is_zero()).count())
            .map(|(rp, _)| rp)
            .unwrap();
        let r = rows[sparsest];
        let rest: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(rp, _)| *rp != sparsest)
            .map(|(_, &x)| x)
            .collect();
        let mut acc = Polynomial::zero(self.n_vars);
        for (cp, &c) in cols.iter().enumerate() {
            let e = self.entry(r, c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.det_peeling(rest.clone(), sub_cols);
            let signed = if (sparsest + cp) % 2 == 0 { minor } else { -minor };
            acc = &acc + &(e * &signed);
        }
        let total = &factor * &acc;
        if sign_flip {
            -total
        } else {
            total
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::{parse_poly_in_dim, random_poly, Polynomial};

    use super::*;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_poly_in_dim(text, n).unwrap()
    }

    #[test]
    fn diagonal_product() {
        let m = PolyMatrix::from_rows(
            2,
            vec![
                vec![p("3*x^2", 2), p("0", 2)],
                vec![p("0", 2), p("-2*y", 2)],
            ],
        );
        assert_eq!(m.det(), p("-6*x^2*y", 2));
        assert_eq!(m.det_cofactor(), p("-6*x^2*y", 2));
    }

    #[test]
    #[should_panic(expected = "non-square")]
    fn non_square_rejected() {
        PolyMatrix::from_rows(1, vec![vec![p("x", 1), p("1", 1)]]).det();
    }

    #[test]
    fn engines_agree_on_random_dense_matrices() {
        for seed in 0..30 {
            let size = 2 + (seed as usize % 4);
            let data: Vec<Polynomial> = (0..size * size)
                .map(|k| {
                    if (seed + k as u64) % 3 == 0 {
                        Polynomial::zero(2)
                    } else {
                        random_poly(2, 2, 2, seed * 100 + k as u64)
                    }
                })
                .collect();
            let m = PolyMatrix::new(2, size, size, data);
            assert_eq!(m.det(), m.det_cofactor(), "seed {seed}");
        }
    }

    #[test]
    fn zero_row_short_circuits() {
        let m = PolyMatrix::from_rows(
            2,
            vec![
                vec![p("x", 2), p("y", 2)],
                vec![Polynomial::zero(2), Polynomial::zero(2)],
            ],
        );
        assert!(m.det().is_zero());
    }

    #[test]
    fn empty_matrix_determinant_is_one() {
        let m = PolyMatrix::new(2, 0, 0, vec![]);
        assert_eq!(m.det(), Polynomial::one(2));
        assert_eq!(m.det_cofactor(), Polynomial::one(2));
    }
}
