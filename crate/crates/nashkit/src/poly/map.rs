//! Polynomial maps, used as coordinate changes for germs.

use num_traits::Zero;

use super::{Polynomial, Rational};

/// A polynomial map given by its component polynomials; component `i`
/// is the image of the variable `x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    components: Vec<Polynomial>,
}

impl PolyMap {
    /// All components must share one ambient dimension.
    pub fn new(components: Vec<Polynomial>) -> Result<Self, String> {
        if components.is_empty() {
            return Err("a polynomial map needs at least one component".to_string());
        }
        let m = components[0].num_vars();
        if components.iter().any(|c| c.num_vars() != m) {
            return Err("map components have mismatched dimensions".to_string());
        }
        Ok(PolyMap { components })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            components: (1..=n).map(|i| Polynomial::var(n, i)).collect(),
        }
    }

    /// Number of components, i.e. the dimension of the source of the
    /// substituted polynomial.
    pub fn dim(&self) -> usize {
        self.components.len()
    }

    /// Dimension of the ring the components live in.
    pub fn ambient_dim(&self) -> usize {
        self.components[0].num_vars()
    }

    /// Component `i` (1-based).
    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i - 1]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// True when every component vanishes at the origin.
    pub fn fixes_origin(&self) -> bool {
        self.components.iter().all(|c| c.constant_term().is_zero())
    }

    /// The matrix of linear-part coefficients: entry `(i, j)` is the
    /// coefficient of `x_j` in component `i`.
    pub fn linear_part(&self) -> Vec<Vec<Rational>> {
        let m = self.ambient_dim();
        self.components
            .iter()
            .map(|c| {
                (1..=m)
                    .map(|j| c.coefficient(&super::Monomial::var(m, j)))
                    .collect()
            })
            .collect()
    }

    /// Exact determinant of the linear part (finite size, plain expansion
    /// with elimination).
    pub fn linear_part_det(&self) -> Rational {
        let mut a = self.linear_part();
        let n = a.len();
        if a.iter().any(|row| row.len() != n) {
            return Rational::zero();
        }
        let mut det = Rational::from_integer(1.into());
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero());
            let Some(pivot) = pivot else {
                return Rational::zero();
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                let factor = &a[r][col] / &p;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, parse_poly_in_dim};
    use super::*;

    #[test]
    fn identity_linear_part() {
        let id = PolyMap::identity(3);
        assert!(id.fixes_origin());
        assert_eq!(id.linear_part_det(), int(1));
    }

    #[test]
    fn triangular_map_is_invertible() {
        let phi = PolyMap::new(vec![
            parse_poly_in_dim("x", 2).unwrap(),
            parse_poly_in_dim("y + x^2", 2).unwrap(),
        ])
        .unwrap();
        assert!(phi.fixes_origin());
        assert_eq!(phi.linear_part_det(), int(1));
    }

    #[test]
    fn degenerate_linear_part() {
        let phi = PolyMap::new(vec![
            parse_poly_in_dim("x + y", 2).unwrap(),
            parse_poly_in_dim("2*x + 2*y", 2).unwrap(),
        ])
        .unwrap();
        assert_eq!(phi.linear_part_det(), int(0));
    }
}
