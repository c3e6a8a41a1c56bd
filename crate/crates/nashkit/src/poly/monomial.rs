//! Exponent vectors with graded reverse lexicographic canonical order.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A monomial in a fixed number of variables, stored as an exponent vector.
///
/// The exponent for variable `i` (1-based) sits at position `i - 1`.
/// The derived equality is structural; the canonical `Ord` is graded
/// reverse lexicographic with the natural precedence `x1 > x2 > ...`,
/// so sorted containers keyed by `Monomial` are in grevlex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 6]>,
}

impl Monomial {
    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; n],
        }
    }

    /// The monomial `x_var` (1-based variable index).
    pub fn var(n: usize, var: usize) -> Self {
        assert!(var >= 1 && var <= n, "variable index {var} out of range 1..={n}");
        let mut m = Self::one(n);
        m.exps[var - 1] = 1;
        m
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = u16>) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    /// Exponent of variable `var` (1-based).
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var - 1]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "monomial dimension mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e * k).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`; caller must ensure `self.divides(other)`.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(&b, &a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "monomial dimension mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// All monomials of total degree exactly `degree` in `n` variables,
    /// in descending grevlex order.
    pub fn all_of_degree(n: usize, degree: u16) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u16; n];
        fn rec(n: usize, pos: usize, left: u16, current: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if pos == n - 1 {
                current[pos] = left;
                out.push(Monomial::from_exponents(current.iter().copied()));
                return;
            }
            for e in (0..=left).rev() {
                current[pos] = e;
                rec(n, pos + 1, left - e, current, out);
            }
        }
        if n == 0 {
            if degree == 0 {
                out.push(Monomial::from_exponents(std::iter::empty()));
            }
            return out;
        }
        rec(n, 0, degree, &mut current, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic, natural precedence: compare total degree,
    /// then the last differing exponent decides reversed.
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({:?})", &self.exps[..])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exponents(exps.iter().copied())
    }

    #[test]
    fn grevlex_basics() {
        // x > y > z at equal degree, and degree dominates.
        assert!(m(&[1, 0]) > m(&[0, 1]));
        assert!(m(&[0, 2]) > m(&[1, 0]));
        // x*z vs y^2 in three variables: grevlex puts y^2 first.
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 1]).divides(&m(&[2, 1])));
        assert!(!m(&[1, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[1, 0]).div_into(&m(&[2, 1])), m(&[1, 1]));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 1])), m(&[2, 1]));
    }

    #[test]
    fn degree_enumeration() {
        let all = Monomial::all_of_degree(3, 2);
        assert_eq!(all.len(), 6);
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(all, sorted);
    }
}
