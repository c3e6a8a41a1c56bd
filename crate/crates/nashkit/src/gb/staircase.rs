//! Standard monomials of a leading-monomial ideal and the associated
//! Hilbert function.

use crate::poly::Monomial;

use super::buchberger::GroebnerBasis;

/// The staircase of a Groebner basis: monomials divisible by no leading
/// monomial, listed by total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    /// Standard monomials in ascending grevlex order. Complete when
    /// `finite`, truncated at the degree cap otherwise.
    pub standard: Vec<Monomial>,
    pub finite: bool,
    /// `hilbert[d]` counts standard monomials of total degree `d`.
    pub hilbert: Vec<usize>,
}

impl Staircase {
    pub fn dimension(&self) -> usize {
        self.standard.len()
    }
}

/// Enumerate standard monomials degree by degree.
///
/// Finiteness is exact, not heuristic: the quotient is finite-dimensional
/// iff every variable has a pure power among the leading monomials.
pub fn staircase(basis: &GroebnerBasis, degree_cap: u32) -> Staircase {
    let n = basis.num_vars();
    let leading = basis.leading_monomials();

    let finite = (1..=n).all(|v| {
        leading.iter().any(|m| {
            m.exponent(v) > 0 && (1..=n).all(|w| w == v || m.exponent(w) == 0)
        }) || leading.iter().any(Monomial::is_one)
    });

    // For a finite staircase every exponent of a standard monomial is
    // bounded by the pure power of its variable.
    let bound = if finite {
        let mut sum = 0u32;
        for v in 1..=n {
            let pure = leading
                .iter()
                .filter(|m| m.exponent(v) > 0 && (1..=n).all(|w| w == v || m.exponent(w) == 0))
                .map(|m| u32::from(m.exponent(v)))
                .min()
                .unwrap_or(0);
            sum += pure.saturating_sub(1);
        }
        sum.min(degree_cap)
    } else {
        degree_cap
    };

    let mut standard = Vec::new();
    let mut hilbert = Vec::new();
    for d in 0..=bound {
        let mut at_degree: Vec<Monomial> = Monomial::all_of_degree(n, d as u16)
            .into_iter()
            .filter(|m| !leading.iter().any(|lm| lm.divides(m)))
            .collect();
        at_degree.sort();
        hilbert.push(at_degree.len());
        standard.extend(at_degree);
    }
    while hilbert.last() == Some(&0) {
        hilbert.pop();
    }

    Staircase {
        standard,
        finite,
        hilbert,
    }
}

#[cfg(test)]
mod tests {
    use crate::gb::{groebner, GbCaps, Ideal, MonomialOrder};
    use crate::poly::parse_poly_in_dim;

    use super::*;

    fn basis_of(gens: &[&str], n: usize) -> GroebnerBasis {
        let ideal = Ideal::new(n, gens.iter().map(|t| parse_poly_in_dim(t, n).unwrap()).collect());
        groebner(&ideal, &MonomialOrder::grevlex(n), &GbCaps::default()).unwrap()
    }

    #[test]
    fn residue_field() {
        let s = staircase(&basis_of(&["x", "y"], 2), 10);
        assert!(s.finite);
        assert_eq!(s.dimension(), 1);
        assert_eq!(s.hilbert, vec![1]);
    }

    #[test]
    fn monomial_ideal_staircase() {
        let s = staircase(&basis_of(&["x^2", "x*y", "y^3"], 2), 10);
        assert!(s.finite);
        assert_eq!(s.dimension(), 4);
        assert_eq!(s.hilbert, vec![1, 2, 1]);
        let rendered: Vec<String> = s
            .standard
            .iter()
            .map(|m| crate::poly::format_monomial(2, m))
            .collect();
        assert_eq!(rendered, vec!["1", "y", "x", "y^2"]);
    }

    #[test]
    fn principal_ideal_in_two_variables_is_infinite() {
        let s = staircase(&basis_of(&["x"], 2), 6);
        assert!(!s.finite);
        // y^d stays standard for every d up to the cap.
        assert_eq!(s.hilbert, vec![1; 7]);
    }

    #[test]
    fn unit_ideal_has_empty_staircase() {
        let s = staircase(&basis_of(&["1"], 2), 6);
        assert!(s.finite);
        assert_eq!(s.dimension(), 0);
        assert!(s.hilbert.is_empty());
    }

    #[test]
    fn counts_match_brute_force_enumeration() {
        // Independent oracle: test every monomial of degree <= 6 directly.
        let basis = basis_of(&["x^2 - y^3", "x*y^2", "y^5"], 2);
        let s = staircase(&basis, 12);
        let leading = basis.leading_monomials();
        let mut expected = 0usize;
        for d in 0..=6u16 {
            for m in Monomial::all_of_degree(2, d) {
                if !leading.iter().any(|lm| lm.divides(&m)) {
                    expected += 1;
                }
            }
        }
        assert!(s.finite);
        assert_eq!(s.dimension(), expected);
    }
}
