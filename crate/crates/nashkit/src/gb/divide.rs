//! Multivariate division with remainder and explicit cofactors.

use num_traits::Zero;

use crate::poly::{Monomial, Polynomial, Rational};

use super::order::MonomialOrder;

/// Terms sorted descending under a fixed order; the working currency of
/// the engine.
pub(crate) type Terms = Vec<(Monomial, Rational)>;

pub(crate) fn to_sorted_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut terms: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    terms
}

pub(crate) fn terms_to_poly(n: usize, terms: &[(Monomial, Rational)]) -> Polynomial {
    Polynomial::from_terms(n, terms.iter().cloned())
}

/// `a - c * x^shift * b`, both inputs descending, result descending.
pub(crate) fn sub_scaled(
    a: &[(Monomial, Rational)],
    b: &[(Monomial, Rational)],
    shift: &Monomial,
    c: &Rational,
    order: &MonomialOrder,
) -> Terms {
    let mut out = Terms::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(shift);
        match order.cmp(&a[i].0, &bm) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bm, -(c * &b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let coeff = &a[i].1 - &(c * &b[j].1);
                if !coeff.is_zero() {
                    out.push((bm, coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, v) in &b[j..] {
        out.push((m.mul(shift), -(c * v)));
    }
    out
}

/// Result of dividing `p` by an ordered list of divisors.
pub struct Division {
    /// One cofactor per divisor: `p = sum(q_i * g_i) + remainder`.
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Classic multivariate division: repeatedly cancel the leading term of the
/// work polynomial against the first divisor whose leading monomial divides
/// it; leading terms with no divisor move to the remainder. No monomial of
/// the remainder is divisible by any divisor's leading monomial.
pub fn divide(p: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Division {
    let n = p.num_vars();
    for g in divisors {
        assert_eq!(g.num_vars(), n, "divisor dimension mismatch");
    }
    let basis: Vec<(Terms, Monomial, Rational)> = divisors
        .iter()
        .map(|g| {
            let t = to_sorted_terms(g, order);
            assert!(!t.is_empty(), "zero divisor");
            let (lm, lc) = t[0].clone();
            (t, lm, lc)
        })
        .collect();

    let mut work = to_sorted_terms(p, order);
    let mut remainder: Terms = Vec::new();
    let mut quotients: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); divisors.len()];

    while let Some((lm, lc)) = work.first().cloned() {
        match basis.iter().position(|(_, glm, _)| glm.divides(&lm)) {
            Some(gi) => {
                let (gterms, glm, glc) = &basis[gi];
                let shift = glm.div_into(&lm);
                let factor = &lc / glc;
                work = sub_scaled(&work, gterms, &shift, &factor, order);
                quotients[gi].push((shift, factor));
            }
            None => {
                remainder.push(work.remove(0));
            }
        }
    }

    Division {
        quotients: quotients
            .into_iter()
            .map(|q| Polynomial::from_terms(n, q))
            .collect(),
        remainder: terms_to_poly(n, &remainder),
    }
}
