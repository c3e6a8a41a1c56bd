//! Fraction-free reduction core.
//!
//! The Buchberger loop and normal forms work on primitive integer
//! polynomials: a reduction step cancels the leading term through
//! cross-multiplication by leading coefficients and the content of the
//! result is stripped, which keeps coefficients far smaller than monic
//! rational arithmetic would. Exact rational results are recovered at
//! the boundary by tracking the accumulated scalar.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, Polynomial, Rational};

use super::order::MonomialOrder;

/// Terms with integer coefficients, sorted descending under the engine
/// order, content 1 unless stated otherwise.
pub(crate) type ITerms = Vec<(Monomial, BigInt)>;

/// Convert to integer terms; returns the scalar `lambda` with
/// `int_terms = lambda * p`.
pub(crate) fn to_int_terms(p: &Polynomial, order: &MonomialOrder) -> (ITerms, Rational) {
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut terms: ITerms = p
        .terms()
        .map(|(m, c)| {
            let coeff = c.numer() * (&denom_lcm / c.denom());
            (m.clone(), coeff)
        })
        .collect();
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let content = strip_content(&mut terms);
    (
        terms,
        Rational::new(denom_lcm, content),
    )
}

/// Divide by the (positive) content; returns it.
pub(crate) fn strip_content(terms: &mut ITerms) -> BigInt {
    let mut content = BigInt::zero();
    for (_, c) in terms.iter() {
        content = content.gcd(c);
        if content.is_one() {
            return content;
        }
    }
    if content.is_zero() || content.is_one() {
        return BigInt::one();
    }
    for (_, c) in terms.iter_mut() {
        *c = &*c / &content;
    }
    content
}

/// The monic rational polynomial spanned by the terms.
pub(crate) fn to_monic_poly(n: usize, terms: &ITerms) -> Polynomial {
    match terms.first() {
        None => Polynomial::zero(n),
        Some((_, lc)) => {
            let lc = lc.clone();
            Polynomial::from_terms(
                n,
                terms
                    .iter()
                    .map(|(m, c)| (m.clone(), Rational::new(c.clone(), lc.clone()))),
            )
        }
    }
}

/// `a * w - b * x^shift * g`, all descending, result descending (content
/// not stripped).
pub(crate) fn merge_fraction_free(
    w: &[(Monomial, BigInt)],
    a: &BigInt,
    g: &[(Monomial, BigInt)],
    b: &BigInt,
    shift: &Monomial,
    order: &MonomialOrder,
) -> ITerms {
    let mut out = ITerms::with_capacity(w.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < w.len() && j < g.len() {
        let gm = g[j].0.mul(shift);
        match order.cmp(&w[i].0, &gm) {
            std::cmp::Ordering::Greater => {
                out.push((w[i].0.clone(), a * &w[i].1));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((gm, -(b * &g[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let coeff = a * &w[i].1 - b * &g[j].1;
                if !coeff.is_zero() {
                    out.push((gm, coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &w[i..] {
        out.push((t.0.clone(), a * &t.1));
    }
    for t in &g[j..] {
        out.push((t.0.mul(shift), -(b * &t.1)));
    }
    out
}

/// A reducer: primitive integer terms with the leading term split out.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub terms: ITerms,
    pub lm: Monomial,
    pub lc: BigInt,
    pub max_degree: u32,
}

impl Reducer {
    pub fn new(terms: ITerms) -> Self {
        let (lm, lc) = terms[0].clone();
        let max_degree = terms.iter().map(|(m, _)| m.total_degree()).max().unwrap();
        Reducer {
            terms,
            lm,
            lc,
            max_degree,
        }
    }
}

/// How far to carry a reduction.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum ReduceMode {
    /// Stop at the first leading term no divisor cancels. Enough to
    /// decide membership of the leading-monomial ideal and to detect
    /// reduction to zero; keeps the step count, and with it the
    /// fraction-free coefficient growth, small.
    Head,
    /// Full normal form: continue into the tail until no term is
    /// divisible by any leading monomial.
    Full,
}

/// Fraction-free reduction of `w` against `basis`. Each cancellation
/// rescales the whole vector by a positive integer, so the result is a
/// positive rational multiple of the true remainder. When `scale` is
/// given it accumulates the overall factor applied to `w`, so the exact
/// remainder is `result / scale`.
pub(crate) fn reduce_fraction_free(
    mut w: ITerms,
    basis: &[Reducer],
    order: &MonomialOrder,
    mut scale: Option<&mut Rational>,
    mode: ReduceMode,
) -> ITerms {
    // Prefer slim reducers: a small leading coefficient keeps the
    // cross-multiplication factor small, a short tail keeps the merge
    // short. Any divisor is mathematically valid, so this only steers
    // intermediate coefficient growth.
    let mut scan: Vec<&Reducer> = basis.iter().collect();
    scan.sort_by_key(|g| (g.lc.bits(), g.terms.len()));
    let mut done = 0usize;
    'outer: while done < w.len() {
        let m = w[done].0.clone();
        for g in &scan {
            if g.lm.divides(&m) {
                let shift = g.lm.div_into(&m);
                let c = w[done].1.clone();
                let d = c.gcd(&g.lc);
                let mut a = &g.lc / &d;
                let mut b = &c / &d;
                // Keep the factor on `w` positive so `scale` stays a
                // positive rational.
                if a.is_negative() {
                    a = -a;
                    b = -b;
                }
                w = merge_fraction_free(&w, &a, &g.terms, &b, &shift, order);
                let content = strip_content(&mut w);
                if let Some(s) = scale.as_deref_mut() {
                    *s *= Rational::new(a, content);
                }
                continue 'outer;
            }
        }
        if mode == ReduceMode::Head {
            return w;
        }
        done += 1;
    }
    w
}

#[cfg(test)]
mod tests {
    use crate::poly::{parse_poly_in_dim, rat};

    use super::*;

    #[test]
    fn int_conversion_round_trip() {
        let order = MonomialOrder::grevlex(2);
        let p = parse_poly_in_dim("1/2*x^2 - 3/4*y + 2", 2).unwrap();
        let (terms, lambda) = to_int_terms(&p, &order);
        // lambda * p has integer, coprime coefficients.
        let scaled = p.scale(&lambda);
        let back = Polynomial::from_terms(
            2,
            terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()))),
        );
        assert_eq!(scaled, back);
        assert_eq!(lambda, rat(4, 1));
    }

    #[test]
    fn reduction_matches_rational_division() {
        let order = MonomialOrder::grevlex(2);
        let p = parse_poly_in_dim("x^3 + 2*x*y^2 - y + 3", 2).unwrap();
        let divisors = [
            parse_poly_in_dim("3*x^2 - y", 2).unwrap(),
            parse_poly_in_dim("2*x*y - 1", 2).unwrap(),
        ];
        let basis: Vec<Reducer> = divisors
            .iter()
            .map(|g| Reducer::new(to_int_terms(g, &order).0))
            .collect();
        let (w, lambda) = to_int_terms(&p, &order);
        let mut scale = lambda;
        let reduced =
            reduce_fraction_free(w, &basis, &order, Some(&mut scale), ReduceMode::Full);
        let nf = Polynomial::from_terms(
            2,
            reduced.iter().map(|(m, c)| {
                (
                    m.clone(),
                    Rational::from_integer(c.clone()) / scale.clone(),
                )
            }),
        );
        let reference = super::super::divide::divide(&p, &divisors, &order).remainder;
        assert_eq!(nf, reference);
    }
}
