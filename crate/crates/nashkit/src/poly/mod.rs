//! Sparse multivariate polynomials over exact rationals.
//!
//! Coefficients are arbitrary-precision rationals and are never rounded;
//! ideal-equality checks downstream rely on exactness. Terms are stored in
//! a map keyed by exponent vector whose order is graded reverse
//! lexicographic, so structural equality coincides with mathematical
//! equality. Polynomials are immutable after construction and all
//! operations are pure.

mod display;
mod map;
mod monomial;
mod parse;
mod random;

pub use display::format_monomial;
pub use map::PolyMap;
pub use monomial::Monomial;
pub use parse::{parse_poly, parse_poly_in_dim, parse_poly_map, ParseError};
pub use random::{random_germ, random_poly};

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always held in lowest terms with positive
/// denominator (`num-rational` maintains both invariants on construction).
pub type Rational = BigRational;

/// Shorthand for small rational constants.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(num.into(), den.into())
}

/// Shorthand for small integer constants.
pub fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

/// A sparse multivariate polynomial with rational coefficients.
///
/// Invariants: every stored coefficient is nonzero, every key has length
/// equal to the ambient dimension, and keys are held in grevlex order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(n), c);
        }
        Polynomial { n, terms }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    /// The variable `x_var` (1-based).
    pub fn var(n: usize, var: usize) -> Self {
        Self::from_term(Monomial::var(n, var), Rational::one())
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let n = m.num_vars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(n);
        for (m, c) in it {
            assert_eq!(m.num_vars(), n, "monomial dimension mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Lowest total degree among the terms; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).min()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.n))
    }

    /// Leading term under the canonical grevlex order.
    pub fn leading_grevlex(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    /// `self * c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    /// Divide by the grevlex leading coefficient; zero stays zero.
    pub fn monic_grevlex(&self) -> Polynomial {
        match self.leading_grevlex() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Flip the sign when the grevlex leading coefficient is negative.
    pub fn with_positive_leading(&self) -> Polynomial {
        match self.leading_grevlex() {
            Some((_, lc)) if lc.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `x_var` (1-based).
    pub fn derivative(&self, var: usize) -> Polynomial {
        assert!(
            var >= 1 && var <= self.n,
            "variable index {var} out of range 1..={}",
            self.n
        );
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps: Vec<u16> = m.exponents().to_vec();
            exps[var - 1] -= 1;
            out.add_term(Monomial::from_exponents(exps), c * int(i64::from(e)));
        }
        out
    }

    /// Substitute every variable by the corresponding component of `phi`.
    pub fn compose(&self, phi: &PolyMap) -> Polynomial {
        assert_eq!(phi.dim(), self.n, "map dimension mismatch");
        let target = phi.ambient_dim();
        // Cache powers of each component up to the needed exponent.
        let mut powers: Vec<Vec<Polynomial>> = (0..self.n)
            .map(|i| vec![Polynomial::one(target), phi.component(i + 1).clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for (idx, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[idx];
                while cache.len() <= usize::from(e) {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                prod = &prod * &cache[usize::from(e)];
            }
            out = &out + &prod;
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n, "point dimension mismatch");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (idx, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[idx];
                }
            }
            acc += v;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomial dimension mismatch");
        let mut out = Polynomial::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_poly_in_dim(text, n).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        let x = Polynomial::var(2, 1);
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &p("x + y", 2) * &p("x - y", 2);
        assert_eq!(lhs, p("x^2 - y^2", 2));
    }

    #[test]
    fn scaling_matches_rational_arithmetic() {
        let six_x = p("6*x", 2);
        let expected = Polynomial::from_term(Monomial::var(2, 1), rat(1, 2) * int(6));
        assert_eq!(six_x.scale(&rat(1, 2)), expected);
        assert_eq!(six_x.scale(&rat(1, 2)), p("3*x", 2));
    }

    #[test]
    fn cusp_partials() {
        let f = p("x^3 - y^2", 2);
        assert_eq!(f.derivative(1), p("3*x^2", 2));
        assert_eq!(f.derivative(2), p("-2*y", 2));
        assert!(Polynomial::constant(2, int(5)).derivative(1).is_zero());
    }

    #[test]
    #[should_panic(expected = "variable index")]
    fn derivative_index_out_of_range() {
        let f = p("x^3 - y^2", 2);
        let _ = f.derivative(3);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn add_dimension_mismatch() {
        let _ = &p("x", 1) + &p("x", 2);
    }

    #[test]
    fn compose_examples() {
        let f = p("x^3 - y^2", 2);
        assert_eq!(f.compose(&PolyMap::identity(2)), f);
        let phi = PolyMap::new(vec![p("x", 2), p("y + x^2", 2)]).unwrap();
        assert_eq!(p("y", 2).compose(&phi), p("y + x^2", 2));
        assert_eq!(f.compose(&phi), p("x^3 - y^2 - 2*x^2*y - x^4", 2));
    }

    #[test]
    fn evaluate_examples() {
        let f = p("x^3 - y^2", 2);
        assert_eq!(f.evaluate(&[int(1), int(1)]), int(0));
        assert_eq!(f.evaluate(&[int(2), int(1)]), int(7));
    }

    #[test]
    fn mixed_partials_commute() {
        let f = p("x^3*y + 2*x*y^2 - 1/3*x*y*z^2", 3);
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(f.derivative(i).derivative(j), f.derivative(j).derivative(i));
            }
        }
    }
}
