//! Ideals as finite generator lists, with sum/product/power and
//! Groebner-backed membership, inclusion, and equality.

use itertools::Itertools;

use crate::poly::Polynomial;

use super::buchberger::{groebner, GbCaps, GbError, GroebnerBasis};
use super::order::MonomialOrder;

/// A finitely generated ideal. Zero generators are dropped on
/// construction; an empty list is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    n: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(n: usize, generators: Vec<Polynomial>) -> Self {
        for g in &generators {
            assert_eq!(g.num_vars(), n, "generator dimension mismatch");
        }
        let mut gens: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        gens.sort();
        gens.dedup();
        Ideal { n, generators: gens }
    }

    pub fn zero(n: usize) -> Self {
        Ideal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        Ideal::new(n, vec![Polynomial::one(n)])
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.n, other.n, "ideal dimension mismatch");
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.n, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.n, other.n, "ideal dimension mismatch");
        let gens = self
            .generators
            .iter()
            .cartesian_product(&other.generators)
            .map(|(a, b)| a * b)
            .collect();
        Ideal::new(self.n, gens)
    }

    /// All products of `k` generators with repetition; `k = 0` gives the
    /// unit ideal.
    pub fn power(&self, k: u32) -> Ideal {
        if k == 0 {
            return Ideal::unit(self.n);
        }
        let gens = (0..self.generators.len())
            .combinations_with_replacement(k as usize)
            .map(|choice| {
                choice
                    .into_iter()
                    .fold(Polynomial::one(self.n), |acc, i| &acc * &self.generators[i])
            })
            .collect();
        Ideal::new(self.n, gens)
    }

    pub fn groebner(&self, order: &MonomialOrder, caps: &GbCaps) -> Result<GroebnerBasis, GbError> {
        groebner(self, order, caps)
    }

    pub fn contains(
        &self,
        p: &Polynomial,
        order: &MonomialOrder,
        caps: &GbCaps,
    ) -> Result<bool, GbError> {
        if p.num_vars() != self.n {
            return Err(GbError::DimensionMismatch {
                expected: self.n,
                found: p.num_vars(),
            });
        }
        Ok(self.groebner(order, caps)?.contains(p))
    }

    /// `self` included in `other`: every generator reduces to zero.
    pub fn subset(
        &self,
        other: &Ideal,
        order: &MonomialOrder,
        caps: &GbCaps,
    ) -> Result<bool, GbError> {
        if self.n != other.n {
            return Err(GbError::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let basis = other.groebner(order, caps)?;
        Ok(self.generators.iter().all(|g| basis.contains(g)))
    }

    /// Ideal equality via identity of reduced bases under one order.
    pub fn equal(&self, other: &Ideal, order: &MonomialOrder, caps: &GbCaps) -> Result<bool, GbError> {
        if self.n != other.n {
            return Err(GbError::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let a = self.groebner(order, caps)?;
        let b = other.groebner(order, caps)?;
        Ok(a.elements() == b.elements())
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::parse_poly_in_dim;

    use super::*;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_poly_in_dim(text, n).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> Ideal {
        Ideal::new(n, gens.iter().map(|t| p(t, n)).collect())
    }

    fn cfg() -> (MonomialOrder, GbCaps) {
        (MonomialOrder::grevlex(2), GbCaps::default())
    }

    #[test]
    fn power_of_coordinate_ideal() {
        let m = ideal(&["x", "y"], 2);
        let m2 = m.power(2);
        assert_eq!(
            m2.generators(),
            &[p("y^2", 2), p("x*y", 2), p("x^2", 2)]
        );
        assert_eq!(m.power(0).generators(), &[p("1", 2)]);
    }

    #[test]
    fn sum_with_zero_ideal() {
        let (order, caps) = cfg();
        let i = ideal(&["x^2 - y"], 2);
        let z = Ideal::zero(2);
        assert!(i.sum(&z).equal(&i, &order, &caps).unwrap());
    }

    #[test]
    fn membership_examples() {
        let (order, caps) = cfg();
        let i = ideal(&["x^2"], 2);
        assert!(!i.contains(&p("x", 2), &order, &caps).unwrap());
        assert!(i.contains(&p("x^3 + x^2*y", 2), &order, &caps).unwrap());
    }

    #[test]
    fn equality_is_representation_independent() {
        let (order, caps) = cfg();
        let i = ideal(&["x + y", "x - y"], 2);
        let j = ideal(&["x", "y"], 2);
        assert!(i.equal(&j, &order, &caps).unwrap());
        assert!(i.equal(&i, &order, &caps).unwrap());
    }

    #[test]
    fn normal_form_of_members_is_zero() {
        let (order, caps) = cfg();
        let i = ideal(&["x^3 - y^2", "x*y - 2"], 2);
        let basis = i.groebner(&order, &caps).unwrap();
        for g in i.generators() {
            assert!(basis.normal_form(g).is_zero());
        }
        assert!(basis.normal_form(&Polynomial::zero(2)).is_zero());
    }

    #[test]
    fn cusp_normal_form_reconstructs() {
        let (order, caps) = cfg();
        let i = ideal(&["x^3 - y^2"], 2);
        let basis = i.groebner(&order, &caps).unwrap();
        let r = basis.normal_form(&p("x^3", 2));
        // x^3 - r must land back in the ideal.
        assert!(basis.contains(&(&p("x^3", 2) - &r)));
        assert!(!r.is_zero());
    }
}
