//! Buchberger's algorithm with the normal selection strategy, both
//! classical pair-elimination criteria, and full inter-reduction of the
//! output. Resource use is bounded by explicit caps; exceeding a cap is
//! an error, never a silent wrong answer.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::poly::{Monomial, Polynomial, Rational};

use super::engine::{
    merge_fraction_free, reduce_fraction_free, strip_content, to_int_terms, to_monic_poly, ITerms,
    ReduceMode, Reducer,
};
use super::ideal::Ideal;
use super::order::MonomialOrder;

/// Resource caps for a single Groebner run.
#[derive(Clone, Debug)]
pub struct GbCaps {
    /// Maximum number of S-pairs taken off the queue.
    pub spair_cap: usize,
    /// Maximum total degree of any basis element.
    pub degree_cap: u32,
}

impl Default for GbCaps {
    fn default() -> Self {
        GbCaps {
            spair_cap: 200_000,
            degree_cap: 40,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GbError {
    SPairCapExceeded { cap: usize },
    DegreeCapExceeded { cap: u32, degree: u32 },
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for GbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GbError::SPairCapExceeded { cap } => {
                write!(f, "S-pair cap exceeded ({cap} pairs processed)")
            }
            GbError::DegreeCapExceeded { cap, degree } => {
                write!(f, "degree cap {cap} exceeded (element of degree {degree})")
            }
            GbError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} variables, found {found}")
            }
        }
    }
}

impl std::error::Error for GbError {}

/// A reduced Groebner basis: monic elements, no monomial of any element
/// divisible by the leading monomial of another, sorted descending by
/// leading monomial. Holds a primitive-integer copy of the elements for
/// fast normal forms.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    reducers: Vec<Reducer>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn num_vars(&self) -> usize {
        self.order.num_vars()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.reducers.iter().map(|r| r.lm.clone()).collect()
    }

    /// Remainder of division by the basis: no monomial of the result is
    /// divisible by any leading monomial, and `p - result` lies in the
    /// ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        if self.elements.is_empty() || p.is_zero() {
            return p.clone();
        }
        let (w, lambda) = to_int_terms(p, &self.order);
        let mut scale = lambda;
        let reduced =
            reduce_fraction_free(w, &self.reducers, &self.order, Some(&mut scale), ReduceMode::Full);
        let inv = scale.recip();
        Polynomial::from_terms(
            p.num_vars(),
            reduced
                .into_iter()
                .map(|(m, c)| (m, Rational::from_integer(c) * &inv)),
        )
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        if self.elements.is_empty() {
            return p.is_zero();
        }
        if p.is_zero() {
            return true;
        }
        let (w, _) = to_int_terms(p, &self.order);
        reduce_fraction_free(w, &self.reducers, &self.order, None, ReduceMode::Full).is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order.to_string(),
            "elements": self.elements.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })
    }
}

struct Engine<'a> {
    order: &'a MonomialOrder,
    caps: &'a GbCaps,
    basis: Vec<Reducer>,
    queue: BinaryHeap<Reverse<(Vec<u32>, usize, usize)>>,
    /// Pairs still awaiting processing; entries removed here make their
    /// queued copies dead (lazy deletion on pop).
    pending: HashSet<(usize, usize)>,
    spairs_processed: usize,
}

impl<'a> Engine<'a> {
    /// Insert a new element and update the pair set in the style of
    /// Gebauer and Moeller: both Buchberger criteria are applied eagerly,
    /// pruning old pairs whose lcm the new leading monomial strictly
    /// refines, keeping one new pair per lcm value and only those with
    /// lcm minimal under divisibility, and dropping lcm classes realized
    /// by a coprime pair.
    fn push_element(&mut self, terms: ITerms) -> Result<(), GbError> {
        let reducer = Reducer::new(terms);
        if reducer.max_degree > self.caps.degree_cap {
            return Err(GbError::DegreeCapExceeded {
                cap: self.caps.degree_cap,
                degree: reducer.max_degree,
            });
        }
        let t = self.basis.len();
        let lm_t = reducer.lm.clone();

        // Prune old pending pairs (i, j): the new pairs (i, t), (j, t)
        // cover them when lm_t strictly divides into their lcm.
        let old: Vec<(usize, usize)> = self.pending.iter().copied().collect();
        for (i, j) in old {
            let lcm_ij = self.basis[i].lm.lcm(&self.basis[j].lm);
            if lm_t.divides(&lcm_ij)
                && self.basis[i].lm.lcm(&lm_t) != lcm_ij
                && self.basis[j].lm.lcm(&lm_t) != lcm_ij
            {
                self.pending.remove(&(i, j));
            }
        }

        // New pairs, minimal lcm under divisibility first.
        let lcms: Vec<Monomial> = (0..t).map(|i| self.basis[i].lm.lcm(&lm_t)).collect();
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..t {
            let minimal = (0..t).all(|j| {
                j == i
                    || !lcms[j].divides(&lcms[i])
                    || lcms[j] == lcms[i]
            });
            if minimal {
                keep.push(i);
            }
        }
        // One representative per lcm value; a coprime member kills its
        // whole class.
        let mut by_lcm: Vec<(Monomial, Option<usize>)> = Vec::new();
        for &i in &keep {
            let coprime = self.basis[i].lm.is_coprime_with(&lm_t);
            match by_lcm.iter_mut().find(|(m, _)| *m == lcms[i]) {
                Some((_, slot)) => {
                    if coprime {
                        *slot = None;
                    }
                }
                None => by_lcm.push((lcms[i].clone(), (!coprime).then_some(i))),
            }
        }
        for (lcm, slot) in by_lcm {
            if let Some(i) = slot {
                let key = self.order.sort_key(&lcm);
                self.queue.push(Reverse((key, i, t)));
                self.pending.insert((i, t));
            }
        }
        self.basis.push(reducer);
        Ok(())
    }

    /// Fraction-free S-polynomial of two primitive elements.
    fn s_polynomial(&self, i: usize, j: usize) -> ITerms {
        let (gi, gj) = (&self.basis[i], &self.basis[j]);
        let lcm = gi.lm.lcm(&gj.lm);
        let shift_i = gi.lm.div_into(&lcm);
        let shift_j = gj.lm.div_into(&lcm);
        let d = gi.lc.gcd(&gj.lc);
        let a = &gj.lc / &d;
        let b = &gi.lc / &d;
        let left: ITerms = gi
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&shift_i), c * &a))
            .collect();
        let mut s = merge_fraction_free(&left, &BigInt::from(1), &gj.terms, &b, &shift_j, self.order);
        strip_content(&mut s);
        s
    }
}

/// Compute the reduced Groebner basis of `ideal` under `order`.
///
/// Idempotent: running it on its own output returns the same basis.
pub fn groebner(ideal: &Ideal, order: &MonomialOrder, caps: &GbCaps) -> Result<GroebnerBasis, GbError> {
    let n = ideal.num_vars();
    if order.num_vars() != n {
        return Err(GbError::DimensionMismatch {
            expected: n,
            found: order.num_vars(),
        });
    }

    let mut engine = Engine {
        order,
        caps,
        basis: Vec::new(),
        queue: BinaryHeap::new(),
        pending: HashSet::new(),
        spairs_processed: 0,
    };

    // Feed generators smallest-first so early reductions shrink the rest.
    let mut gens: Vec<ITerms> = ideal
        .generators()
        .iter()
        .map(|g| to_int_terms(g, order).0)
        .collect();
    gens.sort_by(|a, b| order.sort_key(&a[0].0).cmp(&order.sort_key(&b[0].0)));
    for g in gens {
        let reduced = reduce_fraction_free(g, &engine.basis, order, None, ReduceMode::Head);
        if !reduced.is_empty() {
            let mut reduced =
                reduce_fraction_free(reduced, &engine.basis, order, None, ReduceMode::Full);
            strip_content(&mut reduced);
            engine.push_element(reduced)?;
        }
    }

    let debug_stats = std::env::var_os("NASHKIT_GB_STATS").is_some();
    while let Some(Reverse((_, i, j))) = engine.queue.pop() {
        // Skip entries pruned by a later update.
        if !engine.pending.remove(&(i, j)) {
            continue;
        }
        engine.spairs_processed += 1;
        if engine.spairs_processed > caps.spair_cap {
            return Err(GbError::SPairCapExceeded { cap: caps.spair_cap });
        }
        let s = engine.s_polynomial(i, j);
        let reduced = reduce_fraction_free(s, &engine.basis, order, None, ReduceMode::Head);
        if !reduced.is_empty() {
            // Tail-reduce before inserting: slim reducers keep the
            // fraction-free multipliers, and with them every later
            // reduction, small.
            let mut reduced =
                reduce_fraction_free(reduced, &engine.basis, order, None, ReduceMode::Full);
            strip_content(&mut reduced);
            engine.push_element(reduced)?;
        }
        if debug_stats && engine.spairs_processed % 100 == 0 {
            let max_terms = engine.basis.iter().map(|g| g.terms.len()).max().unwrap_or(0);
            let max_bits = engine
                .basis
                .iter()
                .flat_map(|g| g.terms.iter().map(|(_, c)| c.bits()))
                .max()
                .unwrap_or(0);
            eprintln!(
                "gb-stats pairs={} basis={} queue={} max_terms={max_terms} max_bits={max_bits}",
                engine.spairs_processed,
                engine.basis.len(),
                engine.queue.len(),
            );
        }
    }

    // Minimize: drop elements whose leading monomial another one divides.
    // Leading monomials are pairwise distinct here, since every element
    // was in normal form against the basis when it was added.
    let keep: Vec<usize> = (0..engine.basis.len())
        .filter(|&i| {
            let lm = &engine.basis[i].lm;
            !(0..engine.basis.len())
                .any(|k| k != i && engine.basis[k].lm.divides(lm))
        })
        .collect();

    // Inter-reduce tails; the leading monomials of a minimal basis
    // survive their own normal forms.
    let minimal: Vec<Reducer> = keep
        .iter()
        .map(|&i| Reducer::new(engine.basis[i].terms.clone()))
        .collect();
    let mut reduced: Vec<(Vec<u32>, Polynomial)> = Vec::with_capacity(minimal.len());
    for (pos, g) in minimal.iter().enumerate() {
        let others: Vec<Reducer> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != pos)
            .map(|(_, h)| Reducer::new(h.terms.clone()))
            .collect();
        let mut nf = reduce_fraction_free(g.terms.clone(), &others, order, None, ReduceMode::Full);
        debug_assert!(!nf.is_empty(), "minimal element reduced to zero");
        strip_content(&mut nf);
        reduced.push((order.sort_key(&nf[0].0), to_monic_poly(n, &nf)));
    }
    reduced.sort_by(|a, b| b.0.cmp(&a.0));

    let elements: Vec<Polynomial> = reduced.into_iter().map(|(_, g)| g).collect();
    let reducers = elements
        .iter()
        .map(|g| Reducer::new(to_int_terms(g, order).0))
        .collect();
    Ok(GroebnerBasis {
        order: order.clone(),
        elements,
        reducers,
    })
}

#[cfg(test)]
mod tests {
    use crate::poly::parse_poly_in_dim;

    use super::*;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_poly_in_dim(text, n).unwrap()
    }

    fn gb(gens: &[&str], n: usize) -> GroebnerBasis {
        let ideal = Ideal::new(n, gens.iter().map(|t| p(t, n)).collect());
        groebner(&ideal, &MonomialOrder::grevlex(n), &GbCaps::default()).unwrap()
    }

    #[test]
    fn coordinate_ideal() {
        let basis = gb(&["x", "y"], 2);
        assert_eq!(basis.elements(), &[p("x", 2), p("y", 2)]);
    }

    #[test]
    fn principal_ideal_becomes_monic() {
        let basis = gb(&["3*x^2 - 6*y"], 2);
        assert_eq!(basis.elements(), &[p("x^2 - 2*y", 2)]);
    }

    #[test]
    fn zero_ideal() {
        let ideal = Ideal::new(2, vec![Polynomial::zero(2)]);
        let basis = groebner(&ideal, &MonomialOrder::grevlex(2), &GbCaps::default()).unwrap();
        assert!(basis.elements().is_empty());
        assert_eq!(basis.normal_form(&p("x + 1", 2)), p("x + 1", 2));
        assert!(!basis.contains(&p("x", 2)));
        assert!(basis.contains(&Polynomial::zero(2)));
    }

    #[test]
    fn textbook_example_grlex() {
        let ideal = Ideal::new(2, vec![p("x^3 - 2*x*y", 2), p("x^2*y - 2*y^2 + x", 2)]);
        let basis = groebner(&ideal, &MonomialOrder::grlex(2), &GbCaps::default()).unwrap();
        let expected = [p("x^2", 2), p("x*y", 2), p("y^2 - 1/2*x", 2)];
        assert_eq!(basis.elements(), &expected);
    }

    #[test]
    fn idempotent_on_its_output() {
        let basis = gb(&["x^3 - 2*x*y + 1", "x^2*y - 2*y^2 + x"], 2);
        let again = groebner(
            &Ideal::new(2, basis.elements().to_vec()),
            basis.order(),
            &GbCaps::default(),
        )
        .unwrap();
        assert_eq!(again.elements(), basis.elements());
    }

    #[test]
    fn normal_form_agrees_with_cofactor_division() {
        let basis = gb(&["x^2 + y", "x*y^2 - x", "y^3 - 2*x*y"], 2);
        let order = basis.order();
        for seed in 0..20 {
            let q = crate::poly::random_poly(2, 5, 6, seed);
            let nf = basis.normal_form(&q);
            let division = super::super::divide::divide(&q, basis.elements(), order);
            assert_eq!(nf, division.remainder, "seed {seed}");
            assert!(basis.contains(&(&q - &nf)));
        }
    }

    #[test]
    fn all_s_polynomials_reduce_to_zero() {
        let basis = gb(&["x^2 + y", "x*y^2 - x", "y^3 - 2*x*y"], 2);
        let elems = basis.elements();
        let order = basis.order();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let lm_i = elems[i].terms().max_by(|a, b| order.cmp(a.0, b.0)).unwrap();
                let lm_j = elems[j].terms().max_by(|a, b| order.cmp(a.0, b.0)).unwrap();
                let lcm = lm_i.0.lcm(lm_j.0);
                let s = &elems[i].mul_term(&lm_i.0.div_into(&lcm), &(lm_j.1 / lm_i.1))
                    - &elems[j].mul_term(&lm_j.0.div_into(&lcm), &crate::poly::int(1));
                assert!(basis.normal_form(&s).is_zero());
            }
        }
    }

    #[test]
    fn spair_cap_is_an_error() {
        let ideal = Ideal::new(2, vec![p("x^3 - 2*x*y", 2), p("x^2*y - 2*y^2 + x", 2)]);
        let caps = GbCaps {
            spair_cap: 1,
            degree_cap: 40,
        };
        assert!(matches!(
            groebner(&ideal, &MonomialOrder::grevlex(2), &caps),
            Err(GbError::SPairCapExceeded { .. })
        ));
    }

    #[test]
    fn degree_cap_is_an_error() {
        let ideal = Ideal::new(2, vec![p("x^50", 2)]);
        assert!(matches!(
            groebner(&ideal, &MonomialOrder::grevlex(2), &GbCaps::default()),
            Err(GbError::DegreeCapExceeded { .. })
        ));
    }
}
