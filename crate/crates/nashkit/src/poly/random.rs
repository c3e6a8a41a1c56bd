//! Seeded random polynomials for the verification corpus.
//!
//! Coefficients stay in {-3..3} \ {0} so downstream Groebner runs stay
//! desk-sized. Identical seeds give identical polynomials.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{int, Monomial, Polynomial};

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, min_degree: u16, max_degree: u16) -> Monomial {
    let degree = rng.random_range(min_degree..=max_degree);
    let mut exps = vec![0u16; n];
    for _ in 0..degree {
        exps[rng.random_range(0..n)] += 1;
    }
    Monomial::from_exponents(exps)
}

fn random_with_min_degree(
    n: usize,
    max_degree: u16,
    max_terms: usize,
    seed: u64,
    min_degree: u16,
) -> Polynomial {
    assert!(n >= 1, "dimension must be at least 1");
    assert!(max_degree >= min_degree, "degree bound below minimum degree");
    assert!(max_terms >= 1, "need at least one term");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut p = Polynomial::zero(n);
        let terms = rng.random_range(1..=max_terms);
        for _ in 0..terms {
            let m = random_monomial(&mut rng, n, min_degree, max_degree);
            let mut c = rng.random_range(-3i64..=3);
            if c == 0 {
                c = 1;
            }
            p = &p + &Polynomial::from_term(m, int(c));
        }
        // Terms may cancel; retry deterministically until nonzero.
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random polynomial with zero constant term, every monomial of total
/// degree in `1..=max_degree`, and at most `max_terms` terms.
pub fn random_poly(n: usize, max_degree: u16, max_terms: usize, seed: u64) -> Polynomial {
    random_with_min_degree(n, max_degree, max_terms, seed, 1)
}

/// Like [`random_poly`] but singular at the origin: every monomial has
/// total degree at least 2, so all first partials vanish at 0.
pub fn random_germ(n: usize, max_degree: u16, max_terms: usize, seed: u64) -> Polynomial {
    random_with_min_degree(n, max_degree, max_terms, seed, 2)
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        assert_eq!(random_poly(2, 3, 4, 7), random_poly(2, 3, 4, 7));
        assert_eq!(random_germ(3, 4, 6, 11), random_germ(3, 4, 6, 11));
    }

    #[test]
    fn germ_has_vanishing_gradient() {
        for seed in 0..50 {
            let p = random_germ(3, 4, 6, seed);
            assert!(p.constant_term().is_zero());
            for i in 1..=3 {
                assert!(p.derivative(i).constant_term().is_zero());
            }
        }
    }

    #[test]
    fn bounds_hold_across_seeds() {
        for seed in 0..100 {
            let p = random_poly(2, 3, 4, seed);
            assert!(!p.is_zero());
            assert!(p.num_terms() <= 4);
            assert!(p.total_degree().unwrap() <= 3);
            assert!(p.min_degree().unwrap() >= 1);
        }
    }
}
