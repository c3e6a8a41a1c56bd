//! Identity harness for structured maximal-minor expansions.
//!
//! Each check builds the named submatrices of the second Jacobian matrix
//! with rows ordered `b_0`, the named indices, then the extra rows, and
//! the stated columns first. It computes both sides symbolically and
//! reports exact equality or the difference polynomial as a
//! counterexample certificate. Hypotheses are validated before anything
//! is computed; violations are reported, not tested.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::poly::{int, rat, random_poly, Polynomial, Rational};
use crate::qforms::q_polynomial;

use super::labels::{ColLabel, RowLabel};
use super::matrix::build_jac2;

/// The structured-minor identities, named by their column patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaId {
    /// Rows `b_{i_1}..b_{i_r}`, columns `b_{i_a j_a}` with the `j_a`
    /// weakly increasing: the determinant is the product of the `f_{j_a}`.
    DetProduct,
    /// Column index set smaller than the variable count: determinant zero.
    Degenerate,
    /// Columns `(ik, jk, jl | il, jj, kk)`:
    /// `det(M) + det(N) = -Q_{ij;kl} det(A)`.
    ExpansionA,
    /// Columns `(ii, ij, jk | ii, ik, jj)`, `j` not among filler indices:
    /// `det(M) + det(N) = Q_{ij;ik} det(A)`.
    ExpansionB1,
    /// Same columns, `i` not among filler indices:
    /// `det(M) + det(N) = Q_{ij;ik} det(A) - 1/2 Q_{ij;ij} det(B)`.
    ExpansionB2,
    /// Columns `(ii, ij, jj)`: `det(M) = 1/2 Q_{ij;ij} det(A)`.
    Iijj,
    /// Columns `(ii, ik, il, jk, jl)`: `det(M) = f_i^2 Q_{ij;kl} det(A)`.
    IjklIi,
    /// Columns `(ij, ik, il, jk, jl)`: `det(M) = 2 f_i f_j Q_{ij;kl} det(A)`.
    IjklIj,
    /// Column `(ii)` with `i` absent from the fillers:
    /// `det(M) = -f_i det(N)`.
    Reduction,
}

impl LemmaId {
    pub const ALL: [LemmaId; 9] = [
        LemmaId::DetProduct,
        LemmaId::Degenerate,
        LemmaId::ExpansionA,
        LemmaId::ExpansionB1,
        LemmaId::ExpansionB2,
        LemmaId::Iijj,
        LemmaId::IjklIi,
        LemmaId::IjklIj,
        LemmaId::Reduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::DetProduct => "det_product",
            LemmaId::Degenerate => "degenerate",
            LemmaId::ExpansionA => "expansion_a",
            LemmaId::ExpansionB1 => "expansion_b1",
            LemmaId::ExpansionB2 => "expansion_b2",
            LemmaId::Iijj => "iijj",
            LemmaId::IjklIi => "ijkl_ii",
            LemmaId::IjklIj => "ijkl_ij",
            LemmaId::Reduction => "reduction",
        }
    }

    pub fn from_name(name: &str) -> Option<LemmaId> {
        LemmaId::ALL.into_iter().find(|l| l.name() == name)
    }

    /// Smallest dimension the construction fits in.
    pub fn min_dimension(self) -> usize {
        match self {
            LemmaId::DetProduct => 1,
            LemmaId::Iijj => 2,
            LemmaId::ExpansionB1 | LemmaId::ExpansionB2 | LemmaId::Reduction => 3,
            LemmaId::Degenerate | LemmaId::ExpansionA | LemmaId::IjklIi | LemmaId::IjklIj => 4,
        }
    }
}

/// Instantiation data: named indices, extra row indices, filler columns.
#[derive(Clone, Debug)]
pub struct LemmaCase {
    pub indices: Vec<usize>,
    pub extra_rows: Vec<usize>,
    pub fillers: Vec<ColLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaHypothesisError(pub String);

impl fmt::Display for LemmaHypothesisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lemma hypothesis violated: {}", self.0)
    }
}

impl std::error::Error for LemmaHypothesisError {}

fn bail(msg: impl Into<String>) -> LemmaHypothesisError {
    LemmaHypothesisError(msg.into())
}

/// Outcome of one identity check.
#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub lemma: LemmaId,
    pub holds: bool,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    /// `lhs - rhs`; zero exactly when the identity holds.
    pub difference: Polynomial,
    /// For `ijkl_ii` only: whether the variant with factor `Q_{ij;ik}`
    /// (instead of `Q_{ij;kl}`) also balances the same determinant.
    pub alternate_holds: Option<bool>,
}

fn validate_indices(
    n: usize,
    named: &[usize],
    extras: &[usize],
) -> Result<Vec<usize>, LemmaHypothesisError> {
    let mut all = named.to_vec();
    all.extend_from_slice(extras);
    for &idx in &all {
        if idx < 1 || idx > n {
            return Err(bail(format!("index {idx} out of range 1..={n}")));
        }
    }
    let mut sorted = all.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != all.len() {
        return Err(bail("row indices must be pairwise distinct"));
    }
    Ok(sorted)
}

fn validate_fillers(
    fillers: &[ColLabel],
    named_cols: &[ColLabel],
    expected: usize,
) -> Result<(), LemmaHypothesisError> {
    if fillers.len() != expected {
        return Err(bail(format!(
            "expected {expected} filler columns, found {}",
            fillers.len()
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    for c in fillers {
        if c.has_zero_index() {
            return Err(bail(format!("filler {c} has index 0")));
        }
        if named_cols.contains(c) {
            return Err(bail(format!("filler {c} collides with a named column")));
        }
        if !seen.insert(*c) {
            return Err(bail(format!("duplicate filler column {c}")));
        }
    }
    Ok(())
}

fn filler_indices(fillers: &[ColLabel]) -> Vec<usize> {
    let mut v: Vec<usize> = fillers.iter().flat_map(|c| [c.i(), c.j()]).collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn require_subset(
    what: &str,
    indices: &[usize],
    allowed: &[usize],
) -> Result<(), LemmaHypothesisError> {
    for idx in indices {
        if !allowed.contains(idx) {
            return Err(bail(format!("{what}: index {idx} not allowed")));
        }
    }
    Ok(())
}

fn rows_from(named: &[usize], extras: &[usize]) -> Vec<RowLabel> {
    let mut rows = vec![RowLabel(0)];
    rows.extend(named.iter().map(|&i| RowLabel(i)));
    rows.extend(extras.iter().map(|&i| RowLabel(i)));
    rows
}

fn remove_rows(rows: &[RowLabel], drop: &[usize]) -> Vec<RowLabel> {
    rows.iter()
        .copied()
        .filter(|r| !drop.contains(&r.0))
        .collect()
}

/// Check one identity instance exactly.
pub fn lemma_identity_check(
    lemma: LemmaId,
    f: &Polynomial,
    case: &LemmaCase,
) -> Result<LemmaCheck, LemmaHypothesisError> {
    let n = f.num_vars();
    let jac = build_jac2(f);
    let grid = |rows: &[RowLabel], cols: &[ColLabel]| jac.grid(rows, cols);
    let fk = |k: usize| f.derivative(k);

    let finish = |lemma: LemmaId, lhs: Polynomial, rhs: Polynomial, alt: Option<bool>| {
        let difference = &lhs - &rhs;
        LemmaCheck {
            lemma,
            holds: difference.is_zero(),
            lhs,
            rhs,
            difference,
            alternate_holds: alt,
        }
    };

    match lemma {
        LemmaId::DetProduct => {
            let rows = &case.indices;
            if rows.is_empty() || rows.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bail("row indices must be strictly increasing"));
            }
            if rows.len() != case.fillers.len() {
                return Err(bail("need one column per row"));
            }
            validate_fillers(&case.fillers, &[], rows.len())?;
            let mut partners = Vec::new();
            for (&i, c) in rows.iter().zip(&case.fillers) {
                let Some(j) = c.partner(i) else {
                    return Err(bail(format!("column {c} does not contain row index {i}")));
                };
                partners.push(j);
            }
            if partners.windows(2).any(|w| w[0] > w[1]) {
                return Err(bail("partner indices must be weakly increasing"));
            }
            validate_indices(n, rows, &[])?;
            let row_labels: Vec<RowLabel> = rows.iter().map(|&i| RowLabel(i)).collect();
            let lhs = grid(&row_labels, &case.fillers).det();
            let rhs = partners
                .iter()
                .fold(Polynomial::one(n), |acc, &j| &acc * &fk(j));
            Ok(finish(lemma, lhs, rhs, None))
        }

        LemmaId::Degenerate => {
            validate_fillers(&case.fillers, &[], n + 1)?;
            let covered = filler_indices(&case.fillers);
            if covered.len() >= n {
                return Err(bail(format!(
                    "column index set has {} elements; the hypothesis needs fewer than {n}",
                    covered.len()
                )));
            }
            let rows: Vec<RowLabel> = (0..=n).map(RowLabel).collect();
            let lhs = grid(&rows, &case.fillers).det();
            Ok(finish(lemma, lhs, Polynomial::zero(n), None))
        }

        LemmaId::ExpansionA => {
            let [i, j, k, l] = case.indices[..] else {
                return Err(bail("expected four named indices i, j, k, l"));
            };
            let s = validate_indices(n, &case.indices, &case.extra_rows)?;
            let r = s.len();
            let named_m = [ColLabel::new(i, k), ColLabel::new(j, k), ColLabel::new(j, l)];
            let named_n = [ColLabel::new(i, l), ColLabel::new(j, j), ColLabel::new(k, k)];
            let mut named_all = named_m.to_vec();
            named_all.extend_from_slice(&named_n);
            validate_fillers(&case.fillers, &named_all, r - 2)?;
            let u = filler_indices(&case.fillers);
            if u.contains(&j) || u.contains(&k) {
                return Err(bail("filler indices must avoid j and k"));
            }
            require_subset("filler indices", &u, &s)?;

            let rows = rows_from(&case.indices, &case.extra_rows);
            let cols_m: Vec<ColLabel> =
                named_m.iter().copied().chain(case.fillers.iter().copied()).collect();
            let cols_n: Vec<ColLabel> =
                named_n.iter().copied().chain(case.fillers.iter().copied()).collect();
            let a_rows = remove_rows(&rows, &[0, j, k]);
            let lhs = &grid(&rows, &cols_m).det() + &grid(&rows, &cols_n).det();
            let rhs = -&(&q_polynomial(f, i, j, k, l) * &grid(&a_rows, &case.fillers).det());
            Ok(finish(lemma, lhs, rhs, None))
        }

        LemmaId::ExpansionB1 | LemmaId::ExpansionB2 => {
            let [i, j, k] = case.indices[..] else {
                return Err(bail("expected three named indices i, j, k"));
            };
            let s = validate_indices(n, &case.indices, &case.extra_rows)?;
            let r = s.len();
            let named_m = [ColLabel::new(i, i), ColLabel::new(i, j), ColLabel::new(j, k)];
            let named_n = [ColLabel::new(i, i), ColLabel::new(i, k), ColLabel::new(j, j)];
            let mut named_all = named_m.to_vec();
            named_all.extend_from_slice(&named_n[1..]);
            validate_fillers(&case.fillers, &named_all, r - 2)?;
            let u = filler_indices(&case.fillers);
            require_subset("filler indices", &u, &s)?;
            let excluded = if lemma == LemmaId::ExpansionB1 { j } else { i };
            if u.contains(&excluded) {
                return Err(bail(format!("filler indices must avoid {excluded}")));
            }

            let rows = rows_from(&case.indices, &case.extra_rows);
            let cols_m: Vec<ColLabel> =
                named_m.iter().copied().chain(case.fillers.iter().copied()).collect();
            let cols_n: Vec<ColLabel> =
                named_n.iter().copied().chain(case.fillers.iter().copied()).collect();
            let lhs = &grid(&rows, &cols_m).det() + &grid(&rows, &cols_n).det();
            let a_rows = remove_rows(&rows, &[0, i, j]);
            let det_a = grid(&a_rows, &case.fillers).det();
            let rhs = if lemma == LemmaId::ExpansionB1 {
                &q_polynomial(f, i, j, i, k) * &det_a
            } else {
                let b_rows = remove_rows(&rows, &[0, i, k]);
                let det_b = grid(&b_rows, &case.fillers).det();
                let half = q_polynomial(f, i, j, i, j).scale(&rat(1, 2));
                &(&q_polynomial(f, i, j, i, k) * &det_a) - &(&half * &det_b)
            };
            Ok(finish(lemma, lhs, rhs, None))
        }

        LemmaId::Iijj => {
            let [i, j] = case.indices[..] else {
                return Err(bail("expected two named indices i, j"));
            };
            let s = validate_indices(n, &case.indices, &case.extra_rows)?;
            let r = s.len();
            let named = [ColLabel::new(i, i), ColLabel::new(i, j), ColLabel::new(j, j)];
            validate_fillers(&case.fillers, &named, r - 2)?;

            let rows = rows_from(&case.indices, &case.extra_rows);
            let cols: Vec<ColLabel> =
                named.iter().copied().chain(case.fillers.iter().copied()).collect();
            let lhs = grid(&rows, &cols).det();
            let a_rows = remove_rows(&rows, &[0, i, j]);
            let rhs = &q_polynomial(f, i, j, i, j).scale(&rat(1, 2))
                * &grid(&a_rows, &case.fillers).det();
            Ok(finish(lemma, lhs, rhs, None))
        }

        LemmaId::IjklIi | LemmaId::IjklIj => {
            let [i, j, k, l] = case.indices[..] else {
                return Err(bail("expected four named indices i, j, k, l"));
            };
            let s = validate_indices(n, &case.indices, &case.extra_rows)?;
            let r = s.len();
            let first = if lemma == LemmaId::IjklIi {
                ColLabel::new(i, i)
            } else {
                ColLabel::new(i, j)
            };
            let named = [
                first,
                ColLabel::new(i, k),
                ColLabel::new(i, l),
                ColLabel::new(j, k),
                ColLabel::new(j, l),
            ];
            validate_fillers(&case.fillers, &named, r.checked_sub(4).ok_or_else(|| {
                bail("need at least four nonzero row indices")
            })?)?;

            let rows = rows_from(&case.indices, &case.extra_rows);
            let cols: Vec<ColLabel> =
                named.iter().copied().chain(case.fillers.iter().copied()).collect();
            let lhs = grid(&rows, &cols).det();
            let a_rows = remove_rows(&rows, &[0, i, j, k, l]);
            let det_a = grid(&a_rows, &case.fillers).det();
            let (rhs, alt) = if lemma == LemmaId::IjklIi {
                let fi2 = fk(i).pow(2);
                let rhs = &(&fi2 * &q_polynomial(f, i, j, k, l)) * &det_a;
                let alternate = &(&fi2 * &q_polynomial(f, i, j, i, k)) * &det_a;
                let alt_holds = (&lhs - &alternate).is_zero();
                (rhs, Some(alt_holds))
            } else {
                let factor = (&fk(i) * &fk(j)).scale(&int(2));
                (&(&factor * &q_polynomial(f, i, j, k, l)) * &det_a, None)
            };
            Ok(finish(lemma, lhs, rhs, alt))
        }

        LemmaId::Reduction => {
            let [i] = case.indices[..] else {
                return Err(bail("expected one named index i"));
            };
            let s = validate_indices(n, &case.indices, &case.extra_rows)?;
            let r = s.len();
            let named = [ColLabel::new(i, i)];
            validate_fillers(&case.fillers, &named, r)?;
            let u = filler_indices(&case.fillers);
            if u.contains(&i) {
                return Err(bail("filler indices must avoid i"));
            }
            require_subset("filler indices", &u, &s)?;

            let rows = rows_from(&case.indices, &case.extra_rows);
            let cols: Vec<ColLabel> =
                named.iter().copied().chain(case.fillers.iter().copied()).collect();
            let lhs = grid(&rows, &cols).det();
            let n_rows = remove_rows(&rows, &[i]);
            let rhs = -&(&fk(i) * &grid(&n_rows, &case.fillers).det());
            Ok(finish(lemma, lhs, rhs, None))
        }
    }
}

// ---------------------------------------------------------------------
// Seeded corpus runner.

fn shuffled<T: Clone>(items: &[T], rng: &mut ChaCha8Rng) -> Vec<T> {
    let mut v = items.to_vec();
    for i in (1..v.len()).rev() {
        let j = rng.random_range(0..=i);
        v.swap(i, j);
    }
    v
}

fn sample_distinct(pool: &[usize], count: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    shuffled(pool, rng)[..count].to_vec()
}

fn all_labels_over(indices: &[usize]) -> Vec<ColLabel> {
    let mut out = Vec::new();
    for (ai, &a) in indices.iter().enumerate() {
        for &b in &indices[ai..] {
            out.push(ColLabel::new(a, b));
        }
    }
    out
}

/// Draw a random admissible instantiation, or `None` when the lemma does
/// not fit in dimension `n`.
pub fn random_case(lemma: LemmaId, n: usize, seed: u64) -> Option<LemmaCase> {
    if n < lemma.min_dimension() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<usize> = (1..=n).collect();
    match lemma {
        LemmaId::DetProduct => {
            let r = rng.random_range(1..=n);
            let mut rows = sample_distinct(&pool, r, &mut rng);
            rows.sort_unstable();
            for _ in 0..64 {
                let mut js: Vec<usize> = (0..r).map(|_| rng.random_range(1..=n)).collect();
                js.sort_unstable();
                let cols: Vec<ColLabel> = rows
                    .iter()
                    .zip(&js)
                    .map(|(&i, &j)| ColLabel::new(i, j))
                    .collect();
                let mut dedup = cols.clone();
                dedup.sort();
                dedup.dedup();
                if dedup.len() == cols.len() {
                    return Some(LemmaCase {
                        indices: rows,
                        extra_rows: vec![],
                        fillers: cols,
                    });
                }
            }
            // Diagonal fallback: columns b_{ii} are always distinct.
            let cols = rows.iter().map(|&i| ColLabel::new(i, i)).collect();
            Some(LemmaCase {
                indices: rows,
                extra_rows: vec![],
                fillers: cols,
            })
        }
        LemmaId::Degenerate => {
            let min_u = (1..n)
                .find(|&u| u * (u + 1) / 2 >= n + 1)
                .expect("dimension admits a degenerate selection");
            let u_size = rng.random_range(min_u..=n - 1);
            let support = sample_distinct(&pool, u_size, &mut rng);
            let labels = all_labels_over(&support);
            let fillers = shuffled(&labels, &mut rng)[..n + 1].to_vec();
            Some(LemmaCase {
                indices: vec![],
                extra_rows: vec![],
                fillers,
            })
        }
        LemmaId::ExpansionA => {
            let r = rng.random_range(4..=n);
            let chosen = sample_distinct(&pool, r, &mut rng);
            let (named, extras) = chosen.split_at(4);
            let [i, j, k, l] = [named[0], named[1], named[2], named[3]];
            let s_minus_jk: Vec<usize> = chosen
                .iter()
                .copied()
                .filter(|&x| x != j && x != k)
                .collect();
            let forbidden = [
                ColLabel::new(i, k),
                ColLabel::new(j, k),
                ColLabel::new(j, l),
                ColLabel::new(i, l),
                ColLabel::new(j, j),
                ColLabel::new(k, k),
            ];
            let available: Vec<ColLabel> = all_labels_over(&s_minus_jk)
                .into_iter()
                .filter(|c| !forbidden.contains(c))
                .collect();
            if available.len() < r - 2 {
                return None;
            }
            let shuffled_labels = shuffled(&available, &mut rng);
            Some(LemmaCase {
                indices: vec![i, j, k, l],
                extra_rows: extras.to_vec(),
                fillers: shuffled_labels[..r - 2].to_vec(),
            })
        }
        LemmaId::ExpansionB1 | LemmaId::ExpansionB2 => {
            let r = rng.random_range(3..=n);
            let chosen = sample_distinct(&pool, r, &mut rng);
            let (named, extras) = chosen.split_at(3);
            let [i, j, k] = [named[0], named[1], named[2]];
            let excluded = if lemma == LemmaId::ExpansionB1 { j } else { i };
            let allowed: Vec<usize> = chosen
                .iter()
                .copied()
                .filter(|&x| x != excluded)
                .collect();
            let forbidden = [
                ColLabel::new(i, i),
                ColLabel::new(i, j),
                ColLabel::new(j, k),
                ColLabel::new(i, k),
                ColLabel::new(j, j),
            ];
            let available: Vec<ColLabel> = all_labels_over(&allowed)
                .into_iter()
                .filter(|c| !forbidden.contains(c))
                .collect();
            if available.len() < r - 2 {
                return None;
            }
            let shuffled_labels = shuffled(&available, &mut rng);
            Some(LemmaCase {
                indices: vec![i, j, k],
                extra_rows: extras.to_vec(),
                fillers: shuffled_labels[..r - 2].to_vec(),
            })
        }
        LemmaId::Iijj => {
            let r = rng.random_range(2..=n);
            let chosen = sample_distinct(&pool, r, &mut rng);
            let (named, extras) = chosen.split_at(2);
            let [i, j] = [named[0], named[1]];
            let forbidden = [
                ColLabel::new(i, i),
                ColLabel::new(i, j),
                ColLabel::new(j, j),
            ];
            let available: Vec<ColLabel> = all_labels_over(&pool)
                .into_iter()
                .filter(|c| !forbidden.contains(c))
                .collect();
            let shuffled_labels = shuffled(&available, &mut rng);
            Some(LemmaCase {
                indices: vec![i, j],
                extra_rows: extras.to_vec(),
                fillers: shuffled_labels[..r - 2].to_vec(),
            })
        }
        LemmaId::IjklIi | LemmaId::IjklIj => {
            let r = rng.random_range(4..=n);
            let chosen = sample_distinct(&pool, r, &mut rng);
            let (named, extras) = chosen.split_at(4);
            let [i, j, k, l] = [named[0], named[1], named[2], named[3]];
            let first = if lemma == LemmaId::IjklIi {
                ColLabel::new(i, i)
            } else {
                ColLabel::new(i, j)
            };
            let forbidden = [
                first,
                ColLabel::new(i, k),
                ColLabel::new(i, l),
                ColLabel::new(j, k),
                ColLabel::new(j, l),
            ];
            let available: Vec<ColLabel> = all_labels_over(&pool)
                .into_iter()
                .filter(|c| !forbidden.contains(c))
                .collect();
            if available.len() < r - 4 {
                return None;
            }
            let shuffled_labels = shuffled(&available, &mut rng);
            Some(LemmaCase {
                indices: vec![i, j, k, l],
                extra_rows: extras.to_vec(),
                fillers: shuffled_labels[..r - 4].to_vec(),
            })
        }
        LemmaId::Reduction => {
            let r = rng.random_range(3..=n);
            let chosen = sample_distinct(&pool, r, &mut rng);
            let i = chosen[0];
            let extras = chosen[1..].to_vec();
            let available = all_labels_over(&extras);
            if available.len() < r {
                return None;
            }
            let shuffled_labels = shuffled(&available, &mut rng);
            Some(LemmaCase {
                indices: vec![i],
                extra_rows: extras,
                fillers: shuffled_labels[..r].to_vec(),
            })
        }
    }
}

/// Configuration of a corpus run over every lemma and dimension.
#[derive(Clone, Debug)]
pub struct LemmaSuiteConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub cases_per_dimension: usize,
    pub base_seed: u64,
    pub max_degree: u16,
    pub max_terms: usize,
}

impl Default for LemmaSuiteConfig {
    fn default() -> Self {
        LemmaSuiteConfig {
            n_min: 2,
            n_max: 5,
            cases_per_dimension: 50,
            base_seed: 0,
            max_degree: 3,
            max_terms: 5,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaTally {
    pub lemma: String,
    pub n: usize,
    pub cases: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaSuiteReport {
    pub total_cases: usize,
    pub failures: usize,
    /// Random rational-point evaluations of both sides that disagreed;
    /// an independent spot-check, expected zero.
    pub spot_check_failures: usize,
    pub tallies: Vec<LemmaTally>,
    /// Adjudication of the `ijkl_ii` factor: how often the identity held
    /// as stated versus with the `Q_{ij;ik}` variant.
    pub ijkl_ii_cases: usize,
    pub ijkl_ii_statement_holds: usize,
    pub ijkl_ii_variant_holds: usize,
    pub failure_details: Vec<String>,
}

impl LemmaSuiteReport {
    pub fn all_hold(&self) -> bool {
        self.failures == 0 && self.spot_check_failures == 0
    }
}

fn spot_check(lhs: &Polynomial, rhs: &Polynomial, rng: &mut ChaCha8Rng) -> bool {
    let n = lhs.num_vars();
    let point: Vec<Rational> = (0..n)
        .map(|_| rat(rng.random_range(-5..=5), rng.random_range(1..=3)))
        .collect();
    lhs.evaluate(&point) == rhs.evaluate(&point)
}

/// Run the full identity suite over seeded random polynomials.
pub fn run_lemma_suite(config: &LemmaSuiteConfig) -> LemmaSuiteReport {
    struct CaseOutcome {
        lemma: LemmaId,
        n: usize,
        holds: bool,
        spot_ok: bool,
        alternate: Option<bool>,
        detail: Option<String>,
    }

    let mut jobs: Vec<(LemmaId, usize, u64)> = Vec::new();
    for (li, &lemma) in LemmaId::ALL.iter().enumerate() {
        for n in config.n_min.max(lemma.min_dimension())..=config.n_max {
            for c in 0..config.cases_per_dimension {
                let seed = config
                    .base_seed
                    .wrapping_add((li as u64) << 40)
                    .wrapping_add((n as u64) << 24)
                    .wrapping_add(c as u64);
                jobs.push((lemma, n, seed));
            }
        }
    }

    let outcomes: Vec<CaseOutcome> = jobs
        .into_par_iter()
        .map(|(lemma, n, seed)| {
            let f = random_poly(n, config.max_degree, config.max_terms, seed);
            let case = random_case(lemma, n, seed ^ 0x9e3779b97f4a7c15)
                .expect("dimension already filtered");
            match lemma_identity_check(lemma, &f, &case) {
                Ok(check) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5bf03635);
                    let spot_ok = spot_check(&check.lhs, &check.rhs, &mut rng);
                    let detail = (!check.holds).then(|| {
                        format!(
                            "{} n={n} seed={seed} f={} case={:?} difference={}",
                            lemma.name(),
                            f,
                            case,
                            check.difference
                        )
                    });
                    CaseOutcome {
                        lemma,
                        n,
                        holds: check.holds,
                        spot_ok,
                        alternate: check.alternate_holds,
                        detail,
                    }
                }
                Err(e) => CaseOutcome {
                    lemma,
                    n,
                    holds: false,
                    spot_ok: true,
                    alternate: None,
                    detail: Some(format!(
                        "{} n={n} seed={seed}: sampler produced invalid case: {e}",
                        lemma.name()
                    )),
                },
            }
        })
        .collect();

    let mut tallies: Vec<LemmaTally> = Vec::new();
    let mut report = LemmaSuiteReport {
        total_cases: outcomes.len(),
        failures: 0,
        spot_check_failures: 0,
        tallies: Vec::new(),
        ijkl_ii_cases: 0,
        ijkl_ii_statement_holds: 0,
        ijkl_ii_variant_holds: 0,
        failure_details: Vec::new(),
    };
    for o in &outcomes {
        if !o.holds {
            report.failures += 1;
        }
        if !o.spot_ok {
            report.spot_check_failures += 1;
        }
        if o.lemma == LemmaId::IjklIi {
            report.ijkl_ii_cases += 1;
            if o.holds {
                report.ijkl_ii_statement_holds += 1;
            }
            if o.alternate == Some(true) {
                report.ijkl_ii_variant_holds += 1;
            }
        }
        if let Some(d) = &o.detail {
            if report.failure_details.len() < 20 {
                report.failure_details.push(d.clone());
            }
        }
        match tallies
            .iter_mut()
            .find(|t| t.lemma == o.lemma.name() && t.n == o.n)
        {
            Some(t) => {
                t.cases += 1;
                t.failures += usize::from(!o.holds);
            }
            None => tallies.push(LemmaTally {
                lemma: o.lemma.name().to_string(),
                n: o.n,
                cases: 1,
                failures: usize::from(!o.holds),
            }),
        }
    }
    report.tallies = tallies;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iijj_without_fillers_matches_half_q() {
        for seed in 0..50 {
            let f = random_poly(2, 4, 5, seed);
            let case = LemmaCase {
                indices: vec![1, 2],
                extra_rows: vec![],
                fillers: vec![],
            };
            let check = lemma_identity_check(LemmaId::Iijj, &f, &case).unwrap();
            assert!(check.holds, "seed {seed}: difference {}", check.difference);
        }
    }

    #[test]
    fn reduction_in_three_variables() {
        for seed in 0..20 {
            let f = random_poly(3, 4, 6, seed);
            let case = LemmaCase {
                indices: vec![1],
                extra_rows: vec![2, 3],
                fillers: vec![
                    ColLabel::new(2, 2),
                    ColLabel::new(2, 3),
                    ColLabel::new(3, 3),
                ],
            };
            let check = lemma_identity_check(LemmaId::Reduction, &f, &case).unwrap();
            assert!(check.holds, "seed {seed}: difference {}", check.difference);
        }
    }

    #[test]
    fn expansion_a_hypothesis_violation() {
        let f = random_poly(4, 3, 6, 1);
        // Filler contains j = 2.
        let case = LemmaCase {
            indices: vec![1, 2, 3, 4],
            extra_rows: vec![],
            fillers: vec![ColLabel::new(1, 2), ColLabel::new(1, 1)],
        };
        let err = lemma_identity_check(LemmaId::ExpansionA, &f, &case).unwrap_err();
        assert!(err.0.contains("avoid"));
    }

    #[test]
    fn expansion_a_smallest_instance() {
        for seed in 0..20 {
            let f = random_poly(4, 3, 6, seed);
            let case = LemmaCase {
                indices: vec![1, 2, 3, 4],
                extra_rows: vec![],
                fillers: vec![ColLabel::new(1, 1), ColLabel::new(4, 4)],
            };
            let check = lemma_identity_check(LemmaId::ExpansionA, &f, &case).unwrap();
            assert!(check.holds, "seed {seed}: difference {}", check.difference);
        }
    }

    #[test]
    fn ijkl_ii_statement_factor_wins() {
        for seed in 0..20 {
            let f = random_poly(4, 3, 6, seed);
            let case = LemmaCase {
                indices: vec![1, 2, 3, 4],
                extra_rows: vec![],
                fillers: vec![],
            };
            let check = lemma_identity_check(LemmaId::IjklIi, &f, &case).unwrap();
            assert!(check.holds, "seed {seed}: difference {}", check.difference);
        }
    }

    #[test]
    fn random_cases_are_admissible() {
        for &lemma in &LemmaId::ALL {
            for n in lemma.min_dimension()..=5 {
                for seed in 0..10 {
                    let f = random_poly(n, 3, 4, seed);
                    let case = random_case(lemma, n, 7000 + seed).unwrap();
                    let check = lemma_identity_check(lemma, &f, &case);
                    assert!(
                        check.is_ok(),
                        "{} n={n} seed={seed}: {:?}",
                        lemma.name(),
                        check.err()
                    );
                }
            }
        }
    }

    #[test]
    fn small_suite_has_no_failures() {
        let config = LemmaSuiteConfig {
            cases_per_dimension: 3,
            n_max: 4,
            ..LemmaSuiteConfig::default()
        };
        let report = run_lemma_suite(&config);
        assert!(report.all_hold(), "{:?}", report.failure_details);
        assert!(report.ijkl_ii_cases > 0);
        assert_eq!(report.ijkl_ii_statement_holds, report.ijkl_ii_cases);
    }
}
