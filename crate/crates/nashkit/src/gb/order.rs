//! Monomial orders: graded reverse lexicographic, graded lexicographic,
//! and lexicographic, each with a configurable variable precedence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::poly::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    #[default]
    Grevlex,
    Grlex,
    Lex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Grevlex => "grevlex",
            OrderKind::Grlex => "grlex",
            OrderKind::Lex => "lex",
        }
    }
}

impl FromStr for OrderKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(OrderKind::Grevlex),
            "grlex" => Ok(OrderKind::Grlex),
            "lex" => Ok(OrderKind::Lex),
            other => Err(format!("unknown monomial order '{other}'")),
        }
    }
}

/// A total monomial order on a fixed number of variables.
///
/// `precedence[0]` is the most significant variable (1-based index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, n: usize) -> Self {
        MonomialOrder {
            kind,
            precedence: (1..=n).collect(),
        }
    }

    pub fn grevlex(n: usize) -> Self {
        Self::new(OrderKind::Grevlex, n)
    }

    pub fn grlex(n: usize) -> Self {
        Self::new(OrderKind::Grlex, n)
    }

    pub fn lex(n: usize) -> Self {
        Self::new(OrderKind::Lex, n)
    }

    /// Custom variable precedence; must be a permutation of `1..=n`.
    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self, String> {
        let n = precedence.len();
        let mut seen = vec![false; n + 1];
        for &v in &precedence {
            if v < 1 || v > n || seen[v] {
                return Err(format!("precedence {precedence:?} is not a permutation of 1..={n}"));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { kind, precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn num_vars(&self) -> usize {
        self.precedence.len()
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self.kind, OrderKind::Grevlex | OrderKind::Grlex)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), self.precedence.len());
        debug_assert_eq!(b.num_vars(), self.precedence.len());
        match self.kind {
            OrderKind::Lex => self.cmp_lex(a, b),
            OrderKind::Grlex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| self.cmp_lex(a, b)),
            OrderKind::Grevlex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| self.cmp_revlex_tiebreak(a, b)),
        }
    }

    fn cmp_lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.precedence {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// At equal total degree the last differing exponent decides, reversed.
    fn cmp_revlex_tiebreak(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in self.precedence.iter().rev() {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => {}
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// A vector whose lexicographic order agrees with this monomial order;
    /// used as a deterministic priority key.
    pub fn sort_key(&self, m: &Monomial) -> Vec<u32> {
        const FLIP: u32 = 1 << 20;
        match self.kind {
            OrderKind::Lex => self
                .precedence
                .iter()
                .map(|&v| u32::from(m.exponent(v)))
                .collect(),
            OrderKind::Grlex => std::iter::once(m.total_degree())
                .chain(self.precedence.iter().map(|&v| u32::from(m.exponent(v))))
                .collect(),
            OrderKind::Grevlex => std::iter::once(m.total_degree())
                .chain(
                    self.precedence
                        .iter()
                        .rev()
                        .map(|&v| FLIP - u32::from(m.exponent(v))),
                )
                .collect(),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let natural = self.precedence.iter().copied().eq(1..=self.num_vars());
        if natural {
            write!(f, "{}", self.kind.name())
        } else {
            write!(f, "{}{:?}", self.kind.name(), self.precedence)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exponents(exps.iter().copied())
    }

    #[test]
    fn grevlex_agrees_with_canonical_ord() {
        let order = MonomialOrder::grevlex(3);
        let a = m(&[0, 2, 0]);
        let b = m(&[1, 0, 1]);
        assert_eq!(order.cmp(&a, &b), a.cmp(&b));
        assert_eq!(order.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn grlex_vs_grevlex_differ() {
        // x*z vs y^2: grlex says x*z > y^2, grevlex the opposite.
        let xz = m(&[1, 0, 1]);
        let y2 = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::grlex(3).cmp(&xz, &y2), Ordering::Greater);
        assert_eq!(MonomialOrder::grevlex(3).cmp(&xz, &y2), Ordering::Less);
    }

    #[test]
    fn lex_ignores_degree() {
        let x = m(&[1, 0]);
        let y5 = m(&[0, 5]);
        assert_eq!(MonomialOrder::lex(2).cmp(&x, &y5), Ordering::Greater);
    }

    #[test]
    fn sort_key_consistent_with_cmp() {
        for kind in [OrderKind::Grevlex, OrderKind::Grlex, OrderKind::Lex] {
            let order = MonomialOrder::new(kind, 3);
            let monomials: Vec<Monomial> = (0u16..=3)
                .flat_map(|a| (0u16..=3).flat_map(move |b| (0u16..=3).map(move |c| m(&[a, b, c]))))
                .collect();
            for a in &monomials {
                for b in &monomials {
                    assert_eq!(
                        order.sort_key(a).cmp(&order.sort_key(b)),
                        order.cmp(a, b),
                        "key mismatch for {a:?} vs {b:?} under {kind:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn precedence_validation() {
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, vec![2, 1]).is_ok());
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, vec![1, 1]).is_err());
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, vec![0, 1]).is_err());
    }
}
