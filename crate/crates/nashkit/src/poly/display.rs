//! Printing. Terms come out in descending grevlex order with explicit
//! `*` and `^`, so `parse(format(p)) == p` structurally.

use std::fmt;

use num_traits::{One, Signed};

use super::{Monomial, Polynomial, Rational};

/// Surface name of variable `var` (1-based): `x, y, z, w` while the ring
/// dimension allows it, `x1..xn` otherwise.
pub(crate) fn var_name(n: usize, var: usize) -> String {
    if n <= 4 {
        match var {
            1 => "x".to_string(),
            2 => "y".to_string(),
            3 => "z".to_string(),
            _ => "w".to_string(),
        }
    } else {
        format!("x{var}")
    }
}

fn monomial_factors(n: usize, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for var in 1..=n {
        let e = m.exponent(var);
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(var_name(n, var));
        } else {
            parts.push(format!("{}^{}", var_name(n, var), e));
        }
    }
    parts.join("*")
}

fn coefficient_str(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let factors = monomial_factors(self.n, m);
            if factors.is_empty() {
                write!(f, "{}", coefficient_str(&abs))?;
            } else if abs.is_one() {
                write!(f, "{factors}")?;
            } else {
                write!(f, "{}*{}", coefficient_str(&abs), factors)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.n, self)
    }
}

/// Render a monomial the way the polynomial printer would.
pub fn format_monomial(n: usize, m: &Monomial) -> String {
    if m.is_one() {
        "1".to_string()
    } else {
        monomial_factors(n, m)
    }
}
