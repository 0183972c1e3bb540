//! Exact unit-modulus shifts written additively.
//!
//! A phase `c + sum k_t * t` stands for the complex number
//! `exp(2 pi i (c + sum k_t t))`, where each symbol `t` is a free real
//! parameter. Phases live in `R/Z`, so the constant is kept in `[0, 1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{q_add, q_frac, q_int, q_mul, IntegerMatrix, Q};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase {
    constant: Q,
    symbols: BTreeMap<String, i64>,
}

impl Phase {
    pub fn zero() -> Self {
        Phase::default()
    }

    pub fn constant(q: Q) -> Self {
        Phase { constant: q_frac(q), symbols: BTreeMap::new() }
    }

    pub fn symbol(name: &str) -> Self {
        let mut symbols = BTreeMap::new();
        symbols.insert(name.to_string(), 1);
        Phase { constant: Q::zero(), symbols }
    }

    pub fn constant_part(&self) -> Q {
        self.constant
    }

    pub fn symbols(&self) -> &BTreeMap<String, i64> {
        &self.symbols
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.symbols.is_empty()
    }

    /// Numeric value in `[0, 1)` when no symbols remain.
    pub fn value(&self) -> Option<Q> {
        self.symbols.is_empty().then_some(self.constant)
    }

    pub fn checked_add(&self, rhs: &Phase) -> Result<Phase> {
        let mut symbols = self.symbols.clone();
        for (k, &v) in &rhs.symbols {
            let slot = symbols.entry(k.clone()).or_insert(0);
            *slot = slot.checked_add(v).ok_or(Error::Overflow("phase sum"))?;
        }
        symbols.retain(|_, v| *v != 0);
        Ok(Phase { constant: q_frac(q_add(self.constant, rhs.constant)?), symbols })
    }

    pub fn checked_scale(&self, k: i64) -> Result<Phase> {
        let mut symbols = BTreeMap::new();
        for (name, &v) in &self.symbols {
            let c = v.checked_mul(k).ok_or(Error::Overflow("phase scaling"))?;
            if c != 0 {
                symbols.insert(name.clone(), c);
            }
        }
        Ok(Phase { constant: q_frac(q_mul(self.constant, q_int(k))?), symbols })
    }

    pub fn neg(&self) -> Result<Phase> {
        self.checked_scale(-1)
    }

    /// Substitutes numeric values for symbols; unknown symbols are kept.
    pub fn substitute(&self, values: &BTreeMap<String, Q>) -> Result<Phase> {
        let mut out = Phase::constant(self.constant);
        for (name, &k) in &self.symbols {
            let term = match values.get(name) {
                Some(&v) => Phase::constant(q_mul(v, q_int(k))?),
                None => Phase::symbol(name).checked_scale(k)?,
            };
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }
}

/// `M * v` for a vector of phases.
pub fn apply_matrix(m: &IntegerMatrix, v: &[Phase]) -> Result<Vec<Phase>> {
    if v.len() != m.cols() {
        return Err(Error::Dimension(format!("phase vector of length {} for {} columns", v.len(), m.cols())));
    }
    (0..m.rows())
        .map(|i| {
            m.row(i).iter().zip(v).try_fold(Phase::zero(), |acc, (&a, p)| acc.checked_add(&p.checked_scale(a)?))
        })
        .collect()
}

pub fn add_vectors(a: &[Phase], b: &[Phase]) -> Result<Vec<Phase>> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("phase vectors of length {} and {}", a.len(), b.len())));
    }
    a.iter().zip(b).map(|(x, y)| x.checked_add(y)).collect()
}

pub fn numeric_vector(v: &[Phase]) -> Option<Vec<Q>> {
    v.iter().map(Phase::value).collect()
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.constant.is_zero() || self.symbols.is_empty() {
            write!(f, "{}", self.constant)?;
            wrote = true;
        }
        for (name, &k) in &self.symbols {
            let sign = if k < 0 { "-" } else if wrote { "+" } else { "" };
            let mag = k.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            wrote = true;
        }
        Ok(())
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phase({self})")
    }
}

fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.parse().map_err(|_| bad())?;
            let d: i64 = d.parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => s.parse::<i64>().map(Q::from_integer).map_err(|_| bad()),
    }
}

impl FromStr for Phase {
    type Err = Error;

    /// Accepts sums like `1/2`, `t`, `-2t+1/4`, `1/3-s`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::parse("empty phase"));
        }
        let mut out = Phase::zero();
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in t.char_indices() {
            if (c == '+' || c == '-') && i > start {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(Error::parse(format!("bad phase {s:?}")));
            }
            let split = body.find(|c: char| c.is_ascii_alphabetic() || c == '_').unwrap_or(body.len());
            let (coef, name) = body.split_at(split);
            let phase = if name.is_empty() {
                Phase::constant(parse_rational(coef)?)
            } else {
                if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(Error::parse(format!("bad symbol {name:?}")));
                }
                let k = if coef.is_empty() { Q::one() } else { parse_rational(coef)? };
                if !k.is_integer() {
                    return Err(Error::parse(format!("symbol coefficients must be integers in {s:?}")));
                }
                Phase::symbol(name).checked_scale(k.to_integer())?
            };
            out = out.checked_add(&if neg { phase.neg()? } else { phase })?;
        }
        Ok(out)
    }
}
