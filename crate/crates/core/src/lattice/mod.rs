//! Exact integer-matrix algebra.
//!
//! Everything here works over `i64` with checked arithmetic: an overflow is
//! reported as [`Error::Overflow`], never wrapped. Rational quantities use
//! [`Q`] (a reduced `i64` fraction) and go through the `q_*` helpers, which
//! are checked as well.

mod smith;

pub use smith::{
    cokernel_invariants, count_torsion_solutions, smith_normal_form, solve_integer,
    solve_mod_lattice, CokernelInvariants, LatticeSolution, SmithDecomposition,
};

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Q = Ratio<i64>;

pub(crate) fn q_add(a: Q, b: Q) -> Result<Q> {
    a.checked_add(&b).ok_or(Error::Overflow("rational addition"))
}

pub(crate) fn q_sub(a: Q, b: Q) -> Result<Q> {
    a.checked_sub(&b).ok_or(Error::Overflow("rational subtraction"))
}

pub(crate) fn q_mul(a: Q, b: Q) -> Result<Q> {
    a.checked_mul(&b).ok_or(Error::Overflow("rational multiplication"))
}

pub(crate) fn q_int(n: i64) -> Q {
    Q::from_integer(n)
}

/// Representative of `q` modulo 1 in `[0, 1)`.
pub fn q_frac(q: Q) -> Q {
    let n = q.numer().mod_floor(q.denom());
    Q::new(n, *q.denom())
}

pub(crate) fn q_is_integer(q: Q) -> bool {
    q.is_integer()
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!("matrix must be non-empty, got {rows}x{cols}")));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntegerMatrix { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        Self::new(rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns<C: AsRef<[i64]>>(cols: &[C]) -> Result<Self> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        IntegerMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == i64::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a.checked_mul(rhs.get(k, j)).ok_or(Error::Overflow("matrix product"))?;
                    let slot = &mut out.data[i * rhs.cols + j];
                    *slot = slot.checked_add(term).ok_or(Error::Overflow("matrix product"))?;
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Self, op: fn(i64, i64) -> Option<i64>, what: &'static str) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow(what)))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntegerMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, i64::checked_add, "matrix sum")
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, i64::checked_sub, "matrix difference")
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::Overflow("matrix scaling")))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntegerMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn neg(&self) -> Result<Self> {
        self.checked_scale(-1)
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Result<Self> {
        self.checked_sub(&Self::identity(self.rows))
    }

    /// `self + I`.
    pub fn plus_identity(&self) -> Result<Self> {
        self.checked_add(&Self::identity(self.rows))
    }

    /// Kronecker product; index `(i, a)` of the result is `i * rhs.rows + a`.
    pub fn kron(&self, rhs: &Self) -> Result<Self> {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        let v = a.checked_mul(rhs.get(p, q)).ok_or(Error::Overflow("kronecker product"))?;
                        out.set(i * rhs.rows + p, j * rhs.cols + q, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).try_fold(0i64, |acc, (&a, &x)| {
                    a.checked_mul(x)
                        .and_then(|t| acc.checked_add(t))
                        .ok_or(Error::Overflow("matrix-vector product"))
                })
            })
            .collect()
    }

    pub fn apply_rational(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).try_fold(Q::zero(), |acc, (&a, &x)| {
                    q_add(acc, q_mul(q_int(a), x)?)
                })
            })
            .collect()
    }

    /// Smallest `k >= 1` with `self^k = I`, searching up to `limit`.
    pub fn order(&self, limit: usize) -> Result<Option<usize>> {
        if !self.is_square() {
            return Err(Error::Dimension("order of a non-square matrix".into()));
        }
        let mut power = self.clone();
        for k in 1..=limit {
            if power.is_identity() {
                return Ok(Some(k));
            }
            power = power.checked_mul(self)?;
        }
        Ok(None)
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<i64> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k * n + k] == 0 {
                match (k + 1..n).find(|&i| m[i * n + k] != 0) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i * n + j]
                        .checked_mul(m[k * n + k])
                        .and_then(|a| m[i * n + k].checked_mul(m[k * n + j]).and_then(|b| a.checked_sub(b)))
                        .ok_or(Error::Overflow("determinant"))?;
                    m[i * n + j] = num / prev;
                }
            }
            prev = m[k * n + k];
        }
        i64::try_from(sign * m[n * n - 1]).map_err(|_| Error::Overflow("determinant"))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(smith_normal_form(self)?.rank())
    }
}

/// Inverse over the rationals by Gauss-Jordan elimination, if it exists.
pub fn rational_inverse(m: &IntegerMatrix) -> Result<Option<Vec<Vec<Q>>>> {
    if !m.is_square() {
        return Err(Error::Dimension("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| if j < n { q_int(m.get(i, j)) } else { q_int(i64::from(j - n == i)) })
                .collect()
        })
        .collect();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(None);
        };
        a.swap(col, piv);
        let inv = Q::from_integer(1) / a[col][col];
        for j in 0..2 * n {
            a[col][j] = q_mul(a[col][j], inv)?;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..2 * n {
                    a[r][j] = q_sub(a[r][j], q_mul(f, a[col][j])?)?;
                }
            }
        }
    }
    Ok(Some(a.into_iter().map(|row| row[n..].to_vec()).collect()))
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for IntegerMatrix {
    type Err = Error;

    /// Parses the `[[a,b],[c,d]]` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix("[[")
            .and_then(|x| x.strip_suffix("]]"))
            .ok_or_else(|| Error::parse(format!("malformed matrix {s:?}")))?;
        let rows = inner
            .split("],[")
            .map(|r| {
                r.split(',')
                    .map(|x| x.parse::<i64>().map_err(|_| Error::parse(format!("bad matrix entry {x:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows)
    }
}
