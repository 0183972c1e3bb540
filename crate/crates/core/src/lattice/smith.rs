use num_integer::Integer;
use num_traits::Zero;

use super::{q_frac, q_int, q_is_integer, q_mul, IntegerMatrix, Q};
use crate::error::{Error, Result};

/// `U * A * V = D` with `U`, `V` unimodular and `D` in Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `d_1 | d_2 | ...`, length `min(rows, cols)`.
    pub fn invariant_factors(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i)).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().take_while(|&&x| x != 0).count()
    }
}

/// Working state: the matrix being reduced plus the accumulated transforms.
struct Reducer {
    d: IntegerMatrix,
    u: IntegerMatrix,
    v: IntegerMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for m in [&mut self.d, &mut self.u] {
            for j in 0..m.cols() {
                let (x, y) = (m.get(a, j), m.get(b, j));
                m.set(a, j, y);
                m.set(b, j, x);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for m in [&mut self.d, &mut self.v] {
            for i in 0..m.rows() {
                let (x, y) = (m.get(i, a), m.get(i, b));
                m.set(i, a, y);
                m.set(i, b, x);
            }
        }
    }

    /// row[dst] -= k * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, k: i64) -> Result<()> {
        for m in [&mut self.d, &mut self.u] {
            for j in 0..m.cols() {
                let t = k
                    .checked_mul(m.get(src, j))
                    .and_then(|t| m.get(dst, j).checked_sub(t))
                    .ok_or(Error::Overflow("Smith normal form"))?;
                m.set(dst, j, t);
            }
        }
        Ok(())
    }

    /// col[dst] -= k * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, k: i64) -> Result<()> {
        for m in [&mut self.d, &mut self.v] {
            for i in 0..m.rows() {
                let t = k
                    .checked_mul(m.get(i, src))
                    .and_then(|t| m.get(i, dst).checked_sub(t))
                    .ok_or(Error::Overflow("Smith normal form"))?;
                m.set(i, dst, t);
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) -> Result<()> {
        for m in [&mut self.d, &mut self.u] {
            for j in 0..m.cols() {
                let x = m.get(r, j).checked_neg().ok_or(Error::Overflow("Smith normal form"))?;
                m.set(r, j, x);
            }
        }
        Ok(())
    }

    /// Moves the smallest nonzero entry of the trailing block to `(t, t)`.
    fn pivot_block(&mut self, t: usize) -> bool {
        let mut best: Option<(u64, usize, usize)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let a = self.d.get(i, j).unsigned_abs();
                if a != 0 && best.is_none_or(|(b, _, _)| a < b) {
                    best = Some((a, i, j));
                }
            }
        }
        match best {
            Some((_, i, j)) => {
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                true
            }
            None => false,
        }
    }

    /// Moves the smallest nonzero entry of row `t` / column `t` to `(t, t)`.
    fn pivot_cross(&mut self, t: usize) {
        let mut best = (self.d.get(t, t).unsigned_abs(), t, t);
        for i in t + 1..self.d.rows() {
            let a = self.d.get(i, t).unsigned_abs();
            if a != 0 && (best.0 == 0 || a < best.0) {
                best = (a, i, t);
            }
        }
        for j in t + 1..self.d.cols() {
            let a = self.d.get(t, j).unsigned_abs();
            if a != 0 && (best.0 == 0 || a < best.0) {
                best = (a, t, j);
            }
        }
        self.swap_rows(t, best.1);
        self.swap_cols(t, best.2);
    }

    fn reduce(&mut self) -> Result<()> {
        let (r, c) = (self.d.rows(), self.d.cols());
        for t in 0..r.min(c) {
            if !self.pivot_block(t) {
                break;
            }
            loop {
                let p = self.d.get(t, t);
                let mut residue = false;
                for i in t + 1..r {
                    let q = self.d.get(i, t) / p;
                    if q != 0 {
                        self.row_axpy(i, t, q)?;
                    }
                    residue |= self.d.get(i, t) != 0;
                }
                for j in t + 1..c {
                    let q = self.d.get(t, j) / p;
                    if q != 0 {
                        self.col_axpy(j, t, q)?;
                    }
                    residue |= self.d.get(t, j) != 0;
                }
                if residue {
                    self.pivot_cross(t);
                    continue;
                }
                // Pivot must divide the remaining block, else fold a row in.
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| self.d.get(i, j) % p != 0));
                match bad {
                    Some(i) => self.row_axpy(t, i, -1)?,
                    None => break,
                }
            }
            if self.d.get(t, t) < 0 {
                self.negate_row(t)?;
            }
        }
        Ok(())
    }
}

/// Smith normal form by elementary operations with smallest-pivot selection.
pub fn smith_normal_form(a: &IntegerMatrix) -> Result<SmithDecomposition> {
    let mut red = Reducer {
        d: a.clone(),
        u: IntegerMatrix::identity(a.rows()),
        v: IntegerMatrix::identity(a.cols()),
    };
    red.reduce()?;
    Ok(SmithDecomposition { u: red.u, d: red.d, v: red.v })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelInvariants {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl CokernelInvariants {
    /// Product of the torsion orders (1 when there is none).
    pub fn torsion_product(&self) -> Result<u64> {
        self.torsion
            .iter()
            .try_fold(1u64, |acc, &t| acc.checked_mul(t as u64))
            .ok_or(Error::Overflow("torsion product"))
    }
}

/// Free rank `cols - rank` and the non-unit invariant factors of `A`.
///
/// For square `A` the torsion product counts the finite subgroup
/// `{x in (Q/Z)^n : A x = 0}` modulo its identity component.
pub fn cokernel_invariants(a: &IntegerMatrix) -> Result<CokernelInvariants> {
    let snf = smith_normal_form(a)?;
    let factors = snf.invariant_factors();
    Ok(CokernelInvariants {
        free_rank: a.cols() - snf.rank(),
        torsion: factors.into_iter().filter(|&d| d > 1).collect(),
    })
}

/// Solution data for `A x = b (mod Z^rows)` with `x` real.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSolution {
    /// One rational solution, when any exists.
    pub particular: Option<Vec<Q>>,
    /// Integer basis of the real kernel of `A`.
    pub kernel_basis: Vec<Vec<i64>>,
}

impl LatticeSolution {
    pub fn is_solvable(&self) -> bool {
        self.particular.is_some()
    }
}

pub fn solve_mod_lattice(a: &IntegerMatrix, b: &[Q]) -> Result<LatticeSolution> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), a.rows())));
    }
    let snf = smith_normal_form(a)?;
    let rank = snf.rank();
    let ub = snf.u.apply_rational(b)?;
    let kernel_basis = (rank..a.cols()).map(|j| snf.v.column(j)).collect();
    if ub[rank..].iter().any(|&x| !q_is_integer(x)) {
        return Ok(LatticeSolution { particular: None, kernel_basis });
    }
    let mut y = vec![Q::zero(); a.cols()];
    for i in 0..rank {
        y[i] = q_mul(ub[i], Q::new(1, snf.d.get(i, i)))?;
    }
    let particular = snf.v.apply_rational(&y)?;
    Ok(LatticeSolution { particular: Some(particular), kernel_basis })
}

/// Integer solution of `A x = b` exactly, if one exists.
pub fn solve_integer(a: &IntegerMatrix, b: &[i64]) -> Result<Option<Vec<i64>>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), a.rows())));
    }
    let snf = smith_normal_form(a)?;
    let rank = snf.rank();
    let ub = snf.u.apply(b)?;
    if ub[rank..].iter().any(|&x| x != 0) {
        return Ok(None);
    }
    let mut y = vec![0i64; a.cols()];
    for i in 0..rank {
        let d = snf.d.get(i, i);
        if ub[i] % d != 0 {
            return Ok(None);
        }
        y[i] = ub[i] / d;
    }
    snf.v.apply(&y).map(Some)
}

/// Number of `x in ((1/n) Z / Z)^cols` with `A x = b (mod Z^rows)`.
///
/// Computed from the Smith form: after the change of variables `y = V^-1 x`
/// the system splits into independent congruences `d_i y_i = (U b)_i`.
pub fn count_torsion_solutions(a: &IntegerMatrix, b: &[Q], n: i64) -> Result<u128> {
    if n < 1 {
        return Err(Error::domain(format!("torsion order must be positive, got {n}")));
    }
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), a.rows())));
    }
    let snf = smith_normal_form(a)?;
    let ub = snf.u.apply_rational(b)?;
    // n * (U b) must be integral, otherwise no n-torsion point can hit it.
    let scaled: Vec<Q> = ub.iter().map(|&x| q_mul(x, q_int(n))).collect::<Result<_>>()?;
    if scaled.iter().any(|&x| !q_is_integer(x)) {
        return Ok(0);
    }
    let mut count: u128 = 1;
    for i in 0..a.cols() {
        let d = if i < a.rows() { snf.d.get(i, i) } else { 0 };
        // y_i = k / n, need d k = e (mod n) where e = n (U b)_i.
        let e = if i < a.rows() { scaled[i].to_integer().mod_floor(&n) } else { 0 };
        let g = d.gcd(&n);
        if e % g != 0 {
            return Ok(0);
        }
        count = count.checked_mul(g as u128).ok_or(Error::Overflow("torsion count"))?;
    }
    // rows beyond cols: 0 * y = e must hold mod 1
    for i in a.cols()..a.rows() {
        if !q_frac(ub[i]).is_zero() {
            return Ok(0);
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::q_sub;

    fn residual(a: &IntegerMatrix, x: &[Q], b: &[Q]) -> Result<Vec<Q>> {
        a.apply_rational(x)?.into_iter().zip(b).map(|(l, &r)| q_sub(l, r)).collect()
    }

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn check(a: &IntegerMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a).unwrap();
        assert_eq!(s.u.checked_mul(a).unwrap().checked_mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.determinant().unwrap().abs(), 1);
        assert_eq!(s.v.determinant().unwrap().abs(), 1);
        let f = s.invariant_factors();
        for w in f.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0, "{f:?}");
            }
        }
        s
    }

    #[test]
    fn identity_and_diag() {
        let s = check(&IntegerMatrix::identity(2));
        assert_eq!(s.d, IntegerMatrix::identity(2));
        let s = check(&IntegerMatrix::diagonal(&[2, 3]));
        assert_eq!(s.invariant_factors(), vec![1, 6]);
    }

    #[test]
    fn unimodular_pi1_matrix() {
        let s = check(&m(&[&[1, 1], &[0, -1]]));
        assert_eq!(s.invariant_factors(), vec![1, 1]);
    }

    #[test]
    fn rectangular_and_negative() {
        let s = check(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.invariant_factors(), vec![2, 6, 12]);
        let s = check(&m(&[&[0, -3, 0, 6]]));
        assert_eq!(s.invariant_factors(), vec![3]);
        check(&m(&[&[0, 0], &[0, 0], &[0, -5]]));
    }

    #[test]
    fn cokernels() {
        let z = IntegerMatrix::zeros(2, 2);
        assert_eq!(cokernel_invariants(&z).unwrap(), CokernelInvariants { free_rank: 2, torsion: vec![] });
        let two = IntegerMatrix::diagonal(&[2, 2]);
        assert_eq!(cokernel_invariants(&two).unwrap(), CokernelInvariants { free_rank: 0, torsion: vec![2, 2] });
        let a = IntegerMatrix::diagonal(&[1, -1]).minus_identity().unwrap();
        assert_eq!(cokernel_invariants(&a).unwrap(), CokernelInvariants { free_rank: 1, torsion: vec![2] });
    }

    #[test]
    fn modular_solving() {
        let half = Q::new(1, 2);
        let s = solve_mod_lattice(&IntegerMatrix::identity(2), &[half, half]).unwrap();
        assert_eq!(s.particular, Some(vec![half, half]));
        assert!(s.kernel_basis.is_empty());

        let s = solve_mod_lattice(&IntegerMatrix::diagonal(&[2, 0]), &[half, Q::new(1, 4)]).unwrap();
        assert!(!s.is_solvable());

        let a = m(&[&[1, -1], &[0, 0]]);
        let s = solve_mod_lattice(&a, &[Q::zero(), Q::zero()]).unwrap();
        assert!(s.is_solvable());
        assert_eq!(s.kernel_basis.len(), 1);
        let k = &s.kernel_basis[0];
        assert_eq!(a.apply(k).unwrap(), vec![0, 0]);
        assert_eq!(k[0].abs(), 1);
        assert_eq!(k[0], k[1]);
    }

    #[test]
    fn particular_solution_satisfies_system() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = [Q::new(1, 3), Q::new(2, 5)];
        let s = solve_mod_lattice(&a, &b).unwrap();
        let x = s.particular.unwrap();
        for r in residual(&a, &x, &b).unwrap() {
            assert!(r.is_integer());
        }
    }

    #[test]
    fn integer_solving() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        assert_eq!(solve_integer(&a, &[1, 1]).unwrap(), Some(vec![1, 1]));
        assert_eq!(solve_integer(&a, &[1, 0]).unwrap(), None);
    }

    #[test]
    fn torsion_counts() {
        let minus = IntegerMatrix::diagonal(&[-1, -1]).minus_identity().unwrap();
        let zero = [Q::zero(), Q::zero()];
        assert_eq!(count_torsion_solutions(&minus, &zero, 2).unwrap(), 4);
        assert_eq!(count_torsion_solutions(&minus, &zero, 3).unwrap(), 1);
        let a = IntegerMatrix::diagonal(&[1, -1]).minus_identity().unwrap();
        assert_eq!(count_torsion_solutions(&a, &zero, 4).unwrap(), 8);
        // z^2 = -1 has no 2-torsion or 3-torsion solutions, two 4-torsion ones
        let two = IntegerMatrix::diagonal(&[2]);
        assert_eq!(count_torsion_solutions(&two, &[Q::new(1, 2)], 2).unwrap(), 0);
        assert_eq!(count_torsion_solutions(&two, &[Q::new(1, 2)], 3).unwrap(), 0);
        assert_eq!(count_torsion_solutions(&two, &[Q::new(1, 2)], 4).unwrap(), 2);
    }
}
