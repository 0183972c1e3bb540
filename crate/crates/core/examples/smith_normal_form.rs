//! Smith normal form, cokernels and congruences modulo a lattice.

use std::fmt::Write as _;

use brane_atlas::lattice::{cokernel_invariants, smith_normal_form, solve_mod_lattice, IntegerMatrix, Q};
use brane_atlas::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for rows in [vec![vec![2, 0], vec![0, 3]], vec![vec![1, 1], vec![0, -1]], vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]] {
        let a = IntegerMatrix::from_rows(&rows)?;
        let snf = smith_normal_form(&a)?;
        let check = snf.u.checked_mul(&a)?.checked_mul(&snf.v)?;
        writeln!(out, "A = {a}\n  D = {}  (U A V == D: {})", snf.d, check == snf.d).unwrap();
    }

    // fixed points of z -> (z1, 1/z2) on (C*)^2 are governed by M - I
    let m = IntegerMatrix::diagonal(&[1, -1]);
    let ck = cokernel_invariants(&m.minus_identity()?)?;
    writeln!(out, "coker(M - I) for M = {m}: free rank {}, torsion {:?}", ck.free_rank, ck.torsion).unwrap();

    let a = IntegerMatrix::diagonal(&[2, 0]);
    let sol = solve_mod_lattice(&a, &[Q::new(1, 2), Q::new(1, 4)])?;
    writeln!(out, "diag(2,0) x = (1/2, 1/4) mod Z^2 solvable: {}", sol.is_solvable()).unwrap();
    let a = IntegerMatrix::from_rows(&[[1, -1], [0, 0]])?;
    let sol = solve_mod_lattice(&a, &[Q::from_integer(0), Q::from_integer(0)])?;
    writeln!(out, "[[1,-1],[0,0]] kernel basis: {:?}", sol.kernel_basis).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
