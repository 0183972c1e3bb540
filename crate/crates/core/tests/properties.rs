use brane_atlas::lattice::{cokernel_invariants, smith_normal_form, solve_integer, solve_mod_lattice, IntegerMatrix, Q};
use brane_atlas::phase::Phase;
use brane_atlas::torusfix::{census_formula_applies, fixed_subgroup, predicted_census, torsion_point_census, TorusMap};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntegerMatrix> {
    prop::collection::vec(-bound..=bound, rows * cols).prop_map(move |data| IntegerMatrix::new(rows, cols, data).unwrap())
}

fn any_matrix() -> impl Strategy<Value = IntegerMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c, 6))
}

/// Rank by fraction-free (Bareiss) elimination in i128.
fn bareiss_rank(a: &IntegerMatrix) -> usize {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<i128>> = (0..rows).map(|i| (0..cols).map(|j| a.get(i, j) as i128).collect()).collect();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| m[i][col] != 0) else { continue };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn det(a: &IntegerMatrix) -> i64 {
    let n = a.rows();
    if n == 1 {
        return a.get(0, 0);
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                (1..n).map(|i| (0..n).filter(|&k| k != j).map(|k| a.get(i, k)).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * a.get(0, j) * det(&IntegerMatrix::from_rows(&minor).unwrap())
        })
        .sum()
}

proptest! {
    #[test]
    fn smith_form_invariants(a in any_matrix()) {
        let s = smith_normal_form(&a).unwrap();
        prop_assert_eq!(s.u.checked_mul(&a).unwrap().checked_mul(&s.v).unwrap(), s.d.clone());
        prop_assert_eq!(det(&s.u).abs(), 1);
        prop_assert_eq!(det(&s.v).abs(), 1);
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert_eq!(s.d.get(i, j), 0);
                }
            }
        }
        let f = s.invariant_factors();
        prop_assert!(f.iter().all(|&x| x >= 0));
        for w in f.windows(2) {
            // d_i | d_{i+1}, with zeros last
            prop_assert!(w[0] != 0 || w[1] == 0);
            if w[0] != 0 {
                prop_assert_eq!(w[1] % w[0], 0);
            }
        }
    }

    #[test]
    fn rank_matches_bareiss(a in any_matrix()) {
        prop_assert_eq!(smith_normal_form(&a).unwrap().rank(), bareiss_rank(&a));
        prop_assert_eq!(a.rank().unwrap(), bareiss_rank(&a));
    }

    #[test]
    fn torsion_product_is_determinant(a in (1usize..=3).prop_flat_map(|n| matrix(n, n, 5))) {
        let d = det(&a);
        prop_assume!(d != 0);
        prop_assert_eq!(cokernel_invariants(&a).unwrap().torsion_product().unwrap(), d.unsigned_abs());
    }

    /// `#{x in (Z/N)^n : A x = 0 mod N}` from the Smith form against brute force.
    #[test]
    fn cokernel_counts_by_brute_force(a in (1usize..=3).prop_flat_map(|n| matrix(n, n, 5)), n_mod in 2i64..=6) {
        let n = a.rows();
        let s = smith_normal_form(&a).unwrap();
        let expected: i64 = s
            .invariant_factors()
            .iter()
            .map(|&d| if d == 0 { n_mod } else { num_integer::gcd(d, n_mod) })
            .product();
        let mut count = 0;
        for code in 0..n_mod.pow(n as u32) {
            let x: Vec<i64> = (0..n).map(|i| (code / n_mod.pow(i as u32)) % n_mod).collect();
            if a.apply(&x).unwrap().iter().all(|v| v.rem_euclid(n_mod) == 0) {
                count += 1;
            }
        }
        prop_assert_eq!(count, expected);
    }

    #[test]
    fn lattice_solutions_solve(a in any_matrix(), num in prop::collection::vec(-6i64..=6, 4), den in 1i64..=4) {
        let b: Vec<Q> = num.iter().take(a.rows()).map(|&k| Q::new(k, den)).collect();
        let sol = solve_mod_lattice(&a, &b).unwrap();
        if let Some(x) = &sol.particular {
            let ax = a.apply_rational(x).unwrap();
            prop_assert!(ax.iter().zip(&b).all(|(l, r)| (*l - *r).is_integer()));
        }
        for k in &sol.kernel_basis {
            prop_assert!(a.apply(k).unwrap().iter().all(|&v| v == 0));
        }
        prop_assert_eq!(sol.kernel_basis.len(), a.cols() - bareiss_rank(&a));
        let bi: Vec<i64> = num.iter().take(a.rows()).copied().collect();
        if let Some(x) = solve_integer(&a, &bi).unwrap() {
            prop_assert_eq!(a.apply(&x).unwrap(), bi);
        }
    }

    /// Torus maps with arbitrary small linear part and a shift in (1/6) Z.
    #[test]
    fn census_matches_smith_prediction(
        m in (1usize..=3).prop_flat_map(|n| matrix(n, n, 2)),
        shift in prop::collection::vec(0i64..6, 3),
        conj in any::<bool>(),
        n_tors in prop::sample::select(vec![2i64, 3, 4, 6]),
    ) {
        let q: Vec<Phase> = shift.iter().take(m.rows()).map(|&k| Phase::constant(Q::new(k, 6))).collect();
        let t = TorusMap::split(m, conj, q).unwrap();
        let count = torsion_point_census(&t, n_tors).unwrap();
        prop_assert_eq!(count, predicted_census(&t, n_tors).unwrap());
        if census_formula_applies(&t, n_tors).unwrap() {
            let f = fixed_subgroup(&t).unwrap();
            let formula = if f.is_nonempty() { f.components as u128 * (n_tors as u128).pow(f.torus_dim as u32) } else { 0 };
            prop_assert_eq!(count, formula);
        }
    }
}
