//! Fixed sets of torus involutions, checked against a torsion-point census.

use std::fmt::Write as _;

use brane_atlas::lattice::{IntegerMatrix, Q};
use brane_atlas::phase::Phase;
use brane_atlas::torusfix::{fixed_subgroup, torsion_point_census, zero_shift, TorusMap};
use brane_atlas::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let half = Phase::constant(Q::new(1, 2));
    let cases = [
        ("z -> 1/z", TorusMap::split(IntegerMatrix::diagonal(&[-1, -1]), false, zero_shift(2))?),
        ("z -> conj z", TorusMap::split(IntegerMatrix::identity(2), true, zero_shift(2))?),
        ("(z1, 1/z2)", TorusMap::split(IntegerMatrix::diagonal(&[1, -1]), false, zero_shift(2))?),
        ("(-z1, 1/z2)", TorusMap::split(IntegerMatrix::diagonal(&[1, -1]), false, vec![half.clone(), Phase::zero()])?),
        ("(z2, z1)", TorusMap::split(IntegerMatrix::from_rows(&[[0, 1], [1, 0]])?, false, zero_shift(2))?),
        ("(b z2, z1), b = e^{2 pi i t}", TorusMap::split(IntegerMatrix::from_rows(&[[0, 1], [1, 0]])?, false, vec![Phase::symbol("t"), Phase::zero()])?),
    ];
    for (name, t) in &cases {
        let f = fixed_subgroup(t)?;
        write!(out, "{name:<30} {f}").unwrap();
        if let Ok(counts) = [2, 3, 4, 6].iter().map(|&n| torsion_point_census(t, n)).collect::<Result<Vec<_>>>() {
            write!(out, "   census N=2,3,4,6: {counts:?}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
