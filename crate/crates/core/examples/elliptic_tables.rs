//! Real elliptic curves: involutions by region, pi_1 actions and f maps.

use std::fmt::Write as _;

use brane_atlas::elliptic::{derived_topological_type, enumerate_involutions, f_map, pi1_matrix_with_source, Region};
use brane_atlas::involutions::Epsilon;
use brane_atlas::phase::Phase;
use brane_atlas::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let zero = [Phase::zero(), Phase::zero()];
    for region in Region::REAL {
        writeln!(out, "region {region} ({})", region.constraint()).unwrap();
        for inv in enumerate_involutions(region, Epsilon::Minus)? {
            let (p, src) = pi1_matrix_with_source(region, inv.epsilon, inv.a)?;
            let f = f_map(&inv, Epsilon::Plus, zero.clone())?;
            writeln!(
                out,
                "  {:<22} pi1 {} ({src})  f+ {}  type {:?}",
                inv.name(),
                p,
                f.m,
                derived_topological_type(&inv)?
            )
            .unwrap();
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
