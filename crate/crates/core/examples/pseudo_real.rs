//! Pseudo-real slices over the central 2-torsion of SL2, GL2 and SL2 x SL2.

use std::fmt::Write as _;

use brane_atlas::elliptic::{EllipticInvolution, Multiplier, Region};
use brane_atlas::involutions::{parse_sigma, Epsilon};
use brane_atlas::moduli::{pseudo_real_moduli, sigma_fixes, InvolutionQuery, Side, Twist};
use brane_atlas::rootdatum::{build_datum, center_two_torsion};
use brane_atlas::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let curve = EllipticInvolution::lookup(Region::A, Epsilon::Minus, Multiplier::MinusOne, false)?;
    for (group, sigma) in [("A1.sc", "split"), ("GL2", "id"), ("A1xA1", "swap")] {
        let d = build_datum(group)?;
        let s = parse_sigma(&d, sigma, Epsilon::Minus)?;
        let q = InvolutionQuery::new(d.clone(), s, curve.clone(), Epsilon::Minus, Side::Representation, Twist::Trivial)?;
        for z in center_two_torsion(&d)? {
            if !sigma_fixes(&q, &z)? {
                continue;
            }
            let (report, slice) = pseudo_real_moduli(&q, &z)?;
            let dims: Vec<String> = slice.components.iter().map(|&i| format!("{}", report.components[i].dim)).collect();
            writeln!(
                out,
                "{:<12} z = {:<10} omega_z = {:<16} slice {:?} real dims {:?}{}",
                d.label(),
                z.to_string(),
                slice.omega_z.to_string(),
                slice.components,
                dims,
                slice.diagnostic.map(|m| format!("  ({m})")).unwrap_or_default()
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
