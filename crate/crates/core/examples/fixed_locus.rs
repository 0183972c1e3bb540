//! Fixed locus of an involution on the moduli space, on both sides.

use brane_atlas::cli::report::{emit_table, Sections};
use brane_atlas::elliptic::{EllipticInvolution, Multiplier, Region};
use brane_atlas::involutions::{parse_sigma, Epsilon};
use brane_atlas::moduli::{fixed_locus_decomposition, InvolutionQuery, Side, Twist};
use brane_atlas::rootdatum::build_datum;
use brane_atlas::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let d = build_datum("GL2")?;
    let sigma = parse_sigma(&d, "id", Epsilon::Minus)?;
    let curve = EllipticInvolution::lookup(Region::B, Epsilon::Minus, Multiplier::I, false)?;
    for side in [Side::Representation, Side::Higgs] {
        let q = InvolutionQuery::new(d.clone(), sigma.clone(), curve.clone(), Epsilon::Minus, side, Twist::Trivial)?;
        out.push_str(&emit_table(&fixed_locus_decomposition(&q)?, &Sections::default()));
        out.push('\n');
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
