//! Weyl group orders and conjugacy classes across the catalog.

use std::fmt::Write as _;

use brane_atlas::rootdatum::build_datum;
use brane_atlas::weyl::WeylGroup;
use brane_atlas::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for t in ["A1.sc", "A2.sc", "A3.sc", "B2.sc", "C3.ad", "G2", "A1xA1", "GL3", "D4.sc"] {
        let d = build_datum(t)?;
        let w = WeylGroup::generate(&d)?;
        let longest = (0..w.order()).map(|e| w.length(e)).max().unwrap_or(0);
        writeln!(
            out,
            "{:<12} rank {}  |W| = {:<4} classes {:<3} longest element length {}",
            d.label(),
            d.rank(),
            w.order(),
            w.conjugacy_classes().len(),
            longest
        )
        .unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
