//! Twisted conjugacy classes, Upsilon and shifted H^1 for a diagram flip.

use std::fmt::Write as _;

use brane_atlas::involutions::{induced_weyl_automorphism, parse_sigma, Epsilon};
use brane_atlas::rootdatum::build_datum;
use brane_atlas::weyl::{normalizer_fixed_torus, shifted_h1, twisted_classes, upsilon_from, WeylGroup};
use brane_atlas::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for (group, sigma) in [("A2.sc", "id"), ("A2.sc", "flip"), ("A1xA1", "swap"), ("B2.sc", "id")] {
        let d = build_datum(group)?;
        let s = parse_sigma(&d, sigma, Epsilon::Minus)?;
        let w = WeylGroup::generate(&d)?;
        let auto = induced_weyl_automorphism(&s, &w)?;
        let classes = twisted_classes(&w, &auto);
        let ups = upsilon_from(&classes);
        writeln!(out, "{} with sigma = {sigma}: {} twisted classes, |Upsilon| = {}", d.label(), classes.len(), ups.classes.len()).unwrap();
        for c in &classes {
            let n = normalizer_fixed_torus(&w, &auto, c.representative).len();
            writeln!(
                out,
                "  omega {:<16} size {} |N| {}  gamma {}",
                w.matrix(c.representative).to_string(),
                c.members.len(),
                n,
                w.matrix(c.gamma)
            )
            .unwrap();
        }
        for &g in &ups.classes {
            writeln!(out, "  H^1 shifted by {}: {} class(es)", w.matrix(g), shifted_h1(&w, &auto, g).len()).unwrap();
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
