//! Internal consistency of the embedded curve tables.

use crate::elliptic::{
    curve_fixed_set, derive_pi1, derived_topological_type, enumerate_involutions, f_map, pi1_matrix,
    pi1_matrix_with_source, tabulated_pi1, Multiplier, Region, Source, FLAGGED_ROW, F_MAP_TABLE,
};
use crate::error::Result;
use crate::involutions::Epsilon;
use crate::lattice::IntegerMatrix;
use crate::phase::Phase;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCheck {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check(out: &mut Vec<TableCheck>, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
    out.push(TableCheck { name: name.into(), ok, detail: detail.into() });
}

fn lit(rows: [[i64; 2]; 2]) -> IntegerMatrix {
    IntegerMatrix::from_rows(&rows).expect("2x2 literal")
}

const ALL_MULTIPLIERS: [Multiplier; 8] = [
    Multiplier::One,
    Multiplier::MinusOne,
    Multiplier::I,
    Multiplier::MinusI,
    Multiplier::Gamma,
    Multiplier::MinusGamma,
    Multiplier::GammaSq,
    Multiplier::MinusGammaSq,
];

fn catalog() -> Result<Vec<crate::elliptic::EllipticInvolution>> {
    let mut rows = enumerate_involutions(Region::Generic, Epsilon::Plus)?;
    for r in Region::REAL {
        rows.extend(enumerate_involutions(r, Epsilon::Minus)?);
    }
    Ok(rows)
}

/// Runs every table validation. Informational lines have `ok = true`.
pub fn table_checks() -> Result<Vec<TableCheck>> {
    let mut out = Vec::new();
    let zero = [Phase::zero(), Phase::zero()];
    let rows = catalog()?;

    for inv in &rows {
        let p = pi1_matrix(inv)?;
        let sq = p.checked_mul(&p)?;
        check(&mut out, format!("pi1 involutive: {inv}"), sq.is_identity(), format!("P = {p}"));
        for sign in [Epsilon::Plus, Epsilon::Minus] {
            let f = f_map(inv, sign, zero.clone())?;
            let v = f.involution_verdict()?;
            check(
                &mut out,
                format!("f{sign} involutive: {inv}"),
                v == crate::elliptic::Verdict::Holds,
                format!("M = {}, conj = {}", f.m, f.conj),
            );
        }
    }

    for region in Region::REAL {
        for a in ALL_MULTIPLIERS {
            let Some(tab) = tabulated_pi1(region, Epsilon::Minus, a) else { continue };
            match derive_pi1(region, Epsilon::Minus, a)? {
                Some(der) if der == tab => {}
                Some(der) => check(
                    &mut out,
                    format!("pi1 entry alpha(-,{a}) on region {region}"),
                    true,
                    format!("tabulated {tab} disagrees with the lattice; computed {der} is used"),
                ),
                None => check(
                    &mut out,
                    format!("pi1 entry alpha(-,{a}) on region {region}"),
                    true,
                    format!("tabulated {tab}, but alpha(-,{a}) does not preserve the lattice here; not in the catalog"),
                ),
            }
        }
    }

    for (k, row) in F_MAP_TABLE.iter().enumerate() {
        let fp = lit(row.f_plus);
        let fm = lit(row.f_minus);
        let name = format!("table row {k}: alpha({},{}) on {:?}", row.epsilon, row.a, row.regions);
        let fp_ok = fp.checked_mul(&fp)?.is_identity();
        check(&mut out, format!("{name}: f+ squares to identity"), fp_ok, format!("{fp}"));
        let dual = fp.neg()?;
        if k == FLAGGED_ROW {
            let p = pi1_matrix_with_source(row.regions[0], row.epsilon, row.a)?.0;
            let derived = p.transpose().neg()?;
            let printed_sq = fm.checked_mul(&fm)?;
            let ok = !printed_sq.is_identity()
                && fm != dual
                && derived == dual
                && derived.checked_mul(&derived)?.is_identity();
            check(
                &mut out,
                format!("{name}: flagged f- cell"),
                ok,
                format!(
                    "printed {fm} squares to {printed_sq} and breaks the duality; derived -P^T = {derived} is used"
                ),
            );
        } else {
            let fm_ok = fm.checked_mul(&fm)?.is_identity();
            check(&mut out, format!("{name}: f- squares to identity"), fm_ok, format!("{fm}"));
            check(&mut out, format!("{name}: f- = conj o inverse o f+"), fm == dual, format!("f- = {fm}, -f+ = {dual}"));
        }
        for &region in row.regions {
            let tab = tabulated_pi1(region, row.epsilon, row.a).unwrap_or_else(|| IntegerMatrix::zeros(2, 2));
            check(
                &mut out,
                format!("{name}: f+ is the transpose of the tabulated pi1 action on {region}"),
                tab.transpose() == fp,
                format!("pi1 {tab}"),
            );
            let Ok((p, src)) = pi1_matrix_with_source(region, row.epsilon, row.a) else {
                continue;
            };
            if src == Source::Computed {
                check(
                    &mut out,
                    format!("{name}: pipeline value on {region}"),
                    true,
                    format!("uses computed f+ = {}, f- = {}", p.transpose(), p.transpose().neg()?),
                );
            }
        }
    }

    for region in Region::REAL {
        for inv in enumerate_involutions(region, Epsilon::Minus)? {
            let derived = derived_topological_type(&inv)?;
            check(
                &mut out,
                format!("topological type: {inv}"),
                Some(derived) == inv.topological_type,
                format!("tabulated {:?}, from fixed set {derived:?}", inv.topological_type),
            );
        }
    }

    for inv in enumerate_involutions(Region::Generic, Epsilon::Plus)? {
        let p = pi1_matrix(&inv)?;
        let fixed = curve_fixed_set(&p, &inv.canonical_translation())?;
        let expected = match inv.fixed_locus {
            Some("X") => Some((2, 1)),
            Some("empty") => None,
            Some("X[2]") | Some("y/2 + X[2]") => Some((0, 4)),
            _ => Some((usize::MAX, 0)),
        };
        check(
            &mut out,
            format!("fixed locus: {inv}"),
            fixed == expected,
            format!("tabulated {}, computed {fixed:?}", inv.fixed_locus.unwrap_or("?")),
        );
    }
    Ok(out)
}
