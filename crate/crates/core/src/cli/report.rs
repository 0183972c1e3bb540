//! Text renderings of a [`ModuliReport`].
//!
//! The structured format is one `key = value` pair per line. Repeated
//! blocks (`component.*`, `h1.*`, `pseudo_real.*`) start at their first
//! key and list every field in a fixed order, so `parse(emit(r)) == r`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{IntegerMatrix, Q};
use crate::moduli::{FixedLocusComponent, GammaSlice, ModuliReport, PseudoRealSlice};
use crate::phase::Phase;
use crate::torusfix::{DimUnit, PaperDimension};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Structured,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "structured" => Ok(Format::Structured),
            other => Err(Error::parse(format!("unknown format {other:?} (expected table or structured)"))),
        }
    }
}

/// Report sections that can be switched off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sections {
    pub components: bool,
    pub h1: bool,
    pub pseudo_real: bool,
}

impl Default for Sections {
    fn default() -> Self {
        Sections { components: true, h1: true, pseudo_real: true }
    }
}

impl Sections {
    pub fn parse_list(s: &str) -> Result<Self> {
        let mut out = Sections { components: false, h1: false, pseudo_real: false };
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            match item {
                "components" => out.components = true,
                "h1" => out.h1 = true,
                "pseudo-real" => out.pseudo_real = true,
                other => return Err(Error::parse(format!("unknown output {other:?} (components, h1, pseudo-real)"))),
            }
        }
        Ok(out)
    }
}

pub fn dim_text(dim: usize, unit: DimUnit) -> String {
    format!("dim {dim} ({unit})")
}

fn list<T: ToString>(v: &[T]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_rows(header: &[&str], rows: &[Vec<String>], out: &mut String) {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>, out: &mut String| {
        let mut s = String::new();
        for (k, (c, w)) in cells.iter().zip(&width).enumerate() {
            if k + 1 == cells.len() {
                s.push_str(c);
            } else {
                let _ = write!(s, "{c:<w$}  ");
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header.to_vec(), out);
    for r in rows {
        line(r.iter().map(String::as_str).collect(), out);
    }
}

fn component_rows(r: &ModuliReport, which: &[usize]) -> Vec<Vec<String>> {
    which
        .iter()
        .map(|&i| {
            let c = &r.components[i];
            vec![
                i.to_string(),
                c.omega_matrix.to_string(),
                c.gamma.to_string(),
                c.gamma_order.to_string(),
                dim_text(c.dim, c.unit),
                c.paper_dim.to_string(),
                c.pi0.to_string(),
                c.pi0_quotient.map_or("-".into(), |x| x.to_string()),
                c.class_size.to_string(),
                c.normalizer_order.to_string(),
                yes(c.maximal).into(),
                c.brane.to_string(),
                yes(c.singular).into(),
                if c.condition.is_empty() {
                    "-".into()
                } else {
                    c.condition.iter().map(|p| format!("{p}=0")).collect::<Vec<_>>().join(" ")
                },
            ]
        })
        .collect()
}

const COLUMNS: [&str; 14] = [
    "#", "omega", "gamma", "ord", "dim", "formula", "pi0", "pi0/N", "class", "|N|", "maximal", "brane", "singular",
    "condition",
];

fn header(r: &ModuliReport, out: &mut String) {
    let rows = [
        ("group", r.group.clone()),
        ("sigma", r.sigma.clone()),
        ("curve", r.curve.clone()),
        ("sign", r.sign.to_string()),
        ("side", r.side.to_string()),
        ("twist", r.twist.clone()),
        ("weyl order", r.weyl_order.to_string()),
        ("twisted classes", r.class_count.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<16} {v}");
    }
}

fn z_text(z: &[Q]) -> String {
    format!("({})", z.iter().map(Q::to_string).collect::<Vec<_>>().join(","))
}

/// Human-readable table.
pub fn emit_table(r: &ModuliReport, sections: &Sections) -> String {
    let mut out = String::new();
    header(r, &mut out);
    out.push('\n');
    if sections.components {
        if r.components.is_empty() {
            out.push_str("no fixed components\n");
        } else {
            let all: Vec<usize> = (0..r.components.len()).collect();
            render_rows(&COLUMNS, &component_rows(r, &all), &mut out);
        }
        if !r.empty_classes.is_empty() {
            let _ = writeln!(out, "classes with empty fixed set: {}", list(&r.empty_classes));
        }
    }
    if sections.h1 && !r.h1_index.is_empty() {
        out.push_str("\nby gamma = omega sigma(omega):\n");
        for s in &r.h1_index {
            let _ = writeln!(out, "  {}: components {}", s.gamma, list(&s.components));
        }
    }
    if sections.pseudo_real && !r.pseudo_real.is_empty() {
        out.push_str("\npseudo-real slices:\n");
        for s in &r.pseudo_real {
            emit_slice_line(s, &mut out);
        }
    }
    out
}

fn emit_slice_line(s: &PseudoRealSlice, out: &mut String) {
    let _ = write!(out, "  z = {}: omega_z = {}: ", z_text(&s.z), s.omega_z);
    if s.components.is_empty() {
        let _ = writeln!(out, "empty ({})", s.diagnostic.as_deref().unwrap_or("no components"));
    } else {
        let _ = writeln!(out, "components {}", list(&s.components));
    }
}

/// Table for one pseudo-real slice.
pub fn emit_slice_table(r: &ModuliReport, s: &PseudoRealSlice) -> String {
    let mut out = String::new();
    header(r, &mut out);
    let _ = writeln!(out, "{:<16} {}", "z", z_text(&s.z));
    let _ = writeln!(out, "{:<16} {}", "omega_z", s.omega_z);
    out.push('\n');
    if s.components.is_empty() {
        out.push_str("no fixed components\n");
        let _ = writeln!(out, "reason: {}", s.diagnostic.as_deref().unwrap_or("-"));
    } else {
        render_rows(&COLUMNS, &component_rows(r, &s.components), &mut out);
    }
    out.push_str("the forgetful map onto this slice is bijective (recorded, not verified)\n");
    out
}

/// Line-oriented key/value form.
pub fn emit_structured(r: &ModuliReport) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: String| {
        let _ = writeln!(out, "{k} = {v}");
    };
    kv("query.group", r.group.clone());
    kv("query.sigma", r.sigma.clone());
    kv("query.curve", r.curve.clone());
    kv("query.sign", r.sign.to_string());
    kv("query.side", r.side.to_string());
    kv("query.twist", r.twist.clone());
    kv("weyl.order", r.weyl_order.to_string());
    kv("weyl.classes", r.class_count.to_string());
    for c in &r.components {
        kv("component.omega", c.omega.to_string());
        kv("component.omega_matrix", c.omega_matrix.to_string());
        kv("component.class_size", c.class_size.to_string());
        kv("component.gamma", c.gamma.to_string());
        kv("component.gamma_order", c.gamma_order.to_string());
        kv("component.dim", c.dim.to_string());
        kv("component.unit", c.unit.to_string());
        kv("component.paper_dim", c.paper_dim.value.to_string());
        kv("component.pi0", c.pi0.to_string());
        kv("component.pi0_quotient", c.pi0_quotient.map_or("-".into(), |x| x.to_string()));
        kv("component.normalizer_order", c.normalizer_order.to_string());
        kv("component.maximal", c.maximal.to_string());
        kv("component.singular", c.singular.to_string());
        kv("component.brane", c.brane.to_string());
        kv(
            "component.condition",
            if c.condition.is_empty() {
                "-".into()
            } else {
                c.condition.iter().map(Phase::to_string).collect::<Vec<_>>().join(";")
            },
        );
    }
    for e in &r.empty_classes {
        kv("empty_class", e.to_string());
    }
    for s in &r.h1_index {
        kv("h1.gamma", s.gamma.to_string());
        kv("h1.components", list(&s.components));
    }
    for s in &r.pseudo_real {
        kv("pseudo_real.z", list(&s.z));
        kv("pseudo_real.omega_z", s.omega_z.to_string());
        kv("pseudo_real.components", list(&s.components));
        kv("pseudo_real.diagnostic", s.diagnostic.clone().unwrap_or_else(|| "-".into()));
    }
    out
}

const COMPONENT_KEYS: [&str; 15] = [
    "omega",
    "omega_matrix",
    "class_size",
    "gamma",
    "gamma_order",
    "dim",
    "unit",
    "paper_dim",
    "pi0",
    "pi0_quotient",
    "normalizer_order",
    "maximal",
    "singular",
    "brane",
    "condition",
];

fn num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::parse(format!("bad value {v:?} for {key}")))
}

fn parse_list<T: FromStr>(key: &str, v: &str) -> Result<Vec<T>> {
    if v == "-" {
        return Ok(vec![]);
    }
    v.split(',').map(|x| num(key, x.trim())).collect()
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(Error::parse(format!("bad value {v:?} for {key}"))),
    }
}

fn blank_component() -> FixedLocusComponent {
    FixedLocusComponent {
        omega: 0,
        omega_matrix: IntegerMatrix::zeros(1, 1),
        class_size: 0,
        gamma: IntegerMatrix::zeros(1, 1),
        gamma_order: 0,
        dim: 0,
        unit: DimUnit::Real,
        paper_dim: PaperDimension { value: Q::from_integer(0) },
        pi0: 0,
        pi0_quotient: None,
        normalizer_order: 0,
        maximal: false,
        singular: false,
        brane: crate::moduli::Brane::Bbb,
        condition: vec![],
    }
}

/// Inverse of [`emit_structured`].
pub fn parse_structured(text: &str) -> Result<ModuliReport> {
    let mut header: std::collections::BTreeMap<&str, &str> = Default::default();
    let mut components: Vec<(FixedLocusComponent, BTreeSet<&str>)> = Vec::new();
    let mut empty_classes = Vec::new();
    let mut h1: Vec<(Option<IntegerMatrix>, Option<Vec<usize>>)> = Vec::new();
    let mut slices: Vec<[Option<&str>; 4]> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(" = ")
            .ok_or_else(|| Error::parse(format!("line {}: expected `key = value`", lineno + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        if let Some(field) = key.strip_prefix("component.") {
            if field == "omega" {
                components.push((blank_component(), BTreeSet::new()));
            }
            let (c, seen) = components
                .last_mut()
                .ok_or_else(|| Error::parse(format!("line {}: {key} before component.omega", lineno + 1)))?;
            if !seen.insert(field) {
                return Err(Error::parse(format!("line {}: repeated {key}", lineno + 1)));
            }
            match field {
                "omega" => c.omega = num(key, value)?,
                "omega_matrix" => c.omega_matrix = value.parse()?,
                "class_size" => c.class_size = num(key, value)?,
                "gamma" => c.gamma = value.parse()?,
                "gamma_order" => c.gamma_order = num(key, value)?,
                "dim" => c.dim = num(key, value)?,
                "unit" => c.unit = value.parse()?,
                "paper_dim" => c.paper_dim = PaperDimension { value: num(key, value)? },
                "pi0" => c.pi0 = num(key, value)?,
                "pi0_quotient" => c.pi0_quotient = if value == "-" { None } else { Some(num(key, value)?) },
                "normalizer_order" => c.normalizer_order = num(key, value)?,
                "maximal" => c.maximal = parse_bool(key, value)?,
                "singular" => c.singular = parse_bool(key, value)?,
                "brane" => c.brane = value.parse()?,
                "condition" => {
                    c.condition = if value == "-" {
                        vec![]
                    } else {
                        value.split(';').map(str::parse).collect::<Result<_>>()?
                    }
                }
                _ => return Err(Error::parse(format!("line {}: unknown key {key}", lineno + 1))),
            }
        } else if key == "empty_class" {
            empty_classes.push(num(key, value)?);
        } else if key == "h1.gamma" {
            h1.push((Some(value.parse()?), None));
        } else if key == "h1.components" {
            let last = h1
                .last_mut()
                .filter(|s| s.1.is_none())
                .ok_or_else(|| Error::parse(format!("line {}: h1.components without h1.gamma", lineno + 1)))?;
            last.1 = Some(parse_list(key, value)?);
        } else if let Some(field) = key.strip_prefix("pseudo_real.") {
            let pos = ["z", "omega_z", "components", "diagnostic"]
                .iter()
                .position(|f| *f == field)
                .ok_or_else(|| Error::parse(format!("line {}: unknown key {key}", lineno + 1)))?;
            if pos == 0 {
                slices.push([None; 4]);
            }
            let s = slices
                .last_mut()
                .ok_or_else(|| Error::parse(format!("line {}: {key} before pseudo_real.z", lineno + 1)))?;
            if s[pos].replace(value).is_some() {
                return Err(Error::parse(format!("line {}: repeated {key}", lineno + 1)));
            }
        } else if key.starts_with("query.") || key.starts_with("weyl.") {
            if header.insert(key, value).is_some() {
                return Err(Error::parse(format!("line {}: repeated {key}", lineno + 1)));
            }
        } else {
            return Err(Error::parse(format!("line {}: unknown key {key}", lineno + 1)));
        }
    }
    let get = |k: &str| header.get(k).copied().ok_or_else(|| Error::parse(format!("missing {k}")));
    let mut comps = Vec::new();
    for (c, seen) in components {
        if seen.len() != COMPONENT_KEYS.len() {
            let missing: Vec<&str> = COMPONENT_KEYS.iter().copied().filter(|k| !seen.contains(k)).collect();
            return Err(Error::parse(format!("component {} lacks {}", c.omega, missing.join(", "))));
        }
        comps.push(c);
    }
    let h1_index = h1
        .into_iter()
        .map(|(g, c)| match (g, c) {
            (Some(gamma), Some(components)) => Ok(GammaSlice { gamma, components }),
            _ => Err(Error::parse("incomplete h1 block")),
        })
        .collect::<Result<_>>()?;
    let pseudo_real = slices
        .into_iter()
        .map(|s| match s {
            [Some(z), Some(oz), Some(c), Some(d)] => Ok(PseudoRealSlice {
                z: parse_list("pseudo_real.z", z)?,
                omega_z: oz.parse()?,
                components: parse_list("pseudo_real.components", c)?,
                diagnostic: (d != "-").then(|| d.to_string()),
            }),
            _ => Err(Error::parse("incomplete pseudo_real block")),
        })
        .collect::<Result<_>>()?;
    Ok(ModuliReport {
        group: get("query.group")?.to_string(),
        sigma: get("query.sigma")?.to_string(),
        curve: get("query.curve")?.to_string(),
        sign: get("query.sign")?.parse()?,
        side: get("query.side")?.parse()?,
        twist: get("query.twist")?.to_string(),
        weyl_order: num("weyl.order", get("weyl.order")?)?,
        class_count: num("weyl.classes", get("weyl.classes")?)?,
        components: comps,
        empty_classes,
        h1_index,
        pseudo_real,
    })
}
