//! Command-line front end.
//!
//! Exit status is 0 on success, 1 on a domain error (a violated
//! precondition) and 2 on malformed input.

pub mod checks;
pub mod query;
pub mod report;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::elliptic::{enumerate_involutions, f_map, pi1_matrix_with_source, EllipticInvolution, Multiplier, Region};
use crate::error::{Error, Result};
use crate::involutions::{induced_weyl_automorphism, parse_sigma, Epsilon};
use crate::moduli::{decomposition_with, pseudo_real_moduli, InvolutionQuery, Pipeline, Side, Twist};
use crate::phase::Phase;
use crate::rootdatum::{build_datum, parse_central_element};
use crate::weyl::{normalizer_fixed_torus, shifted_h1, twisted_classes, upsilon_from, WeylGroup};

use self::query::QueryFile;
use self::report::{emit_slice_table, emit_structured, emit_table, Format, Sections};

const GROUP_HELP: &str = "Group type: GL<n>, C*, SL<n>, PGL<n>, or factors like A2.sc, B2.ad, G2 joined by 'x', \
optionally followed by +Z<k> for a central torus (e.g. A1xA1+Z1)";
const SIGMA_HELP: &str = "Lattice involution: id/split/compact, flip, swap, or perm:<p0,p1,..>[;central:<rows>][;painted:<i,..>]";
const CURVE_HELP: &str = "Curve involution region:multiplier[:t], region H or A-E, multiplier +1,-1,+i,-i,gamma,-gamma,gamma2,-gamma2; \
':t' composes with a translation";

#[derive(Parser, Debug)]
#[command(name = "brane-atlas", version, about = "Fixed loci of involutions on G-Higgs moduli over elliptic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long, help = GROUP_HELP)]
    group: String,
    #[arg(long, default_value = "id", help = SIGMA_HELP)]
    sigma: String,
    /// Holomorphicity of the group involution: + or -.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    epsilon: String,
}

#[derive(Args, Debug)]
struct QueryArgs {
    /// Query file with key = value lines; flags override its entries.
    #[arg(long)]
    query: Option<PathBuf>,
    #[arg(long, help = GROUP_HELP)]
    group: Option<String>,
    #[arg(long, help = SIGMA_HELP)]
    sigma: Option<String>,
    /// + or -; defaults to + on region H and - elsewhere.
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<String>,
    #[arg(long, help = CURVE_HELP, allow_hyphen_values = true)]
    curve: Option<String>,
    /// Higgs sign: + or -.
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    /// higgs or representation.
    #[arg(long)]
    side: Option<String>,
    /// trivial, rep:b11,b12;... or higgs:y11,y12;... (one pair per central basis vector).
    #[arg(long, allow_hyphen_values = true)]
    twist: Option<String>,
    /// table or structured.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order and conjugacy classes of the Weyl group.
    Weyl {
        #[arg(long, help = GROUP_HELP)]
        group: String,
    },
    /// Twisted conjugacy classes W/_sigma W and the map to Upsilon.
    Classes(GroupArgs),
    /// Shifted cohomology H^1_gamma(sigma, W) for every gamma in Upsilon.
    Cohomology(GroupArgs),
    /// Involutions of the elliptic curve for a region and sign.
    Elliptic {
        /// H (generic, holomorphic only) or A-E.
        #[arg(long)]
        region: String,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
    },
    /// Fixed locus of an involution, one row per twisted class.
    FixedLocus(QueryArgs),
    /// Pseudo-real slice over a central element z.
    PseudoReal {
        #[command(flatten)]
        query: QueryArgs,
        /// 0, nontrivial, or coordinates such as 1/2,1/2.
        #[arg(long)]
        z: Option<String>,
    },
    /// Consistency checks on the embedded curve tables.
    CheckTables,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, status)) => {
            let _ = out.write_all(text.as_bytes());
            status
        }
        Err(e) => {
            let _ = writeln!(err, "brane-atlas: {e}");
            match e {
                Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<(String, i32)> {
    match cmd {
        Command::Weyl { group } => weyl(&group).map(|s| (s, 0)),
        Command::Classes(g) => classes(&g).map(|s| (s, 0)),
        Command::Cohomology(g) => cohomology(&g).map(|s| (s, 0)),
        Command::Elliptic { region, epsilon } => elliptic(&region, &epsilon).map(|s| (s, 0)),
        Command::FixedLocus(q) => fixed_locus(q).map(|s| (s, 0)),
        Command::PseudoReal { query, z } => pseudo_real(query, z).map(|s| (s, 0)),
        Command::CheckTables => check_tables(),
    }
}

fn weyl(group: &str) -> Result<String> {
    let d = build_datum(group)?;
    let w = WeylGroup::generate(&d)?;
    let classes = w.conjugacy_classes();
    let mut out = String::new();
    let _ = writeln!(out, "group              {}", d.label());
    let _ = writeln!(out, "rank               {}", d.rank());
    let _ = writeln!(out, "semisimple rank    {}", d.semisimple_rank());
    let _ = writeln!(out, "order              {}", w.order());
    let _ = writeln!(out, "conjugacy classes  {}", classes.len());
    out.push('\n');
    let rows: Vec<Vec<String>> = classes
        .iter()
        .enumerate()
        .map(|(k, c)| {
            vec![k.to_string(), c.len().to_string(), w.element_order(c[0]).to_string(), w.length(c[0]).to_string(), w.matrix(c[0]).to_string()]
        })
        .collect();
    table(&["#", "size", "order", "length", "representative"], &rows, &mut out);
    Ok(out)
}

fn table(header: &[&str], rows: &[Vec<String>], out: &mut String) {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let mut line = |cells: &[&str]| {
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
    line(header);
    for r in rows {
        line(&r.iter().map(String::as_str).collect::<Vec<_>>());
    }
}

fn group_setup(g: &GroupArgs) -> Result<(WeylGroup, crate::weyl::WeylAutomorphism, String)> {
    let d = build_datum(&g.group)?;
    let eps: Epsilon = g.epsilon.parse()?;
    let s = parse_sigma(&d, &g.sigma, eps)?;
    let w = WeylGroup::generate(&d)?;
    let sigma = induced_weyl_automorphism(&s, &w)?;
    let head = format!(
        "group              {}\nsigma              {} ({})\nS                  {}\nweyl order         {}\n",
        d.label(),
        s.label(),
        if eps.is_holomorphic() { "holomorphic" } else { "anti-holomorphic" },
        s.matrix(),
        w.order()
    );
    Ok((w, sigma, head))
}

fn classes(g: &GroupArgs) -> Result<String> {
    let (w, sigma, mut out) = group_setup(g)?;
    let tw = twisted_classes(&w, &sigma);
    let ups = upsilon_from(&tw);
    let _ = writeln!(out, "twisted classes    {}", tw.len());
    let _ = writeln!(out, "upsilon            {}", ups.classes.len());
    out.push('\n');
    let rows: Vec<Vec<String>> = tw
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let n = normalizer_fixed_torus(&w, &sigma, c.representative).len();
            vec![
                k.to_string(),
                w.matrix(c.representative).to_string(),
                c.members.len().to_string(),
                w.matrix(c.gamma).to_string(),
                w.element_order(c.gamma).to_string(),
                n.to_string(),
                ups.delta[k].to_string(),
            ]
        })
        .collect();
    table(&["#", "representative", "size", "gamma", "ord", "|N|", "delta"], &rows, &mut out);
    out.push_str("\nupsilon classes:\n");
    for (k, &g) in ups.classes.iter().enumerate() {
        let _ = writeln!(out, "  {k}: {}", w.matrix(g));
    }
    Ok(out)
}

fn cohomology(g: &GroupArgs) -> Result<String> {
    let (w, sigma, mut out) = group_setup(g)?;
    let tw = twisted_classes(&w, &sigma);
    let ups = upsilon_from(&tw);
    for &gamma in &ups.classes {
        let h = shifted_h1(&w, &sigma, gamma);
        let label = if gamma == w.identity() { " (unshifted H^1)" } else { "" };
        let _ = writeln!(out, "\ngamma {}{label}: {} class(es)", w.matrix(gamma), h.len());
        let rows: Vec<Vec<String>> = h
            .iter()
            .map(|c| vec![w.matrix(c.representative).to_string(), c.members.len().to_string(), w.matrix(c.twisted_class).to_string()])
            .collect();
        if !rows.is_empty() {
            table(&["cocycle", "cocycles", "twisted class"], &rows, &mut out);
        }
    }
    Ok(out)
}

fn elliptic(region: &str, epsilon: &str) -> Result<String> {
    let region: Region = region.parse()?;
    let eps: Epsilon = epsilon.parse()?;
    let rows = enumerate_involutions(region, eps)?;
    let mut out = String::new();
    let _ = writeln!(out, "region  {region}: {}", region.constraint());
    let _ = writeln!(out, "sign    {eps}\n");
    let zero = [Phase::zero(), Phase::zero()];
    let mut cells = Vec::new();
    for inv in &rows {
        let (p, src) = pi1_matrix_with_source(inv.region, inv.epsilon, inv.a)?;
        let fp = f_map(inv, Epsilon::Plus, zero.clone())?;
        let fm = f_map(inv, Epsilon::Minus, zero.clone())?;
        let locus = match (inv.fixed_locus, inv.topological_type) {
            (Some(x), _) => format!("fixed {x}"),
            (None, Some((n, b))) => format!("type ({n},{b})"),
            _ => "-".into(),
        };
        cells.push(vec![
            inv.name(),
            inv.admissible.to_string(),
            format!("{p} ({src})"),
            fp.m.to_string(),
            format!("{} conj", fm.m),
            locus,
        ]);
    }
    table(&["involution", "translations", "pi1", "f+", "f-", "real points"], &cells, &mut out);
    Ok(out)
}

fn check_tables() -> Result<(String, i32)> {
    let results = checks::table_checks()?;
    let mut out = String::new();
    let mut failed = 0;
    for c in &results {
        let tag = if c.ok { "ok  " } else { "FAIL" };
        failed += usize::from(!c.ok);
        let _ = writeln!(out, "{tag} {}: {}", c.name, c.detail);
    }
    let _ = writeln!(out, "\n{} checks, {failed} failed", results.len());
    Ok((out, i32::from(failed > 0)))
}

fn parse_curve(text: &str, eps: Option<Epsilon>) -> Result<EllipticInvolution> {
    let mut parts = text.split(':');
    let region: Region = parts.next().unwrap_or("").parse()?;
    let a: Multiplier = parts
        .next()
        .ok_or_else(|| Error::parse(format!("curve {text:?} must read region:multiplier[:t]")))?
        .parse()?;
    let translated = match parts.next() {
        None => false,
        Some("t") => true,
        Some(other) => return Err(Error::parse(format!("unknown curve suffix {other:?} (expected t)"))),
    };
    if parts.next().is_some() {
        return Err(Error::parse(format!("curve {text:?} has too many fields")));
    }
    let eps = eps.unwrap_or(if region == Region::Generic { Epsilon::Plus } else { Epsilon::Minus });
    EllipticInvolution::lookup(region, eps, a, translated)
}

fn require(v: Option<String>, key: &str) -> Result<String> {
    v.ok_or_else(|| Error::parse(format!("missing {key} (pass --{key} or set it in the query file)")))
}

struct Resolved {
    query: InvolutionQuery,
    format: Format,
    sections: Sections,
    z: Option<String>,
}

fn resolve(args: QueryArgs, z: Option<String>) -> Result<Resolved> {
    let file = match &args.query {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::parse(format!("cannot read query file {}: {e}", path.display())))?;
            QueryFile::parse(&text)?
        }
        None => QueryFile::default(),
    };
    let flags = QueryFile {
        group: args.group,
        sigma: args.sigma,
        epsilon: args.epsilon,
        curve: args.curve,
        sign: args.sign,
        side: args.side,
        twist: args.twist,
        z,
        format: args.format,
        commands: None,
    };
    let q = file.overridden_by(flags);
    let d = build_datum(&require(q.group, "group")?)?;
    let eps: Option<Epsilon> = q.epsilon.as_deref().map(str::parse).transpose()?;
    let curve = parse_curve(&require(q.curve, "curve")?, eps)?;
    let sigma = parse_sigma(&d, q.sigma.as_deref().unwrap_or("id"), curve.epsilon)?;
    let sign: Epsilon = require(q.sign, "sign")?.parse()?;
    let side: Side = q.side.as_deref().unwrap_or("representation").parse()?;
    let twist: Twist = q.twist.as_deref().unwrap_or("trivial").parse()?;
    let format: Format = q.format.as_deref().unwrap_or("table").parse()?;
    let sections = match q.commands.as_deref() {
        Some(list) => Sections::parse_list(list)?,
        None => Sections::default(),
    };
    let query = InvolutionQuery::new(d, sigma, curve, sign, side, twist)?;
    Ok(Resolved { query, format, sections, z: q.z })
}

fn fixed_locus(args: QueryArgs) -> Result<String> {
    let r = resolve(args, None)?;
    let p = Pipeline::new(&r.query)?;
    let report = decomposition_with(&p)?;
    Ok(match r.format {
        Format::Table => emit_table(&report, &r.sections),
        Format::Structured => emit_structured(&report),
    })
}

fn pseudo_real(args: QueryArgs, z: Option<String>) -> Result<String> {
    let r = resolve(args, z)?;
    let z = parse_central_element(&r.query.datum, &require(r.z, "z")?)?;
    let (mut report, slice) = pseudo_real_moduli(&r.query, &z)?;
    Ok(match r.format {
        Format::Table => emit_slice_table(&report, &slice),
        Format::Structured => {
            report.pseudo_real = vec![slice];
            emit_structured(&report)
        }
    })
}
