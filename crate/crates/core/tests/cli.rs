use brane_atlas::cli::report::{emit_structured, emit_table, parse_structured, Sections};
use brane_atlas::cli::run;
use brane_atlas::elliptic::{enumerate_involutions, Region};
use brane_atlas::involutions::{parse_sigma, Epsilon};
use brane_atlas::moduli::{fixed_locus_decomposition, InvolutionQuery, ModuliReport, Side, Twist};
use brane_atlas::rootdatum::build_datum;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("brane-atlas").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn weyl_a2() {
    let (code, out, _) = cli(&["weyl", "--group", "A2"]);
    assert_eq!(code, 0);
    assert!(out.contains("order              6"), "{out}");
    assert!(out.contains("conjugacy classes  3"), "{out}");
}

#[test]
fn elliptic_region_c_rows_have_type_1_1() {
    let (code, out, _) = cli(&["elliptic", "--region", "C", "--epsilon", "-"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().filter(|l| l.contains("alpha(")).collect();
    assert_eq!(rows.len(), 2, "{out}");
    assert!(rows.iter().all(|l| l.contains("type (1,1)")), "{out}");
}

#[test]
fn pseudo_real_sl2_nontrivial_is_empty_with_diagnostic() {
    let (code, out, _) = cli(&[
        "pseudo-real", "--group", "A1.sc", "--sigma", "split", "--curve", "A:-1", "--sign", "-", "--z", "nontrivial",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("H^1 shifted by omega_z is empty"), "{out}");
}

#[test]
fn cstar_baa_row() {
    let (code, out, _) = cli(&["fixed-locus", "--group", "C*", "--curve", "H:-1", "--sign", "-", "--side", "higgs"]);
    assert_eq!(code, 0);
    let row = out.lines().find(|l| l.starts_with("0 ")).expect("one component row");
    assert!(row.contains("dim 1 (complex)") && row.contains(" 4 ") && row.contains("(B,A,A)"), "{row}");
    assert_eq!(out.lines().filter(|l| l.starts_with("1 ")).count(), 0);
}

#[test]
fn empty_report_says_so() {
    // z -> -z on C* never has fixed points
    let (code, out, _) = cli(&["fixed-locus", "--group", "C*", "--curve", "H:+1", "--sign", "+", "--twist", "rep:1/2,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("no fixed components"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["weyl", "--group", "B2"]).0, 0);
    assert_eq!(cli(&["--help"]).0, 0);
    assert_eq!(cli(&["--version"]).0, 0);

    let (code, _, err) = cli(&["fixed-locus", "--group", "C*", "--curve", "H:-1", "--epsilon", "-", "--sign", "+"]);
    assert_eq!(code, 1);
    assert!(err.contains("region A-E"), "{err}");
    let (code, _, err) = cli(&["fixed-locus", "--group", "C*", "--curve", "H:+1", "--sign", "+", "--twist", "rep:1/3,0"]);
    assert_eq!(code, 1);
    assert!(err.contains("involution condition"), "{err}");
    let (code, _, err) = cli(&["pseudo-real", "--group", "A1.sc", "--curve", "H:-1", "--sign", "+", "--z", "0"]);
    assert_eq!(code, 1);
    assert!(err.contains("anti-holomorphic"), "{err}");

    assert_eq!(cli(&["bogus"]).0, 2);
    assert_eq!(cli(&["weyl"]).0, 2);
    let (code, _, err) = cli(&["weyl", "--group", "Q7"]);
    assert_eq!(code, 2);
    assert!(err.contains("Q7"), "{err}");
    assert_eq!(cli(&["fixed-locus", "--group", "A1", "--curve", "Z:+1", "--sign", "+"]).0, 2);
    assert_eq!(cli(&["fixed-locus", "--group", "A1", "--curve", "H:+1", "--sign", "+", "--format", "xml"]).0, 2);
}

#[test]
fn check_tables_passes_and_reports_flagged_cell() {
    let (code, out, _) = cli(&["check-tables"]);
    assert_eq!(code, 0);
    assert!(out.contains("flagged f- cell"), "{out}");
    assert!(out.contains(" 0 failed"), "{out}");
}

#[test]
fn query_file_with_flag_override() {
    let dir = std::env::temp_dir().join(format!("brane-atlas-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sl2.query");
    std::fs::write(
        &path,
        "# SL2 on the annulus\ngroup = A1.sc\nsigma = split\ncurve = A:-1\nsign = -\nz = nontrivial\ncommands = pseudo-real\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let (code, from_file, _) = cli(&["pseudo-real", "--query", p]);
    assert_eq!(code, 0);
    let (_, from_flags, _) = cli(&[
        "pseudo-real", "--group", "A1.sc", "--sigma", "split", "--curve", "A:-1", "--sign", "-", "--z", "nontrivial",
    ]);
    assert_eq!(from_file, from_flags);
    let (code, overridden, _) = cli(&["pseudo-real", "--query", p, "--z", "0"]);
    assert_eq!(code, 0);
    assert_ne!(overridden, from_file);

    std::fs::write(&path, "group = A1.sc\ncolour = red\n").unwrap();
    assert_eq!(cli(&["fixed-locus", "--query", p]).0, 2);
    assert_eq!(cli(&["fixed-locus", "--query", dir.join("missing").to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn commands_key_selects_sections() {
    let dir = std::env::temp_dir().join(format!("brane-atlas-cmd-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q");
    std::fs::write(&path, "group = A2.sc\nsigma = flip\ncurve = E:+1:t\nsign = +\ncommands = h1\n").unwrap();
    let (code, out, _) = cli(&["fixed-locus", "--query", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("by gamma"), "{out}");
    assert!(!out.contains("maximal  brane"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

fn sample_reports() -> Vec<ModuliReport> {
    let mut out = Vec::new();
    for (group, sigma) in [("C*", "id"), ("A1.sc", "id"), ("GL2", "id"), ("A2.sc", "flip"), ("A1xA1", "swap"), ("G2", "id")] {
        let d = build_datum(group).unwrap();
        for (region, eps) in [(Region::Generic, Epsilon::Plus), (Region::B, Epsilon::Minus), (Region::D, Epsilon::Minus)] {
            let s = parse_sigma(&d, sigma, eps).unwrap();
            for curve in enumerate_involutions(region, eps).unwrap() {
                for sign in [Epsilon::Plus, Epsilon::Minus] {
                    for side in [Side::Representation, Side::Higgs] {
                        let q = InvolutionQuery::new(d.clone(), s.clone(), curve.clone(), sign, side, Twist::Trivial).unwrap();
                        out.push(fixed_locus_decomposition(&q).unwrap());
                    }
                }
            }
        }
    }
    let d = build_datum("C*").unwrap();
    let curve = enumerate_involutions(Region::Generic, Epsilon::Plus).unwrap().remove(0);
    for twist in ["rep:t,0", "rep:1/2,0"] {
        let s = parse_sigma(&d, "id", Epsilon::Plus).unwrap();
        let q = InvolutionQuery::new(d.clone(), s, curve.clone(), Epsilon::Plus, Side::Representation, twist.parse().unwrap())
            .unwrap();
        out.push(fixed_locus_decomposition(&q).unwrap());
    }
    out
}

#[test]
fn structured_round_trip() {
    let reports = sample_reports();
    assert!(reports.iter().any(|r| r.components.is_empty()));
    assert!(reports.iter().any(|r| r.components.iter().any(|c| !c.condition.is_empty())));
    assert!(reports.iter().any(|r| r.pseudo_real.iter().any(|s| s.diagnostic.is_some())));
    for r in reports {
        let text = emit_structured(&r);
        assert_eq!(parse_structured(&text).unwrap(), r, "{text}");
        assert!(!emit_table(&r, &Sections::default()).is_empty());
    }
}

#[test]
fn structured_parse_rejects_junk() {
    assert!(parse_structured("component.dim = 1\n").is_err());
    assert!(parse_structured("query.group = A1\nquery.group = A2\n").is_err());
    assert!(parse_structured("nonsense\n").is_err());
}
