//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs as a plain binary (`harness = false`).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use brane_atlas::cli::checks::table_checks;
use brane_atlas::elliptic::{enumerate_involutions, EllipticInvolution, Multiplier, Region, F_MAP_TABLE};
use brane_atlas::involutions::{induced_weyl_automorphism, parse_sigma, Epsilon};
use brane_atlas::lattice::Q;
use brane_atlas::moduli::{
    build_twisted_involution, decomposition_with, pseudo_real_moduli, InvolutionQuery, ModuliReport, Pipeline, Side,
    Twist,
};
use brane_atlas::phase::{apply_matrix, Phase};
use brane_atlas::rootdatum::{build_datum, center_two_torsion, omega_z, CentralElement2, RootDatum};
use brane_atlas::torusfix::{
    census_formula_applies, census_points, fixed_subgroup, paper_dimension, predicted_census, DimUnit, TorusMap,
    CENSUS_CAP,
};
use brane_atlas::weyl::{ad_sigma, gamma_of, shifted_h1, twisted_classes, upsilon_from, WeylAutomorphism, WeylGroup};

const TORSION_ORDERS: [i64; 4] = [2, 3, 4, 6];
const SHOW: usize = 8;

struct Outcome {
    ok: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, summary: impl Into<String>) -> Self {
        Outcome { ok, summary: summary.into(), details: vec![] }
    }

    fn with(mut self, details: Vec<String>) -> Self {
        self.details = details;
        self
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            out.ok = false;
            out.details.push(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
    }
    (out, elapsed)
}

// ---------------------------------------------------------------- sweep data

/// Rank <= 2 groups and the lattice involutions tried on each.
const SWEEP_GROUPS: &[(&str, &[&str])] = &[
    ("C*", &["id", "perm:;central:-1"]),
    ("A1.sc", &["id"]),
    ("A1.ad", &["id"]),
    ("GL2", &["id", "perm:0;central:-1"]),
    ("A2.sc", &["id", "flip"]),
    ("A2.ad", &["id", "flip"]),
    ("B2.sc", &["id"]),
    ("B2.ad", &["id"]),
    ("G2", &["id"]),
    ("A1xA1", &["id", "swap"]),
    ("A1+Z1", &["id", "perm:0;central:-1"]),
];

struct Config {
    datum: RootDatum,
    sigma_name: &'static str,
    curve: EllipticInvolution,
    sign: Epsilon,
    side: Side,
}

/// One catalog involution per f-map table (region, multiplier) cell; cells whose
/// multiplier does not preserve the lattice of that region are not in the
/// catalog and are skipped.
fn f_map_curves() -> Vec<EllipticInvolution> {
    let mut out = Vec::new();
    for row in F_MAP_TABLE {
        for &region in row.regions {
            out.extend(catalog_curve(region, row.epsilon, row.a));
        }
    }
    out
}

/// First catalog involution with this multiplier, translated or not.
fn catalog_curve(region: Region, eps: Epsilon, a: Multiplier) -> Option<EllipticInvolution> {
    enumerate_involutions(region, eps).expect("catalog").into_iter().find(|inv| inv.a == a)
}

fn sweep_configs() -> Vec<Config> {
    let curves = f_map_curves();
    let mut out = Vec::new();
    for &(group, sigmas) in SWEEP_GROUPS {
        let datum = build_datum(group).expect("sweep group");
        assert!(datum.rank() <= 2, "{group} has rank {}", datum.rank());
        for &sigma_name in sigmas {
            for curve in &curves {
                for sign in [Epsilon::Plus, Epsilon::Minus] {
                    for side in [Side::Representation, Side::Higgs] {
                        out.push(Config { datum: datum.clone(), sigma_name, curve: curve.clone(), sign, side });
                    }
                }
            }
        }
    }
    out
}

fn query_of(c: &Config) -> InvolutionQuery {
    let sigma = parse_sigma(&c.datum, c.sigma_name, c.curve.epsilon).expect("sweep sigma");
    InvolutionQuery::new(c.datum.clone(), sigma, c.curve.clone(), c.sign, c.side, Twist::Trivial).expect("sweep query")
}

fn describe(c: &Config) -> String {
    format!("{} sigma={} curve={} sign {} {}", c.datum.label(), c.sigma_name, c.curve.name(), c.sign, c.side)
}

/// One map of the sweep with its provenance.
struct Case {
    label: String,
    map: TorusMap,
    gamma_order: usize,
    shifted: bool,
}

/// Smallest nonzero `q` in `{0, 1/2}^n`, then `{0, 1/3, 2/3}^n`, with
/// `(I + sM) q = 0 mod 1`, so that the square of the shifted map is still linear.
fn admissible_shift(t: &TorusMap) -> Option<Vec<Phase>> {
    let n = t.rank();
    let sm = t.phase_matrix().ok()?;
    let obstruction = sm.plus_identity().ok()?;
    for den in [2i64, 3] {
        let total = (den as u64).pow(n as u32);
        for code in 1..total {
            let mut c = code;
            let q: Vec<Phase> = (0..n)
                .map(|_| {
                    let k = (c % den as u64) as i64;
                    c /= den as u64;
                    Phase::constant(Q::new(k, den))
                })
                .collect();
            let image = apply_matrix(&obstruction, &q).ok()?;
            if image.iter().all(Phase::is_zero) {
                return Some(q);
            }
        }
    }
    None
}

/// The criterion-3 sweep: every configuration, every Weyl element, with the
/// trivial shift and one nontrivial admissible shift.
fn sweep_cases() -> (Vec<Case>, Vec<String>) {
    let mut cases = Vec::new();
    let mut unshiftable = Vec::new();
    for c in sweep_configs() {
        let q = query_of(&c);
        let p = Pipeline::new(&q).expect("pipeline");
        for omega in 0..p.weyl.order() {
            let map = build_twisted_involution(&q, &p.weyl, omega).expect("twisted map");
            let gamma_order = p.weyl.element_order(gamma_of(&p.weyl, &p.sigma, omega));
            let label = format!("{} omega={}", describe(&c), p.weyl.matrix(omega));
            match admissible_shift(&map) {
                Some(shift) => {
                    let shifted = TorusMap { shift, ..map.clone() };
                    cases.push(Case { label: format!("{label} shifted"), map: shifted, gamma_order, shifted: true });
                }
                None => unshiftable.push(label.clone()),
            }
            cases.push(Case { label, map, gamma_order, shifted: false });
        }
    }
    (cases, unshiftable)
}

// ---------------------------------------------------------------- criteria

fn criterion_1() -> Outcome {
    let expected = [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12), ("A1xA1", 4)];
    let mut bad = Vec::new();
    let mut got = Vec::new();
    for (t, n) in expected {
        let w = WeylGroup::generate(&build_datum(t).expect("datum")).expect("weyl");
        got.push(format!("{t}={}", w.order()));
        if w.order() != n {
            bad.push(format!("{t}: generated {} expected {n}", w.order()));
        }
    }
    Outcome::new(bad.is_empty(), format!("Weyl orders {}", got.join(" "))).with(bad)
}

const SMALL_GROUPS: &[(&str, &[&str])] = &[
    ("A1", &["id"]),
    ("A2", &["id", "flip"]),
    ("A3", &["id", "flip"]),
    ("B2", &["id"]),
    ("B3", &["id"]),
    ("C3", &["id"]),
    ("G2", &["id"]),
    ("A1xA1", &["id", "swap"]),
    ("A1xA2", &["id", "flip"]),
    ("A1xA1xA1", &["id", "swap"]),
    ("A2xA2", &["id", "flip", "swap"]),
    ("B2xA1", &["id"]),
    ("GL2", &["id", "perm:0;central:-1"]),
    ("GL3", &["id", "flip"]),
    ("GL4", &["id", "flip"]),
    ("C*", &["id"]),
];

fn twisted_suite(w: &WeylGroup, sigma: &WeylAutomorphism, name: &str, bad: &mut Vec<String>) {
    let n = w.order();
    let e = w.identity();
    // (a) group action
    for om in 0..n {
        if ad_sigma(w, sigma, e, om) != om {
            bad.push(format!("{name}: identity moves {om}"));
        }
        for g in 0..n {
            let inner = ad_sigma(w, sigma, g, om);
            for h in 0..n {
                if ad_sigma(w, sigma, w.mul(h, g), om) != ad_sigma(w, sigma, h, inner) {
                    bad.push(format!("{name}: ad(hg) != ad(h) ad(g) at h={h} g={g} omega={om}"));
                    return;
                }
            }
        }
    }
    let classes = twisted_classes(w, sigma);
    // (b) sigma = id gives ordinary conjugacy
    if sigma.is_identity() {
        let tw: BTreeSet<Vec<usize>> = classes.iter().map(|c| c.members.clone()).collect();
        let ord: BTreeSet<Vec<usize>> = w
            .conjugacy_classes()
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        if tw != ord {
            bad.push(format!("{name}: twisted classes for sigma = id differ from conjugacy classes"));
        }
    }
    // (c) union over Upsilon of shifted H^1 partitions the twisted classes
    let ups = upsilon_from(&classes);
    let mut hit: Vec<usize> = Vec::new();
    for &g in &ups.classes {
        for cc in shifted_h1(w, sigma, g) {
            hit.push(cc.twisted_class);
        }
    }
    hit.sort_unstable();
    let reps: Vec<usize> = classes.iter().map(|c| c.representative).collect();
    if hit != reps {
        bad.push(format!("{name}: shifted H^1 hits twisted classes {hit:?}, expected each of {reps:?} once"));
    }
    // (d) orbit-stabilizer
    for c in &classes {
        let stab = (0..n).filter(|&g| ad_sigma(w, sigma, g, c.representative) == c.representative).count();
        if c.members.len() * stab != n {
            bad.push(format!("{name}: class of {} has size {} and stabilizer {stab}", c.representative, c.members.len()));
        }
    }
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for &(t, sigmas) in SMALL_GROUPS {
        let d = build_datum(t).expect("datum");
        let w = WeylGroup::generate(&d).expect("weyl");
        assert!(w.order() <= 48, "{t} has |W| = {}", w.order());
        for &s in sigmas {
            for eps in [Epsilon::Plus, Epsilon::Minus] {
                let inv = parse_sigma(&d, s, eps).expect("sigma");
                let auto = induced_weyl_automorphism(&inv, &w).expect("automorphism");
                twisted_suite(&w, &auto, &format!("{t}/{s}/{eps}"), &mut bad);
                pairs += 1;
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{pairs} (W, sigma) pairs with |W| <= 48")).with(bad)
}

struct SweepStats {
    maps: usize,
    shifted: usize,
    censuses: usize,
}

fn criterion_3(cases: &[Case], unshiftable: &[String]) -> (Outcome, SweepStats) {
    let mut bad = Vec::new();
    let mut stats = SweepStats { maps: cases.len(), shifted: 0, censuses: 0 };
    for case in cases {
        stats.shifted += case.shifted as usize;
        let t = &case.map;
        let fixed = fixed_subgroup(t).expect("fixed subgroup");
        let sm = t.phase_matrix().expect("phase matrix");
        let gamma = sm.checked_mul(&sm).expect("square");
        for n_tors in TORSION_ORDERS {
            stats.censuses += 1;
            let points = census_points(t, n_tors, CENSUS_CAP).expect("census");
            let count = points.len() as u128;
            let predicted = predicted_census(t, n_tors).expect("prediction");
            if count != predicted {
                bad.push(format!("{}: N={n_tors} census {count}, Smith prediction {predicted}", case.label));
            }
            if census_formula_applies(t, n_tors).expect("applies") {
                let formula = if fixed.is_nonempty() {
                    fixed.components as u128 * (n_tors as u128).pow(fixed.torus_dim as u32)
                } else {
                    0
                };
                if count != formula {
                    bad.push(format!(
                        "{}: N={n_tors} census {count}, components * N^dim = {} * {n_tors}^{} = {formula}",
                        case.label, fixed.components, fixed.torus_dim
                    ));
                }
            }
            if !fixed.is_nonempty() && count != 0 {
                bad.push(format!("{}: reported empty but {count} torsion points are fixed", case.label));
            }
            // fixed points of omega tau are fixed by gamma tensor I
            if !case.shifted {
                for x in &points {
                    let y = gamma.apply(x).expect("apply");
                    if x.iter().zip(&y).any(|(a, b)| (a - b).rem_euclid(n_tors) != 0) {
                        bad.push(format!("{}: fixed point {x:?} is moved by gamma", case.label));
                        break;
                    }
                }
            }
        }
        // an involution with nonempty fixed set has fixed points of order
        // dividing twice the shift's order
        if case.shifted && t.is_involution().expect("verdict") == brane_atlas::elliptic::Verdict::Holds {
            let den = t
                .shift
                .iter()
                .filter_map(|p| p.value())
                .fold(1i64, |acc, q| num_integer::lcm(acc, *q.denom()));
            let found = !census_points(t, 2 * den, CENSUS_CAP).expect("census").is_empty();
            if found != fixed.is_nonempty() {
                bad.push(format!(
                    "{}: nonempty = {} but census at N = {} finds points = {found}",
                    case.label,
                    fixed.is_nonempty(),
                    2 * den
                ));
            }
        }
    }
    let mut summary = format!(
        "{} maps ({} with a nontrivial admissible shift), {} censuses at N in {:?}",
        stats.maps, stats.shifted, stats.censuses, TORSION_ORDERS
    );
    if !unshiftable.is_empty() {
        summary.push_str(&format!("; {} maps admit no small nontrivial shift", unshiftable.len()));
    }
    (Outcome::new(bad.is_empty(), summary).with(bad), stats)
}

fn criterion_4(cases: &[Case]) -> Outcome {
    let mut bad = Vec::new();
    let mut compared = 0;
    let mut shifted_disagreements = 0;
    // (holomorphic, gamma = e) -> (disagreements, cases)
    let mut breakdown: std::collections::BTreeMap<(bool, bool), (usize, usize)> = Default::default();
    for case in cases {
        let fixed = fixed_subgroup(&case.map).expect("fixed subgroup");
        if !fixed.is_nonempty() {
            continue;
        }
        let in_units = case.map.ambient_dim_in(fixed.unit).expect("ambient dimension");
        let formula = paper_dimension(case.gamma_order, in_units).expect("formula");
        let agrees = formula.integral() == Some(fixed.dim);
        if case.shifted {
            shifted_disagreements += (!agrees) as usize;
            continue;
        }
        compared += 1;
        let key = (fixed.unit == DimUnit::Complex, case.gamma_order == 1);
        let slot = breakdown.entry(key).or_insert((0usize, 0usize));
        slot.1 += 1;
        slot.0 += (!agrees) as usize;
        if !agrees {
            bad.push(format!(
                "{}: Smith dim {} ({}), dim/(2 ord(gamma)) = {in_units}/(2*{}) = {formula}",
                case.label, fixed.dim, fixed.unit, case.gamma_order
            ));
        }
    }
    let summary = format!(
        "dim/(2 ord(gamma)) vs Smith form: {} of {compared} unshifted nonempty cases disagree \
         ({shifted_disagreements} shifted disagreements, governed by the Smith form)",
        bad.len()
    );
    let mut details: Vec<String> = breakdown
        .iter()
        .map(|(&(holo, max), &(bad, total))| {
            format!(
                "{} fixed sets, {}: {bad} of {total} disagree",
                if holo { "complex" } else { "real" },
                if max { "gamma = e" } else { "gamma != e" }
            )
        })
        .collect();
    let ok = bad.is_empty();
    details.extend(bad);
    Outcome::new(ok, summary).with(details)
}

fn criterion_5(cases: &[Case]) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for case in cases {
        let t = &case.map;
        if !t.conj || !matches!(t.ambient, brane_atlas::torusfix::Ambient::SplitTorus) {
            continue;
        }
        let fixed = fixed_subgroup(t).expect("fixed subgroup");
        if !fixed.is_nonempty() || t.is_involution().expect("verdict") != brane_atlas::elliptic::Verdict::Holds {
            continue;
        }
        checked += 1;
        if fixed.unit != DimUnit::Real || fixed.dim != t.rank() {
            bad.push(format!("{}: real dim {} on a rank-{} torus", case.label, fixed.dim, t.rank()));
        }
    }
    Outcome::new(bad.is_empty(), format!("{checked} nonempty anti-holomorphic involutions have real dim = rank"))
        .with(bad)
}

fn criterion_6() -> Outcome {
    let checks = table_checks().expect("table checks");
    let failed: Vec<String> =
        checks.iter().filter(|c| !c.ok).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    let flagged = checks.iter().find(|c| c.name.contains("flagged f- cell"));
    let mut details = failed.clone();
    let flagged_ok = match flagged {
        Some(c) => {
            details.push(format!("{} -> {}", c.name, c.detail));
            c.ok
        }
        None => {
            details.push("no flagged-cell check was run".into());
            false
        }
    };
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = brane_atlas::cli::run(["brane-atlas", "check-tables"], &mut out, &mut err);
    if code != 0 {
        details.push(format!("check-tables exited {code}"));
    }
    let ok = failed.is_empty() && flagged_ok && code == 0;
    Outcome::new(ok, format!("{} table checks, {} failed, flagged cell resolved: {flagged_ok}, check-tables exit {code}", checks.len(), failed.len()))
        .with(if ok { vec![] } else { details })
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let mut queries = 0;
    for c in sweep_configs().into_iter().filter(|c| c.curve.epsilon == Epsilon::Minus) {
        let q = query_of(&c);
        let zero = CentralElement2::zero(c.datum.rank());
        let (report, slice) = pseudo_real_moduli(&q, &zero).expect("pseudo-real");
        queries += 1;
        let maximal: Vec<usize> = (0..report.components.len()).filter(|&i| report.components[i].maximal).collect();
        if slice.components != maximal {
            bad.push(format!("{}: z = 0 slice {:?}, maximal {maximal:?}", describe(&c), slice.components));
        }
        if !slice.omega_z.is_identity() {
            bad.push(format!("{}: omega_0 = {}", describe(&c), slice.omega_z));
        }
    }
    for &(t, _) in SWEEP_GROUPS.iter().chain(SMALL_GROUPS) {
        let d = build_datum(t).expect("datum");
        let w = omega_z(&d, &CentralElement2::zero(d.rank())).expect("omega_0");
        if !w.is_identity() {
            bad.push(format!("{t}: omega_0 = {w}"));
        }
    }

    // SL2 with z = -I against a brute-force search over W
    let d = build_datum("A1.sc").expect("SL2");
    let w = WeylGroup::generate(&d).expect("weyl");
    let minus_i = center_two_torsion(&d).expect("center").into_iter().find(|z| !z.is_zero()).expect("-I");
    let oz = omega_z(&d, &minus_i).expect("omega_z");
    let mut sl2_slices = 0;
    for c in sweep_configs().into_iter().filter(|c| c.curve.epsilon == Epsilon::Minus && c.datum.label() == d.label()) {
        let q = query_of(&c);
        let (report, slice) = pseudo_real_moduli(&q, &minus_i).expect("pseudo-real");
        sl2_slices += 1;
        let s = q.sigma.matrix();
        let predicted: Vec<usize> = report
            .components
            .iter()
            .enumerate()
            .filter(|(_, comp)| {
                (0..w.order()).any(|m| {
                    // omega' in the twisted class of the component, gamma' conjugate to omega_z
                    let wm = w.matrix(m);
                    let in_class = (0..w.order()).any(|g| {
                        let gm = w.matrix(g);
                        let sg = s.checked_mul(&gm).and_then(|x| x.checked_mul(s)).expect("sigma(g)");
                        let sg_inv = w.matrix(w.inverse(w.index_of(&sg).expect("sigma(g) in W")));
                        gm.checked_mul(&comp.omega_matrix).and_then(|x| x.checked_mul(&sg_inv)).expect("ad") == wm
                    });
                    let sm = s.checked_mul(&wm).and_then(|x| x.checked_mul(s)).expect("sigma(omega)");
                    let gam = wm.checked_mul(&sm).expect("gamma");
                    in_class
                        && (0..w.order()).any(|g| {
                            let gm = w.matrix(g);
                            let gi = w.matrix(w.inverse(g));
                            gm.checked_mul(&gam).and_then(|x| x.checked_mul(&gi)).expect("conj") == oz
                        })
                })
            })
            .map(|(i, _)| i)
            .collect();
        if slice.components != predicted {
            bad.push(format!("{}: z = -I slice {:?}, brute force {predicted:?}", describe(&c), slice.components));
        }
        if slice.components.is_empty() && slice.diagnostic.is_none() {
            bad.push(format!("{}: empty z = -I slice without a diagnostic", describe(&c)));
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{queries} anti-holomorphic queries: z = 0 slice is the maximal part; SL2 z = -I matches brute force on {sl2_slices} queries (omega_z = {oz})"),
    )
    .with(bad)
}

type Shape = (usize, Vec<usize>, Vec<(String, Vec<usize>)>, Vec<(usize, String, usize, u64, Option<u64>, usize, bool)>);

fn shape(r: &ModuliReport) -> Shape {
    (
        r.class_count,
        r.empty_classes.clone(),
        r.h1_index.iter().map(|s| (s.gamma.to_string(), s.components.clone())).collect(),
        r.components
            .iter()
            .map(|c| (c.omega, c.gamma.to_string(), c.real_dim(), c.pi0, c.pi0_quotient, c.normalizer_order, c.maximal))
            .collect(),
    )
}

fn criterion_8() -> Outcome {
    let pairs: [(&str, &str, Region, Epsilon, Multiplier, Epsilon); 10] = [
        ("C*", "id", Region::Generic, Epsilon::Plus, Multiplier::MinusOne, Epsilon::Plus),
        ("C*", "id", Region::Generic, Epsilon::Plus, Multiplier::MinusOne, Epsilon::Minus),
        ("A1.sc", "id", Region::Generic, Epsilon::Plus, Multiplier::One, Epsilon::Plus),
        ("GL2", "id", Region::B, Epsilon::Minus, Multiplier::I, Epsilon::Minus),
        ("GL2", "perm:0;central:-1", Region::A, Epsilon::Minus, Multiplier::MinusOne, Epsilon::Minus),
        ("A2.sc", "id", Region::D, Epsilon::Minus, Multiplier::Gamma, Epsilon::Minus),
        ("A2.sc", "flip", Region::E, Epsilon::Minus, Multiplier::One, Epsilon::Plus),
        ("A1xA1", "swap", Region::C, Epsilon::Minus, Multiplier::MinusGamma, Epsilon::Minus),
        ("B2.sc", "id", Region::A, Epsilon::Minus, Multiplier::One, Epsilon::Plus),
        ("G2", "id", Region::Generic, Epsilon::Plus, Multiplier::One, Epsilon::Minus),
    ];
    let mut bad = Vec::new();
    for (group, sigma, region, eps, a, sign) in pairs {
        let d = build_datum(group).expect("datum");
        let s = parse_sigma(&d, sigma, eps).expect("sigma");
        let curve = catalog_curve(region, eps, a).expect("curve");
        let rep = InvolutionQuery::new(d, s, curve, sign, Side::Representation, Twist::Trivial).expect("query");
        let higgs = rep.with_side(Side::Higgs).expect("Higgs side");
        let rr = decomposition_with(&Pipeline::new(&rep).expect("pipeline")).expect("rep report");
        let hr = decomposition_with(&Pipeline::new(&higgs).expect("pipeline")).expect("Higgs report");
        if shape(&rr) != shape(&hr) {
            bad.push(format!(
                "{group} {sigma} {region}:{a} sign {sign}: representation {:?} vs Higgs {:?}",
                shape(&rr),
                shape(&hr)
            ));
        }
    }
    Outcome::new(bad.is_empty(), "10 paired queries agree on classes, gamma-indexing and component counts").with(bad)
}

/// The command-line examples, with `C*` passed as one argument.
const CLI_EXAMPLES: &[&[&str]] = &[
    &["weyl", "--group", "A2"],
    &["elliptic", "--region", "C", "--epsilon", "-"],
    &["pseudo-real", "--group", "A1.sc", "--sigma", "split", "--curve", "A:-1", "--sign", "-", "--z", "nontrivial"],
    &["fixed-locus", "--group", "C*", "--sigma", "id", "--curve", "H:-1", "--sign", "-", "--side", "higgs"],
    &["fixed-locus", "--group", "C*", "--sigma", "id", "--curve", "H:-1", "--sign", "+", "--side", "higgs"],
    &["fixed-locus", "--group", "A1.sc", "--sigma", "split", "--curve", "A:+1", "--sign", "-"],
    &["fixed-locus", "--group", "C*", "--sigma", "id", "--curve", "H:-1", "--sign", "-", "--format", "structured"],
    &["check-tables"],
];

fn run_cli(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = brane_atlas::cli::run(std::iter::once("brane-atlas").chain(args.iter().copied()), &mut out, &mut err);
    (code, out, err)
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    for args in CLI_EXAMPLES {
        let first = run_cli(args);
        let second = run_cli(args);
        if first.0 != 0 {
            bad.push(format!("{}: exit {} ({})", args.join(" "), first.0, String::from_utf8_lossy(&first.2).trim()));
        }
        if first != second {
            bad.push(format!("{}: output differs between runs", args.join(" ")));
        }
    }
    Outcome::new(bad.is_empty(), format!("{} CLI examples byte-identical across two runs", CLI_EXAMPLES.len())).with(bad)
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome, Duration)> = Vec::new();
    let mut push = |n, name, (o, d)| results.push((n, name, o, d));

    push(1, "Weyl enumeration", timed(Some(Duration::from_secs(1)), criterion_1));
    push(2, "Twisted conjugacy", timed(Some(Duration::from_secs(10)), criterion_2));
    let start = Instant::now();
    let (cases, unshiftable) = sweep_cases();
    let (o3, _) = criterion_3(&cases, &unshiftable);
    let t3 = start.elapsed();
    let o3 = if t3 > Duration::from_secs(60) {
        let mut o = o3;
        o.ok = false;
        o.details.push(format!("took {t3:.2?}, limit 60s"));
        o
    } else {
        o3
    };
    push(3, "Fixed-locus oracle equivalence", (o3, t3));
    push(4, "Dimension formula", timed(None, || criterion_4(&cases)));
    push(5, "Anti-holomorphic half-dimension", timed(None, || criterion_5(&cases)));
    push(6, "Table consistency", timed(None, criterion_6));
    push(7, "Pseudo-real slices", timed(None, criterion_7));
    push(8, "Higgs/representation agreement", timed(Some(Duration::from_secs(30)), criterion_8));
    push(9, "Determinism", timed(None, criterion_9));

    let mut failed = 0;
    for (n, name, o, d) in &results {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {n}. {name}: {} ({:.2?})", o.summary, d);
        if !o.ok {
            failed += 1;
            for line in o.details.iter().take(SHOW) {
                println!("       {line}");
            }
            if o.details.len() > SHOW {
                println!("       ... {} more", o.details.len() - SHOW);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
