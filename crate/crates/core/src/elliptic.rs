//! Involutions of the elliptic curve `X_gamma = C / <1, gamma>`.
//!
//! The catalog is literal data transcribed from the classification of
//! holomorphic and anti-holomorphic involutions, their actions on
//! `pi_1 = <delta_1, delta_2>` and the induced maps `f^+`, `f^-` on
//! `Hom(pi_1, C*) = (C*)^2`. The derivation oracle [`derive_pi1`]
//! recomputes every action from the lattice `<1, gamma>` and is used to
//! validate the transcription and fill the rows the tables leave implicit.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::involutions::Epsilon;
use crate::lattice::{cokernel_invariants, q_add, q_int, q_mul, q_sub, solve_mod_lattice, IntegerMatrix, Q};
use crate::phase::{apply_matrix, Phase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    /// The whole upper half-plane (holomorphic involutions only).
    Generic,
    A,
    B,
    C,
    D,
    E,
}

impl Region {
    pub const REAL: [Region; 5] = [Region::A, Region::B, Region::C, Region::D, Region::E];

    /// Description of the moduli `gamma` in this region.
    pub fn constraint(self) -> &'static str {
        match self {
            Region::Generic => "gamma in H",
            Region::A => "Im(gamma) > 1, Re(gamma) = 0",
            Region::B => "Im(gamma) = 1, Re(gamma) = 0",
            Region::C => "0 < Re(gamma) < 1/2, |gamma| = 1",
            Region::D => "Im(gamma) = sqrt(3)/2, Re(gamma) = 1/2",
            Region::E => "Im(gamma) > sqrt(3)/2, Re(gamma) = 1/2",
        }
    }

    /// A sample point as `(t, n)` with `gamma^2 = t gamma - n`, i.e.
    /// `t = 2 Re(gamma)` and `n = |gamma|^2`.
    pub fn sample(self) -> (Q, Q) {
        match self {
            Region::Generic | Region::A => (q_int(0), q_int(4)),
            Region::B => (q_int(0), q_int(1)),
            Region::C => (Q::new(1, 2), q_int(1)),
            Region::D => (q_int(1), q_int(1)),
            Region::E => (q_int(1), q_int(4)),
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::Generic => "H",
            Region::A => "A",
            Region::B => "B",
            Region::C => "C",
            Region::D => "D",
            Region::E => "E",
        })
    }
}

impl FromStr for Region {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "H" | "GENERIC" => Ok(Region::Generic),
            "A" => Ok(Region::A),
            "B" => Ok(Region::B),
            "C" => Ok(Region::C),
            "D" => Ok(Region::D),
            "E" => Ok(Region::E),
            other => Err(Error::parse(format!("unknown region {other:?}"))),
        }
    }
}

/// The multiplier `a` in `z -> a z` or `z -> a conj(z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Multiplier {
    One,
    MinusOne,
    I,
    MinusI,
    Gamma,
    MinusGamma,
    GammaSq,
    MinusGammaSq,
}

impl Multiplier {
    pub fn negated(self) -> Self {
        use Multiplier::*;
        match self {
            One => MinusOne,
            MinusOne => One,
            I => MinusI,
            MinusI => I,
            Gamma => MinusGamma,
            MinusGamma => Gamma,
            GammaSq => MinusGammaSq,
            MinusGammaSq => GammaSq,
        }
    }
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Multiplier::One => "+1",
            Multiplier::MinusOne => "-1",
            Multiplier::I => "+i",
            Multiplier::MinusI => "-i",
            Multiplier::Gamma => "gamma",
            Multiplier::MinusGamma => "-gamma",
            Multiplier::GammaSq => "gamma2",
            Multiplier::MinusGammaSq => "-gamma2",
        })
    }
}

impl FromStr for Multiplier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1" | "+1" => Ok(Multiplier::One),
            "-1" => Ok(Multiplier::MinusOne),
            "i" | "+i" => Ok(Multiplier::I),
            "-i" => Ok(Multiplier::MinusI),
            "gamma" | "+gamma" | "g" => Ok(Multiplier::Gamma),
            "-gamma" | "-g" => Ok(Multiplier::MinusGamma),
            "gamma2" | "+gamma2" | "gamma^2" | "g2" => Ok(Multiplier::GammaSq),
            "-gamma2" | "-gamma^2" | "-g2" => Ok(Multiplier::MinusGammaSq),
            other => Err(Error::parse(format!("unknown multiplier {other:?}"))),
        }
    }
}

/// Whether a datum was read off the tables or computed from the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Tabulated,
    Computed,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Tabulated => "tabulated",
            Source::Computed => "computed",
        })
    }
}

/// One catalog row: `t_y o alpha_(epsilon, a)` on a curve of the region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticInvolution {
    pub epsilon: Epsilon,
    pub a: Multiplier,
    pub region: Region,
    /// Composed with a translation from the admissible class.
    pub translated: bool,
    pub admissible: &'static str,
    /// Fixed locus description for holomorphic rows.
    pub fixed_locus: Option<&'static str>,
    /// `(n, b)` for anti-holomorphic rows.
    pub topological_type: Option<(u8, u8)>,
}

impl EllipticInvolution {
    /// Looks up a catalog row.
    pub fn lookup(region: Region, epsilon: Epsilon, a: Multiplier, translated: bool) -> Result<Self> {
        let rows = enumerate_involutions(region, epsilon)?;
        let other = rows.iter().any(|r| r.a == a && r.translated != translated);
        rows.into_iter().find(|r| r.a == a && r.translated == translated).ok_or_else(|| {
            let t = if translated { "t_y o " } else { "" };
            let hint = match (other, translated) {
                (true, false) => " (it is listed composed with a translation: add ':t')",
                (true, true) => " (it is listed without a translation: drop ':t')",
                _ => "",
            };
            Error::domain(format!("{t}alpha({epsilon},{a}) is not an involution listed for region {region}{hint}"))
        })
    }

    pub fn name(&self) -> String {
        let t = if self.translated { "t_y o " } else { "" };
        format!("{t}alpha({},{})", self.epsilon, self.a)
    }

    /// A representative translation `y` in coordinates of `<1, gamma>`.
    pub fn canonical_translation(&self) -> [Q; 2] {
        let half = Q::new(1, 2);
        if !self.translated {
            return [Q::zero(), Q::zero()];
        }
        match (self.epsilon, self.region, self.a) {
            (Epsilon::Plus, _, _) => [half, Q::zero()],
            (Epsilon::Minus, Region::A | Region::B, Multiplier::MinusOne) => [Q::zero(), half],
            (Epsilon::Minus, Region::A | Region::B, _) => [half, Q::zero()],
            // in C, D, E every admissible translation is isomorphic to y = x0
            _ => [Q::zero(), Q::zero()],
        }
    }
}

impl fmt::Display for EllipticInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on region {}", self.name(), self.region)
    }
}

fn row(
    epsilon: Epsilon,
    region: Region,
    a: Multiplier,
    translated: bool,
    admissible: &'static str,
    fixed_locus: Option<&'static str>,
    topological_type: Option<(u8, u8)>,
) -> EllipticInvolution {
    EllipticInvolution { epsilon, a, region, translated, admissible, fixed_locus, topological_type }
}

/// All catalog rows for a region and sign.
pub fn enumerate_involutions(region: Region, epsilon: Epsilon) -> Result<Vec<EllipticInvolution>> {
    use Multiplier::*;
    let m = Epsilon::Minus;
    if epsilon == Epsilon::Plus {
        let p = Epsilon::Plus;
        return Ok(vec![
            row(p, region, One, false, "-", Some("X"), None),
            row(p, region, One, true, "y in X[2], y != x0", Some("empty"), None),
            row(p, region, MinusOne, false, "-", Some("X[2]"), None),
            row(p, region, MinusOne, true, "y in X", Some("y/2 + X[2]"), None),
        ]);
    }
    let rows = match region {
        Region::Generic => {
            return Err(Error::domain("anti-holomorphic involutions need a region A-E"));
        }
        Region::A => vec![
            row(m, region, One, false, "-", None, Some((2, 0))),
            row(m, region, MinusOne, false, "-", None, Some((2, 0))),
            row(m, region, One, true, "y != x0, y in X^alpha(-,-1)", None, Some((0, 1))),
            row(m, region, MinusOne, true, "y != x0, y in X^alpha(-,+1)", None, Some((0, 1))),
        ],
        Region::B => vec![
            row(m, region, One, false, "-", None, Some((2, 0))),
            row(m, region, MinusOne, false, "-", None, Some((2, 0))),
            row(m, region, I, false, "-", None, Some((1, 1))),
            row(m, region, MinusI, false, "-", None, Some((1, 1))),
            row(m, region, One, true, "y != x0, y in X^alpha(-,-1)", None, Some((0, 1))),
            row(m, region, MinusOne, true, "y != x0, y in X^alpha(-,+1)", None, Some((0, 1))),
        ],
        Region::C => vec![
            row(m, region, Gamma, true, "y in X^alpha(-,-gamma)", None, Some((1, 1))),
            row(m, region, MinusGamma, true, "y in X^alpha(-,gamma)", None, Some((1, 1))),
        ],
        Region::D => vec![
            row(m, region, One, true, "y in X^alpha(-,-1)", None, Some((1, 1))),
            row(m, region, MinusOne, true, "y in X^alpha(-,+1)", None, Some((1, 1))),
            row(m, region, Gamma, true, "y in X^alpha(-,-gamma)", None, Some((1, 1))),
            row(m, region, MinusGamma, true, "y in X^alpha(-,gamma)", None, Some((1, 1))),
            row(m, region, GammaSq, true, "y in X^alpha(-,-gamma2)", None, Some((1, 1))),
            row(m, region, MinusGammaSq, true, "y in X^alpha(-,gamma2)", None, Some((1, 1))),
        ],
        Region::E => vec![
            row(m, region, One, true, "y in X^alpha(-,-1)", None, Some((1, 1))),
            row(m, region, MinusOne, true, "y in X^alpha(-,+1)", None, Some((1, 1))),
        ],
    };
    Ok(rows)
}

fn mat(rows: [[i64; 2]; 2]) -> IntegerMatrix {
    IntegerMatrix::from_rows(&rows).expect("2x2 literal")
}

/// Tabulated `pi_1` action: columns are the images of `delta_1, delta_2`.
///
/// Rows cover the tables verbatim, including the `C,D` block for `a = +-1`.
pub fn tabulated_pi1(region: Region, epsilon: Epsilon, a: Multiplier) -> Option<IntegerMatrix> {
    use Multiplier::*;
    let m = match (epsilon, region, a) {
        (Epsilon::Plus, _, One) => mat([[1, 0], [0, 1]]),
        (Epsilon::Plus, _, MinusOne) => mat([[-1, 0], [0, -1]]),
        (Epsilon::Minus, Region::A | Region::B | Region::C | Region::D, One) => mat([[1, 0], [0, -1]]),
        (Epsilon::Minus, Region::A | Region::B | Region::C | Region::D, MinusOne) => mat([[-1, 0], [0, 1]]),
        (Epsilon::Minus, Region::C | Region::D, Gamma) => mat([[0, 1], [1, 0]]),
        (Epsilon::Minus, Region::C | Region::D, MinusGamma) => mat([[0, -1], [-1, 0]]),
        (Epsilon::Minus, Region::E, One) => mat([[1, 1], [0, -1]]),
        (Epsilon::Minus, Region::E, MinusOne) => mat([[-1, -1], [0, 1]]),
        _ => return None,
    };
    Some(m)
}

/// Element `x + y gamma` of `Q(gamma)` with `gamma^2 = t gamma - n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Quad {
    x: Q,
    y: Q,
}

fn quad_mul(a: Quad, b: Quad, t: Q, n: Q) -> Result<Quad> {
    let yy = q_mul(a.y, b.y)?;
    Ok(Quad {
        x: q_sub(q_mul(a.x, b.x)?, q_mul(n, yy)?)?,
        y: q_add(q_add(q_mul(a.x, b.y)?, q_mul(a.y, b.x)?)?, q_mul(t, yy)?)?,
    })
}

fn quad_conj(a: Quad, t: Q) -> Result<Quad> {
    Ok(Quad { x: q_add(a.x, q_mul(a.y, t)?)?, y: -a.y })
}

fn multiplier_value(region: Region, a: Multiplier) -> Option<Quad> {
    let (t, n) = region.sample();
    let q = |x: Q, y: Q| Some(Quad { x, y });
    let (one, zero) = (q_int(1), Q::zero());
    match a {
        Multiplier::One => q(one, zero),
        Multiplier::MinusOne => q(-one, zero),
        // i lies in the lattice only when gamma = i
        Multiplier::I => (region == Region::B).then_some(Quad { x: zero, y: one }),
        Multiplier::MinusI => (region == Region::B).then_some(Quad { x: zero, y: -one }),
        Multiplier::Gamma => q(zero, one),
        Multiplier::MinusGamma => q(zero, -one),
        Multiplier::GammaSq => q(-n, t),
        Multiplier::MinusGammaSq => q(n, -t),
    }
}

/// Recomputes the `pi_1` action of `alpha_(epsilon, a)` on the sample
/// lattice of the region. `None` when the map does not preserve the lattice
/// or is not an involution.
pub fn derive_pi1(region: Region, epsilon: Epsilon, a: Multiplier) -> Result<Option<IntegerMatrix>> {
    let (t, n) = region.sample();
    let Some(av) = multiplier_value(region, a) else {
        return Ok(None);
    };
    let basis = [Quad { x: q_int(1), y: Q::zero() }, Quad { x: Q::zero(), y: q_int(1) }];
    let mut cols = Vec::new();
    for b in basis {
        let arg = if epsilon == Epsilon::Minus { quad_conj(b, t)? } else { b };
        let img = quad_mul(av, arg, t, n)?;
        if !img.x.is_integer() || !img.y.is_integer() {
            return Ok(None);
        }
        cols.push(vec![img.x.to_integer(), img.y.to_integer()]);
    }
    let p = IntegerMatrix::from_columns(&cols)?;
    if !p.checked_mul(&p)?.is_identity() {
        return Ok(None);
    }
    Ok(Some(p))
}

/// `pi_1` action used by the pipeline: tabulated when the table entry agrees
/// with the lattice, computed otherwise.
pub fn pi1_matrix_with_source(region: Region, epsilon: Epsilon, a: Multiplier) -> Result<(IntegerMatrix, Source)> {
    let derived = derive_pi1(region, epsilon, a)?;
    match (tabulated_pi1(region, epsilon, a), derived) {
        (Some(tab), Some(der)) if tab == der => Ok((tab, Source::Tabulated)),
        (_, Some(der)) => Ok((der, Source::Computed)),
        (_, None) => Err(Error::domain(format!(
            "alpha({epsilon},{a}) does not act on the lattice of region {region}"
        ))),
    }
}

pub fn pi1_matrix(inv: &EllipticInvolution) -> Result<IntegerMatrix> {
    Ok(pi1_matrix_with_source(inv.region, inv.epsilon, inv.a)?.0)
}

/// Higgs sign `+` or `-` selecting `f^+` or `f^-`.
pub type Sign = Epsilon;

/// The literal `f^+` and `f^-` matrices as printed, keyed by the table's
/// region groups. Row `i` of a matrix holds the exponents of `z_1, z_2` in
/// the `i`-th output coordinate; `f^-` always conjugates.
pub struct FMapRow {
    pub regions: &'static [Region],
    pub epsilon: Epsilon,
    pub a: Multiplier,
    pub f_plus: [[i64; 2]; 2],
    pub f_minus: [[i64; 2]; 2],
}

pub const F_MAP_TABLE: &[FMapRow] = &[
    FMapRow { regions: &[Region::Generic], epsilon: Epsilon::Plus, a: Multiplier::One, f_plus: [[1, 0], [0, 1]], f_minus: [[-1, 0], [0, -1]] },
    FMapRow { regions: &[Region::Generic], epsilon: Epsilon::Plus, a: Multiplier::MinusOne, f_plus: [[-1, 0], [0, -1]], f_minus: [[1, 0], [0, 1]] },
    FMapRow { regions: &[Region::A, Region::B], epsilon: Epsilon::Minus, a: Multiplier::One, f_plus: [[1, 0], [0, -1]], f_minus: [[-1, 0], [0, 1]] },
    FMapRow { regions: &[Region::A, Region::B], epsilon: Epsilon::Minus, a: Multiplier::MinusOne, f_plus: [[-1, 0], [0, 1]], f_minus: [[1, 0], [0, -1]] },
    FMapRow { regions: &[Region::C, Region::D], epsilon: Epsilon::Minus, a: Multiplier::One, f_plus: [[1, 0], [0, -1]], f_minus: [[-1, 0], [0, 1]] },
    FMapRow { regions: &[Region::C, Region::D], epsilon: Epsilon::Minus, a: Multiplier::MinusOne, f_plus: [[-1, 0], [0, 1]], f_minus: [[1, 0], [0, -1]] },
    FMapRow { regions: &[Region::C, Region::D], epsilon: Epsilon::Minus, a: Multiplier::Gamma, f_plus: [[0, 1], [1, 0]], f_minus: [[0, -1], [-1, 0]] },
    FMapRow { regions: &[Region::C, Region::D], epsilon: Epsilon::Minus, a: Multiplier::MinusGamma, f_plus: [[0, -1], [-1, 0]], f_minus: [[0, 1], [1, 0]] },
    FMapRow { regions: &[Region::E], epsilon: Epsilon::Minus, a: Multiplier::One, f_plus: [[1, 0], [1, -1]], f_minus: [[-1, 0], [-1, 1]] },
    // printed as (conj z1^-1, conj z2^-1 conj z1)
    FMapRow { regions: &[Region::E], epsilon: Epsilon::Minus, a: Multiplier::MinusOne, f_plus: [[-1, 0], [-1, 1]], f_minus: [[-1, 0], [1, -1]] },
];

/// Index of the cell whose printed `f^-` breaks the conjugate-inverse duality.
pub const FLAGGED_ROW: usize = 9;

/// A self-map `z -> b * conj^eta(z)^M` of `(C*)^2` with unit-modulus shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusMap2 {
    pub m: IntegerMatrix,
    pub conj: bool,
    /// Phases of `(b_1, b_2)`.
    pub shift: [Phase; 2],
}

/// Outcome of checking an exact condition that may involve free symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Holds exactly when every listed phase vanishes mod 1.
    Conditional(Vec<Phase>),
}

impl Verdict {
    /// Verdict for "every entry of `v` vanishes mod 1".
    pub fn all_vanish(v: &[Phase]) -> Verdict {
        if v.iter().all(Phase::is_zero) {
            return Verdict::Holds;
        }
        if v.iter().any(|p| p.value().is_some_and(|q| !q.is_zero())) {
            return Verdict::Fails;
        }
        Verdict::Conditional(v.iter().filter(|p| !p.is_zero()).cloned().collect())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails => f.write_str("fails"),
            Verdict::Conditional(c) => {
                let parts: Vec<String> = c.iter().map(|p| format!("{p} = 0 mod 1")).collect();
                write!(f, "if {}", parts.join(" and "))
            }
        }
    }
}

/// `(I + s M) q` with `s = +1` without conjugation and `-1` with it. An
/// affine map `q + conj^eta(z)^M` is an involution iff `M^2 = I` and this
/// vanishes mod 1.
pub fn shift_obstruction(m: &IntegerMatrix, conj: bool, q: &[Phase]) -> Result<Vec<Phase>> {
    let sm = if conj { m.neg()? } else { m.clone() };
    let image = apply_matrix(&sm.plus_identity()?, q)?;
    Ok(image)
}

impl TorusMap2 {
    pub fn involution_verdict(&self) -> Result<Verdict> {
        if !self.m.checked_mul(&self.m)?.is_identity() {
            return Ok(Verdict::Fails);
        }
        Ok(Verdict::all_vanish(&shift_obstruction(&self.m, self.conj, &self.shift)?))
    }
}

/// Builds `f^{+-, (b_1, b_2)}` for a catalog row.
///
/// The map is `f^+ = P^T` (no conjugation) or `f^- = -P^T` (with
/// conjugation), `P` the `pi_1` action. A shift that provably violates the
/// involution condition is rejected; a symbolic one is accepted and its
/// condition can be read back with [`TorusMap2::involution_verdict`].
pub fn f_map(inv: &EllipticInvolution, sign: Sign, shift: [Phase; 2]) -> Result<TorusMap2> {
    let p = pi1_matrix(inv)?;
    let (m, conj) = match sign {
        Epsilon::Plus => (p.transpose(), false),
        Epsilon::Minus => (p.transpose().neg()?, true),
    };
    let map = TorusMap2 { m, conj, shift };
    if map.involution_verdict()? == Verdict::Fails {
        return Err(Error::domain(format!(
            "shift ({}, {}) violates the involution condition (b1^-1, b2^-1) = f(b1, b2) for {}",
            map.shift[0], map.shift[1], inv.name()
        )));
    }
    Ok(map)
}

/// Real-torus fixed set of the curve involution `x -> P x + y` on
/// `R^2 / Z^2`: `(dimension, number of components)`, or `None` if empty.
pub fn curve_fixed_set(p: &IntegerMatrix, y: &[Q; 2]) -> Result<Option<(usize, u64)>> {
    let a = p.minus_identity()?;
    let rhs = [-y[0], -y[1]];
    let sol = solve_mod_lattice(&a, &rhs)?;
    if !sol.is_solvable() {
        return Ok(None);
    }
    let ck = cokernel_invariants(&a)?;
    Ok(Some((ck.free_rank, ck.torsion_product()?)))
}

/// Topological type `(n, b)` of an anti-holomorphic row, from the fixed set
/// of its canonical representative.
pub fn derived_topological_type(inv: &EllipticInvolution) -> Result<(u8, u8)> {
    if inv.epsilon != Epsilon::Minus {
        return Err(Error::domain("topological type is defined for anti-holomorphic involutions"));
    }
    let p = pi1_matrix(inv)?;
    let n = match curve_fixed_set(&p, &inv.canonical_translation())? {
        None => 0,
        Some((_, c)) => c,
    };
    // genus one: two ovals bound an annulus, otherwise the quotient is non-orientable
    Ok(match n {
        2 => (2, 0),
        0 => (0, 1),
        1 => (1, 1),
        other => return Err(Error::domain(format!("{other} real components on a genus-one curve"))),
    })
}
