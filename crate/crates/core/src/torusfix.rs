//! Fixed sets of affine integer-matrix maps on tori.
//!
//! Points of `(C*)^n` are written `z = exp(u + 2 pi i theta)`. The map
//! `z -> b * conj^eta(z)^M` with `b = exp(2 pi i q)` acts by `u -> M u`
//! and `theta -> s M theta + q`, where `s = -1` exactly when `eta = 1`
//! (conjugation inverts a phase). Fixed phases solve `(s M - I) theta = -q`
//! modulo `Z^n`, which the Smith normal form decides and counts.

use std::fmt;

use num_integer::Integer;

use crate::elliptic::Verdict;
use crate::error::{Error, Result};
use crate::lattice::{count_torsion_solutions, smith_normal_form, IntegerMatrix, Q};
use crate::phase::{apply_matrix, numeric_vector, Phase};

/// Default bound on brute-force census sizes.
pub const CENSUS_CAP: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// `(C*)^n`.
    SplitTorus,
    /// `U(1)^n`, where conjugation is inversion.
    Unitary,
    /// `R^n / Z^n`; the conjugation flag is ignored.
    RealTorus,
    /// `R^n / Z^n` times a real vector space on which `fiber` acts linearly.
    /// `holomorphic` selects complex units for the combined dimension.
    Mixed { fiber: IntegerMatrix, holomorphic: bool },
}

/// A finite-order affine self-map of a torus-type ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusMap {
    pub m: IntegerMatrix,
    pub conj: bool,
    /// Phase shift (split/unitary) or translation (real/mixed).
    pub shift: Vec<Phase>,
    pub ambient: Ambient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DimUnit {
    Complex,
    Real,
}

impl fmt::Display for DimUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DimUnit::Complex => "complex",
            DimUnit::Real => "real",
        })
    }
}

impl std::str::FromStr for DimUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complex" => Ok(DimUnit::Complex),
            "real" => Ok(DimUnit::Real),
            other => Err(Error::parse(format!("unknown dimension unit {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSetSummary {
    /// Whether the fixed set is nonempty, possibly conditional on symbols.
    pub nonempty: Verdict,
    pub dim: usize,
    pub unit: DimUnit,
    /// Number of components when nonempty.
    pub components: u64,
    /// Dimension of the compact torus directions (what torsion points see).
    pub torus_dim: usize,
    /// `A` and `rhs` of the phase congruence `A theta = rhs`.
    pub phase_matrix: IntegerMatrix,
    pub phase_rhs: Vec<Phase>,
}

impl FixedSetSummary {
    pub fn is_nonempty(&self) -> bool {
        self.nonempty == Verdict::Holds
    }
}

fn rank(m: &IntegerMatrix) -> Result<usize> {
    Ok(smith_normal_form(m)?.rank())
}

impl TorusMap {
    fn checked(self) -> Result<Self> {
        let n = self.m.rows();
        if !self.m.is_square() {
            return Err(Error::Dimension("torus map matrix must be square".into()));
        }
        if self.shift.len() != n {
            return Err(Error::Dimension(format!("shift of length {} for rank {n}", self.shift.len())));
        }
        if let Ambient::Mixed { fiber, .. } = &self.ambient {
            if !fiber.is_square() {
                return Err(Error::Dimension("fiber map must be square".into()));
            }
        }
        Ok(self)
    }

    pub fn split(m: IntegerMatrix, conj: bool, shift: Vec<Phase>) -> Result<Self> {
        TorusMap { m, conj, shift, ambient: Ambient::SplitTorus }.checked()
    }

    pub fn unitary(m: IntegerMatrix, conj: bool, shift: Vec<Phase>) -> Result<Self> {
        TorusMap { m, conj, shift, ambient: Ambient::Unitary }.checked()
    }

    pub fn real_torus(m: IntegerMatrix, shift: Vec<Phase>) -> Result<Self> {
        TorusMap { m, conj: false, shift, ambient: Ambient::RealTorus }.checked()
    }

    pub fn mixed(m: IntegerMatrix, shift: Vec<Phase>, fiber: IntegerMatrix, holomorphic: bool) -> Result<Self> {
        TorusMap { m, conj: false, shift, ambient: Ambient::Mixed { fiber, holomorphic } }.checked()
    }

    pub fn rank(&self) -> usize {
        self.m.rows()
    }

    /// `s M` where `s = -1` when conjugation inverts phases.
    pub fn phase_matrix(&self) -> Result<IntegerMatrix> {
        let inverts = self.conj && matches!(self.ambient, Ambient::SplitTorus | Ambient::Unitary);
        if inverts {
            self.m.neg()
        } else {
            Ok(self.m.clone())
        }
    }

    /// Whether the map squares to the identity (exactly, or under conditions).
    pub fn is_involution(&self) -> Result<Verdict> {
        let sm = self.phase_matrix()?;
        if !sm.checked_mul(&sm)?.is_identity() {
            return Ok(Verdict::Fails);
        }
        if let Ambient::Mixed { fiber, .. } = &self.ambient {
            if !fiber.checked_mul(fiber)?.is_identity() {
                return Ok(Verdict::Fails);
            }
        }
        let obstruction = apply_matrix(&sm.plus_identity()?, &self.shift)?;
        Ok(Verdict::all_vanish(&obstruction))
    }

    /// Order of the linear part, if at most `limit`.
    pub fn linear_order(&self, limit: usize) -> Result<Option<usize>> {
        let sm = self.phase_matrix()?;
        let mut k = sm.order(limit)?;
        if let (Some(kk), Ambient::Mixed { fiber, .. }) = (k, &self.ambient) {
            k = fiber.order(limit)?.map(|f| kk.lcm(&f));
        }
        Ok(k)
    }

    /// Complex dimension of the ambient, or real dimension for real ambients.
    pub fn ambient_dim(&self) -> (usize, DimUnit) {
        let n = self.rank();
        match &self.ambient {
            Ambient::SplitTorus => (n, DimUnit::Complex),
            Ambient::Unitary | Ambient::RealTorus => (n, DimUnit::Real),
            Ambient::Mixed { fiber, holomorphic: true } => ((n + fiber.rows()) / 2, DimUnit::Complex),
            Ambient::Mixed { fiber, holomorphic: false } => (n + fiber.rows(), DimUnit::Real),
        }
    }

    /// Ambient dimension in `unit`; a complex ambient counted in real units
    /// doubles. Asking for complex units of a real ambient is an error.
    pub fn ambient_dim_in(&self, unit: DimUnit) -> Result<usize> {
        match (self.ambient_dim(), unit) {
            ((d, u), v) if u == v => Ok(d),
            ((d, DimUnit::Complex), DimUnit::Real) => Ok(2 * d),
            _ => Err(Error::domain("a real ambient has no complex dimension")),
        }
    }
}

/// Decides `A theta = rhs (mod Z^n)` over the reals with symbolic `rhs`.
pub fn phase_solvability(a: &IntegerMatrix, rhs: &[Phase]) -> Result<Verdict> {
    let snf = smith_normal_form(a)?;
    let r = snf.rank();
    let urhs = apply_matrix(&snf.u, rhs)?;
    Ok(Verdict::all_vanish(&urhs[r..]))
}

/// The fixed set of `t`, computed from Smith normal forms.
pub fn fixed_subgroup(t: &TorusMap) -> Result<FixedSetSummary> {
    let n = t.rank();
    let sm = t.phase_matrix()?;
    let a = sm.minus_identity()?;
    let rhs: Vec<Phase> = t.shift.iter().map(Phase::neg).collect::<Result<_>>()?;
    let snf = smith_normal_form(&a)?;
    let r = snf.rank();
    let torus_dim = n - r;
    let components = snf
        .invariant_factors()
        .iter()
        .filter(|&&d| d > 1)
        .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
        .ok_or(Error::Overflow("component count"))?;
    let nonempty = phase_solvability(&a, &rhs)?;
    let (dim, unit) = match &t.ambient {
        Ambient::SplitTorus if !t.conj => (torus_dim, DimUnit::Complex),
        Ambient::SplitTorus => {
            // moduli directions u -> M u contribute ker(M - I), connected
            let modulus = n - rank(&t.m.minus_identity()?)?;
            (modulus + torus_dim, DimUnit::Real)
        }
        Ambient::Unitary | Ambient::RealTorus => (torus_dim, DimUnit::Real),
        Ambient::Mixed { fiber, holomorphic } => {
            let fiber_dim = fiber.rows() - rank(&fiber.minus_identity()?)?;
            let real = torus_dim + fiber_dim;
            if *holomorphic {
                if real % 2 != 0 {
                    return Err(Error::domain("holomorphic fixed set of odd real dimension"));
                }
                (real / 2, DimUnit::Complex)
            } else {
                (real, DimUnit::Real)
            }
        }
    };
    Ok(FixedSetSummary { nonempty, dim, unit, components, torus_dim, phase_matrix: a, phase_rhs: rhs })
}

/// Shift with symbols replaced is required for counting.
fn numeric_shift(t: &TorusMap) -> Result<Vec<Q>> {
    numeric_vector(&t.shift).ok_or_else(|| Error::domain("census needs a numeric shift"))
}

/// Counts fixed points among the `N`-torsion points by applying the map to
/// every point of `((1/N) Z / Z)^n`.
pub fn torsion_point_census(t: &TorusMap, n_tors: i64) -> Result<u128> {
    torsion_point_census_with_cap(t, n_tors, CENSUS_CAP)
}

pub fn torsion_point_census_with_cap(t: &TorusMap, n_tors: i64, cap: u128) -> Result<u128> {
    Ok(census_points(t, n_tors, cap)?.len() as u128)
}

/// The fixed `N`-torsion points themselves, as integer vectors `N * theta`.
pub fn census_points(t: &TorusMap, n_tors: i64, cap: u128) -> Result<Vec<Vec<i64>>> {
    if n_tors < 1 {
        return Err(Error::domain(format!("torsion order must be positive, got {n_tors}")));
    }
    let n = t.rank();
    let points = (n_tors as u128).checked_pow(n as u32).ok_or(Error::Overflow("census size"))?;
    if points > cap {
        return Err(Error::EnumerationCap { points, cap });
    }
    let q = numeric_shift(t)?;
    // N q must be integral for any N-torsion point to be fixed.
    let nq: Vec<Option<i64>> = q
        .iter()
        .map(|&x| {
            let y = x * Q::from_integer(n_tors);
            y.is_integer().then(|| y.to_integer())
        })
        .collect();
    if nq.iter().any(Option::is_none) {
        return Ok(vec![]);
    }
    let nq: Vec<i64> = nq.into_iter().map(Option::unwrap).collect();
    let sm = t.phase_matrix()?;
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    loop {
        let image = sm.apply(&x)?;
        if (0..n).all(|i| (image[i] + nq[i] - x[i]).rem_euclid(n_tors) == 0) {
            out.push(x.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(out);
            }
            x[k] += 1;
            if x[k] < n_tors {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// Torsion count predicted by the Smith form of the fixed-point congruence.
pub fn predicted_census(t: &TorusMap, n_tors: i64) -> Result<u128> {
    let q = numeric_shift(t)?;
    let a = t.phase_matrix()?.minus_identity()?;
    let rhs: Vec<Q> = q.iter().map(|&x| -x).collect();
    count_torsion_solutions(&a, &rhs, n_tors)
}

/// Whether `count = components * N^torus_dim` is expected at this `N`:
/// every nonzero invariant factor `d_i` divides `N` and `(N / d_i) (U rhs)_i`
/// is integral, so that all solutions `y_i = ((U rhs)_i + k) / d_i` are
/// `N`-torsion.
pub fn census_formula_applies(t: &TorusMap, n_tors: i64) -> Result<bool> {
    let Some(q) = numeric_vector(&t.shift) else {
        return Ok(false);
    };
    let a = t.phase_matrix()?.minus_identity()?;
    let snf = smith_normal_form(&a)?;
    let rhs: Vec<Q> = q.iter().map(|&x| -x).collect();
    let urhs = snf.u.apply_rational(&rhs)?;
    let d = snf.invariant_factors();
    for (i, &x) in urhs.iter().enumerate() {
        match d.get(i).copied().filter(|&di| di != 0) {
            Some(di) if n_tors % di != 0 => return Ok(false),
            Some(di) if !(x * Q::from_integer(n_tors / di)).is_integer() => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

/// Value of `ambient_dim / (2 * ord)` with its divisibility status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PaperDimension {
    pub value: Q,
}

impl PaperDimension {
    pub fn integral(&self) -> Option<usize> {
        self.value.is_integer().then(|| self.value.to_integer() as usize)
    }
}

impl fmt::Display for PaperDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.integral() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{} (non-integral)", self.value),
        }
    }
}

/// `ambient_dim / (2 * ord(omega sigma(omega)))`.
pub fn paper_dimension(order: usize, ambient_dim: usize) -> Result<PaperDimension> {
    if order == 0 {
        return Err(Error::domain("order must be at least 1"));
    }
    let denom = i64::try_from(2 * order).map_err(|_| Error::Overflow("paper dimension"))?;
    let num = i64::try_from(ambient_dim).map_err(|_| Error::Overflow("paper dimension"))?;
    Ok(PaperDimension { value: Q::new(num, denom) })
}

impl fmt::Display for FixedSetSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.nonempty {
            Verdict::Fails => write!(f, "empty"),
            v => {
                write!(f, "dim {} ({}), {} component(s)", self.dim, self.unit, self.components)?;
                if let Verdict::Conditional(_) = v {
                    write!(f, ", nonempty {v}")?;
                }
                Ok(())
            }
        }
    }
}

/// A zero shift of the given length.
pub fn zero_shift(n: usize) -> Vec<Phase> {
    vec![Phase::zero(); n]
}
