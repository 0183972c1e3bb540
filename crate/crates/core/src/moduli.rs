//! Assembly of fixed loci on `(A tensor Lambda_T) / W` from twisted classes.
//!
//! For a group involution `S` on the cocharacter lattice, a curve involution
//! and a Higgs sign, every Weyl element `omega` gives a finite-order map
//! `omega tau` of the abelian variety `A tensor Lambda_T`. Its fixed set is
//! computed by [`crate::torusfix`]; the fixed locus in the quotient is the
//! union over twisted classes of `omega`, cut down by `N_W`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::elliptic::{f_map, pi1_matrix_with_source, EllipticInvolution, Multiplier, Region, Verdict};
use crate::error::{Error, Result};
use crate::involutions::{induced_weyl_automorphism, Epsilon, LatticeInvolution};
use crate::lattice::{rational_inverse, smith_normal_form, IntegerMatrix, Q};
use crate::phase::{apply_matrix, numeric_vector, Phase};
use crate::rootdatum::{center_two_torsion, omega_z, CentralElement2, RootDatum};
use crate::torusfix::{fixed_subgroup, paper_dimension, DimUnit, PaperDimension, TorusMap};
use crate::weyl::{
    gamma_of, normalizer_fixed_torus, shifted_h1, twisted_classes, upsilon_from, TwistedClass, WeylAutomorphism,
    WeylGroup,
};

/// Largest pre-quotient component count for which `N_W`-orbits are listed.
pub const ORBIT_LABEL_CAP: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Higgs,
    Representation,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Higgs => "higgs",
            Side::Representation => "representation",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "higgs" | "H" => Ok(Side::Higgs),
            "representation" | "rep" | "R" => Ok(Side::Representation),
            other => Err(Error::parse(format!("unknown side {other:?} (expected higgs or representation)"))),
        }
    }
}

/// Brane type of a fixed locus with respect to the three complex structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Brane {
    Bbb,
    Baa,
    Aba,
    Aab,
}

impl fmt::Display for Brane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Brane::Bbb => "(B,B,B)",
            Brane::Baa => "(B,A,A)",
            Brane::Aba => "(A,B,A)",
            Brane::Aab => "(A,A,B)",
        })
    }
}

impl FromStr for Brane {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "(B,B,B)" => Ok(Brane::Bbb),
            "(B,A,A)" => Ok(Brane::Baa),
            "(A,B,A)" => Ok(Brane::Aba),
            "(A,A,B)" => Ok(Brane::Aab),
            other => Err(Error::parse(format!("unknown brane label {other:?}"))),
        }
    }
}

pub fn brane_label(curve: Epsilon, group: Epsilon, sign: Epsilon) -> Result<Brane> {
    use Epsilon::*;
    match (curve, group, sign) {
        (Plus, Plus, Plus) => Ok(Brane::Bbb),
        (Plus, Plus, Minus) => Ok(Brane::Baa),
        (Minus, Minus, Minus) => Ok(Brane::Aba),
        (Minus, Minus, Plus) => Ok(Brane::Aab),
        _ => Err(Error::domain(format!(
            "curve involution is {curve} but group involution is {group}; both must be holomorphic or both anti-holomorphic"
        ))),
    }
}

/// Twisting data attached to the central basis vectors.
///
/// `Representation` carries the phases of `(b_{j,1}, b_{j,2})`;
/// `Higgs` carries the point `y_j` of `R^2 / Z^2` with `F_j = p(y_j)`.
/// The Higgs-field part of a twist never affects the fixed locus and is
/// not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    Trivial,
    Representation(Vec<[Phase; 2]>),
    Higgs(Vec<[Phase; 2]>),
}

impl Twist {
    fn entries(&self) -> Option<&[[Phase; 2]]> {
        match self {
            Twist::Trivial => None,
            Twist::Representation(v) | Twist::Higgs(v) => Some(v),
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, v) = match self {
            Twist::Trivial => return f.write_str("trivial"),
            Twist::Representation(v) => ("rep", v),
            Twist::Higgs(v) => ("higgs", v),
        };
        let parts: Vec<String> = v.iter().map(|[a, b]| format!("{a},{b}")).collect();
        write!(f, "{tag}:{}", parts.join(";"))
    }
}

impl FromStr for Twist {
    type Err = Error;

    /// `trivial`, `rep:b11,b12;b21,b22` or `higgs:y11,y12;...`, with phases
    /// such as `1/2`, `t` or `1/3-s`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "trivial" || s.is_empty() {
            return Ok(Twist::Trivial);
        }
        let (tag, body) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("twist {s:?} must be trivial, rep:... or higgs:...")))?;
        let mut v = Vec::new();
        for pair in body.split(';') {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| Error::parse(format!("twist entry {pair:?} must be two comma-separated phases")))?;
            v.push([a.trim().parse()?, b.trim().parse()?]);
        }
        match tag.trim() {
            "rep" | "representation" => Ok(Twist::Representation(v)),
            "higgs" => Ok(Twist::Higgs(v)),
            other => Err(Error::parse(format!("unknown twist kind {other:?}"))),
        }
    }
}

/// One involution `I(alpha, sigma, sign, F)` or `J(alpha, sigma, sign, chi)`.
#[derive(Clone, Debug)]
pub struct InvolutionQuery {
    pub datum: RootDatum,
    pub sigma: LatticeInvolution,
    pub curve: EllipticInvolution,
    pub sign: Epsilon,
    pub side: Side,
    pub twist: Twist,
}

impl InvolutionQuery {
    pub fn new(
        datum: RootDatum,
        sigma: LatticeInvolution,
        curve: EllipticInvolution,
        sign: Epsilon,
        side: Side,
        twist: Twist,
    ) -> Result<Self> {
        brane_label(curve.epsilon, sigma.epsilon(), sign)?;
        let q = InvolutionQuery { datum, sigma, curve, sign, side, twist };
        q.validate_twist()?;
        Ok(q)
    }

    pub fn with_side(&self, side: Side) -> Result<Self> {
        let twist = match (&self.twist, side) {
            (Twist::Trivial, _) => Twist::Trivial,
            (Twist::Representation(_), Side::Representation) | (Twist::Higgs(_), Side::Higgs) => self.twist.clone(),
            _ => return Err(Error::domain("twists are not transported between sides")),
        };
        InvolutionQuery::new(self.datum.clone(), self.sigma.clone(), self.curve.clone(), self.sign, side, twist)
    }

    pub fn brane(&self) -> Brane {
        brane_label(self.curve.epsilon, self.sigma.epsilon(), self.sign).expect("checked on construction")
    }

    fn validate_twist(&self) -> Result<()> {
        let Some(entries) = self.twist.entries() else {
            return Ok(());
        };
        let ell = self.datum.central_basis().len();
        if entries.len() != ell {
            return Err(Error::domain(format!(
                "twist has {} entries but the central lattice has rank {ell}",
                entries.len()
            )));
        }
        match (&self.twist, self.side) {
            (Twist::Representation(_), Side::Representation) => {
                for e in entries {
                    f_map(&self.curve, self.sign, e.clone())?;
                }
            }
            (Twist::Higgs(_), Side::Higgs) => {
                let p = higgs_curve_matrix(&self.curve)?;
                for e in entries {
                    let v = apply_matrix(&p.plus_identity()?, e)?;
                    if Verdict::all_vanish(&v) == Verdict::Fails {
                        return Err(Error::domain(format!(
                            "twist point ({}, {}) violates F^-1 = i(F) for {}",
                            e[0],
                            e[1],
                            self.curve.name()
                        )));
                    }
                }
            }
            _ => return Err(Error::domain(format!("a {} twist cannot be used on the {} side", twist_kind(&self.twist), self.side))),
        }
        Ok(())
    }
}

fn twist_kind(t: &Twist) -> &'static str {
    match t {
        Twist::Trivial => "trivial",
        Twist::Representation(_) => "representation",
        Twist::Higgs(_) => "Higgs",
    }
}

/// Action on `X = R^2 / Z^2` underlying the Higgs-side map: `alpha_(+,a)`
/// for holomorphic rows and `alpha_(-,-a)` for anti-holomorphic ones.
fn higgs_curve_matrix(curve: &EllipticInvolution) -> Result<IntegerMatrix> {
    let a = match curve.epsilon {
        Epsilon::Plus => curve.a,
        Epsilon::Minus => curve.a.negated(),
    };
    let region = if curve.epsilon == Epsilon::Plus { Region::Generic } else { curve.region };
    Ok(pi1_matrix_with_source(region, curve.epsilon, a)?.0)
}

/// Real-linear action on one Higgs-field coordinate `c` in `(Re c, Im c)`.
///
/// Holomorphic: `c -> sign * a * c`, which is what makes the Higgs and
/// representation sides agree for `a = -1`. Anti-holomorphic: an
/// antilinear reflection, `c -> -sign * conj(c)`; every antilinear
/// involution of `C` is conjugate to it, so fixed dimensions do not depend
/// on `a`.
fn higgs_fiber_matrix(curve: &EllipticInvolution, sign: Epsilon) -> Result<IntegerMatrix> {
    match curve.epsilon {
        Epsilon::Plus => {
            let a = match curve.a {
                Multiplier::One => 1,
                Multiplier::MinusOne => -1,
                other => return Err(Error::domain(format!("alpha(+,{other}) is not an involution"))),
            };
            let k = sign.sign() * a;
            Ok(IntegerMatrix::diagonal(&[k, k]))
        }
        Epsilon::Minus => {
            let k = -sign.sign();
            Ok(IntegerMatrix::diagonal(&[k, -k]))
        }
    }
}

/// `v tensor chi` laid out as `2k + c`.
fn tensor_shift(v: &[i64], chi: &[Phase; 2]) -> Result<Vec<Phase>> {
    let mut out = Vec::with_capacity(2 * v.len());
    for &vk in v {
        for c in chi {
            out.push(c.checked_scale(vk)?);
        }
    }
    Ok(out)
}

/// `omega tau` as a self-map of the side's ambient.
pub fn build_twisted_involution(q: &InvolutionQuery, w: &WeylGroup, omega: usize) -> Result<TorusMap> {
    let l = w.matrix(omega).checked_mul(q.sigma.matrix())?;
    let s = l.rows();
    let mut shift = vec![Phase::zero(); 2 * s];
    if let Some(entries) = q.twist.entries() {
        for (lambda, chi) in q.datum.central_basis().iter().zip(entries) {
            let image = l.apply(lambda)?;
            for (acc, t) in shift.iter_mut().zip(tensor_shift(&image, chi)?) {
                *acc = acc.checked_add(&t)?;
            }
        }
    }
    let map = match q.side {
        Side::Representation => {
            let f = f_map(&q.curve, q.sign, [Phase::zero(), Phase::zero()])?;
            TorusMap::split(l.kron(&f.m)?, f.conj, shift)?
        }
        Side::Higgs => {
            let p = higgs_curve_matrix(&q.curve)?;
            let fiber = l.kron(&higgs_fiber_matrix(&q.curve, q.sign)?)?;
            TorusMap::mixed(l.kron(&p)?, shift, fiber, q.curve.epsilon.is_holomorphic())?
        }
    };
    // (omega tau)^2 acts on the lattice part as omega sigma(omega)
    let gamma = l.checked_mul(&l)?.kron(&IntegerMatrix::identity(2))?;
    let sm = map.phase_matrix()?;
    if sm.checked_mul(&sm)? != gamma {
        return Err(Error::domain("square of the twisted map differs from omega sigma(omega)"));
    }
    Ok(map)
}

/// One nonempty piece `B^{omega tau}` of the fixed locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedLocusComponent {
    /// Index of the class representative in the group's element order.
    pub omega: usize,
    pub omega_matrix: IntegerMatrix,
    pub class_size: usize,
    /// `omega sigma(omega)` for the representative and its order.
    pub gamma: IntegerMatrix,
    pub gamma_order: usize,
    pub dim: usize,
    pub unit: DimUnit,
    pub paper_dim: PaperDimension,
    /// Connected components before dividing by `N_W`.
    pub pi0: u64,
    /// Number of `N_W`-orbits on those components, when enumerated.
    pub pi0_quotient: Option<u64>,
    pub normalizer_order: usize,
    pub maximal: bool,
    pub singular: bool,
    pub brane: Brane,
    /// Phases that must vanish for this piece to be nonempty.
    pub condition: Vec<Phase>,
}

impl FixedLocusComponent {
    pub fn real_dim(&self) -> usize {
        match self.unit {
            DimUnit::Complex => 2 * self.dim,
            DimUnit::Real => self.dim,
        }
    }
}

/// Components whose class has a given `gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSlice {
    pub gamma: IntegerMatrix,
    /// Positions in [`ModuliReport::components`].
    pub components: Vec<usize>,
}

/// Components lying over one central element `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoRealSlice {
    pub z: Vec<Q>,
    pub omega_z: IntegerMatrix,
    pub components: Vec<usize>,
    /// Why the slice is empty, if it is.
    pub diagnostic: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliReport {
    pub group: String,
    pub sigma: String,
    pub curve: String,
    pub sign: Epsilon,
    pub side: Side,
    pub twist: String,
    pub weyl_order: usize,
    pub class_count: usize,
    pub components: Vec<FixedLocusComponent>,
    /// Representatives of twisted classes with empty fixed set.
    pub empty_classes: Vec<usize>,
    pub h1_index: Vec<GammaSlice>,
    pub pseudo_real: Vec<PseudoRealSlice>,
}

/// Group data shared by every class of a query.
pub struct Pipeline<'q> {
    pub query: &'q InvolutionQuery,
    pub weyl: WeylGroup,
    pub sigma: WeylAutomorphism,
    pub classes: Vec<TwistedClass>,
}

impl<'q> Pipeline<'q> {
    pub fn new(query: &'q InvolutionQuery) -> Result<Self> {
        let weyl = WeylGroup::generate(&query.datum)?;
        Self::with_group(query, weyl)
    }

    pub fn with_group(query: &'q InvolutionQuery, weyl: WeylGroup) -> Result<Self> {
        let sigma = induced_weyl_automorphism(&query.sigma, &weyl)?;
        let classes = twisted_classes(&weyl, &sigma);
        Ok(Pipeline { query, weyl, sigma, classes })
    }

    /// Fixed-set data of `omega tau` for any element `omega`.
    pub fn component(&self, omega: usize) -> Result<Option<FixedLocusComponent>> {
        let q = self.query;
        let w = &self.weyl;
        let map = build_twisted_involution(q, w, omega)?;
        let gamma = gamma_of(w, &self.sigma, omega);
        let gamma_order = w.element_order(gamma);
        if gamma_order == 1 && map.is_involution()? == Verdict::Fails {
            return Err(Error::domain(format!(
                "twisted map for omega = {} is not an involution; the twist is inadmissible for {}",
                w.matrix(omega),
                q.sigma.label()
            )));
        }
        let fixed = fixed_subgroup(&map)?;
        let condition = match &fixed.nonempty {
            Verdict::Fails => return Ok(None),
            Verdict::Holds => vec![],
            Verdict::Conditional(c) => c.clone(),
        };
        let ambient_in_units = map.ambient_dim_in(fixed.unit)?;
        let normalizer = normalizer_fixed_torus(w, &self.sigma, omega);
        let pi0_quotient = if condition.is_empty() && fixed.components <= ORBIT_LABEL_CAP {
            Some(quotient_components(&map, w, &normalizer)?)
        } else {
            None
        };
        let class_size = self
            .classes
            .iter()
            .find(|c| c.members.binary_search(&omega).is_ok())
            .map(|c| c.members.len())
            .expect("classes partition W");
        Ok(Some(FixedLocusComponent {
            omega,
            omega_matrix: w.matrix(omega),
            class_size,
            gamma: w.matrix(gamma),
            gamma_order,
            dim: fixed.dim,
            unit: fixed.unit,
            paper_dim: paper_dimension(gamma_order, ambient_in_units)?,
            pi0: fixed.components,
            pi0_quotient,
            normalizer_order: normalizer.len(),
            maximal: gamma_order == 1,
            singular: gamma_order != 1,
            brane: q.brane(),
            condition,
        }))
    }
}

/// Number of `N_W`-orbits on the components of the fixed set of `map`.
///
/// Components are labelled through the Smith form `U A V = D` of the
/// congruence `A theta = r`: with `y = V^{-1} theta`, the label is
/// `(d_i y_i - (U r)_i) mod d_i`.
fn quotient_components(map: &TorusMap, w: &WeylGroup, normalizer: &[usize]) -> Result<u64> {
    let a = map.phase_matrix()?.minus_identity()?;
    let rhs: Vec<Phase> = map.shift.iter().map(Phase::neg).collect::<Result<_>>()?;
    let r = numeric_vector(&rhs).ok_or_else(|| Error::domain("component labels need a numeric shift"))?;
    let snf = smith_normal_form(&a)?;
    let d = snf.invariant_factors();
    let ur = snf.u.apply_rational(&r)?;
    let v_inv = rational_inverse(&snf.v)?.ok_or_else(|| Error::domain("singular Smith transform"))?;
    let n = a.rows();
    let rank = snf.rank();
    let torsion: Vec<usize> = (0..rank).filter(|&i| d[i] > 1).collect();
    let count: u64 = torsion.iter().map(|&i| d[i] as u64).product();

    let label_of = |theta: &[Q]| -> Result<usize> {
        let mut code = 0usize;
        for &i in torsion.iter().rev() {
            let yi: Q = (0..n).map(|j| v_inv[i][j] * theta[j]).sum();
            let k = yi * Q::from_integer(d[i]) - ur[i];
            if !k.is_integer() {
                return Err(Error::domain("image of a fixed point is not fixed"));
            }
            code = code * d[i] as usize + k.to_integer().rem_euclid(d[i]) as usize;
        }
        Ok(code)
    };
    let point_of = |code: usize| -> Vec<Q> {
        let mut y = vec![Q::from_integer(0); n];
        let mut c = code;
        for i in 0..rank {
            let k = if d[i] > 1 {
                let k = c % d[i] as usize;
                c /= d[i] as usize;
                k as i64
            } else {
                0
            };
            y[i] = (ur[i] + Q::from_integer(k)) / Q::from_integer(d[i]);
        }
        (0..n).map(|j| (0..n).map(|i| Q::from_integer(snf.v.get(j, i)) * y[i]).sum()).collect()
    };

    let actions: Vec<IntegerMatrix> = normalizer
        .iter()
        .map(|&g| w.matrix(g).kron(&IntegerMatrix::identity(2)))
        .collect::<Result<_>>()?;
    let mut seen = vec![false; count as usize];
    let mut orbits = 0;
    for start in 0..count as usize {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(c) = stack.pop() {
            let p = point_of(c);
            for g in &actions {
                let image = label_of(&g.apply_rational(&p)?)?;
                if !seen[image] {
                    seen[image] = true;
                    stack.push(image);
                }
            }
        }
    }
    Ok(orbits)
}

/// The fixed locus of the query, one record per twisted class.
pub fn fixed_locus_decomposition(q: &InvolutionQuery) -> Result<ModuliReport> {
    let p = Pipeline::new(q)?;
    decomposition_with(&p)
}

pub fn decomposition_with(p: &Pipeline<'_>) -> Result<ModuliReport> {
    let q = p.query;
    let mut components = Vec::new();
    let mut empty_classes = Vec::new();
    for c in &p.classes {
        match p.component(c.representative)? {
            Some(comp) => components.push(comp),
            None => empty_classes.push(c.representative),
        }
    }
    let ups = upsilon_from(&p.classes);
    let mut h1_index = Vec::new();
    for &g in &ups.classes {
        let members: Vec<usize> = components
            .iter()
            .enumerate()
            .filter(|(_, comp)| class_gamma(p, comp.omega) == g)
            .map(|(i, _)| i)
            .collect();
        h1_index.push(GammaSlice { gamma: p.weyl.matrix(g), components: members });
    }
    let mut report = ModuliReport {
        group: q.datum.label().to_string(),
        sigma: q.sigma.label().to_string(),
        curve: format!("{}:{}{}", q.curve.region, q.curve.a, if q.curve.translated { ":t" } else { "" }),
        sign: q.sign,
        side: q.side,
        twist: q.twist.to_string(),
        weyl_order: p.weyl.order(),
        class_count: p.classes.len(),
        components,
        empty_classes,
        h1_index,
        pseudo_real: vec![],
    };
    if q.sigma.epsilon() == Epsilon::Minus {
        for z in center_two_torsion(&q.datum)? {
            if sigma_fixes(q, &z)? {
                report.pseudo_real.push(slice_of(p, &report, &z)?);
            }
        }
    }
    Ok(report)
}

fn class_gamma(p: &Pipeline<'_>, omega: usize) -> usize {
    p.classes
        .iter()
        .find(|c| c.representative == omega)
        .map(|c| c.gamma_class)
        .expect("components are indexed by representatives")
}

/// `S (2 v) = 2 v mod 2`.
pub fn sigma_fixes(q: &InvolutionQuery, z: &CentralElement2) -> Result<bool> {
    let image = q.sigma.matrix().apply(&z.twice)?;
    Ok(image.iter().zip(&z.twice).all(|(a, b)| (a - b).rem_euclid(2) == 0))
}

fn slice_of(p: &Pipeline<'_>, report: &ModuliReport, z: &CentralElement2) -> Result<PseudoRealSlice> {
    let w = &p.weyl;
    let oz_matrix = omega_z(&p.query.datum, z)?;
    let oz = w
        .index_of(&oz_matrix)
        .ok_or_else(|| Error::domain(format!("omega_z = {oz_matrix} is not in W")))?;
    let oz_class = w.class_representatives()[oz];
    let components: Vec<usize> = report
        .components
        .iter()
        .enumerate()
        .filter(|(_, c)| class_gamma(p, c.omega) == oz_class)
        .map(|(i, _)| i)
        .collect();
    let diagnostic = if !components.is_empty() {
        None
    } else if shifted_h1(w, &p.sigma, oz).is_empty() {
        Some(format!("no omega in W satisfies omega sigma(omega) = {oz_matrix}; H^1 shifted by omega_z is empty"))
    } else {
        Some("every class in the shifted H^1 has empty fixed set".to_string())
    };
    Ok(PseudoRealSlice { z: z.coords(), omega_z: oz_matrix, components, diagnostic })
}

/// Slice of the report over `z`, for anti-holomorphic queries.
pub fn pseudo_real_moduli(q: &InvolutionQuery, z: &CentralElement2) -> Result<(ModuliReport, PseudoRealSlice)> {
    if q.sigma.epsilon() != Epsilon::Minus {
        return Err(Error::domain("pseudo-real moduli need an anti-holomorphic involution"));
    }
    if !sigma_fixes(q, z)? {
        return Err(Error::domain(format!("z = {z} is not fixed by the real form: S(2z) != 2z mod 2")));
    }
    let p = Pipeline::new(q)?;
    let report = decomposition_with(&p)?;
    let slice = slice_of(&p, &report, z)?;
    Ok((report, slice))
}

/// Whether every pair of elements in each twisted class gives fixed sets of
/// equal dimension and component count.
pub fn class_independence(p: &Pipeline<'_>) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    for c in &p.classes {
        let reference = p.component(c.representative)?.map(|x| (x.dim, x.pi0, x.condition.is_empty()));
        for &m in &c.members {
            let other = p.component(m)?.map(|x| (x.dim, x.pi0, x.condition.is_empty()));
            if other != reference {
                problems.push(format!(
                    "class of {}: member {} gives {other:?}, representative {reference:?}",
                    p.weyl.matrix(c.representative),
                    p.weyl.matrix(m)
                ));
            }
        }
    }
    Ok(problems)
}

/// The distinct `gamma` classes appearing in a report.
pub fn gamma_classes(report: &ModuliReport) -> BTreeSet<String> {
    report.h1_index.iter().map(|s| s.gamma.to_string()).collect()
}
