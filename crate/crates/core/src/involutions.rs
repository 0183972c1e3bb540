//! Lattice involutions `S` on `Lambda_T` induced by diagram automorphisms.
//!
//! The holomorphic and anti-holomorphic partners of a real form act on the
//! cocharacter lattice by the same matrix, so `epsilon` is carried as a flag
//! and never enters `S`. It only changes how downstream torus maps treat
//! complex conjugation.
//!
//! Sigma strings: `id` (aliases `identity`, `compact`, `inner`, `split`,
//! `trivial`), `flip` (alias `outer`: the nontrivial diagram symmetry of
//! every factor that has one), `swap` (exchange the first two factors), or
//! `perm:<images>` with optional `;central:<signs>` and `;painted:<nodes>`.
//! Painted Vogan nodes are recorded but do not affect the lattice action.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{q_add, q_int, q_mul, rational_inverse, IntegerMatrix, Q};
use crate::rootdatum::{CartanType, RootDatum};
use crate::weyl::{WeylAutomorphism, WeylGroup};

/// Holomorphic (`+`) or anti-holomorphic (`-`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn is_holomorphic(self) -> bool {
        self == Epsilon::Plus
    }

    pub fn sign(self) -> i64 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Plus => "+",
            Epsilon::Minus => "-",
        })
    }
}

impl FromStr for Epsilon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "+1" | "holomorphic" => Ok(Epsilon::Plus),
            "-" | "minus" | "-1" | "anti-holomorphic" | "antiholomorphic" => Ok(Epsilon::Minus),
            other => Err(Error::parse(format!("sign must be + or -, got {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeInvolution {
    s: IntegerMatrix,
    epsilon: Epsilon,
    theta: Vec<usize>,
    central_action: Vec<Vec<i64>>,
    painted: Vec<usize>,
    label: String,
}

impl LatticeInvolution {
    pub fn matrix(&self) -> &IntegerMatrix {
        &self.s
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    /// The same lattice map with the other holomorphicity flag.
    pub fn with_epsilon(&self, epsilon: Epsilon) -> Self {
        LatticeInvolution { epsilon, ..self.clone() }
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn painted(&self) -> &[usize] {
        &self.painted
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Image of central basis vector `j` as coefficients in the central basis.
    pub fn central_action(&self) -> &[Vec<i64>] {
        &self.central_action
    }
}

fn check_theta(d: &RootDatum, theta: &[usize]) -> Result<()> {
    let r = d.semisimple_rank();
    if theta.len() != r {
        return Err(Error::domain(format!("diagram map has {} entries for {r} simple roots", theta.len())));
    }
    let mut seen = vec![false; r];
    for &t in theta {
        if t >= r || std::mem::replace(&mut seen[t], true) {
            return Err(Error::domain(format!("{theta:?} is not a permutation of the simple roots")));
        }
    }
    if (0..r).any(|i| theta[theta[i]] != i) {
        return Err(Error::domain(format!("{theta:?} does not square to the identity")));
    }
    if r > 0 {
        let c = d.cartan_matrix();
        for i in 0..r {
            for j in 0..r {
                if c.get(theta[i], theta[j]) != c.get(i, j) {
                    return Err(Error::domain(format!("{theta:?} does not preserve the Cartan matrix")));
                }
            }
        }
    }
    Ok(())
}

/// Builds `S` with `S alpha_i^vee = alpha_{theta i}^vee` and the given action
/// on the central basis (row `j` holds the image of `lambda_j`).
pub fn from_diagram_automorphism_with_central(
    d: &RootDatum,
    theta: &[usize],
    central_action: &[Vec<i64>],
    epsilon: Epsilon,
) -> Result<LatticeInvolution> {
    check_theta(d, theta)?;
    let l = d.central_basis().len();
    if central_action.len() != l || central_action.iter().any(|c| c.len() != l) {
        return Err(Error::domain(format!("central action must be {l}x{l}")));
    }
    let s = d.rank();
    if d.semisimple_rank() + l != s {
        return Err(Error::domain("coroots and central basis do not span the lattice"));
    }
    let image_of_central = |j: usize| -> Vec<i64> {
        (0..s).map(|k| (0..l).map(|m| central_action[j][m] * d.central_basis()[m][k]).sum()).collect()
    };
    let mut source: Vec<Vec<i64>> = d.simple_coroots().to_vec();
    source.extend(d.central_basis().iter().cloned());
    let mut target: Vec<Vec<i64>> = theta.iter().map(|&t| d.simple_coroots()[t].clone()).collect();
    target.extend((0..l).map(image_of_central));
    let b = IntegerMatrix::from_columns(&source)?;
    let b_inv = rational_inverse(&b)?.ok_or_else(|| Error::domain("coroots and central basis are dependent"))?;
    let t = IntegerMatrix::from_columns(&target)?;
    // S = T * B^{-1}
    let mut m = IntegerMatrix::zeros(s, s);
    for i in 0..s {
        for j in 0..s {
            let mut acc = Q::from_integer(0);
            for k in 0..s {
                acc = q_add(acc, q_mul(q_int(t.get(i, k)), b_inv[k][j])?)?;
            }
            if !acc.is_integer() {
                return Err(Error::domain(
                    "diagram automorphism does not preserve the cocharacter lattice with this central action",
                ));
            }
            m.set(i, j, acc.to_integer());
        }
    }
    if !m.checked_mul(&m)?.is_identity() {
        return Err(Error::domain("lattice map does not square to the identity"));
    }
    // S must permute the roots; on covectors it acts by the transpose.
    let st = m.transpose();
    for root in d.roots() {
        let image = st.apply(&root.covector)?;
        if d.root_coords(&image).is_none() {
            return Err(Error::domain("lattice map does not preserve the root system"));
        }
    }
    let label = format!("perm:{}", theta.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(","));
    Ok(LatticeInvolution {
        s: m,
        epsilon,
        theta: theta.to_vec(),
        central_action: central_action.to_vec(),
        painted: vec![],
        label,
    })
}

/// `S` from a diagram automorphism, acting trivially on the central basis.
pub fn from_diagram_automorphism(d: &RootDatum, theta: &[usize], epsilon: Epsilon) -> Result<LatticeInvolution> {
    let l = d.central_basis().len();
    let id: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| i64::from(i == j)).collect()).collect();
    from_diagram_automorphism_with_central(d, theta, &id, epsilon)
}

/// The permutation `omega -> S omega S^{-1}` of `W`.
pub fn induced_weyl_automorphism(inv: &LatticeInvolution, w: &WeylGroup) -> Result<WeylAutomorphism> {
    let a = WeylAutomorphism::conjugation(w, inv.matrix())?;
    a.validate(w)?;
    Ok(a)
}

fn factor_flip(kind: CartanType) -> Option<Vec<usize>> {
    match kind {
        CartanType::A(n) if n >= 2 => Some((0..n).rev().collect()),
        CartanType::D(n) => {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(n - 2, n - 1);
            Some(t)
        }
        CartanType::E(6) => Some(vec![5, 1, 4, 3, 2, 0]),
        _ => None,
    }
}

fn identity_matrix_rows(l: usize) -> Vec<Vec<i64>> {
    (0..l).map(|i| (0..l).map(|j| i64::from(i == j)).collect()).collect()
}

fn parse_list(s: &str, what: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::parse(format!("bad {what} entry {x:?}"))))
        .collect()
}

/// Parses a sigma string (see module docs) for the given datum.
pub fn parse_sigma(d: &RootDatum, text: &str, epsilon: Epsilon) -> Result<LatticeInvolution> {
    let text = text.trim();
    let r = d.semisimple_rank();
    let l = d.central_basis().len();
    let identity: Vec<usize> = (0..r).collect();
    let mut out = match text.to_ascii_lowercase().as_str() {
        "id" | "identity" | "compact" | "inner" | "split" | "trivial" => from_diagram_automorphism(d, &identity, epsilon)?,
        "flip" | "outer" => {
            let mut theta = identity.clone();
            let mut any = false;
            for f in d.factors() {
                if let Some(local) = factor_flip(f.kind) {
                    for (k, t) in local.into_iter().enumerate() {
                        theta[f.roots.start + k] = f.roots.start + t;
                    }
                    any = true;
                }
            }
            if !any {
                return Err(Error::domain(format!("{} has no nontrivial diagram symmetry", d.label())));
            }
            // GL(n) blocks need -1 on their central direction.
            let candidates = [identity_matrix_rows(l), {
                let mut m = identity_matrix_rows(l);
                m.iter_mut().enumerate().for_each(|(i, row)| row[i] = -1);
                m
            }];
            candidates
                .iter()
                .find_map(|c| from_diagram_automorphism_with_central(d, &theta, c, epsilon).ok())
                .ok_or_else(|| Error::domain(format!("flip is not a lattice involution of {}", d.label())))?
        }
        "swap" => {
            let fs = d.factors();
            if fs.len() < 2 || fs[0].kind != fs[1].kind {
                return Err(Error::domain(format!("swap needs two isomorphic leading factors in {}", d.label())));
            }
            let mut theta = identity.clone();
            for k in 0..fs[0].roots.len() {
                theta[fs[0].roots.start + k] = fs[1].roots.start + k;
                theta[fs[1].roots.start + k] = fs[0].roots.start + k;
            }
            let mut swapped = identity_matrix_rows(l);
            if l >= 2 {
                swapped.swap(0, 1);
            }
            [identity_matrix_rows(l), swapped]
                .iter()
                .find_map(|c| from_diagram_automorphism_with_central(d, &theta, c, epsilon).ok())
                .ok_or_else(|| Error::domain(format!("swap is not a lattice involution of {}", d.label())))?
        }
        _ => {
            let body = text
                .strip_prefix("perm:")
                .ok_or_else(|| Error::parse(format!("unknown sigma {text:?}")))?;
            let mut parts = body.split(';');
            let perm = parts.next().unwrap_or("").trim();
            let theta: Vec<usize> = if perm.is_empty() {
                vec![]
            } else {
                parse_list(perm, "permutation")?
                    .into_iter()
                    .map(|x| usize::try_from(x).map_err(|_| Error::parse("negative permutation entry")))
                    .collect::<Result<_>>()?
            };
            let mut central = identity_matrix_rows(l);
            let mut painted = vec![];
            for part in parts {
                let (key, val) = part
                    .split_once(':')
                    .ok_or_else(|| Error::parse(format!("bad sigma clause {part:?}")))?;
                match key.trim() {
                    "central" => {
                        let signs = parse_list(val, "central")?;
                        if signs.len() != l || signs.iter().any(|s| s.abs() != 1) {
                            return Err(Error::parse(format!("central needs {l} signs")));
                        }
                        central = identity_matrix_rows(l);
                        for (i, s) in signs.into_iter().enumerate() {
                            central[i][i] = s;
                        }
                    }
                    "painted" => {
                        painted = parse_list(val, "painted")?
                            .into_iter()
                            .map(|x| usize::try_from(x).map_err(|_| Error::parse("negative painted node")))
                            .collect::<Result<_>>()?;
                    }
                    other => return Err(Error::parse(format!("unknown sigma clause {other:?}"))),
                }
            }
            let mut inv = from_diagram_automorphism_with_central(d, &theta, &central, epsilon)?;
            inv.painted = painted;
            inv
        }
    };
    out.label = text.to_string();
    Ok(out)
}
