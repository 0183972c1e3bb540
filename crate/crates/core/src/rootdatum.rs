//! Root data of reductive groups built from a small catalog.
//!
//! Convention: the Cartan matrix entry `(i, j)` is `<alpha_i, alpha_j^vee>`,
//! rows indexed by roots. Roots are covectors on the cocharacter lattice
//! `Lambda_T = Z^s` and pair with it by the dot product.
//!
//! Type strings: factors joined by `x`, each one of `A<n>`, `B<n>`, `C<n>`,
//! `D<n>`, `E6|E7|E8`, `F4`, `G2` with an optional `.sc` (default) or `.ad`
//! suffix, or `GL<n>`, `SL<n>`, `PGL<n>`. A trailing `+Z<k>` adds a rank-k
//! central torus. `C*` is an alias for `GL1`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{q_add, q_int, q_mul, q_sub, solve_integer, IntegerMatrix, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    fn validate(self) -> Result<()> {
        let ok = match self {
            CartanType::A(n) => n >= 1,
            CartanType::B(n) | CartanType::C(n) => n >= 2,
            CartanType::D(n) => n >= 4,
            CartanType::E(n) => (6..=8).contains(&n),
            CartanType::F4 | CartanType::G2 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::parse(format!("unsupported Cartan type {self}")))
        }
    }

    /// Cartan matrix with entry `(i, j) = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(self) -> IntegerMatrix {
        let n = self.rank();
        let mut c = IntegerMatrix::diagonal(&vec![2; n]);
        let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
            c.set(i, j, cij);
            c.set(j, i, cji);
        };
        match self {
            CartanType::A(_) => (1..n).for_each(|i| link(i - 1, i, -1, -1)),
            CartanType::B(_) => {
                (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            CartanType::C(_) => {
                (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            CartanType::D(_) => {
                (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            CartanType::E(_) => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (3..n).for_each(|i| link(i - 1, i, -1, -1));
            }
            CartanType::F4 => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            CartanType::G2 => link(0, 1, -1, -3),
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

/// One simple factor: its type and the range of global simple-root indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub kind: CartanType,
    pub roots: std::ops::Range<usize>,
    /// Coefficients of the highest root in simple roots.
    pub marks: Vec<i64>,
}

/// A root with its covector and its coordinates in simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub covector: Vec<i64>,
    pub coords: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    label: String,
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    central_basis: Vec<Vec<i64>>,
    factors: Vec<Factor>,
    roots: Vec<Root>,
}

/// A point of `(1/2) Lambda_T / Lambda_T`, stored as `2v` with 0/1 entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralElement2 {
    pub twice: Vec<i64>,
}

impl CentralElement2 {
    pub fn zero(rank: usize) -> Self {
        CentralElement2 { twice: vec![0; rank] }
    }

    pub fn is_zero(&self) -> bool {
        self.twice.iter().all(|&x| x == 0)
    }

    pub fn coords(&self) -> Vec<Q> {
        self.twice.iter().map(|&x| Q::new(x, 2)).collect()
    }
}

impl fmt::Display for CentralElement2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|q| q.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

struct Block {
    label: String,
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    central: Vec<Vec<i64>>,
    kind: Option<CartanType>,
}

fn semisimple_block(kind: CartanType, adjoint: bool) -> Block {
    let c = kind.cartan_matrix();
    let n = kind.rank();
    let unit = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>();
    let (roots, coroots) = if adjoint {
        ((0..n).map(unit).collect(), (0..n).map(|j| c.column(j)).collect())
    } else {
        ((0..n).map(|i| c.row(i).to_vec()).collect(), (0..n).map(unit).collect())
    };
    let form = if adjoint { "ad" } else { "sc" };
    Block { label: format!("{kind}.{form}"), rank: n, roots, coroots, central: vec![], kind: Some(kind) }
}

fn gl_block(n: usize) -> Block {
    let diff = |i: usize| (0..n).map(|k| i64::from(k == i) - i64::from(k == i + 1)).collect::<Vec<_>>();
    let simple: Vec<Vec<i64>> = (0..n - 1).map(diff).collect();
    Block {
        label: format!("GL{n}"),
        rank: n,
        roots: simple.clone(),
        coroots: simple,
        central: vec![vec![1; n]],
        kind: (n > 1).then_some(CartanType::A(n - 1)),
    }
}

fn torus_block(k: usize) -> Block {
    let central = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
    Block { label: format!("Z{k}"), rank: k, roots: vec![], coroots: vec![], central, kind: None }
}

fn parse_count(s: &str, whole: &str) -> Result<usize> {
    s.parse::<usize>().map_err(|_| Error::parse(format!("bad rank in {whole:?}")))
}

fn parse_factor(tok: &str) -> Result<Block> {
    let (body, form) = match tok.rsplit_once('.') {
        Some((b, f)) => match f.to_ascii_lowercase().as_str() {
            "sc" => (b, Some(false)),
            "ad" => (b, Some(true)),
            _ => return Err(Error::parse(format!("unknown form suffix in {tok:?}"))),
        },
        None => (tok, None),
    };
    let upper = body.to_ascii_uppercase();
    if upper == "C*" {
        return Ok(gl_block(1));
    }
    for (prefix, adjoint) in [("PGL", true), ("SL", false)] {
        if let Some(n) = upper.strip_prefix(prefix) {
            let n = parse_count(n, tok)?;
            if n < 2 || form.is_some() {
                return Err(Error::parse(format!("bad factor {tok:?}")));
            }
            return Ok(semisimple_block(CartanType::A(n - 1), adjoint));
        }
    }
    if let Some(n) = upper.strip_prefix("GL") {
        let n = parse_count(n, tok)?;
        if n < 1 || form.is_some() {
            return Err(Error::parse(format!("bad factor {tok:?}")));
        }
        return Ok(gl_block(n));
    }
    let mut chars = upper.chars();
    let letter = chars.next().ok_or_else(|| Error::parse("empty factor"))?;
    let n = parse_count(chars.as_str(), tok)?;
    let kind = match (letter, n) {
        ('A', _) => CartanType::A(n),
        ('B', _) => CartanType::B(n),
        ('C', _) => CartanType::C(n),
        ('D', _) => CartanType::D(n),
        ('E', _) => CartanType::E(n),
        ('F', 4) => CartanType::F4,
        ('G', 2) => CartanType::G2,
        _ => return Err(Error::parse(format!("unsupported factor {tok:?}"))),
    };
    kind.validate()?;
    Ok(semisimple_block(kind, form.unwrap_or(false)))
}

/// Parses a type string and builds the datum.
pub fn build_datum(spec: &str) -> Result<RootDatum> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::parse("empty group type"));
    }
    let (main, torus) = match spec.split_once('+') {
        Some((m, t)) => {
            let k = t
                .trim()
                .strip_prefix(['Z', 'z'])
                .ok_or_else(|| Error::parse(format!("central summand must read +Z<k> in {spec:?}")))?;
            (m.trim(), Some(parse_count(k, spec)?))
        }
        None => (spec, None),
    };
    let mut blocks = Vec::new();
    if !main.is_empty() {
        for tok in main.split(['x', 'X']) {
            blocks.push(parse_factor(tok.trim())?);
        }
    }
    if let Some(k) = torus {
        blocks.push(torus_block(k));
    }
    RootDatum::from_blocks(blocks)
}

fn pad(v: &[i64], offset: usize, total: usize) -> Vec<i64> {
    let mut out = vec![0; total];
    out[offset..offset + v.len()].copy_from_slice(v);
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootDatum {
    fn from_blocks(blocks: Vec<Block>) -> Result<Self> {
        let rank: usize = blocks.iter().map(|b| b.rank).sum();
        if rank == 0 {
            return Err(Error::domain("root datum of rank 0"));
        }
        let label = blocks.iter().filter(|b| b.kind.is_some() || b.label.starts_with("GL")).map(|b| b.label.clone()).collect::<Vec<_>>().join("x");
        let torus = blocks.iter().filter(|b| b.kind.is_none() && !b.label.starts_with("GL")).map(|b| format!("+{}", b.label)).collect::<String>();
        let mut d = RootDatum {
            label: format!("{label}{torus}"),
            rank,
            simple_roots: vec![],
            simple_coroots: vec![],
            central_basis: vec![],
            factors: vec![],
            roots: vec![],
        };
        let mut offset = 0;
        for b in &blocks {
            let first = d.simple_roots.len();
            d.simple_roots.extend(b.roots.iter().map(|r| pad(r, offset, rank)));
            d.simple_coroots.extend(b.coroots.iter().map(|r| pad(r, offset, rank)));
            d.central_basis.extend(b.central.iter().map(|r| pad(r, offset, rank)));
            if let Some(kind) = b.kind {
                d.factors.push(Factor { kind, roots: first..d.simple_roots.len(), marks: vec![] });
            }
            offset += b.rank;
        }
        d.roots = d.generate_roots();
        for f in &mut d.factors {
            let highest = d
                .roots
                .iter()
                .filter(|r| f.roots.clone().all(|i| r.coords[i] >= 0) && f.roots.clone().any(|i| r.coords[i] > 0))
                .max_by_key(|r| r.coords.iter().sum::<i64>())
                .expect("every factor has a positive root");
            f.marks = f.roots.clone().map(|i| highest.coords[i]).collect();
        }
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let c = self.cartan_matrix();
        let n = self.semisimple_rank();
        for i in 0..n {
            if c.get(i, i) != 2 {
                return Err(Error::domain(format!("Cartan diagonal entry {i} is {}", c.get(i, i))));
            }
            for j in 0..n {
                if i != j && (c.get(i, j) > 0 || (c.get(i, j) == 0) != (c.get(j, i) == 0)) {
                    return Err(Error::domain("invalid Cartan matrix"));
                }
            }
        }
        for lam in &self.central_basis {
            if self.simple_roots.iter().any(|a| dot(a, lam) != 0) {
                return Err(Error::domain("central basis vector pairs nontrivially with a root"));
            }
        }
        Ok(())
    }

    /// All roots, by closure of the simple roots under simple reflections.
    fn generate_roots(&self) -> Vec<Root> {
        let n = self.semisimple_rank();
        let c = self.cartan_matrix();
        let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let e: Vec<i64> = (0..n).map(|k| i64::from(k == i)).collect();
            if seen.insert(e.clone(), ()).is_none() {
                queue.push_back(e);
            }
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|k| beta[k] * c.get(k, i)).sum();
                let mut next = beta.clone();
                next[i] -= pairing;
                if seen.insert(next.clone(), ()).is_none() {
                    queue.push_back(next);
                }
            }
        }
        seen.into_keys()
            .map(|coords| {
                let covector = (0..self.rank)
                    .map(|j| (0..n).map(|k| coords[k] * self.simple_roots[k][j]).sum())
                    .collect();
                Root { covector, coords }
            })
            .collect()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Rank `s` of the cocharacter lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    /// Designated basis `lambda_1, ..., lambda_l` of the central sublattice.
    pub fn central_basis(&self) -> &[Vec<i64>] {
        &self.central_basis
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn pairing(&self, root: &[i64], cocharacter: &[i64]) -> i64 {
        dot(root, cocharacter)
    }

    pub fn cartan_matrix(&self) -> IntegerMatrix {
        let n = self.semisimple_rank();
        if n == 0 {
            return IntegerMatrix::zeros(1, 1);
        }
        let mut c = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                c.set(i, j, dot(&self.simple_roots[i], &self.simple_coroots[j]));
            }
        }
        c
    }

    /// `s_i(lambda) = lambda - <alpha_i, lambda> alpha_i^vee` as a matrix.
    pub fn simple_reflection(&self, i: usize) -> IntegerMatrix {
        let s = self.rank;
        let mut m = IntegerMatrix::identity(s);
        for r in 0..s {
            for c in 0..s {
                let v = m.get(r, c) - self.simple_coroots[i][r] * self.simple_roots[i][c];
                m.set(r, c, v);
            }
        }
        m
    }

    /// Matrix whose rows are the simple roots: `lambda -> (<alpha_i, lambda>)_i`.
    pub fn root_matrix(&self) -> Option<IntegerMatrix> {
        (self.semisimple_rank() > 0).then(|| IntegerMatrix::from_rows(&self.simple_roots).expect("roots are well formed"))
    }

    /// Simple-root coordinates of a root covector, if it is a root.
    pub fn root_coords(&self, covector: &[i64]) -> Option<&[i64]> {
        self.roots.iter().find(|r| r.covector == covector).map(|r| r.coords.as_slice())
    }
}

/// All `v in {0, 1/2}^s` with `<alpha, v>` integral for every root.
pub fn center_two_torsion(d: &RootDatum) -> Result<Vec<CentralElement2>> {
    let s = d.rank();
    if s > 24 {
        return Err(Error::EnumerationCap { points: 1u128 << s, cap: 1 << 24 });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << s) {
        let twice: Vec<i64> = (0..s).map(|k| i64::from(mask >> k & 1 == 1)).collect();
        if d.simple_roots().iter().all(|a| dot(a, &twice) % 2 == 0) {
            out.push(CentralElement2 { twice });
        }
    }
    out.sort();
    Ok(out)
}

/// Parses `0`, `nontrivial` (first nonzero element) or explicit `1/2,0,...`.
pub fn parse_central_element(d: &RootDatum, text: &str) -> Result<CentralElement2> {
    let text = text.trim();
    let all = center_two_torsion(d)?;
    match text {
        "0" | "trivial" | "identity" => return Ok(CentralElement2::zero(d.rank())),
        "nontrivial" => {
            return all
                .into_iter()
                .find(|z| !z.is_zero())
                .ok_or_else(|| Error::domain(format!("{} has no nontrivial central 2-torsion", d.label())));
        }
        _ => {}
    }
    let parts: Vec<&str> = text.trim_matches(['(', ')']).split(',').map(str::trim).collect();
    if parts.len() != d.rank() {
        return Err(Error::parse(format!("central element {text:?} needs {} coordinates", d.rank())));
    }
    let twice = parts
        .iter()
        .map(|p| match *p {
            "0" => Ok(0),
            "1/2" => Ok(1),
            _ => Err(Error::parse(format!("central element coordinates must be 0 or 1/2, got {p:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let z = CentralElement2 { twice };
    if !all.contains(&z) {
        return Err(Error::domain(format!("{z} is not central in {}", d.label())));
    }
    Ok(z)
}

/// Alcove data for `z`: the chosen vertex in root-value coordinates.
fn alcove_vertex(d: &RootDatum, z: &CentralElement2) -> Result<Vec<i64>> {
    let n = d.semisimple_rank();
    let v = z.coords();
    // <alpha_i, v> is an integer because z is central.
    let base: Vec<i64> = d
        .simple_roots()
        .iter()
        .map(|a| {
            let p = a.iter().zip(&v).try_fold(Q::zero(), |acc, (&x, &y)| q_add(acc, q_mul(q_int(x), y)?))?;
            if p.is_integer() {
                Ok(p.to_integer())
            } else {
                Err(Error::domain(format!("{z} is not central")))
            }
        })
        .collect::<Result<_>>()?;
    let a = d.root_matrix().expect("semisimple part is nonempty");
    // Per factor: the origin or a minuscule vertex e_j (mark 1).
    let mut choices: Vec<Vec<Vec<i64>>> = Vec::new();
    for f in d.factors() {
        let mut opts = vec![vec![0; f.roots.len()]];
        for (k, &m) in f.marks.iter().enumerate() {
            if m == 1 {
                opts.push((0..f.roots.len()).map(|t| i64::from(t == k)).collect());
            }
        }
        choices.push(opts);
    }
    let mut idx = vec![0usize; choices.len()];
    loop {
        let mut r = vec![0i64; n];
        for (f, (&i, opts)) in d.factors().iter().zip(idx.iter().zip(&choices)) {
            r[f.roots.clone()].copy_from_slice(&opts[i]);
        }
        let rhs: Vec<i64> = r.iter().zip(&base).map(|(x, b)| x - b).collect();
        if solve_integer(&a, &rhs)?.is_some() {
            return Ok(r);
        }
        // odometer over factor choices, origin first
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Err(Error::domain(format!("{z} is not the exponential of an alcove vertex")));
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Barycenter of the fundamental alcove in root-value coordinates.
fn alcove_barycenter(d: &RootDatum) -> Vec<Q> {
    let mut p = vec![Q::zero(); d.semisimple_rank()];
    for f in d.factors() {
        let r = f.roots.len() as i64;
        for (k, &m) in f.marks.iter().enumerate() {
            p[f.roots.start + k] = Q::new(1, m * (r + 1));
        }
    }
    p
}

/// Reflection `s_i` acting on root values `r_k = alpha_k(x)`.
fn reflect_values(c: &IntegerMatrix, r: &mut [Q], i: usize) -> Result<()> {
    let ri = r[i];
    for (k, rk) in r.iter_mut().enumerate() {
        *rk = q_sub(*rk, q_mul(ri, q_int(c.get(k, i)))?)?;
    }
    Ok(())
}

/// The Weyl element with `omega_z(A) = A - a_z`, as a matrix on `Lambda_T`.
///
/// The point `p - a_z` (with `p` the alcove barycenter) lies in the interior
/// of a Weyl chamber, so reflecting it into the dominant chamber recovers the
/// inverse of `omega_z` as a word in simple reflections.
pub fn omega_z(d: &RootDatum, z: &CentralElement2) -> Result<IntegerMatrix> {
    if z.twice.len() != d.rank() {
        return Err(Error::Dimension(format!("central element of length {} for rank {}", z.twice.len(), d.rank())));
    }
    if z.is_zero() || d.semisimple_rank() == 0 {
        if !center_two_torsion(d)?.contains(z) {
            return Err(Error::domain(format!("{z} is not central")));
        }
        return Ok(IntegerMatrix::identity(d.rank()));
    }
    let vertex = alcove_vertex(d, z)?;
    let c = d.cartan_matrix();
    let p = alcove_barycenter(d);
    let mut q: Vec<Q> = p.iter().zip(&vertex).map(|(&x, &v)| q_sub(x, q_int(v))).collect::<Result<_>>()?;
    let mut word = Vec::new();
    while let Some(i) = q.iter().position(|x| *x < Q::zero()) {
        reflect_values(&c, &mut q, i)?;
        word.push(i);
        if word.len() > 10_000 {
            return Err(Error::domain("alcove reflection did not terminate"));
        }
    }
    if q != p {
        return Err(Error::domain(format!("{z}: translated alcove is not a Weyl image of the fundamental alcove")));
    }
    let mut w = IntegerMatrix::identity(d.rank());
    for &i in &word {
        w = w.checked_mul(&d.simple_reflection(i))?;
    }
    Ok(w)
}

/// Applies a Weyl matrix to root values: `r(w x)` from `r(x)`.
pub fn act_on_root_values(d: &RootDatum, w: &IntegerMatrix, r: &[Q]) -> Result<Vec<Q>> {
    let n = d.semisimple_rank();
    let mut out = vec![Q::zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        let image = w.transpose().apply(&d.simple_roots()[i])?;
        let coords = d
            .root_coords(&image)
            .ok_or_else(|| Error::domain("matrix does not permute the roots"))?;
        for k in 0..n {
            *slot = q_add(*slot, q_mul(q_int(coords[k]), r[k])?)?;
        }
    }
    Ok(out)
}

/// Checks `omega(p) = p - a_z` for the alcove barycenter `p`.
pub fn verify_omega_z(d: &RootDatum, z: &CentralElement2, w: &IntegerMatrix) -> Result<bool> {
    if d.semisimple_rank() == 0 {
        return Ok(w.is_identity());
    }
    let vertex = if z.is_zero() { vec![0; d.semisimple_rank()] } else { alcove_vertex(d, z)? };
    let p = alcove_barycenter(d);
    let image = act_on_root_values(d, w, &p)?;
    let target: Vec<Q> = p.iter().zip(&vertex).map(|(&x, &v)| q_sub(x, q_int(v))).collect::<Result<_>>()?;
    Ok(image == target)
}
