//! Weyl group enumeration and twisted conjugacy.
//!
//! Elements are integer matrices on `Lambda_T`, hash-consed into indices.
//! Index 0 is the identity; indices follow breadth-first layers over the
//! simple reflections, each layer sorted lexicographically by matrix entries.

use std::collections::VecDeque;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::lattice::IntegerMatrix;
use crate::rootdatum::RootDatum;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 10_000_000;

/// Groups up to this order get a full multiplication table.
pub const TABLE_THRESHOLD: usize = 2048;

/// Reads `BRANE_ATLAS_ORDER_CAP`, falling back to [`DEFAULT_ORDER_CAP`].
pub fn order_cap_from_env() -> Result<usize> {
    match std::env::var("BRANE_ATLAS_ORDER_CAP") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(format!("BRANE_ATLAS_ORDER_CAP must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

pub struct WeylGroup {
    rank: usize,
    elements: IndexSet<Box<[i8]>>,
    generators: Vec<usize>,
    /// `left[i][e]` is the index of `s_i * e`.
    left: Vec<Vec<u32>>,
    /// `right[i][e]` is the index of `e * s_i`.
    right: Vec<Vec<u32>>,
    /// BFS parent and generator: `e = s_gen * parent`.
    parent: Vec<(u32, u32)>,
    length: Vec<u32>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
}

fn pack(m: &IntegerMatrix) -> Result<Box<[i8]>> {
    m.entries()
        .iter()
        .map(|&x| i8::try_from(x).map_err(|_| Error::Overflow("Weyl element entries exceed i8")))
        .collect()
}

impl WeylGroup {
    /// Enumerates `W` with the cap from the environment.
    pub fn generate(d: &RootDatum) -> Result<Self> {
        Self::generate_with_cap(d, order_cap_from_env()?)
    }

    pub fn generate_with_cap(d: &RootDatum, cap: usize) -> Result<Self> {
        let s = d.rank();
        let gens: Vec<IntegerMatrix> = (0..d.semisimple_rank()).map(|i| d.simple_reflection(i)).collect();
        let mut elements: IndexSet<Box<[i8]>> = IndexSet::new();
        elements.insert(pack(&IntegerMatrix::identity(s))?);
        let mut parent = vec![(0u32, 0u32)];
        let mut length = vec![0u32];
        let mut frontier = vec![0usize];
        let mut depth = 0u32;
        while !frontier.is_empty() {
            depth += 1;
            let mut fresh: Vec<(Box<[i8]>, u32, u32)> = Vec::new();
            let mut pending: IndexSet<Box<[i8]>> = IndexSet::new();
            for &e in &frontier {
                let m = self_matrix(&elements, s, e);
                for (i, g) in gens.iter().enumerate() {
                    let key = pack(&g.checked_mul(&m)?)?;
                    if !elements.contains(&key) && pending.insert(key.clone()) {
                        fresh.push((key, e as u32, i as u32));
                    }
                }
            }
            if elements.len() + fresh.len() > cap {
                return Err(Error::OrderCap { cap });
            }
            fresh.sort_by(|a, b| a.0.cmp(&b.0));
            frontier = Vec::with_capacity(fresh.len());
            for (key, p, i) in fresh {
                let (idx, _) = elements.insert_full(key);
                parent.push((p, i));
                length.push(depth);
                frontier.push(idx);
            }
        }
        let n = elements.len();
        let lookup = |m: &IntegerMatrix| -> Result<u32> {
            elements
                .get_index_of(&*pack(m)?)
                .map(|i| i as u32)
                .ok_or_else(|| Error::domain("product left the group"))
        };
        let mut left = vec![vec![0u32; n]; gens.len()];
        let mut right = vec![vec![0u32; n]; gens.len()];
        for e in 0..n {
            let m = self_matrix(&elements, s, e);
            for (i, g) in gens.iter().enumerate() {
                left[i][e] = lookup(&g.checked_mul(&m)?)?;
                right[i][e] = lookup(&m.checked_mul(g)?)?;
            }
        }
        let generators = (0..gens.len()).map(|i| left[i][0] as usize).collect();
        // inv(s_i * p) = inv(p) * s_i, and parents precede children.
        let mut inverse = vec![0u32; n];
        for e in 1..n {
            let (p, i) = parent[e];
            inverse[e] = right[i as usize][inverse[p as usize] as usize];
        }
        let mut w = WeylGroup { rank: s, elements, generators, left, right, parent, length, inverse, table: None };
        if n <= TABLE_THRESHOLD {
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    table[a * n + b] = w.mul_by_word(a, b) as u32;
                }
            }
            w.table = Some(table);
        }
        Ok(w)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Rank of the lattice the elements act on.
    pub fn lattice_rank(&self) -> usize {
        self.rank
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Indices of the simple reflections, in root order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn matrix(&self, e: usize) -> IntegerMatrix {
        self_matrix(&self.elements, self.rank, e)
    }

    pub fn index_of(&self, m: &IntegerMatrix) -> Option<usize> {
        if m.rows() != self.rank || m.cols() != self.rank {
            return None;
        }
        pack(m).ok().and_then(|k| self.elements.get_index_of(&k))
    }

    /// Length in the simple reflections (BFS depth).
    pub fn length(&self, e: usize) -> usize {
        self.length[e] as usize
    }

    /// `a * b` by peeling `b` into simple reflections.
    fn mul_by_word(&self, a: usize, mut b: usize) -> usize {
        // b = s_{g1} s_{g2} ... so a*b = ((a s_{g1}) s_{g2}) ...
        let mut x = a;
        while b != 0 {
            let (p, i) = self.parent[b];
            x = self.right[i as usize][x] as usize;
            b = p as usize;
        }
        x
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.mul_by_word(a, b),
        }
    }

    pub fn inverse(&self, e: usize) -> usize {
        self.inverse[e] as usize
    }

    pub fn left_generator(&self, i: usize, e: usize) -> usize {
        self.left[i][e] as usize
    }

    pub fn element_order(&self, e: usize) -> usize {
        let mut x = e;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, e);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, g: usize, e: usize) -> usize {
        self.mul(self.mul(g, e), self.inverse(g))
    }

    /// Ordinary conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        twisted_classes(self, &WeylAutomorphism::identity(self)).into_iter().map(|c| c.members).collect()
    }

    /// For each element, the smallest member of its conjugacy class.
    pub fn class_representatives(&self) -> Vec<usize> {
        let mut rep = vec![0; self.order()];
        for class in self.conjugacy_classes() {
            for &m in &class {
                rep[m] = class[0];
            }
        }
        rep
    }
}

fn self_matrix(elements: &IndexSet<Box<[i8]>>, s: usize, e: usize) -> IntegerMatrix {
    let data = elements[e].iter().map(|&x| i64::from(x)).collect();
    IntegerMatrix::new(s, s, data).expect("stored elements are square")
}

/// An automorphism of `W`, stored as a permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylAutomorphism {
    perm: Vec<u32>,
}

impl WeylAutomorphism {
    pub fn identity(w: &WeylGroup) -> Self {
        WeylAutomorphism { perm: (0..w.order() as u32).collect() }
    }

    /// `omega -> S omega S^{-1}` for a lattice involution `S`.
    pub fn conjugation(w: &WeylGroup, s: &IntegerMatrix) -> Result<Self> {
        if s.rows() != w.lattice_rank() || s.cols() != w.lattice_rank() {
            return Err(Error::Dimension(format!("{}x{} matrix for rank {}", s.rows(), s.cols(), w.lattice_rank())));
        }
        if !s.checked_mul(s)?.is_identity() {
            return Err(Error::domain("lattice map is not an involution"));
        }
        let mut perm = Vec::with_capacity(w.order());
        for e in 0..w.order() {
            let image = s.checked_mul(&w.matrix(e))?.checked_mul(s)?;
            let idx = w
                .index_of(&image)
                .ok_or_else(|| Error::domain(format!("S does not normalize W: S w S^-1 = {image} is not in W")))?;
            perm.push(idx as u32);
        }
        Ok(WeylAutomorphism { perm })
    }

    pub fn apply(&self, e: usize) -> usize {
        self.perm[e] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Checks that this is an automorphism of order at most 2.
    pub fn validate(&self, w: &WeylGroup) -> Result<()> {
        for a in 0..w.order() {
            if self.apply(self.apply(a)) != a {
                return Err(Error::domain("induced automorphism does not square to the identity"));
            }
        }
        for &g in w.generators() {
            for b in 0..w.order() {
                if self.apply(w.mul(g, b)) != w.mul(self.apply(g), self.apply(b)) {
                    return Err(Error::domain("induced map is not multiplicative"));
                }
            }
        }
        Ok(())
    }
}

/// `ad_sigma(g, omega) = g * omega * sigma(g)^{-1}`.
pub fn ad_sigma(w: &WeylGroup, sigma: &WeylAutomorphism, g: usize, omega: usize) -> usize {
    w.mul(w.mul(g, omega), w.inverse(sigma.apply(g)))
}

/// `omega * sigma(omega)`.
pub fn gamma_of(w: &WeylGroup, sigma: &WeylAutomorphism, omega: usize) -> usize {
    w.mul(omega, sigma.apply(omega))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedClass {
    pub representative: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
    /// `omega * sigma(omega)` for the representative.
    pub gamma: usize,
    /// Smallest element of the ordinary class of `gamma`.
    pub gamma_class: usize,
}

/// Orbits of `ad_sigma`, ordered by representative (the smallest member).
pub fn twisted_classes(w: &WeylGroup, sigma: &WeylAutomorphism) -> Vec<TwistedClass> {
    let n = w.order();
    let mut seen = vec![false; n];
    let sigma_gens: Vec<usize> = w.generators().iter().map(|&g| sigma.apply(g)).collect();
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for (&g, &sg) in w.generators().iter().zip(&sigma_gens) {
                // reflections are their own inverses
                let y = w.mul(w.mul(g, x), sg);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        out.push(TwistedClass { representative: start, members, gamma: gamma_of(w, sigma, start), gamma_class: 0 });
    }
    let identity_twist = sigma.is_identity();
    let reps = if identity_twist {
        let mut rep = vec![0; n];
        for c in &out {
            for &m in &c.members {
                rep[m] = c.representative;
            }
        }
        rep
    } else {
        w.class_representatives()
    };
    for c in &mut out {
        c.gamma_class = reps[c.gamma];
    }
    out
}

/// The set of ordinary classes `[omega sigma(omega)]` and the map `delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Upsilon {
    /// Ordinary-class representatives, sorted.
    pub classes: Vec<usize>,
    /// `delta[k]` is the position in `classes` of twisted class `k`'s image.
    pub delta: Vec<usize>,
}

pub fn upsilon(w: &WeylGroup, sigma: &WeylAutomorphism) -> Upsilon {
    let classes_tw = twisted_classes(w, sigma);
    upsilon_from(&classes_tw)
}

pub fn upsilon_from(classes_tw: &[TwistedClass]) -> Upsilon {
    let mut classes: Vec<usize> = classes_tw.iter().map(|c| c.gamma_class).collect();
    classes.sort_unstable();
    classes.dedup();
    let delta = classes_tw.iter().map(|c| classes.binary_search(&c.gamma_class).expect("present")).collect();
    Upsilon { classes, delta }
}

/// One class of shifted cocycles `{omega : omega sigma(omega) = gamma}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleClass {
    pub representative: usize,
    pub members: Vec<usize>,
    /// Representative of the full twisted class containing these cocycles.
    pub twisted_class: usize,
}

/// Shifted cohomology `H^1_gamma(sigma, W)`; `gamma = identity` gives `H^1`.
pub fn shifted_h1(w: &WeylGroup, sigma: &WeylAutomorphism, gamma: usize) -> Vec<CocycleClass> {
    let n = w.order();
    let centralizer: Vec<usize> = (0..n).filter(|&g| w.mul(g, gamma) == w.mul(gamma, g)).collect();
    let cocycles: Vec<usize> = (0..n).filter(|&x| gamma_of(w, sigma, x) == gamma).collect();
    let mut seen = vec![false; n];
    let tw = twisted_classes(w, sigma);
    let mut class_of = vec![0; n];
    for c in &tw {
        for &m in &c.members {
            class_of[m] = c.representative;
        }
    }
    let mut out = Vec::new();
    for &start in &cocycles {
        if seen[start] {
            continue;
        }
        let mut members: Vec<usize> = centralizer.iter().map(|&g| ad_sigma(w, sigma, g, start)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            seen[m] = true;
        }
        out.push(CocycleClass { representative: start, members, twisted_class: class_of[start] });
    }
    out
}

/// Stabilizer of `omega` under `ad_sigma`, equal to `N_W(T^{omega sigma})`.
pub fn normalizer_fixed_torus(w: &WeylGroup, sigma: &WeylAutomorphism, omega: usize) -> Vec<usize> {
    (0..w.order()).filter(|&g| ad_sigma(w, sigma, g, omega) == omega).collect()
}
