//! Finite-order automorphisms of simple Lie algebras via Kac coordinates.
//!
//! An automorphism of type `(s_0, ..., s_n; k)` is
//! `sigma(E_a) = q_a eps^{n_a} E_{nu(a)}`, `sigma(E_-a) = q_a eps^{-n_a} E_{-nu(a)}`,
//! `sigma(H_i) = H_{nu(i)}`, where `nu` lifts an order-`k` diagram
//! automorphism, `eps` is a primitive `m`-th root of unity and
//! `n_a = sum_i c_i(a) s_i` with `c_i(a)` the coefficient of the folded
//! simple root `psi_i` in the restriction of `a`.
//!
//! Scalars live in `mu_{2m}` and are stored as exponents of `zeta_{2m}`:
//! `eps = zeta_{2m}^{2b}` and `-1 = zeta_{2m}^m`.

use std::collections::{BTreeMap, HashMap};

use num::traits::{One, Zero};
use num::Integer;
use serde::Serialize;

use crate::chevalley::{structure_constants, StructureConstants};
use crate::cyclo::QOmega;
use crate::error::{domain, internal, Error, Result};
use crate::linalg::{det, EchelonBasis};
use crate::rootsys::{build_root_system, cartan_symmetries, classify_cartan, RootSystem, Series, SimpleType};

/// The affine diagram `g^(k)` attached to a base type and a diagram
/// automorphism of order `k`.
#[derive(Clone, Debug, Serialize)]
pub struct AffineDiagram {
    pub base: SimpleType,
    pub k: u32,
    /// Permutation of the base simple roots (0-based).
    pub nu: Vec<usize>,
    /// Folded simple root `psi_{i+1}` is the restriction of the orbit `orbits[i]`.
    pub orbits: Vec<Vec<usize>>,
    /// `a_1, ..., a_n` with `alpha_0 + sum a_i psi_i = 0`.
    pub labels: Vec<i64>,
    /// Affine Cartan matrix on the nodes `alpha_0, psi_1, ..., psi_n`.
    pub cartan: Vec<Vec<i64>>,
    #[serde(skip)]
    pub(crate) node_vectors: Vec<Vec<i64>>,
    #[serde(skip)]
    pub(crate) sc: StructureConstants,
    #[serde(skip)]
    pub(crate) perm: Vec<usize>,
    #[serde(skip)]
    pub(crate) q: Vec<i8>,
}

fn diagram_permutation(base: SimpleType, k: u32) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    let r = base.rank;
    let id: Vec<usize> = (0..r).collect();
    match (k, base.series) {
        (1, _) => Ok((id, (0..r).map(|i| vec![i]).collect())),
        (2, Series::A) if r >= 2 => {
            let nu = (0..r).map(|i| r - 1 - i).collect();
            let orbits =
                (0..r.div_ceil(2)).map(|j| if j == r - 1 - j { vec![j] } else { vec![j, r - 1 - j] }).collect();
            Ok((nu, orbits))
        }
        (2, Series::D) => {
            let mut nu = id;
            nu.swap(r - 2, r - 1);
            let mut orbits: Vec<Vec<usize>> = (0..r - 2).map(|i| vec![i]).collect();
            orbits.push(vec![r - 2, r - 1]);
            Ok((nu, orbits))
        }
        (2, Series::E) if r == 6 => Ok((vec![5, 1, 4, 3, 2, 0], vec![vec![1], vec![3], vec![2, 4], vec![0, 5]])),
        (3, Series::D) if r == 4 => Ok((vec![2, 1, 3, 0], vec![vec![0, 2, 3], vec![1]])),
        _ => domain(format!("{base} has no diagram automorphism of order {k}")),
    }
}

/// Applies a simple-root permutation to a coefficient vector.
pub(crate) fn permute(nu: &[usize], x: &[i64]) -> Vec<i64> {
    let mut y = vec![0; x.len()];
    for (i, &c) in x.iter().enumerate() {
        y[nu[i]] = c;
    }
    y
}

/// Lifts a diagram automorphism to `nu(E_a) = q_a E_{nu(a)}` compatible with
/// the structure constants. Returns the root permutation and the signs.
pub fn lift_diagram_automorphism(sc: &StructureConstants, nu: &[usize]) -> Result<(Vec<usize>, Vec<i8>)> {
    let rs = sc.root_system();
    let r = rs.rank();
    if nu.len() != r || !cartan_symmetries(&rs.cartan).iter().any(|p| p == nu) {
        return domain("permutation is not a diagram automorphism");
    }
    let nr = rs.roots().len();
    let np = rs.num_positive();
    let perm: Vec<usize> = (0..nr).map(|j| rs.index_of(&permute(nu, rs.root(j))).expect("permuted root")).collect();
    let mut q = vec![0i8; nr];
    for j in 0..r {
        q[j] = 1;
    }
    for g in r..np {
        let (x, y) = (0..r)
            .find_map(|x| {
                let d: Vec<i64> = rs.root(g).iter().zip(rs.root(x)).map(|(a, b)| a - b).collect();
                rs.index_of(&d).map(|y| (x, y))
            })
            .ok_or_else(|| Error::Internal("positive root without a simple predecessor".into()))?;
        let s = sc.n(perm[x], perm[y]) / sc.n(x, y);
        q[g] = q[x] * q[y] * s as i8;
    }
    for j in 0..np {
        q[rs.negate(j)] = q[j];
    }
    for x in 0..nr {
        for y in 0..nr {
            if let Some(z) = sc.sum(x, y) {
                let s = sc.n(perm[x], perm[y]) * sc.n(x, y);
                let expect = if s > 0 { 1 } else { -1 };
                if q[x] * q[y] * q[z] != expect {
                    return internal("lift of diagram automorphism is not compatible with the N-table");
                }
            }
        }
    }
    // nu^k = id on the basis
    let k = (1..=6).find(|&k| (0..r).all(|i| (0..k).fold(i, |acc, _| nu[acc]) == i)).unwrap_or(1);
    for j in 0..nr {
        let mut cur = j;
        let mut sign = 1i8;
        for _ in 0..k {
            sign *= q[cur];
            cur = perm[cur];
        }
        if cur != j || sign != 1 {
            return internal("lifted automorphism does not have the order of the diagram automorphism");
        }
    }
    Ok((perm, q))
}

impl AffineDiagram {
    pub fn rank(&self) -> usize {
        self.orbits.len()
    }

    pub fn root_system(&self) -> &RootSystem {
        self.sc.root_system()
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.sc
    }

    /// Coefficients of the restriction of a base root on `psi_1..psi_n`.
    pub fn restrict(&self, x: &[i64]) -> Vec<i64> {
        self.orbits.iter().map(|o| o.iter().map(|&i| x[i]).sum()).collect()
    }

    /// `S(x) = sum_{t<k} nu^t x`, a `nu`-invariant representative of the
    /// restriction of `x` (scaled by `k`).
    pub fn orbit_sum(&self, x: &[i64]) -> Vec<i64> {
        let mut acc = vec![0; x.len()];
        let mut cur = x.to_vec();
        for _ in 0..self.k {
            for (a, c) in acc.iter_mut().zip(&cur) {
                *a += c;
            }
            cur = permute(&self.nu, &cur);
        }
        acc
    }

    /// `S`-vectors of the nodes `alpha_0, psi_1, ..., psi_n`.
    pub fn node_vectors(&self) -> &[Vec<i64>] {
        &self.node_vectors
    }

    /// Lifted diagram automorphism on root indices and its signs `q_a`.
    pub fn lift(&self) -> (&[usize], &[i8]) {
        (&self.perm, &self.q)
    }

    /// Symmetries of the affine diagram.
    pub fn symmetries(&self) -> Vec<Vec<usize>> {
        cartan_symmetries(&self.cartan)
    }

    /// Orbits of `nu` on root indices, each listed from its smallest index.
    pub fn root_orbits(&self) -> Vec<Vec<usize>> {
        let nr = self.perm.len();
        let mut seen = vec![false; nr];
        let mut out = Vec::new();
        for j in 0..nr {
            if seen[j] {
                continue;
            }
            let mut o = vec![j];
            seen[j] = true;
            let mut c = self.perm[j];
            while c != j {
                seen[c] = true;
                o.push(c);
                c = self.perm[c];
            }
            out.push(o);
        }
        out
    }
}

/// Builds the affine diagram of `base` twisted by an automorphism of order `k`.
pub fn affine_diagram(base: SimpleType, k: u32) -> Result<AffineDiagram> {
    if !(1..=3).contains(&k) {
        return domain("k must be 1, 2 or 3");
    }
    let (nu, orbits) = diagram_permutation(base, k)?;
    let rs = build_root_system(base)?;
    let sc = structure_constants(&rs)?;
    let (perm, q) = lift_diagram_automorphism(&sc, &nu)?;
    let n = orbits.len();
    let restrict = |x: &[i64]| -> Vec<i64> { orbits.iter().map(|o| o.iter().map(|&i| x[i]).sum()).collect() };
    // weights of the eps_0-eigenspace of nu
    let mut weights: Vec<(Vec<i64>, usize)> = Vec::new();
    let nr = rs.roots().len();
    let mut seen = vec![false; nr];
    for j in 0..nr {
        if seen[j] {
            continue;
        }
        let mut orbit = vec![j];
        seen[j] = true;
        let mut c = perm[j];
        while c != j {
            seen[c] = true;
            orbit.push(c);
            c = perm[c];
        }
        let has_eps0 = k == 1 || orbit.len() == k as usize || (orbit.len() == 1 && k == 2 && q[j] == -1);
        if has_eps0 {
            weights.push((restrict(rs.root(j)), j));
        }
    }
    // the zero weight occurs in every case (the Cartan part, or its anti-fixed part)
    let mut set: std::collections::HashSet<Vec<i64>> = weights.iter().map(|w| w.0.clone()).collect();
    set.insert(vec![0; n]);
    let lowest: Vec<&(Vec<i64>, usize)> = weights
        .iter()
        .filter(|(w, _)| {
            w.iter().any(|c| *c != 0)
                && (0..n).all(|i| {
                    let mut d = w.clone();
                    d[i] -= 1;
                    !set.contains(&d)
                })
        })
        .collect();
    let mut lw: Vec<Vec<i64>> = lowest.iter().map(|w| w.0.clone()).collect();
    lw.dedup();
    if lw.len() != 1 {
        return internal(format!("{base}^({k}): expected a unique lowest weight, found {}", lw.len()));
    }
    let labels: Vec<i64> = lw[0].iter().map(|c| -c).collect();
    if labels.iter().any(|&a| a <= 0) {
        return internal("non-positive affine label");
    }
    let alpha0_root = lowest[0].1;
    let mut diag = AffineDiagram { base, k, nu, orbits, labels, cartan: vec![], node_vectors: vec![], sc, perm, q };
    let mut nodes = vec![diag.orbit_sum(rs.root(alpha0_root))];
    for o in &diag.orbits {
        nodes.push(diag.orbit_sum(rs.root(o[0])));
    }
    let mut cartan = vec![vec![0; n + 1]; n + 1];
    for i in 0..=n {
        for j in 0..=n {
            cartan[i][j] = rs
                .pairing_vec(&nodes[i], &nodes[j])
                .ok_or_else(|| Error::Internal("non-integral affine Cartan entry".into()))?;
        }
    }
    // alpha_0 + sum a_i psi_i = 0 on S-vectors
    for c in 0..rs.rank() {
        let s: i64 = nodes[0][c] + (0..n).map(|i| diag.labels[i] * nodes[i + 1][c]).sum::<i64>();
        if s != 0 {
            return internal("affine labels do not annihilate the nodes");
        }
    }
    diag.cartan = cartan;
    diag.node_vectors = nodes;
    Ok(diag)
}

/// `(s_0, ..., s_n; k)` together with the order `m` and the unit `b`.
#[derive(Clone, Debug, Serialize)]
pub struct KacCoordinates {
    #[serde(skip)]
    pub diagram: AffineDiagram,
    pub s: Vec<u64>,
    pub k: u32,
    pub m: u64,
    /// `eps = exp(2 pi i b / m)`; `b = 1` is the least unit with `b = 1 mod k`.
    pub b: u64,
}

impl KacCoordinates {
    pub fn new(diagram: &AffineDiagram, s: &[u64]) -> Result<KacCoordinates> {
        let n = diagram.rank();
        if s.len() != n + 1 {
            return domain(format!("expected {} Kac coordinates, got {}", n + 1, s.len()));
        }
        let g = s.iter().fold(0u64, |a, &x| a.gcd(&x));
        if g != 1 {
            return domain("Kac coordinates must have gcd 1");
        }
        let m = diagram.k as u64 * (s[0] + (0..n).map(|i| diagram.labels[i] as u64 * s[i + 1]).sum::<u64>());
        let k = diagram.k as u64;
        let b = (1..=m).find(|&b| b.gcd(&m) == 1 && b % k == 1 % k).unwrap_or(0);
        Ok(KacCoordinates { diagram: diagram.clone(), s: s.to_vec(), k: diagram.k, m, b })
    }

    /// Same coordinates with another choice of unit `b = 1 mod k`.
    pub fn with_unit(&self, b: u64) -> Result<KacCoordinates> {
        let k = self.k as u64;
        if self.m > 1 && (b.gcd(&self.m) != 1 || b % k != 1 % k) {
            return domain("b must be a unit mod m congruent to 1 mod k");
        }
        let mut c = self.clone();
        c.b = b % self.m.max(1);
        Ok(c)
    }

    /// Human-readable `(s_0,...,s_n;k)`.
    pub fn label(&self) -> String {
        let s: Vec<String> = self.s.iter().map(|x| x.to_string()).collect();
        format!("({};{})", s.join(","), self.k)
    }
}

/// The automorphism of type `(s; k)` acting on the Chevalley basis.
#[derive(Clone, Debug)]
pub struct FiniteOrderAutomorphism {
    pub coords: KacCoordinates,
    /// `n_a` for every root index.
    pub n_alpha: Vec<i64>,
    /// `sigma(E_a) = zeta_{2m}^{expo[a]} E_{perm[a]}`.
    pub expo: Vec<u64>,
}

impl FiniteOrderAutomorphism {
    pub fn m(&self) -> u64 {
        self.coords.m
    }

    pub fn diagram(&self) -> &AffineDiagram {
        &self.coords.diagram
    }

    pub fn perm(&self) -> &[usize] {
        &self.coords.diagram.perm
    }

    /// Smallest `j >= 1` with `sigma^j = id`, by iterating the basis action.
    pub fn order(&self) -> u64 {
        let nr = self.expo.len();
        let m2 = 2 * self.m();
        let perm = self.perm();
        let nu = &self.diagram().nu;
        let mut cur: Vec<usize> = (0..nr).collect();
        let mut acc = vec![0u64; nr];
        let mut hcur: Vec<usize> = (0..nu.len()).collect();
        for j in 1..=(4 * self.m() + 12) {
            for a in 0..nr {
                acc[a] = (acc[a] + self.expo[cur[a]]) % m2;
                cur[a] = perm[cur[a]];
            }
            for h in hcur.iter_mut() {
                *h = nu[*h];
            }
            if (0..nr).all(|a| cur[a] == a && acc[a] == 0) && hcur.iter().enumerate().all(|(i, &h)| h == i) {
                return j;
            }
        }
        0
    }

    /// The automorphism as a matrix-free check: `sigma[x, y] = [sigma x, sigma y]`
    /// on all pairs of root vectors.
    pub fn check_homomorphism(&self) -> Result<()> {
        let d = self.diagram();
        let sc = &d.sc;
        let rs = sc.root_system();
        let m = self.m();
        let m2 = 2 * m;
        let nr = rs.roots().len();
        for x in 0..nr {
            for y in 0..nr {
                if rs.negate(x) == y {
                    if !(self.expo[x] + self.expo[y]).is_multiple_of(m2) {
                        return Err(Error::Validation("sigma does not preserve [E_a, E_-a]".into()));
                    }
                    continue;
                }
                if let Some(z) = sc.sum(x, y) {
                    let same = sc.n(d.perm[x], d.perm[y]) * sc.n(x, y) > 0;
                    let rhs = (self.expo[x] + self.expo[y] + if same { 0 } else { m }) % m2;
                    if self.expo[z] % m2 != rhs {
                        return Err(Error::Validation(format!("sigma fails on the pair ({x},{y})")));
                    }
                }
            }
        }
        for j in 0..nr {
            for i in 0..rs.rank() {
                if sc.weight(j, i) != sc.weight(d.perm[j], d.nu[i]) {
                    return Err(Error::Validation("sigma does not intertwine the Cartan action".into()));
                }
            }
        }
        Ok(())
    }
}

/// Builds the automorphism of the given type.
pub fn kac_automorphism(coords: &KacCoordinates) -> Result<FiniteOrderAutomorphism> {
    let d = &coords.diagram;
    let rs = d.sc.root_system();
    let m = coords.m;
    let m2 = 2 * m;
    let nr = rs.roots().len();
    let n_alpha: Vec<i64> =
        (0..nr).map(|j| d.restrict(rs.root(j)).iter().zip(&coords.s[1..]).map(|(c, s)| c * *s as i64).sum()).collect();
    let expo: Vec<u64> = (0..nr)
        .map(|j| {
            let e = (2 * coords.b as i64 * n_alpha[j]).rem_euclid(m2 as i64) as u64;
            (e + if d.q[j] < 0 { m } else { 0 }) % m2
        })
        .collect();
    let auto = FiniteOrderAutomorphism { coords: coords.clone(), n_alpha, expo };
    auto.check_homomorphism()?;
    let ord = auto.order();
    if ord != m {
        return internal(format!("automorphism {} has order {ord}, expected {m}", coords.label()));
    }
    Ok(auto)
}

/// Reductive fixed subalgebra `g_0 = g^sigma`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LeviDescription {
    pub center_dim: usize,
    pub simple_factors: Vec<SimpleType>,
    /// Affine nodes with `s_i = 0`; they form the Dynkin diagram of `[g_0, g_0]`.
    pub diagram_vertices: Vec<usize>,
}

impl LeviDescription {
    pub fn dim(&self) -> usize {
        self.center_dim + self.simple_factors.iter().map(|t| t.dim()).sum::<usize>()
    }

    /// Factors sorted, for isomorphism-class comparisons.
    pub fn sorted_factors(&self) -> Vec<SimpleType> {
        let mut v: Vec<SimpleType> = self.simple_factors.iter().map(|t| t.canonical()).collect();
        v.sort();
        v
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.simple_factors.iter().map(|t| t.to_string()).collect();
        if self.center_dim > 0 {
            parts.push(format!("T{}", self.center_dim));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

/// The fixed subalgebra: the subdiagram on nodes with `s_i = 0` plus a centre
/// of dimension `n - t`, `t` the number of such nodes.
pub fn fixed_subalgebra(coords: &KacCoordinates) -> Result<LeviDescription> {
    let d = &coords.diagram;
    let verts: Vec<usize> = (0..coords.s.len()).filter(|&i| coords.s[i] == 0).collect();
    let sub: Vec<Vec<i64>> = verts.iter().map(|&i| verts.iter().map(|&j| d.cartan[i][j]).collect()).collect();
    let comps = classify_cartan(&sub)?;
    Ok(LeviDescription {
        center_dim: d.rank() - verts.len(),
        simple_factors: comps.into_iter().map(|(_, t)| t).collect(),
        diagram_vertices: verts,
    })
}

/// Dimensions of the eigenspaces `g_j = {x : sigma x = eps^j x}` keyed by `j mod m`.
pub fn eigenspace_dimensions(auto: &FiniteOrderAutomorphism) -> Result<BTreeMap<u64, usize>> {
    let d = auto.diagram();
    let m = auto.m();
    let m2 = 2 * m;
    let binv = if m == 1 { 0 } else { mod_inverse(auto.coords.b, m) };
    let mut out: BTreeMap<u64, usize> = (0..m).map(|j| (j, 0)).collect();
    let mut add = |x: u64, c: usize| {
        // zeta_{2m}^x with x even is eps^(x/2 * b^-1)
        let j = ((x / 2) * binv) % m.max(1);
        *out.get_mut(&j).unwrap() += c;
    };
    for orbit in d.root_orbits() {
        let len = orbit.len() as u64;
        let total: u64 = orbit.iter().map(|&a| auto.expo[a]).sum::<u64>() % m2;
        let sols: Vec<u64> = (0..m2).filter(|x| x % 2 == 0 && (len * x) % m2 == total).collect();
        if sols.len() as u64 != len {
            return internal("orbit eigenvalues are not m-th roots of unity");
        }
        for x in sols {
            add(x, 1);
        }
    }
    let r = d.nu.len();
    let mut seen = vec![false; r];
    for i in 0..r {
        if seen[i] {
            continue;
        }
        let mut len = 0u64;
        let mut c = i;
        while !seen[c] {
            seen[c] = true;
            len += 1;
            c = d.nu[c];
        }
        for x in (0..m2).filter(|x| x % 2 == 0 && (len * x).is_multiple_of(m2)) {
            add(x, 1);
        }
    }
    let total: usize = out.values().sum();
    if total != d.base.dim() {
        return internal("eigenspace dimensions do not add up to dim g");
    }
    Ok(out)
}

fn mod_inverse(b: u64, m: u64) -> u64 {
    (1..m).find(|x| (x * b) % m == 1).unwrap_or(1)
}

/// All Kac coordinates with a given order `m` on a diagram.
pub fn coordinates_of_order(diagram: &AffineDiagram, m: u64) -> Vec<Vec<u64>> {
    let k = diagram.k as u64;
    if !m.is_multiple_of(k) {
        return vec![];
    }
    let target = m / k;
    let mut w = vec![1u64];
    w.extend(diagram.labels.iter().map(|&a| a as u64));
    let mut out = Vec::new();
    fn go(w: &[u64], i: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == w.len() {
            if left == 0 && cur.iter().fold(0u64, |a, &x| a.gcd(&x)) == 1 {
                out.push(cur.clone());
            }
            return;
        }
        let mut s = 0;
        while s * w[i] <= left {
            cur.push(s);
            go(w, i + 1, left - s * w[i], cur, out);
            cur.pop();
            s += 1;
        }
    }
    go(&w, 0, target, &mut Vec::new(), &mut out);
    out
}

/// Coordinates of order `m` up to symmetries of the affine diagram, each
/// class represented by its lexicographically largest member.
pub fn classes_of_order(diagram: &AffineDiagram, m: u64) -> Vec<Vec<u64>> {
    let sym = diagram.symmetries();
    let mut reps: Vec<Vec<u64>> = coordinates_of_order(diagram, m)
        .into_iter()
        .map(|s| {
            sym.iter()
                .map(|p| {
                    let mut t = vec![0; s.len()];
                    for (i, &x) in s.iter().enumerate() {
                        t[p[i]] = x;
                    }
                    t
                })
                .max()
                .unwrap()
        })
        .collect();
    reps.sort();
    reps.dedup();
    reps.reverse();
    reps
}

/// One `nu`-eigenspace and whether it is generated from its lowest weight.
#[derive(Clone, Debug, Serialize)]
pub struct EigenspaceReport {
    pub residue: u32,
    pub dim: usize,
    /// Restricted weights (coordinates on `psi_1..psi_n`), sorted.
    pub weights: Vec<Vec<i64>>,
    pub lowest_weight: Option<Vec<i64>>,
    /// Dimension of the span generated from the lowest weight vector by the
    /// raising operators `sum_{phi in orbit} ad E_phi`.
    pub generated_dim: usize,
    pub irreducible: bool,
}

/// Structural checks on a folding `g = sum_j g_j^nu`.
#[derive(Clone, Debug, Serialize)]
pub struct FoldReport {
    pub base: SimpleType,
    pub k: u32,
    /// `nu(E_delta) = q_delta E_delta` for the highest root `delta`.
    pub highest_root_sign: i8,
    /// Residue `j` with `E_delta` in `g_j^nu`.
    pub highest_root_residue: u32,
    /// `A_ij = sum_t eps_0^{-t} a(phi_i, nu^t phi_j)` over one representative
    /// of each non-trivial orbit, rendered as strings over `Q(w)`.
    pub orbit_matrix: Vec<Vec<String>>,
    pub orbit_matrix_det: String,
    pub orbit_matrix_nonsingular: bool,
    pub eigenspaces: Vec<EigenspaceReport>,
    /// For `k = 3`: `g_1` and `g_2` carry the same restricted weights.
    pub twin_weights_equal: Option<bool>,
}

/// Eigenvalue `eps_0^j` as an element of `Q(w)`.
fn eps0_pow(k: u32, j: i64) -> QOmega {
    match k {
        1 => QOmega::one(),
        2 => QOmega::from_int_sign(j),
        _ => QOmega::omega_pow(j),
    }
}

impl QOmega {
    fn from_int_sign(j: i64) -> QOmega {
        if j.rem_euclid(2) == 0 {
            QOmega::one()
        } else {
            -QOmega::one()
        }
    }
}

/// Decomposes `g` under `nu` and checks the structure of its eigenspaces.
pub fn verify_fold_structure(base: SimpleType, k: u32) -> Result<FoldReport> {
    use crate::linalg::Coeff;
    if k < 2 {
        return domain("fold checks need a non-trivial diagram automorphism");
    }
    let d = affine_diagram(base, k)?;
    let sc = &d.sc;
    let rs = sc.root_system();
    let r = rs.rank();
    let n = d.rank();
    let dim = sc.dim();
    let delta = rs.num_positive() - 1;
    let qd = d.q[delta];
    if d.perm[delta] != delta {
        return internal("highest root is not nu-fixed");
    }
    let hres = if qd == 1 { 0 } else { 1 };
    if k == 3 && qd != 1 {
        return internal("highest root has sign -1 under an order-3 lift");
    }
    // orbit matrix
    let reps: Vec<usize> = {
        let mut v: Vec<usize> = d.orbits.iter().filter(|o| o.len() > 1).map(|o| o[0]).collect();
        v.sort_unstable();
        v
    };
    let mat: Vec<Vec<QOmega>> = reps
        .iter()
        .map(|&i| {
            reps.iter()
                .map(|&j| {
                    let mut acc = QOmega::zero();
                    let mut c = j;
                    for t in 0..k as i64 {
                        acc = acc + eps0_pow(k, -t) * QOmega::from_int(rs.cartan[i][c]);
                        c = d.nu[c];
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let dm = det(&mat);
    // eigenvectors of nu
    let mut vecs: Vec<Vec<(Vec<QOmega>, Vec<i64>)>> = vec![Vec::new(); k as usize];
    for orbit in d.root_orbits() {
        let len = orbit.len() as i64;
        let qq: i64 = orbit.iter().map(|&a| d.q[a] as i64).product();
        for j in 0..k as i64 {
            let lam = eps0_pow(k, j);
            // lam^len must equal the product of signs
            let mut p = QOmega::one();
            for _ in 0..len {
                p = p * lam.clone();
            }
            if p != QOmega::from_int(qq) {
                continue;
            }
            let mut v = vec![QOmega::zero(); dim];
            let mut c = QOmega::one();
            for &a in &orbit {
                v[sc.e(a)] = c.clone();
                c = c * QOmega::from_int(d.q[a] as i64) / lam.clone();
            }
            vecs[j as usize].push((v, d.restrict(rs.root(orbit[0]))));
        }
    }
    let mut seen = vec![false; r];
    for i in 0..r {
        if seen[i] {
            continue;
        }
        let mut o = vec![];
        let mut c = i;
        while !seen[c] {
            seen[c] = true;
            o.push(c);
            c = d.nu[c];
        }
        for j in 0..k as i64 {
            let lam = eps0_pow(k, j);
            let mut p = QOmega::one();
            for _ in 0..o.len() {
                p = p * lam.clone();
            }
            if p != QOmega::one() {
                continue;
            }
            let mut v = vec![QOmega::zero(); dim];
            let mut c = QOmega::one();
            for &h in &o {
                v[h] = c.clone();
                c = c / lam.clone();
            }
            vecs[j as usize].push((v, vec![0; n]));
        }
    }
    let raise: Vec<Vec<QOmega>> = d
        .orbits
        .iter()
        .map(|o| {
            let mut v = vec![QOmega::zero(); dim];
            for &p in o {
                v[sc.e(p)] = QOmega::one();
            }
            v
        })
        .collect();
    let mut eigen = Vec::new();
    for (j, vs) in vecs.iter().enumerate() {
        let mut weights: Vec<Vec<i64>> = vs.iter().map(|x| x.1.clone()).collect();
        weights.sort();
        let wset: std::collections::HashSet<&Vec<i64>> = weights.iter().collect();
        let lowest: Vec<&(Vec<QOmega>, Vec<i64>)> = vs
            .iter()
            .filter(|(_, w)| {
                (0..n).all(|i| {
                    let mut x = w.clone();
                    x[i] -= 1;
                    !wset.contains(&x)
                })
            })
            .collect();
        let (generated, lw) = if j == 0 || lowest.len() != 1 {
            (0, lowest.first().map(|x| x.1.clone()))
        } else {
            let mut span: EchelonBasis<QOmega> = EchelonBasis::default();
            let mut queue = vec![lowest[0].0.clone()];
            span.insert(&queue[0]);
            while let Some(v) = queue.pop() {
                for e in &raise {
                    let w = sc.bracket(e, &v);
                    if span.insert(&w) {
                        queue.push(w);
                    }
                }
            }
            (span.dim(), Some(lowest[0].1.clone()))
        };
        eigen.push(EigenspaceReport {
            residue: j as u32,
            dim: vs.len(),
            weights,
            lowest_weight: lw,
            generated_dim: generated,
            irreducible: j != 0 && generated == vs.len(),
        });
    }
    let twin = (k == 3).then(|| eigen[1].weights == eigen[2].weights);
    Ok(FoldReport {
        base,
        k,
        highest_root_sign: qd,
        highest_root_residue: hres,
        orbit_matrix: mat.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect(),
        orbit_matrix_det: dm.to_string(),
        orbit_matrix_nonsingular: !dm.is_zero(),
        eigenspaces: eigen,
        twin_weights_equal: twin,
    })
}

/// Convenience: eigenspace dimensions of the diagram automorphism itself.
pub fn nu_eigenspace_dims(base: SimpleType, k: u32) -> Result<HashMap<u32, usize>> {
    let rep = verify_fold_structure(base, k)?;
    Ok(rep.eigenspaces.iter().map(|e| (e.residue, e.dim)).collect())
}
