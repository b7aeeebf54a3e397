//! Involutions, Riemannian symmetric pairs and the orientation condition.
//!
//! For an involution `sigma` with `g = u_0 + u_1`, one picks a maximal set of
//! strongly orthogonal `nu`-fixed roots `gamma_1..gamma_r` with
//! `sigma(E_gamma) = -E_gamma`. A sign vector `eps` in `{+-1}^r` is feasible
//! when the half-sum `f_phi = 1/2 sum_{eps_j = -1} <phi, gamma_j^vee>` lies in
//! `V + Z^n`, where `V` is spanned by the columns `a(phi, psi) - a(phi, nu psi)`.
//! Each feasible `eps` gives `A = prod_{eps_j=-1} s_{gamma_j}`, which maps the
//! root system `Delta_0` of `u_0` to itself; moving `A(Delta_0^+)` back to
//! `Delta_0^+` by `w` gives the determinant
//! `(-1)^{#{eps_j = -1}} (-1)^{l(w)}`. The condition holds when every feasible
//! determinant is `+1`.

use std::collections::HashSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{domain, internal, Result};
use crate::kacauto::{
    affine_diagram, classes_of_order, eigenspace_dimensions, fixed_subalgebra, kac_automorphism, AffineDiagram,
    FiniteOrderAutomorphism, KacCoordinates, LeviDescription,
};
use crate::linalg::{det, nullspace, primitive_integer, q, rank_mod_p, solve, solve_integer};
use crate::rootsys::{simple_system, transport_positive_system, RootSystem, Series, SimpleType};

/// An automorphism of order 2 with its eigenspace split.
#[derive(Clone, Debug)]
pub struct Involution {
    pub auto: FiniteOrderAutomorphism,
    pub dim_u0: usize,
    pub dim_u1: usize,
    pub folded_rank: usize,
    pub levi: LeviDescription,
    /// `(X(sigma), X(sigma theta))`: the complex and the real symmetric space.
    pub names: (String, String),
}

impl Involution {
    pub fn coords(&self) -> &KacCoordinates {
        &self.auto.coords
    }

    pub fn diagram(&self) -> &AffineDiagram {
        &self.auto.coords.diagram
    }

    pub fn root_system(&self) -> &RootSystem {
        self.diagram().root_system()
    }

    /// `sigma(E_a) = -E_a` for a `nu`-fixed root `a`.
    fn is_noncompact_fixed(&self, j: usize) -> bool {
        self.auto.perm()[j] == j && self.auto.expo[j] == 2
    }
}

/// Builds the involution of type `s` on `diagram`.
pub fn involution(coords: &KacCoordinates) -> Result<Involution> {
    if coords.m != 2 {
        return domain(format!("type {} has order {}, not 2", coords.label(), coords.m));
    }
    let auto = kac_automorphism(coords)?;
    let e = eigenspace_dimensions(&auto)?;
    let levi = fixed_subalgebra(coords)?;
    if levi.dim() != e[&0] {
        return internal("fixed subalgebra dimension disagrees with the eigenspace count");
    }
    let names = pair_names(coords, &levi);
    Ok(Involution { dim_u0: e[&0], dim_u1: e[&1], folded_rank: coords.diagram.rank(), levi, names, auto })
}

/// Convenience: `involution(KacCoordinates::new(affine_diagram(base, k), s))`.
pub fn involution_of_type(base: SimpleType, k: u32, s: &[u64]) -> Result<Involution> {
    let d = affine_diagram(base, k)?;
    involution(&KacCoordinates::new(&d, s)?)
}

/// All involutions of `base` up to conjugacy (inner, then outer).
pub fn involution_classes(base: SimpleType) -> Result<Vec<KacCoordinates>> {
    let mut out = Vec::new();
    for k in [1u32, 2] {
        let Ok(d) = affine_diagram(base, k) else { continue };
        for s in classes_of_order(&d, 2) {
            out.push(KacCoordinates::new(&d, &s)?);
        }
    }
    Ok(out)
}

fn so(a: usize, b: usize) -> (String, String) {
    (format!("SO({a},C)xSO({b},C)/SO({a})xSO({b})"), format!("SO_0({a},{b})/SO({a})xSO({b})"))
}

/// Names of the pair for a Kac type, following the usual classical notation.
pub fn pair_names(coords: &KacCoordinates, levi: &LeviDescription) -> (String, String) {
    let d = &coords.diagram;
    let r = d.base.rank;
    let ones: Vec<usize> = (0..coords.s.len()).filter(|&i| coords.s[i] > 0).collect();
    let s = |a: &str, b: &str| (a.to_string(), b.to_string());
    match (d.base.series, coords.k) {
        (Series::A, 1) if ones.len() == 2 => {
            let n = r + 1;
            let p = (ones[1] - ones[0]).min(n - (ones[1] - ones[0]));
            (
                format!("S(GL({p},C)xGL({},C))/S(U({p})xU({}))", n - p, n - p),
                format!("SU({p},{})/S(U({p})xU({}))", n - p, n - p),
            )
        }
        (Series::A, 2) => {
            let n = r + 1;
            if n.is_multiple_of(2) && ones[0] <= 1 {
                (format!("Sp({},C)/Sp({})", n / 2, n / 2), format!("SU*({n})/Sp({})", n / 2))
            } else {
                (format!("SO({n},C)/SO({n})"), format!("SL({n},R)/SO({n})"))
            }
        }
        (Series::B, 1) => {
            if ones == [0, 1] {
                so(2 * r - 1, 2)
            } else {
                let p = ones[0];
                so(2 * p, 2 * r - 2 * p + 1)
            }
        }
        (Series::C, 1) => {
            if ones.len() == 2 {
                (format!("GL({r},C)/U({r})"), format!("Sp({r},R)/U({r})"))
            } else {
                let p = ones[0];
                (
                    format!("Sp({p},C)xSp({},C)/Sp({p})xSp({})", r - p, r - p),
                    format!("Sp({p},{})/Sp({p})xSp({})", r - p, r - p),
                )
            }
        }
        (Series::D, 1) => {
            let end0 = |i: usize| i <= 1;
            let end1 = |i: usize| i + 1 >= r;
            if ones.len() == 1 {
                let p = ones[0];
                so(2 * p, 2 * r - 2 * p)
            } else if (end0(ones[0]) && end0(ones[1])) || (end1(ones[0]) && end1(ones[1])) {
                so(2 * r - 2, 2)
            } else {
                let n = r;
                (format!("GL({n},C)/U({n})"), format!("SO*({})/U({n})", 2 * n))
            }
        }
        (Series::D, 2) => {
            let p = ones[0];
            if p == 0 || p == r - 1 {
                let a = 2 * r - 1;
                (format!("SO({a},C)/SO({a})"), format!("SO_0(1,{a})/SO({a})"))
            } else {
                so(2 * p + 1, 2 * r - 2 * p - 1)
            }
        }
        (Series::E, 2) => {
            if levi.sorted_factors() == [SimpleType { series: Series::F, rank: 4 }] {
                s("F4^C/F4", "(e6(-26), f4)")
            } else {
                s("Sp(4,C)/Sp(4)", "(e6(6), sp(4))")
            }
        }
        _ => {
            let desc = levi.describe();
            let t = match (d.base.to_string().as_str(), desc.as_str()) {
                ("E6", "D5+T1") => s("SO(10,C)xSO(2,C)/SO(10)xSO(2)", "(e6(-14), so(10)+R)"),
                ("E6", _) => s("SL(2,C)xSL(6,C)/SU(2)xSU(6)", "(e6(2), su(2)+su(6))"),
                ("E7", "E6+T1") => s("E6^CxSO(2,C)/E6xSO(2)", "(e7(-25), e6+R)"),
                ("E7", "A7") => s("SL(8,C)/SU(8)", "(e7(7), su(8))"),
                ("E7", _) => s("SL(2,C)xSO(12,C)/SU(2)xSO(12)", "(e7(-5), su(2)+so(12))"),
                ("E8", "D8") => s("SO(16,C)/SO(16)", "(e8(8), so(16))"),
                ("E8", _) => s("SL(2,C)xE7^C/SU(2)xE7", "(e8(-24), su(2)+e7)"),
                ("F4", "B4") => s("SO(9,C)/SO(9)", "(f4(-20), so(9))"),
                ("F4", _) => s("SL(2,C)xSp(3,C)/SU(2)xSp(3)", "(f4(4), su(2)+sp(3))"),
                ("G2", _) => s("SL(2,C)xSL(2,C)/SU(2)xSU(2)", "(g2(2), su(2)+su(2))"),
                _ => (format!("G0/K ({desc})"), format!("G/K ({desc})")),
            };
            t
        }
    }
}

/// Tie-breaking rule among roots of equal height in the greedy choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Later roots of the canonical order first.
    Standard,
    /// Earlier roots of the canonical order first.
    Reversed,
}

#[derive(Clone, Debug, Serialize)]
pub struct StronglyOrthogonalSet {
    pub gammas: Vec<Vec<i64>>,
    #[serde(skip)]
    pub indices: Vec<usize>,
    /// Dimension of the `nu`-anti-fixed part of the Cartan subalgebra.
    pub antifixed_cartan_dim: usize,
}

impl StronglyOrthogonalSet {
    pub fn r(&self) -> usize {
        self.gammas.len()
    }

    /// `dim a` for `a = (anti-fixed Cartan) + sum R Y_gamma`.
    pub fn abelian_dim(&self) -> usize {
        self.antifixed_cartan_dim + self.gammas.len()
    }
}

fn strongly_orthogonal(rs: &RootSystem, a: usize, b: usize) -> bool {
    a != b && rs.sum_index(a, b).is_none() && rs.sum_index(a, rs.negate(b)).is_none()
}

/// Greedy maximal strongly orthogonal set, by descending height.
pub fn strongly_orthogonal_set(inv: &Involution) -> StronglyOrthogonalSet {
    strongly_orthogonal_set_with(inv, TieBreak::Standard)
}

pub fn strongly_orthogonal_set_with(inv: &Involution, tie: TieBreak) -> StronglyOrthogonalSet {
    let rs = inv.root_system();
    let mut pool: Vec<usize> = (0..rs.num_positive()).filter(|&j| inv.is_noncompact_fixed(j)).collect();
    pool.sort_by(|&a, &b| {
        let h = rs.height(b).cmp(&rs.height(a));
        match tie {
            TieBreak::Standard => h.then(b.cmp(&a)),
            TieBreak::Reversed => h.then(a.cmp(&b)),
        }
    });
    let mut chosen: Vec<usize> = Vec::new();
    for j in pool {
        if chosen.iter().all(|&c| strongly_orthogonal(rs, c, j)) {
            chosen.push(j);
        }
    }
    let d = inv.diagram();
    let anti = d.orbits.iter().map(|o| o.len() - 1).sum::<usize>();
    StronglyOrthogonalSet {
        gammas: chosen.iter().map(|&j| rs.root(j).to_vec()).collect(),
        indices: chosen,
        antifixed_cartan_dim: anti,
    }
}

/// Dimension of the centraliser of `a` in `u_1`; equals `dim a` exactly when
/// `a` is maximal abelian. Computed modulo a large prime, which can only
/// overestimate the kernel.
pub fn centralizer_dim_in_u1(inv: &Involution, so: &StronglyOrthogonalSet) -> usize {
    let sc = inv.diagram().structure_constants();
    let rs = sc.root_system();
    let dim = sc.dim();
    let perm = inv.auto.perm();
    let nu = &inv.diagram().nu;
    let sign = |j: usize| -> i64 {
        if inv.auto.expo[j] == 0 {
            1
        } else {
            -1
        }
    };
    let mut u1: Vec<Vec<i64>> = Vec::new();
    for j in 0..rs.roots().len() {
        let mut v = vec![0i64; dim];
        if perm[j] == j {
            if sign(j) == -1 {
                v[sc.e(j)] = 1;
                u1.push(v);
            }
        } else if j < perm[j] {
            v[sc.e(j)] = 1;
            v[sc.e(perm[j])] = -sign(j);
            u1.push(v);
        }
    }
    let mut a: Vec<Vec<i64>> = Vec::new();
    for i in 0..rs.rank() {
        if i < nu[i] {
            let mut v = vec![0i64; dim];
            v[i] = 1;
            v[nu[i]] = -1;
            u1.push(v.clone());
            a.push(v);
        }
    }
    for &g in &so.indices {
        let mut v = vec![0i64; dim];
        v[sc.e(g)] = 1;
        v[sc.e(rs.negate(g))] = 1;
        a.push(v);
    }
    let images: Vec<Vec<i64>> = u1.iter().map(|b| a.iter().flat_map(|x| sc.bracket(x, b)).collect()).collect();
    u1.len() - rank_mod_p(&images)
}

/// Hermitian classification of the pair.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub enum HermitianKind {
    NotHermitian,
    Tube,
    NonTube,
}

/// Hermitian iff `u_0` has a one-dimensional centre; tube type iff
/// `sum_j H_{gamma_j}` is annihilated by every simple root of `u_0`.
pub fn hermitian_tube_classify(inv: &Involution, so: &StronglyOrthogonalSet) -> HermitianKind {
    if inv.levi.center_dim != 1 {
        return HermitianKind::NotHermitian;
    }
    let rs = inv.root_system();
    let d0 = compact_roots(inv);
    let simple = simple_system(&d0.positive);
    let tube = simple.iter().all(|x| {
        let s: i64 = so.indices.iter().map(|&g| rs.pairing_vec(x, rs.root(g)).unwrap()).sum();
        s == 0
    });
    if tube {
        HermitianKind::Tube
    } else {
        HermitianKind::NonTube
    }
}

/// Roots of `u_0` relative to `h^nu`, as `nu`-invariant orbit-sum vectors.
#[derive(Clone, Debug)]
pub struct CompactRoots {
    pub positive: Vec<Vec<i64>>,
    pub all: HashSet<Vec<i64>>,
}

pub fn compact_roots(inv: &Involution) -> CompactRoots {
    let d = inv.diagram();
    let rs = d.root_system();
    let mut positive = Vec::new();
    let mut all = HashSet::new();
    for orbit in d.root_orbits() {
        let j = orbit[0];
        let has_fixed = if orbit.len() == 1 { inv.auto.expo[j] == 0 } else { true };
        if has_fixed {
            let v = d.orbit_sum(rs.root(j));
            if rs.is_positive(j) {
                positive.push(v.clone());
            }
            all.insert(v);
        }
    }
    CompactRoots { positive, all }
}

/// Integer-lattice certificate that `f = V t + z`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FeasibilityCertificate {
    /// `2 f`, an integer vector indexed by the base simple roots.
    pub twice_f: Vec<i64>,
    pub z: Vec<i64>,
    /// Coefficients on the generators of `V`, as reduced fractions.
    pub t: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OrWitness {
    pub signs: Vec<i8>,
    pub certificate: FeasibilityCertificate,
    pub det: i64,
    /// Determinant of `w A` on the fixed Cartan, computed as a matrix.
    pub det_matrix: i64,
    pub transport_length: usize,
    /// Whether `w A` permutes simple factors of `u_0` nontrivially.
    pub swaps_factors: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OrVerdict {
    pub satisfied: bool,
    /// Set when a structural shortcut decided the verdict.
    pub shortcut: Option<String>,
    pub r: usize,
    pub sign_vectors_checked: usize,
    pub feasible: usize,
    pub witnesses: Vec<OrWitness>,
}

struct Lattice {
    /// Generators of `V` (columns), over Q.
    gens: Vec<Vec<BigRational>>,
    /// Integral rows spanning `V^perp`.
    perp: Vec<Vec<BigInt>>,
    n: usize,
}

impl Lattice {
    fn new(rs: &RootSystem, nu: &[usize]) -> Lattice {
        let n = rs.rank();
        let gens: Vec<Vec<BigRational>> = (0..n)
            .filter(|&p| nu[p] != p)
            .map(|p| (0..n).map(|phi| q(rs.cartan[phi][p] - rs.cartan[phi][nu[p]])).collect())
            .collect();
        let perp = if gens.is_empty() {
            (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
        } else {
            nullspace(&gens, n).iter().map(|v| primitive_integer(v)).collect()
        };
        Lattice { gens, perp, n }
    }

    /// Certificate for `f = twice_f / 2` in `V + Z^n`, if it exists.
    fn certify(&self, twice_f: &[i64]) -> Option<FeasibilityCertificate> {
        let two = BigInt::from(2);
        let mut b = Vec::new();
        for row in &self.perp {
            let s: BigInt = row.iter().zip(twice_f).map(|(m, f)| m * BigInt::from(*f)).sum();
            if &s % &two != BigInt::zero() {
                return None;
            }
            b.push(s / &two);
        }
        let z = solve_integer(&self.perp, &b, self.n)?;
        let rhs: Vec<BigRational> = twice_f
            .iter()
            .zip(&z)
            .map(|(f, zi)| BigRational::new(BigInt::from(*f), two.clone()) - BigRational::from_integer(zi.clone()))
            .collect();
        let t = if self.gens.is_empty() {
            if rhs.iter().any(|x| !x.is_zero()) {
                return None;
            }
            vec![]
        } else {
            // columns of V as a matrix n x g
            let g = self.gens.len();
            let m: Vec<Vec<BigRational>> =
                (0..self.n).map(|i| (0..g).map(|j| self.gens[j][i].clone()).collect()).collect();
            solve(&m, &rhs, g)?
        };
        Some(FeasibilityCertificate {
            twice_f: twice_f.to_vec(),
            z: z.iter().map(|x| x.to_i64().unwrap()).collect(),
            t: t.iter().map(|x| x.to_string()).collect(),
        })
    }
}

/// Re-checks a certificate: `f - z` equals `V t`.
pub fn verify_certificate(inv: &Involution, c: &FeasibilityCertificate) -> bool {
    let rs = inv.root_system();
    let lat = Lattice::new(rs, &inv.diagram().nu);
    let ts: Vec<BigRational> = match c.t.iter().map(|s| s.parse::<BigRational>()).collect() {
        Ok(v) => v,
        Err(_) => return false,
    };
    if ts.len() != lat.gens.len() {
        return false;
    }
    (0..lat.n).all(|i| {
        let lhs = BigRational::new(BigInt::from(c.twice_f[i]), BigInt::from(2)) - q(c.z[i]);
        let rhs: BigRational = lat.gens.iter().zip(&ts).map(|(g, t)| g[i].clone() * t.clone()).sum();
        lhs == rhs
    })
}

/// The orientation verdict, using structural shortcuts where they apply.
pub fn condition_or(inv: &Involution) -> Result<OrVerdict> {
    let so = strongly_orthogonal_set(inv);
    let base = inv.diagram().base;
    let shortcut =
        if matches!(base.series, Series::E | Series::F | Series::G) && (base.rank == 8 || base.series != Series::E) {
            Some("trivial centre")
        } else if so.r() == 0 {
            Some("a is contained in the Cartan subalgebra")
        } else if hermitian_tube_classify(inv, &so) == HermitianKind::NonTube {
            Some("Hermitian of non-tube type")
        } else {
            None
        };
    if let Some(reason) = shortcut {
        return Ok(OrVerdict {
            satisfied: true,
            shortcut: Some(reason.into()),
            r: so.r(),
            sign_vectors_checked: 0,
            feasible: 0,
            witnesses: vec![],
        });
    }
    condition_or_with(inv, &so)
}

/// The orientation verdict by exhausting all sign vectors.
pub fn condition_or_full(inv: &Involution) -> Result<OrVerdict> {
    condition_or_with(inv, &strongly_orthogonal_set(inv))
}

pub fn condition_or_with(inv: &Involution, so: &StronglyOrthogonalSet) -> Result<OrVerdict> {
    let d = inv.diagram();
    let rs = d.root_system();
    let n = rs.rank();
    let r = so.r();
    if r > 20 {
        return domain("too many strongly orthogonal roots to enumerate");
    }
    let lat = Lattice::new(rs, &d.nu);
    let d0 = compact_roots(inv);
    if d0.all.len() + inv.folded_rank != inv.dim_u0 {
        return internal("compact roots do not account for dim u_0");
    }
    let simple0 = simple_system(&d0.positive);
    // components of the simple system of u_0
    let comp = components(rs, &simple0);
    let pair: Vec<Vec<i64>> = so
        .indices
        .iter()
        .map(|&g| (0..n).map(|phi| rs.pairing_vec(rs.root(phi), rs.root(g)).unwrap()).collect())
        .collect();
    let mut witnesses = Vec::new();
    let mut checked = 0;
    let mut satisfied = true;
    for mask in 0u64..(1u64 << r) {
        checked += 1;
        let neg: Vec<usize> = (0..r).filter(|j| mask >> j & 1 == 1).collect();
        let twice_f: Vec<i64> = (0..n).map(|phi| neg.iter().map(|&j| pair[j][phi]).sum()).collect();
        let Some(cert) = lat.certify(&twice_f) else { continue };
        let apply_a = |x: &[i64]| -> Vec<i64> {
            let mut y = x.to_vec();
            for &j in &neg {
                y = rs.reflect(rs.root(so.indices[j]), &y);
            }
            y
        };
        let image: Vec<Vec<i64>> = d0.positive.iter().map(|x| apply_a(x)).collect();
        if image.iter().any(|x| !d0.all.contains(x)) {
            return internal("A does not preserve the compact roots");
        }
        let tr = transport_positive_system(rs.gram(), &simple0, &d0.positive, &image)?;
        let sign_a = if neg.len().is_multiple_of(2) { 1 } else { -1 };
        let detv = sign_a * tr.sign;
        // w A on the nu-fixed Cartan, in the basis of orbit indicator vectors
        let mut refl: Vec<&[i64]> = neg.iter().map(|&j| rs.root(so.indices[j])).collect();
        refl.extend(tr.word.iter().map(|&i| simple0[i].as_slice()));
        let mat: Vec<Vec<BigRational>> = d
            .orbits
            .iter()
            .map(|o| {
                let mut y: Vec<BigRational> = (0..n).map(|i| q(o.contains(&i) as i64)).collect();
                for b in &refl {
                    y = reflect_q(rs, b, &y);
                }
                d.orbits.iter().map(|o| y[o[0]].clone()).collect()
            })
            .collect();
        let dm = det(&mat);
        let det_matrix = dm.to_integer().to_i64().unwrap_or(0);
        if BigRational::from_integer(BigInt::from(det_matrix)) != dm || det_matrix != detv {
            return internal("determinant from transport parity disagrees with the matrix determinant");
        }
        // permutation of simple roots of u_0 induced by A w
        let apply_wa = |x: &[i64]| -> Vec<i64> {
            let mut y = apply_a(x);
            for &i in &tr.word {
                y = rs.reflect(&simple0[i], &y);
            }
            y
        };
        let aw: Vec<Vec<i64>> = simple0.iter().map(|x| apply_wa(x)).collect();
        let mut swaps = false;
        for (i, img) in aw.iter().enumerate() {
            let Some(jj) = simple0.iter().position(|y| y == img) else {
                return internal("w A does not preserve the simple roots of u_0");
            };
            if comp[i] != comp[jj] {
                swaps = true;
            }
        }
        if detv != 1 {
            satisfied = false;
        }
        witnesses.push(OrWitness {
            signs: (0..r).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect(),
            certificate: cert,
            det: detv,
            det_matrix,
            transport_length: tr.word.len(),
            swaps_factors: swaps,
        });
    }
    Ok(OrVerdict { satisfied, shortcut: None, r, sign_vectors_checked: checked, feasible: witnesses.len(), witnesses })
}

fn reflect_q(rs: &RootSystem, b: &[i64], x: &[BigRational]) -> Vec<BigRational> {
    let g = rs.gram();
    let mut xb = BigRational::zero();
    for i in 0..x.len() {
        for j in 0..b.len() {
            xb += x[i].clone() * q(g[i][j] * b[j]);
        }
    }
    let c = xb * q(2) / q(rs.inner(b, b));
    x.iter().zip(b).map(|(u, v)| u.clone() - c.clone() * q(*v)).collect()
}

fn components(rs: &RootSystem, simple: &[Vec<i64>]) -> Vec<usize> {
    let k = simple.len();
    let mut comp: Vec<usize> = (0..k).collect();
    fn find(c: &mut Vec<usize>, i: usize) -> usize {
        if c[i] != i {
            let r = find(c, c[i]);
            c[i] = r;
        }
        c[i]
    }
    for i in 0..k {
        for j in i + 1..k {
            if rs.inner(&simple[i], &simple[j]) != 0 {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    (0..k).map(|i| find(&mut comp, i)).collect()
}

/// One instantiated row of the orientation table.
#[derive(Clone, Debug, Serialize)]
pub struct OrRow {
    pub family: String,
    pub algebra: String,
    pub k: u32,
    pub coords: Vec<u64>,
    pub label: String,
    pub fixed: String,
    pub x_sigma: String,
    pub x_sigma_theta: String,
    pub dim_u0: usize,
    pub dim_u1: usize,
    pub hermitian: HermitianKind,
    pub satisfied: bool,
    pub shortcut: Option<String>,
}

/// A table row before evaluation.
#[derive(Clone, Debug)]
pub struct RowSpec {
    pub family: String,
    pub base: SimpleType,
    pub k: u32,
    pub s: Vec<u64>,
}

fn unit(len: usize, at: &[usize]) -> Vec<u64> {
    let mut v = vec![0; len];
    for &i in at {
        v[i] = 1;
    }
    v
}

fn class4(n: usize) -> &'static str {
    ["4Z", "1+4Z", "2+4Z", "3+4Z"][n % 4]
}

/// The families of involutions listed in the orientation table, instantiated
/// for every classical parameter `n <= max_n`, plus the exceptional rows.
pub fn table_row_specs(max_n: usize) -> Vec<RowSpec> {
    let t = |s, r| SimpleType { series: s, rank: r };
    let mut out = Vec::new();
    let mut push = |family: String, base: SimpleType, k: u32, s: Vec<u64>| out.push(RowSpec { family, base, k, s });
    for n in 2..=max_n {
        let r = n - 1;
        let fam = if n % 2 == 1 { "a_{n-1}, n odd".to_string() } else { format!("a_{{n-1}}, n in {}", class4(n)) };
        for p in 1..=n / 2 {
            push(fam.clone(), t(Series::A, r), 1, unit(n, &[0, p]));
        }
        if n % 2 == 0 && n >= 6 {
            let len = n / 2 + 1;
            push(fam.clone(), t(Series::A, r), 2, unit(len, &[0]));
            push(fam.clone(), t(Series::A, r), 2, unit(len, &[len - 1]));
        }
        if n % 2 == 1 && n >= 3 {
            push(fam.clone(), t(Series::A, r), 2, unit((n - 1) / 2 + 1, &[0]));
        }
    }
    push("d_3".into(), t(Series::D, 3), 2, vec![1, 0, 0]);
    push("d_3".into(), t(Series::D, 3), 2, vec![0, 1, 0]);
    for n in 2..=max_n {
        let fam = format!("c_n, n in {}", class4(n));
        push(fam.clone(), t(Series::C, n), 1, unit(n + 1, &[0, n]));
        for p in 1..n {
            push(fam.clone(), t(Series::C, n), 1, unit(n + 1, &[p]));
        }
    }
    for n in 3..=max_n {
        push("b_n".into(), t(Series::B, n), 1, unit(n + 1, &[0, 1]));
        for p in 2..=n {
            push("b_n".into(), t(Series::B, n), 1, unit(n + 1, &[p]));
        }
    }
    for n in 4..=max_n {
        let fam = format!("d_n, n in {}", class4(n));
        push(fam.clone(), t(Series::D, n), 1, unit(n + 1, &[0, n]));
        push(fam.clone(), t(Series::D, n), 1, unit(n + 1, &[0, 1]));
        for p in 2..=n - 2 {
            if 2 * p <= n {
                push(fam.clone(), t(Series::D, n), 1, unit(n + 1, &[p]));
            }
        }
        for p in 0..n {
            push(fam.clone(), t(Series::D, n), 2, unit(n, &[p]));
        }
    }
    let ex: [(&str, u32, &[u64]); 12] = [
        ("E6", 1, &[1, 1, 0, 0, 0, 0, 0]),
        ("E6", 1, &[0, 0, 1, 0, 0, 0, 0]),
        ("E6", 2, &[1, 0, 0, 0, 0]),
        ("E6", 2, &[0, 1, 0, 0, 0]),
        ("E7", 1, &[1, 0, 0, 0, 0, 0, 0, 1]),
        ("E7", 1, &[0, 0, 1, 0, 0, 0, 0, 0]),
        ("E7", 1, &[0, 1, 0, 0, 0, 0, 0, 0]),
        ("E8", 1, &[0, 1, 0, 0, 0, 0, 0, 0, 0]),
        ("E8", 1, &[0, 0, 0, 0, 0, 0, 0, 0, 1]),
        ("F4", 1, &[0, 1, 0, 0, 0]),
        ("F4", 1, &[0, 0, 0, 0, 1]),
        ("G2", 1, &[0, 0, 1]),
    ];
    for (ty, k, s) in ex {
        let base = SimpleType::parse(ty).unwrap();
        push(ty.to_lowercase(), base, k, s.to_vec());
    }
    out
}

/// Evaluates one row.
pub fn evaluate_row(spec: &RowSpec) -> Result<OrRow> {
    let inv = involution_of_type(spec.base, spec.k, &spec.s)?;
    let so = strongly_orthogonal_set(&inv);
    let v = condition_or(&inv)?;
    Ok(OrRow {
        family: spec.family.clone(),
        algebra: spec.base.to_string(),
        k: spec.k,
        coords: spec.s.clone(),
        label: inv.coords().label(),
        fixed: inv.levi.describe(),
        x_sigma: inv.names.0.clone(),
        x_sigma_theta: inv.names.1.clone(),
        dim_u0: inv.dim_u0,
        dim_u1: inv.dim_u1,
        hermitian: hermitian_tube_classify(&inv, &so),
        satisfied: v.satisfied,
        shortcut: v.shortcut,
    })
}

/// The orientation table for classical parameters up to `max_n`.
pub fn or_table(max_n: usize) -> Result<Vec<OrRow>> {
    table_row_specs(max_n).iter().map(evaluate_row).collect()
}

/// Rows of the dimension table: the rows of the orientation table that
/// satisfy the condition.
pub fn dims_table(rows: &[OrRow]) -> Vec<(String, String, String, usize, usize)> {
    rows.iter()
        .filter(|r| r.satisfied)
        .map(|r| (r.algebra.clone(), r.x_sigma.clone(), r.x_sigma_theta.clone(), r.dim_u0, r.dim_u1))
        .collect()
}

/// Degree pairs `(min, max)` of `dim X(sigma)`, `dim X(sigma theta)` over
/// all involution classes of `base` satisfying the orientation condition.
pub fn oriented_degrees(base: SimpleType) -> Result<Vec<(usize, usize, String)>> {
    let mut out = Vec::new();
    for c in involution_classes(base)? {
        let inv = involution(&c)?;
        if condition_or(&inv)?.satisfied {
            let (a, b) = (inv.dim_u0, inv.dim_u1);
            out.push((a.min(b), a.max(b), c.label()));
        }
    }
    Ok(out)
}

/// Helper used by tests: the map of compact simple roots under `A w` for a witness.
pub fn compact_rank(inv: &Involution) -> usize {
    let d0 = compact_roots(inv);
    simple_system(&d0.positive).len()
}
