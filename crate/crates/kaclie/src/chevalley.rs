//! Chevalley bases: integral structure constants `N_{alpha,beta}`.
//!
//! The basis of `g` is indexed as `0..n` for the simple coroots `H_i` and
//! `n + j` for the root vector `E_{roots[j]}`. Brackets:
//!
//! * `[H_i, E_a] = <a, psi_i^vee> E_a`
//! * `[E_a, E_-a] = H_a = sum_i (a^vee)_i H_i`
//! * `[E_a, E_b] = N_{a,b} E_{a+b}`
//!
//! Signs are fixed by declaring `N = +(p + 1)` on extraspecial pairs and
//! propagating through the standard identities relating structure
//! constants of triples and quadruples of roots summing to zero.

use num::rational::Ratio;
use serde::Serialize;

use crate::error::{domain, internal, Error, Result};
use crate::linalg::Coeff;
use crate::rootsys::RootSystem;

type R64 = Ratio<i64>;

#[derive(Clone, Debug)]
pub struct StructureConstants {
    rs: RootSystem,
    /// Dense `|roots| x |roots|` table, zero where `a + b` is not a root.
    n: Vec<i64>,
    sum: Vec<i32>,
    coroots: Vec<Vec<i64>>,
    /// `<roots[j], psi_i^vee>` at `[j][i]`.
    weights: Vec<Vec<i64>>,
}

struct Builder<'a> {
    rs: &'a RootSystem,
    nr: usize,
    sum: Vec<i32>,
    pos: Vec<i64>,
}

impl Builder<'_> {
    fn s(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.sum[x * self.nr + y];
        (v >= 0).then_some(v as usize)
    }

    fn norm(&self, x: usize) -> i64 {
        self.rs.norm2(x)
    }

    /// Resolves any `N_{x,y}` from positive pairs that are already known.
    fn get(&self, x: usize, y: usize) -> Result<i64> {
        let rs = self.rs;
        let Some(z) = self.s(x, y) else { return Ok(0) };
        let (px, py) = (rs.is_positive(x), rs.is_positive(y));
        let v = match (px, py) {
            (true, true) => {
                let v = self.pos[x * self.nr + y];
                if v == 0 {
                    return internal(format!("N({x},{y}) requested before it was fixed"));
                }
                v
            }
            (false, false) => -self.get(rs.negate(x), rs.negate(y))?,
            (false, true) => -self.get(y, x)?,
            (true, false) => {
                // x + y + t = 0 with t = -z:  N_{x,y}/(t,t) = N_{y,t}/(x,x) = N_{t,x}/(y,y)
                let t = rs.negate(z);
                let zz = self.norm(z);
                let r = if rs.is_positive(z) {
                    R64::new(zz, self.norm(x)) * R64::from(-self.get(rs.negate(y), z)?)
                } else {
                    R64::new(zz, self.norm(y)) * R64::from(self.get(t, x)?)
                };
                if !r.is_integer() {
                    return internal("non-integral structure constant");
                }
                r.to_integer()
            }
        };
        Ok(v)
    }

    fn set_pos(&mut self, x: usize, y: usize, v: i64) {
        self.pos[x * self.nr + y] = v;
        self.pos[y * self.nr + x] = -v;
    }
}

/// Computes the structure constants of the Chevalley basis of `rs`.
pub fn structure_constants(rs: &RootSystem) -> Result<StructureConstants> {
    let nr = rs.roots().len();
    let np = rs.num_positive();
    let mut sum = vec![-1i32; nr * nr];
    for x in 0..nr {
        for y in 0..nr {
            if let Some(z) = rs.sum_index(x, y) {
                sum[x * nr + y] = z as i32;
            }
        }
    }
    let mut b = Builder { rs, nr, sum, pos: vec![0; nr * nr] };
    for g in 0..np {
        let pairs: Vec<(usize, usize)> = (0..np)
            .filter_map(|x| {
                let diff: Vec<i64> = rs.root(g).iter().zip(rs.root(x)).map(|(a, c)| a - c).collect();
                let y = rs.index_of(&diff)?;
                (rs.is_positive(y) && x < y).then_some((x, y))
            })
            .collect();
        let Some(&(a, bb)) = pairs.first() else { continue };
        let p = string_below(rs, a, bb);
        b.set_pos(a, bb, p + 1);
        let gg = rs.norm2(g);
        let nab = p + 1;
        let (na, nb) = (rs.negate(a), rs.negate(bb));
        for &(xi, zeta) in &pairs[1..] {
            // quadruple (xi, zeta, -a, -b)
            let mut acc = R64::from(0);
            if let Some(d) = b.s(zeta, na) {
                acc += R64::new(b.get(zeta, na)? * b.get(xi, nb)?, rs.norm2(d));
            }
            if let Some(d) = b.s(na, xi) {
                acc += R64::new(b.get(na, xi)? * b.get(zeta, nb)?, rs.norm2(d));
            }
            let v = acc * R64::new(gg, nab);
            if !v.is_integer() || v.to_integer() == 0 {
                return internal(format!("bad structure constant for pair ({xi},{zeta})"));
            }
            b.set_pos(xi, zeta, v.to_integer());
        }
    }
    let mut n = vec![0i64; nr * nr];
    for x in 0..nr {
        for y in 0..nr {
            if b.s(x, y).is_some() {
                n[x * nr + y] = b.get(x, y)?;
            }
        }
    }
    let r = rs.rank();
    let coroots = (0..nr).map(|j| rs.coroot_coeffs(j)).collect();
    let weights =
        (0..nr).map(|j| (0..r).map(|i| (0..r).map(|k| rs.root(j)[k] * rs.cartan[k][i]).sum()).collect()).collect();
    Ok(StructureConstants { rs: rs.clone(), n, sum: b.sum, coroots, weights })
}

/// Largest `p` with `b - p a` a root.
fn string_below(rs: &RootSystem, a: usize, b: usize) -> i64 {
    let mut p = 0;
    let mut v = rs.root(b).to_vec();
    loop {
        for (c, x) in v.iter_mut().zip(rs.root(a)) {
            *c -= x;
        }
        if rs.index_of(&v).is_none() {
            return p;
        }
        p += 1;
    }
}

impl StructureConstants {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    fn nr(&self) -> usize {
        self.rs.roots().len()
    }

    /// `N_{x,y}` by root index; zero if `x + y` is not a root.
    pub fn n(&self, x: usize, y: usize) -> i64 {
        self.n[x * self.nr() + y]
    }

    pub fn sum(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.sum[x * self.nr() + y];
        (v >= 0).then_some(v as usize)
    }

    /// `N_{alpha,beta}` by coefficient vectors.
    pub fn get(&self, alpha: &[i64], beta: &[i64]) -> Result<i64> {
        let find = |r: &[i64]| {
            self.rs.index_of(r).ok_or_else(|| Error::Domain(format!("{r:?} is not a root of {}", self.rs.ty)))
        };
        let (x, y) = (find(alpha)?, find(beta)?);
        if self.sum(x, y).is_none() {
            return domain("alpha + beta is not a root");
        }
        Ok(self.n(x, y))
    }

    /// `dim g`.
    pub fn dim(&self) -> usize {
        self.rs.rank() + self.nr()
    }

    /// Basis index of `E_{roots[j]}`.
    pub fn e(&self, j: usize) -> usize {
        self.rs.rank() + j
    }

    /// Coefficients of `H_a` in the simple coroots.
    pub fn coroot(&self, j: usize) -> &[i64] {
        &self.coroots[j]
    }

    /// `<roots[j], psi_i^vee>`.
    pub fn weight(&self, j: usize, i: usize) -> i64 {
        self.weights[j][i]
    }

    /// Bracket of two basis elements as a sparse integer combination.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Vec<(usize, i64)> {
        let r = self.rs.rank();
        match (a < r, b < r) {
            (true, true) => vec![],
            (true, false) => {
                let w = self.weights[b - r][a];
                if w == 0 {
                    vec![]
                } else {
                    vec![(b, w)]
                }
            }
            (false, true) => self.bracket_basis(b, a).into_iter().map(|(i, c)| (i, -c)).collect(),
            (false, false) => {
                let (x, y) = (a - r, b - r);
                if self.rs.negate(x) == y {
                    self.coroots[x].iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i, *c)).collect()
                } else if let Some(z) = self.sum(x, y) {
                    vec![(r + z, self.n(x, y))]
                } else {
                    vec![]
                }
            }
        }
    }

    /// Bilinear extension of the bracket to dense coefficient vectors.
    pub fn bracket<F: Coeff>(&self, u: &[F], v: &[F]) -> Vec<F> {
        let d = self.dim();
        let mut out = vec![F::zero(); d];
        let nu: Vec<usize> = (0..d).filter(|&i| !u[i].is_zero()).collect();
        let nv: Vec<usize> = (0..d).filter(|&i| !v[i].is_zero()).collect();
        for &i in &nu {
            for &j in &nv {
                for (k, c) in self.bracket_basis(i, j) {
                    out[k] = out[k].clone() + u[i].clone() * v[j].clone() * F::from_int(c);
                }
            }
        }
        out
    }

    /// The table with the sign of `N_{x,y}` (and its three companions
    /// `N_{y,x}`, `N_{-x,-y}`, `N_{-y,-x}`) flipped. Used to test that the
    /// verifier notices a broken Jacobi identity.
    pub fn with_sign_flipped(&self, x: usize, y: usize) -> Result<StructureConstants> {
        if self.sum(x, y).is_none() {
            return domain("pair does not sum to a root");
        }
        let mut out = self.clone();
        let nr = self.nr();
        let (nx, ny) = (self.rs.negate(x), self.rs.negate(y));
        for (a, b) in [(x, y), (y, x), (nx, ny), (ny, nx)] {
            out.n[a * nr + b] = -out.n[a * nr + b];
        }
        Ok(out)
    }
}

/// Outcome of [`verify_chevalley`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ChevalleyReport {
    pub ty: String,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    /// `|N_{a,b}| = p + 1` whenever `a + b` is a root.
    pub magnitudes_ok: bool,
    /// `N_{b,a} = -N_{a,b}` and `N_{-a,-b} = -N_{a,b}`.
    pub antisymmetry_ok: bool,
    pub jacobi_ok: bool,
    /// Basis indices of the first triple violating Jacobi.
    pub jacobi_witness: Option<(usize, usize, usize)>,
    pub first_failure: Option<String>,
}

impl ChevalleyReport {
    pub fn ok(&self) -> bool {
        self.magnitudes_ok && self.antisymmetry_ok && self.jacobi_ok
    }
}

/// Checks magnitudes, antisymmetry and the Jacobi identity on every triple of
/// distinct basis elements.
pub fn verify_chevalley(sc: &StructureConstants) -> ChevalleyReport {
    let rs = &sc.rs;
    let nr = sc.nr();
    let mut rep = ChevalleyReport {
        ty: rs.ty.to_string(),
        pairs_checked: 0,
        triples_checked: 0,
        magnitudes_ok: true,
        antisymmetry_ok: true,
        jacobi_ok: true,
        jacobi_witness: None,
        first_failure: None,
    };
    for x in 0..nr {
        for y in 0..nr {
            if sc.sum(x, y).is_none() {
                continue;
            }
            rep.pairs_checked += 1;
            let v = sc.n(x, y);
            if v.abs() != string_below(rs, x, y) + 1 {
                rep.magnitudes_ok = false;
                rep.first_failure.get_or_insert(format!("|N({:?},{:?})| = {}", rs.root(x), rs.root(y), v.abs()));
            }
            if sc.n(y, x) != -v || sc.n(rs.negate(x), rs.negate(y)) != -v {
                rep.antisymmetry_ok = false;
                rep.first_failure.get_or_insert(format!("antisymmetry fails at ({:?},{:?})", rs.root(x), rs.root(y)));
            }
        }
    }
    let d = sc.dim();
    let table: Vec<Vec<Vec<(usize, i64)>>> = (0..d).map(|a| (0..d).map(|b| sc.bracket_basis(a, b)).collect()).collect();
    let mut acc = vec![0i64; d];
    let mut touched: Vec<usize> = Vec::new();
    'outer: for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                rep.triples_checked += 1;
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for &(m, s) in &table[a][b] {
                        for &(t, u) in &table[m][c] {
                            if acc[t] == 0 {
                                touched.push(t);
                            }
                            acc[t] += s * u;
                        }
                    }
                }
                let bad = touched.iter().any(|&t| acc[t] != 0);
                for &t in &touched {
                    acc[t] = 0;
                }
                touched.clear();
                if bad {
                    rep.jacobi_ok = false;
                    rep.jacobi_witness = Some((i, j, k));
                    rep.first_failure.get_or_insert(format!("Jacobi fails on basis triple ({i},{j},{k})"));
                    break 'outer;
                }
            }
        }
    }
    rep
}

/// Checks that `i H_i`, `X_a = E_a - E_-a`, `Y_a = i (E_a + E_-a)` (a > 0)
/// span a real form with integral structure constants. Returns the number of
/// brackets checked.
pub fn verify_compact_form(sc: &StructureConstants) -> Result<usize> {
    use num::Complex;
    let rs = &sc.rs;
    let r = rs.rank();
    let d = sc.dim();
    let i1 = Complex::new(0i64, 1);
    let mut basis: Vec<Vec<Complex<i64>>> = Vec::new();
    for k in 0..r {
        let mut v = vec![Complex::new(0, 0); d];
        v[k] = i1;
        basis.push(v);
    }
    for a in 0..rs.num_positive() {
        let na = rs.negate(a);
        let mut x = vec![Complex::new(0, 0); d];
        x[sc.e(a)] = Complex::new(1, 0);
        x[sc.e(na)] = Complex::new(-1, 0);
        let mut y = vec![Complex::new(0, 0); d];
        y[sc.e(a)] = i1;
        y[sc.e(na)] = i1;
        basis.push(x);
        basis.push(y);
    }
    let mut count = 0;
    for u in &basis {
        for v in &basis {
            let w = sc.bracket(u, v);
            count += 1;
            // coordinates in the compact basis must be real integers
            for k in 0..r {
                // w_k = i c  =>  c = -i w_k
                let c = w[k] * Complex::new(0, -1);
                if c.im != 0 {
                    return Err(Error::Validation("Cartan coordinate not real".into()));
                }
            }
            for a in 0..rs.num_positive() {
                let (p, m) = (w[sc.e(a)], w[sc.e(rs.negate(a))]);
                let xs = p - m;
                let ys = (p + m) * Complex::new(0, -1);
                if xs.im != 0 || ys.im != 0 || xs.re % 2 != 0 || ys.re % 2 != 0 {
                    return Err(Error::Validation(format!("non-integral compact coordinate at root {a}")));
                }
            }
        }
    }
    Ok(count)
}
