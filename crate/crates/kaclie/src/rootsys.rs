//! Root systems of simple complex Lie algebras in the simple-root basis.
//!
//! Simple roots are numbered as in Bourbaki. The Cartan matrix convention is
//! `a[i][j] = <psi_i, psi_j^vee> = 2 (psi_i, psi_j) / (psi_j, psi_j)`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, internal, Error, Result};

/// A root written in the basis of simple roots.
pub type Root = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// An irreducible Cartan type such as `E6` or `C4`.
///
/// `C2` and `D3` are accepted (they appear as members of classical families);
/// use [`SimpleType::canonical`] when comparing up to isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        SimpleType::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<SimpleType> {
        let bad = |reason| Error::InvalidType { series: series.letter(), rank, reason };
        match series {
            Series::A if rank < 1 => return Err(bad("rank must be at least 1")),
            Series::B | Series::C if rank < 2 => return Err(bad("rank must be at least 2")),
            Series::D if rank < 3 => return Err(bad("rank must be at least 3")),
            Series::E if !(6..=8).contains(&rank) => return Err(bad("rank must be 6, 7 or 8")),
            Series::F if rank != 4 => return Err(bad("rank must be 4")),
            Series::G if rank != 2 => return Err(bad("rank must be 2")),
            _ => {}
        }
        Ok(SimpleType { series, rank })
    }

    /// Parses `"E6"`, `"d4"`, `"C12"`.
    pub fn parse(s: &str) -> Result<SimpleType> {
        let s = s.trim();
        let mut chars = s.chars();
        let c = chars.next().ok_or_else(|| Error::Domain("empty type".into()))?;
        let series = Series::from_letter(c).ok_or_else(|| Error::Domain(format!("unknown series in {s:?}")))?;
        let rank: usize =
            chars.as_str().parse().map_err(|_| Error::Domain(format!("missing or malformed rank in {s:?}")))?;
        SimpleType::new(series, rank)
    }

    /// Representative of the isomorphism class: `C2 -> B2`, `D3 -> A3`.
    pub fn canonical(self) -> SimpleType {
        match (self.series, self.rank) {
            (Series::C, 2) => SimpleType { series: Series::B, rank: 2 },
            (Series::D, 3) => SimpleType { series: Series::A, rank: 3 },
            _ => self,
        }
    }

    pub fn num_positive_roots(self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => [36, 63, 120][n - 6],
            Series::F => 24,
            Series::G => 6,
        }
    }

    pub fn dim(self) -> usize {
        self.rank + 2 * self.num_positive_roots()
    }

    /// Exponents `d_1 <= ... <= d_n`; the Poincaré polynomial of the compact
    /// group is `prod (1 + t^(2 d_i + 1))`.
    pub fn exponents(self) -> Vec<u32> {
        let n = self.rank as u32;
        match self.series {
            Series::A => (1..=n).collect(),
            Series::B | Series::C => (1..=n).map(|i| 2 * i - 1).collect(),
            Series::D => {
                let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            Series::E => match n {
                6 => vec![1, 4, 5, 7, 8, 11],
                7 => vec![1, 5, 7, 9, 11, 13, 17],
                _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
            },
            Series::F => vec![1, 5, 7, 11],
            Series::G => vec![1, 5],
        }
    }

    /// Half squared lengths of the simple roots, normalised so short roots have 1.
    pub fn half_norms(self) -> Vec<i64> {
        let n = self.rank;
        match self.series {
            Series::A | Series::D | Series::E => vec![1; n],
            Series::B => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
            Series::C => (0..n).map(|i| if i + 1 < n { 1 } else { 2 }).collect(),
            Series::F => vec![2, 2, 1, 1],
            Series::G => vec![1, 3],
        }
    }

    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => (0..n - 1).for_each(|i| link(i, i + 1)),
            Series::D => {
                (0..n - 2).for_each(|i| link(i, i + 1));
                link(n - 3, n - 1);
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                (2..n - 1).for_each(|i| link(i, i + 1));
            }
            Series::F => (0..3).for_each(|i| link(i, i + 1)),
            Series::G => link(0, 1),
        }
        match self.series {
            // psi_n short: <psi_{n-1}, psi_n^vee> = -2
            Series::B => a[n - 2][n - 1] = -2,
            Series::C => a[n - 1][n - 2] = -2,
            Series::F => a[1][2] = -2,
            Series::G => a[1][0] = -3,
            _ => {}
        }
        a
    }

    /// Diagram with the standard extra labels: the coefficients of the
    /// highest root.
    pub fn highest_root_labels(self) -> Vec<i64> {
        let n = self.rank;
        match self.series {
            Series::A => vec![1; n],
            Series::B => (0..n).map(|i| if i == 0 { 1 } else { 2 }).collect(),
            Series::C => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
            Series::D => (0..n).map(|i| if i == 0 || i + 2 >= n { 1 } else { 2 }).collect(),
            Series::E => match n {
                6 => vec![1, 2, 2, 3, 2, 1],
                7 => vec![2, 2, 3, 4, 3, 2, 1],
                _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
            },
            Series::F => vec![2, 3, 4, 2],
            Series::G => vec![3, 2],
        }
    }
}

/// Isomorphism class of a possibly degenerate classical label. `B1`, `C1`
/// map to `A1`, `D2` to `A1 + A1`, `D1` and rank 0 to nothing (a torus).
pub fn canonical_factors(series: Series, rank: usize) -> Vec<SimpleType> {
    let a = |r| SimpleType { series: Series::A, rank: r };
    match (series, rank) {
        (_, 0) => vec![],
        (Series::B | Series::C, 1) => vec![a(1)],
        (Series::D, 1) => vec![],
        (Series::D, 2) => vec![a(1), a(1)],
        _ => SimpleType::new(series, rank).map(|t| vec![t.canonical()]).unwrap_or_default(),
    }
}

/// Positive roots of an arbitrary (decomposable) Cartan matrix, ordered by
/// height, then lexicographically with `psi_1` before `psi_2` before ... (so
/// within a height, larger leading coefficients come first).
pub fn positive_roots_of_cartan(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut all: HashSet<Root> = HashSet::new();
    let mut level: Vec<Root> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    all.extend(level.iter().cloned());
    let mut out = level.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                let mut up = beta.clone();
                up[i] += 1;
                if all.contains(&up) {
                    continue;
                }
                // p = length of the i-string below beta
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pair > 0 {
                    all.insert(up.clone());
                    next.push(up);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    sort_roots(&mut out);
    out
}

fn sort_roots(v: &mut [Root]) {
    v.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
}

/// The full root system of a simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    /// `d` with `d_i a_ij = d_j a_ji`; inversely proportional to root length.
    pub symmetrizer: Vec<i64>,
    half_norms: Vec<i64>,
    gram: Vec<Vec<i64>>,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    npos: usize,
}

/// Builds the root system of `ty`. Positive roots come first, ordered by
/// height then lexicographically; negatives follow in the same order.
pub fn build_root_system(ty: SimpleType) -> Result<RootSystem> {
    let ty = SimpleType::new(ty.series, ty.rank)?;
    let cartan = ty.cartan_matrix();
    let half_norms = ty.half_norms();
    let n = ty.rank;
    let gram: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| cartan[i][j] * half_norms[j]).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            if gram[i][j] != gram[j][i] {
                return internal(format!("asymmetric form for {ty}"));
            }
        }
    }
    let maxn = *half_norms.iter().max().unwrap();
    let symmetrizer = half_norms.iter().map(|l| maxn / l).collect();
    let pos = positive_roots_of_cartan(&cartan);
    if pos.len() != ty.num_positive_roots() {
        return internal(format!(
            "{ty}: enumerated {} positive roots, expected {}",
            pos.len(),
            ty.num_positive_roots()
        ));
    }
    let npos = pos.len();
    let mut roots = pos.clone();
    roots.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Root>()));
    let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    Ok(RootSystem { ty, cartan, symmetrizer, half_norms, gram, roots, index, npos })
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.npos]
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    pub fn simple_index(&self, i: usize) -> usize {
        // simple roots are the first `rank` positives
        i
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    /// Index of `roots[i] + roots[j]` if it is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let s: Root = self.roots[i].iter().zip(&self.roots[j]).map(|(a, b)| a + b).collect();
        self.index_of(&s)
    }

    /// Gram matrix `(psi_i, psi_j)`, short roots having squared length 2.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    pub fn norm2(&self, i: usize) -> i64 {
        self.inner(&self.roots[i], &self.roots[i])
    }

    /// `<x, y^vee> = 2 (x, y) / (y, y)`; `None` if not an integer.
    pub fn pairing_vec(&self, x: &[i64], y: &[i64]) -> Option<i64> {
        let num = 2 * self.inner(x, y);
        let den = self.inner(y, y);
        if den == 0 || num % den != 0 {
            None
        } else {
            Some(num / den)
        }
    }

    /// `alpha(H_beta^*) = <alpha, beta^vee>` for roots given by coefficients.
    pub fn cartan_pairing(&self, alpha: &[i64], beta: &[i64]) -> Result<i64> {
        self.check_root(alpha)?;
        self.check_root(beta)?;
        self.pairing_vec(alpha, beta).ok_or_else(|| Error::Internal("non-integral pairing of roots".into()))
    }

    fn check_root(&self, r: &[i64]) -> Result<usize> {
        if r.len() != self.rank() {
            return domain(format!("root {r:?} has wrong length for {}", self.ty));
        }
        self.index_of(r).ok_or_else(|| Error::Domain(format!("{r:?} is not a root of {}", self.ty)))
    }

    /// `(p, q)` with `beta + j alpha` a root exactly for `-p <= j <= q`.
    pub fn root_string(&self, alpha: &[i64], beta: &[i64]) -> Result<(i64, i64)> {
        self.check_root(alpha)?;
        self.check_root(beta)?;
        if alpha == beta || alpha.iter().zip(beta).all(|(a, b)| a == &-b) {
            return domain("root strings are defined for beta != +-alpha");
        }
        let walk = |sign: i64| {
            let mut k = 0;
            let mut v: Root = beta.to_vec();
            loop {
                for (c, a) in v.iter_mut().zip(alpha) {
                    *c += sign * a;
                }
                if self.index_of(&v).is_some() {
                    k += 1;
                } else {
                    return k;
                }
            }
        };
        let (p, q) = (walk(-1), walk(1));
        if p - q != self.pairing_vec(beta, alpha).unwrap_or(i64::MIN) {
            return internal("root string violates p - q = <beta, alpha^vee>");
        }
        Ok((p, q))
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.roots[self.npos - 1]
    }

    /// Coefficients of `alpha^vee` in the basis of simple coroots.
    pub fn coroot_coeffs(&self, i: usize) -> Vec<i64> {
        let a2 = self.norm2(i);
        self.roots[i].iter().enumerate().map(|(j, c)| c * 2 * self.half_norms[j] / a2).collect()
    }

    /// Reflection `s_beta(x)` for integer vectors.
    pub fn reflect(&self, beta: &[i64], x: &[i64]) -> Vec<i64> {
        let c = self.pairing_vec(x, beta).expect("non-integral reflection");
        x.iter().zip(beta).map(|(a, b)| a - c * b).collect()
    }

    /// Permutations of the simple roots preserving the Cartan matrix.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        cartan_symmetries(&self.cartan)
    }
}

/// All permutations `p` with `a[p i][p j] = a[i][j]`, found by backtracking.
pub fn cartan_symmetries(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn go(a: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let i = perm.len();
        let n = a.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            if (0..i).all(|j| a[c][perm[j]] == a[i][j] && a[perm[j]][c] == a[j][i]) && a[c][c] == a[i][i] {
                used[c] = true;
                perm.push(c);
                go(a, perm, used, out);
                perm.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(a, &mut Vec::new(), &mut vec![false; a.len()], &mut out);
    out
}

/// Result of moving a positive system back to the standard one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transport {
    /// Word `w = s_{i_1} ... s_{i_L}` in the simple reflections with
    /// `w(positives) = target`.
    pub word: Vec<usize>,
    /// `(-1)^L`.
    pub sign: i64,
}

/// Finds `w` in the Weyl group with `w(positives) = target` inside an
/// abstract root system of integer vectors with Gram matrix `gram`.
/// `simple` is the simple system of `positives`.
pub fn transport_positive_system(
    gram: &[Vec<i64>],
    simple: &[Vec<i64>],
    positives: &[Vec<i64>],
    target: &[Vec<i64>],
) -> Result<Transport> {
    let inner = |x: &[i64], y: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..x.len() {
            if x[i] != 0 {
                for j in 0..y.len() {
                    s += x[i] * gram[i][j] * y[j];
                }
            }
        }
        s
    };
    let pos: HashSet<&[i64]> = positives.iter().map(|v| v.as_slice()).collect();
    let mut cur: HashSet<Vec<i64>> = target.iter().cloned().collect();
    if cur.len() != pos.len() || target.len() != positives.len() {
        return domain("target has the wrong number of roots");
    }
    for t in &cur {
        let neg: Vec<i64> = t.iter().map(|c| -c).collect();
        if !pos.contains(t.as_slice()) && !pos.contains(neg.as_slice()) {
            return domain(format!("{t:?} is not a root"));
        }
        if cur.contains(&neg) {
            return domain("target contains a root and its negative");
        }
    }
    let mut word = Vec::new();
    loop {
        if cur.iter().all(|t| pos.contains(t.as_slice())) {
            break;
        }
        let Some(i) = simple.iter().position(|s| !cur.contains(s)) else {
            return domain("target is not a positive system");
        };
        let b = &simple[i];
        let bb = inner(b, b);
        cur = cur
            .into_iter()
            .map(|x| {
                let c = 2 * inner(&x, b) / bb;
                x.iter().zip(b).map(|(u, v)| u - c * v).collect()
            })
            .collect();
        word.push(i);
        if word.len() > positives.len() {
            return internal("transport did not terminate");
        }
    }
    let sign = if word.len() % 2 == 0 { 1 } else { -1 };
    Ok(Transport { word, sign })
}

/// Simple roots (indecomposable elements) of a positive system.
pub fn simple_system(positives: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let set: HashSet<&[i64]> = positives.iter().map(|v| v.as_slice()).collect();
    positives
        .iter()
        .filter(|x| {
            !positives.iter().any(|y| {
                let d: Vec<i64> = x.iter().zip(y.iter()).map(|(a, b)| a - b).collect();
                set.contains(d.as_slice())
            })
        })
        .cloned()
        .collect()
}

/// Weyl group element carrying the standard positive roots onto `image`.
pub fn transport_to_positive(rs: &RootSystem, image: &[Root]) -> Result<Transport> {
    let simple: Vec<Root> = (0..rs.rank()).map(|i| rs.root(i).to_vec()).collect();
    transport_positive_system(rs.gram(), &simple, rs.positive_roots(), image)
}

/// Components of the Dynkin diagram of a Cartan matrix, each with its type.
pub fn classify_cartan(a: &[Vec<i64>]) -> Result<Vec<(Vec<usize>, SimpleType)>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let sub: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| a[i][j]).collect()).collect();
        out.push((comp, classify_connected(&sub)?));
    }
    Ok(out)
}

fn classify_connected(a: &[Vec<i64>]) -> Result<SimpleType> {
    let r = a.len();
    for (i, row) in a.iter().enumerate() {
        if row[i] != 2 {
            return domain("Cartan matrix must have 2 on the diagonal");
        }
    }
    // lengths from a_ji / a_ij along a spanning tree
    let mut len: Vec<Option<(i64, i64)>> = vec![None; r];
    len[0] = Some((1, 1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let (p, q) = len[i].unwrap();
        for j in 0..r {
            if a[i][j] != 0 && len[j].is_none() {
                if a[j][i] == 0 {
                    return domain("Cartan matrix is not symmetrisable");
                }
                // l_j / l_i = a_ji / a_ij
                let (np, nq) = (p * a[j][i], q * a[i][j]);
                let g = num::integer::gcd(np, nq);
                len[j] = Some((np / g, nq / g));
                stack.push(j);
            }
        }
    }
    let l: Vec<(i64, i64)> = len.into_iter().map(|x| x.unwrap()).collect();
    let den = l.iter().fold(1, |acc, &(_, q)| num::integer::lcm(acc, q.abs()));
    let half: Vec<i64> = l.iter().map(|&(p, q)| p * den / q).collect();
    let pos = positive_roots_of_cartan(a);
    let npos = pos.len();
    let norm = |v: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..r {
            for j in 0..r {
                s += v[i] * a[i][j] * half[j] * v[j];
            }
        }
        s
    };
    let norms: Vec<i64> = pos.iter().map(|v| norm(v)).collect();
    let minn = *norms.iter().min().unwrap();
    let nshort = norms.iter().filter(|&&x| x == minn).count();
    let t = |s, k| SimpleType { series: s, rank: k };
    let ty = if nshort == npos {
        match (r, npos) {
            (6, 36) => t(Series::E, 6),
            (7, 63) => t(Series::E, 7),
            (8, 120) => t(Series::E, 8),
            _ if npos == r * (r + 1) / 2 => t(Series::A, r),
            _ if r >= 4 && npos == r * (r - 1) => t(Series::D, r),
            _ => return domain("unrecognised simply-laced Cartan matrix"),
        }
    } else {
        match (r, npos) {
            (2, 6) => t(Series::G, 2),
            (2, 4) => t(Series::B, 2),
            (4, 24) => t(Series::F, 4),
            _ if npos == r * r && nshort == r => t(Series::B, r),
            _ if npos == r * r && nshort == r * (r - 1) => t(Series::C, r),
            _ => return domain("unrecognised Cartan matrix"),
        }
    };
    Ok(ty)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_has_the_right_count() {
        for (s, r) in [(Series::A, 1), (Series::B, 5), (Series::C, 3), (Series::D, 6), (Series::G, 2)] {
            let ty = SimpleType::new(s, r).unwrap();
            let rs = build_root_system(ty).unwrap();
            assert_eq!(rs.roots().len(), 2 * ty.num_positive_roots());
        }
    }

    #[test]
    fn highest_root_matches_labels() {
        for s in ["A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let ty = SimpleType::parse(s).unwrap();
            let rs = build_root_system(ty).unwrap();
            assert_eq!(rs.highest_root(), ty.highest_root_labels().as_slice(), "{s}");
        }
    }

    #[test]
    fn classify_round_trip() {
        for s in ["A1", "A5", "B3", "C3", "D4", "D7", "E6", "E7", "E8", "F4", "G2"] {
            let ty = SimpleType::parse(s).unwrap();
            let comps = classify_cartan(&ty.cartan_matrix()).unwrap();
            assert_eq!(comps.len(), 1);
            assert_eq!(comps[0].1, ty.canonical(), "{s}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(SimpleType::parse("E9").is_err());
        assert!(SimpleType::parse("B1").is_err());
        assert!(SimpleType::parse("Q3").is_err());
    }
}
