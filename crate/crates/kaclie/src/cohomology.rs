//! Poincaré polynomials of the cohomological representations attached to
//! theta-stable parabolics `q x q` of a complex simple group, keyed by a set
//! `Phi'` of simple roots:
//!
//! `P(Phi', t) = t^{dim u} (1 + t)^{|Phi'|} P(l_1, t) ... P(l_k, t)`,
//! with `P(s, t) = prod (1 + t^{2 d_i + 1})` over the exponents of `s`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::poly::IntPoly;
use crate::rootsys::{build_root_system, classify_cartan, RootSystem, SimpleType};
use crate::symspace::oriented_degrees;

/// `Phi'` with its Levi factor and nilradical.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LeviSubset {
    /// 0-based simple-root indices, sorted.
    pub phi_prime: Vec<usize>,
    pub dim_nilradical: usize,
    pub levi_factors: Vec<SimpleType>,
    pub center_dim: usize,
}

pub fn levi_subset(rs: &RootSystem, phi_prime: &[usize]) -> Result<LeviSubset> {
    let n = rs.rank();
    let set: BTreeSet<usize> = phi_prime.iter().copied().collect();
    if set.len() != phi_prime.len() || set.iter().any(|&i| i >= n) {
        return domain(format!("{phi_prime:?} is not a set of simple roots of {}", rs.ty));
    }
    let rest: Vec<usize> = (0..n).filter(|i| !set.contains(i)).collect();
    let sub: Vec<Vec<i64>> = rest.iter().map(|&i| rest.iter().map(|&j| rs.cartan[i][j]).collect()).collect();
    let levi_factors = classify_cartan(&sub)?.into_iter().map(|(_, t)| t).collect();
    let dim_nilradical = rs.positive_roots().iter().filter(|r| set.iter().any(|&i| r[i] != 0)).count();
    Ok(LeviSubset { phi_prime: set.into_iter().collect(), dim_nilradical, levi_factors, center_dim: phi_prime.len() })
}

/// `t^shift prod (1 + t^d)`, with the degrees sorted.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Factored {
    pub shift: usize,
    pub degrees: Vec<usize>,
}

impl Factored {
    pub fn expand(&self) -> IntPoly {
        IntPoly::from_factors(self.shift, &self.degrees)
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift > 0 {
            write!(f, "t^{}", self.shift)?;
        }
        let mut i = 0;
        while i < self.degrees.len() {
            let d = self.degrees[i];
            let mut j = i;
            while j < self.degrees.len() && self.degrees[j] == d {
                j += 1;
            }
            let base = if d == 1 { "(1+t)".to_string() } else { format!("(1+t^{d})") };
            if j - i > 1 {
                write!(f, "{base}^{}", j - i)?;
            } else {
                write!(f, "{base}")?;
            }
            i = j;
        }
        if self.shift == 0 && self.degrees.is_empty() {
            write!(f, "1")?;
        }
        Ok(())
    }
}

fn simple_degrees(ty: SimpleType) -> Vec<usize> {
    ty.exponents().into_iter().map(|d| 2 * d as usize + 1).collect()
}

/// `P(s, t)` for a compact simple group of type `ty`.
pub fn poincare_simple(ty: SimpleType) -> IntPoly {
    IntPoly::from_factors(0, &simple_degrees(ty))
}

pub fn poincare_factored(rs: &RootSystem, phi_prime: &[usize]) -> Result<Factored> {
    let l = levi_subset(rs, phi_prime)?;
    let mut degrees = vec![1; l.center_dim];
    for t in &l.levi_factors {
        degrees.extend(simple_degrees(*t));
    }
    degrees.sort();
    Ok(Factored { shift: l.dim_nilradical, degrees })
}

/// `P(Phi', t)`.
pub fn poincare_levi(rs: &RootSystem, phi_prime: &[usize]) -> Result<IntPoly> {
    Ok(poincare_factored(rs, phi_prime)?.expand())
}

/// All subsets of `0..n` in canonical order: by size, then lexicographically.
pub fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = (0u32..1 << n).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    v
}

/// `{psi1,psi4}` for 0-based `[0, 3]`.
pub fn subset_label(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|i| format!("psi{}", i + 1)).collect();
    format!("{{{}}}", parts.join(","))
}

/// Nilradical dimensions and polynomials of every `Phi'`.
pub struct SubsetTable {
    pub entries: Vec<(LeviSubset, IntPoly)>,
}

impl SubsetTable {
    pub fn new(rs: &RootSystem) -> Result<SubsetTable> {
        let entries = all_subsets(rs.rank())
            .into_iter()
            .map(|s| {
                let f = poincare_factored(rs, &s)?;
                Ok((levi_subset(rs, &s)?, f.expand()))
            })
            .collect::<Result<_>>()?;
        Ok(SubsetTable { entries })
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SupportReport {
    pub degree: usize,
    /// Nonempty `Phi'` with a nonzero coefficient of `t^degree`, canonical order.
    pub subsets: Vec<Vec<usize>>,
    /// Whether the trivial representation (`Phi'` empty) contributes.
    pub trivial: bool,
    /// Subsets skipped because `degree` lies outside `[dim u, deg P]`.
    pub pruned: usize,
}

impl SupportReport {
    pub fn labels(&self) -> Vec<String> {
        self.subsets.iter().map(|s| subset_label(s)).collect()
    }
}

fn support_from(table: &SubsetTable, k: usize) -> SupportReport {
    let mut subsets = Vec::new();
    let mut trivial = false;
    let mut pruned = 0;
    for (l, p) in &table.entries {
        let deg = p.degree().unwrap_or(0);
        if k < l.dim_nilradical || k > deg {
            pruned += 1;
            continue;
        }
        if p.coeff(k) != 0 {
            if l.phi_prime.is_empty() {
                trivial = true;
            } else {
                subsets.push(l.phi_prime.clone());
            }
        }
    }
    SupportReport { degree: k, subsets, trivial, pruned }
}

/// Sets `Phi'` for which `t^k` has a nonzero coefficient in `P(Phi', t)`.
pub fn coefficient_support(rs: &RootSystem, k: usize) -> Result<SupportReport> {
    Ok(support_from(&SubsetTable::new(rs)?, k))
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleDegreeRow {
    /// `min(dim X(sigma), dim X(sigma theta))`.
    pub degree: usize,
    pub dual_degree: usize,
    /// Kac types of the involutions giving this degree.
    pub sources: Vec<String>,
    pub support: SupportReport,
    pub dual_support: SupportReport,
    pub dual_agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Th2Report {
    pub ty: SimpleType,
    pub dim: usize,
    pub rows: Vec<CycleDegreeRow>,
    pub note: Option<String>,
}

/// For each degree supplied by an oriented involution, the representations
/// that can carry a class in that degree.
pub fn th2_report(ty: SimpleType) -> Result<Th2Report> {
    let rs = build_root_system(ty)?;
    let table = SubsetTable::new(&rs)?;
    let dim = ty.dim();
    let mut degrees: Vec<(usize, Vec<String>)> = Vec::new();
    for (k, _, label) in oriented_degrees(ty)? {
        match degrees.iter_mut().find(|(d, _)| *d == k) {
            Some((_, v)) => v.push(label),
            None => degrees.push((k, vec![label])),
        }
    }
    degrees.sort();
    let rows: Vec<CycleDegreeRow> = degrees
        .into_iter()
        .map(|(k, sources)| {
            let support = support_from(&table, k);
            let dual_support = support_from(&table, dim - k);
            let dual_agrees = support.subsets == dual_support.subsets && support.trivial == dual_support.trivial;
            CycleDegreeRow { degree: k, dual_degree: dim - k, sources, support, dual_support, dual_agrees }
        })
        .collect();
    let note =
        rows.is_empty().then(|| format!("no involution of {ty} satisfies the orientation condition; no cycle degrees"));
    Ok(Th2Report { ty, dim, rows, note })
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub ty: SimpleType,
    pub automorphisms: usize,
    pub subsets_checked: usize,
    pub failures: Vec<(Vec<usize>, Vec<usize>)>,
}

/// `P(Phi', t) = P(nu Phi', t)` for every diagram automorphism `nu`.
pub fn check_diagram_invariance(rs: &RootSystem) -> Result<InvarianceReport> {
    let table = SubsetTable::new(rs)?;
    let autos = rs.diagram_automorphisms();
    let mut failures = Vec::new();
    let find = |s: &[usize]| table.entries.iter().find(|(l, _)| l.phi_prime == s).map(|(_, p)| p).unwrap();
    for (l, p) in &table.entries {
        for nu in &autos {
            let mut img: Vec<usize> = l.phi_prime.iter().map(|&i| nu[i]).collect();
            img.sort();
            if find(&img) != p {
                failures.push((l.phi_prime.clone(), nu.clone()));
            }
        }
    }
    Ok(InvarianceReport { ty: rs.ty, automorphisms: autos.len(), subsets_checked: table.entries.len(), failures })
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub ty: SimpleType,
    pub pairs_checked: usize,
    /// `deg P(Phi') = dim g - dim u(Phi')` fails.
    pub degree_failures: Vec<Vec<usize>>,
    /// `deg P(Phi') - deg P(Phi'') = dim u(Phi'') - dim u(Phi')` fails.
    pub difference_failures: usize,
    /// `Phi' ⊂ Phi''` but `dim u(Phi') > dim u(Phi'')`.
    pub monotonicity_failures: usize,
    /// `P(Phi')` is not `t^{dim u}` times a palindrome.
    pub duality_failures: Vec<Vec<usize>>,
    pub negative_coefficients: bool,
}

impl DegreeReport {
    pub fn ok(&self) -> bool {
        self.degree_failures.is_empty()
            && self.difference_failures == 0
            && self.monotonicity_failures == 0
            && self.duality_failures.is_empty()
            && !self.negative_coefficients
    }
}

pub fn check_degree_identity(rs: &RootSystem) -> Result<DegreeReport> {
    let table = SubsetTable::new(rs)?;
    let dim = rs.ty.dim();
    let mut r = DegreeReport {
        ty: rs.ty,
        pairs_checked: 0,
        degree_failures: vec![],
        difference_failures: 0,
        monotonicity_failures: 0,
        duality_failures: vec![],
        negative_coefficients: false,
    };
    let info: Vec<(u32, usize, usize)> = table
        .entries
        .iter()
        .map(|(l, p)| {
            let mask = l.phi_prime.iter().fold(0u32, |m, &i| m | 1 << i);
            (mask, l.dim_nilradical, p.degree().unwrap_or(0))
        })
        .collect();
    for (l, p) in &table.entries {
        if p.degree() != Some(dim - l.dim_nilradical) {
            r.degree_failures.push(l.phi_prime.clone());
        }
        if !p.is_shifted_palindrome() || p.valuation() != Some(l.dim_nilradical) {
            r.duality_failures.push(l.phi_prime.clone());
        }
        if p.coeffs().iter().any(|&c| c < 0) {
            r.negative_coefficients = true;
        }
    }
    for &(m1, u1, d1) in &info {
        for &(m2, u2, d2) in &info {
            r.pairs_checked += 1;
            if d1 as i64 - d2 as i64 != u2 as i64 - u1 as i64 {
                r.difference_failures += 1;
            }
            if m1 & m2 == m1 && u1 > u2 {
                r.monotonicity_failures += 1;
            }
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ZeroPatternReport {
    pub l: usize,
    pub degree: usize,
    pub zero_degrees: Vec<usize>,
    pub expected: Vec<usize>,
    pub ok: bool,
}

/// Zero coefficients of `(1 + t)(1 + t^3) ... (1 + t^{2l+1})`; expected
/// exactly at `2` and `(l+1)^2 - 2` (the same degree when `l = 1`).
pub fn check_zero_pattern(l: usize) -> Result<ZeroPatternReport> {
    if l == 0 {
        return domain("l must be positive");
    }
    let degrees: Vec<usize> = (0..=l).map(|i| 2 * i + 1).collect();
    let f = IntPoly::from_factors(0, &degrees);
    let degree = f.degree().unwrap();
    let zero_degrees = f.zero_degrees();
    let expected: Vec<usize> = BTreeSet::from([2, (l + 1) * (l + 1) - 2]).into_iter().collect();
    Ok(ZeroPatternReport { l, degree, ok: zero_degrees == expected, zero_degrees, expected })
}

/// `P(Phi, t) = t^{|Delta^+|} (1 + t)^n`.
pub fn full_set_polynomial(ty: SimpleType) -> IntPoly {
    IntPoly::from_factors(ty.num_positive_roots(), &vec![1; ty.rank])
}
