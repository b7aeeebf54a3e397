//! Golden-fixture checks behind `kaclie verify-all`.
//!
//! Every check recomputes its values from scratch and compares them exactly
//! against the JSON fixtures embedded at compile time.

use std::collections::BTreeMap;

use num::{BigRational, Zero};
use serde::Serialize;

use crate::chevalley::{structure_constants, verify_chevalley, verify_compact_form};
use crate::cohomology::{
    check_degree_identity, check_diagram_invariance, check_zero_pattern, coefficient_support, poincare_factored,
    poincare_levi, th2_report,
};
use crate::error::Result;
use crate::kacauto::{
    affine_diagram, eigenspace_dimensions, fixed_subalgebra, kac_automorphism, verify_fold_structure, KacCoordinates,
};
use crate::numfield::{construct_two_nonreal, default_params, eisenstein, sturm_count};
use crate::rootsys::{build_root_system, Series, SimpleType};
use crate::symspace::{condition_or, involution_of_type};

pub mod fixtures {
    //! Typed views of the embedded golden fixtures.
    use serde::Deserialize;

    const EXPONENTS: &str = include_str!("../fixtures/exponents.json");
    const POINCARE: &str = include_str!("../fixtures/poincare.json");
    const OR_TABLE: &str = include_str!("../fixtures/or_table.json");
    const DIMS_TABLE: &str = include_str!("../fixtures/dims_table.json");
    const SUPPORTS: &str = include_str!("../fixtures/supports.json");

    #[derive(Clone, Debug, Deserialize)]
    pub struct ExponentRow {
        #[serde(rename = "type")]
        pub ty: String,
        pub exponents: Vec<u32>,
    }

    #[derive(Clone, Debug, Deserialize)]
    pub struct PoincareRow {
        #[serde(rename = "type")]
        pub ty: String,
        /// 1-based simple-root indices of `Phi'`.
        pub levi: Vec<usize>,
        pub shift: usize,
        pub degrees: Vec<usize>,
    }

    #[derive(Clone, Debug, Deserialize)]
    pub struct FixedRow {
        pub center: usize,
        pub factors: Vec<String>,
    }

    #[derive(Clone, Debug, Deserialize)]
    pub struct OrTableRow {
        pub algebra: String,
        pub k: u32,
        pub coords: Vec<u64>,
        pub satisfied: bool,
        pub fixed: FixedRow,
    }

    #[derive(Clone, Debug, Deserialize)]
    pub struct DimsRow {
        pub algebra: String,
        pub k: u32,
        pub coords: Vec<u64>,
        pub dim_x_sigma: usize,
        pub dim_x_sigma_theta: usize,
    }

    #[derive(Clone, Debug, Deserialize)]
    pub struct SupportRow {
        #[serde(rename = "type")]
        pub ty: String,
        pub degree: usize,
        /// 1-based.
        pub subsets: Vec<Vec<usize>>,
    }

    fn parse<T: serde::de::DeserializeOwned>(name: &str, src: &str) -> Vec<T> {
        serde_json::from_str(src).unwrap_or_else(|e| panic!("embedded fixture {name} is malformed: {e}"))
    }

    pub fn exponents() -> Vec<ExponentRow> {
        parse("exponents.json", EXPONENTS)
    }
    pub fn poincare() -> Vec<PoincareRow> {
        parse("poincare.json", POINCARE)
    }
    pub fn or_table() -> Vec<OrTableRow> {
        parse("or_table.json", OR_TABLE)
    }
    pub fn dims_table() -> Vec<DimsRow> {
        parse("dims_table.json", DIMS_TABLE)
    }
    pub fn supports() -> Vec<SupportRow> {
        parse("supports.json", SUPPORTS)
    }
}

/// Result of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub title: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(id: &str, title: &str) -> CheckOutcome {
        CheckOutcome { id: id.into(), title: title.into(), checked: 0, failures: vec![] }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }
}

fn ty(s: &str) -> SimpleType {
    SimpleType::parse(s).unwrap_or_else(|e| panic!("fixture type {s:?}: {e}"))
}

/// Every valid simple type of rank at most `max_rank`.
pub fn types_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for series in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G] {
        for rank in 1..=max_rank {
            if let Ok(t) = SimpleType::new(series, rank) {
                out.push(t);
            }
        }
    }
    out
}

/// Exponents read off the heights of positive roots: `h` occurs
/// `#{height h} - #{height h + 1}` times.
fn exponents_from_heights(t: SimpleType) -> Result<Vec<u32>> {
    let rs = build_root_system(t)?;
    let mut count: BTreeMap<i64, usize> = BTreeMap::new();
    for i in 0..rs.num_positive() {
        *count.entry(rs.height(i)).or_default() += 1;
    }
    let max_h = count.keys().copied().max().unwrap_or(0);
    let mut ex = Vec::new();
    for h in 1..=max_h {
        let here = count.get(&h).copied().unwrap_or(0);
        let next = count.get(&(h + 1)).copied().unwrap_or(0);
        ex.extend(std::iter::repeat_n(h as u32, here - next));
    }
    Ok(ex)
}

pub fn check_exponents() -> CheckOutcome {
    let mut c = CheckOutcome::new("1", "exponents");
    for row in fixtures::exponents() {
        let t = ty(&row.ty);
        c.expect(t.exponents() == row.exponents, || {
            format!("{}: table {:?} vs fixture {:?}", row.ty, t.exponents(), row.exponents)
        });
        if let Some(h) = c.absorb(&row.ty, exponents_from_heights(t)) {
            c.expect(h == row.exponents, || format!("{}: heights give {h:?}", row.ty));
        }
    }
    c
}

pub fn check_chevalley(max_rank: usize) -> CheckOutcome {
    let mut c = CheckOutcome::new("2", "Chevalley structure constants");
    for t in types_up_to_rank(max_rank) {
        let Some(rs) = c.absorb(&t.to_string(), build_root_system(t)) else { continue };
        let Some(sc) = c.absorb(&t.to_string(), structure_constants(&rs)) else { continue };
        let rep = verify_chevalley(&sc);
        c.expect(rep.ok(), || format!("{t}: {}", rep.first_failure.clone().unwrap_or_default()));
    }
    c
}

fn fixed_matches(c: &mut CheckOutcome, label: &str, coords: &KacCoordinates, center: usize, factors: &[String]) {
    let Some(l) = c.absorb(label, fixed_subalgebra(coords)) else { return };
    let mut got: Vec<String> = l.sorted_factors().iter().map(|t| t.to_string()).collect();
    got.sort();
    let mut want = factors.to_vec();
    want.sort();
    c.expect(l.center_dim == center && got == want, || {
        format!("{label}: fixed {} vs T{center} + {want:?}", l.describe())
    });
    let Some(auto) = c.absorb(label, kac_automorphism(coords)) else { return };
    let Some(e) = c.absorb(label, eigenspace_dimensions(&auto)) else { return };
    let dim = coords.diagram.root_system().ty.dim();
    c.expect(e.get(&0).copied() == Some(l.dim()) && e.values().sum::<usize>() == dim, || {
        format!("{label}: eigenspaces {e:?} vs fixed dimension {}", l.dim())
    });
}

pub fn check_fixed_subalgebras() -> CheckOutcome {
    let mut c = CheckOutcome::new("3", "fixed subalgebras");
    for row in fixtures::or_table() {
        let label = format!("{} {:?};{}", row.algebra, row.coords, row.k);
        let Some(d) = c.absorb(&label, affine_diagram(ty(&row.algebra), row.k)) else { continue };
        let Some(kc) = c.absorb(&label, KacCoordinates::new(&d, &row.coords)) else { continue };
        fixed_matches(&mut c, &label, &kc, row.fixed.center, &row.fixed.factors);
    }
    // the order-three triality class fixing g2
    if let Some(kc) =
        c.absorb("D4 triality", affine_diagram(ty("D4"), 3).and_then(|d| KacCoordinates::new(&d, &[1, 0, 0])))
    {
        fixed_matches(&mut c, "D4 (1,0,0;3)", &kc, 0, &["G2".to_string()]);
    }
    c
}

pub fn check_dimensions() -> CheckOutcome {
    let mut c = CheckOutcome::new("4", "symmetric space dimensions");
    for row in fixtures::dims_table() {
        let label = format!("{} {:?};{}", row.algebra, row.coords, row.k);
        let Some(inv) = c.absorb(&label, involution_of_type(ty(&row.algebra), row.k, &row.coords)) else { continue };
        c.expect((inv.dim_u0, inv.dim_u1) == (row.dim_x_sigma, row.dim_x_sigma_theta), || {
            format!("{label}: {}/{} vs {}/{}", inv.dim_u0, inv.dim_u1, row.dim_x_sigma, row.dim_x_sigma_theta)
        });
    }
    c
}

pub fn check_orientation_table() -> CheckOutcome {
    let mut c = CheckOutcome::new("5", "orientation condition");
    for row in fixtures::or_table() {
        let label = format!("{} {:?};{}", row.algebra, row.coords, row.k);
        let Some(inv) = c.absorb(&label, involution_of_type(ty(&row.algebra), row.k, &row.coords)) else { continue };
        let Some(v) = c.absorb(&label, condition_or(&inv)) else { continue };
        c.expect(v.satisfied == row.satisfied, || format!("{label}: got {} want {}", v.satisfied, row.satisfied));
    }
    c
}

pub fn check_poincare() -> CheckOutcome {
    let mut c = CheckOutcome::new("6", "Poincaré polynomials");
    for row in fixtures::poincare() {
        let t = ty(&row.ty);
        let label = format!("{} {:?}", row.ty, row.levi);
        let Some(rs) = c.absorb(&label, build_root_system(t)) else { continue };
        let phi: Vec<usize> = row.levi.iter().map(|&i| i - 1).collect();
        let Some(f) = c.absorb(&label, poincare_factored(&rs, &phi)) else { continue };
        let Some(p) = c.absorb(&label, poincare_levi(&rs, &phi)) else { continue };
        let mut want = row.degrees.clone();
        want.sort();
        c.expect(f.shift == row.shift && f.degrees == want, || format!("{label}: got {f}"));
        let expanded = crate::poly::IntPoly::from_factors(row.shift, &row.degrees);
        c.expect(p == expanded, || format!("{label}: coefficients {p} vs {expanded}"));
    }
    c
}

pub fn check_supports() -> CheckOutcome {
    let mut c = CheckOutcome::new("7", "coefficient supports");
    for row in fixtures::supports() {
        let label = format!("{} degree {}", row.ty, row.degree);
        let Some(rs) = c.absorb(&label, build_root_system(ty(&row.ty))) else { continue };
        let Some(s) = c.absorb(&label, coefficient_support(&rs, row.degree)) else { continue };
        let want: Vec<Vec<usize>> = row.subsets.iter().map(|v| v.iter().map(|&i| i - 1).collect()).collect();
        c.expect(s.subsets == want, || format!("{label}: got {:?}", s.labels()));
    }
    c
}

pub fn check_polynomial_identities() -> CheckOutcome {
    let mut c = CheckOutcome::new("8", "Poincaré polynomial identities");
    let mut invariance: Vec<SimpleType> = (1..=7).map(|n| SimpleType::new(Series::A, n).unwrap()).collect();
    invariance.extend((4..=7).map(|n| SimpleType::new(Series::D, n).unwrap()));
    invariance.push(ty("E6"));
    for t in invariance {
        let Some(rs) = c.absorb(&t.to_string(), build_root_system(t)) else { continue };
        if let Some(r) = c.absorb(&t.to_string(), check_diagram_invariance(&rs)) {
            c.expect(r.failures.is_empty(), || format!("{t}: invariance fails on {:?}", r.failures));
        }
    }
    for t in types_up_to_rank(8) {
        let Some(rs) = c.absorb(&t.to_string(), build_root_system(t)) else { continue };
        if let Some(r) = c.absorb(&t.to_string(), check_degree_identity(&rs)) {
            c.expect(r.ok(), || format!("{t}: degree identity {r:?}"));
        }
    }
    for l in 1..=20 {
        if let Some(r) = c.absorb(&format!("l = {l}"), check_zero_pattern(l)) {
            c.expect(r.ok, || format!("l = {l}: zeros at {:?}, expected {:?}", r.zero_degrees, r.expected));
        }
    }
    c
}

pub fn check_folds() -> CheckOutcome {
    let mut c = CheckOutcome::new("9", "diagram folds");
    let mut folds: Vec<(SimpleType, u32)> = (2..=9).map(|n| (SimpleType::new(Series::A, n).unwrap(), 2)).collect();
    folds.extend((4..=8).map(|n| (SimpleType::new(Series::D, n).unwrap(), 2)));
    folds.push((ty("E6"), 2));
    folds.push((ty("D4"), 3));
    for (t, k) in folds {
        let label = format!("{t}^({k})");
        let Some(r) = c.absorb(&label, verify_fold_structure(t, k)) else { continue };
        let want = if t.series == Series::A && t.rank % 2 == 0 { 1 } else { 0 };
        c.expect(r.highest_root_residue == want, || format!("{label}: E_delta in residue {}", r.highest_root_residue));
        c.expect(r.orbit_matrix_nonsingular, || format!("{label}: orbit matrix singular"));
        for e in r.eigenspaces.iter().filter(|e| e.residue != 0) {
            c.expect(e.irreducible && e.generated_dim == e.dim, || {
                format!("{label}: residue {} generates {} of {}", e.residue, e.generated_dim, e.dim)
            });
        }
        if k == 3 {
            let dims: Vec<usize> = r.eigenspaces.iter().map(|e| e.dim).collect();
            c.expect(dims == [14, 7, 7], || format!("{label}: eigenspace dimensions {dims:?}"));
            c.expect(r.twin_weights_equal == Some(true), || format!("{label}: residues 1 and 2 differ"));
        }
    }
    c
}

pub fn check_number_fields(max_n: usize) -> CheckOutcome {
    let mut c = CheckOutcome::new("10", "two non-real conjugates");
    for n in 2..=max_n {
        let (k, ks) = default_params(n);
        let label = format!("degree {n}");
        let Some(r) = c.absorb(&label, construct_two_nonreal(n, k, &ks)) else { continue };
        c.expect(r.ok(), || format!("{label}: {} real roots, Eisenstein {}", r.real_roots, r.eisenstein_at_2));
        // re-verify from the polynomial alone
        let Some(real) = c.absorb(&label, sturm_count(&r.h, None, None)) else { continue };
        c.expect(real == n - 2, || format!("{label}: Sturm count {real}"));
        let Some(eis) = c.absorb(&label, eisenstein(&r.h, 2)) else { continue };
        c.expect(eis, || format!("{label}: not Eisenstein at 2"));
        c.expect(r.h.degree() == Some(n) && r.epsilon.as_ref().is_none_or(|e| *e > BigRational::zero()), || {
            format!("{label}: malformed certificate")
        });
    }
    c
}

/// Extra checks beyond the acceptance list.
pub fn check_extras() -> CheckOutcome {
    let mut c = CheckOutcome::new("x", "compact forms and cycle degrees");
    for t in types_up_to_rank(6) {
        let r = build_root_system(t).and_then(|rs| structure_constants(&rs)).and_then(|sc| verify_compact_form(&sc));
        c.absorb(&format!("{t} compact form"), r);
        c.checked += 1;
    }
    if let Some(r) = c.absorb("F4 cycle degrees", th2_report(ty("F4"))) {
        let degrees: Vec<(usize, usize)> = r.rows.iter().map(|x| (x.degree, x.dual_degree)).collect();
        c.expect(degrees.contains(&(16, 36)), || format!("F4 cycle degrees {degrees:?}"));
        for row in r.rows.iter().filter(|x| x.degree == 16) {
            c.expect(row.support.labels() == ["{psi1}", "{psi4}"] && row.dual_agrees, || {
                format!("F4 degree 16: {:?}", row.support.labels())
            });
        }
    }
    c
}

/// Every check run by `verify-all`, in order.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        check_exponents(),
        check_chevalley(8),
        check_fixed_subalgebras(),
        check_dimensions(),
        check_orientation_table(),
        check_poincare(),
        check_supports(),
        check_polynomial_identities(),
        check_folds(),
        check_number_fields(10),
        check_extras(),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

pub fn summarize(outcomes: &[CheckOutcome]) -> Summary {
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    Summary { passed, failed: outcomes.len() - passed }
}
