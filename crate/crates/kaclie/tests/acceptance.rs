//! The ten acceptance criteria, each recomputed exactly and compared against
//! the golden fixtures on disk. Prints one line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use serde_json::Value;

use kaclie::chevalley::{structure_constants, verify_chevalley};
use kaclie::cohomology::{
    check_degree_identity, check_diagram_invariance, check_zero_pattern, coefficient_support, poincare_levi,
};
use kaclie::kacauto::{
    affine_diagram, eigenspace_dimensions, fixed_subalgebra, kac_automorphism, verify_fold_structure, KacCoordinates,
};
use kaclie::numfield::{construct_two_nonreal, default_params, eisenstein, isolate_real_roots, sturm_count};
use kaclie::poly::IntPoly;
use kaclie::rootsys::{build_root_system, Series, SimpleType};
use kaclie::symspace::{condition_or, involution_of_type};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixture(name: &str) -> Vec<Value> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn ty(s: &str) -> SimpleType {
    SimpleType::parse(s).unwrap()
}

fn uints(v: &Value) -> Vec<u64> {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

fn usizes(v: &Value) -> Vec<usize> {
    uints(v).into_iter().map(|x| x as usize).collect()
}

fn all_types(max_rank: usize) -> Vec<SimpleType> {
    let mut v = Vec::new();
    for s in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G] {
        for r in 1..=max_rank {
            if let Ok(t) = SimpleType::new(s, r) {
                v.push(t);
            }
        }
    }
    v
}

fn finish(checked: usize, failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(format!("{checked} checks"))
    } else {
        Err(format!("{} of {checked} failed; first: {}", failures.len(), failures[0]))
    }
}

fn exponents() -> Outcome {
    let rows = fixture("exponents.json");
    let mut bad = Vec::new();
    for r in &rows {
        let t = ty(r["type"].as_str().unwrap());
        let want: Vec<u32> = uints(&r["exponents"]).into_iter().map(|x| x as u32).collect();
        if t.exponents() != want {
            bad.push(format!("{t}: {:?}", t.exponents()));
        }
        // sum of exponents = number of positive roots
        if want.iter().map(|&d| d as usize).sum::<usize>() != t.num_positive_roots() {
            bad.push(format!("{t}: exponent sum"));
        }
    }
    finish(rows.len(), bad)
}

fn chevalley() -> Outcome {
    let mut bad = Vec::new();
    let types = all_types(8);
    let mut triples = 0;
    for &t in &types {
        let sc = structure_constants(&build_root_system(t).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let r = verify_chevalley(&sc);
        triples += r.triples_checked;
        if !r.ok() {
            bad.push(format!("{t}: {:?}", r.first_failure));
        }
    }
    if !types.contains(&ty("E8")) {
        bad.push("E8 missing".into());
    }
    finish(types.len(), bad).map(|s| format!("{s}, {triples} Jacobi triples"))
}

fn fixed_ok(d: &kaclie::kacauto::AffineDiagram, s: &[u64], center: usize, factors: &[String]) -> Result<(), String> {
    let kc = KacCoordinates::new(d, s).map_err(|e| e.to_string())?;
    let l = fixed_subalgebra(&kc).map_err(|e| e.to_string())?;
    let mut got: Vec<String> = l.sorted_factors().iter().map(|t| t.to_string()).collect();
    got.sort();
    let mut want = factors.to_vec();
    want.sort();
    if l.center_dim != center || got != want {
        return Err(format!("{s:?}: {} vs T{center}+{want:?}", l.describe()));
    }
    let e = eigenspace_dimensions(&kac_automorphism(&kc).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    if e[&0] != l.dim() || e.values().sum::<usize>() != d.root_system().ty.dim() {
        return Err(format!("{s:?}: eigenspaces {e:?}, fixed dim {}", l.dim()));
    }
    Ok(())
}

fn fixed_subalgebras() -> Outcome {
    let rows = fixture("or_table.json");
    let mut bad = Vec::new();
    for r in &rows {
        let d = affine_diagram(ty(r["algebra"].as_str().unwrap()), r["k"].as_u64().unwrap() as u32)
            .map_err(|e| e.to_string())?;
        let f = &r["fixed"];
        let factors: Vec<String> =
            f["factors"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
        if let Err(e) = fixed_ok(&d, &uints(&r["coords"]), f["center"].as_u64().unwrap() as usize, &factors) {
            bad.push(format!("{}: {e}", r["algebra"]));
        }
    }
    // named identifications
    let named: Vec<(&str, u32, Vec<u64>, &str)> = vec![
        ("A5", 2, vec![1, 0, 0, 0], "C3"),
        ("A7", 2, vec![1, 0, 0, 0, 0], "C4"),
        ("A4", 2, vec![1, 0, 0], "B2"),
        ("A6", 2, vec![1, 0, 0, 0], "B3"),
        ("E6", 2, vec![1, 0, 0, 0, 0], "F4"),
        ("E6", 2, vec![0, 1, 0, 0, 0], "C4"),
        ("D4", 3, vec![1, 0, 0], "G2"),
    ];
    for (t, k, s, want) in &named {
        let d = affine_diagram(ty(t), *k).map_err(|e| e.to_string())?;
        if let Err(e) = fixed_ok(&d, s, 0, &[want.to_string()]) {
            bad.push(format!("{t}^({k}): {e}"));
        }
    }
    finish(rows.len() + named.len(), bad)
}

fn dimensions() -> Outcome {
    let rows = fixture("dims_table.json");
    let mut bad = Vec::new();
    for r in &rows {
        let inv = involution_of_type(
            ty(r["algebra"].as_str().unwrap()),
            r["k"].as_u64().unwrap() as u32,
            &uints(&r["coords"]),
        )
        .map_err(|e| e.to_string())?;
        let want = (r["dim_x_sigma"].as_u64().unwrap() as usize, r["dim_x_sigma_theta"].as_u64().unwrap() as usize);
        if (inv.dim_u0, inv.dim_u1) != want {
            bad.push(format!("{} {}: {}/{}", r["algebra"], r["coords"], inv.dim_u0, inv.dim_u1));
        }
    }
    finish(rows.len(), bad)
}

fn orientation() -> Outcome {
    let rows = fixture("or_table.json");
    let mut bad = Vec::new();
    let mut residues = BTreeSet::new();
    for r in &rows {
        let t = ty(r["algebra"].as_str().unwrap());
        let inv =
            involution_of_type(t, r["k"].as_u64().unwrap() as u32, &uints(&r["coords"])).map_err(|e| e.to_string())?;
        let v = condition_or(&inv).map_err(|e| e.to_string())?;
        if v.satisfied != r["satisfied"].as_bool().unwrap() {
            bad.push(format!("{t} {}: got {}", r["coords"], v.satisfied));
        }
        residues.insert((t.series.letter(), t.rank % 4));
    }
    for s in ['A', 'B', 'C', 'D'] {
        if (0..4).any(|m| !residues.contains(&(s, m))) {
            bad.push(format!("series {s} misses a residue class mod 4"));
        }
    }
    finish(rows.len(), bad)
}

fn poincare() -> Outcome {
    let rows = fixture("poincare.json");
    let mut bad = Vec::new();
    for r in &rows {
        let t = ty(r["type"].as_str().unwrap());
        let rs = build_root_system(t).map_err(|e| e.to_string())?;
        let phi: Vec<usize> = usizes(&r["levi"]).into_iter().map(|i| i - 1).collect();
        let got = poincare_levi(&rs, &phi).map_err(|e| e.to_string())?;
        let want = usizes(&r["degrees"])
            .into_iter()
            .fold(IntPoly::monomial(r["shift"].as_u64().unwrap() as usize), |acc, d| &acc * &IntPoly::one_plus(d));
        if got != want {
            bad.push(format!("{t} {:?}: {got}", r["levi"]));
        }
    }
    if rows.len() < 40 {
        bad.push(format!("only {} polynomials", rows.len()));
    }
    finish(rows.len(), bad)
}

fn supports() -> Outcome {
    let rows = fixture("supports.json");
    let mut bad = Vec::new();
    for r in &rows {
        let t = ty(r["type"].as_str().unwrap());
        let rs = build_root_system(t).map_err(|e| e.to_string())?;
        let k = r["degree"].as_u64().unwrap() as usize;
        let got = coefficient_support(&rs, k).map_err(|e| e.to_string())?;
        let want: Vec<Vec<usize>> =
            r["subsets"].as_array().unwrap().iter().map(|s| usizes(s).into_iter().map(|i| i - 1).collect()).collect();
        if got.subsets != want {
            bad.push(format!("{t} degree {k}: {:?}", got.labels()));
        }
    }
    finish(rows.len(), bad)
}

fn polynomial_identities() -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    let mut inv_types: Vec<SimpleType> = (1..=7).map(|r| SimpleType::new(Series::A, r).unwrap()).collect();
    inv_types.extend((4..=7).map(|r| SimpleType::new(Series::D, r).unwrap()));
    inv_types.push(ty("E6"));
    for t in inv_types {
        let r = check_diagram_invariance(&build_root_system(t).unwrap()).map_err(|e| e.to_string())?;
        n += r.subsets_checked;
        if !r.failures.is_empty() {
            bad.push(format!("{t} invariance: {:?}", r.failures[0]));
        }
    }
    for t in all_types(8) {
        let r = check_degree_identity(&build_root_system(t).unwrap()).map_err(|e| e.to_string())?;
        n += r.pairs_checked;
        if !r.ok() {
            bad.push(format!("{t} degree identity: {r:?}"));
        }
    }
    for l in 1..=20 {
        let r = check_zero_pattern(l).map_err(|e| e.to_string())?;
        n += 1;
        if !r.ok {
            bad.push(format!("l = {l}: {:?}", r.zero_degrees));
        }
    }
    finish(n, bad)
}

fn folds() -> Outcome {
    let mut bad = Vec::new();
    let mut cases: Vec<(SimpleType, u32)> = (2..=9).map(|r| (SimpleType::new(Series::A, r).unwrap(), 2)).collect();
    cases.extend((4..=8).map(|r| (SimpleType::new(Series::D, r).unwrap(), 2)));
    cases.push((ty("E6"), 2));
    cases.push((ty("D4"), 3));
    for &(t, k) in &cases {
        let r = verify_fold_structure(t, k).map_err(|e| e.to_string())?;
        let a_even = t.series == Series::A && t.rank % 2 == 0;
        if (r.highest_root_residue == 1) != a_even {
            bad.push(format!("{t}^({k}): highest root residue {}", r.highest_root_residue));
        }
        if !r.orbit_matrix_nonsingular {
            bad.push(format!("{t}^({k}): singular orbit matrix"));
        }
        for e in &r.eigenspaces {
            if e.residue != 0 && !(e.irreducible && e.generated_dim == e.dim) {
                bad.push(format!("{t}^({k}): residue {} not generated", e.residue));
            }
        }
        if k == 3 {
            let dims: Vec<(u32, usize)> = r.eigenspaces.iter().map(|e| (e.residue, e.dim)).collect();
            if dims != [(0, 14), (1, 7), (2, 7)] {
                bad.push(format!("D4^(3) eigenspaces {dims:?}"));
            }
        }
    }
    finish(cases.len(), bad)
}

fn number_fields() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=10 {
        let (k, ks) = default_params(n);
        let r = construct_two_nonreal(n, k, &ks).map_err(|e| e.to_string())?;
        let real = sturm_count(&r.h, None, None).map_err(|e| e.to_string())?;
        let isolated = isolate_real_roots(&r.h).map_err(|e| e.to_string())?.len();
        let eis = eisenstein(&r.h, 2).map_err(|e| e.to_string())?;
        if r.h.degree() != Some(n) || real != n - 2 || isolated != n - 2 || !eis || r.real_roots != real {
            bad.push(format!("degree {n}: h = {}, real {real}, Eisenstein {eis}", r.h));
        }
    }
    finish(9, bad)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("exponents", exponents),
        ("chevalley soundness", chevalley),
        ("fixed subalgebras", fixed_subalgebras),
        ("dimension table", dimensions),
        ("orientation condition", orientation),
        ("poincare polynomials", poincare),
        ("coefficient supports", supports),
        ("polynomial identities", polynomial_identities),
        ("fold structure", folds),
        ("two non-real conjugates", number_fields),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}, {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({detail}, {secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
