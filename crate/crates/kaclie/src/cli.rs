//! Command-line front end. Data goes to `out`, diagnostics to `err`; the
//! return value is the process exit code (0 ok, 1 usage or validation
//! error, 2 `verify-all` mismatch).

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chevalley::{structure_constants, verify_chevalley};
use crate::cohomology::{coefficient_support, levi_subset, poincare_factored, subset_label, th2_report};
use crate::error::{Error, Result};
use crate::kacauto::{affine_diagram, eigenspace_dimensions, fixed_subalgebra, kac_automorphism, KacCoordinates};
use crate::numfield::{construct_two_nonreal, default_params, primitive_shift, RatPoly};
use crate::rootsys::{build_root_system, SimpleType};
use crate::symspace::{condition_or, involution_of_type, or_table, OrRow};
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "kaclie",
    version,
    about = "Exact computations with simple Lie algebras, their involutions and Poincaré polynomials"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// `--type E6`, or `--type D --rank 6` (a trailing `n` is accepted: `Dn`).
#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long)]
    pub rank: Option<usize>,
}

impl TypeArgs {
    pub fn resolve(&self) -> Result<SimpleType> {
        let t = self.ty.trim();
        let t = t.strip_suffix(['n', 'N']).unwrap_or(t);
        let has_rank = t.chars().skip(1).any(|c| c.is_ascii_digit());
        match (has_rank, self.rank) {
            (true, None) => SimpleType::parse(t),
            (true, Some(r)) => {
                let parsed = SimpleType::parse(t)?;
                if parsed.rank != r {
                    return Err(Error::Domain(format!("--type {t} contradicts --rank {r}")));
                }
                Ok(parsed)
            }
            (false, Some(r)) => SimpleType::parse(&format!("{t}{r}")),
            (false, None) => Err(Error::Domain(format!("--type {t} needs --rank"))),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan matrix and positive roots.
    Roots(TypeArgs),
    /// Chevalley structure constants; `--verify` checks them exhaustively.
    Chevalley {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        verify: bool,
    },
    /// Finite-order automorphisms from Kac coordinates.
    Kac {
        #[command(subcommand)]
        command: KacCommand,
    },
    /// Involutions and the orientation condition.
    Symspace {
        #[command(subcommand)]
        command: SymspaceCommand,
    },
    /// Poincaré polynomials of cohomological representations.
    Cohom {
        #[command(subcommand)]
        command: CohomCommand,
    },
    /// Real-root constructions over Q.
    Numfield {
        #[command(subcommand)]
        command: NumfieldCommand,
    },
    /// Regenerates the orientation or dimension table.
    Tables {
        #[arg(long, value_enum, default_value = "or")]
        which: Which,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Runs every golden-fixture check; exits 2 on a mismatch.
    VerifyAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Or,
    Dims,
}

#[derive(Args, Debug, Clone)]
pub struct KacArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Order of the diagram automorphism (1, 2 or 3).
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Kac coordinates `s_0,...,s_n`.
    #[arg(long, alias = "coords", value_delimiter = ',', required = true)]
    pub s: Vec<u64>,
}

#[derive(Subcommand, Debug)]
pub enum KacCommand {
    /// Order, fixed subalgebra and eigenspace dimensions.
    Classify(KacArgs),
}

#[derive(Subcommand, Debug)]
pub enum SymspaceCommand {
    /// Decides the orientation condition for one involution.
    Or(KacArgs),
    /// Both tables.
    Tables {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CohomCommand {
    /// `P(Phi', t)` for a set of simple roots (1-based).
    Poincare {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_delimiter = ',', default_value = "")]
        levi: Vec<String>,
    },
    /// All `Phi'` whose polynomial has a nonzero `t^degree` coefficient.
    Support {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        degree: usize,
    },
    /// Cycle degrees of oriented involutions and the representations meeting them.
    Th2(TypeArgs),
}

#[derive(Subcommand, Debug)]
pub enum NumfieldCommand {
    /// `h = q (x^2 + k)(x - k_1)...(x - k_{n-2}) + 2`.
    TwoNonreal {
        #[arg(long)]
        degree: usize,
        /// `k,k_1,...,k_{n-2}`; defaults are used when omitted.
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<i64>>,
    },
    /// Simplest rational shift with a prescribed real-root sign pattern.
    Shift {
        /// Integer coefficients, constant term first.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<i64>,
        #[arg(long)]
        positive: usize,
        #[arg(long)]
        negative: usize,
    },
}

/// Output of one command: machine-readable JSON plus a text rendering.
struct Report {
    json: Value,
    text: String,
    /// Set by `verify-all` when a fixture comparison fails.
    mismatch: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Report {
        Report { json, text, mismatch: false }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let report = match dispatch(&cli.command, err) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let _ = match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report.json).unwrap()),
        Format::Text => write!(out, "{}", report.text),
    };
    if report.mismatch {
        2
    } else {
        0
    }
}

fn dispatch(cmd: &Command, err: &mut dyn Write) -> Result<Report> {
    Ok(match cmd {
        Command::Roots(t) => roots(t.resolve()?)?,
        Command::Chevalley { ty, verify } => chevalley(ty.resolve()?, *verify)?,
        Command::Kac { command: KacCommand::Classify(a) } => kac_classify(a)?,
        Command::Symspace { command: SymspaceCommand::Or(a) } => symspace_or(a)?,
        Command::Symspace { command: SymspaceCommand::Tables { max_n } } => {
            let rows = or_table(*max_n)?;
            let or = table(&rows, Which::Or);
            let dims = table(&rows, Which::Dims);
            Report::new(json!({"or": or.json, "dims": dims.json}), format!("{}\n{}", or.text, dims.text))
        }
        Command::Cohom { command } => cohom(command)?,
        Command::Numfield { command } => numfield(command)?,
        Command::Tables { which, max_n } => table(&or_table(*max_n)?, *which),
        Command::VerifyAll => verify_all(err),
    })
}

fn roots(ty: SimpleType) -> Result<Report> {
    let rs = build_root_system(ty)?;
    let pos = rs.positive_roots();
    let mut text = format!("{ty}: rank {}, {} positive roots, dim {}\ncartan:\n", ty.rank, pos.len(), ty.dim());
    for row in &rs.cartan {
        text += &format!("  {row:?}\n");
    }
    text += "positive roots:\n";
    for (i, r) in pos.iter().enumerate() {
        text += &format!("  {i:>3} height {:>2}  {r:?}\n", rs.height(i));
    }
    Ok(Report {
        mismatch: false,
        json: json!({"type": ty, "cartan": rs.cartan, "positive_roots": pos, "labeling_note": "bourbaki"}),
        text,
    })
}

fn chevalley(ty: SimpleType, verify: bool) -> Result<Report> {
    let rs = build_root_system(ty)?;
    let sc = structure_constants(&rs)?;
    if verify {
        let rep = verify_chevalley(&sc);
        let text = format!(
            "{ty}: {} pairs, {} triples; magnitudes {}, antisymmetry {}, jacobi {}\n",
            rep.pairs_checked,
            rep.triples_checked,
            ok(rep.magnitudes_ok),
            ok(rep.antisymmetry_ok),
            ok(rep.jacobi_ok)
        );
        if !rep.ok() {
            return Err(Error::Validation(rep.first_failure.unwrap_or_else(|| "Chevalley check failed".into())));
        }
        return Ok(Report::new(to_json(&rep), text));
    }
    let nr = rs.roots().len();
    let mut entries = Vec::new();
    let mut text = format!("{ty}: N(a, b) for root indices with a + b a root\n");
    for a in 0..nr {
        for b in 0..nr {
            if let Some(c) = sc.sum(a, b) {
                let n = sc.n(a, b);
                entries.push(json!({"a": a, "b": b, "sum": c, "n": n}));
                text += &format!("  N({a},{b}) = {n:>2}  -> {c}\n");
            }
        }
    }
    Ok(Report::new(json!({"type": ty, "roots": rs.roots(), "n_table": entries}), text))
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn kac_coords(a: &KacArgs) -> Result<KacCoordinates> {
    let d = affine_diagram(a.ty.resolve()?, a.k)?;
    KacCoordinates::new(&d, &a.s)
}

fn kac_classify(a: &KacArgs) -> Result<Report> {
    let c = kac_coords(a)?;
    let auto = kac_automorphism(&c)?;
    let l = fixed_subalgebra(&c)?;
    let e = eigenspace_dimensions(&auto)?;
    let base = c.diagram.root_system().ty;
    let text = format!(
        "{base}{}: order {}, fixed subalgebra {} (dim {}), eigenspaces {}\n",
        c.label(),
        auto.order(),
        l.describe(),
        l.dim(),
        e.iter().map(|(j, d)| format!("{j}:{d}")).collect::<Vec<_>>().join(" ")
    );
    Ok(Report {
        mismatch: false,
        json: json!({
            "type": base, "coords": c.label(), "m": c.m, "order": auto.order(),
            "fixed_subalgebra": l.describe(), "fixed": l, "eigenspace_dims": e,
        }),
        text,
    })
}

fn symspace_or(a: &KacArgs) -> Result<Report> {
    let inv = involution_of_type(a.ty.resolve()?, a.k, &a.s)?;
    let v = condition_or(&inv)?;
    let text = format!(
        "{}{}: {} / {}; dims {}/{}; fixed {}; condition {}{}\n",
        inv.diagram().base,
        inv.coords().label(),
        inv.names.0,
        inv.names.1,
        inv.dim_u0,
        inv.dim_u1,
        inv.levi.describe(),
        if v.satisfied { "satisfied" } else { "fails" },
        v.shortcut.as_ref().map(|s| format!(" ({s})")).unwrap_or_default()
    );
    Ok(Report {
        mismatch: false,
        json: json!({
            "type": inv.diagram().base, "coords": inv.coords().label(),
            "x_sigma": inv.names.0, "x_sigma_theta": inv.names.1,
            "dim_u0": inv.dim_u0, "dim_u1": inv.dim_u1, "fixed": inv.levi.describe(),
            "verdict": v,
        }),
        text,
    })
}

fn table(rows: &[OrRow], which: Which) -> Report {
    match which {
        Which::Or => {
            let mut text = String::from("algebra  kac type            symmetric pair                          or\n");
            for r in rows {
                text += &format!(
                    "{:<8} {:<19} {:<39} {}\n",
                    r.algebra,
                    r.label,
                    r.x_sigma_theta,
                    if r.satisfied { "yes" } else { "no" }
                );
            }
            Report::new(to_json(&rows), text)
        }
        Which::Dims => {
            let sat: Vec<&OrRow> = rows.iter().filter(|r| r.satisfied).collect();
            let json: Vec<Value> = sat
                .iter()
                .map(|r| {
                    json!({"algebra": r.algebra, "k": r.k, "coords": r.coords, "x_sigma": r.x_sigma,
                        "x_sigma_theta": r.x_sigma_theta, "dim_x_sigma": r.dim_u0, "dim_x_sigma_theta": r.dim_u1})
                })
                .collect();
            let mut text = String::from("algebra  kac type            dim X(s)  dim X(st)\n");
            for r in sat {
                text += &format!("{:<8} {:<19} {:>8}  {:>9}\n", r.algebra, r.label, r.dim_u0, r.dim_u1);
            }
            Report::new(Value::Array(json), text)
        }
    }
}

fn parse_levi(items: &[String], rank: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for s in items.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let i: usize = s.parse().map_err(|_| Error::Domain(format!("bad simple root index {s:?}")))?;
        if i == 0 || i > rank {
            return Err(Error::Domain(format!("simple root index {i} out of range 1..={rank}")));
        }
        out.push(i - 1);
    }
    Ok(out)
}

fn cohom(cmd: &CohomCommand) -> Result<Report> {
    match cmd {
        CohomCommand::Poincare { ty, levi } => {
            let t = ty.resolve()?;
            let rs = build_root_system(t)?;
            let phi = parse_levi(levi, t.rank)?;
            let l = levi_subset(&rs, &phi)?;
            let f = poincare_factored(&rs, &phi)?;
            let p = f.expand();
            Ok(Report {
                mismatch: false,
                text: format!("{t} {}: {f}\n  = {p}\n", subset_label(&l.phi_prime)),
                json: json!({
                    "type": t, "levi": subset_label(&l.phi_prime), "dim_nilradical": l.dim_nilradical,
                    "levi_factors": l.levi_factors, "factored": f.to_string(), "shift": f.shift,
                    "degrees": f.degrees, "coefficients": p,
                }),
            })
        }
        CohomCommand::Support { ty, degree } => {
            let t = ty.resolve()?;
            let s = coefficient_support(&build_root_system(t)?, *degree)?;
            Ok(Report {
                mismatch: false,
                text: format!("{t} degree {degree}: {}\n", s.labels().join(", ")),
                json: json!({"type": t, "degree": degree, "subsets": s.labels(), "trivial": s.trivial, "pruned": s.pruned}),
            })
        }
        CohomCommand::Th2(ty) => {
            let r = th2_report(ty.resolve()?)?;
            let mut text = format!("{} (dim {})\n", r.ty, r.dim);
            for row in &r.rows {
                text += &format!(
                    "  degrees {}/{} from {}: {}\n",
                    row.degree,
                    row.dual_degree,
                    row.sources.join(", "),
                    row.support.labels().join(", ")
                );
            }
            if let Some(n) = &r.note {
                text += &format!("  {n}\n");
            }
            Ok(Report::new(to_json(&r), text))
        }
    }
}

fn numfield(cmd: &NumfieldCommand) -> Result<Report> {
    match cmd {
        NumfieldCommand::TwoNonreal { degree, params } => {
            let (k, ks) = match params {
                Some(p) if !p.is_empty() => (p[0], p[1..].to_vec()),
                _ => default_params(*degree),
            };
            let r = construct_two_nonreal(*degree, k, &ks)?;
            let eps = r.epsilon.as_ref().map_or("none".to_string(), |e| e.to_string());
            let text = format!(
                "f = {}\nepsilon = {eps}, q = {}\nh = {}\nreal roots: {} of {}\nEisenstein at 2: {}\n",
                r.f,
                r.q,
                r.h,
                r.real_roots,
                r.degree,
                if r.eisenstein_at_2 { "yes" } else { "no" }
            );
            Ok(Report::new(to_json(&r), text))
        }
        NumfieldCommand::Shift { coeffs, positive, negative } => {
            let p = RatPoly::from_ints(coeffs);
            let r = primitive_shift(&p, *positive, *negative)?;
            let text = format!(
                "r = {}\np(x + r) = {}\npositive roots {}, negative roots {}\n",
                r.r, r.shifted, r.positive_roots, r.negative_roots
            );
            Ok(Report::new(to_json(&r), text))
        }
    }
}

fn verify_all(err: &mut dyn Write) -> Report {
    let outcomes = verify::run_all();
    let summary = verify::summarize(&outcomes);
    let mut text = String::new();
    for o in &outcomes {
        text +=
            &format!("[{}] {:<3} {} ({} checks)\n", if o.passed() { "PASS" } else { "FAIL" }, o.id, o.title, o.checked);
        for f in &o.failures {
            let _ = writeln!(err, "mismatch in {} {}: {f}", o.id, o.title);
        }
    }
    text += &format!("{} passed, {} failed\n", summary.passed, summary.failed);
    Report { mismatch: summary.failed > 0, json: json!({"checks": outcomes, "summary": summary}), text }
}
