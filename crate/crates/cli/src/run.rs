use std::fmt::Write as _;
use std::path::Path;

use cartan_core::genfunc::{named_series, SeriesName, DEFAULT_ORDER};
use cartan_core::invariants::{
    block_invariant_table, block_invariants, full_invariant_table, full_invariants, matrix_b_ell,
    matrix_x_a, matrix_x_ell, verify_conjecture_snf, verify_determinants, verify_kor_multiset,
    verify_reduction, verify_series, verify_splitting, DegreeRow, InvariantMultiset, SizeLimits,
    Status, VerificationReport,
};
use cartan_core::linalg::smith_normal_form;
use cartan_core::symfun::transition_p_to_m;
use cartan_core::{IntMatrix, IntSeries};
use serde_json::{json, Value};

use crate::cli::{
    Cli, Command, Format, InvariantsArgs, MatrixArgs, MatrixKind, SeedArgs, SeriesArgs, Suite,
    VerifyArgs,
};

/// Something that stops a command before it produces a result.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Core(cartan_core::Error),
    Io(std::io::Error),
}

impl From<cartan_core::Error> for Failure {
    fn from(e: cartan_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Core(e) => write!(f, "error: {e}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

pub struct Outcome {
    pub text: String,
    pub exit: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, exit: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let limits = SizeLimits {
        max_partitions: cli.max_partitions,
        max_multipartitions: cli.max_multipartitions,
    };
    match &cli.command {
        Command::Invariants(args) => invariants(args, cli.format),
        Command::Verify(args) => verify(args, cli, &limits),
        Command::Matrix(args) => matrix(args, cli.format, &limits),
        Command::Series(args) => series(args, cli.format, cli.order.unwrap_or(DEFAULT_ORDER)),
        Command::SeedTables(args) => seed_tables(args),
    }
}

fn require<T: Copy>(value: Option<T>, flag: &str, what: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{what} needs --{flag}")))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn entries_json(ms: &InvariantMultiset) -> Value {
    Value::Array(
        ms.entries()
            .map(|(v, m, d)| json!({"value": v.to_string(), "multiplicity": m.to_string(), "degree": d}))
            .collect(),
    )
}

fn rows_json(rows: &[DegreeRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "degree": r.degree,
                    "values": r.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "terms": r.terms.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                    "multiplicity": r.multiplicity.to_string(),
                })
            })
            .collect(),
    )
}

fn invariants(args: &InvariantsArgs, format: Format) -> Result<Outcome, Failure> {
    let ell = args.ell;
    let (title, params, rows, ms) = match (args.n, args.weight) {
        (Some(n), None) => (
            format!("C_{ell}({n})"),
            json!({"ell": ell, "n": n}),
            full_invariant_table(ell, n)?,
            full_invariants(ell, n)?,
        ),
        (None, Some(w)) => (
            format!("block of weight {w}, ell = {ell}"),
            json!({"ell": ell, "weight": w}),
            block_invariant_table(ell, w)?,
            block_invariants(ell, w)?,
        ),
        _ => {
            return Err(Failure::Usage(
                "give exactly one of --n and --weight".into(),
            ))
        }
    };
    let rows: Vec<DegreeRow> = rows
        .into_iter()
        .filter(|r| r.multiplicity.sign() != num_bigint::Sign::NoSign)
        .collect();
    let text = match format {
        Format::Json => pretty(&json!({
            "command": "invariants",
            "params": params,
            "entries": entries_json(&ms),
            "rows": rows_json(&rows),
            "report": Value::Null,
        })),
        Format::Table => {
            let mut s = format!("graded invariant factors of {title}\n");
            s.push_str("degree\tinvariants\tmultiplicity\n");
            for r in &rows {
                let _ = writeln!(s, "{r}");
            }
            let _ = writeln!(s, "total: {}", ms.total());
            let _ = writeln!(s, "{ms}");
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn degrees(args: &VerifyArgs, default_max: usize) -> Vec<usize> {
    match args.d {
        Some(d) => vec![d],
        None => (0..=args.dmax.unwrap_or(default_max)).collect(),
    }
}

fn run_suite(
    suite: Suite,
    args: &VerifyArgs,
    order: usize,
    limits: &SizeLimits,
) -> Result<Vec<VerificationReport>, Failure> {
    let what = "this suite";
    Ok(match suite {
        Suite::Series => vec![verify_series(args.lo, args.hi, order)?],
        Suite::Det => {
            let ell = require(args.ell, "ell", what)?;
            let dmax = args.d.or(args.dmax).unwrap_or(6);
            vec![verify_determinants(ell, dmax, limits)?]
        }
        Suite::Snf => {
            let ell = require(args.ell, "ell", what)?;
            degrees(args, 4)
                .into_iter()
                .map(|d| verify_conjecture_snf(ell, d, limits))
                .collect::<Result<_, _>>()?
        }
        Suite::Splitting => {
            let a = require(args.a, "a", what)?;
            let b = require(args.b, "b", what)?;
            degrees(args, 4)
                .into_iter()
                .map(|d| verify_splitting(a, b, d, limits))
                .collect::<Result<_, _>>()?
        }
        Suite::Reduction => {
            let ell = require(args.ell, "ell", what)?;
            degrees(args, 2)
                .into_iter()
                .map(|d| verify_reduction(ell, d, limits))
                .collect::<Result<_, _>>()?
        }
        Suite::Kor => {
            let ell = require(args.ell, "ell", what)?;
            let n = require(args.n, "n", what)?;
            vec![verify_kor_multiset(ell, n)?]
        }
        Suite::All => {
            let mut out = vec![verify_series(2, 12, order)?];
            for ell in [2, 3, 4, 6] {
                out.push(verify_determinants(ell, 6, limits)?);
            }
            for ell in [2, 3, 4, 5, 6, 8, 9] {
                for d in 0..=5 {
                    out.push(verify_conjecture_snf(ell, d, limits)?);
                }
            }
            for d in 0..=5 {
                out.push(verify_splitting(2, 3, d, limits)?);
            }
            for (ell, dmax) in [(2, 3), (3, 3), (4, 2)] {
                for d in 0..=dmax {
                    out.push(verify_reduction(ell, d, limits)?);
                }
            }
            for ell in [4, 6] {
                for n in [ell as usize * 2, 18] {
                    out.push(verify_kor_multiset(ell, n)?);
                }
            }
            out
        }
    })
}

/// Worst status first: a proven claim that fails, then an unproven one.
fn aggregate(reports: &[VerificationReport]) -> Status {
    let has = |s: Status| reports.iter().any(|r| r.status == s);
    if has(Status::Refuted) {
        Status::Refuted
    } else if has(Status::UnprovenMismatch) {
        Status::UnprovenMismatch
    } else if has(Status::UnprovenMatch) {
        Status::UnprovenMatch
    } else {
        Status::Verified
    }
}

fn exit_code(status: Status) -> u8 {
    match status {
        Status::Verified | Status::UnprovenMatch => 0,
        Status::Refuted => 2,
        Status::UnprovenMismatch => 3,
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Series => "series",
        Suite::Det => "det",
        Suite::Snf => "snf",
        Suite::Splitting => "splitting",
        Suite::Reduction => "reduction",
        Suite::Kor => "kor",
        Suite::All => "all",
    }
}

fn report_json(r: &VerificationReport) -> Value {
    let params: serde_json::Map<String, Value> = r
        .params
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({
        "claim": r.claim.to_string(),
        "params": params,
        "status": r.status.to_string(),
        "comparisons": r.comparisons.iter().map(|c| json!({
            "label": c.label,
            "left": c.left,
            "right": c.right,
            "holds": c.holds,
        })).collect::<Vec<_>>(),
    })
}

fn verify(args: &VerifyArgs, cli: &Cli, limits: &SizeLimits) -> Result<Outcome, Failure> {
    let order = cli.order.unwrap_or(60);
    let reports = run_suite(args.suite, args, order, limits)?;
    let status = aggregate(&reports);
    let name = suite_name(args.suite);
    let text = match cli.format {
        Format::Json => pretty(&json!({
            "command": "verify",
            "params": {
                "suite": name,
                "ell": args.ell, "n": args.n, "d": args.d, "dmax": args.dmax,
                "a": args.a, "b": args.b, "order": order,
            },
            "entries": [],
            "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            "report": {"claim": name, "status": status.to_string()},
        })),
        Format::Table => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{r}");
                for c in &r.comparisons {
                    let mark = if c.holds { "ok" } else { "FAIL" };
                    let rel = if c.holds { "=" } else { "≠" };
                    let _ = writeln!(s, "  [{mark}] {}: {} {rel} {}", c.label, c.left, c.right);
                }
            }
            let mismatches: Vec<&VerificationReport> = reports
                .iter()
                .filter(|r| r.status == Status::UnprovenMismatch)
                .collect();
            if !mismatches.is_empty() {
                s.push_str("unproven mismatches:\n");
                for r in mismatches {
                    let _ = writeln!(s, "  {r}");
                }
            }
            let _ = writeln!(s, "{name}: {status}");
            s
        }
    };
    Ok(Outcome {
        text,
        exit: exit_code(status),
    })
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

fn matrix(args: &MatrixArgs, format: Format, limits: &SizeLimits) -> Result<Outcome, Failure> {
    let need_ell = || require(args.ell, "ell", "this matrix");
    let (name, m) = match args.kind {
        MatrixKind::XEll => ("X_ell", matrix_x_ell(need_ell()?, args.d, limits)?),
        MatrixKind::XA => ("X_A", matrix_x_a(need_ell()?, args.d, limits)?),
        MatrixKind::BEll => {
            let ell = need_ell()?;
            limits.check_partitions(args.d)?;
            ("B_ell", matrix_b_ell(ell, args.d)?)
        }
        MatrixKind::MPm => {
            limits.check_partitions(args.d)?;
            ("M_pm", transition_p_to_m(args.d).matrix)
        }
    };
    let params = json!({"kind": name, "ell": args.ell, "d": args.d});
    let text = if args.snf {
        let factors: Vec<String> = smith_normal_form(&m, false)
            .into_factors()
            .iter()
            .map(ToString::to_string)
            .collect();
        match format {
            Format::Json => pretty(&json!({
                "command": "matrix", "params": params, "entries": [], "snf": factors, "report": Value::Null,
            })),
            Format::Table => format!("{}\n", factors.join(", ")),
        }
    } else {
        match format {
            Format::Json => pretty(&json!({
                "command": "matrix", "params": params, "entries": [], "matrix": matrix_json(&m), "report": Value::Null,
            })),
            Format::Table => format!("{m}\n"),
        }
    };
    Ok(Outcome::ok(text))
}

fn series(args: &SeriesArgs, format: Format, order: usize) -> Result<Outcome, Failure> {
    let name: SeriesName = args.name.parse()?;
    let s: IntSeries = named_series(name, order)?;
    let text = match format {
        Format::Json => pretty(&json!({
            "command": "series",
            "params": {"name": args.name, "order": order},
            "entries": [],
            "coefficients": s.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "report": Value::Null,
        })),
        Format::Table => format!("{s}\n"),
    };
    Ok(Outcome::ok(text))
}

/// `<value> <multiplicity> <degree>` per line, ordered by degree then value.
pub fn golden_text(ms: &InvariantMultiset) -> String {
    let mut s = String::new();
    for (v, m, d) in ms.entries() {
        let d = d.map_or_else(|| "-".to_string(), |d| d.to_string());
        let _ = writeln!(s, "{v} {m} {d}");
    }
    s
}

/// File name and contents of every golden file.
pub fn golden_files() -> Result<Vec<(&'static str, String)>, Failure> {
    Ok(vec![
        ("block_4_2.txt", golden_text(&block_invariants(4, 2)?)),
        ("full_6_18.txt", golden_text(&full_invariants(6, 18)?)),
        ("full_6_24.txt", golden_text(&full_invariants(6, 24)?)),
        ("block_6_4.txt", golden_text(&block_invariants(6, 4)?)),
    ])
}

fn seed_tables(args: &SeedArgs) -> Result<Outcome, Failure> {
    write_golden(&args.dir)?;
    Ok(Outcome::ok(format!(
        "wrote golden files to {}\n",
        args.dir.display()
    )))
}

fn write_golden(dir: &Path) -> Result<(), Failure> {
    std::fs::create_dir_all(dir)?;
    for (name, body) in golden_files()? {
        std::fs::write(dir.join(name), body)?;
    }
    Ok(())
}
