//! Command-line front end: `barcodes`, `labelled` and `verify`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or input
//! error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{vr_filtration, DistanceMatrix, Filtration};
use crate::error::{Error, Result};
use crate::io::{
    element_to_json, parse_complex_filtration, parse_distance_csv, parse_labelled_json, parse_points_json, to_pretty_json,
    BarcodeJson,
};
use crate::labelled::{
    boundary_matrices, chain_condition_holds, classical_betti, classical_ranks, diag_relation_check, evaluate_chain,
    fraction_field_ranks, graded_slice, local_subcomplex, random_point_ranks, slice_iso_check, vanishing_vertices,
    EvaluationPoint, LabelledComplex, LocalWindow,
};
use crate::homology::{betti_numbers, BettiVector};
use crate::linalg::FieldKind;
use crate::persistence::{coverage_report, ph_barcode, prime_barcode, IdealKind};
use crate::svg::render_svg;
use crate::verify::{run_verify, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "persistent-ideals", version, about = "Persistent associated primes and labelled chain complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// SR-prime, edge-prime and persistent homology barcodes of a filtration.
    Barcodes(BarcodesArgs),
    /// Boundary matrices and equivalence checks for a labelled complex.
    Labelled(LabelledArgs),
    /// Seeded randomized theorem suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    DistCsv,
    ComplexJson,
    LabelledJson,
    PointsJson,
}

impl InputFormat {
    fn name(self) -> &'static str {
        match self {
            InputFormat::DistCsv => "dist-csv",
            InputFormat::ComplexJson => "complex-json",
            InputFormat::LabelledJson => "labelled-json",
            InputFormat::PointsJson => "points-json",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct BarcodesArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Defaults to dist-csv for `.csv` files.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    /// Highest homology dimension; Rips complexes are built one dimension higher.
    #[arg(long, default_value_t = 1)]
    pub max_dim: usize,
    #[arg(long, default_value = "f2")]
    pub field: FieldKind,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Also write barcodes.svg.
    #[arg(long)]
    pub svg: bool,
}

#[derive(Args, Debug, Clone)]
pub struct LabelledArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "labelled-json")]
    pub format: InputFormat,
    #[arg(long, default_value = "q")]
    pub field: FieldKind,
    /// Evaluation point as comma-separated rationals, e.g. `1,-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<EvaluationPoint>,
    /// Degree of the graded slice as comma-separated exponents.
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<u32>>,
    /// Atom names generating the multiplicative set of a local window.
    #[arg(long, value_delimiter = ',')]
    pub allowed_atoms: Option<Vec<String>>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Largest number of vertices in random instances.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=8))]
    pub max_n: u32,
    #[arg(long, default_value_t = 40)]
    pub trials: usize,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match cli.command {
        Command::Barcodes(a) => cmd_barcodes(&a).map(|o| (o.summary, o.passed)),
        Command::Labelled(a) => cmd_labelled(&a).map(|o| (o.summary, o.passed)),
        Command::Verify(a) => cmd_verify(&a).map(|r| (verify_summary(&r), r.passed)),
    };
    let outcome = outcome.map(|(lines, passed)| {
        for l in lines {
            say!("{l}");
        }
        passed
    });
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn verify_summary(report: &crate::verify::VerifyReport) -> Vec<String> {
    let mut out = Vec::new();
    for s in &report.suites {
        out.push(format!("{} {:<28} {} cases", if s.passed() { "PASS" } else { "FAIL" }, s.name, s.cases));
        if let Some(f) = &s.first_failure {
            out.push(format!("     first failure: {f}"));
        }
    }
    out
}

fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_output(dir: &Path, name: &str, content: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, content)?;
    Ok(path)
}

pub struct BarcodesOutcome {
    pub json: String,
    pub svg: Option<String>,
    /// No resurrected prime and, for metric input, full threshold coverage.
    pub passed: bool,
    /// Console lines.
    pub summary: Vec<String>,
}

/// Reads a filtration, computes the three barcodes and writes
/// `barcodes.json` (and `barcodes.svg` with `--svg`) into `--out`.
pub fn cmd_barcodes(args: &BarcodesArgs) -> Result<BarcodesOutcome> {
    let text = read_input(&args.input)?;
    let format = match args.format {
        Some(f) => f,
        None if args.input.extension().is_some_and(|e| e == "csv") => InputFormat::DistCsv,
        None => return Err(Error::Input("cannot infer --format from the file name".into())),
    };
    let (dist, filtration): (Option<DistanceMatrix>, Filtration) = match format {
        InputFormat::DistCsv | InputFormat::PointsJson => {
            let d = if format == InputFormat::DistCsv { parse_distance_csv(&text)? } else { parse_points_json(&text)? };
            let f = vr_filtration(&d, args.max_dim + 1)?;
            (Some(d), f)
        }
        InputFormat::ComplexJson => (None, parse_complex_filtration(&text)?),
        InputFormat::LabelledJson => return Err(Error::Input("labelled-json input belongs to the labelled command".into())),
    };
    let sr = prime_barcode(&filtration, IdealKind::Sr);
    let edge = prime_barcode(&filtration, IdealKind::Edge);
    let ph = ph_barcode(&filtration, args.field, args.max_dim)?;
    let single = sr.resurrected_primes().is_empty() && edge.resurrected_primes().is_empty();
    let coverage = dist.as_ref().map(|d| coverage_report(d, &sr));
    let barcodes = vec![BarcodeJson::from_primes(&sr), BarcodeJson::from_primes(&edge), BarcodeJson::from_ph(&ph)];
    let doc = json!({
        "input": { "format": format.name(), "n": filtration.n() },
        "field": args.field.to_string(),
        "max_dim": args.max_dim,
        "critical_parameters": filtration.params(),
        "barcodes": barcodes,
        "single_interval_per_prime": single,
        "coverage": coverage.as_ref().map(|c| json!({
            "pairs_checked": c.pairs_checked,
            "violations": c.violations.iter().map(|v| json!({"i": v.i, "j": v.j, "half_distance": v.half_distance})).collect::<Vec<_>>(),
        })),
    });
    let json_text = to_pretty_json(&doc)?;
    write_output(&args.out, "barcodes.json", &json_text)?;
    let svg = if args.svg {
        let s = render_svg(&barcodes);
        write_output(&args.out, "barcodes.svg", &s)?;
        Some(s)
    } else {
        None
    };
    let passed = single && coverage.as_ref().is_none_or(|c| c.is_clean());
    let mut summary: Vec<String> = barcodes.iter().map(|b| format!("{:<4} {} intervals", b.kind, b.intervals.len())).collect();
    if let Some(c) = &coverage {
        summary.push(format!("coverage: {}/{} half-distances are endpoints", c.pairs_checked - c.violations.len(), c.pairs_checked));
    }
    Ok(BarcodesOutcome { json: json_text, svg, passed, summary })
}

fn betti_json(b: &BettiVector) -> Value {
    json!({ "lowest_dim": b.lowest_dim(), "values": b.values() })
}

fn ranks_json(r: &[(isize, usize)]) -> Value {
    json!(r.iter().map(|(k, v)| json!({"dim": k, "rank": v})).collect::<Vec<_>>())
}

fn faces_json(faces: &[crate::complex::Face]) -> Value {
    json!(faces.iter().map(|f| f.vertices().to_vec()).collect::<Vec<_>>())
}

#[derive(Serialize)]
struct Verdict {
    name: &'static str,
    passed: bool,
}

pub struct LabelledOutcome {
    pub report: Value,
    pub passed: bool,
    pub summary: Vec<String>,
}

fn evaluation_json(lc: &LabelledComplex, point: &EvaluationPoint, field: FieldKind) -> Result<(Value, bool)> {
    let classical = classical_betti(lc, field);
    Ok(match evaluate_chain(lc, point, field) {
        Ok(chain) => {
            let betti = chain.betti();
            let ok = betti == classical;
            let maps: Vec<Value> = chain.maps.iter().map(|(k, m)| json!({"dim": k, "entries": m.to_strings()})).collect();
            (json!({"admissible": true, "maps": maps, "betti": betti_json(&betti), "classical_betti": betti_json(&classical), "equal": ok}), ok)
        }
        Err(Error::Inadmissible { vertices }) => (json!({"admissible": false, "vanishing_vertices": vertices}), true),
        Err(e) => return Err(e),
    })
}

/// Reads a labelled complex and writes `report.json` with its boundary
/// matrices and the results of every applicable check.
pub fn cmd_labelled(args: &LabelledArgs) -> Result<LabelledOutcome> {
    if args.format != InputFormat::LabelledJson {
        return Err(Error::Input("the labelled command reads labelled-json".into()));
    }
    let lc = parse_labelled_json(&read_input(&args.input)?)?;
    let atoms = lc.atoms();
    let bm = boundary_matrices(&lc);
    let mut verdicts = vec![
        Verdict { name: "chain_condition", passed: chain_condition_holds(&bm) },
        Verdict { name: "diagonal_relation", passed: diag_relation_check(&lc) },
    ];

    let bareiss = fraction_field_ranks(&lc)?;
    let classical = classical_ranks(&lc, FieldKind::Rational);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let sampled = random_point_ranks(&lc, &mut rng, 3)?;
    verdicts.push(Verdict { name: "fraction_field_ranks", passed: bareiss == classical });
    verdicts.push(Verdict { name: "random_point_ranks", passed: sampled == classical });

    let mut report = json!({
        "n": lc.complex().n(),
        "reduced": lc.is_reduced(),
        "classical": lc.is_classical(),
        "atoms": atoms.names(),
        "labels": lc.labels().iter().map(|l| atoms.format(l)).collect::<Vec<_>>(),
        "face_labels": lc.face_labels().iter().filter(|(f, _)| !f.is_empty()).map(|(f, m)| json!({
            "face": f.vertices(), "label": atoms.format(m), "factored": element_to_json(atoms, m)
        })).collect::<Vec<_>>(),
        "boundary": bm.maps.iter().map(|m| json!({
            "dim": m.dim,
            "rows": faces_json(&m.rows),
            "cols": faces_json(&m.cols),
            "entries": m.matrix.to_dense().into_iter().map(|row| row.into_iter()
                .map(|e| e.map_or_else(|| "0".to_string(), |e| lc.format_entry(&e))).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "fraction_field": {
            "bareiss_ranks": ranks_json(&bareiss),
            "classical_ranks": ranks_json(&classical),
            "random_point_ranks": ranks_json(&sampled),
            "seed": args.seed,
        },
    });

    if let Some(point) = &args.point {
        let (eval, ok) = evaluation_json(&lc, point, args.field)?;
        verdicts.push(Verdict { name: "evaluation", passed: ok });
        let vanishing = vanishing_vertices(&lc, point, FieldKind::Rational)?;
        report["evaluation"] = json!({ "point": point.coords().iter().map(ToString::to_string).collect::<Vec<_>>(), "field": args.field.to_string(), "result": eval });
        if !vanishing.is_empty() {
            let local = local_subcomplex(&lc, &LocalWindow::Point(point.clone()))?;
            let (eval, ok) = evaluation_json(&local.restricted, point, args.field)?;
            verdicts.push(Verdict { name: "local_evaluation", passed: ok });
            report["local_window"] = json!({
                "window": local.window.vertices(),
                "faces": faces_json(&local.restricted.complex().maximal_faces()),
                "evaluation": eval,
            });
        }
    }

    if let Some(names) = &args.allowed_atoms {
        let allowed = names
            .iter()
            .map(|n| atoms.names().iter().position(|a| a == n).ok_or_else(|| Error::Input(format!("unknown atom {n:?}"))))
            .collect::<Result<BTreeSet<usize>>>()?;
        let local = local_subcomplex(&lc, &LocalWindow::Atoms(allowed))?;
        let frac = fraction_field_ranks(&local.restricted)?;
        let classical = classical_ranks(&local.restricted, FieldKind::Rational);
        verdicts.push(Verdict { name: "local_fraction_field_ranks", passed: frac == classical });
        report["allowed_atoms_window"] = json!({
            "allowed": names,
            "window": local.window.vertices(),
            "faces": faces_json(&local.restricted.complex().maximal_faces()),
            "bareiss_ranks": ranks_json(&frac),
            "classical_ranks": ranks_json(&classical),
        });
    }

    if let Some(alpha) = &args.alpha {
        let slice = graded_slice(&lc, alpha)?;
        let iso = slice_iso_check(&lc, alpha)?;
        let got = slice.betti(FieldKind::Rational);
        let want = betti_numbers(&slice.support, FieldKind::Rational, true, lc.top_dim());
        verdicts.push(Verdict { name: "slice_isomorphism", passed: iso });
        verdicts.push(Verdict { name: "slice_homology", passed: got == want });
        report["slice"] = json!({
            "alpha": alpha,
            "m_alpha": atoms.format(&slice.m_alpha),
            "support": faces_json(&slice.support.faces().cloned().collect::<Vec<_>>()),
            "bases": slice.bases.iter().map(|(k, b)| json!({
                "dim": k,
                "elements": b.iter().map(|(q, f)| json!({"coefficient": atoms.format(q), "face": f.vertices()})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "maps": slice.maps.iter().map(|m| json!({
                "dim": m.dim,
                "entries": m.matrix.to_dense().into_iter().map(|r| r.into_iter().map(|e| e.unwrap_or(0)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "betti": betti_json(&got),
            "support_reduced_betti": betti_json(&want),
        });
    }

    let passed = verdicts.iter().all(|v| v.passed);
    report["verdicts"] = json!(verdicts);
    report["passed"] = json!(passed);
    let mut summary = Vec::new();
    if lc.is_classical() {
        summary.push("classical complex: all labels are units".to_string());
    }
    summary.extend(verdicts.iter().map(|v| format!("{} {}", if v.passed { "PASS" } else { "FAIL" }, v.name)));
    write_output(&args.out, "report.json", &to_pretty_json(&report)?)?;
    Ok(LabelledOutcome { report, passed, summary })
}

/// Runs every suite and writes `report.json`.
pub fn cmd_verify(args: &VerifyArgs) -> Result<crate::verify::VerifyReport> {
    let cfg = VerifyConfig { seed: args.seed, max_n: args.max_n, trials: args.trials, inject_fault: args.inject_fault };
    let report = run_verify(&cfg);
    write_output(&args.out, "report.json", &to_pretty_json(&report)?)?;
    Ok(report)
}
