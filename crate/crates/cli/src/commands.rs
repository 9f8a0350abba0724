use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use geoment::estimator::EstimatorRegistry;
use geoment::families::{DickeSpec, GhzSpec, WernerSpec};
use geoment::statevector::MAX_QUBITS;
use geoment::verify::{self, VerifyConfig};
use geoment::{Amplitude, FamilyRegistry, FamilySpec, StateVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::format::{amplitude, num};
use crate::{Cli, Command, OutputFormat, SweepFamily};

/// Amplitudes at or below this modulus are left out of ket listings.
const KET_THRESHOLD: f64 = 1e-14;
/// Agreement required between sweep rows and the family predictions.
const SWEEP_TOL: f64 = 1e-9;

/// Returns `Ok(false)` when a check failed.
pub fn run(cli: &Cli) -> Result<bool> {
    if cli.digits == 0 || cli.digits > 17 {
        bail!("--digits must lie in 1..=17");
    }
    if cli.tol.is_nan() || cli.tol < 0.0 {
        bail!("--tol must be nonnegative");
    }
    match &cli.command {
        Command::State { spec, output, pretty } => cmd_state(cli, spec, output.as_deref(), *pretty),
        Command::Measure { source, method, check_oracles } => {
            cmd_measure(cli, source, method, *check_oracles)
        }
        Command::Sweep { family, n, steps, from, to, output } => {
            cmd_sweep(cli, *family, *n, *steps, *from, *to, output.as_deref())
        }
        Command::Verify { max_n } => cmd_verify(cli, *max_n),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_state(cli: &Cli, spec: &str, output: Option<&Path>, pretty: bool) -> Result<bool> {
    let psi = FamilyRegistry::builtin().parse(spec)?.build()?;
    if let Some(path) = output {
        psi.write_file(path)?;
    }
    if pretty {
        let mut text = String::new();
        for (label, a) in psi.support(KET_THRESHOLD) {
            writeln!(text, "{} {label}", amplitude(a, cli.digits, KET_THRESHOLD))?;
        }
        print!("{text}");
    } else if output.is_none() {
        print!("{}", psi.to_json());
    }
    Ok(true)
}

/// A family spec when the text has a registered `tag:`, otherwise a state file.
fn load_source(source: &str) -> Result<(StateVector, Option<FamilySpec>)> {
    let registry = FamilyRegistry::builtin();
    if let Some((tag, _)) = source.split_once(':') {
        if registry.get(&tag.trim().to_ascii_lowercase()).is_some() {
            let spec = registry.parse(source)?;
            return Ok((spec.build()?, Some(spec)));
        }
    }
    let psi = StateVector::read_file(source).with_context(|| format!("reading state file {source}"))?;
    Ok((psi, None))
}

#[derive(Serialize)]
struct QubitRow {
    qubit: usize,
    #[serde(rename = "E")]
    e: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    predicted: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    oracles: Vec<(String, f64)>,
}

#[derive(Serialize)]
struct MeasureReport {
    source: String,
    n: usize,
    method: String,
    per_qubit: Vec<QubitRow>,
    total: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_deviation: Option<f64>,
}

fn cmd_measure(cli: &Cli, source: &str, method: &str, check_oracles: bool) -> Result<bool> {
    let (psi, family) = load_source(source)?;
    if psi.n() < 2 {
        bail!("measuring needs at least two qubits");
    }
    let registry = EstimatorRegistry::builtin();
    let primary = registry.get(method)?;

    let mut rows = Vec::with_capacity(psi.n());
    let mut max_dev: f64 = 0.0;
    for q in 1..=psi.n() {
        let e = primary.estimate(&psi, q)?;
        let predicted = family.as_ref().map(|f| f.predicted_entanglement(q)).transpose()?;
        let mut oracles = Vec::new();
        if check_oracles {
            for est in registry.iter().filter(|est| est.name() != primary.name()) {
                let v = est.estimate(&psi, q)?;
                max_dev = max_dev.max((v - e).abs());
                oracles.push((est.name().to_string(), v));
            }
        }
        rows.push(QubitRow { qubit: q, e, predicted, oracles });
    }
    let total = rows.iter().map(|r| r.e).sum();
    let report = MeasureReport {
        source: source.to_string(),
        n: psi.n(),
        method: primary.name().to_string(),
        per_qubit: rows,
        total,
        max_deviation: check_oracles.then_some(max_dev),
    };

    let text = match cli.format {
        OutputFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
        OutputFormat::Csv => measure_csv(&report, cli.digits),
        OutputFormat::Table => measure_table(&report, cli.digits),
    };
    print!("{text}");

    if check_oracles && max_dev > cli.tol {
        eprintln!(
            "oracle deviation {} exceeds tolerance {}",
            num(max_dev, cli.digits),
            num(cli.tol, cli.digits)
        );
        return Ok(false);
    }
    Ok(true)
}

fn measure_columns(report: &MeasureReport) -> Vec<String> {
    let mut cols = vec!["qubit".to_string(), "E".to_string()];
    if report.per_qubit.iter().any(|r| r.predicted.is_some()) {
        cols.push("predicted".into());
    }
    if let Some(first) = report.per_qubit.first() {
        cols.extend(first.oracles.iter().map(|(name, _)| name.clone()));
    }
    cols
}

fn measure_cells(report: &MeasureReport, digits: usize) -> Vec<Vec<String>> {
    let with_predicted = report.per_qubit.iter().any(|r| r.predicted.is_some());
    let mut out: Vec<Vec<String>> = report
        .per_qubit
        .iter()
        .map(|r| {
            let mut row = vec![r.qubit.to_string(), num(r.e, digits)];
            if with_predicted {
                row.push(r.predicted.map_or_else(String::new, |p| num(p, digits)));
            }
            row.extend(r.oracles.iter().map(|(_, v)| num(*v, digits)));
            row
        })
        .collect();
    let width = out.first().map_or(2, Vec::len);
    let mut total = vec!["total".to_string(), num(report.total, digits)];
    total.resize(width, String::new());
    out.push(total);
    out
}

fn measure_csv(report: &MeasureReport, digits: usize) -> String {
    let mut text = measure_columns(report).join(",");
    text.push('\n');
    for row in measure_cells(report, digits) {
        text.push_str(&row.join(","));
        text.push('\n');
    }
    text
}

fn measure_table(report: &MeasureReport, digits: usize) -> String {
    let header = measure_columns(report);
    let cells = measure_cells(report, digits);
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            cells
                .iter()
                .map(|r| r[i].chars().count())
                .chain([header[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |row: &[String]| {
        let parts: Vec<String> =
            row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut text = format!("# {} ({} qubits, {})\n", report.source, report.n, report.method);
    text.push_str(&line(&header));
    for row in &cells {
        text.push_str(&line(row));
    }
    if let Some(dev) = report.max_deviation {
        let _ = writeln!(text, "max oracle deviation: {}", num(dev, digits));
    }
    text
}

#[derive(Serialize)]
struct SweepRow {
    param: f64,
    per_qubit: Vec<f64>,
    total: f64,
    predicted: Option<f64>,
}

fn sweep_specs(
    family: SweepFamily,
    n: usize,
    steps: usize,
    from: f64,
    to: f64,
) -> Result<Vec<(f64, FamilySpec)>> {
    if !(2..=MAX_QUBITS).contains(&n) {
        bail!(geoment::Error::BadRange(format!("n must lie in 2..={MAX_QUBITS}, got {n}")));
    }
    if family == SweepFamily::Dicke {
        return (0..=n)
            .map(|k| Ok((k as f64, FamilySpec::Dicke(DickeSpec::new(n, k)?))))
            .collect();
    }
    if steps < 2 {
        bail!(geoment::Error::BadRange(format!("steps must be at least 2, got {steps}")));
    }
    if !(0.0..=1.0).contains(&from) || !(0.0..=1.0).contains(&to) || from > to {
        bail!(geoment::Error::BadRange(format!("need 0 <= from <= to <= 1, got {from}..{to}")));
    }
    (0..steps)
        .map(|j| {
            let p = if j == steps - 1 { to } else { from + (to - from) * j as f64 / (steps - 1) as f64 };
            let c1 = Complex64::new(p.sqrt(), 0.0);
            let spec = match family {
                SweepFamily::Ghz => FamilySpec::Ghz(GhzSpec::from_c1(n, c1)?),
                SweepFamily::WernerSymmetric => {
                    let rest = Amplitude::new(((1.0 - p) / (n - 1) as f64).sqrt(), 0.0);
                    let mut c = vec![rest; n];
                    c[0] = c1;
                    FamilySpec::Werner(WernerSpec::new(c)?)
                }
                SweepFamily::Dicke => unreachable!(),
            };
            Ok((p, spec))
        })
        .collect()
}

fn cmd_sweep(
    cli: &Cli,
    family: SweepFamily,
    n: usize,
    steps: usize,
    from: f64,
    to: f64,
    output: Option<&Path>,
) -> Result<bool> {
    let specs = sweep_specs(family, n, steps, from, to)?;
    let mut rows = Vec::with_capacity(specs.len());
    let mut worst: f64 = 0.0;
    for (param, spec) in &specs {
        let profile = geoment::entanglement_profile(&spec.build()?)?;
        for (q, e) in profile.per_qubit.iter().enumerate() {
            worst = worst.max((e - spec.predicted_entanglement(q + 1)?).abs());
        }
        rows.push(SweepRow {
            param: *param,
            total: profile.total,
            per_qubit: profile.per_qubit,
            predicted: Some(spec.predicted_entanglement(1)?),
        });
    }

    let text = if cli.format == OutputFormat::Json {
        serde_json::to_string_pretty(&rows)? + "\n"
    } else {
        let d = cli.digits;
        let mut text = String::from("param");
        for q in 1..=n {
            let _ = write!(text, ",E_{q}");
        }
        text.push_str(",total,predicted\n");
        for r in &rows {
            text.push_str(&num(r.param, d));
            for e in &r.per_qubit {
                let _ = write!(text, ",{}", num(*e, d));
            }
            let predicted = r.predicted.map_or_else(String::new, |p| num(p, d));
            let _ = writeln!(text, ",{},{predicted}", num(r.total, d));
        }
        text
    };
    emit(&text, output)?;

    if worst > SWEEP_TOL {
        eprintln!("sweep deviates from prediction by {}", num(worst, cli.digits));
        return Ok(false);
    }
    Ok(true)
}

fn cmd_verify(cli: &Cli, max_n: usize) -> Result<bool> {
    let cfg = VerifyConfig::new(max_n, cli.seed)?;
    println!("verify: max_n={} seed={}", cfg.max_n, cfg.seed);
    let mut passed = 0;
    let total = verify::CLAIMS.len();
    for claim in verify::CLAIMS {
        let report = claim(&cfg);
        println!("{report}");
        passed += report.passed() as usize;
    }
    println!("{passed}/{total} claims passed");
    Ok(passed == total)
}
