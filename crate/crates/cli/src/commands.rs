//! `compute`, `verify` and `matrix`, rendered to strings.

use std::fmt::Write;

use dnum_core::measures::{self, BeliefInterval};
use dnum_core::oracle::{random_instance, MAX_RANDOM_FRAME_SIZE};
use dnum_core::{
    max_abs_diff, DNumber, Frame, Strategy, SubsetIndex, Theorem, TheoremReport,
    MAX_DENSE_FRAME_SIZE,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::instance::{format_subset, parse_subset, Instance};
use crate::render::{aligned, csv_line, json_string, measure, residual, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum MatrixFormat {
    #[default]
    Csv,
    Json,
}

fn ensure_dense(frame: &Frame, what: &str) -> Result<(), CliError> {
    if frame.len() > MAX_DENSE_FRAME_SIZE {
        return Err(CliError::Size(format!(
            "{what} needs a frame of at most {MAX_DENSE_FRAME_SIZE} labels, got {}",
            frame.len()
        )));
    }
    Ok(())
}

fn completeness_word(d: &DNumber) -> &'static str {
    if d.completeness().is_complete() {
        "complete"
    } else {
        "incomplete"
    }
}

/// Bel, Pl and interval width for one subset or for the whole powerset.
pub fn compute(inst: &Instance, subset: Option<&str>, format: Format) -> Result<String, CliError> {
    let frame = inst.frame();
    let (d, ne) = (&inst.dnumber, &inst.nonexclusivity);
    let rows: Vec<(SubsetIndex, BeliefInterval)> = match subset {
        Some(expr) => {
            let a = parse_subset(frame, expr)?;
            vec![(a, measures::belief_interval(d, ne, a)?)]
        }
        None => {
            ensure_dense(frame, "a full table")?;
            let bel = measures::bel_vector(d, ne)?;
            let pl = measures::pl_vector(d, ne)?;
            frame
                .subsets()
                .map(|a| {
                    let k = a.bits() as usize;
                    (a, BeliefInterval { lower: bel[k], upper: pl[k] })
                })
                .collect()
        }
    };

    let cells = |(a, i): &(SubsetIndex, BeliefInterval)| {
        [
            format_subset(frame, *a),
            measure(i.lower),
            measure(i.upper),
            measure(i.width()),
        ]
    };
    const HEADER: [&str; 4] = ["subset", "bel", "pl", "width"];

    let out = match format {
        Format::Table => {
            let mut table = vec![HEADER.iter().map(|h| h.to_string()).collect::<Vec<_>>()];
            table.extend(rows.iter().map(|r| cells(r).to_vec()));
            aligned(&table)
        }
        Format::Csv => {
            let mut out = csv_line(&HEADER);
            for r in &rows {
                out.push_str(&csv_line(&cells(r)));
            }
            out
        }
        Format::Json => {
            let labels: Vec<String> = frame.labels().iter().map(|l| json_string(l)).collect();
            let mut out = String::from("{\n");
            let _ = writeln!(out, "  \"frame\": [{}],", labels.join(", "));
            let _ = writeln!(out, "  \"total_mass\": {},", measure(d.total_mass()));
            let _ = writeln!(out, "  \"complete\": {},", d.completeness().is_complete());
            let _ = writeln!(out, "  \"strategy\": \"{}\",", ne.strategy().name());
            out.push_str("  \"rows\": [\n");
            for (k, r) in rows.iter().enumerate() {
                let [s, bel, pl, width] = cells(r);
                let sep = if k + 1 == rows.len() { "" } else { "," };
                let _ = writeln!(
                    out,
                    "    {{\"subset\": {}, \"bel\": {bel}, \"pl\": {pl}, \"width\": {width}}}{sep}",
                    json_string(&s)
                );
            }
            out.push_str("  ]\n}\n");
            out
        }
    };
    Ok(out)
}

/// Parameters of the seeded fuzz run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fuzz {
    pub count: u64,
    pub seed: u64,
}

/// One generated fuzz instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzCase {
    pub index: u64,
    pub seed: u64,
    pub frame_size: usize,
    pub strategy: Strategy,
    pub complete: bool,
}

/// The deterministic fuzz schedule: a master generator seeded with
/// `fuzz.seed` draws each case's parameters and instance seed.
pub fn fuzz_cases(fuzz: Fuzz) -> impl Iterator<Item = FuzzCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(fuzz.seed);
    (0..fuzz.count).map(move |index| FuzzCase {
        index,
        frame_size: rng.gen_range(1..=MAX_RANDOM_FRAME_SIZE),
        strategy: Strategy::ALL[rng.gen_range(0..Strategy::ALL.len())],
        complete: rng.gen_bool(0.5),
        seed: rng.gen(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub text: String,
    pub passed: bool,
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "FAIL"
    }
}

fn report_lines(out: &mut String, report: &TheoremReport) {
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            vec![
                format!("  {}", c.theorem),
                verdict(c.passed).to_string(),
                format!("max violation {}", residual(c.max_violation)),
                format!("witness {}", format_subset(&report.frame, c.witness)),
            ]
        })
        .collect();
    out.push_str(&aligned(&rows));
}

/// Sweeps the theorems over an instance file and/or a seeded fuzz run.
pub fn verify(inst: Option<&Instance>, fuzz: Option<Fuzz>) -> Result<VerifyOutcome, CliError> {
    let mut out = String::new();
    let mut passed = true;

    if let Some(inst) = inst {
        let d = &inst.dnumber;
        let report = measures::verify_theorems(d, &inst.nonexclusivity)?;
        let _ = writeln!(
            out,
            "instance: {} labels, {} strategy, total mass {} ({})",
            inst.frame().len(),
            inst.nonexclusivity.strategy().name(),
            measure(d.total_mass()),
            completeness_word(d),
        );
        report_lines(&mut out, &report);
        passed &= report.all_passed();
    }

    if let Some(fuzz) = fuzz {
        struct Worst {
            violation: f64,
            failing: u64,
            case: Option<FuzzCase>,
            frame: Option<Frame>,
            witness: SubsetIndex,
        }
        let mut worst: Vec<Worst> = Theorem::ALL
            .iter()
            .map(|_| Worst {
                violation: f64::NEG_INFINITY,
                failing: 0,
                case: None,
                frame: None,
                witness: SubsetIndex::EMPTY,
            })
            .collect();
        for case in fuzz_cases(fuzz) {
            let (d, ne) = random_instance(case.seed, case.frame_size, case.strategy, case.complete)?;
            let report = measures::verify_theorems(&d, &ne)?;
            for (w, c) in worst.iter_mut().zip(&report.checks) {
                if !c.passed {
                    w.failing += 1;
                }
                if c.max_violation > w.violation || w.case.is_none() {
                    w.violation = c.max_violation;
                    w.case = Some(case);
                    w.frame = Some(report.frame.clone());
                    w.witness = c.witness;
                }
            }
        }
        let _ = writeln!(out, "fuzz: {} instances, seed {}", fuzz.count, fuzz.seed);
        let rows: Vec<Vec<String>> = Theorem::ALL
            .iter()
            .zip(&worst)
            .map(|(t, w)| {
                let ok = w.failing == 0;
                passed &= ok;
                let at = match (&w.case, &w.frame) {
                    (Some(c), Some(f)) => format!(
                        "worst instance #{} (seed {}, {} labels, {}, {}) at {}",
                        c.index,
                        c.seed,
                        c.frame_size,
                        c.strategy.name(),
                        if c.complete { "complete" } else { "incomplete" },
                        format_subset(f, w.witness)
                    ),
                    _ => "no instances".to_string(),
                };
                vec![
                    format!("  {t}"),
                    verdict(ok).to_string(),
                    format!("max violation {}", residual(w.violation)),
                    format!("failing {}", w.failing),
                    at,
                ]
            })
            .collect();
        out.push_str(&aligned(&rows));
    }

    let _ = writeln!(
        out,
        "result: {}",
        if passed { "all theorems hold" } else { "theorem violation" }
    );
    Ok(VerifyOutcome { text: out, passed })
}

/// `U`, `D`, `Pl = D·U` and the residual `max |Pl − D·U|`.
pub fn matrix(inst: &Instance, format: MatrixFormat) -> Result<String, CliError> {
    let frame = inst.frame();
    ensure_dense(frame, "matrix export")?;
    let (d, ne) = (&inst.dnumber, &inst.nonexclusivity);
    let u = ne.matrix()?;
    let dv = d.to_vector()?;
    let pl = measures::pl_vector(d, ne)?;
    let du = u.left_mul(&dv);
    let resid = max_abs_diff(&pl, &du);
    let names: Vec<String> = frame.subsets().map(|s| format_subset(frame, s)).collect();

    let mut out = String::new();
    match format {
        MatrixFormat::Csv => {
            let row = |head: &str, values: &[f64]| {
                let mut fields = vec![head.to_string()];
                fields.extend(values.iter().map(|&v| measure(v)));
                csv_line(&fields)
            };
            let mut header = vec!["U".to_string()];
            header.extend(names.iter().cloned());
            out.push_str(&csv_line(&header));
            for (name, values) in names.iter().zip(u.rows()) {
                out.push_str(&row(name, values));
            }
            out.push('\n');
            let mut header = vec!["vector".to_string()];
            header.extend(names.iter().cloned());
            out.push_str(&csv_line(&header));
            out.push_str(&row("D", &dv));
            out.push_str(&row("Pl", &pl));
            out.push_str(&row("D*U", &du));
            out.push('\n');
            out.push_str(&csv_line(&["residual".to_string(), residual(resid)]));
        }
        MatrixFormat::Json => {
            let list = |values: &[f64]| {
                values.iter().map(|&v| measure(v)).collect::<Vec<_>>().join(", ")
            };
            let subsets: Vec<String> = names.iter().map(|n| json_string(n)).collect();
            out.push_str("{\n");
            let _ = writeln!(out, "  \"subsets\": [{}],", subsets.join(", "));
            out.push_str("  \"u\": [\n");
            for (k, values) in u.rows().enumerate() {
                let sep = if k + 1 == u.dim() { "" } else { "," };
                let _ = writeln!(out, "    [{}]{sep}", list(values));
            }
            out.push_str("  ],\n");
            let _ = writeln!(out, "  \"d\": [{}],", list(&dv));
            let _ = writeln!(out, "  \"pl\": [{}],", list(&pl));
            let _ = writeln!(out, "  \"d_times_u\": [{}],", list(&du));
            let _ = writeln!(out, "  \"residual\": {}", residual(resid));
            out.push_str("}\n");
        }
    }
    Ok(out)
}
