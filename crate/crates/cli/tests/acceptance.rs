//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use dnum_core::oracle::{bel_oracle, pl_oracle, random_instance, MAX_RANDOM_FRAME_SIZE};
use dnum_core::{measures, max_abs_diff, DNumber, NonExclusivity, Strategy};

const INEQUALITY_SLACK: f64 = 1e-12;
const EQUALITY_TOLERANCE: f64 = 1e-9;
const MATCH_TOLERANCE: f64 = 1e-12;
const THEOREM_SUITE_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Deterministic coverage of every frame size, strategy and completeness.
fn scheduled_instance(i: u64) -> (DNumber, NonExclusivity) {
    let n = MAX_RANDOM_FRAME_SIZE as u64;
    let frame_size = (1 + i % n) as usize;
    let strategy = Strategy::ALL[((i / n) % 3) as usize];
    let complete = (i / (3 * n)).is_multiple_of(2);
    random_instance(i, frame_size, strategy, complete).expect("valid generator parameters")
}

fn theorem_suite() -> Outcome {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut checked = 0u64;
    for i in 0..10_000 {
        let (d, ne) = scheduled_instance(i);
        let bel = measures::bel_vector(&d, &ne).map_err(|e| e.to_string())?;
        let pl = measures::pl_vector(&d, &ne).map_err(|e| e.to_string())?;
        let s = d.total_mass();
        let frame = d.frame();
        for a in frame.subsets() {
            let (k, c) = (a.bits() as usize, frame.complement(a).bits() as usize);
            let checks = [
                ("T1", pl[k] - bel[k] >= -INEQUALITY_SLACK),
                ("T2", bel[k] + bel[c] <= s + INEQUALITY_SLACK),
                ("T3", pl[k] + pl[c] >= s - INEQUALITY_SLACK),
                ("T4", (bel[k] + pl[c] - s).abs() <= EQUALITY_TOLERANCE),
            ];
            for (name, ok) in checks {
                checked += 1;
                if !ok {
                    violations.push(format!("{name} instance {i} subset {a}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if !violations.is_empty() {
        return Err(format!("{} violations, first: {}", violations.len(), violations[0]));
    }
    if elapsed > THEOREM_SUITE_BUDGET {
        return Err(format!("took {elapsed:?}, budget {THEOREM_SUITE_BUDGET:?}"));
    }
    Ok(format!("10000 instances, {checked} checks, 0 violations in {elapsed:.2?}"))
}

fn degeneration() -> Outcome {
    let mut worst = 0.0f64;
    for seed in 0..1_000u64 {
        let frame_size = 1 + (seed as usize % MAX_RANDOM_FRAME_SIZE);
        let (d, ne) = random_instance(seed, frame_size, Strategy::Exclusive, true)
            .map_err(|e| e.to_string())?;
        let m = d.as_bpa().map_err(|e| e.to_string())?;
        for a in d.frame().subsets() {
            let bel = measures::bel(&d, &ne, a).map_err(|e| e.to_string())?;
            let pl = measures::pl(&d, &ne, a).map_err(|e| e.to_string())?;
            worst = worst.max((bel - m.bel(a)).abs()).max((pl - m.pl(a)).abs());
        }
    }
    if worst <= MATCH_TOLERANCE {
        Ok(format!("1000 instances, max |DNT − classical| = {worst:e}"))
    } else {
        Err(format!("max deviation {worst:e} > {MATCH_TOLERANCE:e}"))
    }
}

fn oracle_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..10_000 {
        let (d, ne) = scheduled_instance(i);
        for a in d.frame().subsets() {
            let bel = measures::bel(&d, &ne, a).map_err(|e| e.to_string())?;
            let pl = measures::pl(&d, &ne, a).map_err(|e| e.to_string())?;
            let bel_ref = bel_oracle(&d, &ne, a).map_err(|e| e.to_string())?;
            let pl_ref = pl_oracle(&d, &ne, a).map_err(|e| e.to_string())?;
            worst = worst.max((bel - bel_ref).abs()).max((pl - pl_ref).abs());
        }
    }
    if worst <= MATCH_TOLERANCE {
        Ok(format!("10000 instances, max |optimized − oracle| = {worst:e}"))
    } else {
        Err(format!("max deviation {worst:e} > {MATCH_TOLERANCE:e}"))
    }
}

fn vector_identity() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..1_000 {
        let (d, ne) = scheduled_instance(i * 7 + 3);
        let pl = measures::pl_vector(&d, &ne).map_err(|e| e.to_string())?;
        let u = ne.matrix().map_err(|e| e.to_string())?;
        let du = u.left_mul(&d.to_vector().map_err(|e| e.to_string())?);
        worst = worst.max(max_abs_diff(&pl, &du));
    }
    if worst <= MATCH_TOLERANCE {
        Ok(format!("1000 instances, max |Pl − D·U| = {worst:e}"))
    } else {
        Err(format!("residual {worst:e} > {MATCH_TOLERANCE:e}"))
    }
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn dnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dnum"))
        .args(args)
        .output()
        .expect("run dnum")
}

fn worked_example() -> Outcome {
    let f = dnum_core::Frame::new(["a", "b"]).unwrap();
    let a = f.encode(["a"]).unwrap();
    let b = f.encode(["b"]).unwrap();
    let d = DNumber::new(f.clone(), [(a, 0.6), (b, 0.4)]).unwrap();
    let ne = NonExclusivity::element_derived(f, [(("a", "b"), 0.3)]).unwrap();
    // Hand-derived: 0.6·0.7, 0.6 + 0.3·0.4, 0.4·0.7, 0.4 + 0.3·0.6.
    let expected = [(0.42, 0.72), (0.28, 0.58)];
    for ((x, (bel, pl)), name) in [a, b].into_iter().zip(expected).zip(["{a}", "{b}"]) {
        let bel_ref = bel_oracle(&d, &ne, x).unwrap();
        let pl_ref = pl_oracle(&d, &ne, x).unwrap();
        let got_bel = measures::bel(&d, &ne, x).unwrap();
        let got_pl = measures::pl(&d, &ne, x).unwrap();
        for (label, got, want) in [
            ("oracle Bel", bel_ref, bel),
            ("oracle Pl", pl_ref, pl),
            ("Bel", got_bel, bel),
            ("Pl", got_pl, pl),
        ] {
            if (got - want).abs() > MATCH_TOLERANCE {
                return Err(format!("{label}({name}) = {got}, want {want}"));
            }
        }
    }
    let duality = measures::bel(&d, &ne, a).unwrap() + measures::pl(&d, &ne, b).unwrap();
    if (duality - 1.0).abs() > MATCH_TOLERANCE {
        return Err(format!("Bel({{a}}) + Pl({{b}}) = {duality}"));
    }

    let input = fixtures().join("worked_example.json");
    let input = input.to_str().unwrap();
    for (args, golden) in [
        (vec!["compute", input], "worked_example.compute.golden"),
        (
            vec!["compute", input, "--subset", "a", "--format", "csv"],
            "worked_example.subset_a.csv.golden",
        ),
    ] {
        let out = dnum(&args);
        let want = std::fs::read(fixtures().join(golden)).map_err(|e| e.to_string())?;
        if !out.status.success() || out.stdout != want {
            return Err(format!(
                "`dnum {}` does not reproduce {golden}:\n{}",
                args.join(" "),
                String::from_utf8_lossy(&out.stdout)
            ));
        }
    }
    Ok("Bel/Pl = 0.42/0.72 and 0.28/0.58, duality 1, golden files byte-exact".into())
}

/// An incomplete instance on 16 labels whose exact masses satisfy every
/// theorem, but whose floating-point sums miss the `1e-12` slack of
/// `Bel(A) + Bel(Ā) ≤ s`: `s` accumulates 32767 equal masses onto 0.5 and
/// rounds each addition down by almost half an ulp, while `Bel(Ā)` sums
/// the same masses from zero.
fn write_rounding_violation(path: &Path) -> std::io::Result<()> {
    let n = 16;
    let labels: Vec<String> = (1..=n).map(|i| format!("q{i}")).collect();
    let mass = 2f64.powi(-16) + 0.49 * 2f64.powi(-53);
    let mut masses = vec![("q1".to_string(), 0.5)];
    for bits in (2u32..1 << n).step_by(2) {
        let expr: Vec<&str> = (0..n)
            .filter(|i| bits >> i & 1 == 1)
            .map(|i| labels[i].as_str())
            .collect();
        masses.push((expr.join("|"), mass));
    }
    let body: Vec<String> = masses
        .iter()
        .map(|(k, m)| format!("    {}: {}", serde_json::to_string(k).unwrap(), m))
        .collect();
    let frame: Vec<String> = labels.iter().map(|l| format!("\"{l}\"")).collect();
    let text = format!(
        "{{\n  \"frame\": [{}],\n  \"masses\": {{\n{}\n  }}\n}}\n",
        frame.join(", "),
        body.join(",\n")
    );
    std::fs::write(path, text)
}

fn cli_contract() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let violation = dir.path().join("rounding_violation.json");
    write_rounding_violation(&violation).map_err(|e| e.to_string())?;

    let fx = |name: &str| fixtures().join(name).to_str().unwrap().to_string();
    let cases: [(Vec<String>, i32); 5] = [
        (vec!["compute".into(), fx("parse_error.json")], 2),
        (vec!["compute".into(), fx("validation_error.json")], 3),
        (vec!["matrix".into(), fx("size_error.json")], 4),
        (vec!["verify".into(), violation.to_str().unwrap().into()], 5),
        (vec!["verify".into(), fx("worked_example.json")], 0),
    ];
    let mut seen = Vec::new();
    for (args, code) in &cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = dnum(&args);
        let got = out.status.code();
        if got != Some(*code) {
            return Err(format!(
                "`dnum {}` exited {got:?}, want {code}; stderr: {}",
                args.join(" "),
                String::from_utf8_lossy(&out.stderr)
            ));
        }
        if *code != 0 && out.stderr.is_empty() {
            return Err(format!("exit {code} without a message on stderr"));
        }
        seen.push(code.to_string());
    }

    let fuzz = ["verify", "--fuzz", "1000", "--seed", "7"];
    let first = dnum(&fuzz);
    let second = dnum(&fuzz);
    if first.stdout != second.stdout || first.status.code() != second.status.code() {
        return Err("`verify --fuzz 1000 --seed 7` is not byte-reproducible".into());
    }
    if first.status.code() != Some(0) {
        return Err(format!(
            "fuzz run reported a violation:\n{}",
            String::from_utf8_lossy(&first.stdout)
        ));
    }
    Ok(format!(
        "exit codes {} observed; fuzz report reproducible ({} bytes)",
        seen.join("/"),
        first.stdout.len()
    ))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("1 theorem suite", theorem_suite),
        ("2 degeneration to classical measures", degeneration),
        ("3 oracle equivalence", oracle_equivalence),
        ("4 vector identity Pl = D·U", vector_identity),
        ("5 worked example regression", worked_example),
        ("6 CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
