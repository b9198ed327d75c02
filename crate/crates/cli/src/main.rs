//! Command-line front end. Each verb drives one library pipeline and
//! prints either a text summary or a JSON report; every run records the
//! seed and the coefficient field so results can be replayed exactly.

mod corpus;

use clap::{Args, Parser, Subcommand};
use ginalg::field::Field;
use ginalg::parse::{self, IdealSource};
use ginalg::poly::Ring;
use ginalg::report::{self, Report};
use ginalg::{borel, gin, growth, hilbert, points, reduction, wlp};
use ginalg::{Error, Result};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ginalg",
    version,
    about = "Generic initial ideals, Hilbert function growth, and truncation analysis"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Common {
    /// Coefficient field: a prime p, or Q for the rationals (overrides the input's char).
    #[arg(long)]
    field: Option<String>,
    /// Base seed for every random choice in the run.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of independent random coordinate changes.
    #[arg(long, default_value_t = 3)]
    trials: usize,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Generic initial ideal under repeated random coordinate changes.
    Gin {
        /// Path to an ideal file, or the ideal source inline.
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert function of the quotient with first and second differences.
    Hilbert {
        input: String,
        /// Largest degree tabulated.
        #[arg(long)]
        tmax: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension, degree, generator-index spans, regularity, and saturation.
    Invariants {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Reduction number r_s of the quotient modulo s generic linear forms.
    Reduction {
        input: String,
        /// How many generic linear forms to cut by (defaults to the quotient dimension).
        #[arg(long)]
        s: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Weak Lefschetz test for the Artinian reduction of the quotient.
    Wlp {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Generators of the ideal truncated at a degree.
    Truncate {
        input: String,
        /// Truncation degree.
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Flat spot in the first difference of the Hilbert function, with
    /// the truncation verdicts that follow from it.
    Growth1 {
        input: String,
        /// Degree to analyze; omitted means the first qualifying degree.
        #[arg(long)]
        d: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Flat spot in the second difference, analyzed modulo two generic
    /// linear forms, including the common-factor and injectivity checks.
    Growth2 {
        input: String,
        /// Degree to analyze.
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Vanishing ideal and h-vector of random rational points.
    Points {
        /// Number of points to sample.
        count: usize,
        /// Number of ring variables (projective dimension plus one).
        #[arg(long, default_value_t = 4)]
        nvars: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run every ideal file in a directory against its recorded expectations.
    Corpus {
        dir: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Computation(_) => 1,
                Error::Parse { .. } => 2,
                Error::TheoremViolation(_) => 3,
            })
        }
    }
}

fn parse_field_flag(s: &str) -> Result<Field> {
    if s == "Q" || s == "q" || s == "0" {
        return Ok(Field::Rational);
    }
    match s.parse::<u64>() {
        Ok(p) if p > 1 && ginalg::field::is_prime(p) => Ok(Field::Prime(p)),
        _ => Err(Error::Parse {
            line: 0,
            col: 0,
            msg: format!("--field must be a prime or Q, got '{s}'"),
        }),
    }
}

/// Reads the input as a file when the path exists, otherwise treats the
/// argument itself as inline ideal source.
fn load(input: &str, common: &Common) -> Result<(IdealSource, String)> {
    let field = common.field.as_deref().map(parse_field_flag).transpose()?;
    let path = Path::new(input);
    let (text, fallback) = if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Computation(format!("cannot read {input}: {e}")))?;
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "ideal".to_string());
        (text, stem)
    } else {
        (input.to_string(), "inline".to_string())
    };
    let src = parse::parse_ideal_in(&text, field)?;
    let label = src.label.clone().unwrap_or(fallback);
    Ok((src, label))
}

fn row(values: &[i128]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "none".to_string(),
    }
}

fn header(label: &str, ring: &Ring, common: &Common) -> String {
    format!(
        "label: {label}\nfield: {}\nseed: {}\ntrials: {}",
        ring.field.label(),
        common.seed,
        common.trials
    )
}

fn print_growth(report: &Report, rep: &growth::GrowthReport, ring: &Ring, common: &Common) {
    if common.json {
        print!("{}", report.to_json());
        return;
    }
    println!("{}", header(&rep.label, ring, common));
    println!("r2: {}", opt(&rep.r2));
    if rep.r3.is_some() {
        println!("r3: {}", opt(&rep.r3));
    }
    println!("flat degree: {}", opt(&rep.d));
    println!("flat value s: {}", opt(&rep.s));
    if rep.d.is_some() {
        println!("truncation generators:");
        for g in &rep.truncation {
            println!("  {}", g.display(ring));
        }
        println!("saturated: {}", opt(&rep.saturated));
        println!("d-regular: {}", opt(&rep.d_regular));
        println!("quotient dim: {}", opt(&rep.scheme_dim));
        println!("scheme degree: {}", opt(&rep.scheme_degree));
        if let Some(f) = &rep.common_factor {
            println!("common factor: {}", f.display(ring));
        }
        if rep.injective.is_some() {
            println!("multiplication injective: {}", opt(&rep.injective));
        }
        if rep.wlp_holds.is_some() {
            println!("wlp: {}", opt(&rep.wlp_holds));
        }
        if rep.no_new_gin_generator.is_some() {
            println!("no new gin generator at d+1: {}", opt(&rep.no_new_gin_generator));
        }
        if rep.strict_decrease.is_some() {
            println!("strictly decreasing beyond: {}", opt(&rep.strict_decrease));
        }
    }
    for note in &rep.notes {
        println!("note: {note}");
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.verb {
        Verb::Gin { input, common } => {
            let (src, label) = load(&input, &common)?;
            let res = gin::gin(&src.ring, &src.gens, common.seed, common.trials, None);
            if common.json {
                let mut report = Report::new(&label, &src.ring, common.seed);
                report.gin = Some(report::gin_section(&res, &src.ring));
                print!("{}", report.to_json());
            } else {
                println!("{}", header(&label, &src.ring, &common));
                println!("agreed: {}", res.agreed);
                println!("strongly stable: {}", res.is_strongly_stable);
                println!("gin: {}", res.gin);
            }
            Ok(())
        }
        Verb::Hilbert { input, tmax, common } => {
            let (src, label) = load(&input, &common)?;
            let default_to = src
                .gens
                .iter()
                .filter_map(|g| g.degree())
                .max()
                .unwrap_or(0)
                .saturating_mul(2)
                + src.ring.nvars() as u32;
            let to = tmax.unwrap_or(default_to.max(10));
            let table = hilbert::hilbert_table(&src.ring, &src.gens, to);
            if common.json {
                let mut report = Report::new(&label, &src.ring, common.seed);
                report.hilbert = Some(report::hilbert_section(&table));
                print!("{}", report.to_json());
            } else {
                println!("{}", header(&label, &src.ring, &common));
                let ts: Vec<i128> = (0..=to as i128).collect();
                println!("t:   {}", row(&ts));
                println!("H:   {}", row(&table.values));
                println!("dH:  {}", row(&table.delta1));
                println!("d2H: {}", row(&table.delta2));
                println!("dim: {}", table.dim);
                println!("degree: {}", table.degree);
            }
            Ok(())
        }
        Verb::Invariants { input, common } => {
            let (src, label) = load(&input, &common)?;
            let (inv, ginres) = hilbert::invariants(&src.ring, &src.gens, common.seed, common.trials)?;
            let saturated = borel::is_saturated(&ginres.gin);
            let spor: Vec<String> = borel::sporadic_zeros(&ginres.gin)
                .iter()
                .map(|m| m.display(&src.ring.vars))
                .collect();
            if common.json {
                let mut report = Report::new(&label, &src.ring, common.seed);
                report.invariants = Some(report::invariants_section(&inv, saturated, &spor));
                report.gin = Some(report::gin_section(&ginres, &src.ring));
                let to = inv.reg.max(inv.satdeg) + 2;
                let table = hilbert::hilbert_table(&src.ring, &src.gens, to);
                report.hilbert = Some(report::hilbert_section(&table));
                print!("{}", report.to_json());
            } else {
                println!("{}", header(&label, &src.ring, &common));
                println!("dim: {}", inv.dim);
                println!("degree: {}", inv.degree);
                println!("alpha: {}", inv.alpha);
                println!("D: {}", inv.d_inv);
                println!("M: {}", inv.m_inv);
                println!("reg: {}", inv.reg);
                println!("satdeg: {}", inv.satdeg);
                println!("saturated: {saturated}");
                println!(
                    "spor: {}",
                    if spor.is_empty() { "(none)".to_string() } else { spor.join(", ") }
                );
                println!("gin: {}", ginres.gin);
                println!("gin agreed: {}", ginres.agreed);
            }
            Ok(())
        }
        Verb::Reduction { input, s, common } => {
            let (src, label) = load(&input, &common)?;
            let s = match s {
                Some(s) => s,
                None => hilbert::initial_ideal(&src.ring, &src.gens).dim().max(1) as usize,
            };
            let profile = reduction::reduction_number(&src.ring, &src.gens, s, common.seed)?;
            if common.json {
                let payload = serde_json::json!({
                    "label": label,
                    "field": src.ring.field.label(),
                    "seed": common.seed,
                    "s": profile.s,
                    "value": profile.value,
                    "witness": profile.witness,
                    "crosscheck": profile.crosscheck,
                    "quotient_hf": profile.quotient_hf.iter().map(|&v| v as i64).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!("{}", header(&label, &src.ring, &common));
                println!("s: {}", profile.s);
                println!("r_{}: {}", profile.s, profile.value);
                println!("socle witness: {}", profile.witness);
                println!("gin crosscheck: {}", profile.crosscheck);
                println!("quotient HF: {}", row(&profile.quotient_hf));
            }
            Ok(())
        }
        Verb::Wlp { input, common } => {
            let (src, label) = load(&input, &common)?;
            let outcome = wlp::wlp_test(&src.ring, &src.gens, common.seed)?;
            if common.json {
                let payload = serde_json::json!({
                    "label": label,
                    "field": src.ring.field.label(),
                    "seed": common.seed,
                    "holds": outcome.holds,
                    "failing_degrees": outcome.failing_degrees,
                    "artinian_hf": outcome.artinian_hf.iter().map(|&v| v as i64).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!("{}", header(&label, &src.ring, &common));
                println!("wlp: {}", outcome.holds);
                if !outcome.failing_degrees.is_empty() {
                    let ds: Vec<String> =
                        outcome.failing_degrees.iter().map(|d| d.to_string()).collect();
                    println!("failing degrees: {}", ds.join(", "));
                }
                println!("artinian HF: {}", row(&outcome.artinian_hf));
            }
            Ok(())
        }
        Verb::Truncate { input, d, common } => {
            let (src, label) = load(&input, &common)?;
            let gens = growth::truncate_ideal(&src.ring, &src.gens, d);
            if common.json {
                let payload = serde_json::json!({
                    "label": label,
                    "field": src.ring.field.label(),
                    "seed": common.seed,
                    "d": d,
                    "generators": gens.iter().map(|g| g.display(&src.ring)).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!("{}", header(&label, &src.ring, &common));
                println!("degree cap: {d}");
                println!("generators ({}):", gens.len());
                for g in &gens {
                    println!("  {}", g.display(&src.ring));
                }
            }
            Ok(())
        }
        Verb::Growth1 { input, d, common } => {
            let (src, label) = load(&input, &common)?;
            let rep = growth::first_difference_pipeline(
                &src.ring, &src.gens, d, common.seed, common.trials, &label,
            )?;
            let mut report = Report::new(&label, &src.ring, common.seed);
            report.growth = Some(report::growth_section(&rep, &src.ring));
            print_growth(&report, &rep, &src.ring, &common);
            Ok(())
        }
        Verb::Growth2 { input, d, common } => {
            let (src, label) = load(&input, &common)?;
            let rep = growth::second_difference_pipeline(
                &src.ring, &src.gens, d, common.seed, common.trials, &label,
            )?;
            let mut report = Report::new(&label, &src.ring, common.seed);
            report.growth = Some(report::growth_section(&rep, &src.ring));
            print_growth(&report, &rep, &src.ring, &common);
            Ok(())
        }
        Verb::Points { count, nvars, common } => {
            if nvars < 2 {
                return Err(Error::Computation("points need at least two variables".into()));
            }
            let field = match common.field.as_deref() {
                Some(s) => parse_field_flag(s)?,
                None => Field::Prime(32003),
            };
            let ring = Ring::standard(nvars, field);
            let ps = points::random_points(&ring, count, common.seed);
            let gb = points::vanishing_ideal(&ring, &ps);
            let hv = points::h_vector(&ring, &ps);
            if common.json {
                let payload = serde_json::json!({
                    "label": format!("{count} random points"),
                    "field": ring.field.label(),
                    "seed": common.seed,
                    "count": count,
                    "h_vector": hv.iter().map(|&v| v as i64).collect::<Vec<_>>(),
                    "generators": gb.basis.iter().map(|g| g.display(&ring)).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!(
                    "label: {count} random points\nfield: {}\nseed: {}",
                    ring.field.label(),
                    common.seed
                );
                println!("h-vector: {}", row(&hv));
                println!("vanishing ideal generators: {}", gb.basis.len());
                for g in &gb.basis {
                    println!("  {}", g.display(&ring));
                }
            }
            Ok(())
        }
        Verb::Corpus { dir, common } => {
            let results = corpus::run_corpus(&dir, common.seed, common.trials)?;
            let failed = results.iter().filter(|r| !r.failures.is_empty()).count();
            if common.json {
                let payload = serde_json::json!({
                    "seed": common.seed,
                    "passed": results.len() - failed,
                    "failed": failed,
                    "results": results.iter().map(|r| serde_json::json!({
                        "file": r.file,
                        "label": r.label,
                        "ok": r.failures.is_empty(),
                        "failures": r.failures,
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                for r in &results {
                    if r.failures.is_empty() {
                        println!("PASS {} ({})", r.label, r.file);
                    } else {
                        println!("FAIL {} ({})", r.label, r.file);
                        for f in &r.failures {
                            println!("     {f}");
                        }
                    }
                }
                println!("{} passed, {} failed", results.len() - failed, failed);
            }
            if failed > 0 {
                return Err(Error::Computation(format!("{failed} corpus entries failed")));
            }
            Ok(())
        }
    }
}
