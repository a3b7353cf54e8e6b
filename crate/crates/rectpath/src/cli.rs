//! Command-line front end.
//!
//! Subcommands parse JSON words or inline patterns, dispatch into the
//! library and emit machine-readable JSON reports. Identical configuration
//! and seed reproduce byte-identical reports; every report embeds the seed
//! and the convention triple. Exit code 0 means the computation completed
//! (the verdict lives in the payload); internal-consistency violations get
//! their own exit code and a diagnostic dump.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num::complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bautin::{bautin_system, BautinSystem};
use crate::center::{
    certificate_bound, certify_center, reduce_word, MAX_CERTIFICATE_DEGREE,
};
use crate::error::Error;
use crate::json::{
    encode_map_series, parse_word_file, BautinSystemJson, CenterVerdictJson, WordJson,
};
use crate::oracle::{convergence_check, word_flow};
use crate::return_map::{return_map, route_a, route_b, route_c, Route};
use crate::sample::random_word;
use crate::scalar::GaussianRational;
use crate::word::Word;
use crate::{Conventions, CONVENTIONS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INTERNAL_CONSISTENCY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "rectpath",
    about = "First-return maps, center certificates and Bautin polynomials \
             for rectangular coefficient paths",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the first-return map coefficients of a word by one or all routes.
    Returnmap {
        /// Word JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Override the word's truncation degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Route: a, b, c or all (all cross-asserts exact agreement).
        #[arg(long, default_value = "all")]
        route: String,
        /// Report seed tag (reports embed it; this command is deterministic).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide and certify whether a word is a center.
    Center {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generate the symbolic center conditions for an axis pattern.
    Bautin {
        /// Axis pattern, comma separated: --axes 1,2
        #[arg(long, value_delimiter = ',', required = true)]
        axes: Vec<u32>,
        /// How many coefficients to generate (default d+1).
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Randomized route-agreement and center-bound probes.
    Crosscheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Truncation degree for the route comparison.
        #[arg(long, default_value_t = 12)]
        degree: usize,
        /// Maximum word length.
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Maximum axis index.
        #[arg(long, default_value_t = 4)]
        max_axis: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare the closed-form flow against the truncated series.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 10)]
        degree: usize,
        /// Radius for the single flow evaluation echoed in the report.
        #[arg(long, default_value_t = 1e-2)]
        r0: f64,
        /// Convergence radii, decreasing, comma separated.
        #[arg(long, value_delimiter = ',')]
        radii: Option<Vec<f64>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ReturnMapReport {
    command: &'static str,
    seed: u64,
    conventions: Conventions,
    word: WordJson,
    truncation: usize,
    route: String,
    routes_checked: Vec<&'static str>,
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct CenterReport {
    command: &'static str,
    seed: u64,
    conventions: Conventions,
    word: WordJson,
    verdict: CenterVerdictJson,
}

#[derive(Serialize)]
struct BautinReport {
    command: &'static str,
    seed: u64,
    conventions: Conventions,
    system: BautinSystemJson,
}

#[derive(Serialize)]
struct TrialFailure {
    trial: usize,
    axes: Vec<u32>,
    detail: String,
}

#[derive(Serialize)]
struct CrosscheckReport {
    command: &'static str,
    seed: u64,
    conventions: Conventions,
    trials: usize,
    degree: usize,
    max_len: usize,
    max_axis: u32,
    route_agreement_trials: usize,
    centers_verified: usize,
    noncenters_with_witness: usize,
    bound_skipped: usize,
    failures: Vec<TrialFailure>,
    all_pass: bool,
}

#[derive(Serialize)]
struct ComplexJson {
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct ResidualJson {
    radius: f64,
    residual: f64,
    noise_floor: f64,
    informative: bool,
}

#[derive(Serialize)]
struct OracleReport {
    command: &'static str,
    seed: u64,
    conventions: Conventions,
    word: WordJson,
    truncation: usize,
    r0: f64,
    flow_at_r0: Option<ComplexJson>,
    series_at_r0: Option<ComplexJson>,
    radii: Vec<f64>,
    residuals: Vec<ResidualJson>,
    slope: Option<f64>,
    required_slope: f64,
    status: &'static str,
    at_machine_precision: bool,
    detail: Option<String>,
}

fn load_word(path: &Path, degree: Option<usize>) -> Result<Word<GaussianRational>, Error> {
    let w = parse_word_file(path)?;
    Ok(match degree {
        Some(n) => w.with_trunc(n),
        None => w,
    })
}

fn render<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports always serialize");
    s.push('\n');
    s
}

/// Execute a subcommand and produce the rendered JSON report.
pub fn execute(command: &Command) -> Result<String, Error> {
    match command {
        Command::Returnmap {
            input,
            degree,
            route,
            seed,
            output: _,
        } => {
            let word = load_word(input, *degree)?;
            let route_choice: Route = route.parse()?;
            let (map, checked): (_, Vec<&'static str>) = match route_choice {
                Route::A => (route_a(&word), vec!["a"]),
                Route::B => (route_b(&word)?, vec!["b"]),
                Route::C => (route_c(&word), vec!["c"]),
                Route::All => {
                    let checked =
                        if word.trunc() <= crate::algebra::effective_weight_cap() {
                            vec!["a", "b", "c"]
                        } else {
                            vec!["a", "c"]
                        };
                    (return_map(&word, Route::All)?, checked)
                }
            };
            Ok(render(&ReturnMapReport {
                command: "returnmap",
                seed: *seed,
                conventions: CONVENTIONS,
                truncation: word.trunc(),
                word: WordJson::encode(&word),
                route: route.clone(),
                routes_checked: checked,
                coefficients: encode_map_series(&map),
            }))
        }
        Command::Center {
            input,
            seed,
            output: _,
        } => {
            let word = load_word(input, None)?;
            let verdict = certify_center(&word)?;
            Ok(render(&CenterReport {
                command: "center",
                seed: *seed,
                conventions: CONVENTIONS,
                word: WordJson::encode(&word),
                verdict: CenterVerdictJson::encode(&verdict),
            }))
        }
        Command::Bautin {
            axes,
            count,
            seed,
            output: _,
        } => {
            let count = count.unwrap_or(certificate_bound(axes) as usize + 1);
            let sys: BautinSystem = bautin_system(axes, count)?;
            Ok(render(&BautinReport {
                command: "bautin",
                seed: *seed,
                conventions: CONVENTIONS,
                system: BautinSystemJson::encode(&sys),
            }))
        }
        Command::Crosscheck {
            seed,
            trials,
            degree,
            max_len,
            max_axis,
            output: _,
        } => {
            let report = run_crosscheck(*seed, *trials, *degree, *max_len, *max_axis)?;
            Ok(render(&report))
        }
        Command::Oracle {
            input,
            degree,
            r0,
            radii,
            seed,
            output: _,
        } => {
            let word = load_word(input, Some(*degree))?;
            let radii = radii
                .clone()
                .unwrap_or_else(|| vec![1e-1, 1e-2, 1e-3, 1e-4]);
            let report = run_oracle(&word, *degree, *r0, &radii, *seed)?;
            Ok(render(&report))
        }
    }
}

fn run_crosscheck(
    seed: u64,
    trials: usize,
    degree: usize,
    max_len: usize,
    max_axis: u32,
) -> Result<CrosscheckReport, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut centers_verified = 0usize;
    let mut noncenters_with_witness = 0usize;
    let mut bound_skipped = 0usize;
    for trial in 0..trials {
        let word = random_word(&mut rng, max_len, max_axis, degree);
        // Route agreement (All asserts it and errors on disagreement).
        if let Err(e) = return_map(&word, Route::All) {
            match e {
                Error::InternalConsistency(detail) => {
                    failures.push(TrialFailure {
                        trial,
                        axes: word.axes(),
                        detail,
                    });
                    continue;
                }
                other => return Err(other),
            }
        }
        // Center bound probe via the double-method certificate.
        let reduced = reduce_word(&word);
        if certificate_bound(&reduced.axes()) as usize + 1 > MAX_CERTIFICATE_DEGREE {
            bound_skipped += 1;
            continue;
        }
        match certify_center(&word) {
            Ok(verdict) => {
                if verdict.is_center {
                    centers_verified += 1;
                } else {
                    noncenters_with_witness += 1;
                }
            }
            Err(Error::InternalConsistency(detail)) => failures.push(TrialFailure {
                trial,
                axes: word.axes(),
                detail,
            }),
            Err(other) => return Err(other),
        }
    }
    let all_pass = failures.is_empty();
    Ok(CrosscheckReport {
        command: "crosscheck",
        seed,
        conventions: CONVENTIONS,
        trials,
        degree,
        max_len,
        max_axis,
        route_agreement_trials: trials,
        centers_verified,
        noncenters_with_witness,
        bound_skipped,
        failures,
        all_pass,
    })
}

fn run_oracle(
    word: &Word<GaussianRational>,
    degree: usize,
    r0: f64,
    radii: &[f64],
    seed: u64,
) -> Result<OracleReport, Error> {
    let r0c = Complex64::new(r0, 0.0);
    let (flow_at_r0, series_at_r0) = match word_flow(word, r0c) {
        Ok(flow) => {
            let series = return_map(word, Route::All)?;
            let v = series.eval(r0c);
            (
                Some(ComplexJson {
                    re: flow.value.re,
                    im: flow.value.im,
                }),
                Some(ComplexJson { re: v.re, im: v.im }),
            )
        }
        Err(Error::BranchCut { .. }) => (None, None),
        Err(other) => return Err(other),
    };
    match convergence_check(word, degree, radii) {
        Ok(report) => Ok(OracleReport {
            command: "oracle",
            seed,
            conventions: CONVENTIONS,
            word: WordJson::encode(word),
            truncation: degree,
            r0,
            flow_at_r0,
            series_at_r0,
            radii: radii.to_vec(),
            residuals: report
                .points
                .iter()
                .map(|p| ResidualJson {
                    radius: p.radius,
                    residual: p.residual,
                    noise_floor: p.noise_floor,
                    informative: p.informative,
                })
                .collect(),
            slope: report.slope,
            required_slope: report.required_slope,
            status: if report.passed { "pass" } else { "fail" },
            at_machine_precision: report.at_machine_precision,
            detail: None,
        }),
        // A branch violation does not decide anything: inconclusive report.
        Err(Error::BranchCut { letter }) => Ok(OracleReport {
            command: "oracle",
            seed,
            conventions: CONVENTIONS,
            word: WordJson::encode(word),
            truncation: degree,
            r0,
            flow_at_r0,
            series_at_r0,
            radii: radii.to_vec(),
            residuals: Vec::new(),
            slope: None,
            required_slope: degree as f64 + 0.5,
            status: "inconclusive",
            at_machine_precision: false,
            detail: Some(format!("branch cut at letter {letter}")),
        }),
        Err(other) => Err(other),
    }
}

fn output_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Returnmap { output, .. }
        | Command::Center { output, .. }
        | Command::Bautin { output, .. }
        | Command::Crosscheck { output, .. }
        | Command::Oracle { output, .. } => output.as_ref(),
    }
}

/// Run a parsed command line to completion: emit the report and map errors
/// to exit codes. Internal-consistency violations dump their diagnostics to
/// stderr and exit with a distinct code.
pub fn run(cli: Cli) -> i32 {
    match execute(&cli.command) {
        Ok(report) => {
            if let Some(path) = output_path(&cli.command) {
                if let Err(e) = std::fs::write(path, &report) {
                    eprintln!("rectpath: cannot write {}: {e}", path.display());
                    return EXIT_ERROR;
                }
            } else {
                print!("{report}");
            }
            EXIT_OK
        }
        Err(Error::InternalConsistency(detail)) => {
            eprintln!("rectpath: INTERNAL CONSISTENCY VIOLATION");
            eprintln!("rectpath: {detail}");
            eprintln!("rectpath: this is a bug in the implementation, not a property of the input");
            EXIT_INTERNAL_CONSISTENCY
        }
        Err(e) => {
            eprintln!("rectpath: {e}");
            EXIT_ERROR
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_word(dir: &std::path::Path, name: &str, body: &str) -> PathBuf {
        let path = dir.join(name);
        std::fs::write(&path, body).unwrap();
        path
    }

    #[test]
    fn returnmap_report_round_trip() {
        let dir = std::env::temp_dir().join("rectpath-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = write_word(
            &dir,
            "w.json",
            r#"{"truncation":6,"letters":[
                {"axis":1,"amp":{"re":"1/2","im":"0"}},
                {"axis":2,"amp":{"re":"1/3","im":"0"}}]}"#,
        );
        let cmd = Command::Returnmap {
            input: path,
            degree: None,
            route: "all".into(),
            seed: 0,
            output: None,
        };
        let report = execute(&cmd).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(v["command"], "returnmap");
        assert_eq!(v["coefficients"][0], "1/2");
        // c2 = a^2 + b = 1/4 + 1/3 = 7/12
        assert_eq!(v["coefficients"][1], "7/12");
        assert_eq!(v["routes_checked"].as_array().unwrap().len(), 3);
        // determinism
        assert_eq!(report, execute(&cmd).unwrap());
    }

    #[test]
    fn center_report_on_cancelling_word() {
        let dir = std::env::temp_dir().join("rectpath-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = write_word(
            &dir,
            "cancel.json",
            r#"{"truncation":8,"letters":[
                {"axis":1,"amp":{"re":"1/2","im":"0"}},
                {"axis":1,"amp":{"re":"-1/2","im":"0"}}]}"#,
        );
        let cmd = Command::Center {
            input: path,
            seed: 0,
            output: None,
        };
        let report = execute(&cmd).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(v["verdict"]["is_center"], true);
        assert_eq!(v["verdict"]["method"], "both");
    }

    #[test]
    fn crosscheck_seeded_all_pass() {
        let report = run_crosscheck(7, 25, 10, 4, 3).unwrap();
        assert!(report.all_pass);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn bautin_command_defaults_to_bound() {
        let cmd = Command::Bautin {
            axes: vec![1, 2],
            count: Some(3),
            seed: 0,
            output: None,
        };
        let report = execute(&cmd).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(v["system"]["d"], 1);
        assert_eq!(v["system"]["polynomials"].as_array().unwrap().len(), 3);
    }
}
