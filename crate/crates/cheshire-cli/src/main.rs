//! `cheshire`: simulate a two-path polarization interferometer.
//!
//! Exit codes: 0 success, 1 bad scenario text, 2 I/O failure, and 3 when
//! `compare` finds the models disagreeing.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cheshire_cli::bundled::{bundled_scenario, FIGURE_SCENARIOS};
use cheshire_cli::csv::write_csv;
use cheshire_cli::scenario::{apply_override, parse_scenario, print_scenario, Scenario};
use cheshire_cli::sweep::{run_sweep, SweepResult};
use cheshire_core::interferometer::Arm;
use cheshire_core::quantum::{weak_value, ProductOperator, ProductState};
use cheshire_core::Complex64;

const EXIT_BAD_SCENARIO: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_MODELS_DIFFER: u8 = 3;

/// Models agree when every row differs by no more than this.
const COMPARE_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "cheshire",
    about = "Two-path polarization interferometer, as classical waves and as a pre/post-selected photon",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario's phase sweep and write the result as CSV.
    Simulate {
        /// Scenario file path, or the name of a bundled scenario.
        #[arg(short = 's', long = "scenario")]
        scenario: String,
        /// Output CSV path; standard output when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Extra directive applied after parsing, as KEY=VALUE
        /// (e.g. `arm L=attenuate 0.5` or `postselect=V`). Repeatable.
        #[arg(long = "override", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Print the four path/polarization weak values of the pre- and
    /// post-selected photon.
    WeakValues,
    /// Run both models over a scenario and report their largest difference.
    Compare {
        /// Scenario file path, or the name of a bundled scenario.
        #[arg(short = 's', long = "scenario")]
        scenario: String,
    },
    /// Write one CSV per bundled demonstration scenario.
    Figures {
        /// Output directory, created if missing.
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Simulate {
            scenario,
            output,
            overrides,
        } => cmd_simulate(&scenario, output.as_deref(), &overrides),
        Command::WeakValues => cmd_weak_values(),
        Command::Compare { scenario } => cmd_compare(&scenario),
        Command::Figures { output } => cmd_figures(&output),
    }
}

fn cmd_simulate(scenario_ref: &str, output: Option<&Path>, overrides: &[String]) -> ExitCode {
    let scenario = match load_scenario(scenario_ref, overrides) {
        Ok(scenario) => scenario,
        Err(code) => return code,
    };
    let result = match sweep_or_diagnose(&scenario) {
        Ok(result) => result,
        Err(code) => return code,
    };

    let written = match output {
        Some(path) => fs::File::create(path)
            .and_then(|mut file| write_csv(&result, &mut file))
            .map_err(|err| (path.display().to_string(), err)),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write_csv(&result, &mut lock)
                .and_then(|()| lock.flush())
                .map_err(|err| ("standard output".to_string(), err))
        }
    };
    if let Err((target, err)) = written {
        eprintln!("error: cannot write {target}: {err}");
        return ExitCode::from(EXIT_IO);
    }
    ExitCode::SUCCESS
}

fn cmd_weak_values() -> ExitCode {
    let pre = ProductState::preselected();
    let post = ProductState::postselected();
    let table = [
        (
            "Pi_L       (photon in L)   ",
            ProductOperator::path_projector(Arm::Left),
        ),
        (
            "Pi_R       (photon in R)   ",
            ProductOperator::path_projector(Arm::Right),
        ),
        (
            "sigma*Pi_L (polarization L)",
            ProductOperator::polarization_flip(Arm::Left),
        ),
        (
            "sigma*Pi_R (polarization R)",
            ProductOperator::polarization_flip(Arm::Right),
        ),
    ];
    for (label, operator) in table {
        // The overlap is 1/2, so this cannot fail.
        let wv = weak_value(&operator, &pre, &post).expect("canonical states overlap");
        println!("{label} = {}", format_complex(wv));
    }
    ExitCode::SUCCESS
}

fn cmd_compare(scenario_ref: &str) -> ExitCode {
    let mut scenario = match load_scenario(scenario_ref, &[]) {
        Ok(scenario) => scenario,
        Err(code) => return code,
    };
    // Comparison needs both columns regardless of what the file selects.
    scenario.models = cheshire_cli::scenario::ModelSelection::Both;
    let result = match sweep_or_diagnose(&scenario) {
        Ok(result) => result,
        Err(code) => return code,
    };

    let (mut worst, mut worst_phi) = (0.0f64, 0.0f64);
    for row in &result.rows {
        let q = row.quantum_d1.expect("both models enabled");
        let diff = (q - row.d1_postselected).abs();
        if diff > worst {
            worst = diff;
            worst_phi = row.phi;
        }
    }

    println!("max |quantum - classical| = {worst:.3e}");
    if worst <= COMPARE_TOLERANCE {
        println!("models agree to {COMPARE_TOLERANCE:.0e}");
        ExitCode::SUCCESS
    } else {
        println!("models differ at phi = {worst_phi} (quantum model is ideal-only)");
        ExitCode::from(EXIT_MODELS_DIFFER)
    }
}

fn cmd_figures(directory: &Path) -> ExitCode {
    if let Err(err) = fs::create_dir_all(directory) {
        eprintln!("error: cannot create {}: {err}", directory.display());
        return ExitCode::from(EXIT_IO);
    }
    for name in FIGURE_SCENARIOS {
        let text = bundled_scenario(name).expect("figure scenarios are bundled");
        let scenario = match parse_scenario(text) {
            Ok(scenario) => scenario,
            Err(err) => {
                eprintln!("error: bundled scenario {name}: {err}");
                return ExitCode::from(EXIT_BAD_SCENARIO);
            }
        };
        let result = match sweep_or_diagnose(&scenario) {
            Ok(result) => result,
            Err(code) => return code,
        };
        let path = directory.join(format!("{name}.csv"));
        let written = fs::File::create(&path).and_then(|mut file| write_csv(&result, &mut file));
        if let Err(err) = written {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(EXIT_IO);
        }
        eprintln!("wrote {}", path.display());
    }
    ExitCode::SUCCESS
}

/// Resolve a scenario argument (path first, bundled name second), parse it
/// and apply any overrides. Diagnostics go to standard error; the returned
/// exit code follows the per-command contract.
fn load_scenario(scenario_ref: &str, overrides: &[String]) -> Result<Scenario, ExitCode> {
    let text = if Path::new(scenario_ref).is_file() {
        match fs::read_to_string(scenario_ref) {
            Ok(text) => text,
            Err(err) => {
                eprintln!("error: cannot read {scenario_ref}: {err}");
                return Err(ExitCode::from(EXIT_IO));
            }
        }
    } else if let Some(text) = bundled_scenario(scenario_ref) {
        text.to_string()
    } else {
        eprintln!("error: cannot read {scenario_ref}: no such file or bundled scenario");
        return Err(ExitCode::from(EXIT_IO));
    };

    let mut scenario = match parse_scenario(&text) {
        Ok(scenario) => scenario,
        Err(err) => {
            eprintln!("error: {scenario_ref}: {err}");
            return Err(ExitCode::from(EXIT_BAD_SCENARIO));
        }
    };
    for spec in overrides {
        if let Err(message) = apply_override(&mut scenario, spec) {
            eprintln!("error: --override {spec}: {message}");
            return Err(ExitCode::from(EXIT_BAD_SCENARIO));
        }
    }
    Ok(scenario)
}

fn sweep_or_diagnose(scenario: &Scenario) -> Result<SweepResult, ExitCode> {
    run_sweep(scenario).map_err(|err| {
        eprintln!("error: {err}");
        eprintln!("scenario was:\n{}", print_scenario(scenario));
        ExitCode::from(EXIT_BAD_SCENARIO)
    })
}

fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}
