//! Line-oriented scenario files describing one interferometer experiment:
//! which elements sit in each arm, the imperfection parameters, the phase
//! sweep grid, the post-selection axis and which models to evaluate.
//!
//! Grammar, one directive per line, `#` starts a comment, keywords are
//! case-insensitive:
//!
//! ```text
//! arm L: attenuate <x>      # intensity transmission in [0, 1]
//! arm R: hwp <angle>        # half-wave plate, rotation angle
//! arm L: phase <angle>      # extra path delay
//! imperfect: visibility <x> # fringe visibility in [0, 1]
//! imperfect: imbalance <x>  # arm power imbalance in [-1, 1]
//! imperfect: leak <angle>   # polarization leak at preselection
//! sweep: <start> <end> <steps>
//! postselect: H|V
//! model: classical|quantum|both
//! ```
//!
//! Angles are radians unless suffixed with `deg`. Arm directives append in
//! beam order; the other directives overwrite, so the last one wins.
//! Everything is optional: the empty file is the empty ideal interferometer
//! swept over a full period.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use cheshire_core::interferometer::{Arm, ArmConfig, Imperfections, OpticalElement};
use cheshire_core::jones::PolarizationAxis;

/// Phase grid: `steps` uniform samples over `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub start: f64,
    pub end: f64,
    pub steps: usize,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            start: 0.0,
            end: TAU,
            steps: 128,
        }
    }
}

/// Which models a sweep evaluates. The classical columns are always
/// produced; the quantum column appears for `Quantum` and `Both`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelSelection {
    Classical,
    Quantum,
    Both,
}

impl ModelSelection {
    pub fn includes_quantum(self) -> bool {
        matches!(self, ModelSelection::Quantum | ModelSelection::Both)
    }
}

/// One experiment description, as read from a scenario file.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub left: ArmConfig,
    pub right: ArmConfig,
    pub imperfections: Imperfections,
    pub sweep: SweepSpec,
    pub postselect: PolarizationAxis,
    pub models: ModelSelection,
}

impl Default for Scenario {
    fn default() -> Self {
        Self {
            left: ArmConfig::empty(),
            right: ArmConfig::empty(),
            imperfections: Imperfections::ideal(),
            sweep: SweepSpec::default(),
            postselect: PolarizationAxis::H,
            models: ModelSelection::Both,
        }
    }
}

/// Diagnostic for the first offending line of a scenario file.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

enum Directive {
    ArmElement(Arm, OpticalElement),
    Visibility(f64),
    Imbalance(f64),
    Leak(f64),
    Sweep(SweepSpec),
    Postselect(PolarizationAxis),
    Models(ModelSelection),
}

/// Parse a whole scenario file, stopping at the first bad line.
pub fn parse_scenario(text: &str) -> Result<Scenario, ParseError> {
    let mut scenario = Scenario::default();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let directive = parse_directive(line).map_err(|message| ParseError {
            line: index + 1,
            message,
        })?;
        apply_directive(&mut scenario, directive);
    }
    Ok(scenario)
}

/// Apply a `key=value` override, using the same grammar as file directives
/// with `:` swapped for `=`. Arm overrides append an element; the rest
/// replace the parsed setting, exactly as an extra line at the end of the
/// file would.
pub fn apply_override(scenario: &mut Scenario, spec: &str) -> Result<(), String> {
    let (key, value) = spec
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got `{spec}`"))?;
    let directive = parse_directive(&format!("{key}: {value}"))?;
    apply_directive(scenario, directive);
    Ok(())
}

/// Canonical text form: parsing the output yields an identical scenario.
pub fn print_scenario(scenario: &Scenario) -> String {
    let mut out = String::new();
    for (arm, label) in [(&scenario.left, 'L'), (&scenario.right, 'R')] {
        for element in &arm.elements {
            let (word, value) = match element {
                OpticalElement::Attenuate(t) => ("attenuate", t),
                OpticalElement::Hwp(theta) => ("hwp", theta),
                OpticalElement::PhaseShift(phi) => ("phase", phi),
            };
            let _ = writeln!(out, "arm {label}: {word} {value}");
        }
    }
    let imp = &scenario.imperfections;
    let _ = writeln!(out, "imperfect: visibility {}", imp.visibility());
    let _ = writeln!(out, "imperfect: imbalance {}", imp.arm_power_imbalance());
    let _ = writeln!(out, "imperfect: leak {}", imp.preselect_leak_angle());
    let _ = writeln!(
        out,
        "sweep: {} {} {}",
        scenario.sweep.start, scenario.sweep.end, scenario.sweep.steps
    );
    let axis = match scenario.postselect {
        PolarizationAxis::H => "H",
        PolarizationAxis::V => "V",
    };
    let _ = writeln!(out, "postselect: {axis}");
    let model = match scenario.models {
        ModelSelection::Classical => "classical",
        ModelSelection::Quantum => "quantum",
        ModelSelection::Both => "both",
    };
    let _ = writeln!(out, "model: {model}");
    out
}

fn apply_directive(scenario: &mut Scenario, directive: Directive) {
    match directive {
        Directive::ArmElement(Arm::Left, element) => scenario.left.elements.push(element),
        Directive::ArmElement(Arm::Right, element) => scenario.right.elements.push(element),
        Directive::Visibility(v) => {
            let imp = &scenario.imperfections;
            scenario.imperfections =
                Imperfections::new(v, imp.arm_power_imbalance(), imp.preselect_leak_angle())
                    .expect("range checked during parsing");
        }
        Directive::Imbalance(x) => {
            let imp = &scenario.imperfections;
            scenario.imperfections =
                Imperfections::new(imp.visibility(), x, imp.preselect_leak_angle())
                    .expect("range checked during parsing");
        }
        Directive::Leak(angle) => {
            let imp = &scenario.imperfections;
            scenario.imperfections =
                Imperfections::new(imp.visibility(), imp.arm_power_imbalance(), angle)
                    .expect("range checked during parsing");
        }
        Directive::Sweep(sweep) => scenario.sweep = sweep,
        Directive::Postselect(axis) => scenario.postselect = axis,
        Directive::Models(models) => scenario.models = models,
    }
}

fn parse_directive(line: &str) -> Result<Directive, String> {
    let (raw_key, value) = line
        .split_once(':')
        .ok_or_else(|| format!("missing `:` in directive `{line}`"))?;
    let key = raw_key
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_ascii_lowercase();
    let tokens: Vec<&str> = value.split_whitespace().collect();

    match key.as_str() {
        "arm l" => Ok(Directive::ArmElement(Arm::Left, parse_element(&tokens)?)),
        "arm r" => Ok(Directive::ArmElement(Arm::Right, parse_element(&tokens)?)),
        "imperfect" => parse_imperfection(&tokens),
        "sweep" => parse_sweep(&tokens),
        "postselect" => match tokens {
            _ if tokens.len() != 1 => Err("expected `postselect: H|V`".into()),
            _ => match tokens[0].to_ascii_lowercase().as_str() {
                "h" => Ok(Directive::Postselect(PolarizationAxis::H)),
                "v" => Ok(Directive::Postselect(PolarizationAxis::V)),
                other => Err(format!("unknown post-selection axis `{other}`")),
            },
        },
        "model" => match tokens {
            _ if tokens.len() != 1 => Err("expected `model: classical|quantum|both`".into()),
            _ => match tokens[0].to_ascii_lowercase().as_str() {
                "classical" => Ok(Directive::Models(ModelSelection::Classical)),
                "quantum" => Ok(Directive::Models(ModelSelection::Quantum)),
                "both" => Ok(Directive::Models(ModelSelection::Both)),
                other => Err(format!("unknown model `{other}`")),
            },
        },
        other => Err(format!("unknown directive `{other}`")),
    }
}

fn parse_element(tokens: &[&str]) -> Result<OpticalElement, String> {
    if tokens.len() != 2 {
        return Err("expected `attenuate <x>`, `hwp <angle>` or `phase <angle>`".into());
    }
    match tokens[0].to_ascii_lowercase().as_str() {
        "attenuate" => {
            let t = parse_number(tokens[1])?;
            if !(0.0..=1.0).contains(&t) {
                return Err(format!("transmission {t} out of range [0, 1]"));
            }
            Ok(OpticalElement::Attenuate(t))
        }
        "hwp" => Ok(OpticalElement::Hwp(parse_angle(tokens[1])?)),
        "phase" => Ok(OpticalElement::PhaseShift(parse_angle(tokens[1])?)),
        other => Err(format!("unknown element `{other}`")),
    }
}

fn parse_imperfection(tokens: &[&str]) -> Result<Directive, String> {
    if tokens.len() != 2 {
        return Err("expected `visibility <x>`, `imbalance <x>` or `leak <angle>`".into());
    }
    match tokens[0].to_ascii_lowercase().as_str() {
        "visibility" => {
            let v = parse_number(tokens[1])?;
            if !(0.0..=1.0).contains(&v) {
                return Err(format!("visibility {v} out of range [0, 1]"));
            }
            Ok(Directive::Visibility(v))
        }
        "imbalance" => {
            let x = parse_number(tokens[1])?;
            if !(-1.0..=1.0).contains(&x) {
                return Err(format!("imbalance {x} out of range [-1, 1]"));
            }
            Ok(Directive::Imbalance(x))
        }
        "leak" => Ok(Directive::Leak(parse_angle(tokens[1])?)),
        other => Err(format!("unknown imperfection `{other}`")),
    }
}

fn parse_sweep(tokens: &[&str]) -> Result<Directive, String> {
    if tokens.len() != 3 {
        return Err("expected `sweep: <start> <end> <steps>`".into());
    }
    let start = parse_angle(tokens[0])?;
    let end = parse_angle(tokens[1])?;
    let steps: usize = tokens[2]
        .parse()
        .map_err(|_| format!("step count `{}` is not a positive integer", tokens[2]))?;
    if steps < 2 {
        return Err(format!("sweep needs at least 2 steps, got {steps}"));
    }
    if end <= start {
        return Err(format!("sweep end {end} must exceed start {start}"));
    }
    Ok(Directive::Sweep(SweepSpec { start, end, steps }))
}

/// Radians by default; a trailing `deg` converts from degrees.
fn parse_angle(token: &str) -> Result<f64, String> {
    let lower = token.to_ascii_lowercase();
    if let Some(prefix) = lower.strip_suffix("deg") {
        Ok(parse_number(prefix)?.to_radians())
    } else {
        parse_number(token)
    }
}

fn parse_number(token: &str) -> Result<f64, String> {
    let value: f64 = token
        .parse()
        .map_err(|_| format!("`{token}` is not a number"))?;
    if !value.is_finite() {
        return Err(format!("`{token}` is not finite"));
    }
    Ok(value)
}
