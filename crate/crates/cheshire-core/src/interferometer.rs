//! Classical propagation through the two-arm interferometer.
//!
//! The beam enters split over arm L (horizontal polarization) and arm R
//! (vertical), picks up a relative phase and passes the per-arm elements,
//! then the arms recombine on a lossless non-polarizing beamsplitter:
//!
//! ```text
//! out1 = (A_L + A_R) / sqrt(2)        out2 = (A_L - A_R) / sqrt(2)
//! ```
//!
//! applied per polarization component. Detector 1 sits behind a linear
//! polarizer; detector 2 sees the full port power. All reported intensities
//! are normalized so the empty ideal interferometer reads
//! `d1_postselected = 1` at every phase, which puts the total injected power
//! at [`NORMALIZED_INPUT_POWER`] and lets constructive fringes reach 4.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::jones::{self, JonesMatrix, PolarizationAmplitude, PolarizationAxis};
use crate::Error;

/// The two interferometer paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arm {
    Left,
    Right,
}

/// One in-arm component, tagged with its parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OpticalElement {
    /// Neutral-density absorber with intensity transmission in `[0, 1]`.
    Attenuate(f64),
    /// Half-wave plate, see [`jones::hwp`] for the angle convention.
    Hwp(f64),
    /// Path delay in radians.
    PhaseShift(f64),
}

impl OpticalElement {
    /// Jones matrix of this element.
    pub fn jones(&self) -> Result<JonesMatrix, Error> {
        match *self {
            OpticalElement::Attenuate(t) => jones::attenuator(t),
            OpticalElement::Hwp(theta_eff) => Ok(jones::hwp(theta_eff)),
            OpticalElement::PhaseShift(phi) => Ok(jones::phase_shift(phi)),
        }
    }
}

/// Ordered contents of one arm; elements act in listed order along the beam.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ArmConfig {
    pub elements: Vec<OpticalElement>,
}

impl ArmConfig {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(elements: Vec<OpticalElement>) -> Self {
        Self { elements }
    }

    /// Combined Jones matrix of the arm, first listed element applied first.
    pub fn transfer(&self) -> Result<JonesMatrix, Error> {
        let mut total = JonesMatrix::identity();
        for element in &self.elements {
            total = element.jones()? * total;
        }
        Ok(total)
    }
}

impl From<Vec<OpticalElement>> for ArmConfig {
    fn from(elements: Vec<OpticalElement>) -> Self {
        Self { elements }
    }
}

/// Deviations of the real apparatus from the ideal model.
///
/// * `visibility` scales only the L-R interference cross terms of each
///   output intensity (imperfect beam overlap).
/// * `arm_power_imbalance` x weights the input amplitudes by
///   `sqrt((1 + x) / 2)` on L and `sqrt((1 - x) / 2)` on R.
/// * `preselect_leak_angle` ε leaks each arm's polarization into the
///   orthogonal axis: arm L enters as `(cos ε, sin ε)` and arm R as
///   `(-sin ε, cos ε)` instead of pure ĥ, v̂.
///
/// The ideal setting `(1, 0, 0)` reproduces the ideal model bit for bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Imperfections {
    visibility: f64,
    arm_power_imbalance: f64,
    preselect_leak_angle: f64,
}

impl Imperfections {
    pub fn new(
        visibility: f64,
        arm_power_imbalance: f64,
        preselect_leak_angle: f64,
    ) -> Result<Self, Error> {
        if !(0.0..=1.0).contains(&visibility) {
            return Err(Error::VisibilityOutOfRange(visibility));
        }
        if !(-1.0..=1.0).contains(&arm_power_imbalance) {
            return Err(Error::ImbalanceOutOfRange(arm_power_imbalance));
        }
        Ok(Self {
            visibility,
            arm_power_imbalance,
            preselect_leak_angle,
        })
    }

    /// Perfect optics: full visibility, balanced arms, no leakage.
    pub fn ideal() -> Self {
        Self {
            visibility: 1.0,
            arm_power_imbalance: 0.0,
            preselect_leak_angle: 0.0,
        }
    }

    pub fn visibility(&self) -> f64 {
        self.visibility
    }

    pub fn arm_power_imbalance(&self) -> f64 {
        self.arm_power_imbalance
    }

    pub fn preselect_leak_angle(&self) -> f64 {
        self.preselect_leak_angle
    }

    pub fn is_ideal(&self) -> bool {
        *self == Self::ideal()
    }
}

impl Default for Imperfections {
    fn default() -> Self {
        Self::ideal()
    }
}

/// One full experiment at a single phase setting.
#[derive(Debug, Clone, PartialEq)]
pub struct InterferometerConfig {
    pub left: ArmConfig,
    pub right: ArmConfig,
    /// Extra path delay in arm L, radians.
    pub phase: f64,
    pub imperfections: Imperfections,
    /// Axis passed by the polarizer in front of detector 1.
    pub postselect: PolarizationAxis,
}

impl InterferometerConfig {
    /// Ideal imperfections and an H polarizer at detector 1.
    pub fn new(left: ArmConfig, right: ArmConfig, phase: f64) -> Self {
        Self {
            left,
            right,
            phase,
            imperfections: Imperfections::ideal(),
            postselect: PolarizationAxis::H,
        }
    }
}

/// Normalized intensities at the two output ports.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorReadout {
    /// Detector 1 signal behind the polarizer; 1 for the empty ideal setup.
    pub d1_postselected: f64,
    /// Full detector-1 port power, before the polarizer.
    pub d1_total: f64,
    /// Full detector-2 port power (no polarizer on this port).
    pub d2_total: f64,
}

/// Total injected power in normalized units. Lossless configurations
/// satisfy `d1_total + d2_total == NORMALIZED_INPUT_POWER` at every phase.
pub const NORMALIZED_INPUT_POWER: f64 = 4.0;

/// `d1_postselected` of the empty ideal interferometer before normalization:
/// half the unit input power reaches port 1 and half of that is horizontal.
const EMPTY_IDEAL_D1: f64 = 0.25;

/// Propagate the split input beam through both arms, recombine on the
/// beamsplitter and read out the detectors.
///
/// Arm L starts as `w_L (cos ε, sin ε)` and arm R as `w_R (-sin ε, cos ε)`
/// with the weights and leak angle taken from the imperfections (ideal:
/// equal weights and pure ĥ/v̂). The phase delay acts on arm L first,
/// followed by each arm's elements in listed order. The visibility scales
/// only the interference cross terms.
pub fn propagate(config: &InterferometerConfig) -> Result<DetectorReadout, Error> {
    let imp = &config.imperfections;

    let w_l = libm::sqrt((1.0 + imp.arm_power_imbalance) / 2.0);
    let w_r = libm::sqrt((1.0 - imp.arm_power_imbalance) / 2.0);
    let (leak_sin, leak_cos) = (
        libm::sin(imp.preselect_leak_angle),
        libm::cos(imp.preselect_leak_angle),
    );

    let enter_l = w_l
        * PolarizationAmplitude::new(Complex64::new(leak_cos, 0.0), Complex64::new(leak_sin, 0.0));
    let enter_r = w_r
        * PolarizationAmplitude::new(
            Complex64::new(-leak_sin, 0.0),
            Complex64::new(leak_cos, 0.0),
        );

    let exit_l = (config.left.transfer()? * jones::phase_shift(config.phase)).apply(enter_l);
    let exit_r = config.right.transfer()?.apply(enter_r);

    // Per-component port intensities with the visibility on the cross term:
    // |(a + b)/sqrt(2)|^2 = (|a|^2 + |b|^2)/2 + v Re(a conj(b)).
    let port = |a: Complex64, b: Complex64| {
        let base = 0.5 * (a.norm_sqr() + b.norm_sqr());
        let cross = imp.visibility * (a * b.conj()).re;
        (base + cross, base - cross)
    };
    let (out1_h, out2_h) = port(exit_l.h, exit_r.h);
    let (out1_v, out2_v) = port(exit_l.v, exit_r.v);

    let selected = match config.postselect {
        PolarizationAxis::H => out1_h,
        PolarizationAxis::V => out1_v,
    };

    Ok(DetectorReadout {
        d1_postselected: selected / EMPTY_IDEAL_D1,
        d1_total: (out1_h + out1_v) / EMPTY_IDEAL_D1,
        d2_total: (out2_h + out2_v) / EMPTY_IDEAL_D1,
    })
}

/// Closed-form normalized detector-1 signal of the ideal model with an
/// attenuator and a half-wave plate in each arm:
///
/// ```text
/// I = T_L cos^2(θ_L) + T_R sin^2(θ_R)
///   + 2 cos(φ) sqrt(T_L T_R) cos(θ_L) sin(θ_R)
/// ```
///
/// Serves as an independent oracle for [`propagate`] and for the quantum
/// post-selected probability.
pub fn closed_form_intensity(
    t_l: f64,
    t_r: f64,
    theta_l: f64,
    theta_r: f64,
    phi: f64,
) -> Result<f64, Error> {
    if !(0.0..=1.0).contains(&t_l) {
        return Err(Error::TransmissionOutOfRange(t_l));
    }
    if !(0.0..=1.0).contains(&t_r) {
        return Err(Error::TransmissionOutOfRange(t_r));
    }
    let (cos_l, sin_r) = (libm::cos(theta_l), libm::sin(theta_r));
    Ok(t_l * cos_l * cos_l
        + t_r * sin_r * sin_r
        + 2.0 * libm::cos(phi) * libm::sqrt(t_l * t_r) * cos_l * sin_r)
}

/// Result of fitting a phase sweep to `dc + amplitude cos(φ - phase_offset)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FringeFit {
    pub dc: f64,
    /// Fringe amplitude, always >= 0.
    pub amplitude: f64,
    pub phase_offset: f64,
}

impl FringeFit {
    /// Fitted model evaluated at `phi`.
    pub fn eval(&self, phi: f64) -> f64 {
        self.dc + self.amplitude * libm::cos(phi - self.phase_offset)
    }
}

/// Least-squares fit of `(φ, intensity)` samples to a single cosine fringe.
///
/// The samples must be uniform, cover at least one full 2π period and
/// number at least 8. Every signal this crate produces is exactly of the
/// form `dc + a cos φ + b sin φ`, so the fit residual on model output is at
/// rounding level.
pub fn fringe_decompose(samples: &[(f64, f64)]) -> Result<FringeFit, Error> {
    let n = samples.len();
    if n < 8 {
        return Err(Error::TooFewSamples(n));
    }
    let first = samples[0].0;
    let last = samples[n - 1].0;
    // Uniform grid: the covered span extends one step past the last sample.
    let span = (last - first) * n as f64 / (n - 1) as f64;
    if span < 2.0 * core::f64::consts::PI - 1e-9 {
        return Err(Error::SweepTooShort(span));
    }

    // Normal equations for the basis (1, cos φ, sin φ).
    let (mut s_c, mut s_s, mut s_cc, mut s_cs, mut s_ss) = (0.0, 0.0, 0.0, 0.0, 0.0);
    let (mut b_1, mut b_c, mut b_s) = (0.0, 0.0, 0.0);
    for &(phi, y) in samples {
        let (c, s) = (libm::cos(phi), libm::sin(phi));
        s_c += c;
        s_s += s;
        s_cc += c * c;
        s_cs += c * s;
        s_ss += s * s;
        b_1 += y;
        b_c += y * c;
        b_s += y * s;
    }
    let s_n = n as f64;

    // 3x3 symmetric solve by cofactor expansion.
    let det = s_n * (s_cc * s_ss - s_cs * s_cs) - s_c * (s_c * s_ss - s_cs * s_s)
        + s_s * (s_c * s_cs - s_cc * s_s);
    let dc = (b_1 * (s_cc * s_ss - s_cs * s_cs) - s_c * (b_c * s_ss - s_cs * b_s)
        + s_s * (b_c * s_cs - s_cc * b_s))
        / det;
    let a = (s_n * (b_c * s_ss - b_s * s_cs) - b_1 * (s_c * s_ss - s_cs * s_s)
        + s_s * (s_c * b_s - b_c * s_s))
        / det;
    let b = (s_n * (s_cc * b_s - s_cs * b_c) - s_c * (s_c * b_s - b_c * s_s)
        + b_1 * (s_c * s_cs - s_cc * s_s))
        / det;

    Ok(FringeFit {
        dc,
        amplitude: libm::hypot(a, b),
        phase_offset: libm::atan2(b, a),
    })
}
