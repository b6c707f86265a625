//! Jones calculus for fully polarized light: 2-component complex field
//! amplitudes in the (H, V) linear basis and the 2x2 matrices of the passive
//! optical elements used in the interferometer arms.
//!
//! Time dependence is handled by the phasor convention: a real field
//! `E0 cos(wt + phi)` is stored as the complex amplitude `E0 e^{i phi}` and
//! time-averaged intensities are |amplitude|^2 up to a common factor that
//! cancels in the normalized signals.

use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::Error;

/// Polarization axis passed by a linear polarizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolarizationAxis {
    H,
    V,
}

/// Complex field amplitude resolved along the ĥ and v̂ axes.
///
/// `|h|^2 + |v|^2` is the (time-averaged) intensity carried by the beam,
/// in the same normalized units throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationAmplitude {
    pub h: Complex64,
    pub v: Complex64,
}

impl PolarizationAmplitude {
    pub const fn new(h: Complex64, v: Complex64) -> Self {
        Self { h, v }
    }

    /// Unit amplitude along ĥ.
    pub fn horizontal() -> Self {
        Self::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Unit amplitude along v̂.
    pub fn vertical() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    pub fn zero() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Intensity `|h|^2 + |v|^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.h.norm_sqr() + self.v.norm_sqr()
    }

    /// Amplitude along one axis.
    pub fn component(&self, axis: PolarizationAxis) -> Complex64 {
        match axis {
            PolarizationAxis::H => self.h,
            PolarizationAxis::V => self.v,
        }
    }
}

impl Add for PolarizationAmplitude {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.h + rhs.h, self.v + rhs.v)
    }
}

impl Sub for PolarizationAmplitude {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.h - rhs.h, self.v - rhs.v)
    }
}

impl Mul<PolarizationAmplitude> for Complex64 {
    type Output = PolarizationAmplitude;

    fn mul(self, rhs: PolarizationAmplitude) -> PolarizationAmplitude {
        PolarizationAmplitude::new(self * rhs.h, self * rhs.v)
    }
}

impl Mul<PolarizationAmplitude> for f64 {
    type Output = PolarizationAmplitude;

    fn mul(self, rhs: PolarizationAmplitude) -> PolarizationAmplitude {
        Complex64::new(self, 0.0) * rhs
    }
}

/// 2x2 complex operator on polarization amplitudes, row-major in the
/// (H, V) basis. Element constructors only build passive matrices, so the
/// operator norm never exceeds 1: optics absorb or preserve energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesMatrix {
    pub m_hh: Complex64,
    pub m_hv: Complex64,
    pub m_vh: Complex64,
    pub m_vv: Complex64,
}

impl JonesMatrix {
    pub const fn new(m_hh: Complex64, m_hv: Complex64, m_vh: Complex64, m_vv: Complex64) -> Self {
        Self {
            m_hh,
            m_hv,
            m_vh,
            m_vv,
        }
    }

    fn from_real(m_hh: f64, m_hv: f64, m_vh: f64, m_vv: f64) -> Self {
        Self::new(
            Complex64::new(m_hh, 0.0),
            Complex64::new(m_hv, 0.0),
            Complex64::new(m_vh, 0.0),
            Complex64::new(m_vv, 0.0),
        )
    }

    pub fn identity() -> Self {
        Self::from_real(1.0, 0.0, 0.0, 1.0)
    }

    pub fn zero() -> Self {
        Self::from_real(0.0, 0.0, 0.0, 0.0)
    }

    /// Matrix-vector action on a polarization amplitude.
    pub fn apply(&self, a: PolarizationAmplitude) -> PolarizationAmplitude {
        PolarizationAmplitude::new(
            self.m_hh * a.h + self.m_hv * a.v,
            self.m_vh * a.h + self.m_vv * a.v,
        )
    }
}

impl Mul for JonesMatrix {
    type Output = Self;

    /// Matrix product `self * rhs`: `rhs` acts first.
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.m_hh * rhs.m_hh + self.m_hv * rhs.m_vh,
            self.m_hh * rhs.m_hv + self.m_hv * rhs.m_vv,
            self.m_vh * rhs.m_hh + self.m_vv * rhs.m_vh,
            self.m_vh * rhs.m_hv + self.m_vv * rhs.m_vv,
        )
    }
}

impl Mul<PolarizationAmplitude> for JonesMatrix {
    type Output = PolarizationAmplitude;

    fn mul(self, rhs: PolarizationAmplitude) -> PolarizationAmplitude {
        self.apply(rhs)
    }
}

/// Polarization-independent absorber with intensity transmission `t`.
///
/// Acts on amplitudes, so the matrix is `sqrt(t)` times the identity.
/// `t` must lie in `[0, 1]`; `t = 0` is a total absorber.
pub fn attenuator(transmission: f64) -> Result<JonesMatrix, Error> {
    if !(0.0..=1.0).contains(&transmission) {
        return Err(Error::TransmissionOutOfRange(transmission));
    }
    let amp = libm::sqrt(transmission);
    Ok(JonesMatrix::from_real(amp, 0.0, 0.0, amp))
}

/// Half-wave plate with its fast axis at `theta_eff / 2` from ĥ:
///
/// ```text
/// [ cos(theta_eff)   sin(theta_eff) ]
/// [ sin(theta_eff)  -cos(theta_eff) ]
/// ```
///
/// This is a reflection of the polarization plane about the fast axis, not
/// a rotation: ĥ maps to `cos(theta_eff) ĥ + sin(theta_eff) v̂` and v̂ maps
/// to `sin(theta_eff) ĥ - cos(theta_eff) v̂`. Used as the polarization
/// "rotator" placed in the arms, with `theta_eff` as the rotation angle.
pub fn hwp(theta_eff: f64) -> JonesMatrix {
    let c = libm::cos(theta_eff);
    let s = libm::sin(theta_eff);
    JonesMatrix::from_real(c, s, s, -c)
}

/// Polarization-independent path delay: `e^{i phi}` times the identity.
pub fn phase_shift(phi: f64) -> JonesMatrix {
    let factor = Complex64::new(libm::cos(phi), libm::sin(phi));
    JonesMatrix::new(
        factor,
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        factor,
    )
}

/// Absorptive linear polarizer: projector onto the chosen axis.
pub fn linear_polarizer(axis: PolarizationAxis) -> JonesMatrix {
    match axis {
        PolarizationAxis::H => JonesMatrix::from_real(1.0, 0.0, 0.0, 0.0),
        PolarizationAxis::V => JonesMatrix::from_real(0.0, 0.0, 0.0, 1.0),
    }
}
