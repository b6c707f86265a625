//! Single-photon model: pre- and post-selected states on the
//! polarization Ⓧ path product space, weak values, and the post-selected
//! detection probability for arbitrary in-arm elements.
//!
//! The 4-dimensional basis is ordered `(H⊗L, H⊗R, V⊗L, V⊗R)`, i.e. index
//! `2 * polarization + path` with `H, L = 0` and `V, R = 1`. All 4x4
//! operators are built through [`ProductOperator::tensor`] so the ordering
//! lives in exactly one place.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::interferometer::{self, Arm, ArmConfig};
use crate::jones::{self, JonesMatrix, PolarizationAxis};
use crate::Error;

const DIM: usize = 4;

/// Overlaps at or below this magnitude count as orthogonal post-selection.
const OVERLAP_FLOOR: f64 = 1e-12;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Pure state on polarization Ⓧ path, basis `(H⊗L, H⊗R, V⊗L, V⊗R)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductState {
    pub amplitudes: [Complex64; 4],
}

impl ProductState {
    pub const fn new(amplitudes: [Complex64; 4]) -> Self {
        Self { amplitudes }
    }

    /// The prepared state `(|H⟩|L⟩ + |V⟩|R⟩) / sqrt(2)`: horizontal light
    /// in the left arm, vertical in the right.
    pub fn preselected() -> Self {
        let c = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self::new([c, zero(), zero(), c])
    }

    /// The state accepted by detector 1 behind its H polarizer:
    /// `|H⟩ (|L⟩ + |R⟩) / sqrt(2)`.
    pub fn postselected() -> Self {
        Self::postselected_axis(PolarizationAxis::H)
    }

    /// Post-selected state for a polarizer passing the given axis.
    pub fn postselected_axis(axis: PolarizationAxis) -> Self {
        let c = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        match axis {
            PolarizationAxis::H => Self::new([c, c, zero(), zero()]),
            PolarizationAxis::V => Self::new([zero(), zero(), c, c]),
        }
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        let mut acc = zero();
        for i in 0..DIM {
            acc += self.amplitudes[i].conj() * other.amplitudes[i];
        }
        acc
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Probability of finding the photon in the given arm.
    pub fn path_probability(&self, arm: Arm) -> f64 {
        let path = match arm {
            Arm::Left => 0,
            Arm::Right => 1,
        };
        self.amplitudes[path].norm_sqr() + self.amplitudes[2 + path].norm_sqr()
    }
}

/// Linear operator on the product space, same basis as [`ProductState`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductOperator {
    pub entries: [[Complex64; 4]; 4],
}

impl ProductOperator {
    pub const fn from_entries(entries: [[Complex64; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn identity() -> Self {
        let mut entries = [[zero(); 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = one();
        }
        Self { entries }
    }

    /// Tensor product of a polarization-space and a path-space operator:
    /// `entries[2p + a][2q + b] = pol[p][q] * path[a][b]`.
    pub fn tensor(pol: [[Complex64; 2]; 2], path: [[Complex64; 2]; 2]) -> Self {
        let mut entries = [[zero(); 4]; 4];
        for p in 0..2 {
            for q in 0..2 {
                for a in 0..2 {
                    for b in 0..2 {
                        entries[2 * p + a][2 * q + b] = pol[p][q] * path[a][b];
                    }
                }
            }
        }
        Self { entries }
    }

    /// `1 ⊗ |arm⟩⟨arm|`: projector onto one path, blind to polarization.
    pub fn path_projector(arm: Arm) -> Self {
        Self::tensor(pol_identity(), path_projector_2x2(arm))
    }

    /// `σ_x ⊗ |arm⟩⟨arm|`: the H↔V polarization flip confined to one arm.
    /// Its weak value locates where the polarization responds to rotation.
    pub fn polarization_flip(arm: Arm) -> Self {
        Self::tensor(sigma_x(), path_projector_2x2(arm))
    }

    pub fn apply(&self, state: &ProductState) -> ProductState {
        let mut out = [zero(); 4];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                out[i] += entry * state.amplitudes[j];
            }
        }
        ProductState::new(out)
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        let mut entries = self.entries;
        for row in &mut entries {
            for entry in row {
                *entry *= factor;
            }
        }
        Self { entries }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut entries = self.entries;
        for (row, other_row) in entries.iter_mut().zip(&other.entries) {
            for (entry, other_entry) in row.iter_mut().zip(other_row) {
                *entry += other_entry;
            }
        }
        Self { entries }
    }
}

fn pol_identity() -> [[Complex64; 2]; 2] {
    [[one(), zero()], [zero(), one()]]
}

fn sigma_x() -> [[Complex64; 2]; 2] {
    [[zero(), one()], [one(), zero()]]
}

fn path_projector_2x2(arm: Arm) -> [[Complex64; 2]; 2] {
    match arm {
        Arm::Left => [[one(), zero()], [zero(), zero()]],
        Arm::Right => [[zero(), zero()], [zero(), one()]],
    }
}

fn jones_rows(m: &JonesMatrix) -> [[Complex64; 2]; 2] {
    [[m.m_hh, m.m_hv], [m.m_vh, m.m_vv]]
}

/// Weak value `⟨post|A|pre⟩ / ⟨post|pre⟩`: the first-order response of the
/// pre/post-selected ensemble to a weak coupling to `A`. May be complex and
/// may lie outside the spectrum of `A`.
///
/// Fails when the overlap magnitude is at or below `1e-12`, where the ratio
/// is undefined.
pub fn weak_value(
    a: &ProductOperator,
    pre: &ProductState,
    post: &ProductState,
) -> Result<Complex64, Error> {
    let overlap = post.inner(pre);
    if overlap.norm() <= OVERLAP_FLOOR {
        return Err(Error::DegeneratePostselection(overlap.norm()));
    }
    Ok(post.inner(&a.apply(pre)) / overlap)
}

/// Probability that a photon prepared in the preselected state passes the
/// in-arm elements and is accepted by detector 1's H polarizer, normalized
/// so the empty interferometer gives 1 at every phase.
///
/// The elements act through the non-unitary, norm-nonincreasing operator
/// `M = J_L ⊗ |L⟩⟨L| + J_R ⊗ |R⟩⟨R|`, with the phase delay folded into
/// `J_L`; attenuation enters as the amplitude factor `sqrt(T)`, since
/// absorbed photons never reach post-selection.
pub fn postselected_probability(
    left: &ArmConfig,
    right: &ArmConfig,
    phase: f64,
) -> Result<f64, Error> {
    postselected_probability_axis(left, right, phase, PolarizationAxis::H)
}

/// [`postselected_probability`] with the detector-1 polarizer on an
/// arbitrary axis.
pub fn postselected_probability_axis(
    left: &ArmConfig,
    right: &ArmConfig,
    phase: f64,
    axis: PolarizationAxis,
) -> Result<f64, Error> {
    let j_left = left.transfer()? * jones::phase_shift(phase);
    let j_right = right.transfer()?;

    let m = ProductOperator::tensor(jones_rows(&j_left), path_projector_2x2(Arm::Left)).add(
        &ProductOperator::tensor(jones_rows(&j_right), path_projector_2x2(Arm::Right)),
    );

    let amplitude =
        ProductState::postselected_axis(axis).inner(&m.apply(&ProductState::preselected()));
    // The empty interferometer leaves an amplitude of 1/2 on the detector.
    Ok(amplitude.norm_sqr() / 0.25)
}

/// Measured response coefficients of the post-selected signal to weak
/// probes, one per arm and probe kind.
///
/// As the probe strengths go to zero these converge to the corresponding
/// weak values: `absorb_l -> Re⟨Π_L⟩_w`, `absorb_r -> Re⟨Π_R⟩_w`,
/// `rotate_l -> |⟨σΠ_L⟩_w|` and `rotate_r -> |⟨σΠ_R⟩_w|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakResponse {
    pub absorb_l: f64,
    pub absorb_r: f64,
    pub rotate_l: f64,
    pub rotate_r: f64,
}

/// Probe the post-selected signal with a weak absorber (`T = 1 - epsilon`)
/// and a weak rotator (half-wave plate at `theta`) in each arm.
///
/// The absorption response is `(1 - P) / epsilon`; the rotation response is
/// the fringe amplitude over a full phase sweep divided by `2 theta`. Both
/// probe strengths must lie in `(0, 0.1]`.
pub fn weak_response_check(epsilon: f64, theta: f64) -> Result<WeakResponse, Error> {
    if !(epsilon > 0.0 && epsilon <= 0.1) {
        return Err(Error::ProbeOutOfRange {
            name: "epsilon",
            value: epsilon,
        });
    }
    if !(theta > 0.0 && theta <= 0.1) {
        return Err(Error::ProbeOutOfRange {
            name: "theta",
            value: theta,
        });
    }

    let empty = ArmConfig::empty();
    let absorber = ArmConfig::new(alloc::vec![interferometer::OpticalElement::Attenuate(
        1.0 - epsilon
    )]);
    let rotator = ArmConfig::new(alloc::vec![interferometer::OpticalElement::Hwp(theta)]);

    // Absorption leaves the signal phase-flat, so one sample suffices.
    let absorb_l = (1.0 - postselected_probability(&absorber, &empty, 0.0)?) / epsilon;
    let absorb_r = (1.0 - postselected_probability(&empty, &absorber, 0.0)?) / epsilon;

    let fringe_amplitude = |left: &ArmConfig, right: &ArmConfig| -> Result<f64, Error> {
        let samples: Vec<(f64, f64)> = (0..128)
            .map(|k| {
                let phi = core::f64::consts::TAU * k as f64 / 128.0;
                postselected_probability(left, right, phi).map(|p| (phi, p))
            })
            .collect::<Result<_, _>>()?;
        Ok(interferometer::fringe_decompose(&samples)?.amplitude)
    };
    let rotate_l = fringe_amplitude(&rotator, &empty)? / (2.0 * theta);
    let rotate_r = fringe_amplitude(&empty, &rotator)? / (2.0 * theta);

    Ok(WeakResponse {
        absorb_l,
        absorb_r,
        rotate_l,
        rotate_r,
    })
}
