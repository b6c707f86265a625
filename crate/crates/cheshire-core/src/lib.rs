//! Core math for a two-path polarization interferometer.
//!
//! Light enters split over two arms, L carrying horizontal and R carrying
//! vertical polarization. Each arm may contain attenuators, half-wave plates
//! and phase shifts; the arms recombine on a non-polarizing beamsplitter and
//! detector 1 sits behind a linear polarizer. The same experiment is modeled
//! two ways:
//!
//! * [`jones`] / [`interferometer`] treat the light as a classical wave in
//!   Jones calculus and propagate field amplitudes through the elements.
//! * [`quantum`] treats it as a single photon on the polarization Ⓧ path
//!   product space, with pre- and post-selection and weak values of path and
//!   polarization operators.
//!
//! Both produce the same normalized detector signal, and the crate exposes
//! the closed-form intensity so either route can be checked against it.
//!
//! The crate is `no_std` (with `alloc`); all types are immutable after
//! construction and every operation is a pure function.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod interferometer;
pub mod jones;
pub mod quantum;

pub use error::Error;
pub use num_complex::Complex64;
