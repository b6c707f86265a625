use core::fmt;

/// Errors raised by element constructors and model evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Attenuator transmission must lie in `[0, 1]`.
    TransmissionOutOfRange(f64),
    /// Fringe visibility must lie in `[0, 1]`.
    VisibilityOutOfRange(f64),
    /// Arm power imbalance must lie in `[-1, 1]`.
    ImbalanceOutOfRange(f64),
    /// A fringe fit needs at least 8 samples.
    TooFewSamples(usize),
    /// A fringe fit needs samples covering at least one full 2π period.
    SweepTooShort(f64),
    /// The pre- and post-selected states are (numerically) orthogonal, so
    /// the weak value is undefined. Carries |⟨post|pre⟩|.
    DegeneratePostselection(f64),
    /// A response-check probe strength was outside its valid range.
    ProbeOutOfRange { name: &'static str, value: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TransmissionOutOfRange(t) => {
                write!(f, "transmission {t} out of range [0, 1]")
            }
            Error::VisibilityOutOfRange(v) => {
                write!(f, "visibility {v} out of range [0, 1]")
            }
            Error::ImbalanceOutOfRange(x) => {
                write!(f, "arm power imbalance {x} out of range [-1, 1]")
            }
            Error::TooFewSamples(n) => {
                write!(f, "fringe fit needs at least 8 samples, got {n}")
            }
            Error::SweepTooShort(span) => {
                write!(f, "fringe fit needs a full 2π sweep, got span {span}")
            }
            Error::DegeneratePostselection(overlap) => {
                write!(
                    f,
                    "post-selection overlap magnitude {overlap} is below 1e-12"
                )
            }
            Error::ProbeOutOfRange { name, value } => {
                write!(f, "probe strength {name} = {value} out of range (0, 0.1]")
            }
        }
    }
}

impl core::error::Error for Error {}
