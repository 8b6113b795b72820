use crate::enclosure::Enclosure;
use core::fmt;

/// Errors shared by the bound formulas, the enclosure oracles, and the
/// verification machinery.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Arguments outside the validity region of the formula or oracle.
    Domain(&'static str),
    /// Interval division with a denominator containing zero.
    DivisionContainsZero,
    /// Interval square root of a set containing negative numbers.
    NegativeSqrt,
    /// Intersection of disjoint enclosures.
    EmptyIntersection,
    /// Oracle stopped at `max_depth` without reaching the target width.
    /// Carries the best enclosure achieved so callers can still inspect it.
    NotConverged { best: Enclosure, rel_width: f64 },
    /// The tail seed pair is invalid at the requested shift; retry deeper.
    TailSeedInvalid,
    /// A series did not meet its geometric-majorant condition within the cap.
    NoConvergence,
    /// The Riccati sign condition a(x)·c(x) < 0 failed on the sampled grid.
    SignConditionFailed,
    /// arccos argument left [-1, 1] by more than rounding dust.
    ArccosRange { arg: f64 },
    /// Cubic discriminant does not admit the three-real-roots form.
    Discriminant,
    /// A recurrence lift hit a denominator of the wrong sign.
    SignViolation,
    /// A closed-form denominator that must be positive was not.
    DenominatorNonpositive,
    /// Radicand that must be nonnegative on the stated domain was not.
    RadicandNegative,
    /// Order-estimation window has too little contrast over oracle noise.
    ShrinkWindow,
    /// Bound matches the oracle below the noise floor; no fit possible.
    Overprecision,
    /// Malformed or empty grid specification.
    InvalidGrid(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "argument outside validity region: {what}"),
            Error::DivisionContainsZero => {
                write!(f, "interval division by an enclosure containing zero")
            }
            Error::NegativeSqrt => write!(
                f,
                "interval sqrt of an enclosure containing negative values"
            ),
            Error::EmptyIntersection => write!(f, "intersection of disjoint enclosures"),
            Error::NotConverged { rel_width, .. } => {
                write!(
                    f,
                    "oracle did not reach target width (achieved rel width {rel_width:e})"
                )
            }
            Error::TailSeedInvalid => write!(f, "tail seed pair invalid at this shift"),
            Error::NoConvergence => write!(f, "series failed its convergence condition"),
            Error::SignConditionFailed => write!(f, "Riccati sign condition a·c < 0 failed"),
            Error::ArccosRange { arg } => write!(f, "arccos argument {arg} outside [-1, 1]"),
            Error::Discriminant => write!(f, "cubic discriminant rejects trigonometric root form"),
            Error::SignViolation => write!(f, "recurrence lift denominator has the wrong sign"),
            Error::DenominatorNonpositive => write!(f, "denominator not positive on stated domain"),
            Error::RadicandNegative => write!(f, "radicand negative on stated domain"),
            Error::ShrinkWindow => write!(f, "window contrast too small over oracle noise"),
            Error::Overprecision => write!(f, "difference below noise floor; cannot fit"),
            Error::InvalidGrid(what) => write!(f, "invalid grid: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
