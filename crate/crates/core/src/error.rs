use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pair {0}: alpha and beta are not coprime")]
    CoprimalityViolation(usize),
    #[error("pair {0}: alpha must be at least 1")]
    NonPositiveAlpha(usize),
    #[error("genus must be non-negative")]
    NegativeGenus,
    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
    #[error("gauge rank must be a positive integer")]
    InvalidGaugeRank,
    #[error("level k must be a positive integer")]
    InvalidLevel,
    #[error(
        "orbifold Chern number c1 vanishes; the moduli-space and torsion closed forms require c1 != 0"
    )]
    ChernNumberZero,
    #[error("orbifold Chern number c1 = {0} is not positive")]
    NonPositiveChern(BigRational),
    #[error("zeta kernel evaluated at its pole s = 1")]
    PoleAtOne,
    #[error("s = {0} lies outside the supported window [-6, 6]")]
    UnsupportedWindow(f64),
    #[error("torsion function evaluated at its singular point s = 1/2")]
    SingularPoint,
    #[error("angle {0} lies outside the open interval (0, 1)")]
    AngleOutOfRange(f64),
    #[error("theta = {0} lies outside (0, 1]")]
    ThetaOutOfRange(f64),
    #[error("character group order {order} exceeds cap {cap}")]
    CapExceeded { order: String, cap: u64 },
    #[error("expected {expected} Chern-Simons values (one per flat bundle class), got {got}")]
    CsLengthMismatch { expected: String, got: usize },
}

/// Coarse error category, used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Domain,
    Numeric,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::CoprimalityViolation(_)
            | Error::NonPositiveAlpha(_)
            | Error::NegativeGenus
            | Error::Parse { .. }
            | Error::InvalidGaugeRank
            | Error::InvalidLevel
            | Error::AngleOutOfRange(_)
            | Error::ThetaOutOfRange(_)
            | Error::CsLengthMismatch { .. } => ErrorKind::Input,
            Error::ChernNumberZero | Error::NonPositiveChern(_) | Error::CapExceeded { .. } => {
                ErrorKind::Domain
            }
            Error::PoleAtOne | Error::UnsupportedWindow(_) | Error::SingularPoint => {
                ErrorKind::Numeric
            }
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Non-fatal conditions attached to an otherwise valid result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// c1 = 0: homology is still computed but the torsion-order identity
    /// `|Tors H^2| = |c1 * prod alpha|^N` is not asserted.
    ChernNumberZero,
    /// c1 < 0: absolute values are used, although Sasakian data has c1 > 0.
    NegativeChern(BigRational),
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::ChernNumberZero => {
                write!(f, "c1 = 0: torsion order not tied to |c1 * prod alpha|")
            }
            Warning::NegativeChern(c1) => write!(
                f,
                "c1 = {c1} < 0: orientation reversed relative to a Sasakian structure, absolute values used"
            ),
        }
    }
}

/// A value together with the warnings raised while computing it.
#[derive(Debug, Clone, PartialEq)]
pub struct Warned<T> {
    pub value: T,
    pub warnings: Vec<Warning>,
}

impl<T> Warned<T> {
    pub fn clean(value: T) -> Self {
        Warned { value, warnings: Vec::new() }
    }
}
