use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Every domain failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch { expected: usize, found: usize },
    InvalidGenus(usize),
    DegeneratePairing,
    NotAlternating,
    EnumerationCap { genus: usize, cap: usize },
    WitnessUnsupported { genus: usize },
    GaussSumInvalid,
    NonCoprimePair { a: i64, b: i64 },
    InvalidFiberOrder(i64),
    ProfileMismatch { expected: usize, found: usize },
    CentralBehavior(&'static str),
    NonIntegralS { exponent: i64 },
    NoSolution,
    MultipleSolutions(Vec<Vec<u64>>),
    SearchTooLarge,
    NotTwentyFourTorsion,
    InvalidArgument(String),
}

impl Error {
    /// Stable short name, used on the CLI diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InvalidGenus(_) => "InvalidGenus",
            Error::DegeneratePairing => "DegeneratePairing",
            Error::NotAlternating => "NotAlternating",
            Error::EnumerationCap { .. } => "EnumerationCap",
            Error::WitnessUnsupported { .. } => "WitnessUnsupported",
            Error::GaussSumInvalid => "GaussSumInvalid",
            Error::NonCoprimePair { .. } => "NonCoprimePair",
            Error::InvalidFiberOrder(_) => "InvalidFiberOrder",
            Error::ProfileMismatch { .. } => "ProfileMismatch",
            Error::CentralBehavior(_) => "CentralBehavior",
            Error::NonIntegralS { .. } => "NonIntegralS",
            Error::NoSolution => "NoSolution",
            Error::MultipleSolutions(_) => "MultipleSolutions",
            Error::SearchTooLarge => "SearchTooLarge",
            Error::NotTwentyFourTorsion => "NotTwentyFourTorsion",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::InvalidGenus(g) => write!(f, "genus {g} is out of range (1..=32)"),
            Error::DegeneratePairing => write!(f, "pairing is degenerate"),
            Error::NotAlternating => write!(f, "pairing matrix is not symmetric with zero diagonal"),
            Error::EnumerationCap { genus, cap } => {
                write!(f, "genus {genus} exceeds the enumeration cap {cap}")
            }
            Error::WitnessUnsupported { genus } => {
                write!(f, "isomorphism witness search only supports genus <= 2, got {genus}")
            }
            Error::GaussSumInvalid => write!(f, "Gauss sum is not +-2^g; the form violates the quadratic law"),
            Error::NonCoprimePair { a, b } => write!(f, "Seifert pair ({a}, {b}) is not coprime"),
            Error::InvalidFiberOrder(a) => write!(f, "fiber order {a} must be >= 1"),
            Error::ProfileMismatch { expected, found } => {
                write!(f, "profile mismatch: expected {expected}, found {found}")
            }
            Error::CentralBehavior(msg) => write!(f, "central behavior: {msg}"),
            Error::NonIntegralS { exponent } => {
                write!(f, "exponent {exponent} does not give an integral s-value")
            }
            Error::NoSolution => write!(f, "no nonnegative multiplicity vector satisfies the constraints"),
            Error::MultipleSolutions(sols) => {
                write!(f, "{} multiplicity vectors satisfy the constraints: {:?}", sols.len(), sols)
            }
            Error::SearchTooLarge => write!(f, "multiplicity search space exceeds the configured bound"),
            Error::NotTwentyFourTorsion => write!(f, "value is not annihilated by 24"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
