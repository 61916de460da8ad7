use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidCharacteristic(u32),
    /// Variable lists must be non-empty and short enough to pack.
    InvalidVariables(String),
    DimensionMismatch { expected: usize, found: usize },
    RingMismatch,
    /// A polynomial, vector or matrix column that should be homogeneous is not.
    Inhomogeneous(String),
    Parse { position: usize, message: String },
    UnknownVariable(String),
    /// A chain complex fails `d∘d = 0`, or a map fails to commute with differentials.
    NotAComplex(String),
    NotAChainMap(String),
    /// The requested homological degree lies where the stored complex is truncated.
    Truncated { degree: i32 },
    OutOfRange { degree: i32 },
    /// The supplied resolution does not resolve the module it is paired with.
    NotAResolution(String),
    /// An element was expected to lie in a submodule and does not.
    NotInImage,
    /// Operations that assume free terms were handed a complex with relations.
    NotFree,
    /// A precondition on the algebraic input failed (grade, sop, FLC, ...).
    Precondition(String),
    ZeroModule,
    UnitIdeal,
    InvalidPower(i64),
    /// Hoa's length system has no solution for the measured Koszul lengths.
    InconsistentLengths(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidCharacteristic(p) => write!(f, "{p} is not a supported prime characteristic"),
            Error::InvalidVariables(m) => write!(f, "invalid variable list: {m}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::RingMismatch => f.write_str("operands belong to different rings"),
            Error::Inhomogeneous(m) => write!(f, "inhomogeneous input: {m}"),
            Error::Parse { position, message } => write!(f, "parse error at column {}: {message}", position + 1),
            Error::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            Error::NotAComplex(m) => write!(f, "not a complex: {m}"),
            Error::NotAChainMap(m) => write!(f, "not a morphism of complexes: {m}"),
            Error::Truncated { degree } => {
                write!(f, "homological degree {degree} lies in the truncated top of the complex")
            }
            Error::OutOfRange { degree } => write!(f, "homological degree {degree} is out of range"),
            Error::NotAResolution(m) => write!(f, "not a resolution: {m}"),
            Error::NotInImage => f.write_str("element is not in the image"),
            Error::NotFree => f.write_str("operation requires a complex of free modules"),
            Error::Precondition(m) => write!(f, "precondition failed: {m}"),
            Error::ZeroModule => f.write_str("invariant undefined for the zero module"),
            Error::UnitIdeal => f.write_str("invariant undefined for the unit ideal"),
            Error::InvalidPower(n) => write!(f, "power must be at least 1, got {n}"),
            Error::InconsistentLengths(m) => write!(f, "inconsistent Koszul length system: {m}"),
        }
    }
}

impl core::error::Error for Error {}
