use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    ZeroDegree,
    /// `p^r` does not fit the index arithmetic.
    FieldTooLarge { p: u32, r: u32 },
    ModulusDegree { expected: usize, found: usize },
    ModulusNotMonic,
    Reducible,
    CoefficientOutOfRange { value: u32, p: u32 },
    ElementLength { expected: usize, found: usize },
    NotPrimitive { order: u64, expected: u64 },
    ZeroElement,
    IndexOutOfRange { index: usize, bound: usize },
    EmptyPrimes,
    DigitOutOfRange { position: usize, value: u32, radix: u32 },
    DigitCount { expected: usize, found: usize },
    PhaseOutOfRange { value: u32, order: u32 },
    ZeroOrder,
    Shape(&'static str),
    ParamMismatch { field: &'static str, claimed: usize, actual: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::ZeroDegree => f.write_str("extension degree must be at least 1"),
            Error::FieldTooLarge { p, r } => write!(f, "field {p}^{r} is too large"),
            Error::ModulusDegree { expected, found } => {
                write!(f, "modulus has degree {found}, expected {expected}")
            }
            Error::ModulusNotMonic => f.write_str("modulus is not monic"),
            Error::Reducible => f.write_str("modulus is reducible"),
            Error::CoefficientOutOfRange { value, p } => {
                write!(f, "coefficient {value} is not reduced mod {p}")
            }
            Error::ElementLength { expected, found } => {
                write!(f, "element has {found} coefficients, expected {expected}")
            }
            Error::NotPrimitive { order, expected } => {
                write!(f, "element has order {order}, a primitive element needs {expected}")
            }
            Error::ZeroElement => f.write_str("zero has no multiplicative order"),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range [0, {bound})")
            }
            Error::EmptyPrimes => f.write_str("prime list is empty"),
            Error::DigitOutOfRange { position, value, radix } => {
                write!(f, "digit {position} is {value}, must be below {radix}")
            }
            Error::DigitCount { expected, found } => {
                write!(f, "expected {expected} digits, found {found}")
            }
            Error::PhaseOutOfRange { value, order } => {
                write!(f, "phase {value} out of range [0, {order})")
            }
            Error::ZeroOrder => f.write_str("root-of-unity order must be at least 1"),
            Error::Shape(what) => write!(f, "shape mismatch: {what}"),
            Error::ParamMismatch { field, claimed, actual } => {
                write!(f, "params.{field} is {claimed} but the data has {actual}")
            }
        }
    }
}

impl core::error::Error for Error {}
