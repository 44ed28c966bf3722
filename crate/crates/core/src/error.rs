use alloc::string::String;
use core::fmt;

use crate::context::Axis;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A label or index that the context or database does not declare.
    UnknownEntity(String),
    /// The product of the given components is not inside the incidence.
    NotATriset,
    /// The given components do not satisfy the three derivation conditions.
    NotATriconcept,
    /// Slicing by an empty object set.
    EmptySlice,
    /// The ground set does not fit the fixed-width representation.
    Capacity { what: &'static str, len: usize, max: usize },
    /// Exhaustive search refused because the input exceeds the size cap.
    SizeCap { axis: Option<Axis>, len: usize, cap: usize },
    NotCcs,
    NotMccs,
    /// A caller-provided family or closure broke the documented contract.
    ContractViolation(String),
    /// Malformed input: duplicate labels, bad relationship types and the like.
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownEntity(e) => write!(f, "unknown entity `{e}`"),
            Error::NotATriset => f.write_str("components do not form a triset"),
            Error::NotATriconcept => f.write_str("components do not form a triconcept"),
            Error::EmptySlice => f.write_str("slice requires a non-empty object set"),
            Error::Capacity { what, len, max } => {
                write!(f, "{len} {what} exceed the supported maximum of {max}")
            }
            Error::SizeCap { axis: Some(a), len, cap } => {
                write!(f, "{len} {}s exceed the size cap of {cap}", a.name())
            }
            Error::SizeCap { axis: None, len, cap } => {
                write!(f, "{len} entities exceed the size cap of {cap}")
            }
            Error::NotCcs => f.write_str("set is not complete and connected"),
            Error::NotMccs => f.write_str("set is not a maximal complete connected set"),
            Error::ContractViolation(m) => write!(f, "contract violation: {m}"),
            Error::Invalid(m) => f.write_str(m),
        }
    }
}

impl core::error::Error for Error {}
