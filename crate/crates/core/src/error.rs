use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors reported by the public operations of this crate.
///
/// Violations of theorems that the algorithms rely on (for example a
/// Shi-invalid minimal alcove) are not represented here; those are internal
/// invariants and abort with a panic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The type descriptor could not be parsed.
    UnknownLabel(String),
    /// A series letter was combined with a rank it does not admit.
    RankOutOfBounds { series: char, rank: usize },
    /// A coefficient vector that is not a positive root of the system.
    UnknownRoot(Vec<i64>),
    /// A set of roots that is not downward closed.
    NotAnIdeal,
    /// A set of roots that is not upward closed.
    NotAFilter,
    /// The levels of a chain are not nested.
    NotAChain,
    /// The chain violates one of the additive closure conditions.
    NotGeometric,
    /// The ideal chain does not contain every simple root in its top level.
    NotPositive,
    /// The integer vector does not satisfy Shi's inequalities.
    ShiInvalid,
    /// A vector or chain has the wrong number of entries.
    LengthMismatch { expected: usize, found: usize },
    /// An operation that needs a dominant alcove received another one.
    NotDominant,
    /// A hyperplane level outside of `1..=k`.
    LevelOutOfRange { level: u32, k: u32 },
    /// The same hyperplane was listed twice.
    DuplicateHyperplane,
    /// A chain parameter `k` of zero, or a mismatch between two chains.
    InvalidK(u32),
    /// The region does not have every hyperplane of `M` as a floor.
    NotInU,
    /// The region does not have every hyperplane of `M` as a ceiling.
    NotInL,
    /// The alcove is not on the required side of every hyperplane it is
    /// folded through.
    FoldPrecondition,
    /// The operation is only defined for a single-level chain.
    RequiresK1(u32),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownLabel(s) => write!(f, "unknown root system label `{s}`"),
            Error::RankOutOfBounds { series, rank } => {
                write!(f, "type {series}{rank} is not a valid rank for series {series}")
            }
            Error::UnknownRoot(c) => write!(f, "{c:?} is not a positive root"),
            Error::NotAnIdeal => f.write_str("set is not an order ideal of the root poset"),
            Error::NotAFilter => f.write_str("set is not an order filter of the root poset"),
            Error::NotAChain => f.write_str("levels do not form a chain"),
            Error::NotGeometric => f.write_str("chain is not geometric"),
            Error::NotPositive => f.write_str("chain is not positive"),
            Error::ShiInvalid => f.write_str("vector violates Shi's inequalities"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::NotDominant => f.write_str("alcove is not dominant"),
            Error::LevelOutOfRange { level, k } => {
                write!(f, "hyperplane level {level} is outside 1..={k}")
            }
            Error::DuplicateHyperplane => f.write_str("duplicate hyperplane"),
            Error::InvalidK(k) => write!(f, "invalid chain length k = {k}"),
            Error::NotInU => f.write_str("region does not have all hyperplanes of M as floors"),
            Error::NotInL => f.write_str("region does not have all hyperplanes of M as ceilings"),
            Error::FoldPrecondition => {
                f.write_str("alcove is not strictly on the starting side of every hyperplane of M")
            }
            Error::RequiresK1(k) => write!(f, "operation requires k = 1, got k = {k}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
