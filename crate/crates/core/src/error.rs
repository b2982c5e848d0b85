use core::fmt;

use alloc::string::String;

use crate::root_system::{Label, Weight};

/// Errors shared by every module of the crate.
#[derive(Clone, PartialEq, Eq, Debug)]
#[non_exhaustive]
pub enum Error {
    /// A weight or cocharacter has the wrong number of coordinates for the
    /// root system it was used with.
    RankMismatch { expected: usize, found: usize },
    /// Two characters built over different root systems were combined.
    MixedRootSystems { left: Label, right: Label },
    /// A node index outside 1..=rank.
    NodeOutOfRange { node: usize, rank: usize },
    /// An operation requiring a dominant weight received a non-dominant one.
    NotDominant { weight: Weight },
    /// The node does not carry a minuscule representation for this type.
    NotMinuscule { label: Label, node: usize },
    /// Decomposition or expansion reached a negative multiplicity, so the
    /// input was not the character of a genuine representation.
    NotACharacter { weight: Weight },
    /// An orbit expansion was requested for a character that is not constant
    /// on Weyl orbits.
    NotWeylInvariant { weight: Weight },
    /// Cocharacter enumeration against a character all of whose weights are
    /// zero: the pairing bound constrains nothing and the stream would be
    /// infinite.
    TrivialWeightSupport,
    /// A negative search bound.
    NegativeBound { bound: i64 },
    /// Search-result merge over mismatched parameters or groups.
    MergeMismatch { detail: String },
    /// Merge of an empty list of partial results.
    EmptyMerge,
    /// Row lookup in a search result found nothing.
    RowNotFound,
    /// An operation defined only for specific groups received another one.
    UnsupportedGroup { expected: Label, found: Label },
    /// Eulerian number index outside 0..=n-1.
    EulerianIndex { n: u64, k: u64 },
    /// Hodge bound vectors need codimension at least 2: d <= g - 2.
    CodimensionTooSmall { d: u64, g: u64 },
    /// Subspace bound vectors need dim V > d + 1.
    SubspaceTooSmall { d: u64, dim_v: u64 },
    /// Surface invariants violating an identity they must satisfy; the
    /// message names the identity.
    InconsistentSurface { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected} coordinates, found {found}")
            }
            Error::MixedRootSystems { left, right } => {
                write!(f, "cannot combine characters of {left} and {right}")
            }
            Error::NodeOutOfRange { node, rank } => {
                write!(f, "node {node} out of range 1..={rank}")
            }
            Error::NotDominant { weight } => {
                write!(f, "weight {weight} is not dominant")
            }
            Error::NotMinuscule { label, node } => {
                write!(f, "node {node} of {label} is not minuscule")
            }
            Error::NotACharacter { weight } => {
                write!(
                    f,
                    "not the character of a representation: negative multiplicity at {weight}"
                )
            }
            Error::NotWeylInvariant { weight } => {
                write!(f, "character is not Weyl invariant at {weight}")
            }
            Error::TrivialWeightSupport => {
                write!(f, "all weights are zero: the cocharacter stream would be infinite")
            }
            Error::NegativeBound { bound } => {
                write!(f, "search bound must be nonnegative, got {bound}")
            }
            Error::MergeMismatch { detail } => {
                write!(f, "cannot merge search results: {detail}")
            }
            Error::EmptyMerge => write!(f, "cannot merge an empty list of search results"),
            Error::RowNotFound => write!(f, "no such row in the search result"),
            Error::UnsupportedGroup { expected, found } => {
                write!(f, "operation defined for {expected} only, got {found}")
            }
            Error::EulerianIndex { n, k } => {
                write!(f, "Eulerian index {k} out of range 0..={} for n = {n}", n - 1)
            }
            Error::CodimensionTooSmall { d, g } => {
                write!(f, "bound vectors need d <= g - 2, got d = {d}, g = {g}")
            }
            Error::SubspaceTooSmall { d, dim_v } => {
                write!(f, "bound vectors need dim V > d + 1, got d = {d}, dim V = {dim_v}")
            }
            Error::InconsistentSurface { detail } => {
                write!(f, "inconsistent surface invariants: {detail}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
