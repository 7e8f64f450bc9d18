//! One error type for the whole crate.
//!
//! Variants are deliberately fine-grained: callers (and the CLI exit-code
//! mapping) distinguish malformed input from violated mathematical
//! preconditions by variant, not by string matching.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An image table that is not a bijection of `0..n`.
    #[error("not a bijection: {reason}")]
    NotABijection { reason: String },

    /// Malformed cycle notation or group file syntax.
    #[error("parse error: {msg}")]
    ParseError { msg: String },

    /// A parse error located at a 1-based line of a group file.
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    /// A cycle-notation point outside `1..=degree` (also zero/negative).
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: i64, degree: usize },

    /// A point written twice within one cycle expression.
    #[error("point {point} repeated in cycle notation")]
    RepeatedPoint { point: usize },

    /// Two permutations of different degrees were combined.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// Group closure grew past the configured order cap.
    #[error("order cap {cap} exceeded: at least {reached} elements enumerated")]
    OrderCapExceeded { cap: usize, reached: usize },

    /// A whole-subgroup-lattice operation was asked of a group larger
    /// than the configured cap.
    #[error("cap {cap} exceeded: group has order {order}")]
    SweepCapExceeded { cap: usize, order: usize },

    /// A permutation that is not an element of the group at hand.
    #[error("permutation is not an element of the group")]
    NotInGroup,

    /// A subgroup handle that does not belong to the group at hand.
    #[error("not a subgroup of the given group")]
    NotASubgroup,

    /// A subgroup that was required to be normal in its parent group.
    #[error("subgroup is not normal in the group")]
    NotNormal,

    /// A subgroup that was required to be normal in the generated group
    /// H = <N, g>.
    #[error("subgroup is not normal in the generated group")]
    NotNormalInH,

    /// Two characters that live on different groups.
    #[error("characters belong to different groups")]
    GroupMismatch,

    /// A name the catalog does not know.
    #[error("unknown catalog name: {name}")]
    UnknownName { name: String },

    /// A catalog entry whose generators did not produce the advertised
    /// order (a transcription bug, caught at load time).
    #[error("catalog entry {name}: expected order {expected}, generators produce {actual}")]
    CatalogOrderMismatch {
        name: String,
        expected: usize,
        actual: usize,
    },
}
