use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph order {0} is outside the supported range 1..=32")]
    InvalidOrder(usize),
    #[error("loop arc at vertex {0}")]
    LoopArc(usize),
    #[error("arcs {0}->{1} and {1}->{0} form a digon in an oriented graph")]
    DigonViolation(usize, usize),
    #[error("permutation of length {perm} applied to a graph on {n} vertices")]
    LengthMismatch { perm: usize, n: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("malformed digraph6 header")]
    MalformedHeader,
    #[error("digraph6 body too short: expected {expected} characters, found {found}")]
    TruncatedBits { expected: usize, found: usize },
    #[error("digraph6 body has {0} trailing characters")]
    TrailingData(usize),
    #[error("invalid digraph6 character {0:?}")]
    InvalidCharacter(char),
    #[error("digraph6 order {0} is not supported")]
    UnsupportedSize(usize),

    #[error("graph is not weakly connected")]
    NotConnected,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is too large for this operation: {0}")]
    TooLarge(String),
    #[error("cycle length {0} is too small")]
    TooSmall(usize),
    #[error("range {0} is not supported: {1}")]
    RangeTooLarge(String, String),
    #[error("{0} requires the heavy flag")]
    HeavyFlagRequired(String),

    #[error("the (-1)-deck is undefined: the graph's own class is not among its cards")]
    CardAbsent,
    #[error("t = {0} is below -1")]
    InvalidT(i64),
    #[error("inputs are isomorphic")]
    IsomorphicInputs,
    #[error("graphs have different orders {0} and {1}")]
    OrderMismatch(usize, usize),

    #[error("switching-stable set must not be empty")]
    EmptySet,
    #[error("members do not share one underlying graph")]
    MixedUnderlying,
    #[error("permutation is not an automorphism of the underlying graph")]
    NotUnderlyingAut,

    #[error("W(G, delta) is undefined for this rotation")]
    WUndefined,
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),

    #[error("universe is not asserted to be deck-closed")]
    UniverseNotClosed,
    #[error("family member is connected")]
    NotDisconnected,
    #[error("family satisfies neither option of the disconnected dichotomy: {0}")]
    DichotomyViolated(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("unknown graph class {0:?}")]
    UnknownClass(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
