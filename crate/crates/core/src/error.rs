//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("parse error at `{fragment}`: {reason}")]
pub struct ParseError {
    pub fragment: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(fragment: impl Into<String>, reason: impl Into<String>) -> ParseError {
        ParseError {
            fragment: fragment.into(),
            reason: reason.into(),
        }
    }
}

/// Errors from the word-problem oracle.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OracleError {
    /// A search bound was hit without reaching a decision.  Raise the bound;
    /// this is never reported as inequality.
    #[error("candidate bound exceeded ({0}); raise the search bound")]
    CandidateBoundExceeded(String),
}

/// Errors from compiling or validating mapping-class data.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("invalid table entry for {symbol}: {reason}")]
    InvalidTableEntry { symbol: String, reason: String },
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("genus mismatch: table is for genus {table}, word mentions handle {used}")]
    GenusMismatch { table: usize, used: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Errors from chord-diagram operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("chord {0} has no crossings")]
    NoCrossings(usize),
    #[error("chords {0} and {1} are not disjoint")]
    NotDisjoint(usize, usize),
    #[error("unknown id {0}")]
    UnknownId(usize),
    #[error("malformed diagram: {0}")]
    Malformed(String),
}

/// Errors from the factorization engines.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("bridge crosses the separating curve {found} times, need exactly 1")]
    BridgeParity { found: usize },
    #[error("bridge parity is even ({0}); lenses must lie on opposite sides")]
    ParityError(usize),
    #[error("eyeglass is not short: {0}")]
    NotShort(String),
    #[error("curve is not a braid image: {0}")]
    NotBraidImage(String),
    #[error("chord is not orthogonal: {0}")]
    NotOrthogonal(String),
    #[error("word uses a letter outside the mixed braid alphabet: {0}")]
    AlphabetError(String),
    #[error("recursion depth cap {0} exceeded")]
    DepthExceeded(usize),
    #[error("provenance word contains {0}, which is outside the factorizable move alphabet")]
    UnsupportedProvenance(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Errors from the 2C(T) complex.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("no disjointness witness derivable for the pair at index {0}")]
    UnknownDisjointness(usize),
    #[error("curves do not satisfy the pair-of-pants relation")]
    NotPantsRelation,
    #[error("case-5 labeling is excluded: {0}")]
    CaseExcluded(String),
    #[error("invalid vertex: {0}")]
    InvalidVertex(String),
    #[error("catalog error: {0}")]
    Catalog(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Errors from the genus-3 machine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Genus3Error {
    #[error("disk is not separating")]
    NotSeparating,
    #[error("separating word is not atlas-decomposable: {0}")]
    UnsupportedSeparatingCurve(String),
    #[error("no disk among the four candidates is primitive (model bug)")]
    EmptyResult,
    #[error("no bullet fires for the triple (model bug)")]
    NoBulletFires,
    #[error("invalid disk: {0}")]
    InvalidDisk(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Errors from the planar-surface checker.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PlanarError {
    #[error("attachment site out of range: {0}")]
    BadSite(String),
    #[error("counterexample found: {0}")]
    CounterexampleFound(String),
}
