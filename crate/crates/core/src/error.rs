use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different coefficient rings")]
    MixedRings,
    #[error("{0} is not a unit in the coefficient ring")]
    NotAUnit(String),
    #[error("entry {src} -> {tgt} violates the (1,0) bidegree convention")]
    GradingViolation { src: String, tgt: String },
    #[error("d² ≠ 0 at {src} -> {tgt}")]
    NotAComplex { src: String, tgt: String },
    #[error("malformed complex or region file: {0}")]
    SchemaError(String),
    #[error("invalid slope {0}/{1}: need a reduced fraction")]
    InvalidSlope(i64, i64),
    #[error("slope {0}/{1} must have odd numerator and odd denominator")]
    BadParity(i64, i64),
    #[error("slope {0} is excluded here")]
    ExcludedSlope(i64),
    #[error("zigzag complex carries no bigradings")]
    Ungraded,
    #[error("0-closure of slope {0}/{1} is not a knot")]
    NotAKnotClosure(i64, i64),
    #[error("complex does not split into pawn and knight pieces: {0}")]
    NotSplit(String),
    #[error("more than one free generator survives elimination")]
    MultiplePawns,
    #[error("no pawn generator in homological degree 0: {0}")]
    NoPawn(String),
    #[error("bad torus-knot parameters: {0}")]
    BadParams(String),
    #[error("3-strand torus complexes over this ring are conjectural; pass the conjectural flag")]
    ConjecturalRing,
    #[error("enumeration cap exceeded: {what} = {dim} > {cap}")]
    CapExceeded { what: String, dim: usize, cap: usize },
    #[error("element is not homogeneous")]
    NotHomogeneous,
}
