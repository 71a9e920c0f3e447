use thiserror::Error;

/// Errors raised by parsing, ring arithmetic, ideal decisions and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("a presentation needs at least one generator")]
    EmptyGenerators,

    #[error("exponent out of range: {0}")]
    ExponentOverflow(String),

    #[error("generator index {index} out of range for {count} generators")]
    GeneratorIndex { index: usize, count: usize },

    #[error("coefficient modulus {0} is neither 0 nor prime")]
    CompositeModulus(u64),

    #[error("duplicate ring variable `{0}`")]
    DuplicateVariable(String),

    #[error("ring specifications do not match")]
    SpecMismatch,

    #[error("determinant of size {size} exceeds the cap of {cap}")]
    DeterminantTooLarge { size: usize, cap: usize },

    #[error("finite ring of dimension {dim} exceeds the cap of {cap}")]
    RingTooLarge { dim: u64, cap: u64 },

    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    #[error("ideal membership is undecidable in this ring regime")]
    Undecidable,

    #[error("relator {relator} is not killed: {detail}")]
    RelatorNotKilled { relator: usize, detail: String },

    #[error("image of generator `{0}` is not invertible")]
    NotInvertible(String),

    #[error("target group of order {size} exceeds the cap of {cap}")]
    TargetTooLarge { size: u64, cap: u64 },

    #[error("representation is over Z_{rep} but the ring has modulus {ring}")]
    ModulusMismatch { ring: u64, rep: u64 },

    #[error("unknown catalog key `{0}`")]
    UnknownCatalogKey(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by malformed textual input.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::UnknownGenerator(_)
                | Error::DuplicateGenerator(_)
                | Error::EmptyGenerators
                | Error::ExponentOverflow(_)
                | Error::DuplicateVariable(_)
                | Error::UnknownCatalogKey(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
