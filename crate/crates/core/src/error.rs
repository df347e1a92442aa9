use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown root datum type {0}")]
    UnknownType(String),
    #[error("node index {index} is not in the index set of {datum}")]
    IndexOutOfRange { index: usize, datum: String },
    #[error("weight has {got} h-values, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("weight has non-positive level {0}")]
    ZeroLevel(i64),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("{0} is simply laced and has no short simple roots")]
    SimplyLaced(String),
    #[error("{0} is not simply laced")]
    NotSimplyLaced(String),
    #[error("weight {mu} is not below {lambda} in the dominance order")]
    NotBelow { mu: String, lambda: String },
    #[error("weight {0} is not in the root lattice of the short subdatum")]
    NotInRootLattice(String),
    #[error("negative multiplicity {mult} for leading term {weight} at grade {grade}")]
    NegativeMultiplicity { weight: String, grade: i64, mult: i64 },
    #[error("leading weight {weight} at grade {grade} is not dominant")]
    NonDominantLeading { weight: String, grade: i64 },
    #[error("target level {to} must exceed source level {from} >= 1")]
    InvalidLevels { from: i64, to: i64 },
    #[error("evaluation point {0} is used by more than one factor")]
    DuplicatePoint(String),
    #[error("path minimum {0} along a root coordinate is not an integer")]
    NonIntegralMin(String),
}

pub type Result<T> = std::result::Result<T, Error>;
