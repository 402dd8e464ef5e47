use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not well defined: {0}")]
    NotWellDefined(String),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("unit failure: {0}")]
    UnitFailure(String),
    #[error("ring cardinality {size} exceeds the cap {cap}")]
    RingTooLarge { size: u64, cap: u64 },
    #[error("modules or maps live over different rings")]
    RingMismatch,
    #[error("action of the unit is not the identity on generator {0}")]
    UnitNotIdentity(usize),
    #[error("action is not multiplicative on basis pair ({0}, {1})")]
    NonMultiplicative(usize, usize),
    #[error("map is not equivariant for ring basis element {basis} on generator {generator}")]
    NotEquivariant { basis: usize, generator: usize },
    #[error("element {0} does not belong to the module")]
    ForeignElement(String),
    #[error("subgroup is not closed under the action of ring basis element {0}")]
    NotActionClosed(usize),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("coefficient {0} is not an element of the ring")]
    CoefficientNotInRing(String),
    #[error("maps do not compose: {0}")]
    Mismatch(String),
    #[error("square does not commute: {0}")]
    NotCommuting(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search exhausted without a witness: {0}")]
    Exhausted(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("{0}")]
    Input(String),
}

impl Error {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::NotWellDefined(_) => "ill-defined",
            Error::Associativity(..) => "associativity",
            Error::UnitFailure(_) => "unit-failure",
            Error::RingTooLarge { .. } => "ring-too-large",
            Error::RingMismatch => "ring-mismatch",
            Error::UnitNotIdentity(_) => "unit-not-identity",
            Error::NonMultiplicative(..) => "non-multiplicative",
            Error::NotEquivariant { .. } => "not-equivariant",
            Error::ForeignElement(_) => "foreign-element",
            Error::NotActionClosed(_) => "not-action-closed",
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable(_) => "unknown-variable",
            Error::CoefficientNotInRing(_) => "coefficient-not-in-ring",
            Error::Mismatch(_) => "mismatch",
            Error::NotCommuting(_) => "not-commuting",
            Error::Precondition(_) => "precondition",
            Error::Exhausted(_) => "exhausted",
            Error::ResourceCap(_) => "resource-cap",
            Error::UnknownSuite(_) => "unknown-suite",
            Error::Input(_) => "input",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceCap(_) | Error::RingTooLarge { .. } => 2,
            _ => 1,
        }
    }
}
