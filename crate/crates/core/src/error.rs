use thiserror::Error;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("cover relations contain a cycle through `{0}`")]
    NotAPoset(String),
    #[error("`{0}` and `{1}` have no unique join or meet")]
    NotALattice(String, String),
    #[error("the order has no unique minimum and maximum")]
    NoBounds,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("set {0:?} is not admissible")]
    NotAdmissible(Vec<String>),
    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("division by zero")]
    ZeroDivisor,
    #[error("invalid monomial order: {0}")]
    BadOrder(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator `{0}` is not a difference of two monomials or a variable")]
    NotPureDifference(String),
    #[error("binomial part is not saturated with respect to the surviving variables")]
    NotSaturatedInput,
    #[error("intersection of the components differs from the join-meet ideal")]
    IntersectionMismatch,

    #[error("invalid lattice document: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
