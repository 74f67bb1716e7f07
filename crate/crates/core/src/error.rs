use thiserror::Error;

use crate::polytope::CertificationReport;

pub type Result<T, E = MatroidError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum MatroidError {
    #[error("basis family is empty")]
    EmptyBasisFamily,
    #[error("bases have unequal sizes: expected {expected}, found {found}")]
    UnequalBasisSizes { expected: usize, found: usize },
    #[error("basis exchange fails for {b1:?} and {b2:?} at element {element}")]
    ExchangeAxiomViolated {
        b1: Vec<String>,
        b2: Vec<String>,
        element: String,
    },
    #[error("element {0:?} is not in the ground set")]
    ForeignElement(String),
    #[error("ground set is empty")]
    EmptyGroundSet,
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("element labels must be nonempty")]
    EmptyLabel,
    #[error("ground set of {0} elements exceeds the supported maximum of {max}", max = crate::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("element {0} is a loop")]
    LoopPresent(String),
    #[error("element {0} is a coloop")]
    ColoopPresent(String),
    #[error("subset must be nonempty and proper")]
    NotProperSubset,
    #[error("matroid is not connected")]
    NotConnected,
    #[error("matroid is not 3-connected")]
    Not3Connected,
    #[error("bases polytope is a single point and has no facets")]
    DegeneratePolytope,
    #[error("ground set has at least {0} elements required")]
    TooFewElements(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("{0:?} is not a circuit-hyperplane")]
    NotCircuitHyperplane(Vec<String>),
    #[error("basepoint {0} is a loop or coloop")]
    BasepointDegenerate(String),
    #[error("label collision on {0}")]
    LabelCollision(String),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("certification failed: {} missing, {} extra", .0.missing.len(), .0.extra.len())]
    CertificationFailed(Box<CertificationReport>),
}
