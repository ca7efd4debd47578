use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a supported prime")]
    InvalidField(u64),
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("ring mismatch: {left} variables vs {right} variables")]
    RingMismatch { left: usize, right: usize },
    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomialDegree,
    #[error("expected {expected} substitution images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is not square")]
    NonSquare,
    #[error("generator {0} is singular")]
    SingularGenerator(usize),
    #[error("matrix dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("group closure exceeded the cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("the field {field} has no primitive {order}-th root of unity")]
    MissingRootsOfUnity { field: String, order: u64 },
    #[error("Jordan block of size {k} needs k <= p (p = {p})")]
    JordanTooLarge { k: usize, p: u64 },
    #[error("invalid representation spec: {0}")]
    InvalidSpec(String),
    #[error("characteristic {characteristic} divides the group order {order}")]
    Modular { characteristic: u64, order: usize },
    #[error("Hilbert ideal loop reached degree cap {cap} without terminating")]
    DegreeCapExceeded {
        cap: u32,
        partial: Box<crate::invring::HilbertIdealResult>,
    },
    #[error("polynomial is not in the Hilbert ideal of the source representation")]
    NotInHilbertIdeal,
    #[error("number of copies must be at least 1")]
    InvalidCopies,
    #[error("group order {order} exceeds the search cap {cap}")]
    OrderCapExceeded { order: u64, cap: u64 },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("prime {p} unsuitable: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
