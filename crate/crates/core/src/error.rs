use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid face: {0}")]
    InvalidFace(String),
    #[error("not downward closed: {0}")]
    NotDownwardClosed(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid distance matrix: {0}")]
    InvalidDistance(String),
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("atom index {index} outside atom table of size {size}")]
    AtomOutOfRange { index: usize, size: usize },
    #[error("ideal is not square-free")]
    NotSquareFree,
    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("too many variables for subset enumeration: {0} (limit 64)")]
    TooManyVariables(usize),
    #[error("label of vertex {0} is zero")]
    ZeroLabel(u32),
    #[error("labels are not monomials in variable atoms")]
    NonMonomialLabels,
    #[error("evaluation point is inadmissible: labels of vertices {vertices:?} vanish")]
    Inadmissible { vertices: Vec<u32> },
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("inexact division")]
    InexactDivision,
    #[error("column {column} references row {row} that is not earlier in the filtration order")]
    OrderViolation { column: usize, row: usize },
    #[error("parameter {t} outside ({lo}, +inf)")]
    OutOfRange { t: f64, lo: f64 },
    #[error("invalid modulus {0}: must be a prime")]
    InvalidModulus(u64),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: u64, column: u64, msg: String },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
