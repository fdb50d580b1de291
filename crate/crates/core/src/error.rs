use thiserror::Error;

/// Errors surfaced by the public API.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: left has n = {left}, right has n = {right}")]
    MismatchedN { left: usize, right: usize },

    #[error("rank mismatch: left has r = {left}, right has r = {right}")]
    MismatchedR { left: u32, right: u32 },

    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },

    #[error("generator {gen} infeasible for column vector {lambda}: column {column} is zero")]
    InfeasibleGenerator {
        gen: String,
        lambda: String,
        column: usize,
    },

    #[error("composition {lambda} is boundary; interior required")]
    BoundaryComposition { lambda: String },

    #[error("parse error at position {pos} near {token:?}: {message}")]
    Parse {
        pos: usize,
        token: String,
        message: String,
    },

    #[error("unbound label {0:?}")]
    UnboundLabel(String),

    #[error("no irreducible map between {src} and {dst}")]
    NoIrreducibleMap { src: String, dst: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("problem size {orbits} orbits exceeds cap {cap}; raise --max-orbits to proceed")]
    ScaleCap { orbits: u128, cap: u128 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
