use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("azimuth at ±90° makes the angle-resolution formula singular")]
    AngleSingularity,

    #[error("negative distance: {0} m")]
    NegativeDistance(f64),

    #[error("aliasing: {0} (pass allow_aliasing to override)")]
    Aliasing(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("signal too short: {0}")]
    TooShort(String),

    #[error("empty input: {0}")]
    Empty(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("bad magic bytes {found:?}, expected {expected:?}")]
    BadMagic { found: [u8; 4], expected: [u8; 4] },

    #[error("unsupported file version {0}")]
    BadVersion(u16),

    #[error("truncated file: expected {expected} bytes, got {actual}")]
    Truncated { expected: u64, actual: u64 },

    #[error("layout mismatch: {0}")]
    LayoutMismatch(String),

    #[error("sample out of int16 range: {0}")]
    Int16Overflow(f64),

    #[error("model not trained: {0}")]
    Untrained(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
