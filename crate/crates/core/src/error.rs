//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong while building fields, codes or reports.
#[derive(Debug, Error)]
pub enum Error {
    /// Field characteristic is not a prime number.
    #[error("characteristic {0} is not prime")]
    NonPrime(u64),

    /// Requested field order exceeds the supported cap.
    #[error("field order {q} exceeds cap {cap}")]
    FieldTooLarge { q: u64, cap: u64 },

    /// No built-in modulus for this `(p, h)`; caller must supply one.
    #[error("no default modulus for GF({p}^{h}); supply one explicitly")]
    NoDefaultModulus { p: u64, h: u32 },

    /// Supplied modulus has the wrong shape (degree, leading coefficient,
    /// out-of-range coefficients).
    #[error("malformed modulus: {0}")]
    MalformedModulus(String),

    /// Supplied modulus factors over the prime field.
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },

    /// Supplied modulus is irreducible but its root does not generate the
    /// multiplicative group.
    #[error("modulus is irreducible but not primitive over GF({p})")]
    NotPrimitive { p: u64 },

    /// Division or inversion of the zero element.
    #[error("division by zero field element")]
    DivisionByZero,

    /// Element code outside `0..q`.
    #[error("symbol {value} is not an element of a field of order {q}")]
    InvalidElement { value: u64, q: u64 },

    /// Vectors of different lengths fed to an inner product or row op.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// Generator matrix rows of unequal length.
    #[error("ragged matrix: row {row} has length {got}, expected {expected}")]
    RaggedRows { row: usize, got: usize, expected: usize },

    /// All-zero generator matrix (the zero code is not representable).
    #[error("generator matrix has rank zero")]
    ZeroCode,

    /// Operation would produce a zero-dimensional or zero-length code.
    #[error("{0}")]
    Degenerate(String),

    /// A precondition of the requested operation does not hold.
    #[error("{0}")]
    Unsupported(String),

    /// Enumeration or search size is over the configured cap.
    #[error("work size {needed} exceeds cap {cap}")]
    CapExceeded { needed: u128, cap: u128 },

    /// Two independent computations of the same quantity disagree; this
    /// indicates a bug and is surfaced loudly instead of being swallowed.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    /// A closed-form expression failed an exactness requirement
    /// (e.g. integer divisibility).
    #[error("exactness violation: {0}")]
    NotExact(String),

    /// Malformed textual input (code files, CLI element syntax).
    #[error("parse error: {0}")]
    Parse(String),

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
