use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("B({n},{k}) needs {needed} Bell arguments, got {got}")]
    BellArgsTooShort {
        n: usize,
        k: usize,
        needed: usize,
        got: usize,
    },

    #[error("harmonic Bell value needs n >= k >= 1, got n={n}, k={k}")]
    HarmonicRange { n: usize, k: usize },

    #[error("Stirling table holds rows up to {have}, row {need} required")]
    TableTooSmall { have: usize, need: usize },

    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has a zero constant term")]
    ZeroConstantTerm,

    #[error("series constant term must be 1")]
    ConstantTermNotOne,

    #[error("series constant term must be 0")]
    NonzeroConstantTerm,

    #[error("truncation order {order} cannot hold the t^{n} coefficient")]
    OrderTooSmall { n: usize, order: usize },

    #[error("expected a square {dim}x{dim} matrix")]
    NotSquare { dim: usize },

    #[error("cofactor expansion limited to dimension {max}, got {dim}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("denominator jet vanishes at the expansion point")]
    ZeroDenominator,

    #[error("jets must have equal nonzero lengths (p: {p}, q: {q})")]
    JetShape { p: usize, q: usize },

    #[error("derivative order {k} needs {needed} jet entries, got {got}")]
    JetTooShort { k: usize, needed: usize, got: usize },
}
