use thiserror::Error;

/// Domain errors surfaced by library operations.
///
/// The CLI maps these to exit code 1 with a structured code; usage errors
/// (bad JSON, unknown command) are handled separately with exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    ZeroPolyDivision,
    #[error("zero input where nonzero required")]
    ZeroInput,
    #[error("value is not fixed by conjugation (not real)")]
    NotReal,
    #[error("matrix is not {0}-symmetric under the involution")]
    NotSymmetric(i8),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular matrix where nonsingular required")]
    Singular,
    #[error("interval endpoints out of order (need a < b)")]
    BadInterval,
    #[error("polynomial is constant or zero")]
    ConstantPoly,
    #[error("continued fraction expansion constraint unsatisfiable: {0}")]
    CfUnsatisfiable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arguments are not coprime")]
    NotCoprime,
    #[error("matrix does not preserve the symplectic form")]
    NotSymplectic,
    #[error("determinant is not 1")]
    NotUnimodular,
    #[error("reducible polynomial where irreducible required")]
    Reducible,
    #[error("unsupported query: {0}")]
    Unsupported(String),
    #[error("braid parse error: {0}")]
    BraidParse(String),
    #[error("canonical Seifert surface is disconnected (unused generator index {0}); stabilize the braid first")]
    DisconnectedSurface(usize),
    #[error("omega is a root of the Alexander polynomial (degenerate form)")]
    AlexanderRoot,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable code for the CLI.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            ZeroPolyDivision => "zero-poly-division",
            ZeroInput => "zero-input",
            NotReal => "not-real",
            NotSymmetric(_) => "not-symmetric",
            Dimension(_) => "dimension",
            Singular => "singular",
            BadInterval => "bad-interval",
            ConstantPoly => "constant-poly",
            CfUnsatisfiable(_) => "cf-unsatisfiable",
            Precondition(_) => "precondition",
            NotCoprime => "not-coprime",
            NotSymplectic => "not-symplectic",
            NotUnimodular => "not-unimodular",
            Reducible => "reducible",
            Unsupported(_) => "unsupported",
            BraidParse(_) => "braid-parse",
            DisconnectedSurface(_) => "disconnected-surface",
            AlexanderRoot => "alexander-root",
        }
    }
}
