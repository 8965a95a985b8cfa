use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?} at position {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("spectrum not in Q(i): characteristic polynomial has nonsplit factor {factor}")]
    NonSplitSpectrum { factor: String },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("budget exhausted after {budget} S-pair reductions")]
    BudgetExhausted { budget: usize },

    #[error("polynomial variables do not match: {0}")]
    VariableMismatch(String),

    #[error("{0}")]
    OutOfRange(String),

    #[error("{what} is not skew-symmetric at index pair ({i}, {j})")]
    NotSkew { what: &'static str, i: usize, j: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("algebra is not a Lie algebra (omega is nonzero or the Jacobi identity fails)")]
    NotLie,

    #[error("not a tailed derivation: {0}")]
    InvalidTailedDerivation(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("linear form is not multiplicative: lambda([e{i}, e{j}]) != omega(e{i}, e{j})")]
    NotMultiplicative { i: usize, j: usize },

    #[error("restriction is not defined: {0}")]
    Restrict(String),

    #[error("catalog: {0}")]
    Catalog(String),

    #[error("not in P_n (module decomposable across weights): {count} distinct eigenvalues")]
    MultipleWeights { count: usize },

    #[error("malformed input: {0}")]
    Format(String),
}
