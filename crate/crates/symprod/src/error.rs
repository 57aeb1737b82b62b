//! Error type shared by every module.

/// Errors raised by the library.
///
/// [`Error::Consistency`] is special: it means two routes that must agree
/// by theorem (product form vs exp form, brute force vs closed form) did
/// not, i.e. a bug rather than bad input. The CLI maps it to its own exit
/// code.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("variable sets differ: ({0}) vs ({1})")]
    VarSetMismatch(String, String),
    #[error("variable names must be unique and non-empty")]
    BadVarSet,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("Adams operation index must be >= 1")]
    AdamsIndex,
    #[error("cannot substitute 0 for `{var}`: it occurs with negative exponent {exp}")]
    ZeroSubstitution { var: String, exp: i64 },
    #[error("cannot substitute a non-invertible polynomial for `{var}` with negative exponent {exp}")]
    NonInvertibleSubstitution { var: String, exp: i64 },
    #[error("constant term `{0}` is not invertible")]
    NonInvertibleConstant(String),
    #[error("exp requires constant term 0, found `{0}`")]
    ExpConstantTerm(String),
    #[error("log requires constant term 1, found `{0}`")]
    LogConstantTerm(String),
    #[error("expected a single monomial with coefficient 1, found `{0}`")]
    NotUnitMonomial(String),
    #[error("coefficient {value} of `{monomial}` is not an integer")]
    NonIntegerCoefficient { monomial: String, value: String },
    #[error("hodge coefficient {value} of `{monomial}` has the wrong sign for the (-z)^k convention")]
    HodgeSign { monomial: String, value: String },
    #[error("enumeration guard exceeded (dim^n = {size} > 10^6); use the character path via cycle traces instead")]
    BruteForceGuard { size: u128 },
    #[error("partition of {got} where a partition of {expected} was required")]
    PartitionSize { expected: u64, got: u64 },
    #[error("signature {sigma} and Euler characteristic {chi} must have the same parity")]
    ParityMismatch { sigma: i64, chi: i64 },
    #[error("kind `{kind}` is not supported by {operation}")]
    UnsupportedKind { kind: String, operation: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid profile `{name}`: {msg}")]
    Profile { name: String, msg: String },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
