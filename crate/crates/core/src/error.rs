use thiserror::Error;

/// Errors surfaced by the library's fallible operations.
///
/// All other operations are total on their stated domains and return plain
/// values.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Principal logarithm of zero.
    #[error("principal log is undefined at z = 0")]
    LogAtZero,

    /// The superordinate map is singular at the requested point (the
    /// parabolic map's logarithmic singularity and the half-plane map's
    /// pole, both at z = 1).
    #[error("superordinate map for {0} is singular at z = 1")]
    SuperordinateSingularity(String),

    /// `alpha` outside `[0, 1)`.
    #[error("alpha = {0} is outside [0, 1)")]
    AlphaOutOfRange(f64),

    /// `r` outside `[0, 1)` for a derivative bound.
    #[error("radius r = {0} is outside [0, 1)")]
    RadiusOutOfRange(f64),

    /// Disk center outside the inclusion lemma's admissible interval.
    #[error("center a = {a} is outside the admissible interval [{lo}, {hi}] for {target}")]
    CenterOutOfRange { target: String, a: f64, lo: f64, hi: f64 },

    /// The requested target has no disk-inclusion lemma or implicit formula.
    #[error("operation is not supported for target {0}")]
    UnsupportedTarget(String),

    /// Log-derivative evaluation hit a vanishing factor.
    #[error("factor singularity at z = {re} + {im}i")]
    FactorSingularity { re: f64, im: f64 },

    /// Bisection target value exceeds the bound's range on the bracket.
    #[error("no root: delta = {delta} exceeds the bound's maximum {max} on the bracket")]
    NoRoot { delta: f64, max: f64 },

    /// A Schwarz-function spec violated its constraints.
    #[error("invalid Schwarz spec: {0}")]
    InvalidSchwarzSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
