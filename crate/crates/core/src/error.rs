use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("invalid waveguide: {0}")]
    InvalidWaveguide(String),

    #[error("invalid mode index (r = {r}, s = {s}): r must be >= 1")]
    InvalidMode { r: u32, s: u32 },

    #[error("below cutoff: evanescent regime (omega = {omega}, cutoff = {cutoff})")]
    BelowCutoff { omega: f64, cutoff: f64 },

    #[error("lightlike separation (t = {t}, r = {r}): distributional regime, not pointwise evaluable")]
    Lightlike { t: f64, r: f64 },

    #[error("unsupported Bessel order {0}; only 0 and 1 are implemented")]
    UnsupportedOrder(u32),

    #[error("invalid quadrature config: {0}")]
    InvalidConfig(String),

    #[error("quadrature did not converge: {0}")]
    NonConvergence(String),

    #[error("invalid fit samples: {0}")]
    InvalidSamples(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}
