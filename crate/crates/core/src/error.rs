use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    /// A state violates the uncertainty principle or positivity beyond tolerance.
    #[error("unphysical state: {0}")]
    Unphysical(String),

    /// The Fock-space truncation cannot hold the state to the requested tolerance.
    #[error("truncation failure at D={dim}: {what} = {value:.3e} exceeds tolerance {tol:.3e}")]
    Truncation {
        dim: usize,
        what: &'static str,
        value: f64,
        tol: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::ParameterDomain(msg.into())
    }

    /// True for errors caused by caller-supplied parameters rather than numerics.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::ParameterDomain(_))
    }
}
