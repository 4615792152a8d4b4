use thiserror::Error;

/// Failure modes of the evaluators and the verification engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {re}{im:+}i lies within {tol:e} of the pole at {pole}")]
    PoleProximity { re: f64, im: f64, pole: i64, tol: f64 },

    #[error("{what} did not converge within {iterations} iterations")]
    NonConvergence { what: &'static str, iterations: usize },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("order q = {q:e} is too close to zero (|q| must be at least {min:e})")]
    OrderSingularity { q: f64, min: f64 },

    #[error("coefficient pole at q = {q:e} (|q| must be at least {min:e})")]
    CoefficientPole { q: f64, min: f64 },

    #[error("point outside the open interval (-1, 1): {0}")]
    Domain(String),

    #[error("non-finite result in {0}")]
    NonFinite(&'static str),

    #[error("quadrature did not reach tolerance after {refinements} refinements (estimate {estimate:e}, target {target:e})")]
    Quadrature { refinements: usize, estimate: f64, target: f64 },

    #[error("wave packet overlaps the mirrored support or the q = 0 pole: {0}")]
    PacketOverlap(String),

    #[error("degenerate pair: |q^2 - q'^2| = {0:e} is below 1e-6")]
    DegeneratePair(f64),

    #[error("fixture out of range: {0}")]
    FixtureRange(String),
}

impl Error {
    /// Whether the error reports arguments outside an operation's domain, as
    /// opposed to a numerical failure on valid arguments.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::Parameter(_)
                | Error::OrderSingularity { .. }
                | Error::CoefficientPole { .. }
                | Error::Domain(_)
                | Error::PacketOverlap(_)
                | Error::DegeneratePair(_)
                | Error::FixtureRange(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
