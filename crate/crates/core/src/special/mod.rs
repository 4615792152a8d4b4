//! Gamma and Gauss hypergeometric functions for complex parameters.

mod dd;
mod gamma;
mod hyp2f1;

pub use gamma::{cos_pi, gamma, gamma_ratio, log_gamma, recip_gamma, sin_pi, POLE_TOL};
pub use hyp2f1::{hyp2f1, Hyp2F1Params, LOG_CASE_TOL, MAX_TERMS, SERIES_EPS};

pub(crate) use hyp2f1::hyp2f1_split;
