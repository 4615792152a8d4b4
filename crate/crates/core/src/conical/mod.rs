//! Ferrers functions `P^{iq}_lambda`, `Q^{iq}_lambda` of complex degree and
//! imaginary order on the cut (-1, 1).

mod eval;
mod types;

pub use eval::{
    eval, eval_jet, eval_p, eval_p_deriv, eval_p_reflected, eval_p_reflected_literal, eval_q,
    eval_q_deriv, ode_residual, Jet, Q_ORDER_MIN,
};
pub use types::{Degree, EvalPoint, Kind, Order, X_MARGIN};
