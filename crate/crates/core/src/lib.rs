//! Exact continued-fraction expansion of truncated formal power series.
//!
//! A series `f(t) = a_0 + a_1 t + … + a_N t^N + O(t^{N+1})` with coefficients
//! in Q, Q(q) or Q[x, y, …] is expanded as
//!
//! ```text
//!                         alpha_0
//! f(t) = ----------------------------------------------
//!        1 - Delta_1(t) - alpha_1 t^p_1
//!                         ------------------------------
//!                         1 - Delta_2(t) - alpha_2 t^p_2
//!                                          -------------
//!                                               ...
//! ```
//!
//! with `Delta_k` polynomials of degree at most `M_k` (`M = 0` gives
//! C-/S-fractions, `M = 1` with `p = 2` gives J-fractions).
//!
//! * [`coeffs`]: the coefficient domains.
//! * [`series`]: truncated power series with explicit order.
//! * [`expand`]: the quadratic and linear expansion algorithms, evaluation,
//!   Euler–Gauss verification, contraction and Hankel recovery.
//! * [`paths`]: Motzkin/Dyck path enumeration and Jacobi–/Stieltjes–Rogers tables.
//! * [`catalog`]: named series families and closed-form `g_k` families.

pub mod catalog;
pub mod coeffs;
pub mod error;
pub mod expand;
pub mod paths;
pub mod series;

pub use coeffs::{Coeff, Domain, Rational};
pub use error::{Error, Result};
pub use expand::{CFraction, CfTerm, ExpansionShape, GTable, Status};
pub use series::TruncatedSeries;
