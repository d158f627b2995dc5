//! Numerical certification of differential Harnack inequalities for positive
//! solutions of `∂ₜu = Δu + H(u)`.
//!
//! The toolkit has three legs:
//!
//! * an ODE-inequality checker ([`system_checker`]) that evaluates the
//!   constraint margins of the A1/A2/A3 systems for a candidate quintuple
//!   `(γ, α, φ, β, c)` of time functions over a `(t, f)` grid,
//! * a catalog of closed-form candidates ([`candidates`]) covering the
//!   classical Li-Yau / Davies / Li-Xu / Hamilton estimates for the linear,
//!   logarithmic and power-nonlinearity equations, together with the sharp
//!   families for `∂ₜu = Δu + a·u·ln u`,
//! * desk-scale numerics ([`ode`], [`pde`], [`harnack`]) that confront the
//!   certified inequalities with exact solutions and simulated fields on flat
//!   tori and Neumann intervals.
//!
//! The `harnack-verify` binary wires these together behind a config file; see
//! the crate README for usage.

pub mod candidates;
pub mod cli;
pub mod equations;
pub mod harnack;
pub mod ode;
pub mod pde;
pub mod quad;
pub mod system_checker;
pub mod time_fn;

mod dd;

pub use equations::{CurvatureParams, EquationSpec};
pub use system_checker::{Branch, SystemKind};
