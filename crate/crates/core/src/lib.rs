//! Two-variable zeta functions of curves of genus ≤ 2 over small finite fields.
//!
//! The pipeline counts points on an explicit curve, recovers the L-polynomial
//! and class number, builds the divisor-class census `b_{nk}`, assembles the
//! numerator `P(t,u)` in closed form, checks its structural properties and
//! certifies its irreducibility in ℂ(u)[t].

pub mod arith;
pub mod curves;
pub mod zeta2;
pub mod irreducibility;
pub mod cli;
