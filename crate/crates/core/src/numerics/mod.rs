//! Small numerical building blocks: quadrature, tridiagonal eigensolves,
//! Bessel zeros and explicit Runge-Kutta integrators.

pub mod bessel;
pub mod ode;
pub mod quad;
pub mod tridiag;
