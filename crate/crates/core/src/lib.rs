//! Spectral geometry of geodesic balls in complex projective space.
//!
//! Everything here lives on `CP^m` with the Fubini-Study metric normalized to
//! holomorphic sectional curvature 4 (Einstein constant `2(m+1)`, diameter
//! `pi/2`). In that normalization every geometric quantity attached to a
//! geodesic ball has a closed form, which makes the space a convenient test
//! bench for eigenvalue bounds of Lichnerowicz type:
//!
//! * [`geometry`] - closed-form curvature data: the curvature operator,
//!   Jacobi field amplitudes, the spectrum of the distance Hessian, the
//!   radial drift and the volume density of geodesic spheres.
//! * [`boundary`] - convexity / pseudoconvexity classification of geodesic
//!   balls and the relaxed mean-curvature-type boundary condition with its
//!   exact threshold radius `arctan(sqrt m)`.
//! * [`sturm`] - the singular Sturm-Liouville reduction of the first
//!   Dirichlet eigenvalue problem on a ball, solved by two independent
//!   methods (conservative finite differences with Sturm-sequence bisection,
//!   and phase-function shooting).
//! * [`bochner`] - term-by-term evaluation of the integrated Bochner
//!   identity for the eigenpair, including the boundary term whose sign
//!   flips past the threshold radius.
//! * [`tensorlab`] - coordinate-level finite-difference checks of the
//!   Hessian decomposition on the standard affine chart, independent of the
//!   radial machinery.
//!
//! Eigenvalues are reported in two conventions: `lambda_usual` for the
//! Laplace-Beltrami operator and `lambda_dbar = lambda_usual / 2` for the
//! d-bar Laplacian, which is half the usual one on a Kaehler manifold.

use thiserror::Error;

pub mod bochner;
pub mod boundary;
pub mod geometry;
pub mod numerics;
pub mod sturm;
pub mod tensorlab;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("complex dimension must be >= 1, got {0}")]
    InvalidDimension(u32),

    #[error("radius {value} outside valid domain ({lo}, {hi})")]
    DomainError { value: f64, lo: f64, hi: f64 },

    #[error("mesh must have at least {min} cells and an even cell count, got {got}")]
    InvalidMesh { got: usize, min: usize },

    #[error("grid must be strictly increasing inside (0, pi/2)")]
    InvalidGrid,

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    #[error("eigenvalue bisection failed to converge in {iterations} iterations (bracket [{lo}, {hi}])")]
    BisectionStalled { lo: f64, hi: f64, iterations: usize },

    #[error("initial eigenvalue bracket [{lo}, {hi}] does not straddle the first eigenvalue, even after widening")]
    BracketFailure { lo: f64, hi: f64 },

    #[error("ODE integration failed near r = {r}: {reason}; try a smaller series offset or looser radius")]
    Integration { r: f64, reason: String },

    #[error("eigenfunction mesh too coarse for endpoint extraction ({0} samples)")]
    MeshTooCoarse(usize),

    #[error("boundary derivative |u'(r0)| = {0:.3e} is degenerate; not a genuine first eigenfunction")]
    DegenerateBoundaryDerivative(f64),

    #[error("integrated identity residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    AuditResidual {
        residual: f64,
        tolerance: f64,
        audit: Box<bochner::BochnerAudit>,
    },

    #[error("frame-constant estimates disagree across test functions (spread {0:.3e} > 1e-6)")]
    CalibrationSpread(f64),

    #[error("chart point |z| = {0:.3} too far from the origin (reject |z| > 10)")]
    ChartOutOfRange(f64),

    #[error("operation requires complex dimension {expected}, model has {got}")]
    DimensionMismatch { expected: u32, got: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
