//! Closed-form differential geometry of `CP^m` with the Fubini-Study metric.
//!
//! The normalization is hard-coded: holomorphic sectional curvature 4, so the
//! Einstein constant is `k = 2(m+1)` and the diameter is `pi/2`. There is no
//! configurable curvature scale; every closed form below assumes this one.
//!
//! Radii are geodesic distances from a fixed center and live strictly inside
//! `(0, pi/2)` for pointwise calls (the cut locus of a point is a `CP^{m-1}`
//! at distance exactly `pi/2`). Callers needing the `r -> 0` limit should use
//! the series `cot r = 1/r - r/3 + O(r^3)` rather than evaluating at 0.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::{Error, Result};

/// The model space `CP^m`, Fubini-Study metric, holomorphic sectional
/// curvature 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectiveModel {
    m: u32,
}

/// Eigenvalue data of the Hessian of the distance function at radius `r`.
///
/// In a parallel adapted frame the Hessian of `r` is diagonal with eigenvalue
/// `cot r` on the `2m - 2` directions orthogonal to the Hopf circle,
/// `2 cot 2r` on the Hopf direction `J grad r`, and `0` along `grad r`.
#[derive(Debug, Clone, Copy)]
pub struct HessRSpectrum {
    /// Eigenvalue `cot r` on the complement of the Hopf plane.
    pub tangential: f64,
    /// Multiplicity of `tangential`: `2m - 2` (zero when `m = 1`).
    pub tangential_multiplicity: u32,
    /// Eigenvalue `2 cot 2r` on the Hopf direction, multiplicity 1.
    pub hopf: f64,
    /// Eigenvalue along `grad r`, identically 0.
    pub radial: f64,
    /// Radius at which the spectrum was evaluated.
    pub r: f64,
}

impl HessRSpectrum {
    /// Trace of the Hessian of `r`, i.e. the Laplacian of the distance
    /// function. Equals [`ProjectiveModel::radial_drift`].
    pub fn trace(&self) -> f64 {
        f64::from(self.tangential_multiplicity) * self.tangential + self.hopf
    }
}

/// Which normal Jacobi field along a radial geodesic, both vanishing at the
/// center.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiKind {
    /// `sin r`, against sectional curvature 1 (directions orthogonal to the
    /// Hopf plane).
    Generic,
    /// `sin 2r`, against sectional curvature 4 (the `J grad r` direction).
    Hopf,
}

#[inline]
fn cot(r: f64) -> f64 {
    r.cos() / r.sin()
}

impl ProjectiveModel {
    /// A model of complex dimension `m >= 1`.
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidDimension(m));
        }
        Ok(Self { m })
    }

    /// Complex dimension `m`.
    pub fn complex_dimension(&self) -> u32 {
        self.m
    }

    /// Real dimension `n = 2m`.
    pub fn real_dimension(&self) -> u32 {
        2 * self.m
    }

    /// Einstein constant `k = 2(m + 1)` in the fixed normalization.
    pub fn einstein_constant(&self) -> f64 {
        2.0 * f64::from(self.m + 1)
    }

    /// Diameter `pi/2`; all radii below live strictly inside `(0, diameter)`.
    pub fn diameter(&self) -> f64 {
        FRAC_PI_2
    }

    /// Area constant `c_m = 2 pi^m / (m-1)!` of the unit `(2m-1)`-sphere.
    ///
    /// The geodesic sphere of radius `r` has area `c_m * w(r)` with `w` the
    /// [volume density](Self::volume_density); carrying `c_m` explicitly
    /// keeps norms and boundary integrals absolute rather than proportional.
    pub fn sphere_area_constant(&self) -> f64 {
        let mut fact = 1.0;
        for j in 1..self.m {
            fact *= f64::from(j);
        }
        2.0 * PI.powi(self.m as i32) / fact
    }

    /// Apply `R(u, .)u` to a vector decomposed along `R u`, `R Ju` and the
    /// orthogonal complement of the `(u, Ju)` plane.
    ///
    /// The three eigenvalues are 0, 4 and 1; the map is linear and total.
    pub fn curvature_operator(
        &self,
        radial_component: f64,
        ju_component: f64,
        orth_component: f64,
    ) -> (f64, f64, f64) {
        (0.0 * radial_component, 4.0 * ju_component, orth_component)
    }

    /// Amplitude of the normal Jacobi field of the given kind vanishing at
    /// the center: `sin r` (generic) or `sin 2r` (Hopf).
    ///
    /// Both satisfy `amplitude'' + kappa * amplitude = 0` with `kappa = 1`
    /// resp. 4. Valid for `r` in `[0, pi/2)`.
    pub fn jacobi_field(&self, kind: JacobiKind, r: f64) -> Result<f64> {
        if !(0.0..FRAC_PI_2).contains(&r) {
            return Err(Error::DomainError {
                value: r,
                lo: 0.0,
                hi: FRAC_PI_2,
            });
        }
        Ok(match kind {
            JacobiKind::Generic => r.sin(),
            JacobiKind::Hopf => (2.0 * r).sin(),
        })
    }

    /// Eigenvalues of the Hessian of the distance function at radius
    /// `r in (0, pi/2)`.
    pub fn hess_r_spectrum(&self, r: f64) -> Result<HessRSpectrum> {
        self.check_open_interval(r)?;
        Ok(HessRSpectrum {
            tangential: cot(r),
            tangential_multiplicity: 2 * self.m - 2,
            hopf: 2.0 * cot(2.0 * r),
            radial: 0.0,
            r,
        })
    }

    /// Laplacian of the distance function: `(2m-1) cot r - tan r`.
    ///
    /// Equals the trace `(2m-2) cot r + 2 cot 2r` of the distance Hessian and
    /// the logarithmic derivative `w'/w` of the volume density.
    pub fn radial_drift(&self, r: f64) -> Result<f64> {
        self.check_open_interval(r)?;
        Ok(drift_raw(self.m, r))
    }

    /// Density `w(r) = sin^{2m-1}(r) cos(r)` of the geodesic sphere of
    /// radius `r`, up to the constant `c_m`.
    ///
    /// Strictly positive on `(0, pi/2)`; behaves like the Euclidean density
    /// `r^{2m-1}` as `r -> 0`. The sphere area is `c_m * w(r)`.
    pub fn volume_density(&self, r: f64) -> Result<f64> {
        self.check_open_interval(r)?;
        Ok(density_raw(self.m, r))
    }

    fn check_open_interval(&self, r: f64) -> Result<()> {
        if !(r > 0.0 && r < FRAC_PI_2) {
            return Err(Error::DomainError {
                value: r,
                lo: 0.0,
                hi: FRAC_PI_2,
            });
        }
        Ok(())
    }
}

/// `w(r) = sin^{2m-1}(r) cos(r)` without domain checks. `w(0) = 0` exactly.
#[inline]
pub(crate) fn density_raw(m: u32, r: f64) -> f64 {
    r.sin().powi(2 * m as i32 - 1) * r.cos()
}

/// `(2m-1) cot r - tan r` without domain checks.
#[inline]
pub(crate) fn drift_raw(m: u32, r: f64) -> f64 {
    f64::from(2 * m - 1) * cot(r) - r.tan()
}

/// Antiderivative `sin^{2m}(r) / (2m)` of the volume density, with value 0
/// at `r = 0`. Lets cell masses of the radial problem be integrated exactly.
#[inline]
pub(crate) fn density_primitive(m: u32, r: f64) -> f64 {
    r.sin().powi(2 * m as i32) / f64::from(2 * m)
}

/// Boundary bracket `(2m-2) cot r + 4 cot 2r`; this is the integrand of the
/// relaxed boundary condition and changes sign at `r = arctan(sqrt m)`.
#[inline]
pub(crate) fn boundary_bracket_raw(m: u32, r: f64) -> f64 {
    f64::from(2 * m - 2) * cot(r) + 4.0 * cot(2.0 * r)
}
