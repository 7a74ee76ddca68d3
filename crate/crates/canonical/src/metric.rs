//! The (−,+,+,+) metric, four-vectors and the Hermitian pairing they carry.

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat4 = Matrix4<C64>;
pub type CVec4 = Vector4<C64>;
pub type RVec4 = Vector4<f64>;
pub type RMat4 = Matrix4<f64>;

/// Diagonal of the metric on indices 0..3.
pub const ETA_DIAG: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

/// Metric entry η_{aa} as f64.
#[inline]
pub fn eta(a: usize) -> f64 {
    ETA_DIAG[a]
}

/// Metric entry η_{aa} as an exact integer (±1).
#[inline]
pub fn eta_i(a: usize) -> i64 {
    if a == 0 {
        -1
    } else {
        1
    }
}

/// The metric as a complex 4×4 matrix.
pub fn eta_cmat() -> CMat4 {
    CMat4::from_diagonal(&CVec4::new(
        C64::new(-1.0, 0.0),
        C64::new(1.0, 0.0),
        C64::new(1.0, 0.0),
        C64::new(1.0, 0.0),
    ))
}

/// The metric as a real 4×4 matrix.
pub fn eta_rmat() -> RMat4 {
    RMat4::from_diagonal(&RVec4::new(-1.0, 1.0, 1.0, 1.0))
}

/// Hermitian pairing (w, z) = Σ_a η_{aa} conj(w^a) z^a.
///
/// Sesquilinear: conjugate-linear in the first slot, linear in the second.
pub fn pairing(w: &CVec4, z: &CVec4) -> C64 {
    (0..4)
        .map(|a| w[a].conj() * z[a] * eta(a))
        .sum()
}

/// Indefinite norm (z, z); always real up to rounding.
pub fn pairing_norm(z: &CVec4) -> f64 {
    (0..4).map(|a| z[a].norm_sqr() * eta(a)).sum()
}

/// Lorentz inner product x·y = Σ_a η_{aa} x^a y^a on real four-vectors.
pub fn lorentz_dot(x: &RVec4, y: &RVec4) -> f64 {
    (0..4).map(|a| eta(a) * x[a] * y[a]).sum()
}

/// η-dot of two real 4-arrays (same as `lorentz_dot` on array storage).
pub fn eta_dot4(x: &[f64; 4], y: &[f64; 4]) -> f64 {
    (0..4).map(|a| eta(a) * x[a] * y[a]).sum()
}

/// Residual ‖U†ηU − η‖ measuring failure of pseudo-unitarity.
pub fn pseudo_unitarity_residual(u: &CMat4) -> f64 {
    let eta = eta_cmat();
    (u.adjoint() * eta * u - eta).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_is_involutive_and_symmetric() {
        let e = eta_rmat();
        assert_eq!(e * e, RMat4::identity());
        assert_eq!(e.transpose(), e);
    }

    #[test]
    fn pairing_is_sesquilinear_and_norm_real() {
        let w = CVec4::new(
            C64::new(1.0, 2.0),
            C64::new(-0.5, 0.3),
            C64::new(0.0, 1.0),
            C64::new(2.0, -1.0),
        );
        let z = CVec4::new(
            C64::new(0.2, -0.7),
            C64::new(1.5, 0.0),
            C64::new(-1.0, 0.4),
            C64::new(0.0, 0.9),
        );
        let lam = C64::new(0.3, -1.2);
        // conjugate-linear in the first argument
        let lhs = pairing(&(w * lam), &z);
        let rhs = lam.conj() * pairing(&w, &z);
        assert!((lhs - rhs).norm() < 1e-14);
        // linear in the second
        let lhs = pairing(&w, &(z * lam));
        let rhs = lam * pairing(&w, &z);
        assert!((lhs - rhs).norm() < 1e-14);
        // (z, z) real
        assert!(pairing(&z, &z).im.abs() < 1e-14);
    }
}
