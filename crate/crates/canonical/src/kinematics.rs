//! Dimensioned transformations on 8-dimensional phase states
//! (t, e, q_i, p_i): the infinitesimal law, finite pure boosts in closed
//! form, the large-(c, b) limit, and the two invariant structures every
//! transformation must preserve — the signature-(2,6) quadratic form
//!
//! ```text
//! t² + e²/(c²b²) − q²/c² − p²/b²
//! ```
//!
//! and the symplectic pairing of (t, e) and (q_i, p_i).
//!
//! Sign conventions: the generator is fixed by requiring both invariants,
//! which pins the γ coupling to dP_i = +γ_i T (the velocity rows and the
//! force-boost rows then mirror each other through the complex structure
//! z_i = β_i/c + iγ_i/b).  The finite boost is the exact exponential of
//! that generator; the closed form below includes the antisymmetric
//! Q-P mixing that appears when β and γ are not collinear.

use crate::algebra::Constants;
use crate::expm::expm_r;
use crate::metric::C64;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KinematicsError {
    #[error("theta mixer must be symmetric; asymmetry norm {0:.3e}")]
    AsymmetricTheta(f64),
    #[error("limit scale must exceed 1, got {0}")]
    BadScale(f64),
}

/// A point of the 8-dimensional phase space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseState {
    pub t: f64,
    pub e: f64,
    pub q: [f64; 3],
    pub p: [f64; 3],
}

impl PhaseState {
    pub fn to_vec8(&self) -> [f64; 8] {
        [
            self.t, self.e, self.q[0], self.q[1], self.q[2], self.p[0], self.p[1], self.p[2],
        ]
    }

    pub fn from_vec8(v: &[f64; 8]) -> Self {
        Self {
            t: v[0],
            e: v[1],
            q: [v[2], v[3], v[4]],
            p: [v[5], v[6], v[7]],
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let a = self.to_vec8();
        let b = other.to_vec8();
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

/// Generator parameters: velocity boosts β, force boosts γ, rotations α,
/// the symmetric Q-P mixer θ and the t-e rotation ϑ.
#[derive(Debug, Clone)]
pub struct BoostParams {
    pub beta: [f64; 3],
    pub gamma: [f64; 3],
    pub alpha: [f64; 3],
    pub theta: [[f64; 3]; 3],
    pub vartheta: f64,
}

impl BoostParams {
    pub fn new(
        beta: [f64; 3],
        gamma: [f64; 3],
        alpha: [f64; 3],
        theta: [[f64; 3]; 3],
        vartheta: f64,
    ) -> Result<Self, KinematicsError> {
        let mut asym: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                asym = asym.max((theta[i][j] - theta[j][i]).abs());
            }
        }
        if asym > 1e-12 {
            return Err(KinematicsError::AsymmetricTheta(asym));
        }
        Ok(Self {
            beta,
            gamma,
            alpha,
            theta,
            vartheta,
        })
    }

    pub fn pure(beta: [f64; 3], gamma: [f64; 3]) -> Self {
        Self {
            beta,
            gamma,
            alpha: [0.0; 3],
            theta: [[0.0; 3]; 3],
            vartheta: 0.0,
        }
    }

    pub fn zeta(&self, k: &Constants) -> f64 {
        let b2: f64 = self.beta.iter().map(|x| x * x).sum();
        let g2: f64 = self.gamma.iter().map(|x| x * x).sum();
        (b2 / (k.c * k.c) + g2 / (k.b * k.b)).sqrt()
    }
}

fn levi(i: usize, j: usize, k: usize) -> f64 {
    crate::algebra::levi_civita(i, j, k) as f64
}

/// The 8×8 generator of the transformation law in coordinates
/// (t, e, q₁, q₂, q₃, p₁, p₂, p₃).
pub fn generator_matrix(params: &BoostParams, k: &Constants) -> DMatrix<f64> {
    let (c, b) = (k.c, k.b);
    let c2 = c * c;
    let b2 = b * b;
    let mut g = DMatrix::<f64>::zeros(8, 8);
    let (beta, gamma, alpha, theta, vt) = (
        &params.beta,
        &params.gamma,
        &params.alpha,
        &params.theta,
        params.vartheta,
    );
    // t row: β·q/c² + γ·p/b² + ϑ e/(c²b²)
    for i in 0..3 {
        g[(0, 2 + i)] = beta[i] / c2;
        g[(0, 5 + i)] = gamma[i] / b2;
    }
    g[(0, 1)] = vt / (c2 * b2);
    // e row: −γ·q + β·p − ϑ t
    for i in 0..3 {
        g[(1, 2 + i)] = -gamma[i];
        g[(1, 5 + i)] = beta[i];
    }
    g[(1, 0)] = -vt;
    // q_i row: ε_ijk α_j q_k + β_i t − γ_i e/b² − θ_ij p_j/b²
    for i in 0..3 {
        g[(2 + i, 0)] = beta[i];
        g[(2 + i, 1)] = -gamma[i] / b2;
        for j in 0..3 {
            for l in 0..3 {
                g[(2 + i, 2 + l)] += levi(i, j, l) * alpha[j];
            }
            g[(2 + i, 5 + j)] -= theta[i][j] / b2;
        }
    }
    // p_i row: ε_ijk α_j p_k + β_i e/c² + γ_i t + θ_ij q_j/c²
    for i in 0..3 {
        g[(5 + i, 0)] = gamma[i];
        g[(5 + i, 1)] = beta[i] / c2;
        for j in 0..3 {
            for l in 0..3 {
                g[(5 + i, 5 + l)] += levi(i, j, l) * alpha[j];
            }
            g[(5 + i, 2 + j)] += theta[i][j] / c2;
        }
    }
    g
}

/// First-order transformation s ↦ s + G·s.
pub fn infinitesimal_transform(s: &PhaseState, params: &BoostParams, k: &Constants) -> PhaseState {
    let g = generator_matrix(params, k);
    let v = nalgebra::DVector::from_row_slice(&s.to_vec8());
    let out = &v + g * &v;
    let mut arr = [0.0; 8];
    arr.copy_from_slice(out.as_slice());
    PhaseState::from_vec8(&arr)
}

fn sinhc(z: f64) -> f64 {
    // sinh ζ / ζ with a series switch near 0
    if z < 1e-4 {
        let z2 = z * z;
        1.0 + z2 / 6.0 + z2 * z2 / 120.0 + z2 * z2 * z2 / 5040.0
    } else {
        z.sinh() / z
    }
}

fn coshm1(z: f64) -> f64 {
    // (cosh ζ − 1)/ζ² with a series switch near 0
    if z < 1e-4 {
        let z2 = z * z;
        0.5 + z2 / 24.0 + z2 * z2 / 720.0 + z2 * z2 * z2 / 40320.0
    } else {
        (z.cosh() - 1.0) / (z * z)
    }
}

/// Finite pure boost: the exponential of the (β, γ) generator in closed
/// form.  Works in the scaled complex coordinates U = t + i e/(cb),
/// V_i = q_i/c + i p_i/b with z_i = β_i/c + i γ_i/b:
///
/// ```text
/// U' = cosh ζ · U + sinhc ζ · Σ conj(z_i) V_i
/// V'_i = sinhc ζ · z_i U + V_i + coshm1 ζ · z_i Σ conj(z_j) V_j
/// ```
pub fn pure_boost(s: &PhaseState, beta: &[f64; 3], gamma: &[f64; 3], k: &Constants) -> PhaseState {
    let (c, b) = (k.c, k.b);
    let z: [C64; 3] = std::array::from_fn(|i| C64::new(beta[i] / c, gamma[i] / b));
    let zeta = z.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let u = C64::new(s.t, s.e / (c * b));
    let v: [C64; 3] = std::array::from_fn(|i| C64::new(s.q[i] / c, s.p[i] / b));

    let zv: C64 = (0..3).map(|i| z[i].conj() * v[i]).sum();
    let ch = zeta.cosh();
    let sc = sinhc(zeta);
    let cm = coshm1(zeta);

    let u_new = u * ch + zv * sc;
    let v_new: [C64; 3] = std::array::from_fn(|i| z[i] * u * sc + v[i] + z[i] * zv * cm);

    PhaseState {
        t: u_new.re,
        e: u_new.im * c * b,
        q: std::array::from_fn(|i| v_new[i].re * c),
        p: std::array::from_fn(|i| v_new[i].im * b),
    }
}

/// The boost as an 8×8 matrix (its own Jacobian; the map is linear).
pub fn pure_boost_matrix(beta: &[f64; 3], gamma: &[f64; 3], k: &Constants) -> DMatrix<f64> {
    let mut m = DMatrix::<f64>::zeros(8, 8);
    for col in 0..8 {
        let mut e = [0.0; 8];
        e[col] = 1.0;
        let out = pure_boost(&PhaseState::from_vec8(&e), beta, gamma, k);
        let o = out.to_vec8();
        for row in 0..8 {
            m[(row, col)] = o[row];
        }
    }
    m
}

/// Same boost through the generic matrix exponential; the independent
/// cross-check for the closed form.
pub fn pure_boost_expm(
    s: &PhaseState,
    beta: &[f64; 3],
    gamma: &[f64; 3],
    k: &Constants,
) -> PhaseState {
    let g = generator_matrix(&BoostParams::pure(*beta, *gamma), k);
    let m = expm_r(&g);
    let v = nalgebra::DVector::from_row_slice(&s.to_vec8());
    let out = m * v;
    let mut arr = [0.0; 8];
    arr.copy_from_slice(out.as_slice());
    PhaseState::from_vec8(&arr)
}

/// The invariant quadratic form t² + e²/(c²b²) − q²/c² − p²/b².
pub fn quadratic_form(s: &PhaseState, k: &Constants) -> f64 {
    let (c2, b2) = (k.c * k.c, k.b * k.b);
    let q2: f64 = s.q.iter().map(|x| x * x).sum();
    let p2: f64 = s.p.iter().map(|x| x * x).sum();
    s.t * s.t + s.e * s.e / (c2 * b2) - q2 / c2 - p2 / b2
}

/// The symplectic pairing matrix for (t, e) and each (q_i, p_i).
pub fn symplectic_matrix() -> DMatrix<f64> {
    let mut j = DMatrix::<f64>::zeros(8, 8);
    j[(0, 1)] = 1.0;
    j[(1, 0)] = -1.0;
    for i in 0..3 {
        j[(2 + i, 5 + i)] = -1.0;
        j[(5 + i, 2 + i)] = 1.0;
    }
    j
}

/// ‖MᵀJM − J‖ for an 8×8 transformation matrix.
pub fn symplectic_residual(m: &DMatrix<f64>) -> f64 {
    let j = symplectic_matrix();
    (m.transpose() * &j * m - &j).norm()
}

/// The c, b → ∞ limit of the pure boost:
/// t' = t, e' = e − γ·q + β·p, q' = q + βt, p' = p + γt.
pub fn newtonian_limit_law(s: &PhaseState, beta: &[f64; 3], gamma: &[f64; 3]) -> PhaseState {
    let gq: f64 = (0..3).map(|i| gamma[i] * s.q[i]).sum();
    let bp: f64 = (0..3).map(|i| beta[i] * s.p[i]).sum();
    PhaseState {
        t: s.t,
        e: s.e - gq + bp,
        q: std::array::from_fn(|i| s.q[i] + beta[i] * s.t),
        p: std::array::from_fn(|i| s.p[i] + gamma[i] * s.t),
    }
}

/// Deviation between the finite boost at c = b = scale and the limit law.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LimitDeviation {
    pub scale: f64,
    pub max_abs_deviation: f64,
}

pub fn newtonian_limit_check(
    s: &PhaseState,
    beta: &[f64; 3],
    gamma: &[f64; 3],
    scale: f64,
) -> Result<LimitDeviation, KinematicsError> {
    if scale <= 1.0 {
        return Err(KinematicsError::BadScale(scale));
    }
    let k = Constants::new(scale, scale, 1.0).expect("positive constants");
    let boosted = pure_boost(s, beta, gamma, &k);
    let limit = newtonian_limit_law(s, beta, gamma);
    Ok(LimitDeviation {
        scale,
        max_abs_deviation: boosted.max_abs_diff(&limit),
    })
}
