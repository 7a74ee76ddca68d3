//! Group elements (U, ω, ι) of the semidirect product of the pseudo-unitary
//! group with the Weyl-Heisenberg group, their composition, inverses and the
//! phase-split form.
//!
//! Storage is the 16-parameter homogeneous form; the split into a unit-phase
//! factor and a unit-determinant part is a derived view (`to_su_os_form`).

use crate::expm::expm_c;
use crate::metric::{eta, eta_cmat, pairing, pseudo_unitarity_residual, C64, CMat4, CVec4};
use crate::tolerances;
use nalgebra::{Matrix3, Vector3};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_4;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("matrix is not pseudo-unitary: U†ηU − η residual {residual:.3e} exceeds {tol:.3e}")]
    NotPseudoUnitary { residual: f64, tol: f64 },
    #[error("matrix determinant modulus {det:.12} is not 1 within {tol:.3e}")]
    DeterminantNotUnit { det: f64, tol: f64 },
    #[error("expected a homogeneous element (ω = 0), got ‖ω‖ = {0:.3e}")]
    NotHomogeneous(f64),
    #[error("expected a normal-subgroup element (U = I), got ‖U − I‖ = {0:.3e}")]
    NotNormal(f64),
    #[error("re-projection to the pseudo-unitary manifold failed to converge")]
    ReprojectionFailed,
}

/// A validated 4×4 pseudo-unitary matrix: U†ηU = η and |det U| = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PseudoUnitaryMatrix(CMat4);

impl PseudoUnitaryMatrix {
    pub fn new(m: CMat4) -> Result<Self, GroupError> {
        Self::with_tol(m, tolerances::ELEMENT_VALIDATION)
    }

    pub fn with_tol(m: CMat4, tol: f64) -> Result<Self, GroupError> {
        let residual = pseudo_unitarity_residual(&m);
        if residual > tol {
            return Err(GroupError::NotPseudoUnitary { residual, tol });
        }
        let det = m.determinant().norm();
        if (det - 1.0).abs() > tol {
            return Err(GroupError::DeterminantNotUnit { det, tol });
        }
        Ok(Self(m))
    }

    /// Internal constructor for matrices exact by construction.
    pub(crate) fn unchecked(m: CMat4) -> Self {
        Self(m)
    }

    pub fn identity() -> Self {
        Self(CMat4::identity())
    }

    pub fn matrix(&self) -> &CMat4 {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        // η U† η is the exact group inverse
        let eta = eta_cmat();
        Self(eta * self.0.adjoint() * eta)
    }

    pub fn apply(&self, z: &CVec4) -> CVec4 {
        self.0 * z
    }

    /// ‖U†ηU − η‖, for reporting.
    pub fn residual(&self) -> f64 {
        pseudo_unitarity_residual(&self.0)
    }

    /// Explicit Newton re-projection onto the pseudo-unitary manifold.
    ///
    /// Arithmetic elsewhere never re-orthonormalizes silently; call this when
    /// accumulated products have drifted past validation tolerance.
    pub fn reproject(m: &CMat4) -> Result<Self, GroupError> {
        let eta = eta_cmat();
        let mut u = *m;
        for _ in 0..50 {
            if pseudo_unitarity_residual(&u) < 1e-14 {
                return Self::new(u);
            }
            // Newton step for U†ηU = η: average with the constraint-inverse
            let uinv_he = eta
                * u.adjoint()
                    .try_inverse()
                    .ok_or(GroupError::ReprojectionFailed)?
                * eta;
            u = (u + uinv_he) * C64::new(0.5, 0.0);
        }
        Err(GroupError::ReprojectionFailed)
    }

    /// Pure boost exp([[0, v†], [v, 0]]) in closed form.
    ///
    /// The generator is Hermitian and anticommutes with η, so the result is
    /// Hermitian positive-definite and pseudo-unitary.
    pub fn pure_boost(v: &Vector3<C64>) -> Self {
        let zeta = v.norm();
        let mut m = CMat4::identity();
        if zeta < 1e-300 {
            return Self(m);
        }
        let (ch, sh) = (zeta.cosh(), zeta.sinh());
        m[(0, 0)] = C64::new(ch, 0.0);
        for i in 0..3 {
            m[(0, 1 + i)] = v[i].conj() * (sh / zeta);
            m[(1 + i, 0)] = v[i] * (sh / zeta);
            for j in 0..3 {
                m[(1 + i, 1 + j)] += v[i] * v[j].conj() * ((ch - 1.0) / (zeta * zeta));
            }
        }
        Self(m)
    }

    /// Block-diagonal compact element diag(e^{iφ}, W) with W ∈ U(3).
    pub fn compact_block(phase: f64, w: &Matrix3<C64>) -> Result<Self, GroupError> {
        let mut m = CMat4::zeros();
        m[(0, 0)] = C64::from_polar(1.0, phase);
        for i in 0..3 {
            for j in 0..3 {
                m[(1 + i, 1 + j)] = w[(i, j)];
            }
        }
        Self::new(m)
    }

    /// Random element via the exponential of a random algebra element
    /// X = η·(iH), H Hermitian, which lands exactly on the group manifold
    /// up to matrix-exponential accuracy.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let scale = 0.35;
        let mut h = CMat4::zeros();
        for a in 0..4 {
            let d: f64 = rng.sample(StandardNormal);
            h[(a, a)] = C64::new(d * scale, 0.0);
            for b in (a + 1)..4 {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                h[(a, b)] = C64::new(re * scale, im * scale);
                h[(b, a)] = h[(a, b)].conj();
            }
        }
        let x = eta_cmat() * h * C64::new(0.0, 1.0);
        Self(expm_c(&x))
    }

    /// Random pure boost with moderate rapidity.
    pub fn random_pure_boost<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let v = Vector3::from_fn(|_, _| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            C64::new(re * 0.4, im * 0.4)
        });
        Self::pure_boost(&v)
    }

    /// Random compact block-diagonal element.
    pub fn random_compact<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut h = Matrix3::<C64>::zeros();
        for a in 0..3 {
            let d: f64 = rng.sample(StandardNormal);
            h[(a, a)] = C64::new(d * 0.5, 0.0);
            for b in (a + 1)..3 {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                h[(a, b)] = C64::new(re * 0.5, im * 0.5);
                h[(b, a)] = h[(a, b)].conj();
            }
        }
        // exp(iH) is unitary
        let mut x = CMat4::zeros();
        for a in 0..3 {
            for b in 0..3 {
                x[(1 + a, 1 + b)] = h[(a, b)] * C64::new(0.0, 1.0);
            }
        }
        let phase: f64 = rng.gen_range(-1.0..1.0);
        x[(0, 0)] = C64::new(0.0, phase);
        Self(expm_c(&x))
    }
}

/// A group element (U, ω, ι).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ElementJson", into = "ElementJson")]
pub struct CanonicalElement {
    pub u: PseudoUnitaryMatrix,
    pub omega: CVec4,
    pub iota: f64,
}

/// The phase-split view (Ũ, ϑ, ω, ι) with det Ũ = 1.
#[derive(Debug, Clone)]
pub struct SuOsForm {
    pub su: PseudoUnitaryMatrix,
    pub theta: f64,
    pub omega: CVec4,
    pub iota: f64,
}

impl CanonicalElement {
    pub fn new(u: PseudoUnitaryMatrix, omega: CVec4, iota: f64) -> Self {
        Self { u, omega, iota }
    }

    pub fn identity() -> Self {
        Self {
            u: PseudoUnitaryMatrix::identity(),
            omega: CVec4::zeros(),
            iota: 0.0,
        }
    }

    /// Element of the normal (Weyl-Heisenberg) subgroup: U = I.
    pub fn heisenberg(omega: CVec4, iota: f64) -> Self {
        Self {
            u: PseudoUnitaryMatrix::identity(),
            omega,
            iota,
        }
    }

    /// Homogeneous element: ω = 0, ι = 0.
    pub fn homogeneous(u: PseudoUnitaryMatrix) -> Self {
        Self {
            u,
            omega: CVec4::zeros(),
            iota: 0.0,
        }
    }

    /// Group composition g1 ∘ g2 = (U₁U₂, ω₁ + U₁ω₂, ι₁ + ι₂ + Im(ω₁, U₁ω₂)).
    pub fn compose(&self, other: &Self) -> Self {
        let u = PseudoUnitaryMatrix::unchecked(self.u.matrix() * other.u.matrix());
        let u1_omega2 = self.u.apply(&other.omega);
        let omega = self.omega + u1_omega2;
        let iota = self.iota + other.iota + pairing(&self.omega, &u1_omega2).im;
        Self { u, omega, iota }
    }

    /// Group inverse (U⁻¹, −U⁻¹ω, −ι).
    pub fn inverse(&self) -> Self {
        let uinv = self.u.inverse();
        let omega = -(uinv.apply(&self.omega));
        Self {
            u: uinv,
            omega,
            iota: -self.iota,
        }
    }

    /// Extract the phase ϑ = (arg det U)/4 folded to (−π/4, π/4] and the
    /// unit-determinant factor e^{−iϑ}U.
    ///
    /// The branch choice is a convention; only the group action is
    /// branch-independent, so tests compare actions, never raw ϑ.
    pub fn to_su_os_form(&self) -> SuOsForm {
        let det = self.u.matrix().determinant();
        let mut theta = det.arg() / 4.0;
        if theta <= -FRAC_PI_4 {
            theta += std::f64::consts::FRAC_PI_2;
        }
        let su = self.u.matrix() * C64::from_polar(1.0, -theta);
        SuOsForm {
            su: PseudoUnitaryMatrix::unchecked(su),
            theta,
            omega: self.omega,
            iota: self.iota,
        }
    }

    /// Rebuild the stored form from a phase-split view.
    pub fn from_su_os_form(f: &SuOsForm) -> Self {
        let u = f.su.matrix() * C64::from_polar(1.0, f.theta);
        Self {
            u: PseudoUnitaryMatrix::unchecked(u),
            omega: f.omega,
            iota: f.iota,
        }
    }

    /// Max norm distance between the actions of two elements.
    pub fn distance(&self, other: &Self) -> f64 {
        let du = (self.u.matrix() - other.u.matrix()).norm();
        let dw = (self.omega - other.omega).norm();
        let di = (self.iota - other.iota).abs();
        du.max(dw).max(di)
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let u = PseudoUnitaryMatrix::random(rng);
        let omega = CVec4::from_fn(|_, _| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            C64::new(re * 0.7, im * 0.7)
        });
        let iota: f64 = rng.sample(StandardNormal);
        Self { u, omega, iota }
    }
}

/// Composition in the phase-split coordinates:
/// (Ũ₁, ϑ₁, ω₁, ι₁)(Ũ₂, ϑ₂, ω₂, ι₂)
///   = (Ũ₁Ũ₂, ϑ₁ + ϑ₂, ω₁ + e^{iϑ₁}Ũ₁ω₂, ι₁ + ι₂ + Im(e^{iϑ₁}(ω₁, Ũ₁ω₂))).
///
/// The phase in the cocycle is the left factor's ϑ₁; that choice is forced by
/// g·g⁻¹ = e and matches the homogeneous-form law under U = e^{iϑ}Ũ.
pub fn compose_su_os(a: &SuOsForm, b: &SuOsForm) -> SuOsForm {
    let su = PseudoUnitaryMatrix::unchecked(a.su.matrix() * b.su.matrix());
    let u1_omega2 = a.su.apply(&b.omega);
    let phase = C64::from_polar(1.0, a.theta);
    let omega = a.omega + u1_omega2 * phase;
    let iota = a.iota + b.iota + (phase * pairing(&a.omega, &u1_omega2)).im;
    SuOsForm {
        su,
        theta: a.theta + b.theta,
        omega,
        iota,
    }
}

/// Conjugate a normal-subgroup element n = (I, ω, ι) by a homogeneous
/// element (U, 0, 0):  (U, 0, 0)⁻¹ n (U, 0, 0) = (I, U⁻¹ω, ι).
pub fn conjugate_normal(
    g_u: &CanonicalElement,
    n: &CanonicalElement,
) -> Result<CanonicalElement, GroupError> {
    let w_norm = g_u.omega.norm();
    if w_norm > tolerances::ELEMENT_VALIDATION {
        return Err(GroupError::NotHomogeneous(w_norm));
    }
    let u_dev = (n.u.matrix() - CMat4::identity()).norm();
    if u_dev > tolerances::ELEMENT_VALIDATION {
        return Err(GroupError::NotNormal(u_dev));
    }
    Ok(CanonicalElement {
        u: PseudoUnitaryMatrix::identity(),
        omega: g_u.u.inverse().apply(&n.omega),
        iota: n.iota,
    })
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    #[serde(rename = "U")]
    u: [[[f64; 2]; 4]; 4],
    omega: [[f64; 2]; 4],
    iota: f64,
}

impl From<CanonicalElement> for ElementJson {
    fn from(g: CanonicalElement) -> Self {
        let mut u = [[[0.0; 2]; 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                let z = g.u.matrix()[(r, c)];
                u[r][c] = [z.re, z.im];
            }
        }
        let mut omega = [[0.0; 2]; 4];
        for a in 0..4 {
            omega[a] = [g.omega[a].re, g.omega[a].im];
        }
        ElementJson {
            u,
            omega,
            iota: g.iota,
        }
    }
}

impl TryFrom<ElementJson> for CanonicalElement {
    type Error = GroupError;
    fn try_from(j: ElementJson) -> Result<Self, GroupError> {
        let m = CMat4::from_fn(|r, c| C64::new(j.u[r][c][0], j.u[r][c][1]));
        let u = PseudoUnitaryMatrix::new(m)?;
        let omega = CVec4::from_fn(|a, _| C64::new(j.omega[a][0], j.omega[a][1]));
        Ok(CanonicalElement::new(u, omega, j.iota))
    }
}

/// Heisenberg composition in real coordinates ω = α + iβ:
/// ι'' = ι₁ + ι₂ + (α₁·β₂ − β₁·α₂) with η-dots.  Exposed for oracle tests.
pub fn heisenberg_compose_real(
    a: (&[f64; 4], &[f64; 4], f64),
    b: (&[f64; 4], &[f64; 4], f64),
) -> ([f64; 4], [f64; 4], f64) {
    let mut alpha = [0.0; 4];
    let mut beta = [0.0; 4];
    for k in 0..4 {
        alpha[k] = a.0[k] + b.0[k];
        beta[k] = a.1[k] + b.1[k];
    }
    let mut cocycle = 0.0;
    for k in 0..4 {
        cocycle += eta(k) * (a.0[k] * b.1[k] - a.1[k] * b.0[k]);
    }
    (alpha, beta, a.2 + b.2 + cocycle)
}
