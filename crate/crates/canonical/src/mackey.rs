//! Orbit machinery for the dual-space actions: classification of dual
//! points with their little groups, the pseudo-unitary polar split U = QR,
//! reference boosts and Wigner factors, and pointwise induced
//! representation evaluators for the translation-group and
//! Weyl-Heisenberg cases, plus the character families.

use crate::expm::expm_r;
use crate::group::{CanonicalElement, GroupError, PseudoUnitaryMatrix};
use crate::metric::{
    eta, eta_dot4, eta_rmat, pairing, pairing_norm, C64, CMat4, CVec4, RMat4, RVec4,
};
use crate::tolerances;
use nalgebra::Matrix4;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MackeyError {
    #[error("point is not strictly timelike: form value {0:.6e}")]
    NotTimelike(f64),
    #[error("point is not on the positive sheet (time component {0:.6e})")]
    NegativeSheet(f64),
    #[error("polar split failed: residual {0:.3e}")]
    PolarSplitFailed(f64),
    #[error("sample point off the mass shell: residual {0:.3e}")]
    OffShell(f64),
    #[error("central parameter must be nonzero for this family")]
    ZeroKappa,
    #[error("family mismatch between homogeneous element and dual point")]
    FamilyMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A point of the dual space of one of the three normal subgroups.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum DualPoint {
    /// Character label of the translation group: real four-vector k.
    Poincare { k: [f64; 4] },
    /// Character label (ν, ϰ) of the 5-dimensional abelian quotient.
    Heisenberg { nu: [f64; 4], kappa: f64 },
    /// Character label of the abelian case: complex four-vector w.
    CanonicalH1 { w: [[f64; 2]; 4] },
}

impl DualPoint {
    pub fn canonical(w: CVec4) -> Self {
        DualPoint::CanonicalH1 {
            w: std::array::from_fn(|a| [w[a].re, w[a].im]),
        }
    }

    pub fn canonical_vector(&self) -> Option<CVec4> {
        match self {
            DualPoint::CanonicalH1 { w } => {
                Some(CVec4::from_fn(|a, _| C64::new(w[a][0], w[a][1])))
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitLabel {
    #[serde(rename = "O+")]
    Plus,
    #[serde(rename = "O-")]
    Minus,
    #[serde(rename = "O0")]
    Null,
    #[serde(rename = "O^0")]
    Origin,
    #[serde(rename = "O_kappa0")]
    CentralKappa,
    #[serde(rename = "O_u")]
    CentralZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LittleGroup {
    #[serde(rename = "SO(3)")]
    SO3,
    #[serde(rename = "SO(1,2)")]
    SO12,
    #[serde(rename = "E(2)")]
    E2,
    #[serde(rename = "SO(1,3)")]
    SO13,
    #[serde(rename = "U(3)")]
    U3,
    #[serde(rename = "U(1,2)")]
    U12,
    #[serde(rename = "C(2)")]
    C2,
    #[serde(rename = "U(1,3)")]
    U13,
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "full")]
    Full,
}

/// Result of classifying one dual point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitClass {
    pub orbit: OrbitLabel,
    pub little_group: LittleGroup,
    pub invariant: f64,
}

/// Total, deterministic classification with an explicit light-cone
/// tolerance.
pub fn classify(p: &DualPoint, tol: f64) -> OrbitClass {
    match p {
        DualPoint::Poincare { k } => {
            let s = eta_dot4(k, k);
            let norm = k.iter().map(|x| x * x).sum::<f64>().sqrt();
            if s.abs() <= tol {
                if norm <= tol {
                    OrbitClass {
                        orbit: OrbitLabel::Origin,
                        little_group: LittleGroup::SO13,
                        invariant: 0.0,
                    }
                } else {
                    OrbitClass {
                        orbit: OrbitLabel::Null,
                        little_group: LittleGroup::E2,
                        invariant: 0.0,
                    }
                }
            } else if s < 0.0 {
                OrbitClass {
                    orbit: OrbitLabel::Plus,
                    little_group: LittleGroup::SO3,
                    invariant: s,
                }
            } else {
                OrbitClass {
                    orbit: OrbitLabel::Minus,
                    little_group: LittleGroup::SO12,
                    invariant: s,
                }
            }
        }
        DualPoint::Heisenberg { nu: _, kappa } => {
            if kappa.abs() > tol {
                OrbitClass {
                    orbit: OrbitLabel::CentralKappa,
                    little_group: LittleGroup::Trivial,
                    invariant: *kappa,
                }
            } else {
                OrbitClass {
                    orbit: OrbitLabel::CentralZero,
                    little_group: LittleGroup::Full,
                    invariant: 0.0,
                }
            }
        }
        DualPoint::CanonicalH1 { .. } => {
            let w = p.canonical_vector().expect("canonical point");
            let s = pairing_norm(&w);
            let norm = w.norm();
            if s.abs() <= tol {
                if norm <= tol {
                    OrbitClass {
                        orbit: OrbitLabel::Origin,
                        little_group: LittleGroup::U13,
                        invariant: 0.0,
                    }
                } else {
                    OrbitClass {
                        orbit: OrbitLabel::Null,
                        little_group: LittleGroup::C2,
                        invariant: 0.0,
                    }
                }
            } else if s < 0.0 {
                OrbitClass {
                    orbit: OrbitLabel::Plus,
                    little_group: LittleGroup::U3,
                    invariant: s,
                }
            } else {
                OrbitClass {
                    orbit: OrbitLabel::Minus,
                    little_group: LittleGroup::U12,
                    invariant: s,
                }
            }
        }
    }
}

/// The factor pair of U = Q·R: Q Hermitian positive-definite
/// pseudo-unitary (pure boost), R block-diagonal compact.
#[derive(Debug, Clone)]
pub struct PolarSplit {
    pub boost: PseudoUnitaryMatrix,
    pub compact: PseudoUnitaryMatrix,
}

/// Split U into pure boost times compact factor.
///
/// H = UU† satisfies ηHη = H⁻¹, is Hermitian positive-definite, and its
/// principal square root is the boost; the quotient is both unitary and
/// pseudo-unitary, hence commutes with η and is block diagonal.
pub fn polar_split(u: &PseudoUnitaryMatrix) -> Result<PolarSplit, MackeyError> {
    let m = u.matrix();
    let h = m * m.adjoint();
    let se = h.symmetric_eigen();
    let mut q = CMat4::zeros();
    for k in 0..4 {
        let lam = se.eigenvalues[k];
        if lam <= 0.0 {
            return Err(MackeyError::PolarSplitFailed(lam));
        }
        let col = se.eigenvectors.column(k);
        let sqrt_lam = C64::new(lam.sqrt(), 0.0);
        for r in 0..4 {
            for c in 0..4 {
                q[(r, c)] += col[r] * col[c].conj() * sqrt_lam;
            }
        }
    }
    // one Newton refinement of the square root
    let qinv = q
        .try_inverse()
        .ok_or(MackeyError::PolarSplitFailed(f64::INFINITY))?;
    q = (q + h * qinv) * C64::new(0.5, 0.0);
    let qinv = q
        .try_inverse()
        .ok_or(MackeyError::PolarSplitFailed(f64::INFINITY))?;
    let r = qinv * m;
    let residual = (q * r - m).norm();
    if residual > tolerances::POLAR_REASSEMBLY {
        return Err(MackeyError::PolarSplitFailed(residual));
    }
    Ok(PolarSplit {
        boost: PseudoUnitaryMatrix::unchecked(q),
        compact: PseudoUnitaryMatrix::unchecked(r),
    })
}

/// Norm of the entries coupling the time line to the spatial block; zero
/// for elements of the U(1)×U(3) stabilizer.
pub fn off_block_norm(m: &CMat4) -> f64 {
    let mut s = 0.0;
    for i in 1..4 {
        s += m[(0, i)].norm_sqr() + m[(i, 0)].norm_sqr();
    }
    s.sqrt()
}

/// Off-block norm for real Lorentz matrices (SO(3) stabilizer check).
pub fn off_block_norm_real(m: &RMat4) -> f64 {
    let mut s = 0.0;
    for i in 1..4 {
        s += m[(0, i)] * m[(0, i)] + m[(i, 0)] * m[(i, 0)];
    }
    s.sqrt()
}

/// The unique pure boost carrying the reference point (√|μ²|, 0, 0, 0) to
/// the phase-aligned representative of a strictly timelike w.
///
/// A pure boost can only reach points with real positive time component;
/// the overall phase e^{i·arg w⁰} is carried by the compact factor, which
/// is why the Wigner element below still lands in the block stabilizer.
pub fn boost_to_canonical(w: &CVec4, tol: f64) -> Result<PseudoUnitaryMatrix, MackeyError> {
    let s = pairing_norm(w);
    if s >= -tol {
        return Err(MackeyError::NotTimelike(s));
    }
    let mu = (-s).sqrt();
    let phase = C64::from_polar(1.0, -w[0].arg());
    let n = w * (phase / mu);
    // n⁰ is real positive; closed-form boost with column (n⁰, n⃗)
    let n0 = n[0].re;
    let mut m = CMat4::identity();
    m[(0, 0)] = C64::new(n0, 0.0);
    for i in 0..3 {
        m[(0, 1 + i)] = n[1 + i].conj();
        m[(1 + i, 0)] = n[1 + i];
        for j in 0..3 {
            m[(1 + i, 1 + j)] += n[1 + i] * n[1 + j].conj() / (1.0 + n0);
        }
    }
    Ok(PseudoUnitaryMatrix::unchecked(m))
}

/// Lorentz version for real timelike k on the positive sheet.
pub fn boost_to_lorentz(k: &RVec4, tol: f64) -> Result<RMat4, MackeyError> {
    let s = crate::metric::lorentz_dot(k, k);
    if s >= -tol {
        return Err(MackeyError::NotTimelike(s));
    }
    if k[0] <= 0.0 {
        return Err(MackeyError::NegativeSheet(k[0]));
    }
    let mu = (-s).sqrt();
    let n = k / mu;
    let mut m = RMat4::identity();
    m[(0, 0)] = n[0];
    for i in 0..3 {
        m[(0, 1 + i)] = n[1 + i];
        m[(1 + i, 0)] = n[1 + i];
        for j in 0..3 {
            m[(1 + i, 1 + j)] += n[1 + i] * n[1 + j] / (1.0 + n[0]);
        }
    }
    Ok(m)
}

/// A homogeneous-group element of either family.
#[derive(Debug, Clone)]
pub enum HomogeneousElement {
    Lorentz(RMat4),
    PseudoUnitary(PseudoUnitaryMatrix),
}

impl HomogeneousElement {
    /// Action on a dual point of the matching family.
    pub fn act(&self, p: &DualPoint) -> Result<DualPoint, MackeyError> {
        match (self, p) {
            (HomogeneousElement::Lorentz(l), DualPoint::Poincare { k }) => {
                let v = l * RVec4::from_row_slice(k);
                Ok(DualPoint::Poincare {
                    k: [v[0], v[1], v[2], v[3]],
                })
            }
            (HomogeneousElement::PseudoUnitary(u), DualPoint::CanonicalH1 { .. }) => {
                let w = p.canonical_vector().expect("canonical point");
                Ok(DualPoint::canonical(u.apply(&w)))
            }
            _ => Err(MackeyError::FamilyMismatch),
        }
    }
}

/// Wigner factor R° = boost_to(U·p)⁻¹ · U · boost_to(p); lands in the
/// little group of the reference point (SO(3) or the U(1)×U(3) block).
pub fn wigner_rotation(
    h: &HomogeneousElement,
    p: &DualPoint,
    tol: f64,
) -> Result<HomogeneousElement, MackeyError> {
    match (h, p) {
        (HomogeneousElement::Lorentz(l), DualPoint::Poincare { k }) => {
            let kv = RVec4::from_row_slice(k);
            let q = boost_to_lorentz(&kv, tol)?;
            let lk = l * kv;
            let q_prime = boost_to_lorentz(&lk, tol)?;
            let qpi = q_prime
                .try_inverse()
                .ok_or(MackeyError::PolarSplitFailed(f64::INFINITY))?;
            Ok(HomogeneousElement::Lorentz(qpi * l * q))
        }
        (HomogeneousElement::PseudoUnitary(u), DualPoint::CanonicalH1 { .. }) => {
            let w = p.canonical_vector().expect("canonical point");
            let q = boost_to_canonical(&w, tol)?;
            let uw = u.apply(&w);
            let q_prime = boost_to_canonical(&uw, tol)?;
            let r = q_prime.inverse().matrix() * u.matrix() * q.matrix();
            Ok(HomogeneousElement::PseudoUnitary(
                PseudoUnitaryMatrix::unchecked(r),
            ))
        }
        _ => Err(MackeyError::FamilyMismatch),
    }
}

/// Random proper orthochronous Lorentz matrix via exp(η·A), A antisymmetric.
pub fn random_lorentz<R: Rng + ?Sized>(rng: &mut R) -> RMat4 {
    let mut a = Matrix4::<f64>::zeros();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let x: f64 = rng.sample(StandardNormal);
            a[(i, j)] = 0.4 * x;
            a[(j, i)] = -0.4 * x;
        }
    }
    let x = eta_rmat() * a;
    let d = nalgebra::DMatrix::from_fn(4, 4, |r, c| x[(r, c)]);
    let e = expm_r(&d);
    RMat4::from_fn(|r, c| e[(r, c)])
}

pub fn lorentz_residual(l: &RMat4) -> f64 {
    let eta = eta_rmat();
    (l.transpose() * eta * l - eta).norm()
}

/// A complex-valued function sampled pointwise on the mass shell k·k = −μ².
#[derive(Clone)]
pub struct ShellFunction {
    pub mu: f64,
    eval: Rc<dyn Fn(&RVec4) -> C64>,
}

impl ShellFunction {
    pub fn new(mu: f64, eval: Rc<dyn Fn(&RVec4) -> C64>) -> Self {
        Self { mu, eval }
    }

    /// Evaluate after checking the sample is on the shell.
    pub fn at(&self, k: &RVec4, tol: f64) -> Result<C64, MackeyError> {
        let res = (crate::metric::lorentz_dot(k, k) + self.mu * self.mu).abs();
        if res > tol * (1.0 + self.mu * self.mu) {
            return Err(MackeyError::OffShell(res));
        }
        Ok((self.eval)(k))
    }

    /// Unchecked evaluation for points known to be on the shell.
    pub fn raw(&self, k: &RVec4) -> C64 {
        (self.eval)(k)
    }
}

/// A Poincaré group element (L, x) acting by g(L', x')g(L, x) =
/// (L'L, x' + L'x).
#[derive(Debug, Clone)]
pub struct PoincareElement {
    pub l: RMat4,
    pub x: RVec4,
}

impl PoincareElement {
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            l: self.l * other.l,
            x: self.x + self.l * other.x,
        }
    }
}

/// Scalar induced evaluator on the positive mass shell:
/// (ρ(L, x)f)(k') = e^{i k'·x} f(L⁻¹ k').
pub fn induced_rep_poincare(
    mu: f64,
    g: &PoincareElement,
    f: &ShellFunction,
) -> Result<ShellFunction, MackeyError> {
    if mu <= 0.0 {
        return Err(MackeyError::NotTimelike(-mu));
    }
    let linv = g
        .l
        .try_inverse()
        .ok_or(MackeyError::PolarSplitFailed(f64::INFINITY))?;
    let x = g.x;
    let inner = f.clone();
    Ok(ShellFunction::new(
        mu,
        Rc::new(move |k: &RVec4| {
            let phase = C64::from_polar(1.0, crate::metric::lorentz_dot(k, &x));
            phase * inner.raw(&(linv * k))
        }),
    ))
}

/// Spin variant: the caller supplies the rotation representation as a
/// matrix-valued function on the little group; values are vectors.
pub type RotationRep = Rc<dyn Fn(&RMat4) -> nalgebra::DMatrix<C64>>;

#[derive(Clone)]
pub struct VectorShellFunction {
    pub mu: f64,
    pub dim: usize,
    eval: Rc<dyn Fn(&RVec4) -> nalgebra::DVector<C64>>,
}

impl VectorShellFunction {
    pub fn new(
        mu: f64,
        dim: usize,
        eval: Rc<dyn Fn(&RVec4) -> nalgebra::DVector<C64>>,
    ) -> Self {
        Self { mu, dim, eval }
    }

    pub fn raw(&self, k: &RVec4) -> nalgebra::DVector<C64> {
        (self.eval)(k)
    }
}

/// (ρ(L, x)f)(k') = σ(R°(L, L⁻¹k')) e^{i k'·x} f(L⁻¹k') with the Wigner
/// factor R° = boost_to(k')⁻¹ L boost_to(L⁻¹k').
pub fn induced_rep_poincare_spin(
    mu: f64,
    g: &PoincareElement,
    sigma: RotationRep,
    f: &VectorShellFunction,
    tol: f64,
) -> Result<VectorShellFunction, MackeyError> {
    if mu <= 0.0 {
        return Err(MackeyError::NotTimelike(-mu));
    }
    let linv = g
        .l
        .try_inverse()
        .ok_or(MackeyError::PolarSplitFailed(f64::INFINITY))?;
    let l = g.l;
    let x = g.x;
    let inner = f.clone();
    let dim = f.dim;
    Ok(VectorShellFunction::new(
        mu,
        dim,
        Rc::new(move |k: &RVec4| {
            let k_back = linv * k;
            let q_back = boost_to_lorentz(&k_back, tol).expect("on-shell sample");
            let q_here = boost_to_lorentz(k, tol).expect("on-shell sample");
            let wigner = q_here.try_inverse().expect("boost invertible") * l * q_back;
            let phase = C64::from_polar(1.0, crate::metric::lorentz_dot(k, &x));
            sigma(&wigner) * inner.raw(&k_back) * phase
        }),
    ))
}

/// A pointwise function on R⁴ for the position-space evaluator.
pub type R4Fn = Rc<dyn Fn(&[f64; 4]) -> C64>;

/// A Weyl-Heisenberg element in real coordinates (α, β, ι).
#[derive(Debug, Clone, Copy)]
pub struct HeisenbergReal {
    pub alpha: [f64; 4],
    pub beta: [f64; 4],
    pub iota: f64,
}

impl HeisenbergReal {
    pub fn compose(&self, other: &Self) -> Self {
        let (alpha, beta, iota) = crate::group::heisenberg_compose_real(
            (&self.alpha, &self.beta, self.iota),
            (&other.alpha, &other.beta, other.iota),
        );
        Self { alpha, beta, iota }
    }

    pub fn to_element(&self) -> CanonicalElement {
        let omega = CVec4::from_fn(|a, _| C64::new(self.alpha[a], self.beta[a]));
        CanonicalElement::heisenberg(omega, self.iota)
    }
}

/// Position-space evaluator for the infinite-dimensional family:
///
/// (η_ϰ₀(g)f)(x) = e^{iϰ₀(ι − 2⟨x, β⟩ + ⟨α, β⟩)} f(x − α),
///
/// with η-dots throughout.  The −2⟨x,β⟩ + ⟨α,β⟩ phase is what the orbit
/// construction yields for the cocycle ι'' = ι' + ι + ⟨α',β⟩ − ⟨β',α⟩
/// carried by the group law; the one-sided phase printed in the usual
/// references pairs with the half-weight cocycle instead.
pub fn induced_rep_heisenberg(
    kappa0: f64,
    g: &HeisenbergReal,
    f: R4Fn,
) -> Result<R4Fn, MackeyError> {
    if kappa0 == 0.0 {
        return Err(MackeyError::ZeroKappa);
    }
    let g = *g;
    let ab = eta_dot4(&g.alpha, &g.beta);
    Ok(Rc::new(move |x: &[f64; 4]| {
        let xb = eta_dot4(x, &g.beta);
        let shifted: [f64; 4] = std::array::from_fn(|i| x[i] - g.alpha[i]);
        C64::from_polar(1.0, kappa0 * (g.iota - 2.0 * xb + ab)) * f(&shifted)
    }))
}

/// Character of the ϰ = 0 sector: η_{u,v}(g) = e^{i(⟨u,β⟩ + ⟨v,α⟩)}.
pub fn character_heisenberg(u: &[f64; 4], v: &[f64; 4], g: &HeisenbergReal) -> C64 {
    C64::from_polar(1.0, eta_dot4(u, &g.beta) + eta_dot4(v, &g.alpha))
}

/// Same character in complex form: η_w(ω) = e^{i Re(w·ω)} with the
/// bilinear η-dot; w = v − iu matches the real form above.
pub fn character_heisenberg_complex(w: &CVec4, omega: &CVec4) -> C64 {
    let dot: C64 = (0..4).map(|a| w[a] * omega[a] * eta(a)).sum();
    C64::from_polar(1.0, dot.re)
}

/// A function on the circle coset of the oscillator quotient.
pub type CircleFn = Rc<dyn Fn(f64) -> C64>;

/// An oscillator-group element (ϑ, ω, ι).
#[derive(Debug, Clone, Copy)]
pub struct OscillatorElement {
    pub theta: f64,
    pub omega_re: [f64; 4],
    pub omega_im: [f64; 4],
    pub iota: f64,
}

impl OscillatorElement {
    pub fn omega(&self) -> CVec4 {
        CVec4::from_fn(|a, _| C64::new(self.omega_re[a], self.omega_im[a]))
    }

    /// Composition in the split coordinates with trivial unit-determinant
    /// part.
    pub fn compose(&self, other: &Self) -> Self {
        let phase = C64::from_polar(1.0, self.theta);
        let w2 = other.omega() * phase;
        let w = self.omega() + w2;
        let iota = self.iota + other.iota + pairing(&self.omega(), &w2).im;
        Self {
            theta: self.theta + other.theta,
            omega_re: std::array::from_fn(|a| w[a].re),
            omega_im: std::array::from_fn(|a| w[a].im),
            iota,
        }
    }
}

/// The circle-indexed evaluator of the ϰ = 0 oscillator family:
/// (ϱ_w(g(ϑ, ω, ι))f)(ϑ') = η_w(e^{−iϑ'}ω) f(ϑ' − ϑ).
pub fn character_rep_oscillator(w: &CVec4, g: &OscillatorElement, f: CircleFn) -> CircleFn {
    let w = *w;
    let g = *g;
    Rc::new(move |theta_prime: f64| {
        let rotated = g.omega() * C64::from_polar(1.0, -theta_prime);
        let factor = character_heisenberg_complex(&w, &rotated);
        factor * f((theta_prime - g.theta).rem_euclid(TAU))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    const TOL: f64 = tolerances::CLASSIFY_DEFAULT;

    #[test]
    fn classify_poincare_families() {
        let c = classify(
            &DualPoint::Poincare {
                k: [1.0, 0.0, 0.0, 0.0],
            },
            TOL,
        );
        assert_eq!(c.orbit, OrbitLabel::Plus);
        assert_eq!(c.little_group, LittleGroup::SO3);
        assert!((c.invariant + 1.0).abs() < 1e-15);

        let c = classify(
            &DualPoint::Poincare {
                k: [0.0, 2.0, 0.0, 0.0],
            },
            TOL,
        );
        assert_eq!(c.orbit, OrbitLabel::Minus);
        assert_eq!(c.little_group, LittleGroup::SO12);

        let c = classify(
            &DualPoint::Poincare {
                k: [1.0, 1.0, 0.0, 0.0],
            },
            TOL,
        );
        assert_eq!(c.orbit, OrbitLabel::Null);
        assert_eq!(c.little_group, LittleGroup::E2);

        let c = classify(&DualPoint::Poincare { k: [0.0; 4] }, TOL);
        assert_eq!(c.orbit, OrbitLabel::Origin);
        assert_eq!(c.little_group, LittleGroup::SO13);
    }

    #[test]
    fn classify_heisenberg_families() {
        let c = classify(
            &DualPoint::Heisenberg {
                nu: [0.3, 0.0, 0.0, 0.0],
                kappa: 0.0,
            },
            TOL,
        );
        assert_eq!(c.orbit, OrbitLabel::CentralZero);
        assert_eq!(c.little_group, LittleGroup::Full);

        let c = classify(
            &DualPoint::Heisenberg {
                nu: [0.0; 4],
                kappa: 2.5,
            },
            TOL,
        );
        assert_eq!(c.orbit, OrbitLabel::CentralKappa);
        assert_eq!(c.little_group, LittleGroup::Trivial);
        assert_eq!(c.invariant, 2.5);
    }

    #[test]
    fn classify_canonical_families() {
        let c = classify(&DualPoint::canonical(CVec4::zeros()), TOL);
        assert_eq!(c.orbit, OrbitLabel::Origin);
        assert_eq!(c.little_group, LittleGroup::U13);

        let mut w = CVec4::zeros();
        w[0] = C64::new(1.0, 0.0);
        let c = classify(&DualPoint::canonical(w), TOL);
        assert_eq!(c.orbit, OrbitLabel::Plus);
        assert_eq!(c.little_group, LittleGroup::U3);

        let mut w = CVec4::zeros();
        w[1] = C64::new(0.0, 1.5);
        let c = classify(&DualPoint::canonical(w), TOL);
        assert_eq!(c.orbit, OrbitLabel::Minus);
        assert_eq!(c.little_group, LittleGroup::U12);

        let mut w = CVec4::zeros();
        w[0] = C64::new(1.0, 0.0);
        w[3] = C64::new(0.0, 1.0);
        let c = classify(&DualPoint::canonical(w), TOL);
        assert_eq!(c.orbit, OrbitLabel::Null);
        assert_eq!(c.little_group, LittleGroup::C2);
    }

    #[test]
    fn classification_invariant_under_homogeneous_action() {
        let mut rng = ChaCha12Rng::seed_from_u64(31);
        for _ in 0..50 {
            let l = random_lorentz(&mut rng);
            for k in [
                [1.0, 0.2, -0.1, 0.0],
                [0.1, 1.0, 0.0, 0.3],
                [1.0, 1.0, 0.0, 0.0],
            ] {
                let p = DualPoint::Poincare { k };
                let before = classify(&p, TOL);
                let after = classify(
                    &HomogeneousElement::Lorentz(l).act(&p).unwrap(),
                    1e-6, // light-cone points drift by rounding under L
                );
                assert_eq!(before.orbit, after.orbit);
            }
        }
        for _ in 0..50 {
            let u = PseudoUnitaryMatrix::random(&mut rng);
            let w = CVec4::from_fn(|_, _| {
                C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            });
            let p = DualPoint::canonical(w);
            let before = classify(&p, TOL);
            let after = classify(
                &HomogeneousElement::PseudoUnitary(u).act(&p).unwrap(),
                TOL,
            );
            assert_eq!(before.orbit, after.orbit);
            assert!((before.invariant - after.invariant).abs() < 1e-9);
        }
    }

    #[test]
    fn polar_split_block_diagonal_passthrough() {
        let mut rng = ChaCha12Rng::seed_from_u64(32);
        let r = PseudoUnitaryMatrix::random_compact(&mut rng);
        let split = polar_split(&r).unwrap();
        assert!((split.boost.matrix() - CMat4::identity()).norm() < 1e-12);
        assert!((split.compact.matrix() - r.matrix()).norm() < 1e-12);
    }

    #[test]
    fn polar_split_pure_boost_passthrough() {
        let mut rng = ChaCha12Rng::seed_from_u64(33);
        let q = PseudoUnitaryMatrix::random_pure_boost(&mut rng);
        let split = polar_split(&q).unwrap();
        assert!((split.compact.matrix() - CMat4::identity()).norm() < 1e-11);
        assert!((split.boost.matrix() - q.matrix()).norm() < 1e-11);
    }

    #[test]
    fn polar_split_reassembles_and_is_idempotent() {
        let mut rng = ChaCha12Rng::seed_from_u64(34);
        for _ in 0..50 {
            let u = PseudoUnitaryMatrix::random(&mut rng);
            let split = polar_split(&u).unwrap();
            let residual =
                (split.boost.matrix() * split.compact.matrix() - u.matrix()).norm();
            assert!(residual < tolerances::POLAR_REASSEMBLY);
            // boost factor is Hermitian positive pseudo-unitary
            let q = split.boost.matrix();
            assert!((q - q.adjoint()).norm() < 1e-11);
            assert!(split.boost.residual() < 1e-11);
            // compact factor commutes with η: block diagonal
            assert!(off_block_norm(split.compact.matrix()) < 1e-11);
            // re-split returns the same factors
            let again = polar_split(&split.boost).unwrap();
            assert!((again.boost.matrix() - q).norm() < tolerances::POLAR_REASSEMBLY);
            assert!(
                (again.compact.matrix() - CMat4::identity()).norm()
                    < tolerances::POLAR_REASSEMBLY
            );
        }
    }

    #[test]
    fn boost_to_reference_is_identity() {
        let mut w = CVec4::zeros();
        w[0] = C64::new(2.0, 0.0);
        let q = boost_to_canonical(&w, TOL).unwrap();
        assert!((q.matrix() - CMat4::identity()).norm() < 1e-14);
    }

    #[test]
    fn boost_to_lorentz_rapidity_form() {
        let xi = 0.85_f64;
        let mu = 1.7;
        let k = RVec4::new(mu * xi.cosh(), mu * xi.sinh(), 0.0, 0.0);
        let q = boost_to_lorentz(&k, TOL).unwrap();
        assert!((q[(0, 0)] - xi.cosh()).abs() < 1e-13);
        assert!((q[(0, 1)] - xi.sinh()).abs() < 1e-13);
        assert!((q[(1, 1)] - xi.cosh()).abs() < 1e-13);
        assert!((q[(2, 2)] - 1.0).abs() < 1e-14);
        // defining property
        let kref = RVec4::new(mu, 0.0, 0.0, 0.0);
        assert!((q * kref - k).norm() < 1e-12);
    }

    #[test]
    fn boost_to_round_trip_canonical() {
        let mut rng = ChaCha12Rng::seed_from_u64(35);
        for _ in 0..50 {
            // generate a strictly timelike point with positive real w⁰
            let mut w = CVec4::from_fn(|_, _| {
                C64::new(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5))
            });
            w[0] = C64::new(rng.gen_range(1.5..3.0), 0.0);
            if pairing_norm(&w) >= -TOL {
                continue;
            }
            let mu = (-pairing_norm(&w)).sqrt();
            let q = boost_to_canonical(&w, TOL).unwrap();
            let mut wref = CVec4::zeros();
            wref[0] = C64::new(mu, 0.0);
            assert!((q.apply(&wref) - w).norm() < 1e-12);
        }
    }

    #[test]
    fn boost_to_rejects_bad_points() {
        let mut w = CVec4::zeros();
        w[1] = C64::new(1.0, 0.0);
        assert!(matches!(
            boost_to_canonical(&w, TOL),
            Err(MackeyError::NotTimelike(_))
        ));
        let k = RVec4::new(-2.0, 0.0, 0.0, 0.0);
        assert!(matches!(
            boost_to_lorentz(&k, TOL),
            Err(MackeyError::NegativeSheet(_))
        ));
    }

    #[test]
    fn wigner_factor_in_little_group() {
        let mut rng = ChaCha12Rng::seed_from_u64(36);
        // Lorentz family
        for _ in 0..50 {
            let l = random_lorentz(&mut rng);
            let k = [1.8, 0.3, -0.2, 0.4];
            let p = DualPoint::Poincare { k };
            let HomogeneousElement::Lorentz(r) =
                wigner_rotation(&HomogeneousElement::Lorentz(l), &p, TOL).unwrap()
            else {
                panic!("family");
            };
            assert!(off_block_norm_real(&r) < tolerances::WIGNER_BLOCK);
            assert!(lorentz_residual(&r) < 1e-11);
        }
        // pseudo-unitary family
        for _ in 0..50 {
            let u = PseudoUnitaryMatrix::random(&mut rng);
            let mut w = CVec4::from_fn(|_, _| {
                C64::new(rng.gen_range(-0.4..0.4), rng.gen_range(-0.4..0.4))
            });
            w[0] = C64::new(2.0, rng.gen_range(-1.0..1.0));
            let p = DualPoint::canonical(w);
            if pairing_norm(&w) >= -TOL {
                continue;
            }
            let HomogeneousElement::PseudoUnitary(r) =
                wigner_rotation(&HomogeneousElement::PseudoUnitary(u), &p, TOL).unwrap()
            else {
                panic!("family");
            };
            assert!(off_block_norm(r.matrix()) < tolerances::WIGNER_BLOCK);
        }
    }

    #[test]
    fn wigner_collinear_boost_is_identity() {
        // a pure boost collinear with the momentum direction composes into
        // the reference boost without rotation
        let xi = 0.6_f64;
        let mu = 1.0;
        let k = RVec4::new(mu * xi.cosh(), mu * xi.sinh(), 0.0, 0.0);
        let l = boost_to_lorentz(
            &RVec4::new(0.4_f64.cosh(), 0.4_f64.sinh(), 0.0, 0.0),
            TOL,
        )
        .unwrap();
        let p = DualPoint::Poincare {
            k: [k[0], k[1], k[2], k[3]],
        };
        let HomogeneousElement::Lorentz(r) =
            wigner_rotation(&HomogeneousElement::Lorentz(l), &p, TOL).unwrap()
        else {
            panic!("family");
        };
        assert!((r - RMat4::identity()).norm() < 1e-12);
    }

    #[test]
    fn wigner_little_group_element_at_reference_is_itself() {
        let mut rng = ChaCha12Rng::seed_from_u64(37);
        let u = PseudoUnitaryMatrix::random_compact(&mut rng);
        let mut w = CVec4::zeros();
        w[0] = C64::new(1.3, 0.0);
        let p = DualPoint::canonical(w);
        let HomogeneousElement::PseudoUnitary(r) =
            wigner_rotation(&HomogeneousElement::PseudoUnitary(u.clone()), &p, TOL).unwrap()
        else {
            panic!("family");
        };
        // U fixes the reference ray, so R° = U up to the phase bookkeeping
        assert!((r.matrix() - u.matrix()).norm() < 1e-10);
    }

    #[test]
    fn induced_poincare_identity_and_translation() {
        let mu = 1.0;
        let f = ShellFunction::new(
            mu,
            Rc::new(|k: &RVec4| C64::new(k[1] * k[1] + 0.3, k[2])),
        );
        let id = PoincareElement {
            l: RMat4::identity(),
            x: RVec4::zeros(),
        };
        let g = induced_rep_poincare(mu, &id, &f).unwrap();
        let k = RVec4::new((2.0_f64).sqrt(), 1.0, 0.0, 0.0);
        assert_eq!(g.at(&k, 1e-9).unwrap(), f.at(&k, 1e-9).unwrap());

        // pure translation multiplies by the plane-wave phase
        let x = RVec4::new(0.3, -0.2, 0.5, 0.1);
        let tr = PoincareElement {
            l: RMat4::identity(),
            x,
        };
        let g = induced_rep_poincare(mu, &tr, &f).unwrap();
        let want = C64::from_polar(1.0, crate::metric::lorentz_dot(&k, &x)) * f.raw(&k);
        assert!((g.at(&k, 1e-9).unwrap() - want).norm() < 1e-14);
    }

    #[test]
    fn induced_poincare_off_shell_sample_rejected() {
        let f = ShellFunction::new(1.0, Rc::new(|_: &RVec4| C64::new(1.0, 0.0)));
        let k = RVec4::new(5.0, 0.0, 0.0, 0.0);
        assert!(matches!(f.at(&k, 1e-9), Err(MackeyError::OffShell(_))));
    }

    #[test]
    fn induced_poincare_homomorphism() {
        let mut rng = ChaCha12Rng::seed_from_u64(38);
        let mu = 1.3;
        let f = ShellFunction::new(
            mu,
            Rc::new(|k: &RVec4| C64::new((k[1] - 0.2 * k[2]).sin(), 0.1 * k[3])),
        );
        for _ in 0..30 {
            let g1 = PoincareElement {
                l: random_lorentz(&mut rng),
                x: RVec4::from_fn(|_, _| rng.gen_range(-1.0..1.0)),
            };
            let g2 = PoincareElement {
                l: random_lorentz(&mut rng),
                x: RVec4::from_fn(|_, _| rng.gen_range(-1.0..1.0)),
            };
            let lhs =
                induced_rep_poincare(mu, &g1, &induced_rep_poincare(mu, &g2, &f).unwrap())
                    .unwrap();
            let rhs = induced_rep_poincare(mu, &g1.compose(&g2), &f).unwrap();
            // sample on the shell by boosting the rest point
            let spatial = [
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ];
            let e = (mu * mu + spatial.iter().map(|x| x * x).sum::<f64>()).sqrt();
            let k = RVec4::new(e, spatial[0], spatial[1], spatial[2]);
            let d = (lhs.raw(&k) - rhs.raw(&k)).norm();
            assert!(d < tolerances::REP_HOMOMORPHISM, "residual {d}");
        }
    }

    #[test]
    fn spin_variant_with_trivial_rep_matches_scalar() {
        let mu = 1.0;
        let scalar = ShellFunction::new(mu, Rc::new(|k: &RVec4| C64::new(k[1], -k[3])));
        let vector = VectorShellFunction::new(
            mu,
            1,
            Rc::new(|k: &RVec4| nalgebra::DVector::from_element(1, C64::new(k[1], -k[3]))),
        );
        let mut rng = ChaCha12Rng::seed_from_u64(39);
        let g = PoincareElement {
            l: random_lorentz(&mut rng),
            x: RVec4::new(0.2, 0.4, -0.3, 0.1),
        };
        let sigma: RotationRep =
            Rc::new(|_r: &RMat4| nalgebra::DMatrix::from_element(1, 1, C64::new(1.0, 0.0)));
        let lhs = induced_rep_poincare_spin(mu, &g, sigma, &vector, 1e-9).unwrap();
        let rhs = induced_rep_poincare(mu, &g, &scalar).unwrap();
        let k = RVec4::new((1.0 + 0.25_f64).sqrt(), 0.5, 0.0, 0.0);
        assert!((lhs.raw(&k)[0] - rhs.raw(&k)).norm() < 1e-12);
    }

    #[test]
    fn heisenberg_position_rep_phase_only_case() {
        let g = HeisenbergReal {
            alpha: [0.0; 4],
            beta: [0.0; 4],
            iota: 0.7,
        };
        let f: R4Fn = Rc::new(|x: &[f64; 4]| C64::new(x[0] + x[2], x[1]));
        let rep = induced_rep_heisenberg(2.0, &g, f.clone()).unwrap();
        let x = [0.3, -0.1, 0.8, 0.2];
        let want = C64::from_polar(1.0, 2.0 * 0.7) * f(&x);
        assert!((rep(&x) - want).norm() < 1e-15);
    }

    #[test]
    fn heisenberg_position_rep_homomorphism_exact() {
        let mut rng = ChaCha12Rng::seed_from_u64(40);
        let kappa0 = 0.8;
        let f: R4Fn = Rc::new(|x: &[f64; 4]| C64::new((x[0] * x[1]).cos(), x[3]));
        for _ in 0..50 {
            let g1 = HeisenbergReal {
                alpha: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                beta: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                iota: rng.gen_range(-1.0..1.0),
            };
            let g2 = HeisenbergReal {
                alpha: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                beta: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                iota: rng.gen_range(-1.0..1.0),
            };
            let lhs =
                induced_rep_heisenberg(kappa0, &g1, induced_rep_heisenberg(kappa0, &g2, f.clone()).unwrap())
                    .unwrap();
            let rhs = induced_rep_heisenberg(kappa0, &g1.compose(&g2), f.clone()).unwrap();
            let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            let d = (lhs(&x) - rhs(&x)).norm();
            assert!(d < tolerances::REP_HEISENBERG_POSITION, "residual {d}");
        }
    }

    #[test]
    fn heisenberg_character_is_multiplicative() {
        let mut rng = ChaCha12Rng::seed_from_u64(41);
        let u: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        for _ in 0..20 {
            let g1 = HeisenbergReal {
                alpha: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                beta: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                iota: rng.gen_range(-1.0..1.0),
            };
            let g2 = HeisenbergReal {
                alpha: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                beta: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                iota: rng.gen_range(-1.0..1.0),
            };
            let lhs = character_heisenberg(&u, &v, &g1) * character_heisenberg(&u, &v, &g2);
            let rhs = character_heisenberg(&u, &v, &g1.compose(&g2));
            assert!((lhs - rhs).norm() < 1e-14);
        }
        // ι is invisible in this sector
        let g = HeisenbergReal {
            alpha: [0.0; 4],
            beta: [0.0; 4],
            iota: 5.0,
        };
        assert!((character_heisenberg(&u, &v, &g) - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn oscillator_character_rep_reduces_and_composes() {
        let mut rng = ChaCha12Rng::seed_from_u64(42);
        let w = CVec4::from_fn(|_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let f: CircleFn = Rc::new(|t: f64| C64::new(t.cos(), (2.0 * t).sin()));
        // ϑ = 0 reduces to the plain character at the base point
        let g = OscillatorElement {
            theta: 0.0,
            omega_re: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
            omega_im: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
            iota: 0.3,
        };
        let rep = character_rep_oscillator(&w, &g, f.clone());
        let want = character_heisenberg_complex(&w, &g.omega()) * f(0.0);
        assert!((rep(0.0) - want).norm() < 1e-14);

        // homomorphism on the circle
        for _ in 0..30 {
            let g1 = OscillatorElement {
                theta: rng.gen_range(0.0..TAU),
                omega_re: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                omega_im: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                iota: rng.gen_range(-1.0..1.0),
            };
            let g2 = OscillatorElement {
                theta: rng.gen_range(0.0..TAU),
                omega_re: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                omega_im: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
                iota: rng.gen_range(-1.0..1.0),
            };
            let lhs = character_rep_oscillator(
                &w,
                &g1,
                character_rep_oscillator(&w, &g2, f.clone()),
            );
            let rhs = character_rep_oscillator(&w, &g1.compose(&g2), f.clone());
            let t = rng.gen_range(0.0..TAU);
            let d = (lhs(t) - rhs(t)).norm();
            assert!(d < 1e-12, "residual {d}");
        }
    }
}
