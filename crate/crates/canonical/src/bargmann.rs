//! The analytic-function side: orthonormal monomials ξ_m, Gauss-Hermite
//! quadrature for the Gaussian inner product, the integral transform to and
//! from position space, and the pointwise representation evaluators acting
//! on analytic functions.
//!
//! Measure convention: each complex mode carries the positive-definite
//! Gaussian π⁻¹e^{−|z|²}; the signature lives in the pairings and operator
//! definitions, not in the measure (the indefinite exponent printed for
//! the inner product diverges mode 0 and is not used).  The transform
//! kernel is the per-mode product of
//!
//! ```text
//! A(z, x) = π^{−1/4} exp(−(z² + x²)/2 + √2 z x)
//! ```
//!
//! which makes each 1-mode transform exactly unitary and sends ξ_m to the
//! Hermite function η_m with the √π normalization.

use crate::group::CanonicalElement;
use crate::metric::{eta, C64, CMat4, CVec4};
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BargmannError {
    #[error("quadrature order {order} too low for polynomial degree {degree}")]
    OrderTooLow { order: usize, degree: u32 },
    #[error("operation requires the factored function class")]
    UnsupportedClass,
    #[error("central parameter must be nonzero; the zero sector is the character family")]
    ZeroKappa,
    #[error("expected a normal-subgroup element (U = I), deviation {0:.3e}")]
    NotNormal(f64),
}

/// Per-axis Gauss-Hermite rule for weight e^{−x²}; integrates
/// polynomial × Gaussian exactly up to degree 2·order − 1.
#[derive(Debug, Clone)]
pub struct QuadratureGrid {
    pub order: usize,
    pub nodes: Rc<Vec<f64>>,
    pub weights: Rc<Vec<f64>>,
}

impl QuadratureGrid {
    pub fn gauss_hermite(order: usize) -> Self {
        assert!(order >= 1);
        // Golub-Welsch on the symmetric Jacobi matrix
        let mut j = nalgebra::DMatrix::<f64>::zeros(order, order);
        for k in 1..order {
            let b = (k as f64 / 2.0).sqrt();
            j[(k - 1, k)] = b;
            j[(k, k - 1)] = b;
        }
        let se = j.symmetric_eigen();
        let mut pairs: Vec<(f64, f64)> = (0..order)
            .map(|i| {
                let node = se.eigenvalues[i];
                let v0 = se.eigenvectors[(0, i)];
                (node, std::f64::consts::PI.sqrt() * v0 * v0)
            })
            .collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        Self {
            order,
            nodes: Rc::new(pairs.iter().map(|p| p.0).collect()),
            weights: Rc::new(pairs.iter().map(|p| p.1).collect()),
        }
    }

    /// Default order policy for functions of polynomial degree `max_degree`.
    pub fn for_degree(max_degree: u32) -> Self {
        Self::gauss_hermite(2 * max_degree as usize + 8)
    }
}

/// One holomorphic factor of a product term.
#[derive(Clone)]
pub enum ModeFn {
    /// z^m (no normalization; ξ_m carries it in the coefficient)
    Monomial(u32),
    /// arbitrary entire factor with Gaussian-integrable growth
    Custom(Rc<dyn Fn(C64) -> C64>),
}

impl ModeFn {
    pub fn eval(&self, z: C64) -> C64 {
        match self {
            ModeFn::Monomial(m) => z.powu(*m),
            ModeFn::Custom(f) => f(z),
        }
    }

    fn degree(&self) -> Option<u32> {
        match self {
            ModeFn::Monomial(m) => Some(*m),
            ModeFn::Custom(_) => None,
        }
    }

    pub fn one() -> Self {
        ModeFn::Monomial(0)
    }
}

/// One product term c · ∏_a f_a(z^a).
#[derive(Clone)]
pub struct BargTerm {
    pub coeff: C64,
    pub factors: [ModeFn; 4],
}

/// An entire function on C⁴: either a finite sum of product terms (exact
/// coefficient arithmetic) or an opaque evaluation rule.
#[derive(Clone)]
pub enum BargmannFunction {
    Factored(Vec<BargTerm>),
    Opaque(Rc<dyn Fn(&CVec4) -> C64>),
}

impl BargmannFunction {
    /// Normalized monomial ξ_m = ∏ (z^a)^{m_a}/√(m_a!).
    pub fn xi(m: [u32; 4]) -> Self {
        let norm: f64 = m.iter().map(|&k| factorial(k)).product::<f64>().sqrt();
        BargmannFunction::Factored(vec![BargTerm {
            coeff: C64::new(1.0 / norm, 0.0),
            factors: [
                ModeFn::Monomial(m[0]),
                ModeFn::Monomial(m[1]),
                ModeFn::Monomial(m[2]),
                ModeFn::Monomial(m[3]),
            ],
        }])
    }

    pub fn constant(c: C64) -> Self {
        BargmannFunction::Factored(vec![BargTerm {
            coeff: c,
            factors: [ModeFn::one(), ModeFn::one(), ModeFn::one(), ModeFn::one()],
        }])
    }

    pub fn eval(&self, z: &CVec4) -> C64 {
        match self {
            BargmannFunction::Factored(terms) => terms
                .iter()
                .map(|t| {
                    t.coeff
                        * (0..4)
                            .map(|a| t.factors[a].eval(z[a]))
                            .product::<C64>()
                })
                .sum(),
            BargmannFunction::Opaque(f) => f(z),
        }
    }

    /// Exact linear combination; both inputs must be factored.
    pub fn linear_combination(
        parts: &[(C64, &BargmannFunction)],
    ) -> Result<Self, BargmannError> {
        let mut terms = Vec::new();
        for (c, f) in parts {
            match f {
                BargmannFunction::Factored(ts) => {
                    for t in ts {
                        terms.push(BargTerm {
                            coeff: t.coeff * c,
                            factors: t.factors.clone(),
                        });
                    }
                }
                BargmannFunction::Opaque(_) => return Err(BargmannError::UnsupportedClass),
            }
        }
        Ok(BargmannFunction::Factored(terms))
    }

    fn factored(&self) -> Result<&Vec<BargTerm>, BargmannError> {
        match self {
            BargmannFunction::Factored(t) => Ok(t),
            BargmannFunction::Opaque(_) => Err(BargmannError::UnsupportedClass),
        }
    }
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// 1-mode Gaussian inner product (1/π)∫∫ conj(f) g e^{−|z|²} dx dy by
/// tensor quadrature.
fn inner_1mode(f: &ModeFn, g: &ModeFn, grid: &QuadratureGrid) -> Result<C64, BargmannError> {
    if let (Some(a), Some(b)) = (f.degree(), g.degree()) {
        let need = a + b;
        if 2 * grid.order as u32 - 1 < need {
            return Err(BargmannError::OrderTooLow {
                order: grid.order,
                degree: need,
            });
        }
    }
    let mut acc = C64::new(0.0, 0.0);
    for (i, &x) in grid.nodes.iter().enumerate() {
        for (j, &y) in grid.nodes.iter().enumerate() {
            let z = C64::new(x, y);
            acc += f.eval(z).conj() * g.eval(z) * (grid.weights[i] * grid.weights[j]);
        }
    }
    Ok(acc / std::f64::consts::PI)
}

/// ⟨f, h⟩ with the positive per-mode Gaussian measure.
pub fn bargmann_inner(
    f: &BargmannFunction,
    h: &BargmannFunction,
    grid: &QuadratureGrid,
) -> Result<C64, BargmannError> {
    let ft = f.factored()?;
    let ht = h.factored()?;
    let mut acc = C64::new(0.0, 0.0);
    for tf in ft {
        for th in ht {
            let mut prod = tf.coeff.conj() * th.coeff;
            for a in 0..4 {
                if prod.norm_sqr() == 0.0 {
                    break;
                }
                prod *= inner_1mode(&tf.factors[a], &th.factors[a], grid)?;
            }
            acc += prod;
        }
    }
    Ok(acc)
}

/// Time-mode parity Θ: (Θf)(z⁰, z⃗) = f(−z⁰, z⃗).
pub fn parity_time(f: &BargmannFunction) -> BargmannFunction {
    match f {
        BargmannFunction::Factored(terms) => BargmannFunction::Factored(
            terms
                .iter()
                .map(|t| {
                    let mut factors = t.factors.clone();
                    let (coeff, f0) = match &t.factors[0] {
                        ModeFn::Monomial(m) => {
                            let s = if m % 2 == 0 { 1.0 } else { -1.0 };
                            (t.coeff * s, ModeFn::Monomial(*m))
                        }
                        ModeFn::Custom(f) => {
                            let f = f.clone();
                            (
                                t.coeff,
                                ModeFn::Custom(Rc::new(move |z: C64| f(-z))),
                            )
                        }
                    };
                    factors[0] = f0;
                    BargTerm { coeff, factors }
                })
                .collect(),
        ),
        BargmannFunction::Opaque(f) => {
            let f = f.clone();
            BargmannFunction::Opaque(Rc::new(move |z: &CVec4| {
                let mut zz = *z;
                zz[0] = -zz[0];
                f(&zz)
            }))
        }
    }
}

/// Indefinite pairing ⟨f, h⟩_η = ⟨f, Θh⟩; the representation evaluators
/// below are unitary for this pairing, not the positive one.
pub fn bargmann_inner_eta(
    f: &BargmannFunction,
    h: &BargmannFunction,
    grid: &QuadratureGrid,
) -> Result<C64, BargmannError> {
    bargmann_inner(f, &parity_time(h), grid)
}

// ---------------------------------------------------------------------------
// position side
// ---------------------------------------------------------------------------

/// One real-axis factor.
#[derive(Clone)]
pub enum Mode1R {
    /// Hermite function η_n(x) = (2ⁿ n! √π)^{−1/2} e^{−x²/2} H_n(x)
    Hermite(u32),
    Custom(Rc<dyn Fn(f64) -> C64>),
}

impl Mode1R {
    pub fn eval(&self, x: f64) -> C64 {
        match self {
            Mode1R::Hermite(n) => C64::new(hermite_fn(*n, x), 0.0),
            Mode1R::Custom(f) => f(x),
        }
    }

    pub fn one_gaussian() -> Self {
        Mode1R::Hermite(0)
    }
}

/// Physicists' Hermite function with unit L² norm.
pub fn hermite_fn(n: u32, x: f64) -> f64 {
    let mut h0 = 1.0_f64;
    let mut h1 = 2.0 * x;
    let h = if n == 0 {
        1.0
    } else if n == 1 {
        h1
    } else {
        for k in 2..=n {
            let h2 = 2.0 * x * h1 - 2.0 * (k as f64 - 1.0) * h0;
            h0 = h1;
            h1 = h2;
        }
        h1
    };
    let norm = (2.0_f64.powi(n as i32) * factorial(n) * std::f64::consts::PI.sqrt()).sqrt();
    h * (-x * x / 2.0).exp() / norm
}

#[derive(Clone)]
pub struct PosTerm {
    pub coeff: C64,
    pub factors: [Mode1R; 4],
}

/// A square-integrable function on R⁴ as a sum of per-axis products.
#[derive(Clone)]
pub enum PositionFunction {
    Factored(Vec<PosTerm>),
    Opaque(Rc<dyn Fn(&[f64; 4]) -> C64>),
}

impl PositionFunction {
    /// Hermite product η_m.
    pub fn hermite(m: [u32; 4]) -> Self {
        PositionFunction::Factored(vec![PosTerm {
            coeff: C64::new(1.0, 0.0),
            factors: [
                Mode1R::Hermite(m[0]),
                Mode1R::Hermite(m[1]),
                Mode1R::Hermite(m[2]),
                Mode1R::Hermite(m[3]),
            ],
        }])
    }

    pub fn eval(&self, x: &[f64; 4]) -> C64 {
        match self {
            PositionFunction::Factored(terms) => terms
                .iter()
                .map(|t| {
                    t.coeff
                        * (0..4)
                            .map(|a| t.factors[a].eval(x[a]))
                            .product::<C64>()
                })
                .sum(),
            PositionFunction::Opaque(f) => f(x),
        }
    }

    fn factored(&self) -> Result<&Vec<PosTerm>, BargmannError> {
        match self {
            PositionFunction::Factored(t) => Ok(t),
            PositionFunction::Opaque(_) => Err(BargmannError::UnsupportedClass),
        }
    }
}

/// L² inner product ∫ conj(f) h d⁴x for the Gaussian-decay class, by
/// per-axis quadrature with the weight factored out.
pub fn position_inner(
    f: &PositionFunction,
    h: &PositionFunction,
    grid: &QuadratureGrid,
) -> Result<C64, BargmannError> {
    let ft = f.factored()?;
    let ht = h.factored()?;
    let mut acc = C64::new(0.0, 0.0);
    for tf in ft {
        for th in ht {
            let mut prod = tf.coeff.conj() * th.coeff;
            for a in 0..4 {
                let mut axis = C64::new(0.0, 0.0);
                for (i, &x) in grid.nodes.iter().enumerate() {
                    axis += tf.factors[a].eval(x).conj()
                        * th.factors[a].eval(x)
                        * (grid.weights[i] * (x * x).exp());
                }
                prod *= axis;
            }
            acc += prod;
        }
    }
    Ok(acc)
}

/// L² distance ‖f − h‖.
pub fn position_l2_distance(
    f: &PositionFunction,
    h: &PositionFunction,
    grid: &QuadratureGrid,
) -> Result<f64, BargmannError> {
    let ff = position_inner(f, f, grid)?;
    let hh = position_inner(h, h, grid)?;
    let fh = position_inner(f, h, grid)?;
    Ok((ff.re + hh.re - 2.0 * fh.re).max(0.0).sqrt())
}

/// Which quadrature pair of each oscillator is made diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalSet {
    QT,
    PT,
    PE,
    QE,
}

impl DiagonalSet {
    /// Phase-space rotation applied per mode before the standard kernel:
    /// 1 keeps the position quadrature, −i selects the momentum one.
    fn mode_phase(&self, mode: usize) -> C64 {
        let minus_i = C64::new(0.0, -1.0);
        let one = C64::new(1.0, 0.0);
        match self {
            DiagonalSet::QT => one,
            DiagonalSet::PT => {
                if mode == 0 {
                    one
                } else {
                    minus_i
                }
            }
            DiagonalSet::QE => {
                if mode == 0 {
                    minus_i
                } else {
                    one
                }
            }
            DiagonalSet::PE => minus_i,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "QT" => Some(DiagonalSet::QT),
            "PT" => Some(DiagonalSet::PT),
            "PE" => Some(DiagonalSet::PE),
            "QE" => Some(DiagonalSet::QE),
            _ => None,
        }
    }
}

/// 1-mode kernel A(z, x) = π^{−1/4} exp(−(z² + x²)/2 + √2 z x).
fn kernel_1mode(z: C64, x: f64) -> C64 {
    let exponent = -(z * z + C64::new(x * x, 0.0)) * 0.5 + z * (std::f64::consts::SQRT_2 * x);
    exponent.exp() * std::f64::consts::PI.powf(-0.25)
}

/// Transform an analytic function to the selected position-type
/// realization: ψ(x) = ∫ conj(A(c·z, x)) f(z) dμ(z) per mode.
pub fn to_position(
    f: &BargmannFunction,
    set: DiagonalSet,
    grid: &QuadratureGrid,
) -> Result<PositionFunction, BargmannError> {
    let terms = f.factored()?;
    let mut out = Vec::new();
    for t in terms {
        let factors: [Mode1R; 4] = std::array::from_fn(|a| {
            let c = set.mode_phase(a);
            let src = t.factors[a].clone();
            let g = grid.clone();
            Mode1R::Custom(Rc::new(move |x: f64| {
                let mut acc = C64::new(0.0, 0.0);
                for (i, &xr) in g.nodes.iter().enumerate() {
                    for (j, &yi) in g.nodes.iter().enumerate() {
                        let z = C64::new(xr, yi);
                        acc += kernel_1mode(c * z, x).conj()
                            * src.eval(z)
                            * (g.weights[i] * g.weights[j]);
                    }
                }
                acc / std::f64::consts::PI
            }))
        });
        out.push(PosTerm {
            coeff: t.coeff,
            factors,
        });
    }
    Ok(PositionFunction::Factored(out))
}

/// Inverse direction: f(z) = ∫ A(c·z, x) ψ(x) d⁴x per mode.
pub fn to_bargmann(
    psi: &PositionFunction,
    set: DiagonalSet,
    grid: &QuadratureGrid,
) -> Result<BargmannFunction, BargmannError> {
    let terms = psi.factored()?;
    let mut out = Vec::new();
    for t in terms {
        let factors: [ModeFn; 4] = std::array::from_fn(|a| {
            let c = set.mode_phase(a);
            let src = t.factors[a].clone();
            let g = grid.clone();
            ModeFn::Custom(Rc::new(move |z: C64| {
                let mut acc = C64::new(0.0, 0.0);
                for (i, &x) in g.nodes.iter().enumerate() {
                    acc += kernel_1mode(c * z, x) * src.eval(x) * (g.weights[i] * (x * x).exp());
                }
                acc
            }))
        });
        out.push(BargTerm {
            coeff: t.coeff,
            factors,
        });
    }
    Ok(BargmannFunction::Factored(out))
}

// ---------------------------------------------------------------------------
// representation evaluators
// ---------------------------------------------------------------------------

/// Weyl-Heisenberg action on analytic functions:
///
/// (ρ(ω, ι)f)(z) = e^{κ₀(iι + (ω, z − ω/2))} f(z − ω).
///
/// The sign of the pairing term is fixed by the homomorphism property
/// against the stored group law (cocycle ι'' = ι' + ι + Im(ω', U'ω)); on
/// the spatial modes it is the standard unitary coherent-state translation.
pub fn rep_weyl_heisenberg(
    kappa0: f64,
    g: &CanonicalElement,
    f: &BargmannFunction,
) -> Result<BargmannFunction, BargmannError> {
    if kappa0 == 0.0 {
        return Err(BargmannError::ZeroKappa);
    }
    let dev = (g.u.matrix() - CMat4::identity()).norm();
    if dev > 1e-12 {
        return Err(BargmannError::NotNormal(dev));
    }
    Ok(rep_translate_phase(kappa0, &g.omega, g.iota, C64::new(1.0, 0.0), 0, f))
}

/// Shared core: coefficient e^{iκ₀ι − iκ₁ϑ}, per-mode prefactor
/// exp(κ₀ η_a conj(ω_a)(z − ω_a/2)) and argument rotation z ↦ e^{−iϑ}(z−ω).
fn rep_translate_phase(
    kappa0: f64,
    omega: &CVec4,
    iota: f64,
    rot: C64,
    kappa1: i64,
    f: &BargmannFunction,
) -> BargmannFunction {
    let theta = -rot.arg(); // rot = e^{−iϑ}
    let coeff_global = C64::from_polar(1.0, kappa0 * iota - kappa1 as f64 * theta);
    match f {
        BargmannFunction::Factored(terms) => {
            let mut out = Vec::new();
            for t in terms {
                let factors: [ModeFn; 4] = std::array::from_fn(|a| {
                    let w = omega[a];
                    let ea = eta(a);
                    let src = t.factors[a].clone();
                    ModeFn::Custom(Rc::new(move |z: C64| {
                        let pre = (w.conj() * (z - w * 0.5) * (kappa0 * ea)).exp();
                        pre * src.eval(rot * (z - w))
                    }))
                });
                out.push(BargTerm {
                    coeff: t.coeff * coeff_global,
                    factors,
                });
            }
            BargmannFunction::Factored(out)
        }
        BargmannFunction::Opaque(inner) => {
            let inner = inner.clone();
            let omega = *omega;
            BargmannFunction::Opaque(Rc::new(move |z: &CVec4| {
                let mut pre = coeff_global;
                for a in 0..4 {
                    pre *= (omega[a].conj() * (z[a] - omega[a] * 0.5) * (kappa0 * eta(a))).exp();
                }
                let arg = CVec4::from_fn(|a, _| rot * (z[a] - omega[a]));
                pre * inner(&arg)
            }))
        }
    }
}

/// Oscillator action: adds the phase rotation of the argument and the
/// integer character −κ₁ϑ to the Weyl-Heisenberg action.
pub fn rep_oscillator(
    kappa0: f64,
    kappa1: i64,
    theta: f64,
    omega: &CVec4,
    iota: f64,
    f: &BargmannFunction,
) -> Result<BargmannFunction, BargmannError> {
    if kappa0 == 0.0 {
        return Err(BargmannError::ZeroKappa);
    }
    Ok(rep_translate_phase(
        kappa0,
        omega,
        iota,
        C64::from_polar(1.0, -theta),
        kappa1,
        f,
    ))
}

/// Full action with homogeneous part: translate, then rotate the argument
/// through U⁻¹ (scalar internal factor):
///
/// (ρ(U, ω, ι)f)(z) = e^{κ₀(iι + (ω, z − ω/2))} f(U⁻¹(z − ω)).
pub fn rep_canonical(
    kappa0: f64,
    g: &CanonicalElement,
    f: &BargmannFunction,
) -> Result<BargmannFunction, BargmannError> {
    if kappa0 == 0.0 {
        return Err(BargmannError::ZeroKappa);
    }
    let uinv = g.u.inverse();
    let omega = g.omega;
    let iota = g.iota;
    let inner = f.clone();
    Ok(BargmannFunction::Opaque(Rc::new(move |z: &CVec4| {
        let mut pre = C64::from_polar(1.0, kappa0 * iota);
        for a in 0..4 {
            pre *= (omega[a].conj() * (z[a] - omega[a] * 0.5) * (kappa0 * eta(a))).exp();
        }
        let shifted = CVec4::from_fn(|a, _| z[a] - omega[a]);
        pre * inner.eval(&uinv.apply(&shifted))
    })))
}
