//! The 25-generator Lie algebra: sixteen Z_{ab}, four raising A⁺_a, four
//! lowering A⁻_a and the central I, with the bracket table
//!
//! ```text
//! [Z_ab, Z_cd] = η_bc Z_ad − η_ad Z_cb
//! [A⁺_a, A⁻_b] = η_ab I
//! [Z_ab, A⁺_c] = −η_ac A⁺_b
//! [Z_ab, A⁻_c] = +η_bc A⁻_a
//! ```
//!
//! The lowering bracket's index flow is pinned by the Jacobi identity given
//! the other three lines (Z_ab acts like a normal-ordered raise-in-b,
//! lower-in-a bilinear); every other placement fails Jacobi on basis triples.
//!
//! Dimensioned generators (T, E, Q_i, P_i, K_i, N_i, J_i, M_ij, Y) are
//! complex combinations of the abstract basis, parameterized by the three
//! constants (c, b, ħ).

use crate::metric::{eta_i, C64};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("constants must be positive, got c={c}, b={b}, hbar={hbar}")]
    NonPositiveConstants { c: f64, b: f64, hbar: f64 },
}

pub const BASIS_DIM: usize = 25;

/// One abstract basis symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Z_{a,b}, a,b = 0..3
    Z(usize, usize),
    /// A⁺_a
    APlus(usize),
    /// A⁻_a
    AMinus(usize),
    /// Central element
    I,
}

impl Generator {
    pub fn index(self) -> usize {
        match self {
            Generator::Z(a, b) => 4 * a + b,
            Generator::APlus(a) => 16 + a,
            Generator::AMinus(a) => 20 + a,
            Generator::I => 24,
        }
    }

    pub fn from_index(i: usize) -> Self {
        match i {
            0..=15 => Generator::Z(i / 4, i % 4),
            16..=19 => Generator::APlus(i - 16),
            20..=23 => Generator::AMinus(i - 20),
            24 => Generator::I,
            _ => panic!("generator index out of range: {i}"),
        }
    }

    pub fn all() -> impl Iterator<Item = Generator> {
        (0..BASIS_DIM).map(Generator::from_index)
    }

    pub fn name(self) -> String {
        match self {
            Generator::Z(a, b) => format!("Z{a}{b}"),
            Generator::APlus(a) => format!("A+{a}"),
            Generator::AMinus(a) => format!("A-{a}"),
            Generator::I => "I".to_string(),
        }
    }
}

/// Bracket of two basis symbols as exact integer combinations.
pub fn bracket_basis(x: Generator, y: Generator) -> Vec<(i64, Generator)> {
    use Generator::*;
    let mut out = Vec::new();
    match (x, y) {
        (Z(a, b), Z(c, d)) => {
            if b == c {
                out.push((eta_i(b), Z(a, d)));
            }
            if a == d {
                out.push((-eta_i(a), Z(c, b)));
            }
        }
        (Z(a, b), APlus(c)) => {
            if a == c {
                out.push((-eta_i(a), APlus(b)));
            }
        }
        (APlus(c), Z(a, b)) => {
            if a == c {
                out.push((eta_i(a), APlus(b)));
            }
        }
        (Z(a, b), AMinus(c)) => {
            if b == c {
                out.push((eta_i(b), AMinus(a)));
            }
        }
        (AMinus(c), Z(a, b)) => {
            if b == c {
                out.push((-eta_i(b), AMinus(a)));
            }
        }
        (APlus(a), AMinus(b)) => {
            if a == b {
                out.push((eta_i(a), I));
            }
        }
        (AMinus(b), APlus(a)) => {
            if a == b {
                out.push((-eta_i(a), I));
            }
        }
        _ => {}
    }
    // collect duplicate targets (Z-Z case with a=d and b=c)
    out.sort_by_key(|(_, g)| g.index());
    let mut merged: Vec<(i64, Generator)> = Vec::new();
    for (c, g) in out {
        match merged.last_mut() {
            Some((c0, g0)) if *g0 == g => *c0 += c,
            _ => merged.push((c, g)),
        }
    }
    merged.retain(|(c, _)| *c != 0);
    merged
}

/// An element of the algebra: complex coefficient on each basis symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraVector {
    pub coeffs: [C64; BASIS_DIM],
}

impl Default for AlgebraVector {
    fn default() -> Self {
        Self::zero()
    }
}

impl AlgebraVector {
    pub fn zero() -> Self {
        Self {
            coeffs: [C64::new(0.0, 0.0); BASIS_DIM],
        }
    }

    pub fn basis(g: Generator) -> Self {
        let mut v = Self::zero();
        v.coeffs[g.index()] = C64::new(1.0, 0.0);
        v
    }

    pub fn scaled(g: Generator, c: C64) -> Self {
        let mut v = Self::zero();
        v.coeffs[g.index()] = c;
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut v = Self::zero();
        for i in 0..BASIS_DIM {
            v.coeffs[i] = self.coeffs[i] + other.coeffs[i];
        }
        v
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut v = Self::zero();
        for i in 0..BASIS_DIM {
            v.coeffs[i] = self.coeffs[i] - other.coeffs[i];
        }
        v
    }

    pub fn scale(&self, c: C64) -> Self {
        let mut v = Self::zero();
        for i in 0..BASIS_DIM {
            v.coeffs[i] = self.coeffs[i] * c;
        }
        v
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    /// Bilinear antisymmetric bracket.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut v = Self::zero();
        for i in 0..BASIS_DIM {
            let ci = self.coeffs[i];
            if ci.re == 0.0 && ci.im == 0.0 {
                continue;
            }
            let gi = Generator::from_index(i);
            for j in 0..BASIS_DIM {
                let cj = other.coeffs[j];
                if cj.re == 0.0 && cj.im == 0.0 {
                    continue;
                }
                let gj = Generator::from_index(j);
                for (s, g) in bracket_basis(gi, gj) {
                    v.coeffs[g.index()] += ci * cj * s as f64;
                }
            }
        }
        v
    }
}

/// Y = η^{ab} Z_ab, the trace part commuting with every Z.
pub fn y_generator() -> AlgebraVector {
    let mut v = AlgebraVector::zero();
    for a in 0..4 {
        v.coeffs[Generator::Z(a, a).index()] = C64::new(eta_i(a) as f64, 0.0);
    }
    v
}

/// Traceless part Ẑ_ab = Z_ab − η_ab Y/4.
pub fn z_hat(a: usize, b: usize) -> AlgebraVector {
    let mut v = AlgebraVector::basis(Generator::Z(a, b));
    if a == b {
        let y = y_generator().scale(C64::new(eta_i(a) as f64 / 4.0, 0.0));
        v = v.sub(&y);
    }
    v
}

/// Jacobi defect [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; identically zero.
pub fn jacobi_defect(x: &AlgebraVector, y: &AlgebraVector, z: &AlgebraVector) -> AlgebraVector {
    x.bracket(&y.bracket(z))
        .add(&y.bracket(&z.bracket(x)))
        .add(&z.bracket(&x.bracket(y)))
}

/// The three unit constants and the four derived scales.
#[derive(Debug, Clone, Copy)]
pub struct Constants {
    pub c: f64,
    pub b: f64,
    pub hbar: f64,
}

impl Constants {
    pub fn new(c: f64, b: f64, hbar: f64) -> Result<Self, AlgebraError> {
        if c <= 0.0 || b <= 0.0 || hbar <= 0.0 {
            return Err(AlgebraError::NonPositiveConstants { c, b, hbar });
        }
        Ok(Self { c, b, hbar })
    }

    pub fn natural() -> Self {
        Self {
            c: 1.0,
            b: 1.0,
            hbar: 1.0,
        }
    }

    pub fn lambda_t(&self) -> f64 {
        (self.hbar / (self.b * self.c)).sqrt()
    }
    pub fn lambda_q(&self) -> f64 {
        (self.hbar * self.c / self.b).sqrt()
    }
    pub fn lambda_p(&self) -> f64 {
        (self.hbar * self.b / self.c).sqrt()
    }
    pub fn lambda_e(&self) -> f64 {
        (self.hbar * self.b * self.c).sqrt()
    }

    /// Newton constant for a given dimensionless α_G: G = α_G c⁴ / b.
    pub fn newton_g(&self, alpha_g: f64) -> f64 {
        alpha_g * self.c.powi(4) / self.b
    }
}

/// The dimensioned generator set over the abstract basis.
#[derive(Debug, Clone)]
pub struct DimensionedBasis {
    pub t: AlgebraVector,
    pub e: AlgebraVector,
    pub q: [AlgebraVector; 3],
    pub p: [AlgebraVector; 3],
    pub k: [AlgebraVector; 3],
    pub n: [AlgebraVector; 3],
    pub j: [AlgebraVector; 3],
    /// Symmetric mixer M_ij = M_ji; stored for i ≤ j at [i][j].
    pub m: [[AlgebraVector; 3]; 3],
    pub y: AlgebraVector,
}

/// Invert the oscillator combinations: physical generators over the basis.
///
/// A⁺₀, A⁻₀ carry (T, E); spatial A⁺_i, A⁻_i carry (Q_i, P_i); Z_{i0}, Z_{0i}
/// split into force boosts N_i and velocity boosts K_i; the spatial block
/// splits into rotations J and the symmetric mixer M.
pub fn dimensioned_basis(consts: &Constants) -> DimensionedBasis {
    use Generator::*;
    let s2 = std::f64::consts::SQRT_2;
    let re = |x: f64| C64::new(x, 0.0);
    let im = |x: f64| C64::new(0.0, x);

    let (lt, lq, lp, le) = (
        consts.lambda_t(),
        consts.lambda_q(),
        consts.lambda_p(),
        consts.lambda_e(),
    );
    let (c, b) = (consts.c, consts.b);

    let t = AlgebraVector::scaled(APlus(0), re(lt / s2)).add(&AlgebraVector::scaled(
        AMinus(0),
        re(lt / s2),
    ));
    let e = AlgebraVector::scaled(APlus(0), im(-le / s2)).add(&AlgebraVector::scaled(
        AMinus(0),
        im(le / s2),
    ));
    let q = std::array::from_fn(|i| {
        AlgebraVector::scaled(APlus(1 + i), re(lq / s2)).add(&AlgebraVector::scaled(
            AMinus(1 + i),
            re(lq / s2),
        ))
    });
    let p = std::array::from_fn(|i| {
        AlgebraVector::scaled(APlus(1 + i), im(-lp / s2)).add(&AlgebraVector::scaled(
            AMinus(1 + i),
            im(lp / s2),
        ))
    });
    let k = std::array::from_fn(|i| {
        AlgebraVector::scaled(Z(1 + i, 0), im(c / 2.0)).add(&AlgebraVector::scaled(
            Z(0, 1 + i),
            im(-c / 2.0),
        ))
    });
    let n = std::array::from_fn(|i| {
        AlgebraVector::scaled(Z(1 + i, 0), re(b / 2.0)).add(&AlgebraVector::scaled(
            Z(0, 1 + i),
            re(b / 2.0),
        ))
    });
    let j = std::array::from_fn(|m| {
        let mut v = AlgebraVector::zero();
        for i in 0..3 {
            for l in 0..3 {
                let eps = levi_civita(m, i, l);
                if eps != 0 {
                    v = v.add(&AlgebraVector::scaled(
                        Z(1 + i, 1 + l),
                        im(eps as f64 / 2.0),
                    ));
                }
            }
        }
        v
    });
    let m = std::array::from_fn(|i| {
        std::array::from_fn(|l| {
            AlgebraVector::scaled(Z(1 + i, 1 + l), re(b * c / 2.0)).add(
                &AlgebraVector::scaled(Z(1 + l, 1 + i), re(b * c / 2.0)),
            )
        })
    });
    let y = y_generator().scale(re(b * c));

    DimensionedBasis {
        t,
        e,
        q,
        p,
        k,
        n,
        j,
        m,
        y,
    }
}

pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// A polynomial in the enveloping algebra: sum of coefficient × ordered
/// products of algebra elements.
#[derive(Debug, Clone)]
pub struct EnvelopingPoly {
    pub terms: Vec<(C64, Vec<AlgebraVector>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameKind {
    Rest,
    Null,
}

/// A distinguished subalgebra attached to a rest or null reference point,
/// with the quadratic element central inside it.
#[derive(Debug, Clone)]
pub struct FrameSubalgebra {
    pub kind: FrameKind,
    pub generators: Vec<(String, AlgebraVector)>,
    pub casimir: EnvelopingPoly,
}

impl FrameSubalgebra {
    /// All pairwise brackets [g_i, g_j], i < j.
    pub fn bracket_table(&self) -> Vec<(usize, usize, AlgebraVector)> {
        let mut out = Vec::new();
        for i in 0..self.generators.len() {
            for j in (i + 1)..self.generators.len() {
                out.push((i, j, self.generators[i].1.bracket(&self.generators[j].1)));
            }
        }
        out
    }

    pub fn by_name(&self, name: &str) -> Option<&AlgebraVector> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }
}

/// Null-frame central element forced by [C⁺_i, C⁻_j] = δ_ij I°:
/// I° = Z_03 + Z_30 − Z_00 − Z_33.
pub fn i_circle() -> AlgebraVector {
    use Generator::*;
    AlgebraVector::basis(Z(0, 3))
        .add(&AlgebraVector::basis(Z(3, 0)))
        .sub(&AlgebraVector::basis(Z(0, 0)))
        .sub(&AlgebraVector::basis(Z(3, 3)))
}

/// A°± = (A_3^± − A_0^±)/2; the 0/3 index pair makes [A°⁺, A°⁻] = 0.
pub fn a_circle(sign_plus: bool) -> AlgebraVector {
    use Generator::*;
    let half = C64::new(0.5, 0.0);
    if sign_plus {
        AlgebraVector::scaled(APlus(3), half).sub(&AlgebraVector::scaled(APlus(0), half))
    } else {
        AlgebraVector::scaled(AMinus(3), half).sub(&AlgebraVector::scaled(AMinus(0), half))
    }
}

/// Rest or null frame subalgebra with its central quadratic element.
pub fn frame_subalgebra(kind: FrameKind) -> FrameSubalgebra {
    use Generator::*;
    let one = C64::new(1.0, 0.0);
    match kind {
        FrameKind::Rest => {
            let mut generators = Vec::new();
            for i in 1..4 {
                for j in 1..4 {
                    generators.push((format!("Zhat{i}{j}"), z_hat(i, j)));
                }
            }
            generators.push(("A+0".into(), AlgebraVector::basis(APlus(0))));
            generators.push(("A-0".into(), AlgebraVector::basis(AMinus(0))));
            generators.push(("Y".into(), y_generator()));
            generators.push(("I".into(), AlgebraVector::basis(I)));
            // central element A⁺₀A⁻₀ + I·Y (the sign on I·Y is forced by
            // [Y, A±₀] = ∓A±₀ under the bracket table above)
            let casimir = EnvelopingPoly {
                terms: vec![
                    (
                        one,
                        vec![
                            AlgebraVector::basis(APlus(0)),
                            AlgebraVector::basis(AMinus(0)),
                        ],
                    ),
                    (one, vec![AlgebraVector::basis(I), y_generator()]),
                ],
            };
            FrameSubalgebra {
                kind,
                generators,
                casimir,
            }
        }
        FrameKind::Null => {
            let mut generators = Vec::new();
            for i in 1..3 {
                generators.push((
                    format!("C+{i}"),
                    AlgebraVector::basis(Z(i, 0)).sub(&AlgebraVector::basis(Z(i, 3))),
                ));
                generators.push((
                    format!("C-{i}"),
                    AlgebraVector::basis(Z(0, i)).sub(&AlgebraVector::basis(Z(3, i))),
                ));
            }
            for i in 1..3 {
                for j in 1..3 {
                    generators.push((format!("Z{i}{j}"), AlgebraVector::basis(Z(i, j))));
                }
            }
            generators.push(("Io".into(), i_circle()));
            generators.push(("Ao+".into(), a_circle(true)));
            generators.push(("Ao-".into(), a_circle(false)));
            generators.push(("Y".into(), y_generator()));
            let casimir = EnvelopingPoly {
                terms: vec![(one, vec![a_circle(true), a_circle(false)])],
            };
            FrameSubalgebra {
                kind,
                generators,
                casimir,
            }
        }
    }
}

/// Does every pairwise bracket of `set` stay in the span of `set`?
///
/// Uses least-squares projection; returns the worst residual.
pub fn closure_residual(set: &[&AlgebraVector]) -> f64 {
    use nalgebra::DMatrix;
    let k = set.len();
    let a = DMatrix::<C64>::from_fn(BASIS_DIM, k, |r, c| set[c].coeffs[r]);
    let svd = a.clone().svd(true, true);
    let mut worst: f64 = 0.0;
    for i in 0..k {
        for j in (i + 1)..k {
            let br = set[i].bracket(set[j]);
            if br.is_zero() {
                continue;
            }
            let b = nalgebra::DVector::<C64>::from_fn(BASIS_DIM, |r, _| br.coeffs[r]);
            let x = svd.solve(&b, 1e-13).expect("svd solve");
            let res = (&a * x - b).norm();
            worst = worst.max(res);
        }
    }
    worst
}
