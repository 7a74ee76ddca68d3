//! Exact realization of the algebra as operators on truncated polynomial
//! space.
//!
//! The basis is the monomial family ξ_m, |m| = m₀+m₁+m₂+m₃ ≤ N, stored
//! without the √m! normalization so every matrix entry is an exact rational
//! (times κ₀ powers).  The generator actions are
//!
//! ```text
//! A⁺_a : ξ_m ↦ ξ_{m+e_a}                      (multiplication by z^a)
//! A⁻_a : ξ_m ↦ −κ₀ η_aa m_a ξ_{m−e_a}          (η-twisted lowering)
//! Z_ab : ξ_m ↦ −η_aa m_a ξ_{m−e_a+e_b}         (lower a, raise b)
//! I    : ξ_m ↦ κ₀ ξ_m
//! ```
//!
//! Raising maps top-degree states out of the truncation, so operator
//! identities are asserted on the safe subspace |m| ≤ N − (operator order)
//! where they hold exactly, not approximately.

use crate::algebra::{bracket_basis, AlgebraVector, EnvelopingPoly, Generator, BASIS_DIM};
use crate::metric::eta_i;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FockError {
    #[error("degree cap {0} too small: need at least {1}")]
    DegreeCapTooSmall(usize, usize),
    #[error("unsupported casimir order {0}; valid orders are 1, 2, 4, 6, 8")]
    BadCasimirOrder(usize),
    #[error("realization parameter kappa0 must be nonzero")]
    ZeroKappa,
    #[error("serialized entry does not fit in i64")]
    EntryOverflow,
    #[error("malformed sparse matrix entry")]
    MalformedEntry,
}

/// Exact complex rational scalar.
pub type QC = num_complex::Complex<BigRational>;

pub fn qc_zero() -> QC {
    QC::new(BigRational::zero(), BigRational::zero())
}

pub fn qc_int(n: i64) -> QC {
    QC::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
}

/// Exact dyadic conversion of a floating-point complex coefficient.
pub fn qc_from_c64(z: num_complex::Complex64) -> QC {
    let re = BigRational::from_float(z.re).unwrap_or_else(BigRational::zero);
    let im = BigRational::from_float(z.im).unwrap_or_else(BigRational::zero);
    QC::new(re, im)
}

fn qc_is_zero(z: &QC) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

/// Sparse matrix over the monomial basis with exact rational-complex entries.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    pub dim: usize,
    pub degree_cap: usize,
    /// Column-major: cols[j] maps basis vector j to Σ rows.
    pub cols: Vec<BTreeMap<usize, QC>>,
}

impl FockOperator {
    pub fn zeros(dim: usize, degree_cap: usize) -> Self {
        Self {
            dim,
            degree_cap,
            cols: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity_scaled(dim: usize, degree_cap: usize, s: &QC) -> Self {
        let mut m = Self::zeros(dim, degree_cap);
        if !qc_is_zero(s) {
            for j in 0..dim {
                m.cols[j].insert(j, s.clone());
            }
        }
        m
    }

    pub fn insert(&mut self, row: usize, col: usize, v: QC) {
        if qc_is_zero(&v) {
            return;
        }
        let e = self.cols[col].entry(row).or_insert_with(qc_zero);
        *e = e.clone() + v;
        if qc_is_zero(e) {
            self.cols[col].remove(&row);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for j in 0..other.dim {
            for (i, v) in &other.cols[j] {
                out.insert(*i, j, v.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for j in 0..other.dim {
            for (i, v) in &other.cols[j] {
                out.insert(*i, j, -v.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &QC) -> Self {
        let mut out = Self::zeros(self.dim, self.degree_cap);
        if qc_is_zero(s) {
            return out;
        }
        for j in 0..self.dim {
            for (i, v) in &self.cols[j] {
                out.cols[j].insert(*i, v.clone() * s.clone());
            }
        }
        out
    }

    /// Matrix product self · other.
    pub fn matmul(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.dim, self.degree_cap);
        for j in 0..self.dim {
            for (k, bkj) in &other.cols[j] {
                for (i, aik) in &self.cols[*k] {
                    out.insert(*i, j, aik.clone() * bkj.clone());
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Exact equality of columns whose basis degree is at most `max_degree`.
    pub fn equals_on_degree(&self, other: &Self, basis: &MonomialBasis, max_degree: usize) -> bool {
        for j in 0..self.dim {
            if basis.degree(j) > max_degree {
                continue;
            }
            if self.cols[j] != other.cols[j] {
                return false;
            }
        }
        true
    }

    pub fn is_zero_on_degree(&self, basis: &MonomialBasis, max_degree: usize) -> bool {
        for j in 0..self.dim {
            if basis.degree(j) > max_degree {
                continue;
            }
            if !self.cols[j].is_empty() {
                return false;
            }
        }
        true
    }
}

/// Enumeration of monomials |m| ≤ N in degree-then-lexicographic order.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    pub degree_cap: usize,
    pub monomials: Vec<[u8; 4]>,
    index: BTreeMap<[u8; 4], usize>,
}

impl MonomialBasis {
    pub fn new(degree_cap: usize) -> Self {
        let mut monomials = Vec::new();
        for total in 0..=degree_cap {
            for m0 in (0..=total).rev() {
                for m1 in (0..=(total - m0)).rev() {
                    for m2 in (0..=(total - m0 - m1)).rev() {
                        let m3 = total - m0 - m1 - m2;
                        monomials.push([m0 as u8, m1 as u8, m2 as u8, m3 as u8]);
                    }
                }
            }
        }
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (*m, i))
            .collect();
        Self {
            degree_cap,
            monomials,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn degree(&self, j: usize) -> usize {
        self.monomials[j].iter().map(|&x| x as usize).sum()
    }

    pub fn position(&self, m: &[u8; 4]) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// The realization at a fixed truncation degree and central value κ₀.
#[derive(Debug, Clone)]
pub struct FockRealization {
    pub basis: MonomialBasis,
    pub kappa0: BigRational,
}

impl FockRealization {
    pub fn new(degree_cap: usize, kappa0: BigRational) -> Result<Self, FockError> {
        if degree_cap < 2 {
            return Err(FockError::DegreeCapTooSmall(degree_cap, 2));
        }
        if kappa0.is_zero() {
            return Err(FockError::ZeroKappa);
        }
        Ok(Self {
            basis: MonomialBasis::new(degree_cap),
            kappa0,
        })
    }

    pub fn natural(degree_cap: usize) -> Result<Self, FockError> {
        Self::new(degree_cap, BigRational::one())
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn degree_cap(&self) -> usize {
        self.basis.degree_cap
    }

    /// Matrix of one basis generator.
    pub fn realize_generator(&self, g: Generator) -> FockOperator {
        let dim = self.dim();
        let mut out = FockOperator::zeros(dim, self.degree_cap());
        for (j, m) in self.basis.monomials.iter().enumerate() {
            match g {
                Generator::APlus(a) => {
                    let mut t = *m;
                    t[a] += 1;
                    if let Some(i) = self.basis.position(&t) {
                        out.insert(i, j, qc_int(1));
                    }
                }
                Generator::AMinus(a) => {
                    if m[a] > 0 {
                        let mut t = *m;
                        t[a] -= 1;
                        let i = self.basis.position(&t).expect("lowering stays in basis");
                        let coeff = -BigRational::from_integer(BigInt::from(
                            eta_i(a) * m[a] as i64,
                        )) * self.kappa0.clone();
                        out.insert(i, j, QC::new(coeff, BigRational::zero()));
                    }
                }
                Generator::Z(a, b) => {
                    if m[a] > 0 {
                        let mut t = *m;
                        t[a] -= 1;
                        t[b] += 1;
                        if let Some(i) = self.basis.position(&t) {
                            let coeff = BigRational::from_integer(BigInt::from(
                                -eta_i(a) * m[a] as i64,
                            ));
                            out.insert(i, j, QC::new(coeff, BigRational::zero()));
                        }
                    }
                }
                Generator::I => {
                    out.insert(j, j, QC::new(self.kappa0.clone(), BigRational::zero()));
                }
            }
        }
        out
    }

    /// Linear extension to an arbitrary algebra element; floating
    /// coefficients enter exactly through their dyadic expansions.
    pub fn realize(&self, v: &AlgebraVector) -> FockOperator {
        let mut out = FockOperator::zeros(self.dim(), self.degree_cap());
        for idx in 0..BASIS_DIM {
            let c = v.coeffs[idx];
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            let m = self.realize_generator(Generator::from_index(idx));
            out = out.add(&m.scale(&qc_from_c64(c)));
        }
        out
    }

    /// Realize a sum of ordered products from the enveloping algebra.
    pub fn realize_poly(&self, p: &EnvelopingPoly) -> FockOperator {
        let mut out = FockOperator::zeros(self.dim(), self.degree_cap());
        for (coeff, factors) in &p.terms {
            let mut term = FockOperator::identity_scaled(self.dim(), self.degree_cap(), &qc_int(1));
            for f in factors {
                term = term.matmul(&self.realize(f));
            }
            out = out.add(&term.scale(&qc_from_c64(*coeff)));
        }
        out
    }

    /// W_ab = A⁺_a A⁻_b − I Z_ba as a matrix.
    ///
    /// The index transposition on Z is pinned by the covariance relations
    /// [W_ab, A±_c] = 0 and [W_ab, Z_cd] = η_ac W_db − η_bd W_ac, which make
    /// every cyclic η-contraction of W products commute with the whole
    /// algebra; with Z_ab in the second slot even the quartic contraction
    /// fails to be central.
    pub fn w_matrix(&self, a: usize, b: usize) -> FockOperator {
        let ap = self.realize_generator(Generator::APlus(a));
        let am = self.realize_generator(Generator::AMinus(b));
        let z = self.realize_generator(Generator::Z(b, a));
        let kappa = QC::new(self.kappa0.clone(), BigRational::zero());
        ap.matmul(&am).sub(&z.scale(&kappa))
    }

    /// Casimir elements: η-contractions of W products.
    ///
    /// c₁ = I, c₂ = η^{ab}W_ab, c₄ = η^{ad}η^{bc}W_ab W_cd,
    /// c₆ and c₈ the length-3 and length-4 cyclic contractions.
    pub fn casimir(&self, order: usize) -> Result<FockOperator, FockError> {
        if self.degree_cap() < order {
            return Err(FockError::DegreeCapTooSmall(self.degree_cap(), order));
        }
        let dim = self.dim();
        let cap = self.degree_cap();
        match order {
            1 => Ok(FockOperator::identity_scaled(
                dim,
                cap,
                &QC::new(self.kappa0.clone(), BigRational::zero()),
            )),
            2 => {
                let mut out = FockOperator::zeros(dim, cap);
                for a in 0..4 {
                    out = out.add(&self.w_matrix(a, a).scale(&qc_int(eta_i(a))));
                }
                Ok(out)
            }
            4 => {
                let w = self.all_w();
                let mut out = FockOperator::zeros(dim, cap);
                for a in 0..4 {
                    for b in 0..4 {
                        let s = qc_int(eta_i(a) * eta_i(b));
                        out = out.add(&w[a][b].matmul(&w[b][a]).scale(&s));
                    }
                }
                Ok(out)
            }
            6 => {
                let w = self.all_w();
                let mut out = FockOperator::zeros(dim, cap);
                for a in 0..4 {
                    for b in 0..4 {
                        let wab_bc: Vec<FockOperator> =
                            (0..4).map(|c| w[b][c].clone()).collect();
                        for (c, wbc) in wab_bc.iter().enumerate() {
                            let s = qc_int(eta_i(a) * eta_i(b) * eta_i(c));
                            out = out
                                .add(&w[a][b].matmul(wbc).matmul(&w[c][a]).scale(&s));
                        }
                    }
                }
                Ok(out)
            }
            8 => {
                let w = self.all_w();
                let mut out = FockOperator::zeros(dim, cap);
                for a in 0..4 {
                    for b in 0..4 {
                        let wab = &w[a][b];
                        for c in 0..4 {
                            let wab_wbc = wab.matmul(&w[b][c]);
                            for d in 0..4 {
                                let s = qc_int(eta_i(a) * eta_i(b) * eta_i(c) * eta_i(d));
                                out = out.add(
                                    &wab_wbc.matmul(&w[c][d]).matmul(&w[d][a]).scale(&s),
                                );
                            }
                        }
                    }
                }
                Ok(out)
            }
            _ => Err(FockError::BadCasimirOrder(order)),
        }
    }

    fn all_w(&self) -> Vec<Vec<FockOperator>> {
        (0..4)
            .map(|a| (0..4).map(|b| self.w_matrix(a, b)).collect())
            .collect()
    }

    /// Check [realize(x), realize(y)] = realize([x, y]) exactly on the
    /// subspace of degree ≤ N − 2, for basis generators x and y.
    pub fn homomorphism_holds(&self, x: Generator, y: Generator) -> bool {
        let mx = self.realize_generator(x);
        let my = self.realize_generator(y);
        let lhs = mx.commutator(&my);
        let mut rhs = FockOperator::zeros(self.dim(), self.degree_cap());
        for (s, g) in bracket_basis(x, y) {
            rhs = rhs.add(&self.realize_generator(g).scale(&qc_int(s)));
        }
        let safe = self.degree_cap() - 2;
        lhs.equals_on_degree(&rhs, &self.basis, safe)
    }
}

/// Serialization bridge: {"n": dim, "entries": [[row, col, re_num, re_den,
/// im_num, im_den]]}.
#[derive(Serialize, Deserialize)]
struct SparseJson {
    n: usize,
    degree_cap: usize,
    entries: Vec<[i64; 6]>,
}

impl FockOperator {
    pub fn to_json(&self) -> Result<serde_json::Value, FockError> {
        let mut entries = Vec::new();
        for j in 0..self.dim {
            for (i, v) in &self.cols[j] {
                let to_i64 = |x: &BigInt| -> Result<i64, FockError> {
                    i64::try_from(x.clone()).map_err(|_| FockError::EntryOverflow)
                };
                entries.push([
                    *i as i64,
                    j as i64,
                    to_i64(v.re.numer())?,
                    to_i64(v.re.denom())?,
                    to_i64(v.im.numer())?,
                    to_i64(v.im.denom())?,
                ]);
            }
        }
        Ok(serde_json::to_value(SparseJson {
            n: self.dim,
            degree_cap: self.degree_cap,
            entries,
        })
        .expect("sparse json"))
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, FockError> {
        let j: SparseJson =
            serde_json::from_value(v.clone()).map_err(|_| FockError::MalformedEntry)?;
        let mut out = FockOperator::zeros(j.n, j.degree_cap);
        for e in &j.entries {
            let [row, col, rn, rd, imn, imd] = *e;
            if rd == 0 || imd == 0 {
                return Err(FockError::MalformedEntry);
            }
            let q = QC::new(
                BigRational::new(BigInt::from(rn), BigInt::from(rd)),
                BigRational::new(BigInt::from(imn), BigInt::from(imd)),
            );
            if row < 0 || col < 0 || row as usize >= j.n || col as usize >= j.n {
                return Err(FockError::MalformedEntry);
            }
            out.insert(row as usize, col as usize, q);
        }
        Ok(out)
    }
}

/// Binomial dimension of the truncated space: C(N+4, 4).
pub fn truncated_dim(degree_cap: usize) -> usize {
    let n = degree_cap;
    (n + 1) * (n + 2) * (n + 3) * (n + 4) / 24
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{frame_subalgebra, FrameKind};
    use num_complex::Complex64 as C64;

    #[test]
    fn basis_enumeration_counts() {
        for n in 2..8 {
            let b = MonomialBasis::new(n);
            assert_eq!(b.dim(), truncated_dim(n));
        }
    }

    #[test]
    fn degree_cap_must_leave_safe_subspace() {
        assert!(FockRealization::natural(1).is_err());
        assert!(FockRealization::natural(2).is_ok());
    }

    #[test]
    fn central_element_is_scaled_identity() {
        let r = FockRealization::new(
            3,
            BigRational::new(BigInt::from(3), BigInt::from(2)),
        )
        .unwrap();
        let m = r.realize_generator(Generator::I);
        let want = FockOperator::identity_scaled(
            r.dim(),
            3,
            &QC::new(
                BigRational::new(BigInt::from(3), BigInt::from(2)),
                BigRational::zero(),
            ),
        );
        assert_eq!(m, want);
    }

    #[test]
    fn ladder_commutator_is_kappa_identity() {
        let r = FockRealization::new(
            4,
            BigRational::new(BigInt::from(5), BigInt::from(7)),
        )
        .unwrap();
        let ap = r.realize_generator(Generator::APlus(1));
        let am = r.realize_generator(Generator::AMinus(1));
        let comm = ap.commutator(&am);
        // [A⁺₁, A⁻₁] = η₁₁ I = κ₀ · identity on degree ≤ N−2
        let want = r.realize_generator(Generator::I);
        assert!(comm.equals_on_degree(&want, &r.basis, 2));
    }

    #[test]
    fn homomorphism_all_pairs_small_cap() {
        let r = FockRealization::natural(4).unwrap();
        for x in Generator::all() {
            for y in Generator::all() {
                assert!(
                    r.homomorphism_holds(x, y),
                    "homomorphism fails on [{}, {}]",
                    x.name(),
                    y.name()
                );
            }
        }
    }

    #[test]
    fn casimir2_commutes_with_sample_generators() {
        let r = FockRealization::natural(5).unwrap();
        let c2 = r.casimir(2).unwrap();
        for g in [
            Generator::Z(1, 2),
            Generator::Z(0, 3),
            Generator::APlus(0),
            Generator::AMinus(2),
        ] {
            let m = r.realize_generator(g);
            let comm = c2.commutator(&m);
            assert!(
                comm.is_zero_on_degree(&r.basis, r.degree_cap() - 2),
                "c2 does not commute with {}",
                g.name()
            );
        }
    }

    #[test]
    fn casimir4_commutes_with_sample_generators() {
        let r = FockRealization::natural(6).unwrap();
        let c4 = r.casimir(4).unwrap();
        for g in [Generator::Z(0, 1), Generator::APlus(3), Generator::AMinus(0)] {
            let m = r.realize_generator(g);
            let comm = c4.commutator(&m);
            assert!(
                comm.is_zero_on_degree(&r.basis, r.degree_cap() - 4),
                "c4 does not commute with {}",
                g.name()
            );
        }
    }

    #[test]
    fn w_tensor_covariance_relations() {
        // [W_ab, A±_c] = 0 and [W_ab, Z_cd] = η_ac W_db − η_bd W_ac, exactly
        let r = FockRealization::new(
            5,
            BigRational::new(BigInt::from(2), BigInt::from(3)),
        )
        .unwrap();
        let safe = r.degree_cap() - 3;
        for a in 0..4 {
            for b in 0..4 {
                let w = r.w_matrix(a, b);
                for c in 0..4 {
                    let ap = r.realize_generator(Generator::APlus(c));
                    let am = r.realize_generator(Generator::AMinus(c));
                    assert!(w.commutator(&ap).is_zero_on_degree(&r.basis, safe));
                    assert!(w.commutator(&am).is_zero_on_degree(&r.basis, safe));
                    for d in 0..4 {
                        let z = r.realize_generator(Generator::Z(c, d));
                        let lhs = w.commutator(&z);
                        let mut rhs = FockOperator::zeros(r.dim(), r.degree_cap());
                        if a == c {
                            rhs = rhs.add(&r.w_matrix(d, b).scale(&qc_int(eta_i(a))));
                        }
                        if b == d {
                            rhs = rhs.sub(&r.w_matrix(a, c).scale(&qc_int(eta_i(b))));
                        }
                        assert!(
                            lhs.equals_on_degree(&rhs, &r.basis, safe),
                            "W covariance fails at ({a},{b}),({c},{d})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn casimir6_and_8_smoke_centrality() {
        let r = FockRealization::natural(8).unwrap();
        assert!(r.casimir(8).is_err() || r.degree_cap() >= 8);
        assert!(FockRealization::natural(6).unwrap().casimir(8).is_err());
        for order in [6usize, 8] {
            let c = r.casimir(order).unwrap();
            let safe = r.degree_cap() - order;
            for g in [Generator::Z(1, 2), Generator::APlus(0)] {
                let m = r.realize_generator(g);
                assert!(
                    c.commutator(&m).is_zero_on_degree(&r.basis, safe),
                    "c{order} does not commute with {}",
                    g.name()
                );
            }
        }
    }

    #[test]
    fn dimensioned_casimir_identity_natural_units() {
        // η^{ab}W_ab = −(1/2)(T² + E² − Q² − P² + 2I(Y−2)) with c = b = ħ = 1
        let r = FockRealization::natural(5).unwrap();
        let c2 = r.casimir(2).unwrap();

        let m_plus = |a: usize| r.realize_generator(Generator::APlus(a));
        let m_minus = |a: usize| r.realize_generator(Generator::AMinus(a));
        let half = QC::new(
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::zero(),
        );

        // T² = (A⁺₀+A⁻₀)²/2, E² = −(A⁺₀−A⁻₀)²/2, same pattern per spatial mode
        let s0 = m_plus(0).add(&m_minus(0));
        let d0 = m_plus(0).sub(&m_minus(0));
        let t2 = s0.matmul(&s0).scale(&half);
        let e2 = d0.matmul(&d0).scale(&half).scale(&qc_int(-1));
        let mut q2 = FockOperator::zeros(r.dim(), r.degree_cap());
        let mut p2 = FockOperator::zeros(r.dim(), r.degree_cap());
        for i in 1..4 {
            let s = m_plus(i).add(&m_minus(i));
            let d = m_plus(i).sub(&m_minus(i));
            q2 = q2.add(&s.matmul(&s).scale(&half));
            p2 = p2.add(&d.matmul(&d).scale(&half).scale(&qc_int(-1)));
        }
        let y = r.realize(&crate::algebra::y_generator());
        let iy = r.realize_generator(Generator::I).matmul(&y);
        let ident2 = r.realize_generator(Generator::I).scale(&qc_int(2));
        let inner = t2
            .add(&e2)
            .sub(&q2)
            .sub(&p2)
            .add(&iy.scale(&qc_int(2)))
            .sub(&ident2.scale(&qc_int(2)));
        let rhs = inner.scale(&half).scale(&qc_int(-1));
        assert!(
            c2.equals_on_degree(&rhs, &r.basis, r.degree_cap() - 2),
            "dimensioned second casimir identity fails"
        );
    }

    #[test]
    fn rest_frame_casimir_central() {
        let r = FockRealization::natural(5).unwrap();
        let frame = frame_subalgebra(FrameKind::Rest);
        let c = r.realize_poly(&frame.casimir);
        for (name, g) in &frame.generators {
            let m = r.realize(g);
            let comm = c.commutator(&m);
            assert!(
                comm.is_zero_on_degree(&r.basis, r.degree_cap() - 2),
                "rest casimir does not commute with {name}"
            );
        }
    }

    #[test]
    fn null_frame_casimir_central_in_oscillator_part() {
        let r = FockRealization::natural(5).unwrap();
        let frame = frame_subalgebra(FrameKind::Null);
        let c = r.realize_poly(&frame.casimir);
        for name in ["Ao+", "Ao-", "Y"] {
            let g = frame.by_name(name).unwrap();
            let m = r.realize(g);
            let comm = c.commutator(&m);
            assert!(
                comm.is_zero_on_degree(&r.basis, r.degree_cap() - 2),
                "null casimir does not commute with {name}"
            );
        }
    }

    #[test]
    fn realize_uses_exact_dyadic_coefficients() {
        let r = FockRealization::natural(3).unwrap();
        let v = crate::algebra::AlgebraVector::scaled(Generator::APlus(0), C64::new(0.25, -0.5));
        let m = r.realize(&v);
        let e10 = r.basis.position(&[1, 0, 0, 0]).unwrap();
        let e00 = r.basis.position(&[0, 0, 0, 0]).unwrap();
        let v = &m.cols[e00][&e10];
        assert_eq!(v.re, BigRational::new(BigInt::from(1), BigInt::from(4)));
        assert_eq!(v.im, BigRational::new(BigInt::from(-1), BigInt::from(2)));
    }

    #[test]
    fn sparse_json_round_trip() {
        let r = FockRealization::natural(3).unwrap();
        let m = r.casimir(2).unwrap();
        let j = m.to_json().unwrap();
        let back = FockOperator::from_json(&j).unwrap();
        assert_eq!(m, back);
    }
}
