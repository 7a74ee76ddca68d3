//! Integer combinatorics of unitary-group representation labels: triangular
//! pattern enumeration, dimensions, quadratic Casimir values, the Cartan
//! (n, a, b) relabeling, discrete-series membership chains and the ladder
//! decompositions into U(1)⊗SU(3) rungs.
//!
//! Everything here is exact integer arithmetic; no floating point.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GelfandError {
    #[error("weight entries must be weakly decreasing, got {0:?}")]
    NonMonotoneWeight(Vec<i64>),
    #[error("rank must be 3 or 4, got {0}")]
    BadRank(usize),
    #[error("cartan label (n={n}, a={a}, b={b}) violates a ≥ 0, b ≥ a")]
    BadCartan { n: i64, a: i64, b: i64 },
    #[error("cartan label (n={n}, a={a}, b={b}) has no integer weight: n+a+b ≢ 0 (mod 3)")]
    IncompatibleCartan { n: i64, a: i64, b: i64 },
    #[error("ladder decomposition is tabulated only for the five printed labels, got {0:?}")]
    UnsupportedLadderLabel([i64; 4]),
}

/// Top row of a pattern: weakly decreasing integers for a compact group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    pub m: Vec<i64>,
}

impl HighestWeight {
    pub fn new(m: Vec<i64>) -> Result<Self, GelfandError> {
        if m.len() != 3 && m.len() != 4 {
            return Err(GelfandError::BadRank(m.len()));
        }
        if m.windows(2).any(|w| w[0] < w[1]) {
            return Err(GelfandError::NonMonotoneWeight(m));
        }
        Ok(Self { m })
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }
}

/// Triangular array with the betweenness condition at every adjacent pair
/// of rows: m_{k,j} ≥ m_{k,j−1} ≥ m_{k+1,j}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GelfandPattern {
    /// rows[0] is the top row (length n), rows[n−1] has length 1.
    pub rows: Vec<Vec<i64>>,
}

impl GelfandPattern {
    pub fn is_valid(&self) -> bool {
        for w in self.rows.windows(2) {
            let (upper, lower) = (&w[0], &w[1]);
            if lower.len() + 1 != upper.len() {
                return false;
            }
            for (k, &x) in lower.iter().enumerate() {
                if !(upper[k] >= x && x >= upper[k + 1]) {
                    return false;
                }
            }
        }
        true
    }
}

fn interleavings(row: &[i64]) -> Vec<Vec<i64>> {
    // all rows one shorter satisfying betweenness
    fn rec(row: &[i64], idx: usize, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if idx + 1 == row.len() {
            out.push(acc.clone());
            return;
        }
        let hi = row[idx];
        let lo = row[idx + 1];
        for v in (lo..=hi).rev() {
            acc.push(v);
            rec(row, idx + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(row, 0, &mut Vec::new(), &mut out);
    out
}

/// Complete, duplicate-free enumeration of the patterns under a weight.
pub fn enumerate_patterns(hw: &HighestWeight) -> Vec<GelfandPattern> {
    fn rec(rows: &mut Vec<Vec<i64>>, out: &mut Vec<GelfandPattern>) {
        let last = rows.last().unwrap();
        if last.len() == 1 {
            out.push(GelfandPattern { rows: rows.clone() });
            return;
        }
        for next in interleavings(last) {
            rows.push(next);
            rec(rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![hw.m.clone()], &mut out);
    out
}

/// Weyl product dimension for a rank-3 weight:
/// (1 + a')(1 + b')(2 + a' + b')/2 with a' = m₁−m₂, b' = m₂−m₃.
pub fn dimension3(hw: &HighestWeight) -> i64 {
    assert_eq!(hw.rank(), 3, "dimension3 needs a rank-3 weight");
    let a = hw.m[0] - hw.m[1];
    let b = hw.m[1] - hw.m[2];
    (1 + a) * (1 + b) * (2 + a + b) / 2
}

/// General Weyl dimension ∏_{i<j} (m_i − m_j + j − i)/(j − i).
pub fn dimension_general(hw: &HighestWeight) -> i64 {
    let n = hw.rank();
    let mut num: i64 = 1;
    let mut den: i64 = 1;
    for i in 0..n {
        for j in (i + 1)..n {
            num *= hw.m[i] - hw.m[j] + (j as i64 - i as i64);
            den *= j as i64 - i as i64;
        }
    }
    num / den
}

/// Quadratic Casimir value Σᵢ mᵢ(mᵢ + n + 1 − 2i), i = 1..n.
///
/// Reproduces both the rank-3 and rank-4 expansions used for the discrete
/// labels; rank 3 cross-checks against the Cartan form.
pub fn casimir2(hw: &HighestWeight) -> i64 {
    let n = hw.rank() as i64;
    hw.m
        .iter()
        .enumerate()
        .map(|(idx, &m)| {
            let i = idx as i64 + 1;
            m * (m + n + 1 - 2 * i)
        })
        .sum()
}

/// Same Casimir for rank-4 labels given directly as (κ₁..κ₄); the
/// monotonicity requirement does not apply to the noncompact labels.
pub fn casimir2_kappa(kappa: &[i64; 4]) -> i64 {
    kappa
        .iter()
        .enumerate()
        .map(|(idx, &m)| {
            let i = idx as i64 + 1;
            m * (m + 5 - 2 * i)
        })
        .sum()
}

/// Cartan form of the rank-3 Casimir: c₂ = n²/3 + (2/3)(a² + b² − b(a − 3)).
/// Exact: returns 3·c₂ to stay in integers, for cross-checks.
pub fn casimir2_cartan_times3(c: &CartanLabel) -> i64 {
    c.n * c.n + 2 * (c.a * c.a + c.b * c.b - c.b * (c.a - 3))
}

/// (n, a, b) labels: n = m₁+m₂+m₃, a = m₁−m₂, b = m₁−m₃.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanLabel {
    pub n: i64,
    pub a: i64,
    pub b: i64,
}

impl CartanLabel {
    pub fn new(n: i64, a: i64, b: i64) -> Result<Self, GelfandError> {
        if a < 0 || b < a {
            return Err(GelfandError::BadCartan { n, a, b });
        }
        Ok(Self { n, a, b })
    }
}

pub fn to_cartan(hw: &HighestWeight) -> Result<CartanLabel, GelfandError> {
    if hw.rank() != 3 {
        return Err(GelfandError::BadRank(hw.rank()));
    }
    CartanLabel::new(
        hw.m[0] + hw.m[1] + hw.m[2],
        hw.m[0] - hw.m[1],
        hw.m[0] - hw.m[2],
    )
}

pub fn from_cartan(c: &CartanLabel) -> Result<HighestWeight, GelfandError> {
    if c.a < 0 || c.b < c.a {
        return Err(GelfandError::BadCartan {
            n: c.n,
            a: c.a,
            b: c.b,
        });
    }
    let total = c.n + c.a + c.b;
    if total.rem_euclid(3) != 0 {
        return Err(GelfandError::IncompatibleCartan {
            n: c.n,
            a: c.a,
            b: c.b,
        });
    }
    let m1 = total / 3;
    HighestWeight::new(vec![m1, m1 - c.a, m1 - c.b])
}

/// The eight discrete-series families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesLabel {
    DPlus1,
    DPlus2,
    DMinus1,
    DMinus2,
    DZero3,
    DZero2,
    DZero1,
    DZero0,
}

impl SeriesLabel {
    pub fn all() -> [SeriesLabel; 8] {
        use SeriesLabel::*;
        [
            DPlus1, DPlus2, DMinus1, DMinus2, DZero3, DZero2, DZero1, DZero0,
        ]
    }

    pub fn name(&self) -> &'static str {
        use SeriesLabel::*;
        match self {
            DPlus1 => "D+1",
            DPlus2 => "D+2",
            DMinus1 => "D-1",
            DMinus2 => "D-2",
            DZero3 => "D0_3",
            DZero2 => "D0_2",
            DZero1 => "D0_1",
            DZero0 => "D0_0",
        }
    }
}

/// Which discrete-series inequality chains hold for the labels
/// κ = (κ₁..κ₄) and the rank-3 state row m = (m₁₃, m₂₃, m₃₃)?
///
/// Each chain is transcribed literally; the empty set is a valid answer.
pub fn series_membership(kappa: &[i64; 4], m: &[i64; 3]) -> Vec<SeriesLabel> {
    let [k1, k2, k3, k4] = *kappa;
    let [m13, m23, m33] = *m;
    let mut out = Vec::new();
    // D+1: m13 > κ1 > κ4−4 > κ2 ≥ m23 ≥ κ3 ≥ m33
    if m13 > k1 && k1 > k4 - 4 && k4 - 4 > k2 && k2 >= m23 && m23 >= k3 && k3 >= m33 {
        out.push(SeriesLabel::DPlus1);
    }
    // D+2: m13 ≥ κ2 ≥ m23 > κ1+1 > κ4−3 > κ3 ≥ m33
    if m13 >= k2 && k2 >= m23 && m23 > k1 + 1 && k1 + 1 > k4 - 3 && k4 - 3 > k3 && k3 >= m33 {
        out.push(SeriesLabel::DPlus2);
    }
    // D−1: m13 ≥ κ2 > κ1 > κ4−4 > m23 ≥ κ3 ≥ m33
    if m13 >= k2 && k2 > k1 && k1 > k4 - 4 && k4 - 4 > m23 && m23 >= k3 && k3 >= m33 {
        out.push(SeriesLabel::DMinus1);
    }
    // D−2: m13 ≥ κ2 ≥ m23 ≥ κ3 > κ1+1 > κ4−3 > m33
    if m13 >= k2 && k2 >= m23 && m23 >= k3 && k3 > k1 + 1 && k1 + 1 > k4 - 3 && k4 - 3 > m33 {
        out.push(SeriesLabel::DMinus2);
    }
    // D0_3: m13 ≥ 1+κ1 ≥ m23 ≥ 1+κ2 ≥ m33 ≥ 1+κ3
    if m13 >= 1 + k1 && 1 + k1 >= m23 && m23 >= 1 + k2 && 1 + k2 >= m33 && m33 >= 1 + k3 {
        out.push(SeriesLabel::DZero3);
    }
    // D0_2: m13 ≥ 1+κ1 ≥ m23 ≥ 1+κ2; κ4−1 ≥ m33
    if m13 >= 1 + k1 && 1 + k1 >= m23 && m23 >= 1 + k2 && k4 - 1 >= m33 {
        out.push(SeriesLabel::DZero2);
    }
    // D0_1: m13 ≥ 1+κ1; κ3−1 ≥ m23 ≥ κ4−1 ≥ m33
    if m13 >= 1 + k1 && k3 - 1 >= m23 && m23 >= k4 - 1 && k4 - 1 >= m33 {
        out.push(SeriesLabel::DZero1);
    }
    // D0_0: κ2−1 ≥ m13 ≥ κ3−1 ≥ m23 ≥ κ4−1 ≥ m33
    if k2 - 1 >= m13 && m13 >= k3 - 1 && k3 - 1 >= m23 && m23 >= k4 - 1 && k4 - 1 >= m33 {
        out.push(SeriesLabel::DZero0);
    }
    out
}

/// One rung of a ladder decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderTerm {
    pub i: u32,
    pub n: i64,
    pub a: i64,
    pub b: i64,
}

impl LadderTerm {
    pub fn cartan(&self) -> CartanLabel {
        CartanLabel {
            n: self.n,
            a: self.a,
            b: self.b,
        }
    }
}

/// First `rungs` levels of the tabulated ladder decompositions.
///
/// Only the five tabulated labels are supported; the general branching rule
/// is not extrapolated from them.
pub fn ladder_decomposition(
    kappa: &[i64; 4],
    rungs: u32,
) -> Result<Vec<LadderTerm>, GelfandError> {
    let per_rung: Vec<fn(i64) -> Vec<(i64, i64, i64)>> = match *kappa {
        [0, 0, 0, 0] => vec![|i| vec![(i + 3, i, i)]],
        [1, 0, 0, 0] => vec![|i| vec![(i + 4, i + 1, i + 1), (i + 5, i, i + 1)]],
        [1, 1, 0, 0] => vec![|i| vec![(i + 6, i, i), (i + 5, i, i + 1)]],
        [1, 1, 1, 0] => vec![|i| vec![(i + 6, i, i)]],
        [2, 0, 0, 0] => vec![|i| {
            vec![
                (i + 5, i + 2, i + 2),
                (i + 6, i + 1, i + 2),
                (i + 7, i, i + 2),
            ]
        }],
        _ => return Err(GelfandError::UnsupportedLadderLabel(*kappa)),
    };
    let mut out = Vec::new();
    for i in 0..rungs {
        for f in &per_rung {
            for (n, a, b) in f(i as i64) {
                out.push(LadderTerm { i, n, a, b });
            }
        }
    }
    Ok(out)
}
