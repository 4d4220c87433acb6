//! Exact orientation of a point against the hyperplane through `k` others,
//! with degeneracies broken by Simulation of Simplicity.
//!
//! Coordinate `c` of point `j` is perturbed by an infinitesimal `ε_{c,j}`.
//! The variables are ranked `ε_{0,0} < ε_{0,1} < … < ε_{0,n−1} < ε_{1,0} < …`
//! (coordinate-major) and realized as `ε_{c,j} = ε^(2^rank)`, so a product of
//! distinct variables is dominated by the set whose binary weight
//! `Σ 2^rank` is smallest. The predicate is the sign of the dominant nonzero
//! term of
//!
//! ```text
//!     | w_{i1,0}+ε  …  w_{ik,0}+ε  w_{q,0}+ε |
//! det |    ⋮              ⋮           ⋮      |
//!     | w_{i1,k-1}+ε … w_{ik,k-1}+ε w_{q,k-1}+ε |
//!     |    1        …     1           1      |
//! ```
//!
//! Each coefficient of that multilinear polynomial is the determinant of the
//! unperturbed matrix with the perturbed rows replaced by unit vectors, so
//! coefficients are evaluated on demand in dominance order and the first
//! nonzero one decides. The last term (every coordinate row replaced) is
//! `±1`, so the answer is never zero.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Bits of relative precision kept when quantizing real coordinates.
pub const QUANT_BITS: i32 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Above,
    Below,
    Member,
}

impl Side {
    pub fn sign(self) -> i8 {
        match self {
            Side::Above => 1,
            Side::Below => -1,
            Side::Member => 0,
        }
    }
}

/// Points of `R^k` held as exact integers `round(x · 2^scale_exp)`.
#[derive(Clone, Debug)]
pub struct PointSet {
    k: usize,
    coords: Vec<Vec<i64>>,
    scale_exp: i32,
    /// Perturbation patterns for this dimension, see [`patterns`].
    patterns: Vec<Vec<(usize, usize)>>,
}

impl PointSet {
    /// Quantizes to a common power-of-two scale; per-coordinate error is at
    /// most `2^-40 · max|coordinate|`.
    pub fn from_reals(points: &[Vec<f64>]) -> Result<Self> {
        let k = points.first().map_or(0, Vec::len);
        if points.iter().any(|w| w.len() != k) {
            return Err(Error::Precondition("points must share one dimension".into()));
        }
        let max = points.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
        if !max.is_finite() {
            return Err(Error::Precondition("non-finite coordinate".into()));
        }
        let scale_exp = if max == 0.0 {
            0
        } else {
            // smallest e with max ≤ 2^e
            let mut e = max.log2().ceil() as i32;
            while 2f64.powi(e) < max {
                e += 1;
            }
            while e > i32::MIN / 2 && 2f64.powi(e - 1) >= max {
                e -= 1;
            }
            QUANT_BITS - e
        };
        let factor = 2f64.powi(scale_exp);
        let coords = points
            .iter()
            .map(|w| w.iter().map(|&x| (x * factor).round() as i64).collect())
            .collect();
        Ok(Self::build(k, coords, scale_exp))
    }

    pub fn from_integers(k: usize, coords: Vec<Vec<i64>>) -> Result<Self> {
        if coords.iter().any(|w| w.len() != k) {
            return Err(Error::Precondition("points must share one dimension".into()));
        }
        Ok(Self::build(k, coords, 0))
    }

    fn build(k: usize, coords: Vec<Vec<i64>>, scale_exp: i32) -> Self {
        PointSet {
            k,
            coords,
            scale_exp,
            patterns: patterns(k),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn scale_exp(&self) -> i32 {
        self.scale_exp
    }

    pub fn coords(&self, i: usize) -> &[i64] {
        &self.coords[i]
    }

    fn base_matrix(&self, cols: &[usize]) -> Vec<Vec<BigInt>> {
        let mut m: Vec<Vec<BigInt>> = (0..self.k)
            .map(|r| cols.iter().map(|&c| BigInt::from(self.coords[c][r])).collect())
            .collect();
        m.push(vec![BigInt::from(1); cols.len()]);
        m
    }

    /// Unperturbed determinant for the columns in the given order.
    pub fn exact_det(&self, cols: &[usize]) -> BigInt {
        determinant(self.base_matrix(cols))
    }

    /// Sign of the perturbed determinant with columns in the given order
    /// (`k + 1` distinct indices). Never zero.
    pub(crate) fn column_sign(&self, cols: &[usize]) -> i8 {
        debug_assert_eq!(cols.len(), self.k + 1);
        let base = self.base_matrix(cols);
        let d = determinant(base.clone());
        if !d.is_zero() {
            return sign_of(&d);
        }
        let n = self.n();
        let rank = |(row, col): (usize, usize)| row * n + cols[col];
        let mut keyed: Vec<_> = self
            .patterns
            .iter()
            .map(|pat| {
                let mut key: Vec<usize> = pat.iter().map(|&pos| rank(pos)).collect();
                key.sort_unstable_by(|a, b| b.cmp(a));
                (key, pat)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        for (_, pat) in keyed {
            let mut m = base.clone();
            for &(row, col) in pat.iter() {
                for (c, entry) in m[row].iter_mut().enumerate() {
                    *entry = BigInt::from((c == col) as i64);
                }
            }
            let coeff = determinant(m);
            if !coeff.is_zero() {
                return sign_of(&coeff);
            }
        }
        unreachable!("the fully perturbed coefficient is ±1")
    }
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Every nonempty set of matrix positions `(coordinate row, column)` with
/// distinct rows and distinct columns; each is one monomial of the perturbed
/// determinant that can carry a nonzero coefficient.
fn patterns(k: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        row: usize,
        k: usize,
        used_cols: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if row == k {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        rec(row + 1, k, used_cols, cur, out);
        for c in 0..used_cols.len() {
            if !used_cols[c] {
                used_cols[c] = true;
                cur.push((row, c));
                rec(row + 1, k, used_cols, cur, out);
                cur.pop();
                used_cols[c] = false;
            }
        }
    }
    let mut out = vec![];
    rec(0, k, &mut vec![false; k + 1], &mut vec![], &mut out);
    out
}

/// Fraction-free Gaussian elimination (Bareiss).
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for col in 0..n {
        if m[col][col].is_zero() {
            match (col + 1..n).find(|&r| !m[r][col].is_zero()) {
                Some(r) => {
                    m.swap(col, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in (col + 1)..n {
            for c in (col + 1)..n {
                let v = &m[r][c] * &m[col][col] - &m[r][col] * &m[col][c];
                m[r][c] = v / &prev;
            }
        }
        prev = m[col][col].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Position of `query` relative to the hyperplane through the points `defs`.
///
/// `defs` are put in ascending order before the determinant is formed, so the
/// orientation of a hyperplane is a function of its point set alone.
pub fn sos_orientation(ps: &PointSet, defs: &[usize], query: usize) -> Result<Side> {
    let n = ps.n();
    if defs.len() != ps.k() {
        return Err(Error::Precondition(format!(
            "a hyperplane in R^{} needs {} defining points, got {}",
            ps.k(),
            ps.k(),
            defs.len()
        )));
    }
    if query >= n || defs.iter().any(|&d| d >= n) {
        return Err(Error::Precondition(format!("point index out of range for n = {n}")));
    }
    let mut cols = defs.to_vec();
    cols.sort_unstable();
    if cols.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition(format!("duplicate defining indices {defs:?}")));
    }
    if cols.binary_search(&query).is_ok() {
        return Ok(Side::Member);
    }
    cols.push(query);
    Ok(match ps.column_sign(&cols) {
        1 => Side::Above,
        _ => Side::Below,
    })
}

/// All `k`-subsets of `0..n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct CandidateHyperplanes {
    current: Option<Vec<usize>>,
    n: usize,
    /// Set when `n < k`: no hyperplane is spanned by input points and the
    /// caller must fall back to exhaustive search.
    pub fallback: bool,
}

impl Iterator for CandidateHyperplanes {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut nxt = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if nxt[i] < self.n - k + i {
                nxt[i] += 1;
                for j in (i + 1)..k {
                    nxt[j] = nxt[j - 1] + 1;
                }
                self.current = Some(nxt);
                break;
            }
        }
        Some(cur)
    }
}

pub fn enumerate_candidate_hyperplanes(n: usize, k: usize) -> CandidateHyperplanes {
    if n < k {
        return CandidateHyperplanes {
            current: None,
            n,
            fallback: true,
        };
    }
    CandidateHyperplanes {
        current: Some((0..k).collect()),
        n,
        fallback: false,
    }
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
