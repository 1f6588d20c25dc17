//! Exact linear algebra over the rationals and GF(2), plus the two
//! convexity feasibility oracles the geometric modules are built on.
//!
//! Hull membership is decided by Caratheodory enumeration over affinely
//! independent subsets; strictly-positive feasibility by a phase-1
//! simplex with Bland's rule. No floating point anywhere.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in a matrix with {} columns",
                    r.len(),
                    ncols
                )));
            }
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            let inv = a.get(r, c).clone();
            for j in c..a.cols {
                let v = a.get(r, j).clone() / inv.clone();
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i != r && !a.get(i, c).is_zero() {
                    let f = a.get(i, c).clone();
                    for j in c..a.cols {
                        let v = a.get(i, j).clone() - f.clone() * a.get(r, j).clone();
                        a.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel as matrix columns, canonicalized so the
    /// basis vectors (as rows) are in reduced row echelon form. The column
    /// count is always `cols - rank`.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis_rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            basis_rows.push(v);
        }
        let basis = Self::from_rows(basis_rows).expect("rows of equal length");
        let (canon, _) = basis.rref();
        canon.transpose()
    }

    /// `self * v` for a column vector.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |s, t| s + t)
            })
            .collect())
    }

    /// Matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }
}

/// Exact rank of a rational matrix.
pub fn rank_rational(m: &RationalMatrix) -> usize {
    m.rank()
}

/// Solves `A x = b` when the solution exists and is unique (full column
/// rank and consistent); otherwise `None`.
pub fn solve_unique(a: &RationalMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "rhs length must match row count");
    let mut aug = RationalMatrix::zeros(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.contains(&a.cols()) {
        return None; // inconsistent
    }
    if pivots.len() != a.cols() {
        return None; // underdetermined
    }
    let mut x = vec![Rational::zero(); a.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, a.cols()).clone();
    }
    Some(x)
}

/// Bit-packed matrix over GF(2); bits of a row are packed into `u64` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl GF2Matrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        Self {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        if bit {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// Rank over GF(2) by bit-parallel Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| self.row_words(i).to_vec())
            .filter(|r| r.iter().any(|&w| w != 0))
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let (w, b) = (c / 64, c % 64);
            let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] >> b & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row[w] >> b & 1 == 1 {
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

/// Rank of a GF(2) matrix.
pub fn rank_gf2(m: &GF2Matrix) -> usize {
    m.rank()
}

fn check_dims(points: &[Vec<Rational>]) -> Result<usize> {
    let n = points.first().map_or(0, |p| p.len());
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.len(),
            });
        }
    }
    Ok(n)
}

/// Advances `idx` to the next k-combination of `0..m` in lexicographic
/// order; false when exhausted.
pub(crate) fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] + 1 <= m - (k - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Certificate form of hull membership: the convex-combination
/// coefficients over a witnessing subset, or `None` when `0` is outside.
///
/// Caratheodory enumeration: for every subset of size at most `n+1`
/// solve the square system for the unique affine coefficients and accept
/// when they are all nonnegative. Every witness found this way is
/// supported on an affinely independent subset.
pub fn zero_hull_certificate(
    points: &[Vec<Rational>],
) -> Result<Option<Vec<(usize, Rational)>>> {
    let n = check_dims(points)?;
    let m = points.len();
    for k in 1..=(n + 1).min(m) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if let Some(coeffs) = convex_coeffs_for_zero(points, &idx, n) {
                return Ok(Some(idx.into_iter().zip(coeffs).collect()));
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    Ok(None)
}

/// Solves `sum lambda_i x_i = 0, sum lambda_i = 1` over the subset; `Some`
/// only when the system has a unique, all-nonnegative solution.
fn convex_coeffs_for_zero(
    points: &[Vec<Rational>],
    idx: &[usize],
    n: usize,
) -> Option<Vec<Rational>> {
    let k = idx.len();
    let mut a = RationalMatrix::zeros(n + 1, k);
    for (col, &i) in idx.iter().enumerate() {
        for row in 0..n {
            a.set(row, col, points[i][row].clone());
        }
        a.set(n, col, Rational::one());
    }
    let mut b = vec![Rational::zero(); n + 1];
    b[n] = Rational::one();
    let x = solve_unique(&a, &b)?;
    x.iter().all(|v| !v.is_negative()).then_some(x)
}

/// True iff `0` lies in the convex hull of the given points.
pub fn zero_in_convex_hull(points: &[Vec<Rational>]) -> Result<bool> {
    Ok(zero_hull_certificate(points)?.is_some())
}

/// Scale-invariant variant for rays: true iff some nonnegative, nonzero
/// combination of the vectors is `0` (Gordan: equivalently, no open
/// halfspace contains them all). Rescaling any input by a positive
/// rational does not change the answer.
pub fn nonneg_nonzero_dependence(points: &[Vec<Rational>]) -> Result<bool> {
    zero_in_convex_hull(points)
}

/// True iff there is a dependence `sum lambda_i x_i = 0` with every
/// `lambda_i >= 1`. Together with full rank this characterizes positive
/// spanning. Decided by exact phase-1 simplex with Bland's rule.
pub fn strictly_positive_dependence(points: &[Vec<Rational>]) -> Result<bool> {
    let n = check_dims(points)?;
    let m = points.len();
    if m == 0 {
        return Ok(true); // empty sum is zero
    }
    // lambda = 1 + mu, mu >= 0:  sum mu_i x_i = -sum x_i
    let mut a = RationalMatrix::zeros(n, m);
    let mut b = vec![Rational::zero(); n];
    for (i, p) in points.iter().enumerate() {
        for r in 0..n {
            a.set(r, i, p[r].clone());
            b[r] -= &p[r];
        }
    }
    Ok(simplex_feasible(&a, &b)?.is_some())
}

/// A direction with strictly positive inner product against every given
/// vector, or `None` if no open halfspace contains them all.
pub fn separating_direction(points: &[Vec<Rational>]) -> Result<Option<Vec<Rational>>> {
    let n = check_dims(points)?;
    let m = points.len();
    if m == 0 {
        let mut d = vec![Rational::zero(); n];
        if n > 0 {
            d[0] = Rational::one();
        }
        return Ok(Some(d));
    }
    if points.iter().any(|p| p.iter().all(|c| c.is_zero())) {
        return Ok(None); // a zero vector is in no open halfspace
    }
    // <x_i, u - v> - s_i = 1 with u, v, s >= 0
    let cols = 2 * n + m;
    let mut a = RationalMatrix::zeros(m, cols);
    let b = vec![Rational::one(); m];
    for (i, p) in points.iter().enumerate() {
        for j in 0..n {
            a.set(i, j, p[j].clone());
            a.set(i, n + j, -p[j].clone());
        }
        a.set(i, 2 * n + i, -Rational::one());
    }
    Ok(simplex_feasible(&a, &b)?.map(|x| {
        (0..n).map(|j| x[j].clone() - x[n + j].clone()).collect()
    }))
}

/// Phase-1 simplex with Bland's anti-cycling rule: finds `x >= 0` with
/// `A x = b`, or `None` when infeasible. Exact rational pivoting.
pub fn simplex_feasible(a: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let m = a.rows();
    let n = a.cols();
    if b.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: b.len(),
        });
    }
    // tableau: n real columns, m artificial columns, rhs; artificial basis
    let width = n + m + 1;
    let mut t = vec![vec![Rational::zero(); width]; m];
    for i in 0..m {
        let flip = b[i].is_negative();
        for j in 0..n {
            let v = a.get(i, j).clone();
            t[i][j] = if flip { -v } else { v };
        }
        t[i][n + i] = Rational::one();
        t[i][width - 1] = if flip { -b[i].clone() } else { b[i].clone() };
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // objective: minimize sum of artificials; reduced costs for the
    // artificial basis are -(column sums) on real columns
    let mut obj = vec![Rational::zero(); width];
    for j in 0..n {
        for row in t.iter() {
            obj[j] -= &row[j];
        }
    }
    for row in t.iter() {
        obj[width - 1] -= &row[width - 1];
    }

    loop {
        // Bland: entering column = smallest index with negative reduced cost
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // ratio test; ties by smallest basis variable (Bland)
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = row[width - 1].clone() / row[enter].clone();
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && basis[i] < basis[leave.expect("leave set with best")])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            // unbounded cannot happen in phase 1 (objective bounded below by 0)
            break;
        };
        // pivot on (l, enter)
        let pivot = t[l][enter].clone();
        for v in t[l].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        for i in 0..m {
            if i != l && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let d = f.clone() * t[l][j].clone();
                    t[i][j] -= d;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..width {
                let d = f.clone() * t[l][j].clone();
                obj[j] -= d;
            }
        }
        basis[l] = enter;
    }

    // feasible iff all artificial variables sit at zero
    let infeasible = basis
        .iter()
        .enumerate()
        .any(|(i, &v)| v >= n && !t[i][width - 1].is_zero());
    if infeasible {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &v) in basis.iter().enumerate() {
        if v < n {
            x[v] = t[i][width - 1].clone();
        }
    }
    Ok(Some(x))
}
