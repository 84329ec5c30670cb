//! Small dense linear algebra over `f64`.
//!
//! Everything in this crate works on matrices of side ≤ ~20, so the
//! implementations favor clarity and determinism over asymptotics:
//! LU with partial pivoting for determinants and solves, Gaussian
//! elimination with complete pivoting for rank decisions, a shifted
//! power iteration for Perron–Frobenius data, and a Hessenberg +
//! Francis double-shift QR sweep for full (possibly complex) spectra.

use alloc::vec;
use alloc::vec::Vec;

use crate::tol;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - other[(i, j)])
    }

    pub fn scale(&self, s: f64) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| s * self[(i, j)])
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Operator infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// `‖self − other‖` in max-abs-entry norm.
    pub fn max_abs_diff(&self, other: &Mat) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Integer matrix power (square matrices).
    pub fn pow(&self, mut e: u32) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Keep the rows and columns listed in `idx` (in that order).
    pub fn principal_submatrix(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])])
    }

    /// Delete one row and one column (0-based).
    pub fn minor_matrix(&self, row: usize, col: usize) -> Mat {
        let rs: Vec<usize> = (0..self.rows).filter(|&i| i != row).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        Mat::from_fn(rs.len(), cs.len(), |i, j| self[(rs[i], cs[j])])
    }
}

impl core::ops::Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Determinant by LU with partial pivoting.
pub fn det(m: &Mat) -> f64 {
    assert!(m.is_square());
    let n = m.rows;
    let mut a = m.clone();
    let mut d = 1.0;
    for k in 0..n {
        let mut p = k;
        for i in k + 1..n {
            if a[(i, k)].abs() > a[(p, k)].abs() {
                p = i;
            }
        }
        if a[(p, k)] == 0.0 {
            return 0.0;
        }
        if p != k {
            for j in 0..n {
                let t = a[(k, j)];
                a[(k, j)] = a[(p, j)];
                a[(p, j)] = t;
            }
            d = -d;
        }
        d *= a[(k, k)];
        for i in k + 1..n {
            let f = a[(i, k)] / a[(k, k)];
            for j in k + 1..n {
                a[(i, j)] -= f * a[(k, j)];
            }
        }
    }
    d
}

/// Solve `A x = b` for square `A`. Returns `None` when `A` is singular
/// to working precision.
pub fn solve(a: &Mat, b: &[f64]) -> Option<Vec<f64>> {
    assert!(a.is_square());
    assert_eq!(a.rows, b.len());
    let n = a.rows;
    let mut m = a.clone();
    let mut x: Vec<f64> = b.to_vec();
    let scale = m.max_abs().max(1.0);
    for k in 0..n {
        let mut p = k;
        for i in k + 1..n {
            if m[(i, k)].abs() > m[(p, k)].abs() {
                p = i;
            }
        }
        if m[(p, k)].abs() <= f64::EPSILON * scale * 8.0 {
            return None;
        }
        if p != k {
            for j in 0..n {
                let t = m[(k, j)];
                m[(k, j)] = m[(p, j)];
                m[(p, j)] = t;
            }
            x.swap(k, p);
        }
        for i in k + 1..n {
            let f = m[(i, k)] / m[(k, k)];
            if f == 0.0 {
                continue;
            }
            for j in k + 1..n {
                m[(i, j)] -= f * m[(k, j)];
            }
            x[i] -= f * x[k];
        }
    }
    for i in (0..n).rev() {
        let mut s = x[i];
        for j in i + 1..n {
            s -= m[(i, j)] * x[j];
        }
        x[i] = s / m[(i, i)];
    }
    Some(x)
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.rows;
    let mut out = Mat::zeros(n, n);
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        let col = solve(a, &e)?;
        for i in 0..n {
            out[(i, j)] = col[i];
        }
    }
    Some(out)
}

/// Outcome of rank-revealing elimination with complete pivoting.
#[derive(Clone, Debug)]
pub struct RankInfo {
    pub rank: usize,
    /// Rows selected as a basis of the row space, in selection order.
    pub selected_rows: Vec<usize>,
    /// Pivot column chosen at each step, parallel to `selected_rows`.
    pub pivot_cols: Vec<usize>,
    pub smallest_accepted: f64,
    pub largest_rejected: f64,
}

impl RankInfo {
    /// Ratio between the smallest accepted and largest rejected pivot;
    /// small values flag an ambiguous numerical rank.
    pub fn pivot_gap(&self) -> f64 {
        if self.largest_rejected == 0.0 {
            f64::INFINITY
        } else {
            self.smallest_accepted / self.largest_rejected
        }
    }
}

/// Gaussian elimination with complete pivoting; pivots below
/// `rel_tol · max_abs(m)` count as zero.
pub fn rank_info(m: &Mat, rel_tol: f64) -> RankInfo {
    let threshold = rel_tol * m.max_abs().max(f64::MIN_POSITIVE);
    let mut work = m.clone();
    let mut row_free: Vec<bool> = vec![true; m.rows];
    let mut col_free: Vec<bool> = vec![true; m.cols];
    let mut selected_rows = Vec::new();
    let mut pivot_cols = Vec::new();
    let mut smallest_accepted = f64::INFINITY;
    let largest_rejected;
    loop {
        let mut best = 0.0;
        let mut bi = usize::MAX;
        let mut bj = usize::MAX;
        for i in 0..m.rows {
            if !row_free[i] {
                continue;
            }
            for j in 0..m.cols {
                if !col_free[j] {
                    continue;
                }
                if work[(i, j)].abs() > best {
                    best = work[(i, j)].abs();
                    bi = i;
                    bj = j;
                }
            }
        }
        if best <= threshold {
            largest_rejected = best;
            break;
        }
        smallest_accepted = smallest_accepted.min(best);
        row_free[bi] = false;
        col_free[bj] = false;
        selected_rows.push(bi);
        pivot_cols.push(bj);
        let piv = work[(bi, bj)];
        for i in 0..m.rows {
            if !row_free[i] {
                continue;
            }
            let f = work[(i, bj)] / piv;
            if f == 0.0 {
                continue;
            }
            for j in 0..m.cols {
                work[(i, j)] -= f * work[(bi, j)];
            }
        }
    }
    if selected_rows.is_empty() {
        smallest_accepted = 0.0;
    }
    RankInfo { rank: selected_rows.len(), selected_rows, pivot_cols, smallest_accepted, largest_rejected }
}

pub fn rank(m: &Mat) -> usize {
    rank_info(m, tol::RANK).rank
}

/// Basis of the null space `{x | m·x = 0}`, via reduced row echelon form.
pub fn null_space(m: &Mat, rel_tol: f64) -> Vec<Vec<f64>> {
    let threshold = rel_tol * m.max_abs().max(f64::MIN_POSITIVE);
    let mut a = m.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0;
    for j in 0..cols {
        if r == rows {
            break;
        }
        let mut p = r;
        for i in r + 1..rows {
            if a[(i, j)].abs() > a[(p, j)].abs() {
                p = i;
            }
        }
        if a[(p, j)].abs() <= threshold {
            continue;
        }
        if p != r {
            for jj in 0..cols {
                let t = a[(r, jj)];
                a[(r, jj)] = a[(p, jj)];
                a[(p, jj)] = t;
            }
        }
        let piv = a[(r, j)];
        for jj in 0..cols {
            a[(r, jj)] /= piv;
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a[(i, j)];
            if f == 0.0 {
                continue;
            }
            for jj in 0..cols {
                a[(i, jj)] -= f * a[(r, jj)];
            }
        }
        pivot_of_col[j] = Some(r);
        r += 1;
    }
    let mut basis = Vec::new();
    for j in 0..cols {
        if pivot_of_col[j].is_some() {
            continue;
        }
        let mut v = vec![0.0; cols];
        v[j] = 1.0;
        for (jj, piv) in pivot_of_col.iter().enumerate() {
            if let Some(row) = piv {
                v[jj] = -a[(*row, j)];
            }
        }
        basis.push(v);
    }
    basis
}

/// Coordinates of `x` in the column basis `cols` (full column rank
/// assumed), via the normal equations; `None` when the residual exceeds
/// `rel_tol · scale`.
pub fn coords_in_columns(cols: &Mat, x: &[f64], rel_tol: f64) -> Option<Vec<f64>> {
    let bt = cols.transpose();
    let gram = bt.mul(cols);
    let rhs = bt.mul_vec(x);
    let t = solve(&gram, &rhs)?;
    let recon = cols.mul_vec(&t);
    let scale = cols.max_abs().max(1.0) * x.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    let res = recon.iter().zip(x).fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
    if res <= rel_tol * scale {
        Some(t)
    } else {
        None
    }
}

/// Characteristic polynomial coefficients `[c_0, …, c_{n−1}, 1]` of a
/// square matrix (Faddeev–LeVerrier), with `p(x) = Σ c_k x^k`.
pub fn char_poly(a: &Mat) -> Vec<f64> {
    assert!(a.is_square());
    let n = a.rows;
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut m = Mat::zeros(n, n);
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·Id ; c_{n−k} = −tr(A·M_k)/k
        let am = a.mul(&m);
        m = am;
        for i in 0..n {
            m[(i, i)] += coeffs[n - k + 1];
        }
        let am = a.mul(&m);
        let tr: f64 = (0..n).map(|i| am[(i, i)]).sum();
        coeffs[n - k] = -tr / k as f64;
    }
    coeffs
}

/// Perron–Frobenius data of an entrywise nonnegative matrix whose
/// support graph is connected.
#[derive(Clone, Debug)]
pub struct PerronFrobenius {
    /// Largest eigenvalue (spectral radius).
    pub value: f64,
    /// Positive eigenvector, normalized to max entry 1.
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenError {
    /// Power iteration failed to reach the residual target.
    PowerIterationStalled,
    /// The QR sweep did not converge.
    QrNoConvergence,
    /// Power-iteration and dense-QR routes disagree on the extreme eigenvalue.
    RouteDisagreement,
}

impl core::fmt::Display for EigenError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EigenError::PowerIterationStalled => write!(f, "power iteration failed to converge"),
            EigenError::QrNoConvergence => write!(f, "QR eigenvalue sweep failed to converge"),
            EigenError::RouteDisagreement => {
                write!(f, "power-iteration and dense eigensolver disagree")
            }
        }
    }
}

/// Shifted power iteration for the Perron–Frobenius pair of a
/// nonnegative matrix with connected support. The `+Id` shift breaks
/// ties with boundary spectrum (e.g. bipartite supports).
pub fn perron_frobenius(a: &Mat) -> Result<PerronFrobenius, EigenError> {
    assert!(a.is_square());
    let n = a.rows;
    debug_assert!(a.data.iter().all(|&x| x >= 0.0), "matrix must be nonnegative");
    if n == 1 {
        return Ok(PerronFrobenius { value: a[(0, 0)], vector: vec![1.0], residual: 0.0, iterations: 0 });
    }
    let scale = a.norm_inf().max(1.0);
    let mut v = vec![1.0; n];
    let mut lambda = 0.0;
    for it in 0..200_000 {
        let mut w = a.mul_vec(&v);
        for i in 0..n {
            w[i] += v[i]; // shift by +Id
        }
        let max = w.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        if max == 0.0 {
            return Err(EigenError::PowerIterationStalled);
        }
        for x in &mut w {
            *x /= max;
        }
        v = w;
        // Rayleigh-style estimate from the unshifted matrix.
        let av = a.mul_vec(&v);
        let num: f64 = av.iter().zip(&v).map(|(x, y)| x * y).sum();
        let den: f64 = v.iter().map(|x| x * x).sum();
        lambda = num / den;
        let residual = av
            .iter()
            .zip(&v)
            .fold(0.0_f64, |m, (x, y)| m.max((x - lambda * y).abs()));
        if residual <= tol::PF_RESIDUAL * scale {
            let vmax = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
            let vector: Vec<f64> = v.iter().map(|x| x / vmax).collect();
            return Ok(PerronFrobenius { value: lambda, vector, residual, iterations: it + 1 });
        }
    }
    let _ = lambda;
    Err(EigenError::PowerIterationStalled)
}

/// All eigenvalues of a real square matrix as `(re, im)` pairs, via
/// balancing, elimination to Hessenberg form, and Francis double-shift
/// QR (EISPACK `balanc`/`elmhes`/`hqr` lineage). Order is unspecified.
pub fn eigenvalues(m: &Mat) -> Result<Vec<(f64, f64)>, EigenError> {
    assert!(m.is_square());
    let n = m.rows;
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![(m[(0, 0)], 0.0)]);
    }
    let mut a = m.clone();
    balance(&mut a);
    hessenberg(&mut a);
    hqr(&mut a)
}

/// Smallest real part over the spectrum. For matrices `A` compatible
/// with a connected Coxeter diagram this is the (real) lowest
/// eigenvalue in the Perron–Frobenius sense.
pub fn min_real_eigenvalue(m: &Mat) -> Result<f64, EigenError> {
    let eigs = eigenvalues(m)?;
    Ok(eigs.iter().map(|&(re, _)| re).fold(f64::INFINITY, f64::min))
}

fn balance(a: &mut Mat) {
    const RADIX: f64 = 2.0;
    let n = a.rows;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c != 0.0 && r != 0.0 {
                let mut g = r / RADIX;
                let mut f = 1.0;
                let s = c + r;
                let mut c2 = c;
                while c2 < g {
                    f *= RADIX;
                    c2 *= RADIX * RADIX;
                }
                g = r * RADIX;
                while c2 > g {
                    f /= RADIX;
                    c2 /= RADIX * RADIX;
                }
                if (c2 + r) / f < 0.95 * s {
                    done = false;
                    let ginv = 1.0 / f;
                    for j in 0..n {
                        a[(i, j)] *= ginv;
                    }
                    for j in 0..n {
                        a[(j, i)] *= f;
                    }
                }
            }
        }
    }
}

/// Reduce to upper Hessenberg form by stabilized elimination; entries
/// below the subdiagonal are zeroed (only eigenvalues are wanted).
fn hessenberg(a: &mut Mat) {
    let n = a.rows;
    for m in 1..n.saturating_sub(1) {
        let mut x: f64 = 0.0;
        let mut i0 = m;
        for j in m..n {
            if a[(j, m - 1)].abs() > x.abs() {
                x = a[(j, m - 1)];
                i0 = j;
            }
        }
        if i0 != m {
            for j in m - 1..n {
                let t = a[(i0, j)];
                a[(i0, j)] = a[(m, j)];
                a[(m, j)] = t;
            }
            for j in 0..n {
                let t = a[(j, i0)];
                a[(j, i0)] = a[(j, m)];
                a[(j, m)] = t;
            }
        }
        if x != 0.0 {
            for i in m + 1..n {
                let mut y = a[(i, m - 1)];
                if y != 0.0 {
                    y /= x;
                    a[(i, m - 1)] = 0.0;
                    for j in m..n {
                        let s = y * a[(m, j)];
                        a[(i, j)] -= s;
                    }
                    for j in 0..n {
                        let s = y * a[(j, i)];
                        a[(j, m)] += s;
                    }
                }
            }
        }
    }
    for i in 2..n {
        for j in 0..i - 1 {
            a[(i, j)] = 0.0;
        }
    }
}

fn sign_of(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix; returns the
/// eigenvalues. Translation of the classic `hqr` routine.
fn hqr(a: &mut Mat) -> Result<Vec<(f64, f64)>, EigenError> {
    let n = a.rows;
    let mut wr = vec![0.0; n];
    let mut wi = vec![0.0; n];
    let mut anorm = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += a[(i, j)].abs();
        }
    }
    let eps = f64::EPSILON;
    let mut nn = n as isize - 1;
    let mut t = 0.0;
    while nn >= 0 {
        let mut its = 0;
        loop {
            // Look for a single small subdiagonal element.
            let mut l = nn;
            while l >= 1 {
                let mut s = a[((l - 1) as usize, (l - 1) as usize)].abs()
                    + a[(l as usize, l as usize)].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[(l as usize, (l - 1) as usize)].abs() <= eps * s {
                    a[(l as usize, (l - 1) as usize)] = 0.0;
                    break;
                }
                l -= 1;
            }
            let x = a[(nn as usize, nn as usize)];
            if l == nn {
                wr[nn as usize] = x + t;
                wi[nn as usize] = 0.0;
                nn -= 1;
                break;
            }
            let y = a[((nn - 1) as usize, (nn - 1) as usize)];
            let w = a[(nn as usize, (nn - 1) as usize)] * a[((nn - 1) as usize, nn as usize)];
            if l == nn - 1 {
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let mut z = libm::sqrt(q.abs());
                let x = x + t;
                if q >= 0.0 {
                    z = p + sign_of(z, p);
                    wr[(nn - 1) as usize] = x + z;
                    wr[nn as usize] = if z != 0.0 { x - w / z } else { x + z };
                    wi[(nn - 1) as usize] = 0.0;
                    wi[nn as usize] = 0.0;
                } else {
                    wr[(nn - 1) as usize] = x + p;
                    wr[nn as usize] = x + p;
                    wi[(nn - 1) as usize] = z;
                    wi[nn as usize] = -z;
                }
                nn -= 2;
                break;
            }
            if its == 30 {
                return Err(EigenError::QrNoConvergence);
            }
            let (mut x, mut y, mut w) = (x, y, w);
            if its == 10 || its == 20 {
                // Exceptional shift.
                t += x;
                for i in 0..=nn as usize {
                    a[(i, i)] -= x;
                }
                let s = a[(nn as usize, (nn - 1) as usize)].abs()
                    + a[((nn - 1) as usize, (nn - 2) as usize)].abs();
                y = 0.75 * s;
                x = y;
                w = -0.4375 * s * s;
            }
            its += 1;
            // Look for two consecutive small subdiagonal elements.
            let mut m = nn - 2;
            let (mut p, mut q, mut r) = (0.0, 0.0, 0.0);
            while m >= l {
                let mu = m as usize;
                let z = a[(mu, mu)];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / a[(mu + 1, mu)] + a[(mu, mu + 1)];
                q = a[(mu + 1, mu + 1)] - z - rr - ss;
                r = a[(mu + 2, mu + 1)];
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = a[(mu, mu - 1)].abs() * (q.abs() + r.abs());
                let v = p.abs()
                    * (a[(mu - 1, mu - 1)].abs() + z.abs() + a[(mu + 1, mu + 1)].abs());
                if u <= eps * v {
                    break;
                }
                m -= 1;
            }
            for i in (m + 2)..=nn {
                let iu = i as usize;
                a[(iu, iu - 2)] = 0.0;
                if i != m + 2 {
                    a[(iu, iu - 3)] = 0.0;
                }
            }
            // Double QR step on rows l..nn and columns m..nn.
            for k in m..=nn - 1 {
                let ku = k as usize;
                if k != m {
                    p = a[(ku, ku - 1)];
                    q = a[(ku + 1, ku - 1)];
                    r = if k != nn - 1 { a[(ku + 2, ku - 1)] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = sign_of(libm::sqrt(p * p + q * q + r * r), p);
                if s != 0.0 {
                    if k == m {
                        if l != m {
                            a[(ku, ku - 1)] = -a[(ku, ku - 1)];
                        }
                    } else {
                        a[(ku, ku - 1)] = -s * x;
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    let z = r / s;
                    q /= p;
                    r /= p;
                    for j in ku..=nn as usize {
                        let mut pp = a[(ku, j)] + q * a[(ku + 1, j)];
                        if k != nn - 1 {
                            pp += r * a[(ku + 2, j)];
                            a[(ku + 2, j)] -= pp * z;
                        }
                        a[(ku + 1, j)] -= pp * y;
                        a[(ku, j)] -= pp * x;
                    }
                    let mmin = if nn < k + 3 { nn as usize } else { (k + 3) as usize };
                    for i in l as usize..=mmin {
                        let mut pp = x * a[(i, ku)] + y * a[(i, ku + 1)];
                        if k != nn - 1 {
                            pp += z * a[(i, ku + 2)];
                            a[(i, ku + 2)] -= pp * r;
                        }
                        a[(i, ku + 1)] -= pp * q;
                        a[(i, ku)] -= pp;
                    }
                }
            }
        }
    }
    Ok(wr.into_iter().zip(wi).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn sorted_real(eigs: &[(f64, f64)]) -> Vec<f64> {
        let mut re: Vec<f64> = eigs.iter().map(|e| e.0).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        re
    }

    #[test]
    fn det_small_cases() {
        let a = Mat::from_rows(&[vec![2.0, -1.0], vec![-1.0, 2.0]]);
        assert!((det(&a) - 3.0).abs() < 1e-12);
        let b = Mat::from_rows(&[vec![2.0, -2.0], vec![-2.0, 2.0]]);
        assert!(det(&b).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_2x2() {
        let a = Mat::from_rows(&[vec![2.0, -3.0], vec![-3.0, 2.0]]);
        let eigs = sorted_real(&eigenvalues(&a).unwrap());
        assert!((eigs[0] + 1.0).abs() < 1e-10);
        assert!((eigs[1] - 5.0).abs() < 1e-10);
    }

    #[test]
    fn eigenvalues_rotation_block_complex() {
        // [[0,-1],[1,0]] has eigenvalues ±i.
        let a = Mat::from_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]);
        let eigs = eigenvalues(&a).unwrap();
        let mut ims: Vec<f64> = eigs.iter().map(|e| e.1).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ims[0] + 1.0).abs() < 1e-10 && (ims[1] - 1.0).abs() < 1e-10);
        assert!(eigs.iter().all(|e| e.0.abs() < 1e-10));
    }

    #[test]
    fn eigenvalues_match_char_poly_on_random_matrices() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..=9);
            let a = Mat::from_fn(n, n, |_, _| rng.gen_range(-3.0..3.0));
            let eigs = eigenvalues(&a).unwrap();
            let coeffs = char_poly(&a);
            // p(λ) must vanish at every computed eigenvalue (complex Horner).
            for &(re, im) in &eigs {
                let (mut pr, mut pi) = (0.0, 0.0);
                for &c in coeffs.iter().rev() {
                    let nr = pr * re - pi * im + c;
                    let ni = pr * im + pi * re;
                    pr = nr;
                    pi = ni;
                }
                let scale: f64 = coeffs.iter().fold(1.0_f64, |m, c| m.max(c.abs()))
                    * (1.0 + re.hypot(im)).powi(n as i32);
                assert!(
                    pr.hypot(pi) <= 1e-7 * scale,
                    "char poly residual {} too large for eig ({re},{im})",
                    pr.hypot(pi)
                );
            }
        }
    }

    #[test]
    fn perron_frobenius_of_path_adjacency() {
        // Path graph on 3 nodes: largest adjacency eigenvalue is √2.
        let a = Mat::from_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0],
        ]);
        let pf = perron_frobenius(&a).unwrap();
        assert!((pf.value - core::f64::consts::SQRT_2).abs() < 1e-10);
        assert!(pf.vector.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn perron_frobenius_handles_bipartite_support() {
        // Even cycle: ±2 are both in the spectrum; the shift must still
        // find +2 with a positive vector.
        let n = 6;
        let a = Mat::from_fn(n, n, |i, j| {
            if (i + 1) % n == j || (j + 1) % n == i {
                1.0
            } else {
                0.0
            }
        });
        let pf = perron_frobenius(&a).unwrap();
        assert!((pf.value - 2.0).abs() < 1e-10);
        assert!(pf.vector.iter().all(|&x| x > 0.9999));
    }

    #[test]
    fn power_iteration_agrees_with_dense_route() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(2..=9);
            // Random connected nonnegative symmetric-support matrix.
            let mut a = Mat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    if i != j && (j == i + 1 || i == j + 1 || rng.gen_bool(0.4)) {
                        a[(i, j)] = rng.gen_range(0.01..2.0);
                    }
                }
            }
            let pf = perron_frobenius(&a).unwrap();
            let max_re = eigenvalues(&a)
                .unwrap()
                .iter()
                .map(|e| e.0)
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(
                (pf.value - max_re).abs() <= 1e-8 * a.norm_inf().max(1.0),
                "pf {} vs dense {}",
                pf.value,
                max_re
            );
        }
    }

    #[test]
    fn rank_and_nullspace() {
        let a = Mat::from_rows(&[
            vec![2.0, -1.0, -1.0],
            vec![-1.0, 2.0, -1.0],
            vec![-1.0, -1.0, 2.0],
        ]);
        let info = rank_info(&a, tol::RANK);
        assert_eq!(info.rank, 2);
        assert!(info.pivot_gap() > 1e6);
        let ns = null_space(&a, tol::RANK);
        assert_eq!(ns.len(), 1);
        let img = a.mul_vec(&ns[0]);
        assert!(img.iter().all(|x| x.abs() < 1e-9));
    }

    #[test]
    fn solve_round_trip() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.gen_range(1..=6);
            let a = Mat::from_fn(n, n, |_, _| rng.gen_range(-2.0..2.0));
            if det(&a).abs() < 1e-3 {
                continue;
            }
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let b = a.mul_vec(&x);
            let x2 = solve(&a, &b).unwrap();
            for i in 0..n {
                assert!((x[i] - x2[i]).abs() < 1e-8);
            }
        }
    }
}
