//! Reflection representations built from Cartan matrices.
//!
//! Given a weakly compatible `A`, the semisimple model picks a row basis
//! of `A` as coordinate covectors, forces the remaining covectors as the
//! induced linear combinations, reads the vectors `v_j` off the columns,
//! and pads with a trivial summand when `dim V > rank(A)`. Each
//! generator acts as `x ↦ x − α_i(x)·v_i`.
//!
//! Zero-type inputs are rejected: a reflection-group representation with
//! a zero-type Cartan matrix is never semisimple, so the semisimple
//! model cannot realize one (its fundamental cone degenerates to empty
//! interior).

use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{
    self, matrix_type, CartanError, CartanMatrix, Level, MatrixType, Violation,
};
use crate::coxeter::{irreducible_components, CoxLabel, CoxeterMatrix};
use crate::linalg::{self, Mat};
use crate::tol;

#[derive(Clone, Debug)]
pub enum ReflectionError {
    /// `rank(A)` exceeds the requested dimension.
    RankExceedsDimension { rank: usize, n: usize },
    /// Rank decision has no clean pivot gap.
    AmbiguousRank { gap: f64, rank: usize },
    /// Some connected component of `A` is of zero type: only
    /// non-semisimple representations realize it.
    NonSemisimpleRequired { component: Vec<usize> },
    /// Input matrix is not weakly compatible.
    Incompatible(Violation),
    /// α / v data sizes do not line up.
    DataMismatch,
    /// Parameter out of range.
    BadParameter(&'static str),
    Cartan(CartanError),
}

impl core::fmt::Display for ReflectionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ReflectionError::RankExceedsDimension { rank, n } => {
                write!(f, "rank(A) = {rank} exceeds dimension {n}")
            }
            ReflectionError::AmbiguousRank { gap, rank } => {
                write!(f, "numerical rank {rank} ambiguous at threshold (pivot gap {gap:.3e})")
            }
            ReflectionError::NonSemisimpleRequired { component } => {
                write!(f, "non-semisimple required: zero-type component {component:?}")
            }
            ReflectionError::Incompatible(v) => write!(f, "not weakly compatible: {v}"),
            ReflectionError::DataMismatch => write!(f, "alpha/v data sizes do not match"),
            ReflectionError::BadParameter(what) => write!(f, "bad parameter: {what}"),
            ReflectionError::Cartan(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ReflectionError {}

impl From<CartanError> for ReflectionError {
    fn from(e: CartanError) -> Self {
        ReflectionError::Cartan(e)
    }
}

/// Linear data `(α_i, v_j)` on an `n`-dimensional space together with
/// the generator matrices.
#[derive(Clone, Debug)]
pub struct ReflectionRep {
    n: usize,
    /// `N × n`: row `i` is the covector `α_i`.
    alpha: Mat,
    /// `n × N`: column `j` is the vector `v_j`.
    v: Mat,
    generators: Vec<Mat>,
    cartan: CartanMatrix,
}

impl ReflectionRep {
    /// Assemble a representation from explicit `(α, v)` data; the Cartan
    /// matrix is derived as `A[i][j] = α_i(v_j)`.
    pub fn from_data(
        coxeter: CoxeterMatrix,
        alpha_rows: &[Vec<f64>],
        v_cols: &[Vec<f64>],
    ) -> Result<ReflectionRep, ReflectionError> {
        let big_n = coxeter.size();
        if alpha_rows.len() != big_n || v_cols.len() != big_n {
            return Err(ReflectionError::DataMismatch);
        }
        let n = alpha_rows.first().map_or(0, |r| r.len());
        if n == 0
            || alpha_rows.iter().any(|r| r.len() != n)
            || v_cols.iter().any(|c| c.len() != n)
        {
            return Err(ReflectionError::DataMismatch);
        }
        let alpha = Mat::from_rows(alpha_rows);
        let v = Mat::from_rows(v_cols).transpose();
        let a_entries = alpha.mul(&v);
        let cartan = CartanMatrix::new(coxeter, a_entries)?;
        let generators = make_generators(&alpha, &v);
        Ok(ReflectionRep { n, alpha, v, generators, cartan })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.cartan.size()
    }

    pub fn alpha(&self) -> &Mat {
        &self.alpha
    }

    pub fn alpha_row(&self, i: usize) -> &[f64] {
        self.alpha.row(i)
    }

    pub fn v(&self) -> &Mat {
        &self.v
    }

    pub fn v_col(&self, j: usize) -> Vec<f64> {
        self.v.col(j)
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Mat {
        &self.generators[i]
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn coxeter(&self) -> &CoxeterMatrix {
        self.cartan.coxeter()
    }

    /// `α_i(x)`.
    pub fn pair(&self, i: usize, x: &[f64]) -> f64 {
        self.alpha.row(i).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `ρ(s_{w_0} s_{w_1} ⋯)` as a matrix (left action on columns).
    pub fn word_matrix(&self, word: &[usize]) -> Mat {
        let mut m = Mat::identity(self.n);
        for &i in word {
            m = m.mul(&self.generators[i]);
        }
        m
    }

    #[cfg(test)]
    pub(crate) fn generator_mut(&mut self, i: usize) -> &mut Mat {
        &mut self.generators[i]
    }
}

fn make_generators(alpha: &Mat, v: &Mat) -> Vec<Mat> {
    let n = alpha.cols();
    let big_n = alpha.rows();
    (0..big_n)
        .map(|i| {
            Mat::from_fn(n, n, |p, q| {
                let delta = if p == q { 1.0 } else { 0.0 };
                delta - v[(p, i)] * alpha[(i, q)]
            })
        })
        .collect()
}

/// The semisimple model with Cartan matrix `A` in dimension `n`.
///
/// Row-basis selection is greedy by maximal absolute pivot (complete
/// pivoting), so the output is deterministic; any other choice gives a
/// conjugate representation.
pub fn build_rep(a: &CartanMatrix, n: usize) -> Result<ReflectionRep, ReflectionError> {
    if let Some(v) = cartan::validate(a, Level::Weak).into_iter().next() {
        return Err(ReflectionError::Incompatible(v));
    }
    for comp in irreducible_components(a.coxeter()) {
        let sub = a.submatrix(&comp.vertices)?;
        if matrix_type(&sub)?.matrix_type == MatrixType::Zero {
            return Err(ReflectionError::NonSemisimpleRequired { component: comp.vertices });
        }
    }
    let info = linalg::rank_info(a.entries(), tol::RANK);
    let rank = info.rank;
    if rank > n {
        return Err(ReflectionError::RankExceedsDimension { rank, n });
    }
    if info.largest_rejected > 0.0 && info.pivot_gap() < 10.0 {
        return Err(ReflectionError::AmbiguousRank { gap: info.pivot_gap(), rank });
    }
    let big_n = a.size();
    let rows = &info.selected_rows;
    let cols = &info.pivot_cols;
    // Selected α's are coordinate covectors; the rest are the linear
    // combinations forced by the row dependencies, solved on the pivot
    // columns.
    let mut alpha = Mat::zeros(big_n, n);
    for (t, &i) in rows.iter().enumerate() {
        alpha[(i, t)] = 1.0;
    }
    if rank > 0 {
        let m = Mat::from_fn(rank, rank, |t, u| a.at(rows[u], cols[t]));
        for i in 0..big_n {
            if rows.contains(&i) {
                continue;
            }
            let rhs: Vec<f64> = cols.iter().map(|&jc| a.at(i, jc)).collect();
            let coeffs = linalg::solve(&m, &rhs)
                .ok_or(ReflectionError::AmbiguousRank { gap: info.pivot_gap(), rank })?;
            for (u, c) in coeffs.into_iter().enumerate() {
                alpha[(i, u)] = c;
            }
        }
    }
    // v_j reads its coordinates off the selected rows of A; the trailing
    // n − rank coordinates stay zero (trivial summand).
    let mut v = Mat::zeros(n, big_n);
    for (t, &i) in rows.iter().enumerate() {
        for j in 0..big_n {
            v[(t, j)] = a.at(i, j);
        }
    }
    let generators = make_generators(&alpha, &v);
    let rep = ReflectionRep { n, alpha, v, generators, cartan: a.clone() };
    // Cartan recovery must hold to entry tolerance; a failure here means
    // the rank decision mis-read a dependency.
    let recovered = rep.alpha.mul(&rep.v);
    let err = recovered.max_abs_diff(a.entries());
    if err > tol::ENTRY * a.entries().max_abs().max(1.0) {
        return Err(ReflectionError::AmbiguousRank { gap: info.pivot_gap(), rank });
    }
    Ok(rep)
}

/// Interior certificate for Vinberg's nonempty-interior condition.
#[derive(Clone, Debug)]
pub enum InteriorCertificate {
    /// `x` (from the Perron–Frobenius vectors, sign-flipped on positive
    /// components) satisfies `α_i(x) < 0` strictly for all `i`.
    Strict { point: Vec<f64>, max_alpha: f64 },
    /// Some component is of zero type; deciding the condition needs
    /// machinery not covered here.
    Undetermined,
    /// The certificate point failed the strict inequalities.
    Failed { max_alpha: f64 },
}

/// One group-relation check `(ρ(s_i)ρ(s_j))^m = Id`.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub i: usize,
    pub j: usize,
    pub m: u32,
    pub err: f64,
}

/// Outcome of [`verify_rep`].
#[derive(Clone, Debug)]
pub struct VerifyReport {
    /// `‖ρ(s_i)² − Id‖` per generator.
    pub involution_errs: Vec<f64>,
    /// All finite-order pair relations with their residuals.
    pub relations: Vec<RelationCheck>,
    /// `max |α_i(v_j) − A[i][j]|`.
    pub cartan_err: f64,
    pub interior: InteriorCertificate,
}

impl VerifyReport {
    pub fn involutions_ok(&self) -> bool {
        self.involution_errs.iter().all(|&e| e <= tol::ENTRY)
    }

    pub fn relations_ok(&self) -> bool {
        self.relations.iter().all(|r| r.err <= tol::RELATION)
    }

    pub fn failed_relations(&self) -> Vec<&RelationCheck> {
        self.relations.iter().filter(|r| r.err > tol::RELATION).collect()
    }

    pub fn passed(&self) -> bool {
        self.involutions_ok()
            && self.relations_ok()
            && self.cartan_err <= tol::ENTRY
            && !matches!(self.interior, InteriorCertificate::Failed { .. })
    }
}

/// Check the defining properties of a reflection representation:
/// involutions, the `(s_i s_j)^m` relations for finite `m`, recovery of
/// the Cartan matrix, and the nonempty-interior certificate.
pub fn verify_rep(rep: &ReflectionRep, w: &CoxeterMatrix) -> VerifyReport {
    let n = rep.dim();
    let id = Mat::identity(n);
    let involution_errs: Vec<f64> =
        rep.generators().iter().map(|g| g.mul(g).max_abs_diff(&id)).collect();
    let mut relations = Vec::new();
    for i in 0..w.size() {
        for j in i + 1..w.size() {
            if let CoxLabel::Finite(m) = w.label(i, j) {
                let prod = rep.generator(i).mul(rep.generator(j));
                let err = prod.pow(m).max_abs_diff(&id);
                relations.push(RelationCheck { i, j, m, err });
            }
        }
    }
    let recovered = rep.alpha().mul(rep.v());
    let cartan_err = recovered.max_abs_diff(rep.cartan().entries());
    let interior = interior_certificate(rep);
    VerifyReport { involution_errs, relations, cartan_err, interior }
}

fn interior_certificate(rep: &ReflectionRep) -> InteriorCertificate {
    let mut x = vec![0.0; rep.dim()];
    for comp in irreducible_components(rep.coxeter()) {
        let sub = match rep.cartan().submatrix(&comp.vertices) {
            Ok(s) => s,
            Err(_) => return InteriorCertificate::Undetermined,
        };
        let report = match matrix_type(&sub) {
            Ok(r) => r,
            Err(_) => return InteriorCertificate::Undetermined,
        };
        let sign = match report.matrix_type {
            MatrixType::Zero => return InteriorCertificate::Undetermined,
            MatrixType::Negative => 1.0,
            MatrixType::Positive => -1.0,
        };
        for (local, &j) in comp.vertices.iter().enumerate() {
            let vj = rep.v_col(j);
            for (p, xv) in x.iter_mut().enumerate() {
                *xv += sign * report.pf_vector[local] * vj[p];
            }
        }
    }
    let max_alpha = (0..rep.generator_count())
        .map(|i| rep.pair(i, &x))
        .fold(f64::NEG_INFINITY, f64::max);
    if max_alpha < 0.0 {
        InteriorCertificate::Strict { point: x, max_alpha }
    } else {
        InteriorCertificate::Failed { max_alpha }
    }
}

/// Spans and kernels attached to a representation.
#[derive(Clone, Debug)]
pub struct SubspaceReport {
    /// Basis of `V_v = span(v_1 … v_N)`.
    pub v_v_basis: Vec<Vec<f64>>,
    /// Basis of `V_α = ∩ Ker(α_i)`.
    pub v_alpha_basis: Vec<Vec<f64>>,
    /// Basis of `V_v ∩ V_α`.
    pub intersection_basis: Vec<Vec<f64>>,
    pub rank_a: usize,
    pub reduced: bool,
    pub dual_reduced: bool,
}

pub fn subspace_report(rep: &ReflectionRep) -> SubspaceReport {
    let vt = rep.v().transpose(); // rows are the v_j
    let info = linalg::rank_info(&vt, tol::RANK);
    let mut selected = info.selected_rows.clone();
    selected.sort_unstable();
    let v_v_basis: Vec<Vec<f64>> = selected.iter().map(|&j| vt.row(j).to_vec()).collect();
    let v_alpha_basis = linalg::null_space(rep.alpha(), tol::RANK);
    let intersection_basis = intersect_span_kernel(&v_v_basis, rep.alpha());
    let rank_a = rep.cartan().rank();
    SubspaceReport {
        reduced: v_alpha_basis.is_empty(),
        dual_reduced: v_v_basis.len() == rep.dim(),
        v_v_basis,
        v_alpha_basis,
        intersection_basis,
        rank_a,
    }
}

/// Basis of `span(basis) ∩ Ker(alpha)`.
fn intersect_span_kernel(basis: &[Vec<f64>], alpha: &Mat) -> Vec<Vec<f64>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let b = Mat::from_rows(basis).transpose(); // n × d
    let ab = alpha.mul(&b); // N × d
    linalg::null_space(&ab, tol::RANK)
        .into_iter()
        .map(|c| b.mul_vec(&c))
        .collect()
}

/// The adapted-basis block decomposition `V = U'' ⊕ (V_α∩V_v) ⊕ U' ⊕ U'''`
/// with the induced representations on `V_v`, `V/V_α`, and `V_v/(V_v∩V_α)`.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    /// Dimensions of `(U'', V_α∩V_v, U', U''')`.
    pub dims: [usize; 4],
    /// Columns are the adapted basis, in block order.
    pub basis: Mat,
    /// Generators conjugated into the adapted basis.
    pub conjugated: Vec<Mat>,
    /// Largest entry found in a must-be-zero block (or off-identity on a
    /// must-be-identity diagonal block).
    pub pattern_err: f64,
    /// Induced representation on `V_v` (blocks 2–3).
    pub rho_v: ReflectionRep,
    /// Induced representation on `V/V_α` (blocks 3–4).
    pub rho_alpha: ReflectionRep,
    /// Induced irreducible core on `V_v/(V_v∩V_α)` (block 3).
    pub rho_v_alpha: ReflectionRep,
}

impl BlockDecomposition {
    fn block_columns(&self, block: usize) -> Vec<Vec<f64>> {
        let start: usize = self.dims[..block].iter().sum();
        (start..start + self.dims[block]).map(|k| self.basis.col(k)).collect()
    }

    /// Basis of `U''` (complement of `V_α∩V_v` in `V_α`).
    pub fn basis_u_second(&self) -> Vec<Vec<f64>> {
        self.block_columns(0)
    }

    /// Basis of `V_α ∩ V_v`.
    pub fn basis_intersection(&self) -> Vec<Vec<f64>> {
        self.block_columns(1)
    }

    /// Basis of `U'` (complement of `V_α∩V_v` in `V_v`).
    pub fn basis_u_prime(&self) -> Vec<Vec<f64>> {
        self.block_columns(2)
    }

    /// Basis of `U'''` (complement of `V_α + V_v`).
    pub fn basis_u_third(&self) -> Vec<Vec<f64>> {
        self.block_columns(3)
    }
}

pub fn block_decomposition(rep: &ReflectionRep) -> Result<BlockDecomposition, ReflectionError> {
    let n = rep.dim();
    let sub = subspace_report(rep);
    let w0 = sub.intersection_basis.clone();
    let mut u_prime_full: Vec<Vec<f64>> = w0.clone();
    extend_with(&mut u_prime_full, &sub.v_v_basis);
    let u_prime: Vec<Vec<f64>> = u_prime_full[w0.len()..].to_vec();
    let mut u_second_full: Vec<Vec<f64>> = w0.clone();
    extend_with(&mut u_second_full, &sub.v_alpha_basis);
    let u_second: Vec<Vec<f64>> = u_second_full[w0.len()..].to_vec();
    let mut all: Vec<Vec<f64>> = Vec::new();
    all.extend(u_second.iter().cloned());
    all.extend(w0.iter().cloned());
    all.extend(u_prime.iter().cloned());
    let before = all.len();
    let coords: Vec<Vec<f64>> = (0..n)
        .map(|k| (0..n).map(|p| if p == k { 1.0 } else { 0.0 }).collect())
        .collect();
    extend_with(&mut all, &coords);
    let u_third: Vec<Vec<f64>> = all[before..].to_vec();
    let dims = [u_second.len(), w0.len(), u_prime.len(), u_third.len()];
    debug_assert_eq!(dims.iter().sum::<usize>(), n);
    let basis = Mat::from_rows(&all).transpose();
    let inv = linalg::inverse(&basis).ok_or(ReflectionError::BadParameter("basis singular"))?;
    let conjugated: Vec<Mat> =
        rep.generators().iter().map(|g| inv.mul(g).mul(&basis)).collect();
    let pattern_err = conjugated.iter().map(|m| block_pattern_err(m, &dims)).fold(0.0, f64::max);

    // Induced data in the adapted coordinates.
    let alpha_new = rep.alpha().mul(&basis); // rows: α_i in adapted coords
    let v_new = inv.mul(rep.v()); // cols: v_j in adapted coords
    let (b1, b2, b3) = (dims[0], dims[1], dims[2]);
    let cox = rep.coxeter().clone();
    let take = |lo: usize, hi: usize| -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
        let alpha_rows: Vec<Vec<f64>> = (0..rep.generator_count())
            .map(|i| (lo..hi).map(|k| alpha_new[(i, k)]).collect())
            .collect();
        let v_cols: Vec<Vec<f64>> = (0..rep.generator_count())
            .map(|j| (lo..hi).map(|k| v_new[(k, j)]).collect())
            .collect();
        (alpha_rows, v_cols)
    };
    let (a_v, v_v) = take(b1, b1 + b2 + b3);
    let rho_v = ReflectionRep::from_data(cox.clone(), &a_v, &v_v)?;
    let (a_q, v_q) = take(b1 + b2, n);
    let rho_alpha = ReflectionRep::from_data(cox.clone(), &a_q, &v_q)?;
    let (a_c, v_c) = take(b1 + b2, b1 + b2 + b3);
    let rho_v_alpha = ReflectionRep::from_data(cox, &a_c, &v_c)?;

    Ok(BlockDecomposition { dims, basis, conjugated, pattern_err, rho_v, rho_alpha, rho_v_alpha })
}

/// Greedily extend `basis` with candidates that increase its rank.
fn extend_with(basis: &mut Vec<Vec<f64>>, candidates: &[Vec<f64>]) {
    for cand in candidates {
        let mut trial = basis.clone();
        trial.push(cand.clone());
        let m = Mat::from_rows(&trial);
        if linalg::rank_info(&m, tol::RANK).rank == trial.len() {
            basis.push(cand.clone());
        }
    }
}

/// Deviation from the required block pattern: identity on diagonal
/// blocks 1, 2, 4; zeros below/left per the four-block triangular form.
fn block_pattern_err(m: &Mat, dims: &[usize; 4]) -> f64 {
    let starts = [0, dims[0], dims[0] + dims[1], dims[0] + dims[1] + dims[2]];
    let block_of = |k: usize| -> usize { (0..4).rev().find(|&b| k >= starts[b]).unwrap() };
    let n = m.rows();
    let mut err = 0.0_f64;
    for p in 0..n {
        for q in 0..n {
            let (bp, bq) = (block_of(p), block_of(q));
            let must_zero = matches!(
                (bp, bq),
                (0, 1) | (0, 2) | (0, 3) | (1, 0) | (2, 0) | (2, 1) | (3, 0) | (3, 1) | (3, 2)
            );
            let must_identity = bp == bq && (bp == 0 || bp == 1 || bp == 3);
            if must_zero {
                err = err.max(m[(p, q)].abs());
            } else if must_identity {
                let delta = if p == q { 1.0 } else { 0.0 };
                err = err.max((m[(p, q)] - delta).abs());
            }
        }
    }
    err
}

/// The explicit `Ã_{N−1}` model in the proof basis, plus the zigzag
/// element `ρ((s_1⋯s_{N−1})(s_{N−2}⋯s_1)s_N)`, which must equal
/// `Diag(a⁻¹, 1, …, 1, a)`.
pub fn atilde_model(n: usize, a: f64) -> Result<(ReflectionRep, Mat), ReflectionError> {
    if n < 3 {
        return Err(ReflectionError::BadParameter("need N ≥ 3"));
    }
    if a.is_nan() || a <= 0.0 {
        return Err(ReflectionError::BadParameter("need a > 0"));
    }
    if a == 1.0 {
        return Err(ReflectionError::BadParameter(
            "a = 1 is the zero-type point; the model needs negative type",
        ));
    }
    // α_i = e_i* − e_{i+1}*, α_N = −a⁻¹·e_1* + e_N*;
    // v_j = e_j − e_{j+1},   v_N = −a·e_1 + e_N.
    let mut alpha_rows = vec![vec![0.0; n]; n];
    let mut v_cols = vec![vec![0.0; n]; n];
    for i in 0..n - 1 {
        alpha_rows[i][i] = 1.0;
        alpha_rows[i][i + 1] = -1.0;
        v_cols[i][i] = 1.0;
        v_cols[i][i + 1] = -1.0;
    }
    alpha_rows[n - 1][0] = -1.0 / a;
    alpha_rows[n - 1][n - 1] = 1.0;
    v_cols[n - 1][0] = -a;
    v_cols[n - 1][n - 1] = 1.0;
    let cox = crate::coxeter::catalog::affine(crate::coxeter::AffineFamily::ATilde(n as u32 - 1));
    let rep = ReflectionRep::from_data(cox, &alpha_rows, &v_cols)?;
    let mut word: Vec<usize> = (0..n - 1).collect();
    word.extend((0..n - 2).rev());
    word.push(n - 1);
    let zigzag = rep.word_matrix(&word);
    Ok((rep, zigzag))
}

/// Spectral data for the rank-2 infinite dihedral generator product.
#[derive(Clone, Debug)]
pub struct ProximalData {
    /// `t = A[1][2]·A[2][1]`.
    pub t: f64,
    /// `ρ(s_1 s_2)` on `V_v` in the basis `(v_1, v_2)`.
    pub matrix: Mat,
    pub eigen_plus: f64,
    pub eigen_minus: f64,
    /// Attracting/repelling directions in `(v_1, v_2)` coordinates.
    pub x_plus: [f64; 2],
    pub x_minus: [f64; 2],
}

/// Either genuinely proximal (`t > 4`) or in the unipotent/parabolic
/// regime (`t ≤ 4`).
#[derive(Clone, Debug)]
pub enum ProximalOutcome {
    Proximal(ProximalData),
    Unipotent,
}

/// `ρ(s_1 s_2)` data for a 2×2 Cartan matrix on an ∞-pair.
pub fn n2_proximal(a: &CartanMatrix) -> Result<ProximalOutcome, ReflectionError> {
    if a.size() != 2 || a.coxeter().label(0, 1) != CoxLabel::Infinite {
        return Err(ReflectionError::BadParameter("need a 2×2 matrix with m[1][2] = ∞"));
    }
    let (a12, a21) = (a.at(0, 1), a.at(1, 0));
    let t = a12 * a21;
    if t <= 4.0 {
        return Ok(ProximalOutcome::Unipotent);
    }
    let s = libm::sqrt(t * (t - 4.0));
    let matrix = Mat::from_rows(&[vec![-1.0 + t, a12], vec![-a21, -1.0]]);
    Ok(ProximalOutcome::Proximal(ProximalData {
        t,
        matrix,
        eigen_plus: 0.5 * (t - 2.0 + s),
        eigen_minus: 0.5 * (t - 2.0 - s),
        x_plus: [t + s, -2.0 * a21],
        x_minus: [t - s, -2.0 * a21],
    }))
}
