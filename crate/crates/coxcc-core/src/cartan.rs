//! Cartan matrices for Coxeter groups.
//!
//! An `N × N` real matrix `A` is *weakly compatible* with `W_S` when its
//! diagonal is 2, it has the zero / negativity pattern of the diagram,
//! and `A[i][j]·A[j][i] = 4 cos²(π/m[i][j])` on finite edges; it is
//! *compatible* when additionally `A[i][j]·A[j][i] ≥ 4` on ∞-edges.
//! Compatible matrices classify into negative / zero / positive type by
//! the lowest eigenvalue, computed here along two independent routes
//! (Perron–Frobenius power iteration on `2·Id − A` and a dense QR
//! eigensolve) that are required to agree.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{irreducible_components, CoxLabel, CoxeterMatrix};
use crate::linalg::{self, Mat};
use crate::tol;

/// A real matrix paired with the Coxeter matrix it is measured against.
#[derive(Clone, Debug)]
pub struct CartanMatrix {
    coxeter: CoxeterMatrix,
    entries: Mat,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CartanError {
    /// Matrix shape does not match the Coxeter matrix.
    ShapeMismatch,
    /// Operation needs a connected diagram.
    Disconnected,
    /// Operation needs a (weakly) compatible matrix; first violation attached.
    Incompatible(Violation),
    /// Named precondition failed.
    Precondition(&'static str),
    /// Parameter out of range (e.g. `a ≤ 0`, `N < 3`, negative λ).
    BadParameter(&'static str),
    /// λ map keys must be exactly the ∞-labeled pairs.
    LambdaKeys,
    /// Eigensolver trouble.
    Eigen(linalg::EigenError),
}

impl core::fmt::Display for CartanError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CartanError::ShapeMismatch => write!(f, "matrix shape does not match Coxeter matrix"),
            CartanError::Disconnected => {
                write!(f, "diagram is disconnected; apply per component")
            }
            CartanError::Incompatible(v) => write!(f, "matrix not compatible: {v}"),
            CartanError::Precondition(what) => write!(f, "precondition violated: {what}"),
            CartanError::BadParameter(what) => write!(f, "bad parameter: {what}"),
            CartanError::LambdaKeys => {
                write!(f, "lambda must be keyed exactly by the infinite-labeled pairs")
            }
            CartanError::Eigen(e) => write!(f, "eigensolver: {e}"),
        }
    }
}

impl core::error::Error for CartanError {}

impl From<linalg::EigenError> for CartanError {
    fn from(e: linalg::EigenError) -> Self {
        CartanError::Eigen(e)
    }
}

/// One violated compatibility clause.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub clause: Clause,
    pub i: usize,
    pub j: usize,
    pub got: f64,
    pub expected: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// `A[i][i] = 2`.
    Diagonal,
    /// `A[i][j] = 0` exactly when `m[i][j] = 2`.
    ZeroPattern,
    /// `A[i][j] < 0` when `m[i][j] ≠ 2`.
    Negativity,
    /// `A[i][j]·A[j][i] = 4cos²(π/m)` for finite `m > 2`.
    FiniteProduct,
    /// `A[i][j]·A[j][i] ≥ 4` for `m = ∞`.
    InfiniteProduct,
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let (i, j) = (self.i + 1, self.j + 1);
        match self.clause {
            Clause::Diagonal => write!(f, "A[{i}][{i}] = {} (must be 2)", self.got),
            Clause::ZeroPattern => {
                write!(f, "A[{i}][{j}] = {} but m[{i}][{j}] = 2 requires 0", self.got)
            }
            Clause::Negativity => {
                write!(f, "A[{i}][{j}] = {} must be negative (m[{i}][{j}] ≠ 2)", self.got)
            }
            Clause::FiniteProduct => write!(
                f,
                "A[{i}][{j}]·A[{j}][{i}] = {} (must equal 4cos²(π/m) = {})",
                self.got, self.expected
            ),
            Clause::InfiniteProduct => write!(
                f,
                "A[{i}][{j}]·A[{j}][{i}] = {} (must be ≥ 4 on an ∞-pair)",
                self.got
            ),
        }
    }
}

/// Compatibility level to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Weak,
    Full,
}

/// Type of a compatible matrix: sign of the lowest eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixType {
    Positive,
    Zero,
    Negative,
}

impl core::fmt::Display for MatrixType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MatrixType::Positive => write!(f, "positive"),
            MatrixType::Zero => write!(f, "zero"),
            MatrixType::Negative => write!(f, "negative"),
        }
    }
}

/// Perron–Frobenius data and the resulting type classification.
#[derive(Clone, Debug)]
pub struct TypeReport {
    pub lowest_eigenvalue: f64,
    /// Positive eigenvector of `2·Id − A` for its largest eigenvalue,
    /// normalized to max entry 1.
    pub pf_vector: Vec<f64>,
    pub matrix_type: MatrixType,
    pub tolerance_used: f64,
}

/// Conjugation-invariant data: pair products on diagram edges and cycle
/// products over a fundamental cycle basis.
#[derive(Clone, Debug)]
pub struct EquivalenceInvariants {
    /// `((i, j), A[i][j]·A[j][i])` for diagram edges `i < j`.
    pub pair_products: Vec<((usize, usize), f64)>,
    /// `(cycle vertices, ∏ A[forward] / ∏ A[backward])`, one entry per
    /// independent diagram cycle. Cycles start at their smallest vertex
    /// with the smaller neighbor second.
    pub cycle_products: Vec<(Vec<usize>, f64)>,
}

impl CartanMatrix {
    pub fn new(coxeter: CoxeterMatrix, entries: Mat) -> Result<Self, CartanError> {
        if !entries.is_square() || entries.rows() != coxeter.size() {
            return Err(CartanError::ShapeMismatch);
        }
        Ok(CartanMatrix { coxeter, entries })
    }

    pub fn size(&self) -> usize {
        self.coxeter.size()
    }

    pub fn coxeter(&self) -> &CoxeterMatrix {
        &self.coxeter
    }

    pub fn entries(&self) -> &Mat {
        &self.entries
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn det(&self) -> f64 {
        linalg::det(&self.entries)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    pub fn is_weakly_compatible(&self) -> bool {
        validate(self, Level::Weak).is_empty()
    }

    pub fn is_compatible(&self) -> bool {
        validate(self, Level::Full).is_empty()
    }

    /// Restriction to a generator subset, Coxeter matrix included.
    pub fn submatrix(&self, subset: &[usize]) -> Result<CartanMatrix, CartanError> {
        if subset.is_empty() {
            return Err(CartanError::BadParameter("empty subset"));
        }
        let cox = self.coxeter.induced(subset);
        let entries =
            Mat::from_fn(subset.len(), subset.len(), |i, j| self.at(subset[i], subset[j]));
        CartanMatrix::new(cox, entries)
    }

    /// Conjugate by the positive diagonal `D = diag(d)`: `A ↦ D·A·D⁻¹`.
    pub fn diagonal_conjugate(&self, d: &[f64]) -> Result<CartanMatrix, CartanError> {
        if d.len() != self.size() || d.iter().any(|&x| x <= 0.0) {
            return Err(CartanError::BadParameter("diagonal must be positive of size N"));
        }
        let entries =
            Mat::from_fn(self.size(), self.size(), |i, j| d[i] * self.at(i, j) / d[j]);
        CartanMatrix::new(self.coxeter.clone(), entries)
    }
}

/// `4cos²(π/m)`, with the `m = 2` case pinned to exactly zero.
pub fn pair_product_target(m: u32) -> f64 {
    if m == 2 {
        0.0
    } else {
        let c = libm::cos(core::f64::consts::PI / m as f64);
        4.0 * c * c
    }
}

/// Check the compatibility clauses and return every violation
/// (empty = compatible at the requested level). Product identities are
/// checked to `1e−9` absolute.
pub fn validate(a: &CartanMatrix, level: Level) -> Vec<Violation> {
    let n = a.size();
    let w = a.coxeter();
    let mut out = Vec::new();
    for i in 0..n {
        if (a.at(i, i) - 2.0).abs() > tol::ENTRY {
            out.push(Violation { clause: Clause::Diagonal, i, j: i, got: a.at(i, i), expected: 2.0 });
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let entry = a.at(i, j);
            match w.label(i, j) {
                CoxLabel::Finite(2) => {
                    if entry.abs() > tol::ENTRY {
                        out.push(Violation {
                            clause: Clause::ZeroPattern,
                            i,
                            j,
                            got: entry,
                            expected: 0.0,
                        });
                    }
                }
                _ => {
                    if entry >= 0.0 {
                        out.push(Violation {
                            clause: Clause::Negativity,
                            i,
                            j,
                            got: entry,
                            expected: f64::NEG_INFINITY,
                        });
                    }
                }
            }
        }
    }
    for (i, j, label) in w.edges() {
        let product = a.at(i, j) * a.at(j, i);
        match label {
            CoxLabel::Finite(m) => {
                let target = pair_product_target(m);
                if (product - target).abs() > tol::ENTRY {
                    out.push(Violation {
                        clause: Clause::FiniteProduct,
                        i,
                        j,
                        got: product,
                        expected: target,
                    });
                }
            }
            CoxLabel::Infinite => {
                if level == Level::Full && product < 4.0 - tol::ENTRY {
                    out.push(Violation {
                        clause: Clause::InfiniteProduct,
                        i,
                        j,
                        got: product,
                        expected: 4.0,
                    });
                }
            }
        }
    }
    out
}

/// Type classification of a matrix whose diagram is connected.
///
/// The lowest eigenvalue is obtained as `2 − λ_max(2·Id − A)` by power
/// iteration and cross-checked against the minimum real part of the
/// dense spectrum of `A`; disagreement is an error, not a silent pick.
pub fn matrix_type(a: &CartanMatrix) -> Result<TypeReport, CartanError> {
    let n = a.size();
    if irreducible_components(a.coxeter()).len() != 1 {
        return Err(CartanError::Disconnected);
    }
    let a_prime = Mat::from_fn(n, n, |i, j| {
        let v = if i == j { 2.0 - a.at(i, j) } else { -a.at(i, j) };
        // Parasitic negatives from rounding are clamped; weak
        // compatibility makes 2·Id − A entrywise nonnegative.
        if v < 0.0 && v > -tol::ENTRY {
            0.0
        } else {
            v
        }
    });
    for i in 0..n {
        for j in 0..n {
            if a_prime[(i, j)] < 0.0 {
                return Err(CartanError::Precondition("2·Id − A must be entrywise nonnegative"));
            }
        }
    }
    let pf = linalg::perron_frobenius(&a_prime)?;
    let lowest = 2.0 - pf.value;
    let dense_lowest = linalg::min_real_eigenvalue(a.entries())?;
    let scale = a.entries().norm_inf().max(1.0);
    if (lowest - dense_lowest).abs() > 100.0 * tol::ZERO_TYPE * scale {
        return Err(CartanError::Eigen(linalg::EigenError::RouteDisagreement));
    }
    let tolerance = tol::ZERO_TYPE * scale;
    let matrix_type = if lowest.abs() <= tolerance {
        MatrixType::Zero
    } else if lowest < 0.0 {
        MatrixType::Negative
    } else {
        MatrixType::Positive
    };
    Ok(TypeReport { lowest_eigenvalue: lowest, pf_vector: pf.vector, matrix_type, tolerance_used: tolerance })
}

/// Depth-first spanning tree of a connected diagram; returns
/// `parent[v]` (`usize::MAX` at root 0), descending into the smallest
/// unvisited neighbor first. Depth-first keeps chord edges (where the
/// conjugation class carries its skew) out of the tree on path-plus-
/// chord diagrams, so the standard skewed families are fixed points of
/// [`normalize`].
fn spanning_tree(w: &CoxeterMatrix) -> Result<Vec<usize>, CartanError> {
    let n = w.size();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(&v) = stack.last() {
        let next = w.neighbors(v).into_iter().find(|&u| !seen[u]);
        match next {
            Some(u) => {
                seen[u] = true;
                parent[u] = v;
                count += 1;
                stack.push(u);
            }
            None => {
                stack.pop();
            }
        }
    }
    if count != n {
        return Err(CartanError::Disconnected);
    }
    Ok(parent)
}

/// Canonical representative of the positive-diagonal conjugation class:
/// rescale so that `A[i][j] = A[j][i]` on every edge of a BFS spanning
/// tree rooted at the smallest vertex. Idempotent; equivalent inputs map
/// to equal outputs.
pub fn normalize(a: &CartanMatrix) -> Result<CartanMatrix, CartanError> {
    if let Some(v) = validate(a, Level::Weak).into_iter().next() {
        return Err(CartanError::Incompatible(v));
    }
    let w = a.coxeter();
    let parent = spanning_tree(w)?;
    let n = a.size();
    // d[child] = d[parent] · sqrt(A[p][c] / A[c][p]); BFS order resolves
    // parents before children.
    let mut d = vec![0.0; n];
    d[0] = 1.0;
    let mut order: Vec<usize> = vec![0];
    let mut idx = 0;
    while idx < order.len() {
        let p = order[idx];
        idx += 1;
        for (c, &par) in parent.iter().enumerate() {
            if par == p {
                d[c] = d[p] * libm::sqrt(a.at(p, c) / a.at(c, p));
                order.push(c);
            }
        }
    }
    a.diagonal_conjugate(&d)
}

/// Conjugation invariants: pair products on edges, cycle products over a
/// fundamental cycle basis from the BFS spanning tree.
pub fn equivalence_invariants(a: &CartanMatrix) -> Result<EquivalenceInvariants, CartanError> {
    if let Some(v) = validate(a, Level::Weak).into_iter().next() {
        return Err(CartanError::Incompatible(v));
    }
    let w = a.coxeter();
    let pair_products = w
        .edges()
        .iter()
        .map(|&(i, j, _)| ((i, j), a.at(i, j) * a.at(j, i)))
        .collect();
    let mut cycle_products = Vec::new();
    for comp in irreducible_components(w) {
        if comp.vertices.len() < 3 {
            continue;
        }
        let verts = &comp.vertices;
        let sub = w.induced(verts);
        let parent = spanning_tree(&sub)?;
        let depth_of = |mut v: usize| {
            let mut d = 0;
            while parent[v] != usize::MAX {
                v = parent[v];
                d += 1;
            }
            d
        };
        for (li, lj, _) in sub.edges() {
            if parent[lj] == li || parent[li] == lj {
                continue; // tree edge
            }
            // Cycle through the lca: up-path from li, down-path to lj.
            let (mut u, mut v) = (li, lj);
            let mut up = vec![u];
            let mut vp = vec![v];
            let (mut du, mut dv) = (depth_of(u), depth_of(v));
            while du > dv {
                u = parent[u];
                up.push(u);
                du -= 1;
            }
            while dv > du {
                v = parent[v];
                vp.push(v);
                dv -= 1;
            }
            while u != v {
                u = parent[u];
                v = parent[v];
                up.push(u);
                vp.push(v);
            }
            let mut cycle: Vec<usize> = up;
            cycle.extend(vp.into_iter().rev().skip(1));
            canonicalize_cycle(&mut cycle);
            let mut fwd = 1.0;
            let mut bwd = 1.0;
            for k in 0..cycle.len() {
                let x = verts[cycle[k]];
                let y = verts[cycle[(k + 1) % cycle.len()]];
                fwd *= a.at(x, y);
                bwd *= a.at(y, x);
            }
            let global: Vec<usize> = cycle.iter().map(|&l| verts[l]).collect();
            cycle_products.push((global, fwd / bwd));
        }
    }
    Ok(EquivalenceInvariants { pair_products, cycle_products })
}

/// Rotate/reflect so the cycle starts at its smallest vertex and runs
/// toward its smaller neighbor first.
fn canonicalize_cycle(cycle: &mut [usize]) {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(start);
    if k >= 3 && cycle[1] > cycle[k - 1] {
        cycle[1..].reverse();
    }
}

/// Tits geometric representation matrix: `−2cos(π/m)` off-diagonal,
/// `−2` on ∞-pairs.
pub fn tits_cartan(w: &CoxeterMatrix) -> CartanMatrix {
    let n = w.size();
    let entries = Mat::from_fn(n, n, |i, j| {
        if i == j {
            2.0
        } else {
            match w.label(i, j) {
                CoxLabel::Finite(2) => 0.0,
                CoxLabel::Finite(m) => -2.0 * libm::cos(core::f64::consts::PI / m as f64),
                CoxLabel::Infinite => -2.0,
            }
        }
    });
    CartanMatrix::new(w.clone(), entries).expect("square by construction")
}

/// Deformed Tits matrix: `−(2 + λ[i][j])` on ∞-pairs, Tits elsewhere.
/// `lambda` must list exactly the ∞-pairs `(i, j)` with `i < j`.
pub fn deformed_tits_cartan(
    w: &CoxeterMatrix,
    lambda: &[((usize, usize), f64)],
) -> Result<CartanMatrix, CartanError> {
    let pairs = w.infinite_pairs();
    if lambda.len() != pairs.len() {
        return Err(CartanError::LambdaKeys);
    }
    for &((i, j), l) in lambda {
        if !pairs.contains(&(i, j)) {
            return Err(CartanError::LambdaKeys);
        }
        if l.is_nan() || l < 0.0 {
            return Err(CartanError::BadParameter("lambda must be nonnegative"));
        }
    }
    let mut a = tits_cartan(w);
    for &((i, j), l) in lambda {
        a.entries[(i, j)] = -(2.0 + l);
        a.entries[(j, i)] = -(2.0 + l);
    }
    Ok(a)
}

fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while out.len() < count {
        if (2..candidate).take_while(|d| d * d <= candidate).all(|d| !candidate.is_multiple_of(d)) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

/// Generic convex cocompact Cartan matrix for an admissible group:
/// symmetric `−2.5` on ∞-pairs (any value < −2 works), and the label-3
/// pairs skewed by distinct primes `t` in lexicographic edge order:
/// `A[i][j] = −t`, `A[j][i] = −1/t`. Products of distinct primes over
/// disjoint edge sets never cancel, so no `Ã_k` submatrix has zero type.
pub fn generic_cc_cartan(w: &CoxeterMatrix) -> Result<CartanMatrix, CartanError> {
    match crate::coxeter::admits_cc_reflection_rep(w) {
        Ok(true) => {}
        Ok(false) => {
            return Err(CartanError::Precondition("conditions ¬(IC) and (Ã) must hold"))
        }
        Err(_) => return Err(CartanError::Precondition("W must be irreducible and infinite")),
    }
    let mut a = tits_cartan(w);
    for (i, j) in w.infinite_pairs() {
        a.entries[(i, j)] = -2.5;
        a.entries[(j, i)] = -2.5;
    }
    let label3: Vec<(usize, usize)> = w
        .edges()
        .into_iter()
        .filter(|&(_, _, l)| l == CoxLabel::Finite(3))
        .map(|(i, j, _)| (i, j))
        .collect();
    let ts = primes(label3.len());
    for ((i, j), t) in label3.into_iter().zip(ts) {
        a.entries[(i, j)] = -(t as f64);
        a.entries[(j, i)] = -1.0 / t as f64;
    }
    Ok(a)
}

/// The cyclic `Ã_{N−1}` Cartan family: `2` on the diagonal, `−1` on the
/// cycle edges except the corner entries `A[0][N−1] = −a`,
/// `A[N−1][0] = −a⁻¹`. Its determinant is `2 − a − a⁻¹`: zero type
/// exactly at `a = 1`, negative type otherwise.
pub fn affine_atilde_cartan(n: usize, a: f64) -> Result<CartanMatrix, CartanError> {
    if n < 3 {
        return Err(CartanError::BadParameter("need N ≥ 3"));
    }
    if a.is_nan() || a <= 0.0 {
        return Err(CartanError::BadParameter("need a > 0"));
    }
    let cox = crate::coxeter::catalog::affine(crate::coxeter::AffineFamily::ATilde(n as u32 - 1));
    let entries = Mat::from_fn(n, n, |i, j| {
        if i == j {
            2.0
        } else if j == i + 1 || i == j + 1 {
            -1.0
        } else if (i, j) == (0, n - 1) {
            -a
        } else if (i, j) == (n - 1, 0) {
            -1.0 / a
        } else {
            0.0
        }
    });
    CartanMatrix::new(cox, entries)
}

/// Whether `A` is equivalent to a symmetric matrix: every cycle product
/// equals 1 (to `1e−9`).
pub fn is_symmetrizable(a: &CartanMatrix) -> Result<bool, CartanError> {
    let inv = equivalence_invariants(a)?;
    Ok(inv.cycle_products.iter().all(|(_, r)| (r - 1.0).abs() <= tol::ENTRY))
}

/// Format a violation list for diagnostics.
pub fn describe_violations(violations: &[Violation]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for v in violations {
        let _ = writeln!(s, "- {v}");
    }
    s
}
