//! Concrete cones, pruned domains, orbits, and rendering.
//!
//! The fundamental cone is `Δ̃ = {x | α_i(x) ≤ 0 ∀i}`; its pruning by
//! the dual generator cone `D̃* = Σ ℝ≥0·v_j` gives `Σ̃` (coordinates
//! `t_j ≥ 0`) and the relatively open `Σ̃♭` (`t_j > 0`). The orbit of
//! the fundamental tile under breadth-first words drives both the
//! word-length checks and the SVG tilings.

mod hilbert;
mod orbit;
mod svg;

pub use hilbert::hilbert_distance;
pub use orbit::{
    delta_membership_check, length_property_check, orbit, orbit_with_dedup, DeltaSampleReport,
    LengthPropertyReport, OrbitElement, Tiling, MAX_ORBIT_DEPTH, MAX_ORBIT_ELEMENTS,
};
pub use svg::{render_svg, ChartSpec, RenderReport, MAX_RENDER_DEPTH};

use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{matrix_type, CartanError, CartanMatrix, MatrixType};
use crate::coxeter::{
    classify_connected, condition_ic, irreducible_components, CoxeterMatrix, GroupClass,
};
use crate::linalg::{self, Mat};
use crate::reflection::{build_rep, ReflectionError, ReflectionRep};
use crate::tol;

#[derive(Clone, Debug)]
pub enum GeometryError {
    DepthBudget { depth: usize, max: usize },
    /// The orbit grew past the enumeration budget before reaching `depth`.
    OrbitBudget { elements: usize, depth: usize },
    /// The representation fails its own verification report.
    RepFailsVerification,
    /// The `v_j` are linearly dependent where independence is needed.
    DependentVectors,
    UnsupportedDimension { n: usize },
    /// Chart or slice covector does not cut the scene properly.
    DegenerateChart(&'static str),
    NotConvex,
    PointOutside,
    Precondition(&'static str),
    Cartan(CartanError),
    Reflection(ReflectionError),
}

impl core::fmt::Display for GeometryError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GeometryError::DepthBudget { depth, max } => {
                write!(f, "depth {depth} exceeds budget {max}")
            }
            GeometryError::OrbitBudget { elements, depth } => {
                write!(f, "orbit exceeds {elements} elements before depth {depth}")
            }
            GeometryError::RepFailsVerification => {
                write!(f, "representation fails verification")
            }
            GeometryError::DependentVectors => {
                write!(f, "vectors v_1..v_N are linearly dependent")
            }
            GeometryError::UnsupportedDimension { n } => {
                write!(f, "unsupported dimension {n} (need 3, or 4 with a slice)")
            }
            GeometryError::DegenerateChart(what) => write!(f, "degenerate chart: {what}"),
            GeometryError::NotConvex => write!(f, "polygon is not convex"),
            GeometryError::PointOutside => write!(f, "point on or outside the boundary"),
            GeometryError::Precondition(what) => write!(f, "precondition violated: {what}"),
            GeometryError::Cartan(e) => write!(f, "{e}"),
            GeometryError::Reflection(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for GeometryError {}

impl From<CartanError> for GeometryError {
    fn from(e: CartanError) -> Self {
        GeometryError::Cartan(e)
    }
}

impl From<ReflectionError> for GeometryError {
    fn from(e: ReflectionError) -> Self {
        GeometryError::Reflection(e)
    }
}

/// A polyhedral cone, either cut out by covectors or spanned by vectors.
#[derive(Clone, Debug)]
pub enum PolyCone {
    /// `{x | c(x) ≤ 0}` for every covector `c`.
    ByInequalities(Vec<Vec<f64>>),
    /// Nonnegative span of the given vectors.
    ByGenerators(Vec<Vec<f64>>),
}

impl PolyCone {
    /// The fundamental cone `Δ̃` of a representation.
    pub fn fundamental_cone(rep: &ReflectionRep) -> PolyCone {
        PolyCone::ByInequalities(
            (0..rep.generator_count()).map(|i| rep.alpha_row(i).to_vec()).collect(),
        )
    }

    /// The dual generator cone `D̃* = Σ ℝ≥0·v_j`.
    pub fn dual_generator_cone(rep: &ReflectionRep) -> PolyCone {
        PolyCone::ByGenerators((0..rep.generator_count()).map(|j| rep.v_col(j)).collect())
    }

    /// Membership test with slack [`tol::MEMBERSHIP`]. For a generator
    /// cone the vectors must be linearly independent; returns `None`
    /// when the test cannot decide (dependent generators).
    pub fn contains(&self, x: &[f64]) -> Option<bool> {
        match self {
            PolyCone::ByInequalities(covectors) => Some(covectors.iter().all(|c| {
                let value: f64 = c.iter().zip(x).map(|(a, b)| a * b).sum();
                value <= tol::MEMBERSHIP * scale_of(c, x)
            })),
            PolyCone::ByGenerators(gens) => {
                let m = Mat::from_rows(gens).transpose();
                if linalg::rank_info(&m, tol::RANK).rank != gens.len() {
                    return None;
                }
                match linalg::coords_in_columns(&m, x, tol::RANK) {
                    Some(t) => Some(t.iter().all(|&c| c >= -tol::MEMBERSHIP * norm_max(x))),
                    None => Some(false), // not even in the span
                }
            }
        }
    }
}

fn scale_of(c: &[f64], x: &[f64]) -> f64 {
    norm_max(c) * norm_max(x)
}

fn norm_max(v: &[f64]) -> f64 {
    v.iter().fold(1.0_f64, |m, x| m.max(x.abs()))
}

/// The pruned fundamental domain of a representation whose vectors are
/// linearly independent: membership in `Σ̃` / `Σ̃♭` via the coordinates
/// `x = Σ t_j v_j`, plus an interior sample point from the
/// Perron–Frobenius vector.
pub struct PrunedDomain {
    rep: ReflectionRep,
    /// Left inverse of the `n × N` vector matrix.
    v_pinv: Mat,
    interior_point: Vec<f64>,
}

impl PrunedDomain {
    pub fn new(rep: &ReflectionRep) -> Result<PrunedDomain, GeometryError> {
        let v = rep.v();
        let n_gens = rep.generator_count();
        if linalg::rank_info(&v.transpose(), tol::RANK).rank != n_gens {
            return Err(GeometryError::DependentVectors);
        }
        let vt = v.transpose();
        let gram = vt.mul(v);
        let gram_inv =
            linalg::inverse(&gram).ok_or(GeometryError::DependentVectors)?;
        let v_pinv = gram_inv.mul(&vt);
        let report = matrix_type(rep.cartan())?;
        if report.matrix_type != MatrixType::Negative {
            return Err(GeometryError::Precondition("matrix must be of negative type"));
        }
        let mut interior_point = vec![0.0; rep.dim()];
        for (j, &t) in report.pf_vector.iter().enumerate() {
            let vj = rep.v_col(j);
            for (p, xv) in interior_point.iter_mut().enumerate() {
                *xv += t * vj[p];
            }
        }
        Ok(PrunedDomain { rep: rep.clone(), v_pinv, interior_point })
    }

    /// Coordinates `t` with `x = Σ t_j v_j`; `None` when `x` leaves the
    /// span of the `v_j`.
    pub fn t_coords(&self, x: &[f64]) -> Option<Vec<f64>> {
        let t = self.v_pinv.mul_vec(x);
        let recon = self.rep.v().mul_vec(&t);
        let err = recon.iter().zip(x).fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
        if err <= tol::MEMBERSHIP * norm_max(x) * 10.0 {
            Some(t)
        } else {
            None
        }
    }

    fn alpha_ok(&self, x: &[f64]) -> bool {
        (0..self.rep.generator_count())
            .all(|i| self.rep.pair(i, x) <= tol::MEMBERSHIP * norm_max(x))
    }

    /// `x ∈ Σ̃`: all `α_i(x) ≤ 0` and all `t_j ≥ 0` (with slack).
    pub fn contains_sigma(&self, x: &[f64]) -> bool {
        match self.t_coords(x) {
            Some(t) => {
                self.alpha_ok(x)
                    && t.iter().all(|&c| c >= -tol::MEMBERSHIP * norm_max(x))
            }
            None => false,
        }
    }

    /// `x ∈ Σ̃♭`: all `α_i(x) ≤ 0` and all `t_j > 0` strictly.
    pub fn contains_sigma_flat(&self, x: &[f64]) -> bool {
        match self.t_coords(x) {
            Some(t) => {
                self.alpha_ok(x) && t.iter().all(|&c| c > tol::MEMBERSHIP * norm_max(x))
            }
            None => false,
        }
    }

    /// Interior sample `x₀ = Σ t_j v_j` from the Perron–Frobenius vector.
    pub fn interior_point(&self) -> &[f64] {
        &self.interior_point
    }

    pub fn rep(&self) -> &ReflectionRep {
        &self.rep
    }
}

/// How the boundary contact arose.
#[derive(Clone, Debug)]
pub enum BoundaryKind {
    /// Disjoint commuting infinite subsets; the point is built from the
    /// Perron–Frobenius vector of the irreducible side `s_prime` and is
    /// stabilized by the commuting side `s_perp`.
    InfiniteCommuting { s_prime: Vec<usize>, s_perp: Vec<usize> },
    /// A connected subset with zero-type Cartan submatrix.
    ZeroType { subset: Vec<usize> },
}

/// Witness for `Σ ∩ ∂Ω_Vin ≠ ∅`.
#[derive(Clone, Debug)]
pub struct BoundaryWitness {
    pub kind: BoundaryKind,
    /// The boundary point (in the representation's coordinates).
    pub point: Vec<f64>,
    /// `α_i(point)` for every generator.
    pub alpha_values: Vec<f64>,
    /// Generators fixing the point (`α_i(point) = 0`).
    pub stabilizer: Vec<usize>,
    pub stabilizer_infinite: bool,
}

/// Outcome of [`sigma_boundary_test`].
#[derive(Clone, Debug)]
pub struct SigmaBoundary {
    pub touches_boundary: bool,
    pub witness: Option<BoundaryWitness>,
}

/// Does the pruned fundamental domain touch the boundary of the Vinberg
/// domain? Happens exactly when (IC) holds or some connected subset has
/// a zero-type Cartan submatrix; in either case an explicit boundary
/// point is produced from a Perron–Frobenius vector and verified.
pub fn sigma_boundary_test(
    w: &CoxeterMatrix,
    a: &CartanMatrix,
) -> Result<SigmaBoundary, GeometryError> {
    if irreducible_components(w).len() != 1 {
        return Err(GeometryError::Precondition("W must be irreducible"));
    }
    if !a.is_compatible() {
        return Err(GeometryError::Precondition("A must be compatible"));
    }
    let whole = matrix_type(a)?;
    if whole.matrix_type != MatrixType::Negative {
        return Err(GeometryError::Precondition("A must be of negative type"));
    }
    // Reduced and dual-reduced model in dimension rank(A).
    let rep = build_rep(a, a.rank())?;

    let (ic, ic_witness) = condition_ic(w);
    if ic {
        let (s1, s2) = ic_witness.expect("witness accompanies (IC)");
        // s2 is irreducible and infinite; everything in s1 commutes with it.
        let witness = boundary_point(&rep, a, &s2, BoundaryKind::InfiniteCommuting {
            s_prime: s2.clone(),
            s_perp: s1,
        })?;
        return Ok(SigmaBoundary { touches_boundary: true, witness: Some(witness) });
    }
    let n = w.size();
    for mask in 1u32..(1u32 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub_cox = w.induced(&subset);
        if irreducible_components(&sub_cox).len() != 1 {
            continue;
        }
        let sub = a.submatrix(&subset)?;
        if matrix_type(&sub)?.matrix_type == MatrixType::Zero {
            let witness =
                boundary_point(&rep, a, &subset, BoundaryKind::ZeroType { subset: subset.clone() })?;
            return Ok(SigmaBoundary { touches_boundary: true, witness: Some(witness) });
        }
    }
    Ok(SigmaBoundary { touches_boundary: false, witness: None })
}

/// `x = Σ_{j ∈ subset} t_j v_j` from the Perron–Frobenius vector of the
/// subset's Cartan submatrix, verified against the wall inequalities.
fn boundary_point(
    rep: &ReflectionRep,
    a: &CartanMatrix,
    subset: &[usize],
    kind: BoundaryKind,
) -> Result<BoundaryWitness, GeometryError> {
    let sub = a.submatrix(subset)?;
    let report = matrix_type(&sub)?;
    let mut point = vec![0.0; rep.dim()];
    for (local, &j) in subset.iter().enumerate() {
        let vj = rep.v_col(j);
        for (p, xv) in point.iter_mut().enumerate() {
            *xv += report.pf_vector[local] * vj[p];
        }
    }
    let alpha_values: Vec<f64> =
        (0..rep.generator_count()).map(|i| rep.pair(i, &point)).collect();
    let zero_tol = 1e-8 * norm_max(&point);
    if alpha_values.iter().any(|&v| v > zero_tol) {
        return Err(GeometryError::Precondition("boundary point leaves the fundamental cone"));
    }
    let stabilizer: Vec<usize> = alpha_values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v.abs() <= zero_tol)
        .map(|(i, _)| i)
        .collect();
    let stabilizer_infinite = if stabilizer.is_empty() {
        false
    } else {
        rep.coxeter().induced(&stabilizer).is_infinite()
    };
    Ok(BoundaryWitness { kind, point, alpha_values, stabilizer, stabilizer_infinite })
}

/// Faces of the fundamental tile whose wall subgroup is infinite (these
/// are pruned away from `Δ♭`). A face is named by its wall set; the
/// empty set (tile interior) is always kept.
pub fn infinite_stabilizer_wall_sets(w: &CoxeterMatrix) -> Vec<Vec<usize>> {
    let n = w.size();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub = w.induced(&subset);
        let infinite = irreducible_components(&sub)
            .iter()
            .any(|c| !matches!(classify_connected(&sub.induced(&c.vertices)), Ok(GroupClass::Spherical(_))));
        if infinite {
            out.push(subset);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::generic_cc_cartan;
    use crate::decision::tests::{ex92_cartan, ex93_cartan};

    #[test]
    fn sigma_boundary_on_ex93_at_one() {
        let a = ex93_cartan(1.0, 1.0);
        let res = sigma_boundary_test(a.coxeter(), &a).unwrap();
        assert!(res.touches_boundary);
        let w = res.witness.unwrap();
        match &w.kind {
            BoundaryKind::ZeroType { subset } => assert_eq!(subset, &alloc::vec![0, 1, 2]),
            other => panic!("unexpected kind {other:?}"),
        }
        // α vanishes on the triangle and stays ≤ 0 elsewhere.
        for i in 0..3 {
            assert!(w.alpha_values[i].abs() <= 1e-8);
        }
        assert!(w.alpha_values[3] < 0.0);
        assert!(w.stabilizer_infinite);
        assert_eq!(w.stabilizer, alloc::vec![0, 1, 2]);
    }

    #[test]
    fn sigma_boundary_clear_for_cc_ex92() {
        let x: f64 = 2.0;
        let y = libm::sqrt((9.0 * (x + 1.0 / x) + 14.0) / 32.0);
        let a = ex92_cartan(x, y);
        let res = sigma_boundary_test(a.coxeter(), &a).unwrap();
        assert!(!res.touches_boundary);
    }

    #[test]
    fn sigma_boundary_ic_case() {
        // The all-∞ path group with strict products: (IC) holds, so Σ
        // touches the boundary with an infinite commuting stabilizer.
        let a = crate::decision::tests::ex91_cartan(1.5, 1.5, 1.5, 1.5);
        let res = sigma_boundary_test(a.coxeter(), &a).unwrap();
        assert!(res.touches_boundary);
        let w = res.witness.unwrap();
        assert!(matches!(w.kind, BoundaryKind::InfiniteCommuting { .. }));
        assert!(w.stabilizer_infinite);
    }

    #[test]
    fn pruned_domain_membership() {
        let a = generic_cc_cartan(&crate::coxeter::tests::ex93()).unwrap();
        let rep = build_rep(&a, 4).unwrap();
        let dom = PrunedDomain::new(&rep).unwrap();
        let x0 = dom.interior_point().to_vec();
        assert!(dom.contains_sigma_flat(&x0));
        assert!(dom.contains_sigma(&x0));
        let cone = PolyCone::fundamental_cone(&rep);
        assert_eq!(cone.contains(&x0), Some(true));
        let neg: alloc::vec::Vec<f64> = x0.iter().map(|v| -v).collect();
        assert!(!dom.contains_sigma(&neg));
        assert_eq!(cone.contains(&neg), Some(false));
    }

    #[test]
    fn sigma_flat_inside_sigma_inside_delta_on_samples() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let a = generic_cc_cartan(&crate::coxeter::tests::ex93()).unwrap();
        let rep = build_rep(&a, 4).unwrap();
        let dom = PrunedDomain::new(&rep).unwrap();
        let delta = PolyCone::fundamental_cone(&rep);
        let mut rng = StdRng::seed_from_u64(97);
        for _ in 0..500 {
            let t: alloc::vec::Vec<f64> = (0..4).map(|_| rng.gen_range(-0.2..1.0)).collect();
            let x = rep.v().mul_vec(&t);
            if dom.contains_sigma_flat(&x) {
                assert!(dom.contains_sigma(&x));
            }
            if dom.contains_sigma(&x) {
                assert_eq!(delta.contains(&x), Some(true));
            }
        }
    }

    #[test]
    fn sigma_flat_interior_samples_have_trivial_ball_stabilizer() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        // A convex cocompact configuration: interior Σ♭ points off the
        // walls are fixed by no nontrivial element of the orbit ball.
        let a = crate::cartan::deformed_tits_cartan(
            &crate::coxeter::CoxeterMatrix::from_edges(
                3,
                &[
                    (0, 1, crate::coxeter::CoxLabel::Infinite),
                    (1, 2, crate::coxeter::CoxLabel::Infinite),
                ],
            )
            .unwrap(),
            &[((0, 1), 0.5), ((1, 2), 0.5)],
        )
        .unwrap();
        let rep = build_rep(&a, 3).unwrap();
        let dom = PrunedDomain::new(&rep).unwrap();
        let tiling = crate::geometry::orbit(&rep, 6).unwrap();
        let mut rng = StdRng::seed_from_u64(131);
        let mut tested = 0;
        while tested < 50 {
            let t: alloc::vec::Vec<f64> = (0..3).map(|_| rng.gen_range(0.1..1.0)).collect();
            let x = rep.v().mul_vec(&t);
            let scale = x.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
            // Strictly interior: off every wall.
            if !(0..3).all(|i| rep.pair(i, &x) < -1e-6 * scale) {
                continue;
            }
            if !dom.contains_sigma_flat(&x) {
                continue;
            }
            tested += 1;
            for element in tiling.elements.iter().skip(1) {
                let gx = element.matrix.mul_vec(&x);
                let moved = gx
                    .iter()
                    .zip(&x)
                    .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
                assert!(
                    moved > 1e-9 * scale,
                    "Σ♭ interior point fixed by {:?}",
                    element.word
                );
            }
        }
    }

    #[test]
    fn generator_cone_membership() {
        let a = generic_cc_cartan(&crate::coxeter::tests::ex93()).unwrap();
        let rep = build_rep(&a, 4).unwrap();
        let dual = PolyCone::dual_generator_cone(&rep);
        // v_1 itself and a positive combination are inside.
        assert_eq!(dual.contains(&rep.v_col(0)), Some(true));
        let combo: alloc::vec::Vec<f64> = (0..4)
            .map(|p| rep.v_col(0)[p] + 0.5 * rep.v_col(2)[p])
            .collect();
        assert_eq!(dual.contains(&combo), Some(true));
        let outside: alloc::vec::Vec<f64> =
            rep.v_col(0).iter().map(|v| -v).collect();
        assert_eq!(dual.contains(&outside), Some(false));
    }

    #[test]
    fn infinite_wall_sets_of_ex93() {
        let w = crate::coxeter::tests::ex93();
        let sets = infinite_stabilizer_wall_sets(&w);
        // The triangle, the (1,3,4)-triangle group, the full set, and the
        // triangle plus s4 are infinite; all pairs/singletons are finite.
        assert!(sets.contains(&alloc::vec![0, 1, 2]));
        assert!(sets.contains(&alloc::vec![0, 1, 2, 3]));
        assert!(!sets.contains(&alloc::vec![0, 1]));
        assert!(!sets.contains(&alloc::vec![3]));
    }
}
