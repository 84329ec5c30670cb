//! The convex cocompactness verdict engine.
//!
//! For an infinite irreducible `W_S` with compatible Cartan matrix `A`,
//! convex cocompactness of the associated reflection group is decided
//! along two independent routes that must agree:
//!
//! * the explicit route: every ∞-pair product exceeds 4 strictly and
//!   every all-3 induced cycle has cycle product away from 1;
//! * the spectral route: no connected standard subgroup has a zero-type
//!   Cartan submatrix (exhaustive subset scan).
//!
//! Strong convex cocompactness adds word hyperbolicity, and coincides
//! with the representation being P1-Anosov. Affine groups take a
//! dedicated path: convex cocompact exactly when the group is of type
//! `Ã_{N−1}` and `A` is of negative type (equivalently `det A ≠ 0`).

use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{
    matrix_type, validate, CartanError, CartanMatrix, Level, MatrixType, Violation,
};
use crate::coxeter::{
    classify_connected, condition_atilde, condition_ic, irreducible_components, AffineFamily,
    CoxLabel, CoxeterMatrix, GroupClass, SUBSET_BUDGET,
};
use crate::tol;

#[derive(Clone, Debug)]
pub enum DecisionError {
    /// Theorems apply to irreducible groups; decide per component.
    Reducible,
    /// The group is finite (spherical): nothing to decide.
    FiniteGroup,
    /// `decide_affine` requires an affine group.
    NotAffine,
    /// The matrix fails compatibility; first violated clause attached.
    Incompatible(Violation),
    /// Exhaustive scans refuse to run past [`SUBSET_BUDGET`] generators.
    SubsetBudget { n: usize },
    /// The two decision routes disagree outside every tolerance band.
    RouteDisagreement,
    Cartan(CartanError),
}

impl core::fmt::Display for DecisionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DecisionError::Reducible => {
                write!(f, "group is reducible; run the decision per irreducible component")
            }
            DecisionError::FiniteGroup => write!(f, "group is finite"),
            DecisionError::NotAffine => write!(f, "group is not affine"),
            DecisionError::Incompatible(v) => write!(f, "Cartan matrix not compatible: {v}"),
            DecisionError::SubsetBudget { n } => {
                write!(f, "decision scans capped at {SUBSET_BUDGET} generators, got {n}")
            }
            DecisionError::RouteDisagreement =>

                write!(f, "zero-type and determinant routes disagree beyond tolerance"),
            DecisionError::Cartan(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DecisionError {}

impl From<CartanError> for DecisionError {
    fn from(e: CartanError) -> Self {
        DecisionError::Cartan(e)
    }
}

/// Numeric evidence attached to a failed (or boundary) condition.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `A[i][j]·A[j][i]` not strictly above 4 on an ∞-pair.
    InfinitePairProduct { i: usize, j: usize, product: f64, boundary: bool },
    /// Cycle product of an all-3 induced cycle too close to 1.
    AtildeCycle { subset: Vec<usize>, cycle_product: f64, boundary: bool },
    /// Connected subset whose Cartan submatrix has zero type.
    ZeroTypeSubset { subset: Vec<usize>, lowest_eigenvalue: f64 },
    /// Disjoint commuting infinite standard subgroups (condition (IC)).
    ConditionIC { s1: Vec<usize>, s2: Vec<usize> },
    /// Affine subgroup on ≥ 3 generators not of type `Ã_k`.
    ConditionAtilde { subset: Vec<usize> },
}

fn names(subset: &[usize]) -> alloc::string::String {
    use core::fmt::Write;
    let mut s = alloc::string::String::new();
    for (k, &i) in subset.iter().enumerate() {
        if k > 0 {
            let _ = write!(s, ",");
        }
        let _ = write!(s, "s{}", i + 1);
    }
    s
}

impl core::fmt::Display for Witness {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Witness::InfinitePairProduct { i, j, product, boundary } => write!(
                f,
                "pair (s{}, s{}): product {product}{}",
                i + 1,
                j + 1,
                if *boundary { " (boundary)" } else { "" }
            ),
            Witness::AtildeCycle { subset, cycle_product, boundary } => write!(
                f,
                "cycle {{{}}}: cycle product {cycle_product}{}",
                names(subset),
                if *boundary { " (boundary)" } else { "" }
            ),
            Witness::ZeroTypeSubset { subset, lowest_eigenvalue } => write!(
                f,
                "zero-type subset {{{}}} (lowest eigenvalue {lowest_eigenvalue:.3e})",
                names(subset)
            ),
            Witness::ConditionIC { s1, s2 } => write!(
                f,
                "condition (IC): {{{}}} and {{{}}} are infinite and commute",
                names(s1),
                names(s2)
            ),
            Witness::ConditionAtilde { subset } => write!(
                f,
                "condition (Ã): affine subset {{{}}} is not of type Ã",
                names(subset)
            ),
        }
    }
}

/// Agreement record between the two decision routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RouteAgreement {
    /// Determinant-style route (pair and cycle products).
    pub zd: bool,
    /// Spectral route (zero-type subset scan).
    pub zt: bool,
    pub agree: bool,
    /// Routes crossed their thresholds on different sides of a boundary
    /// band; the verdict stays conservative (not convex cocompact).
    pub tolerance_fault: bool,
}

/// Extra record for the affine path.
#[derive(Clone, Debug)]
pub struct AffineCaseReport {
    /// Equivalent to the group having no unipotent elements in this
    /// representation: the matrix is not of zero type.
    pub unipotent_free: bool,
    pub matrix_type: MatrixType,
    /// Whether the group is of type `Ã_{N−1}`.
    pub is_atilde: bool,
    pub det: f64,
}

/// The full decision record.
#[derive(Clone, Debug)]
pub struct CCVerdict {
    /// Group-level existence of some convex cocompact reflection
    /// representation (conditions ¬(IC) and (Ã)).
    pub exists_cc_rep: bool,
    /// Naive convex cocompactness (always equals `cc`).
    pub ncc: bool,
    pub cc: bool,
    pub scc: bool,
    /// The representation is P1-Anosov; equals `scc`.
    pub anosov: bool,
    pub affine_case: Option<AffineCaseReport>,
    pub witnesses: Vec<Witness>,
    pub routes: RouteAgreement,
}

struct RouteOutcome {
    ok: bool,
    witness: Option<Witness>,
    near_boundary: bool,
}

/// Decide convex cocompactness for an infinite irreducible group with a
/// compatible Cartan matrix, at the default strict tolerance.
pub fn decide(w: &CoxeterMatrix, a: &CartanMatrix) -> Result<CCVerdict, DecisionError> {
    decide_with_tol(w, a, tol::STRICT)
}

/// [`decide`] with an explicit strict-inequality margin.
pub fn decide_with_tol(
    w: &CoxeterMatrix,
    a: &CartanMatrix,
    tol_strict: f64,
) -> Result<CCVerdict, DecisionError> {
    let class = preflight(w, a)?;
    // Group-level obstruction: no representation of this group is
    // (naively) convex cocompact at all.
    let (ic, ic_witness) = condition_ic(w);
    if ic {
        let (s1, s2) = ic_witness.expect("witness accompanies a positive (IC)");
        return Ok(obstructed(Witness::ConditionIC { s1, s2 }));
    }
    let (atilde_ok, atilde_witness) = condition_atilde(w);
    if !atilde_ok {
        let subset = atilde_witness.expect("witness accompanies a failed (Ã)");
        return Ok(obstructed(Witness::ConditionAtilde { subset }));
    }
    if matches!(class, GroupClass::Affine(_)) {
        return decide_affine_with_tol(w, a, tol_strict);
    }

    let zd = zd_route(w, a, tol_strict);
    let zt = zt_route(w, a)?;
    let mut tolerance_fault = false;
    if zd.ok != zt.ok {
        if zd.near_boundary || zt.near_boundary {
            tolerance_fault = true;
        } else {
            return Err(DecisionError::RouteDisagreement);
        }
    }
    let cc = zd.ok && zt.ok;
    let hyperbolic = w.is_word_hyperbolic();
    let mut witnesses = Vec::new();
    witnesses.extend(zd.witness);
    witnesses.extend(zt.witness);
    Ok(CCVerdict {
        exists_cc_rep: true,
        ncc: cc,
        cc,
        scc: cc && hyperbolic,
        anosov: cc && hyperbolic,
        affine_case: None,
        witnesses,
        routes: RouteAgreement { zd: zd.ok, zt: zt.ok, agree: zd.ok == zt.ok, tolerance_fault },
    })
}

fn preflight(w: &CoxeterMatrix, a: &CartanMatrix) -> Result<GroupClass, DecisionError> {
    if w.size() > SUBSET_BUDGET {
        return Err(DecisionError::SubsetBudget { n: w.size() });
    }
    let comps = irreducible_components(w);
    if comps.len() != 1 {
        return Err(DecisionError::Reducible);
    }
    let class = classify_connected(w).expect("single component");
    if class.is_finite() {
        return Err(DecisionError::FiniteGroup);
    }
    if a.size() != w.size() || a.coxeter() != w {
        return Err(DecisionError::Cartan(CartanError::ShapeMismatch));
    }
    if let Some(v) = validate(a, Level::Full).into_iter().next() {
        return Err(DecisionError::Incompatible(v));
    }
    Ok(class)
}

fn obstructed(witness: Witness) -> CCVerdict {
    CCVerdict {
        exists_cc_rep: false,
        ncc: false,
        cc: false,
        scc: false,
        anosov: false,
        affine_case: None,
        witnesses: vec![witness],
        routes: RouteAgreement { zd: false, zt: false, agree: true, tolerance_fault: false },
    }
}

/// Explicit route: every ∞-pair product strictly above 4, every all-3
/// induced cycle product strictly away from 1.
fn zd_route(w: &CoxeterMatrix, a: &CartanMatrix, tol_strict: f64) -> RouteOutcome {
    let mut near_boundary = false;
    for (i, j) in w.infinite_pairs() {
        let product = a.at(i, j) * a.at(j, i);
        let distance = product - 4.0;
        if distance.abs() <= 10.0 * tol_strict {
            near_boundary = true;
        }
        if distance <= tol_strict {
            let boundary = distance.abs() <= tol_strict;
            return RouteOutcome {
                ok: false,
                witness: Some(Witness::InfinitePairProduct { i, j, product, boundary }),
                near_boundary: true,
            };
        }
    }
    for cycle in all3_induced_cycles(w) {
        let mut fwd = 1.0;
        let mut bwd = 1.0;
        for k in 0..cycle.len() {
            let (x, y) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            fwd *= a.at(x, y);
            bwd *= a.at(y, x);
        }
        let r = fwd / bwd;
        if (r - 1.0).abs() <= 10.0 * tol_strict {
            near_boundary = true;
        }
        if (r - 1.0).abs() <= tol_strict {
            let mut subset = cycle.clone();
            subset.sort_unstable();
            return RouteOutcome {
                ok: false,
                witness: Some(Witness::AtildeCycle {
                    subset,
                    cycle_product: r,
                    boundary: true,
                }),
                near_boundary: true,
            };
        }
    }
    RouteOutcome { ok: true, witness: None, near_boundary }
}

/// Spectral route: exhaustive scan over connected standard subgroups for
/// a zero-type Cartan submatrix.
fn zt_route(w: &CoxeterMatrix, a: &CartanMatrix) -> Result<RouteOutcome, DecisionError> {
    let n = w.size();
    let mut near_boundary = false;
    for mask in 1u32..(1u32 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub_cox = w.induced(&subset);
        if irreducible_components(&sub_cox).len() != 1 {
            continue;
        }
        let sub = a.submatrix(&subset)?;
        let report = matrix_type(&sub)?;
        if report.lowest_eigenvalue.abs() <= 10.0 * report.tolerance_used {
            near_boundary = true;
        }
        if report.matrix_type == MatrixType::Zero {
            return Ok(RouteOutcome {
                ok: false,
                witness: Some(Witness::ZeroTypeSubset {
                    subset,
                    lowest_eigenvalue: report.lowest_eigenvalue,
                }),
                near_boundary: true,
            });
        }
    }
    Ok(RouteOutcome { ok: true, witness: None, near_boundary })
}

/// Chordless cycles with all labels 3, i.e. the standard subgroups of
/// type `Ã_k`, `k ≥ 2`. Cycles are produced with smallest vertex first.
pub fn all3_induced_cycles(w: &CoxeterMatrix) -> Vec<Vec<usize>> {
    let n = w.size();
    let adj3 = |i: usize, j: usize| w.label(i, j) == CoxLabel::Finite(3);
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for start in 0..n {
        path.clear();
        path.push(start);
        extend_cycles(w, &adj3, start, &mut path, &mut out);
    }
    out
}

fn extend_cycles(
    w: &CoxeterMatrix,
    adj3: &impl Fn(usize, usize) -> bool,
    start: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for next in start + 1..w.size() {
        if !adj3(last, next) || path.contains(&next) {
            continue;
        }
        // Chordlessness: `next` may touch (by any diagram edge) no path
        // vertex other than `last` — except `start` when closing.
        let mut chord = false;
        let mut closes = false;
        for (idx, &p) in path.iter().enumerate() {
            if p == last {
                continue;
            }
            if w.label(next, p).is_edge() {
                if idx == 0 && adj3(next, start) && path.len() >= 2 {
                    closes = true;
                } else {
                    chord = true;
                }
            }
        }
        if chord {
            continue;
        }
        if closes {
            // Canonical orientation: second vertex smaller than the last.
            if path[1] < next {
                let mut cycle = path.clone();
                cycle.push(next);
                out.push(cycle);
            }
            continue;
        }
        path.push(next);
        extend_cycles(w, adj3, start, path, out);
        path.pop();
    }
}

/// Decide the affine case: convex cocompact exactly for type `Ã_{N−1}`
/// with a negative-type (equivalently nonsingular) Cartan matrix.
/// Strong convex cocompactness never holds (affine groups are not word
/// hyperbolic).
pub fn decide_affine(w: &CoxeterMatrix, a: &CartanMatrix) -> Result<CCVerdict, DecisionError> {
    decide_affine_with_tol(w, a, tol::STRICT)
}

/// [`decide_affine`] with an explicit strict-inequality margin.
pub fn decide_affine_with_tol(
    w: &CoxeterMatrix,
    a: &CartanMatrix,
    tol_strict: f64,
) -> Result<CCVerdict, DecisionError> {
    if w.size() > SUBSET_BUDGET {
        return Err(DecisionError::SubsetBudget { n: w.size() });
    }
    let comps = irreducible_components(w);
    if comps.len() != 1 {
        return Err(DecisionError::Reducible);
    }
    let class = classify_connected(w).expect("single component");
    let family = match class {
        GroupClass::Affine(fam) => fam,
        _ => return Err(DecisionError::NotAffine),
    };
    if a.size() != w.size() || a.coxeter() != w {
        return Err(DecisionError::Cartan(CartanError::ShapeMismatch));
    }
    if let Some(v) = validate(a, Level::Full).into_iter().next() {
        return Err(DecisionError::Incompatible(v));
    }
    let report = matrix_type(a)?;
    let det = a.det();
    let is_atilde = matches!(family, AffineFamily::ATilde(_));
    // The equivalent formulations, evaluated independently and cross-checked:
    let not_zero_type = report.matrix_type != MatrixType::Zero;
    let det_nonzero = det.abs() > tol_strict;
    let atilde_negative = is_atilde && report.matrix_type == MatrixType::Negative;
    let tolerance_fault = not_zero_type != det_nonzero || not_zero_type != atilde_negative;
    let cc = atilde_negative && det_nonzero;
    let mut witnesses = Vec::new();
    if !is_atilde {
        witnesses.push(Witness::ConditionAtilde { subset: (0..w.size()).collect() });
    } else if !cc {
        witnesses.push(Witness::ZeroTypeSubset {
            subset: (0..w.size()).collect(),
            lowest_eigenvalue: report.lowest_eigenvalue,
        });
    }
    Ok(CCVerdict {
        exists_cc_rep: is_atilde,
        ncc: cc,
        cc,
        scc: false,
        anosov: false,
        affine_case: Some(AffineCaseReport {
            unipotent_free: not_zero_type,
            matrix_type: report.matrix_type,
            is_atilde,
            det,
        }),
        witnesses,
        routes: RouteAgreement {
            zd: det_nonzero && is_atilde,
            zt: not_zero_type && is_atilde,
            agree: det_nonzero == not_zero_type,
            tolerance_fault,
        },
    })
}

/// Group-level existence verdict (no Cartan matrix involved): forwards
/// the ¬(IC) ∧ (Ã) test with the violated condition named.
pub fn exists_verdict(w: &CoxeterMatrix) -> Result<(bool, Option<Witness>), DecisionError> {
    if w.size() > SUBSET_BUDGET {
        return Err(DecisionError::SubsetBudget { n: w.size() });
    }
    if !w.is_irreducible() {
        return Err(DecisionError::Reducible);
    }
    if !w.is_infinite() {
        return Err(DecisionError::FiniteGroup);
    }
    let (ic, ic_witness) = condition_ic(w);
    if ic {
        let (s1, s2) = ic_witness.expect("witness accompanies a positive (IC)");
        return Ok((false, Some(Witness::ConditionIC { s1, s2 })));
    }
    let (atilde_ok, atilde_witness) = condition_atilde(w);
    if !atilde_ok {
        let subset = atilde_witness.expect("witness accompanies a failed (Ã)");
        return Ok((false, Some(Witness::ConditionAtilde { subset })));
    }
    Ok((true, None))
}
