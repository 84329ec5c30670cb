//! Breadth-first orbit enumeration over the Cayley graph.
//!
//! Element identity is matrix identity: the representation is faithful,
//! so two words name the same group element exactly when their matrices
//! agree. Matrices are compared after normalizing by their largest
//! entry, since entries grow with word length.

use alloc::vec;
use alloc::vec::Vec;

use super::{GeometryError, PolyCone};
use crate::linalg::{self, Mat};
use crate::reflection::{verify_rep, ReflectionRep};
use crate::tol;

pub const MAX_ORBIT_DEPTH: usize = 12;

/// Hard cap on enumerated elements; quadratic dedup stays desk-scale.
pub const MAX_ORBIT_ELEMENTS: usize = 20_000;

/// One group element: its BFS-first reduced word and its matrix.
#[derive(Clone, Debug)]
pub struct OrbitElement {
    pub word: Vec<usize>,
    pub matrix: Mat,
}

impl OrbitElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// A word-indexed orbit of the fundamental tile.
#[derive(Clone, Debug)]
pub struct Tiling {
    /// Ordered by (length, lexicographic word); identity at index 0.
    pub elements: Vec<OrbitElement>,
    pub depth: usize,
    pub dedup_tolerance: f64,
    /// Pairs of words whose matrices came within 10× of the dedup
    /// tolerance without being identified.
    pub collision_warnings: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Tiling {
    /// Index of the element equal to `m`, if present.
    pub fn find(&self, m: &Mat) -> Option<usize> {
        let mn = normalized(m);
        self.elements
            .iter()
            .position(|e| normalized(&e.matrix).max_abs_diff(&mn) <= self.dedup_tolerance)
    }

    pub fn count_at_length(&self, len: usize) -> usize {
        self.elements.iter().filter(|e| e.length() == len).count()
    }
}

fn normalized(m: &Mat) -> Mat {
    let s = m.max_abs();
    if s == 0.0 {
        m.clone()
    } else {
        m.scale(1.0 / s)
    }
}

/// All distinct elements of word length ≤ `depth`, ordered by length
/// then lexicographic word. The representation must pass verification.
pub fn orbit(rep: &ReflectionRep, depth: usize) -> Result<Tiling, GeometryError> {
    orbit_with_dedup(rep, depth, tol::ORBIT_DEDUP)
}

/// [`orbit`] with an explicit dedup tolerance (counts must be stable
/// across reasonable tolerances; see the stability test).
pub fn orbit_with_dedup(
    rep: &ReflectionRep,
    depth: usize,
    dedup: f64,
) -> Result<Tiling, GeometryError> {
    if depth > MAX_ORBIT_DEPTH {
        return Err(GeometryError::DepthBudget { depth, max: MAX_ORBIT_DEPTH });
    }
    let cox = rep.coxeter().clone();
    if !verify_rep(rep, &cox).passed() {
        return Err(GeometryError::RepFailsVerification);
    }
    let n_gens = rep.generator_count();
    let mut elements = vec![OrbitElement { word: Vec::new(), matrix: Mat::identity(rep.dim()) }];
    let mut normalized_cache = vec![normalized(&elements[0].matrix)];
    let mut collision_warnings = Vec::new();
    let mut level_start = 0;
    for _ in 0..depth {
        let level_end = elements.len();
        for idx in level_start..level_end {
            let parent_word = elements[idx].word.clone();
            let parent_matrix = elements[idx].matrix.clone();
            for g in 0..n_gens {
                let m = parent_matrix.mul(rep.generator(g));
                let mn = normalized(&m);
                let mut duplicate = false;
                let mut near = None;
                for (k, existing) in normalized_cache.iter().enumerate() {
                    let d = existing.max_abs_diff(&mn);
                    if d <= dedup {
                        duplicate = true;
                        break;
                    }
                    if d <= 10.0 * dedup {
                        near = Some(k);
                    }
                }
                if duplicate {
                    continue;
                }
                if let Some(k) = near {
                    collision_warnings
                        .push((elements[k].word.clone(), push_word(&parent_word, g)));
                }
                if elements.len() >= MAX_ORBIT_ELEMENTS {
                    return Err(GeometryError::OrbitBudget {
                        elements: MAX_ORBIT_ELEMENTS,
                        depth,
                    });
                }
                normalized_cache.push(mn);
                elements.push(OrbitElement { word: push_word(&parent_word, g), matrix: m });
            }
        }
        level_start = level_end;
        if level_start == elements.len() {
            break; // the group was exhausted (finite)
        }
    }
    Ok(Tiling { elements, depth, dedup_tolerance: dedup, collision_warnings })
}

fn push_word(word: &[usize], g: usize) -> Vec<usize> {
    let mut w = word.to_vec();
    w.push(g);
    w
}

/// Outcome of the word-length vs cone-membership comparison.
#[derive(Clone, Debug)]
pub struct LengthPropertyReport {
    /// Reason the check was skipped (dependent vectors), if it was.
    pub skipped: Option<&'static str>,
    pub pairs_checked: usize,
    /// `(word of γ, i)` pairs where BFS length and the membership of
    /// `ρ(γ)v_i` in the dual generator cone disagree. Always empty for a
    /// genuine reflection representation.
    pub disagreements: Vec<(Vec<usize>, usize)>,
}

/// For every orbit element γ with `ℓ(γ) ≤ depth` and every generator i,
/// compare `ℓ(γ s_i) > ℓ(γ)` against `ρ(γ)v_i ∈ D̃*`.
pub fn length_property_check(
    rep: &ReflectionRep,
    depth: usize,
) -> Result<LengthPropertyReport, GeometryError> {
    let n_gens = rep.generator_count();
    if linalg::rank_info(&rep.v().transpose(), tol::RANK).rank != n_gens {
        return Ok(LengthPropertyReport {
            skipped: Some("vectors v_1..v_N are linearly dependent"),
            pairs_checked: 0,
            disagreements: Vec::new(),
        });
    }
    let tiling = orbit(rep, depth)?;
    let dual = PolyCone::dual_generator_cone(rep);
    let mut disagreements = Vec::new();
    let mut pairs_checked = 0;
    for element in &tiling.elements {
        for i in 0..n_gens {
            let longer = match tiling.find(&element.matrix.mul(rep.generator(i))) {
                Some(idx) => tiling.elements[idx].length() > element.length(),
                // Not in the ball: the product has length depth + 1.
                None => true,
            };
            let image = element.matrix.mul_vec(&rep.v_col(i));
            let in_cone = dual
                .contains(&image)
                .ok_or(GeometryError::DependentVectors)?;
            pairs_checked += 1;
            if longer != in_cone {
                disagreements.push((element.word.clone(), i));
            }
        }
    }
    Ok(LengthPropertyReport { skipped: None, pairs_checked, disagreements })
}

/// Per-sample outcome of the fundamental-cone membership comparison.
#[derive(Clone, Debug)]
pub struct DeltaSampleReport {
    pub point: Vec<f64>,
    /// Direct inequality test `α_i(x) ≤ 0 ∀i`.
    pub in_delta: bool,
    /// First enumerated γ with `ρ(γ)x − x ∉ D̃*`, if any. This is a
    /// necessary-condition screen: it may refute membership, never
    /// confirm it.
    pub refuted_by: Option<Vec<usize>>,
}

impl DeltaSampleReport {
    /// An inequality-accepted point refuted by the orbit screen would
    /// contradict the membership identity; must never be true.
    pub fn contradiction(&self) -> bool {
        self.in_delta && self.refuted_by.is_some()
    }
}

/// Compare the inequality description of `Δ̃` with the orbit screen
/// `ρ(γ)x − x ∈ D̃*` over all enumerated γ.
pub fn delta_membership_check(
    rep: &ReflectionRep,
    samples: &[Vec<f64>],
    depth: usize,
) -> Result<Vec<DeltaSampleReport>, GeometryError> {
    let n_gens = rep.generator_count();
    if linalg::rank_info(&rep.v().transpose(), tol::RANK).rank != n_gens {
        return Err(GeometryError::DependentVectors);
    }
    let tiling = orbit(rep, depth)?;
    let delta = PolyCone::fundamental_cone(rep);
    let dual = PolyCone::dual_generator_cone(rep);
    let mut out = Vec::new();
    for x in samples {
        let in_delta = delta.contains(x).expect("inequality cones always decide");
        let mut refuted_by = None;
        for element in tiling.elements.iter().skip(1) {
            let gx = element.matrix.mul_vec(x);
            let diff: Vec<f64> = gx.iter().zip(x).map(|(a, b)| a - b).collect();
            if dual.contains(&diff) == Some(false) {
                refuted_by = Some(element.word.clone());
                break;
            }
        }
        out.push(DeltaSampleReport { point: x.clone(), in_delta, refuted_by });
    }
    Ok(out)
}
