//! The bundled example corpus: three parameterized groups whose
//! determinant loci are known in closed form, the rank-2 proximal
//! fixture, and the three-mirror figure configuration. The `.cox` files
//! shipped under `corpus/` encode the same diagrams; tests pin them to
//! these builders.

use coxcc_core::cartan::{deformed_tits_cartan, pair_product_target, CartanMatrix};
use coxcc_core::coxeter::{CoxLabel, CoxeterMatrix};
use coxcc_core::linalg::Mat;
use rand::rngs::StdRng;
use rand::Rng;

const INF: CoxLabel = CoxLabel::Infinite;

fn lab(m: u32) -> CoxLabel {
    CoxLabel::Finite(m)
}

/// Five generators in a path, all exponents ∞.
pub fn ex91_cox() -> CoxeterMatrix {
    CoxeterMatrix::from_edges(5, &[(0, 1, INF), (1, 2, INF), (2, 3, INF), (3, 4, INF)])
        .unwrap()
}

/// The compatible family for [`ex91_cox`]: `−2x, −2y, −2z, −2u` above
/// the diagonal, `−2` below.
pub fn ex91_cartan(x: f64, y: f64, z: f64, u: f64) -> CartanMatrix {
    let mut m = Mat::identity(5).scale(2.0);
    for (k, &p) in [x, y, z, u].iter().enumerate() {
        m[(k, k + 1)] = -2.0 * p;
        m[(k + 1, k)] = -2.0;
    }
    CartanMatrix::new(ex91_cox(), m).unwrap()
}

/// `det A = 32(xu + xz + yu − x − y − z − u + 1)` for [`ex91_cartan`].
pub fn ex91_det_formula(x: f64, y: f64, z: f64, u: f64) -> f64 {
    32.0 * (x * u + x * z + y * u - x - y - z - u + 1.0)
}

/// Six generators: a 4-cycle of 6-labels with an ∞–6 tail.
pub fn ex92_cox() -> CoxeterMatrix {
    CoxeterMatrix::from_edges(
        6,
        &[
            (0, 1, lab(6)),
            (1, 2, lab(6)),
            (2, 3, lab(6)),
            (0, 3, lab(6)),
            (3, 4, INF),
            (4, 5, lab(6)),
        ],
    )
    .unwrap()
}

/// The compatible family for [`ex92_cox`], skewed by `x` on the cycle
/// and opened by `y` on the ∞-pair.
pub fn ex92_cartan(x: f64, y: f64) -> CartanMatrix {
    let s = 3.0_f64.sqrt();
    let mut m = Mat::identity(6).scale(2.0);
    for (i, j) in [(0usize, 1usize), (1, 2), (2, 3), (4, 5)] {
        m[(i, j)] = -s;
        m[(j, i)] = -s;
    }
    m[(0, 3)] = -s * x;
    m[(3, 0)] = -s / x;
    m[(3, 4)] = -2.0 * y;
    m[(4, 3)] = -2.0 * y;
    CartanMatrix::new(ex92_cox(), m).unwrap()
}

/// `det A = 32y² − 9(x + x⁻¹) − 14` for [`ex92_cartan`].
pub fn ex92_det_formula(x: f64, y: f64) -> f64 {
    32.0 * y * y - 9.0 * (x + 1.0 / x) - 14.0
}

/// `(1,1)-minor of A = −4(2y² + 1)` for [`ex92_cartan`].
pub fn ex92_minor11_formula(y: f64) -> f64 {
    -4.0 * (2.0 * y * y + 1.0)
}

/// Solve the determinant locus of the ex92 family for `y` at a given `x`.
pub fn ex92_curve_y(x: f64) -> f64 {
    ((9.0 * (x + 1.0 / x) + 14.0) / 32.0).sqrt()
}

/// Four generators: an all-3 triangle, a 3-tail, and a 4-labeled chord.
pub fn ex93_cox() -> CoxeterMatrix {
    CoxeterMatrix::from_edges(
        4,
        &[(0, 1, lab(3)), (1, 2, lab(3)), (0, 2, lab(3)), (2, 3, lab(3)), (0, 3, lab(4))],
    )
    .unwrap()
}

/// The compatible family for [`ex93_cox`]: triangle skew `x`, tail skew `y`.
pub fn ex93_cartan(x: f64, y: f64) -> CartanMatrix {
    let r2 = 2.0_f64.sqrt();
    let mut m = Mat::identity(4).scale(2.0);
    m[(0, 1)] = -1.0;
    m[(1, 0)] = -1.0;
    m[(0, 2)] = -1.0;
    m[(2, 0)] = -1.0;
    m[(1, 2)] = -x;
    m[(2, 1)] = -1.0 / x;
    m[(2, 3)] = -y;
    m[(3, 2)] = -1.0 / y;
    m[(0, 3)] = -r2;
    m[(3, 0)] = -r2;
    CartanMatrix::new(ex93_cox(), m).unwrap()
}

/// `det A = −(2(x+x⁻¹) + 2√2(y+y⁻¹) + √2(xy+(xy)⁻¹) + 5)` for [`ex93_cartan`].
pub fn ex93_det_formula(x: f64, y: f64) -> f64 {
    let r2 = 2.0_f64.sqrt();
    -(2.0 * (x + 1.0 / x) + 2.0 * r2 * (y + 1.0 / y) + r2 * (x * y + 1.0 / (x * y)) + 5.0)
}

/// The rank-2 proximal fixture `[[2, −3], [−2, 2]]` on the ∞-pair.
pub fn ex31_cartan() -> CartanMatrix {
    let cox = CoxeterMatrix::from_edges(2, &[(0, 1, INF)]).unwrap();
    CartanMatrix::new(
        cox,
        Mat::from_rows(&[vec![2.0, -3.0], vec![-2.0, 2.0]]),
    )
    .unwrap()
}

/// The three-mirror figure configuration `⟨σ1,σ2,σ3 | σᵢ², (σ1σ3)²⟩`.
pub fn fig5_cox() -> CoxeterMatrix {
    CoxeterMatrix::from_edges(3, &[(0, 1, INF), (1, 2, INF)]).unwrap()
}

/// Deformed Tits matrix for [`fig5_cox`] with strict ∞-products (6.25).
pub fn fig5_cartan() -> CartanMatrix {
    deformed_tits_cartan(&fig5_cox(), &[((0, 1), 0.5), ((1, 2), 0.5)]).unwrap()
}

/// Look up a corpus Coxeter matrix by name.
pub fn cox_by_name(name: &str) -> Option<CoxeterMatrix> {
    match name {
        "ex91" => Some(ex91_cox()),
        "ex92" => Some(ex92_cox()),
        "ex93" => Some(ex93_cox()),
        "ex31" => Some(ex31_cartan().coxeter().clone()),
        "fig5" => Some(fig5_cox()),
        _ => None,
    }
}

/// Random irreducible, infinite diagram satisfying ¬(IC) and (Ã).
pub fn random_admissible_diagram(rng: &mut StdRng, max_n: usize) -> CoxeterMatrix {
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut edges = Vec::new();
        for i in 1..n {
            let j = rng.gen_range(0..i);
            edges.push((j, i, random_label(rng)));
        }
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.25) && !edges.iter().any(|&(a, b, _)| (a, b) == (i, j)) {
                    edges.push((i, j, random_label(rng)));
                }
            }
        }
        let w = CoxeterMatrix::from_edges(n, &edges).unwrap();
        if w.is_irreducible()
            && w.is_infinite()
            && matches!(coxcc_core::coxeter::admits_cc_reflection_rep(&w), Ok(true))
        {
            return w;
        }
    }
}

fn random_label(rng: &mut StdRng) -> CoxLabel {
    match rng.gen_range(0..6) {
        0 => lab(3),
        1 => lab(4),
        2 => lab(5),
        3 => lab(6),
        _ => INF,
    }
}

/// Random compatible matrix for `w`: forced products on finite edges,
/// random products in (4, 9) on ∞-pairs, random skew everywhere.
pub fn random_compatible_cartan(rng: &mut StdRng, w: &CoxeterMatrix) -> CartanMatrix {
    let n = w.size();
    let mut m = Mat::identity(n).scale(2.0);
    for (i, j, label) in w.edges() {
        let product = match label {
            CoxLabel::Finite(mm) => pair_product_target(mm),
            CoxLabel::Infinite => rng.gen_range(4.0..9.0),
        };
        let skew = rng.gen_range(0.5..2.0);
        let root = product.sqrt();
        m[(i, j)] = -root * skew;
        m[(j, i)] = -root / skew;
    }
    CartanMatrix::new(w.clone(), m).unwrap()
}

/// Random compatible matrix pushed onto the degenerate locus: one
/// ∞-pair product pinned to exactly 4, or all label-3 edges made
/// symmetric (every cycle product exactly 1). Returns `None` when the
/// diagram offers no degeneracy (then every compatible matrix decides
/// convex cocompact).
pub fn random_degenerate_cartan(rng: &mut StdRng, w: &CoxeterMatrix) -> Option<CartanMatrix> {
    let infinite = w.infinite_pairs();
    let has_cycle = !coxcc_core::decision::all3_induced_cycles(w).is_empty();
    let mut a = random_compatible_cartan(rng, w);
    if !infinite.is_empty() && (!has_cycle || rng.gen_bool(0.5)) {
        let (i, j) = infinite[rng.gen_range(0..infinite.len())];
        let mut m = a.entries().clone();
        let skew = rng.gen_range(0.5..2.0);
        m[(i, j)] = -2.0 * skew;
        m[(j, i)] = -2.0 / skew;
        a = CartanMatrix::new(w.clone(), m).unwrap();
        Some(a)
    } else if has_cycle {
        let mut m = a.entries().clone();
        for (i, j, label) in w.edges() {
            if label == CoxLabel::Finite(3) {
                m[(i, j)] = -1.0;
                m[(j, i)] = -1.0;
            }
        }
        a = CartanMatrix::new(w.clone(), m).unwrap();
        Some(a)
    } else {
        None
    }
}
