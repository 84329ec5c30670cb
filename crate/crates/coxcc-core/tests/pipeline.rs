//! Whole-pipeline checks through the public API only: parse a diagram,
//! classify it, construct Cartan matrices, build and verify the
//! representation, decide, and walk the geometry.

use coxcc_core::cartan::{
    affine_atilde_cartan, equivalence_invariants, generic_cc_cartan, matrix_type, normalize,
    tits_cartan, MatrixType,
};
use coxcc_core::coxeter::{
    admits_cc_reflection_rep, classify_connected, parse_coxeter, peripheral_subgroups,
    GroupClass,
};
use coxcc_core::decision::{decide, decide_affine, Witness};
use coxcc_core::geometry::{
    delta_membership_check, hilbert_distance, length_property_check, orbit, render_svg,
    sigma_boundary_test, ChartSpec, PrunedDomain,
};
use coxcc_core::reflection::{
    block_decomposition, build_rep, subspace_report, verify_rep,
};
use coxcc_core::linalg::Mat;

const EX93: &str = "4\n1 2 3\n2 3 3\n1 3 3\n3 4 3\n1 4 4\n";

#[test]
fn nonhyperbolic_story_end_to_end() {
    let w = parse_coxeter(EX93).unwrap();
    assert_eq!(classify_connected(&w).unwrap(), GroupClass::Large);
    assert!(!w.is_word_hyperbolic());
    assert!(admits_cc_reflection_rep(&w).unwrap());
    let peripherals = peripheral_subgroups(&w).unwrap();
    assert_eq!(peripherals, vec![(vec![0, 1, 2], vec![])]);

    // Generic construction decides convex cocompact (but not strongly).
    let a = generic_cc_cartan(&w).unwrap();
    let verdict = decide(&w, &a).unwrap();
    assert!(verdict.cc && verdict.ncc && !verdict.scc && !verdict.anosov);
    assert!(verdict.routes.agree && !verdict.routes.tolerance_fault);

    // Its representation verifies, is irreducible, and the block
    // decomposition is the full core.
    let rep = build_rep(&a, 4).unwrap();
    assert!(verify_rep(&rep, &w).passed());
    let sub = subspace_report(&rep);
    assert!(sub.reduced && sub.dual_reduced);
    let bd = block_decomposition(&rep).unwrap();
    assert_eq!(bd.dims, [0, 0, 4, 0]);
    assert_eq!(bd.basis_u_prime().len(), 4);
    assert!(bd.basis_u_second().is_empty() && bd.basis_u_third().is_empty());
    assert!(bd.pattern_err < 1e-9);

    // Normalization is a no-op on the verdict and the invariants.
    let normalized = normalize(&a).unwrap();
    let inv_a = equivalence_invariants(&a).unwrap();
    let inv_n = equivalence_invariants(&normalized).unwrap();
    for (p, q) in inv_a.cycle_products.iter().zip(&inv_n.cycle_products) {
        assert_eq!(p.0, q.0);
        assert!((p.1 - q.1).abs() < 1e-9 * p.1.abs().max(1.0));
    }
    assert!(decide(&w, &normalized).unwrap().cc);

    // The pruned domain's interior sample passes the membership screens.
    let dom = PrunedDomain::new(&rep).unwrap();
    let x0 = dom.interior_point().to_vec();
    assert!(dom.contains_sigma_flat(&x0));
    let reports = delta_membership_check(&rep, &[x0], 3).unwrap();
    assert!(reports[0].in_delta && reports[0].refuted_by.is_none());

    // Boundary contact appears exactly at the degenerate triangle.
    let res = sigma_boundary_test(&w, &a).unwrap();
    assert!(!res.touches_boundary);
}

#[test]
fn affine_story_end_to_end() {
    let a = affine_atilde_cartan(4, 2.0).unwrap();
    let w = a.coxeter().clone();
    assert!(matches!(classify_connected(&w).unwrap(), GroupClass::Affine(_)));
    assert_eq!(matrix_type(&a).unwrap().matrix_type, MatrixType::Negative);
    let verdict = decide_affine(&w, &a).unwrap();
    assert!(verdict.cc && !verdict.scc);
    assert!(verdict.affine_case.unwrap().unipotent_free);

    // The zero-type point is unipotent and names itself as witness.
    let tits = tits_cartan(&w);
    let verdict = decide_affine(&w, &tits).unwrap();
    assert!(!verdict.cc);
    assert!(matches!(&verdict.witnesses[0], Witness::ZeroTypeSubset { subset, .. }
        if subset == &vec![0, 1, 2, 3]));

    // The negative-type representation passes the word-length screen.
    let rep = build_rep(&a, 4).unwrap();
    let report = length_property_check(&rep, 4).unwrap();
    assert!(report.skipped.is_none());
    assert!(report.disagreements.is_empty());
}

#[test]
fn rendering_story_end_to_end() {
    // Reflection triangle with strict products renders a deterministic
    // tiling whose fundamental domain stays interior.
    let text = "3\n1 2 inf\n2 3 inf\n";
    let w = parse_coxeter(text).unwrap();
    let a = coxcc_core::cartan::deformed_tits_cartan(
        &w,
        &[((0, 1), 0.5), ((1, 2), 0.5)],
    )
    .unwrap();
    let rep = build_rep(&a, 3).unwrap();
    let tiling = orbit(&rep, 6).unwrap();
    assert_eq!(tiling.elements.len(), 85);
    let (svg, report) = render_svg(&rep, &tiling, &ChartSpec::default()).unwrap();
    assert_eq!(report.tiles_drawn, tiling.elements.len());
    assert!(report.sigma_drawn);
    assert!(svg.contains("data-word=\"s1*s2\""));
    assert!(!sigma_boundary_test(&w, &a).unwrap().touches_boundary);

    // The Hilbert metric on the fundamental triangle chart behaves like
    // a metric.
    let triangle = vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
    let d1 = hilbert_distance(&triangle, [0.2, 0.2], [0.4, 0.3]).unwrap();
    let d2 = hilbert_distance(&triangle, [0.4, 0.3], [0.2, 0.2]).unwrap();
    assert!(d1 > 0.0 && (d1 - d2).abs() < 1e-12);
}

#[test]
fn rank_deficient_negative_type_build() {
    // On the determinant locus of the word-hyperbolic example the matrix
    // drops rank but stays negative type; the semisimple model lives in
    // dimension 5 and still verifies.
    let s = 3.0_f64.sqrt();
    let x: f64 = 2.0;
    let y = ((9.0 * (x + 1.0 / x) + 14.0) / 32.0).sqrt();
    let text = "6\n1 2 6\n2 3 6\n3 4 6\n4 1 6\n4 5 inf\n5 6 6\n";
    let w = parse_coxeter(text).unwrap();
    let mut m = Mat::identity(6).scale(2.0);
    for (i, j) in [(0usize, 1usize), (1, 2), (2, 3), (4, 5)] {
        m[(i, j)] = -s;
        m[(j, i)] = -s;
    }
    m[(0, 3)] = -s * x;
    m[(3, 0)] = -s / x;
    m[(3, 4)] = -2.0 * y;
    m[(4, 3)] = -2.0 * y;
    let a = coxcc_core::cartan::CartanMatrix::new(w.clone(), m).unwrap();
    assert_eq!(a.rank(), 5);
    let rep = build_rep(&a, 5).unwrap();
    assert!(verify_rep(&rep, &w).passed());
    let sub = subspace_report(&rep);
    assert!(sub.reduced && sub.dual_reduced);
    assert!(decide(&w, &a).unwrap().scc);
}
