use super::*;
use crate::coxeter::classify::{catalog, AffineFamily as Af, SphericalFamily as Sf};
use alloc::vec;
use proptest::prelude::*;

fn lab(m: u32) -> CoxLabel {
    CoxLabel::Finite(m)
}

const INF: CoxLabel = CoxLabel::Infinite;

fn from_edges(n: usize, edges: &[(usize, usize, CoxLabel)]) -> CoxeterMatrix {
    CoxeterMatrix::from_edges(n, edges).unwrap()
}

/// 5-generator path, all labels ∞.
pub(crate) fn ex91() -> CoxeterMatrix {
    from_edges(5, &[(0, 1, INF), (1, 2, INF), (2, 3, INF), (3, 4, INF)])
}

/// 6 generators: a 4-cycle of 6-labels plus a tail `4 —∞— 5 —6— 6`.
pub(crate) fn ex92() -> CoxeterMatrix {
    from_edges(
        6,
        &[
            (0, 1, lab(6)),
            (1, 2, lab(6)),
            (2, 3, lab(6)),
            (3, 0, lab(6)),
            (3, 4, INF),
            (4, 5, lab(6)),
        ],
    )
}

/// 4 generators: all-3 triangle {0,1,2} plus 3 joined to 2 (label 3) and to 0 (label 4).
pub(crate) fn ex93() -> CoxeterMatrix {
    from_edges(
        4,
        &[(0, 1, lab(3)), (1, 2, lab(3)), (0, 2, lab(3)), (2, 3, lab(3)), (0, 3, lab(4))],
    )
}

fn classify_whole(w: &CoxeterMatrix) -> GroupClass {
    classify_connected(w).unwrap()
}

mod parse {
    use super::*;

    #[test]
    fn single_generator() {
        let w = parse_coxeter("1\n").unwrap();
        assert_eq!(w.size(), 1);
        assert_eq!(w.label(0, 0), lab(1));
    }

    #[test]
    fn example_92_file() {
        let text = "# six generators\n6\n1 2 6\n2 3 6\n3 4 6\n4 1 6\n4 5 inf\n5 6 6\n";
        let w = parse_coxeter(text).unwrap();
        assert_eq!(w, ex92());
    }

    #[test]
    fn unlisted_pairs_default_to_two() {
        let w = parse_coxeter("3\n1 2 3\n").unwrap();
        assert_eq!(w.label(0, 2), lab(2));
        assert_eq!(w.label(1, 2), lab(2));
    }

    #[test]
    fn conflicting_symmetric_entries_rejected() {
        let err = parse_coxeter("2\n1 2 4\n2 1 5\n").unwrap_err();
        assert!(matches!(err, ParseError::ConflictingEntry { .. }));
    }

    #[test]
    fn duplicate_agreeing_entries_ok() {
        let w = parse_coxeter("2\n1 2 4\n2 1 4\n").unwrap();
        assert_eq!(w.label(0, 1), lab(4));
    }

    #[test]
    fn exponent_below_two_rejected() {
        assert!(matches!(parse_coxeter("2\n1 2 1\n"), Err(ParseError::BadExponent { .. })));
    }

    #[test]
    fn index_out_of_range() {
        assert!(matches!(
            parse_coxeter("2\n1 3 4\n"),
            Err(ParseError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn malformed_line() {
        assert!(matches!(parse_coxeter("2\n1 2\n"), Err(ParseError::MalformedLine { .. })));
    }

    #[test]
    fn round_trip_through_text() {
        for w in [ex91(), ex92(), ex93()] {
            assert_eq!(parse_coxeter(&to_cox_text(&w)).unwrap(), w);
        }
    }

    #[test]
    fn header_edge_cases() {
        assert!(matches!(parse_coxeter(""), Err(ParseError::Empty)));
        assert!(matches!(parse_coxeter("# only comments\n\n"), Err(ParseError::Empty)));
        assert!(matches!(parse_coxeter("0\n"), Err(ParseError::BadHeader { .. })));
        assert!(matches!(parse_coxeter("5 x\n"), Err(ParseError::BadHeader { .. })));
        // Whitespace and inline comments are tolerated.
        let w = parse_coxeter("  3  # three generators\n 1   2  inf # edge\n").unwrap();
        assert_eq!(w.label(0, 1), INF);
        // Self-loops and fractional exponents are not.
        assert!(matches!(parse_coxeter("2\n1 1 3\n"), Err(ParseError::BadExponent { .. })));
        assert!(matches!(parse_coxeter("2\n1 2 3.5\n"), Err(ParseError::BadExponent { .. })));
    }
}

mod components {
    use super::*;

    #[test]
    fn no_edge_means_singletons() {
        let w = from_edges(2, &[]);
        let comps = irreducible_components(&w);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0]);
        assert_eq!(comps[1].vertices, vec![1]);
    }

    #[test]
    fn ex91_is_irreducible() {
        assert_eq!(irreducible_components(&ex91()).len(), 1);
    }

    #[test]
    fn two_disjoint_edges() {
        let w = from_edges(4, &[(0, 1, lab(3)), (2, 3, INF)]);
        let comps = irreducible_components(&w);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0, 1]);
        assert_eq!(comps[1].vertices, vec![2, 3]);
        assert!(comps.iter().all(|c| {
            let sub = w.induced(&c.vertices);
            irreducible_components(&sub).len() == 1
        }));
    }
}

mod tables {
    use super::*;

    // Hand-built fixtures, written straight from the table pictures and
    // kept independent of the catalog builders.

    #[test]
    fn a_family() {
        assert_eq!(classify_whole(&from_edges(1, &[])), GroupClass::Spherical(Sf::A(1)));
        let a3 = from_edges(3, &[(0, 1, lab(3)), (1, 2, lab(3))]);
        assert_eq!(classify_whole(&a3), GroupClass::Spherical(Sf::A(3)));
    }

    #[test]
    fn b_family() {
        let b2 = from_edges(2, &[(0, 1, lab(4))]);
        assert_eq!(classify_whole(&b2), GroupClass::Spherical(Sf::B(2)));
        let b4 = from_edges(4, &[(0, 1, lab(4)), (1, 2, lab(3)), (2, 3, lab(3))]);
        assert_eq!(classify_whole(&b4), GroupClass::Spherical(Sf::B(4)));
        // The 4 may sit at either end.
        let b3 = from_edges(3, &[(0, 1, lab(3)), (1, 2, lab(4))]);
        assert_eq!(classify_whole(&b3), GroupClass::Spherical(Sf::B(3)));
    }

    #[test]
    fn d_family() {
        let d4 = from_edges(4, &[(0, 1, lab(3)), (1, 2, lab(3)), (1, 3, lab(3))]);
        assert_eq!(classify_whole(&d4), GroupClass::Spherical(Sf::D(4)));
        let d5 =
            from_edges(5, &[(0, 1, lab(3)), (1, 2, lab(3)), (2, 3, lab(3)), (2, 4, lab(3))]);
        assert_eq!(classify_whole(&d5), GroupClass::Spherical(Sf::D(5)));
    }

    #[test]
    fn dihedral_family() {
        for p in [5u32, 6, 7, 100] {
            let w = from_edges(2, &[(0, 1, lab(p))]);
            assert_eq!(classify_whole(&w), GroupClass::Spherical(Sf::I2(p)));
        }
    }

    #[test]
    fn h_and_f_families() {
        let h3 = from_edges(3, &[(0, 1, lab(5)), (1, 2, lab(3))]);
        assert_eq!(classify_whole(&h3), GroupClass::Spherical(Sf::H3));
        let h4 = from_edges(4, &[(0, 1, lab(5)), (1, 2, lab(3)), (2, 3, lab(3))]);
        assert_eq!(classify_whole(&h4), GroupClass::Spherical(Sf::H4));
        let f4 = from_edges(4, &[(0, 1, lab(3)), (1, 2, lab(4)), (2, 3, lab(3))]);
        assert_eq!(classify_whole(&f4), GroupClass::Spherical(Sf::F4));
    }

    #[test]
    fn e_families() {
        // E6: path of 5 with a node hanging off the middle.
        let e6 = from_edges(
            6,
            &[(0, 1, lab(3)), (1, 2, lab(3)), (2, 3, lab(3)), (3, 4, lab(3)), (2, 5, lab(3))],
        );
        assert_eq!(classify_whole(&e6), GroupClass::Spherical(Sf::E6));
        let e7 = from_edges(
            7,
            &[
                (0, 1, lab(3)),
                (1, 2, lab(3)),
                (2, 3, lab(3)),
                (3, 4, lab(3)),
                (4, 5, lab(3)),
                (2, 6, lab(3)),
            ],
        );
        assert_eq!(classify_whole(&e7), GroupClass::Spherical(Sf::E7));
        let e8 = from_edges(
            8,
            &[
                (0, 1, lab(3)),
                (1, 2, lab(3)),
                (2, 3, lab(3)),
                (3, 4, lab(3)),
                (4, 5, lab(3)),
                (5, 6, lab(3)),
                (2, 7, lab(3)),
            ],
        );
        assert_eq!(classify_whole(&e8), GroupClass::Spherical(Sf::E8));
    }

    #[test]
    fn affine_a_family() {
        let a1t = from_edges(2, &[(0, 1, INF)]);
        assert_eq!(classify_whole(&a1t), GroupClass::Affine(Af::ATilde(1)));
        let triangle = from_edges(3, &[(0, 1, lab(3)), (1, 2, lab(3)), (0, 2, lab(3))]);
        assert_eq!(classify_whole(&triangle), GroupClass::Affine(Af::ATilde(2)));
        let square =
            from_edges(4, &[(0, 1, lab(3)), (1, 2, lab(3)), (2, 3, lab(3)), (0, 3, lab(3))]);
        assert_eq!(classify_whole(&square), GroupClass::Affine(Af::ATilde(3)));
    }

    #[test]
    fn affine_bc_families() {
        let bc2 = from_edges(3, &[(0, 1, lab(4)), (1, 2, lab(4))]);
        assert_eq!(classify_whole(&bc2), GroupClass::Affine(Af::BC2Tilde));
        let c3 = from_edges(4, &[(0, 1, lab(4)), (1, 2, lab(3)), (2, 3, lab(4))]);
        assert_eq!(classify_whole(&c3), GroupClass::Affine(Af::CTilde(3)));
        // B̃3: star with one 4-labeled spoke.
        let b3 = from_edges(4, &[(0, 1, lab(4)), (1, 2, lab(3)), (1, 3, lab(3))]);
        assert_eq!(classify_whole(&b3), GroupClass::Affine(Af::BTilde(3)));
        // B̃4: 4-label at one end, fork at the other.
        let b4 = from_edges(
            5,
            &[(0, 1, lab(4)), (1, 2, lab(3)), (2, 3, lab(3)), (2, 4, lab(3))],
        );
        assert_eq!(classify_whole(&b4), GroupClass::Affine(Af::BTilde(4)));
    }

    #[test]
    fn affine_d_family() {
        // D̃4 is the 4-star.
        let d4 = from_edges(
            5,
            &[(0, 2, lab(3)), (1, 2, lab(3)), (2, 3, lab(3)), (2, 4, lab(3))],
        );
        assert_eq!(classify_whole(&d4), GroupClass::Affine(Af::DTilde(4)));
        // D̃5: two adjacent forks.
        let d5 = from_edges(
            6,
            &[(0, 2, lab(3)), (1, 2, lab(3)), (2, 3, lab(3)), (3, 4, lab(3)), (3, 5, lab(3))],
        );
        assert_eq!(classify_whole(&d5), GroupClass::Affine(Af::DTilde(5)));
    }

    #[test]
    fn affine_exceptional_families() {
        let g2 = from_edges(3, &[(0, 1, lab(6)), (1, 2, lab(3))]);
        assert_eq!(classify_whole(&g2), GroupClass::Affine(Af::GTilde2));
        let f4 = from_edges(
            5,
            &[(0, 1, lab(3)), (1, 2, lab(4)), (2, 3, lab(3)), (3, 4, lab(3))],
        );
        assert_eq!(classify_whole(&f4), GroupClass::Affine(Af::FTilde4));
        // Ẽ6: three arms of length 2.
        let e6 = from_edges(
            7,
            &[
                (0, 1, lab(3)),
                (1, 2, lab(3)),
                (0, 3, lab(3)),
                (3, 4, lab(3)),
                (0, 5, lab(3)),
                (5, 6, lab(3)),
            ],
        );
        assert_eq!(classify_whole(&e6), GroupClass::Affine(Af::ETilde6));
        // Ẽ7: arms 1, 3, 3.
        let e7 = from_edges(
            8,
            &[
                (0, 1, lab(3)),
                (0, 2, lab(3)),
                (2, 3, lab(3)),
                (3, 4, lab(3)),
                (0, 5, lab(3)),
                (5, 6, lab(3)),
                (6, 7, lab(3)),
            ],
        );
        assert_eq!(classify_whole(&e7), GroupClass::Affine(Af::ETilde7));
        // Ẽ8: arms 1, 2, 5.
        let e8 = from_edges(
            9,
            &[
                (0, 1, lab(3)),
                (0, 2, lab(3)),
                (2, 3, lab(3)),
                (0, 4, lab(3)),
                (4, 5, lab(3)),
                (5, 6, lab(3)),
                (6, 7, lab(3)),
                (7, 8, lab(3)),
            ],
        );
        assert_eq!(classify_whole(&e8), GroupClass::Affine(Af::ETilde8));
    }

    #[test]
    fn large_negatives() {
        // 6-6 path matches nothing.
        let w = from_edges(3, &[(0, 1, lab(6)), (1, 2, lab(6))]);
        assert_eq!(classify_whole(&w), GroupClass::Large);
        // 5 in the middle of a 4-path.
        let w = from_edges(4, &[(0, 1, lab(3)), (1, 2, lab(5)), (2, 3, lab(3))]);
        assert_eq!(classify_whole(&w), GroupClass::Large);
        // Cycle with one label 4.
        let w = from_edges(3, &[(0, 1, lab(3)), (1, 2, lab(3)), (0, 2, lab(4))]);
        assert_eq!(classify_whole(&w), GroupClass::Large);
        // ∞ edge on three or more vertices.
        let w = from_edges(3, &[(0, 1, INF), (1, 2, lab(3))]);
        assert_eq!(classify_whole(&w), GroupClass::Large);
        // Two independent cycles.
        let w = from_edges(
            4,
            &[(0, 1, lab(3)), (1, 2, lab(3)), (0, 2, lab(3)), (2, 3, lab(3)), (1, 3, lab(3))],
        );
        assert_eq!(classify_whole(&w), GroupClass::Large);
        // Star with arms (2,2,3).
        let w = from_edges(
            8,
            &[
                (0, 1, lab(3)),
                (1, 2, lab(3)),
                (0, 3, lab(3)),
                (3, 4, lab(3)),
                (0, 5, lab(3)),
                (5, 6, lab(3)),
                (6, 7, lab(3)),
            ],
        );
        assert_eq!(classify_whole(&w), GroupClass::Large);
        // The 6-generator fixture's full diagram matches no table entry.
        assert_eq!(classify_whole(&ex92()), GroupClass::Large);
        assert_eq!(classify_whole(&ex93()), GroupClass::Large);
    }

    #[test]
    fn catalog_builders_classify_to_themselves() {
        let mut sphericals = vec![
            Sf::H3,
            Sf::H4,
            Sf::F4,
            Sf::E6,
            Sf::E7,
            Sf::E8,
            Sf::I2(5),
            Sf::I2(6),
            Sf::I2(7),
            Sf::I2(100),
        ];
        for n in 1..=9 {
            sphericals.push(Sf::A(n));
        }
        for n in 2..=9 {
            sphericals.push(Sf::B(n));
        }
        for n in 4..=9 {
            sphericals.push(Sf::D(n));
        }
        for fam in sphericals {
            let w = catalog::spherical(fam);
            assert_eq!(classify_whole(&w), GroupClass::Spherical(fam), "{fam}");
        }
        let mut affines = vec![
            Af::ATilde(1),
            Af::BC2Tilde,
            Af::GTilde2,
            Af::FTilde4,
            Af::ETilde6,
            Af::ETilde7,
            Af::ETilde8,
        ];
        for n in 2..=8 {
            affines.push(Af::ATilde(n));
        }
        for n in 3..=8 {
            affines.push(Af::BTilde(n));
            affines.push(Af::CTilde(n));
        }
        for n in 4..=8 {
            affines.push(Af::DTilde(n));
        }
        for fam in affines {
            let w = catalog::affine(fam);
            assert_eq!(classify_whole(&w), GroupClass::Affine(fam), "{fam}");
        }
    }
}

mod subsets {
    use super::*;

    fn atilde_k_ge2(sub: &StandardSubgroup) -> bool {
        matches!(
            classify_connected(&sub.matrix),
            Ok(GroupClass::Affine(Af::ATilde(k))) if k >= 2
        )
    }

    #[test]
    fn connected_subsets_of_infinite_dihedral() {
        let w = from_edges(2, &[(0, 1, INF)]);
        let subs = enumerate_standard_subgroups(&w, |s| {
            irreducible_components(&s.matrix).len() == 1
        })
        .unwrap();
        let subsets: Vec<Vec<usize>> = subs.into_iter().map(|s| s.subset).collect();
        assert_eq!(subsets, vec![vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn ex93_has_exactly_the_triangle() {
        let subs = enumerate_standard_subgroups(&ex93(), atilde_k_ge2).unwrap();
        let subsets: Vec<Vec<usize>> = subs.into_iter().map(|s| s.subset).collect();
        assert_eq!(subsets, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn ex91_has_no_atilde_k_ge2() {
        assert!(enumerate_standard_subgroups(&ex91(), atilde_k_ge2).unwrap().is_empty());
    }

    #[test]
    fn budget_enforced() {
        let w = from_edges(21, &(0..20).map(|i| (i, i + 1, lab(3))).collect::<Vec<_>>());
        assert!(matches!(
            enumerate_standard_subgroups(&w, |_| true),
            Err(CoxeterError::SubsetBudget { n: 21 })
        ));
    }
}

mod conditions {
    use super::*;

    #[test]
    fn ic_on_ex91() {
        let (holds, witness) = condition_ic(&ex91());
        assert!(holds);
        let (s1, s2) = witness.unwrap();
        assert_eq!(s1, vec![0, 1]);
        assert_eq!(s2, vec![3, 4]);
    }

    #[test]
    fn ic_fails_on_ex93_and_dihedral() {
        assert!(!condition_ic(&ex93()).0);
        let w = from_edges(2, &[(0, 1, INF)]);
        assert!(!condition_ic(&w).0);
    }

    #[test]
    fn atilde_on_ex93() {
        assert!(condition_atilde(&ex93()).0);
    }

    #[test]
    fn atilde_fails_on_embedded_bc2() {
        // B̃2=C̃2 as a standard subgroup of a larger diagram.
        let w = from_edges(4, &[(0, 1, lab(4)), (1, 2, lab(4)), (2, 3, INF)]);
        let (ok, witness) = condition_atilde(&w);
        assert!(!ok);
        assert_eq!(witness.unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn atilde_trivially_true_without_cycles_or_large_labels() {
        let w = from_edges(4, &[(0, 1, lab(3)), (1, 2, lab(3)), (2, 3, lab(3))]);
        assert!(condition_atilde(&w).0);
    }

    #[test]
    fn hyperbolicity_of_examples() {
        assert!(ex92().is_word_hyperbolic());
        assert!(!ex91().is_word_hyperbolic());
        assert!(!ex93().is_word_hyperbolic());
    }

    #[test]
    fn admits_cc_rep() {
        assert!(admits_cc_reflection_rep(&ex93()).unwrap());
        assert!(!admits_cc_reflection_rep(&ex91()).unwrap());
        assert!(admits_cc_reflection_rep(&ex92()).unwrap());
        // Finite and reducible inputs are rejected.
        let fin = from_edges(2, &[(0, 1, lab(3))]);
        assert!(matches!(admits_cc_reflection_rep(&fin), Err(CoxeterError::FiniteGroup)));
        let red = from_edges(4, &[(0, 1, INF), (2, 3, INF)]);
        assert!(matches!(admits_cc_reflection_rep(&red), Err(CoxeterError::Reducible)));
    }

    #[test]
    fn hyperbolic_implies_admissible_on_samples() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(17);
        let mut checked = 0;
        for _ in 0..400 {
            let n = rng.gen_range(2..=5);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if j == i + 1 || rng.gen_bool(0.35) {
                        let l = match rng.gen_range(0..5) {
                            0 => lab(3),
                            1 => lab(4),
                            2 => lab(5),
                            3 => lab(6),
                            _ => INF,
                        };
                        edges.push((i, j, l));
                    }
                }
            }
            let w = from_edges(n, &edges);
            if !w.is_irreducible() || !w.is_infinite() {
                continue;
            }
            if w.is_word_hyperbolic() {
                checked += 1;
                assert!(admits_cc_reflection_rep(&w).unwrap());
            }
        }
        assert!(checked > 20, "sampler produced too few hyperbolic groups");
    }

    #[test]
    fn peripherals_of_ex93() {
        let ps = peripheral_subgroups(&ex93()).unwrap();
        assert_eq!(ps, vec![(vec![0, 1, 2], vec![])]);
    }

    #[test]
    fn peripherals_of_hyperbolic_group_empty() {
        assert!(peripheral_subgroups(&ex92()).unwrap().is_empty());
    }

    #[test]
    fn peripherals_reject_affine_input() {
        let square =
            from_edges(4, &[(0, 1, lab(3)), (1, 2, lab(3)), (2, 3, lab(3)), (0, 3, lab(3))]);
        assert!(peripheral_subgroups(&square).is_err());
    }

    #[test]
    fn peripheral_commutant_is_finite_when_nonempty() {
        // Triangle plus a commuting far generator: U⊥ = {3} is finite.
        let w = from_edges(5, &[
            (0, 1, lab(3)),
            (1, 2, lab(3)),
            (0, 2, lab(3)),
            (3, 4, lab(3)),
            (2, 4, lab(4)),
        ]);
        // 3 commutes with the triangle {0,1,2}; 4 does not (m[2][4]=4).
        let ps = peripheral_subgroups(&w).unwrap();
        assert_eq!(ps, vec![(vec![0, 1, 2], vec![3])]);
    }
}

proptest! {
    #[test]
    fn classify_invariant_under_relabeling(seed in 0u64..500) {
        use rand::rngs::StdRng;
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(seed);
        let families: Vec<CoxeterMatrix> = vec![
            catalog::spherical(Sf::A(5)),
            catalog::spherical(Sf::B(4)),
            catalog::spherical(Sf::D(6)),
            catalog::spherical(Sf::E7),
            catalog::spherical(Sf::F4),
            catalog::spherical(Sf::H4),
            catalog::affine(Af::ATilde(3)),
            catalog::affine(Af::BTilde(4)),
            catalog::affine(Af::CTilde(3)),
            catalog::affine(Af::DTilde(5)),
            catalog::affine(Af::FTilde4),
            catalog::affine(Af::ETilde6),
            ex92(),
            ex93(),
        ];
        let w = families[rng.gen_range(0..families.len())].clone();
        let n = w.size();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let relabeled = CoxeterMatrix::new(
            &(0..n)
                .map(|i| (0..n).map(|j| w.label(perm[i], perm[j])).collect())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        prop_assert_eq!(classify_whole(&relabeled), classify_whole(&w));
    }

    #[test]
    fn components_partition_vertices(seed in 0u64..200) {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(seed);
        let n = rng.gen_range(1..=8);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.3) {
                    edges.push((i, j, lab(rng.gen_range(3..=6))));
                }
            }
        }
        let w = from_edges(n, &edges);
        let comps = irreducible_components(&w);
        let mut seen = vec![false; n];
        for c in &comps {
            for &v in &c.vertices {
                prop_assert!(!seen[v]);
                seen[v] = true;
            }
            let sub = w.induced(&c.vertices);
            prop_assert_eq!(irreducible_components(&sub).len(), 1);
        }
        prop_assert!(seen.iter().all(|&s| s));
    }
}
