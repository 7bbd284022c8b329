//! Randomized checks of the linear-algebra substrate plus the structural
//! identities the verification layer leans on. Everything is exact; a
//! failing case here means a wrong theorem elsewhere would go unnoticed.

use proptest::prelude::*;

use lieh2::algebra::ProductMode;
use lieh2::catalog;
use lieh2::cyclic::{a_commutator_space, commutator_space, hc1, hc1_relative, t_relative};
use lieh2::field::FieldSpec;
use lieh2::homology::{b_relative, h2, representative_span};
use lieh2::multilinear::{sym2_action_span, sym_mult_map, MultTarget, MultilinearBasis};
use lieh2::verify::{verify_current_h2, verify_matrix_remarks};
use lieh2::{BasedAlgebra, QuotientSpace, SparseMatrix, SparseVec, Subspace};

fn int_rows() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..5, c), r))
}

fn matrix_over(field: FieldSpec, rows: &[Vec<i64>]) -> SparseMatrix {
    let cols = rows[0].len();
    let built = rows
        .iter()
        .map(|row| {
            SparseVec::from_pairs(
                cols,
                row.iter()
                    .enumerate()
                    .map(|(j, n)| (j, field.integer(*n)))
                    .collect(),
            )
        })
        .collect();
    SparseMatrix::from_rows(field, cols, built)
}

fn space_over(field: FieldSpec, ambient: usize, rows: &[Vec<i64>]) -> Subspace {
    let built = rows
        .iter()
        .map(|row| {
            SparseVec::from_pairs(
                ambient,
                row.iter()
                    .enumerate()
                    .map(|(j, n)| (j, field.integer(*n)))
                    .collect(),
            )
        })
        .collect();
    Subspace::from_rows(field, ambient, built)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(
        nums in prop::collection::vec(-20i64..21, 3),
        dens in prop::collection::vec(1i64..12, 3),
    ) {
        for field in [
            FieldSpec::RATIONALS,
            FieldSpec::prime(3).unwrap(),
            FieldSpec::prime(5).unwrap(),
            FieldSpec::prime(7).unwrap(),
        ] {
            // denominators may vanish mod p; those triples are skipped
            let built: Vec<_> = nums
                .iter()
                .zip(&dens)
                .filter_map(|(n, d)| field.ratio(*n, *d).ok())
                .collect();
            if built.len() < 3 {
                continue;
            }
            let (a, b, c) = (&built[0], &built[1], &built[2]);
            prop_assert_eq!(&(a + b), &(b + a));
            prop_assert_eq!(&(&(a + b) + c), &(a + &(b + c)));
            prop_assert_eq!(&(&(a * b) * c), &(a * &(b * c)));
            prop_assert_eq!(&(a * &(b + c)), &(&(a * b) + &(a * c)));
            prop_assert!((a + &(-a)).is_zero());
            if !a.is_zero() {
                prop_assert!((a * &a.inv()).is_one());
            }
        }
    }

    #[test]
    fn rank_nullity_image_and_solve(rows in int_rows()) {
        for field in [FieldSpec::RATIONALS, FieldSpec::prime(5).unwrap()] {
            let m = matrix_over(field, &rows);
            let rank = m.rank();
            prop_assert_eq!(rank + Subspace::kernel_of(&m).dim(), m.cols());
            prop_assert_eq!(Subspace::column_space(&m).dim(), rank);
            prop_assert_eq!(m.transpose().rank(), rank);
            for k in m.kernel() {
                prop_assert!(m.apply(&k).is_zero());
            }
            // solvability along the image: b = m·x must be recovered
            let x = SparseVec::from_pairs(
                m.cols(),
                (0..m.cols()).map(|j| (j, field.integer(j as i64 % 3 - 1))).collect(),
            );
            let b = m.apply(&x);
            let solved = m.solve(&b).expect("b lies in the image");
            prop_assert_eq!(&m.apply(&solved), &b);
        }
    }

    #[test]
    fn echelon_form_is_canonical(
        rows in int_rows(),
        seed in 0usize..24,
        ops in prop::collection::vec((0usize..5, 0usize..5, -3i64..4), 0..6),
    ) {
        let field = FieldSpec::RATIONALS;
        let ambient = rows[0].len();
        let reference = space_over(field, ambient, &rows);

        // a row-equivalent generating set: rotate, then add multiples of
        // one generator to another
        let mut twisted: Vec<SparseVec> = reference
            .basis()
            .iter()
            .cloned()
            .chain(rows.iter().map(|row| {
                SparseVec::from_pairs(
                    ambient,
                    row.iter().enumerate().map(|(j, n)| (j, field.integer(*n))).collect(),
                )
            }))
            .collect();
        if !twisted.is_empty() {
            let by = seed % twisted.len();
            twisted.rotate_left(by);
        }
        for (i, j, k) in ops {
            if i != j && i < twisted.len() && j < twisted.len() {
                let scaled = twisted[j].scaled(&field.integer(k));
                twisted[i] = twisted[i].add(&scaled);
            }
        }
        let again = Subspace::from_rows(field, ambient, twisted);
        prop_assert_eq!(again.basis(), reference.basis());
        prop_assert_eq!(again.pivots(), reference.pivots());

        // idempotence: echelonizing an echelon basis is the identity
        let fixed = Subspace::from_rows(field, ambient, reference.basis().to_vec());
        prop_assert_eq!(fixed.basis(), reference.basis());
    }

    #[test]
    fn modular_rank_never_exceeds_rational_rank(rows in int_rows()) {
        let rational = matrix_over(FieldSpec::RATIONALS, &rows).rank();
        for p in [5, 7, 11] {
            let modular = matrix_over(FieldSpec::prime(p).unwrap(), &rows).rank();
            prop_assert!(modular <= rational, "rank over F{} = {} > {}", p, modular, rational);
        }
    }

    #[test]
    fn sum_and_intersection_dimensions_balance(
        left in int_rows(),
        right in int_rows(),
    ) {
        let ambient = left[0].len().max(right[0].len());
        let pad = |rows: &[Vec<i64>]| -> Vec<Vec<i64>> {
            rows.iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.resize(ambient, 0);
                    r
                })
                .collect()
        };
        for field in [FieldSpec::RATIONALS, FieldSpec::prime(5).unwrap()] {
            let u = space_over(field, ambient, &pad(&left));
            let w = space_over(field, ambient, &pad(&right));
            let s = u.sum(&w).unwrap();
            let i = u.intersect(&w).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            prop_assert!(s.contains_subspace(&u) && s.contains_subspace(&w));
            prop_assert!(u.contains_subspace(&i) && w.contains_subspace(&i));
        }
    }

    #[test]
    fn quotient_bookkeeping(
        rows in int_rows(),
        probe in prop::collection::vec(-4i64..5, 1..6),
    ) {
        let field = FieldSpec::RATIONALS;
        let ambient = rows[0].len();
        let q = QuotientSpace::new(space_over(field, ambient, &rows));
        prop_assert_eq!(q.dim() + q.denominator().dim(), ambient);

        let v = SparseVec::from_pairs(
            ambient,
            probe.iter().enumerate().filter(|(j, _)| *j < ambient)
                .map(|(j, n)| (j, field.integer(*n))).collect(),
        );
        let reduced = q.reduce(&v);
        prop_assert_eq!(&q.reduce(&reduced), &reduced);
        prop_assert!(q.denominator().contains(&v.sub(&reduced)));

        // coords ∘ lift_coords is the identity on quotient coordinates
        let w = SparseVec::from_pairs(
            q.dim(),
            probe.iter().enumerate().filter(|(j, _)| *j < q.dim())
                .map(|(j, n)| (j, field.integer(*n))).collect(),
        );
        prop_assert_eq!(&q.coords(&q.lift_coords(&w)), &w);
        prop_assert_eq!(q.projection_matrix().rank(), q.dim());
    }
}

#[test]
fn power_basis_dimensions_and_round_trips() {
    for n in 0..9usize {
        let w2 = MultilinearBasis::wedge2(n);
        let s2 = MultilinearBasis::sym2(n);
        let w3 = MultilinearBasis::wedge3(n);
        assert_eq!(w2.dim(), n * n.saturating_sub(1) / 2);
        assert_eq!(s2.dim(), n * (n + 1) / 2);
        assert_eq!(w3.dim(), if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 });
        assert_eq!(w2.dim() + s2.dim(), n * n);
        for flat in 0..w2.dim() {
            let (i, j) = w2.pair_at(flat);
            assert!(i < j);
            assert_eq!(w2.pair_index(i, j), flat);
        }
        for flat in 0..s2.dim() {
            let (i, j) = s2.pair_at(flat);
            assert!(i <= j);
            assert_eq!(s2.pair_index(i, j), flat);
        }
        for flat in 0..w3.dim() {
            let (i, j, k) = w3.triple_at(flat);
            assert!(i < j && j < k);
            assert_eq!(w3.triple_index(i, j, k), flat);
        }
    }
}

#[test]
fn current_tensor_inherits_the_jacobi_identity() {
    let f = FieldSpec::RATIONALS;
    for l_name in ["abelian2", "nonabelian2", "heisenberg1", "sl2", "sl3"] {
        let l = catalog::build(l_name, f).unwrap().algebra;
        for a_name in [
            "unit_field",
            "dual_numbers",
            "square_zero2",
            "trunc3",
            "product_fields2",
            "cyclic_group_algebra3",
        ] {
            let a = catalog::build(a_name, f).unwrap().algebra;
            let cur = BasedAlgebra::current_tensor(&l, &a).unwrap();
            assert!(
                cur.validate().is_empty(),
                "{l_name}⊗{a_name} fails an axiom"
            );
        }
    }
}

#[test]
fn commutators_sit_inside_weighted_commutators() {
    // for unital A, [A,A] ⊆ A[A,A]: multiply by the unit
    let f = FieldSpec::RATIONALS;
    for name in catalog::all_names() {
        let a = catalog::build(&name, f).unwrap().algebra;
        if a.is_lie() {
            continue;
        }
        let comm = commutator_space(&a).unwrap();
        let weighted = a_commutator_space(&a).unwrap();
        assert!(weighted.contains_subspace(&comm), "{name}");
    }
}

#[test]
fn span_product_is_monotone_and_spanning_set_free() {
    let f = FieldSpec::RATIONALS;
    let l = catalog::build("gl2", f).unwrap().algebra;
    let dim = l.dim();
    let unit = |i: usize| SparseVec::unit(dim, i, &f);

    let small = Subspace::from_rows(f, dim, vec![unit(0), unit(1)]);
    let large = Subspace::from_rows(f, dim, vec![unit(0), unit(1), unit(2)]);
    let full = Subspace::full(f, dim);
    let s_small = l.span_product(&small, &full, ProductMode::Bracket).unwrap();
    let s_large = l.span_product(&large, &full, ProductMode::Bracket).unwrap();
    assert!(s_large.contains_subspace(&s_small));

    // a redundant generating set spans the same space, so the product
    // span is identical
    let redundant = Subspace::from_rows(
        f,
        dim,
        vec![
            unit(0),
            unit(1),
            unit(0).add(&unit(1)),
            unit(1).scaled(&f.integer(7)),
        ],
    );
    let via_redundant = l
        .span_product(&redundant, &full, ProductMode::Bracket)
        .unwrap();
    let via_basis = l.span_product(&small, &full, ProductMode::Bracket).unwrap();
    assert_eq!(via_redundant.basis(), via_basis.basis());

    let a = catalog::build("matrix2", f).unwrap().algebra;
    for mode in [ProductMode::Associative, ProductMode::Jordan] {
        let m_small = a.span_product(&small, &full, mode).unwrap();
        let m_large = a.span_product(&large, &full, mode).unwrap();
        assert!(m_large.contains_subspace(&m_small));
    }
}

#[test]
fn symmetric_action_lands_in_the_multiplication_kernel() {
    // the commutator action of A⁽⁻⁾ on S²A maps into Ker(S²A → A/[A,A]),
    // which is what makes the third tensor-square component well-posed
    let f = FieldSpec::RATIONALS;
    for name in catalog::all_names() {
        let a = catalog::build(&name, f).unwrap().algebra;
        if a.is_lie() {
            continue;
        }
        let minus = a.associated_lie().unwrap();
        let action = sym2_action_span(&minus);
        let kernel =
            Subspace::kernel_of(&sym_mult_map(&a, MultTarget::Abelianization).unwrap().matrix);
        assert!(kernel.contains_subspace(&action), "{name}");
    }
}

#[test]
fn relative_coinvariants_are_doubly_monotone() {
    let f = FieldSpec::RATIONALS;
    let l = catalog::build("gl2", f).unwrap().algebra;
    let dim = l.dim();
    let zero = Subspace::zero(f, dim);
    let center = {
        // scalar matrices: e00 + e11 in the gl2 basis order
        let v = SparseVec::unit(dim, 0, &f).add(&SparseVec::unit(dim, 3, &f));
        Subspace::from_rows(f, dim, vec![v])
    };
    let derived = l.derived_subspace();
    let full = Subspace::full(f, dim);
    for s in [&center, &derived] {
        assert!(l.is_ideal(s).unwrap());
    }

    let chains: Vec<Vec<(&Subspace, &Subspace)>> = vec![
        vec![
            (&zero, &center),
            (&center, &center),
            (&center, &full),
            (&full, &full),
        ],
        vec![(&zero, &derived), (&full, &derived), (&full, &full)],
    ];
    for chain in chains {
        let mut previous: Option<Subspace> = None;
        for (i, j) in chain {
            let r = b_relative(&l, i, j).unwrap();
            let span = representative_span(f, &r);
            if let Some(p) = &previous {
                assert!(
                    span.sum(p).unwrap().dim() == span.dim(),
                    "relative coinvariants shrank along the chain"
                );
            }
            previous = Some(span);
        }
    }
}

#[test]
fn direct_sum_contains_both_summands() {
    // K² ⊕ heisenberg as a 5-dim Lie algebra: only the heisenberg block
    // brackets; H₂ picks up both summands plus the mixed wedge classes
    let f = FieldSpec::RATIONALS;
    let labels = ["a1", "a2", "e", "f", "z"].map(String::from).to_vec();
    let z = SparseVec::unit(5, 4, &f);
    let sum = BasedAlgebra::lie(f, labels, vec![(2, 3, z)]).unwrap();
    assert!(sum.validate().is_empty());

    let h2_sum = h2(&sum).dimension;
    let h2_abelian = h2(&catalog::build("abelian2", f).unwrap().algebra).dimension;
    let h2_heis = h2(&catalog::build("heisenberg1", f).unwrap().algebra).dimension;
    assert!(h2_sum >= h2_abelian + h2_heis);
    // the excess is the mixed block (L₁/[L₁,L₁]) ⊗ (L₂/[L₂,L₂]) of dim 4
    assert_eq!(h2_sum, 7);
}

#[test]
fn relative_cyclic_bundle_fills_the_reduced_wedge() {
    // dim T(A,[A,A]) + dim HC₁(A,[A,A]) = dim Λ²(A/[A,A])
    let f = FieldSpec::RATIONALS;
    for name in catalog::all_names() {
        let a = catalog::build(&name, f).unwrap().algebra;
        if a.is_lie() {
            continue;
        }
        let q = a.dim() - commutator_space(&a).unwrap().dim();
        assert_eq!(
            t_relative(&a).unwrap().dimension + hc1_relative(&a).unwrap().dimension,
            q * (q - 1) / 2,
            "{name}"
        );
    }
}

#[test]
fn matrix_algebras_have_no_first_cyclic_homology() {
    let f = FieldSpec::RATIONALS;
    for n in [2, 3] {
        let m = catalog::matrix(f, n).unwrap();
        assert_eq!(hc1(&m).unwrap().dimension, 0, "M_{n}");
    }
}

#[test]
fn identities_survive_characteristic_seven() {
    let f7 = FieldSpec::prime(7).unwrap();
    let l = catalog::build("heisenberg1", f7).unwrap().algebra;
    let a = catalog::build("square_zero2", f7).unwrap().algebra;
    let r = verify_current_h2(&l, &a).unwrap();
    assert!(r.pass);
    assert_eq!(r.lhs_dim, 18);

    let sl2 = catalog::build("sl2", f7).unwrap().algebra;
    let dual = catalog::build("dual_numbers", f7).unwrap().algebra;
    assert!(verify_current_h2(&sl2, &dual).unwrap().pass);
    assert!(verify_matrix_remarks(&dual, 2).unwrap().pass);
}
