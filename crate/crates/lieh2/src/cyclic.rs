//! First cyclic homology of associative algebras and the commutator-related
//! subspaces of Λ²A that feed the tensor-square bracket decomposition.
//!
//! Everything is built from the cyclic relation span
//! T(A) = ⟨xy∧z + zx∧y + yz∧x⟩ inside Λ²A.

use crate::algebra::{AlgebraKind, BasedAlgebra, ProductMode};
use crate::homology::{subquotient, HomologyResult};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::multilinear::MultilinearBasis;
use crate::subspace::Subspace;
use crate::Error;

/// Which quotient to call HC₁ for noncommutative input. For commutative
/// algebras every commutator vanishes, so the two choices agree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Hc1Definition {
    /// Ker(Λ²A → A, x∧y ↦ xy − yx) modulo T(A). T(A) lands in the kernel
    /// because the algebra is associative, so this is always well formed.
    #[default]
    KernelOfBracket,
    /// All of Λ²A modulo T(A).
    FullWedge,
}

fn require_associative(a: &BasedAlgebra, what: &str) -> Result<(), Error> {
    if a.kind() != AlgebraKind::Associative {
        return Err(Error::Unsupported(format!(
            "{what} needs an associative algebra"
        )));
    }
    Ok(())
}

/// T(A) ⊆ Λ²A, spanned by xy∧z + zx∧y + yz∧x over basis triples. The
/// generator is invariant under cyclic rotation (and for commutative A under
/// all permutations), so only canonical triples are enumerated.
pub fn t_span(a: &BasedAlgebra) -> Result<Subspace, Error> {
    require_associative(a, "the cyclic relation span")?;
    let n = a.dim();
    let field = a.field();
    let w2 = MultilinearBasis::wedge2(n);
    let units: Vec<SparseVec> = (0..n).map(|i| SparseVec::unit(n, i, &field)).collect();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in i..n {
                if a.is_commutative() && k < j {
                    continue;
                }
                let g = w2
                    .wedge_vec(a.basis_product(i, j), &units[k])
                    .add(&w2.wedge_vec(a.basis_product(k, i), &units[j]))
                    .add(&w2.wedge_vec(a.basis_product(j, k), &units[i]));
                if !g.is_zero() {
                    rows.push(g);
                }
            }
        }
    }
    Ok(Subspace::from_rows(field, w2.dim(), rows))
}

/// Λ²A → A, x∧y ↦ xy − yx.
pub fn wedge_bracket_map(a: &BasedAlgebra) -> Result<SparseMatrix, Error> {
    require_associative(a, "the wedge-to-bracket map")?;
    let n = a.dim();
    let field = a.field();
    let w2 = MultilinearBasis::wedge2(n);
    let mut columns = Vec::with_capacity(w2.dim());
    for flat in 0..w2.dim() {
        let (i, j) = w2.pair_at(flat);
        columns.push(a.basis_product(i, j).sub(a.basis_product(j, i)));
    }
    Ok(SparseMatrix::from_columns(field, n, columns))
}

pub fn hc1(a: &BasedAlgebra) -> Result<HomologyResult, Error> {
    hc1_with(a, Hc1Definition::default())
}

pub fn hc1_with(a: &BasedAlgebra, definition: Hc1Definition) -> Result<HomologyResult, Error> {
    let t = t_span(a)?;
    let w2dim = MultilinearBasis::wedge2(a.dim()).dim();
    let numerator = match definition {
        Hc1Definition::FullWedge => Subspace::full(a.field(), w2dim),
        Hc1Definition::KernelOfBracket => Subspace::kernel_of(&wedge_bracket_map(a)?),
    };
    debug_assert!(numerator.contains_subspace(&t));
    Ok(subquotient("Λ²(A)", w2dim, &numerator, &t))
}

/// [A, A]: the span of commutators.
pub fn commutator_space(a: &BasedAlgebra) -> Result<Subspace, Error> {
    require_associative(a, "the commutator span")?;
    Ok(a.derived_subspace())
}

/// A·[A, A]: the span of left multiples of commutators.
pub fn a_commutator_space(a: &BasedAlgebra) -> Result<Subspace, Error> {
    require_associative(a, "the A·[A,A] span")?;
    let full = Subspace::full(a.field(), a.dim());
    a.span_product(&full, &a.derived_subspace(), ProductMode::Associative)
}

/// The span of u∧v over bases of two subspaces of the same ambient space.
pub fn wedge_span(i: &Subspace, j: &Subspace) -> Result<Subspace, Error> {
    if i.ambient_dim() != j.ambient_dim() || i.field() != j.field() {
        return Err(Error::Dimension(
            "wedge span needs subspaces of one common space".into(),
        ));
    }
    let w2 = MultilinearBasis::wedge2(i.ambient_dim());
    let mut rows = Vec::with_capacity(i.dim() * j.dim());
    for u in i.basis() {
        for v in j.basis() {
            rows.push(w2.wedge_vec(u, v));
        }
    }
    Ok(Subspace::from_rows(i.field(), w2.dim(), rows))
}

/// [A,A]∧A ⊆ Λ²A.
pub fn commutator_wedge_space(a: &BasedAlgebra) -> Result<Subspace, Error> {
    require_associative(a, "the [A,A]∧A span")?;
    let full = Subspace::full(a.field(), a.dim());
    wedge_span(&a.derived_subspace(), &full)
}

/// T(A, [A,A]) = (T(A) + [A,A]∧A) / ([A,A]∧A).
pub fn t_relative(a: &BasedAlgebra) -> Result<HomologyResult, Error> {
    let t = t_span(a)?;
    let cw = commutator_wedge_space(a)?;
    let numerator = t.sum(&cw)?;
    let w2dim = MultilinearBasis::wedge2(a.dim()).dim();
    Ok(subquotient("Λ²(A)", w2dim, &numerator, &cw))
}

/// HC₁(A, [A,A]) = Λ²A / ([A,A]∧A + T(A)).
pub fn hc1_relative(a: &BasedAlgebra) -> Result<HomologyResult, Error> {
    let t = t_span(a)?;
    let cw = commutator_wedge_space(a)?;
    let denominator = t.sum(&cw)?;
    let w2dim = MultilinearBasis::wedge2(a.dim()).dim();
    let numerator = Subspace::full(a.field(), w2dim);
    Ok(subquotient("Λ²(A)", w2dim, &numerator, &denominator))
}

/// Ker(S²A → A) under x∨y ↦ xy (commutative) or the halved anticommutator.
pub fn ker_sym_mult(a: &BasedAlgebra) -> Result<Subspace, Error> {
    let mult = crate::multilinear::sym_mult_map(a, crate::multilinear::MultTarget::Algebra)?;
    Ok(Subspace::kernel_of(&mult.matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn cat(name: &str, field: FieldSpec) -> BasedAlgebra {
        catalog::build(name, field).unwrap().algebra
    }

    #[test]
    fn t_span_and_hc1_on_commutative_families() {
        let f = q();
        let sq = cat("square_zero2", f);
        assert_eq!(t_span(&sq).unwrap().dim(), 2);
        assert_eq!(hc1(&sq).unwrap().dimension, 1);

        let dual = cat("dual_numbers", f);
        assert_eq!(t_span(&dual).unwrap().dim(), 1);
        assert_eq!(hc1(&dual).unwrap().dimension, 0);

        assert_eq!(hc1(&cat("product_fields2", f)).unwrap().dimension, 0);
        assert_eq!(hc1(&cat("unit_field", f)).unwrap().dimension, 0);
    }

    #[test]
    fn hc1_of_truncated_polynomials_depends_on_characteristic() {
        assert_eq!(hc1(&cat("trunc3", q())).unwrap().dimension, 0);
        assert_eq!(
            hc1(&cat("trunc3", FieldSpec::prime(3).unwrap()))
                .unwrap()
                .dimension,
            1
        );
        assert_eq!(
            hc1(&cat("trunc3", FieldSpec::prime(5).unwrap()))
                .unwrap()
                .dimension,
            0
        );
    }

    #[test]
    fn hc1_of_group_algebra_detects_modular_case() {
        assert_eq!(
            hc1(&cat("cyclic_group_algebra3", q())).unwrap().dimension,
            0
        );
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(hc1(&cat("cyclic_group_algebra3", f3)).unwrap().dimension, 1);
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(hc1(&cat("cyclic_group_algebra3", f5)).unwrap().dimension, 0);
    }

    #[test]
    fn square_zero_hc1_grows_quadratically() {
        for m in 1..=4 {
            let a = catalog::square_zero(q(), m).unwrap();
            assert_eq!(hc1(&a).unwrap().dimension, m * (m - 1) / 2);
        }
    }

    #[test]
    fn noncommutative_hc1_definitions_differ_on_matrices() {
        let f = q();
        let m2 = cat("matrix2", f);
        assert_eq!(hc1(&m2).unwrap().dimension, 0);
        // bracket kernel is a proper subspace of Λ²: rank of the bracket
        // map is dim [A,A] = 3, so the definitions differ by 3 here
        let full = hc1_with(&m2, Hc1Definition::FullWedge).unwrap();
        assert_eq!(full.dimension, 3);
        let commutative = cat("trunc2", f);
        assert_eq!(
            hc1_with(&commutative, Hc1Definition::FullWedge).unwrap(),
            hc1_with(&commutative, Hc1Definition::KernelOfBracket).unwrap(),
        );
    }

    #[test]
    fn commutator_spaces_of_matrix_algebras() {
        let f = q();
        let m2 = cat("matrix2", f);
        assert_eq!(commutator_space(&m2).unwrap().dim(), 3);
        assert_eq!(a_commutator_space(&m2).unwrap().dim(), 4);
        assert_eq!(commutator_wedge_space(&m2).unwrap().dim(), 6);
        assert_eq!(t_relative(&m2).unwrap().dimension, 0);
        assert_eq!(hc1_relative(&m2).unwrap().dimension, 0);

        let t2 = cat("upper_triangular2", f);
        assert_eq!(commutator_space(&t2).unwrap().dim(), 1);
        assert_eq!(a_commutator_space(&t2).unwrap().dim(), 1);
    }

    #[test]
    fn relative_dimensions_add_up_to_the_abelianized_wedge() {
        let f = q();
        for name in ["matrix2", "upper_triangular2", "trunc3", "square_zero2"] {
            let a = cat(name, f);
            let q_dim = a.dim() - commutator_space(&a).unwrap().dim();
            assert_eq!(
                t_relative(&a).unwrap().dimension + hc1_relative(&a).unwrap().dimension,
                q_dim * (q_dim - 1) / 2,
                "split of Λ²(A/[A,A]) fails for {name}"
            );
        }
    }

    #[test]
    fn unit_wedge_lands_in_t() {
        // 1∧x = -τ(1, 1, x) is always a cyclic relation
        let f = q();
        for name in ["dual_numbers", "trunc3", "matrix2", "product_fields2"] {
            let a = cat(name, f);
            let t = t_span(&a).unwrap();
            let unit = a.unit().unwrap().clone();
            let w2 = MultilinearBasis::wedge2(a.dim());
            for i in 0..a.dim() {
                let x = SparseVec::unit(a.dim(), i, &f);
                assert!(
                    t.contains(&w2.wedge_vec(&unit, &x)),
                    "1∧{} outside T for {name}",
                    a.label(i)
                );
            }
        }
    }

    #[test]
    fn ker_sym_mult_values() {
        let f = q();
        assert_eq!(ker_sym_mult(&cat("square_zero2", f)).unwrap().dim(), 3);
        assert_eq!(ker_sym_mult(&cat("dual_numbers", f)).unwrap().dim(), 1);
        assert_eq!(ker_sym_mult(&cat("unit_field", f)).unwrap().dim(), 0);
        assert_eq!(ker_sym_mult(&cat("product_fields2", f)).unwrap().dim(), 1);
    }

    #[test]
    fn lie_input_is_rejected() {
        let f = q();
        let l = cat("heisenberg1", f);
        assert!(t_span(&l).is_err());
        assert!(hc1(&l).is_err());
        assert!(commutator_space(&l).is_err());
    }
}
