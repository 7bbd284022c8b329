//! Second homology of a Lie algebra from its chain complex, the essential
//! part that dies on the abelianization, and the symmetric-square
//! coinvariants B(L) = S²L / [L, S²L] with their relative version B(I, J).
//!
//! Representatives are canonical: numerator vectors are reduced modulo the
//! denominator subspace and brought to echelon form, so equal subquotients
//! yield identical representative lists.

use crate::algebra::BasedAlgebra;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::multilinear::{ce_differentials, sym2_action_span, MultilinearBasis};
use crate::subspace::{QuotientSpace, Subspace};
use crate::Error;

/// A subquotient dimension plus canonical representatives in the ambient
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub dimension: usize,
    pub representatives: Vec<SparseVec>,
    pub ambient: AmbientDescription,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientDescription {
    /// Which space the representatives live in, e.g. `Λ²(L)`.
    pub space: String,
    pub ambient_dim: usize,
    pub numerator_dim: usize,
    pub denominator_dim: usize,
}

/// The degree-2 part of the chain complex of L, shared by the homology
/// functions so expensive eliminations run once per algebra.
pub struct ChainData {
    pub d2: SparseMatrix,
    pub d3: SparseMatrix,
    /// Ker d₂ ⊆ Λ²L.
    pub cycles: Subspace,
    /// Im d₃ ⊆ Λ²L.
    pub boundaries: Subspace,
}

pub fn chain_data(l: &BasedAlgebra) -> ChainData {
    let (d2, d3) = ce_differentials(l);
    let cycles = Subspace::kernel_of(&d2);
    let boundaries = Subspace::column_space(&d3);
    debug_assert!(cycles.contains_subspace(&boundaries));
    ChainData {
        d2,
        d3,
        cycles,
        boundaries,
    }
}

pub(crate) fn subquotient(
    space: &str,
    ambient_dim: usize,
    numerator: &Subspace,
    denominator: &Subspace,
) -> HomologyResult {
    let reps = Subspace::from_rows(
        numerator.field(),
        ambient_dim,
        numerator
            .basis()
            .iter()
            .map(|v| denominator.reduce(v))
            .collect(),
    );
    HomologyResult {
        dimension: reps.dim(),
        representatives: reps.basis().to_vec(),
        ambient: AmbientDescription {
            space: space.into(),
            ambient_dim,
            numerator_dim: numerator.dim(),
            denominator_dim: denominator.dim(),
        },
    }
}

/// H₂(L) = Ker d₂ / Im d₃.
pub fn h2(l: &BasedAlgebra) -> HomologyResult {
    h2_from(l, &chain_data(l))
}

pub fn h2_from(l: &BasedAlgebra, chain: &ChainData) -> HomologyResult {
    let w2 = MultilinearBasis::wedge2(l.dim());
    let result = subquotient("Λ²(L)", w2.dim(), &chain.cycles, &chain.boundaries);
    debug_assert_eq!(
        result.dimension,
        chain.cycles.dim() - chain.boundaries.dim()
    );
    result
}

/// The essential part of H₂: classes killed by the projection
/// Λ²L → Λ²(L/[L,L]).
pub fn h2_ess(l: &BasedAlgebra) -> HomologyResult {
    h2_ess_from(l, &chain_data(l))
}

pub fn h2_ess_from(l: &BasedAlgebra, chain: &ChainData) -> HomologyResult {
    let w2 = MultilinearBasis::wedge2(l.dim());
    let psi = abelianization_wedge_map(l);
    let killed = Subspace::kernel_of(&psi);
    let essential_cycles = chain
        .cycles
        .intersect(&killed)
        .expect("kernel lives in the same ambient space");
    debug_assert!(essential_cycles.contains_subspace(&chain.boundaries));
    subquotient("Λ²(L)", w2.dim(), &essential_cycles, &chain.boundaries)
}

/// Λ²L → Λ²(L/[L,L]) induced by the quotient projection.
pub fn abelianization_wedge_map(l: &BasedAlgebra) -> SparseMatrix {
    let derived = l.derived_subspace();
    let projection = QuotientSpace::new(derived).projection_matrix();
    MultilinearBasis::wedge2(l.dim()).power_of_map(&projection)
}

/// B(L) = S²L / [L, S²L].
pub fn b_coinvariants(l: &BasedAlgebra) -> HomologyResult {
    let s2 = MultilinearBasis::sym2(l.dim());
    let denominator = sym2_action_span(l);
    let numerator = Subspace::full(l.field(), s2.dim());
    subquotient("S²(L)", s2.dim(), &numerator, &denominator)
}

/// B(I, J): the image of I∨J in B(L).
pub fn b_relative(l: &BasedAlgebra, i: &Subspace, j: &Subspace) -> Result<HomologyResult, Error> {
    for (which, s) in [("first", i), ("second", j)] {
        if s.ambient_dim() != l.dim() || s.field() != l.field() {
            return Err(Error::Dimension(
                "relative coinvariants need subspaces of L".into(),
            ));
        }
        if !l.is_ideal(s)? {
            return Err(Error::Algebra(format!(
                "relative coinvariants need ideals; the {which} subspace is not \
                 stable under the bracket"
            )));
        }
    }
    let s2 = MultilinearBasis::sym2(l.dim());
    let denominator = sym2_action_span(l);
    let mut rows = Vec::with_capacity(i.dim() * j.dim());
    for u in i.basis() {
        for v in j.basis() {
            rows.push(s2.sym_vec(u, v));
        }
    }
    let pairs_span = Subspace::from_rows(l.field(), s2.dim(), rows);
    let numerator = pairs_span.sum(&denominator)?;
    Ok(subquotient("S²(L)", s2.dim(), &numerator, &denominator))
}

/// The representatives of a result, as a subspace (useful for containment
/// arguments between subquotients with the same denominator).
pub fn representative_span(l_field: crate::field::FieldSpec, r: &HomologyResult) -> Subspace {
    Subspace::from_rows(l_field, r.ambient.ambient_dim, r.representatives.clone())
}
