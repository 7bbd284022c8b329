//! Subspaces in canonical form and quotient spaces with canonical coset
//! representatives.
//!
//! A [`Subspace`] keeps its basis in reduced row echelon form, so equality of
//! subspaces is structural equality.  A [`QuotientSpace`] V/U reduces vectors
//! to the unique representative with zeros at the pivot columns of U; its
//! coordinates are read off at the non-pivot columns.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{rref_rows, SparseMatrix, SparseVec};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient)
                .map(|i| SparseVec::unit(ambient, i, &field))
                .collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary generators; the stored basis is their echelon form.
    pub fn from_rows(field: FieldSpec, ambient: usize, rows: Vec<SparseVec>) -> Self {
        for r in &rows {
            assert_eq!(r.dim(), ambient, "generator dimension mismatch");
        }
        let (basis, pivots) = rref_rows(rows);
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn row_space(m: &SparseMatrix) -> Self {
        Self::from_rows(m.field(), m.cols(), m.rows_iter().cloned().collect())
    }

    pub fn column_space(m: &SparseMatrix) -> Self {
        Self::from_rows(m.field(), m.rows(), m.columns())
    }

    pub fn kernel_of(m: &SparseMatrix) -> Self {
        Self::from_rows(m.field(), m.cols(), m.kernel())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of v modulo this subspace: the result has
    /// zeros at every pivot column.  Linear and idempotent; zero exactly on
    /// members.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.ambient, "vector dimension mismatch");
        let mut acc = v.clone();
        // basis rows have zeros at the other pivots, so one pass suffices
        for (row, pc) in self.basis.iter().zip(&self.pivots) {
            if let Some(c) = acc.get(*pc) {
                let c = -c;
                acc = acc.add_scaled(&c, row);
            }
        }
        acc
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of v in the echelon basis, or `None` if v lies outside.
    pub fn express(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.pivots
                .iter()
                .map(|pc| v.get(*pc).cloned().unwrap_or_else(|| self.field.zero()))
                .collect(),
        )
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_compatible(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Ok(Subspace::from_rows(self.field, self.ambient, rows))
    }

    /// Intersection via the kernel of the stacked relation matrix whose
    /// columns are the two bases: a relation Σaᵢuᵢ + Σbⱼwⱼ = 0 yields the
    /// member Σaᵢuᵢ.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_compatible(other)?;
        let mut columns = self.basis.clone();
        columns.extend(other.basis.iter().cloned());
        let relations = SparseMatrix::from_columns(self.field, self.ambient, columns).kernel();
        let members = relations
            .iter()
            .map(|rel| {
                let mut acc = SparseVec::zero(self.ambient);
                for (k, c) in rel.iter() {
                    if *k < self.basis.len() {
                        acc = acc.add_scaled(c, &self.basis[*k]);
                    }
                }
                acc
            })
            .collect();
        Ok(Subspace::from_rows(self.field, self.ambient, members))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        if self.field != other.field {
            return Err(Error::Dimension(format!(
                "fields differ: {} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }
}

/// V/U with U held in echelon form.  Coset coordinates live at the non-pivot
/// columns of U, in increasing column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    denominator: Subspace,
    coset_columns: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(denominator: Subspace) -> Self {
        let coset_columns = (0..denominator.ambient_dim())
            .filter(|i| !denominator.pivots.contains(i))
            .collect();
        QuotientSpace {
            denominator,
            coset_columns,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.denominator.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.denominator.ambient
    }

    pub fn dim(&self) -> usize {
        self.coset_columns.len()
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    /// Canonical coset representative.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.denominator.reduce(v)
    }

    /// Coordinates of the coset of v.
    pub fn coords(&self, v: &SparseVec) -> SparseVec {
        self.reduce(v).restrict(&self.coset_columns)
    }

    /// The canonical lift of the k-th coset coordinate vector.
    pub fn lift(&self, k: usize) -> SparseVec {
        SparseVec::unit(
            self.ambient_dim(),
            self.coset_columns[k],
            &self.denominator.field,
        )
    }

    /// Ambient index of the k-th coset coordinate.
    pub fn lift_index(&self, k: usize) -> usize {
        self.coset_columns[k]
    }

    /// Lifts a coordinate vector of the quotient back to the ambient space.
    pub fn lift_coords(&self, w: &SparseVec) -> SparseVec {
        w.embed(&self.coset_columns, self.ambient_dim())
    }

    /// The projection V -> V/U as a dim x ambient matrix in coset coordinates.
    pub fn projection_matrix(&self) -> SparseMatrix {
        let field = self.denominator.field;
        let columns = (0..self.ambient_dim())
            .map(|i| self.coords(&SparseVec::unit(self.ambient_dim(), i, &field)))
            .collect();
        SparseMatrix::from_columns(field, self.dim(), columns)
    }
}
