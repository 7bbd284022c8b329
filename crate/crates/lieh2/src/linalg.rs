//! Sparse exact linear algebra: vectors, matrices, reduced row echelon form.
//!
//! Vectors store `(index, coefficient)` pairs with strictly increasing
//! indices and no explicit zeros; all eliminations are exact, so ranks and
//! kernels are exact over ℚ and over F_p.  Matrices carry their field so
//! that degenerate shapes (zero matrices, empty bases) stay well-typed.

use std::fmt;

use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn unit(dim: usize, index: usize, field: &FieldSpec) -> Self {
        assert!(index < dim);
        SparseVec {
            dim,
            entries: vec![(index, field.one())],
        }
    }

    /// Sorts, merges duplicate indices, and drops zero coefficients.
    pub fn from_pairs(dim: usize, pairs: Vec<(usize, Scalar)>) -> Self {
        let mut pairs = pairs;
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    /// First nonzero entry in index order.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return SparseVec::zero(self.dim);
        }
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, a)| (*i, a * c)).collect(),
        }
    }

    pub fn negated(&self) -> Self {
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, a)| (*i, -a)).collect(),
        }
    }

    /// self + c * other, by sorted merge.
    pub fn add_scaled(&self, c: &Scalar, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) if i == j => {
                    let v = x + &(c * y);
                    if !v.is_zero() {
                        entries.push((*i, v));
                    }
                    a.next();
                    b.next();
                }
                (Some((i, x)), Some((j, _))) if i < j => {
                    entries.push((*i, x.clone()));
                    a.next();
                }
                (Some(_), Some((j, y))) => {
                    entries.push((*j, c * y));
                    b.next();
                }
                (Some((i, x)), None) => {
                    entries.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    entries.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec {
            dim: self.dim,
            entries,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match other.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let one = c.field().one();
                self.add_scaled(&one, other)
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        match other.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let minus_one = -&c.field().one();
                self.add_scaled(&minus_one, other)
            }
        }
    }

    /// Dot product; `None` means no overlapping support (value zero).
    pub fn dot(&self, other: &Self) -> Option<Scalar> {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        let mut acc: Option<Scalar> = None;
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i == j {
                let term = x * y;
                acc = Some(match acc {
                    None => term,
                    Some(s) => &s + &term,
                });
                a.next();
                b.next();
            } else if i < j {
                a.next();
            } else {
                b.next();
            }
        }
        acc
    }

    /// Keeps the entries at the selected indices, renumbered by position.
    /// `selected` must be strictly increasing.
    pub fn restrict(&self, selected: &[usize]) -> SparseVec {
        let mut entries = Vec::new();
        let mut k = 0;
        for (i, c) in &self.entries {
            while k < selected.len() && selected[k] < *i {
                k += 1;
            }
            if k < selected.len() && selected[k] == *i {
                entries.push((k, c.clone()));
            }
        }
        SparseVec {
            dim: selected.len(),
            entries,
        }
    }

    /// Re-embeds through `selected`: the entry at position k moves to index
    /// `selected[k]` of the ambient space.
    pub fn embed(&self, selected: &[usize], ambient: usize) -> SparseVec {
        assert_eq!(self.dim, selected.len());
        SparseVec {
            dim: ambient,
            entries: self
                .entries
                .iter()
                .map(|(k, c)| (selected[*k], c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, c)) in self.entries.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*e{i}")?;
        }
        Ok(())
    }
}

/// Row-major sparse matrix over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field,
            rows,
            cols,
            data: vec![SparseVec::zero(cols); rows],
        }
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<SparseVec>) -> Self {
        for r in &rows {
            assert_eq!(r.dim(), cols, "row dimension mismatch");
        }
        SparseMatrix {
            field,
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: Vec<SparseVec>) -> Self {
        let cols = columns.len();
        let mut data: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), rows, "column dimension mismatch");
            for (i, c) in col.iter() {
                data[*i].push((j, c.clone()));
            }
        }
        SparseMatrix {
            field,
            rows,
            cols,
            data: data
                .into_iter()
                .map(|pairs| SparseVec::from_pairs(cols, pairs))
                .collect(),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        SparseMatrix {
            field,
            rows: n,
            cols: n,
            data: (0..n).map(|i| SparseVec::unit(n, i, &field)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &SparseVec> {
        self.data.iter()
    }

    pub fn column(&self, j: usize) -> SparseVec {
        let pairs = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, row)| row.get(j).map(|c| (i, c.clone())))
            .collect();
        SparseVec::from_pairs(self.rows, pairs)
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, c) in row.iter() {
                cols[*j].push((i, c.clone()));
            }
        }
        cols.into_iter()
            .map(|pairs| SparseVec::from_pairs(self.rows, pairs))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.field, self.cols, self.data.clone())
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.cols, "matrix-vector dimension mismatch");
        let pairs = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, row)| row.dot(v).filter(|c| !c.is_zero()).map(|c| (i, c)))
            .collect();
        SparseVec::from_pairs(self.rows, pairs)
    }

    /// self ∘ other (matrix product).
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix composition dimension mismatch"
        );
        let columns = other.columns().iter().map(|c| self.apply(c)).collect();
        SparseMatrix::from_columns(self.field, self.rows, columns)
    }

    pub fn rref(&self) -> Rref {
        let (reduced, pivots) = rref_rows(self.data.clone());
        let rank = reduced.len();
        let mut data = reduced;
        data.resize(self.rows.max(rank), SparseVec::zero(self.cols));
        Rref {
            matrix: SparseMatrix {
                field: self.field,
                rows: data.len(),
                cols: self.cols,
                data,
            },
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// One solution of `self * x = b`, or `None` if inconsistent.  When the
    /// columns are independent the solution is unique.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        assert_eq!(b.dim(), self.rows, "right-hand side dimension mismatch");
        let mut columns = self.columns();
        columns.push(b.clone());
        let augmented = SparseMatrix::from_columns(self.field, self.rows, columns);
        let Rref {
            matrix,
            rank,
            pivots,
        } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let pairs = (0..rank)
            .filter_map(|r| {
                matrix.data[r]
                    .get(self.cols)
                    .map(|c| (pivots[r], c.clone()))
            })
            .collect();
        Some(SparseVec::from_pairs(self.cols, pairs))
    }

    /// Basis of the solution space of `self * x = 0`, one vector per free
    /// column of the echelon form.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let Rref {
            matrix,
            rank,
            pivots,
        } = self.rref();
        let one = self.field.one();
        let mut basis = Vec::new();
        let mut next_pivot = 0usize;
        for f in 0..self.cols {
            if next_pivot < pivots.len() && pivots[next_pivot] == f {
                next_pivot += 1;
                continue;
            }
            let mut pairs = vec![(f, one.clone())];
            for (r, pc) in pivots.iter().enumerate().take(rank) {
                if let Some(c) = matrix.data[r].get(f) {
                    pairs.push((*pc, -c));
                }
            }
            basis.push(SparseVec::from_pairs(self.cols, pairs));
        }
        basis
    }
}

impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let mut cells = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                match row.get(j) {
                    Some(c) => cells.push(c.to_string()),
                    None => cells.push("0".into()),
                }
            }
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

pub struct Rref {
    pub matrix: SparseMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form of a row list.  Pivot selection: smallest leading
/// column first, ties broken by sparsest row.  Returns the nonzero rows (with
/// monic pivots, strictly increasing pivot columns) and the pivot columns.
pub(crate) fn rref_rows(rows: Vec<SparseVec>) -> (Vec<SparseVec>, Vec<usize>) {
    let mut working: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_zero()).collect();
    let mut result: Vec<(usize, SparseVec)> = Vec::new();
    while !working.is_empty() {
        let mut best = 0usize;
        for idx in 1..working.len() {
            let (bc, bn) = (
                working[best].leading().unwrap().0,
                working[best].support_len(),
            );
            let (c, n) = (
                working[idx].leading().unwrap().0,
                working[idx].support_len(),
            );
            if c < bc || (c == bc && n < bn) {
                best = idx;
            }
        }
        let raw = working.swap_remove(best);
        let (pc, lead) = raw.leading().unwrap();
        let pivot_row = raw.scaled(&lead.inv());
        for row in working.iter_mut() {
            if let Some(c) = row.get(pc) {
                let c = -c;
                *row = row.add_scaled(&c, &pivot_row);
            }
        }
        working.retain(|r| !r.is_zero());
        result.push((pc, pivot_row));
    }
    // pivot columns come out strictly increasing; back-substitute for the
    // reduced form
    for i in (0..result.len()).rev() {
        let (pc, row_i) = result[i].clone();
        for entry in result[..i].iter_mut() {
            if let Some(c) = entry.1.get(pc) {
                let c = -c;
                entry.1 = entry.1.add_scaled(&c, &row_i);
            }
        }
    }
    let pivots: Vec<usize> = result.iter().map(|(c, _)| *c).collect();
    debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
    (result.into_iter().map(|(_, r)| r).collect(), pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn vec_of(dim: usize, pairs: &[(usize, i64)], field: &FieldSpec) -> SparseVec {
        SparseVec::from_pairs(
            dim,
            pairs.iter().map(|(i, v)| (*i, field.integer(*v))).collect(),
        )
    }

    #[test]
    fn rref_rank_one() {
        let f = q();
        let m = SparseMatrix::from_rows(
            f,
            2,
            vec![
                vec_of(2, &[(0, 2), (1, 4)], &f),
                vec_of(2, &[(0, 1), (1, 2)], &f),
            ],
        );
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.matrix.row(0), &vec_of(2, &[(0, 1), (1, 2)], &f));
        assert!(r.matrix.row(1).is_zero());
    }

    #[test]
    fn rref_normalizes_over_f5() {
        let f5 = FieldSpec::prime(5).unwrap();
        let m = SparseMatrix::from_rows(f5, 1, vec![vec_of(1, &[(0, 2)], &f5)]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix.row(0), &vec_of(1, &[(0, 1)], &f5));
    }

    #[test]
    fn kernel_of_sum_functional() {
        let f = q();
        let m = SparseMatrix::from_rows(f, 2, vec![vec_of(2, &[(0, 1), (1, 1)], &f)]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        // spanned by (1, -1) up to scale
        assert!(m.apply(&k[0]).is_zero());
        assert_eq!(k[0].support_len(), 2);
    }

    #[test]
    fn kernel_of_zero_matrix_respects_field() {
        let f5 = FieldSpec::prime(5).unwrap();
        let m = SparseMatrix::zero(f5, 3, 2);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0].leading().unwrap().1.field(), f5);
    }

    #[test]
    fn rref_idempotent_and_canonical() {
        let f = q();
        let m = SparseMatrix::from_rows(
            f,
            3,
            vec![
                vec_of(3, &[(0, 2), (1, 1), (2, -1)], &f),
                vec_of(3, &[(0, 4), (1, 2), (2, 3)], &f),
                vec_of(3, &[(1, 1), (2, 7)], &f),
            ],
        );
        let r1 = m.rref();
        let r2 = r1.matrix.rref();
        assert_eq!(r1.matrix, r2.matrix);
        assert_eq!(r1.pivots, r2.pivots);
        // scaling, permuting, and row operations leave the echelon unchanged
        let m2 = SparseMatrix::from_rows(
            f,
            3,
            vec![
                m.row(2).scaled(&f.integer(-3)),
                m.row(0).clone(),
                m.row(1).add_scaled(&f.integer(5), m.row(0)),
            ],
        );
        assert_eq!(m2.rref().matrix, r1.matrix);
    }

    #[test]
    fn rank_nullity() {
        let f = q();
        let m = SparseMatrix::from_rows(
            f,
            4,
            vec![
                vec_of(4, &[(0, 1), (2, 1)], &f),
                vec_of(4, &[(1, 1), (3, 1)], &f),
                vec_of(4, &[(0, 1), (1, 1), (2, 1), (3, 1)], &f),
            ],
        );
        let r = m.rref();
        let k = m.kernel();
        assert_eq!(r.rank + k.len(), m.cols());
        for v in &k {
            assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn compose_and_apply_agree() {
        let f = q();
        let a = SparseMatrix::from_rows(
            f,
            2,
            vec![vec_of(2, &[(0, 1), (1, 2)], &f), vec_of(2, &[(1, 1)], &f)],
        );
        let b = SparseMatrix::from_rows(
            f,
            3,
            vec![vec_of(3, &[(0, 1), (2, 1)], &f), vec_of(3, &[(1, -1)], &f)],
        );
        let ab = a.compose(&b);
        let v = vec_of(3, &[(0, 2), (1, 3), (2, -1)], &f);
        assert_eq!(ab.apply(&v), a.apply(&b.apply(&v)));
    }

    #[test]
    fn columns_round_trip() {
        let f = q();
        let m = SparseMatrix::from_rows(
            f,
            3,
            vec![vec_of(3, &[(0, 1), (2, 4)], &f), vec_of(3, &[(1, 2)], &f)],
        );
        let again = SparseMatrix::from_columns(f, 2, m.columns());
        assert_eq!(m, again);
    }

    #[test]
    fn solve_linear_system() {
        let f = q();
        let m = SparseMatrix::from_columns(
            f,
            3,
            vec![
                vec_of(3, &[(0, 1), (1, 1)], &f),
                vec_of(3, &[(1, 2), (2, 1)], &f),
            ],
        );
        let b = vec_of(3, &[(0, 3), (1, 7), (2, 2)], &f);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        assert!(m.solve(&vec_of(3, &[(2, 1), (0, 1)], &f)).is_none());
    }

    #[test]
    fn transpose_involutive() {
        let f = q();
        let m = SparseMatrix::from_rows(
            f,
            3,
            vec![vec_of(3, &[(0, 1), (2, 4)], &f), vec_of(3, &[(1, 2)], &f)],
        );
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().rows(), 3);
        assert_eq!(m.transpose().cols(), 2);
    }
}
