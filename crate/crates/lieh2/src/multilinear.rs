//! Bases of Λ²V, Λ³V, S²V with explicit index bijections, and the structure
//! maps built on them: the chain differentials of degree 2 and 3, the
//! symmetric multiplication map S²A → A, the adjoint action on S²L, and the
//! bracket map induced on the abelianization.
//!
//! Flat indices are lexicographic over increasing index pairs/triples; for
//! S² the diagonal is included.  All maps are plain [`SparseMatrix`] values
//! whose shapes are the dimensions of these bases.

use crate::algebra::BasedAlgebra;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::subspace::{QuotientSpace, Subspace};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Wedge2,
    Sym2,
    Wedge3,
}

/// Basis bookkeeping for a multilinear power of an n-dimensional space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultilinearBasis {
    base: usize,
    kind: PowerKind,
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

impl MultilinearBasis {
    pub fn wedge2(base: usize) -> Self {
        MultilinearBasis {
            base,
            kind: PowerKind::Wedge2,
        }
    }

    pub fn sym2(base: usize) -> Self {
        MultilinearBasis {
            base,
            kind: PowerKind::Sym2,
        }
    }

    pub fn wedge3(base: usize) -> Self {
        MultilinearBasis {
            base,
            kind: PowerKind::Wedge3,
        }
    }

    pub fn base_dim(&self) -> usize {
        self.base
    }

    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            PowerKind::Wedge2 => binom(self.base, 2),
            PowerKind::Sym2 => self.base * (self.base + 1) / 2,
            PowerKind::Wedge3 => binom(self.base, 3),
        }
    }

    /// Flat index of eᵢ∧eⱼ (i < j) or eᵢ∨eⱼ (i ≤ j).
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        let n = self.base;
        match self.kind {
            PowerKind::Wedge2 => {
                assert!(i < j && j < n, "wedge2 needs i < j < n, got ({i}, {j})");
                binom(n, 2) - binom(n - i, 2) + (j - i - 1)
            }
            PowerKind::Sym2 => {
                assert!(i <= j && j < n, "sym2 needs i <= j < n, got ({i}, {j})");
                i * n - i * i.saturating_sub(1) / 2 + (j - i)
            }
            PowerKind::Wedge3 => panic!("pair_index on a wedge3 basis"),
        }
    }

    /// Inverse of [`pair_index`](Self::pair_index).
    pub fn pair_at(&self, flat: usize) -> (usize, usize) {
        let n = self.base;
        match self.kind {
            PowerKind::Wedge2 => {
                let mut rest = flat;
                for i in 0..n {
                    let block = n - 1 - i;
                    if rest < block {
                        return (i, i + 1 + rest);
                    }
                    rest -= block;
                }
                panic!("flat index {flat} out of range");
            }
            PowerKind::Sym2 => {
                let mut rest = flat;
                for i in 0..n {
                    let block = n - i;
                    if rest < block {
                        return (i, i + rest);
                    }
                    rest -= block;
                }
                panic!("flat index {flat} out of range");
            }
            PowerKind::Wedge3 => panic!("pair_at on a wedge3 basis"),
        }
    }

    /// Flat index of eᵢ∧eⱼ∧eₖ with i < j < k.
    pub fn triple_index(&self, i: usize, j: usize, k: usize) -> usize {
        assert_eq!(self.kind, PowerKind::Wedge3);
        let n = self.base;
        assert!(i < j && j < k && k < n);
        let mut idx = 0;
        for a in 0..i {
            idx += binom(n - 1 - a, 2);
        }
        for b in i + 1..j {
            idx += n - 1 - b;
        }
        idx + (k - j - 1)
    }

    pub fn triple_at(&self, flat: usize) -> (usize, usize, usize) {
        assert_eq!(self.kind, PowerKind::Wedge3);
        let n = self.base;
        let mut rest = flat;
        for i in 0..n {
            let block = binom(n - 1 - i, 2);
            if rest < block {
                for j in i + 1..n {
                    let inner = n - 1 - j;
                    if rest < inner {
                        return (i, j, j + 1 + rest);
                    }
                    rest -= inner;
                }
            }
            rest -= block;
        }
        panic!("flat index {flat} out of range");
    }

    /// Human-readable basis label, e.g. `e∧f` or `e∨f`.
    pub fn label(&self, flat: usize, labels: &[String]) -> String {
        match self.kind {
            PowerKind::Wedge2 => {
                let (i, j) = self.pair_at(flat);
                format!("{}∧{}", labels[i], labels[j])
            }
            PowerKind::Sym2 => {
                let (i, j) = self.pair_at(flat);
                format!("{}∨{}", labels[i], labels[j])
            }
            PowerKind::Wedge3 => {
                let (i, j, k) = self.triple_at(flat);
                format!("{}∧{}∧{}", labels[i], labels[j], labels[k])
            }
        }
    }

    /// u ∧ v in flat coordinates (Wedge2 bases only).
    pub fn wedge_vec(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        assert_eq!(self.kind, PowerKind::Wedge2);
        assert_eq!(u.dim(), self.base);
        assert_eq!(v.dim(), self.base);
        let mut pairs = Vec::with_capacity(u.support_len() * v.support_len());
        for (i, ci) in u.iter() {
            for (j, dj) in v.iter() {
                if i < j {
                    pairs.push((self.pair_index(*i, *j), ci * dj));
                } else if i > j {
                    pairs.push((self.pair_index(*j, *i), -&(ci * dj)));
                }
            }
        }
        SparseVec::from_pairs(self.dim(), pairs)
    }

    /// u ∨ v in flat coordinates (Sym2 bases only).
    pub fn sym_vec(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        assert_eq!(self.kind, PowerKind::Sym2);
        assert_eq!(u.dim(), self.base);
        assert_eq!(v.dim(), self.base);
        let mut pairs = Vec::with_capacity(u.support_len() * v.support_len());
        for (i, ci) in u.iter() {
            for (j, dj) in v.iter() {
                let idx = if i <= j {
                    self.pair_index(*i, *j)
                } else {
                    self.pair_index(*j, *i)
                };
                pairs.push((idx, ci * dj));
            }
        }
        SparseVec::from_pairs(self.dim(), pairs)
    }

    /// The induced map on this power: for a linear map f given by a matrix,
    /// returns Λ²f or S²f (column (i,j) is f(eᵢ) ∧/∨ f(eⱼ)).
    pub fn power_of_map(&self, f: &SparseMatrix) -> SparseMatrix {
        assert_eq!(f.cols(), self.base, "map domain must match the base space");
        let target = match self.kind {
            PowerKind::Wedge2 => MultilinearBasis::wedge2(f.rows()),
            PowerKind::Sym2 => MultilinearBasis::sym2(f.rows()),
            PowerKind::Wedge3 => panic!("power_of_map not provided for wedge3"),
        };
        let images: Vec<SparseVec> = (0..self.base).map(|i| f.column(i)).collect();
        let mut columns = Vec::with_capacity(self.dim());
        for flat in 0..self.dim() {
            let (i, j) = self.pair_at(flat);
            let col = match self.kind {
                PowerKind::Wedge2 => target.wedge_vec(&images[i], &images[j]),
                PowerKind::Sym2 => target.sym_vec(&images[i], &images[j]),
                PowerKind::Wedge3 => unreachable!(),
            };
            columns.push(col);
        }
        SparseMatrix::from_columns(f.field(), target.dim(), columns)
    }
}

/// The degree-2 and degree-3 chain differentials of a Lie algebra:
/// d₂(x∧y) = [x,y] and d₃(x∧y∧z) = -[x,y]∧z + [x,z]∧y - [y,z]∧x.
/// Their composition vanishes exactly when the table satisfies Jacobi.
pub fn ce_differentials(l: &BasedAlgebra) -> (SparseMatrix, SparseMatrix) {
    assert!(l.is_lie(), "chain differentials need a Lie algebra");
    let n = l.dim();
    let field = l.field();
    let w2 = MultilinearBasis::wedge2(n);
    let w3 = MultilinearBasis::wedge3(n);

    let mut d2_cols = Vec::with_capacity(w2.dim());
    for flat in 0..w2.dim() {
        let (i, j) = w2.pair_at(flat);
        d2_cols.push(l.basis_product(i, j).clone());
    }
    let d2 = SparseMatrix::from_columns(field, n, d2_cols);

    let mut d3_cols = Vec::with_capacity(w3.dim());
    for flat in 0..w3.dim() {
        let (i, j, k) = w3.triple_at(flat);
        let ei = SparseVec::unit(n, i, &field);
        let ej = SparseVec::unit(n, j, &field);
        let ek = SparseVec::unit(n, k, &field);
        let col = w2
            .wedge_vec(l.basis_product(i, j), &ek)
            .negated()
            .add(&w2.wedge_vec(l.basis_product(i, k), &ej))
            .sub(&w2.wedge_vec(l.basis_product(j, k), &ei));
        d3_cols.push(col);
    }
    let d3 = SparseMatrix::from_columns(field, w2.dim(), d3_cols);

    debug_assert!(d2.compose(&d3).is_zero(), "d2 ∘ d3 must vanish (Jacobi)");
    (d2, d3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultTarget {
    /// S²A → A.
    Algebra,
    /// S²A → A/[A,A].
    Abelianization,
}

#[derive(Debug)]
pub struct SymMult {
    pub matrix: SparseMatrix,
    /// The quotient A/[A,A] when the target is the abelianization.
    pub target_quotient: Option<QuotientSpace>,
}

/// The multiplication map on the symmetric square: x∨y ↦ xy for commutative
/// algebras, x∨y ↦ (xy + yx)/2 otherwise (so characteristic 2 is refused on
/// noncommutative input).
pub fn sym_mult_map(a: &BasedAlgebra, target: MultTarget) -> Result<SymMult, Error> {
    if a.is_lie() {
        return Err(Error::Unsupported(
            "symmetric multiplication needs an associative algebra".into(),
        ));
    }
    let n = a.dim();
    let field = a.field();
    let s2 = MultilinearBasis::sym2(n);
    let mut products = Vec::with_capacity(s2.dim());
    for flat in 0..s2.dim() {
        let (i, j) = s2.pair_at(flat);
        let ei = SparseVec::unit(n, i, &field);
        let ej = SparseVec::unit(n, j, &field);
        let p = if a.is_commutative() {
            a.basis_product(i, j).clone()
        } else {
            a.jordan(&ei, &ej)?
        };
        products.push(p);
    }
    match target {
        MultTarget::Algebra => Ok(SymMult {
            matrix: SparseMatrix::from_columns(field, n, products),
            target_quotient: None,
        }),
        MultTarget::Abelianization => {
            let quotient = QuotientSpace::new(a.derived_subspace());
            let columns = products.iter().map(|p| quotient.coords(p)).collect();
            Ok(SymMult {
                matrix: SparseMatrix::from_columns(field, quotient.dim(), columns),
                target_quotient: Some(quotient),
            })
        }
    }
}

/// The adjoint action of the basis vector eₘ on S²L:
/// z·(x∨y) = [z,x]∨y + x∨[z,y].
pub fn sym2_action(l: &BasedAlgebra, m: usize) -> SparseMatrix {
    assert!(l.is_lie());
    let n = l.dim();
    let field = l.field();
    let s2 = MultilinearBasis::sym2(n);
    let mut columns = Vec::with_capacity(s2.dim());
    for flat in 0..s2.dim() {
        let (i, j) = s2.pair_at(flat);
        let ei = SparseVec::unit(n, i, &field);
        let ej = SparseVec::unit(n, j, &field);
        let col = s2
            .sym_vec(l.basis_product(m, i), &ej)
            .add(&s2.sym_vec(&ei, l.basis_product(m, j)));
        columns.push(col);
    }
    SparseMatrix::from_columns(field, s2.dim(), columns)
}

/// The adjoint action of an arbitrary vector, by linearity.
pub fn sym2_action_vec(l: &BasedAlgebra, z: &SparseVec) -> SparseMatrix {
    let s2 = MultilinearBasis::sym2(l.dim());
    let mut acc = SparseMatrix::zero(l.field(), s2.dim(), s2.dim());
    for (m, c) in z.iter() {
        let part = sym2_action(l, *m);
        let scaled_cols = (0..s2.dim()).map(|j| part.column(j).scaled(c)).collect();
        let scaled = SparseMatrix::from_columns(l.field(), s2.dim(), scaled_cols);
        let summed_cols = (0..s2.dim())
            .map(|j| acc.column(j).add(&scaled.column(j)))
            .collect();
        acc = SparseMatrix::from_columns(l.field(), s2.dim(), summed_cols);
    }
    acc
}

/// [L, S²L]: the span of all basis-action images, the denominator of the
/// symmetric-square coinvariants.
pub fn sym2_action_span(l: &BasedAlgebra) -> Subspace {
    assert!(l.is_lie());
    let n = l.dim();
    let field = l.field();
    let s2 = MultilinearBasis::sym2(n);
    let mut rows = Vec::with_capacity(n * s2.dim());
    for m in 0..n {
        for flat in 0..s2.dim() {
            let (i, j) = s2.pair_at(flat);
            let ei = SparseVec::unit(n, i, &field);
            let ej = SparseVec::unit(n, j, &field);
            let v = s2
                .sym_vec(l.basis_product(m, i), &ej)
                .add(&s2.sym_vec(&ei, l.basis_product(m, j)));
            if !v.is_zero() {
                rows.push(v);
            }
        }
    }
    Subspace::from_rows(field, s2.dim(), rows)
}

/// The bracket map induced on the abelianization:
/// Λ²(L/[L,L]) → [L,L]/[[L,L],L],  x̄ ∧ ȳ ↦ [x,y].
///
/// Well-defined because changing a lift by an element of [L,L] changes the
/// bracket by an element of [[L,L],L].
pub struct InducedBracket {
    /// The map in coset coordinates; shape codomain_reps.dim() × Λ²(ab).
    pub matrix: SparseMatrix,
    /// L/[L,L].
    pub abelianization: QuotientSpace,
    /// Canonical representatives of [L,L]/[[L,L],L] inside L.
    pub codomain_reps: Subspace,
    pub derived: Subspace,
    pub second_derived: Subspace,
}

pub fn induced_bracket(l: &BasedAlgebra) -> InducedBracket {
    assert!(l.is_lie());
    let field = l.field();
    let n = l.dim();
    let derived = l.derived_subspace();
    let full = Subspace::full(field, n);
    let second_derived = l
        .span_product(&derived, &full, crate::algebra::ProductMode::Bracket)
        .expect("subspaces live in L");
    let abelianization = QuotientSpace::new(derived.clone());
    let codomain_reps = Subspace::from_rows(
        field,
        n,
        derived
            .basis()
            .iter()
            .map(|v| second_derived.reduce(v))
            .collect(),
    );
    let q = abelianization.dim();
    let w2 = MultilinearBasis::wedge2(q);
    let mut columns = Vec::with_capacity(w2.dim());
    for flat in 0..w2.dim() {
        let (s, t) = w2.pair_at(flat);
        let v = l.product(&abelianization.lift(s), &abelianization.lift(t));
        let reduced = second_derived.reduce(&v);
        let coords = codomain_reps
            .express(&reduced)
            .expect("bracket of lifts lies in the derived subspace");
        let pairs = coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        columns.push(SparseVec::from_pairs(codomain_reps.dim(), pairs));
    }
    InducedBracket {
        matrix: SparseMatrix::from_columns(field, codomain_reps.dim(), columns),
        abelianization,
        codomain_reps,
        derived,
        second_derived,
    }
}

/// The induced map Λ²(L/[L,L]) → [L,L]/[[L,L],L] alone, in coset
/// coordinates on both sides.
pub fn pi_map(l: &BasedAlgebra) -> SparseMatrix {
    induced_bracket(l).matrix
}
