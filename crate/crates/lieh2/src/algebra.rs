//! Finite-dimensional algebras given by structure constants on a labeled
//! basis.
//!
//! A [`BasedAlgebra`] is either a Lie algebra (antisymmetric table, Jacobi
//! checked by [`BasedAlgebra::validate`]) or an associative algebra
//! (associativity and unit axioms checked).  Constructors only perform
//! structural checks; `validate` reports axiom violations with exact
//! residuals, so invalid tables can be inspected rather than rejected
//! blindly.

use std::fmt;

use crate::field::FieldSpec;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::subspace::{QuotientSpace, Subspace};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Lie,
    Associative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    /// Lie bracket, or the commutator xy - yx on an associative algebra.
    Bracket,
    /// The plain product of an associative algebra.
    Associative,
    /// (xy + yx) / 2; requires characteristic ≠ 2.
    Jordan,
}

impl ProductMode {
    fn from_kind(kind: AlgebraKind) -> Self {
        match kind {
            AlgebraKind::Lie => ProductMode::Bracket,
            AlgebraKind::Associative => ProductMode::Associative,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedAlgebra {
    kind: AlgebraKind,
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    /// Full product table, row-major: `table[i * dim + j]` is eᵢ·eⱼ.
    table: Vec<SparseVec>,
    unit: Option<SparseVec>,
    commutative: bool,
}

impl BasedAlgebra {
    /// Lie algebra from brackets on basis pairs i < j; omitted pairs vanish.
    /// The lower triangle and diagonal are filled in by antisymmetry.
    pub fn lie(
        field: FieldSpec,
        labels: Vec<String>,
        brackets: Vec<(usize, usize, SparseVec)>,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        let mut table = vec![SparseVec::zero(dim); dim * dim];
        for (i, j, v) in brackets {
            if i >= j {
                return Err(Error::Algebra(format!(
                    "bracket row ({i}, {j}): need i < j; the rest follows by antisymmetry"
                )));
            }
            check_entry(dim, i, j, &v)?;
            if !table[i * dim + j].is_zero() {
                return Err(Error::Algebra(format!("duplicate bracket row ({i}, {j})")));
            }
            table[j * dim + i] = v.negated();
            table[i * dim + j] = v;
        }
        Ok(BasedAlgebra {
            kind: AlgebraKind::Lie,
            field,
            dim,
            labels,
            table,
            unit: None,
            commutative: false,
        }
        .with_recomputed_commutativity())
    }

    /// Associative algebra from products on basis pairs; omitted pairs vanish.
    pub fn associative(
        field: FieldSpec,
        labels: Vec<String>,
        products: Vec<(usize, usize, SparseVec)>,
        unit: Option<SparseVec>,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        let mut table = vec![SparseVec::zero(dim); dim * dim];
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in products {
            check_entry(dim, i, j, &v)?;
            if seen[i * dim + j] {
                return Err(Error::Algebra(format!("duplicate product row ({i}, {j})")));
            }
            seen[i * dim + j] = true;
            table[i * dim + j] = v;
        }
        if let Some(u) = &unit {
            if u.dim() != dim {
                return Err(Error::Dimension(format!(
                    "unit has dimension {}, algebra has {}",
                    u.dim(),
                    dim
                )));
            }
        }
        Ok(BasedAlgebra {
            kind: AlgebraKind::Associative,
            field,
            dim,
            labels,
            table,
            unit,
            commutative: false,
        }
        .with_recomputed_commutativity())
    }

    fn with_recomputed_commutativity(mut self) -> Self {
        self.commutative = match self.kind {
            // a Lie table is symmetric only when it vanishes
            AlgebraKind::Lie => self.table.iter().all(SparseVec::is_zero),
            AlgebraKind::Associative => (0..self.dim).all(|i| {
                (i + 1..self.dim)
                    .all(|j| self.table[i * self.dim + j] == self.table[j * self.dim + i])
            }),
        };
        self
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> Option<&SparseVec> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_lie(&self) -> bool {
        self.kind == AlgebraKind::Lie
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    /// The bilinear table product of two coordinate vectors.
    pub fn product(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        assert_eq!(x.dim(), self.dim);
        assert_eq!(y.dim(), self.dim);
        let mut acc = SparseVec::zero(self.dim);
        for (i, xi) in x.iter() {
            for (j, yj) in y.iter() {
                let t = self.basis_product(*i, *j);
                if !t.is_zero() {
                    let c = xi * yj;
                    acc = acc.add_scaled(&c, t);
                }
            }
        }
        acc
    }

    /// Lie bracket: the table product for a Lie algebra, the commutator
    /// xy - yx for an associative one.
    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        match self.kind {
            AlgebraKind::Lie => self.product(x, y),
            AlgebraKind::Associative => self.product(x, y).sub(&self.product(y, x)),
        }
    }

    /// (xy + yx) / 2 on an associative algebra.
    pub fn jordan(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec, Error> {
        if self.kind != AlgebraKind::Associative {
            return Err(Error::Unsupported(
                "Jordan product needs an associative algebra".into(),
            ));
        }
        if self.field.characteristic() == 2 {
            return Err(Error::char_two("the Jordan product"));
        }
        let half = self.field.integer(2).inv();
        Ok(self.product(x, y).add(&self.product(y, x)).scaled(&half))
    }

    /// Axiom check with exact residuals: Jacobi for Lie tables,
    /// associativity and unit laws for associative ones.
    pub fn validate(&self) -> AxiomReport {
        let mut violations = Vec::new();
        match self.kind {
            AlgebraKind::Lie => {
                for i in 0..self.dim {
                    for j in i + 1..self.dim {
                        for k in j + 1..self.dim {
                            let r = self
                                .product(self.basis_product(i, j), &self.basis_unit(k))
                                .add(&self.product(self.basis_product(k, i), &self.basis_unit(j)))
                                .add(&self.product(self.basis_product(j, k), &self.basis_unit(i)));
                            if !r.is_zero() {
                                violations.push(AxiomViolation::Jacobi {
                                    triple: (i, j, k),
                                    residual: r,
                                });
                            }
                        }
                    }
                }
            }
            AlgebraKind::Associative => {
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        for k in 0..self.dim {
                            let r = self
                                .product(self.basis_product(i, j), &self.basis_unit(k))
                                .sub(&self.product(&self.basis_unit(i), self.basis_product(j, k)));
                            if !r.is_zero() {
                                violations.push(AxiomViolation::Associativity {
                                    triple: (i, j, k),
                                    residual: r,
                                });
                            }
                        }
                    }
                }
                if let Some(u) = &self.unit {
                    for i in 0..self.dim {
                        let e = self.basis_unit(i);
                        let left = self.product(u, &e).sub(&e);
                        if !left.is_zero() {
                            violations.push(AxiomViolation::Unit {
                                index: i,
                                left: true,
                                residual: left,
                            });
                        }
                        let right = self.product(&e, u).sub(&e);
                        if !right.is_zero() {
                            violations.push(AxiomViolation::Unit {
                                index: i,
                                left: false,
                                residual: right,
                            });
                        }
                    }
                }
            }
        }
        AxiomReport { violations }
    }

    fn basis_unit(&self, i: usize) -> SparseVec {
        SparseVec::unit(self.dim, i, &self.field)
    }

    fn validated(self, what: &str) -> Result<Self, Error> {
        let report = self.validate();
        if report.is_empty() {
            Ok(self)
        } else {
            Err(Error::Algebra(format!(
                "{what} failed validation:\n{}",
                report.render(&self)
            )))
        }
    }

    /// Span of pairwise products of two subspaces under the chosen product.
    pub fn span_product(
        &self,
        u: &Subspace,
        w: &Subspace,
        mode: ProductMode,
    ) -> Result<Subspace, Error> {
        for s in [u, w] {
            if s.ambient_dim() != self.dim || s.field() != self.field {
                return Err(Error::Dimension(
                    "span_product subspaces must live in the algebra's space".into(),
                ));
            }
        }
        let mut rows = Vec::with_capacity(u.dim() * w.dim());
        for x in u.basis() {
            for y in w.basis() {
                let p = match mode {
                    ProductMode::Bracket => self.bracket(x, y),
                    ProductMode::Associative => {
                        if self.kind != AlgebraKind::Associative {
                            return Err(Error::Unsupported(
                                "associative span_product needs an associative algebra".into(),
                            ));
                        }
                        self.product(x, y)
                    }
                    ProductMode::Jordan => self.jordan(x, y)?,
                };
                rows.push(p);
            }
        }
        Ok(Subspace::from_rows(self.field, self.dim, rows))
    }

    /// Whether the span is stable under multiplication by the whole algebra
    /// (two-sided for associative algebras).
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, Error> {
        if s.ambient_dim() != self.dim || s.field() != self.field {
            return Err(Error::Dimension(
                "ideal test needs a subspace of the algebra".into(),
            ));
        }
        let full = Subspace::full(self.field, self.dim);
        let left = self.span_product(&full, s, ProductMode::from_kind(self.kind))?;
        if !s.contains_subspace(&left) {
            return Ok(false);
        }
        if self.kind == AlgebraKind::Associative {
            let right = self.span_product(s, &full, ProductMode::Associative)?;
            if !s.contains_subspace(&right) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The derived subspace: [L, L] for Lie algebras, the span of all
    /// commutators for associative ones.
    pub fn derived_subspace(&self) -> Subspace {
        let full = Subspace::full(self.field, self.dim);
        self.span_product(&full, &full, ProductMode::Bracket)
            .expect("full subspaces are compatible")
    }

    /// The associated Lie algebra of an associative algebra: same space,
    /// bracket xy - yx.
    pub fn associated_lie(&self) -> Result<BasedAlgebra, Error> {
        if self.kind != AlgebraKind::Associative {
            return Err(Error::Unsupported(
                "associated Lie algebra needs an associative algebra".into(),
            ));
        }
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.basis_product(i, j).sub(self.basis_product(j, i));
                if !v.is_zero() {
                    brackets.push((i, j, v));
                }
            }
        }
        BasedAlgebra::lie(self.field, self.labels.clone(), brackets)?
            .validated("associated Lie algebra")
    }

    /// The current Lie algebra L ⊗ A for a Lie algebra L and a commutative
    /// associative algebra A: [x ⊗ a, y ⊗ b] = [x, y] ⊗ ab.
    pub fn current_tensor(l: &BasedAlgebra, a: &BasedAlgebra) -> Result<BasedAlgebra, Error> {
        if l.kind != AlgebraKind::Lie {
            return Err(Error::Unsupported(
                "current algebra needs a Lie algebra on the left".into(),
            ));
        }
        if a.kind != AlgebraKind::Associative || !a.commutative {
            return Err(Error::Unsupported(
                "current algebra needs a commutative associative algebra on the right".into(),
            ));
        }
        if l.field != a.field {
            return Err(Error::Dimension(format!(
                "fields differ: {} vs {}",
                l.field, a.field
            )));
        }
        let (n, m) = (l.dim, a.dim);
        let dim = n * m;
        let labels = tensor_labels(&l.labels, &a.labels);
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lb = l.basis_product(i, j);
                if lb.is_zero() {
                    continue;
                }
                for p in 0..m {
                    for q in 0..m {
                        let flat_i = i * m + p;
                        let flat_j = j * m + q;
                        // i < j already orders the flat pair
                        let ab = a.basis_product(p, q);
                        let v = tensor_expand(lb, ab, dim, m);
                        if !v.is_zero() {
                            brackets.push((flat_i, flat_j, v));
                        }
                    }
                }
            }
        }
        BasedAlgebra::lie(l.field, labels, brackets)?.validated("current algebra")
    }

    /// Tensor product of associative algebras.
    pub fn tensor_product(a: &BasedAlgebra, b: &BasedAlgebra) -> Result<BasedAlgebra, Error> {
        for x in [a, b] {
            if x.kind != AlgebraKind::Associative {
                return Err(Error::Unsupported(
                    "tensor product needs associative algebras".into(),
                ));
            }
        }
        if a.field != b.field {
            return Err(Error::Dimension(format!(
                "fields differ: {} vs {}",
                a.field, b.field
            )));
        }
        let (n, m) = (a.dim, b.dim);
        let dim = n * m;
        let labels = tensor_labels(&a.labels, &b.labels);
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ap = a.basis_product(i, j);
                if ap.is_zero() {
                    continue;
                }
                for p in 0..m {
                    for q in 0..m {
                        let bp = b.basis_product(p, q);
                        let v = tensor_expand(ap, bp, dim, m);
                        if !v.is_zero() {
                            products.push((i * m + p, j * m + q, v));
                        }
                    }
                }
            }
        }
        let unit = match (&a.unit, &b.unit) {
            (Some(ua), Some(ub)) => Some(tensor_expand(ua, ub, dim, m)),
            _ => None,
        };
        BasedAlgebra::associative(a.field, labels, products, unit)?.validated("tensor product")
    }

    /// Quotient by a two-sided ideal, on the canonical coset basis.
    pub fn quotient_algebra(&self, ideal: &Subspace) -> Result<BasedAlgebra, Error> {
        if ideal.ambient_dim() != self.dim || ideal.field() != self.field {
            return Err(Error::Dimension(
                "ideal must live in the algebra's space".into(),
            ));
        }
        for (bi, v) in ideal.basis().iter().enumerate() {
            for i in 0..self.dim {
                let e = self.basis_unit(i);
                for (x, y, side) in [(&e, v, "left"), (v, &e, "right")] {
                    let p = self.product(x, y);
                    if !ideal.contains(&p) {
                        return Err(Error::Algebra(format!(
                            "not an ideal: {side} product of basis vector {} with ideal vector {} \
                             escapes the span (value {})",
                            self.labels[i],
                            self.format_element(v).replace('\u{2212}', "-"),
                            self.format_element(&p),
                        )));
                    }
                    if self.kind == AlgebraKind::Lie {
                        break; // antisymmetry makes one side enough
                    }
                }
            }
            let _ = bi;
        }
        let quot = QuotientSpace::new(ideal.clone());
        let qdim = quot.dim();
        let labels: Vec<String> = (0..qdim)
            .map(|k| self.labels[quot.lift_index(k)].clone())
            .collect();
        let mut entries = Vec::new();
        for s in 0..qdim {
            for t in 0..qdim {
                if self.kind == AlgebraKind::Lie && s >= t {
                    continue;
                }
                let p = self.product(&quot.lift(s), &quot.lift(t));
                let v = quot.coords(&p);
                if !v.is_zero() {
                    entries.push((s, t, v));
                }
            }
        }
        let out = match self.kind {
            AlgebraKind::Lie => BasedAlgebra::lie(self.field, labels, entries)?,
            AlgebraKind::Associative => {
                let unit = self.unit.as_ref().map(|u| quot.coords(u));
                BasedAlgebra::associative(self.field, labels, entries, unit)?
            }
        };
        out.validated("quotient algebra")
    }

    /// Structure constants of the span of the given independent vectors,
    /// which must be closed under the table product.
    pub fn subalgebra_on(
        &self,
        vectors: &[SparseVec],
        labels: Vec<String>,
    ) -> Result<BasedAlgebra, Error> {
        assert_eq!(vectors.len(), labels.len());
        let m = SparseMatrix::from_columns(self.field, self.dim, vectors.to_vec());
        if m.rank() != vectors.len() {
            return Err(Error::Algebra("subalgebra vectors are dependent".into()));
        }
        let k = vectors.len();
        let mut entries = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if self.kind == AlgebraKind::Lie && i >= j {
                    continue;
                }
                let p = self.product(&vectors[i], &vectors[j]);
                let c = m.solve(&p).ok_or_else(|| {
                    Error::Algebra(format!(
                        "vectors are not closed under the product: {} escapes",
                        self.format_element(&p)
                    ))
                })?;
                if !c.is_zero() {
                    entries.push((i, j, c));
                }
            }
        }
        let out = match self.kind {
            AlgebraKind::Lie => BasedAlgebra::lie(self.field, labels, entries)?,
            AlgebraKind::Associative => {
                let unit = self.unit.as_ref().and_then(|u| m.solve(u));
                BasedAlgebra::associative(self.field, labels, entries, unit)?
            }
        };
        out.validated("subalgebra")
    }

    /// Pretty-prints a coordinate vector in the algebra's labels.
    pub fn format_element(&self, v: &SparseVec) -> String {
        format_in_labels(v, |i| self.labels[i].clone())
    }
}

pub(crate) fn tensor_labels(left: &[String], right: &[String]) -> Vec<String> {
    let mut labels = Vec::with_capacity(left.len() * right.len());
    for l in left {
        for r in right {
            labels.push(format!("{l}⊗{r}"));
        }
    }
    labels
}

pub(crate) fn tensor_expand(u: &SparseVec, v: &SparseVec, dim: usize, m: usize) -> SparseVec {
    let mut pairs = Vec::with_capacity(u.support_len() * v.support_len());
    for (i, ci) in u.iter() {
        for (j, dj) in v.iter() {
            pairs.push((i * m + j, ci * dj));
        }
    }
    SparseVec::from_pairs(dim, pairs)
}

/// Renders a coordinate vector as a signed sum in the given labels.
pub fn format_in_labels(v: &SparseVec, label: impl Fn(usize) -> String) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (i, c)) in v.iter().enumerate() {
        let l = label(*i);
        let (sign, mag) = match c.as_integer() {
            Some(k) if k < 0 => ("-", format_term(-k, &l)),
            Some(k) => ("+", format_term(k, &l)),
            None => {
                let s = c.to_string();
                if let Some(rest) = s.strip_prefix('-') {
                    ("-", format!("{rest}·{l}"))
                } else {
                    ("+", format!("{s}·{l}"))
                }
            }
        };
        if n == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        out.push_str(&mag);
    }
    out
}

fn format_term(k: i64, label: &str) -> String {
    if k == 1 {
        label.to_string()
    } else {
        format!("{k}·{label}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self, alg: &BasedAlgebra) -> String {
        self.violations
            .iter()
            .map(|v| v.render(alg))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// [[eᵢ,eⱼ],eₖ] + [[eₖ,eᵢ],eⱼ] + [[eⱼ,eₖ],eᵢ] ≠ 0.
    Jacobi {
        triple: (usize, usize, usize),
        residual: SparseVec,
    },
    /// (eᵢeⱼ)eₖ - eᵢ(eⱼeₖ) ≠ 0.
    Associativity {
        triple: (usize, usize, usize),
        residual: SparseVec,
    },
    /// unit·eᵢ ≠ eᵢ (left) or eᵢ·unit ≠ eᵢ.
    Unit {
        index: usize,
        left: bool,
        residual: SparseVec,
    },
}

impl AxiomViolation {
    pub fn residual(&self) -> &SparseVec {
        match self {
            AxiomViolation::Jacobi { residual, .. } => residual,
            AxiomViolation::Associativity { residual, .. } => residual,
            AxiomViolation::Unit { residual, .. } => residual,
        }
    }

    pub fn render(&self, alg: &BasedAlgebra) -> String {
        match self {
            AxiomViolation::Jacobi {
                triple: (i, j, k),
                residual,
            } => format!(
                "Jacobi residual at ({}, {}, {}): {}",
                alg.label(*i),
                alg.label(*j),
                alg.label(*k),
                alg.format_element(residual)
            ),
            AxiomViolation::Associativity {
                triple: (i, j, k),
                residual,
            } => format!(
                "associativity residual at ({}, {}, {}): {}",
                alg.label(*i),
                alg.label(*j),
                alg.label(*k),
                alg.format_element(residual)
            ),
            AxiomViolation::Unit {
                index,
                left,
                residual,
            } => format!(
                "{} unit axiom fails at {}: residual {}",
                if *left { "left" } else { "right" },
                alg.label(*index),
                alg.format_element(residual)
            ),
        }
    }
}

fn check_entry(dim: usize, i: usize, j: usize, v: &SparseVec) -> Result<(), Error> {
    if i >= dim || j >= dim {
        return Err(Error::Dimension(format!(
            "table row ({i}, {j}) out of range for dimension {dim}"
        )));
    }
    if v.dim() != dim {
        return Err(Error::Dimension(format!(
            "table value at ({i}, {j}) has dimension {}, expected {dim}",
            v.dim()
        )));
    }
    Ok(())
}

impl fmt::Display for BasedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            AlgebraKind::Lie => "Lie algebra",
            AlgebraKind::Associative => {
                if self.commutative {
                    "commutative algebra"
                } else {
                    "associative algebra"
                }
            }
        };
        write!(f, "{kind} of dimension {} over {}", self.dim, self.field)?;
        if self.dim > 0 && self.dim <= 12 {
            write!(f, " with basis {}", self.labels.join(", "))?;
        }
        Ok(())
    }
}
