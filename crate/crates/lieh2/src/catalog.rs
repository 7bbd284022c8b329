//! Named algebra families used throughout the examples, the grid, and the
//! test suite.
//!
//! Names are parsed as a family followed by an integer parameter
//! (`heisenberg1`, `sl3`, `square_zero2`) or as one of the fixed names
//! `nonabelian2`, `unit_field`, `dual_numbers`.

use crate::algebra::BasedAlgebra;
use crate::field::FieldSpec;
use crate::linalg::SparseVec;
use crate::Error;

/// A catalog algebra plus advisory notes (for instance when sl(n) is built
/// over a field whose characteristic divides n).
pub struct CatalogEntry {
    pub algebra: BasedAlgebra,
    pub notes: Vec<String>,
}

pub const LIE_FAMILIES: &[&str] = &[
    "abelian<n>",
    "nonabelian2",
    "heisenberg<k>",
    "sl<n>",
    "gl<n>",
];
pub const ASSOC_FAMILIES: &[&str] = &[
    "unit_field",
    "dual_numbers",
    "trunc<n>",
    "square_zero<m>",
    "product_fields<n>",
    "cyclic_group_algebra<n>",
    "matrix<n>",
    "upper_triangular<n>",
];

/// Builds a catalog algebra by name over the given field.
pub fn build(name: &str, field: FieldSpec) -> Result<CatalogEntry, Error> {
    let base = name.trim();
    let plain = |algebra: Result<BasedAlgebra, Error>| {
        algebra.map(|algebra| CatalogEntry {
            algebra,
            notes: Vec::new(),
        })
    };
    match base {
        "nonabelian2" => return plain(nonabelian2(field)),
        "unit_field" => return plain(unit_field(field)),
        "dual_numbers" => return plain(dual_numbers(field)),
        _ => {}
    }
    const PARAMETRIC: &[&str] = &[
        "abelian",
        "heisenberg",
        "sl",
        "gl",
        "trunc",
        "square_zero",
        "product_fields",
        "cyclic_group_algebra",
        "matrix",
        "upper_triangular",
    ];
    let family = base.trim_end_matches(|c: char| c.is_ascii_digit());
    let digits = &base[family.len()..];
    if !PARAMETRIC.contains(&family) || digits.is_empty() {
        return Err(Error::Parse(format!(
            "unknown catalog entry `{name}`; Lie families: {}; associative families: {}",
            LIE_FAMILIES.join(", "),
            ASSOC_FAMILIES.join(", ")
        )));
    }
    let n: usize = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad parameter `{digits}` in `{name}`")))?;
    match family {
        "abelian" => plain(abelian(field, n)),
        "heisenberg" => plain(heisenberg(field, n)),
        "sl" => {
            let algebra = sl(field, n)?;
            let mut notes = Vec::new();
            let p = field.characteristic();
            if p != 0 && n.is_multiple_of(p as usize) {
                notes.push(format!(
                    "characteristic {p} divides {n}: sl{n} acquires a center (scalar matrices have trace 0)"
                ));
            }
            Ok(CatalogEntry { algebra, notes })
        }
        "gl" => plain(gl(field, n)),
        "trunc" => plain(trunc(field, n)),
        "square_zero" => plain(square_zero(field, n)),
        "product_fields" => plain(product_fields(field, n)),
        "cyclic_group_algebra" => plain(cyclic_group_algebra(field, n)),
        "matrix" => plain(matrix(field, n)),
        "upper_triangular" => plain(upper_triangular(field, n)),
        _ => unreachable!("family membership checked above"),
    }
}

/// Concrete instances touching every family, pinned for round-trip and
/// property tests.
pub fn all_names() -> Vec<String> {
    [
        "abelian1",
        "abelian2",
        "abelian3",
        "nonabelian2",
        "heisenberg1",
        "heisenberg2",
        "sl2",
        "sl3",
        "gl2",
        "unit_field",
        "dual_numbers",
        "trunc3",
        "trunc4",
        "square_zero2",
        "square_zero3",
        "product_fields2",
        "product_fields3",
        "cyclic_group_algebra3",
        "cyclic_group_algebra4",
        "matrix2",
        "upper_triangular2",
        "upper_triangular3",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

fn require(cond: bool, what: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parse(format!("out-of-range parameter: {what}")))
    }
}

/// n-dimensional abelian Lie algebra.
pub fn abelian(field: FieldSpec, n: usize) -> Result<BasedAlgebra, Error> {
    require(n >= 1, "abelian needs n >= 1")?;
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    BasedAlgebra::lie(field, labels, Vec::new())
}

/// The 2-dimensional Lie algebra [x, y] = y, the smallest nonabelian one.
pub fn nonabelian2(field: FieldSpec) -> Result<BasedAlgebra, Error> {
    let labels = vec!["x".into(), "y".into()];
    let y = SparseVec::unit(2, 1, &field);
    BasedAlgebra::lie(field, labels, vec![(0, 1, y)])
}

/// Heisenberg algebra of dimension 2k+1: [eᵢ, fᵢ] = z, z central.
pub fn heisenberg(field: FieldSpec, k: usize) -> Result<BasedAlgebra, Error> {
    require(k >= 1, "heisenberg needs k >= 1")?;
    let dim = 2 * k + 1;
    let labels: Vec<String> = if k == 1 {
        vec!["e".into(), "f".into(), "z".into()]
    } else {
        (1..=k)
            .map(|i| format!("e{i}"))
            .chain((1..=k).map(|i| format!("f{i}")))
            .chain(["z".to_string()])
            .collect()
    };
    let z = SparseVec::unit(dim, dim - 1, &field);
    let brackets = (0..k).map(|i| (i, k + i, z.clone())).collect();
    BasedAlgebra::lie(field, labels, brackets)
}

/// Full n x n matrix algebra, basis e(r, c) in row-major order.
pub fn matrix(field: FieldSpec, n: usize) -> Result<BasedAlgebra, Error> {
    require(n >= 1, "matrix needs n >= 1")?;
    let dim = n * n;
    let labels = (1..=n)
        .flat_map(|r| (1..=n).map(move |c| format!("e{r}{c}")))
        .collect();
    let mut products = Vec::new();
    // e(r,s) e(s,c) = e(r,c)
    for r in 0..n {
        for s in 0..n {
            for c in 0..n {
                products.push((
                    r * n + s,
                    s * n + c,
                    SparseVec::unit(dim, r * n + c, &field),
                ));
            }
        }
    }
    let unit = SparseVec::from_pairs(dim, (0..n).map(|i| (i * n + i, field.one())).collect());
    BasedAlgebra::associative(field, labels, products, Some(unit))
}

/// Upper-triangular n x n matrices.
pub fn upper_triangular(field: FieldSpec, n: usize) -> Result<BasedAlgebra, Error> {
    require(n >= 1, "upper_triangular needs n >= 1")?;
    let positions: Vec<(usize, usize)> = (0..n).flat_map(|r| (r..n).map(move |c| (r, c))).collect();
    let index = |r: usize, c: usize| positions.iter().position(|&p| p == (r, c)).unwrap();
    let dim = positions.len();
    let labels = positions
        .iter()
        .map(|(r, c)| format!("e{}{}", r + 1, c + 1))
        .collect();
    let mut products = Vec::new();
    for (a, &(r, s)) in positions.iter().enumerate() {
        for (b, &(s2, c)) in positions.iter().enumerate() {
            if s == s2 {
                products.push((a, b, SparseVec::unit(dim, index(r, c), &field)));
            }
        }
    }
    let unit = SparseVec::from_pairs(dim, (0..n).map(|i| (index(i, i), field.one())).collect());
    BasedAlgebra::associative(field, labels, products, Some(unit))
}

/// Trace-zero n x n matrices inside gl(n): off-diagonal units then
/// h(i) = e(i,i) - e(i+1,i+1).
pub fn sl(field: FieldSpec, n: usize) -> Result<BasedAlgebra, Error> {
    require(n >= 2, "sl needs n >= 2")?;
    let ambient = gl(field, n)?;
    let dim = n * n;
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if r != c {
                vectors.push(SparseVec::unit(dim, r * n + c, &field));
                labels.push(format!("e{}{}", r + 1, c + 1));
            }
        }
    }
    for i in 0..n - 1 {
        vectors.push(SparseVec::from_pairs(
            dim,
            vec![
                (i * n + i, field.one()),
                ((i + 1) * n + (i + 1), -&field.one()),
            ],
        ));
        labels.push(format!("h{}", i + 1));
    }
    ambient.subalgebra_on(&vectors, labels)
}

/// gl(n): the associated Lie algebra of the matrix algebra.
pub fn gl(field: FieldSpec, n: usize) -> Result<BasedAlgebra, Error> {
    matrix(field, n)?.associated_lie()
}

/// The base field as a one-dimensional algebra.
pub fn unit_field(field: FieldSpec) -> Result<BasedAlgebra, Error> {
    let one = SparseVec::unit(1, 0, &field);
    BasedAlgebra::associative(
        field,
        vec!["1".into()],
        vec![(0, 0, one.clone())],
        Some(one),
    )
}

/// K[ε]/(ε²).
pub fn dual_numbers(field: FieldSpec) -> Result<BasedAlgebra, Error> {
    trunc_with_labels(field, 2, vec!["1".into(), "ε".into()])
}

/// K[t]/(tⁿ), dimension n.
pub fn trunc(field: FieldSpec, n: usize) -> Result<BasedAlgebra, Error> {
    require(n >= 1, "trunc needs n >= 1")?;
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        })
        .collect();
    trunc_with_labels(field, n, labels)
}

fn trunc_with_labels(
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
) -> Result<BasedAlgebra, Error> {
    let mut products = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i + j < dim {
                products.push((i, j, SparseVec::unit(dim, i + j, &field)));
            }
        }
    }
    let unit = SparseVec::unit(dim, 0, &field);
    BasedAlgebra::associative(field, labels, products, Some(unit))
}

/// K ⊕ V with dim V = m and V·V = 0.
pub fn square_zero(field: FieldSpec, m: usize) -> Result<BasedAlgebra, Error> {
    require(m >= 1, "square_zero needs m >= 1")?;
    let dim = m + 1;
    let labels = std::iter::once("1".to_string())
        .chain((1..=m).map(|i| format!("x{i}")))
        .collect();
    let mut products = vec![(0, 0, SparseVec::unit(dim, 0, &field))];
    for i in 1..dim {
        products.push((0, i, SparseVec::unit(dim, i, &field)));
        products.push((i, 0, SparseVec::unit(dim, i, &field)));
    }
    let unit = SparseVec::unit(dim, 0, &field);
    BasedAlgebra::associative(field, labels, products, Some(unit))
}

/// K × K × ... × K (n orthogonal idempotents).
pub fn product_fields(field: FieldSpec, n: usize) -> Result<BasedAlgebra, Error> {
    require(n >= 1, "product_fields needs n >= 1")?;
    let labels = (1..=n).map(|i| format!("u{i}")).collect();
    let products = (0..n)
        .map(|i| (i, i, SparseVec::unit(n, i, &field)))
        .collect();
    let unit = SparseVec::from_pairs(n, (0..n).map(|i| (i, field.one())).collect());
    BasedAlgebra::associative(field, labels, products, Some(unit))
}

/// Group algebra of the cyclic group of order n.
pub fn cyclic_group_algebra(field: FieldSpec, n: usize) -> Result<BasedAlgebra, Error> {
    require(n >= 1, "cyclic_group_algebra needs n >= 1")?;
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            products.push((i, j, SparseVec::unit(n, (i + j) % n, &field)));
        }
    }
    let unit = SparseVec::unit(n, 0, &field);
    BasedAlgebra::associative(field, labels, products, Some(unit))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    #[test]
    fn every_entry_validates_over_q_and_f5() {
        let f5 = FieldSpec::prime(5).unwrap();
        for field in [q(), f5] {
            for name in [
                "abelian2",
                "abelian3",
                "nonabelian2",
                "heisenberg1",
                "heisenberg2",
                "sl2",
                "sl3",
                "gl2",
                "unit_field",
                "dual_numbers",
                "trunc3",
                "square_zero2",
                "product_fields2",
                "cyclic_group_algebra3",
                "matrix2",
                "upper_triangular2",
            ] {
                let entry = build(name, field).unwrap_or_else(|e| panic!("{name}: {e}"));
                let report = entry.algebra.validate();
                assert!(
                    report.is_empty(),
                    "{name} over {field}: {}",
                    report.render(&entry.algebra)
                );
            }
        }
    }

    #[test]
    fn dimensions() {
        let f = q();
        let d = |name: &str| build(name, f).unwrap().algebra.dim();
        assert_eq!(d("abelian3"), 3);
        assert_eq!(d("nonabelian2"), 2);
        assert_eq!(d("heisenberg1"), 3);
        assert_eq!(d("heisenberg2"), 5);
        assert_eq!(d("sl2"), 3);
        assert_eq!(d("sl3"), 8);
        assert_eq!(d("gl2"), 4);
        assert_eq!(d("unit_field"), 1);
        assert_eq!(d("dual_numbers"), 2);
        assert_eq!(d("trunc3"), 3);
        assert_eq!(d("square_zero2"), 3);
        assert_eq!(d("product_fields2"), 2);
        assert_eq!(d("cyclic_group_algebra3"), 3);
        assert_eq!(d("matrix2"), 4);
        assert_eq!(d("upper_triangular2"), 3);
    }

    #[test]
    fn commutativity_and_units() {
        let f = q();
        for name in [
            "unit_field",
            "dual_numbers",
            "trunc2",
            "square_zero3",
            "product_fields3",
            "cyclic_group_algebra4",
        ] {
            let a = build(name, f).unwrap().algebra;
            assert!(a.is_commutative(), "{name}");
            assert!(a.is_unital(), "{name}");
        }
        for name in ["matrix2", "matrix3", "upper_triangular2"] {
            let a = build(name, f).unwrap().algebra;
            assert!(!a.is_commutative(), "{name}");
            assert!(a.is_unital(), "{name}");
        }
    }

    #[test]
    fn sl2_structure_constants() {
        let f = q();
        let l = sl(f, 2).unwrap();
        // order: e12, e21, h1
        assert_eq!(
            l.labels(),
            &["e12".to_string(), "e21".to_string(), "h1".to_string()]
        );
        let h = SparseVec::unit(3, 2, &f);
        assert_eq!(l.basis_product(0, 1), &h);
        let e = SparseVec::unit(3, 0, &f);
        assert_eq!(l.product(&h, &e), e.scaled(&f.integer(2)));
        let fv = SparseVec::unit(3, 1, &f);
        assert_eq!(l.product(&h, &fv), fv.scaled(&f.integer(-2)));
    }

    #[test]
    fn gl2_bracket() {
        let f = q();
        let l = gl(f, 2).unwrap();
        // [e12, e21] = e11 - e22 (flat indices 1, 2 -> 0, 3)
        let expected = SparseVec::from_pairs(4, vec![(0, f.one()), (3, -&f.one())]);
        assert_eq!(
            l.product(&SparseVec::unit(4, 1, &f), &SparseVec::unit(4, 2, &f)),
            expected
        );
    }

    #[test]
    fn name_parsing_errors() {
        let f = q();
        assert!(build("frobnicate", f).is_err());
        assert!(build("sl", f).is_err());
        assert!(build("abelian0", f).is_err());
        assert!(build("sl1", f).is_err());
        assert!(build("heisenberg0", f).is_err());
        assert!(build("abelian12", f).is_ok());
    }

    #[test]
    fn sl_warns_when_characteristic_divides_n() {
        let f2 = FieldSpec::prime(2).unwrap();
        let entry = build("sl2", f2).unwrap();
        assert_eq!(entry.notes.len(), 1);
        assert!(entry.notes[0].contains("divides"));
        assert!(build("sl2", q()).unwrap().notes.is_empty());
        assert!(build("sl2", FieldSpec::prime(5).unwrap())
            .unwrap()
            .notes
            .is_empty());
    }

    #[test]
    fn trunc_multiplication_truncates() {
        let f = q();
        let a = trunc(f, 3).unwrap();
        // K[t]/(t³): t * t = t², t * t² = 0
        assert_eq!(a.basis_product(1, 1), &SparseVec::unit(3, 2, &f));
        assert!(a.basis_product(1, 2).is_zero());
        assert_eq!(a.label(2), "t^2");
        let a4 = trunc(f, 4).unwrap();
        assert_eq!(a4.basis_product(1, 2), &SparseVec::unit(4, 3, &f));
        assert!(a4.basis_product(2, 2).is_zero());
        assert_eq!(a4.label(3), "t^3");
    }
}
