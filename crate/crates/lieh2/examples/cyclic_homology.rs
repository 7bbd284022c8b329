//! First cyclic homology HC₁(A) = Ker(Λ²A → A)/T(A), the relation span
//! T(A), and the two-term product formula with its honest failure on
//! nilpotent pairs.

use lieh2::algebra::format_in_labels;
use lieh2::catalog;
use lieh2::cyclic::{hc1, t_span};
use lieh2::field::FieldSpec;
use lieh2::multilinear::MultilinearBasis;
use lieh2::verify::verify_hc1_product;

fn main() {
    let field = FieldSpec::RATIONALS;
    println!("{:<22} {:>4} {:>8}", "algebra", "dim", "HC₁");
    for name in [
        "unit_field",
        "dual_numbers",
        "trunc3",
        "trunc4",
        "square_zero2",
        "product_fields2",
        "cyclic_group_algebra3",
        "matrix2",
        "upper_triangular2",
    ] {
        let a = catalog::build(name, field).unwrap().algebra;
        println!(
            "{:<22} {:>4} {:>8}",
            name,
            a.dim(),
            hc1(&a).unwrap().dimension
        );
    }

    // T(A) is the span of the cyclic relations xy∧z + yz∧x + zx∧y; for
    // the dual numbers it already fills the kernel of the bracket map
    let dual = catalog::build("dual_numbers", field).unwrap().algebra;
    let t = t_span(&dual).unwrap();
    let basis = MultilinearBasis::wedge2(dual.dim());
    println!("\nT(dual numbers) generators:");
    for v in t.basis() {
        println!(
            "  {}",
            format_in_labels(v, |flat| basis.label(flat, dual.labels()))
        );
    }

    // the two-term product formula HC₁(A)⊗A′ + A⊗HC₁(A′) is exact when
    // one factor is separable, and undercounts when both augmentation
    // ideals are nilpotent
    println!("\nproduct formula, measured vs two-term sum:");
    let pairs = [
        ("product_fields2", "square_zero2"),
        ("unit_field", "trunc3"),
        ("dual_numbers", "dual_numbers"),
        ("square_zero2", "square_zero2"),
    ];
    for (left, right) in pairs {
        let a = catalog::build(left, field).unwrap().algebra;
        let b = catalog::build(right, field).unwrap().algebra;
        let r = verify_hc1_product(&a, &b).unwrap();
        println!(
            "  {:<34} {:>2} vs {:>2}  {}",
            format!("{left} ⊗ {right}"),
            r.lhs_dim,
            r.rhs_total(),
            if r.pass { "exact" } else { "undercounts" }
        );
    }
}
