//! H₂ of the commutator Lie algebra of A ⊗ B, decomposed into the eight
//! F-components, and the matrix-coefficient identities it specializes to.

use lieh2::catalog;
use lieh2::field::FieldSpec;
use lieh2::format::report_table;
use lieh2::verify::{f_components, verify_matrix_remarks, verify_tensor_h2};

fn main() {
    let field = FieldSpec::RATIONALS;
    let sq = catalog::build("square_zero2", field).unwrap().algebra;
    let m2 = catalog::build("matrix2", field).unwrap().algebra;

    // the bracket on A ⊗ B splits along Jordan and commutator halves,
    // and H₂ splits accordingly into F(A,B) ⊕ F(B,A)
    let r = verify_tensor_h2(&sq, &m2).unwrap();
    print!("{}", report_table(&r));

    // the asymmetry is visible in the raw component lists
    println!("\nF(square_zero2, matrix2):");
    for c in f_components(&sq, &m2).unwrap() {
        println!("  {:<44} {}", c.label, c.dim);
    }
    println!("F(matrix2, square_zero2):");
    for c in f_components(&m2, &sq).unwrap() {
        println!("  {:<44} {}", c.label, c.dim);
    }

    // specializing B = M_n recovers the matrix identities; the sl part
    // needs commutative coefficients and characteristic coprime to n
    for name in ["unit_field", "dual_numbers", "square_zero2", "trunc3"] {
        let a = catalog::build(name, field).unwrap().algebra;
        println!();
        print!("{}", report_table(&verify_matrix_remarks(&a, 2).unwrap()));
    }

    // noncommutative coefficients: the gl identity still holds, the sl
    // check is skipped with a note
    let ut = catalog::build("upper_triangular2", field).unwrap().algebra;
    println!();
    print!("{}", report_table(&verify_matrix_remarks(&ut, 2).unwrap()));
}
