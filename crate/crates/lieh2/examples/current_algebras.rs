//! The current-algebra decomposition: dim H₂(L ⊗ A) computed from the
//! chain complex on one side and from four tensor components on the
//! other, with the essential-part refinement as a sub-report.

use lieh2::catalog;
use lieh2::field::FieldSpec;
use lieh2::format::report_table;
use lieh2::verify::{verify_b_current, verify_current_h2};

fn main() {
    let field = FieldSpec::RATIONALS;
    let heis = catalog::build("heisenberg1", field).unwrap().algebra;
    let sq = catalog::build("square_zero2", field).unwrap().algebra;

    // both sides independently: the left side eliminates the 9-dim
    // current algebra's chain complex, the right side never builds it
    let r = verify_current_h2(&heis, &sq).unwrap();
    print!("{}", report_table(&r));

    println!();
    let sl2 = catalog::build("sl2", field).unwrap().algebra;
    let dual = catalog::build("dual_numbers", field).unwrap().algebra;
    let r = verify_current_h2(&sl2, &dual).unwrap();
    print!("{}", report_table(&r));

    // the coinvariants B(L ⊗ A) decompose too
    println!();
    let r = verify_b_current(&heis, &dual).unwrap();
    print!("{}", report_table(&r));

    // characteristic 2 is refused up front: the decomposition needs ½
    let f2 = FieldSpec::prime(2).unwrap();
    let l2 = catalog::build("heisenberg1", f2).unwrap().algebra;
    let a2 = catalog::build("dual_numbers", f2).unwrap().algebra;
    match verify_current_h2(&l2, &a2) {
        Err(e) => println!("\nover F₂: {e}"),
        Ok(_) => unreachable!(),
    }
}
