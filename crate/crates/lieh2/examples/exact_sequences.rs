//! The five-term sequence tying H₂ to its essential part, the
//! coinvariant sequence for B(L), and the ideal version, all checked at
//! the subspace level rather than by dimension counts alone.

use lieh2::catalog;
use lieh2::field::FieldSpec;
use lieh2::format::report_table;
use lieh2::sequences::{coinvariant_sequence_report, five_term_report, ideal_sequence_report};
use lieh2::{BasedAlgebra, SparseVec, Subspace};

fn main() {
    let field = FieldSpec::RATIONALS;
    let heis = catalog::build("heisenberg1", field).unwrap().algebra;

    print!("{}", report_table(&five_term_report(&heis).unwrap()));
    println!();
    print!(
        "{}",
        report_table(&coinvariant_sequence_report(&heis).unwrap())
    );

    // the relative version for a pair of ideals: the center z and the
    // whole algebra
    let center = Subspace::from_rows(
        field,
        heis.dim(),
        vec![SparseVec::unit(heis.dim(), 2, &field)],
    );
    let full = Subspace::full(field, heis.dim());
    println!();
    print!(
        "{}",
        report_table(&ideal_sequence_report(&heis, &center, &full).unwrap())
    );

    // a non-ideal is rejected before any sequence is formed
    let not_ideal = Subspace::from_rows(
        field,
        heis.dim(),
        vec![SparseVec::unit(heis.dim(), 0, &field)],
    );
    match ideal_sequence_report(&heis, &not_ideal, &full) {
        Err(e) => println!("\nspan{{e}}: {e}"),
        Ok(_) => unreachable!(),
    }

    // the same sequences hold for current algebras, which is where the
    // decomposition theorems lean on them
    let dual = catalog::build("dual_numbers", field).unwrap().algebra;
    let current = BasedAlgebra::current_tensor(&heis, &dual).unwrap();
    println!();
    print!("{}", report_table(&five_term_report(&current).unwrap()));
}
