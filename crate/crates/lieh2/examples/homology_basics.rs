//! H₂, its essential part, and the coinvariants B(L) across the small
//! Lie algebra catalog, with canonical cycle representatives.

use lieh2::catalog;
use lieh2::field::FieldSpec;
use lieh2::homology::{b_coinvariants, h2, h2_ess};
use lieh2::multilinear::MultilinearBasis;

fn main() {
    let field = FieldSpec::RATIONALS;
    println!("{:<14} {:>4} {:>7} {:>6}", "algebra", "H₂", "H₂ᵉˢˢ", "B(L)");
    for name in [
        "abelian3",
        "nonabelian2",
        "heisenberg1",
        "heisenberg2",
        "sl2",
        "sl3",
        "gl2",
    ] {
        let l = catalog::build(name, field).unwrap().algebra;
        println!(
            "{:<14} {:>4} {:>7} {:>6}",
            name,
            h2(&l).dimension,
            h2_ess(&l).dimension,
            b_coinvariants(&l).dimension
        );
    }

    // representatives are canonical coset representatives in wedge
    // coordinates, so repeated runs print identical cycles
    let l = catalog::build("heisenberg1", field).unwrap().algebra;
    let basis = MultilinearBasis::wedge2(l.dim());
    println!("\nH₂(heisenberg) cycle representatives:");
    for rep in &h2(&l).representatives {
        println!(
            "  {}",
            lieh2::algebra::format_in_labels(rep, |flat| basis.label(flat, l.labels()))
        );
    }

    // over F₅ the same structure constants give the same dimensions:
    // these tables are integral, and 5 divides none of the pivots
    let f5 = FieldSpec::prime(5).unwrap();
    let l5 = catalog::build("heisenberg1", f5).unwrap().algebra;
    println!("\nheisenberg over F₅: dim H₂ = {}", h2(&l5).dimension);
}
