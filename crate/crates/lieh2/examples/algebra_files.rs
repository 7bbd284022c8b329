//! The on-disk algebra format: sparse structure constants as JSON, exact
//! coefficients as integers or strings, round-trips, and the validation
//! errors malformed files produce.

use lieh2::catalog;
use lieh2::field::FieldSpec;
use lieh2::format::{parse_algebra_text, render_algebra};
use lieh2::homology::h2;

fn main() {
    // a file needs only the nonzero products; for Lie tables only the
    // i < j half is given and antisymmetry fills the rest
    let heis = catalog::build("heisenberg1", FieldSpec::RATIONALS)
        .unwrap()
        .algebra;
    let text = render_algebra(&heis);
    println!("{text}");

    let back = parse_algebra_text(&text, None).unwrap();
    assert_eq!(h2(&back).dimension, h2(&heis).dimension);
    println!("round-trip: dim H₂ = {}\n", h2(&back).dimension);

    // a declared basis-vector unit fills in its own product rows, so
    // associative files stay as short as the interesting products
    let dual = r#"{
        "kind": "assoc", "field": "q", "dim": 2,
        "labels": ["1", "eps"],
        "unit": [[0, 1]],
        "table": [[1, 1, []]]
    }"#;
    let a = parse_algebra_text(dual, None).unwrap();
    println!(
        "dual numbers from 4 lines: dim {}, commutative: {}, unital: {}\n",
        a.dim(),
        a.is_commutative(),
        a.is_unital()
    );

    // coefficients outside ℤ are written as exact strings, never floats
    let half = r#"{
        "kind": "assoc", "field": "q", "dim": 1,
        "labels": ["u"],
        "table": [[0, 0, [[0, "1/2"]]]]
    }"#;
    let b = parse_algebra_text(half, None).unwrap();
    println!("u·u = ½u parses; rendered back:\n{}", render_algebra(&b));

    // files are validated before anything is computed
    let broken = r#"{
        "kind": "lie", "field": "q", "dim": 2,
        "table": [[0, 0, [[1, 1]]]]
    }"#;
    match parse_algebra_text(broken, None) {
        Err(e) => println!("diagonal bracket row: {e}"),
        Ok(_) => unreachable!(),
    }

    let not_jacobi = r#"{
        "kind": "assoc", "field": "q", "dim": 2,
        "labels": ["x", "y"],
        "table": [[0, 0, [[1, 1]]], [0, 1, [[1, 1]]]]
    }"#;
    match parse_algebra_text(not_jacobi, None) {
        Err(e) => println!("\nnon-associative table:\n{e}"),
        Ok(_) => unreachable!(),
    }
}
