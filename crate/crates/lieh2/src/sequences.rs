//! Exactness checks for the short sequences tying H₂ to the abelianization
//! and the coinvariant space B. Every check is a subspace equality or
//! containment computed on both sides, with the alternating dimension sum
//! as a final consistency line; the reports carry checks, not components.

use std::time::Instant;

use crate::algebra::BasedAlgebra;
use crate::homology::{b_coinvariants, b_relative, chain_data, h2_ess_from, h2_from};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::multilinear::{induced_bracket, sym2_action_span, MultilinearBasis};
use crate::subspace::{QuotientSpace, Subspace};
use crate::verify::{require_char_not_two, seal, Check, VerificationReport};
use crate::Error;

fn require_lie(l: &BasedAlgebra, what: &str) -> Result<(), Error> {
    if !l.is_lie() {
        return Err(Error::Unsupported(format!("{what} needs a Lie algebra")));
    }
    Ok(())
}

fn image_of(m: &SparseMatrix, s: &Subspace) -> Subspace {
    Subspace::from_rows(
        s.field(),
        m.rows(),
        s.basis().iter().map(|v| m.apply(v)).collect(),
    )
}

fn sym_span(
    field: crate::field::FieldSpec,
    s2: &MultilinearBasis,
    i: &Subspace,
    j: &Subspace,
) -> Subspace {
    let mut rows = Vec::with_capacity(i.dim() * j.dim());
    for u in i.basis() {
        for v in j.basis() {
            rows.push(s2.sym_vec(u, v));
        }
    }
    Subspace::from_rows(field, s2.dim(), rows)
}

fn equal_spaces(a: &Subspace, b: &Subspace) -> bool {
    a.contains_subspace(b) && b.contains_subspace(a)
}

/// 0 → H₂ᵉˢˢ(L) → H₂(L) →ψ Λ²(L/[L,L]) →π [L,L]/[[L,L],L] → 0.
pub fn five_term_report(l: &BasedAlgebra) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    require_char_not_two(l.field(), "the five-term sequence")?;
    require_lie(l, "the five-term sequence")?;
    let field = l.field();
    let chain = chain_data(l);
    let h2 = h2_from(l, &chain);
    let ess = h2_ess_from(l, &chain);
    let ib = induced_bracket(l);
    let dd = ib.codomain_reps.dim();
    let lambda_ab = MultilinearBasis::wedge2(ib.abelianization.dim()).dim();

    let w2 = MultilinearBasis::wedge2(l.dim());
    let psi = w2.power_of_map(&ib.abelianization.projection_matrix());

    let mut checks = Vec::new();

    let killed = Subspace::kernel_of(&psi);
    checks.push(Check::new(
        "boundaries vanish in Λ²(L/[L,L])",
        killed.contains_subspace(&chain.boundaries),
        format!("dim Im(d₃) = {}", chain.boundaries.dim()),
    ));

    // the square that makes π well defined on cosets
    let via_pi = ib.matrix.compose(&psi);
    let reduced_cols: Vec<SparseVec> = chain
        .d2
        .columns()
        .into_iter()
        .map(|c| {
            let r = ib.second_derived.reduce(&c);
            let coords = ib
                .codomain_reps
                .express(&r)
                .expect("d₂ image lies in [L,L]");
            SparseVec::from_pairs(
                dd,
                coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .collect(),
            )
        })
        .collect();
    let via_d2 = SparseMatrix::from_columns(field, dd, reduced_cols);
    checks.push(Check::new(
        "π ∘ Λ²(projection) = d₂ mod [[L,L],L]",
        via_pi == via_d2,
        format!("compared on {} wedge coordinates", w2.dim()),
    ));

    checks.push(Check::new(
        "π onto [L,L]/[[L,L],L]",
        ib.matrix.rank() == dd,
        format!("rank {} of {}", ib.matrix.rank(), dd),
    ));

    let psi_cycles = image_of(&psi, &chain.cycles);
    let ker_pi = Subspace::kernel_of(&ib.matrix);
    checks.push(Check::new(
        "ψ(Ker d₂) = Ker π",
        equal_spaces(&psi_cycles, &ker_pi),
        format!(
            "ψ image dim {}, Ker π dim {}",
            psi_cycles.dim(),
            ker_pi.dim()
        ),
    ));

    checks.push(Check::new(
        "dim H₂ᵉˢˢ = dim H₂ − dim Ker π",
        ess.dimension == h2.dimension - ker_pi.dim(),
        format!("{} = {} − {}", ess.dimension, h2.dimension, ker_pi.dim()),
    ));

    let alt = ess.dimension as i64 - h2.dimension as i64 + lambda_ab as i64 - dd as i64;
    checks.push(Check::new(
        "alternating dimension sum vanishes",
        alt == 0,
        format!(
            "{} − {} + {} − {} = {alt}",
            ess.dimension, h2.dimension, lambda_ab, dd
        ),
    ));

    Ok(seal(VerificationReport {
        theorem: "five-term".into(),
        field,
        lhs_label: "0 → H₂ᵉˢˢ(L) → H₂(L) → Λ²(L/[L,L]) → [L,L]/[[L,L],L] → 0".into(),
        lhs_dim: h2.dimension,
        components: vec![],
        checks,
        notes: vec![format!(
            "terms: {} → {} → {} → {}",
            ess.dimension, h2.dimension, lambda_ab, dd
        )],
        sub_reports: vec![],
        elapsed: start.elapsed(),
        pass: false,
    }))
}

/// 0 → B(L,[L,L]) → B(L) →σ S²(L/[L,L]) → 0 with σ induced by the
/// abelianization projection.
pub fn coinvariant_sequence_report(l: &BasedAlgebra) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    require_char_not_two(l.field(), "the coinvariant sequence")?;
    require_lie(l, "the coinvariant sequence")?;
    let field = l.field();
    let s2 = MultilinearBasis::sym2(l.dim());
    let w = sym2_action_span(l);
    let derived = l.derived_subspace();
    let ab = QuotientSpace::new(derived.clone());
    let sigma = s2.power_of_map(&ab.projection_matrix());
    let full = Subspace::full(field, l.dim());

    let b = b_coinvariants(l);
    let b_rel = b_relative(l, &full, &derived)?;
    let s2_ab = MultilinearBasis::sym2(ab.dim()).dim();

    let mut checks = Vec::new();

    let ker_sigma = Subspace::kernel_of(&sigma);
    checks.push(Check::new(
        "action span vanishes in S²(L/[L,L])",
        ker_sigma.contains_subspace(&w),
        format!("dim [L,S²L] = {}", w.dim()),
    ));

    checks.push(Check::new(
        "σ onto S²(L/[L,L])",
        sigma.rank() == s2_ab,
        format!("rank {} of {}", sigma.rank(), s2_ab),
    ));

    let num = sym_span(field, &s2, &full, &derived).sum(&w)?;
    checks.push(Check::new(
        "Ker σ = L∨[L,L] + [L,S²L]",
        equal_spaces(&ker_sigma, &num),
        format!("Ker σ dim {}, span dim {}", ker_sigma.dim(), num.dim()),
    ));

    let alt = b_rel.dimension as i64 - b.dimension as i64 + s2_ab as i64;
    checks.push(Check::new(
        "alternating dimension sum vanishes",
        alt == 0,
        format!("{} − {} + {} = {alt}", b_rel.dimension, b.dimension, s2_ab),
    ));

    Ok(seal(VerificationReport {
        theorem: "coinvariant-sequence".into(),
        field,
        lhs_label: "0 → B(L,[L,L]) → B(L) → S²(L/[L,L]) → 0".into(),
        lhs_dim: b.dimension,
        components: vec![],
        checks,
        notes: vec![format!(
            "terms: {} → {} → {}",
            b_rel.dimension, b.dimension, s2_ab
        )],
        sub_reports: vec![],
        elapsed: start.elapsed(),
        pass: false,
    }))
}

/// 0 → B(L,I∩J) + B(I,J) → B(L,J) → B(L/I, (I+J)/I) → 0 for ideals I, J.
pub fn ideal_sequence_report(
    l: &BasedAlgebra,
    i: &Subspace,
    j: &Subspace,
) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    require_char_not_two(l.field(), "the ideal coinvariant sequence")?;
    require_lie(l, "the ideal coinvariant sequence")?;
    for (which, s) in [("first", i), ("second", j)] {
        if s.ambient_dim() != l.dim() || s.field() != l.field() {
            return Err(Error::Dimension(
                "the ideal sequence needs subspaces of L".into(),
            ));
        }
        if !l.is_ideal(s)? {
            return Err(Error::Algebra(format!(
                "the ideal sequence needs ideals; the {which} subspace is not \
                 stable under the bracket"
            )));
        }
    }
    let field = l.field();
    let s2 = MultilinearBasis::sym2(l.dim());
    let w = sym2_action_span(l);
    let full = Subspace::full(field, l.dim());

    let meet = i.intersect(j)?;
    let x_num = sym_span(field, &s2, &full, &meet)
        .sum(&sym_span(field, &s2, i, j))?
        .sum(&w)?;
    let mid_num = sym_span(field, &s2, &full, j).sum(&w)?;

    let lbar = l.quotient_algebra(i)?;
    let p = QuotientSpace::new(i.clone()).projection_matrix();
    let s2p = s2.power_of_map(&p);
    let wbar = sym2_action_span(&lbar);
    let jbar = image_of(&p, j);
    let s2bar = MultilinearBasis::sym2(lbar.dim());
    let fullbar = Subspace::full(field, lbar.dim());
    let rbar_num = sym_span(field, &s2bar, &fullbar, &jbar).sum(&wbar)?;

    let mut checks = Vec::new();

    checks.push(Check::new(
        "left term lands in the middle term",
        mid_num.contains_subspace(&x_num),
        format!("numerators {} ⊆ {}", x_num.dim(), mid_num.dim()),
    ));

    let image_mid = image_of(&s2p, &mid_num).sum(&wbar)?;
    checks.push(Check::new(
        "middle term maps onto the right term",
        equal_spaces(&image_mid, &rbar_num),
        format!(
            "image dim {}, target dim {}",
            image_mid.dim(),
            rbar_num.dim()
        ),
    ));

    let to_rbar = QuotientSpace::new(wbar.clone())
        .projection_matrix()
        .compose(&s2p);
    let pulled = Subspace::kernel_of(&to_rbar).intersect(&mid_num)?;
    checks.push(Check::new(
        "kernel at the middle equals the left term",
        equal_spaces(&pulled, &x_num),
        format!("kernel dim {}, left dim {}", pulled.dim(), x_num.dim()),
    ));

    let left = x_num.dim() - w.dim();
    let mid = mid_num.dim() - w.dim();
    let right = rbar_num.dim() - wbar.dim();
    let alt = left as i64 - mid as i64 + right as i64;
    checks.push(Check::new(
        "alternating dimension sum vanishes",
        alt == 0,
        format!("{left} − {mid} + {right} = {alt}"),
    ));

    Ok(seal(VerificationReport {
        theorem: "ideal-coinvariant".into(),
        field,
        lhs_label: "0 → B(L,I∩J) + B(I,J) → B(L,J) → B(L/I,(I+J)/I) → 0".into(),
        lhs_dim: mid,
        components: vec![],
        checks,
        notes: vec![format!("terms: {left} → {mid} → {right}")],
        sub_reports: vec![],
        elapsed: start.elapsed(),
        pass: false,
    }))
}

/// Runs the five-term and coinvariant sequences; an ideal pair adds the
/// relative sequence for that pair.
pub fn verify_exact_sequences(
    l: &BasedAlgebra,
    ideals: Option<(&Subspace, &Subspace)>,
) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    require_char_not_two(l.field(), "the exact-sequence checks")?;
    require_lie(l, "the exact-sequence checks")?;
    let mut sub_reports = vec![five_term_report(l)?, coinvariant_sequence_report(l)?];
    if let Some((i, j)) = ideals {
        sub_reports.push(ideal_sequence_report(l, i, j)?);
    }
    let lhs = sub_reports[0].lhs_dim;
    Ok(seal(VerificationReport {
        theorem: "exact-sequences".into(),
        field: l.field(),
        lhs_label: "dim H₂(L)".into(),
        lhs_dim: lhs,
        components: vec![],
        checks: vec![],
        notes: vec![],
        sub_reports,
        elapsed: start.elapsed(),
        pass: false,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    fn cat(name: &str) -> BasedAlgebra {
        catalog::build(name, q()).unwrap().algebra
    }

    fn span_of(l: &BasedAlgebra, indices: &[usize]) -> Subspace {
        Subspace::from_rows(
            l.field(),
            l.dim(),
            indices
                .iter()
                .map(|&i| crate::linalg::SparseVec::unit(l.dim(), i, &l.field()))
                .collect(),
        )
    }

    #[test]
    fn five_term_heisenberg() {
        let r = five_term_report(&cat("heisenberg1")).unwrap();
        assert!(r.pass, "{:?}", r.checks);
        assert_eq!(r.notes[0], "terms: 2 → 2 → 1 → 1");
    }

    #[test]
    fn five_term_trivial_on_perfect_algebra() {
        let r = five_term_report(&cat("sl2")).unwrap();
        assert!(r.pass);
        assert_eq!(r.notes[0], "terms: 0 → 0 → 0 → 0");
    }

    #[test]
    fn five_term_abelian_has_no_bracket_terms() {
        let r = five_term_report(&cat("abelian3")).unwrap();
        assert!(r.pass);
        assert_eq!(r.notes[0], "terms: 0 → 3 → 3 → 0");
    }

    #[test]
    fn coinvariant_sequence_heisenberg_and_sl2() {
        let r = coinvariant_sequence_report(&cat("heisenberg1")).unwrap();
        assert!(r.pass, "{:?}", r.checks);
        assert_eq!(r.notes[0], "terms: 0 → 3 → 3");

        let r = coinvariant_sequence_report(&cat("sl2")).unwrap();
        assert!(r.pass);
        assert_eq!(r.notes[0], "terms: 1 → 1 → 0");
    }

    #[test]
    fn ideal_sequence_center_of_heisenberg() {
        let l = cat("heisenberg1");
        let center = span_of(&l, &[2]);
        let full = Subspace::full(l.field(), l.dim());
        let r = ideal_sequence_report(&l, &center, &full).unwrap();
        assert!(r.pass, "{:?}", r.checks);
        assert_eq!(r.notes[0], "terms: 0 → 3 → 3");
    }

    #[test]
    fn ideal_sequence_zero_ideal_collapses() {
        let l = cat("heisenberg1");
        let zero = Subspace::zero(l.field(), l.dim());
        let full = Subspace::full(l.field(), l.dim());
        let r = ideal_sequence_report(&l, &zero, &full).unwrap();
        assert!(r.pass, "{:?}", r.checks);
        assert_eq!(r.notes[0], "terms: 0 → 3 → 3");
    }

    #[test]
    fn ideal_sequence_full_ideal_kills_the_right_term() {
        let l = cat("heisenberg1");
        let full = Subspace::full(l.field(), l.dim());
        let r = ideal_sequence_report(&l, &full, &full).unwrap();
        assert!(r.pass, "{:?}", r.checks);
        assert_eq!(r.notes[0], "terms: 3 → 3 → 0");
    }

    #[test]
    fn ideal_sequence_rejects_non_ideals() {
        let l = cat("heisenberg1");
        // span{e} is not an ideal: [f,e] = −z escapes it
        let not_ideal = span_of(&l, &[0]);
        let full = Subspace::full(l.field(), l.dim());
        let err = ideal_sequence_report(&l, &not_ideal, &full).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("not"), "{msg}");
        assert!(msg.contains("ideal"), "{msg}");
    }

    #[test]
    fn combined_report_shapes() {
        let l = cat("heisenberg2");
        let r = verify_exact_sequences(&l, None).unwrap();
        assert!(r.pass);
        assert_eq!(r.sub_reports.len(), 2);

        let derived = l.derived_subspace();
        let full = Subspace::full(l.field(), l.dim());
        let r = verify_exact_sequences(&l, Some((&derived, &full))).unwrap();
        assert!(r.pass);
        assert_eq!(r.sub_reports.len(), 3);
    }

    #[test]
    fn sequences_hold_for_a_current_algebra() {
        let f = q();
        let l = cat("heisenberg1");
        let a = catalog::build("dual_numbers", f).unwrap().algebra;
        let cur = BasedAlgebra::current_tensor(&l, &a).unwrap();
        let r = verify_exact_sequences(&cur, None).unwrap();
        assert!(
            r.pass,
            "{:?}",
            r.sub_reports.iter().map(|s| &s.checks).collect::<Vec<_>>()
        );
    }

    #[test]
    fn characteristic_two_is_rejected() {
        let f2 = FieldSpec::prime(2).unwrap();
        let l = catalog::build("heisenberg1", f2).unwrap().algebra;
        let err = verify_exact_sequences(&l, None).unwrap_err();
        assert!(err.to_string().contains("characteristic ≠ 2"));
    }
}
