//! Algebra files and report documents. Structure constants are serialized
//! exactly (integers or "num/den" strings, never floats) and the field is
//! part of the document, so a result is reproducible from the file alone.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{AlgebraKind, BasedAlgebra};
use crate::field::{FieldSpec, Scalar};
use crate::grid::{GridCell, GridReport};
use crate::homology::HomologyResult;
use crate::linalg::SparseVec;
use crate::verify::VerificationReport;
use crate::Error;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn encode(c: &Scalar) -> Coeff {
        match c.as_integer() {
            Some(n) => Coeff::Int(n),
            None => Coeff::Text(c.to_string()),
        }
    }

    fn decode(&self, field: FieldSpec, context: &str) -> Result<Scalar, Error> {
        match self {
            Coeff::Int(n) => Ok(field.integer(*n)),
            Coeff::Text(t) => field
                .parse_scalar(t)
                .map_err(|e| Error::Parse(format!("{context}: {e}"))),
        }
    }
}

type Cell = Vec<(usize, Coeff)>;

#[derive(Serialize, Deserialize)]
struct AlgebraDoc {
    kind: String,
    field: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Cell>,
    table: Vec<(usize, usize, Cell)>,
}

fn decode_cell(
    cell: &Cell,
    dim: usize,
    field: FieldSpec,
    context: &str,
) -> Result<SparseVec, Error> {
    let mut pairs = Vec::with_capacity(cell.len());
    for (k, c) in cell {
        if *k >= dim {
            return Err(Error::Parse(format!(
                "{context}: target index {k} out of range for dim {dim}"
            )));
        }
        pairs.push((*k, c.decode(field, context)?));
    }
    Ok(SparseVec::from_pairs(dim, pairs))
}

/// Parses the JSON algebra document; `field_override` replaces the field
/// named in the file. The result is fully validated.
pub fn parse_algebra_text(
    text: &str,
    field_override: Option<FieldSpec>,
) -> Result<BasedAlgebra, Error> {
    let doc: AlgebraDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra file: {e}")))?;
    let field = match field_override {
        Some(f) => f,
        None => FieldSpec::parse(&doc.field)?,
    };
    let kind = match doc.kind.as_str() {
        "lie" => AlgebraKind::Lie,
        "assoc" => AlgebraKind::Associative,
        other => {
            return Err(Error::Parse(format!(
                "kind: expected \"lie\" or \"assoc\", got \"{other}\""
            )))
        }
    };
    let labels = match doc.labels {
        Some(l) => {
            if l.len() != doc.dim {
                return Err(Error::Parse(format!(
                    "labels: {} names for dim {}",
                    l.len(),
                    doc.dim
                )));
            }
            l
        }
        None => (0..doc.dim).map(|i| format!("e{i}")).collect(),
    };

    let mut rows = Vec::with_capacity(doc.table.len());
    for (ri, (i, j, cell)) in doc.table.iter().enumerate() {
        let context = format!("table row {ri} ({i}, {j})");
        if *i >= doc.dim || *j >= doc.dim {
            return Err(Error::Parse(format!(
                "{context}: index out of range for dim {}",
                doc.dim
            )));
        }
        if kind == AlgebraKind::Lie && i >= j {
            return Err(Error::Parse(format!(
                "{context}: lie tables list only i < j rows; the rest follows by antisymmetry"
            )));
        }
        rows.push((*i, *j, decode_cell(cell, doc.dim, field, &context)?));
    }

    let alg = match kind {
        AlgebraKind::Lie => {
            if doc.unit.is_some() {
                return Err(Error::Parse("unit: lie algebras have no unit".into()));
            }
            BasedAlgebra::lie(field, labels, rows)?
        }
        AlgebraKind::Associative => {
            let unit = doc
                .unit
                .as_ref()
                .map(|c| decode_cell(c, doc.dim, field, "unit"))
                .transpose()?;
            // A unit that is a plain basis vector determines its own rows;
            // fill the ones the document leaves out so short files like
            // the dual numbers stay valid.
            if let Some(u) = &unit {
                let support: Vec<_> = u.iter().collect();
                if let [(ui, c)] = support[..] {
                    if c.is_one() {
                        let ui = *ui;
                        for j in 0..doc.dim {
                            for (i2, j2) in [(ui, j), (j, ui)] {
                                if !rows.iter().any(|(a, b, _)| (*a, *b) == (i2, j2)) {
                                    let other = if i2 == ui { j2 } else { i2 };
                                    rows.push((i2, j2, SparseVec::unit(doc.dim, other, &field)));
                                }
                            }
                        }
                    }
                }
            }
            BasedAlgebra::associative(field, labels, rows, unit)?
        }
    };
    let report = alg.validate();
    if !report.is_empty() {
        return Err(Error::Algebra(format!(
            "axiom violation:\n{}",
            report.render(&alg)
        )));
    }
    Ok(alg)
}

/// Serializes an algebra so that parsing the output reproduces it exactly.
pub fn render_algebra(alg: &BasedAlgebra) -> String {
    let encode_vec =
        |v: &SparseVec| -> Cell { v.iter().map(|(k, c)| (*k, Coeff::encode(c))).collect() };
    let mut table = Vec::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            if alg.is_lie() && i >= j {
                continue;
            }
            let v = alg.basis_product(i, j);
            if !v.is_zero() {
                table.push((i, j, encode_vec(v)));
            }
        }
    }
    let doc = AlgebraDoc {
        kind: if alg.is_lie() { "lie" } else { "assoc" }.into(),
        field: alg.field().to_string(),
        dim: alg.dim(),
        labels: Some(alg.labels().to_vec()),
        unit: alg.unit().map(encode_vec),
        table,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

fn count_checks(r: &VerificationReport) -> (usize, usize) {
    let mut passed = r.checks.iter().filter(|c| c.pass).count();
    let mut total = r.checks.len();
    for s in &r.sub_reports {
        let (p, t) = count_checks(s);
        passed += p;
        total += t;
    }
    (passed, total)
}

pub fn report_json(r: &VerificationReport) -> Value {
    json!({
        "theorem": r.theorem,
        "field": r.field.to_string(),
        "lhs": {"label": r.lhs_label, "dim": r.lhs_dim},
        "components": r.components.iter()
            .map(|c| json!({"label": c.label, "dim": c.dim}))
            .collect::<Vec<_>>(),
        "checks": r.checks.iter()
            .map(|c| json!({"label": c.label, "pass": c.pass, "detail": c.detail}))
            .collect::<Vec<_>>(),
        "notes": r.notes,
        "sub_reports": r.sub_reports.iter().map(report_json).collect::<Vec<_>>(),
        "elapsed_ms": r.elapsed.as_secs_f64() * 1000.0,
        "pass": r.pass,
    })
}

fn push_report(out: &mut String, r: &VerificationReport, indent: usize) {
    let pad = "  ".repeat(indent);
    let status = if r.pass { "PASS" } else { "FAIL" };
    out.push_str(&format!(
        "{pad}{status} {} @ {}: {} = {}\n",
        r.theorem, r.field, r.lhs_label, r.lhs_dim
    ));
    if !r.components.is_empty() {
        out.push_str(&format!("{pad}  components (sum {}):\n", r.rhs_total()));
        for c in &r.components {
            out.push_str(&format!("{pad}    {} = {}\n", c.label, c.dim));
        }
    }
    for c in &r.checks {
        let mark = if c.pass { "ok " } else { "FAIL" };
        out.push_str(&format!("{pad}  [{mark}] {}: {}\n", c.label, c.detail));
    }
    for n in &r.notes {
        out.push_str(&format!("{pad}  note: {n}\n"));
    }
    for s in &r.sub_reports {
        push_report(out, s, indent + 1);
    }
}

pub fn report_table(r: &VerificationReport) -> String {
    let mut out = String::new();
    push_report(&mut out, r, 0);
    out
}

/// The one-line summary used for grid rows: decomposition cells show the
/// dimension identity, sequence cells show the check tally.
fn cell_summary(r: &VerificationReport) -> String {
    if r.components.is_empty() {
        let (p, t) = count_checks(r);
        format!("checks {p}/{t}")
    } else {
        let sum = r
            .components
            .iter()
            .map(|c| c.dim.to_string())
            .collect::<Vec<_>>()
            .join(" + ");
        let rel = if r.lhs_dim == r.rhs_total() {
            "="
        } else {
            "≠"
        };
        format!("{} {rel} {sum}", r.lhs_dim)
    }
}

pub fn homology_json(r: &HomologyResult, representatives: &[String]) -> Value {
    json!({
        "dimension": r.dimension,
        "space": r.ambient.space,
        "ambient_dim": r.ambient.ambient_dim,
        "numerator_dim": r.ambient.numerator_dim,
        "denominator_dim": r.ambient.denominator_dim,
        "representatives": representatives,
    })
}

pub fn homology_table(r: &HomologyResult, representatives: &[String]) -> String {
    let mut out = format!(
        "dimension {}\nspace {} (ambient {}, numerator {}, denominator {})\n",
        r.dimension,
        r.ambient.space,
        r.ambient.ambient_dim,
        r.ambient.numerator_dim,
        r.ambient.denominator_dim
    );
    for rep in representatives {
        out.push_str(&format!("  {rep}\n"));
    }
    out
}

pub fn grid_json(g: &GridReport) -> Value {
    json!({
        "cells": g.cells.iter().map(|c| json!({
            "suite": c.suite,
            "key": c.key,
            "report": report_json(&c.report),
        })).collect::<Vec<_>>(),
        "pass": g.pass(),
        "elapsed_ms": g.elapsed.as_secs_f64() * 1000.0,
    })
}

pub fn grid_table(g: &GridReport) -> String {
    let mut out = String::new();
    let mut suites: Vec<&str> = g.cells.iter().map(|c| c.suite).collect();
    suites.dedup();
    for suite in suites {
        let cells: Vec<&GridCell> = g.cells_in(suite).collect();
        let failed = cells.iter().filter(|c| !c.report.pass).count();
        let tally = if failed == 0 {
            format!("all {} pass", cells.len())
        } else {
            format!("{failed} of {} FAIL", cells.len())
        };
        out.push_str(&format!("== {suite} ({tally})\n"));
        let width = cells
            .iter()
            .map(|c| c.key.chars().count())
            .max()
            .unwrap_or(0);
        for c in cells {
            let status = if c.report.pass { "PASS" } else { "FAIL" };
            let pad = width - c.key.chars().count();
            out.push_str(&format!(
                "{status} {}{} {}\n",
                c.key,
                " ".repeat(pad + 2),
                cell_summary(&c.report)
            ));
        }
    }
    let failed = g.cells.iter().filter(|c| !c.report.pass).count();
    if failed == 0 {
        out.push_str(&format!("{} cells, all pass\n", g.cells.len()));
    } else {
        out.push_str(&format!("{} cells, {failed} FAILED\n", g.cells.len()));
    }
    out
}
