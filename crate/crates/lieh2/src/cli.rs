//! Command-line front end. Exit codes: 0 success or verification pass,
//! 1 verification mismatch, 2 bad input (parse failures, axiom
//! violations, violated hypotheses such as characteristic 2).

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{format_in_labels, AlgebraKind, BasedAlgebra};
use crate::catalog;
use crate::cyclic::{hc1_with, t_span, Hc1Definition};
use crate::field::FieldSpec;
use crate::format::{
    grid_json, grid_table, homology_json, homology_table, parse_algebra_text, report_json,
    report_table,
};
use crate::grid::default_suite;
use crate::homology::{b_coinvariants, h2, h2_ess, HomologyResult};
use crate::multilinear::MultilinearBasis;
use crate::sequences::verify_exact_sequences;
use crate::verify::{
    verify_b_current, verify_current_h2, verify_matrix_remarks, verify_tensor_h2,
    VerificationReport,
};
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(Parser)]
#[command(
    name = "lieh2",
    version,
    about = "Exact second homology of Lie algebras and first cyclic homology of associative algebras",
    disable_help_subcommand = true
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// dim H₂(L) with canonical cycle representatives
    #[command(name = "h2")]
    H2 {
        /// `catalog:<name>` or a path to an algebra file
        #[arg(long)]
        lie: String,
        /// `q` or `f<p>`; overrides the field named in a file
        #[arg(long)]
        field: Option<String>,
    },
    /// dim H₂ᵉˢˢ(L), the part killed in Λ²(L/[L,L])
    #[command(name = "h2ess")]
    H2Ess {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// dim B(L) = S²L/[L,S²L]
    #[command(name = "bl")]
    Bl {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// dim HC₁(A)
    #[command(name = "hc1")]
    Hc1 {
        #[arg(long)]
        assoc: String,
        #[arg(long)]
        field: Option<String>,
        /// use the full wedge square instead of the kernel of the bracket
        /// map as the numerator (matters only for noncommutative input)
        #[arg(long)]
        full_wedge: bool,
    },
    /// dim T(A), the cyclic relation span inside Λ²A
    #[command(name = "tspan")]
    TSpan {
        #[arg(long)]
        assoc: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// check dim H₂(L⊗A) against the four-component decomposition
    #[command(name = "verify-current")]
    VerifyCurrent {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        assoc: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// check dim B(L⊗A) against its two-component decomposition
    #[command(name = "verify-bcurrent")]
    VerifyBCurrent {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        assoc: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// check dim H₂((A⊗B)⁽⁻⁾) against the eight F-components
    #[command(name = "verify-tensor")]
    VerifyTensor {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// check the gl_n and sl_n identities for matrix coefficients
    #[command(name = "verify-matrix")]
    VerifyMatrix {
        #[arg(long)]
        assoc: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        field: Option<String>,
    },
    /// exactness checks for the five-term and coinvariant sequences
    #[command(name = "verify-exact")]
    VerifyExact {
        #[arg(long)]
        lie: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// run the pinned verification grid
    #[command(name = "grid")]
    Grid {
        #[arg(long, default_value = "default")]
        suite: String,
        /// append the opt-in instances beyond the pinned size bound
        #[arg(long)]
        large: bool,
    },
}

fn parse_field(text: &Option<String>) -> Result<Option<FieldSpec>, Error> {
    text.as_deref().map(FieldSpec::parse).transpose()
}

/// Resolves `catalog:<name>` or a file path; catalog names default to ℚ
/// when no field is given.
fn load_algebra(
    source: &str,
    field_override: Option<FieldSpec>,
) -> Result<(BasedAlgebra, Vec<String>), Error> {
    if let Some(name) = source.strip_prefix("catalog:") {
        let field = field_override.unwrap_or(FieldSpec::RATIONALS);
        let entry = catalog::build(name, field)?;
        return Ok((entry.algebra, entry.notes));
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Error::Parse(format!("cannot read {source}: {e}")))?;
    Ok((parse_algebra_text(&text, field_override)?, Vec::new()))
}

fn require_kind(alg: &BasedAlgebra, kind: AlgebraKind, what: &str) -> Result<(), Error> {
    if alg.kind() != kind {
        let expected = match kind {
            AlgebraKind::Lie => "a Lie algebra",
            AlgebraKind::Associative => "an associative algebra",
        };
        return Err(Error::Unsupported(format!("{what} needs {expected}")));
    }
    Ok(())
}

fn power_representatives(
    r: &HomologyResult,
    basis: &MultilinearBasis,
    labels: &[String],
) -> Vec<String> {
    r.representatives
        .iter()
        .map(|v| format_in_labels(v, |flat| basis.label(flat, labels)))
        .collect()
}

fn emit_homology(
    out: &mut dyn Write,
    format: OutputFormat,
    r: &HomologyResult,
    reps: Vec<String>,
) -> i32 {
    match format {
        OutputFormat::Json => {
            let doc = homology_json(r, &reps);
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        OutputFormat::Table => {
            let _ = write!(out, "{}", homology_table(r, &reps));
        }
    }
    0
}

fn emit_report(out: &mut dyn Write, format: OutputFormat, r: &VerificationReport) -> i32 {
    match format {
        OutputFormat::Json => {
            let doc = report_json(r);
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        OutputFormat::Table => {
            let _ = write!(out, "{}", report_table(r));
        }
    }
    if r.pass {
        0
    } else {
        1
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let format = cli.format;
    let with_notes = |r: Result<(BasedAlgebra, Vec<String>), Error>,
                      err: &mut dyn Write|
     -> Result<BasedAlgebra, Error> {
        let (alg, notes) = r?;
        for note in notes {
            let _ = writeln!(err, "note: {note}");
        }
        Ok(alg)
    };
    match cli.command {
        Command::H2 { lie, field } => {
            let alg = with_notes(load_algebra(&lie, parse_field(&field)?), err)?;
            require_kind(&alg, AlgebraKind::Lie, "h2")?;
            let r = h2(&alg);
            let basis = MultilinearBasis::wedge2(alg.dim());
            let reps = power_representatives(&r, &basis, alg.labels());
            Ok(emit_homology(out, format, &r, reps))
        }
        Command::H2Ess { lie, field } => {
            let alg = with_notes(load_algebra(&lie, parse_field(&field)?), err)?;
            require_kind(&alg, AlgebraKind::Lie, "h2ess")?;
            let r = h2_ess(&alg);
            let basis = MultilinearBasis::wedge2(alg.dim());
            let reps = power_representatives(&r, &basis, alg.labels());
            Ok(emit_homology(out, format, &r, reps))
        }
        Command::Bl { lie, field } => {
            let alg = with_notes(load_algebra(&lie, parse_field(&field)?), err)?;
            require_kind(&alg, AlgebraKind::Lie, "bl")?;
            let r = b_coinvariants(&alg);
            let basis = MultilinearBasis::sym2(alg.dim());
            let reps = power_representatives(&r, &basis, alg.labels());
            Ok(emit_homology(out, format, &r, reps))
        }
        Command::Hc1 {
            assoc,
            field,
            full_wedge,
        } => {
            let alg = with_notes(load_algebra(&assoc, parse_field(&field)?), err)?;
            let definition = if full_wedge {
                Hc1Definition::FullWedge
            } else {
                Hc1Definition::KernelOfBracket
            };
            let r = hc1_with(&alg, definition)?;
            let basis = MultilinearBasis::wedge2(alg.dim());
            let reps = power_representatives(&r, &basis, alg.labels());
            Ok(emit_homology(out, format, &r, reps))
        }
        Command::TSpan { assoc, field } => {
            let alg = with_notes(load_algebra(&assoc, parse_field(&field)?), err)?;
            let t = t_span(&alg)?;
            let basis = MultilinearBasis::wedge2(alg.dim());
            let gens: Vec<String> = t
                .basis()
                .iter()
                .map(|v| format_in_labels(v, |flat| basis.label(flat, alg.labels())))
                .collect();
            match format {
                OutputFormat::Json => {
                    let doc = serde_json::json!({
                        "dimension": t.dim(),
                        "ambient_dim": t.ambient_dim(),
                        "generators": gens,
                    });
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
                }
                OutputFormat::Table => {
                    let _ = writeln!(out, "dimension {}", t.dim());
                    for g in gens {
                        let _ = writeln!(out, "  {g}");
                    }
                }
            }
            Ok(0)
        }
        Command::VerifyCurrent { lie, assoc, field } => {
            let field = parse_field(&field)?;
            let l = with_notes(load_algebra(&lie, field), err)?;
            let a = with_notes(load_algebra(&assoc, field), err)?;
            let r = verify_current_h2(&l, &a)?;
            Ok(emit_report(out, format, &r))
        }
        Command::VerifyBCurrent { lie, assoc, field } => {
            let field = parse_field(&field)?;
            let l = with_notes(load_algebra(&lie, field), err)?;
            let a = with_notes(load_algebra(&assoc, field), err)?;
            let r = verify_b_current(&l, &a)?;
            Ok(emit_report(out, format, &r))
        }
        Command::VerifyTensor { a, b, field } => {
            let field = parse_field(&field)?;
            let left = with_notes(load_algebra(&a, field), err)?;
            let right = with_notes(load_algebra(&b, field), err)?;
            let r = verify_tensor_h2(&left, &right)?;
            Ok(emit_report(out, format, &r))
        }
        Command::VerifyMatrix { assoc, n, field } => {
            let a = with_notes(load_algebra(&assoc, parse_field(&field)?), err)?;
            let r = verify_matrix_remarks(&a, n)?;
            Ok(emit_report(out, format, &r))
        }
        Command::VerifyExact { lie, field } => {
            let l = with_notes(load_algebra(&lie, parse_field(&field)?), err)?;
            require_kind(&l, AlgebraKind::Lie, "verify-exact")?;
            let r = verify_exact_sequences(&l, None)?;
            Ok(emit_report(out, format, &r))
        }
        Command::Grid { suite, large } => {
            if suite != "default" {
                return Err(Error::Parse(format!(
                    "unknown suite `{suite}`; only `default` is defined"
                )));
            }
            let g = default_suite(large)?;
            match format {
                OutputFormat::Json => {
                    let doc = grid_json(&g);
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
                }
                OutputFormat::Table => {
                    let _ = write!(out, "{}", grid_table(&g));
                }
            }
            Ok(if g.pass() { 0 } else { 1 })
        }
    }
}

/// Runs the CLI against explicit streams; returns the process exit code.
pub fn run_to<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_to(argv, &mut out, &mut err)
}
