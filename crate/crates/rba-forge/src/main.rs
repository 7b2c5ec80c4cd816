//! Command-line front end: construct, verify, scan, and export.
//!
//! Exit codes are a stable contract: 0 = constructed/verified, 1 =
//! mathematical failure (axiom or consistency violation), 2 = usage or
//! parse failure. Decimal output is display-only and never feeds back
//! into computation. The trial-division bound for square-free
//! factorization can be overridden with `RBA_FORGE_FACTOR_BOUND`.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rba_forge::constructions::{
    affine_plane_ta, character_table_to_diag, cm_basis, dim5_family, dim5_lambda_table,
    rational_basis_mn, semisimple_rational_rba, semisimple_rational_realization, CharacterTable,
    CmParams, Dim5Params,
};
use rba_forge::error::Error;
use rba_forge::exact::{parse_rational, RadicalNumber};
use rba_forge::json::{
    basis_to_json, parse_input_json, presentation_to_json, BasisDoc, InputDoc, PresentationDoc,
};
use rba_forge::latex::{latex_basis, latex_lambda_table};
use rba_forge::model::{character_data, extract_structure_constants, CharacterData, MatrixBasis};
use rba_forge::rba::{
    degree_candidate, verify_degree_map, verify_rba, DegreeMap, RbaPresentation, VerificationReport,
};
use rba_forge::scan::{scan_cm, scan_dim5, Filter, GridRange, ScanOptions};

#[derive(Parser)]
#[command(
    name = "rba-forge",
    about = "Construct, verify, scan, and export reality-based algebra bases in exact arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and verify it
    Construct {
        #[command(subcommand)]
        which: Construction,
    },
    /// Verify a presentation or matrix basis from a JSON file
    Verify {
        /// Input file (presentation or basis JSON)
        input: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Scan a parameter grid and emit points passing the filters
    Scan {
        #[command(subcommand)]
        family: ScanFamily,
    },
    /// Re-render a presentation or basis file
    Export {
        /// Input file (presentation or basis JSON)
        input: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Fractional digits for decimal output
    #[arg(long, default_value_t = 6)]
    digits: u32,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Decimal,
}

#[derive(Subcommand)]
enum Construction {
    /// Rational basis of the full n×n matrix algebra
    Mn {
        /// Matrix size n ≥ 2
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rational presentation of a direct sum of matrix algebras
    Sum {
        /// Component sizes, e.g. --dims 1,2
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Two-block family on ℂ ⊕ M₂ from three degrees and three signs
    Dim5 {
        /// Degrees δ₁ δ₂ δ₃ (positive rationals)
        #[arg(long, num_args = 3, required = true)]
        d: Vec<String>,
        /// Signs ε₁ ε₂ ε₃ (+ or -)
        #[arg(long, num_args = 3, default_values = ["+", "+", "+"])]
        signs: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Equal-degree basis of ℂ ⊕ M_m with constants in ℚ(√m)
    Cm {
        /// Component size m ≥ 2
        #[arg(long)]
        m: usize,
        /// Common degree δ (positive rational)
        #[arg(long)]
        delta: String,
        /// Sign of x = ±√(n/m)
        #[arg(long, default_value = "-")]
        sign_x: String,
        /// Inner sign of y = (−x ± 1/√m)/m²
        #[arg(long, default_value = "+")]
        sign_y: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Affine-plane table algebra of order n with its character table
    Affine {
        /// Plane order n ≥ 2
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum ScanFamily {
    /// Grid over (δ₁, δ₂, δ₃) × all 8 sign choices, via the closed-form table
    Dim5 {
        /// Three grid ranges, e.g. --d 1..10 1..10 1..10 or 1..2:1/2
        #[arg(long, num_args = 3, required = true)]
        d: Vec<String>,
        /// Filters: rational, nonnegative, integral, max-den=N (repeatable)
        #[arg(long)]
        filter: Vec<String>,
        /// Re-extract matrix constants on every hit and compare
        #[arg(long)]
        cross_check: bool,
        /// Include the serialized basis in each record
        #[arg(long)]
        emit_basis: bool,
        /// Write records to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Grid over (m, δ) with full construction and verification
    Cm {
        /// Integer range for m, e.g. --m 2..4
        #[arg(long)]
        m: String,
        /// Rational range for δ, e.g. --delta 1..5 or 1..2:1/2
        #[arg(long)]
        delta: String,
        #[arg(long)]
        filter: Vec<String>,
        /// Include the serialized basis in each record
        #[arg(long)]
        emit_basis: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct CharacterDoc {
    component: usize,
    dimension: usize,
    values: Vec<RadicalNumber>,
    multiplicity: RadicalNumber,
    idempotent: Vec<RadicalNumber>,
}

fn character_docs(data: &CharacterData) -> Vec<CharacterDoc> {
    data.characters
        .iter()
        .map(|c| CharacterDoc {
            component: c.component,
            dimension: c.dimension,
            values: c.values.clone(),
            multiplicity: c.multiplicity.clone(),
            idempotent: c.idempotent_coords.clone(),
        })
        .collect()
}

#[derive(Serialize)]
struct ConstructDoc {
    construction: String,
    order: Option<String>,
    degree_map: Option<Vec<RadicalNumber>>,
    degree_map_valid: Option<bool>,
    degree_map_positive: Option<bool>,
    basis: Option<BasisDoc>,
    presentation: PresentationDoc,
    character_table: Option<Vec<Vec<RadicalNumber>>>,
    characters: Option<Vec<CharacterDoc>>,
    report: VerificationReport,
}

#[derive(Serialize)]
struct VerifyDoc {
    input: &'static str,
    report: VerificationReport,
    degree_map: Option<Vec<RadicalNumber>>,
    degree_map_valid: Option<bool>,
    degree_map_positive: Option<bool>,
    characters: Option<Vec<CharacterDoc>>,
}

fn parse_sign(text: &str) -> Result<i8, Error> {
    match text {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        other => Err(Error::Parse(format!("expected + or -, got {other:?}"))),
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Error> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Inconsistency(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| {
                    if text.ends_with('\n') {
                        Ok(())
                    } else {
                        stdout.write_all(b"\n")
                    }
                })
                .map_err(|e| Error::Inconsistency(e.to_string()))
        }
    }
}

fn decimal_radical(value: &RadicalNumber, digits: u32) -> String {
    value.to_decimal(digits).unwrap_or_else(|_| "?".into())
}

fn render_decimal_basis(basis: &MatrixBasis, digits: u32) -> String {
    let mut out = String::new();
    for (index, element) in basis.elements().iter().enumerate() {
        out.push_str(&format!("b{index} = ("));
        for (position, block) in element.blocks().iter().enumerate() {
            if position > 0 {
                out.push_str(", ");
            }
            if block.size() == 1 {
                out.push_str(&decimal_radical(block.get(0, 0), digits));
            } else {
                out.push('[');
                for row in 0..block.size() {
                    if row > 0 {
                        out.push_str("; ");
                    }
                    let cells: Vec<String> = (0..block.size())
                        .map(|col| decimal_radical(block.get(row, col), digits))
                        .collect();
                    out.push_str(&cells.join(", "));
                }
                out.push(']');
            }
        }
        out.push_str(")\n");
    }
    out
}

fn render_decimal_presentation(pres: &RbaPresentation, digits: u32) -> String {
    let mut out = String::new();
    for (i, j, k, value) in pres.tensor.nonzero_entries() {
        out.push_str(&format!(
            "lambda[{i}][{j}][{k}] = {}\n",
            decimal_radical(value, digits)
        ));
    }
    out
}

/// Everything a construction run produces; rendering and the exit decision
/// read from here.
struct ConstructionRun {
    name: String,
    basis: Option<MatrixBasis>,
    presentation: RbaPresentation,
    degree: Option<DegreeMap>,
    character_table: Option<CharacterTable>,
    /// Whether a positive degree map is mathematically expected.
    expect_positive: bool,
}

fn run_construction(run: ConstructionRun, output: &OutputArgs) -> Result<bool, Error> {
    let report = verify_rba(&run.presentation)?;
    let degree_checks = run
        .degree
        .as_ref()
        .map(|delta| verify_degree_map(&run.presentation, delta))
        .transpose()?;
    let characters = match (&run.basis, &run.degree, &degree_checks) {
        (Some(basis), Some(delta), Some(check)) if check.positive => {
            Some(character_data(basis, delta)?)
        }
        _ => None,
    };

    let all_passed = report.passed
        && degree_checks.is_none_or(|c| c.valid && (c.positive || !run.expect_positive))
        && (!run.expect_positive || characters.is_some());

    let text = match output.format {
        Format::Json => {
            let doc = ConstructDoc {
                construction: run.name,
                order: run.degree.as_ref().map(|delta| delta.order().to_string()),
                degree_map: run.degree.as_ref().map(|d| d.values().to_vec()),
                degree_map_valid: degree_checks.map(|c| c.valid),
                degree_map_positive: degree_checks.map(|c| c.positive),
                basis: run.basis.as_ref().map(BasisDoc::from),
                presentation: PresentationDoc::from(&run.presentation),
                character_table: run.character_table.as_ref().map(|t| t.rows().to_vec()),
                characters: characters.as_ref().map(character_docs),
                report,
            };
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
        Format::Latex => match &run.basis {
            Some(basis) => latex_basis(basis),
            None => latex_lambda_table(&run.presentation.tensor),
        },
        Format::Decimal => match &run.basis {
            Some(basis) => render_decimal_basis(basis, output.digits),
            None => render_decimal_presentation(&run.presentation, output.digits),
        },
    };
    emit(output, &text)?;
    Ok(all_passed)
}

fn construct(which: Construction) -> Result<bool, Error> {
    match which {
        Construction::Mn { n, output } => {
            let basis = rational_basis_mn(n)?;
            let presentation = extract_structure_constants(&basis)?;
            run_construction(
                ConstructionRun {
                    name: format!("mn({n})"),
                    basis: Some(basis),
                    presentation,
                    degree: None,
                    character_table: None,
                    expect_positive: false,
                },
                &output,
            )
        }
        Construction::Sum { dims, output } => {
            let presentation = semisimple_rational_rba(&dims)?;
            let realization = semisimple_rational_realization(&dims)?;
            if extract_structure_constants(&realization)? != presentation {
                return Err(Error::Inconsistency(
                    "realization extraction disagrees with the glued presentation".into(),
                ));
            }
            let degree = realization.projection_degree_map();
            run_construction(
                ConstructionRun {
                    name: format!("sum{dims:?}"),
                    basis: Some(realization),
                    presentation,
                    degree,
                    character_table: None,
                    expect_positive: false,
                },
                &output,
            )
        }
        Construction::Dim5 { d, signs, output } => {
            let mut sign_values = [0i8; 3];
            for (slot, text) in sign_values.iter_mut().zip(&signs) {
                *slot = parse_sign(text)?;
            }
            let params = Dim5Params::new(
                parse_rational(&d[0])?,
                parse_rational(&d[1])?,
                parse_rational(&d[2])?,
                sign_values,
            )?;
            let basis = dim5_family(&params);
            let presentation = extract_structure_constants(&basis)?;
            if presentation.tensor != dim5_lambda_table(&params) {
                return Err(Error::Inconsistency(
                    "extracted constants disagree with the closed-form table".into(),
                ));
            }
            let degree = basis.projection_degree_map();
            run_construction(
                ConstructionRun {
                    name: format!(
                        "dim5(δ = {}, {}, {}; ε = {:?})",
                        params.delta1, params.delta2, params.delta3, params.signs
                    ),
                    basis: Some(basis),
                    presentation,
                    degree,
                    character_table: None,
                    expect_positive: true,
                },
                &output,
            )
        }
        Construction::Cm {
            m,
            delta,
            sign_x,
            sign_y,
            output,
        } => {
            let params = CmParams::with_signs(
                m,
                parse_rational(&delta)?,
                parse_sign(&sign_x)?,
                parse_sign(&sign_y)?,
            )?;
            let basis = cm_basis(&params)?;
            let presentation = extract_structure_constants(&basis)?;
            let degree = basis.projection_degree_map();
            run_construction(
                ConstructionRun {
                    name: format!("cm(m = {m}, δ = {})", params.delta),
                    basis: Some(basis),
                    presentation,
                    degree,
                    character_table: None,
                    expect_positive: true,
                },
                &output,
            )
        }
        Construction::Affine { n, output } => {
            let (presentation, table) = affine_plane_ta(n)?;
            let basis = character_table_to_diag(&table)?;
            if extract_structure_constants(&basis)? != presentation {
                return Err(Error::Inconsistency(
                    "diagonal realization disagrees with the affine presentation".into(),
                ));
            }
            let degree = degree_candidate(&presentation);
            run_construction(
                ConstructionRun {
                    name: format!("affine({n})"),
                    basis: Some(basis),
                    presentation,
                    degree,
                    character_table: Some(table),
                    expect_positive: true,
                },
                &output,
            )
        }
    }
}

fn verify(input: &PathBuf, output: &OutputArgs) -> Result<bool, Error> {
    let bytes = std::fs::read(input)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", input.display())))?;
    let (kind, presentation, basis) = match parse_input_json(&bytes)? {
        InputDoc::Presentation(pres) => ("presentation", pres, None),
        InputDoc::Basis(basis) => {
            let pres = extract_structure_constants(&basis)?;
            ("basis", pres, Some(basis))
        }
    };
    let report = verify_rba(&presentation)?;
    let degree = basis
        .as_ref()
        .and_then(MatrixBasis::projection_degree_map)
        .or_else(|| degree_candidate(&presentation));
    let degree_checks = degree
        .as_ref()
        .map(|delta| verify_degree_map(&presentation, delta))
        .transpose()?;
    let characters = match (&basis, &degree, &degree_checks) {
        (Some(basis), Some(delta), Some(check)) if report.passed && check.positive => {
            Some(character_data(basis, delta)?)
        }
        _ => None,
    };
    let passed = report.passed;
    let text = match output.format {
        Format::Json => {
            let doc = VerifyDoc {
                input: kind,
                report,
                degree_map: degree.as_ref().map(|d| d.values().to_vec()),
                degree_map_valid: degree_checks.map(|c| c.valid),
                degree_map_positive: degree_checks.map(|c| c.positive),
                characters: characters.as_ref().map(character_docs),
            };
            serde_json::to_string_pretty(&doc).expect("serializable")
        }
        Format::Latex => match &basis {
            Some(basis) => latex_basis(basis),
            None => latex_lambda_table(&presentation.tensor),
        },
        Format::Decimal => match &basis {
            Some(basis) => render_decimal_basis(basis, output.digits),
            None => render_decimal_presentation(&presentation, output.digits),
        },
    };
    emit(output, &text)?;
    Ok(passed)
}

fn export(input: &PathBuf, output: &OutputArgs) -> Result<(), Error> {
    let bytes = std::fs::read(input)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", input.display())))?;
    let text = match parse_input_json(&bytes)? {
        InputDoc::Presentation(pres) => match output.format {
            Format::Json => presentation_to_json(&pres),
            Format::Latex => latex_lambda_table(&pres.tensor),
            Format::Decimal => render_decimal_presentation(&pres, output.digits),
        },
        InputDoc::Basis(basis) => match output.format {
            Format::Json => basis_to_json(&basis),
            Format::Latex => latex_basis(&basis),
            Format::Decimal => render_decimal_basis(&basis, output.digits),
        },
    };
    emit(output, &text)
}

fn parse_filters(texts: &[String]) -> Result<Vec<Filter>, Error> {
    texts.iter().map(|t| t.parse()).collect()
}

fn scan(family: ScanFamily) -> Result<(), Error> {
    match family {
        ScanFamily::Dim5 {
            d,
            filter,
            cross_check,
            emit_basis,
            out,
        } => {
            let ranges: [GridRange; 3] = [d[0].parse()?, d[1].parse()?, d[2].parse()?];
            let options = ScanOptions {
                filters: parse_filters(&filter)?,
                cross_check,
                emit_basis,
            };
            with_sink(out, |sink| scan_dim5(&ranges, &options, sink).map(|_| ()))
        }
        ScanFamily::Cm {
            m,
            delta,
            filter,
            emit_basis,
            out,
        } => {
            let options = ScanOptions {
                filters: parse_filters(&filter)?,
                cross_check: false,
                emit_basis,
            };
            with_sink(out, |sink| {
                scan_cm(&m.parse()?, &delta.parse()?, &options, sink).map(|_| ())
            })
        }
    }
}

fn with_sink(
    out: Option<PathBuf>,
    body: impl FnOnce(&mut dyn Write) -> Result<(), Error>,
) -> Result<(), Error> {
    match out {
        Some(path) => {
            let file = std::fs::File::create(&path).map_err(|e| {
                Error::Inconsistency(format!("cannot create {}: {e}", path.display()))
            })?;
            let mut writer = std::io::BufWriter::new(file);
            body(&mut writer)?;
            writer
                .flush()
                .map_err(|e| Error::Inconsistency(e.to_string()))
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            body(&mut lock)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct { which } => construct(which),
        Command::Verify { input, output } => verify(&input, &output),
        Command::Scan { family } => scan(family).map(|()| true),
        Command::Export { input, output } => export(&input, &output).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(if error.is_usage() { 2 } else { 1 })
        }
    }
}
