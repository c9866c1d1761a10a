//! Command-line surface.
//!
//! Exit status: 0 on success, 1 when `verify` finds violations of the
//! claimed parameters, 2 on malformed input or configuration.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use zccs_core::{
    build_ccc, build_zccs, char_phase, profile, verify_with, CodeSet, FieldElement, FieldSpec,
    VerifyOptions, ZeroTest,
};

use crate::{export, format, report, ToolError};

#[derive(Debug, Parser)]
#[command(name = "zccs", version, about = "CCC/ZCCS construction and exact verification over GF(p^r)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the complete complementary code of length p^r.
    GenCcc(GenArgs),
    /// Build the Z-complementary code set of length n p^r.
    GenZccs {
        #[command(flatten)]
        gen: GenArgs,
        /// Comma-separated primes p_1,..,p_t; n is their product.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u32>,
    },
    /// Certify a code set file against its claimed parameters.
    Verify(VerifyArgs),
    /// Write the correlation profile of two codes as CSV.
    Profile(ProfileArgs),
    /// Field inspection.
    Field {
        #[command(subcommand)]
        command: FieldCommand,
    },
    /// Same as `field info`.
    #[command(name = "field-info", hide = true)]
    FieldInfoFlat(FieldInfoArgs),
}

#[derive(Debug, Subcommand)]
pub enum FieldCommand {
    /// Print the field, the powers of alpha and the trace table.
    Info(FieldInfoArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    /// Monic modulus, comma-separated coefficients, constant term first,
    /// leading 1 included (e.g. 2,1,1 for x^2 + x + 2).
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// Primitive element, comma-separated coefficients, constant term first.
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<u32>>,
    /// Read the field from a JSON description instead.
    #[arg(long, conflicts_with_all = ["p", "r", "modulus", "alpha"])]
    pub field: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Output JSON path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write every entry as a complex pair to this CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    #[arg(long)]
    pub text: bool,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Magnitude below which a sum counts as zero (float mode only).
    #[arg(long)]
    pub tol: Option<f64>,
    /// Also write the report to this path.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ProfileArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// The two code indices, e.g. 0,1.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub codes: Vec<usize>,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FieldInfoArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Also print the q x q table of character phases Tr(b c).
    #[arg(long)]
    pub characters: bool,
    /// Print only the JSON field description.
    #[arg(long)]
    pub json: bool,
}

/// Result of a successful run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailed => 1,
        }
    }
}

const DEFAULT_FLOAT_TOL: f64 = 1e-6;

pub fn resolve_field(args: &FieldArgs) -> Result<FieldSpec, ToolError> {
    if let Some(path) = &args.field {
        return format::load_field(path);
    }
    let p = args.p.ok_or_else(|| ToolError::Config("--p is required (or --field)".into()))?;
    match &args.modulus {
        Some(modulus) => {
            let degree = modulus.len().saturating_sub(1) as u32;
            if let Some(r) = args.r {
                if r != degree {
                    return Err(ToolError::Config(format!(
                        "--modulus has degree {degree} but --r is {r}"
                    )));
                }
            }
            FieldSpec::with_modulus(p, modulus.clone(), args.alpha.clone())
                .map_err(|e| ToolError::Config(format!("--modulus/--alpha: {e}")))
        }
        None => {
            let r = args.r.ok_or_else(|| ToolError::Config("--r is required (or --field)".into()))?;
            let spec = FieldSpec::new(p, r).map_err(|e| ToolError::Config(format!("--p/--r: {e}")))?;
            match &args.alpha {
                Some(alpha) => FieldSpec::with_modulus(p, spec.modulus().to_vec(), Some(alpha.clone()))
                    .map_err(|e| ToolError::Config(format!("--alpha: {e}"))),
                None => Ok(spec),
            }
        }
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, ToolError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| ToolError::Io { path: path.to_owned(), source })
}

fn emit_set(set: &CodeSet, args: &GenArgs, stdout: &mut dyn Write) -> Result<(), ToolError> {
    match &args.out {
        Some(path) => format::save_code_set(set, path)?,
        None => stdout.write_all(format::code_set_to_string(set).as_bytes())?,
    }
    if let Some(path) = &args.csv {
        let mut w = create(path)?;
        export::write_code_set_csv(set, &mut w)
            .and_then(|_| w.flush())
            .map_err(|source| ToolError::Io { path: path.clone(), source })?;
    }
    Ok(())
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<Outcome, ToolError> {
    match cli.command {
        Command::GenCcc(args) => {
            let spec = resolve_field(&args.field)?;
            emit_set(&build_ccc(&spec), &args, stdout)?;
            Ok(Outcome::Success)
        }
        Command::GenZccs { gen, primes } => {
            let spec = resolve_field(&gen.field)?;
            let set = build_zccs(&spec, &primes).map_err(|e| ToolError::Config(format!("--primes: {e}")))?;
            emit_set(&set, &gen, stdout)?;
            Ok(Outcome::Success)
        }
        Command::Verify(args) => run_verify(&args, stdout),
        Command::Profile(args) => run_profile(&args, stdout),
        Command::Field { command: FieldCommand::Info(args) } | Command::FieldInfoFlat(args) => {
            let spec = resolve_field(&args.field)?;
            let text = if args.json { format::field_to_string(&spec) } else { field_info(&spec, args.characters) };
            stdout.write_all(text.as_bytes())?;
            Ok(Outcome::Success)
        }
    }
}

fn run_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<Outcome, ToolError> {
    let zero_test = match (args.mode, args.tol) {
        (Mode::Exact, None) => ZeroTest::Exact,
        (Mode::Exact, Some(_)) => {
            return Err(ToolError::Config("--tol only applies with --mode float".into()));
        }
        (Mode::Float, tol) => {
            let tol = tol.unwrap_or(DEFAULT_FLOAT_TOL);
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(ToolError::Config(format!("--tol must be positive, got {tol}")));
            }
            ZeroTest::Float { tol }
        }
    };
    let set = format::load_code_set(&args.input)?;
    let options = VerifyOptions { zero_test, ..VerifyOptions::default() };
    let result = verify_with(&set, &options);
    let text = if args.json { report::to_json(&result) } else { report::to_text(&result) };
    stdout.write_all(text.as_bytes())?;
    if let Some(path) = &args.report {
        std::fs::write(path, &text).map_err(|source| ToolError::Io { path: path.clone(), source })?;
    }
    Ok(if result.certified { Outcome::Success } else { Outcome::VerificationFailed })
}

fn run_profile(args: &ProfileArgs, stdout: &mut dyn Write) -> Result<Outcome, ToolError> {
    let &[i, j] = args.codes.as_slice() else {
        return Err(ToolError::Config(format!("--codes takes two indices, got {}", args.codes.len())));
    };
    let set = format::load_code_set(&args.input)?;
    let s = set.codes().len();
    if let Some(bad) = [i, j].into_iter().find(|&c| c >= s) {
        return Err(ToolError::Config(format!("--codes: index {bad} out of range, the set has {s} codes")));
    }
    let prof = profile(&set.codes()[i], &set.codes()[j])?;
    match &args.out {
        Some(path) => {
            let mut w = create(path)?;
            export::write_profile_csv(&prof, &mut w)
                .and_then(|_| w.flush())
                .map_err(|source| ToolError::Io { path: path.clone(), source })?;
        }
        None => export::write_profile_csv(&prof, stdout)?,
    }
    Ok(Outcome::Success)
}

/// Renders constant-first coefficients as `c_n x^n + ... + c_0`.
pub fn poly_string(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| match (j, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (j, 1) => format!("x^{j}"),
            (j, c) => format!("{c}x^{j}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn element_string(e: &FieldElement) -> String {
    poly_string(e.coeffs())
}

pub fn field_info(spec: &FieldSpec, characters: bool) -> String {
    let (p, r, q) = (spec.p(), spec.r(), spec.q());
    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let mut out = String::new();
    let _ = writeln!(out, "GF({q}) = Z_{p}[x] / ({})", poly_string(spec.modulus()));
    let _ = writeln!(out, "p = {p}, r = {r}, q = {q}");
    let _ = writeln!(out, "modulus (constant first): {}", join(spec.modulus()));
    let _ = writeln!(out, "alpha (constant first):   {}  [{}]", join(spec.alpha().coeffs()), element_string(spec.alpha()));
    let _ = writeln!(out);
    let _ = writeln!(out, "index map a(i): a(0) = 0, a(i) = alpha^(i-1)");
    let _ = writeln!(out, "{:>5}  {:>8}  {:>8}  element", "i", "power", "encoding");
    for (i, e) in spec.index_table().iter().enumerate() {
        let power = if i == 0 { "-".to_string() } else { format!("a^{}", i - 1) };
        let _ = writeln!(out, "{i:>5}  {power:>8}  {:>8}  {}", e.encode(p), element_string(e));
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "trace table");
    let _ = writeln!(out, "{:>8}  {:>5}  element", "encoding", "Tr");
    for e in spec.elements() {
        let _ = writeln!(out, "{:>8}  {:>5}  {}", e.encode(p), spec.trace(&e), element_string(&e));
    }
    if characters {
        let _ = writeln!(out);
        let _ = writeln!(out, "character phases Tr(b c) mod {p}: rows b, columns c (by encoding)");
        let elements: Vec<FieldElement> = spec.elements().collect();
        for b in &elements {
            let row: Vec<String> = elements.iter().map(|c| char_phase(b, c, spec).value().to_string()).collect();
            let _ = writeln!(out, "{:>5}: {}", b.encode(p), row.join(" "));
        }
    }
    out
}
