//! Command-line front end over `lndkit-core`: loads a dossier, runs one
//! command, and renders the result as text or JSON.

pub mod dossier;
pub mod output;

use std::fmt;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use lndkit_core::classifier::{combined_image_ideal, ConjecturedHdStar};
use lndkit_core::derivation::FORMAL_PARAMETER;
use lndkit_core::grading::decompose;
use lndkit_core::toric::{detect_line_factor, enumerate_roots};
use lndkit_core::{classify, Error, ExpParameter, Ideal, NilpotencyVerdict, Polynomial};

use dossier::{order, parse_rational, Loaded};
use output::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable file, schema or parse error, missing object: exit 2.
    Input(String),
    /// The input is fine but the requested property fails: exit 1.
    Semantic(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Semantic(_) => EXIT_SEMANTIC,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Semantic(m) => m,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.message())
    }
}

/// Errors from the core that point at the input rather than at the math.
fn from_core(e: Error) -> CliError {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable(_)
        | Error::InvalidVariableName(_)
        | Error::DuplicateVariable(_)
        | Error::ReservedName(_)
        | Error::ArityMismatch { .. }
        | Error::DimensionMismatch { .. }
        | Error::InvalidOrder(_)
        | Error::InvalidCone(_)
        | Error::InvalidData(_) => CliError::Input(e.to_string()),
        _ => CliError::Semantic(e.to_string()),
    }
}

#[derive(Parser, Debug)]
#[command(name = "lndkit", version, about = "Verify locally nilpotent derivations and classify varieties")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Monomial order for Gröbner computations.
    #[arg(long, global = true, default_value = "grevlex")]
    pub order: String,
    /// Iteration bound for nilpotency checks.
    #[arg(long, global = true, default_value_t = 64)]
    pub bound: u32,
    /// Box size for Demazure root enumeration.
    #[arg(long = "box", global = true, default_value_t = 10)]
    pub box_size: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certify well-definedness and bounded local nilpotency.
    CheckLnd { file: String, name: String },
    /// Classify Y × A¹ as type A, B or C.
    Classify { file: String },
    /// Apply exp(sD) to an element; `s` defaults to a formal parameter.
    Exp { file: String, name: String, f: String, s: Option<String> },
    /// Split a derivation into homogeneous parts for a grading.
    Decompose { file: String, name: String, grading: String },
    /// Demazure roots of the cone in the file.
    Roots { file: String },
    /// Membership in K[Y] ⊕ ⊕ I·u^i for the combined image ideal I.
    HdstarMember { file: String, f: String },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckLnd { .. } => "check-lnd",
            Command::Classify { .. } => "classify",
            Command::Exp { .. } => "exp",
            Command::Decompose { .. } => "decompose",
            Command::Roots { .. } => "roots",
            Command::HdstarMember { .. } => "hdstar-member",
        }
    }

    fn file(&self) -> &str {
        match self {
            Command::CheckLnd { file, .. }
            | Command::Classify { file }
            | Command::Exp { file, .. }
            | Command::Decompose { file, .. }
            | Command::Roots { file }
            | Command::HdstarMember { file, .. } => file,
        }
    }
}

/// Everything a run writes, so tests can drive commands in-process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = std::fs::read_to_string(cli.command.file())
        .map_err(|e| CliError::Input(format!("cannot read `{}`: {e}", cli.command.file())))
        .and_then(|text| execute(cli, &text));
    match result {
        Ok((code, doc)) => {
            let stdout = if cli.json { doc.to_json() } else { doc.to_text() };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let stderr = format!("error: {e}\n");
            let stdout = if cli.json {
                Document::Error(ErrorReport {
                    failed: cli.command.name().into(),
                    exit_code: e.exit_code(),
                    error: e.message().into(),
                })
                .to_json()
            } else {
                String::new()
            };
            Outcome { code: e.exit_code(), stdout, stderr }
        }
    }
}

/// Runs a command on the text of its input file.
pub fn execute(cli: &Cli, text: &str) -> Result<(i32, Document), CliError> {
    let loaded = Loaded::from_text(text, &order(&cli.order)?)?;
    match &cli.command {
        Command::CheckLnd { name, .. } => check_lnd(&loaded, name, cli.bound),
        Command::Classify { .. } => {
            let v = loaded.dossier(cli.bound)?;
            let report = classify(&v, cli.box_size);
            Ok((EXIT_OK, Document::Classify(ClassifyReport::from_report(&report))))
        }
        Command::Exp { name, f, s, .. } => exp(&loaded, name, f, s.as_deref(), cli.bound),
        Command::Decompose { name, grading, .. } => decompose_cmd(&loaded, name, grading),
        Command::Roots { .. } => roots(&loaded, cli.box_size),
        Command::HdstarMember { f, .. } => hdstar_member(&loaded, f, cli.bound),
    }
}

fn images_of(d: &lndkit_core::Derivation) -> Vec<Image> {
    d.describe().into_iter().map(|(var, image)| Image { var, image }).collect()
}

fn check_lnd(loaded: &Loaded, name: &str, bound: u32) -> Result<(i32, Document), CliError> {
    let d = loaded.derivation(name)?;
    let alg = d.algebra();
    let residues: Vec<String> = d.certificate().residues.iter().map(|r| alg.format(r)).collect();
    let well_defined = d.is_well_defined();
    let verdict = if well_defined {
        match d.nilpotency_check(bound).map_err(from_core)? {
            NilpotencyVerdict::VerifiedLnd { max_order, orders } => Verdict::VerifiedLnd {
                max_order,
                orders: alg.vars().iter().zip(orders).map(|(v, order)| VarOrder { var: v.clone(), order }).collect(),
            },
            NilpotencyVerdict::NotNilpotent { var, order, earlier, ratio } => {
                Verdict::NotNilpotent { var: alg.vars()[var].clone(), order, earlier, ratio: ratio.to_string() }
            }
            NilpotencyVerdict::Inconclusive { bound } => Verdict::Inconclusive { bound },
        }
    } else {
        Verdict::NotWellDefined
    };
    let code = if matches!(verdict, Verdict::VerifiedLnd { .. }) { EXIT_OK } else { EXIT_SEMANTIC };
    let report = CheckLndReport { derivation: name.into(), images: images_of(&d), well_defined, residues, verdict };
    Ok((code, Document::CheckLnd(report)))
}

fn exp(loaded: &Loaded, name: &str, f: &str, s: Option<&str>, bound: u32) -> Result<(i32, Document), CliError> {
    let d = loaded.derivation(name)?;
    let element = loaded.element(f)?;
    let parameter = match s {
        None | Some("formal") => ExpParameter::Formal,
        Some(text) => ExpParameter::Value(parse_rational(text)?),
    };
    let lnd = d.verify_lnd(bound).map_err(from_core)?;
    let result = lnd.exp(&element, &parameter).map_err(from_core)?;
    let mut names = loaded.algebra.vars().to_vec();
    if parameter == ExpParameter::Formal {
        names.push(FORMAL_PARAMETER.into());
    }
    let report = ExpReport {
        derivation: name.into(),
        input: loaded.algebra.format(&element),
        parameter: match &parameter {
            ExpParameter::Formal => FORMAL_PARAMETER.into(),
            ExpParameter::Value(v) => v.to_string(),
        },
        result: result.display(&names).to_string(),
    };
    Ok((EXIT_OK, Document::Exp(report)))
}

fn decompose_cmd(loaded: &Loaded, name: &str, grading: &str) -> Result<(i32, Document), CliError> {
    let d = loaded.derivation(name)?;
    let weights = loaded.weights(grading)?;
    let parts = decompose(&d, &weights).map_err(from_core)?;
    let report = DecomposeReport {
        derivation: name.into(),
        weights,
        parts: parts.iter().map(|p| Part { degree: p.degree, images: images_of(&p.part) }).collect(),
    };
    Ok((EXIT_OK, Document::Decompose(report)))
}

fn roots(loaded: &Loaded, box_size: u32) -> Result<(i32, Document), CliError> {
    let cone = loaded.cone()?.ok_or_else(|| CliError::Input("the file has no toric cone".into()))?;
    let roots = enumerate_roots(&cone, box_size);
    let report = RootsReport {
        rays: cone.rays().to_vec(),
        box_size,
        count: roots.len(),
        line_factor: detect_line_factor(&cone).map(Root::from),
        roots: roots.into_iter().map(Root::from).collect(),
    };
    Ok((EXIT_OK, Document::Roots(report)))
}

fn hdstar_member(loaded: &Loaded, f: &str, bound: u32) -> Result<(i32, Document), CliError> {
    let v = loaded.dossier(bound)?;
    let base = loaded.algebra.clone();
    let ideal = match combined_image_ideal(&v) {
        Ok(i) => i,
        Err(Error::NoLnds) => Ideal::zero(base.arity()),
        Err(e) => return Err(from_core(e)),
    };
    let cylinder = Arc::new(base.cylinder());
    let element = cylinder.parse_element(f).map_err(from_core)?;
    let predicate = ConjecturedHdStar::new(base.clone(), &ideal).map_err(from_core)?;
    let member = predicate.contains(&element).map_err(from_core)?;
    let coefficients = predicate
        .coefficients(&element)
        .map_err(from_core)?
        .into_iter()
        .map(|(power, c): (u32, Polynomial)| Coefficient { power, coefficient: base.format(&c) })
        .collect();
    let report = HdstarReport {
        element: cylinder.format(&element),
        cylinder_variable: cylinder.vars().last().cloned().unwrap_or_default(),
        ideal: ideal.generators().iter().map(|g| base.format(g)).collect(),
        coefficients,
        member,
    };
    Ok((if member { EXIT_OK } else { EXIT_SEMANTIC }, Document::HdstarMember(report)))
}
