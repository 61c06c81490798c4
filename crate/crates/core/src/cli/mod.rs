//! Command-line surface: algebra files in, JSON reports and DOT out.
//!
//! Exit codes: 0 answered, 1 answered "no", 2 bad input, 3 could not answer
//! within limits.

mod dot;

pub use dot::export_dot;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{parse_presentation, AlgebraBasis, AlgebraPresentation};
use crate::arquiver::{import_abstract, knit_partial, ARQuiver, KnitLimits};
use crate::cuts::{
    analyze_cut, certify_tilted, enumerate_cuts, is_cut, is_section, quotient_by_cut, CertifyOptions,
    Certificate, CutCheck, CutReport, Verdict, DEFAULT_CUT_CAP,
};
use crate::exactla::{Field, FieldKind, Fp, Rational};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tiltkit", version, about = "Exact computations with bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct LimitArgs {
    #[arg(long, default_value_t = KnitLimits::default().max_vertices)]
    max_vertices: usize,
    #[arg(long, default_value_t = KnitLimits::default().max_dim)]
    max_dim: usize,
}

impl LimitArgs {
    fn limits(self) -> KnitLimits {
        KnitLimits {
            max_vertices: self.max_vertices,
            max_dim: self.max_dim,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse an algebra file and summarize its basis.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Auslander-Reiten quiver of a representation-finite algebra.
    Ar {
        #[command(subcommand)]
        action: ArAction,
    },
    /// Cut predicates.
    Cut {
        #[command(subcommand)]
        action: CutAction,
    },
    /// Tilted-algebra certification.
    Tilted {
        #[command(subcommand)]
        action: TiltedAction,
    },
    /// Quotient by the annihilator of a cut.
    Quotient {
        file: PathBuf,
        /// Comma-separated vertex names.
        #[arg(long, value_delimiter = ',', required = true)]
        modules: Vec<String>,
        #[arg(long)]
        emit_algebra: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraAction {
    Check { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ArAction {
    Build {
        file: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Dot {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated vertex names to draw as a cluster.
        #[arg(long, value_delimiter = ',')]
        highlight: Vec<String>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand, Debug)]
enum CutAction {
    Check {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        modules: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CUT_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand, Debug)]
enum TiltedAction {
    Certify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CUT_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

/// Failure of a command, already mapped to an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded(_)
            | Error::CapExceeded { .. }
            | Error::NotFiniteDimensional { .. }
            | Error::NonSplitEndomorphismRing
            | Error::UnsupportedRadicalComputation { .. }
            | Error::NonLocalEndRing => EXIT_LIMIT,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

type CmdResult = Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, text: &str, path: Option<&Path>) -> Result<(), Failure> {
        match path {
            Some(p) => std::fs::write(p, text).map_err(|e| input_failure(format!("{}: {e}", p.display()))),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| input_failure(format!("writing output: {e}"))),
        }
    }

    fn report<T: Serialize>(&mut self, value: &T, path: Option<&Path>) -> Result<(), Failure> {
        let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
        text.push('\n');
        self.emit(&text, path)
    }

    fn note(&mut self, msg: &str) {
        let _ = writeln!(self.err, "{msg}");
    }
}

/// Runs `argv` (program name first); returns the exit code.
pub fn run_command(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    let mut io = Io { out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            io.note(&format!("error: {}", f.message));
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AlgebraPresentation, Failure> {
    parse_presentation(&read(path)?).map_err(|e| input_failure(format!("{}:{e}", path.display())))
}

fn is_translation_quiver(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "tq")
}

/// Calls `$run::<F>(...)` with `F` matching the field of the presentation.
macro_rules! dispatch_field {
    ($kind:expr, $run:ident ( $a:ident, $b:ident, $c:ident ) ; $($p:literal)*) => {
        match $kind {
            FieldKind::Rational => $run::<Rational>($a, $b, $c),
            $(FieldKind::Prime($p) => $run::<Fp<$p>>($a, $b, $c),)*
            FieldKind::Prime(p) => Err(input_failure(format!(
                "field F {p} is not among the compiled prime fields"
            ))),
        }
    };
}

macro_rules! with_field {
    ($kind:expr, $run:ident ( $a:ident, $b:ident, $c:ident )) => {
        dispatch_field!($kind, $run($a, $b, $c);
            2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97
            101 103 107 109 113 127 131 251 257 401 1009 10007 32003 65521 65537
            1000003 2147483647)
    };
}

fn dispatch(cmd: Command, io: &mut Io<'_>) -> CmdResult {
    match &cmd {
        Command::Ar { action: ArAction::Dot { file, .. } }
        | Command::Cut { action: CutAction::Check { file, .. } | CutAction::Enumerate { file, .. } }
            if is_translation_quiver(file) =>
        {
            return abstract_command(&cmd, &read(file)?, io);
        }
        _ => {}
    }
    let file = match &cmd {
        Command::Algebra { action: AlgebraAction::Check { file } }
        | Command::Ar { action: ArAction::Build { file, .. } | ArAction::Dot { file, .. } }
        | Command::Cut { action: CutAction::Check { file, .. } | CutAction::Enumerate { file, .. } }
        | Command::Tilted { action: TiltedAction::Certify { file, .. } }
        | Command::Quotient { file, .. } => file.clone(),
    };
    if is_translation_quiver(&file) {
        return Err(input_failure(format!(
            "{}: this command needs an algebra file, not a translation quiver",
            file.display()
        )));
    }
    let p = load(&file)?;
    let (cmd, p) = (&cmd, &p);
    with_field!(p.field, run_algebra(cmd, p, io))
}

#[derive(Serialize)]
struct ArrowSummary {
    label: String,
    source: String,
    target: String,
}

#[derive(Serialize)]
struct AlgebraSummary {
    field: String,
    vertices: Vec<String>,
    arrows: Vec<ArrowSummary>,
    relations: Vec<String>,
    dim: usize,
    nilpotency_index: usize,
    connected: bool,
    basis: Vec<String>,
}

fn summarize<F: Field>(a: &AlgebraBasis<F>) -> AlgebraSummary {
    let p = a.presentation();
    let q = &p.quiver;
    AlgebraSummary {
        field: a.field().to_string(),
        vertices: q.vertices.clone(),
        arrows: q
            .arrows
            .iter()
            .map(|x| ArrowSummary {
                label: x.label.clone(),
                source: q.vertices[x.source].clone(),
                target: q.vertices[x.target].clone(),
            })
            .collect(),
        relations: p.relations.iter().map(|r| r.display(q)).collect(),
        dim: a.dim(),
        nilpotency_index: a.nilpotency_index(),
        connected: q.is_connected(),
        basis: (0..a.dim()).map(|i| a.basis_label(i)).collect(),
    }
}

#[derive(Serialize)]
struct VertexSummary {
    name: String,
    aliases: Vec<String>,
    dim_vector: Option<Vec<usize>>,
    projective: bool,
    injective: bool,
    boundary: bool,
}

#[derive(Serialize)]
struct ArrowEntry {
    source: String,
    target: String,
    multiplicity: usize,
}

#[derive(Serialize)]
struct TauEntry {
    vertex: String,
    tau: String,
}

#[derive(Serialize)]
struct QuiverSummary {
    complete: bool,
    vertices: Vec<VertexSummary>,
    arrows: Vec<ArrowEntry>,
    tau: Vec<TauEntry>,
}

fn summarize_quiver<F>(arq: &ARQuiver<F>) -> QuiverSummary {
    let name = |i: usize| arq.vertices[i].name.clone();
    QuiverSummary {
        complete: arq.complete,
        vertices: arq
            .vertices
            .iter()
            .map(|v| VertexSummary {
                name: v.name.clone(),
                aliases: v.aliases.clone(),
                dim_vector: v.dim_vector().map(<[usize]>::to_vec),
                projective: v.is_projective,
                injective: v.is_injective,
                boundary: v.boundary,
            })
            .collect(),
        arrows: arq
            .arrows
            .iter()
            .map(|a| ArrowEntry {
                source: name(a.source),
                target: name(a.target),
                multiplicity: a.multiplicity,
            })
            .collect(),
        tau: arq
            .tau
            .iter()
            .enumerate()
            .filter_map(|(x, t)| t.map(|t| TauEntry { vertex: name(x), tau: name(t) }))
            .collect(),
    }
}

#[derive(Serialize)]
struct ArReport {
    algebra: AlgebraSummary,
    ar_quiver: QuiverSummary,
    error: Option<String>,
}

#[derive(Serialize)]
struct CutCheckReport {
    algebra: AlgebraSummary,
    analysis: CutReport,
}

#[derive(Serialize)]
struct AbstractCutReport {
    vertices: Vec<String>,
    cut: CutCheck,
    section: bool,
}

#[derive(Serialize)]
struct EnumerationReport {
    count: usize,
    cuts: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct QuotientReport {
    annihilator_dim: usize,
    annihilator: Vec<String>,
    quotient: AlgebraSummary,
    presentation: String,
    lifted_cut: Vec<String>,
    cut_in_quotient: bool,
    slice_in_quotient: bool,
    tau_agrees: bool,
    certificate: Certificate,
}

fn resolve<F>(arq: &ARQuiver<F>, names: &[String]) -> Result<Vec<usize>, Failure> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(arq.resolve(&refs)?)
}

fn knit_or_fail<F: Field>(a: &AlgebraBasis<F>, limits: KnitLimits) -> Result<ARQuiver<F>, Failure> {
    match knit_partial(a, limits) {
        (arq, None) => Ok(arq),
        (_, Some(e)) => Err(e.into()),
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::CertifiedTilted => EXIT_OK,
        Verdict::RefutedByEnumeration => EXIT_NEGATIVE,
        Verdict::NotCertified => EXIT_LIMIT,
    }
}

fn run_algebra<F: Field>(cmd: &Command, p: &AlgebraPresentation, io: &mut Io<'_>) -> CmdResult {
    let a = AlgebraBasis::<F>::build(p)?;
    match cmd {
        Command::Algebra { .. } => {
            io.report(&summarize(&a), None)?;
            Ok(EXIT_OK)
        }
        Command::Ar { action: ArAction::Build { limits, out, .. }, .. } => {
            let (arq, e) = knit_partial(&a, limits.limits());
            let report = ArReport {
                algebra: summarize(&a),
                ar_quiver: summarize_quiver(&arq),
                error: e.as_ref().map(ToString::to_string),
            };
            io.report(&report, out.as_deref())?;
            match e {
                None => Ok(EXIT_OK),
                Some(e) => Err(e.into()),
            }
        }
        Command::Ar { action: ArAction::Dot { out, highlight, limits, .. }, .. } => {
            let arq = knit_or_fail(&a, limits.limits())?;
            let h = resolve(&arq, highlight)?;
            io.emit(&export_dot(&arq, &h), Some(out))?;
            Ok(EXIT_OK)
        }
        Command::Cut { action: CutAction::Check { modules, out, limits, .. }, .. } => {
            let arq = knit_or_fail(&a, limits.limits())?;
            let delta = resolve(&arq, modules)?;
            let analysis = analyze_cut(&a, &arq, &delta)?;
            let code = if analysis.cut.is_cut { EXIT_OK } else { EXIT_NEGATIVE };
            io.report(&CutCheckReport { algebra: summarize(&a), analysis }, out.as_deref())?;
            Ok(code)
        }
        Command::Cut { action: CutAction::Enumerate { cap, out, limits, .. }, .. } => {
            let arq = knit_or_fail(&a, limits.limits())?;
            let cuts = enumerate_cuts(&arq, *cap)?;
            let report = EnumerationReport {
                count: cuts.len(),
                cuts: cuts.iter().map(|c| arq.names(c)).collect(),
            };
            io.report(&report, out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Tilted { action: TiltedAction::Certify { cap, out, limits, .. } } => {
            let opts = CertifyOptions {
                limits: limits.limits(),
                cap: *cap,
            };
            let cert = certify_tilted(&a, &opts)?;
            io.report(&cert, out.as_deref())?;
            Ok(verdict_code(cert.verdict))
        }
        Command::Quotient { modules, emit_algebra, out, limits, .. } => {
            let opts = CertifyOptions {
                limits: limits.limits(),
                cap: DEFAULT_CUT_CAP,
            };
            let arq = knit_or_fail(&a, opts.limits)?;
            let delta = resolve(&arq, modules)?;
            let q = quotient_by_cut(&a, &arq, &delta, &opts)?;
            let text = q.presentation.to_text();
            if let Some(path) = emit_algebra {
                io.emit(&text, Some(path))?;
            }
            let report = QuotientReport {
                annihilator_dim: q.annihilator_dim,
                annihilator: q.annihilator.clone(),
                quotient: summarize(&q.algebra),
                presentation: text,
                lifted_cut: q.arq.names(&q.lifted),
                cut_in_quotient: q.cut_in_quotient,
                slice_in_quotient: q.slice_in_quotient,
                tau_agrees: q.tau_agrees,
                certificate: q.certificate.clone(),
            };
            io.report(&report, out.as_deref())?;
            Ok(EXIT_OK)
        }
    }
}

fn abstract_command(cmd: &Command, text: &str, io: &mut Io<'_>) -> CmdResult {
    let arq: ARQuiver<Rational> = import_abstract(text)?;
    match cmd {
        Command::Ar { action: ArAction::Dot { out, highlight, .. } } => {
            let h = resolve(&arq, highlight)?;
            io.emit(&export_dot(&arq, &h), Some(out))?;
            Ok(EXIT_OK)
        }
        Command::Cut { action: CutAction::Check { modules, out, .. } } => {
            let delta = resolve(&arq, modules)?;
            let cut = is_cut(&arq, &delta);
            let code = if cut.is_cut { EXIT_OK } else { EXIT_NEGATIVE };
            let report = AbstractCutReport {
                vertices: arq.names(&delta),
                section: is_section(&arq, &delta),
                cut,
            };
            io.report(&report, out.as_deref())?;
            Ok(code)
        }
        Command::Cut { action: CutAction::Enumerate { cap, out, .. } } => {
            let cuts = enumerate_cuts(&arq, *cap)?;
            let report = EnumerationReport {
                count: cuts.len(),
                cuts: cuts.iter().map(|c| arq.names(c)).collect(),
            };
            io.report(&report, out.as_deref())?;
            Ok(EXIT_OK)
        }
        _ => Err(input_failure("translation-quiver files only support `ar dot` and `cut`".into())),
    }
}
