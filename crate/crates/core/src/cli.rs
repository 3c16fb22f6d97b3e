//! The `clasp` command line.
//!
//! Exit codes: 0 success, 1 oracle or cross-check disagreement, 2 bad input,
//! 3 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::bound_report;
use crate::complex::CComplex;
use crate::curve::LatticeCurve;
use crate::error::Error;
use crate::invariants::{e_ij, pairwise_linking, triple_linking};
use crate::oracle::{self, ReportTable, DEFAULT_AREA_CAP, DEFAULT_LENGTH_CAP};
use crate::svg;
use crate::word::ClaspWord;

pub const EXIT_OK: u8 = 0;
pub const EXIT_DISAGREE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "clasp", version, about = "Clasp words, linking invariants and clasp-number bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Signed count of x_I before x_J in WORD ("-" reads standard input)
    Eij {
        word: String,
        i: u32,
        j: u32,
        #[arg(long, value_enum, default_value_t = Method::Sum)]
        method: Method,
    },
    /// Trace the lattice curve of WORD in the (I, J) plane and write it as SVG
    Curve {
        word: String,
        i: u32,
        j: u32,
        #[arg(long)]
        out: PathBuf,
        /// Draw unit grid lines
        #[arg(long)]
        grid: bool,
        /// Also write the vertex list, one "x y" per line
        #[arg(long)]
        points: Option<PathBuf>,
    },
    /// Triple linking number mu_IJK of a C-complex file ("-" reads standard input)
    Mu { file: String, i: u32, j: u32, k: u32 },
    /// Linking number of components I and J
    Lk { file: String, i: u32, j: u32 },
    /// Clasp word of every component
    Words { file: String },
    /// Bounds on the clasp number C(L) and on B(L)
    Bounds { file: String },
    /// Check a C-complex file and list every violation
    Validate { file: String },
    /// Print a C-complex for the generalised Borromean rings BR^N
    GenBrn { n: usize },
    /// Run a brute-force oracle
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[arg(long)]
        max_area: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        /// Raise the runtime cap on --max-area / --max-len
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Sum,
    Integral,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Polyomino,
    Words,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_INPUT, message: message.to_string() }
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        Failure { code: EXIT_IO, message: format!("{}: {err}", path.display()) }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::input(e)
    }
}

type Outcome = Result<u8, Failure>;

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut out = String::new();
    let result = dispatch(cli.command, stdin, &mut out);
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return EXIT_IO;
    }
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut String) -> Outcome {
    use std::fmt::Write as _;
    match command {
        Command::Eij { word, i, j, method } => {
            let word = read_word(&word, stdin)?;
            let sum = e_ij(&word, i, j)?;
            let integral = LatticeCurve::from_word(&word, i, j)?.line_integral_x_dy();
            match method {
                Method::Sum => writeln!(out, "{sum}").unwrap(),
                Method::Integral => writeln!(out, "{integral}").unwrap(),
                Method::Both => {
                    writeln!(out, "sum = {sum}").unwrap();
                    writeln!(out, "integral = {integral}").unwrap();
                }
            }
            Ok(if sum == integral { EXIT_OK } else { EXIT_DISAGREE })
        }
        Command::Curve { word, i, j, out: path, grid, points } => {
            let word = read_word(&word, stdin)?;
            let curve = LatticeCurve::from_word(&word, i, j)?;
            fs::write(&path, svg::render_curve(&curve, grid)).map_err(|e| Failure::io(&path, e))?;
            if let Some(points) = points {
                fs::write(&points, curve.to_vertex_list()).map_err(|e| Failure::io(&points, e))?;
            }
            writeln!(out, "length = {}", curve.len()).unwrap();
            let a = curve.line_integral_x_dy();
            if !curve.is_closed() {
                writeln!(out, "open integral={a}").unwrap();
            } else if curve.is_simple()? {
                writeln!(out, "closed simple area={} integral={a}", a.abs()).unwrap();
            } else {
                writeln!(out, "closed non-simple integral={a}").unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Mu { file, i, j, k } => {
            let f = read_complex(&file, stdin)?;
            let mu = triple_linking(&f, i, j, k)?;
            writeln!(out, "mu = {}", mu.value).unwrap();
            let labels = [(i, j, k), (j, k, i), (k, i, j)];
            for ((a, b, c), e) in labels.iter().zip(mu.contributions) {
                writeln!(out, "e_{a}{b}(w_{c}) = {e}").unwrap();
            }
            writeln!(out, "{}", if mu.well_defined { "WELL-DEFINED" } else { "NOT-WELL-DEFINED" }).unwrap();
            Ok(EXIT_OK)
        }
        Command::Lk { file, i, j } => {
            let f = read_complex(&file, stdin)?;
            f.ensure_valid()?;
            writeln!(out, "lk({i},{j}) = {}", pairwise_linking(&f, i, j)?).unwrap();
            Ok(EXIT_OK)
        }
        Command::Words { file } => {
            let f = read_complex(&file, stdin)?;
            for (k, w) in f.clasp_words()?.iter().enumerate() {
                let sep = if w.is_empty() { "" } else { " " };
                writeln!(out, "w_{} ={sep}{w}", k + 1).unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Bounds { file } => {
            let f = read_complex(&file, stdin)?;
            write!(out, "{}", bound_report(&f)?).unwrap();
            Ok(EXIT_OK)
        }
        Command::Validate { file } => {
            let f = read_complex(&file, stdin)?;
            let violations = f.validate();
            if violations.is_empty() {
                writeln!(out, "ok").unwrap();
                return Ok(EXIT_OK);
            }
            for v in &violations {
                writeln!(out, "{v}").unwrap();
            }
            Ok(EXIT_INPUT)
        }
        Command::GenBrn { n } => {
            write!(out, "{}", CComplex::generalized_borromean(n)?).unwrap();
            Ok(EXIT_OK)
        }
        Command::Oracle { kind: OracleKind::Polyomino, max_area, max_len, cap } => {
            if max_len.is_some() {
                return Err(Failure::input("--max-len applies to the words oracle"));
            }
            let cap = cap.unwrap_or(DEFAULT_AREA_CAP);
            let max_area = max_area.unwrap_or(DEFAULT_AREA_CAP);
            let perimeters = oracle::verify_min_perimeter(max_area, cap)?;
            let counts = oracle::cross_check_counts(max_area, cap)?;
            writeln!(out, "minimum perimeter of fixed polyominoes").unwrap();
            write!(out, "{}", ReportTable { headers: ["area", "observed", "predicted", "agree"], rows: &perimeters })
                .unwrap();
            writeln!(out, "fixed polyomino counts").unwrap();
            write!(out, "{}", ReportTable { headers: ["area", "growth", "redelmeier", "agree"], rows: &counts })
                .unwrap();
            let ok = perimeters.iter().chain(&counts).all(|r| r.agree);
            Ok(if ok { EXIT_OK } else { EXIT_DISAGREE })
        }
        Command::Oracle { kind: OracleKind::Words, max_area, max_len, cap } => {
            if max_area.is_some() {
                return Err(Failure::input("--max-area applies to the polyomino oracle"));
            }
            let cap = cap.unwrap_or(DEFAULT_LENGTH_CAP);
            let sweep = oracle::verify_word_length_bound(max_len.unwrap_or(DEFAULT_LENGTH_CAP), cap)?;
            writeln!(out, "shortest balanced word per |e_12|").unwrap();
            write!(out, "{}", ReportTable { headers: ["|e_12|", "observed", "predicted", "agree"], rows: &sweep.reports })
                .unwrap();
            writeln!(out, "balanced words checked = {}", sweep.words_checked).unwrap();
            writeln!(out, "word length counterexamples = {}", sweep.word_bound_failures.len()).unwrap();
            writeln!(out, "curve length counterexamples = {}", sweep.curve_bound_failures.len()).unwrap();
            writeln!(out, "sum/integral mismatches = {}", sweep.integral_mismatches.len()).unwrap();
            Ok(if sweep.all_agree() { EXIT_OK } else { EXIT_DISAGREE })
        }
    }
}

fn read_source(source: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if source == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::io(Path::new("<stdin>"), e))?;
        Ok(text)
    } else {
        fs::read_to_string(source).map_err(|e| Failure::io(Path::new(source), e))
    }
}

fn read_word(arg: &str, stdin: &mut dyn Read) -> Result<ClaspWord, Failure> {
    if arg == "-" {
        Ok(ClaspWord::parse_file(&read_source(arg, stdin)?)?)
    } else {
        Ok(arg.parse()?)
    }
}

fn read_complex(source: &str, stdin: &mut dyn Read) -> Result<CComplex, Failure> {
    Ok(read_source(source, stdin)?.parse()?)
}
