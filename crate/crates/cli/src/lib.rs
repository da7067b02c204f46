//! The `hypercode` command-line tool.
//!
//! [`run`] turns a parsed [`CommandRequest`] into an [`Outcome`] without
//! touching the process, so the binary only prints and exits. Exit codes:
//! 0 success, 2 parse error, 3 validation error, 4 internal invariant breach.

pub mod export;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypercode_core::chain::build_code;
use hypercode_core::css::{
    assemble, distance, stabilizer_strings, DEFAULT_MAX_QUBITS, DEFAULT_MAX_WEIGHT,
};
use hypercode_core::format::{parse_hypermap_file, render_hypermap_file};
use hypercode_core::reduce::{reduce_to_surface, validate_surface};
use hypercode_core::verify::{self, VerifyConfig};
use hypercode_core::{
    CodeKind, CssCode, CycleDecomposition, Distance, DistanceBudget, Error, Hypermap,
    LogicalWeight, SpecialDarts, SpecialKind,
};

use crate::export::{export_json, export_walsh_dot, Artifact};

#[derive(Parser, Debug)]
#[command(
    name = "hypercode",
    version,
    about = "Build CSS codes from combinatorial hypermaps"
)]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
}

/// Where the hypermap comes from.
#[derive(Args, Clone, Debug)]
pub struct Input {
    /// Hypermap file, or `-` for standard input.
    #[arg(required_unless_present = "inline", conflicts_with = "inline")]
    pub file: Option<PathBuf>,
    /// Hypermap text given directly, with `;` separating lines.
    #[arg(long)]
    pub inline: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum KindArg {
    Face,
    Edge,
    Full,
}

impl From<KindArg> for CodeKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Face => CodeKind::Face,
            KindArg::Edge => CodeKind::Edge,
            KindArg::Full => CodeKind::Full,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Orbits, Euler characteristic and genus.
    Info {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// The dual hypermap (alpha^-1, alpha^-1 sigma).
    Dual {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// The triangle dual (sigma^-1 alpha, sigma^-1).
    TriDual {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// The contrary hypermap (sigma, alpha).
    Contrary {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check matrices and stabilizer generators of a code.
    Code {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Special darts, 1-based, overriding the file's `special` line.
        #[arg(long)]
        special: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// The surface-code cell complex of the face code, with validation.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        special: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Code distance by exhaustive search up to a weight budget.
    Distance {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "face")]
        kind: KindArg,
        #[arg(long)]
        special: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
        max_weight: usize,
        /// Search codes with more than 28 qubits.
        #[arg(long)]
        allow_large: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check every duality identity over a seeded random corpus.
    Verify {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        max_darts: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// A uniformly random transitive hypermap in file format.
    Random {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        darts: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The Walsh graph as DOT, or the hypermap as JSON.
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExitStatus {
    Success = 0,
    ParseError = 2,
    ValidationError = 3,
    InternalError = 4,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub status: ExitStatus,
    pub stdout: String,
    pub stderr: String,
}

/// A failure with its diagnostic, already prefixed with the input's name.
struct Failure {
    status: ExitStatus,
    message: String,
}

impl Failure {
    fn core(origin: &str, e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => ExitStatus::ParseError,
            Error::NotTransitive { .. }
            | Error::InvalidSpecialDarts(_)
            | Error::TooManyQubits { .. }
            | Error::DegreeMismatch { .. }
            | Error::InvalidPermutation(_) => ExitStatus::ValidationError,
            Error::CommutationFailure(_) | Error::DimensionMismatch(_) => ExitStatus::InternalError,
        };
        let message = match &e {
            Error::Parse { .. } => format!("{origin}:{e}"),
            Error::TooManyQubits { .. } => {
                format!("{origin}: {e} (pass --allow-large to search anyway)")
            }
            _ => format!("{origin}: {e}"),
        };
        Failure { status, message }
    }
}

struct Loaded {
    origin: String,
    hypermap: Hypermap,
    special: Option<Vec<usize>>,
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    let (origin, text) = match (&input.inline, &input.file) {
        (Some(inline), _) => ("<inline>".to_string(), inline.replace(';', "\n")),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let text = std::io::read_to_string(std::io::stdin()).map_err(|e| Failure {
                status: ExitStatus::ParseError,
                message: format!("<stdin>: {e}"),
            })?;
            ("<stdin>".to_string(), text)
        }
        (None, Some(path)) => {
            let origin = path.display().to_string();
            let text = std::fs::read_to_string(path).map_err(|e| Failure {
                status: ExitStatus::ParseError,
                message: format!("{origin}: {e}"),
            })?;
            (origin, text)
        }
        (None, None) => {
            return Err(Failure {
                status: ExitStatus::ParseError,
                message: "no hypermap given".into(),
            })
        }
    };
    let file = parse_hypermap_file(&text).map_err(|e| Failure::core(&origin, e))?;
    Ok(Loaded {
        origin,
        hypermap: file.hypermap,
        special: file.special,
    })
}

/// Explicit `--special` beats the file's `special` line, which beats the orbit minima.
fn resolve_special(
    loaded: &Loaded,
    flag: Option<&str>,
    kind: SpecialKind,
) -> Result<SpecialDarts, Failure> {
    let h = &loaded.hypermap;
    let darts = match flag {
        Some(text) => {
            let mut darts = Vec::new();
            for token in text
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                match token.parse::<usize>() {
                    Ok(label) if label >= 1 => darts.push(label - 1),
                    _ => {
                        return Err(Failure {
                            status: ExitStatus::ParseError,
                            message: format!("--special: invalid dart label {token:?}"),
                        })
                    }
                }
            }
            darts
        }
        None => match &loaded.special {
            Some(darts) => darts.clone(),
            None => return Ok(h.default_special_darts(kind)),
        },
    };
    SpecialDarts::new(h, &darts, kind).map_err(|e| Failure::core(&loaded.origin, e))
}

fn labels(darts: &[usize]) -> String {
    darts
        .iter()
        .map(|d| (d + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// All orbits, fixed points included, e.g. `(1 8)(2)`.
fn orbit_list(c: &CycleDecomposition) -> String {
    c.iter()
        .map(|cycle| format!("({})", labels(cycle)))
        .collect()
}

fn render_info(h: &Hypermap) -> String {
    let mut out = String::new();
    let count =
        |n: usize, one: &str, many: &str| format!("{n} {}", if n == 1 { one } else { many });
    let _ = writeln!(out, "darts: {}", h.degree());
    let _ = writeln!(out, "alpha: {}", h.alpha());
    let _ = writeln!(out, "sigma: {}", h.sigma());
    let _ = writeln!(
        out,
        "{}: {}",
        count(h.vertices().len(), "vertex", "vertices"),
        orbit_list(h.vertices())
    );
    let _ = writeln!(
        out,
        "{}: {}",
        count(h.edges().len(), "edge", "edges"),
        orbit_list(h.edges())
    );
    let _ = writeln!(
        out,
        "{}: {}",
        count(h.faces().len(), "face", "faces"),
        orbit_list(h.faces())
    );
    let _ = writeln!(out, "euler characteristic: {}", h.euler_characteristic());
    let _ = writeln!(out, "genus: {}", h.genus());
    out
}

fn render_matrix(out: &mut String, name: &str, rows: usize, cols: usize, lines: &[String]) {
    let _ = writeln!(out, "{name} ({rows}x{cols}):");
    for line in lines {
        let _ = writeln!(out, "{line}");
    }
}

fn render_code(c: &CssCode, special: Option<&SpecialDarts>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "code: {}", c.kind.as_str());
    if let Some(s) = special {
        let _ = writeln!(out, "special darts: {}", labels(s.darts()));
    }
    let _ = writeln!(out, "qubits: {}", labels(&c.qubit_labels));
    let _ = writeln!(out, "n={}", c.n);
    let _ = writeln!(out, "k={}", c.k);
    render_matrix(
        &mut out,
        "H_X",
        c.hx.rows(),
        c.hx.cols(),
        &c.hx.to_row_strings(),
    );
    render_matrix(
        &mut out,
        "H_Z",
        c.hz.rows(),
        c.hz.cols(),
        &c.hz.to_row_strings(),
    );
    let _ = writeln!(out, "generators:");
    for line in stabilizer_strings(c) {
        let _ = writeln!(out, "{line}");
    }
    out
}

fn render_weight(name: &str, w: LogicalWeight, max_weight: usize) -> String {
    match w {
        LogicalWeight::Exact(v) => format!("{name}={v}"),
        LogicalWeight::AtLeast(v) => {
            format!("{name}>={v} (bound: no logical of weight <= {max_weight})")
        }
    }
}

fn render_distance(c: &CssCode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "code: {}", c.kind.as_str());
    let _ = writeln!(out, "n={}", c.n);
    let _ = writeln!(out, "k={}", c.k);
    match &c.distance {
        None | Some(Distance::NoLogical) => {
            let _ = writeln!(out, "d: undefined (no logical qubits)");
        }
        Some(Distance::Report(r)) => {
            let support = |pauli: char, w: &Option<Vec<usize>>| match w {
                Some(q) => q
                    .iter()
                    .map(|&i| format!("{pauli}{}", c.qubit_labels[i] + 1))
                    .collect::<Vec<_>>()
                    .join(" "),
                None => "none within budget".into(),
            };
            let _ = writeln!(out, "{}", render_weight("d_X", r.d_x, r.max_weight));
            let _ = writeln!(out, "  witness: {}", support('X', &r.x_witness));
            let _ = writeln!(out, "{}", render_weight("d_Z", r.d_z, r.max_weight));
            let _ = writeln!(out, "  witness: {}", support('Z', &r.z_witness));
            let _ = writeln!(out, "{}", render_weight("d", r.d(), r.max_weight));
        }
    }
    out
}

fn transformed(
    input: &Input,
    format: OutputFormat,
    f: impl Fn(&Hypermap) -> Hypermap,
) -> Result<String, Failure> {
    let h = f(&load(input)?.hypermap);
    Ok(match format {
        OutputFormat::Text => render_hypermap_file(&h, None),
        OutputFormat::Json => export_json(&Artifact::Hypermap(h)),
    })
}

fn build_css(
    loaded: &Loaded,
    kind: CodeKind,
    special: Option<&str>,
) -> Result<(CssCode, Option<SpecialDarts>), Failure> {
    let h = &loaded.hypermap;
    let special = match kind.special_kind() {
        Some(sk) => Some(resolve_special(loaded, special, sk)?),
        None => None,
    };
    let code = build_code(h, kind, special.as_ref())
        .and_then(|q| assemble(&q))
        .map_err(|e| Failure::core(&loaded.origin, e))?;
    Ok((code, special))
}

fn dispatch(command: &Command) -> Result<(ExitStatus, String), Failure> {
    let ok = |text: String| Ok((ExitStatus::Success, text));
    match command {
        Command::Info { input, format } => {
            let h = load(input)?.hypermap;
            ok(match format {
                OutputFormat::Text => render_info(&h),
                OutputFormat::Json => export_json(&Artifact::Hypermap(h)),
            })
        }
        Command::Dual { input, format } => ok(transformed(input, *format, Hypermap::dual)?),
        Command::TriDual { input, format } => {
            ok(transformed(input, *format, Hypermap::triangle_dual)?)
        }
        Command::Contrary { input, format } => ok(transformed(input, *format, Hypermap::contrary)?),
        Command::Code {
            input,
            kind,
            special,
            format,
        } => {
            let loaded = load(input)?;
            let (code, special) = build_css(&loaded, (*kind).into(), special.as_deref())?;
            ok(match format {
                OutputFormat::Text => render_code(&code, special.as_ref()),
                OutputFormat::Json => export_json(&Artifact::Code(code)),
            })
        }
        Command::Reduce {
            input,
            special,
            format,
        } => {
            let loaded = load(input)?;
            let s = resolve_special(&loaded, special.as_deref(), SpecialKind::PerEdge)?;
            let complex = reduce_to_surface(&loaded.hypermap, &s)
                .map_err(|e| Failure::core(&loaded.origin, e))?;
            let report = validate_surface(&complex);
            let status = if report.passed() {
                ExitStatus::Success
            } else {
                ExitStatus::InternalError
            };
            let text = match format {
                OutputFormat::Json => export_json(&Artifact::Complex(complex)),
                OutputFormat::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "special darts: {}", labels(s.darts()));
                    let _ = writeln!(out, "0-cells: {}", complex.zero_cells.join(" "));
                    let _ = writeln!(out, "1-cells: {}", labels(&complex.one_cells));
                    let _ = writeln!(out, "2-cells: {}", complex.two_cells.join(" "));
                    let b1 = complex.incidence10.to_row_strings();
                    render_matrix(
                        &mut out,
                        "boundary1",
                        b1.len(),
                        complex.one_cells.len(),
                        &b1,
                    );
                    let b2 = complex.boundary2().transpose().to_row_strings();
                    render_matrix(
                        &mut out,
                        "boundary2^T",
                        b2.len(),
                        complex.one_cells.len(),
                        &b2,
                    );
                    let _ = writeln!(out, "H_1 dimension: {}", complex.homology_dimension());
                    let _ = writeln!(out, "{report}");
                    out
                }
            };
            Ok((status, text))
        }
        Command::Distance {
            input,
            kind,
            special,
            max_weight,
            allow_large,
            format,
        } => {
            let loaded = load(input)?;
            let (mut code, _) = build_css(&loaded, (*kind).into(), special.as_deref())?;
            let budget = DistanceBudget {
                max_weight: *max_weight,
                max_qubits: if *allow_large {
                    usize::MAX
                } else {
                    DEFAULT_MAX_QUBITS
                },
            };
            code.distance =
                Some(distance(&code, budget).map_err(|e| Failure::core(&loaded.origin, e))?);
            ok(match format {
                OutputFormat::Text => render_distance(&code),
                OutputFormat::Json => export_json(&Artifact::Code(code)),
            })
        }
        Command::Verify {
            trials,
            max_darts,
            seed,
        } => {
            let report = verify::run(VerifyConfig {
                trials: *trials,
                max_darts: *max_darts as usize,
                seed: *seed,
            });
            let status = if report.all_passed() {
                ExitStatus::Success
            } else {
                ExitStatus::InternalError
            };
            Ok((status, format!("{report}\n")))
        }
        Command::Random { darts, seed } => ok(render_hypermap_file(
            &Hypermap::random(*darts as usize, *seed),
            None,
        )),
        Command::Export { input, format } => {
            let h = load(input)?.hypermap;
            ok(match format {
                ExportFormat::Dot => export_walsh_dot(&h),
                ExportFormat::Json => export_json(&Artifact::Hypermap(h)),
            })
        }
    }
}

/// Runs one command. Output is a pure function of the request and the input file.
pub fn run(request: &CommandRequest) -> Outcome {
    match dispatch(&request.command) {
        Ok((status, stdout)) => Outcome {
            status,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            status: f.status,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str =
        "darts: 8;alpha: (4 3 2 1)(5 7 8 6);sigma: (7 1 6 3)(5 2 8 4);special: 2 5";

    fn run_args(args: &[&str]) -> Outcome {
        let request = CommandRequest::try_parse_from(
            std::iter::once("hypercode").chain(args.iter().copied()),
        )
        .unwrap();
        run(&request)
    }

    #[test]
    fn code_from_inline_input() {
        let out = run_args(&["code", "--kind", "face", "--inline", WORKED]);
        assert_eq!(out.status, ExitStatus::Success, "{}", out.stderr);
        assert!(out.stdout.contains("n=6\nk=2\n"));
        assert!(out.stdout.contains("special darts: 2 5\n"));
    }

    #[test]
    fn special_precedence() {
        // Default minima for the worked example are 1 and 5.
        let no_line = WORKED.trim_end_matches(";special: 2 5");
        let out = run_args(&["code", "--kind", "face", "--inline", no_line]);
        assert!(out.stdout.contains("special darts: 1 5\n"));
        let out = run_args(&[
            "code",
            "--kind",
            "face",
            "--special",
            "3 6",
            "--inline",
            WORKED,
        ]);
        assert!(
            out.stdout.contains("special darts: 3 6\n"),
            "{}",
            out.stdout
        );
    }

    #[test]
    fn exit_codes() {
        let out = run_args(&[
            "code",
            "--kind",
            "face",
            "--special",
            "1 2",
            "--inline",
            WORKED,
        ]);
        assert_eq!(out.status, ExitStatus::ValidationError);
        assert!(out.stderr.contains("same edge"));
        let out = run_args(&[
            "code",
            "--kind",
            "face",
            "--special",
            "x",
            "--inline",
            WORKED,
        ]);
        assert_eq!(out.status, ExitStatus::ParseError);
        let out = run_args(&["info", "--inline", "darts: 2;alpha: ();sigma: ()"]);
        assert_eq!(out.status, ExitStatus::ValidationError);
        let out = run_args(&["info", "--inline", "darts: 2;alpha: (1 3);sigma: ()"]);
        assert_eq!(out.status, ExitStatus::ParseError);
        assert!(
            out.stderr.starts_with("error: <inline>:2:"),
            "{}",
            out.stderr
        );
    }

    #[test]
    fn distance_refuses_large_codes() {
        let big = render_hypermap_file(&Hypermap::random(40, 1), None).replace('\n', ";");
        let out = run_args(&["distance", "--kind", "full", "--inline", &big]);
        assert_eq!(out.status, ExitStatus::ValidationError);
        assert!(out.stderr.contains("--allow-large"));
        let out = run_args(&[
            "distance",
            "--kind",
            "full",
            "--max-weight",
            "1",
            "--allow-large",
            "--inline",
            &big,
        ]);
        assert_eq!(out.status, ExitStatus::Success, "{}", out.stderr);
    }
}
