use std::fs;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anneid::corpus::builtin::{builtin, random};
use anneid::corpus::search::{search_counterexample_strict_inclusion, DEFAULT_MAX_CANDIDATES};
use anneid::corpus::{verify_corpus, CorpusInstance, Report, Status};
use anneid::ideals::{HomSubset, Lattices};
use anneid::radicals::RadicalReport;
use anneid::{AnneidDocument, Error, FiniteAnneid, Limits};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BOUNDS: u8 = 3;

/// Finite anneids: axioms, ideal lattices, Brown–McCoy radicals and
/// theorem verification.
#[derive(Debug, Parser)]
#[command(name = "anneid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest anneid accepted, zero included.
    #[arg(long, global = true)]
    max_elements: Option<NonZeroUsize>,
    /// Largest linearization size.
    #[arg(long, global = true)]
    max_lin: Option<NonZeroUsize>,
    /// Largest ideal lattice enumerated.
    #[arg(long, global = true)]
    max_ideals: Option<NonZeroUsize>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Progress on standard error.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// JSON.
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Generator {
    /// Structured instances first, then random ones.
    Builtin,
    Random,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an anneid document against the axioms.
    Validate { path: PathBuf },
    /// List the right and two-sided ideals.
    Ideals { path: PathBuf },
    /// Compute G(A), G_l(A), J(A), G(Ā) and every G(A(ε)).
    Radicals { path: PathBuf },
    /// Run the theorem suite over documents or a generated corpus.
    Verify {
        paths: Vec<PathBuf>,
        #[arg(long = "gen", value_enum, conflicts_with = "paths")]
        generator: Option<Generator>,
        #[arg(long, default_value_t = 50, requires = "generator")]
        count: usize,
        /// Record per-verdict wall-clock times (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Search small C2-graded anneids for G(A(e)) ⊊ G(A) ∩ A(e).
    SearchCounterexample {
        /// Largest |A|, zero included.
        #[arg(long, default_value_t = 6)]
        bound: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::MalformedTables(_) | Error::InvalidInput(_) => EXIT_PARSE,
            e if e.is_bounds() => EXIT_BOUNDS,
            _ => EXIT_FAIL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Output text plus the exit status it carries.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_elements: self.max_elements.map_or(d.max_elements, NonZeroUsize::get),
            max_lin: self.max_lin.map_or(d.max_lin, NonZeroUsize::get),
            max_ideals: self.max_ideals.map_or(d.max_ideals, NonZeroUsize::get),
        }
    }

    fn render<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> String {
        match self.format {
            Format::Text => text(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(value).expect("output serializes");
                s.push('\n');
                s
            }
        }
    }
}

fn read_document(path: &Path) -> Result<AnneidDocument, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })?;
    AnneidDocument::from_json(&text).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })
}

fn load(path: &Path, limits: Limits) -> Result<FiniteAnneid, Failure> {
    let a = FiniteAnneid::validate(read_document(path)?).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })?;
    if a.len() > limits.max_elements {
        return Err(Error::SizeExceeded {
            actual: a.len(),
            limit: limits.max_elements,
        }
        .into());
    }
    Ok(a)
}

#[derive(Serialize)]
struct ValidationReport {
    path: String,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    blocks: Option<usize>,
    violations: Vec<String>,
}

fn cmd_validate(cli: &Cli, path: &Path) -> Result<Outcome, Failure> {
    let doc = read_document(path)?;
    let shown = path.display().to_string();
    let report = match FiniteAnneid::validate(doc) {
        Ok(a) => ValidationReport {
            path: shown,
            valid: true,
            name: Some(a.name().to_string()),
            elements: Some(a.len()),
            blocks: Some(a.block_count()),
            violations: Vec::new(),
        },
        Err(Error::AxiomViolation(vs)) => ValidationReport {
            path: shown,
            valid: false,
            name: None,
            elements: None,
            blocks: None,
            violations: vs.iter().map(ToString::to_string).collect(),
        },
        Err(e) => return Err(e.into()),
    };
    let text = cli.render(&report, || {
        if report.valid {
            format!(
                "{}: valid anneid {}, {} elements, {} blocks\n",
                report.path,
                report.name.as_deref().unwrap_or_default(),
                report.elements.unwrap_or_default(),
                report.blocks.unwrap_or_default()
            )
        } else {
            let mut s = format!(
                "{}: {} axiom violation(s)\n",
                report.path,
                report.violations.len()
            );
            for v in &report.violations {
                s.push_str(&format!("  {v}\n"));
            }
            s
        }
    });
    Ok(Outcome {
        text,
        code: if report.valid { 0 } else { EXIT_FAIL },
    })
}

#[derive(Serialize)]
struct IdealReport {
    name: String,
    right: Vec<Vec<String>>,
    two_sided: Vec<Vec<String>>,
    maximal_right: Vec<Vec<String>>,
    maximal_two_sided: Vec<Vec<String>>,
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

fn cmd_ideals(cli: &Cli, path: &Path) -> Result<Outcome, Failure> {
    let limits = cli.limits();
    let a = load(path, limits)?;
    let lat = Lattices::compute(&a, limits.max_ideals)?;
    let render = |xs: &[HomSubset]| xs.iter().map(|i| i.render(&a)).collect::<Vec<_>>();
    let report = IdealReport {
        name: a.name().to_string(),
        right: render(&lat.right),
        two_sided: render(&lat.two_sided),
        maximal_right: render(&lat.maximal_right),
        maximal_two_sided: render(&lat.maximal_two_sided),
    };
    let text = cli.render(&report, || {
        let mut s = format!("{}\n", report.name);
        for (title, list) in [
            ("right ideals", &report.right),
            ("two-sided ideals", &report.two_sided),
            ("maximal right ideals", &report.maximal_right),
            ("maximal two-sided ideals", &report.maximal_two_sided),
        ] {
            s.push_str(&format!("{title} ({}):\n", list.len()));
            for i in list {
                s.push_str(&format!("  {}\n", braces(i)));
            }
        }
        s
    });
    Ok(Outcome::ok(text))
}

fn cmd_radicals(cli: &Cli, path: &Path) -> Result<Outcome, Failure> {
    let limits = cli.limits();
    let a = load(path, limits)?;
    let r = RadicalReport::compute(&a, limits)?;
    let text = cli.render(&r, || {
        let f = &r.flags;
        let mut s = format!(
            "{}: {} elements, |Ā| = {}\nregular: {}, Δ assumption: {}, strongly graded: {}, unity: {}, Ā unity: {}\n",
            r.name,
            r.elements,
            r.linearization_size,
            f.regular,
            f.delta_assumption,
            f.strongly_graded,
            f.anneid_unity,
            f.linearization_unity
        );
        s.push_str(&format!("G(A) = {}\n", braces(&r.graded)));
        s.push_str(&format!("G_l(A) = {}\n", braces(&r.large_graded)));
        match &r.jacobson {
            Some(j) => s.push_str(&format!("J(A) = {}\n", braces(j))),
            None => s.push_str("J(A) undefined (not regular)\n"),
        }
        s.push_str(&format!("G(Ā) = {}\n", braces(&r.linearization)));
        for c in &r.components {
            s.push_str(&format!("G(A({})) = {}\n", c.grade, braces(&c.radical)));
        }
        s
    });
    Ok(Outcome::ok(text))
}

fn cmd_verify(
    cli: &Cli,
    paths: &[PathBuf],
    generator: Option<Generator>,
    count: usize,
    timings: bool,
) -> Result<Outcome, Failure> {
    let limits = cli.limits();
    let (instances, label) = match generator {
        Some(Generator::Builtin) => (builtin(count, cli.seed)?, format!("builtin:count={count}")),
        Some(Generator::Random) => (random(count, cli.seed)?, format!("random:count={count}")),
        None => {
            let mut out = Vec::new();
            for p in paths {
                let a = FiniteAnneid::validate(read_document(p)?).map_err(|e| {
                    let mut f = Failure::from(e);
                    f.message = format!("{}: {}", p.display(), f.message);
                    f
                })?;
                out.push(CorpusInstance::new(a, format!("file:{}", p.display())));
            }
            (out, "files".to_string())
        }
    };
    if cli.verbose {
        eprintln!("verifying {} instance(s)", instances.len());
    }
    let report = Report::new(cli.seed, label, verify_corpus(&instances, limits, timings));
    if cli.verbose {
        for i in &report.instances {
            eprintln!("{}: {} fails", i.name, i.fails().count());
        }
    }
    let bounded =
        report.instances.iter().flat_map(|i| &i.verdicts).any(
            |v| matches!(&v.status, Status::Skipped { reason } if reason.starts_with("bounds")),
        );
    let code = if report.has_failures() {
        EXIT_FAIL
    } else if bounded {
        EXIT_BOUNDS
    } else {
        0
    };
    let text = cli.render(&report, || report.render_text());
    Ok(Outcome { text, code })
}

fn cmd_search(cli: &Cli, bound: usize, max_candidates: usize) -> Result<Outcome, Failure> {
    let out = search_counterexample_strict_inclusion(bound, max_candidates);
    let text = cli.render(&out, || {
        let mut s = format!(
            "bound {}: {} candidates, {} valid anneids, {}\n",
            out.bound,
            out.candidates,
            out.valid,
            if out.complete {
                "complete"
            } else {
                "incomplete (candidate budget reached)"
            }
        );
        match &out.finding {
            None => s.push_str("none found in bounds\n"),
            Some(f) => {
                s.push_str(&format!("finding: {}\n", f.anneid.name));
                s.push_str(&format!("  G(A(e)) = {}\n", braces(&f.component_radical)));
                s.push_str(&format!("  G(A) ∩ A(e) = {}\n", braces(&f.intersection)));
                s.push_str(&f.anneid.to_json());
                s.push('\n');
            }
        }
        s
    });
    Ok(Outcome::ok(text))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Validate { path } => cmd_validate(cli, path),
        Command::Ideals { path } => cmd_ideals(cli, path),
        Command::Radicals { path } => cmd_radicals(cli, path),
        Command::Verify {
            paths,
            generator,
            count,
            timings,
        } => cmd_verify(cli, paths, *generator, *count, *timings),
        Command::SearchCounterexample {
            bound,
            max_candidates,
        } => cmd_search(cli, *bound, *max_candidates),
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(p) => fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_FAIL);
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
