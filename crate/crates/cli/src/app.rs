use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;

use crate::emit::{emit, emit_machine, emit_text};
use crate::error::CliError;
use crate::input::{expand_preset, Format, Options, PresetName, ProblemInput, Section};
use crate::report::{run_report, Report};

/// Check condition (S) for an elliptic element of a semisimple Lie algebra
/// and print the grading, chambers, Kostant cells and verdict.
#[derive(Debug, Parser)]
#[command(name = "elliptic-weyl", version)]
pub struct Args {
    /// Root system type, e.g. `G2` or `A1+B3`.
    #[arg(long = "type", value_name = "TYPE", conflicts_with_all = ["preset", "input", "input_dir"])]
    pub root_type: Option<String>,

    /// Values `α_i(-iT)` on the simple roots, comma separated (`p/q` allowed).
    #[arg(long, allow_hyphen_values = true, requires = "root_type")]
    pub t: Option<String>,

    /// Coloring values `α_i(Z)`, comma separated; defaults to all zeros.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,

    #[arg(long, value_enum, conflicts_with_all = ["input", "input_dir"])]
    pub preset: Option<PresetName>,

    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub h: Option<usize>,

    /// JSON problem document.
    #[arg(long, value_name = "PATH", conflicts_with = "input_dir")]
    pub input: Option<PathBuf>,

    /// Run every `*.json` problem document in a directory.
    #[arg(long, value_name = "DIR")]
    pub input_dir: Option<PathBuf>,

    /// Write output here instead of stdout (a directory with `--input-dir`).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Upper bound on the Weyl group order.
    #[arg(long, env = "ELLIPTIC_WEYL_CAP")]
    pub cap: Option<u128>,

    /// Text sections to print, comma separated.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub sections: Option<Vec<Section>>,

    /// Run the invariant checks on the instance; exit 4 on any failure.
    #[arg(long)]
    pub verify: bool,
}

impl Args {
    /// Command-line options layered over those of `base`.
    fn options(&self, base: &Options) -> Options {
        let mut o = base.clone();
        if let Some(cap) = self.cap {
            o.cap = cap;
        }
        if let Some(f) = self.format {
            o.format = f;
        }
        if let Some(s) = &self.sections {
            o.sections = s.clone();
        }
        o.verify |= self.verify;
        if o.verify && !o.sections.contains(&Section::Checks) {
            o.sections.push(Section::Checks);
        }
        o
    }

    /// The single problem described by `--type`, `--preset` or `--input`.
    pub fn problem(&self) -> Result<ProblemInput, CliError> {
        let base = if let Some(ty) = &self.root_type {
            let t = self
                .t
                .as_deref()
                .ok_or_else(|| CliError::input("t", "required with --type"))?;
            ProblemInput::parse(ty, t, self.z.as_deref())?
        } else if let Some(name) = self.preset {
            expand_preset(name, self.p, self.q, self.h)?
        } else if let Some(path) = &self.input {
            ProblemInput::from_path(path)?
        } else {
            return Err(CliError::input(
                "input",
                "one of --type, --preset, --input or --input-dir is required",
            ));
        };
        let options = self.options(&base.options);
        Ok(base.with_options(options))
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn verify_outcome(report: &Report) -> Result<(), CliError> {
    match &report.checks {
        Some(c) if c.failed > 0 => Err(CliError::Verify {
            failed: c.failed,
            total: c.passed + c.failed,
        }),
        _ => Ok(()),
    }
}

/// Runs one invocation; the report is written even when verification fails.
pub fn run(args: &Args) -> Result<(), CliError> {
    if let Some(dir) = &args.input_dir {
        return run_dir(args, dir);
    }
    let input = args.problem()?;
    let report = run_report(&input)?;
    write_out(
        args.out.as_deref(),
        &emit(&report, input.options.format, &input.options.sections),
    )?;
    verify_outcome(&report)
}

fn run_dir(args: &Args, dir: &Path) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if let Some(out) = &args.out {
        std::fs::create_dir_all(out).map_err(|source| CliError::Io {
            path: out.clone(),
            source,
        })?;
    }

    let mut worst: Option<CliError> = None;
    let mut record = |e: CliError| {
        eprintln!("error: {e}");
        if worst.as_ref().is_none_or(|w| e.exit_code() > w.exit_code()) {
            worst = Some(e);
        }
    };
    let mut stdout_text = String::new();
    let mut stdout_docs: Vec<String> = Vec::new();
    for file in &files {
        let name = file.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let outcome = ProblemInput::from_path(file).and_then(|base| {
            let input = base.clone().with_options(args.options(&base.options));
            run_report(&input).map(|r| (input, r))
        });
        let (input, report) = match outcome {
            Ok(x) => x,
            Err(e) => {
                record(CliError::input(name, e));
                continue;
            }
        };
        match &args.out {
            Some(out) => {
                let ext = match input.options.format {
                    Format::Machine => "json",
                    Format::Text => "txt",
                };
                let stem = file.file_stem().unwrap_or_default().to_string_lossy();
                let target = out.join(format!("{stem}.report.{ext}"));
                let text = emit(&report, input.options.format, &input.options.sections);
                if let Err(e) = write_out(Some(&target), &text) {
                    record(e);
                }
            }
            None => match input.options.format {
                Format::Machine => stdout_docs.push(emit_machine(&report).trim_end().to_string()),
                Format::Text => {
                    stdout_text.push_str(&format!("== {name} ==\n"));
                    stdout_text.push_str(&emit_text(&report, &input.options.sections));
                    stdout_text.push('\n');
                }
            },
        }
        if let Err(e) = verify_outcome(&report) {
            record(e);
        }
    }
    if args.out.is_none() {
        if !stdout_docs.is_empty() {
            stdout_text.push_str(&format!("[\n{}\n]\n", stdout_docs.join(",\n")));
        }
        write_out(None, &stdout_text)?;
    }
    worst.map_or(Ok(()), Err)
}
