//! The `gridcarve` command line.
//!
//! Exit codes: 0 success, 2 unparsable input, 3 disconnected graph,
//! 4 failed verification, 64 bad arguments, 74 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::bench;
use crate::cover::{compute_rcl_cover_with, PipelineOptions, RclCover};
use crate::error::{Error, Result};
use crate::gen::{self, Shape};
use crate::grid::{GridGraph, VertexCoord};
use crate::io::{self, PathDecompDocument};
use crate::pathdecomp::{build_path_decomposition, PathDecomposition};
use crate::svg;
use crate::verify::{self, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_CONNECTED: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;
pub const EXIT_BAD_ARGS: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Parser, Debug)]
#[command(name = "gridcarve", version, about = "Nice rectangle covers and path decompositions of grid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a random connected grid graph.
    Gen {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of vertices.
        #[arg(long, short)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Shape::Blob)]
        shape: Shape,
        /// Output file (stdout if absent).
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Compute a nice RCL-cover.
    Decompose {
        input: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Run every verifier and fail on any violation.
        #[arg(long)]
        verify: bool,
        /// Also draw the cover as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Decompose each connected component separately.
        #[arg(long)]
        per_component: bool,
    },
    /// Compute a path decomposition via the cover.
    Pathdecomp {
        input: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Check validity and the 11 sqrt(n) bag-size bound.
        #[arg(long)]
        verify: bool,
    },
    /// Check a cover and path decomposition; missing ones are computed.
    Verify {
        input: PathBuf,
        #[arg(long)]
        cover: Option<PathBuf>,
        #[arg(long)]
        pathdecomp: Option<PathBuf>,
        /// Report file (stdout if absent).
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Time the pipeline on seeded blobs and print CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [100_000usize, 200_000, 400_000, 800_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

enum Failure {
    Error(Error),
    Verification(VerificationReport),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

/// Runs the command line given in `args` (including the program name) and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_BAD_ARGS } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification(report)) => {
            eprintln!("verification failed:");
            for v in &report.violations {
                eprintln!("  {} [{}] {}", v.condition, v.index.map_or("-".into(), |i| i.to_string()), v.detail);
            }
            EXIT_VERIFY_FAILED
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::EmptyInput | Error::Json(_) => EXIT_PARSE,
        Error::NotConnected => EXIT_NOT_CONNECTED,
        Error::InvalidCover(_) => EXIT_VERIFY_FAILED,
        Error::BadArgs(_) | Error::IndexOutOfRange { .. } | Error::NotAVertex(_) | Error::NotASubset(_) => {
            EXIT_BAD_ARGS
        }
        Error::CursorExhausted(_) => EXIT_VERIFY_FAILED,
        Error::Io(_) => EXIT_IO,
    }
}

fn execute(command: Command) -> std::result::Result<(), Failure> {
    match command {
        Command::Gen { seed, n, shape, out } => {
            let g = gen::generate(shape, n, seed)?;
            emit(out.as_deref(), &io::grid_to_string(&g))?;
        }
        Command::Decompose {
            input,
            out,
            verify,
            svg: svg_path,
            per_component,
        } => {
            let g = io::read_grid(&input)?;
            if per_component {
                return decompose_components(&g, out.as_deref(), verify);
            }
            let cover = cover_of(&g)?;
            if verify {
                let pd = build_path_decomposition(&g, &cover)?;
                check(verify::verify_all(&g, &cover, Some(&pd)))?;
            }
            if let Some(path) = svg_path {
                fs::write(path, svg::render(&g, &cover)).map_err(Error::from)?;
            }
            emit(out.as_deref(), &io::to_json(&cover)?)?;
        }
        Command::Pathdecomp { input, out, verify } => {
            let g = io::read_grid(&input)?;
            let cover = cover_of(&g)?;
            let pd = build_path_decomposition(&g, &cover)?;
            if verify {
                let mut report = verify::verify_path_decomposition(&g, &pd);
                report.merge(verify::verify_width_bound(&g, &pd));
                check(report)?;
            }
            emit(out.as_deref(), &io::to_json(&PathDecompDocument::from(&pd))?)?;
        }
        Command::Verify {
            input,
            cover,
            pathdecomp,
            out,
        } => {
            let g = io::read_grid(&input)?;
            let cover: RclCover = match cover {
                Some(path) => io::read_json(path)?,
                None => cover_of(&g)?,
            };
            let pd: PathDecomposition = match pathdecomp {
                Some(path) => io::read_json::<PathDecompDocument>(path)?.into(),
                None => build_path_decomposition(&g, &cover)?,
            };
            let report = verify::verify_all(&g, &cover, Some(&pd));
            emit(out.as_deref(), &io::to_json(&report)?)?;
            if !report.ok {
                return Err(Failure::Verification(report));
            }
        }
        Command::Bench { sizes, repeats, seed } => {
            let rows = bench::run(&sizes, repeats, seed)?;
            print!("{}", bench::to_csv(&rows));
        }
    }
    Ok(())
}

fn cover_of(g: &GridGraph) -> Result<RclCover> {
    compute_rcl_cover_with(g, PipelineOptions::from_env(), ()).map(|(cover, _)| cover)
}

fn check(report: VerificationReport) -> std::result::Result<(), Failure> {
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Verification(report))
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct ComponentCover {
    /// Position of the component's (1,1) in the input's normalized frame.
    origin: VertexCoord,
    cover: RclCover,
}

#[derive(Serialize)]
struct ComponentsDocument {
    components: Vec<ComponentCover>,
}

fn decompose_components(g: &GridGraph, out: Option<&Path>, verify: bool) -> std::result::Result<(), Failure> {
    let mut components = Vec::new();
    for comp in g.components() {
        let part = GridGraph::normalize(&comp)?;
        let cover = cover_of(&part)?;
        if verify {
            let pd = build_path_decomposition(&part, &cover)?;
            check(verify::verify_all(&part, &cover, Some(&pd)))?;
        }
        let origin = VertexCoord::new(
            comp.iter().map(|v| v.row).min().unwrap_or(1),
            comp.iter().map(|v| v.col).min().unwrap_or(1),
        );
        components.push(ComponentCover { origin, cover });
    }
    emit(out, &io::to_json(&ComponentsDocument { components })?)?;
    Ok(())
}
