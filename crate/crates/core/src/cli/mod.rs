//! Command line front end.
//!
//! Each verb reads JSON documents (see [`docs`]), runs one engine operation
//! and prints either a human-readable report or, with `--format data`, a
//! deterministic JSON document. Exit codes: 0 on success, 1 for unreadable
//! or malformed input, 2 when the input is well formed but a precondition of
//! the operation fails.

pub mod docs;
mod verbs;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::complex::Perversity;
use crate::error::Error;

#[derive(Parser, Debug)]
#[command(
    name = "ihom",
    version,
    about = "Exact intersection homology of stratified complexes"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Data,
}

#[derive(Args, Debug, Clone)]
pub struct PerversityArg {
    /// zero | middle | upper-middle | log | top | k=<int> | custom=<c:v,...>
    #[arg(short, long, default_value = "middle", value_parser = parse_perversity)]
    pub perversity: Perversity,
}

fn parse_perversity(s: &str) -> Result<Perversity, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check purity, the codim-2 condition and the pseudomanifold condition.
    Validate { complex: PathBuf },
    /// Intersection homology Betti numbers.
    Betti {
        complex: PathBuf,
        #[command(flatten)]
        perversity: PerversityArg,
        /// Compute relative to this subcomplex (matched by vertex names).
        #[arg(long)]
        relative: Option<PathBuf>,
    },
    /// Cone on a complex.
    Cone {
        complex: PathBuf,
        #[arg(long, default_value = "*")]
        apex: String,
    },
    /// Suspension of a complex.
    Suspend {
        complex: PathBuf,
        #[arg(long, default_value = "N")]
        north: String,
        #[arg(long, default_value = "S")]
        south: String,
    },
    /// Link of a vertex with the induced filtration.
    Link {
        complex: PathBuf,
        #[arg(long)]
        vertex: String,
    },
    /// Link map IH(ℓ_X) → IH(ℓ_Y) at a singular vertex of X ⊂ Y.
    Linkmap {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        perversity: PerversityArg,
    },
    /// Cone surgery on a cycle of X ⊂ Y at an apex.
    Surgery {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        apex: String,
        /// Chain document on X; defaults to the fundamental class of X.
        #[arg(long)]
        chain: Option<PathBuf>,
        /// Apply one barycentric subdivision first.
        #[arg(long)]
        subdivide: bool,
        #[command(flatten)]
        perversity: PerversityArg,
    },
    /// Lift a cycle from one perversity to a smaller one.
    Lift {
        complex: PathBuf,
        #[arg(long)]
        chain: PathBuf,
        #[arg(long, default_value = "log", value_parser = parse_perversity)]
        from: Perversity,
        #[arg(long, default_value = "middle", value_parser = parse_perversity)]
        to: Perversity,
    },
    /// Classes of a flag X⁰ ⊃ X¹ ⊃ ... in IH^m(X⁰).
    Flag {
        #[arg(required = true)]
        complexes: Vec<PathBuf>,
    },
    /// Cone formula: engine against formula for a link, or the formula alone.
    ConeFormula {
        #[arg(required_unless_present = "dims")]
        complex: Option<PathBuf>,
        /// Link dimensions, e.g. 1,2,1.
        #[arg(
            long,
            value_delimiter = ',',
            requires = "cone_dim",
            conflicts_with = "complex"
        )]
        dims: Option<Vec<usize>>,
        #[arg(long)]
        cone_dim: Option<usize>,
    },
    /// Intersection homology of projective cones from a pair document.
    Table { pair: PathBuf },
    /// Link homology of a cone over a projective base.
    Gysin { base: PathBuf },
    /// Gysin-sequence chase showing a link map vanishes.
    Chase {
        pair: PathBuf,
        /// Degree of the link map; defaults to n.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Hard Lefschetz from vanishing of the link map.
    Hl { input: PathBuf },
    /// Chern–Mather classes from polar classes.
    Chern { polar: PathBuf },
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A successful report in both renderings.
pub(crate) struct Report {
    pub human: String,
    pub data: Value,
}

pub fn run(cli: &Cli) -> Outcome {
    match verbs::dispatch(&cli.command) {
        Ok(report) => Outcome {
            code: 0,
            stdout: match cli.format {
                Format::Human => report.human,
                Format::Data => {
                    let mut s =
                        serde_json::to_string_pretty(&report.data).expect("values serialize");
                    s.push('\n');
                    s
                }
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if e.is_precondition() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Parses arguments and runs. Argument errors exit with 1; `--help` and
/// `--version` with 0.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}
