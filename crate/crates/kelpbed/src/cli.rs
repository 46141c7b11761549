//! The `kelpbed` command line.
//!
//! Exit status is 0 on success, 1 when the input is well formed but
//! violates a precondition (or a check fails), and 2 on malformed input or
//! usage.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use kelpbed_core::bijections::{
    density_to_p, density_to_r, enumerate_density, sigma_bar, star_algebra_signature,
    DecoratedPartition, DensityClass,
};
use kelpbed_core::biword::{biword_to_matrix, matrix_to_biword};
use kelpbed_core::demazure::{star, star_trace, DEFAULT_ORACLE_BOUND};
use kelpbed_core::growth::{
    enumerate_filtered, enumerate_graded, partial_sum_series, series_l11, series_l11_infinity,
    series_max, Norm, DEFAULT_ENUMERATION_CAP,
};
use kelpbed_core::monge::{
    decompose, distance_product, distance_product_monge, monge_violation, phi, phi_inverse,
    SimpleMongeMatrix,
};

use crate::format::{
    parse_biword, parse_biword_matrix, parse_square, write_biword, write_biword_matrix,
    write_square,
};
use crate::verify::{verify, VerifyConfig};
use crate::CliError;

/// Environment variable overriding the brute-force oracle caps.
pub const ORACLE_BOUND_VAR: &str = "KELPBED_ORACLE_BOUND";

#[derive(Debug, Parser)]
#[command(
    name = "kelpbed",
    version,
    about = "Demazure products of biwords and simple Monge matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Demazure product X ⋆ Y.
    Star {
        x: String,
        y: String,
        /// Read and write biwords over [N] instead of matrices.
        #[arg(long, value_name = "N")]
        biword: Option<usize>,
        /// Also list the chosen up–down pairs as `#` comment lines.
        #[arg(long)]
        trace: bool,
    },
    /// Print the simple Monge matrix Φ(X).
    Phi { x: String },
    /// Recover X from a simple Monge matrix Φ(X).
    PhiInv { a: String },
    /// Print the min-plus product of two matrices.
    Dprod {
        a: String,
        b: String,
        /// Use the monotone-argmin product; both inputs must be simple Monge.
        #[arg(long)]
        fast: bool,
    },
    /// Report whether a matrix is Monge and whether it is simple.
    Check { a: String },
    /// Print growth-series coefficients.
    Series(SeriesArgs),
    /// List every simple Monge matrix of a given norm.
    Enumerate(EnumerateArgs),
    /// Map a density matrix to its decorated partitions and signature.
    Biject {
        /// A density matrix file, or with --inverse a partition such as `(2[2], 1[1])`.
        input: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Run seeded randomized checks of the product identities.
    Verify(VerifyArgs),
    /// Split a Monge matrix into its simple part and its sum matrix.
    Decompose { a: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    Max,
    L11,
    /// The L₁,₁ norm with n → ∞.
    L11Inf,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub norm: NormArg,
    /// Matrix size n; ignored for l11-inf.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 32)]
    pub trunc: usize,
    /// Print cumulative counts instead.
    #[arg(long)]
    pub partial_sums: bool,
    /// Print one comma-separated line.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub norm: NormArg,
    /// Matrix size n; ignored for l11-inf.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: u64,
    /// Include every norm up to k.
    #[arg(long)]
    pub at_most: bool,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    /// Largest dimension drawn.
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_entry: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Input files, with `-` meaning standard input (at most once).
struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn read(&mut self, path: &str) -> Result<String, CliError> {
        if path == "-" {
            if self.stdin_used {
                return Err(CliError::Parse("standard input named twice".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(std::io::Error::new(e.kind(), format!("{path}: {e}"))))
        }
    }
}

fn oracle_bound(env: Option<String>) -> Result<usize, CliError> {
    match env {
        None => Ok(DEFAULT_ORACLE_BOUND),
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("{ORACLE_BOUND_VAR}: not a count: `{v}`"))),
    }
}

fn need_n(n: Option<usize>) -> Result<usize, CliError> {
    match n {
        Some(n) if n >= 1 => Ok(n),
        Some(n) => Err(kelpbed_core::Error::InvalidDimension(n).into()),
        None => Err(CliError::Parse("--n is required for this norm".into())),
    }
}

fn simple(a: kelpbed_core::monge::SquareMatrix) -> Result<SimpleMongeMatrix, CliError> {
    Ok(SimpleMongeMatrix::new(a)?)
}

/// Execute one parsed command, returning its standard output.
pub fn execute(
    cli: Cli,
    stdin: &mut dyn Read,
    oracle_env: Option<String>,
) -> Result<String, CliError> {
    let mut inputs = Inputs {
        stdin,
        stdin_used: false,
    };
    let bound = oracle_bound(oracle_env)?;
    let mut out = String::new();
    match cli.command {
        Command::Star {
            x,
            y,
            biword,
            trace,
        } => {
            let (x, y) = match biword {
                Some(n) => (
                    biword_to_matrix(&parse_biword(&inputs.read(&x)?)?, n)?,
                    biword_to_matrix(&parse_biword(&inputs.read(&y)?)?, n)?,
                ),
                None => (
                    parse_biword_matrix(&inputs.read(&x)?)?,
                    parse_biword_matrix(&inputs.read(&y)?)?,
                ),
            };
            let product = if trace {
                let t = star_trace(&x, &y)?;
                for (l, (a, b)) in t.pairs.iter().enumerate() {
                    out.push_str(&format!(
                        "# pair {}: ({},{}) ({},{})\n",
                        l + 1,
                        a.top,
                        a.bottom,
                        b.top,
                        b.bottom
                    ));
                }
                t.fused(x.n())
            } else {
                star(&x, &y)?
            };
            match biword {
                Some(_) => out.push_str(&write_biword(&matrix_to_biword(&product))),
                None => out.push_str(&write_biword_matrix(&product)),
            }
        }
        Command::Phi { x } => {
            let x = parse_biword_matrix(&inputs.read(&x)?)?;
            out.push_str(&write_square(phi(&x).as_matrix()));
        }
        Command::PhiInv { a } => {
            let a = simple(parse_square(&inputs.read(&a)?)?)?;
            out.push_str(&write_biword_matrix(&phi_inverse(&a)));
        }
        Command::Dprod { a, b, fast } => {
            let a = parse_square(&inputs.read(&a)?)?;
            let b = parse_square(&inputs.read(&b)?)?;
            let c = if fast {
                distance_product_monge(&simple(a)?, &simple(b)?)?.into_matrix()
            } else {
                distance_product(&a, &b)?
            };
            out.push_str(&write_square(&c));
        }
        Command::Check { a } => {
            let a = parse_square(&inputs.read(&a)?)?;
            if let Some((i, j)) = monge_violation(&a) {
                return Err(CliError::Failed(format!(
                    "not Monge: the 2x2 block at rows {}-{}, columns {}-{} has \
                     A[i][j] + A[i+1][j+1] > A[i][j+1] + A[i+1][j]",
                    i + 1,
                    i + 2,
                    j + 1,
                    j + 2
                )));
            }
            let simple = SimpleMongeMatrix::new(a);
            out.push_str("monge: yes\n");
            out.push_str(match &simple {
                Ok(_) => "simple: yes\n",
                Err(_) => "simple: no\n",
            });
            if let Err(e) = simple {
                out.push_str(&format!("# {e}\n"));
            }
        }
        Command::Series(args) => {
            let s = match args.norm {
                NormArg::Max => series_max(need_n(args.n)?, args.trunc),
                NormArg::L11 => series_l11(need_n(args.n)?, args.trunc),
                NormArg::L11Inf => series_l11_infinity(args.trunc),
            };
            let s = if args.partial_sums {
                partial_sum_series(&s)
            } else {
                s
            };
            let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
            if args.csv {
                out.push_str(&coeffs.join(","));
                out.push('\n');
            } else {
                for c in coeffs {
                    out.push_str(&c);
                    out.push('\n');
                }
            }
        }
        Command::Enumerate(args) => {
            let blocks: Vec<String> = match args.norm {
                NormArg::L11Inf => {
                    let ks = if args.at_most {
                        0..=args.k
                    } else {
                        args.k..=args.k
                    };
                    let mut all = Vec::new();
                    for k in ks {
                        all.extend(enumerate_density(k, bound as u64)?);
                    }
                    if all.len() > args.cap {
                        return Err(kelpbed_core::Error::CapExceeded { cap: args.cap }.into());
                    }
                    let mut images: Vec<_> = all.iter().map(sigma_bar).collect();
                    images.sort();
                    images.iter().map(write_square).collect()
                }
                norm_arg => {
                    let norm = if norm_arg == NormArg::Max {
                        Norm::Max
                    } else {
                        Norm::L11
                    };
                    let n = need_n(args.n)?;
                    let all = if args.at_most {
                        enumerate_filtered(n, args.k, norm, args.cap)?
                    } else {
                        enumerate_graded(n, args.k, norm, args.cap)?
                    };
                    all.iter().map(|a| write_square(a.as_matrix())).collect()
                }
            };
            out.push_str(&blocks.join("\n"));
        }
        Command::Biject { input, inverse } => {
            let m = if inverse {
                input.parse::<DecoratedPartition>()?.to_density()?
            } else {
                DensityClass::from_matrix(&parse_biword_matrix(&inputs.read(&input)?)?)
            };
            let r = density_to_r(&m);
            out.push_str(&format!("k: {}\n", m.k()));
            out.push_str(&format!("pi: {}\n", density_to_p(&m)));
            out.push_str(&format!("rho: {r}\n"));
            out.push_str(&format!("signature: {}\n", star_algebra_signature(&r)));
            if inverse {
                out.push_str("# density matrix, upper-right block\n");
                out.push_str(&write_biword_matrix(&m.to_block()));
            }
        }
        Command::Verify(args) => {
            let report = verify(&VerifyConfig {
                trials: args.trials,
                max_n: args.n,
                max_entry: args.max_entry,
                seed: args.seed,
                oracle_bound: bound,
            });
            out.push_str(&report.render());
            if !report.all_passed() {
                return Err(CliError::Failed(format!("verification failed\n{out}")));
            }
        }
        Command::Decompose { a } => {
            let a = parse_square(&inputs.read(&a)?)?;
            let d = decompose(&a)?;
            out.push_str("# simple part\n");
            out.push_str(&write_square(d.simple_part.as_matrix()));
            out.push_str("\n# sum part\n");
            out.push_str(&write_square(&d.sum_part));
        }
    }
    Ok(out)
}

/// Parse `args`, run, and write to the given streams. Returns the exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, stdin, std::env::var(ORACLE_BOUND_VAR).ok()) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            // Verification failures still show their tallies.
            let msg = e.to_string();
            let (first, rest) = msg.split_once('\n').unwrap_or((&msg, ""));
            let _ = stdout.write_all(rest.as_bytes());
            let _ = writeln!(stderr, "kelpbed: {first}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
