use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gcdirac::algebra::TableData;
use gcdirac_cli::{
    cmd_fig1, cmd_polar, cmd_props, cmd_verify, BranchSelection, Builtin, CliError, Fig1Config, Format,
    Outcome, PropsConfig, VerifyConfig,
};

#[derive(Parser)]
#[command(name = "gcdirac", version, about = "Generalized complex algebra and Dirac checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

impl From<TextOrJson> for Format {
    fn from(f: TextOrJson) -> Self {
        match f {
            TextOrJson::Text => Format::Text,
            TextOrJson::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Positive,
    Negative,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuiltinArg {
    Gc,
    Complex,
    Real,
    Quaternion,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite; exits 1 if any check deviates from its expectation.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        /// Structure-constants JSON to verify instead of the built-in table.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Emit the spinor ratio over an (m, p) grid as CSV.
    #[command(allow_negative_numbers = true)]
    Fig1 {
        #[arg(long, default_value_t = 0.5)]
        m_min: f64,
        #[arg(long, default_value_t = 5.0)]
        m_max: f64,
        #[arg(long, default_value_t = -5.0)]
        p_min: f64,
        #[arg(long, default_value_t = 5.0)]
        p_max: f64,
        /// Defaults to 50, or 1 when the range is a single point.
        #[arg(long)]
        m_steps: Option<usize>,
        #[arg(long)]
        p_steps: Option<usize>,
        #[arg(long, value_enum, default_value = "both")]
        branch: BranchArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report commutativity, associativity, zero divisors and power associativity.
    Props {
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "gc")]
        builtin: BuiltinArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Convert a,b,c to (R, theta, phi).
    #[command(allow_hyphen_values = true)]
    Polar {
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
}

fn steps(given: Option<usize>, min: f64, max: f64) -> usize {
    given.unwrap_or(if min == max { 1 } else { 50 })
}

fn read_table(path: &PathBuf) -> Result<TableData, CliError> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Verify {
            samples,
            seed,
            format,
            table,
        } => {
            let cfg = VerifyConfig {
                samples,
                seed,
                format: format.into(),
                table: table.as_ref().map(read_table).transpose()?,
            };
            cmd_verify(&cfg, out)
        }
        Command::Fig1 {
            m_min,
            m_max,
            p_min,
            p_max,
            m_steps,
            p_steps,
            branch,
            output,
        } => {
            let cfg = Fig1Config {
                m_min,
                m_max,
                m_steps: steps(m_steps, m_min, m_max),
                p_min,
                p_max,
                p_steps: steps(p_steps, p_min, p_max),
                branch: match branch {
                    BranchArg::Positive => BranchSelection::Positive,
                    BranchArg::Negative => BranchSelection::Negative,
                    BranchArg::Both => BranchSelection::Both,
                },
                output,
            };
            cmd_fig1(&cfg, out)
        }
        Command::Props {
            table,
            builtin,
            samples,
            seed,
            format,
        } => {
            let cfg = PropsConfig {
                table,
                builtin: match builtin {
                    BuiltinArg::Gc => Builtin::Gc,
                    BuiltinArg::Complex => Builtin::Complex,
                    BuiltinArg::Real => Builtin::Real,
                    BuiltinArg::Quaternion => Builtin::Quaternion,
                },
                samples,
                seed,
                format: format.into(),
            };
            cmd_props(&cfg, out)
        }
        Command::Polar { input, format } => cmd_polar(&input, format.into(), out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out).and_then(|o| {
        out.flush()?;
        Ok(o)
    }) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            eprintln!("gcdirac: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
