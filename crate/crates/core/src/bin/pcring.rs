use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use pcring::instances;
use pcring::report::{self, AnalysisRequest, EXIT_VALIDATION};
use pcring::{Error, InstanceDescriptor};

#[derive(Parser)]
#[command(name = "pcring", version, about = "Projective class rings of basic split Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Flags {
    /// Skip the brute-force oracle cross-check.
    #[arg(long)]
    no_verify: bool,
    /// Include the primitive idempotents in the report.
    #[arg(long)]
    idempotents: bool,
    /// Include a basis of the nilradical in the report.
    #[arg(long)]
    nilradical: bool,
    /// Write the report here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl Flags {
    fn request(&self, instance: InstanceDescriptor) -> AnalysisRequest {
        AnalysisRequest {
            instance,
            verify: !self.no_verify,
            emit_idempotents: self.idempotents,
            emit_nilradical: self.nilradical,
            output: self.output.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyse an instance given as JSON.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Analyse a built-in family.
    Example {
        #[command(subcommand)]
        which: Example,
    },
    /// Analyse every *.json file in a directory.
    Batch {
        dir: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Subcommand)]
enum Example {
    /// Half-quantum group at a primitive n-th root of unity.
    UqSl2 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        flags: Flags,
    },
    /// Functions on a finite abelian group (semisimple).
    DualGroup {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        #[command(flatten)]
        flags: Flags,
    },
}

fn emit(value: &Value, output: Option<&Path>) -> Result<(), i32> {
    let text = report::render(value);
    match output {
        Some(path) => fs::write(path, text).map_err(|e| {
            eprintln!("{}", report::render(&io_error(&format!("cannot write {}: {e}", path.display()))));
            EXIT_VALIDATION
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn io_error(message: &str) -> Value {
    serde_json::json!({"error": {"kind": "io", "message": message}})
}

fn fail(e: &Error) -> i32 {
    eprint!("{}", report::render(&report::error_json(e)));
    EXIT_VALIDATION
}

fn analyze_one(instance: pcring::Result<InstanceDescriptor>, flags: &Flags) -> i32 {
    let outcome = instance.and_then(|inst| report::run(&flags.request(inst)));
    match outcome {
        Ok(o) => match emit(&o.report, flags.output.as_deref()) {
            Ok(()) => o.exit_code(),
            Err(code) => code,
        },
        Err(e) => fail(&e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { file, flags } => match fs::read_to_string(&file) {
            Ok(text) => analyze_one(report::parse_input(&text).map(|r| r.instance), &flags),
            Err(e) => {
                eprint!("{}", report::render(&io_error(&format!("cannot read {}: {e}", file.display()))));
                EXIT_VALIDATION
            }
        },
        Command::Example { which } => match which {
            Example::UqSl2 { n, flags } => analyze_one(instances::uq_sl2(n), &flags),
            Example::DualGroup { orders, flags } => analyze_one(instances::dual_group_algebra(&orders), &flags),
        },
        Command::Batch { dir, flags } => match report::batch(&dir, |inst| flags.request(inst)) {
            Ok(out) => match emit(&out.report, flags.output.as_deref()) {
                Ok(()) => out.exit_code,
                Err(code) => code,
            },
            Err(e) => {
                eprint!("{}", report::render(&io_error(&format!("cannot read {}: {e}", dir.display()))));
                EXIT_VALIDATION
            }
        },
    };
    ExitCode::from(code as u8)
}
