use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::Failure;

#[derive(Parser, Debug)]
#[command(name = "fincat", version, about = "Finite categories: validation, duality, limits, adjunctions")]
struct Cli {
    /// Maximum number of candidates any exhaustive search may examine.
    #[arg(long, global = true, env = "FINCAT_CAP", default_value_t = fincat::DEFAULT_CAP)]
    cap: usize,

    /// Seed for the random corpus generator.
    #[arg(long, global = true, default_value_t = fincat::corpus::DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the laws of a category, functor, transformation, adjunction or
    /// category-valued functor document.
    Validate { file: String },
    /// Opposite of a category, functor or transformation.
    Op { file: String },
    /// Product of two categories.
    Product { left: String, right: String },
    /// Every functor between two categories.
    Functors { source: String, target: String },
    /// Every natural transformation between two functors.
    NatTrans { from: String, to: String },
    /// Limit of a diagram, given as a functor.
    Limits { diagram: String },
    /// Colimit of a diagram, given as a functor.
    Colimits { diagram: String },
    /// Pointwise Kan extension.
    Kan { file: String },
    /// Validate an adjunction after converting it to the chosen form.
    CheckAdjunction {
        #[arg(long, value_enum, default_value_t = FormArg::UnitCounit)]
        form: FormArg,
        file: String,
    },
    /// Total category and sections of a category-valued functor.
    Grothendieck { file: String },
    /// Compare transformations between representables with hom-set sizes.
    YonedaCheck { file: String },
    /// Run the duality checks on a category.
    DualityCheck { file: String },
    /// Term-size benchmarks.
    Bench {
        #[command(subcommand)]
        which: BenchCommand,
    },
    /// Property checks over the built-in and generated corpus.
    Corpus {
        #[command(subcommand)]
        which: CorpusCommand,
    },
}

#[derive(Subcommand, Debug)]
enum BenchCommand {
    /// Word counts of inside and outside encodings.
    Encoding {
        #[arg(long, default_value_t = 12)]
        max_depth: usize,
        #[arg(long, default_value_t = 12)]
        max_fields: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusCommand {
    /// Names of the corpus members.
    List {
        #[arg(long, default_value_t = fincat::corpus::GENERATED)]
        generated: usize,
    },
    /// Print one corpus member as a category document.
    Show {
        name: String,
        #[arg(long, default_value_t = fincat::corpus::GENERATED)]
        generated: usize,
    },
    /// Run every property check and report per-member results.
    Run {
        /// Number of generated categories added to the built-ins.
        #[arg(long, default_value_t = fincat::corpus::GENERATED)]
        generated: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormArg {
    UnitCounit,
    Hom,
    Universal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

fn run(cli: Cli) -> Result<String, Failure> {
    let cap = cli.cap;
    match cli.command {
        Command::Validate { file } => commands::validate(&file),
        Command::Op { file } => commands::op(&file),
        Command::Product { left, right } => commands::product(&left, &right),
        Command::Functors { source, target } => commands::functors(&source, &target, cap),
        Command::NatTrans { from, to } => commands::nat_trans(&from, &to, cap),
        Command::Limits { diagram } => commands::limits(&diagram, false, cap),
        Command::Colimits { diagram } => commands::limits(&diagram, true, cap),
        Command::Kan { file } => commands::kan(&file, cap),
        Command::CheckAdjunction { form, file } => {
            let form = match form {
                FormArg::UnitCounit => fincat::AdjunctionForm::UnitCounit,
                FormArg::Hom => fincat::AdjunctionForm::Hom,
                FormArg::Universal => fincat::AdjunctionForm::Universal,
            };
            commands::check_adjunction(&file, form)
        }
        Command::Grothendieck { file } => commands::grothendieck(&file, cap),
        Command::YonedaCheck { file } => commands::yoneda_check(&file, cap),
        Command::DualityCheck { file } => commands::duality_check(&file),
        Command::Bench {
            which: BenchCommand::Encoding {
                max_depth,
                max_fields,
                format,
            },
        } => commands::bench_encoding(max_depth, max_fields, format == Format::Json),
        Command::Corpus { which } => match which {
            CorpusCommand::List { generated } => commands::corpus_list(cli.seed, generated),
            CorpusCommand::Show { name, generated } => commands::corpus_show(cli.seed, generated, &name),
            CorpusCommand::Run { generated } => commands::corpus_run(cli.seed, generated, cap),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Report { output, message }) => {
            print!("{output}");
            eprintln!("{message}");
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
