use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use obo_cli::{ExtractOptions, EXIT_ERROR, EXIT_USAGE};
use obo_core::eval::{GroupBy, ReportFormat};
use obo_core::mutate::StatementKind;
use obo_core::train::TrainConfig;

/// Off-by-one comparator bug detection for Java methods.
#[derive(Parser)]
#[command(name = "obo", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a balanced labeled corpus by flipping comparators.
    Mutate {
        /// Directory of .java files (or a single file).
        #[arg(long = "in")]
        input: PathBuf,
        /// Labeled corpus output; a `<out>.dist.tsv` sidecar is also written.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "OBO_SEED", default_value_t = 0)]
        seed: u64,
        /// Restrict mutation sites to one statement context (IF, FOR, ...).
        #[arg(long = "only-context", value_parser = parse_statement)]
        only_context: Option<StatementKind>,
    },
    /// Split a labeled corpus by project into train/val/test files.
    Split {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        train: PathBuf,
        #[arg(long)]
        val: PathBuf,
        #[arg(long)]
        test: PathBuf,
        /// Comma-separated fractions, e.g. 0.8,0.1,0.1.
        #[arg(long, default_value = "0.8,0.1,0.1", value_parser = parse_ratios)]
        ratios: (f64, f64, f64),
        #[arg(long, env = "OBO_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Build token/path dictionaries from the training split.
    Vocab {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = obo_core::paths::DEFAULT_MAX_TOKEN_VOCAB)]
        max_token_vocab: usize,
        #[arg(long, default_value_t = obo_core::paths::DEFAULT_MAX_PATH_VOCAB)]
        max_path_vocab: usize,
        #[command(flatten)]
        extract: ExtractArgs,
    },
    /// Encode a labeled split against a fixed vocabulary.
    Encode {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        vocab: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "OBO_SEED", default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        extract: ExtractArgs,
    },
    /// Train the attention classifier.
    Train {
        #[arg(long)]
        train: PathBuf,
        #[arg(long)]
        val: PathBuf,
        #[arg(long)]
        vocab: PathBuf,
        #[arg(long = "out-weights")]
        out_weights: PathBuf,
        /// Epoch history file (defaults to `<out-weights>.history.tsv`).
        #[arg(long)]
        history: Option<PathBuf>,
        #[arg(long, default_value_t = obo_core::model::DEFAULT_EMBED_DIM)]
        embed_dim: usize,
        #[arg(long, default_value_t = 1e-3)]
        learning_rate: f64,
        #[arg(long, default_value_t = 128)]
        batch_size: usize,
        #[arg(long, default_value_t = 0.25)]
        dropout: f64,
        #[arg(long, default_value_t = 2)]
        patience: usize,
        #[arg(long, default_value_t = 30)]
        max_epochs: usize,
        #[arg(long, default_value_t = 0.5)]
        threshold: f64,
        #[arg(long, env = "OBO_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Grouped confusion-matrix report on an encoded test split.
    Eval {
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        test: PathBuf,
        #[arg(long = "group-by", value_enum, default_value_t = GroupByArg::Context)]
        group_by: GroupByArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0.5)]
        threshold: f64,
    },
    /// Score every method in a file or directory.
    Predict {
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        vocab: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        threshold: f64,
        #[arg(long, env = "OBO_SEED", default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        extract: ExtractArgs,
    },
}

#[derive(clap::Args)]
struct ExtractArgs {
    #[arg(long, default_value_t = obo_core::paths::DEFAULT_MAX_PATH_LENGTH)]
    max_path_length: usize,
    #[arg(long, default_value_t = obo_core::paths::DEFAULT_MAX_PATH_WIDTH)]
    max_path_width: usize,
    #[arg(long, default_value_t = obo_core::paths::DEFAULT_MAX_CONTEXTS)]
    max_contexts: usize,
}

impl From<&ExtractArgs> for ExtractOptions {
    fn from(a: &ExtractArgs) -> Self {
        ExtractOptions {
            max_path_length: a.max_path_length,
            max_path_width: a.max_path_width,
            max_contexts: a.max_contexts,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupByArg {
    Context,
    Statement,
    Comparator,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Text,
}

fn parse_statement(s: &str) -> Result<StatementKind, String> {
    StatementKind::from_label(s).ok_or_else(|| {
        format!(
            "unknown statement context '{s}' (expected one of {})",
            StatementKind::ALL.map(|k| k.label()).join(", ")
        )
    })
}

fn parse_ratios(s: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad ratio list '{s}': {e}"))?;
    if parts.len() != 3 {
        return Err("expected exactly three ratios".into());
    }
    Ok((parts[0], parts[1], parts[2]))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Mutate {
            input,
            out,
            seed,
            only_context,
        } => obo_cli::cmd_mutate(&input, &out, seed, only_context),
        Command::Split {
            input,
            train,
            val,
            test,
            ratios,
            seed,
        } => obo_cli::cmd_split(&input, &train, &val, &test, ratios, seed),
        Command::Vocab {
            corpus,
            out,
            max_token_vocab,
            max_path_vocab,
            extract,
        } => obo_cli::cmd_vocab(
            &corpus,
            &out,
            max_token_vocab,
            max_path_vocab,
            (&extract).into(),
        ),
        Command::Encode {
            corpus,
            vocab,
            out,
            seed,
            extract,
        } => obo_cli::cmd_encode(&corpus, &vocab, &out, seed, (&extract).into()),
        Command::Train {
            train,
            val,
            vocab,
            out_weights,
            history,
            embed_dim,
            learning_rate,
            batch_size,
            dropout,
            patience,
            max_epochs,
            threshold,
            seed,
        } => {
            let config = TrainConfig {
                learning_rate,
                batch_size,
                dropout_p: dropout,
                patience_epochs: patience,
                max_epochs,
                seed,
                classification_threshold: threshold,
                ..TrainConfig::default()
            };
            let history = history.unwrap_or_else(|| {
                let mut name = out_weights.file_name().unwrap_or_default().to_os_string();
                name.push(".history.tsv");
                out_weights.with_file_name(name)
            });
            obo_cli::cmd_train(
                &train,
                &val,
                &vocab,
                &out_weights,
                Some(&history),
                embed_dim,
                &config,
            )
        }
        Command::Eval {
            weights,
            test,
            group_by,
            format,
            out,
            threshold,
        } => obo_cli::cmd_eval(
            &weights,
            &test,
            match group_by {
                GroupByArg::Context => GroupBy::ContextType,
                GroupByArg::Statement => GroupBy::Statement,
                GroupByArg::Comparator => GroupBy::Comparator,
            },
            match format {
                FormatArg::Csv => ReportFormat::Csv,
                FormatArg::Text => ReportFormat::AlignedText,
            },
            out.as_deref(),
            threshold,
        ),
        Command::Predict {
            weights,
            vocab,
            input,
            threshold,
            seed,
            extract,
        } => obo_cli::cmd_predict(&weights, &vocab, &input, threshold, seed, (&extract).into()),
    }
}
