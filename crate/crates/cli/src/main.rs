//! Command-line driver: transliterate, jumble, and report entropy and
//! corpus statistics.

mod manifest;
mod output;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use telentropy::entropy::EntropyReport;
use telentropy::jumble::{compare_entropy, jumble_text, Granularity, JumbleConfig};
use telentropy::stats::{ingest, letter_table, word_length_histogram, Corpus, LengthUnit};
use telentropy::syllable::{ShortWordPolicy, WindowSpec, Word};
use telentropy::{
    char_entropy, load_mapping, syllable_ngram_entropy, to_roman, to_telugu, MappingTable, Mode,
};

use manifest::{digest_files, mapping_source, RunManifest};
use output::{derived_path, emit, render, Format, Report, Rows};

#[derive(Parser)]
#[command(
    name = "telentropy",
    version,
    about = "Telugu transliteration and entropy analysis"
)]
struct Cli {
    /// Mapping table TSV (defaults to the built-in Telugu table)
    #[arg(long, global = true)]
    mapping: Option<PathBuf>,

    /// Logarithm base for entropy values
    #[arg(long, global = true, default_value_t = 2.0)]
    base: f64,

    /// Seed for the jumbling generator
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Handling of words shorter than the window size
    #[arg(long, global = true, value_enum, default_value_t = PolicyArg::Whole)]
    short_word_policy: PolicyArg,

    /// Cap the roman stream at this many characters, cut at a word
    /// boundary
    #[arg(long, global = true)]
    char_budget: Option<usize>,

    /// Output path (stdout when omitted)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a file between Telugu script and the roman scheme
    Translit {
        #[arg(long, value_enum, default_value_t = DirectionArg::ToRoman)]
        direction: DirectionArg,
        input: PathBuf,
    },
    /// Entropy reports over characters or n-syllable windows
    Entropy {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Shuffle word interiors, first and last symbol fixed
    Jumble {
        #[arg(long, value_enum, default_value_t = GranularityArg::Syllable)]
        granularity: GranularityArg,
        input: PathBuf,
    },
    /// Letter-frequency table and word-length histogram
    Stats {
        /// Report the fraction of words shorter than this length
        #[arg(long, default_value_t = 4)]
        threshold: usize,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Plot-ready series for the standard graphs
    Graphdata {
        #[arg(long, value_enum)]
        which: WhichArg,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    ToRoman,
    ToTelugu,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Char,
    Syllable,
}

impl ModeArg {
    fn as_str(self) -> &'static str {
        match self {
            ModeArg::Char => "char",
            ModeArg::Syllable => "syllable",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GranularityArg {
    Char,
    Syllable,
}

impl From<GranularityArg> for Granularity {
    fn from(g: GranularityArg) -> Granularity {
        match g {
            GranularityArg::Char => Granularity::Char,
            GranularityArg::Syllable => Granularity::Syllable,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Whole,
    Skip,
}

impl PolicyArg {
    fn as_str(self) -> &'static str {
        match self {
            PolicyArg::Whole => "whole",
            PolicyArg::Skip => "skip",
        }
    }
}

impl From<PolicyArg> for ShortWordPolicy {
    fn from(p: PolicyArg) -> ShortWordPolicy {
        match p {
            PolicyArg::Whole => ShortWordPolicy::WholeWord,
            PolicyArg::Skip => ShortWordPolicy::Skip,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Graph1,
    Graph2,
    Graph3,
    Graph22,
}

impl WhichArg {
    fn as_str(self) -> &'static str {
        match self {
            WhichArg::Graph1 => "graph1",
            WhichArg::Graph2 => "graph2",
            WhichArg::Graph3 => "graph3",
            WhichArg::Graph22 => "graph22",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

/// Data errors exit 1; usage errors exit 2 (clap parse failures already
/// exit 2 on their own).
#[derive(Debug)]
enum CliError {
    Data(String),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Data(m) | CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Data(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<telentropy::Error> for CliError {
    fn from(e: telentropy::Error) -> CliError {
        CliError::Data(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

struct Ctx {
    table: MappingTable,
    base: f64,
    seed: u64,
    policy: ShortWordPolicy,
    policy_name: &'static str,
    char_budget: Option<usize>,
    out: Option<PathBuf>,
    format: Format,
    mapping: String,
}

impl Ctx {
    fn spec(&self, n: usize) -> WindowSpec {
        WindowSpec::new(n).with_policy(self.policy)
    }

    fn manifest(&self, command: &str, inputs: &[PathBuf]) -> Result<RunManifest, CliError> {
        let digest =
            digest_files(inputs).map_err(|e| CliError::Data(format!("digesting inputs: {e}")))?;
        Ok(RunManifest {
            command: command.to_string(),
            inputs: inputs.iter().map(|p| p.display().to_string()).collect(),
            mapping: self.mapping.clone(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: digest,
            base: self.base,
            mode: None,
            n_min: None,
            n_max: None,
            seed: None,
            granularity: None,
            short_word_policy: None,
            char_budget: self.char_budget,
            which: None,
        })
    }

    fn ingest(&self, inputs: &[PathBuf]) -> Result<Corpus, CliError> {
        Ok(ingest(inputs, &self.table, self.char_budget)?)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.base <= 1.0 {
        return Err(CliError::Usage(format!(
            "--base must be greater than 1 (got {})",
            cli.base
        )));
    }
    let table = load_mapping(cli.mapping.as_deref())?;
    let ctx = Ctx {
        table,
        base: cli.base,
        seed: cli.seed,
        policy: cli.short_word_policy.into(),
        policy_name: cli.short_word_policy.as_str(),
        char_budget: cli.char_budget,
        out: cli.out.clone(),
        format: cli.format.into(),
        mapping: mapping_source(cli.mapping.as_deref()),
    };
    match cli.command {
        Command::Translit { direction, input } => cmd_translit(&ctx, direction, &input),
        Command::Entropy {
            mode,
            n_min,
            n_max,
            inputs,
        } => cmd_entropy(&ctx, mode, n_min, n_max, &inputs),
        Command::Jumble { granularity, input } => cmd_jumble(&ctx, granularity.into(), &input),
        Command::Stats { threshold, inputs } => cmd_stats(&ctx, threshold, &inputs),
        Command::Graphdata { which, inputs } => cmd_graphdata(&ctx, which, &inputs),
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

/// Plain-text outputs keep the converted bytes pure; the manifest goes to
/// a `.manifest.json` sidecar when writing to a file.
fn emit_text(ctx: &Ctx, content: &str, manifest: &RunManifest) -> Result<(), CliError> {
    match &ctx.out {
        Some(path) => {
            std::fs::write(path, content)
                .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            let side = PathBuf::from(format!("{}.manifest.json", path.display()));
            let mut json = manifest.to_json();
            json.push('\n');
            std::fs::write(&side, json)
                .map_err(|e| CliError::Data(format!("{}: {e}", side.display())))?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_report(
    ctx: &Ctx,
    out: Option<&Path>,
    report: &dyn Report,
    manifest: &RunManifest,
) -> Result<(), CliError> {
    let content = render(report, manifest, ctx.format);
    emit(out, &content).map_err(|e| CliError::Data(format!("writing output: {e}")))
}

fn cmd_translit(ctx: &Ctx, direction: DirectionArg, input: &Path) -> Result<(), CliError> {
    let text = read_input(input)?;
    let converted = match direction {
        DirectionArg::ToRoman => to_roman(&text, &ctx.table)?,
        DirectionArg::ToTelugu => to_telugu(&text, &ctx.table)?,
    };
    let manifest = ctx.manifest("translit", std::slice::from_ref(&input.to_path_buf()))?;
    emit_text(ctx, &converted, &manifest)
}

#[derive(Serialize)]
struct EntropyRow {
    mode: String,
    n: usize,
    entropy_bits: f64,
    per_syllable_rate: f64,
    distinct: usize,
    total_tokens: u64,
    log_base: f64,
}

impl EntropyRow {
    const COLUMNS: &'static [&'static str] = &[
        "mode",
        "n",
        "entropy_bits",
        "per_syllable_rate",
        "distinct",
        "total_tokens",
        "log_base",
    ];

    fn from_report(r: &EntropyReport<f64>) -> EntropyRow {
        EntropyRow {
            mode: r.mode.as_str().to_string(),
            n: r.n,
            entropy_bits: r.entropy_bits,
            per_syllable_rate: r.per_syllable_rate,
            distinct: r.distinct,
            total_tokens: r.total_tokens,
            log_base: r.log_base,
        }
    }

    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.mode,
            self.n,
            self.entropy_bits,
            self.per_syllable_rate,
            self.distinct,
            self.total_tokens,
            self.log_base
        )
    }
}

fn corpus_words(corpus: &Corpus) -> Vec<Word> {
    corpus.words().cloned().collect()
}

fn cmd_entropy(
    ctx: &Ctx,
    mode: ModeArg,
    n_min: usize,
    n_max: usize,
    inputs: &[PathBuf],
) -> Result<(), CliError> {
    if n_min < 1 || n_min > n_max || n_max > 12 {
        return Err(CliError::Usage(format!(
            "need 1 <= n-min <= n-max <= 12 (got {n_min}..{n_max})"
        )));
    }
    let corpus = ctx.ingest(inputs)?;
    let rows = match mode {
        ModeArg::Char => {
            vec![EntropyRow::from_report(&char_entropy(
                &corpus.roman_text(),
                ctx.base,
            )?)]
        }
        ModeArg::Syllable => {
            let words = corpus_words(&corpus);
            let mut rows = Vec::new();
            for n in n_min..=n_max {
                let report = syllable_ngram_entropy(&words, &ctx.spec(n), ctx.base)?;
                rows.push(EntropyRow::from_report(&report));
            }
            rows
        }
    };
    let mut manifest = ctx.manifest("entropy", inputs)?;
    manifest.mode = Some(mode.as_str().to_string());
    if matches!(mode, ModeArg::Syllable) {
        manifest.n_min = Some(n_min);
        manifest.n_max = Some(n_max);
        manifest.short_word_policy = Some(ctx.policy_name.to_string());
    }
    let report = Rows {
        columns: EntropyRow::COLUMNS,
        rows,
        to_csv: EntropyRow::csv,
    };
    emit_report(ctx, ctx.out.as_deref(), &report, &manifest)
}

fn cmd_jumble(ctx: &Ctx, granularity: Granularity, input: &Path) -> Result<(), CliError> {
    let text = read_input(input)?;
    // roman input passes through to_roman unchanged, so both scripts work
    let roman = to_roman(&text, &ctx.table)?;
    let cfg = JumbleConfig::new(ctx.seed, granularity);
    let jumbled = jumble_text(&roman, &cfg, &ctx.table);
    let mut manifest = ctx.manifest("jumble", std::slice::from_ref(&input.to_path_buf()))?;
    manifest.seed = Some(ctx.seed);
    manifest.granularity = Some(granularity.as_str().to_string());
    emit_text(ctx, &jumbled, &manifest)
}

#[derive(Serialize)]
struct LetterRow {
    lower_symbol: String,
    lower_percent: f64,
    upper_symbol: String,
    upper_percent: f64,
}

impl LetterRow {
    const COLUMNS: &'static [&'static str] = &[
        "lower_symbol",
        "lower_percent",
        "upper_symbol",
        "upper_percent",
    ];

    fn csv(&self) -> String {
        format!(
            "{},{:.2},{},{:.2}",
            self.lower_symbol, self.lower_percent, self.upper_symbol, self.upper_percent
        )
    }
}

#[derive(Serialize)]
struct LengthRow {
    length: usize,
    fraction: f64,
    cumulative_below: f64,
}

impl LengthRow {
    const COLUMNS: &'static [&'static str] = &["length", "fraction", "cumulative_below"];

    fn csv(&self) -> String {
        format!(
            "{},{},{}",
            self.length, self.fraction, self.cumulative_below
        )
    }
}

fn symbol_name(c: char) -> String {
    match c {
        ' ' => "Space".to_string(),
        other => other.to_string(),
    }
}

fn cmd_stats(ctx: &Ctx, threshold: usize, inputs: &[PathBuf]) -> Result<(), CliError> {
    let corpus = ctx.ingest(inputs)?;
    let letters = letter_table(&corpus)?;
    let histogram = word_length_histogram(&corpus, LengthUnit::Akshara)?;

    // Table-1 layout: a..z plus Space on the left, A..Z plus ^ on the right
    let (lower, upper) = letters.split_at(27);
    let letter_rows: Vec<LetterRow> = lower
        .iter()
        .zip(upper.iter())
        .map(|(l, u)| LetterRow {
            lower_symbol: symbol_name(l.symbol),
            lower_percent: l.percent,
            upper_symbol: symbol_name(u.symbol),
            upper_percent: u.percent,
        })
        .collect();

    let mut acc = 0.0;
    let mut length_rows = Vec::new();
    for (length, fraction) in histogram.fractions() {
        length_rows.push(LengthRow {
            length,
            fraction,
            cumulative_below: acc,
        });
        acc += fraction;
    }

    let manifest = ctx.manifest("stats", inputs)?;

    let letters_report = Rows {
        columns: LetterRow::COLUMNS,
        rows: letter_rows,
        to_csv: LetterRow::csv,
    };
    let lengths_report = Rows {
        columns: LengthRow::COLUMNS,
        rows: length_rows,
        to_csv: LengthRow::csv,
    };

    match &ctx.out {
        Some(base) => {
            let ext = ctx.format.extension();
            emit_report(
                ctx,
                Some(&derived_path(base, "letters", ext)),
                &letters_report,
                &manifest,
            )?;
            emit_report(
                ctx,
                Some(&derived_path(base, "lengths", ext)),
                &lengths_report,
                &manifest,
            )?;
        }
        None => {
            emit_report(ctx, None, &letters_report, &manifest)?;
            println!();
            emit_report(ctx, None, &lengths_report, &manifest)?;
        }
    }
    eprintln!(
        "fraction of words shorter than {threshold}: {}",
        histogram.fraction_below(threshold)
    );
    Ok(())
}

#[derive(Serialize)]
struct SeriesRow {
    series: String,
    x: usize,
    y: f64,
}

impl SeriesRow {
    const COLUMNS: &'static [&'static str] = &["series", "x", "y"];

    fn csv(&self) -> String {
        format!("{},{},{}", self.series, self.x, self.y)
    }
}

#[derive(Serialize)]
struct SeriesDeltaRow {
    series: String,
    x: usize,
    y: f64,
    delta: f64,
}

impl SeriesDeltaRow {
    const COLUMNS: &'static [&'static str] = &["series", "x", "y", "delta"];

    fn csv(&self) -> String {
        format!("{},{},{},{}", self.series, self.x, self.y, self.delta)
    }
}

fn cmd_graphdata(ctx: &Ctx, which: WhichArg, inputs: &[PathBuf]) -> Result<(), CliError> {
    let corpus = ctx.ingest(inputs)?;
    let mut manifest = ctx.manifest("graphdata", inputs)?;
    manifest.which = Some(which.as_str().to_string());
    manifest.short_word_policy = Some(ctx.policy_name.to_string());

    match which {
        WhichArg::Graph1 => {
            let h_char = char_entropy(&corpus.roman_text(), ctx.base)?;
            let words = corpus_words(&corpus);
            let h_syl = syllable_ngram_entropy(&words, &ctx.spec(1), ctx.base)?;
            let rows = vec![
                SeriesRow {
                    series: "char".to_string(),
                    x: 1,
                    y: h_char.entropy_bits,
                },
                SeriesRow {
                    series: "syllable".to_string(),
                    x: 2,
                    y: h_syl.entropy_bits,
                },
            ];
            let report = Rows {
                columns: SeriesRow::COLUMNS,
                rows,
                to_csv: SeriesRow::csv,
            };
            emit_report(ctx, ctx.out.as_deref(), &report, &manifest)
        }
        WhichArg::Graph2 => {
            let words = corpus_words(&corpus);
            let mut reports = Vec::new();
            for n in 1..=6 {
                reports.push(syllable_ngram_entropy(&words, &ctx.spec(n), ctx.base)?);
            }
            let mut rows = Vec::new();
            for r in &reports {
                rows.push(SeriesRow {
                    series: "entropy_bits".to_string(),
                    x: r.n,
                    y: r.entropy_bits,
                });
            }
            for r in &reports {
                rows.push(SeriesRow {
                    series: "per_syllable_rate".to_string(),
                    x: r.n,
                    y: r.per_syllable_rate,
                });
            }
            let report = Rows {
                columns: SeriesRow::COLUMNS,
                rows,
                to_csv: SeriesRow::csv,
            };
            emit_report(ctx, ctx.out.as_deref(), &report, &manifest)
        }
        WhichArg::Graph3 => {
            manifest.seed = Some(ctx.seed);
            manifest.granularity = Some(Granularity::Syllable.as_str().to_string());
            let roman = corpus.roman_text();
            let cfg = JumbleConfig::new(ctx.seed, Granularity::Syllable);
            let jumbled = jumble_text(&roman, &cfg, &ctx.table);
            let mut rows = Vec::new();
            for n in 1..=6 {
                let cmp = compare_entropy(
                    &roman,
                    &jumbled,
                    Mode::Syllable,
                    &ctx.spec(n),
                    &ctx.table,
                    ctx.base,
                )?;
                rows.push(SeriesDeltaRow {
                    series: "original".to_string(),
                    x: n,
                    y: cmp.original.entropy_bits,
                    delta: cmp.delta,
                });
                rows.push(SeriesDeltaRow {
                    series: "jumbled".to_string(),
                    x: n,
                    y: cmp.jumbled.entropy_bits,
                    delta: cmp.delta,
                });
            }
            let report = Rows {
                columns: SeriesDeltaRow::COLUMNS,
                rows,
                to_csv: SeriesDeltaRow::csv,
            };
            emit_report(ctx, ctx.out.as_deref(), &report, &manifest)
        }
        WhichArg::Graph22 => {
            let histogram = word_length_histogram(&corpus, LengthUnit::Akshara)?;
            let rows: Vec<SeriesRow> = histogram
                .fractions()
                .into_iter()
                .map(|(length, fraction)| SeriesRow {
                    series: "fraction".to_string(),
                    x: length,
                    y: fraction,
                })
                .collect();
            let report = Rows {
                columns: SeriesRow::COLUMNS,
                rows,
                to_csv: SeriesRow::csv,
            };
            emit_report(ctx, ctx.out.as_deref(), &report, &manifest)
        }
    }
}
