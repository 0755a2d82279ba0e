//! Command-line front end. Exit codes: 0 success, 2 configuration error, 3 invariant violation.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use super::{
    load_support, run_components_experiment, run_distance_growth, run_hyperbolicity_proxy, ConfigFile,
    ExperimentConfig, Report,
};
use crate::error::{Error, Result};
use crate::mcg_core::{McgWord, SurfaceSpec, WalkDistribution};
use crate::plat::{plat_closure, ExportFormat};
use crate::tangle::{distance_certificate, enumerate_disks, DistanceCertificate};

#[derive(Debug, Parser)]
#[command(name = "bridgewalk", version, about = "Random bridge presentations: walks, disk sets and distance witnesses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print sampled walk words as CSV.
    Walk(Shared),
    /// Component counts of plat closures, with the exact-chain mean.
    Components(Shared),
    /// Bounded distance-witness search per sampled walk.
    Hyperproxy(Shared),
    /// Growth of log2 i(δ12, w·δ12) with walk length.
    Growth(Shared),
    /// Enumerate disk curves within the bound.
    Disks(Shared),
    /// Distance certificate for one word (or the first sample).
    Cert {
        #[command(flatten)]
        shared: Shared,
        /// Word as signed generator indices, e.g. "1 -2 3".
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Export the plat closure of one word (or the first sample).
    Plat {
        #[command(flatten)]
        shared: Shared,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// pd, gauss or csv.
        #[arg(long, default_value = "pd")]
        format: String,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct Shared {
    /// TOML or JSON file with n, k, samples, seed, support, bound, out, workers.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Bridge number.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated walk lengths.
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Support file with `support = [[index, sign, weight], ...]`.
    #[arg(long)]
    pub support: Option<PathBuf>,
    /// Disk enumeration bound L.
    #[arg(long)]
    pub bound: Option<usize>,
    /// Output path; the summary goes next to it with a `.summary.csv` suffix.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub workers: Option<usize>,
}

const DEFAULT_N: usize = 3;
const DEFAULT_K: usize = 10;
const DEFAULT_SAMPLES: usize = 100;
const DEFAULT_BOUND: usize = 4;

impl Shared {
    /// Config file values overridden by flags, then defaults.
    pub fn resolve(&self) -> Result<ExperimentConfig> {
        let file = match &self.config {
            Some(p) => ConfigFile::load(p)?,
            None => ConfigFile::default(),
        };
        let n = self.n.or(file.n).unwrap_or(DEFAULT_N);
        let spec = SurfaceSpec::new(n)?;
        let distribution = match (&self.support, &file.support) {
            (Some(p), _) => load_support(spec, &super::SupportField::Path(p.clone()))?,
            (None, Some(f)) => load_support(spec, f)?,
            (None, None) => WalkDistribution::uniform(spec),
        };
        let workers = self
            .workers
            .or(file.workers)
            .unwrap_or_else(|| std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1));
        let cfg = ExperimentConfig {
            n,
            k_values: self.k.clone().or(file.k).unwrap_or_else(|| vec![DEFAULT_K]),
            samples: self.samples.or(file.samples).unwrap_or(DEFAULT_SAMPLES),
            seed: self.seed.or(file.seed).unwrap_or(0),
            distribution,
            bound: self.bound.or(file.bound).unwrap_or(DEFAULT_BOUND),
            out: self.out.clone().or(file.out),
            workers,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Config(format!("cannot write {}: {e}", path.display()))
}

/// `runs.csv` gives `runs.summary.csv`.
pub fn summary_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}.summary.csv"))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| io_err(p, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| io_err(Path::new("stdout"), e))
        }
    }
}

fn emit_report(cfg: &ExperimentConfig, report: &Report) -> Result<()> {
    for n in &report.notices {
        eprintln!("{}", n.trim_start_matches("# "));
    }
    match &cfg.out {
        Some(p) => {
            emit(&cfg.out, &report.rows)?;
            emit(&Some(summary_path(p)), &report.summary)
        }
        None => emit(&None, &format!("{}\n{}", report.rows, report.summary)),
    }
}

fn word_or_sample(cfg: &ExperimentConfig, word: &Option<String>) -> Result<McgWord> {
    match word {
        Some(t) => McgWord::parse(cfg.spec(), t),
        None => Ok(cfg.walk(cfg.k_values[0], 0)),
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Walk(s) => {
            let cfg = s.resolve()?;
            let words = cfg.map_samples(|k, id| Ok(cfg.walk(k, id)))?;
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.write_record(["k", "sample_id", "word"]).expect("in-memory write");
            for (k, id, w) in words {
                wtr.write_record([k.to_string(), id.to_string(), w.to_string()]).expect("in-memory write");
            }
            let text = String::from_utf8(wtr.into_inner().expect("flush")).expect("utf-8");
            emit(&cfg.out, &text)
        }
        Command::Components(s) => {
            let cfg = s.resolve()?;
            emit_report(&cfg, &run_components_experiment(&cfg)?)
        }
        Command::Hyperproxy(s) => {
            let cfg = s.resolve()?;
            emit_report(&cfg, &run_hyperbolicity_proxy(&cfg)?.report)
        }
        Command::Growth(s) => {
            let cfg = s.resolve()?;
            let (report, _) = run_distance_growth(&cfg)?;
            emit_report(&cfg, &report)
        }
        Command::Disks(s) => {
            let cfg = s.resolve()?;
            let disks = enumerate_disks(cfg.spec(), cfg.bound);
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.write_record(["index", "base", "word", "coords"]).expect("in-memory write");
            for (i, c) in disks.curves.iter().enumerate() {
                let h = c.history().expect("enumerated disks carry their history");
                wtr.write_record([
                    i.to_string(),
                    format!("{}-{}", h.base.0, h.base.1),
                    h.word.to_string(),
                    c.coords().to_string(),
                ])
                .expect("in-memory write");
            }
            let text = String::from_utf8(wtr.into_inner().expect("flush")).expect("utf-8");
            emit(&cfg.out, &text)
        }
        Command::Cert { shared, word } => {
            let cfg = shared.resolve()?;
            let w = word_or_sample(&cfg, &word)?;
            let c = distance_certificate(&w, cfg.bound)?;
            let text = format!(
                "{}\n{}\n{}\n",
                super::NO_WITNESS_NOTE,
                DistanceCertificate::CSV_HEADER,
                c.csv_row()
            );
            emit(&cfg.out, &text)
        }
        Command::Plat { shared, word, format } => {
            let cfg = shared.resolve()?;
            let format: ExportFormat = format.parse()?;
            let w = word_or_sample(&cfg, &word)?;
            let link = plat_closure(&w);
            link.validate()?;
            let mut text = link.export(format);
            if !text.ends_with('\n') {
                text.push('\n');
            }
            emit(&cfg.out, &text)
        }
    }
}

/// Parses arguments, runs, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
