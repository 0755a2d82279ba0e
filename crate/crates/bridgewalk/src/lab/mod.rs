//! Experiment configuration, seeded parallel sampling and the three experiments.

pub mod cli;
mod experiments;

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::mcg_core::{sample_walk_indexed, McgWord, SurfaceSpec, WalkDistribution};

pub use experiments::{
    exact_mean_components, run_components_experiment, run_distance_growth, run_hyperbolicity_proxy,
    GrowthPoint, GrowthSummary, HyperproxyRun, Report, NO_WITNESS_NOTE,
};

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub n: usize,
    pub k_values: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub distribution: WalkDistribution,
    /// Disk enumeration bound L for certificates.
    pub bound: usize,
    pub out: Option<PathBuf>,
    /// Size of the worker pool; output never depends on it.
    pub workers: usize,
}

impl ExperimentConfig {
    /// Uniform walk on n bridges with one worker and no output file.
    pub fn new(n: usize, k_values: Vec<usize>, samples: usize, seed: u64, bound: usize) -> Result<Self> {
        let spec = SurfaceSpec::new(n)?;
        let cfg = ExperimentConfig {
            n,
            k_values,
            samples,
            seed,
            distribution: WalkDistribution::uniform(spec),
            bound,
            out: None,
            workers: 1,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_distribution(mut self, d: WalkDistribution) -> Result<Self> {
        self.distribution = d;
        self.validate()?;
        Ok(self)
    }

    pub fn with_workers(mut self, workers: usize) -> Result<Self> {
        self.workers = workers;
        self.validate()?;
        Ok(self)
    }

    pub fn spec(&self) -> SurfaceSpec {
        self.distribution.spec()
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if self.k_values.is_empty() {
            return Err(Error::Config("at least one walk length is required".into()));
        }
        if self.workers == 0 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        if self.distribution.spec().n() != self.n {
            return Err(Error::Config(format!(
                "support is for n = {} but the experiment uses n = {}",
                self.distribution.spec().n(),
                self.n
            )));
        }
        Ok(())
    }

    /// The walk of sample `id` at length `k`; shorter walks are prefixes of longer ones.
    pub fn walk(&self, k: usize, id: u64) -> McgWord {
        sample_walk_indexed(&self.distribution, k, self.seed, id)
    }

    /// Runs `f` on every (k, sample_id) in a pool of `workers` threads, sorted by (k, sample_id).
    pub fn map_samples<T, F>(&self, f: F) -> Result<Vec<(usize, u64, T)>>
    where
        T: Send,
        F: Fn(usize, u64) -> Result<T> + Sync,
    {
        let mut jobs: Vec<(usize, u64)> =
            self.k_values.iter().flat_map(|&k| (0..self.samples as u64).map(move |s| (k, s))).collect();
        jobs.sort_unstable();
        jobs.dedup();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Config(format!("cannot start {} workers: {e}", self.workers)))?;
        pool.install(|| jobs.par_iter().map(|&(k, s)| f(k, s).map(|t| (k, s, t))).collect())
    }
}

/// On-disk configuration; every field is optional so command-line flags can fill gaps.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub n: Option<usize>,
    #[serde(alias = "k_values")]
    pub k: Option<Vec<usize>>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub support: Option<SupportField>,
    #[serde(alias = "L")]
    pub bound: Option<usize>,
    pub out: Option<PathBuf>,
    pub workers: Option<usize>,
}

/// A support file path or an inline list of `[index, sign, weight]` entries.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum SupportField {
    Path(PathBuf),
    Inline(serde_json::Value),
}

impl ConfigFile {
    /// Reads TOML or JSON.
    pub fn parse(text: &str) -> Result<Self> {
        match serde_json::from_str(text) {
            Ok(c) => Ok(c),
            Err(json_err) => toml::from_str(text)
                .map_err(|e| Error::Config(format!("config is neither JSON ({json_err}) nor TOML ({e})"))),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut cfg = Self::parse(&text)?;
        // Relative support paths are taken from the config file's directory.
        if let (Some(SupportField::Path(p)), Some(dir)) = (&mut cfg.support, path.parent()) {
            if p.is_relative() {
                *p = dir.join(&*p);
            }
        }
        Ok(cfg)
    }
}

/// Builds a walk distribution from a support field.
pub fn load_support(spec: SurfaceSpec, field: &SupportField) -> Result<WalkDistribution> {
    match field {
        SupportField::Path(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Config(format!("cannot read support file {}: {e}", p.display())))?;
            WalkDistribution::parse(spec, &text)
        }
        SupportField::Inline(v) => {
            let text = serde_json::json!({ "support": v }).to_string();
            WalkDistribution::parse(spec, &text)
        }
    }
}
