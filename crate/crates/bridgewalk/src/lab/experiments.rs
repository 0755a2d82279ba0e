use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::ExperimentConfig;
use crate::error::{Error, Result};
use crate::lamination::base_curve;
use crate::mcg_core::{Permutation, WalkDistribution};
use crate::plat::{orbit_components, plat_closure};
use crate::tangle::{
    distance_certificate_with, distance_upper_bound_from, enumerate_disks, CertStatus, DiskSetSample,
    DistanceCertificate, Verification,
};

/// First line of every output file.
pub const NO_WITNESS_NOTE: &str = "# NO_WITNESS depends on the disk bound L: no pair at distance <= 2 was found among disks within L half-twists of the standard ones, which is evidence for distance >= 3, not a proof";

const NO_WITNESS_TEXT: &str = "consistent with d >= 3 (hyperbolic by the distance-3 criterion) up to bound L";
const WITNESS_TEXT: &str = "d <= 2 established; hyperbolicity undetermined";

/// Largest bridge number for which the exact chain on S_2n is run.
const EXACT_MAX_N: usize = 4;

/// Per-sample rows and per-k summary, both CSV text headed by [`NO_WITNESS_NOTE`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub rows: String,
    pub summary: String,
    pub notices: Vec<String>,
}

struct Table {
    wtr: csv::Writer<Vec<u8>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        let mut wtr = csv::WriterBuilder::new().from_writer(Vec::new());
        wtr.write_record(header).expect("in-memory write");
        Table { wtr }
    }

    fn row<I: IntoIterator<Item = String>>(&mut self, fields: I) {
        self.wtr.write_record(fields.into_iter().collect::<Vec<_>>()).expect("in-memory write");
    }

    fn finish(self, trailer: &[String]) -> String {
        let body = String::from_utf8(self.wtr.into_inner().expect("in-memory flush")).expect("csv is utf-8");
        let mut out = format!("{NO_WITNESS_NOTE}\n{body}");
        for t in trailer {
            out.push_str(t);
            out.push('\n');
        }
        out
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample variance; zero for a single sample.
fn variance(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64
}

/// Expected component count after k steps, from the exact distribution of the
/// strand permutation. `None` when n is too large for the chain.
pub fn exact_mean_components(dist: &WalkDistribution, k: usize) -> Option<BigRational> {
    let spec = dist.spec();
    if spec.n() > EXACT_MAX_N {
        return None;
    }
    let size = spec.punctures();
    let weights = dist.integer_weights();
    let total: u64 = weights.iter().sum();
    let swaps: Vec<usize> = dist.support().iter().map(|(g, _)| g.index - 1).collect();
    // Path weight of each reachable permutation (0-based images).
    let mut mass: HashMap<Vec<u8>, BigInt> = HashMap::new();
    mass.insert((0..size as u8).collect(), BigInt::one());
    for _ in 0..k {
        let mut next: HashMap<Vec<u8>, BigInt> = HashMap::with_capacity(mass.len() * 2);
        for (perm, m) in &mass {
            for (&i, &w) in swaps.iter().zip(&weights) {
                // The strands at positions i and i+1 trade places.
                let img: Vec<u8> = perm
                    .iter()
                    .map(|&p| match p as usize {
                        x if x == i => (i + 1) as u8,
                        x if x == i + 1 => i as u8,
                        _ => p,
                    })
                    .collect();
                *next.entry(img).or_insert_with(BigInt::zero) += m * w;
            }
        }
        mass = next;
    }
    let eps: Vec<usize> = (1..=size).map(|x| if x % 2 == 1 { x + 1 } else { x - 1 }).collect();
    let eps = Permutation::from_images(&eps).expect("pairing");
    let mut acc = BigInt::zero();
    for (perm, m) in &mass {
        let images: Vec<usize> = perm.iter().map(|&p| p as usize + 1).collect();
        let pi = Permutation::from_images(&images).expect("chain keeps permutations");
        let top = pi.compose(&eps).compose(&pi.inverse());
        acc += m * BigInt::from(Permutation::orbit_count(size, &[&eps, &top]));
    }
    Some(BigRational::new(acc, num_traits::pow(BigInt::from(total), k)))
}

fn ratio_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn run_components_experiment(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let results = cfg.map_samples(|k, s| {
        let w = cfg.walk(k, s);
        let link = plat_closure(&w);
        link.validate()?;
        Ok(orbit_components(&w))
    })?;
    let mut rows = Table::new(&["k", "sample_id", "components"]);
    for (k, s, c) in &results {
        rows.row([k.to_string(), s.to_string(), c.to_string()]);
    }
    let mut notices = Vec::new();
    if cfg.n > EXACT_MAX_N {
        notices.push(format!("# exact oracle skipped: n = {} exceeds {EXACT_MAX_N}", cfg.n));
    }
    let mut summary = Table::new(&["k", "samples", "mean", "variance", "exact_mean"]);
    for k in distinct_ks(cfg) {
        let xs: Vec<f64> = results.iter().filter(|r| r.0 == k).map(|r| r.2 as f64).collect();
        let exact = exact_mean_components(&cfg.distribution, k).map(|r| ratio_f64(&r).to_string()).unwrap_or_default();
        summary.row([k.to_string(), xs.len().to_string(), mean(&xs).to_string(), variance(&xs).to_string(), exact]);
    }
    Ok(Report { rows: rows.finish(&[]), summary: summary.finish(&notices), notices })
}

fn distinct_ks(cfg: &ExperimentConfig) -> Vec<usize> {
    let mut ks = cfg.k_values.clone();
    ks.sort_unstable();
    ks.dedup();
    ks
}

/// Certificates and their report.
#[derive(Debug, Clone)]
pub struct HyperproxyRun {
    pub report: Report,
    pub disks: DiskSetSample,
    /// `(k, sample_id, certificate)` sorted by (k, sample_id).
    pub certificates: Vec<(usize, u64, DistanceCertificate)>,
}

const STATUSES: [CertStatus; 4] =
    [CertStatus::CommonDisk, CertStatus::DisjointPair, CertStatus::NonFillingPair, CertStatus::NoWitness];

pub fn run_hyperbolicity_proxy(cfg: &ExperimentConfig) -> Result<HyperproxyRun> {
    cfg.validate()?;
    let disks = enumerate_disks(cfg.spec(), cfg.bound);
    let certificates = cfg.map_samples(|k, s| distance_certificate_with(&cfg.walk(k, s), &disks))?;
    let mut rows = Table::new(&[
        "k",
        "sample_id",
        "status",
        "L",
        "witness_a",
        "witness_b",
        "verified",
        "verification",
        "interpretation",
    ]);
    for (k, s, c) in &certificates {
        let (a, b) = c.witness.map(|(a, b)| (a.to_string(), b.to_string())).unwrap_or_default();
        let how = match c.verification {
            Some(Verification::Direct) => "direct",
            Some(Verification::PulledBack) => "pulled_back",
            None => "",
        };
        let text = if c.status == CertStatus::NoWitness { NO_WITNESS_TEXT } else { WITNESS_TEXT };
        rows.row([
            k.to_string(),
            s.to_string(),
            c.status.to_string(),
            c.bound.to_string(),
            a,
            b,
            c.verified.to_string(),
            how.to_string(),
            text.to_string(),
        ]);
    }
    let mut header = vec!["k".to_string(), "samples".to_string()];
    header.extend(STATUSES.iter().map(|s| s.as_str().to_string()));
    header.extend(STATUSES.iter().map(|s| format!("frac_{}", s.as_str().to_ascii_lowercase())));
    header.push("witness_rate".into());
    let mut summary = Table::new(&header.iter().map(String::as_str).collect::<Vec<_>>());
    for k in distinct_ks(cfg) {
        let here: Vec<CertStatus> = certificates.iter().filter(|c| c.0 == k).map(|c| c.2.status).collect();
        let total = here.len();
        let counts: Vec<usize> = STATUSES.iter().map(|s| here.iter().filter(|x| *x == s).count()).collect();
        let mut fields = vec![k.to_string(), total.to_string()];
        fields.extend(counts.iter().map(|c| c.to_string()));
        fields.extend(counts.iter().map(|&c| (c as f64 / total as f64).to_string()));
        let witnesses = total - counts[3];
        fields.push((witnesses as f64 / total as f64).to_string());
        summary.row(fields);
    }
    let report = Report { rows: rows.finish(&[]), summary: summary.finish(&[]), notices: Vec::new() };
    Ok(HyperproxyRun { report, disks, certificates })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthPoint {
    pub k: usize,
    /// Samples with nonzero intersection.
    pub used: usize,
    /// Samples whose curve misses δ_{1,2}; excluded from the fit.
    pub flagged: usize,
    pub mean_log2_i: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthSummary {
    pub points: Vec<GrowthPoint>,
    /// Least-squares fit of mean log2 i against k; absent with fewer than two usable k.
    pub slope: Option<f64>,
    pub intercept: Option<f64>,
    /// Smallest and largest mean(log2 i)/k over k > 0, reported as the interval [b*k, a*k].
    pub rate_low: Option<f64>,
    pub rate_high: Option<f64>,
}

/// log2 of a positive integer, exact to f64 precision for any size.
fn log2_big(i: &BigInt) -> f64 {
    let bits = i.bits();
    let shift = bits.saturating_sub(64);
    let top: BigInt = i >> shift;
    top.to_f64().expect("fits in f64").log2() + shift as f64
}

fn least_squares(xy: &[(f64, f64)]) -> (f64, f64) {
    let n = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / n;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

pub fn run_distance_growth(cfg: &ExperimentConfig) -> Result<(Report, GrowthSummary)> {
    cfg.validate()?;
    let ks = distinct_ks(cfg);
    if ks.len() < 2 {
        return Err(Error::Config("the growth experiment needs at least two walk lengths".into()));
    }
    let spec = cfg.spec();
    let delta = base_curve(spec, 1, 2)?;
    let results = cfg.map_samples(|k, s| {
        let w = cfg.walk(k, s);
        // i(δ_{1,2}, c) is twice the number of times c crosses the edge between punctures 1 and 2.
        let e1 = delta.coords().applied(w.letters()).to_normal().e[1].clone();
        let i: BigInt = 2 * e1;
        if i.is_zero() {
            return Ok(None);
        }
        Ok(Some((log2_big(&i), distance_upper_bound_from(&i)?)))
    })?;
    let mut rows = Table::new(&["k", "sample_id", "log2_i", "upper_bound", "flagged"]);
    for (k, s, r) in &results {
        let (l, u, f) = match r {
            Some((l, u)) => (l.to_string(), u.to_string(), "false"),
            None => (String::new(), String::new(), "true"),
        };
        rows.row([k.to_string(), s.to_string(), l, u, f.to_string()]);
    }
    let mut points = Vec::new();
    for &k in &ks {
        let here: Vec<&Option<(f64, u64)>> = results.iter().filter(|r| r.0 == k).map(|r| &r.2).collect();
        let logs: Vec<f64> = here.iter().filter_map(|r| r.map(|(l, _)| l)).collect();
        points.push(GrowthPoint {
            k,
            used: logs.len(),
            flagged: here.len() - logs.len(),
            mean_log2_i: (!logs.is_empty()).then(|| mean(&logs)),
        });
    }
    let xy: Vec<(f64, f64)> = points.iter().filter_map(|p| p.mean_log2_i.map(|m| (p.k as f64, m))).collect();
    let (slope, intercept) = if xy.len() >= 2 {
        let (s, b) = least_squares(&xy);
        (Some(s), Some(b))
    } else {
        (None, None)
    };
    let rates: Vec<f64> = xy.iter().filter(|p| p.0 > 0.0).map(|p| p.1 / p.0).collect();
    let rate_low = rates.iter().copied().reduce(f64::min);
    let rate_high = rates.iter().copied().reduce(f64::max);
    let growth = GrowthSummary { points, slope, intercept, rate_low, rate_high };

    let mut summary = Table::new(&["k", "used", "flagged", "mean_log2_i"]);
    for p in &growth.points {
        summary.row([
            p.k.to_string(),
            p.used.to_string(),
            p.flagged.to_string(),
            p.mean_log2_i.map(|m| m.to_string()).unwrap_or_default(),
        ]);
    }
    let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_else(|| "undefined".into());
    let trailer = vec![
        format!("# fit: slope={} intercept={}", opt(growth.slope), opt(growth.intercept)),
        format!(
            "# observed rates: mean log2 i lies in [b*k, a*k] with b={} a={} (b <= a)",
            opt(growth.rate_low),
            opt(growth.rate_high)
        ),
    ];
    Ok((Report { rows: rows.finish(&[]), summary: summary.finish(&trailer), notices: Vec::new() }, growth))
}
