use bridgewalk::lab::{
    exact_mean_components, run_components_experiment, run_distance_growth, run_hyperbolicity_proxy, ConfigFile,
    ExperimentConfig, NO_WITNESS_NOTE,
};
use bridgewalk::mcg_core::{McgGenerator, McgWord, SurfaceSpec, WalkDistribution};
use bridgewalk::plat::orbit_components;
use bridgewalk::Error;
use num_bigint::BigInt;
use num_rational::BigRational;

fn s3() -> SurfaceSpec {
    SurfaceSpec::new(3).unwrap()
}

/// Data lines of a report table, skipping the note and the header.
fn records(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

/// Average of orbit counts over every word of length k, each word weighted equally.
fn brute_mean(spec: SurfaceSpec, k: usize) -> BigRational {
    let gens = McgGenerator::all(spec);
    let mut total = BigInt::from(0);
    let mut count = BigInt::from(0);
    let mut idx = vec![0usize; k];
    loop {
        let w = McgWord::new(spec, idx.iter().map(|&i| gens[i]).collect()).unwrap();
        total += orbit_components(&w);
        count += 1;
        let mut p = 0;
        while p < k && idx[p] + 1 == gens.len() {
            idx[p] = 0;
            p += 1;
        }
        if p == k {
            break;
        }
        idx[p] += 1;
    }
    BigRational::new(total, count)
}

#[test]
fn exact_chain_matches_enumeration() {
    let d = WalkDistribution::uniform(s3());
    assert_eq!(exact_mean_components(&d, 0).unwrap(), BigRational::from_integer(3.into()));
    assert_eq!(exact_mean_components(&d, 1).unwrap(), BigRational::new(5.into(), 2.into()));
    for k in 2..=4 {
        assert_eq!(exact_mean_components(&d, k).unwrap(), brute_mean(s3(), k), "k = {k}");
    }
    let s2 = SurfaceSpec::new(2).unwrap();
    assert_eq!(exact_mean_components(&WalkDistribution::uniform(s2), 3).unwrap(), brute_mean(s2, 3));
    assert!(exact_mean_components(&WalkDistribution::uniform(SurfaceSpec::new(5).unwrap()), 2).is_none());
    // Non-uniform weights: σ1 three times as likely as σ2.
    let skew = WalkDistribution::parse(s3(), r#"{"support": [[1, 1, 3], [2, 1, 1]]}"#).unwrap();
    let want = BigRational::new(3.into(), 4.into()) * BigRational::from_integer(3.into())
        + BigRational::new(1.into(), 4.into()) * BigRational::from_integer(2.into());
    assert_eq!(exact_mean_components(&skew, 1).unwrap(), want);
}

#[test]
fn components_report() {
    let cfg = ExperimentConfig::new(3, vec![0, 20], 2000, 5, 0).unwrap();
    let r = run_components_experiment(&cfg).unwrap();
    assert!(r.rows.starts_with(NO_WITNESS_NOTE));
    let rows = records(&r.rows);
    assert_eq!(rows.len(), 4000);
    assert!(rows.iter().filter(|x| x[0] == "0").all(|x| x[2] == "3"));
    let summary = records(&r.summary);
    assert_eq!(summary[0], vec!["0", "2000", "3", "0", "3"]);
    // Summary recomputed from the raw rows matches to the last digit.
    let xs: Vec<f64> = rows.iter().filter(|x| x[0] == "20").map(|x| x[2].parse().unwrap()).collect();
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (xs.len() - 1) as f64;
    assert_eq!(summary[1][2], mean.to_string());
    assert_eq!(summary[1][3], var.to_string());
    let exact: f64 = summary[1][4].parse().unwrap();
    let se = (var / xs.len() as f64).sqrt();
    assert!((mean - exact).abs() <= 4.0 * se, "{mean} vs {exact}");
}

#[test]
fn large_n_skips_the_oracle() {
    let cfg = ExperimentConfig::new(5, vec![2], 3, 1, 0).unwrap();
    let r = run_components_experiment(&cfg).unwrap();
    assert_eq!(r.notices.len(), 1);
    assert!(r.summary.contains("exact oracle skipped"));
    assert_eq!(records(&r.summary)[0][4], "");
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let base = ExperimentConfig::new(3, vec![3, 12], 40, 9, 3).unwrap();
    let runs: Vec<_> = [1, 3, 8]
        .iter()
        .map(|&w| {
            let cfg = base.clone().with_workers(w).unwrap();
            (
                run_components_experiment(&cfg).unwrap(),
                run_distance_growth(&cfg).unwrap().0,
                run_hyperbolicity_proxy(&cfg).unwrap().report,
            )
        })
        .collect();
    assert!(runs.windows(2).all(|p| p[0] == p[1]));
}

#[test]
fn hyperproxy_trivial_cases() {
    let cfg = ExperimentConfig::new(3, vec![0], 5, 1, 2).unwrap();
    let run = run_hyperbolicity_proxy(&cfg).unwrap();
    assert!(run.certificates.iter().all(|c| c.2.status.as_str() == "COMMON_DISK"));
    let sigma1 = WalkDistribution::point_mass(McgGenerator::new(s3(), 1, 1).unwrap(), s3()).unwrap();
    let cfg = ExperimentConfig::new(3, vec![1, 7], 4, 1, 2).unwrap().with_distribution(sigma1).unwrap();
    let run = run_hyperbolicity_proxy(&cfg).unwrap();
    assert!(run.certificates.iter().all(|c| c.2.status.as_str() == "COMMON_DISK"));
    for row in records(&run.report.summary) {
        let counts: usize = row[2..6].iter().map(|x| x.parse::<usize>().unwrap()).sum();
        assert_eq!(counts.to_string(), row[1]);
        assert_eq!(row[6], "1");
    }
    assert!(run.report.rows.contains("d <= 2 established; hyperbolicity undetermined"));
}

#[test]
fn growth_flags_fixed_curves() {
    let sigma1 = WalkDistribution::point_mass(McgGenerator::new(s3(), 1, -1).unwrap(), s3()).unwrap();
    let cfg = ExperimentConfig::new(3, vec![2, 4], 6, 1, 0).unwrap().with_distribution(sigma1).unwrap();
    let (report, summary) = run_distance_growth(&cfg).unwrap();
    assert!(records(&report.rows).iter().all(|r| r[4] == "true"));
    assert!(summary.points.iter().all(|p| p.used == 0 && p.mean_log2_i.is_none()));
    assert_eq!(summary.slope, None);
    let single = ExperimentConfig::new(3, vec![4], 6, 1, 0).unwrap();
    assert!(matches!(run_distance_growth(&single), Err(Error::Config(_))));
}

#[test]
fn growth_rows_and_slope() {
    let cfg = ExperimentConfig::new(3, vec![5, 10, 20], 60, 2, 0).unwrap();
    let (report, summary) = run_distance_growth(&cfg).unwrap();
    assert!(summary.slope.unwrap() > 0.0);
    // Doubling k extends each sample's walk.
    for s in 0..60 {
        let short = cfg.walk(10, s);
        assert_eq!(cfg.walk(20, s).prefix(10), short);
    }
    for r in records(&report.rows).iter().filter(|r| r[4] == "false") {
        let l: f64 = r[2].parse().unwrap();
        let u: u64 = r[3].parse().unwrap();
        assert!(u as f64 >= 2.0 + 2.0 * l - 1e-9);
    }
    assert!(report.summary.contains("# fit: slope="));
}

#[test]
fn config_files() {
    let toml = r#"
        n = 3
        k = [4, 8]
        samples = 10
        seed = 7
        bound = 2
        support = [[1, 1, "1/2"], [2, -1, 1]]
    "#;
    let c = ConfigFile::parse(toml).unwrap();
    assert_eq!(c.k, Some(vec![4, 8]));
    let json = r#"{"n": 4, "k_values": [1], "samples": 3, "L": 5}"#;
    let j = ConfigFile::parse(json).unwrap();
    assert_eq!((j.n, j.bound), (Some(4), Some(5)));
    assert!(matches!(ConfigFile::parse("n = 3\nfoo = 1"), Err(Error::Config(_))));
    assert!(matches!(ExperimentConfig::new(3, vec![], 10, 0, 0), Err(Error::Config(_))));
    assert!(matches!(ExperimentConfig::new(3, vec![1], 0, 0, 0), Err(Error::Config(_))));
}
