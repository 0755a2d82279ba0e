//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use bridgewalk::diagram::{fills, intersection_number, joint_diagram, reduce_to_minimal};
use bridgewalk::lab::{
    exact_mean_components, run_components_experiment, run_distance_growth, run_hyperbolicity_proxy,
    ExperimentConfig, HyperproxyRun,
};
use bridgewalk::lamination::{base_curve, CurveClass};
use bridgewalk::mcg_core::{McgGenerator, McgWord, SurfaceSpec};
use bridgewalk::plat::{orbit_components, plat_closure};
use bridgewalk::tangle::{
    is_disk_geometric, is_disk_standard, returning_arc_surgery, standard_admissible_system, CertStatus,
};
use bridgewalk::Error;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_word(spec: SurfaceSpec, rng: &mut ChaCha8Rng, len: usize) -> McgWord {
    let gens = McgGenerator::all(spec);
    McgWord::new(spec, (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect()).unwrap()
}

fn random_curve(spec: SurfaceSpec, rng: &mut ChaCha8Rng, max_len: usize) -> CurveClass {
    let m = spec.line_punctures();
    let (i, j) = loop {
        let i = rng.gen_range(1..m);
        let j = rng.gen_range(i + 1..=m);
        if (i, j) != (1, m) {
            break (i, j);
        }
    };
    let len = rng.gen_range(0..=max_len);
    base_curve(spec, i, j).unwrap().apply_word(&random_word(spec, rng, len))
}

fn gen(spec: SurfaceSpec, i: usize, s: i8) -> McgGenerator {
    McgGenerator::new(spec, i, s).unwrap()
}

fn relation_suite() -> Outcome {
    let mut checks = 0;
    for n in [3, 4] {
        let spec = SurfaceSpec::new(n).unwrap();
        let k = spec.max_generator();
        let mut rng = ChaCha8Rng::seed_from_u64(100 + n as u64);
        let mut made = 0;
        while made < 200 {
            let c = random_curve(spec, &mut rng, 30);
            if c.norm().to_u64().map_or(true, |x| x > 10_000) {
                continue;
            }
            made += 1;
            let x = c.coords();
            for i in 1..=k {
                for s in [1, -1] {
                    let g = gen(spec, i, s);
                    ensure(x.applied(&[g, g.inverse()]) == *x, || format!("inverse fails for {g} on {c}"))?;
                    checks += 1;
                }
                if i < k {
                    let (a, b) = (gen(spec, i, 1), gen(spec, i + 1, 1));
                    ensure(x.applied(&[a, b, a]) == x.applied(&[b, a, b]), || format!("braid {i} fails on {c}"))?;
                    checks += 1;
                }
                for j in i + 2..=k {
                    let (a, b) = (gen(spec, i, 1), gen(spec, j, -1));
                    ensure(x.applied(&[a, b]) == x.applied(&[b, a]), || format!("commutation {i},{j} on {c}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} exact coordinate identities on 400 curves"))
}

fn disk_oracles() -> Outcome {
    let spec = SurfaceSpec::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut disks, mut chains, mut steps) = (0, 0, 0);
    for _ in 0..500 {
        let c = random_curve(spec, &mut rng, 25);
        let alg = is_disk_standard(&c).map_err(|e| e.to_string())?;
        let geo = is_disk_geometric(&c).map_err(|e| e.to_string())?;
        ensure(alg == geo, || format!("oracles disagree on {c}"))?;
        if !alg {
            continue;
        }
        disks += 1;
        surgery_chain(&c, &mut chains, &mut steps)?;
    }
    // Random disks pushed around by tangle-preserving words.
    let moves: Vec<McgWord> = ["1", "3", "2 1 1 2", "2 1 3 2", "4 3 3 4"]
        .iter()
        .flat_map(|t| {
            let w = McgWord::parse(spec, t).unwrap();
            [w.inverse(), w]
        })
        .collect();
    let mut pushed = 0;
    while pushed < 200 {
        let mut w = McgWord::identity(spec);
        for _ in 0..rng.gen_range(1..=6) {
            w = w.concat(&moves[rng.gen_range(0..moves.len())]);
        }
        let i = 2 * rng.gen_range(0..2) + 1;
        let c = base_curve(spec, i, i + 1).unwrap().apply_word(&w);
        if c.norm().to_u64().map_or(true, |x| x > 20_000) {
            continue;
        }
        pushed += 1;
        let alg = is_disk_standard(&c).map_err(|e| e.to_string())?;
        let geo = is_disk_geometric(&c).map_err(|e| e.to_string())?;
        ensure(alg && geo, || format!("image of a disk under {w} rejected ({alg}, {geo})"))?;
        surgery_chain(&c, &mut chains, &mut steps)?;
    }
    Ok(format!(
        "500/500 agree ({disks} disks), 200/200 pushed disks accepted, {chains} surgery chains, {steps} strictly decreasing steps"
    ))
}

fn surgery_chain(c: &CurveClass, chains: &mut usize, steps: &mut usize) -> Result<(), String> {
    let mut sys = standard_admissible_system(c.spec());
    let mut count = sys.intersection_count(c).map_err(|e| e.to_string())?;
    if count > 0 {
        *chains += 1;
    }
    while count > 0 {
        let (next, left) = returning_arc_surgery(c, &sys).map_err(|e| e.to_string())?;
        ensure(left < count, || format!("surgery did not shrink {count} -> {left} on {c}"))?;
        sys = next;
        count = left;
        *steps += 1;
    }
    Ok(())
}

fn intersection_properties() -> Outcome {
    let spec = SurfaceSpec::new(3).unwrap();
    let d12 = base_curve(spec, 1, 2).unwrap();
    let d23 = base_curve(spec, 2, 3).unwrap();
    let hand = reduce_to_minimal(&joint_diagram(&d12, &d23).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(hand.crossing_count() == 2, || format!("i(d12, d23) drawn as {}", hand.crossing_count()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let a = random_curve(spec, &mut rng, 8);
        let b = random_curve(spec, &mut rng, 8);
        let len = rng.gen_range(0..=8);
        let w = random_word(spec, &mut rng, len);
        let i = intersection_number(&a, &b).map_err(|e| e.to_string())?;
        let j = intersection_number(&b, &a).map_err(|e| e.to_string())?;
        let k = intersection_number(&a.apply_word(&w), &b.apply_word(&w)).map_err(|e| e.to_string())?;
        ensure(i == j && i == k, || format!("i = {i}, reversed {j}, moved {k} for {a} / {b} / {w}"))?;
    }
    Ok("symmetry and invariance on 200 triples; i(d12, d23) = 2".into())
}

/// Criterion 4 as CSV: one line per walk.
fn component_crosscheck(workers: usize) -> Result<String, String> {
    let cfg = ExperimentConfig::new(3, vec![50], 1000, 44, 0).and_then(|c| c.with_workers(workers)).unwrap();
    let rows = cfg
        .map_samples(|k, s| {
            let w = cfg.walk(k, s).prefix((s as usize * 37) % (k + 1));
            let link = plat_closure(&w);
            link.validate()?;
            let orbits = orbit_components(&w);
            if link.components != orbits {
                return Err(Error::Invariant(format!("{w}: traversal {} vs orbits {orbits}", link.components)));
            }
            Ok(link.csv_string().lines().nth(1).unwrap().to_string())
        })
        .map_err(|e| e.to_string())?;
    let mut out = String::from("word,n,components,crossings\n");
    for (_, _, r) in rows {
        out.push_str(&r);
        out.push('\n');
    }
    Ok(out)
}

fn criterion4(csv: &str) -> Outcome {
    let id = plat_closure(&McgWord::identity(SurfaceSpec::new(3).unwrap()));
    ensure(id.components == 3, || format!("identity gives {} components", id.components))?;
    let lines = csv.lines().count() - 1;
    ensure(lines == 1000, || format!("{lines} walks"))?;
    Ok("1000 walks agree; identity gives 3 components".into())
}

fn components_config(workers: usize) -> ExperimentConfig {
    ExperimentConfig::new(3, vec![20], 10_000, 55, 0).and_then(|c| c.with_workers(workers)).unwrap()
}

fn criterion5(cfg: &ExperimentConfig, summary: &str) -> Outcome {
    let row: Vec<&str> = summary.lines().last().unwrap().split(',').collect();
    let (mean, var): (f64, f64) = (row[2].parse().unwrap(), row[3].parse().unwrap());
    let exact = exact_mean_components(&cfg.distribution, 20).unwrap().to_f64().unwrap();
    let se = (var / 10_000.0).sqrt();
    let z = (mean - exact) / se;
    ensure(z.abs() <= 3.0, || format!("mean {mean} vs exact {exact}, z = {z:.2}"))?;
    Ok(format!("mean {mean:.4} vs exact {exact:.4} ({z:+.2} SE)"))
}

fn hyper_config(workers: usize) -> ExperimentConfig {
    ExperimentConfig::new(3, vec![4, 8, 16, 32], 500, 66, 6).and_then(|c| c.with_workers(workers)).unwrap()
}

fn witness_rates(run: &HyperproxyRun) -> Vec<(usize, f64)> {
    let mut ks: Vec<usize> = run.certificates.iter().map(|c| c.0).collect();
    ks.dedup();
    ks.iter()
        .map(|&k| {
            let here: Vec<_> = run.certificates.iter().filter(|c| c.0 == k).collect();
            let w = here.iter().filter(|c| c.2.status != CertStatus::NoWitness).count();
            (k, w as f64 / here.len() as f64)
        })
        .collect()
}

fn criterion6(run: &HyperproxyRun) -> Outcome {
    let rates = witness_rates(run);
    let text: Vec<String> = rates.iter().map(|(k, r)| format!("k={k}: {:.3}", r)).collect();
    let monotone = rates.windows(2).all(|p| p[1].1 <= p[0].1);
    let drop = rates.last().unwrap().1 < rates[0].1;
    ensure(monotone && drop, || format!("witness rates {}", text.join(", ")))?;
    Ok(format!("witness rates {}", text.join(", ")))
}

/// Re-checks every witness with the diagram operations, falling back to the
/// pulled-back pair when the direct image is too large to draw.
fn criterion7(run: &HyperproxyRun) -> Outcome {
    let spec = run.disks.spec;
    let (mut direct, mut pulled, mut total) = (0, 0, 0);
    for (k, s, cert) in &run.certificates {
        let Some((i, j)) = cert.witness else { continue };
        total += 1;
        let check = |a: &CurveClass, b: &CurveClass| -> Result<bool, Error> {
            Ok(match cert.status {
                CertStatus::CommonDisk => a.coords() == b.coords(),
                CertStatus::DisjointPair => intersection_number(a, b)? == 0,
                CertStatus::NonFillingPair => !fills(a, b)?,
                CertStatus::NoWitness => false,
            })
        };
        let a = &run.disks.curves[i];
        let b = CurveClass::from_coords(spec, run.disks.curves[j].coords().applied(cert.word.letters()))
            .map_err(|e| e.to_string())?;
        let ok = match check(a, &b) {
            Ok(v) => {
                direct += 1;
                v
            }
            Err(Error::TooLarge(_)) => {
                pulled += 1;
                let ha = a.history().unwrap();
                let hb = run.disks.curves[j].history().unwrap();
                let word = ha.word.inverse().concat(&cert.word).concat(&hb.word);
                let base_a = base_curve(spec, ha.base.0, ha.base.1).unwrap();
                let base_b = base_curve(spec, hb.base.0, hb.base.1).unwrap();
                let moved = CurveClass::from_coords(spec, base_b.coords().applied(word.letters()))
                    .map_err(|e| e.to_string())?;
                check(&base_a, &moved).map_err(|e| e.to_string())?
            }
            Err(e) => return Err(e.to_string()),
        };
        ensure(ok && cert.verified, || format!("witness for k={k} sample {s} ({}) fails", cert.status))?;
    }
    Ok(format!("{total} witnesses re-verified ({direct} direct, {pulled} pulled back), 0 failures"))
}

fn growth_config(workers: usize) -> ExperimentConfig {
    ExperimentConfig::new(3, vec![5, 10, 20, 40], 200, 88, 0).and_then(|c| c.with_workers(workers)).unwrap()
}

/// All CSV text produced by criteria 4-8 under one worker count.
struct Artifacts {
    files: Vec<(&'static str, String)>,
}

fn produce(workers: usize) -> Result<(Artifacts, HyperproxyRun, f64), String> {
    let c4 = component_crosscheck(workers)?;
    let c5 = run_components_experiment(&components_config(workers)).map_err(|e| e.to_string())?;
    let hyper = run_hyperbolicity_proxy(&hyper_config(workers)).map_err(|e| e.to_string())?;
    let (growth, summary) = run_distance_growth(&growth_config(workers)).map_err(|e| e.to_string())?;
    let slope = summary.slope.unwrap_or(f64::NAN);
    let files = vec![
        ("crosscheck", c4),
        ("components_rows", c5.rows),
        ("components_summary", c5.summary),
        ("hyperproxy_rows", hyper.report.rows.clone()),
        ("hyperproxy_summary", hyper.report.summary.clone()),
        ("growth_rows", growth.rows),
        ("growth_summary", growth.summary),
    ];
    Ok((Artifacts { files }, hyper, slope))
}

fn report(id: u32, outcome: Outcome, start: Instant, failures: &mut u32) {
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(msg) => println!("PASS criterion {id}: {msg} [{secs:.1}s]"),
        Err(msg) => {
            *failures += 1;
            println!("FAIL criterion {id}: {msg} [{secs:.1}s]")
        }
    }
}

fn guarded<F: FnOnce() -> Outcome>(f: F) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    })
}

fn main() {
    let mut failures = 0;
    for (id, f) in [(1, relation_suite as fn() -> Outcome), (2, disk_oracles), (3, intersection_properties)] {
        let t = Instant::now();
        report(id, guarded(f), t, &mut failures);
    }

    let t = Instant::now();
    let produced = catch_unwind(AssertUnwindSafe(|| produce(1))).unwrap_or_else(|_| Err("panicked".into()));
    match produced {
        Err(e) => {
            for id in 4..=9 {
                report(id, Err(format!("could not produce outputs: {e}")), t, &mut failures);
            }
        }
        Ok((art, hyper, slope)) => {
            let elapsed = t.elapsed().as_secs_f64();
            println!("# criteria 4-8 outputs produced with 1 worker in {elapsed:.1}s");
            let csv4 = &art.files[0].1;
            let t4 = Instant::now();
            report(4, guarded(|| criterion4(csv4)), t4, &mut failures);
            let t5 = Instant::now();
            report(5, guarded(|| criterion5(&components_config(1), &art.files[2].1)), t5, &mut failures);
            let t6 = Instant::now();
            report(6, guarded(|| criterion6(&hyper)), t6, &mut failures);
            let t7 = Instant::now();
            report(7, guarded(|| criterion7(&hyper)), t7, &mut failures);
            let t8 = Instant::now();
            let c8 = if slope > 0.0 { Ok(format!("slope {slope:.4} > 0")) } else { Err(format!("slope {slope}")) };
            report(8, c8, t8, &mut failures);
            let t9 = Instant::now();
            let c9 = guarded(|| {
                for workers in [4, 8] {
                    let (again, _, _) = produce(workers)?;
                    for ((name, a), (_, b)) in art.files.iter().zip(&again.files) {
                        ensure(a == b, || format!("{name} differs between 1 and {workers} workers"))?;
                    }
                }
                Ok(format!("{} CSVs byte-identical under 1, 4 and 8 workers", art.files.len()))
            });
            report(9, c9, t9, &mut failures);
        }
    }

    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
