use bridgewalk::lamination::{base_curve, cutting, CurveClass, LamCoords, Meander};
use bridgewalk::mcg_core::{act_pi1, McgGenerator, McgWord, Pi1Word, SurfaceSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_word(spec: SurfaceSpec, rng: &mut ChaCha8Rng, len: usize) -> McgWord {
    let gens = McgGenerator::all(spec);
    McgWord::new(spec, (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect()).unwrap()
}

fn random_base(spec: SurfaceSpec, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let m = spec.line_punctures();
    loop {
        let i = rng.gen_range(1..m);
        let j = rng.gen_range(i + 1..=m);
        if (i, j) != (1, m) {
            return (i, j);
        }
    }
}

/// Orientation-free canonical form of a loop word.
fn unoriented(w: &Pi1Word) -> Pi1Word {
    std::cmp::min(w.clone(), w.inverse())
}

#[test]
fn coordinate_rules_match_explicit_twists() {
    for n in 2..=5 {
        let spec = SurfaceSpec::new(n).unwrap();
        let m = spec.line_punctures();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..400 {
            let (i, j) = random_base(spec, &mut rng);
            let mut seq = cutting::round(i, j);
            let mut coords = base_curve(spec, i, j).unwrap().coords().clone();
            let w = random_word(spec, &mut rng, 12);
            for &g in w.letters().iter().rev() {
                seq = cutting::twist(&seq, g);
                coords.apply(g);
                assert_eq!(coords, cutting::normal_coords(&seq, m).to_dynnikov());
            }
        }
    }
}

#[test]
fn inverse_map_recovers_normal_coordinates() {
    let spec = SurfaceSpec::new(4).unwrap();
    let m = spec.line_punctures();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let (i, j) = random_base(spec, &mut rng);
        let mut seq = cutting::round(i, j);
        for &g in random_word(spec, &mut rng, 10).letters() {
            seq = cutting::twist(&seq, g);
        }
        let nc = cutting::normal_coords(&seq, m);
        assert_eq!(nc.to_dynnikov().to_normal(), nc);
    }
}

#[test]
fn drawing_reproduces_the_curve() {
    let spec = SurfaceSpec::new(3).unwrap();
    let m = spec.line_punctures();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..300 {
        let (i, j) = random_base(spec, &mut rng);
        let c = base_curve(spec, i, j).unwrap().apply_word(&random_word(spec, &mut rng, 15));
        let mdr = Meander::from_normal(&c.normal()).unwrap();
        let comps = mdr.components();
        assert_eq!(comps.len(), 1);
        let seq = mdr.cutting_sequence(&comps[0]);
        assert_eq!(cutting::reduce(&seq), seq, "drawn curve is taut");
        assert_eq!(cutting::normal_coords(&seq, m).to_dynnikov(), *c.coords());
        // Sync: the loop word carried along equals the word read from the drawing.
        let drawn = Pi1Word::reduce(&cutting::pi1_word(&seq));
        assert_eq!(unoriented(&drawn), unoriented(c.word()));
        // Norm two ways: coordinate formula and point count.
        assert_eq!(c.norm_u64().unwrap() as usize, mdr.len());
    }
}

#[test]
fn multicurves_are_detected() {
    let spec = SurfaceSpec::new(3).unwrap();
    let a = cutting::normal_coords(&cutting::round(1, 2), 5);
    let b = cutting::normal_coords(&cutting::round(4, 5), 5);
    let sum = |x: &Vec<num_bigint::BigInt>, y: &Vec<num_bigint::BigInt>| -> Vec<num_bigint::BigInt> {
        x.iter().zip(y).map(|(p, q)| p + q).collect()
    };
    let nc = bridgewalk::lamination::NormalCoords { e: sum(&a.e, &b.e), u: sum(&a.u, &b.u), l: sum(&a.l, &b.l) };
    let c = CurveClass::from_coords(spec, nc.to_dynnikov()).unwrap();
    assert!(!c.connected());
    assert!(!c.is_essential());
}

#[test]
fn sync_invariant_by_recomputation() {
    let spec = SurfaceSpec::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let (i, j) = random_base(spec, &mut rng);
        let base = base_curve(spec, i, j).unwrap();
        let w = random_word(spec, &mut rng, 20);
        let c = base.apply_word(&w);
        assert_eq!(*c.word(), act_pi1(&w, base.word()));
        let h = c.history().unwrap();
        assert_eq!(h.word, w);
        // Stepwise fold equals the word action.
        let mut step = base.clone();
        for &g in w.letters().iter().rev() {
            step = step.apply_generator(g);
        }
        assert_eq!(step.coords(), c.coords());
        assert_eq!(step.word(), c.word());
    }
}

#[test]
fn second_disk_under_sigma_two_encloses_one_and_three() {
    let spec = SurfaceSpec::new(3).unwrap();
    let c = base_curve(spec, 1, 2).unwrap().apply_word(&McgWord::parse(spec, "2").unwrap());
    let seq = c.cutting_sequence().unwrap();
    let sides = cutting::puncture_sides(&seq, 5);
    let inside: Vec<usize> = (1..=5).filter(|&p| sides[p - 1]).collect();
    assert_eq!(inside, vec![1, 3]);
    // The drawn curve is the image of the explicit twist.
    let twisted = cutting::twist(&cutting::round(1, 2), McgGenerator::new(spec, 2, 1).unwrap());
    assert_eq!(cutting::normal_coords(&twisted, 5).to_dynnikov(), *c.coords());
}

proptest! {
    #[test]
    fn generator_then_inverse_is_identity(
        n in 2usize..6,
        word in proptest::collection::vec((1usize..9, any::<bool>()), 0..30),
        g in (1usize..9, any::<bool>()),
    ) {
        let spec = SurfaceSpec::new(n).unwrap();
        let k = spec.max_generator();
        let letters: Vec<McgGenerator> = word
            .iter()
            .map(|&(i, s)| McgGenerator { index: 1 + (i - 1) % k, sign: if s { 1 } else { -1 } })
            .collect();
        let w = McgWord::new(spec, letters).unwrap();
        let c = base_curve(spec, 1, 2).unwrap().apply_word(&w);
        let g = McgGenerator { index: 1 + (g.0 - 1) % k, sign: if g.1 { 1 } else { -1 } };
        let mut x: LamCoords = c.coords().clone();
        x.apply(g);
        x.apply(g.inverse());
        prop_assert_eq!(&x, c.coords());
        let back = c.apply_word(&w.inverse());
        let base = base_curve(spec, 1, 2).unwrap();
        prop_assert_eq!(back.coords(), base.coords());
    }
}
