//! Half-twist generators, words, random walks and the two cheap group actions
//! (puncture permutations and the Artin action on the free group).
//!
//! Punctures 1..2n-1 sit on a horizontal line and puncture 2n is the point at
//! infinity. The generator `σ_i` (1 ≤ i ≤ 2n-2) is the half-twist exchanging
//! punctures `i` and `i+1`. Words act on the left: the rightmost letter is
//! applied first, so `act(vw, u) = act(v, act(w, u))`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Deserialize;

use crate::error::{Error, Result};

/// The 2n-punctured sphere carrying the bridge sphere of an n-bridge presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceSpec {
    n: usize,
}

impl SurfaceSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Config(format!("bridge number must be at least 2, got {n}")));
        }
        Ok(SurfaceSpec { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of punctures, 2n.
    pub fn punctures(&self) -> usize {
        2 * self.n
    }

    /// Punctures on the line (all but the one at infinity), 2n-1.
    pub fn line_punctures(&self) -> usize {
        2 * self.n - 1
    }

    /// Largest generator index, 2n-2.
    pub fn max_generator(&self) -> usize {
        2 * self.n - 2
    }

    /// Whether the distance-3 hyperbolicity criterion is meaningful. n = 2 is
    /// accepted, but the four-punctured sphere has no disjoint essential curves.
    pub fn distance_criterion_applies(&self) -> bool {
        self.n >= 3
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct McgGenerator {
    pub index: usize,
    pub sign: i8,
}

impl McgGenerator {
    pub fn new(spec: SurfaceSpec, index: usize, sign: i8) -> Result<Self> {
        if index == 0 || index > spec.max_generator() {
            return Err(Error::Config(format!(
                "generator index {index} outside 1..={} for n={}",
                spec.max_generator(),
                spec.n()
            )));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::Config(format!("generator sign must be +1 or -1, got {sign}")));
        }
        Ok(McgGenerator { index, sign })
    }

    pub fn inverse(self) -> Self {
        McgGenerator { index: self.index, sign: -self.sign }
    }

    /// All 2(2n-2) generators and inverses, ordered σ_1, σ_1^-1, σ_2, ...
    pub fn all(spec: SurfaceSpec) -> Vec<McgGenerator> {
        (1..=spec.max_generator())
            .flat_map(|i| [McgGenerator { index: i, sign: 1 }, McgGenerator { index: i, sign: -1 }])
            .collect()
    }
}

impl fmt::Display for McgGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-{}", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// A word in the half-twist generators; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct McgWord {
    spec: SurfaceSpec,
    letters: Vec<McgGenerator>,
}

impl McgWord {
    pub fn identity(spec: SurfaceSpec) -> Self {
        McgWord { spec, letters: Vec::new() }
    }

    pub fn new(spec: SurfaceSpec, letters: Vec<McgGenerator>) -> Result<Self> {
        for g in &letters {
            McgGenerator::new(spec, g.index, g.sign)?;
        }
        Ok(McgWord { spec, letters })
    }

    /// Builds a word from signed indices, e.g. `[2, -1, 3]`.
    pub fn from_signed(spec: SurfaceSpec, signed: &[i64]) -> Result<Self> {
        let letters = signed
            .iter()
            .map(|&s| {
                if s == 0 {
                    return Err(Error::Parse("generator 0 does not exist".into()));
                }
                McgGenerator::new(spec, s.unsigned_abs() as usize, if s > 0 { 1 } else { -1 })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(McgWord { spec, letters })
    }

    /// Parses the space-separated signed-integer form, e.g. `"2 -1 3"`.
    pub fn parse(spec: SurfaceSpec, text: &str) -> Result<Self> {
        let signed = text
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad generator token {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_signed(spec, &signed)
    }

    pub fn spec(&self) -> SurfaceSpec {
        self.spec
    }

    pub fn letters(&self) -> &[McgGenerator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        McgWord { spec: self.spec, letters: self.letters.iter().rev().map(|g| g.inverse()).collect() }
    }

    /// The product `self · other`.
    pub fn concat(&self, other: &McgWord) -> Self {
        assert_eq!(self.spec, other.spec, "words live on different surfaces");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        McgWord { spec: self.spec, letters }
    }

    /// The product `g · self`.
    pub fn prepend(&self, g: McgGenerator) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        McgWord { spec: self.spec, letters }
    }

    pub fn prefix(&self, len: usize) -> Self {
        McgWord { spec: self.spec, letters: self.letters[..len.min(self.letters.len())].to_vec() }
    }
}

impl fmt::Display for McgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WeightSpec {
    Int(i64),
    Float(f64),
    Text(String),
}

#[derive(Deserialize)]
struct SupportFile {
    support: Vec<(i64, i64, WeightSpec)>,
}

fn parse_weight(w: &WeightSpec) -> Result<BigRational> {
    let r = match w {
        WeightSpec::Int(i) => BigRational::from_integer(BigInt::from(*i)),
        WeightSpec::Float(x) => BigRational::from_float(*x)
            .ok_or_else(|| Error::Config(format!("weight {x} is not finite")))?,
        WeightSpec::Text(t) => parse_rational(t)?,
    };
    if !r.is_positive() {
        return Err(Error::Config(format!("weight {r} must be positive")));
    }
    Ok(r)
}

fn parse_rational(t: &str) -> Result<BigRational> {
    let t = t.trim();
    let bad = || Error::Config(format!("cannot read weight {t:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        let digits = format!("{ip}{fp}");
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), fp.len());
        return Ok(BigRational::new(num, den));
    }
    Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?))
}

/// A finitely supported distribution on generators with positive rational weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkDistribution {
    spec: SurfaceSpec,
    support: Vec<(McgGenerator, BigRational)>,
    // Weights rescaled to a common denominator, cumulative.
    cumulative: Vec<u64>,
}

impl WalkDistribution {
    pub fn new(spec: SurfaceSpec, support: Vec<(McgGenerator, BigRational)>) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::Config("walk distribution has empty support".into()));
        }
        let mut den = BigInt::one();
        for (g, w) in &support {
            McgGenerator::new(spec, g.index, g.sign)?;
            if !w.is_positive() {
                return Err(Error::Config(format!("weight {w} must be positive")));
            }
            den = den.lcm(w.denom());
        }
        let mut cumulative = Vec::with_capacity(support.len());
        let mut total = BigInt::zero();
        for (_, w) in &support {
            total += w.numer() * (&den / w.denom());
            let t = total
                .to_u64()
                .filter(|&t| t < u64::MAX / 2)
                .ok_or_else(|| Error::Config("weights too finely divided".into()))?;
            cumulative.push(t);
        }
        Ok(WalkDistribution { spec, support, cumulative })
    }

    /// Uniform distribution on σ_i^{±1}, i = 1..2n-2.
    pub fn uniform(spec: SurfaceSpec) -> Self {
        let support = McgGenerator::all(spec).into_iter().map(|g| (g, BigRational::one())).collect();
        Self::new(spec, support).expect("uniform support is valid")
    }

    pub fn point_mass(g: McgGenerator, spec: SurfaceSpec) -> Result<Self> {
        Self::new(spec, vec![(g, BigRational::one())])
    }

    /// Reads `{"support": [[index, sign, weight], ...]}` as JSON or TOML.
    pub fn parse(spec: SurfaceSpec, text: &str) -> Result<Self> {
        let file: SupportFile = match serde_json::from_str(text) {
            Ok(f) => f,
            Err(json_err) => toml::from_str(text)
                .map_err(|e| Error::Config(format!("support file is neither JSON ({json_err}) nor TOML ({e})")))?,
        };
        let support = file
            .support
            .iter()
            .map(|(i, s, w)| {
                if *i <= 0 {
                    return Err(Error::Config(format!("generator index {i} must be positive")));
                }
                let g = McgGenerator::new(spec, *i as usize, *s as i8)?;
                Ok((g, parse_weight(w)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(spec, support)
    }

    pub fn spec(&self) -> SurfaceSpec {
        self.spec
    }

    pub fn support(&self) -> &[(McgGenerator, BigRational)] {
        &self.support
    }

    /// Weights over a common denominator; entry k has probability `w[k] / sum(w)`.
    pub fn integer_weights(&self) -> Vec<u64> {
        let mut prev = 0u64;
        self.cumulative
            .iter()
            .map(|&c| {
                let w = c - prev;
                prev = c;
                w
            })
            .collect()
    }

    /// Normalized probability of each support entry.
    pub fn probabilities(&self) -> Vec<f64> {
        let total = *self.cumulative.last().unwrap() as f64;
        let mut prev = 0u64;
        self.cumulative
            .iter()
            .map(|&c| {
                let p = (c - prev) as f64 / total;
                prev = c;
                p
            })
            .collect()
    }

    fn draw(&self, rng: &mut ChaCha12Rng) -> McgGenerator {
        let total = *self.cumulative.last().unwrap();
        let r = rng.gen_range(0..total);
        let k = self.cumulative.partition_point(|&c| c <= r);
        self.support[k].0
    }
}

/// Each step reads from its own window of the keystream so that a letter
/// depends only on (seed, sample, step).
const STEP_WINDOW: u128 = 256;

/// The `step`-th letter of walk number `sample` under `seed`.
pub fn walk_letter(dist: &WalkDistribution, seed: u64, sample: u64, step: u64) -> McgGenerator {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(sample);
    rng.set_word_pos(step as u128 * STEP_WINDOW);
    dist.draw(&mut rng)
}

/// Random walk of length `k`; the same as `sample_walk_indexed` with sample 0.
pub fn sample_walk(dist: &WalkDistribution, k: usize, seed: u64) -> McgWord {
    sample_walk_indexed(dist, k, seed, 0)
}

/// Random walk of length `k` for sample number `sample`. Walks with the same
/// (seed, sample) are prefixes of one another.
pub fn sample_walk_indexed(dist: &WalkDistribution, k: usize, seed: u64, sample: u64) -> McgWord {
    let letters = (0..k as u64).map(|s| walk_letter(dist, seed, sample, s)).collect();
    McgWord { spec: dist.spec, letters }
}

/// A bijection of {1..size}, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation { images: (0..size).collect() }
    }

    /// Builds from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let size = images.len();
        let mut seen = vec![false; size];
        let mut out = Vec::with_capacity(size);
        for &x in images {
            if x == 0 || x > size || seen[x - 1] {
                return Err(Error::Invariant(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            out.push(x - 1);
        }
        Ok(Permutation { images: out })
    }

    /// Transposition of the 1-based points `a` and `b`.
    pub fn transposition(size: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(size);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Number of orbits of the group generated by `gens` on {1..size}.
    pub fn orbit_count(size: usize, gens: &[&Permutation]) -> usize {
        let mut parent: Vec<usize> = (0..size).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = size;
        for g in gens {
            for x in 0..size {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.images[x]));
                if a != b {
                    parent[a] = b;
                    count -= 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

/// Where each strand position ends up: strand starting at position x finishes at π(x).
/// The sign of a generator is irrelevant.
pub fn permutation_image(w: &McgWord) -> Permutation {
    let size = w.spec().punctures();
    let mut pos: Vec<usize> = (0..size).collect();
    let mut at: Vec<usize> = (0..size).collect();
    for g in w.letters() {
        let (i, j) = (g.index - 1, g.index);
        let (s, t) = (at[i], at[j]);
        at.swap(i, j);
        pos[s] = j;
        pos[t] = i;
    }
    Permutation { images: pos }
}

/// A letter of the free group on x_1..x_{2n-1}: `j` for x_j, `-j` for its inverse.
pub type Letter = i32;

fn letter_key(l: Letter) -> u32 {
    2 * (l.unsigned_abs() - 1) + u32::from(l < 0)
}

/// Free reduction of a linear word.
pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Index where the lexicographically least rotation starts (Booth's algorithm).
fn least_rotation(keys: &[u32]) -> usize {
    let n = keys.len();
    if n == 0 {
        return 0;
    }
    let s = |x: isize| keys[x as usize % n];
    let mut f = vec![-1isize; 2 * n];
    let mut k: isize = 0;
    for j in 1..(2 * n) as isize {
        let sj = s(j);
        let mut i = f[(j - k - 1) as usize];
        while i != -1 && sj != s(k + i + 1) {
            if sj < s(k + i + 1) {
                k = j - i - 1;
            }
            i = f[i as usize];
        }
        if sj != s(k + i + 1) {
            if sj < s(k) {
                k = j;
            }
            f[(j - k) as usize] = -1;
        } else {
            f[(j - k) as usize] = i + 1;
        }
    }
    k as usize % n
}

/// A conjugacy class in the free group, stored freely and cyclically reduced in
/// its lexicographically least rotation (order x_1 < x_1^-1 < x_2 < ...).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pi1Word {
    letters: Vec<Letter>,
}

impl Pi1Word {
    pub fn empty() -> Self {
        Pi1Word { letters: Vec::new() }
    }

    /// Free reduction, cyclic reduction and canonical rotation.
    pub fn reduce(raw: &[Letter]) -> Self {
        let mut w = free_reduce(raw);
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[lo] == -w[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        w = w[lo..hi].to_vec();
        let keys: Vec<u32> = w.iter().map(|&l| letter_key(l)).collect();
        let r = least_rotation(&keys);
        w.rotate_left(r);
        Pi1Word { letters: w }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let raw: Vec<Letter> = self.letters.iter().rev().map(|l| -l).collect();
        Self::reduce(&raw)
    }

    /// Checks every letter is one of x_1..x_{2n-1} or an inverse.
    pub fn valid_for(&self, spec: SurfaceSpec) -> bool {
        self.letters.iter().all(|&l| l != 0 && (l.unsigned_abs() as usize) <= spec.line_punctures())
    }
}

impl fmt::Display for Pi1Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Image of a single letter under one generator (Artin action).
fn generator_image(g: McgGenerator, l: Letter, out: &mut Vec<Letter>) {
    let i = g.index as Letter;
    let j = l.abs();
    let img: &[Letter] = if g.sign > 0 {
        if j == i {
            &[i, i + 1, -i]
        } else if j == i + 1 {
            &[i]
        } else {
            &[j]
        }
    } else if j == i {
        &[i + 1]
    } else if j == i + 1 {
        &[-(i + 1), i, i + 1]
    } else {
        &[j]
    };
    if l > 0 {
        out.extend_from_slice(img);
    } else {
        out.extend(img.iter().rev().map(|x| -x));
    }
}

/// Image of a group element (a linear word) under `w`, freely reduced but not
/// cyclically reduced.
pub fn act_pi1_element(w: &McgWord, u: &[Letter]) -> Vec<Letter> {
    let mut cur = u.to_vec();
    let mut next = Vec::new();
    for &g in w.letters().iter().rev() {
        next.clear();
        for &l in &cur {
            generator_image(g, l, &mut next);
        }
        cur = free_reduce(&next);
    }
    cur
}

/// Image of a conjugacy class under `w`.
pub fn act_pi1(w: &McgWord, u: &Pi1Word) -> Pi1Word {
    Pi1Word::reduce(&act_pi1_element(w, u.letters()))
}

/// Alias for `Pi1Word::reduce`.
pub fn reduce(raw: &[Letter]) -> Pi1Word {
    Pi1Word::reduce(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec3() -> SurfaceSpec {
        SurfaceSpec::new(3).unwrap()
    }

    #[test]
    fn surface_spec_bounds() {
        assert!(SurfaceSpec::new(1).is_err());
        let s2 = SurfaceSpec::new(2).unwrap();
        assert!(!s2.distance_criterion_applies());
        assert_eq!(spec3().punctures(), 6);
        assert_eq!(spec3().max_generator(), 4);
    }

    #[test]
    fn word_round_trip() {
        let w = McgWord::parse(spec3(), "2 -1 3").unwrap();
        assert_eq!(w.to_string(), "2 -1 3");
        assert_eq!(w.inverse().to_string(), "-3 1 -2");
        assert!(McgWord::parse(spec3(), "5").is_err());
        assert!(McgWord::parse(spec3(), "0").is_err());
    }

    #[test]
    fn walk_examples() {
        let d = WalkDistribution::uniform(spec3());
        assert!(sample_walk(&d, 0, 1).is_empty());
        let g = McgGenerator::new(spec3(), 1, 1).unwrap();
        let pm = WalkDistribution::point_mass(g, spec3()).unwrap();
        assert_eq!(sample_walk(&pm, 4, 99).to_string(), "1 1 1 1");
        assert_eq!(sample_walk(&d, 10, 7), sample_walk(&d, 10, 7));
        assert_ne!(sample_walk_indexed(&d, 20, 7, 0), sample_walk_indexed(&d, 20, 7, 1));
        let long = sample_walk_indexed(&d, 40, 7, 3);
        assert_eq!(long.prefix(20), sample_walk_indexed(&d, 20, 7, 3));
    }

    #[test]
    fn empty_support_rejected() {
        assert!(WalkDistribution::new(spec3(), vec![]).is_err());
        assert!(WalkDistribution::parse(spec3(), r#"{"support": []}"#).is_err());
    }

    #[test]
    fn support_file_formats() {
        let d = WalkDistribution::parse(spec3(), r#"{"support": [[1, 1, 1], [2, -1, "1/2"], [3, 1, 0.25]]}"#).unwrap();
        let p = d.probabilities();
        assert!((p[0] - 4.0 / 7.0).abs() < 1e-12);
        assert!((p[1] - 2.0 / 7.0).abs() < 1e-12);
        let t = WalkDistribution::parse(spec3(), "support = [[1, 1, 2], [4, -1, \"3\"]]").unwrap();
        assert_eq!(t.support().len(), 2);
        assert!(WalkDistribution::parse(spec3(), r#"{"support": [[1, 1, 0]]}"#).is_err());
        assert!(WalkDistribution::parse(spec3(), r#"{"support": [[9, 1, 1]]}"#).is_err());
    }

    #[test]
    fn inverse_cdf_frequencies() {
        let d = WalkDistribution::parse(spec3(), r#"{"support": [[1, 1, 3], [2, 1, 1]]}"#).unwrap();
        let w = sample_walk(&d, 20000, 11);
        let ones = w.letters().iter().filter(|g| g.index == 1).count() as f64 / 20000.0;
        assert!((ones - 0.75).abs() < 0.02, "{ones}");
    }

    #[test]
    fn permutation_examples() {
        let s = spec3();
        assert!(permutation_image(&McgWord::identity(s)).is_identity());
        assert!(permutation_image(&McgWord::parse(s, "1 1").unwrap()).is_identity());
        let p = permutation_image(&McgWord::parse(s, "1 3").unwrap());
        assert_eq!(p.images(), vec![2, 1, 4, 3, 5, 6]);
        let w = McgWord::parse(s, "1 2 -3 4 2").unwrap();
        assert!(permutation_image(&w.concat(&w.inverse())).is_identity());
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce(&[1, -1]).is_empty());
        assert_eq!(reduce(&[2, 1, -1, 3]).letters(), &[2, 3]);
        assert_eq!(reduce(&[1, 2, -1]).letters(), &[2]);
        assert_eq!(reduce(&[3, 1, 2]).letters(), &[1, 2, 3]);
        assert_eq!(reduce(&[-1, 2, 1, 1]).letters(), &[1, 2]);
        assert_eq!(reduce(&[-2, 1, 3, -1]).letters(), &[1, 3, -1, -2]);
    }

    #[test]
    fn least_rotation_matches_naive() {
        let cases: Vec<Vec<u32>> = vec![vec![3, 1, 2, 1, 1], vec![0, 0, 0], vec![2, 1, 2, 1], vec![5], vec![1, 0, 1, 0, 0, 1]];
        for c in cases {
            let n = c.len();
            let naive = (0..n).min_by_key(|&r| (0..n).map(|t| c[(r + t) % n]).collect::<Vec<_>>()).unwrap();
            let r = least_rotation(&c);
            let rot = |r: usize| (0..n).map(|t| c[(r + t) % n]).collect::<Vec<_>>();
            assert_eq!(rot(r), rot(naive));
        }
    }

    #[test]
    fn act_examples() {
        let s = spec3();
        let w = McgWord::parse(s, "1").unwrap();
        assert_eq!(act_pi1_element(&w, &[1]), vec![1, 2, -1]);
        assert_eq!(act_pi1(&w, &reduce(&[1])).letters(), &[2]);
        let w = McgWord::parse(s, "2").unwrap();
        assert_eq!(act_pi1_element(&w, &[5]), vec![5]);
        let a = McgWord::parse(s, "1 2 1").unwrap();
        let b = McgWord::parse(s, "2 1 2").unwrap();
        assert_eq!(act_pi1_element(&a, &[1]), act_pi1_element(&b, &[1]));
    }

    #[test]
    fn action_composes_left_to_right() {
        let s = spec3();
        let v = McgWord::parse(s, "1 -3").unwrap();
        let w = McgWord::parse(s, "2 4 -1").unwrap();
        let u = [1, -2, 3, 4, -5];
        assert_eq!(act_pi1_element(&v.concat(&w), &u), act_pi1_element(&v, &act_pi1_element(&w, &u)));
    }
}
