//! Simple closed curves on the 2n-punctured sphere, carried by integral
//! lamination coordinates together with a loop word, kept in sync under the
//! mapping class group action.

pub mod coords;
pub mod cutting;
pub mod meander;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

pub use coords::{LamCoords, NormalCoords};
pub use meander::Meander;

use crate::error::{Error, Result};
use crate::mcg_core::{act_pi1, McgGenerator, McgWord, Pi1Word, SurfaceSpec};

/// How a curve was produced: `word` applied to the round curve around `base.0..=base.1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct History {
    pub base: (usize, usize),
    pub word: McgWord,
}

/// A simple closed curve (or, when `connected` is false, a multicurve).
#[derive(Debug, Clone)]
pub struct CurveClass {
    spec: SurfaceSpec,
    coords: LamCoords,
    word: Pi1Word,
    history: Option<History>,
    connected: bool,
}

impl PartialEq for CurveClass {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coords == other.coords
    }
}

impl Eq for CurveClass {}

fn round_coords(spec: SurfaceSpec, i: usize, j: usize) -> LamCoords {
    let m = spec.line_punctures();
    cutting::normal_coords(&cutting::round(i, j), m).to_dynnikov()
}

/// The round curve enclosing punctures `i..=j` (1 ≤ i < j ≤ 2n-1).
pub fn base_curve(spec: SurfaceSpec, i: usize, j: usize) -> Result<CurveClass> {
    let m = spec.line_punctures();
    if i == 0 || j > m || i > j {
        return Err(Error::Config(format!("punctures {i}..{j} outside 1..{m}")));
    }
    if i == j {
        return Err(Error::Peripheral(format!("round curve around puncture {i} alone")));
    }
    if (i, j) == (1, m) {
        return Err(Error::Peripheral(format!(
            "round curve around punctures 1..{m} is peripheral to puncture {}",
            m + 1
        )));
    }
    Ok(round_curve_unchecked(spec, i, j))
}

fn round_curve_unchecked(spec: SurfaceSpec, i: usize, j: usize) -> CurveClass {
    CurveClass {
        spec,
        coords: round_coords(spec, i, j),
        word: Pi1Word::reduce(&cutting::pi1_word(&cutting::round(i, j))),
        history: Some(History { base: (i, j), word: McgWord::identity(spec) }),
        connected: true,
    }
}

/// The peripheral curve around puncture `p` in 1..=2n. For p = 2n this is the
/// curve around all line punctures, whose coordinates vanish.
pub fn peripheral_curve(spec: SurfaceSpec, p: usize) -> Result<CurveClass> {
    let m = spec.line_punctures();
    match p {
        0 => Err(Error::Config("punctures are numbered from 1".into())),
        _ if p <= m => Ok(round_curve_unchecked(spec, p, p)),
        _ if p == m + 1 => Ok(round_curve_unchecked(spec, 1, m)),
        _ => Err(Error::Config(format!("puncture {p} outside 1..{}", m + 1))),
    }
}

/// Coordinates of the 2n peripheral classes.
pub fn peripheral_coords(spec: SurfaceSpec) -> Vec<LamCoords> {
    peripheral_cached(spec).to_vec()
}

/// Computed once per bridge number; the essentiality test runs in hot loops.
fn peripheral_cached(spec: SurfaceSpec) -> Arc<Vec<LamCoords>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<LamCoords>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(spec.n())
        .or_insert_with(|| {
            Arc::new((1..=spec.punctures()).map(|p| peripheral_curve(spec, p).unwrap().coords).collect())
        })
        .clone()
}

impl CurveClass {
    /// Builds a curve from coordinates alone by drawing it. The loop word is
    /// read from the drawing and no history is recorded.
    pub fn from_coords(spec: SurfaceSpec, coords: LamCoords) -> Result<Self> {
        if coords.is_zero() {
            return Err(Error::Inessential);
        }
        let mdr = Meander::from_normal(&coords.to_normal())?;
        let comps = mdr.components();
        let seq = mdr.cutting_sequence(&comps[0]);
        Ok(CurveClass {
            spec,
            word: Pi1Word::reduce(&cutting::pi1_word(&seq)),
            coords,
            history: None,
            connected: comps.len() == 1,
        })
    }

    /// Builds a curve from a taut cutting sequence.
    pub fn from_cutting_sequence(spec: SurfaceSpec, seq: &[usize]) -> Result<Self> {
        let seq = cutting::reduce(seq);
        if seq.is_empty() {
            return Err(Error::Inessential);
        }
        let coords = cutting::normal_coords(&seq, spec.line_punctures()).to_dynnikov();
        let mut c = Self::from_coords(spec, coords)?;
        c.word = Pi1Word::reduce(&cutting::pi1_word(&seq));
        Ok(c)
    }

    pub fn spec(&self) -> SurfaceSpec {
        self.spec
    }

    pub fn coords(&self) -> &LamCoords {
        &self.coords
    }

    pub fn word(&self) -> &Pi1Word {
        &self.word
    }

    pub fn history(&self) -> Option<&History> {
        self.history.as_ref()
    }

    pub fn connected(&self) -> bool {
        self.connected
    }

    pub fn normal(&self) -> NormalCoords {
        self.coords.to_normal()
    }

    pub fn meander(&self) -> Result<Meander> {
        Meander::from_normal(&self.normal())
    }

    /// Cutting sequence of the (first component of the) drawn curve.
    pub fn cutting_sequence(&self) -> Result<Vec<usize>> {
        let mdr = self.meander()?;
        let comps = mdr.components();
        Ok(comps.first().map(|c| mdr.cutting_sequence(c)).unwrap_or_default())
    }

    /// `g · self`.
    pub fn apply_generator(&self, g: McgGenerator) -> CurveClass {
        let mut coords = self.coords.clone();
        coords.apply(g);
        let gw = McgWord::new(self.spec, vec![g]).expect("generator in range");
        CurveClass {
            spec: self.spec,
            coords,
            word: act_pi1(&gw, &self.word),
            history: self.history.as_ref().map(|h| History { base: h.base, word: h.word.prepend(g) }),
            connected: self.connected,
        }
    }

    /// `w · self`: the rightmost letter acts first.
    pub fn apply_word(&self, w: &McgWord) -> CurveClass {
        CurveClass {
            spec: self.spec,
            coords: self.coords.applied(w.letters()),
            word: act_pi1(w, &self.word),
            history: self.history.as_ref().map(|h| History { base: h.base, word: w.concat(&h.word) }),
            connected: self.connected,
        }
    }

    /// Not empty, connected, and not peripheral to any of the 2n punctures.
    pub fn is_essential(&self) -> bool {
        self.connected && !self.coords.is_zero() && !peripheral_cached(self.spec).contains(&self.coords)
    }

    /// Total number of crossings with the line edges E_0..E_m.
    pub fn norm(&self) -> BigInt {
        self.normal().norm()
    }

    pub fn norm_u64(&self) -> Option<u64> {
        self.norm().to_u64()
    }

    /// Crossings with line edge `j`.
    pub fn edge_count(&self, j: usize) -> BigInt {
        self.normal().e.get(j).cloned().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coords)
    }
}

/// `w · c` as a free function.
pub fn apply_word(c: &CurveClass, w: &McgWord) -> CurveClass {
    c.apply_word(w)
}

/// `g · c` as a free function.
pub fn apply_generator(c: &CurveClass, g: McgGenerator) -> CurveClass {
    c.apply_generator(g)
}
