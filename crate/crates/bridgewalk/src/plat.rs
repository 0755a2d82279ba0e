//! Plat closures of walk words: planar diagram codes and component counts.
//!
//! The word is drawn as a braid on 2n vertical strands, first letter at the
//! bottom. Bottom cups and top caps join positions (1,2), (3,4), ... without
//! crossings. In σ_i the strand from bottom position i to top position i+1
//! passes over, so σ_i is a positive crossing when both strands run upward.
//! Each component is oriented upward out of its leftmost bottom cup.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mcg_core::{permutation_image, McgWord, Permutation, SurfaceSpec};

/// Ports of a crossing listed counterclockwise from the south-west.
const BL: usize = 0;
const BR: usize = 1;
const TR: usize = 2;
const TL: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Visit {
    /// Crossing index, equal to the letter position in the word.
    pub crossing: usize,
    pub over: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlatLink {
    /// One `[a, b, c, d]` per letter: incoming under arc first, then counterclockwise.
    pub pd_code: Vec<[usize; 4]>,
    /// Oriented sign of each crossing.
    pub signs: Vec<i8>,
    /// Crossing visits per component in traversal order.
    pub gauss: Vec<Vec<Visit>>,
    pub components: usize,
    pub n: usize,
    pub source_word: McgWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Pd,
    Gauss,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pd" => Ok(ExportFormat::Pd),
            "gauss" => Ok(ExportFormat::Gauss),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(Error::Config(format!("unknown export format {other:?} (expected pd, gauss or csv)"))),
        }
    }
}

/// Orbit count of the bottom pairing and the top pairing pulled back through the braid.
pub fn orbit_components(w: &McgWord) -> usize {
    let size = w.spec().punctures();
    let eps = standard_pairing(size);
    let pi = permutation_image(w);
    let top = pi.compose(&eps).compose(&pi.inverse());
    Permutation::orbit_count(size, &[&eps, &top])
}

fn standard_pairing(size: usize) -> Permutation {
    let images: Vec<usize> = (1..=size).map(|x| if x % 2 == 1 { x + 1 } else { x - 1 }).collect();
    Permutation::from_images(&images).expect("pairing is a permutation")
}

/// Travel state: strand slot `(position, level)` and direction.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Walker {
    x: usize,
    g: usize,
    up: bool,
}

pub fn plat_closure(w: &McgWord) -> PlatLink {
    let spec: SurfaceSpec = w.spec();
    let size = spec.punctures();
    let k = w.len();
    // Left position (0-based) of the crossing at each level.
    let left: Vec<usize> = w.letters().iter().map(|g| g.index - 1).collect();
    let positive: Vec<bool> = w.letters().iter().map(|g| g.sign > 0).collect();
    let involved = |t: usize, x: usize| x == left[t] || x == left[t] + 1;

    // Advance to the next slot, reporting the crossing passed if any as (t, in_port, out_port).
    let step = |s: Walker| -> (Walker, Option<(usize, usize, usize)>) {
        if s.up {
            if s.g == k {
                return (Walker { x: s.x ^ 1, g: k, up: false }, None);
            }
            let t = s.g;
            if involved(t, s.x) {
                let from_left = s.x == left[t];
                let (pin, pout, nx) =
                    if from_left { (BL, TR, left[t] + 1) } else { (BR, TL, left[t]) };
                return (Walker { x: nx, g: t + 1, up: true }, Some((t, pin, pout)));
            }
            (Walker { g: s.g + 1, ..s }, None)
        } else {
            if s.g == 0 {
                return (Walker { x: s.x ^ 1, g: 0, up: true }, None);
            }
            let t = s.g - 1;
            if involved(t, s.x) {
                let from_left = s.x == left[t];
                let (pin, pout, nx) =
                    if from_left { (TL, BR, left[t] + 1) } else { (TR, BL, left[t]) };
                return (Walker { x: nx, g: t, up: false }, Some((t, pin, pout)));
            }
            (Walker { g: s.g - 1, ..s }, None)
        }
    };
    let over_pair = |t: usize, port: usize| {
        // Positive letters carry BL-TR over, negative ones BR-TL.
        let on_diag = port == BL || port == TR;
        on_diag == positive[t]
    };

    let mut bottom_seen = vec![false; size];
    let mut ports = vec![[0usize; 4]; k];
    let mut over_in = vec![0usize; k];
    let mut under_in = vec![0usize; k];
    let mut gauss = Vec::new();
    let mut next_label = 1;
    for x0 in 0..size {
        if bottom_seen[x0] {
            continue;
        }
        let start = Walker { x: x0, g: 0, up: true };
        let mut cur = start;
        let mut visits: Vec<(usize, usize, usize)> = Vec::new();
        loop {
            if cur.g == 0 {
                bottom_seen[cur.x] = true;
            }
            let (next, hit) = step(cur);
            if let Some(h) = hit {
                visits.push(h);
            }
            cur = next;
            if cur == start {
                break;
            }
        }
        let c = visits.len();
        let mut comp = Vec::with_capacity(c);
        for (j, &(t, pin, pout)) in visits.iter().enumerate() {
            ports[t][pin] = next_label + j;
            ports[t][pout] = next_label + (j + 1) % c;
            let over = over_pair(t, pin);
            if over {
                over_in[t] = pin;
            } else {
                under_in[t] = pin;
            }
            comp.push(Visit { crossing: t, over });
        }
        next_label += c;
        gauss.push(comp);
    }

    let mut pd_code = Vec::with_capacity(k);
    let mut signs = Vec::with_capacity(k);
    for t in 0..k {
        let u = under_in[t];
        pd_code.push([ports[t][u], ports[t][(u + 1) % 4], ports[t][(u + 2) % 4], ports[t][(u + 3) % 4]]);
        // Over strand entering just clockwise of the under strand means right-handed.
        signs.push(if (over_in[t] + 4 - u) % 4 == 3 { 1 } else { -1 });
    }
    let components = gauss.len();
    PlatLink { pd_code, signs, gauss, components, n: spec.n(), source_word: w.clone() }
}

impl PlatLink {
    pub fn crossings(&self) -> usize {
        self.pd_code.len()
    }

    /// Checks that every arc label appears twice and that both component counts agree.
    pub fn validate(&self) -> Result<()> {
        let labels = self.pd_code.len() * 2;
        let mut seen = vec![0u8; labels + 1];
        for x in self.pd_code.iter().flatten() {
            if *x == 0 || *x > labels {
                return Err(Error::Invariant(format!("arc label {x} out of range 1..={labels}")));
            }
            seen[*x] += 1;
        }
        if let Some(bad) = (1..=labels).find(|&a| seen[a] != 2) {
            return Err(Error::Invariant(format!("arc {bad} appears {} times", seen[bad])));
        }
        let orbits = orbit_components(&self.source_word);
        if orbits != self.components {
            return Err(Error::Invariant(format!(
                "traversal finds {} components, orbit formula {orbits}",
                self.components
            )));
        }
        Ok(())
    }

    pub fn pd_string(&self) -> String {
        let xs: Vec<String> =
            self.pd_code.iter().map(|[a, b, c, d]| format!("X({a},{b},{c},{d})")).collect();
        format!("PD[{}]", xs.join(","))
    }

    /// Over visits are positive, under visits negative; crossings are 1-based.
    pub fn gauss_string(&self) -> String {
        let comps: Vec<String> = self
            .gauss
            .iter()
            .map(|c| {
                let v: Vec<String> = c
                    .iter()
                    .map(|v| {
                        let id = v.crossing as i64 + 1;
                        (if v.over { id } else { -id }).to_string()
                    })
                    .collect();
                v.join(" ")
            })
            .collect();
        comps.join(" / ")
    }

    pub fn csv_string(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(["word", "n", "components", "crossings"]).expect("in-memory write");
        wtr.write_record([
            self.source_word.to_string(),
            self.n.to_string(),
            self.components.to_string(),
            self.crossings().to_string(),
        ])
        .expect("in-memory write");
        String::from_utf8(wtr.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Pd => self.pd_string(),
            ExportFormat::Gauss => self.gauss_string(),
            ExportFormat::Csv => self.csv_string(),
        }
    }
}

impl fmt::Display for PlatLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pd_string())
    }
}

/// Exports in a format named by text; unknown names are a configuration error.
pub fn export(link: &PlatLink, format: &str) -> Result<String> {
    Ok(link.export(format.parse()?))
}
