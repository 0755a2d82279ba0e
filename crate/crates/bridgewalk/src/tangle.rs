//! Disk set of the trivial n-string tangle.
//!
//! The standard tangle pairs punctures (2i-1, 2i); its strands are pushed into
//! the ball from the line edges E_1, E_3, ..., E_{2n-1}. A curve bounds a disk
//! in the tangle complement exactly when its loop word becomes trivial after
//! sending each puncture loop to the meridian of its strand. The complement is a
//! handlebody, so triviality in its fundamental group is enough for an embedded
//! curve to bound a disk (loop theorem).

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::diagram::{self, joint_diagram, reduce_to_minimal, MultiCurveDiagram, RouteItem};
use crate::error::{Error, Result};
use crate::lamination::{base_curve, cutting, peripheral_curve, CurveClass, LamCoords};
use crate::mcg_core::{free_reduce, Letter, McgGenerator, McgWord, SurfaceSpec};

/// A fixed-point-free involution on the punctures 1..=2n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TanglePairing {
    partner: Vec<usize>,
}

impl TanglePairing {
    pub fn standard(spec: SurfaceSpec) -> Self {
        let partner = (1..=spec.punctures()).map(|p| if p % 2 == 1 { p + 1 } else { p - 1 }).collect();
        TanglePairing { partner }
    }

    /// Builds a pairing from its pairs. Pairs must not interleave along the
    /// line: the strands are then drawn as nested arcs below it.
    pub fn new(spec: SurfaceSpec, pairs: &[(usize, usize)]) -> Result<Self> {
        let size = spec.punctures();
        let mut partner = vec![0; size];
        for &(p, q) in pairs {
            if p == q || p == 0 || q == 0 || p > size || q > size || partner[p - 1] != 0 || partner[q - 1] != 0 {
                return Err(Error::Config(format!("bad pair ({p}, {q})")));
            }
            partner[p - 1] = q;
            partner[q - 1] = p;
        }
        if partner.contains(&0) {
            return Err(Error::Config("pairing leaves a puncture unpaired".into()));
        }
        for &(p, q) in pairs {
            let (lo, hi) = (p.min(q), p.max(q));
            if (lo + 1..hi).any(|x| partner[x - 1] < lo || partner[x - 1] > hi) {
                return Err(Error::Config(format!("pair ({p}, {q}) interleaves another pair")));
            }
        }
        Ok(TanglePairing { partner })
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p - 1]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.partner.len()).filter(|&p| p < self.partner(p)).map(|p| (p, self.partner(p))).collect()
    }

    pub fn is_standard(&self) -> bool {
        self.partner.iter().enumerate().all(|(k, &q)| q == if k % 2 == 0 { k + 2 } else { k })
    }

    /// Meridian letter for the loop around puncture p: the pair index, signed
    /// positive at the smaller end.
    fn meridian_letter(&self, p: usize) -> Letter {
        let q = self.partner(p);
        let idx = self.pairs().iter().position(|&(a, _)| a == p.min(q)).unwrap() as Letter + 1;
        if p < q {
            idx
        } else {
            -idx
        }
    }
}

/// A word in the meridians c_1..c_n; letter ±i stands for c_i^{±1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MeridianWord {
    letters: Vec<Letter>,
}

impl MeridianWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        MeridianWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Free and cyclic reduction.
    pub fn reduced(&self) -> MeridianWord {
        let w = free_reduce(&self.letters);
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo] == -w[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        MeridianWord { letters: w[lo..hi].to_vec() }
    }

    pub fn is_trivial(&self) -> bool {
        self.reduced().letters.is_empty()
    }
}

impl fmt::Display for MeridianWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("c{l}") } else { format!("c{}^-1", -l) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Substitutes meridians for the puncture loops of an arbitrary loop word
/// (letters may include the loop around puncture 2n) and reduces freely.
pub fn meridian_word_of(letters: &[Letter], p: &TanglePairing) -> MeridianWord {
    let raw: Vec<Letter> = letters
        .iter()
        .map(|&l| {
            let m = p.meridian_letter(l.unsigned_abs() as usize);
            if l > 0 {
                m
            } else {
                -m
            }
        })
        .collect();
    MeridianWord::new(free_reduce(&raw))
}

pub fn meridian_word(c: &CurveClass, p: &TanglePairing) -> MeridianWord {
    meridian_word_of(c.word().letters(), p)
}

/// Algebraic disk test.
pub fn is_disk(c: &CurveClass, p: &TanglePairing) -> Result<bool> {
    if !c.is_essential() {
        return Err(Error::Inessential);
    }
    Ok(meridian_word(c, p).is_trivial())
}

/// Disk test for the standard tangle.
pub fn is_disk_standard(c: &CurveClass) -> Result<bool> {
    is_disk(c, &TanglePairing::standard(c.spec()))
}

/// One surgery recorded in an admissible system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surgery {
    /// Arc index 1..=n.
    pub arc: usize,
    /// Intersections with the guiding curve removed by the surgery.
    pub removed: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ArcEvent {
    arc: usize,
    up: bool,
    pos: usize,
}

/// n disjoint arcs b_i joining the paired punctures, each spanning a half-disk
/// over its strand, with dual meridians c_i.
///
/// The standard system uses the odd line edges. Surgered systems are recorded
/// relative to the curve they were surgered along: the remaining intersections
/// of that curve with each arc, in order along the curve and along the arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleSystem {
    spec: SurfaceSpec,
    guide: Option<LamCoords>,
    events: Vec<ArcEvent>,
    provenance: Vec<Surgery>,
}

pub fn standard_admissible_system(spec: SurfaceSpec) -> AdmissibleSystem {
    AdmissibleSystem { spec, guide: None, events: Vec::new(), provenance: Vec::new() }
}

impl AdmissibleSystem {
    pub fn spec(&self) -> SurfaceSpec {
        self.spec
    }

    pub fn provenance(&self) -> &[Surgery] {
        &self.provenance
    }

    pub fn is_standard(&self) -> bool {
        self.provenance.is_empty()
    }

    /// Line edge carrying each standard arc.
    pub fn standard_arc_edges(&self) -> Vec<usize> {
        (1..=self.spec.n()).map(|i| 2 * i - 1).collect()
    }

    /// Standard dual meridians: the loop around puncture 2i-1 for each i.
    pub fn standard_meridians(&self) -> Vec<CurveClass> {
        (1..=self.spec.n()).map(|i| peripheral_curve(self.spec, 2 * i - 1).unwrap()).collect()
    }

    /// Intersection matrix i(c_j, b_i) of the standard system, read off the
    /// cutting sequences of the meridians. `None` once surgeries have been
    /// applied: the surgered meridians are not tracked.
    pub fn duality_matrix(&self) -> Option<Vec<Vec<usize>>> {
        if !self.is_standard() {
            return None;
        }
        let m = self.spec.line_punctures();
        let edges = self.standard_arc_edges();
        Some(
            (1..=self.spec.n())
                .map(|j| {
                    let e = cutting::edge_counts(&cutting::round(2 * j - 1, 2 * j - 1), m);
                    edges.iter().map(|&k| e[k]).collect()
                })
                .collect(),
        )
    }

    /// Intersections of `c` with the arcs, when `c` is the curve this system
    /// was built along (or the system is standard).
    pub fn intersection_count(&self, c: &CurveClass) -> Result<usize> {
        Ok(self.events_for(c)?.len())
    }

    fn events_for(&self, c: &CurveClass) -> Result<Vec<ArcEvent>> {
        match &self.guide {
            Some(g) if g == c.coords() => Ok(self.events.clone()),
            Some(_) => Err(Error::Config("admissible system was surgered along a different curve".into())),
            None => standard_events(c),
        }
    }
}

/// Crossings of a taut curve with the odd line edges, in traversal order.
fn standard_events(c: &CurveClass) -> Result<Vec<ArcEvent>> {
    let mdr = c.meander()?;
    let comps = mdr.components();
    if comps.len() != 1 {
        return Err(Error::Inessential);
    }
    Ok(comps[0]
        .iter()
        .enumerate()
        .filter(|&(_, &p)| mdr.edge_of(p) % 2 == 1)
        .map(|(t, &p)| ArcEvent { arc: (mdr.edge_of(p) + 1) / 2, up: t % 2 == 0, pos: mdr.rank(p) })
        .collect())
}

/// Surgery along the first innermost returning arc of `c`: a sub-arc between
/// consecutive intersections with the system that leaves and re-enters the
/// same arc from the same side. The surgered arc skips every intersection
/// between the two ends.
pub fn returning_arc_surgery(c: &CurveClass, a: &AdmissibleSystem) -> Result<(AdmissibleSystem, usize)> {
    let events = a.events_for(c)?;
    if events.is_empty() {
        return Err(Error::NothingToDo);
    }
    let len = events.len();
    let k = (0..len)
        .find(|&k| {
            let (x, y) = (events[k], events[(k + 1) % len]);
            len >= 2 && x.arc == y.arc && x.up != y.up
        })
        .ok_or(Error::NotADisk)?;
    let (x, y) = (events[k], events[(k + 1) % len]);
    let (lo, hi) = (x.pos.min(y.pos), x.pos.max(y.pos));
    let kept: Vec<ArcEvent> = events.into_iter().filter(|e| !(e.arc == x.arc && lo <= e.pos && e.pos <= hi)).collect();
    let removed = len - kept.len();
    let mut provenance = a.provenance.clone();
    provenance.push(Surgery { arc: x.arc, removed });
    let remaining = kept.len();
    Ok((AdmissibleSystem { spec: a.spec, guide: Some(c.coords().clone()), events: kept, provenance }, remaining))
}

/// Geometric disk test: surger the standard system along returning arcs
/// until the curve is disjoint from it, or no returning arc is left.
pub fn is_disk_geometric(c: &CurveClass) -> Result<bool> {
    if !c.is_essential() {
        return Err(Error::Inessential);
    }
    let mut sys = standard_admissible_system(c.spec());
    if sys.intersection_count(c)? == 0 {
        return Ok(true);
    }
    loop {
        match returning_arc_surgery(c, &sys) {
            Ok((_, 0)) => return Ok(true),
            Ok((next, _)) => sys = next,
            Err(Error::NotADisk) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
}

/// The standard disk curves: the boundary of a neighbourhood of each arc.
pub fn standard_disks(spec: SurfaceSpec) -> Vec<CurveClass> {
    let m = spec.line_punctures();
    let mut out: Vec<CurveClass> = Vec::new();
    for i in 1..=spec.n() {
        let c = if 2 * i <= m { base_curve(spec, 2 * i - 1, 2 * i).unwrap() } else { base_curve(spec, 1, m - 1).unwrap() };
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Line edge whose neighbourhood boundary is the given standard disk.
fn base_edge(spec: SurfaceSpec, base: (usize, usize)) -> usize {
    if base.1 == base.0 + 1 {
        base.0
    } else {
        spec.line_punctures()
    }
}

/// Disk curves reachable from the standard disks by words of length ≤ bound.
#[derive(Debug, Clone)]
pub struct DiskSetSample {
    pub spec: SurfaceSpec,
    pub bound: usize,
    /// Disks in discovery order; each carries the word that produced it.
    pub curves: Vec<CurveClass>,
}

impl DiskSetSample {
    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }
}

/// Breadth-first search over all curves within `bound` generator steps of the
/// standard disks, keeping those that bound disks.
pub fn enumerate_disks(spec: SurfaceSpec, bound: usize) -> DiskSetSample {
    let gens = McgGenerator::all(spec);
    let mut seen: HashMap<LamCoords, ()> = HashMap::new();
    let mut frontier = standard_disks(spec);
    for c in &frontier {
        seen.insert(c.coords().clone(), ());
    }
    let mut all = frontier.clone();
    for _ in 0..bound {
        let mut next = Vec::new();
        for c in &frontier {
            for &g in &gens {
                let d = c.apply_generator(g);
                if !seen.contains_key(d.coords()) {
                    seen.insert(d.coords().clone(), ());
                    next.push(d);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    let curves = all.into_iter().filter(|c| is_disk_standard(c).unwrap_or(false)).collect();
    DiskSetSample { spec, bound, curves }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertStatus {
    CommonDisk,
    DisjointPair,
    NonFillingPair,
    NoWitness,
}

impl CertStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CertStatus::CommonDisk => "COMMON_DISK",
            CertStatus::DisjointPair => "DISJOINT_PAIR",
            CertStatus::NonFillingPair => "NON_FILLING_PAIR",
            CertStatus::NoWitness => "NO_WITNESS",
        }
    }

    /// What the status says about the distance between the two disk sets.
    pub fn meaning(self) -> &'static str {
        match self {
            CertStatus::CommonDisk => "distance 0",
            CertStatus::DisjointPair => "distance at most 1",
            CertStatus::NonFillingPair => "distance at most 2",
            CertStatus::NoWitness => "no pair at distance at most 2 among enumerated disks (evidence only)",
        }
    }
}

impl fmt::Display for CertStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a witness was re-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    /// Checked on the pair (a, w·b) with explicit diagrams.
    Direct,
    /// The pair was too large to draw; checked on the equivalent pair pulled back by a word.
    PulledBack,
}

#[derive(Debug, Clone)]
pub struct DistanceCertificate {
    pub word: McgWord,
    pub bound: usize,
    pub status: CertStatus,
    /// Indices (a in D, b in D) with the witness pair (a, w·b).
    pub witness: Option<(usize, usize)>,
    pub verified: bool,
    pub verification: Option<Verification>,
    pub disks: usize,
}

impl DistanceCertificate {
    pub const CSV_HEADER: &'static str = "word,L,status,witness_a,witness_b,verified,verification";

    pub fn csv_row(&self) -> String {
        let (a, b) = self.witness.map(|(a, b)| (a.to_string(), b.to_string())).unwrap_or_default();
        let v = match self.verification {
            Some(Verification::Direct) => "direct",
            Some(Verification::PulledBack) => "pulled_back",
            None => "",
        };
        format!("\"{}\",{},{},{},{},{},{}", self.word, self.bound, self.status, a, b, self.verified, v)
    }
}

/// A disk written as u·β with β the boundary of a neighbourhood of line edge `edge`.
struct Anchored {
    word: McgWord,
    edge: usize,
    base: CurveClass,
}

fn anchor(spec: SurfaceSpec, c: &CurveClass) -> Anchored {
    let h = c.history().expect("enumerated disks carry their history");
    Anchored { word: h.word.clone(), edge: base_edge(spec, h.base), base: base_curve(spec, h.base.0, h.base.1).unwrap() }
}

/// Cheap status of the pair (a, w·b), computed on the pulled-back pair
/// (β_a, u_a^{-1} w u_b β_b). Against β = ∂N(E_j) the intersection number of a
/// taut curve is twice its crossing count with E_j, so no drawing is needed.
fn cheap_status(x: &Anchored, w: &McgWord, y: &Anchored) -> CertStatus {
    let pulled = x.word.inverse().concat(w).concat(&y.word);
    let coords = y.base.coords().applied(pulled.letters());
    if &coords == x.base.coords() {
        CertStatus::CommonDisk
    } else if coords.to_normal().e[x.edge].is_zero() {
        CertStatus::DisjointPair
    } else {
        CertStatus::NoWitness
    }
}

/// Independent re-check of a witness with explicit diagrams.
fn verify(a: &CurveClass, b: &CurveClass, status: CertStatus) -> Result<bool> {
    Ok(match status {
        CertStatus::CommonDisk => a.coords() == b.coords(),
        CertStatus::DisjointPair => diagram::intersection_number(a, b)? == 0 && a.coords() != b.coords(),
        CertStatus::NonFillingPair => diagram::intersection_number(a, b)? > 0 && !diagram::fills(a, b)?,
        CertStatus::NoWitness => true,
    })
}

/// Searches D × w·D for the strongest witness. Pairs are scanned in
/// lexicographic order of (index of a, index of b) and the first pair of the
/// strongest status wins.
pub fn distance_certificate(w: &McgWord, bound: usize) -> Result<DistanceCertificate> {
    let disks = enumerate_disks(w.spec(), bound);
    distance_certificate_with(w, &disks)
}

pub fn distance_certificate_with(w: &McgWord, disks: &DiskSetSample) -> Result<DistanceCertificate> {
    let spec = w.spec();
    let anchors: Vec<Anchored> = disks.curves.iter().map(|c| anchor(spec, c)).collect();
    let n = anchors.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    // Cheap statuses first, over all pairs.
    let mut found = pairs
        .par_iter()
        .map(|&(i, j)| (cheap_status(&anchors[i], w, &anchors[j]), (i, j)))
        .filter(|(s, _)| *s != CertStatus::NoWitness)
        .min();
    if found.is_none() {
        // Filling test on the pairs themselves: a is small and w·b is drawn once.
        let images: Vec<CurveClass> = disks
            .curves
            .par_iter()
            .map(|b| CurveClass::from_coords(spec, b.coords().applied(w.letters())))
            .collect::<Result<Vec<_>>>()?;
        let hit = pairs
            .par_iter()
            .map(|&(i, j)| diagram::fills(&disks.curves[i], &images[j]).map(|f| (!f, (i, j))))
            .find_first(|r| !matches!(r, Ok((false, _))));
        found = match hit {
            Some(Ok((_, p))) => Some((CertStatus::NonFillingPair, p)),
            Some(Err(e)) => return Err(e),
            None => None,
        };
    }
    let Some((status, (i, j))) = found else {
        return Ok(DistanceCertificate {
            word: w.clone(),
            bound: disks.bound,
            status: CertStatus::NoWitness,
            witness: None,
            verified: true,
            verification: None,
            disks: n,
        });
    };
    let a = &disks.curves[i];
    let b = disks.curves[j].apply_word(w);
    let (verified, how) = match verify(a, &b, status) {
        Ok(v) => (v, Verification::Direct),
        Err(Error::TooLarge(_)) => {
            let x = &anchors[i];
            let pulled = x.word.inverse().concat(w).concat(&anchors[j].word);
            let c = anchors[j].base.apply_word(&pulled);
            (verify(&x.base, &c, status)?, Verification::PulledBack)
        }
        Err(e) => return Err(e),
    };
    if !verified {
        return Err(Error::Invariant(format!("witness ({i}, {j}) for {status} failed re-verification")));
    }
    Ok(DistanceCertificate {
        word: w.clone(),
        bound: disks.bound,
        status,
        witness: Some((i, j)),
        verified,
        verification: Some(how),
        disks: n,
    })
}

/// 2 + 2·ceil(log2 i), the classical distance bound from an intersection number.
pub fn distance_upper_bound_from(i: &BigInt) -> Result<u64> {
    if i < &BigInt::from(1) {
        return Err(Error::Config("intersection number must be at least 1".into()));
    }
    let bits = (i - 1u32).bits();
    Ok(2 + 2 * bits)
}

pub fn distance_upper_bound_log(c1: &CurveClass, c2: &CurveClass) -> Result<u64> {
    let i = diagram::intersection_number(c1, c2)?;
    distance_upper_bound_from(&BigInt::from(i))
}

/// Side of `a` containing each face of the minimal joint diagram (colour 1 = a,
/// colour 2 = b): faces joined across an edge of b lie on the same side.
fn sides_of_a(d: &MultiCurveDiagram) -> Vec<bool> {
    let nf = d.faces.len();
    let mut side: Vec<Option<bool>> = vec![None; nf];
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); nf];
    for e in &d.edges {
        let flip = e.color == 0;
        adj[e.left_face].push((e.right_face, flip));
        adj[e.right_face].push((e.left_face, flip));
    }
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(f) = stack.pop() {
        let s = side[f].unwrap();
        for &(g, flip) in &adj[f] {
            if side[g].is_none() {
                side[g] = Some(s ^ flip);
                stack.push(g);
            }
        }
    }
    side.into_iter().map(|s| s.unwrap_or(false)).collect()
}

/// Closes a route segment into a cutting sequence starting with an upward crossing.
fn close_route(points: Vec<(usize, bool)>) -> Option<Vec<usize>> {
    if points.is_empty() || points.len() % 2 == 1 {
        return None;
    }
    let start = points.iter().position(|p| p.1)?;
    let n = points.len();
    let seq: Vec<(usize, bool)> = (0..n).map(|k| points[(start + k) % n]).collect();
    if seq.iter().enumerate().any(|(k, p)| p.1 != (k % 2 == 0)) {
        return None;
    }
    Some(seq.into_iter().map(|p| p.0).collect())
}

/// Line points of a route strictly between two positions, walking forward or backward.
fn route_points(route: &[RouteItem], from: usize, to: usize, forward: bool) -> Vec<(usize, bool)> {
    let n = route.len();
    let mut out = Vec::new();
    let mut k = from;
    loop {
        k = if forward { (k + 1) % n } else { (k + n - 1) % n };
        if k == to {
            break;
        }
        if let RouteItem::Point { edge, up } = route[k] {
            out.push((edge, if forward { up } else { !up }));
        }
    }
    out
}

/// Wave surgery candidates of `a` along arcs of `b`, with whether each lies on
/// the side of `a` containing puncture 1.
fn wave_candidates(d: &MultiCurveDiagram) -> Vec<(bool, CurveClass)> {
    let spec = d.spec();
    let sides = sides_of_a(d);
    let pref_face = d.faces.iter().position(|f| f.punctures.contains(&1)).unwrap();
    let preferred = sides[pref_face];
    let (ra, rb) = (&d.routes[0], &d.routes[1]);
    let pos_a: HashMap<usize, usize> =
        ra.iter().enumerate().filter_map(|(k, r)| if let RouteItem::Cross(x) = r { Some((*x, k)) } else { None }).collect();
    let cross_b: Vec<usize> = (0..rb.len()).filter(|&k| matches!(rb[k], RouteItem::Cross(_))).collect();
    let mut out = Vec::new();
    for (t, &k1) in cross_b.iter().enumerate() {
        let k2 = cross_b[(t + 1) % cross_b.len()];
        let (RouteItem::Cross(x1), RouteItem::Cross(x2)) = (rb[k1], rb[k2]) else { unreachable!() };
        // Side of this arc of b: both faces beside it share a side of a.
        let be = d.edges.iter().find(|e| e.color == 1 && e.ends == Some((x1, x2)));
        let on_pref = be.map(|e| sides[e.left_face] == preferred).unwrap_or(false);
        let wave = route_points(rb, k1, k2, true);
        for forward in [true, false] {
            let mut pts = wave.clone();
            pts.extend(route_points(ra, pos_a[&x2], pos_a[&x1], forward));
            if let Some(seq) = close_route(pts) {
                if let Ok(c) = CurveClass::from_cutting_sequence(spec, &seq) {
                    out.push((on_pref, c));
                }
            }
        }
    }
    out
}

/// A path of disks from `a` to `b`, each step a wave surgery that lowers the
/// intersection number with `b`. Among the surgeries whose result is an
/// essential disk, waves on the side of the current curve containing puncture
/// 1 are preferred; ties go to the smallest norm, then to the first found.
pub fn disk_path(a: &CurveClass, b: &CurveClass) -> Result<Vec<CurveClass>> {
    if !is_disk_standard(a)? || !is_disk_standard(b)? {
        return Err(Error::NotADisk);
    }
    let mut path = vec![a.clone()];
    let mut cur = a.clone();
    loop {
        if cur.coords() == b.coords() {
            return Ok(path);
        }
        let d = reduce_to_minimal(&joint_diagram(&cur, b)?)?;
        let i = d.crossing_count();
        if i == 0 {
            path.push(b.clone());
            return Ok(path);
        }
        let mut best: Option<(bool, BigInt, CurveClass)> = None;
        for (pref, c) in wave_candidates(&d) {
            if !c.is_essential() || !is_disk_standard(&c)? {
                continue;
            }
            let key = (!pref, c.norm());
            if best.as_ref().map(|(p, n, _)| key < (!*p, n.clone())).unwrap_or(true) {
                best = Some((pref, key.1, c));
            }
        }
        let Some((_, _, next)) = best else {
            return Err(Error::Invariant("no wave surgery yields a disk".into()));
        };
        if diagram::intersection_number(&next, b)? >= i {
            return Err(Error::Invariant("wave surgery did not lower the intersection number".into()));
        }
        path.push(next.clone());
        cur = next;
    }
}
