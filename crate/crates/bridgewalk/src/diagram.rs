//! Joint drawings of one or two curves, bigon removal, and face census.
//!
//! Each curve is drawn taut with respect to the puncture line: a cyclic
//! sequence of points on the line edges joined alternately by upper and lower
//! chords. A joint drawing fixes how the points of the two curves interleave on
//! each edge; chords are realized as semicircles, so two chords in the same half
//! plane cross exactly when their endpoints interleave.
//!
//! An empty bigon always has the shape of a ladder: a run of adjacent
//! mixed-colour point pairs ("rungs") joined by parallel chords and closed off
//! by a crossing at each end. Swapping the two points of every rung removes the
//! two corner crossings and nothing else.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lamination::{CurveClass, Meander};
use crate::mcg_core::SurfaceSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hemisphere {
    Upper,
    Lower,
}

impl Hemisphere {
    fn other(self) -> Self {
        match self {
            Hemisphere::Upper => Hemisphere::Lower,
            Hemisphere::Lower => Hemisphere::Upper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Slot {
    color: u8,
    point: u32,
}

/// Positions of the points of one or two curves along the line.
#[derive(Debug, Clone)]
struct JointState {
    spec: SurfaceSpec,
    curves: Vec<Meander>,
    // Global slot index = edge start + position on the edge.
    edge_start: Vec<usize>,
    slot_edge: Vec<usize>,
    slots: Vec<Slot>,
    slot_of: Vec<Vec<usize>>,
}

impl JointState {
    /// `orders[j]` lists the colours of the points on edge j from left to right.
    fn new(spec: SurfaceSpec, curves: Vec<Meander>, orders: Option<Vec<Vec<u8>>>) -> Result<Self> {
        let m = spec.line_punctures();
        for c in &curves {
            if c.line_punctures() != m {
                return Err(Error::Config("curves live on different surfaces".into()));
            }
        }
        let mut edge_start = vec![0; m + 2];
        for j in 0..=m {
            edge_start[j + 1] = edge_start[j] + curves.iter().map(|c| c.count(j)).sum::<usize>();
        }
        let total = edge_start[m + 1];
        let mut slots = Vec::with_capacity(total);
        let mut slot_edge = Vec::with_capacity(total);
        let mut slot_of: Vec<Vec<usize>> = curves.iter().map(|c| vec![0; c.len()]).collect();
        for j in 0..=m {
            let colors: Vec<u8> = match &orders {
                Some(o) => o[j].clone(),
                None => curves.iter().enumerate().flat_map(|(k, c)| std::iter::repeat(k as u8).take(c.count(j))).collect(),
            };
            let mut next: Vec<usize> = curves.iter().map(|c| c.offset(j)).collect();
            let mut used: Vec<usize> = vec![0; curves.len()];
            for &col in &colors {
                let k = col as usize;
                if k >= curves.len() || used[k] >= curves[k].count(j) {
                    return Err(Error::Config(format!("bad interleaving on edge {j}")));
                }
                slot_of[k][next[k]] = slots.len();
                slots.push(Slot { color: col, point: next[k] as u32 });
                slot_edge.push(j);
                next[k] += 1;
                used[k] += 1;
            }
            if slots.len() != edge_start[j + 1] {
                return Err(Error::Config(format!("interleaving on edge {j} has the wrong length")));
            }
        }
        Ok(JointState { spec, curves, edge_start, slot_edge, slots, slot_of })
    }

    fn partner(&self, g: usize, h: Hemisphere) -> usize {
        let s = self.slots[g];
        let c = &self.curves[s.color as usize];
        let q = match h {
            Hemisphere::Upper => c.upper(s.point as usize),
            Hemisphere::Lower => c.lower(s.point as usize),
        };
        self.slot_of[s.color as usize][q]
    }

    fn is_rung(&self, g: usize) -> bool {
        g + 1 < self.slots.len()
            && self.slot_edge[g] == self.slot_edge[g + 1]
            && self.slots[g].color != self.slots[g + 1].color
    }

    /// Rungs of an empty bigon through the rung at `g`, if there is one.
    fn ladder(&self, g: usize) -> Option<Vec<usize>> {
        let mut rungs = vec![g];
        for start in [Hemisphere::Upper, Hemisphere::Lower] {
            let (mut cur, mut h) = (g, start);
            loop {
                let (l, r) = (cur, cur + 1);
                let (pl, pr) = (self.partner(l, h), self.partner(r, h));
                if interleave((l, pl), (r, pr)) {
                    break;
                }
                let (a, b) = (pl.min(pr), pl.max(pr));
                if b != a + 1 || self.slot_edge[a] != self.slot_edge[b] || a == g {
                    return None;
                }
                rungs.push(a);
                cur = a;
                h = h.other();
            }
        }
        Some(rungs)
    }

    fn swap(&mut self, g: usize) {
        self.slots.swap(g, g + 1);
        for k in [g, g + 1] {
            let s = self.slots[k];
            self.slot_of[s.color as usize][s.point as usize] = k;
        }
    }

    /// Removes one empty bigon, returning false when none is left.
    fn remove_one_bigon(&mut self) -> bool {
        for g in 0..self.slots.len() {
            if self.is_rung(g) {
                if let Some(rungs) = self.ladder(g) {
                    for r in rungs {
                        self.swap(r);
                    }
                    return true;
                }
            }
        }
        false
    }

    /// Removes empty bigons until none is left; returns how many were removed.
    fn reduce(&mut self) -> usize {
        let mut work: Vec<usize> = (0..self.slots.len()).filter(|&g| self.is_rung(g)).collect();
        let mut removed = 0;
        while let Some(g) = work.pop() {
            if !self.is_rung(g) {
                continue;
            }
            if let Some(rungs) = self.ladder(g) {
                for &r in &rungs {
                    self.swap(r);
                }
                removed += 1;
                for r in rungs {
                    work.extend([r.saturating_sub(1), r, r + 1]);
                }
            }
        }
        removed
    }

    /// Chords of one half plane as (lo slot, hi slot, colour).
    fn chords(&self, h: Hemisphere) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for g in 0..self.slots.len() {
            let p = self.partner(g, h);
            if g < p {
                out.push((g, p, self.slots[g].color));
            }
        }
        out
    }

    /// Number of crossings between the two colours.
    fn crossing_count(&self) -> usize {
        if self.curves.len() < 2 {
            return 0;
        }
        [Hemisphere::Upper, Hemisphere::Lower]
            .iter()
            .map(|&h| count_interleavings(self.slots.len(), &self.chords(h)))
            .sum()
    }
}

fn interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |x: usize| a0 < x && x < a1;
    inside(b.0) != inside(b.1)
}

/// Interleaving pairs among non-crossing-within-colour chords (Fenwick sweep).
fn count_interleavings(n: usize, chords: &[(usize, usize, u8)]) -> usize {
    let mut close_at = vec![usize::MAX; n];
    let mut is_open = vec![false; n];
    for &(lo, hi, _) in chords {
        close_at[hi] = lo;
        is_open[lo] = true;
    }
    let mut tree = vec![0i64; n + 1];
    let add = |t: &mut Vec<i64>, mut i: usize, v: i64| {
        i += 1;
        while i < t.len() {
            t[i] += v;
            i += i & i.wrapping_neg();
        }
    };
    let sum = |t: &Vec<i64>, mut i: usize| -> i64 {
        let mut s = 0;
        while i > 0 {
            s += t[i];
            i -= i & i.wrapping_neg();
        }
        s
    };
    let mut total = 0i64;
    for x in 0..n {
        if is_open[x] {
            add(&mut tree, x, 1);
        } else if close_at[x] != usize::MAX {
            let lo = close_at[x];
            total += sum(&tree, x) - sum(&tree, lo + 1);
            add(&mut tree, lo, -1);
        }
    }
    total as usize
}

/// A crossing between the two colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub hemisphere: Hemisphere,
    /// Chord endpoints (line slots) of colour 1 and colour 2.
    pub chords: [(usize, usize); 2],
    /// Incident curve edges in counterclockwise order, with their colours.
    pub rotation: [(usize, u8); 4],
}

/// A piece of one curve between consecutive crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveEdge {
    pub color: u8,
    /// Start and end crossing; `None` for a curve with no crossings.
    pub ends: Option<(usize, usize)>,
    pub left_face: usize,
    pub right_face: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Number of crossing corners on the boundary.
    pub sides: usize,
    /// Punctures inside, numbered 1..=2n (2n is the point at infinity).
    pub punctures: Vec<usize>,
    /// Curve edges on the boundary (with multiplicity).
    pub boundary: Vec<usize>,
}

/// A planar map realizing one or two curves.
#[derive(Debug, Clone)]
pub struct MultiCurveDiagram {
    state: JointState,
    pub crossings: Vec<Crossing>,
    pub edges: Vec<CurveEdge>,
    pub faces: Vec<Face>,
    /// Each colour traversed once, starting at an upward line crossing.
    pub routes: Vec<Vec<RouteItem>>,
}

/// One step along a curve: a line crossing on `edge` (upward when `up`), or a crossing with the other colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteItem {
    Point { edge: usize, up: bool },
    Cross(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRecord {
    pub sides: usize,
    pub punctures: usize,
}

/// Per-face (side count, puncture count).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionReport {
    pub faces: Vec<FaceRecord>,
}

/// Rotation system with at most four half-edges per vertex.
struct PlanarMap {
    origin: Vec<usize>,
    rot: Vec<[usize; 4]>,
    deg: Vec<u8>,
    idx_in_rot: Vec<u8>,
}

impl PlanarMap {
    fn add_edge(&mut self, u: usize, v: usize) -> usize {
        let h = self.origin.len();
        self.origin.push(u);
        self.origin.push(v);
        h
    }

    fn finish(&mut self) {
        self.idx_in_rot = vec![u8::MAX; self.origin.len()];
        for (v, r) in self.rot.iter().enumerate() {
            for (k, &h) in r[..self.deg[v] as usize].iter().enumerate() {
                self.idx_in_rot[h] = k as u8;
            }
        }
    }

    /// Next half-edge with the same face on its left.
    fn next(&self, h: usize) -> usize {
        let t = h ^ 1;
        let v = self.origin[t];
        let d = self.deg[v] as usize;
        self.rot[v][(self.idx_in_rot[t] as usize + d - 1) % d]
    }

    fn faces(&self) -> (Vec<usize>, usize) {
        let mut face = vec![usize::MAX; self.origin.len()];
        let mut count = 0;
        for h in 0..self.origin.len() {
            if face[h] != usize::MAX {
                continue;
            }
            let mut x = h;
            while face[x] == usize::MAX {
                face[x] = count;
                x = self.next(x);
            }
            count += 1;
        }
        (face, count)
    }
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Exact position of a crossing along a chord, perturbed generically so that
/// concurrent semicircles are resolved consistently.
#[derive(Clone, Copy)]
struct CrossKey {
    num: i128,
    den: i128,
    tnum: i128,
    tden: i128,
}

impl CrossKey {
    const ZERO: CrossKey = CrossKey { num: 0, den: 1, tnum: 0, tden: 1 };

    fn new(a: (usize, usize), b: (usize, usize), da: i128, db: i128) -> Self {
        let (a1, a2, b1, b2) = (a.0 as i128, a.1 as i128, b.0 as i128, b.1 as i128);
        let (mut num, mut den) = (a1 * a2 - b1 * b2, a1 + a2 - b1 - b2);
        let (mut tnum, mut tden) = (da - db, den);
        if den < 0 {
            num = -num;
            den = -den;
            tnum = -tnum;
            tden = -tden;
        }
        CrossKey { num, den, tnum, tden }
    }

    fn cmp(&self, o: &CrossKey) -> Ordering {
        (self.num * o.den).cmp(&(o.num * self.den)).then((self.tnum * o.tden).cmp(&(o.tnum * self.tden)))
    }
}

fn chord_jitter(lo: usize, hi: usize, h: Hemisphere) -> i128 {
    let mut x = (lo as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (hi as u64).rotate_left(29) ^ (h as u64);
    x ^= x >> 31;
    x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 29;
    (x >> 24) as i128
}

impl MultiCurveDiagram {
    fn build(state: JointState) -> Result<Self> {
        let spec = state.spec;
        let m = spec.line_punctures();
        let n_slots = state.slots.len();
        // Line vertices: infinity, then each edge's slots followed by the next puncture.
        let mut line_vertex_of_slot = vec![0; n_slots];
        let mut line_puncture: Vec<(usize, usize)> = vec![(0, spec.punctures())];
        let mut n_line = 1;
        for j in 0..=m {
            for g in state.edge_start[j]..state.edge_start[j + 1] {
                line_vertex_of_slot[g] = n_line;
                n_line += 1;
            }
            if j < m {
                line_puncture.push((n_line, j + 1));
                n_line += 1;
            }
        }
        let mut map = PlanarMap { origin: Vec::new(), rot: Vec::new(), deg: Vec::new(), idx_in_rot: Vec::new() };
        let mut line_he = Vec::with_capacity(n_line);
        for v in 0..n_line {
            line_he.push(map.add_edge(v, (v + 1) % n_line));
        }

        // Chords and their crossings, per half plane.
        struct Chord {
            lo: usize,
            hi: usize,
            color: u8,
        }
        let mut chords: Vec<Chord> = Vec::new();
        let mut chord_of: Vec<[usize; 2]> = vec![[usize::MAX; 2]; n_slots];
        let mut crossing_chords: Vec<(Hemisphere, usize, usize)> = Vec::new();
        for (hk, h) in [Hemisphere::Upper, Hemisphere::Lower].into_iter().enumerate() {
            for (lo, hi, color) in state.chords(h) {
                chord_of[lo][hk] = chords.len();
                chord_of[hi][hk] = chords.len();
                chords.push(Chord { lo, hi, color });
            }
            // Sweep: chords still open when chord c closes, and opened after it,
            // cross it. Open chords form a linked list in opening order.
            const NIL: usize = usize::MAX;
            let (mut next, mut prev) = (vec![NIL; chords.len()], vec![NIL; chords.len()]);
            let mut tail = NIL;
            for g in 0..n_slots {
                let c = chord_of[g][hk];
                if chords[c].lo == g {
                    prev[c] = tail;
                    if tail != NIL {
                        next[tail] = c;
                    }
                    tail = c;
                } else {
                    let mut d = next[c];
                    while d != NIL {
                        if chords[d].color == chords[c].color {
                            return Err(Error::Invariant("a curve crosses itself".into()));
                        }
                        crossing_chords.push((h, c, d));
                        d = next[d];
                    }
                    let (p, q) = (prev[c], next[c]);
                    if p != NIL {
                        next[p] = q;
                    }
                    if q != NIL {
                        prev[q] = p;
                    } else {
                        tail = p;
                    }
                }
            }
        }
        let n_cross = crossing_chords.len();
        let n_chords = chords.len();
        let cross_vertex = |k: usize| n_line + k;
        // Crossings along chord ci live in xs[off[ci]..off[ci + 1]].
        let mut off = vec![0usize; n_chords + 1];
        for &(_, c, d) in &crossing_chords {
            off[c + 1] += 1;
            off[d + 1] += 1;
        }
        for i in 0..n_chords {
            off[i + 1] += off[i];
        }
        let mut fill = off.clone();
        let mut xs = vec![(0usize, CrossKey::ZERO); off[n_chords]];
        for (k, &(h, c, d)) in crossing_chords.iter().enumerate() {
            let (cc, dd) = (&chords[c], &chords[d]);
            let (jc, jd) = (chord_jitter(cc.lo, cc.hi, h), chord_jitter(dd.lo, dd.hi, h));
            xs[fill[c]] = (k, CrossKey::new((cc.lo, cc.hi), (dd.lo, dd.hi), jc, jd));
            xs[fill[d]] = (k, CrossKey::new((dd.lo, dd.hi), (cc.lo, cc.hi), jd, jc));
            fill[c] += 1;
            fill[d] += 1;
        }
        // Half-edges at each crossing: [c toward lo, c toward hi, d toward lo, d toward hi].
        // Chord ci is cut into consecutive edges; its piece t is half-edge first_piece[ci] + 2t.
        let mut at_cross = vec![[usize::MAX; 4]; n_cross];
        let mut first_piece = vec![0usize; n_chords];
        let mut slot_up_he = vec![usize::MAX; n_slots];
        let mut slot_down_he = vec![usize::MAX; n_slots];
        for ci in 0..n_chords {
            let seg = &mut xs[off[ci]..off[ci + 1]];
            seg.sort_by(|a, b| a.1.cmp(&b.1));
            let (lo, hi) = (chords[ci].lo, chords[ci].hi);
            let base = map.origin.len();
            first_piece[ci] = base;
            let mut from = line_vertex_of_slot[lo];
            for &(k, _) in seg.iter() {
                map.add_edge(from, cross_vertex(k));
                from = cross_vertex(k);
            }
            map.add_edge(from, line_vertex_of_slot[hi]);
            for (t, &(k, _)) in seg.iter().enumerate() {
                let col = if crossing_chords[k].1 == ci { 0 } else { 2 };
                at_cross[k][col] = (base + 2 * t) ^ 1;
                at_cross[k][col + 1] = base + 2 * (t + 1);
            }
            let last = (base + 2 * seg.len()) ^ 1;
            if chord_of[lo][0] == ci {
                slot_up_he[lo] = base;
                slot_up_he[hi] = last;
            } else {
                slot_down_he[lo] = base;
                slot_down_he[hi] = last;
            }
        }
        map.rot = vec![[usize::MAX; 4]; n_line + n_cross];
        map.deg = vec![4; n_line + n_cross];
        for v in 0..n_line {
            let east = line_he[v];
            let west = line_he[(v + n_line - 1) % n_line] ^ 1;
            map.rot[v] = [east, west, usize::MAX, usize::MAX];
            map.deg[v] = 2;
        }
        // Slot vertices get the chords: east, north, west, south.
        for g in 0..n_slots {
            let v = line_vertex_of_slot[g];
            let (east, west) = (map.rot[v][0], map.rot[v][1]);
            map.rot[v] = [east, slot_up_he[g], west, slot_down_he[g]];
            map.deg[v] = 4;
        }
        for (k, &(h, c, d)) in crossing_chords.iter().enumerate() {
            // a is the chord with the smaller left end.
            let x = at_cross[k];
            let (a_lo, a_hi, b_lo, b_hi) =
                if chords[c].lo < chords[d].lo { (x[0], x[1], x[2], x[3]) } else { (x[2], x[3], x[0], x[1]) };
            map.rot[cross_vertex(k)] = match h {
                Hemisphere::Upper => [a_hi, b_hi, a_lo, b_lo],
                Hemisphere::Lower => [a_hi, b_lo, a_lo, b_hi],
            };
        }
        map.finish();
        let (face_of, n_raw) = map.faces();
        let (v_all, e_all) = (n_line + n_cross, map.origin.len() / 2);
        if v_all + n_raw != e_all + 2 {
            return Err(Error::Invariant(format!(
                "refined map violates Euler: V={v_all} E={e_all} F={n_raw}"
            )));
        }
        let mut parent: Vec<usize> = (0..n_raw).collect();
        for &h in &line_he {
            let (a, b) = (find(&mut parent, face_of[h]), find(&mut parent, face_of[h ^ 1]));
            parent[a] = b;
        }
        // Number merged faces in order of first appearance over half-edges.
        let mut face_id = vec![usize::MAX; n_raw];
        let mut n_faces = 0;
        for h in 0..map.origin.len() {
            let r = find(&mut parent, face_of[h]);
            if face_id[r] == usize::MAX {
                face_id[r] = n_faces;
                n_faces += 1;
            }
        }
        let mut merged = |h: usize| -> usize {
            let r = find(&mut parent, face_of[h]);
            face_id[r]
        };
        let mut faces: Vec<Face> = (0..n_faces).map(|_| Face { sides: 0, punctures: Vec::new(), boundary: Vec::new() }).collect();
        for &(v, p) in &line_puncture {
            faces[merged(line_he[v])].punctures.push(p);
        }
        for f in faces.iter_mut() {
            f.punctures.sort_unstable();
        }
        for k in 0..n_cross {
            for &h in &map.rot[cross_vertex(k)] {
                faces[merged(h)].sides += 1;
            }
        }

        // Curve edges: walk each colour and cut at crossings.
        let mut edges: Vec<CurveEdge> = Vec::new();
        let mut edge_of_he: Vec<usize> = vec![usize::MAX; map.origin.len()];
        let mut routes: Vec<Vec<RouteItem>> = Vec::new();
        for (col, curve) in state.curves.iter().enumerate() {
            let comps = curve.components();
            if comps.len() != 1 {
                return Err(Error::Invariant(format!("colour {} is not a single closed curve", col + 1)));
            }
            let pts = &comps[0];
            // G' half-edges along the curve, in traversal order.
            let mut path: Vec<usize> = Vec::new();
            let mut route: Vec<RouteItem> = Vec::new();
            for (t, &p) in pts.iter().enumerate() {
                let q = pts[(t + 1) % pts.len()];
                let h = if t % 2 == 0 { 0 } else { 1 };
                let (gp, gq) = (state.slot_of[col][p], state.slot_of[col][q]);
                let ci = chord_of[gp][h];
                let ch = &chords[ci];
                let seg = &xs[off[ci]..off[ci + 1]];
                let base = first_piece[ci];
                route.push(RouteItem::Point { edge: state.slot_edge[gp], up: t % 2 == 0 });
                if gp == ch.lo {
                    path.extend((0..=seg.len()).map(|t| base + 2 * t));
                    route.extend(seg.iter().map(|&(k, _)| RouteItem::Cross(k)));
                } else {
                    path.extend((0..=seg.len()).rev().map(|t| (base + 2 * t) ^ 1));
                    route.extend(seg.iter().rev().map(|&(k, _)| RouteItem::Cross(k)));
                }
                debug_assert!(gq == ch.lo || gq == ch.hi);
            }
            routes.push(route);
            let is_cross = |h: usize| map.origin[h] >= n_line;
            let starts: Vec<usize> = (0..path.len()).filter(|&t| is_cross(path[t])).collect();
            if starts.is_empty() {
                let h = path[0];
                edges.push(CurveEdge { color: col as u8, ends: None, left_face: merged(h), right_face: merged(h ^ 1) });
                continue;
            }
            for (s, &t0) in starts.iter().enumerate() {
                let t1 = starts[(s + 1) % starts.len()];
                let id = edges.len();
                let h0 = path[t0];
                let last = path[(t1 + path.len() - 1) % path.len()];
                edges.push(CurveEdge {
                    color: col as u8,
                    ends: Some((map.origin[h0] - n_line, map.origin[last ^ 1] - n_line)),
                    left_face: merged(h0),
                    right_face: merged(h0 ^ 1),
                });
                edge_of_he[h0] = id;
                edge_of_he[last ^ 1] = id;
            }
        }
        for (id, e) in edges.iter().enumerate() {
            faces[e.left_face].boundary.push(id);
            faces[e.right_face].boundary.push(id);
        }
        let crossings = crossing_chords
            .iter()
            .enumerate()
            .map(|(k, &(h, c, d))| {
                let (c1, c2) = if chords[c].color == 0 { (c, d) } else { (d, c) };
                let rot = &map.rot[cross_vertex(k)];
                let rotation = [0, 1, 2, 3].map(|i| {
                    let e = edge_of_he[rot[i]];
                    (e, edges[e].color)
                });
                Crossing {
                    hemisphere: h,
                    chords: [(chords[c1].lo, chords[c1].hi), (chords[c2].lo, chords[c2].hi)],
                    rotation,
                }
            })
            .collect();
        Ok(MultiCurveDiagram { state, crossings, edges, faces, routes })
    }

    /// Diagram of a single curve.
    pub fn single(c: &CurveClass) -> Result<Self> {
        let state = JointState::new(c.spec(), vec![c.meander()?], None)?;
        Self::build(state)
    }

    pub fn spec(&self) -> SurfaceSpec {
        self.state.spec
    }

    pub fn colors(&self) -> usize {
        self.state.curves.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// One bigon removal, or `None` when the diagram is minimal.
    pub fn reduce_step(&self) -> Result<Option<MultiCurveDiagram>> {
        let mut st = self.state.clone();
        if !st.remove_one_bigon() {
            return Ok(None);
        }
        Ok(Some(Self::build(st)?))
    }

    /// Connected components of the union of the curves.
    pub fn union_components(&self) -> usize {
        if self.crossings.is_empty() {
            self.colors()
        } else {
            1
        }
    }

    /// V - E + F, counting a curve without crossings as one vertex and one loop edge.
    pub fn euler_characteristic(&self) -> i64 {
        let free = self.edges.iter().filter(|e| e.ends.is_none()).count();
        (self.crossings.len() + free) as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Checks the structural invariants of the map.
    pub fn check(&self) -> Result<()> {
        let chi = self.euler_characteristic();
        let want = 1 + self.union_components() as i64;
        if chi != want {
            return Err(Error::Invariant(format!("Euler characteristic {chi}, expected {want}")));
        }
        let mut all: Vec<usize> = self.faces.iter().flat_map(|f| f.punctures.iter().copied()).collect();
        all.sort_unstable();
        if all != (1..=self.spec().punctures()).collect::<Vec<_>>() {
            return Err(Error::Invariant("punctures are not distributed one per face".into()));
        }
        if self.crossings.len() != self.state.crossing_count() {
            return Err(Error::Invariant("crossing list disagrees with the interleaving count".into()));
        }
        Ok(())
    }

    /// Plain-text dump with a stable ordering.
    pub fn dump(&self) -> String {
        let label = |g: usize| {
            let j = self.state.slot_edge[g];
            format!("E{}.{}", j, g - self.state.edge_start[j])
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "diagram colors={} crossings={} edges={} faces={}",
            self.colors(),
            self.crossings.len(),
            self.edges.len(),
            self.faces.len()
        );
        let mut xs: Vec<String> = self
            .crossings
            .iter()
            .map(|x| {
                let h = if x.hemisphere == Hemisphere::Upper { "upper" } else { "lower" };
                format!(
                    "crossing {h} 1:{}-{} 2:{}-{}",
                    label(x.chords[0].0),
                    label(x.chords[0].1),
                    label(x.chords[1].0),
                    label(x.chords[1].1)
                )
            })
            .collect();
        xs.sort();
        for x in xs {
            let _ = writeln!(out, "{x}");
        }
        let mut fs: Vec<(usize, Vec<usize>)> = self.faces.iter().map(|f| (f.sides, f.punctures.clone())).collect();
        fs.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
        for (sides, ps) in fs {
            let ps: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(out, "face sides={} punctures={}", sides, if ps.is_empty() { "-".into() } else { ps.join(",") });
        }
        out
    }
}

fn check_pair(c1: &CurveClass, c2: &CurveClass) -> Result<()> {
    if c1.spec() != c2.spec() {
        return Err(Error::Config("curves live on different surfaces".into()));
    }
    Ok(())
}

/// Joint drawing with colour 1 to the left of colour 2 on every edge.
pub fn joint_diagram(c1: &CurveClass, c2: &CurveClass) -> Result<MultiCurveDiagram> {
    check_pair(c1, c2)?;
    let state = JointState::new(c1.spec(), vec![c1.meander()?, c2.meander()?], None)?;
    MultiCurveDiagram::build(state)
}

/// Joint drawing with an explicit interleaving: `orders[j]` lists colours 0 and
/// 1 from left to right on edge j.
pub fn joint_diagram_with_order(c1: &CurveClass, c2: &CurveClass, orders: Vec<Vec<u8>>) -> Result<MultiCurveDiagram> {
    check_pair(c1, c2)?;
    let state = JointState::new(c1.spec(), vec![c1.meander()?, c2.meander()?], Some(orders))?;
    MultiCurveDiagram::build(state)
}

/// Removes bigons until none is left.
pub fn reduce_to_minimal(d: &MultiCurveDiagram) -> Result<MultiCurveDiagram> {
    let mut st = d.state.clone();
    if st.reduce() == 0 {
        return Ok(d.clone());
    }
    MultiCurveDiagram::build(st)
}

/// Geometric intersection number, computed by bigon removal on the joint drawing.
pub fn intersection_number(c1: &CurveClass, c2: &CurveClass) -> Result<usize> {
    check_pair(c1, c2)?;
    let mut st = JointState::new(c1.spec(), vec![c1.meander()?, c2.meander()?], None)?;
    let before = st.crossing_count();
    let removed = st.reduce();
    Ok(before - 2 * removed)
}

/// One record per face.
pub fn complementary_regions(d: &MultiCurveDiagram) -> Result<RegionReport> {
    if d.state.curves.iter().all(|c| c.is_empty()) {
        return Err(Error::Config("empty diagram".into()));
    }
    Ok(RegionReport { faces: d.faces.iter().map(|f| FaceRecord { sides: f.sides, punctures: f.punctures.len() }).collect() })
}

/// True when every complementary region of the minimal joint drawing is a disk
/// with at most one puncture.
pub fn fills(c1: &CurveClass, c2: &CurveClass) -> Result<bool> {
    if !c1.is_essential() || !c2.is_essential() {
        return Err(Error::Inessential);
    }
    check_pair(c1, c2)?;
    let mut st = JointState::new(c1.spec(), vec![c1.meander()?, c2.meander()?], None)?;
    st.reduce();
    Ok(fills_minimal(&MultiCurveDiagram::build(st)?))
}

/// Face census of a diagram already in minimal position.
pub fn fills_minimal(d: &MultiCurveDiagram) -> bool {
    !d.crossings.is_empty() && d.faces.iter().all(|f| f.punctures.len() <= 1)
}
