//! Explicit drawing of a lamination from its normal coordinates.
//!
//! Points on each line edge are numbered left to right. Every point has one
//! upper and one lower chord partner. In each half plane the chords are
//! disjoint semicircles, which fixes the order of points on every edge:
//! chords leaving edge j to the left come first (nearest destination first),
//! then chords leaving to the right (farthest destination first).

use num_traits::ToPrimitive;

use super::coords::NormalCoords;
use crate::error::{Error, Result};

/// Upper bound on the number of points drawn explicitly.
pub const MAX_EXPLICIT_POINTS: usize = 20_000_000;

/// A chord family: `weight` parallel chords between edges `s < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Family {
    pub s: usize,
    pub t: usize,
    pub weight: usize,
}

/// Chord families in one half plane from the edge counts and fan counts.
pub fn families(e: &[usize], fan: &[usize]) -> Vec<Family> {
    let m = e.len() - 1;
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();
    if e[0] > 0 {
        stack.push((0, e[0]));
    }
    for j in 1..m {
        let left = (fan[j] + e[j] - fan[j + 1]) / 2;
        let right = (e[j] + fan[j + 1] - fan[j]) / 2;
        let mut need = left;
        while need > 0 {
            let top = stack.last_mut().expect("normal coordinates are consistent");
            let take = top.1.min(need);
            out.push(Family { s: top.0, t: j, weight: take });
            need -= take;
            if take == top.1 {
                stack.pop();
            } else {
                top.1 -= take;
            }
        }
        if right > 0 {
            stack.push((j, right));
        }
    }
    for (s, w) in stack {
        out.push(Family { s, t: m, weight: w });
    }
    out
}

/// A lamination drawn with explicit points and chords.
#[derive(Debug, Clone)]
pub struct Meander {
    m: usize,
    offsets: Vec<usize>,
    edge: Vec<usize>,
    up: Vec<usize>,
    low: Vec<usize>,
}

fn to_usize_vec(v: &[num_bigint::BigInt]) -> Result<Vec<usize>> {
    v.iter()
        .map(|x| x.to_usize().ok_or_else(|| Error::TooLarge(format!("coordinate {x}"))))
        .collect()
}

fn partners(m: usize, e: &[usize], offsets: &[usize], fams: &[Family]) -> Vec<usize> {
    let total = offsets[m + 1];
    // Block start of family k on edge s (right-going) and edge t (left-going).
    let mut start_s = vec![0; fams.len()];
    let mut start_t = vec![0; fams.len()];
    for j in 0..=m {
        let mut cursor = offsets[j];
        let mut left: Vec<usize> = (0..fams.len()).filter(|&k| fams[k].t == j).collect();
        left.sort_by(|&x, &y| fams[y].s.cmp(&fams[x].s));
        for k in left {
            start_t[k] = cursor;
            cursor += fams[k].weight;
        }
        let mut right: Vec<usize> = (0..fams.len()).filter(|&k| fams[k].s == j).collect();
        right.sort_by(|&x, &y| fams[y].t.cmp(&fams[x].t));
        for k in right {
            start_s[k] = cursor;
            cursor += fams[k].weight;
        }
        debug_assert_eq!(cursor, offsets[j] + e[j]);
    }
    let mut partner = vec![usize::MAX; total];
    for (k, f) in fams.iter().enumerate() {
        for o in 0..f.weight {
            let p = start_s[k] + f.weight - 1 - o;
            let q = start_t[k] + o;
            partner[p] = q;
            partner[q] = p;
        }
    }
    partner
}

impl Meander {
    pub fn from_normal(nc: &NormalCoords) -> Result<Self> {
        let m = nc.line_punctures();
        let e = to_usize_vec(&nc.e)?;
        let u = to_usize_vec(&nc.u)?;
        let l = to_usize_vec(&nc.l)?;
        let total: usize = e.iter().sum();
        if total > MAX_EXPLICIT_POINTS {
            return Err(Error::TooLarge(format!("{total} crossings with the line")));
        }
        let mut offsets = vec![0; m + 2];
        for j in 0..=m {
            offsets[j + 1] = offsets[j] + e[j];
        }
        let mut edge = vec![0; total];
        for j in 0..=m {
            edge[offsets[j]..offsets[j + 1]].fill(j);
        }
        let up = partners(m, &e, &offsets, &families(&e, &u));
        let low = partners(m, &e, &offsets, &families(&e, &l));
        if up.iter().chain(low.iter()).any(|&p| p == usize::MAX) {
            return Err(Error::Invariant("normal coordinates do not close up".into()));
        }
        Ok(Meander { m, offsets, edge, up, low })
    }

    pub fn line_punctures(&self) -> usize {
        self.m
    }

    /// Total number of points (crossings with the line).
    pub fn len(&self) -> usize {
        self.edge.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge.is_empty()
    }

    pub fn edge_of(&self, p: usize) -> usize {
        self.edge[p]
    }

    /// Position of point `p` among the points of its edge, counted from the left.
    pub fn rank(&self, p: usize) -> usize {
        p - self.offsets[self.edge[p]]
    }

    pub fn offset(&self, j: usize) -> usize {
        self.offsets[j]
    }

    pub fn count(&self, j: usize) -> usize {
        self.offsets[j + 1] - self.offsets[j]
    }

    pub fn upper(&self, p: usize) -> usize {
        self.up[p]
    }

    pub fn lower(&self, p: usize) -> usize {
        self.low[p]
    }

    /// Each component as the cyclic list of points it visits, starting with
    /// an upward crossing at its lowest-numbered point.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut comps = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            loop {
                seen[p] = true;
                cyc.push(p);
                let q = self.up[p];
                seen[q] = true;
                cyc.push(q);
                p = self.low[q];
                if p == start {
                    break;
                }
            }
            comps.push(cyc);
        }
        comps
    }

    /// Cutting sequence of a component.
    pub fn cutting_sequence(&self, comp: &[usize]) -> Vec<usize> {
        comp.iter().map(|&p| self.edge[p]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lamination::cutting;

    #[test]
    fn round_curve_draws_one_component() {
        let nc = cutting::normal_coords(&cutting::round(2, 4), 5);
        let mdr = Meander::from_normal(&nc).unwrap();
        let comps = mdr.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(mdr.cutting_sequence(&comps[0]), vec![1, 4]);
    }
}
