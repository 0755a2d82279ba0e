//! Cutting sequences: a closed curve in minimal position with the line is the
//! cyclic list of line edges it crosses. Even positions cross from the lower to
//! the upper half plane, so `s[2k] -> s[2k+1]` is an upper chord and
//! `s[2k+1] -> s[2k+2]` a lower one.

use num_bigint::BigInt;

use super::coords::NormalCoords;
use crate::mcg_core::{Letter, McgGenerator};

/// Cancels adjacent repeated edges, linearly and then cyclically, keeping the
/// up/down parity of the surviving crossings.
pub fn reduce(seq: &[usize]) -> Vec<usize> {
    let mut st: Vec<usize> = Vec::with_capacity(seq.len());
    for &x in seq {
        if st.last() == Some(&x) {
            st.pop();
        } else {
            st.push(x);
        }
    }
    let (mut lo, mut hi) = (0, st.len());
    while hi - lo >= 2 && st[lo] == st[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    let mut out = st[lo..hi].to_vec();
    if lo % 2 == 1 && !out.is_empty() {
        out.rotate_left(1);
    }
    out
}

/// Round curve enclosing punctures i..=j.
pub fn round(i: usize, j: usize) -> Vec<usize> {
    vec![i - 1, j]
}

/// Image of a taut curve under one half-twist (the explicit model used as an
/// oracle for the coordinate rules).
pub fn twist(seq: &[usize], g: McgGenerator) -> Vec<usize> {
    let i = g.index;
    let mut out = Vec::with_capacity(seq.len() + 8);
    for (p, &x) in seq.iter().enumerate() {
        if x == i {
            let up = p % 2 == 0;
            if up == (g.sign > 0) {
                out.extend_from_slice(&[i - 1, i, i + 1]);
            } else {
                out.extend_from_slice(&[i + 1, i, i - 1]);
            }
        } else {
            out.push(x);
        }
    }
    reduce(&out)
}

/// Normal coordinates of a taut cutting sequence on the m-punctured line.
pub fn normal_coords(seq: &[usize], m: usize) -> NormalCoords {
    let mut e = vec![0i64; m + 1];
    let mut u = vec![0i64; m + 1];
    let mut l = vec![0i64; m + 1];
    let n = seq.len();
    for &x in seq {
        e[x] += 1;
    }
    for k in 0..n {
        let (x, y) = (seq[k], seq[(k + 1) % n]);
        let (lo, hi) = (x.min(y), x.max(y));
        let fan = if k % 2 == 0 { &mut u } else { &mut l };
        for f in fan.iter_mut().take(hi + 1).skip(lo + 1) {
            *f += 1;
        }
    }
    let big = |v: Vec<i64>| v.into_iter().map(BigInt::from).collect();
    NormalCoords { e: big(e), u: big(u), l: big(l) }
}

/// Loop word of the curve in the free group on x_1..x_m, read off the upper chords.
pub fn pi1_word(seq: &[usize]) -> Vec<Letter> {
    let mut w = Vec::new();
    for k in (0..seq.len()).step_by(2) {
        let (a, b) = (seq[k], seq[k + 1]);
        if a < b {
            w.extend((a + 1..=b).map(|j| j as Letter));
        } else {
            w.extend((b + 1..=a).rev().map(|j| -(j as Letter)));
        }
    }
    w
}

/// Number of crossings on each line edge.
pub fn edge_counts(seq: &[usize], m: usize) -> Vec<usize> {
    let mut e = vec![0; m + 1];
    for &x in seq {
        e[x] += 1;
    }
    e
}

/// Side of the curve on which each puncture lies: entry p-1 for puncture p in
/// 1..=m, entry m for the puncture at infinity (always side 0).
pub fn puncture_sides(seq: &[usize], m: usize) -> Vec<bool> {
    let e = edge_counts(seq, m);
    let mut sides = vec![false; m + 1];
    let mut parity = false;
    for p in (1..=m).rev() {
        parity ^= e[p] % 2 == 1;
        sides[p - 1] = parity;
    }
    sides
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_keeps_parity() {
        assert_eq!(reduce(&[1, 2, 2, 3]), vec![1, 3]);
        // Removing one cyclic pair shifts parity, so rotate.
        assert_eq!(reduce(&[4, 1, 2, 4]), vec![2, 1]);
        assert_eq!(reduce(&[3, 3]), Vec::<usize>::new());
    }

    #[test]
    fn round_curve_word() {
        assert_eq!(pi1_word(&round(1, 2)), vec![1, 2]);
        assert_eq!(pi1_word(&round(2, 4)), vec![2, 3, 4]);
    }

    #[test]
    fn twist_then_inverse() {
        let s = round(1, 2);
        let g = McgGenerator { index: 2, sign: 1 };
        let t = twist(&s, g);
        assert_ne!(t, s);
        let back = twist(&t, g.inverse());
        assert_eq!(normal_coords(&back, 5), normal_coords(&s, 5));
    }

    #[test]
    fn sides_of_round_curve() {
        let sides = puncture_sides(&round(2, 3), 5);
        assert_eq!(sides, vec![false, true, true, false, false, false]);
    }
}
