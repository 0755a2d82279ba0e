//! Dynnikov coordinates and their piecewise-linear half-twist update rules.
//!
//! The (2n-1)-punctured disk is triangulated by the line edges E_0..E_m
//! (E_0 and E_m are the two rays to infinity) together with an upper and a
//! lower fan of arcs from each puncture k = 2..m-1 to infinity. A lamination in
//! normal position has edge counts `e_j` and fan counts `u_k`, `l_k`. With
//! `β_i` the number of crossings with the vertical line between punctures i and
//! i+1, the Dynnikov coordinates are
//!
//! ```text
//! a_i = (l_{i+1} - u_{i+1}) / 2,   b_i = (β_i - β_{i+1}) / 2,   i = 1..m-2.
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::mcg_core::{McgGenerator, SurfaceSpec};

fn pos(x: &BigInt) -> BigInt {
    if x.is_positive() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

fn neg(x: &BigInt) -> BigInt {
    if x.is_negative() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

/// Integral lamination coordinates `(a, b)`, each of length 2n-3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LamCoords {
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
}

impl LamCoords {
    pub fn new(spec: SurfaceSpec, a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        let len = spec.line_punctures() - 2;
        if a.len() != len || b.len() != len {
            return Err(Error::Parse(format!("expected {len} entries in each of a and b")));
        }
        Ok(LamCoords { a, b })
    }

    pub fn zero(spec: SurfaceSpec) -> Self {
        let len = spec.line_punctures() - 2;
        LamCoords { a: vec![BigInt::zero(); len], b: vec![BigInt::zero(); len] }
    }

    /// Number of line punctures m = 2n-1.
    pub fn line_punctures(&self) -> usize {
        self.a.len() + 2
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(self.b.iter()).all(|x| x.is_zero())
    }

    /// Parses `"a: 1 0 -2 ; b: 0 3 1"`.
    pub fn parse(spec: SurfaceSpec, text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("cannot read coordinates {text:?}"));
        let (left, right) = text.split_once(';').ok_or_else(bad)?;
        let nums = |part: &str, tag: &str| -> Result<Vec<BigInt>> {
            let rest = part.trim().strip_prefix(tag).ok_or_else(bad)?;
            rest.split_whitespace().map(|t| t.parse::<BigInt>().map_err(|_| bad())).collect()
        };
        Self::new(spec, nums(left, "a:")?, nums(right, "b:")?)
    }

    /// Applies one generator in place.
    pub fn apply(&mut self, g: McgGenerator) {
        let m = self.line_punctures();
        let i = g.index;
        debug_assert!(i >= 1 && i < m);
        let (a, b) = (&mut self.a, &mut self.b);
        let k = m - 3;
        if g.sign > 0 {
            if i == 1 {
                let t = &a[0] + pos(&b[0]);
                a[0] = pos(&t) - &b[0];
                b[0] = t;
            } else if i == m - 1 {
                let t = &a[k] + neg(&b[k]);
                a[k] = neg(&t) - &b[k];
                b[k] = t;
            } else {
                let (p, q) = (i - 2, i - 1);
                let c = &a[p] - &a[q] - pos(&b[q]) + neg(&b[p]);
                let na_p = &a[p] - pos(&b[p]) - pos(&(pos(&b[q]) + &c));
                let nb_p = &b[q] + neg(&c);
                let na_q = &a[q] - neg(&b[q]) - neg(&(neg(&b[p]) - &c));
                let nb_q = &b[p] - neg(&c);
                a[p] = na_p;
                b[p] = nb_p;
                a[q] = na_q;
                b[q] = nb_q;
            }
        } else if i == 1 {
            let t = pos(&b[0]) - &a[0];
            a[0] = &b[0] - pos(&t);
            b[0] = t;
        } else if i == m - 1 {
            let t = neg(&b[k]) - &a[k];
            a[k] = &b[k] - neg(&t);
            b[k] = t;
        } else {
            let (p, q) = (i - 2, i - 1);
            let d = &a[p] - &a[q] + pos(&b[q]) - neg(&b[p]);
            let na_p = &a[p] + pos(&b[p]) + pos(&(pos(&b[q]) - &d));
            let nb_p = &b[q] - pos(&d);
            let na_q = &a[q] + neg(&b[q]) + neg(&(neg(&b[p]) + &d));
            let nb_q = &b[p] + pos(&d);
            a[p] = na_p;
            b[p] = nb_p;
            a[q] = na_q;
            b[q] = nb_q;
        }
    }

    /// Image under a word (rightmost letter first).
    pub fn applied(&self, word: &[McgGenerator]) -> LamCoords {
        let mut c = self.clone();
        for &g in word.iter().rev() {
            c.apply(g);
        }
        c
    }

    /// Normal coordinates of the minimal lamination with these coordinates
    /// (boundary-parallel components are invisible to `(a, b)`).
    pub fn to_normal(&self) -> NormalCoords {
        let m = self.line_punctures();
        let mut prefix = BigInt::zero();
        let mut best: Option<BigInt> = None;
        for k in 0..m - 2 {
            let cand = self.a[k].abs() + pos(&self.b[k]) + &prefix;
            if best.as_ref().map_or(true, |b| cand > *b) {
                best = Some(cand);
            }
            prefix += &self.b[k];
        }
        let mx = best.unwrap_or_default();
        // beta[i] for i = 1..m-1 stored at index i.
        let mut beta = vec![BigInt::zero(); m];
        let mut prefix = BigInt::zero();
        for i in 1..m {
            beta[i] = BigInt::from(2) * (&mx - &prefix);
            if i - 1 < m - 2 {
                prefix += &self.b[i - 1];
            }
        }
        let two = BigInt::from(2);
        let mut e = vec![BigInt::zero(); m + 1];
        let mut u = vec![BigInt::zero(); m + 1];
        let mut l = vec![BigInt::zero(); m + 1];
        e[0] = &beta[1] / &two;
        e[m] = &beta[m - 1] / &two;
        u[1] = e[0].clone();
        l[1] = e[0].clone();
        u[m] = e[m].clone();
        l[m] = e[m].clone();
        for k in 2..m {
            let big = std::cmp::max(&beta[k - 1], &beta[k]);
            u[k] = (big - &two * &self.a[k - 2]) / &two;
            l[k] = (big + &two * &self.a[k - 2]) / &two;
        }
        for k in 1..m {
            let s = &u[k] + &u[k + 1] + &l[k] + &l[k + 1];
            let t = (&u[k] - &u[k + 1] - &l[k] + &l[k + 1]).abs();
            e[k] = s / &two + t / &two - &beta[k];
        }
        NormalCoords { e, u, l }
    }
}

impl fmt::Display for LamCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "a: {} ; b: {}", join(&self.a), join(&self.b))
    }
}

/// Normal coordinates relative to the fan triangulation: `e[0..=m]` on the
/// line edges, `u[1..=m]` and `l[1..=m]` on the upper and lower fan arcs, with
/// `u[1] = l[1] = e[0]` and `u[m] = l[m] = e[m]` (index 0 of u and l unused).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalCoords {
    pub e: Vec<BigInt>,
    pub u: Vec<BigInt>,
    pub l: Vec<BigInt>,
}

impl NormalCoords {
    pub fn line_punctures(&self) -> usize {
        self.e.len() - 1
    }

    /// Sum of the line-edge counts.
    pub fn norm(&self) -> BigInt {
        self.e.iter().sum()
    }

    pub fn to_dynnikov(&self) -> LamCoords {
        let m = self.line_punctures();
        let (e, u, l) = (&self.e, &self.u, &self.l);
        let two = BigInt::from(2);
        let mut beta = vec![BigInt::zero(); m];
        for i in 1..m {
            let s = &u[i] + &u[i + 1] + &l[i] + &l[i + 1];
            let t = (&u[i] - &u[i + 1] - &l[i] + &l[i + 1]).abs();
            beta[i] = s / &two - &e[i] + t / &two;
        }
        let a = (1..m - 1).map(|i| (&l[i + 1] - &u[i + 1]) / &two).collect();
        let b = (1..m - 1).map(|i| (&beta[i] - &beta[i + 1]) / &two).collect();
        LamCoords { a, b }
    }
}
