//! Non-intersecting lattice paths with the extra step, their `u^k`
//! statistics, the involutions `g` and `h`, the TSSCPP bijection, the MRR
//! array statistics and the LGV determinant formula.

pub mod involution;
pub mod lgv;
pub mod mrr;
pub mod tsscpp;

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::genpoly::GenPoly;

pub use involution::{involution_g, involution_h};
pub use lgv::{lgv_genfun, nilp_weight, path_weight_sum};
pub use mrr::{mrr_index_to_u, mrr_u_statistic, mrr_upper_left};
pub use tsscpp::{enumerate_tsscpps, Tsscpp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `(0, 1)`
    V,
    /// `(1, 1)`
    D,
}

impl Step {
    fn dx(self) -> usize {
        match self {
            Step::V => 0,
            Step::D => 1,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::V => 'V',
            Step::D => 'D',
        }
    }

    pub fn parse_word(s: &str) -> Result<Vec<Step>> {
        s.chars()
            .map(|c| match c {
                'V' => Ok(Step::V),
                'D' => Ok(Step::D),
                _ => Err(Error::InvalidNilp(format!("unknown step `{c}`"))),
            })
            .collect()
    }
}

fn word(steps: &[Step]) -> String {
    steps.iter().map(|s| s.letter()).collect()
}

/// Path `t` starts at `(t, −t)` and makes `t` steps up to `y = 0`; `extra[t]` follows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nilp {
    n: usize,
    paths: Vec<Vec<Step>>,
    extra: Vec<Step>,
}

/// x-coordinate of a path starting at `(t, −t)` after `k` of its steps.
fn x_after(t: usize, steps: &[Step], k: usize) -> usize {
    t + steps[..k].iter().map(|s| s.dx()).sum::<usize>()
}

fn touches(lower: &[Step], upper: &[Step]) -> bool {
    // path t-1 is at height y after y + t - 1 steps, path t after y + t
    let t = upper.len();
    (0..t).any(|k| x_after(t - 1, lower, k) >= x_after(t, upper, k + 1))
}

/// Attaches the unique extra steps: path 0 gets a diagonal one, and each later
/// path the one making its final x differ from the previous final x by an odd number.
pub fn extra_step(paths: Vec<Vec<Step>>) -> Result<Nilp> {
    let n = paths.len();
    for (t, p) in paths.iter().enumerate() {
        if p.len() != t {
            return Err(Error::InvalidNilp(format!("path {t} has {} steps", p.len())));
        }
        if t > 0 && touches(&paths[t - 1], p) {
            return Err(Error::InvalidNilp(format!("paths {} and {t} touch", t - 1)));
        }
    }
    let mut extra = Vec::with_capacity(n);
    let mut prev_final = 0usize;
    for (t, p) in paths.iter().enumerate() {
        let end = x_after(t, p, t);
        let e = if t > 0 && end.abs_diff(prev_final) % 2 == 1 {
            Step::V
        } else {
            Step::D
        };
        prev_final = end + e.dx();
        extra.push(e);
    }
    Ok(Nilp { n, paths, extra })
}

impl Nilp {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn paths(&self) -> &[Vec<Step>] {
        &self.paths
    }

    pub fn extra(&self) -> &[Step] {
        &self.extra
    }

    /// x-coordinate of path `t` at height `y ∈ [−t, 0]`.
    pub fn x_at(&self, t: usize, y: i64) -> usize {
        let k = (y + t as i64) as usize;
        x_after(t, &self.paths[t], k)
    }

    /// Final x-coordinates after the extra steps.
    pub fn finals(&self) -> Vec<usize> {
        (0..self.n).map(|t| self.x_at(t, 0) + self.extra[t].dx()).collect()
    }

    /// Number of vertical steps in each slice; slice 0 is the extra step,
    /// slice `i ≥ 1` lies between `y = −i` and `y = 1 − i`.
    pub fn slice_vertical_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.n.max(1)];
        c[0] = self.extra.iter().filter(|&&s| s == Step::V).count();
        for (t, p) in self.paths.iter().enumerate() {
            for (k, &s) in p.iter().enumerate() {
                if s == Step::V {
                    c[t - k] += 1;
                }
            }
        }
        c
    }

    /// `u^k`: vertical extra steps for `k = 0`, otherwise vertical steps among
    /// the `max(1, t−k+1)`-th steps of the paths `t ≥ 1`.
    pub fn u_statistic(&self, k: usize) -> Result<usize> {
        if k > self.n {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                min: 0,
                max: self.n as i64,
            });
        }
        if k == 0 {
            return Ok(self.extra.iter().filter(|&&s| s == Step::V).count());
        }
        Ok((1..self.n)
            .filter(|&t| {
                let idx = (t + 1).saturating_sub(k).max(1);
                self.paths[t][idx - 1] == Step::V
            })
            .count())
    }

    /// `(u^0, …, u^n)`.
    pub fn u_vector(&self) -> Vec<usize> {
        (0..=self.n).map(|k| self.u_statistic(k).expect("k in range")).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "paths": self.paths.iter().map(|p| word(p)).collect::<Vec<_>>(),
            "extra": word(&self.extra),
        })
    }
}

impl fmt::Display for Nilp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let paths: Vec<String> = self.paths.iter().map(|p| format!("[{}]", word(p))).collect();
        write!(f, "{} + {}", paths.join(""), word(&self.extra))
    }
}

struct Frame {
    candidates: Vec<Vec<Step>>,
    next: usize,
}

/// Depth-first stream of all bundles, paths in lexicographic order with `V < D`.
pub struct NilpIter {
    n: usize,
    stack: Vec<Frame>,
    chosen: Vec<Vec<Step>>,
    started: bool,
}

fn all_words(t: usize) -> impl Iterator<Item = Vec<Step>> {
    (0..1usize << t).map(move |m| {
        (0..t)
            .map(|s| if (m >> (t - 1 - s)) & 1 == 1 { Step::D } else { Step::V })
            .collect()
    })
}

impl NilpIter {
    fn candidates(prev: &[Step]) -> Vec<Vec<Step>> {
        let t = prev.len() + 1;
        all_words(t).filter(|w| !touches(prev, w)).collect()
    }
}

impl Iterator for NilpIter {
    type Item = Nilp;

    fn next(&mut self) -> Option<Nilp> {
        if !self.started {
            self.started = true;
            if self.n <= 1 {
                return Some(extra_step(vec![Vec::new(); self.n]).expect("trivial bundle"));
            }
            self.stack.push(Frame {
                candidates: Self::candidates(&[]),
                next: 0,
            });
        }
        loop {
            let depth = self.stack.len();
            let top = self.stack.last_mut()?;
            if top.next >= top.candidates.len() {
                self.stack.pop();
                continue;
            }
            let w = top.candidates[top.next].clone();
            top.next += 1;
            // chosen[0] is the empty path 0; chosen[depth] is path `depth`
            self.chosen.truncate(depth);
            self.chosen.push(w);
            if depth + 1 == self.n {
                return Some(extra_step(self.chosen.clone()).expect("enumerated paths do not touch"));
            }
            let candidates = Self::candidates(&self.chosen[depth]);
            self.stack.push(Frame { candidates, next: 0 });
        }
    }
}

/// Every bundle of size `n` exactly once, with its extra steps attached.
pub fn enumerate_nilps(n: usize) -> NilpIter {
    NilpIter {
        n,
        stack: Vec::new(),
        chosen: vec![Vec::new()],
        started: false,
    }
}

/// `Σ_α x^{u^i(α)} y^{u^j(α)}`.
pub fn genfun_u(n: usize, i: usize, j: usize) -> Result<GenPoly> {
    for k in [i, j] {
        if k > n {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                min: 0,
                max: n as i64,
            });
        }
    }
    let mut p = GenPoly::new();
    for a in enumerate_nilps(n) {
        p.add_term(a.u_statistic(i)? as u32, a.u_statistic(j)? as u32, 1);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(words: &[&str]) -> Nilp {
        extra_step(words.iter().map(|w| Step::parse_word(w).unwrap()).collect()).unwrap()
    }

    #[test]
    fn counts() {
        let c: Vec<usize> = (1..=6).map(|n| enumerate_nilps(n).count()).collect();
        assert_eq!(c, vec![1, 2, 7, 42, 429, 7436]);
    }

    #[test]
    fn extra_steps() {
        assert_eq!(bundle(&[""]).extra(), &[Step::D]);
        assert_eq!(bundle(&["", "V"]).extra(), &[Step::D, Step::D]);
        assert_eq!(bundle(&["", "D"]).extra(), &[Step::D, Step::V]);
        for n in 1..=5 {
            for p in enumerate_nilps(n) {
                let f = p.finals();
                assert_eq!(f[0], 1);
                assert!(f.windows(2).all(|w| (w[1] - w[0]) % 2 == 1));
            }
        }
    }

    #[test]
    fn touching_rejected() {
        let paths = vec![vec![], vec![Step::D], vec![Step::V, Step::V]];
        assert!(extra_step(paths).is_err());
        assert!(extra_step(vec![vec![], vec![]]).is_err());
    }

    #[test]
    fn statistics() {
        let p = bundle(&["", "V"]);
        assert_eq!(p.u_statistic(0).unwrap(), 0);
        assert_eq!(p.u_statistic(1).unwrap(), 1);
        assert!(p.u_statistic(3).is_err());
        assert_eq!(
            genfun_u(2, 0, 1).unwrap(),
            GenPoly::from_terms([((1, 0), 1), ((0, 1), 1)])
        );
        let u3 = genfun_u(3, 0, 1).unwrap();
        assert_eq!(u3.total(), 7);
        assert_eq!(u3, genfun_u(3, 0, 2).unwrap());
    }

    #[test]
    fn slice_counts_add_up() {
        for p in enumerate_nilps(4) {
            let c = p.slice_vertical_counts();
            let v: usize = p.paths().iter().flatten().filter(|&&s| s == Step::V).count();
            assert_eq!(c[1..].iter().sum::<usize>(), v);
            assert_eq!(c[0], p.u_statistic(0).unwrap());
        }
    }
}
