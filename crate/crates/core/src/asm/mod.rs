//! Alternating sign matrices, their doubly refined statistics, and the
//! six-vertex model with domain wall boundary conditions.

pub mod six_vertex;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::genpoly::GenPoly;

/// Which index the second variable of the generating polynomial reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `Ã_n`: last-row 1 in column `j` gives `y^{j-1}`.
    Tilde,
    /// `A_n`: column read from the right, `y^{n-j}`.
    Reversed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

/// 1-based columns of the 1 in the first row (`i`) and in the last row (`j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RefinedStat {
    pub i: usize,
    pub j: usize,
}

fn check_line(line: impl Iterator<Item = i8>) -> bool {
    let mut s = 0i32;
    for v in line {
        s += v as i32;
        if !(0..=1).contains(&s) {
            return false;
        }
    }
    s == 1
}

impl Asm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidAsm("not square".into()));
        }
        let entries: Vec<i8> = rows.into_iter().flatten().collect();
        if entries.iter().any(|v| !(-1..=1).contains(v)) {
            return Err(Error::InvalidAsm("entry outside {-1, 0, 1}".into()));
        }
        let a = Self { n, entries };
        for i in 0..n {
            if !check_line((0..n).map(|j| a.get(i, j))) {
                return Err(Error::InvalidAsm(format!("row {} does not alternate", i + 1)));
            }
            if !check_line((0..n).map(|k| a.get(k, i))) {
                return Err(Error::InvalidAsm(format!("column {} does not alternate", i + 1)));
            }
        }
        Ok(a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { n, entries }
    }

    pub fn refined_stat(&self) -> RefinedStat {
        let n = self.n;
        let first = (0..n).position(|j| self.get(0, j) == 1).expect("first row has a 1");
        let last = (0..n).position(|j| self.get(n - 1, j) == 1).expect("last row has a 1");
        RefinedStat {
            i: first + 1,
            j: last + 1,
        }
    }

    /// Exponents `(i-1, j-1)` or `(i-1, n-j)` contributed to the generating polynomial.
    pub fn exponents(&self, conv: Convention) -> (u32, u32) {
        let s = self.refined_stat();
        let j = match conv {
            Convention::Tilde => s.j - 1,
            Convention::Reversed => self.n - s.j,
        };
        ((s.i - 1) as u32, j as u32)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self.rows()).expect("rows serialize")
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.rows().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|v| format!("{v:>2}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

type Rows = Arc<Vec<Vec<i8>>>;

/// Rows compatible with a column partial-sum state (bit `j` set: column `j` sums to 1 so far).
fn rows_for(n: usize, state: u32) -> Vec<Vec<i8>> {
    fn rec(n: usize, state: u32, j: usize, ps: i8, row: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
        if j == n {
            if ps == 1 {
                out.push(row.clone());
            }
            return;
        }
        let col = ((state >> j) & 1) as i8;
        for v in [-1i8, 0, 1] {
            let p = ps + v;
            let c = col + v;
            if !(0..=1).contains(&p) || !(0..=1).contains(&c) {
                continue;
            }
            row.push(v);
            rec(n, state, j + 1, p, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, state, 0, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

fn apply(state: u32, row: &[i8]) -> u32 {
    let mut s = state;
    for (j, &v) in row.iter().enumerate() {
        match v {
            1 => s |= 1 << j,
            -1 => s &= !(1 << j),
            _ => {}
        }
    }
    s
}

struct Frame {
    state: u32,
    choices: Rows,
    next: usize,
}

/// Depth-first stream over column partial-sum states, in lexicographic order of rows.
pub struct AsmIter {
    n: usize,
    table: HashMap<u32, Rows>,
    stack: Vec<Frame>,
    rows: Vec<Vec<i8>>,
    empty_pending: bool,
}

impl AsmIter {
    fn new(n: usize, first: Option<usize>) -> Self {
        assert!(n <= 31, "n too large for the state bitmask");
        let mut it = Self {
            n,
            table: HashMap::new(),
            stack: Vec::new(),
            rows: Vec::new(),
            empty_pending: n == 0,
        };
        if n > 0 {
            let mut choices = it.choices(0);
            if let Some(k) = first {
                choices = Arc::new(choices.iter().filter(|r| r.get(k) == Some(&1)).cloned().collect());
            }
            it.stack.push(Frame {
                state: 0,
                choices,
                next: 0,
            });
        }
        it
    }

    fn choices(&mut self, state: u32) -> Rows {
        let n = self.n;
        self.table
            .entry(state)
            .or_insert_with(|| Arc::new(rows_for(n, state)))
            .clone()
    }
}

impl Iterator for AsmIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        if self.empty_pending {
            self.empty_pending = false;
            return Some(Asm {
                n: 0,
                entries: Vec::new(),
            });
        }
        loop {
            let depth = self.stack.len();
            let top = self.stack.last_mut()?;
            if top.next >= top.choices.len() {
                self.stack.pop();
                continue;
            }
            let row = top.choices[top.next].clone();
            top.next += 1;
            let state = apply(top.state, &row);
            self.rows.truncate(depth - 1);
            self.rows.push(row);
            if depth == self.n {
                return Some(Asm {
                    n: self.n,
                    entries: self.rows.iter().flatten().copied().collect(),
                });
            }
            let choices = self.choices(state);
            self.stack.push(Frame {
                state,
                choices,
                next: 0,
            });
        }
    }
}

/// Every ASM of size `n` exactly once; `n = 0` yields the empty matrix.
pub fn enumerate_asms(n: usize) -> AsmIter {
    AsmIter::new(n, None)
}

/// The part of [`enumerate_asms`] whose first row has its 1 in column `k` (0-based).
pub fn enumerate_asms_with_first_one(n: usize, k: usize) -> AsmIter {
    AsmIter::new(n, Some(k))
}

/// `Π_{j<n} (3j+1)!/(n+j)!`.
pub fn asm_count_formula(n: usize) -> BigInt {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |a, v| a * BigInt::from(v));
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..n {
        num *= fact(3 * j + 1);
        den *= fact(n + j);
    }
    num / den
}

/// `Σ_A x^{i-1} y^{j-1}` (tilde) or `Σ_A x^{i-1} y^{n-j}` (reversed).
pub fn genfun_doubly_refined(n: usize, conv: Convention) -> GenPoly {
    if n == 0 {
        return GenPoly::from_terms([((0, 0), 1)]);
    }
    (0..n)
        .into_par_iter()
        .map(|k| {
            let mut p = GenPoly::new();
            for a in enumerate_asms_with_first_one(n, k) {
                let (i, j) = a.exponents(conv);
                p.add_term(i, j, 1);
            }
            p
        })
        .reduce(GenPoly::new, |a, b| a.merge(&b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_asms(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 7, 42, 429]);
        assert_eq!(asm_count_formula(6), BigInt::from(7436));
        assert_eq!(asm_count_formula(7), BigInt::from(218348));
    }

    #[test]
    fn first_row_partition() {
        for n in 1..=5 {
            let total: usize = (0..n).map(|k| enumerate_asms_with_first_one(n, k).count()).sum();
            assert_eq!(total, enumerate_asms(n).count());
            for k in 0..n {
                assert!(enumerate_asms_with_first_one(n, k).all(|a| a.refined_stat().i == k + 1));
            }
        }
    }

    #[test]
    fn validation() {
        assert!(Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).is_ok());
        assert!(Asm::new(vec![vec![1, 1], vec![0, 0]]).is_err());
        assert!(Asm::new(vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 0, 0]]).is_err());
        for a in enumerate_asms(4) {
            assert_eq!(Asm::new(a.rows()).unwrap(), a);
        }
    }

    #[test]
    fn refined_stats() {
        assert_eq!(Asm::identity(3).refined_stat(), RefinedStat { i: 1, j: 3 });
        let m = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(m.refined_stat(), RefinedStat { i: 2, j: 2 });
        let anti = Asm::new(vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]).unwrap();
        assert_eq!(anti.refined_stat(), RefinedStat { i: 3, j: 1 });
    }

    #[test]
    fn small_generating_polynomials() {
        assert_eq!(
            genfun_doubly_refined(1, Convention::Tilde),
            GenPoly::from_terms([((0, 0), 1)])
        );
        assert_eq!(
            genfun_doubly_refined(2, Convention::Tilde),
            GenPoly::from_terms([((1, 0), 1), ((0, 1), 1)])
        );
    }
}
