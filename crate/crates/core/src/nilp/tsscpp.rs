//! TSSCPP height arrays and their bijection with path bundles.
//!
//! A TSSCPP of half-size `n` is stored as its full `2n × 2n` height array.
//! The lower-left part of the bottom-right `n × n` block (the "triangle",
//! `T[a][b] = A[n+a][n+b]` for `b ≤ a`) determines the rest.

use std::fmt;

use serde_json::{json, Value};

use super::{enumerate_nilps, extra_step, Nilp, Step};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tsscpp {
    n: usize,
    heights: Vec<u32>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidTsscpp(msg.into())
}

impl Tsscpp {
    /// Validates monotonicity, total symmetry and self-complementarity.
    pub fn from_array(rows: Vec<Vec<u32>>) -> Result<Self> {
        let size = rows.len();
        if size % 2 == 1 {
            return Err(invalid(format!("side {size} is odd")));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::WrongLength {
                expected: size,
                got: r.len(),
            });
        }
        let n = size / 2;
        let a = Tsscpp {
            n,
            heights: rows.into_iter().flatten().collect(),
        };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let m = 2 * self.n;
        let h = |i: usize, j: usize| self.get(i, j);
        for i in 0..m {
            for j in 0..m {
                let v = h(i, j);
                if v as usize > m {
                    return Err(invalid(format!("height {v} at ({i}, {j}) exceeds {m}")));
                }
                if j + 1 < m && v < h(i, j + 1) {
                    return Err(invalid(format!("row {i} increases at column {j}")));
                }
                if i + 1 < m && v < h(i + 1, j) {
                    return Err(invalid(format!("column {j} increases at row {i}")));
                }
                if v != h(j, i) {
                    return Err(invalid(format!("not symmetric at ({i}, {j})")));
                }
                if v + h(m - 1 - i, m - 1 - j) != m as u32 {
                    return Err(invalid(format!("not self-complementary at ({i}, {j})")));
                }
                // cube (i, j, k) present forces (j, k, i)
                for k in 0..v as usize {
                    if (i as u32) >= h(j, k) {
                        return Err(invalid(format!("not cyclically symmetric at cube ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Rebuilds the full array from the triangle through the symmetries.
    pub fn from_triangle(n: usize, tri: &[Vec<u32>]) -> Result<Self> {
        if tri.len() != n {
            return Err(Error::WrongLength {
                expected: n,
                got: tri.len(),
            });
        }
        for (a, row) in tri.iter().enumerate() {
            if row.len() != a + 1 {
                return Err(Error::WrongLength {
                    expected: a + 1,
                    got: row.len(),
                });
            }
        }
        let m = 2 * n;
        // 1-based cube coordinates
        let member = |c: [usize; 3]| -> bool {
            let inside = |c: [usize; 3]| {
                let mut s = c;
                s.sort_unstable();
                let (k, j, i) = (s[0], s[1], s[2]);
                if j > n {
                    Some(k as u32 <= tri[i - n - 1][j - n - 1])
                } else {
                    None
                }
            };
            match inside(c) {
                Some(b) => b,
                None => !inside(c.map(|x| m + 1 - x)).expect("reflection has two large coordinates"),
            }
        };
        let heights = (1..=m)
            .flat_map(|i| (1..=m).map(move |j| (i, j)))
            .map(|(i, j)| (1..=m).filter(|&k| member([i, j, k])).count() as u32)
            .collect();
        let a = Tsscpp { n, heights };
        a.validate()?;
        Ok(a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based entry.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.heights[i * 2 * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.heights.chunks(2 * self.n).map(|r| r.to_vec()).collect()
    }

    pub fn triangle(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        (0..n)
            .map(|a| (0..=a).map(|b| self.get(n + a, n + b)).collect())
            .collect()
    }

    /// Path `t` separates the triangle entries `≥ n − t` from the smaller ones;
    /// up-steps become vertical and right-steps diagonal.
    pub fn to_nilp(&self) -> Nilp {
        let n = self.n;
        let tri = self.triangle();
        let mut paths = vec![Vec::new()];
        for t in 1..n {
            let level = (n - t) as u32;
            let lambda = |a: usize| (0..a).filter(|&b| tri[a - 1][b] >= level).count();
            let mut steps = Vec::with_capacity(t);
            let mut x = 0;
            for a in (1..=t).rev() {
                let la = lambda(a);
                steps.extend(std::iter::repeat_n(Step::D, la - x));
                x = la;
                if x == a {
                    break;
                }
                steps.push(Step::V);
            }
            paths.push(steps);
        }
        extra_step(paths).expect("triangle paths never touch")
    }

    pub fn from_nilp(p: &Nilp) -> Result<Self> {
        let n = p.n();
        // lambdas[t][a] for path t, a = 1..=t
        let mut lambdas = vec![Vec::new(); n];
        for (t, path) in p.paths().iter().enumerate().skip(1) {
            let mut la = vec![0usize; t + 1];
            let (mut x, mut a) = (0, t);
            for &s in path {
                match s {
                    Step::D => x += 1,
                    Step::V => {
                        if a == 0 {
                            return Err(Error::InvalidNilp(format!("path {t} has too many vertical steps")));
                        }
                        la[a] = x;
                        a -= 1;
                    }
                }
            }
            if a > 0 && x != a {
                return Err(Error::InvalidNilp(format!("path {t} stops short of its diagonal")));
            }
            for (b, v) in la.iter_mut().enumerate().take(a + 1).skip(1) {
                *v = b;
            }
            lambdas[t] = la;
        }
        let tri: Vec<Vec<u32>> = (1..=n)
            .map(|a| {
                (0..a)
                    .map(|b| (1..=n - a).filter(|&level| b < lambdas[n - level][a]).count() as u32)
                    .collect()
            })
            .collect();
        Self::from_triangle(n, &tri)
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "heights": self.rows() })
    }
}

impl fmt::Display for Tsscpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", lines.join("\n"))
    }
}

/// All TSSCPPs of half-size `n`, in the order of the path bundles.
pub fn enumerate_tsscpps(n: usize) -> impl Iterator<Item = Tsscpp> {
    enumerate_nilps(n).map(|p| Tsscpp::from_nilp(&p).expect("every bundle has a preimage"))
}
