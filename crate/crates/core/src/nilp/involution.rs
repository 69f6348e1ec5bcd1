//! The involutions `g` (exchanging `u^i` and `u^{i+1}`) and `h` (acting on
//! slice 1 and the extra steps).
//!
//! Both work island by island: an island is a maximal run of paths sitting at
//! consecutive x-coordinates at the bottom of the lower slice.

use super::{extra_step, Nilp, Step};
use crate::error::{Error, Result};

/// Groups `(t, x)` pairs, sorted by `t`, into runs of consecutive `x`.
fn islands(points: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut last_x: Option<usize> = None;
    for &(t, x) in points {
        match (last_x, out.last_mut()) {
            (Some(px), Some(cur)) if x == px + 1 => cur.push(t),
            _ => out.push(vec![t]),
        }
        last_x = Some(x);
    }
    out
}

/// `g` on slices `row + 1` (lower) and `row` (upper), `1 ≤ row ≤ n − 2`,
/// restricted to the paths with a step in both.
///
/// In each island the double steps read `VV^r VD^s DV^t DD^u` from left to
/// right; `g` rewrites them as `VV^r VD^t DV^s DD^u`.
pub fn involution_g(p: &Nilp, row: usize) -> Result<Nilp> {
    let n = p.n();
    if row < 1 || row + 2 > n {
        return Err(Error::OutOfRange {
            what: "row",
            value: row as i64,
            min: 1,
            max: n as i64 - 2,
        });
    }
    let y = -(row as i64) - 1;
    let points: Vec<(usize, usize)> = (row + 1..n).map(|t| (t, p.x_at(t, y))).collect();
    let mut paths = p.paths().to_vec();
    for island in islands(&points) {
        // 0-based index of the lower-slice step of path t is t − row − 1
        let pairs: Vec<(Step, Step)> = island
            .iter()
            .map(|&t| (paths[t][t - row - 1], paths[t][t - row]))
            .collect();
        let count = |a: Step, b: Step| pairs.iter().filter(|&&q| q == (a, b)).count();
        let (r, s, t_, u) = (
            count(Step::V, Step::V),
            count(Step::V, Step::D),
            count(Step::D, Step::V),
            count(Step::D, Step::D),
        );
        let rewritten = std::iter::repeat_n((Step::V, Step::V), r)
            .chain(std::iter::repeat_n((Step::V, Step::D), t_))
            .chain(std::iter::repeat_n((Step::D, Step::V), s))
            .chain(std::iter::repeat_n((Step::D, Step::D), u));
        for (&t, (a, b)) in island.iter().zip(rewritten) {
            paths[t][t - row - 1] = a;
            paths[t][t - row] = b;
        }
    }
    extra_step(paths)
}

/// `h` on slice 1 and the extra steps, for the paths `t ≥ 1`.
///
/// Islands are either even (`VV^r DD^s`) or odd (`VD`/`DV` only); even islands
/// become `VV^s DD^r`, odd islands are left alone.
pub fn involution_h(p: &Nilp) -> Result<Nilp> {
    let n = p.n();
    let points: Vec<(usize, usize)> = (1..n).map(|t| (t, p.x_at(t, -1))).collect();
    let mut paths = p.paths().to_vec();
    let mut extra = p.extra().to_vec();
    for island in islands(&points) {
        let pairs: Vec<(Step, Step)> = island.iter().map(|&t| (paths[t][t - 1], extra[t])).collect();
        let even = pairs.iter().all(|&(a, b)| a == b);
        if !even {
            if pairs.iter().any(|&(a, b)| a == b) {
                return Err(Error::InvalidNilp("island mixes even and odd double steps".into()));
            }
            continue;
        }
        let r = pairs.iter().filter(|&&(a, _)| a == Step::V).count();
        let s = pairs.len() - r;
        for (k, &t) in island.iter().enumerate() {
            let st = if k < s { Step::V } else { Step::D };
            paths[t][t - 1] = st;
            extra[t] = st;
        }
    }
    let out = extra_step(paths)?;
    if out.extra() != extra.as_slice() {
        return Err(Error::InvalidNilp(
            "rewritten extra steps disagree with the parity rule".into(),
        ));
    }
    Ok(out)
}
