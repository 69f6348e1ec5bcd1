//! The Mills–Robbins–Rumsey statistic on TSSCPP arrays, indexed by
//! `k ∈ 1..=n+1`, in its upper-left and lower-right forms.

use super::tsscpp::Tsscpp;
use crate::error::{Error, Result};

fn check_k(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n + 1 {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            min: 1,
            max: n as i64 + 1,
        });
    }
    Ok(())
}

/// Lower-right form; column `n` is replaced by `2n − t`.
pub fn mrr_u_statistic(a: &Tsscpp, k: usize) -> Result<usize> {
    let n = a.n();
    check_k(n, k)?;
    // 1-based entries
    let at = |t: usize, s: usize| a.get(t - 1, s - 1) as i64;
    let aa = |t: usize, s: usize| if s == n { (2 * n - t) as i64 } else { at(t, s) };
    let steps: i64 = (n + k..=2 * n).map(|t| aa(t, t - k) - aa(t, t - k + 1)).sum();
    let circles = (n + 1..n + k).filter(|&t| at(t, n + 1) < (2 * n - t) as i64).count();
    Ok(steps as usize + circles)
}

/// Upper-left form; column `n + 1` is replaced by `2n − t + 1`.
pub fn mrr_upper_left(a: &Tsscpp, k: usize) -> Result<usize> {
    let n = a.n();
    check_k(n, k)?;
    let at = |t: usize, s: usize| a.get(t - 1, s - 1) as i64;
    let aa = |t: usize, s: usize| if s == n + 1 { (2 * n - t + 1) as i64 } else { at(t, s) };
    let steps: i64 = (1..=n + 1 - k).map(|t| aa(t, t + k - 1) - aa(t, t + k)).sum();
    let circles = (n + 2 - k..=n).filter(|&t| at(t, n) > (2 * n - t + 1) as i64).count();
    Ok(steps as usize + circles)
}

/// The path statistic `u^j` that agrees object by object with MRR index `k`.
pub fn mrr_index_to_u(n: usize, k: usize) -> usize {
    k.min(n)
}
