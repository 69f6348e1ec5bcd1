//! Slice-weighted bundle sums, by brute force and by the LGV determinant sum.

use super::{enumerate_nilps, Nilp};
use crate::algebra::matrix::SquareMatrix;
use crate::algebra::scalar::{Domain, Ring};
use crate::error::{Error, Result};

/// `Π_i t_i^{(vertical steps in slice i)}`, slice 0 being the extra steps.
pub fn nilp_weight<R: Ring>(p: &Nilp, t: &[R]) -> Result<R> {
    if t.len() != p.n() {
        return Err(Error::WrongLength {
            expected: p.n(),
            got: t.len(),
        });
    }
    Ok(p.slice_vertical_counts()
        .iter()
        .zip(t)
        .fold(R::one(), |acc, (&c, w)| acc.mul_ref(&w.powu(c as u32))))
}

/// Weighted sum over all bundles of size `n`.
pub fn path_weight_sum<R: Ring>(n: usize, t: &[R]) -> Result<R> {
    let mut total = R::zero();
    for p in enumerate_nilps(n) {
        total = total.add_ref(&nilp_weight(&p, t)?);
    }
    Ok(total)
}

/// Σ over `1 = r_1 < … < r_{n−1}`, `r_i ≤ 2i + 1`, odd gaps, of `det[e_{2i−r_j}(t_0, …, t_i)]`.
pub fn lgv_genfun<R: Domain>(n: usize, t: &[R]) -> Result<R> {
    if t.len() != n {
        return Err(Error::WrongLength {
            expected: n,
            got: t.len(),
        });
    }
    if n <= 1 {
        return Ok(R::one());
    }
    // e[i][k] = e_k(t_0, …, t_i)
    let mut e: Vec<Vec<R>> = Vec::with_capacity(n);
    let mut cur = vec![R::one()];
    for w in t {
        let mut next = cur.clone();
        next.push(R::zero());
        for k in 1..next.len() {
            next[k] = next[k].add_ref(&w.mul_ref(&cur[k - 1]));
        }
        cur = next;
        e.push(cur.clone());
    }
    let entry = |i: usize, r: usize| -> R {
        let k = 2 * i as i64 - r as i64;
        if k < 0 {
            R::zero()
        } else {
            e[i].get(k as usize).cloned().unwrap_or_else(R::zero)
        }
    };
    let m = n - 1;
    let mut total = R::zero();
    let mut seq = vec![1usize];
    fn walk<R: Domain>(seq: &mut Vec<usize>, m: usize, entry: &dyn Fn(usize, usize) -> R, total: &mut R) {
        let len = seq.len();
        if len == m {
            let mat = SquareMatrix::from_fn(m, |i, j| entry(i + 1, seq[j]));
            *total = total.add_ref(&mat.determinant());
            return;
        }
        let i = len + 1;
        let mut r = seq[len - 1] + 1;
        while r <= 2 * i + 1 {
            seq.push(r);
            walk(seq, m, entry, total);
            seq.pop();
            r += 2;
        }
    }
    walk(&mut seq, m, &entry, &mut total);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_poly, Integer, QPoly};
    use num_traits::One;

    #[test]
    fn counts_at_unit_weights() {
        for n in 1..=6 {
            let ones = vec![Integer::one(); n];
            let brute = path_weight_sum(n, &ones).unwrap();
            assert_eq!(lgv_genfun(n, &ones).unwrap(), brute);
        }
        assert_eq!(lgv_genfun(3, &vec![Integer::one(); 3]).unwrap(), Integer::from(7));
    }

    #[test]
    fn symbolic_weights() {
        for n in 2..=5 {
            let t: Vec<QPoly> = (0..n).map(|i| parse_poly(&format!("t{i}")).unwrap()).collect();
            assert_eq!(lgv_genfun(n, &t).unwrap(), path_weight_sum(n, &t).unwrap());
        }
    }

    #[test]
    fn first_entry() {
        let t = vec![parse_poly("a").unwrap(), parse_poly("b").unwrap()];
        assert_eq!(lgv_genfun(2, &t).unwrap(), parse_poly("a + b").unwrap());
    }
}
