//! The spectral-parameter antisymmetrization `B_n(w, z)`, brute force against
//! its determinant form, and the Cauchy evaluation of `det[1/h_1(w_i, z_j)]`.
//!
//! Generic over the field; `q = r²` so that tests can use rational `q`.

use super::signed_permutations;
use crate::algebra::matrix::SquareMatrix;
use crate::algebra::scalar::Field;
use crate::binom2;
use crate::error::{Error, Result};

fn h1<F: Field>(x: &F, y: &F) -> F {
    x.sub_ref(y).mul_ref(&x.mul_ref(y).sub_ref(&F::one()))
}

fn hq<F: Field>(x: &F, y: &F, q: &F, qi: &F) -> F {
    let a = q.mul_ref(x).sub_ref(&qi.mul_ref(y));
    let b = q.mul_ref(&x.mul_ref(y)).sub_ref(qi);
    a.mul_ref(&b)
}

fn setup<F: Field>(n: usize, w: &[F], z: &[F], r: &F) -> Result<(F, F)> {
    for v in [w, z] {
        if v.len() != n {
            return Err(Error::WrongLength {
                expected: n,
                got: v.len(),
            });
        }
    }
    let q = r.mul_ref(r);
    let qi = q.inv().ok_or(Error::DivisionByZero("q"))?;
    Ok((q, qi))
}

fn div<F: Field>(a: &F, b: &F, what: &'static str) -> Result<F> {
    a.checked_div(b).ok_or(Error::DivisionByZero(what))
}

/// `AS_w { Π_{i<j} (q w_i − q^{−1} w_j) / (Π_{i≤j} h_1(w_j, z_i) Π_{i≥j} h_q(w_j, z_i)) }`.
pub fn bn_brute<F: Field>(n: usize, w: &[F], z: &[F], r: &F) -> Result<F> {
    let (q, qi) = setup(n, w, z, r)?;
    let mut total = F::zero();
    for (perm, odd) in signed_permutations(n) {
        let ws: Vec<&F> = perm.iter().map(|&k| &w[k]).collect();
        let mut num = F::one();
        let mut den = F::one();
        for i in 0..n {
            for j in 0..n {
                if i < j {
                    num = num.mul_ref(&q.mul_ref(ws[i]).sub_ref(&qi.mul_ref(ws[j])));
                }
                if i <= j {
                    den = den.mul_ref(&h1(ws[j], &z[i]));
                }
                if i >= j {
                    den = den.mul_ref(&hq(ws[j], &z[i], &q, &qi));
                }
            }
        }
        let term = div(&num, &den, "antisymmetrized term")?;
        total = if odd {
            total.sub_ref(&term)
        } else {
            total.add_ref(&term)
        };
    }
    Ok(total)
}

/// `q^{n(n−1)/2} det[f(w_i, z_j)] / Π_{i<j} h_1(z_i, z_j)(1 − q² w_i w_j)` with `f = 1/(h_1 h_q)`.
pub fn bn_closed<F: Field>(n: usize, w: &[F], z: &[F], r: &F) -> Result<F> {
    let (q, qi) = setup(n, w, z, r)?;
    let mut entries = Vec::with_capacity(n);
    for wi in w {
        let mut row = Vec::with_capacity(n);
        for zj in z {
            row.push(div(&F::one(), &h1(wi, zj).mul_ref(&hq(wi, zj, &q, &qi)), "f(w, z)")?);
        }
        entries.push(row);
    }
    let det = SquareMatrix::from_rows(entries)?.det_gauss();
    let q2 = q.mul_ref(&q);
    let mut den = F::one();
    for i in 0..n {
        for j in i + 1..n {
            let c = F::one().sub_ref(&q2.mul_ref(&w[i].mul_ref(&w[j])));
            den = den.mul_ref(&h1(&z[i], &z[j])).mul_ref(&c);
        }
    }
    div(&q.powu(binom2(n) as u32).mul_ref(&det), &den, "closed-form denominator")
}

/// `(det[1/h_1(w_i, z_j)], Π_{i<j} h_1(w_i, w_j) h_1(z_j, z_i) / Π_{i,j} h_1(w_i, z_j))`.
pub fn cauchy_sides<F: Field>(n: usize, w: &[F], z: &[F]) -> Result<(F, F)> {
    for v in [w, z] {
        if v.len() != n {
            return Err(Error::WrongLength {
                expected: n,
                got: v.len(),
            });
        }
    }
    let mut entries = Vec::with_capacity(n);
    let mut den = F::one();
    for wi in w {
        let mut row = Vec::with_capacity(n);
        for zj in z {
            let h = h1(wi, zj);
            row.push(div(&F::one(), &h, "h1(w, z)")?);
            den = den.mul_ref(&h);
        }
        entries.push(row);
    }
    let det = SquareMatrix::from_rows(entries)?.det_gauss();
    let mut num = F::one();
    for i in 0..n {
        for j in i + 1..n {
            num = num.mul_ref(&h1(&w[i], &w[j])).mul_ref(&h1(&z[j], &z[i]));
        }
    }
    Ok((det, div(&num, &den, "Cauchy denominator")?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;
    use crate::{ratio, Rational};

    #[test]
    fn base_case() {
        let (w, z, r) = (ratio(2, 1), ratio(3, 1), ratio(5, 7));
        let q = r.clone() * r.clone();
        let want = Rational::from_integer(1.into()) / (h1(&w, &z) * hq(&w, &z, &q, &q.inv().unwrap()));
        assert_eq!(
            bn_brute(1, std::slice::from_ref(&w), std::slice::from_ref(&z), &r).unwrap(),
            want
        );
        assert_eq!(bn_closed(1, &[w], &[z], &r).unwrap(), want);
    }

    #[test]
    fn brute_matches_closed() {
        let mut rng = Sampler::new(11);
        for n in 1..=3 {
            let mut compared = 0;
            for _ in 0..4 {
                let w = rng.distinct(n);
                let z = rng.distinct(n);
                let r = rng.nonzero();
                let (Ok(a), Ok(b)) = (bn_brute(n, &w, &z, &r), bn_closed(n, &w, &z, &r)) else {
                    continue;
                };
                assert_eq!(a, b);
                compared += 1;
            }
            assert!(compared >= 2);
        }
    }

    #[test]
    fn swapped_pair_is_singular() {
        // h_1(w_1, z_2) = 0 puts a pole in both forms
        let (a, b) = (ratio(2, 3), ratio(5, 4));
        let w = [a.clone(), b.clone()];
        let z = [b, a];
        let r = ratio(3, 2);
        assert!(matches!(bn_brute(2, &w, &z, &r), Err(Error::DivisionByZero(_))));
        assert!(matches!(bn_closed(2, &w, &z, &r), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn cauchy() {
        let mut rng = Sampler::new(5);
        for n in 1..=4 {
            let pts = rng.distinct(2 * n);
            let (det, prod) = cauchy_sides(n, &pts[..n], &pts[n..]).unwrap();
            assert_eq!(det, prod);
        }
    }
}
