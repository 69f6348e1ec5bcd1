//! The symmetric-function side: the staircase Schur function `s_{Y_n}`, its
//! values at Dyck specializations, the wheel condition, the recursion at
//! `q = e^{2πi/3}`, and the residue-sum form of `Z'_n`.

pub mod zprime;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::matrix::SquareMatrix;
use crate::algebra::scalar::{Field, Ring};
use crate::error::{Error, Result};
use crate::report::{strings, Check};
use crate::sample::Sampler;
use crate::{binom2, Cyclo};

pub use zprime::{zprime_pole_sum, zprime_residue_sum, zprime_residue_sum_q};

/// `Y_n = (n−1, n−1, n−2, n−2, …, 1, 1, 0, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StaircaseShape {
    pub n: usize,
}

impl StaircaseShape {
    /// All `2n` parts, zeros included.
    pub fn parts(&self) -> Vec<usize> {
        (0..self.n).rev().flat_map(|k| [k, k]).collect()
    }
}

/// Complete homogeneous sums `h_0..=h_max` of `points`.
pub fn complete_homogeneous<F: Ring>(points: &[F], max: usize) -> Vec<F> {
    let mut h = vec![F::zero(); max + 1];
    h[0] = F::one();
    for z in points {
        for k in 1..=max {
            let v = h[k].add_ref(&z.mul_ref(&h[k - 1]));
            h[k] = v;
        }
    }
    h
}

/// `s_{Y_n}(z_1..z_{2n})` by the Jacobi–Trudi determinant `det h_{λ_i − i + j}`.
pub fn schur_staircase<F: Field>(n: usize, points: &[F]) -> Result<F> {
    if points.len() != 2 * n {
        return Err(Error::WrongLength {
            expected: 2 * n,
            got: points.len(),
        });
    }
    let parts: Vec<usize> = StaircaseShape { n }.parts().into_iter().filter(|&p| p > 0).collect();
    let l = parts.len();
    if l == 0 {
        return Ok(F::one());
    }
    let h = complete_homogeneous(points, parts[0] + l);
    let m = SquareMatrix::from_fn(l, |i, j| {
        let k = parts[i] as isize - i as isize + j as isize;
        if k < 0 {
            F::zero()
        } else {
            h[k as usize].clone()
        }
    });
    Ok(m.det_gauss())
}

/// `det[z_i^{2n−j+d_j}] / det[z_i^{2n−j}]`; needs distinct points.
pub fn schur_bialternant<F: Field>(n: usize, points: &[F]) -> Result<F> {
    let big_n = 2 * n;
    if points.len() != big_n {
        return Err(Error::WrongLength {
            expected: big_n,
            got: points.len(),
        });
    }
    check_distinct(points)?;
    let d = StaircaseShape { n }.parts();
    let num = SquareMatrix::from_fn(big_n, |i, j| points[i].powu((big_n - 1 - j + d[j]) as u32));
    let den = SquareMatrix::from_fn(big_n, |i, j| points[i].powu((big_n - 1 - j) as u32));
    num.det_gauss()
        .checked_div(&den.det_gauss())
        .ok_or(Error::DivisionByZero("Vandermonde"))
}

pub(crate) fn check_distinct<F: PartialEq>(points: &[F]) -> Result<()> {
    for j in 0..points.len() {
        for i in 0..j {
            if points[i] == points[j] {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
    }
    Ok(())
}

/// `ε ∈ {±1}^{2n}` with total 0 and every prefix sum ≤ 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckSpec {
    pub eps: Vec<i8>,
}

impl DyckSpec {
    /// `(q^{ε_1}, …, q^{ε_{2n}})` at `q = e^{2πi/3}`.
    pub fn point(&self) -> Vec<Cyclo> {
        self.eps
            .iter()
            .map(|&e| if e > 0 { Cyclo::q() } else { Cyclo::q_inv() })
            .collect()
    }
}

/// All Catalan-many specializations, lexicographic with `−1 < +1`.
pub fn dyck_specializations(n: usize) -> Vec<DyckSpec> {
    fn rec(n: usize, eps: &mut Vec<i8>, sum: i32, out: &mut Vec<DyckSpec>) {
        if eps.len() == 2 * n {
            if sum == 0 {
                out.push(DyckSpec { eps: eps.clone() });
            }
            return;
        }
        let left = (2 * n - eps.len()) as i32;
        for e in [-1i8, 1] {
            let s = sum + e as i32;
            // prefix sums stay ≤ 0 and can still return to 0
            if s > 0 || -s > left - 1 {
                continue;
            }
            eps.push(e);
            rec(n, eps, s, out);
            eps.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(2 * n), 0, &mut out);
    out
}

/// `s_{Y_n}` at every Dyck specialization against `3^{C(n,2)}`.
pub fn verify_dyck_values(n: usize) -> Vec<Check> {
    let want = Cyclo::from_i64(3).powu(binom2(n) as u32);
    dyck_specializations(n)
        .into_iter()
        .map(|d| {
            let got = schur_staircase(n, &d.point()).expect("2n points");
            Check::compare("dyck", n, json!({ "eps": d.eps }), &want, &got)
        })
        .collect()
}

/// Samples `z_i = z, z_j = q²z, z_k = q⁴z` at random positions `i < j < k` and asks `P` to vanish.
pub fn wheel_check(p: &dyn Fn(&[Cyclo]) -> Cyclo, n: usize, samples: usize, rng: &mut Sampler) -> Vec<Check> {
    let m = 2 * n;
    if m < 3 {
        return Vec::new();
    }
    let q = Cyclo::q();
    let q2 = q.powu(2);
    let q4 = q.powu(4);
    (0..samples)
        .map(|_| {
            let mut idx = rng.permutation(m)[..3].to_vec();
            idx.sort_unstable();
            let mut z: Vec<Cyclo> = (0..m).map(|_| Cyclo::from_base(rng.rational())).collect();
            let base = Cyclo::from_base(rng.nonzero());
            z[idx[0]] = base.clone();
            z[idx[1]] = q2.mul_ref(&base);
            z[idx[2]] = q4.mul_ref(&base);
            let got = p(&z);
            Check::compare(
                "wheel",
                n,
                json!({ "z": strings(&z), "ijk": idx }),
                &Cyclo::zero(),
                &got,
            )
        })
        .collect()
}

/// The three quantities of the recursion with `z_j` overwritten by `q² z_i`:
/// `s_{Y_n}(z)`, `Π_{k≠i,j}(q^{-2} z_i − z_k)·s_{Y_{n−1}}` and `Π_{k≠i,j}(q z_i − z_k)·s_{Y_{n−1}}`.
pub fn recursion_sides(n: usize, z: &[Cyclo], i: usize, j: usize) -> Result<(Cyclo, Cyclo, Cyclo)> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: 2,
            max: i64::MAX,
        });
    }
    if z.len() != 2 * n {
        return Err(Error::WrongLength {
            expected: 2 * n,
            got: z.len(),
        });
    }
    if i == j || i >= z.len() || j >= z.len() {
        return Err(Error::OutOfRange {
            what: "index",
            value: j as i64,
            min: 0,
            max: z.len() as i64 - 1,
        });
    }
    let q = Cyclo::q();
    let mut z = z.to_vec();
    z[j] = q.powu(2).mul_ref(&z[i]);
    let lhs = schur_staircase(n, &z)?;
    let rest: Vec<Cyclo> = (0..z.len())
        .filter(|&k| k != i && k != j)
        .map(|k| z[k].clone())
        .collect();
    let smaller = schur_staircase(n - 1, &rest)?;
    let q_m2 = q.inv().unwrap().powu(2);
    let mut b = smaller.clone();
    let mut s = smaller;
    for zk in &rest {
        b = b.mul_ref(&q_m2.mul_ref(&z[i]).sub_ref(zk));
        s = s.mul_ref(&q.mul_ref(&z[i]).sub_ref(zk));
    }
    Ok((lhs, b, s))
}

/// Random-point checks of the recursion, reporting the ratio between the two prefactor conventions.
pub fn recursion_check_q3(n: usize, samples: usize, rng: &mut Sampler) -> Result<Vec<Check>> {
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let z: Vec<Cyclo> = (0..2 * n).map(|_| Cyclo::from_base(rng.rational())).collect();
        let perm = rng.permutation(2 * n);
        let (i, j) = (perm[0], perm[1]);
        let (lhs, b, s) = recursion_sides(n, &z, i, j)?;
        let ratio = if b.is_zero() {
            Value::Null
        } else {
            Value::String(s.checked_div(&b).unwrap().to_string())
        };
        let point = json!({ "z": strings(&z), "i": i, "j": j, "ratio": ratio });
        out.push(Check::compare("recursion", n, point, &b, &lhs));
    }
    Ok(out)
}

/// Checks any evaluator for full symmetry under `count` random permutations.
pub fn symmetric_under_permutations(
    f: &dyn Fn(&[Cyclo]) -> Cyclo,
    point: &[Cyclo],
    count: usize,
    rng: &mut Sampler,
) -> bool {
    let base = f(point);
    (0..count).all(|_| {
        let p = rng.permutation(point.len());
        let moved: Vec<Cyclo> = p.iter().map(|&k| point[k].clone()).collect();
        f(&moved) == base
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, Rational};
    use num_traits::One;

    #[test]
    fn shape() {
        assert_eq!(StaircaseShape { n: 3 }.parts(), vec![2, 2, 1, 1, 0, 0]);
    }

    #[test]
    fn small_values() {
        assert_eq!(
            schur_staircase::<Rational>(1, &[ratio(5, 1), ratio(7, 1)]).unwrap(),
            ratio(1, 1)
        );
        let ones = vec![Rational::one(); 4];
        assert_eq!(schur_staircase(2, &ones).unwrap(), ratio(6, 1));
        let q = Cyclo::q();
        let qi = Cyclo::q_inv();
        let pt = [qi.clone(), qi, q.clone(), q];
        assert_eq!(schur_staircase(2, &pt).unwrap(), Cyclo::from_i64(3));
    }

    #[test]
    fn jacobi_trudi_matches_bialternant() {
        let mut rng = Sampler::new(11);
        for n in 1..=3 {
            let z = rng.distinct(2 * n);
            assert_eq!(schur_staircase(n, &z).unwrap(), schur_bialternant(n, &z).unwrap());
        }
        let z = vec![ratio(1, 1), ratio(1, 1)];
        assert_eq!(schur_bialternant(1, &z), Err(Error::CoincidentPoints(0, 1)));
    }

    #[test]
    fn dyck_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| dyck_specializations(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42]);
        assert_eq!(dyck_specializations(1)[0].eps, vec![-1, 1]);
    }

    #[test]
    fn dyck_values() {
        for n in 1..=4 {
            assert!(verify_dyck_values(n).iter().all(|c| c.pass));
        }
    }

    #[test]
    fn wheel() {
        let mut rng = Sampler::new(3);
        let s2 = |z: &[Cyclo]| schur_staircase(2, z).unwrap();
        assert!(wheel_check(&s2, 2, 20, &mut rng).iter().all(|c| c.pass));
        let one = |_: &[Cyclo]| Cyclo::one();
        let r = wheel_check(&one, 2, 1, &mut rng);
        assert!(!r[0].pass);
        assert!(wheel_check(&s2, 2, 0, &mut rng).is_empty());
    }

    #[test]
    fn recursion() {
        let mut rng = Sampler::new(5);
        for n in 2..=3 {
            assert!(recursion_check_q3(n, 5, &mut rng).unwrap().iter().all(|c| c.pass));
        }
        // z_i = 0 forces z_j = 0 as well
        let z: Vec<Cyclo> = [0, 2, 3, 5].iter().map(|&v| Cyclo::from_i64(v)).collect();
        let (lhs, b, s) = recursion_sides(2, &z, 0, 1).unwrap();
        assert_eq!(lhs, b);
        assert_eq!(b, s);
        assert_eq!(lhs, Cyclo::from_i64(15));
    }
}
