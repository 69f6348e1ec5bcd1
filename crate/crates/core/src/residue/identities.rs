//! Checks of the constant-term identities behind the integral route: the
//! antisymmetrization identity, its homogeneous-limit derivation, and the
//! even-partition Schur sum.

use num_traits::{One, Zero};
use serde_json::json;

use super::{iterated_residue, signed_permutations, u_names, IntegrandSpec, WindowPolicy};
use crate::algebra::poly::var_list;
use crate::algebra::scalar::{Field, Ring};
use crate::algebra::series::TruncatedSeries;
use crate::error::{Error, Result};
use crate::report::{strings, Check};
use crate::sample::Sampler;
use crate::{Cyclo, QPoly, Rational, SquareMatrix};

fn u(l: usize) -> QPoly {
    QPoly::var(&format!("u{l}"))
}

fn integrate(spec: &IntegrandSpec<QPoly>) -> Result<QPoly> {
    let order: Vec<&str> = spec.vars().iter().rev().map(|s| s.as_str()).collect();
    iterated_residue(spec, &order, WindowPolicy::Tight)
}

fn check_symmetric(n: usize, phi: &QPoly) -> Result<()> {
    let names = u_names(1..=n);
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    if phi.is_symmetric_in(&refs) {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

/// `∮ φ Π u_i^{−2i} Π_{i<j} (u_j − u_i)(1 + τu_j + u_iu_j)`.
fn zeil_lhs(n: usize, tau: &QPoly, phi: &QPoly) -> Result<QPoly> {
    let mut spec = IntegrandSpec::new(u_names(1..=n), (1..=n).map(|i| 2 * i as u32).collect())?;
    spec.push_qpoly(phi);
    for i in 1..=n {
        for j in i + 1..=n {
            spec.push_qpoly(&((u(j) - u(i)) * (QPoly::one() + tau.clone() * u(j) + u(i) * u(j))));
        }
    }
    integrate(&spec)
}

/// `∮ φ Π (1 + τu_i)^{i−1} u_i^{−2i} Π_{i<j} (u_j − u_i) / Π_{i≤j} (1 − u_iu_j)`.
fn zeil_rhs(n: usize, tau: &QPoly, phi: &QPoly) -> Result<QPoly> {
    let mut spec = IntegrandSpec::new(u_names(1..=n), (1..=n).map(|i| 2 * i as u32).collect())?;
    spec.push_qpoly(phi);
    for i in 1..=n {
        spec.push_qpoly(&(QPoly::one() + tau.clone() * u(i)).powu(i as u32 - 1));
        for j in i..=n {
            if j > i {
                spec.push_qpoly(&(u(j) - u(i)));
            }
            spec.push_qgeometric(&(u(i) * u(j)))?;
        }
    }
    integrate(&spec)
}

/// Both sides of the antisymmetrization identity for a symmetric `φ(u_1, …, u_n)`.
pub fn zeilid_check(n: usize, tau: &Rational, phi: &QPoly) -> Result<Check> {
    check_symmetric(n, phi)?;
    let t = QPoly::constant(tau.clone());
    let lhs = zeil_lhs(n, &t, phi)?;
    let rhs = zeil_rhs(n, &t, phi)?;
    let point = json!({ "tau": tau.to_string(), "phi": phi.to_string() });
    Ok(Check::compare("zeilid", n, point, &lhs, &rhs))
}

/// `τ = −(q + q^{−1})` at the cube root of unity.
fn tau_at_cube_root() -> Rational {
    let q = Cyclo::q();
    let t = -(q.clone() + q.inv().expect("q is a unit"));
    assert!(t.is_base(), "τ is rational at the cube root of unity");
    t.c0
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |a, k| a * Rational::from_integer(k.into()))
}

/// The homogeneous limit: the antisymmetrization of `Π (1 + τu_i)^{i−1} / u_i^{2i}`
/// as a polynomial identity, the change of variables `w = (1 − q^{−1}u)/(1 − qu)`
/// at sample points, and equality of the two resulting integrals.
pub fn homogeneous_limit_check(n: usize, phi: &QPoly, samples: usize, rng: &mut Sampler) -> Result<Vec<Check>> {
    check_symmetric(n, phi)?;
    let tau = tau_at_cube_root();
    let t = QPoly::constant(tau.clone());
    let mut out = Vec::new();

    // multiplied through by Π u_i^{2n}
    let mut lhs = QPoly::zero();
    for (perm, odd) in signed_permutations(n) {
        let mut term = QPoly::one();
        for (i, &k) in (1..=n).zip(&perm) {
            let v = u(k + 1);
            term = term * (QPoly::one() + t.clone() * v.clone()).powu(i as u32 - 1) * v.powu(2 * (n - i) as u32);
        }
        lhs = if odd { lhs - term } else { lhs + term };
    }
    let mut rhs = QPoly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            rhs = rhs * (u(i) - u(j)) * (u(i) + u(j) + t.clone() * u(i) * u(j));
        }
    }
    out.push(Check::compare(
        "antisymmetrization",
        n,
        json!({ "tau": tau.to_string() }),
        &rhs,
        &lhs,
    ));

    let q = Cyclo::q();
    let qi = Cyclo::q_inv();
    let tc = Cyclo::from_base(tau.clone());
    for _ in 0..samples {
        let (a, b) = (Cyclo::from_base(rng.rational()), Cyclo::from_base(rng.rational()));
        let w = |v: &Cyclo| (Cyclo::one() - qi.mul_ref(v)).checked_div(&(Cyclo::one() - q.mul_ref(v)));
        let (Some(wa), Some(wb)) = (w(&a), w(&b)) else {
            continue;
        };
        let left = q.mul_ref(&wa) - qi.mul_ref(&wb);
        let den = (Cyclo::one() - q.mul_ref(&a)) * (Cyclo::one() - q.mul_ref(&b));
        let right = ((q.clone() - qi.clone()) * (Cyclo::one() + tc.mul_ref(&b) + a.mul_ref(&b)))
            .checked_div(&den)
            .ok_or(Error::DivisionByZero("change of variables"))?;
        let point = json!({ "u": strings(&[a.clone(), b.clone()]) });
        out.push(Check::compare("change-of-variables", n, point, &right, &left));
    }

    let before = zeil_lhs(n, &t, phi)?.scale(&factorial(n));
    let mut spec = IntegrandSpec::new(u_names(1..=n), vec![2 * n as u32; n])?;
    spec.push_qpoly(phi);
    for i in 1..=n {
        for j in i..=n {
            if j > i {
                let f = (u(j) - u(i)) * (u(i) - u(j)) * (u(i) + u(j) + t.clone() * u(i) * u(j));
                spec.push_qpoly(&f);
            }
            spec.push_qgeometric(&(u(i) * u(j)))?;
        }
    }
    let after = integrate(&spec)?;
    let point = json!({ "tau": tau.to_string(), "phi": phi.to_string() });
    out.push(Check::compare("homogeneous-limit", n, point, &before, &after));
    Ok(out)
}

/// Sequences `r_0 < … < r_{n−1}` with `r_0` even, odd gaps and `Σ r ≤ bound`.
fn even_sequences(n: usize, bound: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, bound: usize, seq: &mut Vec<usize>, sum: usize, out: &mut Vec<Vec<usize>>) {
        if seq.len() == n {
            out.push(seq.clone());
            return;
        }
        let mut r = match seq.last() {
            None => 0,
            Some(&p) => p + 1,
        };
        // the remaining entries are each at least r
        while sum + r * (n - seq.len()) <= bound {
            seq.push(r);
            rec(n, bound, seq, sum + r, out);
            seq.pop();
            r += 2;
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::new(), 0, &mut out);
    out
}

/// `Σ det[u_i^{r_{j−1}}]` over even-start odd-gap sequences against the expansion of
/// `Π_{j>i} (u_j − u_i) / Π_{j≥i} (1 − u_ju_i)`, through total degree `bound`.
pub fn even_partition_sum_check(n: usize, bound: usize) -> Result<Check> {
    let names = u_names(1..=n);
    let mut lhs = QPoly::zero();
    for r in even_sequences(n, bound) {
        let m = SquareMatrix::from_fn(n, |i, j| u(i + 1).powu(r[j] as u32));
        lhs = lhs + m.determinant();
    }
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let vars = var_list(&refs);
    let windows = vec![(0, bound as i32); n];
    let mut num = QPoly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            num = num * (u(j) - u(i));
        }
    }
    let mut series = TruncatedSeries::from_poly(&num, vars.clone(), windows.clone())?;
    for i in 1..=n {
        for j in i..=n {
            let s = TruncatedSeries::geometric_expand(&QPoly::one(), &(u(j) * u(i)), vars.clone(), windows.clone())?;
            series = series.mul(&s)?;
        }
    }
    let rhs = QPoly::from_terms(
        vars,
        series
            .terms()
            .filter(|(e, _)| e.iter().map(|&k| k as usize).sum::<usize>() <= bound)
            .map(|(e, c)| (e.iter().map(|&k| k as u32).collect(), c.clone())),
    );
    Ok(Check::compare(
        "even-partitions",
        n,
        json!({ "degree": bound }),
        &rhs,
        &lhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_poly, ratio};

    fn p(s: &str) -> QPoly {
        parse_poly(s).unwrap()
    }

    fn xy_phi(n: usize) -> QPoly {
        (1..=n).fold(QPoly::one(), |a, i| {
            a * (QPoly::one() + p("x") * u(i)) * (QPoly::one() + p("y") * u(i))
        })
    }

    #[test]
    fn zeilberger_small() {
        let c = zeilid_check(1, &ratio(1, 1), &p("1 + 3*u1 + u1^2")).unwrap();
        assert!(c.pass);
        assert_eq!(c.got, "3");
        assert!(zeilid_check(2, &ratio(1, 1), &QPoly::one()).unwrap().pass);
        assert!(zeilid_check(3, &ratio(1, 1), &xy_phi(3)).unwrap().pass);
        assert!(zeilid_check(2, &ratio(2, 3), &p("u1 + u2 + u1*u2")).unwrap().pass);
        assert_eq!(zeilid_check(2, &ratio(1, 1), &p("u1")), Err(Error::NotSymmetric));
    }

    #[test]
    fn cube_root_tau() {
        assert_eq!(tau_at_cube_root(), ratio(1, 1));
    }

    #[test]
    fn homogeneous() {
        let mut rng = Sampler::new(3);
        for n in 1..=3 {
            let checks = homogeneous_limit_check(n, &xy_phi(n), 3, &mut rng).unwrap();
            assert!(checks.iter().all(|c| c.pass), "{checks:?}");
            assert!(checks.len() >= 3);
        }
    }

    #[test]
    fn even_partitions() {
        let c = even_partition_sum_check(1, 6).unwrap();
        assert!(c.pass);
        assert_eq!(c.got, p("1 + u1^2 + u1^4 + u1^6").to_string());
        assert!(even_partition_sum_check(2, 6).unwrap().pass);
        assert!(even_partition_sum_check(3, 8).unwrap().pass);
        assert_eq!(even_sequences(2, 3), vec![vec![0, 1], vec![0, 3]]);
    }
}
