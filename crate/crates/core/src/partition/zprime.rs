//! `Z'_n` as a finite sum of residues at `w_l = z_{k_l}`.
//!
//! Indices are 0-based here: `k_l ≤ 2l` for `l = 0..n`, pairwise distinct.

use super::check_distinct;
use crate::algebra::scalar::{Field, Ring};
use crate::error::{Error, Result};
use crate::{binom2, Cyclo};

fn sequences(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let l = k.len();
        if l == n {
            out.push(k.clone());
            return;
        }
        for v in 0..=2 * l {
            if !k.contains(&v) {
                k.push(v);
                rec(n, k, out);
                k.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut out);
    out
}

fn sign_of(seq: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                odd = !odd;
            }
        }
    }
    odd
}

fn signed<F: Ring>(v: F, negative: bool) -> F {
    if negative {
        -v
    } else {
        v
    }
}

/// The closed residue-sum form at a given `q`.
pub fn zprime_residue_sum_q<F: Field>(n: usize, z: &[F], q: &F) -> Result<F> {
    let m = 2 * n;
    if z.len() != m {
        return Err(Error::WrongLength {
            expected: m,
            got: z.len(),
        });
    }
    check_distinct(z)?;
    let qi = q.inv().ok_or(Error::DivisionByZero("q"))?;
    let h = |a: &F, b: &F| q.mul_ref(a).sub_ref(&qi.mul_ref(b));
    let mut total = F::zero();
    for k in sequences(n) {
        let mut pos = vec![None; m];
        for (l, &v) in k.iter().enumerate() {
            pos[v] = Some(l);
        }
        let mut t = F::one();
        for l in 0..n {
            for mm in l + 1..n {
                t = t.mul_ref(&h(&z[k[l]], &z[k[mm]]));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let keep = match pos[i] {
                    None => true,
                    Some(l) => j < 2 * l,
                };
                if keep {
                    t = t.mul_ref(&h(&z[i], &z[j]));
                }
            }
        }
        for (l, &kl) in k.iter().enumerate() {
            if kl != 2 * l {
                t = t.mul_ref(&h(&z[2 * l], &z[kl]));
            }
        }
        let mut den = F::one();
        for (l, &kl) in k.iter().enumerate() {
            for i in 0..=2 * l {
                if pos[i].is_none() || i > kl {
                    den = den.mul_ref(&z[kl].sub_ref(&z[i]));
                }
            }
        }
        let term = t
            .checked_div(&den)
            .ok_or(Error::DivisionByZero("residue denominator"))?;
        total = total + signed(term, sign_of(&k));
    }
    Ok(signed(total, binom2(n) % 2 == 1))
}

/// `zprime_residue_sum_q` at `q = e^{2πi/3}`.
pub fn zprime_residue_sum(n: usize, z: &[Cyclo]) -> Result<Cyclo> {
    zprime_residue_sum_q(n, z, &Cyclo::q())
}

/// The same sum written directly as the residues of the integrand at `w_l = z_{k_l}`,
/// before any cancellation; used as an independent transcription.
pub fn zprime_pole_sum<F: Field>(n: usize, z: &[F], q: &F) -> Result<F> {
    let m = 2 * n;
    if z.len() != m {
        return Err(Error::WrongLength {
            expected: m,
            got: z.len(),
        });
    }
    check_distinct(z)?;
    let qi = q.inv().ok_or(Error::DivisionByZero("q"))?;
    let h = |a: &F, b: &F| q.mul_ref(a).sub_ref(&qi.mul_ref(b));
    let mut pre = F::one();
    for i in 0..m {
        for j in i + 1..m {
            pre = pre.mul_ref(&h(&z[i], &z[j]));
        }
    }
    let mut total = F::zero();
    for k in sequences(n) {
        let w: Vec<&F> = k.iter().map(|&v| &z[v]).collect();
        let mut num = F::one();
        let mut den = F::one();
        for l in 0..n {
            num = num.mul_ref(&h(&z[2 * l], w[l]));
            for (i, zi) in z.iter().enumerate().take(2 * l + 1) {
                if i != k[l] {
                    den = den.mul_ref(&w[l].sub_ref(zi));
                }
            }
            for zi in &z[2 * l..] {
                den = den.mul_ref(&h(w[l], zi));
            }
            for mm in l + 1..n {
                num = num.mul_ref(&w[mm].sub_ref(w[l])).mul_ref(&h(w[l], w[mm]));
            }
        }
        total = total + num.checked_div(&den).ok_or(Error::DivisionByZero("pole denominator"))?;
    }
    Ok(signed(pre.mul_ref(&total), binom2(n) % 2 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::schur_staircase;
    use crate::sample::Sampler;
    use num_traits::One;

    #[test]
    fn sequence_counts() {
        // 1, 1·2, 1·2·3: each new index has 2l+1 choices minus the l already taken
        assert_eq!(sequences(1).len(), 1);
        assert_eq!(sequences(2).len(), 2);
        assert_eq!(sequences(3).len(), 6);
    }

    #[test]
    fn base_case() {
        let z = [Cyclo::from_i64(2), Cyclo::from_i64(5)];
        assert_eq!(zprime_residue_sum(1, &z).unwrap(), Cyclo::one());
        let same = [Cyclo::one(), Cyclo::one()];
        assert_eq!(zprime_residue_sum(1, &same), Err(Error::CoincidentPoints(0, 1)));
    }

    #[test]
    fn both_forms_match_schur() {
        let mut rng = Sampler::new(9);
        for n in 1..=3 {
            for _ in 0..3 {
                let z: Vec<Cyclo> = rng.distinct(2 * n).into_iter().map(Cyclo::from_base).collect();
                let s = schur_staircase(n, &z).unwrap();
                assert_eq!(zprime_residue_sum(n, &z).unwrap(), s);
                assert_eq!(zprime_pole_sum(n, &z, &Cyclo::q()).unwrap(), s);
            }
        }
    }
}
