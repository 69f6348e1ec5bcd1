//! Six-vertex configurations with domain wall boundary conditions.
//!
//! Horizontal edges carry the row partial sum to their left (0: arrow points
//! right, 1: left); vertical edges carry the column partial sum above them
//! (0: arrow up, 1: arrow down). With this reading every DWBC configuration
//! is an ASM and vice versa.

use num_traits::One;
use serde::Serialize;

use super::{enumerate_asms, Asm, Convention};
use crate::algebra::scalar::{Field, Ring};
use crate::binom2;
use crate::error::{Error, Result};
use crate::{Cyclo, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VertexType {
    /// all arrows right/up
    A1,
    /// all arrows left/down
    A2,
    /// horizontal left, vertical up
    B1,
    /// horizontal right, vertical down
    B2,
    /// ASM entry +1
    C1,
    /// ASM entry -1
    C2,
}

impl VertexType {
    pub fn is_a(self) -> bool {
        matches!(self, Self::A1 | Self::A2)
    }
    pub fn is_b(self) -> bool {
        matches!(self, Self::B1 | Self::B2)
    }
    pub fn is_c(self) -> bool {
        matches!(self, Self::C1 | Self::C2)
    }
}

/// Arrow orientation on every edge of the `n×n` grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexGrid {
    n: usize,
    /// `left[i][j]`: edge left of cell `(i, j)`, `j = 0..=n`; true when the arrow points left.
    left: Vec<Vec<bool>>,
    /// `down[i][j]`: edge above cell `(i, j)`, `i = 0..=n`; true when the arrow points down.
    down: Vec<Vec<bool>>,
}

impl VertexGrid {
    /// Validates the ice rule and the domain wall boundary.
    pub fn from_arrows(n: usize, left: Vec<Vec<bool>>, down: Vec<Vec<bool>>) -> Result<Self> {
        if left.len() != n || left.iter().any(|r| r.len() != n + 1) {
            return Err(Error::InvalidVertexGrid(
                "horizontal edge array has the wrong shape".into(),
            ));
        }
        if down.len() != n + 1 || down.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidVertexGrid(
                "vertical edge array has the wrong shape".into(),
            ));
        }
        for i in 0..n {
            if left[i][0] || !left[i][n] {
                return Err(Error::InvalidVertexGrid(format!(
                    "row {} boundary arrows do not point in",
                    i + 1
                )));
            }
        }
        for j in 0..n {
            if down[0][j] || !down[n][j] {
                return Err(Error::InvalidVertexGrid(format!(
                    "column {} boundary arrows do not point out",
                    j + 1
                )));
            }
        }
        let g = Self { n, left, down };
        for i in 0..n {
            for j in 0..n {
                let incoming = [!g.left[i][j], g.left[i][j + 1], g.down[i][j], !g.down[i + 1][j]]
                    .iter()
                    .filter(|&&b| b)
                    .count();
                if incoming != 2 {
                    return Err(Error::InvalidVertexGrid(format!(
                        "ice rule fails at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex(&self, i: usize, j: usize) -> VertexType {
        let (l, r) = (self.left[i][j], self.left[i][j + 1]);
        let (t, b) = (self.down[i][j], self.down[i + 1][j]);
        match (l, r, t, b) {
            (false, true, false, true) => VertexType::C1,
            (true, false, true, false) => VertexType::C2,
            (false, false, false, false) => VertexType::A1,
            (true, true, true, true) => VertexType::A2,
            (true, true, false, false) => VertexType::B1,
            (false, false, true, true) => VertexType::B2,
            _ => unreachable!("ice rule checked on construction"),
        }
    }

    pub fn types(&self) -> Vec<Vec<VertexType>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.vertex(i, j)).collect())
            .collect()
    }

    pub fn to_asm(&self) -> Asm {
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.left[i][j + 1] as i8 - self.left[i][j] as i8)
                    .collect()
            })
            .collect();
        Asm::new(rows).expect("DWBC configurations are ASMs")
    }
}

pub fn asm_to_six_vertex(a: &Asm) -> VertexGrid {
    let n = a.n();
    let mut left = vec![vec![false; n + 1]; n];
    let mut down = vec![vec![false; n]; n + 1];
    for i in 0..n {
        let mut s = 0;
        for j in 0..n {
            s += a.get(i, j);
            left[i][j + 1] = s == 1;
        }
    }
    for j in 0..n {
        let mut s = 0;
        for i in 0..n {
            s += a.get(i, j);
            down[i + 1][j] = s == 1;
        }
    }
    VertexGrid::from_arrows(n, left, down).expect("ASMs give DWBC configurations")
}

/// Boltzmann weight of one vertex with row parameter `s_row² = z`, column parameter `s_col² = w`, `r² = q`.
///
/// `a = q^{-1/2} w − q^{1/2} z`, `b = q^{-1/2} z − q^{1/2} w`, `c = (q^{-1} − q) s_row s_col`.
pub fn vertex_weight<F: Field>(t: VertexType, s_row: &F, s_col: &F, r: &F) -> Result<F> {
    let r_inv = r.inv().ok_or(Error::DivisionByZero("q^{1/2}"))?;
    let q = r.mul_ref(r);
    let z = s_row.mul_ref(s_row);
    let w = s_col.mul_ref(s_col);
    Ok(if t.is_a() {
        r_inv.mul_ref(&w) - r.mul_ref(&z)
    } else if t.is_b() {
        r_inv.mul_ref(&z) - r.mul_ref(&w)
    } else {
        let qi = q.inv().ok_or(Error::DivisionByZero("q"))?;
        (qi - q).mul_ref(s_row).mul_ref(s_col)
    })
}

/// `Z̃_n`: sum over DWBC configurations of the product of vertex weights.
/// `s[0..n]` are row parameters, `s[n..2n]` column parameters.
pub fn weighted_partition_sum<F: Field>(n: usize, s: &[F], r: &F) -> Result<F> {
    if s.len() != 2 * n {
        return Err(Error::WrongLength {
            expected: 2 * n,
            got: s.len(),
        });
    }
    let mut total = F::zero();
    for a in enumerate_asms(n) {
        let g = asm_to_six_vertex(&a);
        let mut w = F::one();
        for i in 0..n {
            for j in 0..n {
                w = w.mul_ref(&vertex_weight(g.vertex(i, j), &s[i], &s[n + j], r)?);
            }
        }
        total = total + w;
    }
    Ok(total)
}

/// `(−1)^{C(n,2)} (q^{-1} − q)^n`, the part of the normalization not involving the spectral parameters.
fn sign_and_c_power<F: Field>(n: usize, q: &F) -> Result<F> {
    let qi = q.inv().ok_or(Error::DivisionByZero("q"))?;
    let d = (qi - q.clone()).powu(n as u32);
    Ok(if binom2(n) % 2 == 1 { -d } else { d })
}

/// `Z_n = Z̃_n / ((−1)^{C(n,2)} (q^{-1} − q)^n Π s_i)`.
pub fn normalize_z<F: Field>(ztilde: &F, n: usize, s: &[F], r: &F) -> Result<F> {
    let q = r.mul_ref(r);
    let mut den = sign_and_c_power(n, &q)?;
    for x in s {
        den = den.mul_ref(x);
    }
    ztilde.checked_div(&den).ok_or(Error::DivisionByZero("normalization"))
}

/// `Z_n` from the squared parameters alone.
///
/// Each line carries an odd number of c vertices, so `Π s_i^{#c}` over a line
/// is `s_i · z_i^{(#c−1)/2}` and the `s_i` cancel against the normalization.
/// `r` still enters through `q^{±1/2}` in the a and b weights.
pub fn partition_sum_z<F: Field>(n: usize, z: &[F], r: &F) -> Result<F> {
    if z.len() != 2 * n {
        return Err(Error::WrongLength {
            expected: 2 * n,
            got: z.len(),
        });
    }
    let r_inv = r.inv().ok_or(Error::DivisionByZero("q^{1/2}"))?;
    let q = r.mul_ref(r);
    let qi = q.inv().ok_or(Error::DivisionByZero("q"))?;
    let c = qi - q.clone();
    let mut total = F::zero();
    let mut count = vec![0u32; 2 * n];
    for a in enumerate_asms(n) {
        let g = asm_to_six_vertex(&a);
        let mut w = F::one();
        count.iter_mut().for_each(|k| *k = 0);
        for i in 0..n {
            for j in 0..n {
                let (zr, zc) = (&z[i], &z[n + j]);
                let t = g.vertex(i, j);
                let f = if t.is_a() {
                    r_inv.mul_ref(zc) - r.mul_ref(zr)
                } else if t.is_b() {
                    r_inv.mul_ref(zr) - r.mul_ref(zc)
                } else {
                    count[i] += 1;
                    count[n + j] += 1;
                    c.clone()
                };
                w = w.mul_ref(&f);
            }
        }
        for (k, &m) in count.iter().enumerate() {
            debug_assert!(m % 2 == 1);
            w = w.mul_ref(&z[k].powu((m - 1) / 2));
        }
        total = total + w;
    }
    total
        .checked_div(&sign_and_c_power(n, &q)?)
        .ok_or(Error::DivisionByZero("normalization"))
}

/// `A_n(t,u)` or `Ã_n(t,u)` through the partition function at `q = e^{2πi/3}`:
/// `(q²(q+t)(q+u))^{n−1} / 3^{C(n,2)} · Z_n` with `z_1 = (1+qt)/(q+t)`, `z_{2n} = (1+qu)/(q+u)`,
/// the tilde variant using `z_{2n} = (q+u)/(1+qu)` and `1+qu` in the prefactor.
pub fn refined_from_z(n: usize, t: &Rational, u: &Rational, conv: Convention) -> Result<Cyclo> {
    if n == 0 {
        return Ok(Cyclo::one());
    }
    let q = Cyclo::q();
    let one = Cyclo::one();
    let t = Cyclo::from_base(t.clone());
    let u = Cyclo::from_base(u.clone());
    let q_t = q.add_ref(&t);
    let q_u = q.add_ref(&u);
    let one_qt = one.add_ref(&q.mul_ref(&t));
    let one_qu = one.add_ref(&q.mul_ref(&u));
    let mut z = vec![Cyclo::one(); 2 * n];
    z[0] = one_qt.checked_div(&q_t).ok_or(Error::DivisionByZero("q + t"))?;
    let u_factor = match conv {
        Convention::Reversed => {
            z[2 * n - 1] = one_qu.checked_div(&q_u).ok_or(Error::DivisionByZero("q + u"))?;
            q_u
        }
        Convention::Tilde => {
            z[2 * n - 1] = q_u.checked_div(&one_qu).ok_or(Error::DivisionByZero("1 + qu"))?;
            one_qu
        }
    };
    let zn = partition_sum_z(n, &z, &Cyclo::sqrt_q())?;
    let pref = q.powu(2).mul_ref(&q_t).mul_ref(&u_factor).powu(n as u32 - 1);
    let three = Cyclo::from_i64(3).powu(binom2(n) as u32);
    Ok(pref.mul_ref(&zn).checked_div(&three).expect("3 is invertible"))
}

/// Both sides of the Korepin recursion at `z_{n+1} = q^{-1} z_1`, with `s_{n+1}` overwritten by `s_1/r`:
/// `Z_n = q^{1−n} Π_{j=2..n}(z_1 − q² z_j) Π_{j=n+2..2n}(z_1 − q^{-1} z_j) Z_{n−1}`,
/// the smaller sum taken over rows `2..n` and columns `2..n`.
pub fn korepin_sides<F: Field>(n: usize, s: &[F], r: &F) -> Result<(F, F)> {
    if n == 0 || s.len() != 2 * n {
        return Err(Error::WrongLength {
            expected: 2 * n.max(1),
            got: s.len(),
        });
    }
    let mut s = s.to_vec();
    s[n] = s[0].checked_div(r).ok_or(Error::DivisionByZero("q^{1/2}"))?;
    let q = r.mul_ref(r);
    let qi = q.inv().ok_or(Error::DivisionByZero("q"))?;
    let z: Vec<F> = s.iter().map(|x| x.mul_ref(x)).collect();
    let lhs = normalize_z(&weighted_partition_sum(n, &s, r)?, n, &s, r)?;
    let mut rhs = qi.powu(n as u32 - 1);
    let q2 = q.mul_ref(&q);
    for zj in &z[1..n] {
        rhs = rhs.mul_ref(&z[0].sub_ref(&q2.mul_ref(zj)));
    }
    for zj in &z[n + 1..] {
        rhs = rhs.mul_ref(&z[0].sub_ref(&qi.mul_ref(zj)));
    }
    let rest: Vec<F> = s[1..n].iter().chain(&s[n + 1..]).cloned().collect();
    let smaller = normalize_z(&weighted_partition_sum(n - 1, &rest, r)?, n - 1, &rest, r)?;
    Ok((lhs, rhs.mul_ref(&smaller)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn single_vertex() {
        let a = enumerate_asms(1).next().unwrap();
        let g = asm_to_six_vertex(&a);
        assert_eq!(g.vertex(0, 0), VertexType::C1);
        let r = ratio(2, 1);
        let s = [ratio(3, 1), ratio(5, 1)];
        let q = ratio(4, 1);
        let want = (ratio(1, 4) - q) * ratio(15, 1);
        assert_eq!(weighted_partition_sum(1, &s, &r).unwrap(), want);
        assert_eq!(normalize_z(&want, 1, &s, &r).unwrap(), ratio(1, 1));
    }

    #[test]
    fn roundtrip() {
        for n in 1..=4 {
            for a in enumerate_asms(n) {
                let g = asm_to_six_vertex(&a);
                assert_eq!(g.to_asm(), a);
                let c = g.types().iter().flatten().filter(|t| t.is_c()).count();
                let nonzero = a.rows().iter().flatten().filter(|&&v| v != 0).count();
                assert_eq!(c, nonzero);
            }
        }
    }

    #[test]
    fn rejects_bad_boundary() {
        let left = vec![vec![true, true]];
        let down = vec![vec![false], vec![true]];
        assert!(VertexGrid::from_arrows(1, left, down).is_err());
    }

    #[test]
    fn all_ones_at_cube_root() {
        let r = Cyclo::sqrt_q();
        for (n, want) in [(1, 1), (2, 6), (3, 189)] {
            let s = vec![Cyclo::one(); 2 * n];
            let zt = weighted_partition_sum(n, &s, &r).unwrap();
            assert_eq!(normalize_z(&zt, n, &s, &r).unwrap(), Cyclo::from_i64(want));
            assert_eq!(partition_sum_z(n, &s, &r).unwrap(), Cyclo::from_i64(want));
        }
    }

    #[test]
    fn two_by_two_by_hand() {
        // identity has two b vertices, the other ASM two a vertices; a = b when all z = 1
        let r = ratio(3, 2);
        let s = [ratio(1, 1), ratio(1, 1), ratio(1, 1), ratio(1, 1)];
        let q = ratio(9, 4);
        let a = ratio(2, 3) - r.clone();
        let b = ratio(2, 3) - r.clone();
        let c = ratio(4, 9) - q;
        let want = ratio(2, 1) * a * b * c.clone() * c;
        assert_eq!(weighted_partition_sum(2, &s, &r).unwrap(), want);
    }
}
