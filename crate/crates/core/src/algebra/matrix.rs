use super::scalar::{Domain, Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Ring> SquareMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    /// Laplace expansion along the first row. Exponential; kept as an oracle.
    pub fn det_cofactor(&self) -> T {
        fn rec<T: Ring>(m: &[Vec<T>], cols: &mut Vec<usize>, row: usize) -> T {
            if row == m.len() {
                return T::one();
            }
            let mut acc = T::zero();
            for k in 0..cols.len() {
                let c = cols.remove(k);
                if !m[row][c].is_zero() {
                    let minor = rec(m, cols, row + 1);
                    let term = m[row][c].mul_ref(&minor);
                    acc = if k % 2 == 0 { acc + term } else { acc - term };
                }
                cols.insert(k, c);
            }
            acc
        }
        let rows = self.rows();
        let mut cols: Vec<usize> = (0..self.n).collect();
        rec(&rows, &mut cols, 0)
    }
}

impl<T: Domain> SquareMatrix<T> {
    /// Fraction-free elimination; every division is exact.
    pub fn det_bareiss(&self) -> T {
        let n = self.n;
        if n == 0 {
            return T::one();
        }
        let mut m = self.rows();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(p) => {
                        m.swap(k, p);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                    m[i][j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    pub fn determinant(&self) -> T {
        self.det_bareiss()
    }
}

impl<T: Field> SquareMatrix<T> {
    /// Gaussian elimination with field division.
    pub fn det_gauss(&self) -> T {
        let n = self.n;
        let mut m = self.rows();
        let mut det = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return T::zero();
            };
            if p != k {
                m.swap(k, p);
                det = -det;
            }
            det = det.mul_ref(&m[k][k]);
            let inv = m[k][k].inv().expect("pivot is nonzero");
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let f = m[i][k].mul_ref(&inv);
                for j in k..n {
                    let v = m[i][j].sub_ref(&f.mul_ref(&m[k][j]));
                    m[i][j] = v;
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use crate::{ratio, QPoly, Rational};

    use super::*;

    fn int(rows: &[&[i64]]) -> SquareMatrix<BigInt> {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(int(&[&[1, 2], &[3, 4]]).determinant(), BigInt::from(-2));
        assert_eq!(SquareMatrix::<BigInt>::identity(5).determinant(), BigInt::from(1));
        let v = SquareMatrix::from_fn(3, |i, j| ratio((i as i64 + 1).pow(j as u32), 1));
        assert_eq!(v.det_gauss(), ratio(2, 1));
        assert_eq!(v.det_bareiss(), ratio(2, 1));
        assert_eq!(int(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(
            SquareMatrix::<Rational>::from_rows(vec![vec![ratio(1, 1)], vec![]]),
            Err(Error::NotSquare)
        );
    }

    #[test]
    fn polynomial_vandermonde() {
        let names = ["a", "b", "c"];
        let m = SquareMatrix::from_fn(3, |i, j| QPoly::var(names[i]).powu(j as u32));
        let x = |s: &str| QPoly::var(s);
        let want = (x("b") - x("a")) * (x("c") - x("a")) * (x("c") - x("b"));
        assert_eq!(m.det_bareiss(), want);
        assert_eq!(m.det_cofactor(), want);
    }
}
