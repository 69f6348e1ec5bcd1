//! Bivariate counting polynomials `Σ c_{ij} x^i y^j` with `c_{ij} ≥ 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::{Map, Value};

use crate::algebra::scalar::{as_count, ratio, Ring};
use crate::error::{Error, Result};
use crate::QPoly;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenPoly {
    coeffs: BTreeMap<(u32, u32), u64>,
}

impl GenPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), u64)>) -> Self {
        let mut p = Self::new();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: u64) {
        if c > 0 {
            *self.coeffs.entry((i, j)).or_insert(0) += c;
        }
    }

    pub fn merge(mut self, other: &Self) -> Self {
        for (&(i, j), &c) in &other.coeffs {
            self.add_term(i, j, c);
        }
        self
    }

    pub fn coeff(&self, i: u32, j: u32) -> u64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    /// Sum of coefficients, i.e. the number of objects counted.
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn degree_x(&self) -> u32 {
        self.coeffs.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.coeffs.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        Self::from_terms(self.terms().map(|((i, j), c)| ((j, i), c)))
    }

    pub fn eval<R: Ring>(&self, x: &R, y: &R) -> R {
        let mut acc = R::zero();
        for (&(i, j), &c) in &self.coeffs {
            let c = R::from_i64(c as i64);
            acc = acc + c.mul_ref(&x.powu(i)).mul_ref(&y.powu(j));
        }
        acc
    }

    /// Row `i`, column `j` holds the coefficient of `x^i y^j`.
    pub fn matrix(&self, size: usize) -> Vec<Vec<u64>> {
        (0..size)
            .map(|i| (0..size).map(|j| self.coeff(i as u32, j as u32)).collect())
            .collect()
    }

    pub fn to_qpoly(&self, x: &str, y: &str) -> QPoly {
        let (vx, vy) = (QPoly::var(x), QPoly::var(y));
        let mut acc = QPoly::zero();
        for (&(i, j), &c) in &self.coeffs {
            acc = acc + vx.powu(i).mul_ref(&vy.powu(j)).scale(&ratio(c as i64, 1));
        }
        acc
    }

    /// Reads a polynomial in `x`, `y` whose coefficients must be counts.
    pub fn from_qpoly(p: &QPoly, x: &str, y: &str) -> Result<Self> {
        let ix = p.var_index(x);
        let iy = p.var_index(y);
        let mut out = Self::new();
        for (e, c) in p.terms() {
            for (k, &v) in e.iter().enumerate() {
                if v > 0 && Some(k) != ix && Some(k) != iy {
                    return Err(Error::NotACount(format!("{c}*{}^{v}", p.vars()[k])));
                }
            }
            let i = ix.map_or(0, |k| e[k]);
            let j = iy.map_or(0, |k| e[k]);
            let n = as_count(c).ok_or_else(|| Error::NotACount(c.to_string()))?;
            out.add_term(i, j, n);
        }
        Ok(out)
    }

    /// `{"(i,j)": c}` coefficient map.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (&(i, j), &c) in &self.coeffs {
            m.insert(format!("({i},{j})"), Value::from(c));
        }
        Value::Object(m)
    }
}

fn mono(name: &str, k: u32) -> Option<String> {
    match k {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{k}")),
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (&(i, j), &c) in self.coeffs.iter().rev() {
            let m: Vec<String> = [mono("x", i), mono("y", j)].into_iter().flatten().collect();
            parts.push(match (c, m.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => m.join("*"),
                _ => format!("{c}*{}", m.join("*")),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn roundtrip_and_display() {
        let p = GenPoly::from_terms([((1, 0), 1), ((0, 1), 2)]);
        assert_eq!(p.total(), 3);
        assert_eq!(p.to_string(), "x + 2*y");
        let q = p.to_qpoly("x", "y");
        assert_eq!(GenPoly::from_qpoly(&q, "x", "y").unwrap(), p);
        assert_eq!(
            p.eval(&Rational::from_i64(2), &Rational::from_i64(3)),
            Rational::from_i64(8)
        );
        assert_eq!(p.to_json()["(0,1)"], 2);
        assert!(GenPoly::from_qpoly(&q.scale(&ratio(1, 2)), "x", "y").is_err());
    }
}
