//! Sparse multivariate Laurent series truncated to a box of exponents.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::poly::{MultiPoly, VarList};
use super::scalar::Ring;
use crate::error::{Error, Result};

/// Inclusive exponent window `[lo, hi]` for one variable.
pub type Window = (i32, i32);

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    vars: VarList,
    windows: Vec<Window>,
    terms: BTreeMap<Vec<i32>, T>,
}

impl<T: Ring> TruncatedSeries<T> {
    pub fn zero(vars: VarList, windows: Vec<Window>) -> Self {
        assert_eq!(vars.len(), windows.len());
        Self {
            vars,
            windows,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: VarList, windows: Vec<Window>) -> Self {
        let e = vec![0; vars.len()];
        Self::monomial(vars, windows, e, T::one())
    }

    /// `c · Π v^{e_v}`, or the zero series when the exponent lies outside the window.
    pub fn monomial(vars: VarList, windows: Vec<Window>, e: Vec<i32>, c: T) -> Self {
        let mut s = Self::zero(vars, windows);
        if s.inside(&e) && !c.is_zero() {
            s.terms.insert(e, c);
        }
        s
    }

    /// Truncation of a polynomial whose variables are all among `vars`.
    pub fn from_poly(p: &MultiPoly<T>, vars: VarList, windows: Vec<Window>) -> Result<Self> {
        let mut s = Self::zero(vars, windows);
        for (e, c) in p.aligned_terms(&s.vars)? {
            let e: Vec<i32> = e.into_iter().map(|k| k as i32).collect();
            if s.inside(&e) {
                s.terms.insert(e, c);
            }
        }
        Ok(s)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn windows(&self) -> &[Window] {
        &self.windows
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &T)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i32]) -> T {
        self.terms.get(e).cloned().unwrap_or_else(T::zero)
    }

    /// The constant term; for a series in no variables this is its value.
    pub fn constant(&self) -> T {
        self.coeff(&vec![0; self.vars.len()])
    }

    fn inside(&self, e: &[i32]) -> bool {
        e.iter().zip(&self.windows).all(|(&k, &(lo, hi))| lo <= k && k <= hi)
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if (Arc::ptr_eq(&self.vars, &o.vars) || self.vars == o.vars) && self.windows == o.windows {
            Ok(())
        } else {
            Err(Error::WindowMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            let s = match terms.get(e) {
                Some(x) => x.add_ref(c),
                None => c.clone(),
            };
            if s.is_zero() {
                terms.remove(e);
            } else {
                terms.insert(e.clone(), s);
            }
        }
        Ok(Self {
            vars: self.vars.clone(),
            windows: self.windows.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.clone(), x.mul_ref(c)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        Self {
            vars: self.vars.clone(),
            windows: self.windows.clone(),
            terms,
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let mut out: BTreeMap<Vec<i32>, T> = BTreeMap::new();
        let mut e = vec![0i32; self.vars.len()];
        for (ea, ca) in &self.terms {
            'pair: for (eb, cb) in &o.terms {
                for k in 0..e.len() {
                    let s = ea[k] + eb[k];
                    let (lo, hi) = self.windows[k];
                    if s < lo || s > hi {
                        continue 'pair;
                    }
                    e[k] = s;
                }
                let p = ca.mul_ref(cb);
                match out.get_mut(&e) {
                    Some(x) => *x = x.add_ref(&p),
                    None => {
                        out.insert(e.clone(), p);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(Self {
            vars: self.vars.clone(),
            windows: self.windows.clone(),
            terms: out,
        })
    }

    /// `numerator · Σ_k g^k` within the window.
    pub fn geometric_expand(
        numerator: &MultiPoly<T>,
        g: &MultiPoly<T>,
        vars: VarList,
        windows: Vec<Window>,
    ) -> Result<Self> {
        let g_terms = g.aligned_terms(&vars)?;
        if g_terms.keys().any(|e| e.iter().all(|&k| k == 0)) {
            return Err(Error::ConstantTermInGeometric);
        }
        let gs = Self::from_poly(g, vars.clone(), windows.clone())?;
        let mut term = Self::from_poly(numerator, vars, windows)?;
        let mut acc = term.clone();
        // every term of g raises some exponent, so the powers leave the window
        loop {
            term = term.mul(&gs)?;
            if term.is_zero() {
                return Ok(acc);
            }
            acc = acc.add(&term)?;
        }
    }

    /// Coefficient of `v^{-1}`, as a series in the remaining variables.
    pub fn residue_at_zero(&self, v: &str) -> Result<Self> {
        let k = self
            .vars
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::MissingVariable(v.to_string()))?;
        let (lo, hi) = self.windows[k];
        if lo > -1 || hi < -1 {
            return Err(Error::WindowExcludesResidue(v.to_string()));
        }
        let mut vars = self.vars.as_ref().clone();
        vars.remove(k);
        let mut windows = self.windows.clone();
        windows.remove(k);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[k] == -1)
            .map(|(e, c)| {
                let mut e = e.clone();
                e.remove(k);
                (e, c.clone())
            })
            .collect();
        Ok(Self {
            vars: Arc::new(vars),
            windows,
            terms,
        })
    }

    /// Multiplies by `v^{shift}` and moves the window of `v` to `window`.
    pub fn shift(&self, v: &str, shift: i32, window: Window) -> Result<Self> {
        let k = self
            .vars
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::MissingVariable(v.to_string()))?;
        let mut windows = self.windows.clone();
        windows[k] = window;
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let mut e = e.clone();
                e[k] += shift;
                (window.0 <= e[k] && e[k] <= window.1).then(|| (e, c.clone()))
            })
            .collect();
        Ok(Self {
            vars: self.vars.clone(),
            windows,
            terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use crate::algebra::poly::var_list;
    use crate::{QPoly, QSeries, Rational};

    use super::*;

    fn u() -> QPoly {
        QPoly::var("u")
    }

    #[test]
    fn product_truncates() {
        let vars = var_list(&["u"]);
        let w = vec![(0, 4)];
        let a = QSeries::from_poly(&(QPoly::one() + u()), vars.clone(), w.clone()).unwrap();
        let b = QSeries::from_poly(&(QPoly::one() - u()), vars.clone(), w.clone()).unwrap();
        let want = QSeries::from_poly(&(QPoly::one() - u() * u()), vars, w).unwrap();
        assert_eq!(a.mul(&b).unwrap(), want);
    }

    #[test]
    fn laurent_monomials() {
        let vars = var_list(&["u"]);
        let w = vec![(-2, 4)];
        let a = QSeries::monomial(vars.clone(), w.clone(), vec![-1], Rational::one());
        let b = QSeries::monomial(vars.clone(), w.clone(), vec![2], Rational::one());
        assert_eq!(a.mul(&b).unwrap().coeff(&[1]), Rational::one());
        let c = QSeries::one(vars, vec![(0, 4)]);
        assert_eq!(a.mul(&c), Err(Error::WindowMismatch));
    }

    #[test]
    fn geometric_series() {
        let vars = var_list(&["u"]);
        let s = QSeries::geometric_expand(&QPoly::one(), &u(), vars.clone(), vec![(0, 3)]).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.terms().all(|(_, c)| c.is_one()));
        assert_eq!(
            QSeries::geometric_expand(&QPoly::one(), &(u() + QPoly::one()), vars, vec![(0, 3)]),
            Err(Error::ConstantTermInGeometric)
        );
    }

    #[test]
    fn residues() {
        let vars = var_list(&["v"]);
        let w = vec![(-2, 2)];
        let f = QSeries::monomial(vars.clone(), w.clone(), vec![-1], Rational::one());
        assert_eq!(f.residue_at_zero("v").unwrap().constant(), Rational::one());
        let g = QSeries::from_poly(&(QPoly::one() + QPoly::var("v")), vars.clone(), w.clone())
            .unwrap()
            .shift("v", -2, (-2, 2))
            .unwrap();
        assert_eq!(g.residue_at_zero("v").unwrap().constant(), Rational::one());
        let h = QSeries::from_poly(&(QPoly::one() + QPoly::var("v")), vars, w).unwrap();
        assert!(h.residue_at_zero("v").unwrap().is_zero());
    }
}
