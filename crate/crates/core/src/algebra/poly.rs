//! Sparse multivariate polynomials over an ordered, named variable list.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::scalar::{Domain, Field, Ring};
use crate::error::{Error, Result};

pub type VarList = Arc<Vec<String>>;

/// `Σ c_e · Π x_k^{e_k}`; exponent vectors are aligned with `vars`.
///
/// Two polynomials with different variable lists are aligned on the fly
/// (union of the lists, left operand first), so equality is semantic.
#[derive(Clone, Debug)]
pub struct MultiPoly<T> {
    vars: VarList,
    terms: BTreeMap<Vec<u32>, T>,
}

type Terms<T> = BTreeMap<Vec<u32>, T>;

pub fn var_list(names: &[&str]) -> VarList {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

fn union_vars(a: &VarList, b: &VarList) -> VarList {
    if Arc::ptr_eq(a, b) || a == b {
        return a.clone();
    }
    if b.iter().all(|v| a.contains(v)) {
        return a.clone();
    }
    if a.iter().all(|v| b.contains(v)) && a.iter().zip(b.iter()).all(|(x, y)| x == y) {
        return b.clone();
    }
    let mut out = a.as_ref().clone();
    for v in b.iter() {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    Arc::new(out)
}

impl<T: Ring> MultiPoly<T> {
    pub fn constant(c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self {
            vars: Arc::new(Vec::new()),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        Self::from_terms(var_list(&[name]), [(vec![1], T::one())])
    }

    /// Builds from `(exponents, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(vars: VarList, terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Self {
        let mut map: BTreeMap<Vec<u32>, T> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            accumulate(&mut map, e, c);
        }
        map.retain(|_, c| !c.is_zero());
        Self { vars, terms: map }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_list(&self) -> &VarList {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &T)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> T {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&k| k == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(T::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs.
    pub fn coeff(&self, mono: &[(&str, u32)]) -> T {
        let mut e = vec![0u32; self.vars.len()];
        for &(name, k) in mono {
            match self.var_index(name) {
                Some(i) => e[i] = k,
                None if k == 0 => {}
                None => return T::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Re-expresses the terms over `target`, which must contain every variable in use.
    pub fn aligned_terms(&self, target: &VarList) -> Result<BTreeMap<Vec<u32>, T>> {
        if Arc::ptr_eq(&self.vars, target) || self.vars == *target {
            return Ok(self.terms.clone());
        }
        let mut index = Vec::with_capacity(self.vars.len());
        for v in self.vars.iter() {
            index.push(target.iter().position(|t| t == v));
        }
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; target.len()];
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match index[k] {
                    Some(i) => ne[i] = x,
                    None => return Err(Error::MissingVariable(self.vars[k].clone())),
                }
            }
            out.insert(ne, c.clone());
        }
        Ok(out)
    }

    pub fn with_vars(&self, target: &VarList) -> Result<Self> {
        Ok(Self {
            vars: target.clone(),
            terms: self.aligned_terms(target)?,
        })
    }

    fn aligned_pair(&self, other: &Self) -> (VarList, Terms<T>, Terms<T>) {
        let vars = union_vars(&self.vars, &other.vars);
        let a = self.aligned_terms(&vars).expect("union contains all variables");
        let b = other.aligned_terms(&vars).expect("union contains all variables");
        (vars, a, b)
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
            terms,
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&T) -> S) -> MultiPoly<S> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn eval(&self, point: &[(&str, T)]) -> Result<T> {
        self.eval_with(point, |c| c.clone())
    }

    /// Horner evaluation with coefficients embedded into `S` by `embed`.
    pub fn eval_with<S: Ring>(&self, point: &[(&str, S)], embed: impl Fn(&T) -> S) -> Result<S> {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in self.vars.iter() {
            match point.iter().find(|(name, _)| name == v) {
                Some((_, x)) => values.push(x.clone()),
                None => return Err(Error::MissingVariable(v.clone())),
            }
        }
        let terms: Vec<(&[u32], S)> = self.terms.iter().map(|(e, c)| (e.as_slice(), embed(c))).collect();
        Ok(horner(&terms, 0, &values))
    }

    /// Replaces `name` by the polynomial `value`.
    pub fn substitute(&self, name: &str, value: &Self) -> Self {
        let Some(i) = self.var_index(name) else {
            return self.clone();
        };
        let mut acc = Self::zero();
        let mut powers: Vec<Self> = vec![Self::one()];
        for (e, c) in &self.terms {
            while powers.len() <= e[i] as usize {
                let next = powers.last().unwrap().mul_ref(value);
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let mono = Self {
                vars: self.vars.clone(),
                terms: BTreeMap::from([(rest, c.clone())]),
            };
            acc = acc + mono.mul_ref(&powers[e[i] as usize]);
        }
        acc
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: &str, b: &str) -> Self {
        let ia = self.var_index(a);
        let ib = self.var_index(b);
        let vars = match (ia, ib) {
            (Some(_), Some(_)) => self.vars.clone(),
            _ => union_vars(&self.vars, &var_list(&[a, b])),
        };
        let terms = self.aligned_terms(&vars).expect("superset");
        let ia = vars.iter().position(|v| v == a).unwrap();
        let ib = vars.iter().position(|v| v == b).unwrap();
        let terms = terms
            .into_iter()
            .map(|(mut e, c)| {
                e.swap(ia, ib);
                (e, c)
            })
            .collect();
        Self { vars, terms }
    }

    /// Invariance under all permutations of `names` (adjacent transpositions suffice).
    pub fn is_symmetric_in(&self, names: &[&str]) -> bool {
        names.windows(2).all(|w| self.swap_vars(w[0], w[1]) == *self)
    }
}

fn accumulate<K: Ord, T: Ring>(map: &mut BTreeMap<K, T>, k: K, c: T) {
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add_ref(&c);
            *o.get_mut() = s;
        }
    }
}

// terms are sorted lexicographically, so each group sharing e[k] is contiguous
fn horner<S: Ring>(terms: &[(&[u32], S)], k: usize, values: &[S]) -> S {
    if terms.is_empty() {
        return S::zero();
    }
    if k == values.len() {
        return terms.iter().fold(S::zero(), |a, (_, c)| a.add_ref(c));
    }
    let mut groups: Vec<(u32, S)> = Vec::new();
    let mut start = 0;
    while start < terms.len() {
        let e = terms[start].0[k];
        let mut end = start;
        while end < terms.len() && terms[end].0[k] == e {
            end += 1;
        }
        groups.push((e, horner(&terms[start..end], k + 1, values)));
        start = end;
    }
    let x = &values[k];
    let mut acc = S::zero();
    let mut prev = groups.last().unwrap().0;
    for (e, v) in groups.into_iter().rev() {
        acc = acc.mul_ref(&x.powu(prev - e)).add_ref(&v);
        prev = e;
    }
    acc.mul_ref(&x.powu(prev))
}

impl<T: Field> MultiPoly<T> {
    /// Exact multivariate division (lex order); `None` when `d` does not divide `self`.
    pub fn div_exact_poly(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (vars, mut rem, dt) = self.aligned_pair(d);
        let (lead_e, lead_c) = dt.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let lead_inv = lead_c.inv()?;
        let mut quot: BTreeMap<Vec<u32>, T> = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = rc.mul_ref(&lead_inv);
            for (de, dc) in &dt {
                let e: Vec<u32> = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                accumulate(&mut rem, e, -dc.mul_ref(&qc));
            }
            rem.retain(|_, c| !c.is_zero());
            quot.insert(qe, qc);
        }
        Some(Self { vars, terms: quot })
    }
}

impl<T: Ring> PartialEq for MultiPoly<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (_, a, b) = self.aligned_pair(other);
        a == b
    }
}

impl<T: Ring> Add for MultiPoly<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl<T: Ring> Sub for MultiPoly<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}

impl<T: Ring> Mul for MultiPoly<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<T: Ring> Neg for MultiPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let terms = self.terms.into_iter().map(|(e, c)| (e, -c)).collect();
        Self { vars: self.vars, terms }
    }
}

impl<T: Ring> Zero for MultiPoly<T> {
    fn zero() -> Self {
        Self {
            vars: Arc::new(Vec::new()),
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for MultiPoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Ring for MultiPoly<T> {
    fn from_i64(v: i64) -> Self {
        Self::constant(T::from_i64(v))
    }

    fn add_ref(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let (vars, mut a, b) = self.aligned_pair(o);
        for (e, c) in b {
            accumulate(&mut a, e, c);
        }
        a.retain(|_, c| !c.is_zero());
        Self { vars, terms: a }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&-o.clone())
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let (vars, a, b) = self.aligned_pair(o);
        let mut out: BTreeMap<Vec<u32>, T> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                accumulate(&mut out, e, ca.mul_ref(cb));
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self { vars, terms: out }
    }
}

impl<T: Field> Domain for MultiPoly<T> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.div_exact_poly(d)
    }
}

fn write_mono(f: &mut fmt::Formatter<'_>, vars: &[String], e: &[u32]) -> fmt::Result {
    let mut first = true;
    for (v, &k) in vars.iter().zip(e) {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{k}")?;
        }
    }
    Ok(())
}

impl<T: Ring> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let neg_one = -T::one();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let is_const = e.iter().all(|&x| x == 0);
            let mut text = c.to_string();
            if text.contains(' ') {
                text = format!("({text})");
            }
            let negative = text.starts_with('-');
            let body = text.trim_start_matches('-').to_string();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if is_const {
                write!(f, "{body}")?;
            } else {
                if *c != T::one() && *c != neg_one {
                    write!(f, "{body}*")?;
                }
                write_mono(f, &self.vars, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::{ratio, Cyclo, QPoly, Rational};

    use super::*;

    fn x() -> QPoly {
        QPoly::var("x")
    }
    fn y() -> QPoly {
        QPoly::var("y")
    }

    #[test]
    fn evaluation() {
        let p = x() + y();
        let one = Rational::one();
        assert_eq!(p.eval(&[("x", one.clone()), ("y", one)]).unwrap(), ratio(2, 1));
        let p = x() * x() * y();
        assert_eq!(p.eval(&[("x", ratio(2, 1)), ("y", ratio(3, 1))]).unwrap(), ratio(12, 1));
        let q = QPoly::var("q");
        let m = q.clone() * q.clone() + q + QPoly::one();
        let v = m
            .eval_with(&[("q", Cyclo::q())], |c| Cyclo::from_base(c.clone()))
            .unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn missing_variable() {
        let p = x() + y();
        assert_eq!(
            p.eval(&[("x", Rational::one())]),
            Err(Error::MissingVariable("y".into()))
        );
    }

    #[test]
    fn alignment_and_equality() {
        let a = x() + y();
        let b = y() + x();
        assert_eq!(a, b);
        assert_eq!(a.clone() - b, QPoly::zero());
        assert_eq!((x() + QPoly::one()).coeff(&[("x", 1)]), Rational::one());
        assert_eq!((x() * y()).degree_in("y"), 1);
    }

    #[test]
    fn exact_division() {
        let a = x() + y();
        let b = x() - y() + QPoly::from_i64(3);
        let p = a.clone() * b.clone();
        assert_eq!(p.div_exact(&a), Some(b));
        assert_eq!(p.div_exact(&(x() + QPoly::from_i64(7))), None);
    }

    #[test]
    fn substitution_and_symmetry() {
        let p = x() * x() + y();
        let s = p.substitute("x", &(y() + QPoly::one()));
        assert_eq!(s, y() * y() + y() * QPoly::from_i64(3) + QPoly::one());
        assert!((x() * y() + x() + y()).is_symmetric_in(&["x", "y"]));
        assert!(!(x() * x() + y()).is_symmetric_in(&["x", "y"]));
    }

    #[test]
    fn display() {
        let p = x() * x() * QPoly::from_i64(3) - y() + QPoly::one();
        assert_eq!(p.to_string(), "3*x^2 - y + 1");
    }
}
