//! Contour integrals around zero as iterated coefficient extraction.
//!
//! An integrand is `Π_l u_l^{-d_l}` times a list of factors, each either a
//! polynomial or a declared geometric factor `1/(1 − g)` with `g` vanishing at
//! the origin. Every factor is a power series in the `u_l`, so only the
//! coefficient of `Π u_l^{d_l − 1}` in their product matters.

pub mod appendix_d;
pub mod identities;
pub mod integrals;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::poly::{var_list, MultiPoly, VarList};
use crate::algebra::scalar::Ring;
use crate::algebra::series::{TruncatedSeries, Window};
use crate::error::{Error, Result};
use crate::QPoly;

pub use appendix_d::{bn_brute, bn_closed, cauchy_sides};
pub use identities::{even_partition_sum_check, homogeneous_limit_check, zeilid_check};
pub use integrals::{integral_a, integral_a_expr, integral_i, integral_i_expr, integral_u, integral_u_expr, UForm};

#[derive(Clone, Debug)]
pub enum Factor<C> {
    Poly(MultiPoly<C>),
    /// `1/(1 − g)`, expanded as `Σ g^k`.
    Geometric(MultiPoly<C>),
}

/// Numerator windows per variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WindowPolicy {
    /// `[0, d_l − 1]`: exactly the coefficients that can reach the residue.
    #[default]
    Tight,
    /// `[0, D + d_l]`, i.e. Laurent exponents up to `D`.
    Degree(i32),
}

#[derive(Clone, Debug)]
pub struct IntegrandSpec<C> {
    vars: Vec<String>,
    powers: Vec<u32>,
    factors: Vec<Factor<C>>,
}

impl<C: Ring> IntegrandSpec<C> {
    /// `vars[l]` carries the denominator `vars[l]^{powers[l]}`.
    pub fn new(vars: Vec<String>, powers: Vec<u32>) -> Result<Self> {
        if vars.len() != powers.len() {
            return Err(Error::WrongLength {
                expected: vars.len(),
                got: powers.len(),
            });
        }
        Ok(Self {
            vars,
            powers,
            factors: Vec::new(),
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn factors(&self) -> &[Factor<C>] {
        &self.factors
    }

    pub fn push_poly(&mut self, p: MultiPoly<C>) {
        self.factors.push(Factor::Poly(p));
    }

    /// Declares `1/(1 − g)`; `g` must vanish when all integration variables do.
    pub fn push_geometric(&mut self, g: MultiPoly<C>) -> Result<()> {
        if !g.constant_term().is_zero() {
            return Err(Error::ConstantTermInGeometric);
        }
        self.factors.push(Factor::Geometric(g));
        Ok(())
    }

    fn involved(&self, f: &Factor<C>) -> Vec<usize> {
        let p = match f {
            Factor::Poly(p) | Factor::Geometric(p) => p,
        };
        (0..self.vars.len())
            .filter(|&l| p.degree_in(&self.vars[l]) > 0)
            .collect()
    }
}

impl IntegrandSpec<QPoly> {
    /// Pushes a polynomial in the integration variables and parameters.
    pub fn push_qpoly(&mut self, p: &QPoly) {
        let lifted = lift(p, &self.vars);
        self.push_poly(lifted);
    }

    pub fn push_qgeometric(&mut self, g: &QPoly) -> Result<()> {
        let lifted = lift(g, &self.vars);
        self.push_geometric(lifted)
    }
}

/// Rewrites `p` as a polynomial in `vars` whose coefficients are polynomials in the other variables.
pub fn lift(p: &QPoly, vars: &[String]) -> MultiPoly<QPoly> {
    let own = p.vars();
    let slot: Vec<Option<usize>> = own.iter().map(|v| vars.iter().position(|u| u == v)).collect();
    let rest: VarList = Arc::new(own.iter().filter(|v| !vars.contains(v)).cloned().collect());
    let mut terms: Vec<(Vec<u32>, QPoly)> = Vec::with_capacity(p.len());
    for (e, c) in p.terms() {
        let mut ue = vec![0u32; vars.len()];
        let mut re = Vec::with_capacity(rest.len());
        for (k, &x) in e.iter().enumerate() {
            match slot[k] {
                Some(l) => ue[l] = x,
                None => re.push(x),
            }
        }
        terms.push((ue, QPoly::from_terms(rest.clone(), [(re, c.clone())])));
    }
    MultiPoly::from_terms(Arc::new(vars.to_vec()), terms)
}

fn factor_series<C: Ring>(f: &Factor<C>, vars: &VarList, windows: &[Window]) -> Result<TruncatedSeries<C>> {
    match f {
        Factor::Poly(p) => TruncatedSeries::from_poly(p, vars.clone(), windows.to_vec()),
        Factor::Geometric(g) => TruncatedSeries::geometric_expand(&MultiPoly::one(), g, vars.clone(), windows.to_vec()),
    }
}

/// Takes residues at zero one variable at a time along `order`; each factor is
/// multiplied in when the first variable it involves comes up.
pub fn iterated_residue<C: Ring>(spec: &IntegrandSpec<C>, order: &[&str], policy: WindowPolicy) -> Result<C> {
    let m = spec.vars.len();
    let mut seq = Vec::with_capacity(m);
    for name in order {
        let l = spec
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::MissingVariable(name.to_string()))?;
        if seq.contains(&l) {
            return Err(Error::Parse {
                input: order.join(","),
                reason: format!("`{name}` repeated in the integration order"),
            });
        }
        seq.push(l);
    }
    if seq.len() != m {
        return Err(Error::WrongLength {
            expected: m,
            got: seq.len(),
        });
    }
    // without a pole the integral over that variable vanishes
    if spec.powers.contains(&0) {
        return Ok(C::zero());
    }
    let window = |l: usize| -> Window {
        let d = spec.powers[l] as i32;
        match policy {
            WindowPolicy::Tight => (0, d - 1),
            WindowPolicy::Degree(deg) => (0, deg + d),
        }
    };
    // factor index -> position in `seq` of its first variable
    let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut constants = Vec::new();
    for (k, f) in spec.factors.iter().enumerate() {
        let inv = spec.involved(f);
        match seq.iter().position(|l| inv.contains(l)) {
            Some(pos) => buckets.entry(pos).or_default().push(k),
            None => constants.push(k),
        }
    }
    let mut live: Vec<usize> = seq.clone();
    let names = |live: &[usize]| var_list(&live.iter().map(|&l| spec.vars[l].as_str()).collect::<Vec<_>>());
    let mut vars = names(&live);
    let mut windows: Vec<Window> = live.iter().map(|&l| window(l)).collect();
    let mut acc = TruncatedSeries::one(vars.clone(), windows.clone());
    for (pos, &l) in seq.iter().enumerate() {
        for &k in buckets.get(&pos).map(|v| v.as_slice()).unwrap_or(&[]) {
            let s = factor_series(&spec.factors[k], &vars, &windows)?;
            acc = acc.mul(&s)?;
        }
        let v = &spec.vars[l];
        let d = spec.powers[l] as i32;
        let (lo, hi) = window(l);
        acc = acc.shift(v, -d, (lo - d, hi - d))?.residue_at_zero(v)?;
        live.remove(0);
        vars = names(&live);
        windows.remove(0);
        if acc.vars() != vars.as_slice() {
            return Err(Error::WindowMismatch);
        }
    }
    let mut value = acc.constant();
    for k in constants {
        let c = match &spec.factors[k] {
            Factor::Poly(p) => p.constant_term(),
            Factor::Geometric(_) => C::one(),
        };
        value = value.mul_ref(&c);
    }
    Ok(value)
}

/// Every permutation of `0..n` with its sign (`true` when odd), lexicographic.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            out.push((cur.clone(), odd));
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            cur.push(v);
            // moving the k-th remaining element to the front costs k transpositions
            rec(rest, cur, odd ^ (k % 2 == 1), out);
            cur.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::with_capacity(n), false, &mut out);
    out
}

/// `u1, …, un` style names for the 1-based indices in `range`.
pub fn u_names(range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|l| format!("u{l}")).collect()
}
