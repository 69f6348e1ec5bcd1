//! The refined generating functions as contour integrals around zero.

use num_traits::One;

use super::{iterated_residue, u_names, IntegrandSpec, WindowPolicy};
use crate::algebra::scalar::Ring;
use crate::error::{Error, Result};
use crate::genpoly::GenPoly;
use crate::{parse_poly, QPoly};

/// Whether the `u_1` integration of the path-count integral is still to be done.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UForm {
    Raw,
    AfterU1,
}

fn p(s: &str) -> QPoly {
    parse_poly(s).expect("built-in integrand factor parses")
}

fn u(l: usize) -> QPoly {
    QPoly::var(&format!("u{l}"))
}

fn evaluate(spec: &IntegrandSpec<QPoly>, policy: WindowPolicy) -> Result<QPoly> {
    // innermost last index first
    let order: Vec<&str> = spec.vars().iter().rev().map(|s| s.as_str()).collect();
    iterated_residue(spec, &order, policy)
}

/// Cross factor `Π_{l<m} (u_m − u_l)(1 + u_m + u_m u_l)` over `range`.
fn push_cross(spec: &mut IntegrandSpec<QPoly>, range: std::ops::RangeInclusive<usize>) {
    for l in range.clone() {
        for m in range.clone().filter(|&m| m > l) {
            let f = (u(m) - u(l)) * (QPoly::one() + u(m) + u(m) * u(l));
            spec.push_qpoly(&f);
        }
    }
}

/// `1/(1 + u(1 − y))` as a geometric factor.
fn push_one_minus_y(spec: &mut IntegrandSpec<QPoly>, l: usize) -> Result<()> {
    spec.push_qgeometric(&(u(l) * (p("y") - QPoly::one())))
}

/// The first-row/last-row refined ASM count as an integral over `u_2, …, u_n`.
pub fn integral_a_expr(n: usize, policy: WindowPolicy) -> Result<QPoly> {
    if n <= 1 {
        return Ok(QPoly::one());
    }
    let mut spec = IntegrandSpec::new(u_names(2..=n), (2..=n).map(|l| 2 * l as u32 - 2).collect())?;
    for l in 2..=n {
        spec.push_qpoly(&((QPoly::one() + u(l)) * (QPoly::one() + p("x") * u(l))));
        push_one_minus_y(&mut spec, l)?;
    }
    push_cross(&mut spec, 2..=n);
    evaluate(&spec, policy)
}

/// `U^{0,1}_n(x, y)` from the LGV-derived integral.
pub fn integral_u_expr(n: usize, form: UForm, policy: WindowPolicy) -> Result<QPoly> {
    let first = match form {
        UForm::Raw => 1,
        UForm::AfterU1 => 2,
    };
    if n < first {
        return Ok(QPoly::one());
    }
    let powers = (first..=n)
        .map(|i| match form {
            UForm::Raw => 2 * i as u32 - 1,
            UForm::AfterU1 => 2 * i as u32 - 2,
        })
        .collect();
    let mut spec = IntegrandSpec::new(u_names(first..=n), powers)?;
    let x = p("x");
    let y = p("y");
    for i in first..=n {
        let mut f = QPoly::one() + x.clone() * u(i);
        if i >= 2 {
            f = f * (QPoly::one() + y.clone() * u(i)) * (QPoly::one() + u(i)).powu(i as u32 - 2);
        }
        spec.push_qpoly(&f);
        if form == UForm::Raw {
            spec.push_qgeometric(&(u(i) * u(i)))?;
        }
    }
    for i in first..=n {
        for j in i..=n {
            if j > i {
                spec.push_qpoly(&(u(j) - u(i)));
            }
            if j > i || form == UForm::AfterU1 {
                spec.push_qgeometric(&(u(j) * u(i)))?;
            }
        }
    }
    evaluate(&spec, policy)
}

/// The interpolating integral over `u_1, …, u_{n−1}` with parameters `a_l`.
pub fn integral_i_expr(n: usize, a: &[QPoly], policy: WindowPolicy) -> Result<QPoly> {
    let m = n.saturating_sub(1);
    if a.len() != m {
        return Err(Error::WrongLength {
            expected: m,
            got: a.len(),
        });
    }
    if m == 0 {
        return Ok(QPoly::one());
    }
    let mut spec = IntegrandSpec::new(u_names(1..=m), (1..=m).map(|l| 2 * l as u32).collect())?;
    for (l, al) in (1..=m).zip(a) {
        let f = (QPoly::one() + u(l) + al.clone() * u(l) * u(l)) * (QPoly::one() + p("x") * u(l));
        spec.push_qpoly(&f);
        push_one_minus_y(&mut spec, l)?;
    }
    push_cross(&mut spec, 1..=m);
    evaluate(&spec, policy)
}

pub fn integral_a(n: usize) -> Result<GenPoly> {
    GenPoly::from_qpoly(&integral_a_expr(n, WindowPolicy::Tight)?, "x", "y")
}

pub fn integral_u(n: usize, form: UForm) -> Result<GenPoly> {
    GenPoly::from_qpoly(&integral_u_expr(n, form, WindowPolicy::Tight)?, "x", "y")
}

pub fn integral_i(n: usize, a: &[QPoly]) -> Result<GenPoly> {
    GenPoly::from_qpoly(&integral_i_expr(n, a, WindowPolicy::Tight)?, "x", "y")
}
