//! The same generating polynomials reached by different routes.

use asm_tsscpp::asm::{enumerate_asms, genfun_doubly_refined, Convention};
use asm_tsscpp::nilp::{enumerate_tsscpps, genfun_u, lgv_genfun, path_weight_sum, Tsscpp};
use asm_tsscpp::residue::{integral_a, integral_i, integral_u, UForm};
use asm_tsscpp::{parse_poly, GenPoly, QPoly, Rational};
use num_traits::One;

fn n3_poly() -> GenPoly {
    GenPoly::from_qpoly(
        &parse_poly("y^2 + y + x*y^2 + x + x*y + x^2*y + x^2").unwrap(),
        "x",
        "y",
    )
    .unwrap()
}

#[test]
fn n3_everywhere() {
    let want = n3_poly();
    assert_eq!(genfun_doubly_refined(3, Convention::Tilde), want);
    assert_eq!(genfun_u(3, 0, 1).unwrap(), want);
    assert_eq!(integral_a(3).unwrap(), want);
    assert_eq!(integral_u(3, UForm::Raw).unwrap(), want);
    assert_eq!(
        integral_i(3, &[parse_poly("y - y^2").unwrap(), QPoly::one()]).unwrap(),
        want
    );
    let t = [QPoly::var("x"), QPoly::var("y"), QPoly::one()];
    assert_eq!(lgv_genfun(3, &t).unwrap(), want.to_qpoly("x", "y"));
    assert_eq!(path_weight_sum(3, &t).unwrap(), want.to_qpoly("x", "y"));
}

#[test]
fn reversed_convention_flips_second_index() {
    for n in 1..=5 {
        let t = genfun_doubly_refined(n, Convention::Tilde);
        let r = genfun_doubly_refined(n, Convention::Reversed);
        let m = n as u32 - 1;
        let flipped = GenPoly::from_terms(t.terms().map(|((i, j), c)| ((i, m - j), c)));
        assert_eq!(flipped, r);
    }
}

#[test]
fn lgv_counts_with_unit_weights() {
    for n in 1..=6 {
        let ones = vec![Rational::one(); n];
        let got = lgv_genfun(n, &ones).unwrap();
        assert_eq!(got, Rational::from_integer((enumerate_asms(n).count() as i64).into()));
    }
}

#[test]
fn tsscpp_arrays_survive_json_shape() {
    for a in enumerate_tsscpps(4) {
        let back = Tsscpp::from_array(a.rows()).unwrap();
        assert_eq!(back, a);
    }
}
