#![allow(dead_code)]

use grossone::gnum::Term;
use grossone::{GrossNumber, Poly, Rational};
use proptest::prelude::*;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn g() -> Poly {
    Poly::grossone()
}

pub fn num(p: Poly) -> GrossNumber {
    GrossNumber::P(p)
}

/// Nonzero rationals `n/d` with `|n| <= 100`, `1 <= d <= 6`.
pub fn coeff() -> impl Strategy<Value = Rational> {
    (1i64..=100, any::<bool>(), 1i64..=6)
        .prop_map(|(n, neg, d)| Rational::new((if neg { -n } else { n }).into(), d.into()))
}

/// Gross-polynomials whose exponents are themselves polynomials of depth
/// `depth - 1` (constant integers and halves at the bottom).
pub fn poly(depth: u32) -> BoxedStrategy<Poly> {
    let exp: BoxedStrategy<Poly> = if depth <= 1 {
        prop_oneof![
            3 => (-3i64..=3).prop_map(|k| Poly::constant(int(k))),
            1 => (-3i64..=3).prop_map(|k| Poly::constant(Rational::new((2 * k + 1).into(), 2.into()))),
        ]
        .boxed()
    } else {
        prop_oneof![
            2 => (-3i64..=3).prop_map(|k| Poly::constant(int(k))),
            1 => poly(depth - 1),
        ]
        .boxed()
    };
    prop::collection::vec((coeff(), exp), 0..4)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(coeff, exp)| Term { coeff, exp })))
        .boxed()
}

/// Polynomials in `①` with integer exponents in `-3..=3`, all of which
/// substitute to rationals.
pub fn laurent() -> impl Strategy<Value = Poly> {
    prop::collection::vec((coeff(), -3i64..=3), 0..5).prop_map(|ts| {
        Poly::from_terms(ts.into_iter().map(|(coeff, k)| Term {
            coeff,
            exp: Poly::constant(int(k)),
        }))
    })
}
