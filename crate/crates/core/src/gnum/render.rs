//! Canonical text rendering. `①` is written `G`; the output re-parses to the
//! same value.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;
use super::count::{CritRef, ExpCount, ExpExponent};
use super::number::GrossNumber;
use super::poly::GrossPoly;

pub fn rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn poly<C: Coeff>(p: &GrossPoly<C>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in p.terms().iter().enumerate() {
        let c = t.coeff.to_rational();
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let c = c.abs();
        if t.exp.is_zero() {
            out.push_str(&rational(&c));
        } else {
            let mono = if t.exp.as_constant().is_some_and(|e| e.is_one()) {
                "G".to_string()
            } else {
                format!("G^{}", atom(poly(&t.exp)))
            };
            out.push_str(&scaled(&c, &mono));
        }
    }
    out
}

/// `n*body/d`, omitting unit factors.
fn scaled(c: &BigRational, body: &str) -> String {
    let mut s = String::new();
    if !c.numer().is_one() {
        s.push_str(&format!("{}*", c.numer()));
    }
    s.push_str(body);
    if !c.denom().is_one() {
        s.push_str(&format!("/{}", c.denom()));
    }
    s
}

/// Parenthesizes anything that is not a bare `G`, unsigned integer or call.
fn atom(s: String) -> String {
    let bare = s == "G" || (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()));
    let call = s.starts_with("crit(") && s.ends_with(')') && !s.contains(") ");
    if bare || call {
        s
    } else {
        format!("({s})")
    }
}

pub fn crit(c: &CritRef) -> String {
    let head = format!("crit({}, {})", c.base(), poly(c.target()));
    match c.offset() {
        0 => head,
        k if k > 0 => format!("{head} + {k}"),
        k => format!("{head} - {}", -k),
    }
}

pub fn exponent(e: &ExpExponent) -> String {
    match e {
        ExpExponent::Poly(p) => poly(p),
        ExpExponent::Crit(c) => crit(c),
    }
}

pub fn count(e: &ExpCount) -> String {
    let power = format!("{}^{}", e.base(), atom(exponent(e.exponent())));
    let mut s = scaled(e.multiplier(), &power);
    let t = e.tail();
    if !t.is_zero() {
        let sign = if t.is_negative() { " - " } else { " + " };
        s.push_str(sign);
        s.push_str(&rational(&t.abs()));
    }
    s
}

pub fn number(x: &GrossNumber) -> String {
    match x {
        GrossNumber::P(p) => poly(p),
        GrossNumber::E(e) => count(e),
    }
}

impl std::fmt::Display for GrossNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&number(self))
    }
}

impl<C: Coeff> std::fmt::Display for GrossPoly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnum::{pow_count, Poly};
    use num_bigint::BigInt;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn g() -> Poly {
        Poly::grossone()
    }

    #[test]
    fn polynomials() {
        assert_eq!(poly(&Poly::zero()), "0");
        let b = g().scale(&BigRational::new(1.into(), 55.into())).add(&Poly::from_i64(3));
        assert_eq!(poly(&b), "G/55 + 3");
        assert_eq!(poly(&g().scale(&int(2)).add(&Poly::from_i64(1))), "2*G + 1");
        assert_eq!(poly(&g().sub(&Poly::from_i64(1))), "G - 1");
        assert_eq!(poly(&g().mul(&g())), "G^2");
        assert_eq!(poly(&g().mul(&g()).scale(&BigRational::new(1.into(), 4.into()))), "G^2/4");
        assert_eq!(poly(&g().scale(&BigRational::new(3.into(), 2.into()))), "3*G/2");
        assert_eq!(poly(&Poly::from_i64(1).div_exact(&g()).unwrap()), "G^(-1)");
        assert_eq!(poly(&g().neg()), "-G");
    }

    #[test]
    fn counts() {
        let k = ExpExponent::Poly(g().scale(&int(2)));
        let e = pow_count(10, &k).unwrap().mul(&GrossNumber::from(2)).unwrap();
        assert_eq!(number(&e), "2*10^(2*G)");
        let half = ExpExponent::Poly(g().scale(&BigRational::new(1.into(), 2.into())));
        assert_eq!(number(&pow_count(10, &half).unwrap()), "10^(G/2)");
        let minus_one = pow_count(2, &ExpExponent::Poly(g()))
            .unwrap()
            .sub(&GrossNumber::one())
            .unwrap();
        assert_eq!(number(&minus_one), "2^G - 1");
    }
}
