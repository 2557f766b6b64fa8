use std::cmp::Ordering;

use grossone::posnum::{compare_numerals, enumerate_first, InfNumeral, NumeralError, Sign};
use grossone::Poly;
use proptest::prelude::*;

fn len(k: i64) -> Poly {
    Poly::from_i64(k)
}

fn big() -> Poly {
    Poly::grossone()
}

fn digits(n: u64, width: usize, base: u64) -> Vec<u8> {
    let mut v = vec![0u8; width];
    let mut n = n;
    for d in v.iter_mut().rev() {
        *d = (n % base) as u8;
        n /= base;
    }
    v
}

fn sparse() -> impl Strategy<Value = InfNumeral> {
    (2u64..=16, prop::collection::vec(0u8..16, 0..4), prop::collection::vec(0u8..16, 0..4), 0..3)
        .prop_map(|(b, h, t, s)| {
            let fix = |v: Vec<u8>| v.into_iter().map(|d| d % b as u8).collect();
            let sign = [Sign::Unsigned, Sign::Plus, Sign::Minus][s as usize];
            InfNumeral::new(b, big(), fix(h), fix(t), sign).unwrap()
        })
}

proptest! {
    #[test]
    fn successor_predecessor_round_trip(x in sparse()) {
        let next = match x.successor() {
            Err(NumeralError::Unrepresentable) => {
                // -0.d…000 has no sparse successor
                prop_assert!(x.sign() == Sign::Minus && x.tail().is_empty() && !x.head().is_empty());
                return Ok(());
            }
            r => r.unwrap(),
        };
        prop_assert_eq!(next.predecessor().unwrap(), x.clone());
        prop_assert_eq!(compare_numerals(&x, &next).unwrap(), Ordering::Less);
    }

    /// Length-6 truncation: order agrees with the value of the fraction.
    #[test]
    fn finite_order_is_numeric(a in 0u64..1_000_000, b in 0u64..1_000_000) {
        let x = InfNumeral::new(10, len(6), digits(a, 6, 10), vec![], Sign::Unsigned).unwrap();
        let y = InfNumeral::new(10, len(6), digits(b, 6, 10), vec![], Sign::Unsigned).unwrap();
        prop_assert_eq!(compare_numerals(&x, &y).unwrap(), a.cmp(&b));
    }
}

#[test]
fn first_four_numerals() {
    let chain = enumerate_first(10, big(), 4).unwrap();
    let shown: Vec<String> = chain.iter().map(|n| n.to_string()).collect();
    assert_eq!(
        shown,
        [
            "0.000…000 [10^G positions: G]",
            "0.000…0001 [10^G positions: G]",
            "0.000…0002 [10^G positions: G]",
            "0.000…0003 [10^G positions: G]",
        ]
    );
    for w in chain.windows(2) {
        assert_eq!(w[0].successor().unwrap(), w[1]);
    }
    let two = enumerate_first(2, big(), 2).unwrap();
    assert_eq!(two[1].tail(), &[1]);
}

#[test]
fn carries() {
    let x = InfNumeral::new(10, big(), vec![], vec![9], Sign::Unsigned).unwrap();
    assert_eq!(x.successor().unwrap().tail(), &[1, 0]);
    let y = InfNumeral::new(10, len(8), vec![], vec![9], Sign::Unsigned).unwrap();
    assert_eq!(y.successor().unwrap().head(), &[0, 0, 0, 0, 0, 0, 1]);
}

#[test]
fn finite_three_digit_system() {
    let all = enumerate_first(10, len(3), 1000).unwrap();
    assert_eq!(all.len(), 1000);
    for (i, n) in all.iter().enumerate() {
        let expect = InfNumeral::new(10, len(3), digits(i as u64, 3, 10), vec![], Sign::Unsigned).unwrap();
        assert_eq!(*n, expect);
    }
    assert_eq!(all[999].successor(), Err(NumeralError::Overflow));
    assert_eq!(enumerate_first(10, len(3), 2000).unwrap().len(), 1000);
}

#[test]
fn head_dominates_tail() {
    let x = InfNumeral::new(10, big(), vec![1], vec![], Sign::Unsigned).unwrap();
    let y = InfNumeral::new(10, big(), vec![], vec![1], Sign::Unsigned).unwrap();
    assert_eq!(compare_numerals(&x, &y).unwrap(), Ordering::Greater);
}

#[test]
fn signed_zeros_and_edges() {
    let minus = InfNumeral::new(10, big(), vec![], vec![], Sign::Minus).unwrap();
    let plus = minus.successor().unwrap();
    assert_eq!(plus.sign(), Sign::Plus);
    assert_eq!(compare_numerals(&minus, &plus).unwrap(), Ordering::Less);
    let zero = InfNumeral::zero(10, big()).unwrap();
    assert_eq!(zero.predecessor(), Err(NumeralError::Underflow));
    let half = InfNumeral::new(10, big(), vec![5], vec![], Sign::Unsigned).unwrap();
    assert_eq!(half.predecessor(), Err(NumeralError::Unrepresentable));
    assert!(compare_numerals(&zero, &plus).is_err());
}
