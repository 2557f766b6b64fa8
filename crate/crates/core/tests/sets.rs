mod common;

use grossone::oracle::{check_card, random_set_expr, valid_ls, SetExpr};
use grossone::setmeasure::{product_card, NatSubset, SetOp, SetValue, SignedSet};
use grossone::GrossNumber;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn expr(seed: u64, depth: u32) -> SetExpr {
    random_set_expr(&mut ChaCha8Rng::seed_from_u64(seed), depth)
}

fn set(seed: u64) -> SetValue {
    expr(seed, 3).build().unwrap()
}

fn nat(seed: u64) -> NatSubset {
    let mut s = seed;
    loop {
        if let SetValue::Nat(n) = set(s) {
            return n;
        }
        s = s.wrapping_add(0x9e37_79b9);
    }
}

const OPS: [SetOp; 3] = [SetOp::Union, SetOp::Intersect, SetOp::Difference];

proptest! {
    #[test]
    fn combine_matches_membership(a in any::<u64>(), b in any::<u64>(), op in 0usize..3) {
        let (x, y) = (nat(a), nat(b));
        let z = NatSubset::combine(OPS[op], &x, &y).unwrap();
        for k in 1..=1000 {
            prop_assert_eq!(z.contains(k), OPS[op].apply(x.contains(k), y.contains(k)));
        }
    }

    #[test]
    fn boolean_algebra(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (x, y, z) = (nat(a), nat(b), nat(c));
        prop_assert_eq!(x.union(&y).unwrap(), y.union(&x).unwrap());
        prop_assert_eq!(x.intersect(&y).unwrap(), y.intersect(&x).unwrap());
        prop_assert_eq!(x.union(&y).unwrap().union(&z).unwrap(), x.union(&y.union(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.intersect(&y.union(&z).unwrap()).unwrap(),
            x.intersect(&y).unwrap().union(&x.intersect(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.union(&y).unwrap().complement(), x.complement().intersect(&y.complement()).unwrap());
        prop_assert_eq!(x.union(&x).unwrap(), x.clone());
        prop_assert_eq!(x.complement().complement(), x.clone());
        prop_assert_eq!(x.difference(&y).unwrap(), x.intersect(&y.complement()).unwrap());
    }

    #[test]
    fn inclusion_exclusion(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (nat(a), nat(b));
        let lhs = x.union(&y).unwrap().card().add(&x.intersect(&y).unwrap().card());
        prop_assert_eq!(lhs, x.card().add(&y.card()));
        prop_assert_eq!(x.card().add(&x.complement().card()), NatSubset::naturals().card());
    }

    #[test]
    fn cardinality_matches_brute_force(seed in any::<u64>()) {
        let e = expr(seed, 4);
        for l in valid_ls(&e).unwrap() {
            let r = check_card(&e, l).unwrap();
            prop_assert!(r.matched, "{} at {}: {} vs {}", r.expression, l, r.symbolic, r.brute);
        }
    }

    #[test]
    fn signed_sets_match_membership(a in any::<u64>(), b in any::<u64>(), op in 0usize..3) {
        let (x, y) = (set(a), set(b));
        let z = SetValue::combine(OPS[op], &x, &y).unwrap();
        for k in -300..=300 {
            prop_assert_eq!(z.contains(k), OPS[op].apply(x.contains(k), y.contains(k)));
        }
        let m = x.mirror();
        for k in -300..=300 {
            prop_assert_eq!(m.contains(k), x.contains(-k));
        }
    }
}

fn card(s: &str) -> String {
    grossone::gclang::eval_str(&format!("card({s})")).unwrap().to_string()
}

#[test]
fn reference_counts() {
    assert_eq!(card("ap(2,2)"), "G/2");
    assert_eq!(card("ap(1,2)"), "G/2");
    assert_eq!(card("Z"), "2*G + 1");
    assert_eq!(card("N"), "G");
    assert_eq!(card("{0} | N"), "G + 1");
    assert_eq!(card("{3,4,5,69} | (ap(4,5) & ap(3,11))"), "G/55 + 3");
    assert_eq!(card("neg(ap(2,2)) | {0} | ap(2,2)"), "G + 1");
    assert_eq!(card("~N"), "0");
    assert_eq!(card("~ap(2,2)"), "G/2");
    for x in [1, 2, 7, 1000, 123_456] {
        assert_eq!(card(&format!("N \\ {{{x}}}")), "G - 1");
    }
}

#[test]
fn products() {
    let n = NatSubset::naturals().card();
    assert_eq!(product_card(&n, &n).unwrap().to_string(), "G^2");
    let z = SignedSet::integers().card();
    assert_eq!(product_card(&n, &z).unwrap().to_string(), "2*G^2 + G");
    assert_eq!(product_card(&n, &grossone::Poly::zero()).unwrap(), GrossNumber::zero());
}

#[test]
fn evens_complement_is_odds() {
    let evens = NatSubset::progression(2, 2).unwrap();
    assert_eq!(evens.complement(), NatSubset::progression(1, 2).unwrap());
    let r = check_card(&SetExpr::Progression { first: 2, step: 2 }.complement(), 10_000).unwrap();
    assert!(r.matched);
}
