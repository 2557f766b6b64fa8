//! The acceptance gate: seven criteria, one PASS/FAIL line each.

mod common;

use std::cmp::Ordering;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{laurent, poly};
use grossone::gclang::{eval_str, render, Value};
use grossone::observer::{CountingSystem, SystemId, Token};
use grossone::oracle::{check_card, check_order, sweep, SetExpr};
use grossone::posnum::{enumerate_first, InfNumeral, Sign};
use grossone::{GrossNumber, Poly};
use num_bigint::BigInt;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn value(src: &str) -> Result<Value, String> {
    eval_str(src).map_err(|e| format!("{src}: {e}"))
}

fn number(src: &str) -> Result<GrossNumber, String> {
    match value(src)? {
        Value::Number(n) => Ok(n),
        v => Err(format!("{src}: not a number ({v})")),
    }
}

/// `lhs` and `rhs` evaluate to canonically equal values, and `lhs` renders
/// as `text`.
fn identity(lhs: &str, rhs: &str, text: &str) -> Check {
    let (a, b) = (value(lhs)?, value(rhs)?);
    ensure(a == b, || format!("{lhs} = {a}, expected {rhs}"))?;
    ensure(render(&a) == text, || format!("{lhs} renders {a}, expected {text}"))
}

fn reference_identities() -> Check {
    identity("card(ap(2,2))", "G/2", "G/2")?;
    identity("card(Z)", "2*G+1", "2*G + 1")?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let x: u64 = rng.gen_range(1..=1_000_000_000);
        identity(&format!("card(N \\ {{{x}}})"), "G-1", "G - 1")?;
    }
    identity("card({0} | N)", "G+1", "G + 1")?;
    identity("prodcard(N, N)", "G^2", "G^2")?;
    identity("card({3,4,5,69} | (ap(4,5) & ap(3,11)))", "G/55+3", "G/55 + 3")?;
    identity("numerals(2, G)", "2^G", "2^G")?;
    identity("numerals(10, G)", "10^G", "10^G")?;
    identity("numerals(10, G/2)", "10^(G/2)", "10^(G/2)")?;
    identity("signedcount(10)", "2*10^(2*G)", "2*10^(2*G)")?;
    identity("floatcount(10)", "4*10^(2*G)", "4*10^(2*G)")
}

fn verdict_in(a: &str, b: &str, want: &[Ordering]) -> Check {
    match number(a)?.compare(&number(b)?) {
        Ok(o) if want.contains(&o) => Ok(()),
        Ok(o) => Err(format!("{a} vs {b}: {o:?}, expected {want:?}")),
        Err(e) => Err(format!("{a} vs {b}: {e}")),
    }
}

fn verdict(a: &str, b: &str, want: Ordering) -> Check {
    verdict_in(a, b, &[want])
}

fn ordering() -> Check {
    use Ordering::*;
    verdict("G", "2^G", Less)?;
    verdict("2^G", "10^G", Less)?;
    for b in [2, 3, 10] {
        verdict(&format!("{b}^(G/2)"), &format!("{b}^G"), Less)?;
    }
    let chain = ["G-1", "G", "G+1", "2*G+1", "G^2"];
    for w in chain.windows(2) {
        verdict(w[0], w[1], Less)?;
    }
    let Value::Seq(ks) = value("critical(10, G)")? else {
        return Err("critical(10, G) is not a pair".into());
    };
    let (k1, k2) = (render(&ks[0]), render(&ks[1]));
    verdict_in(&format!("10^({k1})"), "G", &[Less, Equal])?;
    verdict("G", &format!("10^({k2})"), Less)
}

fn soundness() -> Check {
    let report = sweep(20_240_601, 500);
    ensure(report.cases.len() == 500, || "sweep size".into())?;
    for c in &report.cases {
        ensure(c.passed() && c.reports.len() == 3, || {
            format!("case {} {}: {:?} {:?}", c.index, c.expression, c.error, c.reports)
        })?;
    }
    let b = SetExpr::Finite(vec![3, 4, 5, 69]).union(
        SetExpr::Progression { first: 4, step: 5 }.intersect(SetExpr::Progression { first: 3, step: 11 }),
    );
    let r = check_card(&b, 27_720).map_err(|e| e.to_string())?;
    let five07 = grossone::Rational::from_integer(507.into());
    ensure(r.matched && r.symbolic == five07 && r.brute == five07, || format!("B: {r:?}"))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn algebra() -> Check {
    let triples = (poly(2), poly(2), poly(2));
    runner(1000)
        .run(&triples, |(a, b, c)| {
            let ok = a.add(&b) == b.add(&a)
                && a.mul(&b) == b.mul(&a)
                && a.add(&b).add(&c) == a.add(&b.add(&c))
                && a.mul(&b).mul(&c) == a.mul(&b.mul(&c))
                && a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c))
                && a.cmp(&b) == a.add(&c).cmp(&b.add(&c))
                && [a < b, a == b, a > b].iter().filter(|x| **x).count() == 1
                && a.cmp(&b) == b.cmp(&a).reverse();
            proptest::prop_assert!(ok, "law violated for {} ; {} ; {}", a, b, c);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let ls = [BigInt::from(1_000_000), BigInt::from(10_000_000)];
    runner(200)
        .run(&(laurent(), laurent()), |(a, b)| {
            let r = check_order(&GrossNumber::P(a.clone()), &GrossNumber::P(b.clone()), &ls).unwrap();
            proptest::prop_assert!(r.matched, "order of {} vs {}: {:?}", a, b, r);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn numerals() -> Check {
    let chain = enumerate_first(10, Poly::grossone(), 4).map_err(|e| e.to_string())?;
    let shown: Vec<String> = chain.iter().map(|n| n.to_string()).collect();
    let expected = ["0.000…000", "0.000…0001", "0.000…0002", "0.000…0003"]
        .map(|s| format!("{s} [10^G positions: G]"));
    ensure(shown == expected, || format!("chain {shown:?}"))?;
    for w in chain.windows(2) {
        let o = grossone::posnum::compare_numerals(&w[0], &w[1]).map_err(|e| e.to_string())?;
        ensure(o == Ordering::Less, || "chain is not increasing".into())?;
    }
    let zero = InfNumeral::zero(10, Poly::grossone()).map_err(|e| e.to_string())?;
    let one = zero.successor().map_err(|e| e.to_string())?;
    ensure(one.to_string() == "0.000…0001 [10^G positions: G]", || one.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let base = rng.gen_range(2..=16u64);
        let mut digits = |n: usize| (0..n).map(|_| rng.gen_range(0..base) as u8).collect::<Vec<_>>();
        let head = digits(3);
        let mut tail = digits(3);
        let sign = [Sign::Unsigned, Sign::Plus, Sign::Minus][rng.gen_range(0..3)];
        if sign == Sign::Minus && tail.iter().all(|d| *d == 0) {
            tail.push(1);
        }
        let x = InfNumeral::new(base, Poly::grossone(), head, tail, sign).map_err(|e| e.to_string())?;
        let back = x.successor().and_then(|s| s.predecessor()).map_err(|e| format!("{x}: {e}"))?;
        ensure(back == x, || format!("round trip of {x} gave {back}"))?;
    }
    for b in [2, 10] {
        let rest = number(&format!("numerals({b}, G) - 1"))?;
        ensure(rest.to_string() == format!("{b}^G - 1"), || rest.to_string())?;
        let total = number(&format!("numerals({b}, G)"))?;
        ensure(rest.compare(&total) == Ok(Ordering::Less), || "b^G - 1 < b^G".into())?;
    }
    Ok(())
}

fn observers() -> Check {
    let weak = [
        ("piraha", "many", "1", "many"),
        ("piraha", "many", "2", "many"),
        ("piraha", "many", "many", "many"),
        ("piraha", "1", "1", "2"),
        ("piraha", "2", "1", "many"),
        ("piraha", "2", "2", "many"),
        ("calculus", "inf", "1", "inf"),
        ("calculus", "inf", "2", "inf"),
        ("calculus", "inf", "inf", "inf"),
        ("cantor", "aleph0", "1", "aleph0"),
        ("cantor", "aleph0", "2", "aleph0"),
        ("cantor", "C", "1", "C"),
        ("cantor", "C", "2", "C"),
        ("cantor", "C", "aleph0", "C"),
    ];
    for (sys, a, b, want) in weak {
        let got = value(&format!("wadd({sys}, {a}, {b})"))?.to_string();
        ensure(got == want, || format!("{a} + {b} in {sys}: {got}"))?;
    }
    let piraha = CountingSystem::new(SystemId::Piraha);
    let munduruku = CountingSystem::new(SystemId::Munduruku);
    let (three, four) = (GrossNumber::from(3), GrossNumber::from(4));
    let obs = |s: &CountingSystem, n: &GrossNumber| s.observe(n).map(|o| o.token).map_err(|e| e.to_string());
    ensure(obs(&piraha, &three)? == Token::Many && obs(&piraha, &four)? == Token::Many, || {
        "piraha must see 3 and 4 as many".into()
    })?;
    ensure(obs(&munduruku, &three)? != obs(&munduruku, &four)?, || "munduruku merges 3 and 4".into())?;
    let cantor = CountingSystem::new(SystemId::Cantor);
    for c in ["card(ap(2,2))", "card(Z)", "card(N \\ {7})", "card({0} | N)", "prodcard(N, N)", "card({3,4,5,69} | (ap(4,5) & ap(3,11)))", "card(N)"] {
        ensure(obs(&cantor, &number(c)?)? == Token::Aleph0, || format!("cantor on {c}"))?;
    }
    for c in ["2^G", "10^G", "numerals(10, G/2)"] {
        ensure(obs(&cantor, &number(c)?)? == Token::Continuum, || format!("cantor on {c}"))?;
    }
    Ok(())
}

fn parser_cli() -> Check {
    let corpus = include_str!("corpus.gc");
    for line in corpus.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let v = value(line)?;
        if matches!(v, Value::Number(_) | Value::Set(_) | Value::Bool(_)) {
            let back = value(&render(&v))?;
            ensure(back == v, || format!("{line}: {v} re-evaluates to {back}"))?;
        }
    }
    let gc = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_gc")).args(args).output().map_err(|e| e.to_string());
    let o = gc(&["eval", "card(ap(2,2))", "--json"])?;
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
    let want = serde_json::json!({"input": "card(ap(2,2))", "value": "G/2", "type": "number"});
    ensure(json == want, || format!("json {json}"))?;
    for (expr, code) in [("1 + 1", 0), ("G/0", 1), ("card(ap(2,", 2)] {
        let got = gc(&["eval", expr])?.status.code();
        ensure(got == Some(code), || format!("{expr}: exit {got:?}, expected {code}"))?;
    }
    Ok(())
}

type Criterion = (&'static str, u64, fn() -> Check);

fn main() {
    let criteria: [Criterion; 7] = [
        ("reference identities", 1, reference_identities),
        ("ordering", 1, ordering),
        ("oracle soundness sweep", 10, soundness),
        ("algebraic laws", 10, algebra),
        ("numeral order and well-ordering", 1, numerals),
        ("observers", 1, observers),
        ("parser and CLI contract", 5, parser_cli),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let slow = elapsed > Duration::from_secs(limit);
        let status = match (&result, slow) {
            (Ok(()), false) => "PASS",
            _ => "FAIL",
        };
        let mut line = format!(
            "{status} {} {name}: {:.3}s (limit {limit}s)",
            i + 1,
            elapsed.as_secs_f64()
        );
        if let Err(e) = &result {
            line.push_str(&format!(": {e}"));
        } else if slow {
            line.push_str(": too slow");
        }
        println!("{line}");
        if status == "FAIL" {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
