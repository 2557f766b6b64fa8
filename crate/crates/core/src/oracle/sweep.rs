use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{check_card, OracleError, SetExpr, SubstReport};
use crate::setmeasure::SetOp;

const MAX_STEP: u64 = 12;
const MAX_VALUE: i64 = 200;
const MAX_LITERAL: usize = 5;
const MAX_DEPTH: u32 = 4;

/// A random set expression of depth at most `depth`.
pub fn random_set_expr(rng: &mut impl Rng, depth: u32) -> SetExpr {
    if depth == 0 || rng.gen_bool(0.25) {
        return random_leaf(rng);
    }
    match rng.gen_range(0..20) {
        0..=2 => random_set_expr(rng, depth - 1).complement(),
        3..=4 => random_set_expr(rng, depth - 1).mirror(),
        _ => {
            let op = [SetOp::Union, SetOp::Intersect, SetOp::Difference][rng.gen_range(0..3)];
            let a = random_set_expr(rng, depth - 1);
            let b = random_set_expr(rng, depth - 1);
            SetExpr::Op(op, Box::new(a), Box::new(b))
        }
    }
}

fn random_leaf(rng: &mut impl Rng) -> SetExpr {
    match rng.gen_range(0..20) {
        0..=8 => SetExpr::Progression {
            first: rng.gen_range(1..=MAX_VALUE as u64),
            step: rng.gen_range(1..=MAX_STEP),
        },
        9..=14 => {
            let lo = if rng.gen_bool(0.2) { -MAX_VALUE } else { 1 };
            let n = rng.gen_range(0..=MAX_LITERAL);
            SetExpr::Finite((0..n).map(|_| rng.gen_range(lo..=MAX_VALUE)).collect())
        }
        15..=17 => SetExpr::Naturals,
        _ => SetExpr::Integers,
    }
}

/// Three checkable values of `L`: multiples 1, 2, 3 of the least multiple
/// of every leaf modulus that exceeds 10 times the largest exception.
pub fn valid_ls(expr: &SetExpr) -> Result<[u64; 3], OracleError> {
    let set = expr.build()?;
    let lcm = expr
        .leaf_moduli()
        .into_iter()
        .chain(set.moduli())
        .fold(1u64, |acc, m| acc.lcm(&m));
    let floor = 10 * set.max_exception() + 1;
    let base = floor.div_ceil(lcm) * lcm;
    Ok([base, 2 * base, 3 * base])
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub index: usize,
    pub expression: String,
    pub reports: Vec<SubstReport>,
    pub error: Option<String>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.reports.iter().all(|r| r.matched)
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub seed: u64,
    pub cases: Vec<CaseReport>,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| !c.passed())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

fn run_case(index: usize, expr: SetExpr) -> CaseReport {
    let mut case = CaseReport {
        index,
        expression: expr.to_string(),
        reports: Vec::new(),
        error: None,
    };
    let checks = valid_ls(&expr).and_then(|ls| {
        ls.iter()
            .map(|&l| check_card(&expr, l))
            .collect::<Result<Vec<_>, _>>()
    });
    match checks {
        Ok(r) => case.reports = r,
        Err(e) => case.error = Some(e.to_string()),
    }
    case
}

/// Runs `cases` random expressions from `seed` through [`check_card`].
pub fn sweep(seed: u64, cases: usize) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let exprs: Vec<SetExpr> = (0..cases)
        .map(|_| random_set_expr(&mut rng, MAX_DEPTH))
        .collect();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let chunk = exprs.len().div_ceil(workers).max(1);
    let mut results: Vec<CaseReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = exprs
            .chunks(chunk)
            .enumerate()
            .map(|(c, part)| {
                scope.spawn(move || {
                    part.iter()
                        .enumerate()
                        .map(|(i, e)| run_case(c * chunk + i, e.clone()))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    results.sort_by_key(|c| c.index);
    SweepReport {
        seed,
        cases: results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let r = sweep(7, 40);
        assert_eq!(r.cases.len(), 40);
        let bad: Vec<_> = r.failures().map(|c| (&c.expression, &c.error)).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn deterministic() {
        let a: Vec<String> = sweep(3, 10).cases.into_iter().map(|c| c.expression).collect();
        let b: Vec<String> = sweep(3, 10).cases.into_iter().map(|c| c.expression).collect();
        assert_eq!(a, b);
    }
}
