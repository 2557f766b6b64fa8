use std::collections::HashSet;

/// All digit strings of length `k` in base `base`.
fn strings(base: u32, k: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..k {
        out = out
            .iter()
            .flat_map(|s| {
                (0..base).map(move |d| {
                    let mut t = s.clone();
                    t.push(char::from_digit(d, base).expect("base <= 36"));
                    t
                })
            })
            .collect();
    }
    out
}

/// Distinct numerals `.a1…ak`.
pub fn brute_numeral_count(base: u32, k: usize) -> usize {
    strings(base, k).into_iter().collect::<HashSet<_>>().len()
}

/// Distinct numerals `±a1…an.b1…bm`.
pub fn brute_signed_count(base: u32, int_digits: usize, frac_digits: usize) -> usize {
    let ints = strings(base, int_digits);
    let fracs = strings(base, frac_digits);
    let mut seen = HashSet::new();
    for sign in ['+', '-'] {
        for i in &ints {
            for f in &fracs {
                seen.insert(format!("{sign}{i}.{f}"));
            }
        }
    }
    seen.len()
}

/// Distinct numerals `±.a1…an × b^(±p1…pm)`.
pub fn brute_float_count(base: u32, mantissa_digits: usize, exponent_digits: usize) -> usize {
    let mantissas = strings(base, mantissa_digits);
    let exponents = strings(base, exponent_digits);
    let mut seen = HashSet::new();
    for s in ['+', '-'] {
        for m in &mantissas {
            for e_sign in ['+', '-'] {
                for e in &exponents {
                    seen.insert(format!("{s}.{m}e{e_sign}{e}"));
                }
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(brute_numeral_count(2, 3), 8);
        assert_eq!(brute_signed_count(10, 2, 2), 20_000);
        assert_eq!(brute_float_count(3, 1, 1), 36);
        assert_eq!(brute_numeral_count(5, 0), 1);
    }
}
