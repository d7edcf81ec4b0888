use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::{Int, IntTuple, Partition, Result};

/// `C(a, b)`, zero whenever an argument is negative or `b > a`.
pub fn binomial(a: i64, b: i64) -> Int {
    if a < 0 || b < 0 || b > a {
        return Int::zero();
    }
    let b = b.min(a - b);
    let mut acc = Int::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(m: u64) -> Int {
    (1..=m).fold(Int::one(), |acc, i| acc * i)
}

/// `top! / ∏ parts_i!`, zero unless the parts sum to `top`.
pub fn multinomial(top: u64, parts: &[u64]) -> Int {
    if parts.iter().sum::<u64>() != top {
        return Int::zero();
    }
    let mut acc = Int::one();
    let mut placed = 0u64;
    for &p in parts {
        placed += p;
        acc *= binomial(placed as i64, p as i64);
    }
    acc
}

/// `|S_μ| = ∏_i m_i(μ)!` over the entries of the tuple.
pub fn stabilizer_order(entries: &[i64]) -> Int {
    let mut counts: HashMap<i64, u64> = HashMap::new();
    for &e in entries {
        *counts.entry(e).or_default() += 1;
    }
    counts.values().fold(Int::one(), |acc, &m| acc * factorial(m))
}

/// All distinct permutations of `values`, lexicographically decreasing.
pub fn distinct_permutations(values: &[i64]) -> Vec<IntTuple> {
    let mut cur = values.to_vec();
    cur.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![IntTuple(cur.clone())];
    // step to the previous permutation in lex order until none is left
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] > cur[i]) {
        let pivot = i - 1;
        let j = (i..cur.len()).rev().find(|&j| cur[j] < cur[pivot]).expect("pivot has a smaller successor");
        cur.swap(pivot, j);
        cur[i..].reverse();
        out.push(IntTuple(cur.clone()));
    }
    out
}

/// Distinct rearrangements of `(μ_1, …, μ_k)`, in bijection with the
/// minimal coset representatives `S^μ`.
pub fn distinct_rearrangements(mu: &Partition, k: usize) -> Result<Vec<IntTuple>> {
    Ok(distinct_permutations(&mu.padded(k)?))
}

/// Number of ℕ-matrices with row sums `λ` and column sums `μ`.
pub fn l_matrix_count(lambda: &Partition, mu: &Partition) -> Int {
    if lambda.size() != mu.size() {
        return Int::zero();
    }
    let rows: Vec<u32> = lambda.parts().to_vec();
    let mut memo: HashMap<(usize, Vec<u32>), Int> = HashMap::new();
    count_rows(0, mu.parts().to_vec(), &rows, &mut memo)
}

fn count_rows(row: usize, caps: Vec<u32>, rows: &[u32], memo: &mut HashMap<(usize, Vec<u32>), Int>) -> Int {
    if row == rows.len() {
        return if caps.iter().all(|&c| c == 0) { Int::one() } else { Int::zero() };
    }
    // column order is irrelevant for the count
    let mut key_caps = caps.clone();
    key_caps.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(v) = memo.get(&(row, key_caps.clone())) {
        return v.clone();
    }
    let mut total = Int::zero();
    let mut caps = key_caps.clone();
    fill_row(0, rows[row], &mut caps, &mut |c| {
        total += count_rows(row + 1, c.to_vec(), rows, memo);
    });
    memo.insert((row, key_caps), total.clone());
    total
}

fn fill_row(col: usize, rem: u32, caps: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if col == caps.len() {
        if rem == 0 {
            visit(caps);
        }
        return;
    }
    let tail: u32 = caps[col + 1..].iter().sum();
    let hi = rem.min(caps[col]);
    let lo = rem.saturating_sub(tail);
    for x in lo..=hi {
        caps[col] -= x;
        fill_row(col + 1, rem - x, caps, visit);
        caps[col] += x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::Error;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(3, 1), Int::from(3));
        assert_eq!(binomial(-1, 0), Int::zero());
        assert_eq!(binomial(5, 5), Int::one());
        assert_eq!(binomial(4, -1), Int::zero());
        assert_eq!(binomial(2, 3), Int::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<Int>().unwrap());
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(stabilizer_order(&[1, 1, 1]), Int::from(6));
        assert_eq!(stabilizer_order(&[2, 1, 0]), Int::from(1));
        assert_eq!(stabilizer_order(&[3, 3, 1, 1]), Int::from(4));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(2, &[1, 1]), Int::from(2));
        assert_eq!(multinomial(4, &[2, 1, 1]), Int::from(12));
        assert_eq!(multinomial(3, &[1, 1]), Int::zero());
        assert_eq!(multinomial(0, &[]), Int::one());
    }

    #[test]
    fn rearrangement_examples() {
        let r = distinct_rearrangements(&partition![1], 2).unwrap();
        assert_eq!(r, vec![IntTuple(vec![1, 0]), IntTuple(vec![0, 1])]);
        assert_eq!(distinct_rearrangements(&partition![2, 2], 2).unwrap(), vec![IntTuple(vec![2, 2])]);
        let r = distinct_rearrangements(&partition![2, 1], 3).unwrap();
        assert_eq!(r.len(), 6);
        assert!(r.windows(2).all(|w| w[0] > w[1]));
        assert!(matches!(distinct_rearrangements(&partition![1, 1, 1], 2), Err(Error::TooManyParts { .. })));
    }

    #[test]
    fn rearrangement_count_matches_orbit_formula() {
        for k in 1..=5 {
            for p in Partition::all_in_box(k, 3) {
                let r = distinct_rearrangements(&p, k).unwrap();
                let expected = factorial(k as u64) / stabilizer_order(&p.padded(k).unwrap());
                assert_eq!(Int::from(r.len()), expected, "{p} k={k}");
            }
        }
    }

    #[test]
    fn l_matrix_examples() {
        assert_eq!(l_matrix_count(&partition![2, 1], &partition![2, 1]), Int::from(2));
        assert_eq!(l_matrix_count(&partition![5], &partition![5]), Int::one());
        assert_eq!(l_matrix_count(&partition![1, 1], &partition![2]), Int::one());
        assert_eq!(l_matrix_count(&partition![1, 1], &partition![3]), Int::zero());
        // L_{(1^n),(1^n)} = n!
        assert_eq!(l_matrix_count(&partition![1, 1, 1, 1], &partition![1, 1, 1, 1]), Int::from(24));
    }
}
