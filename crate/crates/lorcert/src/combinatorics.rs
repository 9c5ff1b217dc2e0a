//! Arbitrary-precision factorials, binomials, and small enumeration helpers.
//!
//! Factorials are memoized per process behind a mutex; every coefficient
//! computation in the crate goes through these helpers.

use num::{BigInt, One};
use std::sync::Mutex;
use std::sync::OnceLock;

fn cache() -> &'static Mutex<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// `k!` as a `BigInt`.
pub fn factorial(k: usize) -> BigInt {
    let mut memo = cache().lock().unwrap();
    while memo.len() <= k {
        let next = memo.last().unwrap() * BigInt::from(memo.len());
        memo.push(next);
    }
    memo[k].clone()
}

/// Falling factorial `n * (n-1) * ... * (n-k+1)`.
pub fn falling(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / factorial(n - k)
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// All `k`-element subsets of `{0..n-1}` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        out.push(comb.clone());
        let mut pos = None;
        for i in (0..k).rev() {
            if comb[i] < n - k + i {
                pos = Some(i);
                break;
            }
        }
        let i = match pos {
            None => return out,
            Some(i) => i,
        };
        comb[i] += 1;
        for j in (i + 1)..k {
            comb[j] = comb[j - 1] + 1;
        }
    }
}

/// Non-empty subsets of `{0..n-1}` ordered by size, then lexicographically.
pub fn subsets_by_size(n: usize) -> Vec<Vec<usize>> {
    (1..=n).flat_map(|k| combinations(n, k)).collect()
}
