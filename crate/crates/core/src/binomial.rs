//! Exact binomial coefficients over arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, r)` as an exact big integer; zero when `r > n`.
///
/// Uses the multiplicative formula; every intermediate division is exact
/// because the running product after `i` steps is `C(n, i)`.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, r)` for signed arguments: zero whenever `n < 0`, `r < 0` or `r > n`.
pub fn binomial_i(n: i64, r: i64) -> BigUint {
    if n < 0 || r < 0 || r > n {
        BigUint::zero()
    } else {
        binomial(n as u64, r as u64)
    }
}

/// `C(n, r)` in machine integers, saturating at `u64::MAX`.
pub fn binomial_u64(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![1u64]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u64; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn agrees_with_pascal_triangle() {
        let rows = pascal(60);
        for (n, row) in rows.iter().enumerate() {
            for (r, &v) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, r as u64), BigUint::from(v));
                assert_eq!(binomial_u64(n as u64, r as u64), v);
            }
            assert!(binomial(n as u64, n as u64 + 1).is_zero());
        }
    }

    #[test]
    fn signed_edges() {
        assert!(binomial_i(-1, 0).is_zero());
        assert!(binomial_i(3, -1).is_zero());
        assert_eq!(binomial_i(0, 0), BigUint::one());
    }

    #[test]
    fn saturates() {
        assert_eq!(binomial_u64(200, 100), u64::MAX);
    }
}
