//! Exact binomial coefficients and factorials.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// C(n, k) with the convention that out-of-range k yields 0.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// C(n, k) over signed arguments: zero unless 0 <= k <= n.
///
/// Several closed forms here feed negative upper arguments into the
/// binomial; those terms vanish under this convention.
pub fn binomial_signed(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        BigUint::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

/// C(n, k) in machine words, for iteration counts. Requires n <= 63 so the
/// result always fits in a u64.
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    assert!(n <= 63, "binomial_u64 supports n <= 63, got {n}");
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result as u64
}

pub fn factorial(n: u64) -> BigUint {
    let mut result = BigUint::one();
    for i in 2..=n {
        result *= BigUint::from(i);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(4, 7), BigUint::zero());
    }

    #[test]
    fn signed_convention() {
        assert_eq!(binomial_signed(-1, 0), BigUint::zero());
        assert_eq!(binomial_signed(3, -1), BigUint::zero());
        assert_eq!(binomial_signed(3, 4), BigUint::zero());
        assert_eq!(binomial_signed(6, 3), BigUint::from(20u32));
    }

    #[test]
    fn machine_word_agrees_with_exact() {
        for n in 0..=20u64 {
            for k in 0..=n {
                assert_eq!(BigUint::from(binomial_u64(n, k)), binomial(n, k));
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(10), BigUint::from(3628800u32));
    }
}
