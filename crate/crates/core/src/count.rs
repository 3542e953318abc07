//! Exact counting: Catalan numbers and grove-space sizes.
//!
//! The Catalan recurrence is generic over the integer type so that the same
//! code serves fixed-width tables (`u64`, `i128`) and unbounded ones
//! ([`BigCount`](crate::BigCount)).

use std::ops::{Div, Mul};

use num_bigint::BigUint;
use num_traits::One;

/// The `n`-th Catalan number `c_n = binom(2n, n) / (n + 1)`.
///
/// Uses `c_{k+1} = c_k * 2(2k+1) / (k+2)`, where every division is exact.
/// Fixed-width `T` overflows past `n = 33` for `u64` and `n = 66` for `u128`.
pub fn catalan<T>(n: u32) -> T
where
    T: One + From<u32> + Mul<Output = T> + Div<Output = T>,
{
    let mut c = T::one();
    for k in 0..n {
        c = c * T::from(2 * (2 * k + 1)) / T::from(k + 2);
    }
    c
}

/// `#𝕐_n = 2^{c_n} - 1`, the number of groves of degree `n`.
pub fn grove_space_size(n: u32) -> BigUint {
    let c: u64 = catalan(n);
    (BigUint::one() << c) - BigUint::one()
}

/// [`grove_space_size`] when it fits in a `u64`.
pub fn grove_space_len(n: u32) -> Option<u64> {
    if n > 33 {
        return None;
    }
    let c: u64 = catalan(n);
    if c >= 64 {
        None
    } else {
        Some((1u64 << c) - 1)
    }
}

/// Catalan numbers `c_0..=c_n` as a `u64` table.
pub(crate) fn catalan_table(n: u32) -> Vec<u64> {
    (0..=n).map(catalan::<u64>).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial_oracle(n: u64) -> BigUint {
        // (2n)! / ((n+1)! n!)
        let fact = |k: u64| (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
        fact(2 * n) / (fact(n + 1) * fact(n))
    }

    #[test]
    fn catalan_values() {
        let expected = [1u64, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan::<u64>(n as u32), c);
        }
        assert_eq!(catalan::<u64>(12), 208012);
    }

    #[test]
    fn catalan_matches_factorial_formula_across_types() {
        for n in 0..30u32 {
            let big: BigUint = catalan(n);
            assert_eq!(big, binomial_oracle(n as u64));
            assert_eq!(BigUint::from(catalan::<u64>(n)), big);
            assert_eq!(BigUint::from(catalan::<u128>(n)), big);
            assert_eq!(catalan::<i128>(n), catalan::<u128>(n) as i128);
        }
    }

    #[test]
    fn grove_space() {
        assert_eq!(grove_space_len(3), Some(31));
        assert_eq!(grove_space_len(4), Some(16383));
        assert_eq!(grove_space_len(5), Some(4398046511103));
        assert_eq!(grove_space_len(6), None);
        assert_eq!(
            grove_space_size(6).to_string(),
            "5444517870735015415413993718908291383295"
        );
    }
}
