//! Exact binomial coefficients.

use num_bigint::BigInt;
use num_traits::One;

/// `C(n, k)`; zero when `k > n`. Panics on u128 overflow.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc
            .checked_mul((n - i) as u128)
            .expect("binomial overflows u128")
            / (i as u128 + 1);
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial_u128(6, 3), 20);
        assert_eq!(binomial_u128(3, 5), 0);
        assert_eq!(binomial_u128(14, 6), 3003);
        assert_eq!(binomial(49, 7), BigInt::from(85_900_584u64));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40u64 {
            for k in 1..=n {
                assert_eq!(
                    binomial_u128(n, k),
                    binomial_u128(n - 1, k - 1) + binomial_u128(n - 1, k)
                );
            }
        }
    }
}
