use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::table::PPositionTable;

/// `floor(n ψ_k)` with `ψ_k = (2 - k + sqrt(k² + 4)) / 2`, the number with
/// continued fraction `[1; k, k, k, ...]`.
///
/// Evaluated as `(n (2 - k) + isqrt(n² (k² + 4))) div 2`; since `k² + 4` is
/// never a square for `k >= 1`, flooring the root first loses nothing.
pub fn beatty_psi(k: u64, n: u64) -> u128 {
    assert!(k >= 1);
    let (k, n) = (BigInt::from(k), BigInt::from(n));
    let radicand = &n * &n * (&k * &k + 4u32);
    let value: BigInt = (&n * (BigInt::from(2u32) - &k) + radicand.sqrt()) / 2u32;
    debug_assert!(!value.is_negative());
    value.to_u128().expect("n ψ_k < 2n fits in u128")
}

/// Holladay's `k`-queen pairs `(floor(n ψ_k), floor(n ψ_k) + k n)`.
pub fn holladay_pairs(k: u64, count: usize) -> PPositionTable {
    PPositionTable::new(
        (1..=count as u64)
            .map(|n| {
                let a = beatty_psi(k, n) as u64;
                (a, a + k * n)
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(beatty_psi(1, 1), 1);
        assert_eq!(beatty_psi(1, 2), 3);
        assert_eq!(beatty_psi(2, 3), 4);
        assert_eq!(holladay_pairs(2, 3).get(3), Some((4, 10)));
        assert_eq!(holladay_pairs(1, 3).pairs(), &[(1, 2), (3, 5), (4, 7)]);
    }

    #[test]
    fn exact_for_huge_n() {
        // floor(n sqrt 2) for n = 10^18, checked by squaring
        let n: u128 = 1_000_000_000_000_000_000;
        let a = beatty_psi(2, n as u64);
        let a_big = BigInt::from(a);
        let two_n2 = BigInt::from(2u32) * BigInt::from(n) * BigInt::from(n);
        assert!(&a_big * &a_big <= two_n2);
        assert!((&a_big + 1u32) * (&a_big + 1u32) > two_n2);
    }

    #[test]
    fn golden_ratio_against_float() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        for n in 1..10_000u64 {
            assert_eq!(beatty_psi(1, n), (n as f64 * phi).floor() as u128, "n = {n}");
        }
    }
}
