//! Vile and dopey numbers, and the counting function that inverts them.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::table::PPositionTable;

/// Binary expansion of `n >= 1` ends in an even number of zeros.
#[inline]
pub fn is_vile(n: u64) -> bool {
    n != 0 && n.trailing_zeros().is_multiple_of(2)
}

#[inline]
pub fn is_dopey(n: u64) -> bool {
    n != 0 && !is_vile(n)
}

/// Vile numbers in increasing order.
pub fn vile_numbers() -> impl Iterator<Item = u64> {
    (1..).filter(|&n| is_vile(n))
}

/// The `n`-th vile number, `n >= 1`.
pub fn vile(n: u64) -> u64 {
    assert!(n >= 1);
    vile_numbers().nth(n as usize - 1).expect("vile numbers are unbounded")
}

pub fn dopey(n: u64) -> u64 {
    2 * vile(n)
}

/// Queen Bee pair `(vile(n), 2 vile(n))`.
pub fn queen_bee_pair(n: u64) -> (u64, u64) {
    let a = vile(n);
    (a, 2 * a)
}

pub fn queen_bee_pairs(count: usize) -> PPositionTable {
    PPositionTable::new(vile_numbers().take(count).map(|a| (a, 2 * a)).collect())
}

/// `f(x) = Σ_j [x / 2^(2j+1)]` where `[y]` rounds half up. Each term is
/// `(2x + 2^(2j+1)) div 2^(2j+2)`, and vanishes once `4^j > x`.
pub fn f_queen_bee(x: u64) -> u64 {
    let x = x as u128;
    let mut sum = 0u128;
    let mut j = 0u32;
    while 1u128 << (2 * j) <= x {
        sum += (2 * x + (1u128 << (2 * j + 1))) >> (2 * j + 2);
        j += 1;
    }
    sum as u64
}

/// `h(x) = Σ_j {x / 4^j}`, where `{y}` is the distance from `y` to the
/// nearest integer.
///
/// Terms with `4^j <= 2x` are summed exactly; beyond the last of them, at
/// index `J`, every term is `x / 4^j` itself, and their sum is `x / (3 4^J)`.
pub fn h(x: &BigUint) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let two_x = x * 2u32;
    let mut sum = BigRational::zero();
    let mut scale = BigUint::one();
    let mut last = BigUint::one();
    while scale <= two_x {
        let r = x.mod_floor(&scale);
        let dist = std::cmp::min(r.clone(), &scale - &r);
        sum += BigRational::new(dist.into(), scale.clone().into());
        last = scale.clone();
        scale *= 4u32;
    }
    sum + BigRational::new(x.clone().into(), (last * 3u32).into())
}

pub fn h_u64(x: u64) -> BigRational {
    h(&BigUint::from(x))
}

/// `4^e_1 + ... + 4^e_k` for exponents `first, first + gap, ...`.
pub fn spaced_power_sum(first: u32, gap: u32, terms: u32) -> BigUint {
    (0..terms).map(|i| BigUint::from(4u32).pow(first + i * gap)).sum()
}
