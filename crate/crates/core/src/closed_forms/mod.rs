//! Direct generators for the tables, with no search: vile numbers, Beatty
//! sequences, the mex recursion of the 2-Queen Dee, and the digit series
//! `f` and `h`. All arithmetic is exact.

mod beatty;
mod binary;
mod mex;

pub use beatty::{beatty_psi, holladay_pairs};
pub use binary::{
    dopey, f_queen_bee, h, h_u64, is_dopey, is_vile, queen_bee_pair, queen_bee_pairs, spaced_power_sum, vile,
    vile_numbers,
};
pub use mex::{mex, mex2, queen_dee_pairs, transfer_to_queen_dee, two_queen_dee_pairs, MexState};

use crate::error::{Error, Result};
use crate::morphic::{catalog, table_from};
use crate::table::PPositionTable;

/// Tables of the morphisms `a -> a^k b, b -> a^j`.
pub fn fraenkel_pairs(k: u64, j: u64, count: usize) -> Result<PPositionTable> {
    let m = catalog("fraenkel", &[k, j])?;
    table_from(|len| m.fixed_point('a', len), 'a', 'b', count)
}

/// Tables of `a -> a^(k-j) b a^j, b -> a`, which satisfy `b_n = a_n + k n - j`.
pub fn restricted_pairs(k: u64, j: u64, count: usize) -> Result<PPositionTable> {
    let m = catalog("restricted", &[k, j])?;
    let table = table_from(|len| m.fixed_point('a', len), 'a', 'b', count)?;
    for (n, a, b) in table.iter() {
        if b + j != a + k * n as u64 {
            return Err(Error::Consistency(format!("restricted:{k},{j} pair {n} = ({a},{b})")));
        }
    }
    Ok(table)
}
