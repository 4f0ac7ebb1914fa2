use crate::error::{Error, Result};
use crate::table::PPositionTable;

/// Least nonnegative integer not in `s`.
pub fn mex<I: IntoIterator<Item = u64>>(s: I) -> u64 {
    let mut seen: Vec<u64> = s.into_iter().collect();
    seen.sort_unstable();
    seen.dedup();
    seen.iter().enumerate().find(|&(i, &v)| v != i as u64).map_or(seen.len() as u64, |(i, _)| i as u64)
}

/// Least positive even integer not in `s`; every element must be even.
///
/// Zero is never returned: `mex2({2, 4, 6, 10, 14}) = 8`. In the recursion
/// the sets always hold the corner's 0, so nothing depends on this choice.
pub fn mex2<I: IntoIterator<Item = u64>>(s: I) -> Result<u64> {
    let halves = s
        .into_iter()
        .map(|v| if v % 2 == 0 { Ok(v / 2) } else { Err(Error::OddElement(v)) })
        .collect::<Result<Vec<_>>>()?;
    Ok(2 * mex(halves.into_iter().chain([0])))
}

/// Incremental state of the 2-Queen Dee recursion
/// `a = mex(A ∪ B)`, `b - a = mex2(D ∪ S)`.
///
/// Coordinates and line values live in membership bitmaps with monotone
/// mex cursors, so each pair costs amortized constant time. The state is
/// seeded with the corner: `A = B = D = S = {0}`.
#[derive(Debug, Clone)]
pub struct MexState {
    coords: Vec<bool>,
    // D ∪ S, indexed by value / 2
    lines: Vec<bool>,
    coord_cursor: usize,
    line_cursor: usize,
    max_a: u64,
    max_d: u64,
    generated: usize,
    collision: bool,
}

impl Default for MexState {
    fn default() -> Self {
        MexState {
            coords: vec![true],
            lines: vec![true],
            coord_cursor: 0,
            line_cursor: 0,
            max_a: 0,
            max_d: 0,
            generated: 0,
            collision: false,
        }
    }
}

fn mark(bits: &mut Vec<bool>, i: usize) -> bool {
    if i >= bits.len() {
        bits.resize(i + 1, false);
    }
    std::mem::replace(&mut bits[i], true)
}

fn advance(bits: &[bool], cursor: &mut usize) -> usize {
    while bits.get(*cursor).copied().unwrap_or(false) {
        *cursor += 1;
    }
    *cursor
}

impl MexState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of pairs generated so far.
    pub fn len(&self) -> usize {
        self.generated
    }

    pub fn is_empty(&self) -> bool {
        self.generated == 0
    }

    pub fn next_pair(&mut self) -> (u64, u64) {
        let a = advance(&self.coords, &mut self.coord_cursor) as u64;
        let d = 2 * advance(&self.lines, &mut self.line_cursor) as u64;
        let b = a + d;
        self.collision |= mark(&mut self.coords, a as usize);
        self.collision |= mark(&mut self.coords, b as usize);
        mark(&mut self.lines, (d / 2) as usize);
        mark(&mut self.lines, ((a + b) / 2) as usize);
        self.max_a = a;
        self.max_d = self.max_d.max(d);
        self.generated += 1;
        (a, b)
    }

    /// The inductive hypothesis: `A ∪ B` covers `0..=max A` with no value in
    /// both sets, and `D ∪ S` covers every even number up to `max D`.
    pub fn invariant_holds(&self) -> bool {
        !self.collision
            && self.coords[..=self.max_a as usize].iter().all(|&b| b)
            && self.lines[..=(self.max_d / 2) as usize].iter().all(|&b| b)
    }
}

impl Iterator for MexState {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.next_pair())
    }
}

/// First `count` P-positions of the 2-Queen Dee from the mex recursion.
pub fn two_queen_dee_pairs(count: usize) -> PPositionTable {
    PPositionTable::new(MexState::new().take(count).collect())
}

/// First `count` P-positions of the Queen Dee, transferred from the
/// 2-Queen Dee table as `(α, β) = ((b - a) / 2, (b + a) / 2)`.
pub fn queen_dee_pairs(count: usize) -> Result<PPositionTable> {
    transfer_to_queen_dee(&two_queen_dee_pairs(count))
}

pub fn transfer_to_queen_dee(two_dee: &PPositionTable) -> Result<PPositionTable> {
    two_dee
        .iter()
        .map(|(n, a, b)| {
            if (b - a) % 2 != 0 {
                Err(Error::Consistency(format!("b_{n} - a_{n} = {} is odd", b - a)))
            } else {
                Ok(((b - a) / 2, (b + a) / 2))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(PPositionTable::new)
}
