//! Line indices over discovered P-positions.
//!
//! The indexed solver inserts each P-position together with its mirror
//! image, so every structure here is symmetric across the main diagonal.

use std::collections::BTreeMap;

use crate::position::Position;

const ABSENT: u64 = u64::MAX;

/// Minimum value recorded per nonnegative key.
#[derive(Debug, Default, Clone)]
pub struct MinByKey {
    slots: Vec<u64>,
}

impl MinByKey {
    pub fn record(&mut self, key: u64, value: u64) {
        let key = key as usize;
        if key >= self.slots.len() {
            self.slots.resize(key + 1, ABSENT);
        }
        let slot = &mut self.slots[key];
        if value < *slot {
            *slot = value;
        }
    }

    #[inline]
    pub fn min(&self, key: u64) -> Option<u64> {
        match self.slots.get(key as usize) {
            Some(&v) if v != ABSENT => Some(v),
            _ => None,
        }
    }
}

/// [`MinByKey`] over signed keys.
#[derive(Debug, Default, Clone)]
pub struct SignedMinByKey {
    nonneg: MinByKey,
    neg: MinByKey,
}

impl SignedMinByKey {
    pub fn record(&mut self, key: i64, value: u64) {
        if key >= 0 {
            self.nonneg.record(key as u64, value);
        } else {
            self.neg.record(key.unsigned_abs() - 1, value);
        }
    }

    #[inline]
    pub fn min(&self, key: i64) -> Option<u64> {
        if key >= 0 {
            self.nonneg.min(key as u64)
        } else {
            self.neg.min(key.unsigned_abs() - 1)
        }
    }
}

#[derive(Debug, Default, Clone)]
pub struct Flags {
    bits: Vec<bool>,
}

impl Flags {
    pub fn set(&mut self, key: u64) {
        let key = key as usize;
        if key >= self.bits.len() {
            self.bits.resize(key + 1, false);
        }
        self.bits[key] = true;
    }

    #[inline]
    pub fn get(&self, key: u64) -> bool {
        self.bits.get(key as usize).copied().unwrap_or(false)
    }
}

/// Prefix minimum over signed keys, kept as a staircase: stored keys
/// increase while stored values strictly decrease.
#[derive(Debug, Default, Clone)]
pub struct Staircase {
    steps: BTreeMap<i64, i64>,
}

impl Staircase {
    /// Minimum value over all entries with key `<= key`.
    pub fn prefix_min(&self, key: i64) -> Option<i64> {
        self.steps.range(..=key).next_back().map(|(_, &v)| v)
    }

    pub fn record(&mut self, key: i64, value: i64) {
        if matches!(self.prefix_min(key), Some(v) if v <= value) {
            return;
        }
        let dominated: Vec<i64> = self.steps.range(key..).take_while(|(_, &v)| v >= value).map(|(&k, _)| k).collect();
        for k in dominated {
            self.steps.remove(&k);
        }
        self.steps.insert(key, value);
    }
}

/// Per-row, per-column, per-difference and per-sum occupancy of P-positions.
#[derive(Debug, Default, Clone)]
pub struct LineIndex {
    /// Row `y` -> least `x` of a P-position in that row.
    pub rows: MinByKey,
    /// Column `x` -> least `y`.
    pub cols: MinByKey,
    /// Diagonal `y - x` -> least `x`.
    pub diffs: SignedMinByKey,
    /// Anti-diagonals `x + y` holding a P-position.
    pub sums: Flags,
}

impl LineIndex {
    pub fn insert(&mut self, p: Position) {
        self.rows.record(p.y, p.x);
        self.cols.record(p.x, p.y);
        self.diffs.record(p.diff(), p.x);
        self.sums.set(p.level());
    }

    /// A P-position shares the row or column of `p`. Under level order every
    /// indexed P-position is strictly closer to the corner, so sharing a line
    /// means it is reachable by a rook move.
    #[inline]
    pub fn rook_hit(&self, p: Position) -> bool {
        self.rows.min(p.y).is_some() || self.cols.min(p.x).is_some()
    }

    /// Some P-position on diagonal `diff` has `x <= max_x`.
    #[inline]
    pub fn diagonal_hit(&self, diff: i64, max_x: i64) -> bool {
        max_x >= 0 && matches!(self.diffs.min(diff), Some(u) if u as i64 <= max_x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_matches_brute_force() {
        let entries = [(3, 7), (-2, 9), (5, 1), (0, 4), (1, 8), (-5, 12), (4, 0), (2, 2)];
        let mut stairs = Staircase::default();
        let mut seen = Vec::new();
        for &(k, v) in &entries {
            stairs.record(k, v);
            seen.push((k, v));
            for q in -7..8 {
                let brute = seen.iter().filter(|(k, _)| *k <= q).map(|(_, v)| *v).min();
                assert_eq!(stairs.prefix_min(q), brute, "query {q} after {seen:?}");
            }
        }
    }

    #[test]
    fn signed_keys() {
        let mut m = SignedMinByKey::default();
        m.record(-1, 5);
        m.record(-1, 3);
        m.record(0, 9);
        assert_eq!(m.min(-1), Some(3));
        assert_eq!(m.min(0), Some(9));
        assert_eq!(m.min(1), None);
        assert_eq!(m.min(-2), None);
    }
}
