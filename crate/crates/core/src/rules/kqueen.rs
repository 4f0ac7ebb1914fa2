use super::index::LineIndex;
use super::{diagonal_moves, is_diagonal_move, is_rook_move, rook_moves, MoveRule, Moves, ReachIndex};
use crate::position::Position;
use crate::variant::QueenVariant;

#[derive(Debug, Clone, Copy)]
pub struct Standard;

impl Standard {
    fn all_moves(&self, from: Position) -> impl Iterator<Item = Position> {
        rook_moves(from).chain(diagonal_moves(from))
    }
}

impl MoveRule for Standard {
    fn variant(&self) -> QueenVariant {
        QueenVariant::Standard
    }

    fn moves(&self, from: Position) -> Moves<'_> {
        Box::new(self.all_moves(from))
    }

    fn any_move(&self, from: Position, hit: &mut dyn FnMut(Position) -> bool) -> bool {
        self.all_moves(from).any(hit)
    }

    fn is_move(&self, from: Position, to: Position) -> bool {
        is_rook_move(from, to) || is_diagonal_move(from, to)
    }

    fn reach_index(&self) -> Box<dyn ReachIndex> {
        Box::new(StrollIndex { lines: LineIndex::default(), drift: 0, band: None })
    }
}

/// Holladay's queen. Besides rook moves she may remove `dx` from the column
/// and `dy` from the row at once whenever `|dx - dy| <= k - 1`.
#[derive(Debug, Clone, Copy)]
pub struct KQueen {
    k: u64,
}

impl KQueen {
    pub fn new(k: u64) -> Self {
        assert!(k >= 1);
        KQueen { k }
    }

    fn all_moves(&self, from: Position) -> impl Iterator<Item = Position> {
        rook_moves(from).chain(self.stroll_moves(from))
    }

    fn stroll_moves(&self, from: Position) -> impl Iterator<Item = Position> {
        let drift = self.k - 1;
        (0..=from.x).flat_map(move |dx| {
            let lo = dx.saturating_sub(drift);
            let hi = from.y.min(dx + drift);
            (lo..=hi).filter(move |&dy| dx + dy > 0).map(move |dy| Position::new(from.x - dx, from.y - dy))
        })
    }
}

#[inline]
fn is_stroll(from: Position, to: Position, drift: u64) -> bool {
    to.x <= from.x && to.y <= from.y && to != from && (from.x - to.x).abs_diff(from.y - to.y) <= drift
}

impl MoveRule for KQueen {
    fn variant(&self) -> QueenVariant {
        QueenVariant::KQueen { k: self.k }
    }

    fn moves(&self, from: Position) -> Moves<'_> {
        Box::new(self.all_moves(from))
    }

    fn any_move(&self, from: Position, hit: &mut dyn FnMut(Position) -> bool) -> bool {
        self.all_moves(from).any(hit)
    }

    fn is_move(&self, from: Position, to: Position) -> bool {
        is_rook_move(from, to) || is_stroll(from, to, self.k - 1)
    }

    fn reach_index(&self) -> Box<dyn ReachIndex> {
        Box::new(StrollIndex { lines: LineIndex::default(), drift: self.k - 1, band: None })
    }
}

/// A `k`-queen for which the band `|x - y| <= band` can only be entered by
/// a row or column move when starting outside it.
#[derive(Debug, Clone, Copy)]
pub struct RestrictedStroll {
    inner: KQueen,
    band: u64,
}

impl RestrictedStroll {
    pub fn new(k: u64, band: u64) -> Self {
        assert!(band < k);
        RestrictedStroll { inner: KQueen::new(k), band }
    }

    #[inline]
    fn blocked(&self, from: Position, to: Position) -> bool {
        from.x.abs_diff(from.y) > self.band && to.x.abs_diff(to.y) <= self.band && !is_rook_move(from, to)
    }
}

impl MoveRule for RestrictedStroll {
    fn variant(&self) -> QueenVariant {
        QueenVariant::RestrictedStroll { k: self.inner.k, band: self.band }
    }

    fn moves(&self, from: Position) -> Moves<'_> {
        Box::new(self.inner.all_moves(from).filter(move |&to| !self.blocked(from, to)))
    }

    fn any_move(&self, from: Position, hit: &mut dyn FnMut(Position) -> bool) -> bool {
        self.inner.all_moves(from).any(|to| !self.blocked(from, to) && hit(to))
    }

    fn is_move(&self, from: Position, to: Position) -> bool {
        self.inner.is_move(from, to) && !self.blocked(from, to)
    }

    fn reach_index(&self) -> Box<dyn ReachIndex> {
        Box::new(StrollIndex { lines: LineIndex::default(), drift: self.inner.k - 1, band: Some(self.band) })
    }
}

/// Rook lines plus the `2 * drift + 1` diagonals around the start.
struct StrollIndex {
    lines: LineIndex,
    drift: u64,
    band: Option<u64>,
}

impl ReachIndex for StrollIndex {
    fn insert(&mut self, p: Position) {
        self.lines.insert(p);
    }

    fn reaches(&self, from: Position) -> bool {
        if self.lines.rook_hit(from) {
            return true;
        }
        let c = from.diff();
        let drift = self.drift as i64;
        let outside = matches!(self.band, Some(b) if c.unsigned_abs() > b);
        (c - drift..=c + drift).any(|d| {
            if outside && d != c && d.unsigned_abs() <= self.band.unwrap_or(0) {
                return false;
            }
            // target (u, u + d) with u <= x and u + d <= y
            let max_x = (from.x as i64).min(from.y as i64 - d);
            self.lines.diagonal_hit(d, max_x)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::collect_moves;

    #[test]
    fn two_queen_drifts_by_one() {
        let q = KQueen::new(2);
        let from = Position::new(3, 5);
        assert!(q.is_move(from, Position::new(1, 2)));
        assert!(q.is_move(from, Position::new(1, 4)));
        assert!(!q.is_move(from, Position::new(0, 4)));
        assert!(!q.is_move(from, Position::new(2, 6)));
    }

    #[test]
    fn restricted_blocks_band_entry() {
        let r = RestrictedStroll::new(2, 1);
        let from = Position::new(2, 5);
        // diagonal moves keep |x - y| = 3
        assert!(r.is_move(from, Position::new(0, 3)));
        // strolling to |u - v| = 1 is forbidden, rook entry is not
        assert!(!r.is_move(from, Position::new(1, 2)));
        assert!(r.is_move(from, Position::new(2, 3)));
        let moves = collect_moves(&r, from);
        assert!(!moves.contains(&Position::new(1, 2)));
        // from inside the band strolling is free
        let inside = Position::new(4, 5);
        assert!(r.is_move(inside, Position::new(2, 2)));
    }
}
