use super::index::LineIndex;
use super::{diagonal_moves, is_diagonal_move, is_rook_move, rook_moves, MoveRule, Moves, ReachIndex};
use crate::position::Position;
use crate::variant::QueenVariant;

/// Standard queen whose diagonal path may bounce perpendicularly off a
/// wall. From `(x, y)` with `x < y` the path meets the left wall at
/// `(0, y - x)` and continues to `(x', y - x)` for `1 <= x' < 2x`, the bound
/// that keeps the Manhattan distance decreasing. No bounce from the main
/// diagonal, whose path ends in the corner.
#[derive(Debug, Clone, Copy)]
pub struct QueenBee;

fn bounce_moves(from: Position) -> impl Iterator<Item = Position> {
    let (x, y) = (from.x, from.y);
    let left = (x < y).then(|| (1..2 * x).map(move |u| Position::new(u, y - x)));
    let bottom = (y < x).then(|| (1..2 * y).map(move |v| Position::new(x - y, v)));
    left.into_iter().flatten().chain(bottom.into_iter().flatten())
}

fn is_bounce(from: Position, to: Position) -> bool {
    let (x, y) = (from.x, from.y);
    (x < y && to.y == y - x && to.x >= 1 && to.x < 2 * x) || (y < x && to.x == x - y && to.y >= 1 && to.y < 2 * y)
}

impl MoveRule for QueenBee {
    fn variant(&self) -> QueenVariant {
        QueenVariant::QueenBee
    }

    fn moves(&self, from: Position) -> Moves<'_> {
        Box::new(rook_moves(from).chain(diagonal_moves(from)).chain(bounce_moves(from)))
    }

    fn any_move(&self, from: Position, hit: &mut dyn FnMut(Position) -> bool) -> bool {
        rook_moves(from).chain(diagonal_moves(from)).chain(bounce_moves(from)).any(hit)
    }

    fn is_move(&self, from: Position, to: Position) -> bool {
        is_rook_move(from, to) || is_diagonal_move(from, to) || is_bounce(from, to)
    }

    fn reach_index(&self) -> Box<dyn ReachIndex> {
        Box::new(BeeIndex { lines: LineIndex::default() })
    }
}

struct BeeIndex {
    lines: LineIndex,
}

impl ReachIndex for BeeIndex {
    fn insert(&mut self, p: Position) {
        self.lines.insert(p);
    }

    fn reaches(&self, from: Position) -> bool {
        let (x, y) = (from.x, from.y);
        if self.lines.rook_hit(from) || self.lines.diagonal_hit(from.diff(), x as i64) {
            return true;
        }
        // (0, v) with v > 0 is never a P-position, so the least x in a row
        // already satisfies x >= 1.
        if x < y {
            matches!(self.lines.rows.min(y - x), Some(u) if u >= 1 && u < 2 * x)
        } else if y < x {
            matches!(self.lines.cols.min(x - y), Some(v) if v >= 1 && v < 2 * y)
        } else {
            false
        }
    }
}
