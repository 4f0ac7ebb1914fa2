use super::index::LineIndex;
use super::{diagonal_moves, is_rook_move, rook_moves, MoveRule, Moves, ReachIndex};
use crate::position::Position;
use crate::variant::QueenVariant;

/// A `k`-queen whose diagonal path may reflect once off a wall and continue
/// along the anti-diagonal.
///
/// The `k`-queen's off-diagonal drift is modelled as a preliminary shift of
/// `s` columns left and `t` rows down with `s + t <= k - 1`, followed by a
/// diagonal slide from the shifted square. A slide from `(x', y')` with
/// `1 <= x' < y'` hits the left wall at `(0, y' - x')` and may reflect onto
/// every square of the anti-diagonal `u + v = y' - x'`; symmetrically off
/// the bottom wall. `k = 1` is the Queen Dee, `k = 2` the 2-Queen Dee.
#[derive(Debug, Clone, Copy)]
pub struct KQueenDee {
    k: u64,
}

impl KQueenDee {
    pub fn new(k: u64) -> Self {
        assert!(k >= 1);
        KQueenDee { k }
    }

    fn shifts(&self, from: Position) -> impl Iterator<Item = Position> {
        let reach = self.k - 1;
        (0..=reach.min(from.x))
            .flat_map(move |s| (0..=(reach - s).min(from.y)).map(move |t| Position::new(from.x - s, from.y - t)))
    }
}

/// Slides from `p` without the starting square: the diagonal plus the
/// single reflection.
fn slide(p: Position) -> impl Iterator<Item = Position> {
    let (x, y) = (p.x, p.y);
    let off_left = (x >= 1 && x < y).then(|| (0..=y - x).map(move |u| Position::new(u, y - x - u)));
    let off_bottom = (y >= 1 && y < x).then(|| (0..=x - y).map(move |v| Position::new(x - y - v, v)));
    diagonal_moves(p).chain(off_left.into_iter().flatten()).chain(off_bottom.into_iter().flatten())
}

fn in_slide(p: Position, to: Position) -> bool {
    let (x, y) = (p.x, p.y);
    let diagonal = to.x < x && to.y < y && x - to.x == y - to.y;
    let off_left = x >= 1 && x < y && to.x + to.y == y - x;
    let off_bottom = y >= 1 && y < x && to.x + to.y == x - y;
    diagonal || off_left || off_bottom
}

impl KQueenDee {
    fn all_moves(&self, from: Position) -> impl Iterator<Item = Position> + '_ {
        let level = from.level();
        rook_moves(from).chain(self.shifts(from).flat_map(slide).filter(move |q| q.level() < level))
    }
}

impl MoveRule for KQueenDee {
    fn variant(&self) -> QueenVariant {
        QueenVariant::KQueenDee { k: self.k }
    }

    fn moves(&self, from: Position) -> Moves<'_> {
        Box::new(self.all_moves(from))
    }

    fn any_move(&self, from: Position, hit: &mut dyn FnMut(Position) -> bool) -> bool {
        self.all_moves(from).any(hit)
    }

    fn is_move(&self, from: Position, to: Position) -> bool {
        if is_rook_move(from, to) {
            return true;
        }
        to.level() < from.level() && self.shifts(from).any(|p| in_slide(p, to))
    }

    fn reach_index(&self) -> Box<dyn ReachIndex> {
        Box::new(DeeIndex { lines: LineIndex::default(), rule: *self })
    }
}

struct DeeIndex {
    lines: LineIndex,
    rule: KQueenDee,
}

impl ReachIndex for DeeIndex {
    fn insert(&mut self, p: Position) {
        self.lines.insert(p);
    }

    fn reaches(&self, from: Position) -> bool {
        if self.lines.rook_hit(from) {
            return true;
        }
        self.rule.shifts(from).any(|p| {
            let (x, y) = (p.x, p.y);
            self.lines.diagonal_hit(p.diff(), x as i64 - 1)
                || (x >= 1 && x < y && self.lines.sums.get(y - x))
                || (y >= 1 && y < x && self.lines.sums.get(x - y))
        })
    }
}
