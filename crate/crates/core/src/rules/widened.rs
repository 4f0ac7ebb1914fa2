use super::index::{LineIndex, Staircase};
use super::{is_rook_move, rook_moves, MoveRule, Moves, ReachIndex};
use crate::position::Position;
use crate::variant::QueenVariant;

/// Queen with a widened diagonal. Besides rook moves she may remove `dx >= 1`
/// from the column and `dy` from the row whenever
/// `max(0, dx - (m - 1)) <= dy <= j * dx + (m - 1)`, and symmetrically.
/// `(2, 1)` gives the cone `dx <= dy <= 2 dx`; `(1, k)` is Holladay's
/// `k`-queen.
#[derive(Debug, Clone, Copy)]
pub struct WidenedQueen {
    scope: u64,
    stroll: u64,
}

impl WidenedQueen {
    pub fn new(scope: u64, stroll: u64) -> Self {
        assert!(scope >= 1 && stroll >= 1);
        WidenedQueen { scope, stroll }
    }

    #[inline]
    fn range_for(&self, d: u64) -> (u64, u64) {
        let slack = self.stroll - 1;
        (d.saturating_sub(slack), self.scope * d + slack)
    }

    fn cone(&self, from: Position) -> impl Iterator<Item = Position> + '_ {
        let primary = (1..=from.x).flat_map(move |dx| {
            let (lo, hi) = self.range_for(dx);
            (lo..=hi.min(from.y)).map(move |dy| Position::new(from.x - dx, from.y - dy))
        });
        let mirrored = (1..=from.y).flat_map(move |dy| {
            let (lo, hi) = self.range_for(dy);
            (lo..=hi.min(from.x)).map(move |dx| Position::new(from.x - dx, from.y - dy))
        });
        primary.chain(mirrored)
    }

    fn in_cone(&self, from: Position, to: Position) -> bool {
        if to.x > from.x || to.y > from.y {
            return false;
        }
        let (dx, dy) = (from.x - to.x, from.y - to.y);
        let fits = |a: u64, b: u64| {
            let (lo, hi) = self.range_for(a);
            a >= 1 && lo <= b && b <= hi
        };
        fits(dx, dy) || fits(dy, dx)
    }
}

impl MoveRule for WidenedQueen {
    fn variant(&self) -> QueenVariant {
        QueenVariant::WidenedQueen { scope: self.scope, stroll: self.stroll }
    }

    fn moves(&self, from: Position) -> Moves<'_> {
        Box::new(rook_moves(from).chain(self.cone(from)))
    }

    fn any_move(&self, from: Position, hit: &mut dyn FnMut(Position) -> bool) -> bool {
        rook_moves(from).chain(self.cone(from)).any(hit)
    }

    fn is_move(&self, from: Position, to: Position) -> bool {
        is_rook_move(from, to) || self.in_cone(from, to)
    }

    fn reach_index(&self) -> Box<dyn ReachIndex> {
        Box::new(ConeIndex {
            lines: LineIndex::default(),
            far: Staircase::default(),
            scope: self.scope as i64,
            slack: self.stroll as i64 - 1,
        })
    }
}

/// Cone reachability split by the diagonal `d = v - u` of the target,
/// relative to the start diagonal `c`:
///
/// * `c < d <= c + slack`: the target sits below the start diagonal, so it
///   only needs `v <= y`;
/// * `c - slack <= d <= c`: any `u < x` works;
/// * `d < c - slack`: the target must satisfy `j u - v <= j x - y + slack`,
///   a dominance query answered by a staircase of `min (j u - v)` keyed by `d`.
///
/// The mirrored cone is the same query at the mirrored start, since the
/// index holds both halves of the P-set.
struct ConeIndex {
    lines: LineIndex,
    far: Staircase,
    scope: i64,
    slack: i64,
}

impl ConeIndex {
    fn primary(&self, x: i64, y: i64) -> bool {
        let c = y - x;
        for d in c + 1..=c + self.slack {
            if self.lines.diagonal_hit(d, (x - 1).min(y - d)) {
                return true;
            }
        }
        for d in c - self.slack..=c {
            if self.lines.diagonal_hit(d, x - 1) {
                return true;
            }
        }
        matches!(
            self.far.prefix_min(c - self.slack - 1),
            Some(key) if key <= self.scope * x - y + self.slack
        )
    }
}

impl ReachIndex for ConeIndex {
    fn insert(&mut self, p: Position) {
        self.lines.insert(p);
        self.far.record(p.diff(), self.scope * p.x as i64 - p.y as i64);
    }

    fn reaches(&self, from: Position) -> bool {
        let (x, y) = (from.x as i64, from.y as i64);
        self.lines.rook_hit(from) || self.primary(x, y) || self.primary(y, x)
    }
}
