//! Move rules for every queen, behind a common [`MoveRule`] trait.
//!
//! Each rule offers three views of the same move set: a lazy enumeration
//! used by the exhaustive solver, a direct membership predicate, and a
//! [`ReachIndex`] used by the indexed solver. The registry maps the
//! `name[:p1,p2]` grammar onto rules.

mod bee;
mod dee;
pub mod index;
mod kqueen;
mod widened;

use std::fmt;
use std::sync::Arc;

pub use bee::QueenBee;
pub use dee::KQueenDee;
pub use kqueen::{KQueen, RestrictedStroll, Standard};
pub use widened::WidenedQueen;

use crate::error::{Error, Result};
use crate::position::Position;
use crate::variant::{split_spec, QueenVariant};

pub type Moves<'a> = Box<dyn Iterator<Item = Position> + 'a>;

pub trait MoveRule: Send + Sync + fmt::Debug {
    fn variant(&self) -> QueenVariant;

    /// Every legal target from `from`, in no particular order and possibly
    /// with repeats.
    fn moves(&self, from: Position) -> Moves<'_>;

    /// Whether some legal target satisfies `hit`, stopping at the first.
    /// Rules override this to run over their unboxed move iterator.
    fn any_move(&self, from: Position, hit: &mut dyn FnMut(Position) -> bool) -> bool {
        self.moves(from).any(hit)
    }

    /// Direct test for `to` being a legal target from `from`.
    fn is_move(&self, from: Position, to: Position) -> bool;

    /// Fresh line index answering "does `from` reach an indexed P-position".
    fn reach_index(&self) -> Box<dyn ReachIndex>;
}

/// Incremental reachability oracle over a growing set of P-positions.
///
/// Callers insert P-positions in nondecreasing level order, always together
/// with their mirror images, and only query positions whose level exceeds
/// every inserted one.
pub trait ReachIndex: Send + Sync {
    fn insert(&mut self, p: Position);
    fn reaches(&self, from: Position) -> bool;
}

/// Builds the rule for a variant after validating its parameters.
pub fn rule_for(variant: QueenVariant) -> Result<Arc<dyn MoveRule>> {
    variant.validate()?;
    Ok(match variant {
        QueenVariant::Standard => Arc::new(Standard),
        QueenVariant::KQueen { k } => Arc::new(KQueen::new(k)),
        QueenVariant::QueenBee => Arc::new(QueenBee),
        QueenVariant::KQueenDee { k } => Arc::new(KQueenDee::new(k)),
        QueenVariant::WidenedQueen { scope, stroll } => Arc::new(WidenedQueen::new(scope, stroll)),
        QueenVariant::RestrictedStroll { k, band } => Arc::new(RestrictedStroll::new(k, band)),
    })
}

/// The legal moves from `p`, duplicate-free, in lexicographic order.
pub fn legal_moves(variant: QueenVariant, p: Position) -> Result<Vec<Position>> {
    let rule = rule_for(variant)?;
    Ok(collect_moves(rule.as_ref(), p))
}

pub fn collect_moves(rule: &dyn MoveRule, p: Position) -> Vec<Position> {
    let mut out: Vec<Position> = rule.moves(p).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn is_legal_move(variant: QueenVariant, from: Position, to: Position) -> Result<bool> {
    Ok(rule_for(variant)?.is_move(from, to))
}

/// Row moves to the left, then column moves downward.
pub(crate) fn rook_moves(p: Position) -> impl Iterator<Item = Position> {
    (0..p.x).map(move |x| Position::new(x, p.y)).chain((0..p.y).map(move |y| Position::new(p.x, y)))
}

pub(crate) fn diagonal_moves(p: Position) -> impl Iterator<Item = Position> {
    (1..=p.x.min(p.y)).map(move |t| Position::new(p.x - t, p.y - t))
}

#[inline]
pub(crate) fn is_rook_move(from: Position, to: Position) -> bool {
    (to.y == from.y && to.x < from.x) || (to.x == from.x && to.y < from.y)
}

#[inline]
pub(crate) fn is_diagonal_move(from: Position, to: Position) -> bool {
    to.x < from.x && to.y < from.y && from.x - to.x == from.y - to.y
}

struct RuleEntry {
    name: &'static str,
    params: &'static str,
    summary: &'static str,
    build: fn(&[u64]) -> Option<QueenVariant>,
}

/// Queen rules registered by name.
pub struct RuleRegistry {
    entries: Vec<RuleEntry>,
}

impl RuleRegistry {
    pub fn builtin() -> Self {
        let entries = vec![
            RuleEntry {
                name: "standard",
                params: "",
                summary: "Wythoff's queen",
                build: |p| p.is_empty().then_some(QueenVariant::Standard),
            },
            RuleEntry {
                name: "k-queen",
                params: "k",
                summary: "Holladay's queen, strolls up to k-1 off the diagonal",
                build: |p| match *p {
                    [k] => Some(QueenVariant::KQueen { k }),
                    _ => None,
                },
            },
            RuleEntry {
                name: "queen-bee",
                params: "",
                summary: "diagonal paths bounce perpendicularly off a wall",
                build: |p| p.is_empty().then_some(QueenVariant::QueenBee),
            },
            RuleEntry {
                name: "queen-dee",
                params: "",
                summary: "diagonal paths reflect once onto the anti-diagonal",
                build: |p| p.is_empty().then_some(QueenVariant::QUEEN_DEE),
            },
            RuleEntry {
                name: "2-queen-dee",
                params: "",
                summary: "2-queen with the queen-dee reflection",
                build: |p| p.is_empty().then_some(QueenVariant::TWO_QUEEN_DEE),
            },
            RuleEntry {
                name: "k-queen-dee",
                params: "k",
                summary: "k-queen with the queen-dee reflection",
                build: |p| match *p {
                    [k] => Some(QueenVariant::KQueenDee { k }),
                    _ => None,
                },
            },
            RuleEntry {
                name: "widened",
                params: "j,m",
                summary: "widened diagonal of scope j and stroll m",
                build: |p| match *p {
                    [scope, stroll] => Some(QueenVariant::WidenedQueen { scope, stroll }),
                    _ => None,
                },
            },
            RuleEntry {
                name: "restricted",
                params: "k,j",
                summary: "k-queen that enters the band |x-y|<=j only by rook moves",
                build: |p| match *p {
                    [k, band] => Some(QueenVariant::RestrictedStroll { k, band }),
                    _ => None,
                },
            },
        ];
        RuleRegistry { entries }
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|e| e.name)
    }

    /// Parses `name[:p1,p2]` into a validated variant.
    pub fn parse(&self, spec: &str) -> Result<QueenVariant> {
        let (name, params) = split_spec(spec)?;
        let entry = self.entries.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownName(name.clone()))?;
        let variant = (entry.build)(&params)
            .ok_or_else(|| Error::InvalidParameter(format!("`{name}` takes parameters `{}`", entry.params)))?;
        variant.validate()?;
        Ok(variant)
    }

    pub fn build(&self, spec: &str) -> Result<Arc<dyn MoveRule>> {
        rule_for(self.parse(spec)?)
    }

    /// One line per rule, for `--help` output.
    pub fn help(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let head = if e.params.is_empty() { e.name.to_string() } else { format!("{}:{}", e.name, e.params) };
            out.push_str(&format!("  {head:<16} {}\n", e.summary));
        }
        out
    }
}

impl Default for RuleRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64, y: u64) -> Position {
        Position::new(x, y)
    }

    #[test]
    fn registry_round_trips_display() {
        let reg = RuleRegistry::builtin();
        for v in QueenVariant::catalog() {
            assert_eq!(reg.parse(&v.to_string()).unwrap(), v);
        }
        assert_eq!(reg.parse("k-queen-dee:1").unwrap(), QueenVariant::QUEEN_DEE);
        assert!(matches!(reg.parse("empress"), Err(Error::UnknownName(_))));
        assert!(matches!(reg.parse("k-queen"), Err(Error::InvalidParameter(_))));
        assert!(matches!(reg.parse("restricted:2,2"), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn standard_from_three_three() {
        let moves = legal_moves(QueenVariant::Standard, p(3, 3)).unwrap();
        for q in [p(0, 0), p(1, 1), p(2, 2), p(0, 3), p(3, 0), p(3, 1)] {
            assert!(moves.contains(&q), "{q}");
        }
        assert!(!moves.contains(&p(1, 2)));
        assert_eq!(moves.len(), 9);
    }

    #[test]
    fn queen_bee_from_one_two() {
        let moves = legal_moves(QueenVariant::QueenBee, p(1, 2)).unwrap();
        assert_eq!(moves, vec![p(0, 1), p(0, 2), p(1, 0), p(1, 1)]);
    }

    #[test]
    fn queen_dee_from_one_three() {
        let moves = legal_moves(QueenVariant::QUEEN_DEE, p(1, 3)).unwrap();
        assert_eq!(moves, vec![p(0, 2), p(0, 3), p(1, 0), p(1, 1), p(1, 2), p(2, 0)]);
    }

    #[test]
    fn predicate_examples() {
        assert!(is_legal_move(QueenVariant::Standard, p(4, 7), p(4, 2)).unwrap());
        assert!(!is_legal_move(QueenVariant::TWO_QUEEN_DEE, p(2, 8), p(1, 3)).unwrap());
        assert!(is_legal_move(QueenVariant::QueenBee, p(3, 7), p(5, 4)).unwrap());
        assert!(!is_legal_move(QueenVariant::QueenBee, p(3, 7), p(6, 4)).unwrap());
    }

    #[test]
    fn corner_has_no_moves() {
        for v in QueenVariant::catalog() {
            assert!(legal_moves(v, Position::ORIGIN).unwrap().is_empty());
        }
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(legal_moves(QueenVariant::KQueen { k: 0 }, p(2, 2)).is_err());
        assert!(is_legal_move(QueenVariant::RestrictedStroll { k: 1, band: 1 }, p(2, 2), p(1, 1)).is_err());
    }
}
