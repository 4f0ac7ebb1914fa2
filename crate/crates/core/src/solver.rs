//! Exact P/N classification by increasing Manhattan level.
//!
//! Every move strictly lowers `x + y`, so once all levels below `L` are
//! classified, a square at level `L` is a P-position exactly when none of
//! its moves lands on one. Squares within a level cannot reach each other
//! and are classified in parallel.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::position::Position;
use crate::rules::{rule_for, MoveRule, ReachIndex};
use crate::table::PPositionTable;
use crate::variant::QueenVariant;

/// Levels at least this wide are split across threads.
const PAR_THRESHOLD: u64 = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Enumerate every move of every square.
    Exhaustive,
    /// Answer reachability from the rule's line index.
    Indexed,
}

impl SearchMode {
    pub fn from_fast(fast: bool) -> Self {
        if fast {
            SearchMode::Indexed
        } else {
            SearchMode::Exhaustive
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SolverLimits {
    /// Deepest Manhattan level the solver will visit.
    pub max_level: u64,
    /// Largest number of squares a [`ClassifiedRegion`] may hold.
    pub max_cells: u64,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits { max_level: 1 << 20, max_cells: 1 << 27 }
    }
}

/// P/N status of every square with `x + y <= max_level`.
#[derive(Debug, Clone)]
pub struct ClassifiedRegion {
    max_level: u64,
    // levels[l][x] is the status of (x, l - x)
    levels: Vec<Vec<bool>>,
}

impl ClassifiedRegion {
    pub fn max_level(&self) -> u64 {
        self.max_level
    }

    /// `Some(true)` for a P-position, `None` outside the region.
    pub fn is_p(&self, p: Position) -> Option<bool> {
        self.levels.get(p.level() as usize).map(|l| l[p.x as usize])
    }

    /// All P-positions in level order, then by `x`.
    pub fn p_set(&self) -> Vec<Position> {
        self.levels
            .iter()
            .enumerate()
            .flat_map(|(l, row)| {
                row.iter().enumerate().filter(|(_, &p)| p).map(move |(x, _)| Position::new(x as u64, (l - x) as u64))
            })
            .collect()
    }
}

/// P-set held by the exhaustive search: one bitset over `x` per row.
#[derive(Default)]
struct PSet {
    rows: Vec<Vec<u64>>,
}

impl PSet {
    fn insert(&mut self, p: Position) {
        let (y, word) = (p.y as usize, (p.x / 64) as usize);
        if y >= self.rows.len() {
            self.rows.resize_with(y + 1, Vec::new);
        }
        let row = &mut self.rows[y];
        if word >= row.len() {
            row.resize(word + 1, 0);
        }
        row[word] |= 1 << (p.x % 64);
    }

    #[inline]
    fn contains(&self, p: Position) -> bool {
        self.rows.get(p.y as usize).and_then(|r| r.get((p.x / 64) as usize)).is_some_and(|w| w >> (p.x % 64) & 1 == 1)
    }
}

enum Engine<'a> {
    Exhaustive { rule: &'a dyn MoveRule, found: PSet },
    Indexed { index: Box<dyn ReachIndex> },
}

impl Engine<'_> {
    /// Classifies `level` and records its P-positions, returned sorted by `x`.
    fn step(&mut self, level: u64) -> Vec<Position> {
        let at = |x: u64| Position::new(x, level - x);
        match self {
            Engine::Exhaustive { rule, found } => {
                let xs = {
                    let found = &*found;
                    filter_level(0..=level, level, |x| !rule.any_move(at(x), &mut |q| found.contains(q)))
                };
                let ps: Vec<Position> = xs.into_iter().map(at).collect();
                ps.iter().for_each(|&p| found.insert(p));
                ps
            }
            Engine::Indexed { index } => {
                // classify x <= y only; the P-set is mirror symmetric
                let xs = filter_level(0..=level / 2, level, |x| !index.reaches(at(x)));
                let mut ps: Vec<Position> = xs.into_iter().map(at).collect();
                let mirrored: Vec<Position> = ps.iter().filter(|p| p.x != p.y).map(|p| p.mirror()).collect();
                ps.extend(mirrored);
                ps.sort_unstable();
                ps.iter().for_each(|&p| index.insert(p));
                ps
            }
        }
    }
}

fn filter_level<F>(xs: std::ops::RangeInclusive<u64>, level: u64, is_p: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync,
{
    if level >= PAR_THRESHOLD {
        xs.into_par_iter().filter(|&x| is_p(x)).collect()
    } else {
        xs.filter(|&x| is_p(x)).collect()
    }
}

pub struct Solver {
    rule: Arc<dyn MoveRule>,
    limits: SolverLimits,
}

impl Solver {
    pub fn new(variant: QueenVariant) -> Result<Self> {
        Ok(Solver::with_rule(rule_for(variant)?))
    }

    pub fn with_rule(rule: Arc<dyn MoveRule>) -> Self {
        Solver { rule, limits: SolverLimits::default() }
    }

    pub fn with_limits(mut self, limits: SolverLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn rule(&self) -> &dyn MoveRule {
        self.rule.as_ref()
    }

    fn engine(&self, mode: SearchMode) -> Engine<'_> {
        match mode {
            SearchMode::Exhaustive => Engine::Exhaustive { rule: self.rule.as_ref(), found: PSet::default() },
            SearchMode::Indexed => Engine::Indexed { index: self.rule.reach_index() },
        }
    }

    fn check_level(&self, level: u64) -> Result<()> {
        if level > self.limits.max_level {
            return Err(Error::Capacity { what: "Manhattan level", needed: level, limit: self.limits.max_level });
        }
        Ok(())
    }

    pub fn classify_region(&self, max_level: u64, mode: SearchMode) -> Result<ClassifiedRegion> {
        self.check_level(max_level)?;
        let cells = (max_level + 1).saturating_mul(max_level + 2) / 2;
        if cells > self.limits.max_cells {
            return Err(Error::Capacity { what: "region cells", needed: cells, limit: self.limits.max_cells });
        }
        let mut engine = self.engine(mode);
        let levels = (0..=max_level)
            .map(|level| {
                let mut row = vec![false; level as usize + 1];
                for p in engine.step(level) {
                    row[p.x as usize] = true;
                }
                row
            })
            .collect();
        Ok(ClassifiedRegion { max_level, levels })
    }

    /// The first `count` P-positions with `a <= b`, ordered by `a`.
    pub fn p_positions(&self, count: usize, mode: SearchMode) -> Result<PPositionTable> {
        if count == 0 {
            return Err(Error::InvalidParameter("count must be at least 1".into()));
        }
        let mut engine = self.engine(mode);
        let mut pairs = Vec::with_capacity(count);
        // the corner is level 0 and never reported
        engine.step(0);
        let mut level = 0;
        while pairs.len() < count {
            level += 1;
            self.check_level(level)?;
            pairs.extend(engine.step(level).into_iter().filter(|p| p.x <= p.y).map(|p| (p.x, p.y)));
        }
        pairs.sort_by_key(|p| p.0);
        pairs.truncate(count);
        Ok(PPositionTable::new(pairs))
    }
}

/// Exhaustive classification of every square up to `max_level`.
pub fn classify_region(variant: QueenVariant, max_level: u64) -> Result<ClassifiedRegion> {
    Solver::new(variant)?.classify_region(max_level, SearchMode::Exhaustive)
}

pub fn p_positions(variant: QueenVariant, count: usize, fast: bool) -> Result<PPositionTable> {
    Solver::new(variant)?.p_positions(count, SearchMode::from_fast(fast))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_set(v: QueenVariant, level: u64) -> Vec<(u64, u64)> {
        classify_region(v, level).unwrap().p_set().iter().map(|p| (p.x, p.y)).collect()
    }

    #[test]
    fn small_regions() {
        assert_eq!(p_set(QueenVariant::Standard, 3), vec![(0, 0), (1, 2), (2, 1)]);
        assert_eq!(p_set(QueenVariant::QueenBee, 4), vec![(0, 0), (1, 2), (2, 1)]);
        assert_eq!(p_set(QueenVariant::TWO_QUEEN_DEE, 4), vec![(0, 0), (1, 3), (3, 1)]);
    }

    #[test]
    fn indexed_region_matches() {
        for v in QueenVariant::catalog() {
            let s = Solver::new(v).unwrap();
            let a = s.classify_region(40, SearchMode::Exhaustive).unwrap();
            let b = s.classify_region(40, SearchMode::Indexed).unwrap();
            assert_eq!(a.p_set(), b.p_set(), "{v}");
        }
    }

    #[test]
    fn table_prefixes() {
        let bee = p_positions(QueenVariant::QueenBee, 5, false).unwrap();
        assert_eq!(bee.pairs(), &[(1, 2), (3, 6), (4, 8), (5, 10), (7, 14)]);
        let dee = p_positions(QueenVariant::QUEEN_DEE, 6, true).unwrap();
        assert_eq!(dee.pairs(), &[(1, 2), (3, 5), (4, 8), (6, 11), (7, 13), (9, 16)]);
        let two_one = p_positions(QueenVariant::WidenedQueen { scope: 2, stroll: 1 }, 5, false).unwrap();
        assert_eq!(two_one.pairs(), &[(1, 3), (2, 6), (4, 11), (5, 14), (7, 19)]);
        let wythoff = p_positions(QueenVariant::KQueen { k: 1 }, 3, true).unwrap();
        assert_eq!(wythoff.pairs(), &[(1, 2), (3, 5), (4, 7)]);
    }

    #[test]
    fn capacity_is_reported() {
        let s = Solver::new(QueenVariant::Standard)
            .unwrap()
            .with_limits(SolverLimits { max_level: 10, max_cells: 1 << 20 });
        assert!(matches!(s.p_positions(50, SearchMode::Indexed), Err(Error::Capacity { .. })));
        assert!(matches!(s.classify_region(11, SearchMode::Exhaustive), Err(Error::Capacity { .. })));
        let small =
            Solver::new(QueenVariant::Standard).unwrap().with_limits(SolverLimits { max_level: 100, max_cells: 20 });
        assert!(matches!(small.classify_region(10, SearchMode::Exhaustive), Err(Error::Capacity { .. })));
    }

    #[test]
    fn zero_count_rejected() {
        assert!(p_positions(QueenVariant::Standard, 0, true).is_err());
    }
}
