//! Named table sources: the retrograde solver, closed forms, and morphic
//! words, all behind [`TableSource`] so they can be compared freely.
//!
//! Grammar: `solve:<rule>`, `formula:<name>[:params]`, `morphic:<name>[:params]`.

use crate::closed_forms::{
    fraenkel_pairs, holladay_pairs, queen_bee_pairs, queen_dee_pairs, restricted_pairs, two_queen_dee_pairs,
};
use crate::error::{Error, Result};
use crate::morphic::{catalog, erase_letters, table_from, Morphism};
use crate::rules::RuleRegistry;
use crate::solver::{SearchMode, Solver};
use crate::table::PPositionTable;
use crate::variant::{split_spec, QueenVariant};

pub trait TableSource: Send + Sync {
    fn describe(&self) -> String;
    fn table(&self, count: usize) -> Result<PPositionTable>;
}

pub struct SolveSource {
    solver: Solver,
    variant: QueenVariant,
    mode: SearchMode,
}

impl SolveSource {
    pub fn new(variant: QueenVariant, mode: SearchMode) -> Result<Self> {
        Ok(SolveSource { solver: Solver::new(variant)?, variant, mode })
    }
}

impl TableSource for SolveSource {
    fn describe(&self) -> String {
        format!("solve:{}", self.variant)
    }

    fn table(&self, count: usize) -> Result<PPositionTable> {
        self.solver.p_positions(count, self.mode)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    QueenBee,
    TwoQueenDee,
    QueenDee,
    Holladay { k: u64 },
    Fraenkel { k: u64, j: u64 },
    Restricted { k: u64, j: u64 },
}

impl Formula {
    pub const HELP: &'static str = "  queen-bee        (vile(n), 2 vile(n))
  2-queen-dee      mex / mex2 recursion
  queen-dee        transfer of the 2-queen-dee table
  holladay:k       Beatty pairs (floor(n psi_k), floor(n psi_k) + k n)
  fraenkel:k,j     morphism a -> a^k b, b -> a^j
  restricted:k,j   morphism a -> a^(k-j) b a^j, b -> a
";

    pub fn parse(spec: &str) -> Result<Self> {
        let (name, params) = split_spec(spec)?;
        let bad = || Error::InvalidParameter(format!("bad parameters for formula `{name}`"));
        let f = match (name.as_str(), params.as_slice()) {
            ("queen-bee", []) => Formula::QueenBee,
            ("2-queen-dee", []) => Formula::TwoQueenDee,
            ("queen-dee", []) => Formula::QueenDee,
            ("holladay", &[k]) if k >= 1 => Formula::Holladay { k },
            ("fraenkel", &[k, j]) if k >= 1 && j >= 1 => Formula::Fraenkel { k, j },
            ("restricted", &[k, j]) if k > j => Formula::Restricted { k, j },
            ("queen-bee" | "2-queen-dee" | "queen-dee" | "holladay" | "fraenkel" | "restricted", _) => {
                return Err(bad())
            }
            _ => return Err(Error::UnknownName(name)),
        };
        Ok(f)
    }
}

impl TableSource for Formula {
    fn describe(&self) -> String {
        match *self {
            Formula::QueenBee => "formula:queen-bee".into(),
            Formula::TwoQueenDee => "formula:2-queen-dee".into(),
            Formula::QueenDee => "formula:queen-dee".into(),
            Formula::Holladay { k } => format!("formula:holladay:{k}"),
            Formula::Fraenkel { k, j } => format!("formula:fraenkel:{k},{j}"),
            Formula::Restricted { k, j } => format!("formula:restricted:{k},{j}"),
        }
    }

    fn table(&self, count: usize) -> Result<PPositionTable> {
        match *self {
            Formula::QueenBee => Ok(queen_bee_pairs(count)),
            Formula::TwoQueenDee => Ok(two_queen_dee_pairs(count)),
            Formula::QueenDee => queen_dee_pairs(count),
            Formula::Holladay { k } => Ok(holladay_pairs(k, count)),
            Formula::Fraenkel { k, j } => fraenkel_pairs(k, j, count),
            Formula::Restricted { k, j } => restricted_pairs(k, j, count),
        }
    }
}

/// Table read off the fixed point of a morphism from seed `a`, after
/// deleting some letters.
#[derive(Debug, Clone)]
pub struct MorphicSource {
    name: String,
    morphism: Morphism,
    erase: Vec<char>,
    letters: (char, char),
}

impl MorphicSource {
    pub fn new(name: impl Into<String>, morphism: Morphism, erase: Vec<char>, letters: (char, char)) -> Self {
        MorphicSource { name: name.into(), morphism, erase, letters }
    }

    pub const HELP: &'static str = "  fibonacci, period-doubling, two-one, holladay:k, fraenkel:k,j, restricted:k,j
                   letters a,b of the fixed point
  tribonacci-erase-a, tribonacci-erase-b, tribonacci-erase-c
                   the tribonacci word without one letter, read on the other two
";

    pub fn parse(spec: &str) -> Result<Self> {
        let (name, params) = split_spec(spec)?;
        if let Some(letter) = name.strip_prefix("tribonacci-erase-") {
            let letters = match letter {
                "a" => ('b', 'c'),
                "b" => ('a', 'c'),
                "c" => ('a', 'b'),
                _ => return Err(Error::UnknownName(name)),
            };
            let erased = letter.chars().next().unwrap_or('c');
            return Ok(MorphicSource::new(&name, catalog("tribonacci", &[])?, vec![erased], letters));
        }
        let morphism = catalog(&name, &params)?;
        if morphism.alphabet().count() != 2 {
            return Err(Error::InvalidParameter(format!("`{name}` needs an erased letter to give a table")));
        }
        let label = if params.is_empty() {
            name
        } else {
            format!("{name}:{}", params.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
        };
        Ok(MorphicSource::new(label, morphism, Vec::new(), ('a', 'b')))
    }
}

impl TableSource for MorphicSource {
    fn describe(&self) -> String {
        format!("morphic:{}", self.name)
    }

    fn table(&self, count: usize) -> Result<PPositionTable> {
        let make = |len: usize| -> Result<_> {
            let w = self.morphism.fixed_point('a', len)?;
            Ok(erase_letters(&w, &self.erase))
        };
        table_from(make, self.letters.0, self.letters.1, count)
    }
}

/// Resolves `kind:name[:params]` into a table source.
pub struct SourceRegistry {
    rules: RuleRegistry,
}

impl SourceRegistry {
    pub fn new() -> Self {
        SourceRegistry { rules: RuleRegistry::builtin() }
    }

    pub fn rules(&self) -> &RuleRegistry {
        &self.rules
    }

    pub fn solve(&self, rule: &str, mode: SearchMode) -> Result<Box<dyn TableSource>> {
        Ok(Box::new(SolveSource::new(self.rules.parse(rule)?, mode)?))
    }

    pub fn parse(&self, spec: &str) -> Result<Box<dyn TableSource>> {
        let (kind, rest) = spec.split_once(':').ok_or_else(|| {
            Error::InvalidParameter(format!("`{spec}` lacks a `solve:`, `formula:` or `morphic:` prefix"))
        })?;
        match kind {
            "solve" => self.solve(rest, SearchMode::Indexed),
            "solve-exhaustive" => self.solve(rest, SearchMode::Exhaustive),
            "formula" => Ok(Box::new(Formula::parse(rest)?)),
            "morphic" => Ok(Box::new(MorphicSource::parse(rest)?)),
            _ => Err(Error::UnknownName(kind.to_string())),
        }
    }
}

impl Default for SourceRegistry {
    fn default() -> Self {
        Self::new()
    }
}
