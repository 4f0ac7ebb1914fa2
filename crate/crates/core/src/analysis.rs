//! Cross-checks between tables and the coordinate-sum identities.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use num_rational::BigRational;

use crate::closed_forms::fraenkel_pairs;
use crate::closed_forms::{h, queen_dee_pairs, spaced_power_sum, two_queen_dee_pairs, vile_numbers};
use crate::error::{Error, Result};
use crate::morphic::{catalog, erase_letters, table_from};
use crate::table::PPositionTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    /// 1-based index of the first differing pair.
    MismatchAt(usize),
}

pub fn check_equivalence(left: &PPositionTable, right: &PPositionTable, count: usize) -> Result<Equivalence> {
    left.require(count)?;
    right.require(count)?;
    let mismatch = left.pairs()[..count].iter().zip(&right.pairs()[..count]).position(|(l, r)| l != r);
    Ok(mismatch.map_or(Equivalence::Equal, |i| Equivalence::MismatchAt(i + 1)))
}

/// `r = a_{b_n} - a_n - b_n` at index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residual {
    pub n: u64,
    pub r: i64,
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} r={}", self.n, self.r)
    }
}

#[derive(Debug, Clone, Default)]
pub struct SumIdentityReport {
    pub residuals: Vec<Residual>,
    /// Residuals outside `{0, -1}`.
    pub violations: Vec<Residual>,
}

impl SumIdentityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn max_abs(&self) -> u64 {
        self.residuals.iter().map(|r| r.r.unsigned_abs()).max().unwrap_or(0)
    }
}

/// Evaluates `a_{b_n} ∈ {a_n + b_n, a_n + b_n - 1}` for `n = 1..=n_max`.
pub fn check_sum_identity<F>(pairs: &PPositionTable, a_lookup: F, n_max: usize) -> Result<SumIdentityReport>
where
    F: Fn(u64) -> Result<u64>,
{
    pairs.require(n_max)?;
    let mut report = SumIdentityReport::default();
    for (n, a, b) in pairs.iter().take(n_max) {
        let r = a_lookup(b)? as i64 - a as i64 - b as i64;
        let res = Residual { n: n as u64, r };
        if r != 0 && r != -1 {
            report.violations.push(res);
        }
        report.residuals.push(res);
    }
    Ok(report)
}

/// Runs [`check_sum_identity`] with a table long enough to look up every `a_{b_n}`,
/// produced by `table(count)`. Second coordinates must be increasing.
pub fn sum_identity_from_generator<F>(table: F, n_max: usize) -> Result<SumIdentityReport>
where
    F: Fn(usize) -> Result<PPositionTable>,
{
    let head = table(n_max)?;
    let need = head.pairs().iter().map(|p| p.1).max().unwrap_or(0) as usize;
    let long = table(need.max(n_max))?;
    check_sum_identity(&head, |i| long.a(i), n_max)
}

/// Targets with a long-table generator for the identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumIdentityTarget {
    QueenDee,
    TwoQueenDee,
    QueenBee,
    TwoOne,
}

impl SumIdentityTarget {
    pub fn parse(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "queen-dee" => Ok(SumIdentityTarget::QueenDee),
            "2-queen-dee" => Ok(SumIdentityTarget::TwoQueenDee),
            "queen-bee" => Ok(SumIdentityTarget::QueenBee),
            "two-one" | "widened:2,1" => Ok(SumIdentityTarget::TwoOne),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }

    pub fn check(self, n_max: usize) -> Result<SumIdentityReport> {
        match self {
            SumIdentityTarget::QueenDee => sum_identity_from_generator(queen_dee_pairs, n_max),
            SumIdentityTarget::TwoQueenDee => sum_identity_from_generator(|c| Ok(two_queen_dee_pairs(c)), n_max),
            SumIdentityTarget::QueenBee => {
                sum_identity_from_generator(|c| Ok(crate::closed_forms::queen_bee_pairs(c)), n_max)
            }
            SumIdentityTarget::TwoOne => sum_identity_from_generator(|c| fraenkel_pairs(2, 2, c), n_max),
        }
    }
}

/// Queen Bee residuals `vile(2 vile(n)) - 3 vile(n)` for `n = 1..=n_max`.
pub fn queen_bee_residuals(n_max: u64) -> Vec<Residual> {
    if n_max == 0 {
        return Vec::new();
    }
    // vile(n) <= 3n/2 + 1, so index 2 vile(n_max) needs ~ 3 vile(n_max) values
    let head: Vec<u64> = vile_numbers().take(n_max as usize).collect();
    let need = 2 * head[head.len() - 1] as usize;
    let mut vile: Vec<u64> = head;
    vile.extend(vile_numbers().skip(vile.len()).take(need.saturating_sub(vile.len())));
    (1..=n_max)
        .map(|n| {
            let a = vile[n as usize - 1];
            let r = vile[2 * a as usize - 1] as i64 - 3 * a as i64;
            Residual { n, r }
        })
        .collect()
}

/// Least `n` attaining each residual value.
pub fn first_occurrences(residuals: &[Residual]) -> BTreeMap<i64, u64> {
    let mut first = BTreeMap::new();
    for res in residuals {
        first.entry(res.r).or_insert(res.n);
    }
    first
}

/// Least `n` attaining each value of `|r|`.
pub fn first_magnitudes(residuals: &[Residual]) -> BTreeMap<u64, u64> {
    let mut first = BTreeMap::new();
    for res in residuals {
        first.entry(res.r.unsigned_abs()).or_insert(res.n);
    }
    first
}

pub fn scan_queen_bee_residuals(n_max: u64) -> BTreeMap<i64, u64> {
    first_occurrences(&queen_bee_residuals(n_max))
}

/// Writes `n,r` rows with a header, LF line endings.
pub fn write_residual_csv<W: Write>(out: &mut W, residuals: &[Residual]) -> io::Result<()> {
    writeln!(out, "n,r")?;
    for res in residuals {
        writeln!(out, "{},{}", res.n, res.r)?;
    }
    Ok(())
}

/// Checks `a_n = β_n - α_n`, `b_n = β_n + α_n`, `b_n - a_n = 2 α_n` and
/// `b_n + a_n = 2 β_n` between a Queen Dee table `(α, β)` and a 2-Queen Dee
/// table `(a, b)`.
pub fn transfer_holds(queen_dee: &PPositionTable, two_dee: &PPositionTable, count: usize) -> Result<bool> {
    queen_dee.require(count)?;
    two_dee.require(count)?;
    Ok(queen_dee.pairs()[..count].iter().zip(&two_dee.pairs()[..count]).all(|(&(al, be), &(a, b))| {
        be.checked_sub(al) == Some(a) && be + al == b && b.checked_sub(a) == Some(2 * al) && b + a == 2 * be
    }))
}

/// Queen Dee table read off the tribonacci word without its `c`s.
pub fn queen_dee_from_word(count: usize) -> Result<PPositionTable> {
    let t = catalog("tribonacci", &[])?;
    table_from(|len| Ok(erase_letters(&t.fixed_point('a', len)?, &['c'])), 'a', 'b', count)
}

/// [`transfer_holds`] between the word-coded Queen Dee table and the mex
/// recursion for the 2-Queen Dee.
pub fn check_transfer(count: usize) -> Result<bool> {
    transfer_holds(&queen_dee_from_word(count)?, &two_queen_dee_pairs(count), count)
}

/// Sets built from the first `n - 1` pairs plus the corner, answering
/// whether `(n, x, y)` is a good triple.
struct GoodSets {
    coords: Vec<bool>,
    // values within distance 1 of some difference or sum
    near_lines: Vec<bool>,
}

impl GoodSets {
    fn new() -> Self {
        let mut s = GoodSets { coords: Vec::new(), near_lines: Vec::new() };
        s.add(0, 0);
        s
    }

    fn add(&mut self, a: u64, b: u64) {
        set(&mut self.coords, a);
        set(&mut self.coords, b);
        for line in [b - a, b + a] {
            for v in line.saturating_sub(1)..=line + 1 {
                set(&mut self.near_lines, v);
            }
        }
    }

    fn good(&self, x: u64, y: u64) -> bool {
        x < y && !get(&self.coords, x) && !get(&self.coords, y) && !get(&self.near_lines, y - x)
    }
}

fn set(bits: &mut Vec<bool>, i: u64) {
    let i = i as usize;
    if i >= bits.len() {
        bits.resize(i + 1, false);
    }
    bits[i] = true;
}

fn get(bits: &[bool], i: u64) -> bool {
    bits.get(i as usize).copied().unwrap_or(false)
}

/// First failing good-triple check, as `(n, description)`.
///
/// For each `n <= count`: `(n, a_n, b_n)` is good; no good `(n, x, y)` has
/// `x < a_n` (searching `y <= b_n`); no good `(n, a_n, y)` has `y < b_n`.
pub fn good_triple_failure(table: &PPositionTable, count: usize) -> Result<Option<(usize, String)>> {
    table.require(count)?;
    let mut sets = GoodSets::new();
    for (n, a, b) in table.iter().take(count) {
        if !sets.good(a, b) {
            return Ok(Some((n, format!("({n},{a},{b}) is not good"))));
        }
        for x in 0..a {
            if let Some(y) = (x + 1..=b).find(|&y| sets.good(x, y)) {
                return Ok(Some((n, format!("({n},{x},{y}) is good with {x} < a_n = {a}"))));
            }
        }
        if let Some(y) = (a + 1..b).find(|&y| sets.good(a, y)) {
            return Ok(Some((n, format!("({n},{a},{y}) is good with {y} < b_n = {b}"))));
        }
        sets.add(a, b);
    }
    Ok(None)
}

pub fn check_good_triples(table: &PPositionTable, count: usize) -> Result<bool> {
    Ok(good_triple_failure(table, count)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `b = 2a`
    Double,
    /// `b = a + k n`
    Holladay { k: u64 },
    /// `b = 2a + n`
    DoublePlusIndex,
    /// `b = a + k n - j`
    Restricted { k: u64, j: u64 },
}

impl Relation {
    /// Parses `b=2a`, `b=2a+n`, `b=a+n`, `b=a+3n`, `b=a+3n-1`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unrecognised relation `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rhs = compact.strip_prefix("b=").ok_or_else(bad)?;
        match rhs {
            "2a" => return Ok(Relation::Double),
            "2a+n" => return Ok(Relation::DoublePlusIndex),
            _ => {}
        }
        let rest = rhs.strip_prefix("a+").ok_or_else(bad)?;
        let (kn, j) = match rest.split_once('-') {
            Some((kn, j)) => (kn, Some(j.parse::<u64>().map_err(|_| bad())?)),
            None => (rest, None),
        };
        let k_str = kn.strip_suffix('n').ok_or_else(bad)?;
        let k = if k_str.is_empty() { 1 } else { k_str.parse::<u64>().map_err(|_| bad())? };
        Ok(match j {
            None | Some(0) => Relation::Holladay { k },
            Some(j) => Relation::Restricted { k, j },
        })
    }

    pub fn holds_at(self, n: u64, a: u64, b: u64) -> bool {
        match self {
            Relation::Double => b == 2 * a,
            Relation::Holladay { k } => b == a + k * n,
            Relation::DoublePlusIndex => b == 2 * a + n,
            Relation::Restricted { k, j } => b + j == a + k * n,
        }
    }
}

pub fn check_relation(table: &PPositionTable, relation: Relation, count: usize) -> bool {
    count <= table.len() && table.iter().take(count).all(|(n, a, b)| relation.holds_at(n as u64, a, b))
}

/// The first `count` pairs repeat no value and cover every integer in
/// `1..=a_count`.
pub fn check_complementary(table: &PPositionTable, count: usize) -> bool {
    if count == 0 || count > table.len() {
        return false;
    }
    let mut values: Vec<u64> = table.pairs()[..count].iter().flat_map(|&(a, b)| [a, b]).collect();
    values.sort_unstable();
    if values.windows(2).any(|w| w[0] == w[1]) || values[0] == 0 {
        return false;
    }
    let a_last = table.pairs()[count - 1].0;
    values.iter().take_while(|&&v| v <= a_last).copied().eq(1..=a_last)
}

/// `h` of `4^first + 4^(first + gap) + ...` for `1..=max_terms` summands.
/// With odd `first` and even `gap` the exponents are all odd; the values
/// approach `terms / 3`.
pub fn spaced_h_values(first: u32, gap: u32, max_terms: u32) -> Vec<(u32, BigRational)> {
    (1..=max_terms).map(|k| (k, h(&spaced_power_sum(first, gap, k)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::queen_bee_pairs;

    const TABLE2: [(u64, u64); 15] = [
        (1, 3),
        (2, 8),
        (4, 12),
        (5, 17),
        (6, 20),
        (7, 25),
        (9, 29),
        (10, 34),
        (11, 39),
        (13, 43),
        (14, 48),
        (15, 51),
        (16, 56),
        (18, 60),
        (19, 65),
    ];

    #[test]
    fn equivalence() {
        let t2 = PPositionTable::new(TABLE2.to_vec());
        assert_eq!(check_equivalence(&t2, &two_queen_dee_pairs(15), 15).unwrap(), Equivalence::Equal);
        assert_eq!(check_equivalence(&queen_bee_pairs(15), &t2, 15).unwrap(), Equivalence::MismatchAt(1));
        assert!(matches!(check_equivalence(&t2, &queen_bee_pairs(3), 15), Err(Error::ShortTable { .. })));
    }

    #[test]
    fn sum_identity_first_residuals() {
        let report = SumIdentityTarget::QueenDee.check(2).unwrap();
        assert_eq!(report.residuals, vec![Residual { n: 1, r: 0 }, Residual { n: 2, r: -1 }]);
        let short = queen_dee_pairs(3).unwrap();
        assert!(matches!(check_sum_identity(&short, |i| short.a(i), 3), Err(Error::LookupOutOfRange { .. })));
    }

    #[test]
    fn queen_bee_scan_small() {
        assert_eq!(queen_bee_residuals(1), vec![Residual { n: 1, r: 0 }]);
        // against the table-based evaluation
        let long = queen_bee_pairs(3000);
        let direct = check_sum_identity(&long, |i| long.a(i), 500).unwrap();
        assert_eq!(direct.residuals, queen_bee_residuals(500));
        // a_5 = 7, b_5 = 14, a_14 = 20
        assert_eq!(queen_bee_residuals(5)[4], Residual { n: 5, r: -1 });
        let mags = first_magnitudes(&queen_bee_residuals(200));
        assert_eq!(mags.get(&1), Some(&5));
        assert_eq!(mags.get(&2), Some(&20));
    }

    #[test]
    fn transfer_examples() {
        let qd = queen_dee_from_word(15).unwrap();
        let two = two_queen_dee_pairs(15);
        assert_eq!(qd.get(10), Some((15, 28)));
        assert_eq!(two.get(10), Some((13, 43)));
        assert!(transfer_holds(&qd, &two, 15).unwrap());
        assert!(check_transfer(15).unwrap());
    }

    #[test]
    fn good_triples() {
        let t = PPositionTable::new(TABLE2.to_vec());
        assert!(check_good_triples(&t, 15).unwrap());
        let sets = GoodSets::new();
        assert!(sets.good(1, 3));
        assert!(!(1..10).any(|y| sets.good(0, y)));
        let mut corrupted = TABLE2.to_vec();
        let (b2, b3) = (corrupted[1].1, corrupted[2].1);
        corrupted[1].1 = b3;
        corrupted[2].1 = b2;
        assert!(!check_good_triples(&PPositionTable::new(corrupted), 15).unwrap());
    }

    #[test]
    fn relations() {
        assert_eq!(Relation::parse("b=2a").unwrap(), Relation::Double);
        assert_eq!(Relation::parse("b = a + n").unwrap(), Relation::Holladay { k: 1 });
        assert_eq!(Relation::parse("b=a+3n-1").unwrap(), Relation::Restricted { k: 3, j: 1 });
        assert_eq!(Relation::parse("b=2a+n").unwrap(), Relation::DoublePlusIndex);
        assert!(Relation::parse("a=2b").is_err());
        assert!(check_relation(&queen_bee_pairs(15), Relation::Double, 15));
        assert!(!check_relation(&queen_bee_pairs(15), Relation::Double, 16));
        let wythoff = crate::closed_forms::holladay_pairs(1, 15);
        assert!(check_relation(&wythoff, Relation::Holladay { k: 1 }, 15));
    }

    #[test]
    fn complementary() {
        assert!(check_complementary(&queen_bee_pairs(15), 15));
        assert!(check_complementary(&PPositionTable::new(TABLE2.to_vec()), 15));
        let dup = PPositionTable::new(vec![(1, 2), (2, 5)]);
        assert!(!check_complementary(&dup, 2));
        let gap = PPositionTable::new(vec![(1, 2), (4, 7)]);
        assert!(!check_complementary(&gap, 2));
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_residual_csv(&mut buf, &queen_bee_residuals(2)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("n,r\n1,0\n"));
        assert_eq!(text.lines().count(), 3);
    }
}
