use crate::error::{Error, Result};

/// Paired sequences `(a_n, b_n)`, `n >= 1`, with `a_n <= b_n`, sorted by
/// `a_n`. The corner `(0, 0)` is index zero and is never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PPositionTable {
    pairs: Vec<(u64, u64)>,
}

impl PPositionTable {
    pub fn new(pairs: Vec<(u64, u64)>) -> Self {
        PPositionTable { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pair number `n`, 1-based.
    pub fn get(&self, n: usize) -> Option<(u64, u64)> {
        n.checked_sub(1).and_then(|i| self.pairs.get(i).copied())
    }

    /// `a_n` with `a_0 = 0`.
    pub fn a(&self, n: u64) -> Result<u64> {
        self.lookup(n).map(|p| p.0)
    }

    /// `b_n` with `b_0 = 0`.
    pub fn b(&self, n: u64) -> Result<u64> {
        self.lookup(n).map(|p| p.1)
    }

    fn lookup(&self, n: u64) -> Result<(u64, u64)> {
        if n == 0 {
            return Ok((0, 0));
        }
        self.pairs.get(n as usize - 1).copied().ok_or(Error::LookupOutOfRange { index: n, available: self.pairs.len() })
    }

    pub fn truncated(&self, count: usize) -> Result<PPositionTable> {
        self.require(count)?;
        Ok(PPositionTable { pairs: self.pairs[..count].to_vec() })
    }

    pub fn require(&self, count: usize) -> Result<()> {
        if self.pairs.len() < count {
            Err(Error::ShortTable { len: self.pairs.len(), needed: count })
        } else {
            Ok(())
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64, u64)> + '_ {
        self.pairs.iter().enumerate().map(|(i, &(a, b))| (i + 1, a, b))
    }

    /// Two whitespace-separated rows, `a` values over `b` values, in the
    /// layout of a printed table.
    pub fn render_rows(&self) -> String {
        let row =
            |pick: fn(&(u64, u64)) -> u64| self.pairs.iter().map(|p| pick(p).to_string()).collect::<Vec<_>>().join(" ");
        format!("{}\n{}\n", row(|p| p.0), row(|p| p.1))
    }
}

impl From<Vec<(u64, u64)>> for PPositionTable {
    fn from(pairs: Vec<(u64, u64)>) -> Self {
        PPositionTable::new(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_lookup() {
        let t = PPositionTable::new(vec![(1, 2), (3, 5)]);
        assert_eq!(t.a(0).unwrap(), 0);
        assert_eq!(t.b(2).unwrap(), 5);
        assert!(matches!(t.a(3), Err(Error::LookupOutOfRange { index: 3, .. })));
        assert_eq!(t.get(1), Some((1, 2)));
        assert_eq!(t.get(0), None);
        assert_eq!(t.render_rows(), "1 3\n2 5\n");
    }
}
