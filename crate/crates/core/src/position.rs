use std::fmt;

/// A square of the board in the nonnegative quadrant. `x` is the column,
/// `y` the row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub x: u64,
    pub y: u64,
}

impl Position {
    pub const ORIGIN: Position = Position { x: 0, y: 0 };

    #[inline]
    pub const fn new(x: u64, y: u64) -> Self {
        Position { x, y }
    }

    /// Manhattan distance to the corner; every move strictly decreases it.
    #[inline]
    pub const fn level(self) -> u64 {
        self.x + self.y
    }

    /// Reflection across the main diagonal.
    #[inline]
    pub const fn mirror(self) -> Self {
        Position { x: self.y, y: self.x }
    }

    /// Signed diagonal index `y - x`.
    #[inline]
    pub fn diff(self) -> i64 {
        self.y as i64 - self.x as i64
    }
}

impl From<(u64, u64)> for Position {
    fn from((x, y): (u64, u64)) -> Self {
        Position { x, y }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}
