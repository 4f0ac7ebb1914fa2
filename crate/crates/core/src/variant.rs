use std::fmt;

use crate::error::{Error, Result};

/// Move-rule specification for one of the queens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QueenVariant {
    /// Wythoff's queen: row, column and diagonal.
    Standard,
    /// Holladay's queen, which may drift up to `k - 1` off its diagonal.
    KQueen { k: u64 },
    /// Diagonal paths may bounce perpendicularly off a wall.
    QueenBee,
    /// A `k`-queen whose diagonal path may reflect once onto the anti-diagonal.
    KQueenDee { k: u64 },
    /// Widened diagonal of scope `j` with off-diagonal stroll `m`.
    WidenedQueen { scope: u64, stroll: u64 },
    /// A `k`-queen that may only enter the band `|x - y| <= band` by a
    /// row or column move.
    RestrictedStroll { k: u64, band: u64 },
}

impl QueenVariant {
    pub const QUEEN_DEE: QueenVariant = QueenVariant::KQueenDee { k: 1 };
    pub const TWO_QUEEN_DEE: QueenVariant = QueenVariant::KQueenDee { k: 2 };

    pub fn validate(&self) -> Result<()> {
        match *self {
            QueenVariant::Standard | QueenVariant::QueenBee => Ok(()),
            QueenVariant::KQueen { k } | QueenVariant::KQueenDee { k } if k == 0 => {
                Err(Error::InvalidParameter(format!("{self}: k must be at least 1")))
            }
            QueenVariant::KQueen { .. } | QueenVariant::KQueenDee { .. } => Ok(()),
            QueenVariant::WidenedQueen { scope, stroll } if scope == 0 || stroll == 0 => {
                Err(Error::InvalidParameter(format!("{self}: scope and stroll must be at least 1")))
            }
            QueenVariant::WidenedQueen { .. } => Ok(()),
            QueenVariant::RestrictedStroll { k, band } if k == 0 || band >= k => {
                Err(Error::InvalidParameter(format!("{self}: need k > band >= 0")))
            }
            QueenVariant::RestrictedStroll { .. } => Ok(()),
        }
    }

    /// The variants whose tables appear in the catalog of queens, in a fixed order.
    pub fn catalog() -> Vec<QueenVariant> {
        vec![
            QueenVariant::Standard,
            QueenVariant::KQueen { k: 2 },
            QueenVariant::KQueen { k: 3 },
            QueenVariant::QueenBee,
            QueenVariant::QUEEN_DEE,
            QueenVariant::TWO_QUEEN_DEE,
            QueenVariant::WidenedQueen { scope: 2, stroll: 1 },
            QueenVariant::RestrictedStroll { k: 2, band: 1 },
            QueenVariant::RestrictedStroll { k: 3, band: 1 },
            QueenVariant::RestrictedStroll { k: 3, band: 2 },
        ]
    }
}

impl fmt::Display for QueenVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            QueenVariant::Standard => write!(f, "standard"),
            QueenVariant::KQueen { k } => write!(f, "k-queen:{k}"),
            QueenVariant::QueenBee => write!(f, "queen-bee"),
            QueenVariant::KQueenDee { k: 1 } => write!(f, "queen-dee"),
            QueenVariant::KQueenDee { k: 2 } => write!(f, "2-queen-dee"),
            QueenVariant::KQueenDee { k } => write!(f, "k-queen-dee:{k}"),
            QueenVariant::WidenedQueen { scope, stroll } => write!(f, "widened:{scope},{stroll}"),
            QueenVariant::RestrictedStroll { k, band } => write!(f, "restricted:{k},{band}"),
        }
    }
}

/// Splits `name[:p1,p2,...]` into the name and its integer parameters.
pub fn split_spec(spec: &str) -> Result<(String, Vec<u64>)> {
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let name = name.trim().to_ascii_lowercase().replace('_', "-");
    let params = match params {
        None => Vec::new(),
        Some(p) => p
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidParameter(format!("`{s}` in `{spec}` is not a nonnegative integer")))
            })
            .collect::<Result<_>>()?,
    };
    Ok((name, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_errors() {
        assert!(QueenVariant::KQueen { k: 0 }.validate().is_err());
        assert!(QueenVariant::KQueenDee { k: 0 }.validate().is_err());
        assert!(QueenVariant::WidenedQueen { scope: 0, stroll: 1 }.validate().is_err());
        assert!(QueenVariant::WidenedQueen { scope: 2, stroll: 0 }.validate().is_err());
        assert!(QueenVariant::RestrictedStroll { k: 2, band: 2 }.validate().is_err());
        assert!(QueenVariant::RestrictedStroll { k: 2, band: 0 }.validate().is_ok());
        for v in QueenVariant::catalog() {
            v.validate().unwrap();
        }
    }

    #[test]
    fn split() {
        assert_eq!(split_spec("widened:2,1").unwrap(), ("widened".into(), vec![2, 1]));
        assert_eq!(split_spec("Queen_Bee").unwrap(), ("queen-bee".into(), vec![]));
        assert!(split_spec("k-queen:x").is_err());
    }
}
