//! The inversion table `(inv_1 : … : inv_n)` of a signed permutation: an
//! n-digit mixed-radix code whose digit `i` ranges over `[0, 2(n-i)+1]` and
//! whose digit sum is `inv_B`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{digit_at, SignedPermutation};

/// Mixed-radix digit tuple in the paper's index order: `digits[0] = inv_1`
/// (the widest digit, bound `2n-1`) down to `digits[n-1] = inv_n` (bound 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionTable {
    digits: Vec<u32>,
}

impl InversionTable {
    /// Validates digit bounds `0 <= digits[i] <= 2(n-i)+1`.
    pub fn new(digits: Vec<u32>) -> Result<Self> {
        let n = digits.len();
        for (idx, &d) in digits.iter().enumerate() {
            let bound = 2 * (n - idx - 1) as u64 + 1;
            if d as u64 > bound {
                return Err(Error::DigitOutOfRange {
                    index: idx + 1,
                    digit: d as u64,
                    bound,
                });
            }
        }
        Ok(Self { digits })
    }

    /// Inversion table of `w` by the direct per-position count: digit
    /// `inv_i` is governed by window position `n+1-i`.
    pub fn of(w: &SignedPermutation) -> Self {
        let n = w.n();
        let window = w.window();
        let digits = (0..n)
            .map(|i| digit_at(window, n - 1 - i) as u32)
            .collect();
        Self { digits }
    }

    pub fn n(&self) -> usize {
        self.digits.len()
    }

    /// Digits in table order, `inv_1` first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Digit sum, i.e. `inv_B` of the encoded permutation.
    pub fn sum(&self) -> u64 {
        self.digits.iter().map(|&d| d as u64).sum()
    }
}

impl SignedPermutation {
    pub fn inversion_table(&self) -> InversionTable {
        InversionTable::of(self)
    }
}

impl fmt::Display for InversionTable {
    /// Colon-separated in parentheses, e.g. `(3:7:8:7:0:3:1:0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, d) in self.digits.iter().enumerate() {
            if idx > 0 {
                f.write_str(":")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for InversionTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::BadToken {
                token: s.to_string(),
            })?;
        let mut digits = Vec::new();
        for tok in inner.split(':') {
            let d: u32 = tok.trim().parse().map_err(|_| Error::BadToken {
                token: tok.to_string(),
            })?;
            digits.push(d);
        }
        InversionTable::new(digits)
    }
}
