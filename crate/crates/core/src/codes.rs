//! The bijection `B_n ↔ 𝒯_{2,n} = [0,2n-1] × [0,2n-3] × ⋯ × [0,1]` as an
//! executable code, plus its mixed-radix linearization onto `[0, 2ⁿ·n!)`.
//!
//! Encoding is the inversion table of Theorem-3 form; decoding inverts it one
//! position at a time. The digit governed by window position `p` (1-based)
//! determines value and sign among the still-unused absolute values: a digit
//! `d <= p-1` means a positive entry with exactly `d` larger values to its
//! left, i.e. the `(d+1)`-th largest unused value; a digit `d >= p` means a
//! negative entry with `d - p` smaller values to its left, i.e. the
//! `(d-p+1)`-th smallest unused value.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::invtab::InversionTable;
use crate::perm::SignedPermutation;

/// Digit bounds `(2n-1, 2n-3, …, 3, 1)` of `𝒯_{2,n}` in table order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadixBounds {
    n: usize,
}

impl RadixBounds {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    /// Bound of digit `i` (1-based table index): `2(n-i)+1`.
    pub fn bound(&self, i: usize) -> u64 {
        debug_assert!(i >= 1 && i <= self.n);
        2 * (self.n - i) as u64 + 1
    }

    /// Radix of digit `i`, one more than its bound.
    pub fn radix(&self, i: usize) -> u64 {
        self.bound(i) + 1
    }

    pub fn bounds(&self) -> Vec<u64> {
        (1..=self.n).map(|i| self.bound(i)).collect()
    }

    /// Product of all radices: the group order `2ⁿ·n!`.
    pub fn order(&self) -> BigUint {
        group_order(self.n)
    }
}

/// `|B_n| = 2ⁿ·n!`.
pub fn group_order(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for p in 1..=n as u64 {
        acc *= 2 * p;
    }
    acc
}

/// `|B_n|` in machine width; `None` once `2ⁿ·n!` overflows `u64` (n > 16).
pub fn group_order_u64(n: usize) -> Option<u64> {
    let mut acc = 1u64;
    for p in 1..=n as u64 {
        acc = acc.checked_mul(2 * p)?;
    }
    Some(acc)
}

/// Forward direction of the bijection; identical to the inversion table.
pub fn encode(w: &SignedPermutation) -> InversionTable {
    InversionTable::of(w)
}

/// Inverse direction: rebuilds the window right to left from the digits.
pub fn decode(t: &InversionTable) -> SignedPermutation {
    let n = t.n();
    let digits = t.digits();
    // Unused absolute values, ascending.
    let mut avail: Vec<i32> = (1..=n as i32).collect();
    let mut window = vec![0i32; n];
    for p in (1..=n).rev() {
        let d = digits[n - p] as usize; // table index i = n+1-p
        if d < p {
            let v = avail.remove(avail.len() - 1 - d);
            window[p - 1] = v;
        } else {
            let v = avail.remove(d - p);
            window[p - 1] = -v;
        }
    }
    SignedPermutation::from_window_unchecked(window)
}

/// Mixed-radix value of the inversion table, `inv_1` most significant.
pub fn rank(w: &SignedPermutation) -> BigUint {
    let t = encode(w);
    let n = t.n();
    let mut acc = BigUint::zero();
    for (idx, &d) in t.digits().iter().enumerate() {
        let radix = 2 * (n - idx) as u64; // radix of digit i = idx+1
        acc = acc * radix + d;
    }
    acc
}

/// Machine-width rank; `None` when `2ⁿ·n!` does not fit `u64`.
pub fn rank_u64(w: &SignedPermutation) -> Option<u64> {
    group_order_u64(w.n())?;
    let t = encode(w);
    let n = t.n();
    let mut acc = 0u64;
    for (idx, &d) in t.digits().iter().enumerate() {
        acc = acc * (2 * (n - idx) as u64) + d as u64;
    }
    Some(acc)
}

/// Digits of `r` in the `𝒯_{2,n}` mixed radix, table order.
fn digits_of_rank(r: &BigUint, n: usize) -> Result<Vec<u32>> {
    let order = group_order(n);
    if r >= &order {
        return Err(Error::RankOutOfRange {
            rank: r.to_string(),
            n,
            order: order.to_string(),
        });
    }
    let mut digits = vec![0u32; n];
    let mut rest = r.clone();
    for p in 1..=n {
        let radix = BigUint::from(2 * p as u64);
        let (q, rem) = num_integer::Integer::div_rem(&rest, &radix);
        digits[n - p] = rem.to_u32().expect("digit fits u32");
        rest = q;
    }
    debug_assert!(rest.is_zero());
    Ok(digits)
}

/// Inverse of [`rank`].
pub fn unrank(r: &BigUint, n: usize) -> Result<SignedPermutation> {
    let digits = digits_of_rank(r, n)?;
    let t = InversionTable::new(digits).expect("digits are within bounds by construction");
    Ok(decode(&t))
}

/// Inverse of [`rank_u64`]; usable whenever the order fits `u64`.
pub fn unrank_u64(r: u64, n: usize) -> Result<SignedPermutation> {
    let order = group_order_u64(n).ok_or_else(|| Error::RankOutOfRange {
        rank: r.to_string(),
        n,
        order: group_order(n).to_string(),
    })?;
    if r >= order {
        return Err(Error::RankOutOfRange {
            rank: r.to_string(),
            n,
            order: order.to_string(),
        });
    }
    let mut digits = vec![0u32; n];
    let mut rest = r;
    for p in 1..=n {
        let radix = 2 * p as u64;
        digits[n - p] = (rest % radix) as u32;
        rest /= radix;
    }
    let t = InversionTable::new(digits).expect("digits are within bounds by construction");
    Ok(decode(&t))
}
