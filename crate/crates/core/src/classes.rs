//! The partition `B_n = ⊎ C_j` by last window entry, together with the
//! reduction `σ ↦ (τ, j)` onto `B_{n-1}` and its inverse lift. The reduction
//! relabels the domain `[n] \ {|j|}` order-preservingly onto `[n-1]`, which
//! leaves `inv_B(τ)` unchanged, and obeys the shift law
//! `inv_B(σ) = n - j + inv_B(τ)` for `j > 0` and `n - j - 1 + inv_B(τ)` for
//! `j < 0`.

use crate::error::{Error, Result};
use crate::perm::SignedPermutation;

/// Strips the last entry `j = σ(n)` and relabels the remaining window onto
/// `1..=n-1`.
pub fn class_reduce(sigma: &SignedPermutation) -> Result<(SignedPermutation, i32)> {
    let n = sigma.n();
    if n < 2 {
        return Err(Error::RankTooSmall { n });
    }
    let j = sigma.class_index();
    let cut = j.abs();
    let window: Vec<i32> = sigma.window()[..n - 1]
        .iter()
        .map(|&v| {
            let a = v.abs();
            debug_assert_ne!(a, cut);
            let m = if a < cut { a } else { a - 1 };
            if v < 0 {
                -m
            } else {
                m
            }
        })
        .collect();
    Ok((SignedPermutation::from_window_unchecked(window), j))
}

/// Inverse of [`class_reduce`]: maps `τ ∈ B_{n-1}` and a class index `j`
/// back to the element of `C_j ⊆ B_n`.
pub fn class_lift(tau: &SignedPermutation, j: i32, n: usize) -> Result<SignedPermutation> {
    if j == 0 || j.unsigned_abs() as usize > n {
        return Err(Error::IndexOutOfRange { j: j as i64, n });
    }
    if tau.n() + 1 != n {
        return Err(Error::RankMismatch {
            left: tau.n(),
            right: n - 1,
        });
    }
    let cut = j.abs();
    let mut window: Vec<i32> = tau
        .window()
        .iter()
        .map(|&v| {
            let m = v.abs();
            let a = if m < cut { m } else { m + 1 };
            if v < 0 {
                -a
            } else {
                a
            }
        })
        .collect();
    window.push(j);
    Ok(SignedPermutation::from_window_unchecked(window))
}

/// Right-hand side of the shift law: the amount `inv_B` grows when `τ` is
/// lifted into class `C_j` of `B_n`.
pub fn class_shift(n: usize, j: i32) -> u64 {
    if j > 0 {
        (n as i64 - j as i64) as u64
    } else {
        (n as i64 - j as i64 - 1) as u64
    }
}
