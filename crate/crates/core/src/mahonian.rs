//! Exact Mahonian triangles of types A and B by three independent routes
//! (polynomial product, the longitudinal recurrence, and the type-B sliding
//! window), inversion-sum totals, the Knuth–Netto closed form, and the
//! bounded balls-in-boxes count. All coefficients are arbitrary precision;
//! row sums overflow 64 bits near n = 19.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    TypeA,
    TypeB,
}

impl TriangleKind {
    /// Top degree of row `n`: `C(n,2)` for type A, `n²` for type B.
    pub fn max_k(self, n: usize) -> usize {
        match self {
            TriangleKind::TypeA => n * (n - 1) / 2,
            TriangleKind::TypeB => n * n,
        }
    }

    /// Length of the `i`-th all-ones factor of the product formula:
    /// `1 + q + ⋯ + q^{i-1}` for type A, `1 + q + ⋯ + q^{2i-1}` for type B.
    fn factor_len(self, i: usize) -> usize {
        match self {
            TriangleKind::TypeA => i,
            TriangleKind::TypeB => 2 * i,
        }
    }
}

/// One exact coefficient row `i(n, ·)` or `i_B(n, ·)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRow {
    pub kind: TriangleKind,
    pub n: usize,
    pub coeffs: Vec<BigUint>,
}

impl TriangleRow {
    pub fn max_k(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff_sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Moment `Σ k·c_k`, the totals column `𝒜_n` / `ℬ_n`.
    pub fn weighted_sum(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc += c * BigUint::from(k);
        }
        acc
    }

    pub fn is_palindromic(&self) -> bool {
        let m = self.coeffs.len();
        (0..m / 2).all(|k| self.coeffs[k] == self.coeffs[m - 1 - k])
    }

    pub fn coeff(&self, k: usize) -> &BigUint {
        &self.coeffs[k]
    }
}

/// Coefficient row of `∏ (1 + q + ⋯ + q^{L_i - 1})` by schoolbook
/// convolution of the all-ones factors.
pub fn row_product(kind: TriangleKind, n: usize) -> TriangleRow {
    assert!(n >= 1);
    let mut coeffs = vec![BigUint::one()];
    for i in 1..=n {
        let len = kind.factor_len(i);
        let mut next = vec![BigUint::zero(); coeffs.len() + len - 1];
        for (k, c) in coeffs.iter().enumerate() {
            for d in 0..len {
                next[k + d] += c;
            }
        }
        coeffs = next;
    }
    debug_assert_eq!(coeffs.len(), kind.max_k(n) + 1);
    TriangleRow { kind, n, coeffs }
}

/// Coefficient row by the longitudinal recurrence
/// `i(n,k) = Σ_{j=max{0,k-n+1}}^{min{k,C(n-1,2)}} i(n-1,j)` resp.
/// `i_B(n,k) = Σ_{i=max{0,k-2n+1}}^{min{k,(n-1)²}} i_B(n-1,i)`,
/// evaluated with prefix sums of the previous row.
pub fn row_recurrence(kind: TriangleKind, n: usize) -> TriangleRow {
    assert!(n >= 1);
    let mut coeffs = match kind {
        TriangleKind::TypeA => vec![BigUint::one()],
        TriangleKind::TypeB => vec![BigUint::one(), BigUint::one()],
    };
    for m in 2..=n {
        let prev_max = kind.max_k(m - 1);
        // prefix[j] = sum of coeffs[0..=j-1]
        let mut prefix = Vec::with_capacity(coeffs.len() + 1);
        prefix.push(BigUint::zero());
        for c in &coeffs {
            let last = prefix.last().unwrap().clone();
            prefix.push(last + c);
        }
        let window = match kind {
            TriangleKind::TypeA => m - 1,
            TriangleKind::TypeB => 2 * m - 1,
        };
        let next: Vec<BigUint> = (0..=kind.max_k(m))
            .map(|k| {
                let lo = k.saturating_sub(window);
                let hi = k.min(prev_max);
                if lo > hi {
                    BigUint::zero()
                } else {
                    &prefix[hi + 1] - &prefix[lo]
                }
            })
            .collect();
        coeffs = next;
    }
    TriangleRow { kind, n, coeffs }
}

/// Type-B row by the literal sliding sum `i_B(n,k) = Σ_{i=0}^{2n-1}
/// i_B(n-1, k-i)` with out-of-range terms zero.
pub fn row_sliding(n: usize) -> TriangleRow {
    assert!(n >= 2);
    let mut coeffs = vec![BigUint::one(), BigUint::one()];
    for m in 2..=n {
        let next: Vec<BigUint> = (0..=m * m)
            .map(|k| {
                let mut acc = BigUint::zero();
                for i in 0..2 * m {
                    if k >= i && k - i < coeffs.len() {
                        acc += &coeffs[k - i];
                    }
                }
                acc
            })
            .collect();
        coeffs = next;
    }
    TriangleRow {
        kind: TriangleKind::TypeB,
        n,
        coeffs,
    }
}

/// Triangle entry, zero outside `[0, max_k]` per the boundary convention.
pub fn entry(kind: TriangleKind, n: usize, k: i64) -> BigUint {
    if k < 0 || k as usize > kind.max_k(n) {
        return BigUint::zero();
    }
    row_product(kind, n).coeffs[k as usize].clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TotalMethod {
    ClosedForm,
    Recurrence,
    Moment,
}

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Total number of inversions over the whole group:
/// `𝒜_n = (n!/2)·C(n,2)` resp. `ℬ_n = 2^{n-1}·n²·n!`, with the matching
/// recurrences and the row moment as independent routes.
pub fn total_inversions(kind: TriangleKind, n: usize, method: TotalMethod) -> BigUint {
    assert!(n >= 1);
    match (kind, method) {
        (TriangleKind::TypeA, TotalMethod::ClosedForm) => {
            factorial(n) * binomial(n as u64, 2) / 2u32
        }
        (TriangleKind::TypeB, TotalMethod::ClosedForm) => {
            (BigUint::one() << (n - 1)) * BigUint::from((n * n) as u64) * factorial(n)
        }
        (TriangleKind::TypeA, TotalMethod::Recurrence) => {
            let mut acc = BigUint::zero(); // 𝒜_1 = 0
            for m in 2..=n {
                acc = factorial(m) * BigUint::from((m - 1) as u64) / 2u32
                    + BigUint::from(m as u64) * acc;
            }
            acc
        }
        (TriangleKind::TypeB, TotalMethod::Recurrence) => {
            let mut acc = BigUint::one(); // ℬ_1 = 1
            for m in 2..=n {
                acc = (BigUint::one() << (m - 1))
                    * factorial(m)
                    * BigUint::from((2 * m - 1) as u64)
                    + BigUint::from(2 * m as u64) * acc;
            }
            acc
        }
        (_, TotalMethod::Moment) => row_product(kind, n).weighted_sum(),
    }
}

/// Knuth–Netto closed form for `i(n,k)`, valid for `0 <= k <= n`:
/// `C(n+k-1,k) + Σ_j (-1)^j C(n+k-u_j-j-1, k-u_j-j)
///             + Σ_j (-1)^j C(n+k-u_j-1, k-u_j)`
/// with `u_j = j(3j-1)/2`; each sum stops once its lower binomial index
/// goes negative.
pub fn knuth_netto(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::RangeViolation {
            what: format!("knuth_netto requires k <= n, got n={n}, k={k}"),
        });
    }
    let mut acc = BigInt::from(binomial(n + k - 1, k));
    for j in 1u64.. {
        let u = j * (3 * j - 1) / 2;
        if u + j > k {
            break;
        }
        let term = BigInt::from(binomial(n + k - u - j - 1, k - u - j));
        if j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    for j in 1u64.. {
        let u = j * (3 * j - 1) / 2;
        if u > k {
            break;
        }
        let term = BigInt::from(binomial(n + k - u - 1, k - u));
        if j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    debug_assert!(!acc.is_negative());
    Ok(acc.to_biguint().expect("Mahonian numbers are non-negative"))
}

/// Number of ways to place `k` balls into `n` boxes where box `j` holds at
/// most `2(n-j)+1` balls; dynamic programming over the boxes.
pub fn balls_in_boxes(n: usize, k: u64) -> BigUint {
    assert!(n >= 1);
    if k > (n * n) as u64 {
        return BigUint::zero();
    }
    let k = k as usize;
    let mut dp = vec![BigUint::zero(); k + 1];
    dp[0] = BigUint::one();
    for j in 1..=n {
        let cap = 2 * (n - j) + 1;
        // prefix[m] = sum of dp[0..=m-1]
        let mut prefix = Vec::with_capacity(dp.len() + 1);
        prefix.push(BigUint::zero());
        for c in &dp {
            let last = prefix.last().unwrap().clone();
            prefix.push(last + c);
        }
        for m in (0..=k).rev() {
            let lo = m.saturating_sub(cap);
            dp[m] = &prefix[m + 1] - &prefix[lo];
        }
    }
    dp[k].clone()
}

/// Convenience accessor used by tests and the CLI: `u64` view of a coefficient
/// that is known to be small.
pub fn coeff_u64(row: &TriangleRow, k: usize) -> u64 {
    row.coeffs[k].to_u64().expect("coefficient fits u64")
}
