//! Dense exact-integer formal power series prefixes, the Catalan generating
//! function `C(x)`, the diagonal Mahonian series `S_j(x) = Σ i(n,n-j)xⁿ`,
//! and the identity `S_j(x) = (xC(x))ʲ·S_0(x)`.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::mahonian::{binomial, entry, TriangleKind};
use crate::report::{params, FailureDetail, VerificationReport};

/// Power series truncated after `xᴺ`; `coeffs[m]` is the coefficient of `xᵐ`
/// and `coeffs.len() = N + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigUint>,
}

impl Series {
    /// Builds a series of truncation order `order`, zero-padding or cutting
    /// the supplied coefficients as needed.
    pub fn new(mut coeffs: Vec<BigUint>, order: usize) -> Self {
        coeffs.resize(order + 1, BigUint::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &BigUint {
        &self.coeffs[m]
    }

    /// Truncated product; the result keeps the smaller order so that the
    /// retained coefficients are exact.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigUint::zero(); order + 1];
        for (a, ca) in self.coeffs.iter().enumerate().take(order + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate().take(order + 1 - a) {
                coeffs[a + b] += ca * cb;
            }
        }
        Series { coeffs }
    }

    pub fn pow(&self, e: usize) -> Series {
        let mut acc = Series::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by `x`: shifts every coefficient up one degree.
    pub fn shift_up(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(BigUint::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.coeffs.len() - 1]);
        Series { coeffs }
    }

    pub fn one(order: usize) -> Series {
        let mut coeffs = vec![BigUint::zero(); order + 1];
        coeffs[0] = BigUint::from(1u32);
        Series { coeffs }
    }
}

/// `C(x)` with `Cₙ = C(2n,n)/(n+1)` computed from the binomial closed form.
pub fn catalan_series(order: usize) -> Series {
    let coeffs = (0..=order as u64)
        .map(|m| binomial(2 * m, m) / (m + 1))
        .collect();
    Series { coeffs }
}

/// `S_j(x) = Σ_{n≥0} i(n, n-j) xⁿ` read off the type-A triangle diagonals,
/// with `i(0,0) = 1` and zero outside the triangle's support.
pub fn diagonal_series(j: usize, order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|m| {
            if m < j {
                BigUint::zero()
            } else if m == 0 {
                BigUint::from(1u32) // i(0,0)
            } else {
                entry(TriangleKind::TypeA, m, (m - j) as i64)
            }
        })
        .collect();
    Series { coeffs }
}

/// Checks `diagonal_series(j, N) = (xC(x))ʲ·S_0(x)` coefficient by
/// coefficient up to order `N`.
pub fn verify_gf_identity(j: usize, order: usize) -> VerificationReport {
    let start = Instant::now();
    let lhs = diagonal_series(j, order);
    let rhs = catalan_series(order)
        .shift_up()
        .pow(j)
        .mul(&diagonal_series(0, order));
    let first_failure = (0..=order).find_map(|m| {
        (lhs.coeff(m) != rhs.coeff(m)).then(|| FailureDetail {
            location: format!("coefficient of x^{m}"),
            expected: lhs.coeff(m).to_string(),
            actual: rhs.coeff(m).to_string(),
        })
    });
    VerificationReport::new(
        "gf-identity",
        params([("j", j.to_string()), ("order", order.to_string())]),
        first_failure,
        start.elapsed(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn coeffs_u64(s: &Series) -> Vec<u64> {
        s.coeffs().iter().map(|c| c.to_u64().unwrap()).collect()
    }

    #[test]
    fn catalan_prefix() {
        let c = catalan_series(5);
        assert_eq!(coeffs_u64(&c), vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(catalan_series(0).coeffs(), &[BigUint::from(1u32)]);
    }

    #[test]
    fn catalan_segner_convolution() {
        // C_{n+1} = Σ_{i=0}^{n} C_i · C_{n-i}, checked from the closed form.
        let c = catalan_series(11);
        for n in 0..=10usize {
            let mut conv = BigUint::zero();
            for i in 0..=n {
                conv += c.coeff(i) * c.coeff(n - i);
            }
            assert_eq!(&conv, c.coeff(n + 1), "Segner at n={n}");
        }
    }

    #[test]
    fn s0_prefix_matches_printed_series() {
        let s0 = diagonal_series(0, 8);
        assert_eq!(coeffs_u64(&s0), vec![1, 0, 0, 1, 5, 22, 90, 359, 1415]);
    }

    #[test]
    fn s1_coefficient_examples() {
        let s1 = diagonal_series(1, 4);
        assert_eq!(s1.coeff(4), &BigUint::from(6u32)); // i(4,3)
    }

    #[test]
    fn large_j_truncates_to_zero() {
        let s = diagonal_series(9, 8);
        assert!(s.coeffs().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn truncation_consistency() {
        // Operations at order 8 agree with operations at order 16 cut to 8.
        let a = catalan_series(8);
        let b = catalan_series(16);
        let prod_small = a.mul(&diagonal_series(0, 8));
        let prod_large = b.mul(&diagonal_series(0, 16));
        assert_eq!(prod_small.coeffs(), &prod_large.coeffs()[..=8]);
        let p_small = a.shift_up().pow(3);
        let p_large = b.shift_up().pow(3);
        assert_eq!(p_small.coeffs(), &p_large.coeffs()[..=8]);
    }

    #[test]
    fn gf_identity_small_orders() {
        for j in 0..=2 {
            let r = verify_gf_identity(j, 12);
            assert!(r.passed, "{r}");
        }
        // Coefficient of x^4 on both sides of the j=1 identity is 1 + 5 = 6.
        let rhs = catalan_series(8).shift_up().mul(&diagonal_series(0, 8));
        assert_eq!(rhs.coeff(4), &BigUint::from(6u32));
    }
}
