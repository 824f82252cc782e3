//! The γ-generator factorization `w = γ_{n-1}^{k_{n-1}} ⋯ γ_1^{k_1} γ_0^{k_0}`
//! and the flag-major index `fmaj(w) = Σ k_i`.
//!
//! `γ_i` acts on `{±1, …, ±(i+1)}` as the `2(i+1)`-cycle
//! `i+1 → i → ⋯ → 1 → -(i+1) → ⋯ → -1 → i+1` and fixes every larger point,
//! so `k_i` is read off from where the current permutation sends `i+1`;
//! peeling exponents from `i = n-1` down to `0` costs `O(n²)` total.

use crate::perm::SignedPermutation;

/// Exponent tuple `(k_0, …, k_{n-1})` with `0 <= k_i <= 2i+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaExponents {
    exponents: Vec<u32>,
}

/// Image of the point `c` under `γ_i^k` (`|c| <= i+1`; larger points are
/// fixed by `γ_i` and must not be passed here).
fn gamma_pow_image(i: usize, k: i64, c: i32) -> i32 {
    let m = (i + 1) as i64;
    let len = 2 * m;
    let pos = if c > 0 { m - c as i64 } else { len - (-c) as i64 };
    let new = (pos + k).rem_euclid(len);
    if new < m {
        (m - new) as i32
    } else {
        -((len - new) as i32)
    }
}

/// Applies `γ_i^k` to every entry of a window in place.
fn apply_gamma_pow(window: &mut [i32], i: usize, k: i64) {
    let bound = (i + 1) as i32;
    for v in window.iter_mut() {
        if v.abs() <= bound {
            *v = gamma_pow_image(i, k, *v);
        }
    }
}

impl GammaExponents {
    /// Peels the unique exponent tuple off `w`.
    pub fn of(w: &SignedPermutation) -> Self {
        let n = w.n();
        let mut v = w.window().to_vec();
        let mut exponents = vec![0u32; n];
        for i in (0..n).rev() {
            let c = v[i];
            let k = if c > 0 {
                (i + 1) as i64 - c as i64
            } else {
                2 * (i + 1) as i64 - (-c) as i64
            };
            exponents[i] = k as u32;
            if k != 0 {
                apply_gamma_pow(&mut v[..=i], i, -k);
            }
            debug_assert_eq!(v[i], (i + 1) as i32);
        }
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Rebuilds `γ_{n-1}^{k_{n-1}} ⋯ γ_0^{k_0}`.
    pub fn recompose(&self) -> SignedPermutation {
        let n = self.exponents.len();
        let mut window: Vec<i32> = (1..=n as i32).collect();
        for (i, &k) in self.exponents.iter().enumerate() {
            if k != 0 {
                apply_gamma_pow(&mut window, i, k as i64);
            }
        }
        SignedPermutation::from_window_unchecked(window)
    }

    pub fn sum(&self) -> u64 {
        self.exponents.iter().map(|&k| k as u64).sum()
    }
}

impl SignedPermutation {
    pub fn gamma_decompose(&self) -> GammaExponents {
        GammaExponents::of(self)
    }

    /// Flag-major index: the exponent sum of the γ factorization.
    pub fn fmaj(&self) -> u64 {
        GammaExponents::of(self).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_zero_exponents() {
        let e = SignedPermutation::identity(5);
        let g = e.gamma_decompose();
        assert_eq!(g.exponents(), &[0, 0, 0, 0, 0]);
        assert_eq!(e.fmaj(), 0);
    }

    #[test]
    fn t1_is_gamma0() {
        let t1 = SignedPermutation::t(1, 1);
        let g = t1.gamma_decompose();
        assert_eq!(g.exponents(), &[1]);
        assert_eq!(t1.fmaj(), 1);
    }

    #[test]
    fn gamma_powers_recompose() {
        // γ_1 in B_2 has order 4; its powers hit 4 distinct elements.
        let g1 = SignedPermutation::gamma(2, 1);
        let mut acc = SignedPermutation::identity(2);
        for k in 0..4u32 {
            let exps = GammaExponents {
                exponents: vec![0, k],
            };
            assert_eq!(exps.recompose(), acc);
            acc = g1.compose(&acc).unwrap();
        }
        assert_eq!(acc, SignedPermutation::identity(2));
    }

    #[test]
    fn b2_exponent_pairs_are_a_bijection() {
        // All 8 elements of B_2 map to the 8 pairs (k_0, k_1) in [0,1]x[0,3].
        let mut seen = std::collections::HashSet::new();
        for r in 0..8u64 {
            let w = crate::codes::unrank_u64(r, 2).unwrap();
            let g = w.gamma_decompose();
            let (k0, k1) = (g.exponents()[0], g.exponents()[1]);
            assert!(k0 <= 1 && k1 <= 3);
            assert_eq!(g.recompose(), w);
            assert!(seen.insert((k0, k1)));
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn fmaj_histogram_b2_matches_product() {
        // Coefficients of (1+q)(1+q+q^2+q^3): 1,2,2,2,1.
        let mut hist = [0u32; 5];
        for r in 0..8u64 {
            let w = crate::codes::unrank_u64(r, 2).unwrap();
            hist[w.fmaj() as usize] += 1;
        }
        assert_eq!(hist, [1, 2, 2, 2, 1]);
    }
}
