//! Signed permutations of `{±1, …, ±n}` in window notation, the group
//! operations on them, and the per-element statistics that only need the
//! window itself (inversion sum, backward permutation, negative-entry sum,
//! class index, plain type-A statistics).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of the hyperoctahedral group `B_n` in window notation:
/// `window[i-1] = w(i)` for `i = 1..=n`, with the action on negative points
/// derived from `w(-i) = -w(i)` and never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

/// The unique factorization `w = β · ∏ t_k^{r_k}`: a plain permutation `β`
/// of `1..=n` plus one sign bit per position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub beta: Vec<i32>,
    pub signs: Vec<u8>,
}

/// Inversion number, descent set (1-based positions) and major index of a
/// plain permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeAStats {
    pub inv: u64,
    pub des_set: Vec<usize>,
    pub maj: u64,
}

impl SignedPermutation {
    /// Validates a window: entries nonzero, absolute values exactly `1..=n`.
    pub fn from_window(n: usize, entries: &[i32]) -> Result<Self> {
        if entries.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: entries.len(),
            });
        }
        let mut seen = vec![false; n];
        for (idx, &e) in entries.iter().enumerate() {
            if e == 0 {
                return Err(Error::ZeroEntry { position: idx + 1 });
            }
            let a = e.unsigned_abs() as usize;
            if a > n || seen[a - 1] {
                return Err(Error::NotAPermutation { value: e as i64 });
            }
            seen[a - 1] = true;
        }
        Ok(Self {
            window: entries.to_vec(),
        })
    }

    /// Window already known to be valid (internal fast path).
    pub(crate) fn from_window_unchecked(window: Vec<i32>) -> Self {
        debug_assert!(Self::from_window(window.len(), &window).is_ok());
        Self { window }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    /// The longest element `w_0`, which negates every point.
    pub fn longest_element(n: usize) -> Self {
        Self {
            window: (1..=n as i32).map(|i| -i).collect(),
        }
    }

    /// Adjacent transposition `s_i` swapping `i` and `i+1` (`1 <= i <= n-1`).
    pub fn s(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} undefined in B_{n}");
        let mut w: Vec<i32> = (1..=n as i32).collect();
        w.swap(i - 1, i);
        Self { window: w }
    }

    /// Sign change `t_i` negating the point `i` (`1 <= i <= n`).
    pub fn t(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "t_{i} undefined in B_{n}");
        let mut w: Vec<i32> = (1..=n as i32).collect();
        w[i - 1] = -(i as i32);
        Self { window: w }
    }

    /// Generator `γ_i = s_i s_{i-1} ⋯ s_1 t_1` (`γ_0 = t_1`), the signed
    /// `2(i+1)`-cycle `i+1 → i → ⋯ → 1 → -(i+1) → ⋯ → -1 → i+1`.
    pub fn gamma(n: usize, i: usize) -> Self {
        assert!(i < n, "gamma_{i} undefined in B_{n}");
        let mut w: Vec<i32> = (1..=n as i32).collect();
        w[0] = -((i + 1) as i32);
        for j in 2..=i + 1 {
            w[j - 1] = j as i32 - 1;
        }
        Self { window: w }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of a point `v` in `{±1, …, ±n}` under the permutation.
    pub fn image(&self, v: i32) -> i32 {
        debug_assert!(v != 0 && v.unsigned_abs() as usize <= self.n());
        if v > 0 {
            self.window[v as usize - 1]
        } else {
            -self.window[(-v) as usize - 1]
        }
    }

    /// Function composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let window = other.window.iter().map(|&v| self.image(v)).collect();
        Ok(Self { window })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut window = vec![0i32; n];
        for (idx, &v) in self.window.iter().enumerate() {
            let i = idx as i32 + 1;
            if v > 0 {
                window[v as usize - 1] = i;
            } else {
                window[(-v) as usize - 1] = -i;
            }
        }
        Self { window }
    }

    /// Splits the window into `β = |w|` and the sign bits `r_k`.
    pub fn decompose(&self) -> Decomposition {
        Decomposition {
            beta: self.window.iter().map(|&v| v.abs()).collect(),
            signs: self.window.iter().map(|&v| u8::from(v < 0)).collect(),
        }
    }

    /// Window reversed left to right; an involution on `B_n`.
    pub fn backward(&self) -> Self {
        let mut window = self.window.clone();
        window.reverse();
        Self { window }
    }

    /// Sum of absolute values of the negative window entries.
    pub fn neg_sum(&self) -> u64 {
        self.window
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| (-v) as u64)
            .sum()
    }

    /// The class index `j = w(n)` of the partition `B_n = ⊎ C_j`.
    pub fn class_index(&self) -> i32 {
        *self.window.last().expect("rank is positive")
    }

    /// Type-B inversion sum, computed straight from the window.
    pub fn inv_b(&self) -> u64 {
        inv_b_window(&self.window)
    }
}

impl Decomposition {
    /// Rebuilds the window: `w(k) = (-1)^{r_k} β_k`.
    pub fn recompose(&self) -> SignedPermutation {
        let window = self
            .beta
            .iter()
            .zip(&self.signs)
            .map(|(&b, &r)| if r == 1 { -b } else { b })
            .collect();
        SignedPermutation::from_window_unchecked(window)
    }
}

/// Per-window inversion sum: the digit at position `p` counts larger absolute
/// values to the left, plus `p + (smaller values to the left)` extra when the
/// entry is negative. Summing over all positions gives `inv_B`.
pub fn inv_b_window(window: &[i32]) -> u64 {
    let mut total = 0u64;
    for p in 0..window.len() {
        total += digit_at(window, p);
    }
    total
}

/// Inversion-table digit governed by window position `p` (0-based): the value
/// `inv_{n-p}(w)` of the table, in `[0, 2p+1]`.
pub(crate) fn digit_at(window: &[i32], p: usize) -> u64 {
    let v = window[p];
    let a = v.abs();
    if v > 0 {
        let mut larger = 0u64;
        for &u in &window[..p] {
            if u.abs() > a {
                larger += 1;
            }
        }
        larger
    } else {
        let mut smaller = 0u64;
        for &u in &window[..p] {
            if u.abs() < a {
                smaller += 1;
            }
        }
        p as u64 + 1 + smaller
    }
}

/// Inversion number, descent set and major index of a plain permutation
/// given by its one-line notation (entries `1..=n`).
pub fn type_a_stats(beta: &[i32]) -> TypeAStats {
    let mut inv = 0u64;
    for j in 0..beta.len() {
        for i in 0..j {
            if beta[i] > beta[j] {
                inv += 1;
            }
        }
    }
    let des_set: Vec<usize> = (1..beta.len())
        .filter(|&i| beta[i - 1] > beta[i])
        .collect();
    let maj = des_set.iter().map(|&i| i as u64).sum();
    TypeAStats { inv, des_set, maj }
}

impl fmt::Display for SignedPermutation {
    /// Space-separated signed decimal entries, e.g. `7 3 -2 8 -6 -4 -1 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, v) in self.window.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "-0" {
                return Err(Error::BadToken {
                    token: tok.to_string(),
                });
            }
            let v: i32 = tok.parse().map_err(|_| Error::BadToken {
                token: tok.to_string(),
            })?;
            entries.push(v);
        }
        SignedPermutation::from_window(entries.len(), &entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(entries: &[i32]) -> SignedPermutation {
        SignedPermutation::from_window(entries.len(), entries).unwrap()
    }

    #[test]
    fn from_window_validates() {
        assert!(SignedPermutation::from_window(8, &[7, 3, -2, 8, -6, -4, -1, 5]).is_ok());
        assert!(SignedPermutation::from_window(3, &[1, 2, 3]).is_ok());
        assert_eq!(
            SignedPermutation::from_window(3, &[1, 1, -3]),
            Err(Error::NotAPermutation { value: 1 })
        );
        assert_eq!(
            SignedPermutation::from_window(2, &[1, 0]),
            Err(Error::ZeroEntry { position: 2 })
        );
        assert_eq!(
            SignedPermutation::from_window(3, &[1, 2]),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            SignedPermutation::from_window(2, &[3, 1]),
            Err(Error::NotAPermutation { value: 3 })
        );
    }

    #[test]
    fn compose_identity_and_inverse() {
        let w = sp(&[7, 3, -2, 8, -6, -4, -1, 5]);
        let e = SignedPermutation::identity(8);
        assert_eq!(e.compose(&w).unwrap(), w);
        assert_eq!(w.compose(&e).unwrap(), w);
        assert_eq!(w.compose(&w.inverse()).unwrap(), e);
        assert_eq!(w.inverse().compose(&w).unwrap(), e);
    }

    #[test]
    fn compose_rank_mismatch() {
        let u = SignedPermutation::identity(2);
        let v = SignedPermutation::identity(3);
        assert_eq!(
            u.compose(&v),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn s1_t1_do_not_commute_and_braid_to_t2() {
        let s1 = SignedPermutation::s(2, 1);
        let t1 = SignedPermutation::t(2, 1);
        let st = s1.compose(&t1).unwrap();
        let ts = t1.compose(&s1).unwrap();
        assert_ne!(st, ts);
        let sts = st.compose(&s1).unwrap();
        assert_eq!(sts, SignedPermutation::t(2, 2));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            SignedPermutation::identity(4).inverse(),
            SignedPermutation::identity(4)
        );
        assert_eq!(sp(&[-1]).inverse(), sp(&[-1]));
        assert_eq!(sp(&[2, -3, 1]).inverse(), sp(&[3, 1, -2]));
    }

    #[test]
    fn decompose_examples() {
        let w = sp(&[7, 3, -2, 8, -6, -4, -1, 5]);
        let d = w.decompose();
        assert_eq!(d.beta, vec![7, 3, 2, 8, 6, 4, 1, 5]);
        assert_eq!(d.signs, vec![0, 0, 1, 0, 1, 1, 1, 0]);
        assert_eq!(d.recompose(), w);

        let e = SignedPermutation::identity(3);
        let d = e.decompose();
        assert_eq!(d.beta, vec![1, 2, 3]);
        assert_eq!(d.signs, vec![0, 0, 0]);

        let w0 = SignedPermutation::longest_element(3);
        let d = w0.decompose();
        assert_eq!(d.beta, vec![1, 2, 3]);
        assert_eq!(d.signs, vec![1, 1, 1]);
    }

    #[test]
    fn inv_b_worked_example() {
        assert_eq!(sp(&[7, 3, -2, 8, -6, -4, -1, 5]).inv_b(), 29);
        assert_eq!(SignedPermutation::identity(5).inv_b(), 0);
        for n in 1..=8 {
            assert_eq!(
                SignedPermutation::longest_element(n).inv_b(),
                (n * n) as u64
            );
        }
    }

    #[test]
    fn type_a_stats_examples() {
        let rev: Vec<i32> = (1..=6).rev().collect();
        assert_eq!(type_a_stats(&rev).inv, 15); // C(6,2)
        let id: Vec<i32> = (1..=6).collect();
        let s = type_a_stats(&id);
        assert_eq!((s.inv, s.des_set.clone(), s.maj), (0, vec![], 0));
        let s = type_a_stats(&[3, 1, 2]);
        assert_eq!((s.inv, s.des_set.clone(), s.maj), (2, vec![1], 1));
    }

    #[test]
    fn backward_examples() {
        let w = sp(&[7, 3, -2, 8, -6, -4, -1, 5]);
        assert_eq!(w.backward(), sp(&[5, -1, -4, -6, 8, -2, 3, 7]));
        assert_eq!(w.backward().backward(), w);
        assert_eq!(
            SignedPermutation::identity(2).backward(),
            sp(&[2, 1])
        );
        // all-positive window: inv_b(w) + inv_b(backward(w)) = C(4,2)
        let w = sp(&[2, 4, 1, 3]);
        assert_eq!(w.inv_b() + w.backward().inv_b(), 6);
    }

    #[test]
    fn neg_sum_examples() {
        assert_eq!(sp(&[7, 3, -2, 8, -6, -4, -1, 5]).neg_sum(), 13);
        assert_eq!(SignedPermutation::identity(4).neg_sum(), 0);
        for n in 1..=6u64 {
            assert_eq!(
                SignedPermutation::longest_element(n as usize).neg_sum(),
                n * (n + 1) / 2
            );
        }
    }

    #[test]
    fn class_index_examples() {
        assert_eq!(sp(&[7, 3, -2, 8, -6, -4, -1, 5]).class_index(), 5);
        assert_eq!(SignedPermutation::identity(4).class_index(), 4);
        assert_eq!(SignedPermutation::longest_element(4).class_index(), -4);
    }

    #[test]
    fn window_text_round_trip() {
        let w: SignedPermutation = "7 3 -2 8 -6 -4 -1 5".parse().unwrap();
        assert_eq!(w, sp(&[7, 3, -2, 8, -6, -4, -1, 5]));
        assert_eq!(w.to_string(), "7 3 -2 8 -6 -4 -1 5");
        assert!("1 x".parse::<SignedPermutation>().is_err());
        assert_eq!(
            "0 1".parse::<SignedPermutation>(),
            Err(Error::ZeroEntry { position: 1 })
        );
        assert_eq!(
            "-0 1".parse::<SignedPermutation>(),
            Err(Error::BadToken {
                token: "-0".to_string()
            })
        );
    }

    #[test]
    fn gamma_windows() {
        assert_eq!(SignedPermutation::gamma(2, 0), SignedPermutation::t(2, 1));
        // γ_1 = s_1 t_1
        let s1t1 = SignedPermutation::s(2, 1)
            .compose(&SignedPermutation::t(2, 1))
            .unwrap();
        assert_eq!(SignedPermutation::gamma(2, 1), s1t1);
        // γ_i = s_i ⋯ s_1 t_1 in B_5
        for i in 1..5 {
            let mut g = SignedPermutation::t(5, 1);
            for k in 1..=i {
                g = SignedPermutation::s(5, k).compose(&g).unwrap();
            }
            assert_eq!(SignedPermutation::gamma(5, i), g);
        }
    }
}
