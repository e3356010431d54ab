//! Finite sequences of positive integers and two constructive facts about
//! their subsums.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A multiset of positive integers, stored sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct IntSequence {
    terms: Vec<u64>,
}

impl IntSequence {
    pub fn new(mut terms: Vec<u64>) -> Result<Self> {
        if terms.contains(&0) {
            return Err(Error::InvalidElement("integer sequence terms must be positive".into()));
        }
        terms.sort_unstable();
        Ok(IntSequence { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.terms.iter().sum()
    }

    /// Number of terms equal to 1.
    pub fn ones(&self) -> usize {
        self.terms.iter().take_while(|&&h| h == 1).count()
    }

    /// Sub-multiset test.
    pub fn divides(&self, other: &IntSequence) -> bool {
        let mut j = 0;
        for &x in &self.terms {
            while j < other.terms.len() && other.terms[j] < x {
                j += 1;
            }
            if j == other.terms.len() || other.terms[j] != x {
                return false;
            }
            j += 1;
        }
        true
    }

    /// Which of `0..=sum` are sums of sub-multisets (the empty one gives 0).
    pub fn subset_sums(&self) -> Vec<bool> {
        let total = self.sum() as usize;
        let mut reach = vec![false; total + 1];
        reach[0] = true;
        for &h in &self.terms {
            let h = h as usize;
            for x in (h..=total).rev() {
                if reach[x - h] {
                    reach[x] = true;
                }
            }
        }
        reach
    }

    fn from_parts(ones: u64, rest: &[u64]) -> IntSequence {
        let mut terms = vec![1; ones as usize];
        terms.extend_from_slice(rest);
        terms.sort_unstable();
        IntSequence { terms }
    }
}

impl TryFrom<Vec<u64>> for IntSequence {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        IntSequence::new(v)
    }
}

impl From<IntSequence> for Vec<u64> {
    fn from(s: IntSequence) -> Vec<u64> {
        s.terms
    }
}

impl fmt::Debug for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.terms)
    }
}

/// For `T` with `Σ h_i ≤ 2ℓ − 3`, a term `h_t > 1` (`t` indexes the sorted
/// terms) and `x ∈ [h_t, Σ_{i≠t} h_i]`, returns two subsequences of `T` with
/// sum `x` and different lengths.
///
/// Write `T = 1^s · b_1 ⋯ b_k` with `2 ≤ b_1 ≤ … ≤ b_k`. The sum bound forces
/// `s ≥ b_k + 1` when `k = 1` and `s ≥ b_{k−1} + b_k − 1` otherwise, and the
/// range for `x` only widens when `h_t` is replaced by `b_1`. With `P_j` the
/// prefix sums of the `b`'s and `m` the largest index with `P_m ≤ x`, the pair
/// tops up `b_1 ⋯ b_{m−1}` and `b_1 ⋯ b_m` (or, when `m = k`, `b_2 ⋯ b_k` and
/// `b_1 ⋯ b_k`) with ones; the bounds on `s` guarantee enough ones.
pub fn distinct_length_pair(t: &IntSequence, idx: usize, x: u64) -> Result<(IntSequence, IntSequence)> {
    let l = t.len() as u64;
    if t.sum() + 3 > 2 * l {
        return Err(Error::precondition(format!(
            "sum {} exceeds 2ℓ − 3 = {}",
            t.sum(),
            (2 * l).saturating_sub(3)
        )));
    }
    let ht = *t
        .terms
        .get(idx)
        .ok_or_else(|| Error::precondition(format!("index {idx} out of range")))?;
    if ht <= 1 {
        return Err(Error::precondition("the chosen term must exceed 1"));
    }
    if x < ht || x > t.sum() - ht {
        return Err(Error::precondition(format!("x = {x} outside [{ht}, {}]", t.sum() - ht)));
    }
    let s = t.ones() as u64;
    let b = &t.terms[t.ones()..];
    let k = b.len();
    let (v1, v2) = if k == 1 {
        (IntSequence::from_parts(x, &[]), IntSequence::from_parts(x - b[0], b))
    } else {
        let prefix: Vec<u64> = std::iter::once(0)
            .chain(b.iter().scan(0, |acc, &h| {
                *acc += h;
                Some(*acc)
            }))
            .collect();
        let m = (1..=k).rev().find(|&j| prefix[j] <= x).expect("b_1 ≤ x");
        if m < k {
            (
                IntSequence::from_parts(x - prefix[m - 1], &b[..m - 1]),
                IntSequence::from_parts(x - prefix[m], &b[..m]),
            )
        } else {
            let tail = prefix[k] - b[0];
            (
                IntSequence::from_parts(x - tail, &b[1..]),
                IntSequence::from_parts(x - prefix[k], b),
            )
        }
    };
    let ok = v1.sum() == x && v2.sum() == x && v1.len() != v2.len() && v1.divides(t) && v2.divides(t);
    if !ok {
        return Err(Error::Falsified(format!(
            "construction for {t:?}, x = {x} gave {v1:?} and {v2:?} (ones available: {s})"
        )));
    }
    Ok((v1, v2))
}

/// For `T` whose subset sums fill `[1, Σ h_i]` and with `Σ h_i > v_1(T)`,
/// the position (in sorted order) of the first term with `1 < h_t ≤ v_1(T) + 1`.
pub fn small_term_index(t: &IntSequence) -> Result<usize> {
    let ones = t.ones() as u64;
    if t.sum() <= ones {
        return Err(Error::precondition("sum must exceed the number of ones"));
    }
    if !t.subset_sums().iter().all(|&r| r) {
        return Err(Error::precondition("subset sums do not fill [1, Σ h_i]"));
    }
    t.terms
        .iter()
        .position(|&h| 1 < h && h <= ones + 1)
        .ok_or_else(|| Error::Falsified(format!("{t:?} has no term in [2, {}]", ones + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[u64]) -> IntSequence {
        IntSequence::new(v.to_vec()).unwrap()
    }

    /// All distinct sub-multisets with sum `x`, by brute force.
    fn subs_with_sum(t: &IntSequence, x: u64) -> Vec<IntSequence> {
        let n = t.len();
        let mut out: Vec<IntSequence> = (0u32..1 << n)
            .map(|mask| {
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| t.terms[i])
                    .collect::<Vec<_>>()
            })
            .filter(|v| v.iter().sum::<u64>() == x)
            .map(|v| IntSequence::new(v).unwrap())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Lengths of sub-multisets with sum `x`, by a (sum, length) table.
    fn lengths_with_sum(t: &IntSequence, x: u64) -> Vec<usize> {
        let (x, l) = (x as usize, t.len());
        let mut can = vec![vec![false; l + 1]; x + 1];
        can[0][0] = true;
        for &h in t.terms() {
            let h = h as usize;
            for s in (h..=x).rev() {
                for k in (1..=l).rev() {
                    if can[s - h][k - 1] {
                        can[s][k] = true;
                    }
                }
            }
        }
        (0..=l).filter(|&k| can[x][k]).collect()
    }

    #[test]
    fn pair_examples() {
        let t = seq(&[1, 1, 1, 2]);
        let (a, b) = distinct_length_pair(&t, 3, 2).unwrap();
        assert_eq!((a, b), (seq(&[1, 1]), seq(&[2])));
        let t = seq(&[1, 1, 1, 1, 1, 2, 2]);
        let (a, b) = distinct_length_pair(&t, 5, 4).unwrap();
        assert_eq!(a.sum(), 4);
        assert_eq!(b.sum(), 4);
        assert_ne!(a.len(), b.len());
        assert_eq!(subs_with_sum(&t, 4).len(), 3);
        assert_eq!(lengths_with_sum(&t, 4), vec![2, 3, 4]);
        assert!(distinct_length_pair(&seq(&[1, 1, 3]), 2, 3).is_err());
        assert!(distinct_length_pair(&t, 0, 2).is_err());
    }

    #[test]
    fn small_term_examples() {
        assert_eq!(small_term_index(&seq(&[1, 1, 2])).unwrap(), 2);
        assert_eq!(small_term_index(&seq(&[1, 2, 3])).unwrap(), 1);
        assert!(small_term_index(&seq(&[1, 1, 1])).is_err());
        assert!(small_term_index(&seq(&[1, 3])).is_err());
    }

    #[test]
    fn json_is_sorted_list() {
        let t = seq(&[3, 1, 2]);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[1,2,3]");
        assert!(serde_json::from_str::<IntSequence>("[0,1]").is_err());
    }

    fn bounded_sequence() -> impl Strategy<Value = IntSequence> {
        (3usize..14)
            .prop_flat_map(|l| prop::collection::vec(1u64..6, l))
            .prop_map(|v| IntSequence::new(v).unwrap())
    }

    /// Sequences meeting the sum bound: pick the terms above 1, then enough ones.
    fn pair_input() -> impl Strategy<Value = IntSequence> {
        (prop::collection::vec(2u64..7, 1..5), 0u64..4).prop_map(|(big, extra)| {
            let k = big.len() as u64;
            let need = (big.iter().sum::<u64>() + 3).saturating_sub(2 * k);
            let mut v = vec![1; (need + extra) as usize];
            v.extend(big);
            IntSequence::new(v).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn pair_is_valid_whenever_preconditions_hold(t in pair_input(), pick in 0usize..64, xs in 0u64..64) {
            prop_assert!(t.sum() + 3 <= 2 * t.len() as u64);
            let idx = t.ones() + pick % (t.len() - t.ones());
            let ht = t.terms()[idx];
            let x = ht + xs % (t.sum() - 2 * ht + 1);
            let (a, b) = distinct_length_pair(&t, idx, x).unwrap();
            prop_assert!(a.divides(&t) && b.divides(&t));
            prop_assert_eq!(a.sum(), x);
            prop_assert_eq!(b.sum(), x);
            prop_assert_ne!(a.len(), b.len());
            prop_assert!(lengths_with_sum(&t, x).len() >= 2);
        }

        #[test]
        fn small_term_matches_scan(t in bounded_sequence()) {
            let reach = t.subset_sums();
            let full = reach.iter().all(|&r| r);
            let ones = t.ones() as u64;
            match small_term_index(&t) {
                Ok(i) => {
                    prop_assert!(full && t.sum() > ones);
                    prop_assert!(t.terms()[i] > 1 && t.terms()[i] <= ones + 1);
                }
                Err(e) => {
                    prop_assert!(!e.is_falsification());
                    prop_assert!(!full || t.sum() <= ones);
                }
            }
        }
    }
}
