//! Sequences over cyclic groups: Index, the structure of long zero-sum free
//! sequences, and zero-sum subsequences of distinct lengths.

use serde::Serialize;

use super::{for_each_zero_sum_sub, run_lengths, subsums, GSequence};
use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};

/// `min_g Σ_{a|V} Ind_g(a) / n` over generators `g`, for a nonempty zero-sum
/// `V` over `Z_n`. Every such sum is a multiple of `n`, so this is an integer.
pub fn index_of(group: &FiniteAbelianGroup, v: &GSequence) -> Result<u64> {
    group.require_cyclic_nontrivial()?;
    group.check_same(v.group())?;
    if v.is_empty() || !v.is_zero_sum() {
        return Err(Error::precondition("index is defined for nonempty zero-sum sequences"));
    }
    let n = group.order() as u64;
    let best = group
        .generator_indices()
        .into_iter()
        .map(|g| ind_sum(group, g, v.indices()))
        .min()
        .expect("Z_n has a generator");
    debug_assert_eq!(best % n, 0);
    Ok(best / n)
}

pub(crate) fn ind_sum(group: &FiniteAbelianGroup, g: usize, terms: &[usize]) -> u64 {
    terms.iter().map(|&a| group.ind_idx(g, a)).sum()
}

/// A generator `g` describing a long zero-sum free sequence `T` over `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SavchevChenWitness {
    pub generator: GroupElement,
    /// `Σ_{a|T} Ind_g(a)`, which is below `n`.
    pub ind_sum: u64,
}

/// Finds a generator `g` with `Σ Ind_g(a) < n`, `Σ(T) = {g, 2g, …, (Σ Ind_g(a))·g}`
/// and `v_g(T) ≥ Ind_g(a)` for every term `a`, for a zero-sum free `T` over
/// `Z_n` (`n ≥ 3`) with `|T| > n/2`. Failing to find one is a falsification.
pub fn savchev_chen_witness(group: &FiniteAbelianGroup, t: &GSequence) -> Result<SavchevChenWitness> {
    group.require_cyclic_nontrivial()?;
    group.check_same(t.group())?;
    let n = group.order();
    if n < 3 {
        return Err(Error::precondition("group order must be at least 3"));
    }
    if 2 * t.len() <= n {
        return Err(Error::precondition(format!("need |T| > n/2, got |T| = {}", t.len())));
    }
    if !t.is_zero_sum_free() {
        return Err(Error::precondition("T is not zero-sum free"));
    }
    let sums = subsums(group, t.indices());
    let support = run_lengths(t.indices());
    for g in group.generator_indices() {
        let s = ind_sum(group, g, t.indices());
        if s >= n as u64 {
            continue;
        }
        let interval = sums.len() as u64 == s && (1..=s).all(|i| sums.contains(group.mul_idx(i as i64, g)));
        if !interval {
            continue;
        }
        let vg = support.iter().find(|p| p.0 == g).map_or(0, |p| p.1) as u64;
        if support.iter().all(|&(a, _)| vg >= group.ind_idx(g, a)) {
            return Ok(SavchevChenWitness {
                generator: group.element_at(g),
                ind_sum: s,
            });
        }
    }
    Err(Error::Falsified(format!(
        "no generator describes the zero-sum free sequence {t} over {group}"
    )))
}

/// Two nonempty zero-sum subsequences of different lengths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrahamPair {
    pub shorter: GSequence,
    pub longer: GSequence,
}

/// For `T` over `Z_n` (`n ≥ 3`) with `|T| ≥ n` and at least three distinct
/// terms, returns the canonically least shortest zero-sum subsequence and the
/// canonically least zero-sum subsequence of another length.
pub fn graham_pair(group: &FiniteAbelianGroup, t: &GSequence) -> Result<GrahamPair> {
    group.require_cyclic_nontrivial()?;
    group.check_same(t.group())?;
    let n = group.order();
    if n < 3 || t.len() < n {
        return Err(Error::precondition("need |G| ≥ 3 and |T| ≥ |G|"));
    }
    let rl = run_lengths(t.indices());
    if rl.len() < 3 {
        return Err(Error::precondition("T must have at least three distinct terms"));
    }
    let support: Vec<usize> = rl.iter().map(|p| p.0).collect();
    let counts: Vec<usize> = rl.iter().map(|p| p.1).collect();
    let mut all = Vec::new();
    let _ = for_each_zero_sum_sub(group, &support, &counts, None, &mut |pick| {
        all.push(GSequence::from_indices(group, super::expand(&support, pick)));
        std::ops::ControlFlow::Continue(())
    });
    all.sort();
    let shorter = all.first().cloned();
    let longer = shorter
        .as_ref()
        .and_then(|s| all.iter().find(|w| w.len() != s.len()).cloned());
    match (shorter, longer) {
        (Some(shorter), Some(longer)) => Ok(GrahamPair { shorter, longer }),
        _ => Err(Error::Falsified(format!(
            "{t} over {group} has no two zero-sum subsequences of distinct lengths"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::multisets;

    fn z(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n).unwrap()
    }

    fn cs(g: &FiniteAbelianGroup, r: &[i64]) -> GSequence {
        GSequence::cyclic(g, r).unwrap()
    }

    #[test]
    fn index_examples() {
        let z6 = z(6);
        assert_eq!(index_of(&z6, &cs(&z6, &[1; 6])).unwrap(), 1);
        assert_eq!(index_of(&z6, &cs(&z6, &[1, 2, 3])).unwrap(), 1);
        let z5 = z(5);
        assert_eq!(index_of(&z5, &cs(&z5, &[1, 1, 4, 4])).unwrap(), 2);
        assert!(index_of(&z5, &cs(&z5, &[1, 1])).is_err());
        assert!(index_of(&z5, &GSequence::empty(&z5)).is_err());
        let v4 = FiniteAbelianGroup::elementary_two(2);
        assert!(matches!(
            index_of(&v4, &GSequence::empty(&v4)),
            Err(Error::NotCyclic(_))
        ));
    }

    #[test]
    fn ind_sum_n_implies_minimal() {
        for n in 2..=8u64 {
            let g = z(n);
            for k in 1..=n as usize {
                for m in multisets(n as usize, k) {
                    if g.generator_indices().iter().any(|&gen| ind_sum(&g, gen, &m) == n) {
                        assert!(super::super::is_minimal_zero_sum_idx(&g, &m), "{m:?} in Z_{n}");
                    }
                }
            }
        }
    }

    #[test]
    fn savchev_chen_examples() {
        let z7 = z(7);
        let w = savchev_chen_witness(&z7, &cs(&z7, &[1; 4])).unwrap();
        assert_eq!(w.generator.coords(), vec![1]);
        assert_eq!(w.ind_sum, 4);
        let z6 = z(6);
        let w = savchev_chen_witness(&z6, &cs(&z6, &[1, 1, 1, 2])).unwrap();
        assert_eq!(w.generator.coords(), vec![1]);
        assert_eq!(w.ind_sum, 5);
        assert!(matches!(
            savchev_chen_witness(&z6, &cs(&z6, &[2, 4])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn savchev_chen_exhaustive_small() {
        for n in 3..=8u64 {
            let g = z(n);
            for k in (n as usize / 2 + 1)..n as usize {
                for m in multisets(n as usize, k) {
                    let t = GSequence::from_indices(&g, m);
                    if t.is_zero_sum_free() {
                        savchev_chen_witness(&g, &t).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn graham_examples() {
        let z4 = z(4);
        let p = graham_pair(&z4, &cs(&z4, &[0, 1, 3, 2])).unwrap();
        assert_eq!(p.shorter, cs(&z4, &[0]));
        assert_eq!(p.longer, cs(&z4, &[1, 3]));
        let z5 = z(5);
        let p = graham_pair(&z5, &cs(&z5, &[1, 2, 3, 4, 1])).unwrap();
        assert!(p.shorter.is_zero_sum() && p.longer.is_zero_sum());
        assert_ne!(p.shorter.len(), p.longer.len());
        assert!(p.shorter.divides(&cs(&z5, &[1, 2, 3, 4, 1])));
        assert!(graham_pair(&z5, &cs(&z5, &[1; 5])).is_err());
    }
}
