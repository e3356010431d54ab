//! Depth-first enumeration of canonical multisets.
//!
//! Multisets are built by appending elements in non-decreasing canonical order,
//! so each multiset is visited at most once. An [`Extender`] decides whether an
//! extension survives (pruning is sound only for properties inherited by
//! subsequences) and may bound how many further terms a node can take.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Limits shared by every exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of search nodes per call.
    pub node_cap: u64,
    /// Longest sequence an avoidance search will build; `None` means `2·|G|`.
    pub length_cap: Option<usize>,
    /// Number of rayon workers to split searches over; `1` runs sequentially.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_cap: 100_000_000,
            length_cap: None,
            workers: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_node_cap(mut self, cap: u64) -> Self {
        self.node_cap = cap;
        self
    }

    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.length_cap = Some(cap);
        self
    }

    pub(crate) fn length_cap_for(&self, group_order: usize) -> usize {
        self.length_cap.unwrap_or(2 * group_order).max(1)
    }

    pub(crate) fn budget(&self) -> Budget {
        Budget::new(self.node_cap)
    }

    pub(crate) fn parallel(&self) -> bool {
        self.workers > 1
    }
}

pub(crate) struct Budget {
    used: AtomicU64,
    cap: u64,
}

impl Budget {
    pub(crate) fn new(cap: u64) -> Self {
        Budget {
            used: AtomicU64::new(0),
            cap,
        }
    }

    #[inline]
    pub(crate) fn tick(&self) -> Result<()> {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.cap {
            return Err(Error::CapExceeded {
                what: "search nodes",
                cap: self.cap,
            });
        }
        Ok(())
    }
}

pub(crate) trait Extender: Sync {
    type State: Clone + Send + Sync;

    /// State after appending `next`, or `None` if the extension is pruned.
    fn extend(&self, state: &Self::State, next: usize) -> Option<Self::State>;

    /// Upper bound on how many more terms any surviving extension can take.
    fn headroom(&self, _state: &Self::State) -> usize {
        usize::MAX
    }
}

pub(crate) struct Longest {
    /// A longest surviving multiset; canonically least among those of that length.
    pub terms: Vec<usize>,
    /// True when the search stopped because `terms` reached the length cap.
    pub reached_cap: bool,
}

struct LongestDfs<'a, E: Extender> {
    ext: &'a E,
    universe: &'a [usize],
    cap_len: usize,
    budget: &'a Budget,
    shared_best: &'a AtomicUsize,
}

impl<E: Extender> LongestDfs<'_, E> {
    fn run(&self, start: usize, terms: &mut Vec<usize>, state: &E::State, best: &mut Vec<usize>) -> Result<bool> {
        self.budget.tick()?;
        if terms.len() > best.len() {
            best.clone_from(terms);
            self.shared_best.fetch_max(terms.len(), Ordering::Relaxed);
        }
        if terms.len() >= self.cap_len {
            return Ok(true);
        }
        let reach = terms.len().saturating_add(self.ext.headroom(state));
        // Strict against the shared bound so equal-length witnesses survive in
        // every branch and the final choice does not depend on scheduling.
        if reach <= best.len() || reach < self.shared_best.load(Ordering::Relaxed) {
            return Ok(false);
        }
        for pos in start..self.universe.len() {
            let a = self.universe[pos];
            if let Some(next) = self.ext.extend(state, a) {
                terms.push(a);
                if self.run(pos, terms, &next, best)? {
                    return Ok(true);
                }
                terms.pop();
            }
        }
        Ok(false)
    }
}

/// Whether a root branch reached the length cap, with its longest multiset.
type Branch = (bool, Vec<usize>);

/// Longest multiset over `universe` that survives every extension, or the
/// first one to reach `cap_len`.
pub(crate) fn longest<E: Extender>(
    ext: &E,
    universe: &[usize],
    root: &E::State,
    cap_len: usize,
    budget: &Budget,
    parallel: bool,
) -> Result<Longest> {
    let shared_best = AtomicUsize::new(0);
    let dfs = LongestDfs {
        ext,
        universe,
        cap_len,
        budget,
        shared_best: &shared_best,
    };
    if !parallel || cap_len == 0 {
        let mut best = Vec::new();
        let reached_cap = dfs.run(0, &mut Vec::new(), root, &mut best)?;
        return Ok(Longest {
            terms: best,
            reached_cap,
        });
    }
    budget.tick()?;
    let branches: Vec<Result<Option<Branch>>> = (0..universe.len())
        .into_par_iter()
        .map(|pos| {
            let a = universe[pos];
            let Some(next) = ext.extend(root, a) else {
                return Ok(None);
            };
            let mut terms = vec![a];
            let mut best = Vec::new();
            let hit = dfs.run(pos, &mut terms, &next, &mut best)?;
            Ok(Some((hit, best)))
        })
        .collect();
    let mut results = Vec::new();
    for b in branches {
        if let Some(r) = b? {
            results.push(r);
        }
    }
    if let Some((_, terms)) = results.iter().find(|(hit, _)| *hit) {
        return Ok(Longest {
            terms: terms.clone(),
            reached_cap: true,
        });
    }
    // Branches are in canonical order, so the first of maximal length is least.
    let best = results
        .into_iter()
        .map(|(_, t)| t)
        .fold(Vec::new(), |acc, t| if t.len() > acc.len() { t } else { acc });
    Ok(Longest {
        terms: best,
        reached_cap: false,
    })
}

/// First (canonically least) multiset of exactly `extra` elements from
/// `universe` whose successive extensions of `root` all survive.
pub(crate) fn find_extension<E: Extender>(
    ext: &E,
    universe: &[usize],
    root: &E::State,
    extra: usize,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    fn go<E: Extender>(
        ext: &E,
        universe: &[usize],
        start: usize,
        state: &E::State,
        remaining: usize,
        terms: &mut Vec<usize>,
        budget: &Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if remaining == 0 {
            return Ok(true);
        }
        if ext.headroom(state) < remaining {
            return Ok(false);
        }
        for pos in start..universe.len() {
            let a = universe[pos];
            if let Some(next) = ext.extend(state, a) {
                terms.push(a);
                if go(ext, universe, pos, &next, remaining - 1, terms, budget)? {
                    return Ok(true);
                }
                terms.pop();
            }
        }
        Ok(false)
    }
    let mut terms = Vec::with_capacity(extra);
    Ok(go(ext, universe, 0, root, extra, &mut terms, budget)?.then_some(terms))
}

/// Visits every surviving multiset of length at most `max_len`, root included,
/// in canonical preorder.
pub(crate) fn visit<E: Extender>(
    ext: &E,
    universe: &[usize],
    root: &E::State,
    max_len: usize,
    budget: &Budget,
    f: &mut impl FnMut(&[usize], &E::State),
) -> Result<()> {
    #[allow(clippy::too_many_arguments)]
    fn go<E: Extender>(
        ext: &E,
        universe: &[usize],
        start: usize,
        state: &E::State,
        max_len: usize,
        terms: &mut Vec<usize>,
        budget: &Budget,
        f: &mut impl FnMut(&[usize], &E::State),
    ) -> Result<()> {
        budget.tick()?;
        f(terms, state);
        if terms.len() >= max_len {
            return Ok(());
        }
        for pos in start..universe.len() {
            let a = universe[pos];
            if let Some(next) = ext.extend(state, a) {
                terms.push(a);
                go(ext, universe, pos, &next, max_len, terms, budget, f)?;
                terms.pop();
            }
        }
        Ok(())
    }
    go(ext, universe, 0, root, max_len, &mut Vec::new(), budget, f)
}

/// Multisets of size `k` over `0..n` in canonical order, as sorted vectors.
pub(crate) fn multisets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if n == 0 && k > 0 { None } else { Some(vec![0; k]) };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        // advance
        let next = {
            let mut v = out.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if v[i] + 1 < n {
                    let x = v[i] + 1;
                    for slot in &mut v[i..] {
                        *slot = x;
                    }
                    break Some(v);
                }
            }
        };
        cur = next;
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Multisets with no repeated element.
    struct Squarefree;

    impl Extender for Squarefree {
        type State = Option<usize>;
        fn extend(&self, last: &Option<usize>, next: usize) -> Option<Option<usize>> {
            (*last != Some(next)).then_some(Some(next))
        }
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(4, 4).count(), 35);
        assert_eq!(multisets(3, 0).count(), 1);
        assert_eq!(multisets(0, 2).count(), 0);
        let v: Vec<_> = multisets(2, 2).collect();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn longest_squarefree() {
        let universe: Vec<usize> = (0..5).collect();
        let b = Budget::new(1_000_000);
        for parallel in [false, true] {
            let l = longest(&Squarefree, &universe, &None, 100, &b, parallel).unwrap();
            assert_eq!(l.terms, vec![0, 1, 2, 3, 4]);
            assert!(!l.reached_cap);
            let l = longest(&Squarefree, &universe, &None, 3, &b, parallel).unwrap();
            assert_eq!(l.terms, vec![0, 1, 2]);
            assert!(l.reached_cap);
        }
    }

    #[test]
    fn find_and_visit() {
        let universe: Vec<usize> = (0..4).collect();
        let b = Budget::new(1_000_000);
        assert_eq!(
            find_extension(&Squarefree, &universe, &Some(0), 2, &b).unwrap(),
            Some(vec![1, 2])
        );
        assert_eq!(find_extension(&Squarefree, &universe, &None, 5, &b).unwrap(), None);
        let mut n = 0;
        visit(&Squarefree, &universe, &None, 4, &b, &mut |_, _| n += 1).unwrap();
        assert_eq!(n, 16);
    }

    #[test]
    fn budget_trips() {
        let universe: Vec<usize> = (0..10).collect();
        let b = Budget::new(5);
        let err = longest(&Squarefree, &universe, &None, 100, &b, false).err().unwrap();
        assert!(err.is_cap_exceeded());
    }
}
