//! Zero-sum subsequences of Index one over cyclic groups.

use std::ops::ControlFlow;

use serde::Serialize;

use super::{OmegaSet, Provenance};
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::search::{self, SearchConfig};
use crate::sequences::{expand, for_each_zero_sum_sub, index_of, run_lengths, GSequence};

/// The minimal zero-sum sequences of Index one over `Z_n`.
pub fn index_one_set(group: &FiniteAbelianGroup, cfg: &SearchConfig) -> Result<OmegaSet> {
    group.require_cyclic_nontrivial()?;
    let a = OmegaSet::all_minimal(group, cfg)?;
    let mut keep = Vec::new();
    for v in a.members() {
        if index_of(group, v)? == 1 {
            keep.push(v.clone());
        }
    }
    OmegaSet::new(group, keep, Provenance::IndexOne)
}

#[derive(Clone, Debug, Serialize)]
pub struct LemkeKleitmanReport {
    pub n: u64,
    pub sequences_checked: usize,
    pub holds: bool,
    /// The canonically least length-`n` sequence with no zero-sum subsequence
    /// of Index one.
    pub counterexample: Option<GSequence>,
}

/// Checks every sequence of length `n` over `Z_n` for a nonempty zero-sum
/// subsequence of Index one.
pub fn lemke_kleitman_check(n: u64, cfg: &SearchConfig) -> Result<LemkeKleitmanReport> {
    if n < 2 {
        return Err(Error::precondition("n must be at least 2"));
    }
    let g = FiniteAbelianGroup::cyclic(n)?;
    let gens = g.generator_indices();
    let budget = cfg.budget();
    let mut checked = 0;
    for m in search::multisets(g.order(), n as usize) {
        budget.tick()?;
        checked += 1;
        let rl = run_lengths(&m);
        let support: Vec<usize> = rl.iter().map(|p| p.0).collect();
        let counts: Vec<usize> = rl.iter().map(|p| p.1).collect();
        let found = for_each_zero_sum_sub(&g, &support, &counts, None, &mut |pick| {
            let w = expand(&support, pick);
            let one = gens
                .iter()
                .any(|&gen| w.iter().map(|&a| g.ind_idx(gen, a)).sum::<u64>() == n);
            if one {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if found.is_continue() {
            return Ok(LemkeKleitmanReport {
                n,
                sequences_checked: checked,
                holds: false,
                counterexample: Some(GSequence::from_indices(&g, m)),
            });
        }
    }
    Ok(LemkeKleitmanReport {
        n,
        sequences_checked: checked,
        holds: true,
        counterexample: None,
    })
}
