//! Minimal sets: testing minimality and extracting a minimal subset.
//!
//! For `Ω' ⊆ Ω` we always have `d_{Ω'} ≥ d_Ω`. So when `d_Ω = t`, dropping
//! `V` keeps the value exactly when no sequence of length `t` avoids
//! `Ω \ {V}`, and a member that cannot be dropped stays undroppable as the set
//! shrinks. One pass over the members therefore suffices.

use super::{d_omega, find_avoider, InvariantValue, OmegaSet, Provenance};
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::search::SearchConfig;
use crate::sequences::GSequence;

/// `d_Ω = t` and `d_{Ω \ {V}} ≠ t` for every member `V`.
pub fn is_minimal_set(group: &FiniteAbelianGroup, omega: &OmegaSet, t: usize, cfg: &SearchConfig) -> Result<bool> {
    if t == 0 {
        return Err(Error::precondition("t must be positive"));
    }
    if d_omega(group, omega, cfg)?.value != InvariantValue::Exact(t) {
        return Ok(false);
    }
    for v in omega.members() {
        if find_avoider(group, &omega.without(v), t, cfg)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A minimal subset of `A` with respect to `t`, given `d_A = t`: truncate to
/// length `t`, then drop members greedily in canonical order.
pub fn minimalize(group: &FiniteAbelianGroup, a: &OmegaSet, t: usize, cfg: &SearchConfig) -> Result<OmegaSet> {
    let order: Vec<GSequence> = a.members().cloned().collect();
    minimalize_with_order(group, a, t, &order, cfg)
}

/// As [`minimalize`], trying removals in the given order; members missing
/// from `order` are tried afterwards in canonical order.
pub fn minimalize_with_order(
    group: &FiniteAbelianGroup,
    a: &OmegaSet,
    t: usize,
    order: &[GSequence],
    cfg: &SearchConfig,
) -> Result<OmegaSet> {
    let d = d_omega(group, a, cfg)?.value;
    if d != InvariantValue::Exact(t) {
        return Err(Error::precondition(format!("d_A(G) is {d}, not {t}")));
    }
    let mut cur = a.truncated(t);
    let rest: Vec<GSequence> = cur.members().filter(|v| !order.contains(v)).cloned().collect();
    for v in order.iter().chain(&rest) {
        if !cur.contains(v) {
            continue;
        }
        let smaller = cur.without(v);
        if find_avoider(group, &smaller, t, cfg)?.is_none() {
            cur = smaller;
        }
    }
    Ok(cur.with_provenance(Provenance::Minimalized))
}
