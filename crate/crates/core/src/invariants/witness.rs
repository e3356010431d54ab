//! Membership in every minimal set and in `Q_t(G)`, decided by searching for
//! a witness sequence `T = V·R`.
//!
//! `V` lies in every minimal subset of `A(G)` iff some `T` of length `D(G)`
//! has all its minimal zero-sum subsequences equal to `V`, equivalently every
//! nonempty zero-sum subsequence of `T` contains `V`. `V ∈ Q_t(G)` iff some
//! `T` of length `t` has every nonempty zero-sum subsequence equal to `V`.
//! Both conditions pass to subsequences of `T`, so `R` is grown term by term
//! and each step only inspects zero-sum subsequences using the new term.

use std::ops::ControlFlow;

use serde::Serialize;

use super::{closed_form_minimal_intersection, closed_form_q_t, davenport, OmegaSet, Provenance};
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::search::{self, Extender, SearchConfig};
use crate::sequences::{for_each_zero_sum_sub, GSequence};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    /// Every nonempty zero-sum subsequence contains `V`.
    Contains,
    /// Every nonempty zero-sum subsequence is `V`.
    Equals,
}

struct WitnessSearch<'a> {
    group: &'a FiniteAbelianGroup,
    v: Vec<u32>,
    rule: Rule,
}

impl WitnessSearch<'_> {
    fn root(&self) -> Vec<u32> {
        self.v.clone()
    }
}

impl Extender for WitnessSearch<'_> {
    type State = Vec<u32>;

    fn extend(&self, counts: &Vec<u32>, a: usize) -> Option<Vec<u32>> {
        let mut next = counts.clone();
        next[a] += 1;
        let support: Vec<usize> = (0..next.len()).filter(|&e| next[e] > 0).collect();
        let mult: Vec<usize> = support.iter().map(|&e| next[e] as usize).collect();
        let pos = support.iter().position(|&e| e == a).expect("a is in the support");
        let bad = for_each_zero_sum_sub(self.group, &support, &mult, Some(pos), &mut |pick| {
            let ok = match self.rule {
                Rule::Contains => support.iter().zip(pick).all(|(&e, &k)| k as u32 >= self.v[e]),
                Rule::Equals => support.iter().zip(pick).all(|(&e, &k)| k as u32 == self.v[e]),
            };
            if ok {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(())
            }
        });
        bad.is_continue().then_some(next)
    }
}

fn dense(group: &FiniteAbelianGroup, v: &GSequence) -> Vec<u32> {
    let mut c = vec![0; group.order()];
    for &t in v.indices() {
        c[t] += 1;
    }
    c
}

fn witness_search(
    group: &FiniteAbelianGroup,
    v: &GSequence,
    len: usize,
    rule: Rule,
    cfg: &SearchConfig,
) -> Result<Option<GSequence>> {
    if !v.is_minimal_zero_sum() || v.len() > len {
        return Ok(None);
    }
    let s = WitnessSearch {
        group,
        v: dense(group, v),
        rule,
    };
    let universe: Vec<usize> = (0..group.order()).collect();
    let r = search::find_extension(&s, &universe, &s.root(), len - v.len(), &cfg.budget())?;
    Ok(r.map(|r| {
        let mut t = v.indices().to_vec();
        t.extend(r);
        GSequence::from_indices(group, t)
    }))
}

fn check_candidate(group: &FiniteAbelianGroup, v: &GSequence) -> Result<()> {
    group.check_same(v.group())?;
    if v.is_empty() || !v.is_zero_sum() {
        return Err(Error::precondition("V must be a nonempty zero-sum sequence"));
    }
    Ok(())
}

fn davenport_value(group: &FiniteAbelianGroup, cfg: &SearchConfig) -> Result<usize> {
    Ok(davenport(group, cfg)?.value.exact().expect("D(G) is finite"))
}

/// A sequence `T` certifying membership of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipWitness {
    pub v: GSequence,
    pub t: GSequence,
}

/// Whether `V` belongs to every minimal subset of `A(G)` with respect to
/// `D(G)`; on success returns the canonically least witness `T` of length `D(G)`.
pub fn in_every_minimal_set(
    group: &FiniteAbelianGroup,
    v: &GSequence,
    cfg: &SearchConfig,
) -> Result<Option<GSequence>> {
    check_candidate(group, v)?;
    let d = davenport_value(group, cfg)?;
    if v.len() > d {
        return Err(Error::precondition(format!("|V| = {} exceeds D(G) = {d}", v.len())));
    }
    witness_search(group, v, d, Rule::Contains, cfg)
}

/// Whether `V ∈ Q_t(G)`; on success returns a witness `T` of length `t`.
pub fn q_t_membership(
    group: &FiniteAbelianGroup,
    v: &GSequence,
    t: usize,
    cfg: &SearchConfig,
) -> Result<Option<GSequence>> {
    check_candidate(group, v)?;
    let d = davenport_value(group, cfg)?;
    if t < d {
        return Err(Error::precondition(format!("Q_t needs t ≥ D(G) = {d}, got {t}")));
    }
    if v.len() > t {
        return Err(Error::precondition(format!("|V| = {} exceeds t = {t}", v.len())));
    }
    witness_search(group, v, t, Rule::Equals, cfg)
}

/// `Q_t(G)`. A member must be minimal (a proper zero-sum subsequence of `V`
/// would itself be a zero-sum subsequence of the witness), so candidates are
/// `A(G)`, narrowed through `Q_D ⊇ Q_{D+1} ⊇ … ⊇ Q_t`. For cyclic groups of
/// order at least 3 the result is compared with the closed form.
pub fn q_t(group: &FiniteAbelianGroup, t: usize, cfg: &SearchConfig) -> Result<OmegaSet> {
    let d = davenport_value(group, cfg)?;
    if t < d {
        return Err(Error::precondition(format!("Q_t needs t ≥ D(G) = {d}, got {t}")));
    }
    let mut cands: Vec<GSequence> = OmegaSet::all_minimal(group, cfg)?.members().cloned().collect();
    for s in d..=t {
        let mut kept = Vec::new();
        for v in cands {
            if witness_search(group, &v, s, Rule::Equals, cfg)?.is_some() {
                kept.push(v);
            }
        }
        cands = kept;
        if cands.is_empty() {
            break;
        }
    }
    let out = OmegaSet::new(group, cands, Provenance::QT(t))?;
    if group.is_cyclic() && group.order() >= 3 {
        let closed = closed_form_q_t(group, t)?;
        if !same_members(&out, &closed) {
            return Err(Error::Falsified(format!(
                "Q_{t}({group}) by search has {} members, closed form has {}",
                out.len(),
                closed.len()
            )));
        }
    }
    Ok(out)
}

fn same_members(a: &OmegaSet, b: &OmegaSet) -> bool {
    a.len() == b.len() && a.is_subset(b)
}

/// Each member of `A(G)` with its witness for membership in every minimal set.
fn minimal_set_witnesses(
    group: &FiniteAbelianGroup,
    cfg: &SearchConfig,
) -> Result<Vec<(GSequence, Option<GSequence>)>> {
    let d = davenport_value(group, cfg)?;
    let a = OmegaSet::all_minimal(group, cfg)?;
    a.members()
        .map(|v| Ok((v.clone(), witness_search(group, v, d, Rule::Contains, cfg)?)))
        .collect()
}

/// The members of `A(G)` lying in every minimal subset of `A(G)`, by search.
/// For cyclic groups of order at least 3 the result is compared with the
/// closed form.
pub fn minimal_sets_intersection(group: &FiniteAbelianGroup, cfg: &SearchConfig) -> Result<OmegaSet> {
    let found = minimal_set_witnesses(group, cfg)?
        .into_iter()
        .filter_map(|(v, w)| w.map(|_| v));
    let out = OmegaSet::new(group, found, Provenance::MinimalIntersection)?;
    if group.is_cyclic() && group.order() >= 3 {
        let closed = closed_form_minimal_intersection(group)?;
        if !same_members(&out, &closed) {
            return Err(Error::Falsified(format!(
                "minimal-set intersection of {group} by search has {} members, closed form has {}",
                out.len(),
                closed.len()
            )));
        }
    }
    Ok(out)
}

/// Whether `A(G)` is a minimal set with respect to `D(G)`.
#[derive(Clone, Debug, Serialize)]
pub struct AgMinimality {
    pub group: FiniteAbelianGroup,
    pub minimal: bool,
    pub members: usize,
    /// Members with their witness sequences.
    pub witnesses: Vec<MembershipWitness>,
    /// Members whose removal keeps the value `D(G)`.
    pub falsifiers: Vec<GSequence>,
    /// The known answer, when the group is covered by the structure results;
    /// `None` marks an open case that is only probed.
    pub expected: Option<bool>,
}

/// The known answer: for cyclic `Z_n` with `n ≥ 3` exactly when `n ≤ 5`; for
/// other nontrivial groups of exponent other than 3 exactly for `Z_4`, `Z_5`
/// and `Z_2^r`.
fn expected_minimality(group: &FiniteAbelianGroup) -> Option<bool> {
    if group.is_trivial() {
        return None;
    }
    if group.is_cyclic() && group.order() >= 3 {
        return Some(group.order() <= 5);
    }
    if group.exponent() == 3 {
        return None;
    }
    Some(group.is_elementary_two() || (group.is_cyclic() && matches!(group.order(), 4 | 5)))
}

/// Decides whether `A(G)` is minimal. Reports a falsification when the
/// answer contradicts the known characterization; groups of exponent 3 are
/// probed only.
pub fn a_g_minimality(group: &FiniteAbelianGroup, cfg: &SearchConfig) -> Result<AgMinimality> {
    let all = minimal_set_witnesses(group, cfg)?;
    let members = all.len();
    let mut witnesses = Vec::new();
    let mut falsifiers = Vec::new();
    for (v, w) in all {
        match w {
            Some(t) => witnesses.push(MembershipWitness { v, t }),
            None => falsifiers.push(v),
        }
    }
    let report = AgMinimality {
        group: group.clone(),
        minimal: falsifiers.is_empty(),
        members,
        witnesses,
        falsifiers,
        expected: expected_minimality(group),
    };
    if let Some(e) = report.expected {
        if e != report.minimal {
            return Err(Error::Falsified(format!(
                "A({group}) minimal = {}, expected {e}",
                report.minimal
            )));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{cyclic_falsifier, non_cyclic_falsifier};

    fn z(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n).unwrap()
    }

    fn cs(g: &FiniteAbelianGroup, r: &[i64]) -> GSequence {
        GSequence::cyclic(g, r).unwrap()
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    /// Every zero-sum sub-multiset of `t`, including ones that repeat.
    fn zero_sum_subs(g: &FiniteAbelianGroup, t: &GSequence) -> Vec<GSequence> {
        crate::sequences::zero_sum_subsequences(g, t.indices())
            .into_iter()
            .map(|w| GSequence::from_indices(g, w))
            .collect()
    }

    /// Independent oracle for `Q_t` membership: scan all sequences of length
    /// `t` and collect `V` whenever the zero-sum subsequences are exactly `{V}`.
    fn q_t_by_sweep(g: &FiniteAbelianGroup, t: usize) -> Vec<GSequence> {
        let mut out = std::collections::BTreeSet::new();
        for m in search::multisets(g.order(), t) {
            let seq = GSequence::from_indices(g, m);
            let subs = zero_sum_subs(g, &seq);
            if subs.len() == 1 {
                out.insert(subs[0].clone());
            }
        }
        out.into_iter().collect()
    }

    /// Independent oracle for membership in every minimal set: collect `V`
    /// whenever all minimal zero-sum subsequences of some length-`D` sequence equal `V`.
    fn intersection_by_sweep(g: &FiniteAbelianGroup, d: usize) -> Vec<GSequence> {
        let mut out = std::collections::BTreeSet::new();
        for m in search::multisets(g.order(), d) {
            let seq = GSequence::from_indices(g, m);
            let mins: std::collections::BTreeSet<GSequence> = zero_sum_subs(g, &seq)
                .into_iter()
                .filter(GSequence::is_minimal_zero_sum)
                .collect();
            if mins.len() == 1 {
                out.insert(mins.into_iter().next().unwrap());
            }
        }
        out.into_iter().collect()
    }

    #[test]
    fn in_every_minimal_set_examples() {
        let z6 = z(6);
        assert_eq!(
            in_every_minimal_set(&z6, &cs(&z6, &[1; 6]), &cfg()).unwrap(),
            Some(cs(&z6, &[1; 6]))
        );
        let t = in_every_minimal_set(&z6, &cs(&z6, &[1, 1, 4]), &cfg())
            .unwrap()
            .unwrap();
        assert_eq!(t.len(), 6);
        assert!(cs(&z6, &[1, 1, 4]).divides(&t));
        // 1^5·4 qualifies as well; the search returns the canonically least.
        let zs = zero_sum_subs(&z6, &cs(&z6, &[1, 1, 1, 1, 1, 4]));
        assert!(zs.iter().all(|w| cs(&z6, &[1, 1, 4]).divides(w)));
        assert_eq!(in_every_minimal_set(&z6, &cs(&z6, &[1, 2, 3]), &cfg()).unwrap(), None);
        assert!(in_every_minimal_set(&z6, &cs(&z6, &[1, 2]), &cfg()).is_err());
    }

    #[test]
    fn q_t_membership_examples() {
        let z6 = z(6);
        assert_eq!(
            q_t_membership(&z6, &cs(&z6, &[1; 6]), 7, &cfg()).unwrap(),
            Some(cs(&z6, &[1; 7]))
        );
        assert_eq!(q_t_membership(&z6, &cs(&z6, &[0]), 7, &cfg()).unwrap(), None);
        let t = q_t_membership(&z6, &cs(&z6, &[1, 5]), 6, &cfg()).unwrap().unwrap();
        assert_eq!(zero_sum_subs(&z6, &t), vec![cs(&z6, &[1, 5])]);
        assert!(q_t_membership(&z6, &cs(&z6, &[1, 5]), 5, &cfg()).is_err());
    }

    #[test]
    fn q_t_examples() {
        let z6 = z(6);
        assert_eq!(q_t(&z6, 6, &cfg()).unwrap().len(), 12);
        let z5 = z(5);
        for t in 6..=9 {
            let q = q_t(&z5, t, &cfg()).unwrap();
            let want: Vec<GSequence> = (1..5).map(|a| cs(&z5, &[a; 5])).collect();
            assert_eq!(q.members().cloned().collect::<Vec<_>>(), want);
        }
        assert!(q_t(&z5, 10, &cfg()).unwrap().is_empty());
        assert!(q_t(&z5, 4, &cfg()).is_err());
    }

    #[test]
    fn q_t_matches_sweep_oracle() {
        for (f, ts) in [
            (vec![3u64], 3..=6),
            (vec![4], 4..=8),
            (vec![2, 2], 3..=6),
            (vec![5], 5..=10),
            (vec![6], 6..=9),
            (vec![2, 4], 5..=7),
        ] {
            let g = FiniteAbelianGroup::new(f).unwrap();
            for t in ts {
                let got: Vec<GSequence> = q_t(&g, t, &cfg()).unwrap().members().cloned().collect();
                assert_eq!(got, q_t_by_sweep(&g, t), "{g}, t = {t}");
            }
        }
    }

    #[test]
    fn intersection_matches_sweep_oracle() {
        for f in [
            vec![3u64],
            vec![4],
            vec![5],
            vec![6],
            vec![7],
            vec![2, 2],
            vec![2, 4],
            vec![3, 3],
        ] {
            let g = FiniteAbelianGroup::new(f).unwrap();
            let d = davenport_value(&g, &cfg()).unwrap();
            let got: Vec<GSequence> = minimal_sets_intersection(&g, &cfg())
                .unwrap()
                .members()
                .cloned()
                .collect();
            assert_eq!(got, intersection_by_sweep(&g, d), "{g}");
        }
    }

    #[test]
    fn intersection_examples() {
        let z5 = z(5);
        let all = OmegaSet::all_minimal(&z5, &cfg()).unwrap();
        let x = minimal_sets_intersection(&z5, &cfg()).unwrap();
        assert_eq!(x.len(), 15);
        assert!(all.is_subset(&x));
        // 13, not 12: the closed form includes 3^2 (witness 3^6) besides the
        // twelve members of Q_6(Z_6).
        let z6 = z(6);
        let x = minimal_sets_intersection(&z6, &cfg()).unwrap();
        assert_eq!(x.len(), 13);
        assert!(x.contains(&cs(&z6, &[3, 3])));
        assert!(q_t(&z6, 6, &cfg()).unwrap().is_subset(&x));
        let z8 = z(8);
        let x = minimal_sets_intersection(&z8, &cfg()).unwrap();
        assert!(x.contains(&cs(&z8, &[1, 1, 3, 3])));
        assert!(x.contains(&cs(&z8, &[5, 5, 7, 7])));
    }

    #[test]
    fn q_chain_is_nested() {
        for n in 3..=6u64 {
            let g = z(n);
            let mut prev = q_t(&g, n as usize, &cfg()).unwrap();
            for t in n as usize + 1..=2 * n as usize {
                let cur = q_t(&g, t, &cfg()).unwrap();
                assert!(cur.is_subset(&prev));
                prev = cur;
            }
        }
    }

    #[test]
    fn a_g_minimality_examples() {
        let v4 = FiniteAbelianGroup::elementary_two(2);
        assert!(a_g_minimality(&v4, &cfg()).unwrap().minimal);
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        let r = a_g_minimality(&g, &cfg()).unwrap();
        assert!(!r.minimal);
        let v = non_cyclic_falsifier(&g).unwrap();
        assert_eq!(v.to_string(), "(0,1)·(0,2)·(1,0)·(1,1)");
        assert!(r.falsifiers.contains(&v));
        let z6 = z(6);
        let r = a_g_minimality(&z6, &cfg()).unwrap();
        assert!(!r.minimal);
        assert!(r.falsifiers.contains(&cs(&z6, &[1, 2, 3])));
        assert_eq!(cyclic_falsifier(&z6).unwrap(), cs(&z6, &[1, 2, 3]));
        for w in &r.witnesses {
            assert_eq!(w.t.len(), 6);
            assert!(zero_sum_subs(&z6, &w.t).iter().all(|x| w.v.divides(x)));
        }
        let triv = FiniteAbelianGroup::trivial();
        let r = a_g_minimality(&triv, &cfg()).unwrap();
        assert!(r.minimal);
        assert_eq!(r.expected, None);
    }
}
