//! Universal zero-sum invariants `d_Ω(G)`, the Davenport constant, minimal
//! sets and the sets `Q_t(G)`.

mod closed_forms;
mod index_one;
mod minimal;
mod witness;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::search::{self, Extender, SearchConfig};
use crate::sequences::{enumerate_minimal_zero_sum, run_lengths, GSequence, ZeroSumFree};

pub use closed_forms::{closed_form_minimal_intersection, closed_form_q_t, cyclic_falsifier, non_cyclic_falsifier};
pub use index_one::{index_one_set, lemke_kleitman_check, LemkeKleitmanReport};
pub use minimal::{is_minimal_set, minimalize, minimalize_with_order};
pub use witness::{
    a_g_minimality, in_every_minimal_set, minimal_sets_intersection, q_t, q_t_membership, AgMinimality,
    MembershipWitness,
};

/// Where an [`OmegaSet`] came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Explicit,
    /// All minimal zero-sum sequences.
    AllMinimal,
    /// All minimal zero-sum sequences with some removed.
    AllMinimalMinus,
    /// Minimal zero-sum sequences of Index one.
    IndexOne,
    /// Members of every minimal subset of `A(G)`, found by search.
    MinimalIntersection,
    MinimalIntersectionClosedForm,
    /// `Q_t(G)` found by search.
    QT(usize),
    QTClosedForm(usize),
    /// All nonempty zero-sum sequences up to a length.
    ZeroSumUpTo(usize),
    /// Output of a greedy minimalization.
    Minimalized,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Explicit => write!(f, "explicit"),
            Provenance::AllMinimal => write!(f, "all_minimal"),
            Provenance::AllMinimalMinus => write!(f, "all_minimal_minus"),
            Provenance::IndexOne => write!(f, "index_one"),
            Provenance::MinimalIntersection => write!(f, "minimal_intersection"),
            Provenance::MinimalIntersectionClosedForm => write!(f, "minimal_intersection_closed_form"),
            Provenance::QT(t) => write!(f, "q_t({t})"),
            Provenance::QTClosedForm(t) => write!(f, "q_t_closed_form({t})"),
            Provenance::ZeroSumUpTo(l) => write!(f, "zero_sum_up_to({l})"),
            Provenance::Minimalized => write!(f, "minimalized"),
        }
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let arg = |prefix: &str| -> Option<usize> {
            s.strip_prefix(prefix)?
                .strip_prefix('(')?
                .strip_suffix(')')?
                .parse()
                .ok()
        };
        Ok(match s {
            "explicit" => Provenance::Explicit,
            "all_minimal" => Provenance::AllMinimal,
            "all_minimal_minus" => Provenance::AllMinimalMinus,
            "index_one" => Provenance::IndexOne,
            "minimal_intersection" => Provenance::MinimalIntersection,
            "minimal_intersection_closed_form" => Provenance::MinimalIntersectionClosedForm,
            "minimalized" => Provenance::Minimalized,
            _ => {
                if let Some(t) = arg("q_t_closed_form") {
                    Provenance::QTClosedForm(t)
                } else if let Some(t) = arg("q_t") {
                    Provenance::QT(t)
                } else if let Some(l) = arg("zero_sum_up_to") {
                    Provenance::ZeroSumUpTo(l)
                } else {
                    return Err(Error::MalformedPresentation(format!("unknown provenance {s:?}")));
                }
            }
        })
    }
}

impl Serialize for Provenance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Provenance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite set of nonempty sequences over one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSet {
    group: FiniteAbelianGroup,
    members: BTreeSet<GSequence>,
    provenance: Provenance,
}

impl OmegaSet {
    pub fn new(
        group: &FiniteAbelianGroup,
        members: impl IntoIterator<Item = GSequence>,
        provenance: Provenance,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for v in members {
            group.check_same(v.group())?;
            if v.is_empty() {
                return Err(Error::precondition("the empty sequence cannot belong to Ω"));
            }
            set.insert(v);
        }
        Ok(OmegaSet {
            group: group.clone(),
            members: set,
            provenance,
        })
    }

    pub fn explicit(group: &FiniteAbelianGroup, members: impl IntoIterator<Item = GSequence>) -> Result<Self> {
        Self::new(group, members, Provenance::Explicit)
    }

    /// `A(G)`. No minimal zero-sum sequence is longer than `|G|`.
    pub fn all_minimal(group: &FiniteAbelianGroup, cfg: &SearchConfig) -> Result<Self> {
        let members = enumerate_minimal_zero_sum(group, group.order(), cfg)?;
        Self::new(group, members, Provenance::AllMinimal)
    }

    /// Every nonempty zero-sum sequence of length at most `max_len`.
    pub fn zero_sum_up_to(group: &FiniteAbelianGroup, max_len: usize, cfg: &SearchConfig) -> Result<Self> {
        let budget = cfg.budget();
        let mut members = Vec::new();
        for k in 1..=max_len {
            for m in search::multisets(group.order(), k) {
                budget.tick()?;
                if group.sum_idx(m.iter().copied()) == 0 {
                    members.push(GSequence::from_indices(group, m));
                }
            }
        }
        Self::new(group, members, Provenance::ZeroSumUpTo(max_len))
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn members(&self) -> impl Iterator<Item = &GSequence> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &GSequence) -> bool {
        self.members.contains(v)
    }

    pub fn is_subset(&self, other: &OmegaSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// This set with `v` removed.
    pub fn without(&self, v: &GSequence) -> OmegaSet {
        let mut out = self.clone();
        out.members.remove(v);
        if out.provenance == Provenance::AllMinimal {
            out.provenance = Provenance::AllMinimalMinus;
        }
        out
    }

    /// Members of length at most `max_len`.
    pub fn truncated(&self, max_len: usize) -> OmegaSet {
        OmegaSet {
            group: self.group.clone(),
            members: self.members.iter().filter(|v| v.len() <= max_len).cloned().collect(),
            provenance: self.provenance.clone(),
        }
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance) -> OmegaSet {
        self.provenance = provenance;
        self
    }

    /// True when some member is a subsequence of `t`.
    pub fn hits(&self, t: &GSequence) -> bool {
        self.members.iter().any(|v| v.divides(t))
    }

    /// True when `A(G) ⊆ Ω ⊆ B(G)`. Then a sequence has a subsequence in `Ω`
    /// exactly when it has a nonempty zero-sum subsequence, because every
    /// nonempty zero-sum sequence contains a minimal one.
    pub(crate) fn is_zero_sum_complete(&self, cfg: &SearchConfig) -> Result<bool> {
        if !self.members.iter().all(GSequence::is_zero_sum) {
            return Ok(false);
        }
        let a = enumerate_minimal_zero_sum(&self.group, self.group.order(), cfg)?;
        Ok(a.iter().all(|v| self.members.contains(v)))
    }
}

#[derive(Serialize, Deserialize)]
struct OmegaRepr {
    group: FiniteAbelianGroup,
    members: Vec<GSequence>,
    provenance: Provenance,
}

impl Serialize for OmegaSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OmegaRepr {
            group: self.group.clone(),
            members: self.members.iter().cloned().collect(),
            provenance: self.provenance.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OmegaSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = OmegaRepr::deserialize(d)?;
        OmegaSet::new(&r.group, r.members, r.provenance).map_err(serde::de::Error::custom)
    }
}

/// Value of an invariant: exact, or "at least one more than the cap".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InvariantValue {
    Exact(usize),
    /// An avoiding sequence of this length exists; the search stopped there.
    AboveCap {
        above_cap: usize,
    },
}

impl InvariantValue {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            InvariantValue::Exact(v) => Some(v),
            InvariantValue::AboveCap { .. } => None,
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Exact(v) => write!(f, "{v}"),
            InvariantValue::AboveCap { above_cap } => write!(f, "> {above_cap}"),
        }
    }
}

/// An invariant value with its extremal certificate: for `Exact(ℓ)` a
/// sequence of length `ℓ − 1` that avoids `Ω`, for `AboveCap(c)` one of
/// length `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub value: InvariantValue,
    pub witness: GSequence,
}

impl InvariantResult {
    pub(crate) fn from_longest(group: &FiniteAbelianGroup, l: search::Longest) -> Self {
        let len = l.terms.len();
        InvariantResult {
            value: if l.reached_cap {
                InvariantValue::AboveCap { above_cap: len }
            } else {
                InvariantValue::Exact(len + 1)
            },
            witness: GSequence::from_indices(group, l.terms),
        }
    }

    /// Re-checks the certificate against `Ω`.
    pub fn witness_is_valid(&self, omega: &OmegaSet) -> bool {
        let want = match self.value {
            InvariantValue::Exact(v) => v - 1,
            InvariantValue::AboveCap { above_cap } => above_cap,
        };
        self.witness.len() == want && !omega.hits(&self.witness)
    }
}

/// `D(G)`: one more than the length of a longest zero-sum free sequence.
/// The witness is the canonically least longest one.
pub fn davenport(group: &FiniteAbelianGroup, cfg: &SearchConfig) -> Result<InvariantResult> {
    let zsf = ZeroSumFree { group };
    let l = search::longest(
        &zsf,
        &zsf.universe(),
        &zsf.root(),
        usize::MAX,
        &cfg.budget(),
        cfg.parallel(),
    )?;
    Ok(InvariantResult::from_longest(group, l))
}

/// Sequences with no subsequence in a fixed `Ω`. State is the count vector.
pub(crate) struct Avoid {
    /// For each element, the members containing it, as `(element, count)` lists.
    by_elem: Vec<Vec<Vec<(usize, u32)>>>,
    order: usize,
}

impl Avoid {
    pub(crate) fn new(omega: &OmegaSet) -> Self {
        let order = omega.group().order();
        let mut by_elem = vec![Vec::new(); order];
        for v in omega.members() {
            let counts: Vec<(usize, u32)> = run_lengths(v.indices())
                .into_iter()
                .map(|(e, k)| (e, k as u32))
                .collect();
            for &(e, _) in &counts {
                by_elem[e].push(counts.clone());
            }
        }
        Avoid { by_elem, order }
    }

    pub(crate) fn root(&self) -> Vec<u32> {
        vec![0; self.order]
    }

    pub(crate) fn universe(&self) -> Vec<usize> {
        (0..self.order).collect()
    }
}

impl Extender for Avoid {
    type State = Vec<u32>;

    fn extend(&self, counts: &Vec<u32>, a: usize) -> Option<Vec<u32>> {
        let mut next = counts.clone();
        next[a] += 1;
        let hit = self.by_elem[a].iter().any(|v| v.iter().all(|&(e, c)| next[e] >= c));
        (!hit).then_some(next)
    }
}

/// `d_Ω(G)`: the least `ℓ` such that every length-`ℓ` sequence has a
/// subsequence in `Ω`, or `AboveCap` when an avoiding sequence reaches the
/// length cap (default `2|G|`). An empty `Ω` is avoided by everything.
pub fn d_omega(group: &FiniteAbelianGroup, omega: &OmegaSet, cfg: &SearchConfig) -> Result<InvariantResult> {
    group.check_same(omega.group())?;
    let cap = cfg.length_cap_for(group.order());
    if omega.is_empty() {
        return Ok(InvariantResult {
            value: InvariantValue::AboveCap { above_cap: cap },
            witness: GSequence::from_indices(group, vec![0; cap]),
        });
    }
    if omega.is_zero_sum_complete(cfg)? {
        let d = davenport(group, cfg)?;
        if d.witness.len() < cap {
            return Ok(d);
        }
    }
    let avoid = Avoid::new(omega);
    let l = search::longest(
        &avoid,
        &avoid.universe(),
        &avoid.root(),
        cap,
        &cfg.budget(),
        cfg.parallel(),
    )?;
    Ok(InvariantResult::from_longest(group, l))
}

/// The canonically least sequence of length `len` avoiding `Ω`, if any.
pub(crate) fn find_avoider(
    group: &FiniteAbelianGroup,
    omega: &OmegaSet,
    len: usize,
    cfg: &SearchConfig,
) -> Result<Option<GSequence>> {
    let avoid = Avoid::new(omega);
    Ok(
        search::find_extension(&avoid, &avoid.universe(), &avoid.root(), len, &cfg.budget())?
            .map(|t| GSequence::from_indices(group, t)),
    )
}
