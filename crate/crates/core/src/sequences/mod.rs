//! Sequences over a finite abelian group: finite multisets of elements, the
//! objects of the free commutative monoid `F(G)`.

mod cyclic;
mod integers;
mod two_group;

use std::cmp::Ordering;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::search::{self, Extender, SearchConfig};

pub use cyclic::{graham_pair, index_of, savchev_chen_witness, GrahamPair, SavchevChenWitness};
pub use integers::{distinct_length_pair, small_term_index, IntSequence};
pub use two_group::{elementary_two_certificate, TwoGroupCertificate};

/// A sequence over `G`, kept in canonical form: terms sorted by the canonical
/// element order. Equality is multiset equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GSequence {
    group: FiniteAbelianGroup,
    terms: Vec<usize>,
}

impl GSequence {
    pub fn empty(group: &FiniteAbelianGroup) -> Self {
        GSequence {
            group: group.clone(),
            terms: Vec::new(),
        }
    }

    pub fn new(group: &FiniteAbelianGroup, terms: &[GroupElement]) -> Result<Self> {
        for t in terms {
            group.check_member(t)?;
        }
        Ok(Self::from_indices(
            group,
            terms.iter().map(GroupElement::index).collect(),
        ))
    }

    /// Convenience constructor from `(element, multiplicity)` pairs.
    pub fn from_counts(group: &FiniteAbelianGroup, counts: &[(GroupElement, usize)]) -> Result<Self> {
        let mut terms = Vec::new();
        for (e, k) in counts {
            group.check_member(e)?;
            terms.extend(std::iter::repeat_n(e.index(), *k));
        }
        Ok(Self::from_indices(group, terms))
    }

    /// Cyclic-group shorthand: residues are reduced modulo `|G|`.
    pub fn cyclic(group: &FiniteAbelianGroup, residues: &[i64]) -> Result<Self> {
        group.require_cyclic_nontrivial()?;
        let terms = residues
            .iter()
            .map(|&r| group.reduce(&[r]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, &terms)
    }

    pub(crate) fn from_indices(group: &FiniteAbelianGroup, mut terms: Vec<usize>) -> Self {
        terms.sort_unstable();
        GSequence {
            group: group.clone(),
            terms,
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> Vec<GroupElement> {
        self.terms.iter().map(|&i| self.group.element_at(i)).collect()
    }

    pub(crate) fn indices(&self) -> &[usize] {
        &self.terms
    }

    /// `v_a(T)`.
    pub fn multiplicity(&self, a: &GroupElement) -> usize {
        if a.group() != &self.group {
            return 0;
        }
        self.terms.iter().filter(|&&t| t == a.index()).count()
    }

    /// Distinct terms with their multiplicities, in canonical order.
    pub fn counts(&self) -> Vec<(GroupElement, usize)> {
        run_lengths(&self.terms)
            .into_iter()
            .map(|(i, k)| (self.group.element_at(i), k))
            .collect()
    }

    pub fn support(&self) -> Vec<GroupElement> {
        self.counts().into_iter().map(|(e, _)| e).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.terms.windows(2).all(|w| w[0] != w[1])
    }

    /// Monoid product `T·T'`.
    pub fn concat(&self, other: &GSequence) -> Result<GSequence> {
        self.group.check_same(&other.group)?;
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Ok(Self::from_indices(&self.group, terms))
    }

    /// True when `self` is a subsequence (sub-multiset) of `other`.
    pub fn divides(&self, other: &GSequence) -> bool {
        self.group == other.group && is_submultiset(&self.terms, &other.terms)
    }

    /// `T·a^{-1}`, removing one copy of `a`.
    pub fn remove_one(&self, a: &GroupElement) -> Option<GSequence> {
        let pos = self.terms.iter().position(|&t| t == a.index())?;
        let mut terms = self.terms.clone();
        terms.remove(pos);
        Some(GSequence {
            group: self.group.clone(),
            terms,
        })
    }

    /// `σ(T)`, with `σ(ε) = 0`.
    pub fn sigma(&self) -> GroupElement {
        self.group.element_at(self.group.sum_idx(self.terms.iter().copied()))
    }

    /// `Σ(T)`: sums of nonempty subsequences, in canonical order.
    pub fn subsum_set(&self) -> Vec<GroupElement> {
        subsums(&self.group, &self.terms)
            .iter()
            .map(|i| self.group.element_at(i))
            .collect()
    }

    pub fn is_zero_sum(&self) -> bool {
        self.group.sum_idx(self.terms.iter().copied()) == 0
    }

    pub fn is_zero_sum_free(&self) -> bool {
        !subsums(&self.group, &self.terms).contains(0)
    }

    /// Nonempty, zero-sum, and every single-element deletion is zero-sum free.
    /// Any proper nonempty zero-sum subsequence misses some term and therefore
    /// lies inside one of those deletions.
    pub fn is_minimal_zero_sum(&self) -> bool {
        is_minimal_zero_sum_idx(&self.group, &self.terms)
    }
}

impl PartialOrd for GSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical sequence order: by length, then lexicographically on sorted terms.
impl Ord for GSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms
            .len()
            .cmp(&other.terms.len())
            .then_with(|| self.terms.cmp(&other.terms))
            .then_with(|| self.group.factors().cmp(other.group.factors()))
    }
}

impl fmt::Display for GSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self
            .counts()
            .into_iter()
            .map(|(e, k)| if k == 1 { e.to_string() } else { format!("{e}^{k}") })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

impl fmt::Debug for GSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct SequenceRepr {
    group: FiniteAbelianGroup,
    terms: Vec<(Vec<u64>, usize)>,
}

impl Serialize for GSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SequenceRepr {
            group: self.group.clone(),
            terms: self.counts().into_iter().map(|(e, k)| (e.coords(), k)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SequenceRepr::deserialize(d)?;
        let mut counts = Vec::new();
        for (c, k) in repr.terms {
            if k == 0 {
                return Err(serde::de::Error::custom("zero multiplicity"));
            }
            let e = repr.group.element(&c).map_err(serde::de::Error::custom)?;
            counts.push((e, k));
        }
        GSequence::from_counts(&repr.group, &counts).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn run_lengths(sorted: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &t in sorted {
        match out.last_mut() {
            Some((e, k)) if *e == t => *k += 1,
            _ => out.push((t, 1)),
        }
    }
    out
}

/// Sub-multiset test on sorted index lists.
pub(crate) fn is_submultiset(small: &[usize], big: &[usize]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// `Σ(T)` by dynamic programming over the terms.
pub(crate) fn subsums(g: &FiniteAbelianGroup, terms: &[usize]) -> ElemSet {
    let mut reach = ElemSet::new(g.order());
    for &a in terms {
        let prev: Vec<usize> = reach.iter().collect();
        reach.insert(a);
        for x in prev {
            reach.insert(g.add_idx(x, a));
        }
    }
    reach
}

pub(crate) fn is_minimal_zero_sum_idx(g: &FiniteAbelianGroup, terms: &[usize]) -> bool {
    if terms.is_empty() || g.sum_idx(terms.iter().copied()) != 0 {
        return false;
    }
    let mut rest = Vec::with_capacity(terms.len());
    run_lengths(terms).iter().all(|&(a, _)| {
        rest.clear();
        let pos = terms.iter().position(|&t| t == a).expect("support element");
        rest.extend(terms.iter().enumerate().filter(|&(i, _)| i != pos).map(|(_, &t)| t));
        !subsums(g, &rest).contains(0)
    })
}

/// Calls `f` with the count vector (aligned with `support`) of every nonempty
/// zero-sum sub-multiset of the multiset `support^counts`. When `must_include`
/// is set, only sub-multisets using that support position at least once are
/// visited.
pub(crate) fn for_each_zero_sum_sub(
    g: &FiniteAbelianGroup,
    support: &[usize],
    counts: &[usize],
    must_include: Option<usize>,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &FiniteAbelianGroup,
        support: &[usize],
        counts: &[usize],
        must_include: Option<usize>,
        pos: usize,
        sum: usize,
        picked: &mut Vec<usize>,
        nonempty: bool,
        f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if pos == support.len() {
            if nonempty && sum == 0 {
                return f(picked);
            }
            return ControlFlow::Continue(());
        }
        let lo = usize::from(must_include == Some(pos));
        let mut s = g.mul_idx(lo as i64, support[pos]);
        s = g.add_idx(sum, s);
        for k in lo..=counts[pos] {
            picked.push(k);
            go(
                g,
                support,
                counts,
                must_include,
                pos + 1,
                s,
                picked,
                nonempty || k > 0,
                f,
            )?;
            picked.pop();
            s = g.add_idx(s, support[pos]);
        }
        ControlFlow::Continue(())
    }
    let mut picked = Vec::with_capacity(support.len());
    go(g, support, counts, must_include, 0, 0, &mut picked, false, f)
}

/// Distinct nonempty zero-sum subsequences of `terms` (sorted indices).
#[cfg(test)]
pub(crate) fn zero_sum_subsequences(g: &FiniteAbelianGroup, terms: &[usize]) -> Vec<Vec<usize>> {
    let rl = run_lengths(terms);
    let support: Vec<usize> = rl.iter().map(|p| p.0).collect();
    let counts: Vec<usize> = rl.iter().map(|p| p.1).collect();
    let mut out = Vec::new();
    let _ = for_each_zero_sum_sub(g, &support, &counts, None, &mut |pick| {
        out.push(expand(&support, pick));
        ControlFlow::Continue(())
    });
    out
}

pub(crate) fn expand(support: &[usize], counts: &[usize]) -> Vec<usize> {
    support
        .iter()
        .zip(counts)
        .flat_map(|(&e, &k)| std::iter::repeat_n(e, k))
        .collect()
}

/// Search state for zero-sum free sequences: the subsum set and the total.
#[derive(Clone)]
pub(crate) struct ZsfState {
    pub sums: ElemSet,
    pub total: usize,
}

pub(crate) struct ZeroSumFree<'a> {
    pub group: &'a FiniteAbelianGroup,
}

impl ZeroSumFree<'_> {
    pub(crate) fn root(&self) -> ZsfState {
        ZsfState {
            sums: ElemSet::new(self.group.order()),
            total: 0,
        }
    }

    pub(crate) fn universe(&self) -> Vec<usize> {
        (1..self.group.order()).collect()
    }
}

impl Extender for ZeroSumFree<'_> {
    type State = ZsfState;

    fn extend(&self, st: &ZsfState, a: usize) -> Option<ZsfState> {
        let g = self.group;
        if a == 0 || st.sums.contains(g.neg_idx(a)) {
            return None;
        }
        let mut sums = st.sums.clone();
        sums.insert(a);
        for x in st.sums.iter() {
            sums.insert(g.add_idx(x, a));
        }
        Some(ZsfState {
            sums,
            total: g.add_idx(st.total, a),
        })
    }

    /// Appending a term to a zero-sum free sequence that stays zero-sum free
    /// grows its subsum set by at least one element, and the set avoids 0.
    fn headroom(&self, st: &ZsfState) -> usize {
        self.group.order() - 1 - st.sums.len()
    }
}

/// All minimal zero-sum sequences of length at most `max_len`, in canonical
/// sequence order.
///
/// Each such `V` is `S·(−σ(S))` where `S` is `V` minus one copy of its largest
/// term; `S` is zero-sum free, and conversely every zero-sum free `S` yields a
/// minimal zero-sum `S·(−σ(S))`. Walking zero-sum free `S` and keeping only
/// those whose completing term is at least `max(S)` emits each `V` once.
pub fn enumerate_minimal_zero_sum(
    group: &FiniteAbelianGroup,
    max_len: usize,
    cfg: &SearchConfig,
) -> Result<Vec<GSequence>> {
    if max_len == 0 {
        return Err(Error::precondition("max_len must be at least 1"));
    }
    let zsf = ZeroSumFree { group };
    let mut out = Vec::new();
    search::visit(
        &zsf,
        &zsf.universe(),
        &zsf.root(),
        max_len - 1,
        &cfg.budget(),
        &mut |terms, st| {
            let close = group.neg_idx(st.total);
            if terms.last().is_none_or(|&last| close >= last) {
                let mut v = terms.to_vec();
                v.push(close);
                out.push(GSequence {
                    group: group.clone(),
                    terms: v,
                });
            }
        },
    )?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n).unwrap()
    }

    fn cs(g: &FiniteAbelianGroup, r: &[i64]) -> GSequence {
        GSequence::cyclic(g, r).unwrap()
    }

    fn residues(v: &[GroupElement]) -> Vec<u64> {
        v.iter().map(|e| e.coords()[0]).collect()
    }

    /// Brute force over all `2^|T| − 1` nonempty subselections.
    fn brute_subsums(g: &FiniteAbelianGroup, terms: &[usize]) -> ElemSet {
        let mut s = ElemSet::new(g.order());
        for mask in 1u32..(1 << terms.len()) {
            let sum = g.sum_idx((0..terms.len()).filter(|i| mask >> i & 1 == 1).map(|i| terms[i]));
            s.insert(sum);
        }
        s
    }

    fn brute_minimal(g: &FiniteAbelianGroup, terms: &[usize]) -> bool {
        let n = terms.len();
        if n == 0 || g.sum_idx(terms.iter().copied()) != 0 {
            return false;
        }
        (1u32..(1 << n) - 1).all(|mask| g.sum_idx((0..n).filter(|i| mask >> i & 1 == 1).map(|i| terms[i])) != 0)
    }

    #[test]
    fn sigma_examples() {
        let z5 = z(5);
        assert!(GSequence::empty(&z5).sigma().is_zero());
        let z6 = z(6);
        assert!(cs(&z6, &[1, 2, 3]).sigma().is_zero());
        assert_eq!(cs(&z6, &[1, 1, 1, 1]).sigma().coords(), vec![4]);
    }

    #[test]
    fn subsum_examples() {
        let z6 = z(6);
        assert_eq!(residues(&cs(&z6, &[1, 2]).subsum_set()), vec![1, 2, 3]);
        for n in 2..=9u64 {
            let g = z(n);
            let t = GSequence::from_indices(&g, vec![1; n as usize - 1]);
            assert_eq!(residues(&t.subsum_set()), (1..n).collect::<Vec<_>>());
        }
        assert!(GSequence::empty(&z6).subsum_set().is_empty());
    }

    #[test]
    fn zero_sum_free_examples() {
        let z6 = z(6);
        assert!(cs(&z6, &[1; 5]).is_zero_sum_free());
        assert!(!cs(&z6, &[2, 4]).is_zero_sum_free());
        assert!(!cs(&z6, &[0]).is_zero_sum_free());
        assert!(GSequence::empty(&z6).is_zero_sum_free());
    }

    #[test]
    fn minimal_zero_sum_examples() {
        let z6 = z(6);
        assert!(cs(&z6, &[0]).is_minimal_zero_sum());
        assert!(cs(&z6, &[1, 1, 2, 2]).is_minimal_zero_sum());
        assert!(cs(&z6, &[1, 2, 3]).is_minimal_zero_sum());
        assert!(!cs(&z6, &[1, 2, 3, 0]).is_minimal_zero_sum());
        assert!(!GSequence::empty(&z6).is_minimal_zero_sum());
    }

    #[test]
    fn enumerate_examples() {
        let z4 = z(4);
        let a = enumerate_minimal_zero_sum(&z4, 4, &SearchConfig::default()).unwrap();
        let mut want: Vec<GSequence> = [
            vec![0],
            vec![2, 2],
            vec![1, 3],
            vec![1, 1, 2],
            vec![3, 3, 2],
            vec![1, 1, 1, 1],
            vec![3, 3, 3, 3],
        ]
        .iter()
        .map(|r| cs(&z4, r))
        .collect();
        want.sort();
        assert_eq!(a, want);

        let v4 = FiniteAbelianGroup::elementary_two(2);
        let a = enumerate_minimal_zero_sum(&v4, 3, &SearchConfig::default()).unwrap();
        assert_eq!(a.len(), 5);
        assert!(a.iter().all(|v| v.is_minimal_zero_sum()));

        let z5 = z(5);
        assert_eq!(
            enumerate_minimal_zero_sum(&z5, 5, &SearchConfig::default())
                .unwrap()
                .len(),
            15
        );

        let triv = FiniteAbelianGroup::trivial();
        let a = enumerate_minimal_zero_sum(&triv, 3, &SearchConfig::default()).unwrap();
        assert_eq!(a, vec![GSequence::from_indices(&triv, vec![0])]);

        assert!(enumerate_minimal_zero_sum(&z5, 0, &SearchConfig::default()).is_err());
        let capped = SearchConfig::default().with_node_cap(3);
        assert!(enumerate_minimal_zero_sum(&z5, 5, &capped)
            .unwrap_err()
            .is_cap_exceeded());
    }

    #[test]
    fn enumeration_matches_filtering_all_multisets() {
        for f in [vec![2], vec![3], vec![6], vec![2, 2], vec![2, 4], vec![3, 3]] {
            let g = FiniteAbelianGroup::new(f).unwrap();
            let d = 1 + g.factors().iter().map(|n| n - 1).sum::<u64>() as usize;
            let got = enumerate_minimal_zero_sum(&g, d, &SearchConfig::default()).unwrap();
            let mut want = Vec::new();
            for k in 1..=d {
                for m in search::multisets(g.order(), k) {
                    if brute_minimal(&g, &m) {
                        want.push(GSequence::from_indices(&g, m));
                    }
                }
            }
            want.sort();
            assert_eq!(got, want, "{g}");
            // Nothing longer than D(G) is minimal.
            for m in search::multisets(g.order(), d + 1) {
                assert!(!brute_minimal(&g, &m));
            }
        }
    }

    #[test]
    fn subsums_match_brute_force_exhaustively() {
        for f in [
            vec![2],
            vec![4],
            vec![2, 2],
            vec![6],
            vec![2, 4],
            vec![8],
            vec![2, 2, 2],
        ] {
            let g = FiniteAbelianGroup::new(f).unwrap();
            for k in 0..=4 {
                for m in search::multisets(g.order(), k) {
                    assert_eq!(subsums(&g, &m), brute_subsums(&g, &m));
                }
            }
        }
    }

    #[test]
    fn minimal_matches_definition_exhaustively() {
        for f in [
            vec![2],
            vec![3],
            vec![4],
            vec![2, 2],
            vec![5],
            vec![6],
            vec![2, 4],
            vec![8],
        ] {
            let g = FiniteAbelianGroup::new(f).unwrap();
            for k in 0..=5 {
                for m in search::multisets(g.order(), k) {
                    assert_eq!(is_minimal_zero_sum_idx(&g, &m), brute_minimal(&g, &m), "{m:?}");
                }
            }
        }
    }

    #[test]
    fn zero_sum_subsequences_are_distinct_and_complete() {
        let g = z(4);
        let t = cs(&g, &[0, 1, 2, 3]);
        let mut zs = zero_sum_subsequences(&g, t.indices());
        zs.sort();
        // 2·2 needs two copies of 2
        assert_eq!(zs, vec![vec![0], vec![0, 1, 3], vec![1, 3]]);
    }

    fn group_strategy() -> impl Strategy<Value = FiniteAbelianGroup> {
        prop::sample::select(vec![
            vec![2u64],
            vec![3],
            vec![4],
            vec![2, 2],
            vec![5],
            vec![6],
            vec![7],
            vec![8],
            vec![2, 4],
            vec![2, 2, 2],
        ])
        .prop_map(|f| FiniteAbelianGroup::new(f).unwrap())
    }

    fn seq_pair() -> impl Strategy<Value = (FiniteAbelianGroup, Vec<usize>, Vec<usize>)> {
        group_strategy().prop_flat_map(|g| {
            let n = g.order();
            (
                Just(g),
                prop::collection::vec(0..n, 0..10),
                prop::collection::vec(0..n, 0..10),
            )
        })
    }

    proptest! {
        #[test]
        fn subsum_dp_matches_brute_force((g, t, _) in seq_pair()) {
            prop_assert_eq!(subsums(&g, &t), brute_subsums(&g, &t));
            let mut rev = t.clone();
            rev.reverse();
            prop_assert_eq!(subsums(&g, &rev), subsums(&g, &t));
        }

        #[test]
        fn monoid_laws((g, a, b) in seq_pair()) {
            let s = GSequence::from_indices(&g, a);
            let t = GSequence::from_indices(&g, b);
            let e = GSequence::empty(&g);
            prop_assert_eq!(s.concat(&t).unwrap(), t.concat(&s).unwrap());
            prop_assert_eq!(s.concat(&e).unwrap(), s.clone());
            let st = s.concat(&t).unwrap();
            for x in g.elements() {
                prop_assert_eq!(st.multiplicity(&x), s.multiplicity(&x) + t.multiplicity(&x));
            }
            prop_assert!(s.divides(&st) && t.divides(&st));
            let u = s.concat(&s).unwrap();
            prop_assert_eq!(u.concat(&t).unwrap(), s.concat(&s.concat(&t).unwrap()).unwrap());
        }

        #[test]
        fn minimal_matches_brute_force((g, t, _) in seq_pair()) {
            let mut t = t;
            t.truncate(8);
            t.sort_unstable();
            prop_assert_eq!(is_minimal_zero_sum_idx(&g, &t), brute_minimal(&g, &t));
        }
    }

    #[test]
    fn json_round_trip() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        let s = GSequence::new(
            &g,
            &[
                g.element(&[1, 0]).unwrap(),
                g.element(&[0, 1]).unwrap(),
                g.element(&[0, 1]).unwrap(),
            ],
        )
        .unwrap();
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"group": {"factors": [2, 4]}, "terms": [[[0, 1], 2], [[1, 0], 1]]})
        );
        let back: GSequence = serde_json::from_value(j).unwrap();
        assert_eq!(back, s);
        let bad = serde_json::json!({"group": {"factors": [4]}, "terms": [[[5], 1]]});
        assert!(serde_json::from_value::<GSequence>(bad).is_err());
    }

    #[test]
    fn display() {
        let z6 = z(6);
        assert_eq!(cs(&z6, &[1, 1, 4]).to_string(), "1^2·4");
        assert_eq!(GSequence::empty(&z6).to_string(), "ε");
    }
}
