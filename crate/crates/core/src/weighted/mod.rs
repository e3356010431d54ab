//! Weighted zero-sum invariants over a finite set `Ψ` of homomorphisms
//! `F → G`: `Ψ`-subsequences, `D_Ψ(G)`, `d_{Ω;Ψ}(G)`, minimal sets and the
//! kernel-coset bound.

mod integers;

use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{enumerate_homs, FiniteAbelianGroup, GroupElement, Homomorphism};
use crate::invariants::{InvariantResult, InvariantValue, OmegaSet, Provenance};
use crate::search::{self, Extender, SearchConfig};
use crate::sequences::{run_lengths, GSequence};

pub use integers::{
    pair_weights, scalar_weights_demo, IntWeightDemo, ObstructionCheck, PairCheck, PairWitness, ScalarWeightsReport,
    SingletonCheck,
};

/// A nonempty finite set of homomorphisms `F → G`, without repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    domain: FiniteAbelianGroup,
    codomain: FiniteAbelianGroup,
    homs: Vec<Homomorphism>,
    /// For each element of `F`, the distinct values `ψ(a)`, sorted.
    images: Vec<Vec<usize>>,
}

impl WeightSet {
    pub fn new(domain: &FiniteAbelianGroup, codomain: &FiniteAbelianGroup, homs: Vec<Homomorphism>) -> Result<Self> {
        if homs.is_empty() {
            return Err(Error::precondition("a weight set needs at least one homomorphism"));
        }
        let mut distinct: Vec<Homomorphism> = Vec::new();
        for h in homs {
            domain.check_same(h.domain())?;
            codomain.check_same(h.codomain())?;
            if !distinct.contains(&h) {
                distinct.push(h);
            }
        }
        let images = (0..domain.order())
            .map(|a| {
                let mut v: Vec<usize> = distinct.iter().map(|h| h.apply_idx(a)).collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        Ok(WeightSet {
            domain: domain.clone(),
            codomain: codomain.clone(),
            homs: distinct,
            images,
        })
    }

    pub fn identity(g: &FiniteAbelianGroup) -> Self {
        Self::new(g, g, vec![Homomorphism::identity(g)]).expect("nonempty")
    }

    /// `{id, −id}`; a single map when `G` has exponent at most 2.
    pub fn plus_minus(g: &FiniteAbelianGroup) -> Self {
        Self::new(g, g, vec![Homomorphism::identity(g), Homomorphism::scalar(g, -1)]).expect("nonempty")
    }

    /// Every homomorphism `F → G`, up to `cap` of them.
    pub fn all_homs(f: &FiniteAbelianGroup, g: &FiniteAbelianGroup, cap: usize) -> Result<Self> {
        Self::new(f, g, enumerate_homs(f, g, cap)?)
    }

    pub fn domain(&self) -> &FiniteAbelianGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteAbelianGroup {
        &self.codomain
    }

    pub fn homs(&self) -> &[Homomorphism] {
        &self.homs
    }

    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    pub fn is_subset(&self, other: &WeightSet) -> bool {
        self.homs.iter().all(|h| other.homs.contains(h))
    }

    pub(crate) fn images_of(&self, a: usize) -> &[usize] {
        &self.images[a]
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    domain: FiniteAbelianGroup,
    codomain: FiniteAbelianGroup,
    homs: Vec<Vec<Vec<u64>>>,
}

impl Serialize for WeightSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightRepr {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            homs: self
                .homs
                .iter()
                .map(|h| h.gen_images().iter().map(GroupElement::coords).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WeightRepr::deserialize(d)?;
        let build = || -> Result<WeightSet> {
            let homs = r
                .homs
                .iter()
                .map(|imgs| {
                    let els = imgs.iter().map(|c| r.codomain.element(c)).collect::<Result<Vec<_>>>()?;
                    Homomorphism::new(r.domain.clone(), r.codomain.clone(), els)
                })
                .collect::<Result<Vec<_>>>()?;
            WeightSet::new(&r.domain, &r.codomain, homs)
        };
        build().map_err(serde::de::Error::custom)
    }
}

/// Sums of nonempty `Ψ`-subsequences after appending a term with the given
/// image set to a sequence whose sums are `reach`.
fn extend_reach(g: &FiniteAbelianGroup, reach: &ElemSet, imgs: &[usize]) -> ElemSet {
    let mut next = reach.clone();
    for &v in imgs {
        next.insert(v);
        for x in reach.iter() {
            next.insert(g.add_idx(x, v));
        }
    }
    next
}

fn reach_idx(psi: &WeightSet, terms: &[usize]) -> ElemSet {
    let g = psi.codomain();
    terms
        .iter()
        .fold(ElemSet::new(g.order()), |r, &a| extend_reach(g, &r, psi.images_of(a)))
}

fn check_domain(psi: &WeightSet, t: &GSequence) -> Result<()> {
    psi.domain().check_same(t.group())
}

/// `{σ(W) : W a nonempty Ψ-subsequence of T}`, in canonical order.
pub fn psi_reachable(t: &GSequence, psi: &WeightSet) -> Result<Vec<GroupElement>> {
    check_domain(psi, t)?;
    let g = psi.codomain();
    Ok(reach_idx(psi, t.indices()).iter().map(|i| g.element_at(i)).collect())
}

pub fn is_psi_zero_sum_free(t: &GSequence, psi: &WeightSet) -> Result<bool> {
    check_domain(psi, t)?;
    Ok(!reach_idx(psi, t.indices()).contains(0))
}

/// `Ψ`-zero-sum free sequences over `F`; state is the reachable-sum set.
struct PsiZeroSumFree<'a> {
    psi: &'a WeightSet,
}

impl Extender for PsiZeroSumFree<'_> {
    type State = ElemSet;

    fn extend(&self, reach: &ElemSet, a: usize) -> Option<ElemSet> {
        let next = extend_reach(self.psi.codomain(), reach, self.psi.images_of(a));
        (!next.contains(0)).then_some(next)
    }

    /// A surviving extension strictly grows the reachable set: if it stayed
    /// equal to `R` then `R + v = R` for an image `v ∈ R`, forcing `0 ∈ R`.
    fn headroom(&self, reach: &ElemSet) -> usize {
        self.psi.codomain().order() - 1 - reach.len()
    }
}

/// `D_Ψ(G)`: one more than the length of a longest `Ψ`-zero-sum free
/// sequence over `F`, with the canonically least such sequence as witness.
pub fn weighted_davenport(psi: &WeightSet, cfg: &SearchConfig) -> Result<InvariantResult> {
    let f = psi.domain();
    let ext = PsiZeroSumFree { psi };
    let universe: Vec<usize> = (0..f.order()).collect();
    let root = ElemSet::new(psi.codomain().order());
    let l = search::longest(&ext, &universe, &root, usize::MAX, &cfg.budget(), cfg.parallel())?;
    Ok(InvariantResult::from_longest(f, l))
}

/// Sequences over `F` none of whose `Ψ`-subsequences lies in `Ω`. State is
/// the count vector over `F`.
///
/// A member `V` is a `Ψ`-image of a subsequence of `T` exactly when the terms
/// of `V` can be matched injectively to terms `a` of `T` with `v ∈ Ψ(a)`.
/// Only matchings that use the newly appended term need checking.
struct PsiAvoid<'a> {
    psi: &'a WeightSet,
    members: Vec<Vec<usize>>,
}

impl PsiAvoid<'_> {
    /// Whether `terms` (left side) can be matched into the multiset `counts`.
    fn matches(&self, terms: &[usize], counts: &[u32]) -> bool {
        let slots: Vec<usize> = counts
            .iter()
            .enumerate()
            .flat_map(|(a, &c)| std::iter::repeat_n(a, c as usize))
            .collect();
        if slots.len() < terms.len() {
            return false;
        }
        let mut owner = vec![usize::MAX; slots.len()];
        fn augment(
            i: usize,
            terms: &[usize],
            slots: &[usize],
            psi: &WeightSet,
            owner: &mut [usize],
            seen: &mut [bool],
        ) -> bool {
            for s in 0..slots.len() {
                if seen[s] || psi.images_of(slots[s]).binary_search(&terms[i]).is_err() {
                    continue;
                }
                seen[s] = true;
                if owner[s] == usize::MAX || augment(owner[s], terms, slots, psi, owner, seen) {
                    owner[s] = i;
                    return true;
                }
            }
            false
        }
        (0..terms.len()).all(|i| {
            let mut seen = vec![false; slots.len()];
            augment(i, terms, &slots, self.psi, &mut owner, &mut seen)
        })
    }
}

impl Extender for PsiAvoid<'_> {
    type State = Vec<u32>;

    fn extend(&self, counts: &Vec<u32>, a: usize) -> Option<Vec<u32>> {
        let imgs = self.psi.images_of(a);
        let hit = self.members.iter().any(|v| {
            run_lengths(v).iter().any(|&(x, _)| {
                if imgs.binary_search(&x).is_err() {
                    return false;
                }
                let pos = v.iter().position(|&y| y == x).expect("present");
                let rest: Vec<usize> = v[..pos].iter().chain(&v[pos + 1..]).copied().collect();
                self.matches(&rest, counts)
            })
        });
        if hit {
            return None;
        }
        let mut next = counts.clone();
        next[a] += 1;
        Some(next)
    }
}

/// `d_{Ω;Ψ}(G)`: the least `ℓ` such that every length-`ℓ` sequence over `F`
/// has a `Ψ`-subsequence in `Ω`, or `AboveCap` when an avoiding sequence
/// reaches the length cap (default `2|F|`).
pub fn d_omega_psi(psi: &WeightSet, omega: &OmegaSet, cfg: &SearchConfig) -> Result<InvariantResult> {
    let f = psi.domain();
    psi.codomain().check_same(omega.group())?;
    let cap = cfg.length_cap_for(f.order());
    if omega.is_empty() {
        return Ok(InvariantResult {
            value: InvariantValue::AboveCap { above_cap: cap },
            witness: GSequence::from_indices(f, vec![0; cap]),
        });
    }
    // With A(G) ⊆ Ω ⊆ B(G), having a Ψ-subsequence in Ω is the same as having
    // a nonempty Ψ-zero-sum subsequence.
    if omega.is_zero_sum_complete(cfg)? {
        let d = weighted_davenport(psi, cfg)?;
        if d.witness.len() < cap {
            return Ok(d);
        }
    }
    let l = search::longest(
        &psi_avoid(psi, omega),
        &(0..f.order()).collect::<Vec<_>>(),
        &vec![0; f.order()],
        cap,
        &cfg.budget(),
        cfg.parallel(),
    )?;
    Ok(InvariantResult::from_longest(f, l))
}

fn psi_avoid<'a>(psi: &'a WeightSet, omega: &OmegaSet) -> PsiAvoid<'a> {
    PsiAvoid {
        psi,
        members: omega.members().map(|v| v.indices().to_vec()).collect(),
    }
}

/// True when some `Ψ`-subsequence of `t` lies in `Ω`.
pub fn psi_hits(t: &GSequence, psi: &WeightSet, omega: &OmegaSet) -> Result<bool> {
    check_domain(psi, t)?;
    psi.codomain().check_same(omega.group())?;
    let ext = psi_avoid(psi, omega);
    let mut counts = vec![0u32; psi.domain().order()];
    for &a in t.indices() {
        match ext.extend(&counts, a) {
            Some(next) => counts = next,
            None => return Ok(true),
        }
    }
    Ok(false)
}

fn find_psi_avoider(psi: &WeightSet, omega: &OmegaSet, len: usize, cfg: &SearchConfig) -> Result<bool> {
    let f = psi.domain();
    Ok(search::find_extension(
        &psi_avoid(psi, omega),
        &(0..f.order()).collect::<Vec<_>>(),
        &vec![0; f.order()],
        len,
        &cfg.budget(),
    )?
    .is_some())
}

/// A minimal subset of `A` with respect to `t` for the weighted invariant,
/// given `d_{A;Ψ} = t`: truncate to length `t`, then drop members greedily.
pub fn weighted_minimalize(psi: &WeightSet, a: &OmegaSet, t: usize, cfg: &SearchConfig) -> Result<OmegaSet> {
    let d = d_omega_psi(psi, a, cfg)?.value;
    if d != InvariantValue::Exact(t) {
        return Err(Error::precondition(format!("d_(A;Ψ) is {d}, not {t}")));
    }
    let mut cur = a.truncated(t);
    let members: Vec<GSequence> = cur.members().cloned().collect();
    for v in &members {
        let smaller = cur.without(v);
        if !find_psi_avoider(psi, &smaller, t, cfg)? {
            cur = smaller;
        }
    }
    Ok(cur.with_provenance(Provenance::Minimalized))
}

/// `d_{Ω;Ψ} = t` and dropping any member changes the value.
pub fn is_weighted_minimal_set(psi: &WeightSet, omega: &OmegaSet, t: usize, cfg: &SearchConfig) -> Result<bool> {
    if d_omega_psi(psi, omega, cfg)?.value != InvariantValue::Exact(t) {
        return Ok(false);
    }
    for v in omega.members() {
        if !find_psi_avoider(psi, &omega.without(v), t, cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The bound `D_Ψ ≤ |X / Ker τ| + 1` with `X = F \ ⋃ Ker ψ`, minimized over
/// `τ ∈ Ψ`, next to the computed `D_Ψ`.
#[derive(Clone, Debug, Serialize)]
pub struct KernelCosetBound {
    /// `|X|`.
    pub outside_kernels: usize,
    /// For each `τ ∈ Ψ`, the number of cosets of `Ker τ` meeting `X`.
    pub cosets_meeting: Vec<usize>,
    pub bound: usize,
    pub d_psi: usize,
    pub witness: GSequence,
}

pub fn kernel_coset_bound(psi: &WeightSet, cfg: &SearchConfig) -> Result<KernelCosetBound> {
    let f = psi.domain();
    let kernels = psi
        .homs()
        .iter()
        .map(|h| h.kernel(f.order()))
        .collect::<Result<Vec<_>>>()?;
    let outside: Vec<bool> = (0..f.order())
        .map(|x| kernels.iter().all(|k| !k.contains_idx(x)))
        .collect();
    let cosets_meeting: Vec<usize> = kernels
        .iter()
        .map(|k| {
            k.cosets()
                .iter()
                .filter(|c| c.member_indices().iter().any(|&x| outside[x]))
                .count()
        })
        .collect();
    let bound = cosets_meeting.iter().min().expect("Ψ is nonempty") + 1;
    let d = weighted_davenport(psi, cfg)?;
    let d_psi = d.value.exact().expect("no length cap on D_Ψ");
    if d_psi > bound {
        return Err(Error::Falsified(format!(
            "D_Ψ = {d_psi} exceeds the kernel-coset bound {bound}"
        )));
    }
    Ok(KernelCosetBound {
        outside_kernels: outside.iter().filter(|&&b| b).count(),
        cosets_meeting,
        bound,
        d_psi,
        witness: d.witness,
    })
}
