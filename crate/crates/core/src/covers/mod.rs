//! Covers of finite abelian groups by cosets of subgroups.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Coset, FiniteAbelianGroup, GroupElement, Subgroup};
use crate::quotient::quotient_sum;
use crate::search::{Budget, SearchConfig};
use crate::sequences::GSequence;
use crate::weighted::{is_psi_zero_sum_free, weighted_davenport, WeightSet};

/// A finite list of cosets of subgroups of one group. Repeats are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSystem {
    group: FiniteAbelianGroup,
    cosets: Vec<Coset>,
}

impl CoverSystem {
    pub fn new(group: &FiniteAbelianGroup, cosets: Vec<Coset>) -> Result<Self> {
        for c in &cosets {
            group.check_same(c.subgroup().group())?;
        }
        Ok(CoverSystem {
            group: group.clone(),
            cosets,
        })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    fn counts(&self) -> Vec<usize> {
        let mut cnt = vec![0; self.group.order()];
        for c in &self.cosets {
            for &x in c.member_indices() {
                cnt[x] += 1;
            }
        }
        cnt
    }

    pub fn is_cover(&self) -> bool {
        self.counts().iter().all(|&c| c > 0)
    }

    /// A cover in which every member contains a point no other member covers.
    pub fn is_irredundant(&self) -> bool {
        let cnt = self.counts();
        cnt.iter().all(|&c| c > 0)
            && self
                .cosets
                .iter()
                .all(|c| c.member_indices().iter().any(|&x| cnt[x] == 1))
    }

    /// Drops members in list order whenever the rest still covers.
    pub fn irredundant_reduce(&self) -> Result<CoverSystem> {
        if !self.is_cover() {
            return Err(Error::precondition("the system does not cover the group"));
        }
        let mut cnt = self.counts();
        let mut keep = vec![true; self.cosets.len()];
        for (i, c) in self.cosets.iter().enumerate() {
            if c.member_indices().iter().all(|&x| cnt[x] > 1) {
                keep[i] = false;
                for &x in c.member_indices() {
                    cnt[x] -= 1;
                }
            }
        }
        let out = CoverSystem {
            group: self.group.clone(),
            cosets: self
                .cosets
                .iter()
                .zip(&keep)
                .filter(|p| *p.1)
                .map(|p| p.0.clone())
                .collect(),
        };
        if !out.is_irredundant() {
            return Err(Error::Falsified("greedy reduction left a removable member".into()));
        }
        Ok(out)
    }

    /// Keeps the members whose subgroup has index at most `threshold`.
    pub fn finite_index_filter(&self, threshold: usize) -> CoverSystem {
        CoverSystem {
            group: self.group.clone(),
            cosets: self
                .cosets
                .iter()
                .filter(|c| c.subgroup().index() <= threshold)
                .cloned()
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CosetRepr {
    rep: Vec<u64>,
    subgroup_gens: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct CoverRepr {
    group: FiniteAbelianGroup,
    cosets: Vec<CosetRepr>,
}

impl Serialize for CoverSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CoverRepr {
            group: self.group.clone(),
            cosets: self
                .cosets
                .iter()
                .map(|c| CosetRepr {
                    rep: c.representative().coords(),
                    subgroup_gens: c.subgroup().generators().iter().map(GroupElement::coords).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoverSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CoverRepr::deserialize(d)?;
        let g = &r.group;
        let build = || -> Result<CoverSystem> {
            let cosets = r
                .cosets
                .iter()
                .map(|c| {
                    let gens = c
                        .subgroup_gens
                        .iter()
                        .map(|x| g.element(x))
                        .collect::<Result<Vec<_>>>()?;
                    Coset::new(&g.element(&c.rep)?, g.subgroup_generated(&gens)?)
                })
                .collect::<Result<Vec<_>>>()?;
            CoverSystem::new(g, cosets)
        };
        build().map_err(serde::de::Error::custom)
    }
}

/// Index bound for an irredundant cover of size `k`: every subgroup has index
/// at most `2^{k−1}`.
#[derive(Clone, Debug, Serialize)]
pub struct SunReport {
    pub k: usize,
    pub indices: Vec<usize>,
    pub bound: u128,
    /// Largest `index / 2^{k−1}`.
    pub tightest_ratio: f64,
}

pub fn sun_bound_verify(s: &CoverSystem) -> Result<SunReport> {
    if !s.is_irredundant() {
        return Err(Error::precondition("not an irredundant cover"));
    }
    let k = s.len();
    let bound = 1u128 << (k - 1).min(127);
    let indices: Vec<usize> = s.cosets.iter().map(|c| c.subgroup().index()).collect();
    let worst = *indices.iter().max().expect("a cover is nonempty");
    if worst as u128 > bound {
        return Err(Error::Falsified(format!(
            "index {worst} exceeds 2^{} in an irredundant cover of size {k}",
            k - 1
        )));
    }
    Ok(SunReport {
        k,
        indices,
        bound,
        tightest_ratio: worst as f64 / bound as f64,
    })
}

/// Cover of `F` by cosets of the kernels of `Ψ`, built from an extremal
/// `Ψ`-zero-sum free sequence `T = b_1 ⋯ b_ℓ`: with
/// `S = Σ_i ({ψ(b_i) : ψ ∈ Ψ} ∪ {0})`, every `f ∈ F` lies in some `ψ^{-1}(S)`,
/// and each `ψ^{-1}(S)` is a union of cosets of `Ker ψ`.
pub fn kernels_to_cover(psi: &WeightSet, t: &GSequence, cfg: &SearchConfig) -> Result<CoverSystem> {
    let d = weighted_davenport(psi, cfg)?;
    kernels_to_cover_with_length(psi, t, d.witness.len())
}

/// As [`kernels_to_cover`] with the extremal length `D_Ψ − 1` already known.
pub(crate) fn kernels_to_cover_with_length(psi: &WeightSet, t: &GSequence, extremal: usize) -> Result<CoverSystem> {
    let f = psi.domain();
    let g = psi.codomain();
    if !is_psi_zero_sum_free(t, psi)? {
        return Err(Error::precondition("T has a nonempty Ψ-zero-sum subsequence"));
    }
    if t.len() != extremal {
        return Err(Error::precondition(format!(
            "T has length {}, but extremal sequences have length {extremal}",
            t.len()
        )));
    }
    let mut sums = vec![false; g.order()];
    sums[0] = true;
    for e in t.terms() {
        let imgs: Vec<usize> = psi.homs().iter().map(|h| h.apply_idx(e.index())).collect();
        let prev = sums.clone();
        for (x, _) in prev.iter().enumerate().filter(|p| *p.1) {
            for &v in &imgs {
                sums[g.add_idx(x, v)] = true;
            }
        }
    }
    let mut cosets = Vec::new();
    for h in psi.homs() {
        let ker = h.kernel(f.order())?;
        for c in ker.cosets() {
            if sums[h.apply_idx(c.representative().index())] {
                cosets.push(c);
            }
        }
    }
    let cover = CoverSystem::new(f, cosets)?;
    if !cover.is_cover() {
        return Err(Error::Falsified("kernel cosets over the sumset do not cover F".into()));
    }
    Ok(cover)
}

/// Result of the search for a largest irredundant cover.
#[derive(Clone, Debug, Serialize)]
pub struct IrredundantSearch {
    /// Largest size found; the maximum when `complete`.
    pub size: usize,
    pub complete: bool,
    pub witness: Option<CoverSystem>,
}

struct CoverSearch<'a> {
    cosets: &'a [Coset],
    /// Cosets containing each element.
    by_elem: Vec<Vec<usize>>,
    budget: Budget,
    best: Vec<usize>,
}

impl CoverSearch<'_> {
    fn run(&mut self, chosen: &mut Vec<usize>, cnt: &mut [usize], excluded: &mut [bool]) -> Result<()> {
        self.budget.tick()?;
        let Some(x) = cnt.iter().position(|&c| c == 0) else {
            if chosen.len() > self.best.len() {
                self.best.clone_from(chosen);
            }
            return Ok(());
        };
        // Each further member needs its own private point, which is uncovered now.
        let uncovered = cnt.iter().filter(|&&c| c == 0).count();
        if chosen.len() + uncovered <= self.best.len() {
            return Ok(());
        }
        // Branch on the first member containing x; earlier choices for x are
        // excluded below so each system is reached once.
        let options: Vec<usize> = self.by_elem[x].iter().copied().filter(|&c| !excluded[c]).collect();
        for (i, &c) in options.iter().enumerate() {
            for &x in self.cosets[c].member_indices() {
                cnt[x] += 1;
            }
            chosen.push(c);
            let keeps_private = chosen
                .iter()
                .all(|&m| self.cosets[m].member_indices().iter().any(|&y| cnt[y] == 1));
            if keeps_private {
                for &o in &options[..i] {
                    excluded[o] = true;
                }
                excluded[c] = true;
                let r = self.run(chosen, cnt, excluded);
                for &o in &options[..i] {
                    excluded[o] = false;
                }
                excluded[c] = false;
                r?;
            }
            chosen.pop();
            for &x in self.cosets[c].member_indices() {
                cnt[x] -= 1;
            }
        }
        Ok(())
    }
}

/// Largest irredundant cover of `F` by distinct cosets of the given subgroups.
/// When the node cap is hit the best size found so far is returned with
/// `complete = false`.
pub fn max_irredundant_size(
    f: &FiniteAbelianGroup,
    subgroups: &[Subgroup],
    cfg: &SearchConfig,
) -> Result<IrredundantSearch> {
    let mut cosets: Vec<Coset> = Vec::new();
    for h in subgroups {
        f.check_same(h.group())?;
        for c in h.cosets() {
            if !cosets.iter().any(|d| d.member_indices() == c.member_indices()) {
                cosets.push(c);
            }
        }
    }
    let mut by_elem = vec![Vec::new(); f.order()];
    for (i, c) in cosets.iter().enumerate() {
        for &x in c.member_indices() {
            by_elem[x].push(i);
        }
    }
    let mut search = CoverSearch {
        cosets: &cosets,
        by_elem,
        budget: cfg.budget(),
        best: Vec::new(),
    };
    let mut cnt = vec![0; f.order()];
    let mut excluded = vec![false; cosets.len()];
    let complete = match search.run(&mut Vec::new(), &mut cnt, &mut excluded) {
        Ok(()) => true,
        Err(e) if e.is_cap_exceeded() => false,
        Err(e) => return Err(e),
    };
    let witness = (!search.best.is_empty())
        .then(|| CoverSystem::new(f, search.best.iter().map(|&i| cosets[i].clone()).collect()))
        .transpose()?;
    Ok(IrredundantSearch {
        size: search.best.len(),
        complete,
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    /// The cover search stopped early and its lower bound on `M` was too small
    /// to decide.
    Inconclusive,
}

/// `D_Ψ ≤ 2^{M−1}` where `M` is the largest size of an irredundant cover of
/// `F` by cosets of the kernels of `Ψ`.
#[derive(Clone, Debug, Serialize)]
pub struct CoverSizeReport {
    pub kernel_orders: Vec<usize>,
    /// `M`, or a lower bound for it when the search was incomplete.
    pub m: usize,
    pub m_complete: bool,
    pub d_psi: usize,
    pub bound: u128,
    pub verdict: Verdict,
}

pub fn cover_size_bound_verify(psi: &WeightSet, cfg: &SearchConfig) -> Result<CoverSizeReport> {
    let f = psi.domain();
    let mut kernels: Vec<Subgroup> = Vec::new();
    for h in psi.homs() {
        let k = h.kernel(f.order())?;
        if !kernels.contains(&k) {
            kernels.push(k);
        }
    }
    let search = max_irredundant_size(f, &kernels, cfg)?;
    let d_psi = weighted_davenport(psi, cfg)?
        .value
        .exact()
        .expect("no length cap on D_Ψ");
    let bound = 1u128 << search.size.saturating_sub(1).min(127);
    // M only grows past the lower bound, so a satisfied bound stays satisfied.
    let verdict = if d_psi as u128 <= bound {
        Verdict::Holds
    } else if search.complete {
        return Err(Error::Falsified(format!(
            "D_Ψ = {d_psi} exceeds 2^(M-1) = {bound} with M = {}",
            search.size
        )));
    } else {
        Verdict::Inconclusive
    };
    Ok(CoverSizeReport {
        kernel_orders: kernels.iter().map(Subgroup::order).collect(),
        m: search.size,
        m_complete: search.complete,
        d_psi,
        bound,
        verdict,
    })
}

/// The quotient-sum construction for subgroups `H_1, …, H_t` of `F`, checked
/// in both directions.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientRoundtrip {
    /// `F/H_1 ⊕ … ⊕ F/H_t` in invariant-factor form.
    pub codomain: FiniteAbelianGroup,
    pub kernels_match: bool,
    pub d_psi: usize,
    pub witness: GSequence,
    /// Irredundant cover of `F` by cosets of the `H_i`.
    pub subgroup_cover: CoverSystem,
    /// Cover built from the extremal witness, by cosets of the kernels.
    pub witness_cover: CoverSystem,
}

pub fn quotient_sum_roundtrip(
    f: &FiniteAbelianGroup,
    subgroups: &[Subgroup],
    cfg: &SearchConfig,
) -> Result<QuotientRoundtrip> {
    let q = quotient_sum(f, subgroups)?;
    let mut kernels_match = true;
    for (h, sub) in q.homs.iter().zip(subgroups) {
        kernels_match &= h.kernel(f.order())? == *sub;
    }
    if !kernels_match {
        return Err(Error::Falsified("a quotient map has the wrong kernel".into()));
    }
    let all: Vec<Coset> = subgroups.iter().flat_map(Subgroup::cosets).collect();
    let subgroup_cover = CoverSystem::new(f, all)?.irredundant_reduce()?;
    let psi = WeightSet::new(f, &q.group, q.homs)?;
    let d = weighted_davenport(&psi, cfg)?;
    let witness_cover = kernels_to_cover(&psi, &d.witness, cfg)?;
    Ok(QuotientRoundtrip {
        codomain: q.group,
        kernels_match,
        d_psi: d.value.exact().expect("no length cap on D_Ψ"),
        witness: d.witness,
        subgroup_cover,
        witness_cover,
    })
}

/// A random irredundant cover: random cosets of random proper subgroups are
/// added until they cover, then the list is shuffled and reduced.
pub fn random_irredundant_cover(group: &FiniteAbelianGroup, rng: &mut impl Rng) -> CoverSystem {
    let proper: Vec<Subgroup> = group
        .all_subgroups()
        .into_iter()
        .filter(|h| h.order() < group.order())
        .collect();
    if proper.is_empty() {
        return CoverSystem {
            group: group.clone(),
            cosets: vec![Coset::from_parts(0, group.whole())],
        };
    }
    let mut covered = vec![false; group.order()];
    let mut cosets = Vec::new();
    while covered.iter().any(|&c| !c) {
        let h = proper.choose(rng).expect("nonempty").clone();
        let c = Coset::from_parts(rng.gen_range(0..group.order()), h);
        for &x in c.member_indices() {
            covered[x] = true;
        }
        cosets.push(c);
    }
    cosets.shuffle(rng);
    CoverSystem {
        group: group.clone(),
        cosets,
    }
    .irredundant_reduce()
    .expect("a cover reduces")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n).unwrap()
    }

    fn gen(g: &FiniteAbelianGroup, k: i64) -> Subgroup {
        g.subgroup_generated(&[g.reduce(&[k]).unwrap()]).unwrap()
    }

    fn coset(g: &FiniteAbelianGroup, rep: i64, h: &Subgroup) -> Coset {
        Coset::new(&g.reduce(&[rep]).unwrap(), h.clone()).unwrap()
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn cover_checks() {
        let z6 = z(6);
        let h2 = gen(&z6, 2);
        let h3 = gen(&z6, 3);
        let s = CoverSystem::new(&z6, vec![coset(&z6, 0, &h2), coset(&z6, 1, &h2)]).unwrap();
        assert!(s.is_cover() && s.is_irredundant());
        assert!(!CoverSystem::new(&z6, vec![coset(&z6, 0, &h2)]).unwrap().is_cover());
        let z4 = z(4);
        assert!(CoverSystem::new(&z4, vec![coset(&z4, 0, &gen(&z4, 1))])
            .unwrap()
            .is_cover());

        let three = CoverSystem::new(&z6, vec![coset(&z6, 0, &h2), coset(&z6, 1, &h2), coset(&z6, 0, &h3)]).unwrap();
        assert_eq!(three.irredundant_reduce().unwrap(), s);
        assert_eq!(s.irredundant_reduce().unwrap(), s);
        let whole_first = CoverSystem::new(&z6, vec![coset(&z6, 0, &z6.whole()), coset(&z6, 1, &h2)]).unwrap();
        assert_eq!(whole_first.irredundant_reduce().unwrap().len(), 1);
        assert!(CoverSystem::new(&z6, vec![coset(&z6, 0, &h2)])
            .unwrap()
            .irredundant_reduce()
            .is_err());
        assert!(CoverSystem::new(&z4, vec![coset(&z6, 0, &h2)]).is_err());
    }

    #[test]
    fn sun_examples() {
        let z2 = z(2);
        let s = CoverSystem::new(
            &z2,
            vec![coset(&z2, 0, &z2.zero_subgroup()), coset(&z2, 1, &z2.zero_subgroup())],
        )
        .unwrap();
        let r = sun_bound_verify(&s).unwrap();
        assert_eq!((r.k, r.bound, r.tightest_ratio), (2, 2, 1.0));
        let z4 = z(4);
        let h = gen(&z4, 2);
        let r = sun_bound_verify(&CoverSystem::new(&z4, vec![coset(&z4, 0, &h), coset(&z4, 1, &h)]).unwrap()).unwrap();
        assert_eq!(r.indices, vec![2, 2]);
        let redundant = CoverSystem::new(&z4, vec![coset(&z4, 0, &h), coset(&z4, 1, &h), coset(&z4, 3, &h)]).unwrap();
        assert!(sun_bound_verify(&redundant).is_err());
    }

    #[test]
    fn random_covers_meet_sun_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for f in [
            vec![],
            vec![6],
            vec![2, 2],
            vec![2, 4],
            vec![12],
            vec![2, 2, 2, 2],
            vec![4, 4],
            vec![2, 6],
        ] {
            let g = FiniteAbelianGroup::new(f).unwrap();
            for _ in 0..20 {
                let s = random_irredundant_cover(&g, &mut rng);
                assert!(s.is_irredundant());
                sun_bound_verify(&s).unwrap();
                assert_eq!(s.finite_index_filter(g.order()), s);
            }
        }
    }

    #[test]
    fn kernel_cover_examples() {
        let z5 = z(5);
        let pm = WeightSet::plus_minus(&z5);
        let t = GSequence::cyclic(&z5, &[1, 2]).unwrap();
        let c = kernels_to_cover(&pm, &t, &cfg()).unwrap();
        assert!(c.is_cover());
        assert!(c.cosets().iter().all(|x| x.subgroup().order() == 1));

        let z4 = z(4);
        let id = WeightSet::identity(&z4);
        let c = kernels_to_cover(&id, &GSequence::cyclic(&z4, &[1, 1, 1]).unwrap(), &cfg()).unwrap();
        assert_eq!(c.len(), 4);
        assert!(kernels_to_cover(&pm, &GSequence::cyclic(&z5, &[1, 4]).unwrap(), &cfg()).is_err());
        assert!(kernels_to_cover(&pm, &GSequence::cyclic(&z5, &[1]).unwrap(), &cfg()).is_err());
    }

    #[test]
    fn max_irredundant_examples() {
        let z2 = z(2);
        assert_eq!(
            max_irredundant_size(&z2, &[z2.zero_subgroup()], &cfg()).unwrap().size,
            2
        );
        let z4 = z(4);
        let h = gen(&z4, 2);
        assert_eq!(
            max_irredundant_size(&z4, std::slice::from_ref(&h), &cfg())
                .unwrap()
                .size,
            2
        );
        let r = max_irredundant_size(&z4, &[z4.zero_subgroup(), h], &cfg()).unwrap();
        assert!(r.complete && r.size == 4);
        assert!(r.witness.unwrap().is_irredundant());
        let capped = max_irredundant_size(&z4, &[z4.zero_subgroup()], &cfg().with_node_cap(2)).unwrap();
        assert!(!capped.complete);
    }

    /// Largest irredundant subfamily by scanning all subsets.
    fn brute_max(f: &FiniteAbelianGroup, subgroups: &[Subgroup]) -> usize {
        let mut cosets: Vec<Coset> = Vec::new();
        for h in subgroups {
            for c in h.cosets() {
                if !cosets.iter().any(|d| d.member_indices() == c.member_indices()) {
                    cosets.push(c);
                }
            }
        }
        (0u32..1 << cosets.len())
            .filter_map(|mask| {
                let pick: Vec<Coset> = (0..cosets.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| cosets[i].clone())
                    .collect();
                let s = CoverSystem::new(f, pick).unwrap();
                s.is_irredundant().then_some(s.len())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn max_irredundant_matches_subset_scan() {
        for fac in [vec![4u64], vec![6], vec![2, 2], vec![8], vec![2, 4], vec![3, 3]] {
            let g = FiniteAbelianGroup::new(fac).unwrap();
            let subs: Vec<Subgroup> = g.all_subgroups().into_iter().filter(|h| h.index() > 1).collect();
            for i in 0..subs.len() {
                for j in i..subs.len() {
                    let family = [subs[i].clone(), subs[j].clone()];
                    let n: usize = family.iter().map(|h| h.index()).sum();
                    if n > 18 {
                        continue;
                    }
                    let r = max_irredundant_size(&g, &family, &cfg()).unwrap();
                    assert_eq!(r.size, brute_max(&g, &family), "{g} {family:?}");
                }
            }
        }
    }

    #[test]
    fn cover_size_examples() {
        let r = cover_size_bound_verify(&WeightSet::identity(&z(4)), &cfg()).unwrap();
        assert_eq!((r.m, r.bound, r.d_psi, r.verdict), (4, 8, 4, Verdict::Holds));
        let r = cover_size_bound_verify(&WeightSet::plus_minus(&z(5)), &cfg()).unwrap();
        assert_eq!((r.m, r.d_psi, r.verdict), (5, 3, Verdict::Holds));
        let r = cover_size_bound_verify(&WeightSet::identity(&z(2)), &cfg()).unwrap();
        assert_eq!((r.m, r.bound, r.d_psi), (2, 2, 2));
    }

    #[test]
    fn roundtrip_examples() {
        let z6 = z(6);
        let r = quotient_sum_roundtrip(&z6, &[gen(&z6, 2), gen(&z6, 3)], &cfg()).unwrap();
        assert_eq!(r.codomain.factors(), &[6]);
        assert!(r.kernels_match && r.subgroup_cover.is_irredundant() && r.witness_cover.is_cover());
        let z4 = z(4);
        let r = quotient_sum_roundtrip(&z4, &[z4.zero_subgroup()], &cfg()).unwrap();
        assert_eq!((r.codomain.factors(), r.d_psi), (&[4u64][..], 4));
        let v = FiniteAbelianGroup::elementary_two(2);
        let b = v.basis();
        let subs = [
            v.subgroup_generated(&[b[0].clone()]).unwrap(),
            v.subgroup_generated(&[b[1].clone()]).unwrap(),
        ];
        let r = quotient_sum_roundtrip(&v, &subs, &cfg()).unwrap();
        assert!(r.kernels_match);
        assert_eq!(r.codomain.factors(), &[2, 2]);
    }

    #[test]
    fn json_roundtrip() {
        let z6 = z(6);
        let s = CoverSystem::new(&z6, vec![coset(&z6, 0, &gen(&z6, 2)), coset(&z6, 1, &gen(&z6, 2))]).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"{"group":{"factors":[6]},"cosets":[{"rep":[0],"subgroup_gens":[[2]]},{"rep":[1],"subgroup_gens":[[2]]}]}"#
        );
        assert_eq!(serde_json::from_str::<CoverSystem>(&j).unwrap(), s);
        assert!(serde_json::from_str::<CoverSystem>(
            r#"{"group":{"factors":[6]},"cosets":[{"rep":[7],"subgroup_gens":[]}]}"#
        )
        .is_err());
    }
}
