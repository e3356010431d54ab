//! Finite abelian groups in invariant-factor form.
//!
//! A group `Z_{n_1} ⊕ … ⊕ Z_{n_r}` with `n_1 | n_2 | … | n_r` is identified by
//! its factor list. Elements are stored as a mixed-radix index whose order
//! coincides with the lexicographic order on coordinate vectors; that order is
//! the canonical element order used by every enumerator in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};

/// Groups up to this order get a precomputed addition table.
const ADD_TABLE_MAX_ORDER: usize = 1 << 10;

#[derive(Clone)]
pub struct FiniteAbelianGroup {
    inner: Arc<GroupInner>,
}

struct GroupInner {
    factors: Vec<u64>,
    /// Place value of each coordinate in the element index.
    places: Vec<usize>,
    order: usize,
    add_table: OnceLock<Option<Vec<u32>>>,
}

impl FiniteAbelianGroup {
    /// Builds `Z_{n_1} ⊕ … ⊕ Z_{n_r}`; the factors must form a divisibility
    /// chain with every factor at least 2. The empty list is the trivial group.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|&&n| n < 2) {
            return Err(Error::MalformedPresentation(format!(
                "invariant factor {bad} is smaller than 2"
            )));
        }
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::MalformedPresentation(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        let mut order: usize = 1;
        for &n in &factors {
            order = usize::try_from(n)
                .ok()
                .and_then(|n| order.checked_mul(n))
                .ok_or_else(|| Error::MalformedPresentation("group order overflows".into()))?;
        }
        let mut places = vec![1usize; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            places[i] = places[i + 1] * factors[i + 1] as usize;
        }
        Ok(FiniteAbelianGroup {
            inner: Arc::new(GroupInner {
                factors,
                places,
                order,
                add_table: OnceLock::new(),
            }),
        })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 1 {
            return Self::new(vec![]);
        }
        Self::new(vec![n])
    }

    pub fn trivial() -> Self {
        Self::new(vec![]).expect("empty presentation is valid")
    }

    /// `Z_2^r`.
    pub fn elementary_two(r: usize) -> Self {
        Self::new(vec![2; r]).expect("constant chain is valid")
    }

    pub fn factors(&self) -> &[u64] {
        &self.inner.factors
    }

    pub fn rank(&self) -> usize {
        self.inner.factors.len()
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn exponent(&self) -> u64 {
        self.inner.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    pub fn is_elementary_two(&self) -> bool {
        self.rank() >= 1 && self.exponent() == 2
    }

    /// True when the order is a power of a single prime.
    pub fn is_p_group(&self) -> bool {
        let n = self.order() as u64;
        if n < 2 {
            return false;
        }
        let p = smallest_prime_factor(n);
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        m == 1
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            index: 0,
        }
    }

    /// Builds an element from coordinates, each of which must lie in its residue range.
    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates for {self}, got {}",
                self.rank(),
                coords.len()
            )));
        }
        for (i, (&c, &n)) in coords.iter().zip(self.factors()).enumerate() {
            if c >= n {
                return Err(Error::InvalidElement(format!(
                    "coordinate {i} = {c} out of range [0, {n}) in {self}"
                )));
            }
        }
        Ok(self.element_at(self.index_of_coords(coords)))
    }

    /// Builds an element from arbitrary integers, reducing each coordinate.
    pub fn reduce(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates for {self}, got {}",
                self.rank(),
                coords.len()
            )));
        }
        let reduced: Vec<u64> = coords
            .iter()
            .zip(self.factors())
            .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
            .collect();
        self.element(&reduced)
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        assert!(index < self.order(), "element index out of range");
        GroupElement {
            group: self.clone(),
            index,
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    /// The canonical generators `e_1, …, e_r`.
    pub fn basis(&self) -> Vec<GroupElement> {
        (0..self.rank())
            .map(|i| self.element_at(self.inner.places[i]))
            .collect()
    }

    pub(crate) fn index_of_coords(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.inner.places)
            .map(|(&c, &p)| c as usize * p)
            .sum()
    }

    pub(crate) fn coords_of(&self, index: usize) -> Vec<u64> {
        self.inner
            .factors
            .iter()
            .zip(&self.inner.places)
            .map(|(&n, &p)| ((index / p) as u64) % n)
            .collect()
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.inner
            .add_table
            .get_or_init(|| {
                let n = self.order();
                if n > ADD_TABLE_MAX_ORDER {
                    return None;
                }
                let mut t = Vec::with_capacity(n * n);
                for a in 0..n {
                    for b in 0..n {
                        t.push(self.add_slow(a, b) as u32);
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    fn add_slow(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        for (&n, &p) in self.inner.factors.iter().zip(&self.inner.places) {
            let n = n as usize;
            let s = ((a / p) % n + (b / p) % n) % n;
            out += s * p;
        }
        out
    }

    #[inline]
    pub(crate) fn add_idx(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.add_slow(a, b),
        }
    }

    pub(crate) fn neg_idx(&self, a: usize) -> usize {
        let mut out = 0;
        for (&n, &p) in self.inner.factors.iter().zip(&self.inner.places) {
            let n = n as usize;
            let c = (a / p) % n;
            out += ((n - c) % n) * p;
        }
        out
    }

    pub(crate) fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, self.neg_idx(b))
    }

    /// `k·a` for any integer `k`.
    pub(crate) fn mul_idx(&self, k: i64, a: usize) -> usize {
        let mut out = 0;
        for (&n, &p) in self.inner.factors.iter().zip(&self.inner.places) {
            let c = ((a / p) as u64 % n) as i128;
            let s = (c * k as i128).rem_euclid(n as i128) as usize;
            out += s * p;
        }
        out
    }

    pub(crate) fn order_idx(&self, a: usize) -> u64 {
        self.inner
            .factors
            .iter()
            .zip(&self.inner.places)
            .map(|(&n, &p)| n / n.gcd(&((a / p) as u64 % n)))
            .fold(1u64, |acc, m| acc.lcm(&m))
    }

    pub(crate) fn sum_idx(&self, terms: impl IntoIterator<Item = usize>) -> usize {
        terms.into_iter().fold(0, |acc, a| self.add_idx(acc, a))
    }

    /// Least `k ≥ 1` with `k·a = 0`.
    pub fn element_order(&self, a: &GroupElement) -> Result<u64> {
        self.check_member(a)?;
        Ok(self.order_idx(a.index))
    }

    /// For cyclic `G` of order `n ≥ 2` and a generator `g`: the unique
    /// `s ∈ [1, n]` with `s·g = a`. In particular `ind(g, 0) = n`.
    pub fn ind(&self, g: &GroupElement, a: &GroupElement) -> Result<u64> {
        self.check_member(g)?;
        self.check_member(a)?;
        self.require_cyclic_nontrivial()?;
        let n = self.order() as u64;
        if self.order_idx(g.index) != n {
            return Err(Error::NotGenerator(g.to_string()));
        }
        Ok(self.ind_idx(g.index, a.index))
    }

    /// Index of `a` relative to generator `g` in a cyclic group; no checks.
    pub(crate) fn ind_idx(&self, g: usize, a: usize) -> u64 {
        // In Z_n the element index is the residue itself.
        let n = self.order() as u64;
        let inv = mod_inverse(g as u64, n).expect("generator is a unit");
        let s = (a as u64 * inv) % n;
        if s == 0 {
            n
        } else {
            s
        }
    }

    /// Generators of a cyclic group, in canonical order.
    pub fn generators(&self) -> Result<Vec<GroupElement>> {
        self.require_cyclic_nontrivial()?;
        Ok(self
            .generator_indices()
            .into_iter()
            .map(|i| self.element_at(i))
            .collect())
    }

    pub(crate) fn generator_indices(&self) -> Vec<usize> {
        let n = self.order() as u64;
        (1..self.order()).filter(|&i| self.order_idx(i) == n).collect()
    }

    pub(crate) fn require_cyclic_nontrivial(&self) -> Result<()> {
        if !self.is_cyclic() || self.is_trivial() {
            return Err(Error::NotCyclic(self.to_string()));
        }
        Ok(())
    }

    pub(crate) fn check_member(&self, a: &GroupElement) -> Result<()> {
        if &a.group != self {
            return Err(Error::GroupMismatch {
                expected: self.to_string(),
                found: a.group.to_string(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_same(&self, other: &FiniteAbelianGroup) -> Result<()> {
        if other != self {
            return Err(Error::GroupMismatch {
                expected: self.to_string(),
                found: other.to_string(),
            });
        }
        Ok(())
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[GroupElement]) -> Result<Subgroup> {
        for g in gens {
            self.check_member(g)?;
        }
        let idx: Vec<usize> = gens.iter().map(|g| g.index).collect();
        Ok(self.subgroup_generated_idx(&idx))
    }

    pub(crate) fn subgroup_generated_idx(&self, gens: &[usize]) -> Subgroup {
        let mut set = ElemSet::singleton(self.order(), 0);
        let mut members = vec![0usize];
        // Closure under adding generators suffices in a finite group.
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.add_idx(x, g);
                if set.insert(y) {
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Subgroup {
            group: self.clone(),
            members,
            set,
        }
    }

    /// Validates an extensional subgroup: contains 0 and is closed under addition.
    pub fn subgroup_from_elements(&self, elems: &[GroupElement]) -> Result<Subgroup> {
        for e in elems {
            self.check_member(e)?;
        }
        let idx: Vec<usize> = elems.iter().map(|e| e.index).collect();
        self.subgroup_from_indices(&idx)
    }

    pub(crate) fn subgroup_from_indices(&self, elems: &[usize]) -> Result<Subgroup> {
        let mut set = ElemSet::new(self.order());
        for &e in elems {
            set.insert(e);
        }
        if !set.contains(0) {
            return Err(Error::NotSubgroup("does not contain 0".into()));
        }
        let members: Vec<usize> = set.iter().collect();
        for &a in &members {
            for &b in &members {
                if !set.contains(self.add_idx(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "{} + {} leaves the set",
                        self.element_at(a),
                        self.element_at(b)
                    )));
                }
            }
        }
        Ok(Subgroup {
            group: self.clone(),
            members,
            set,
        })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            group: self.clone(),
            members: (0..self.order()).collect(),
            set: {
                let mut s = ElemSet::new(self.order());
                (0..self.order()).for_each(|i| {
                    s.insert(i);
                });
                s
            },
        }
    }

    pub fn zero_subgroup(&self) -> Subgroup {
        self.subgroup_generated_idx(&[])
    }

    /// All subgroups, each generated by at most `rank + 1` elements; used by
    /// small sweeps.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: Vec<Subgroup> = Vec::new();
        let mut frontier = vec![self.zero_subgroup()];
        seen.push(self.zero_subgroup());
        while let Some(h) = frontier.pop() {
            for g in 0..self.order() {
                if h.set.contains(g) {
                    continue;
                }
                let mut gens = h.members.clone();
                gens.push(g);
                let k = self.subgroup_generated_idx(&gens);
                if !seen.contains(&k) {
                    seen.push(k.clone());
                    frontier.push(k);
                }
            }
        }
        seen.sort_by(|a, b| a.order().cmp(&b.order()).then(a.members.cmp(&b.members)));
        seen
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return p;
        }
        p += 1;
    }
    n
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(n as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(n as i64) as u64)
}

impl PartialEq for FiniteAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.factors == other.inner.factors
    }
}

impl Eq for FiniteAbelianGroup {}

impl Hash for FiniteAbelianGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.factors.hash(state);
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "{{0}}");
        }
        let parts: Vec<String> = self.factors().iter().map(|n| format!("Z_{n}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group{:?}", self.factors())
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    factors: Vec<u64>,
}

impl Serialize for FiniteAbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupRepr {
            factors: self.factors().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteAbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GroupRepr::deserialize(d)?;
        FiniteAbelianGroup::new(repr.factors).map_err(serde::de::Error::custom)
    }
}

/// An element of a specific group, stored by its canonical index.
#[derive(Clone)]
pub struct GroupElement {
    group: FiniteAbelianGroup,
    index: usize,
}

impl GroupElement {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coords(&self) -> Vec<u64> {
        self.group.coords_of(self.index)
    }

    /// Position in the canonical element order.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    pub fn order(&self) -> u64 {
        self.group.order_idx(self.index)
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.group.check_member(other)?;
        Ok(self.group.element_at(self.group.add_idx(self.index, other.index)))
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.group.check_member(other)?;
        Ok(self.group.element_at(self.group.sub_idx(self.index, other.index)))
    }

    pub fn neg(&self) -> GroupElement {
        self.group.element_at(self.group.neg_idx(self.index))
    }

    pub fn scale(&self, k: i64) -> GroupElement {
        self.group.element_at(self.group.mul_idx(k, self.index))
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.group == other.group
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.index.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group
            .factors()
            .cmp(other.group.factors())
            .then(self.index.cmp(&other.index))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coords();
        if c.len() == 1 {
            write!(f, "{}", c[0])
        } else {
            let parts: Vec<String> = c.iter().map(u64::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

/// A homomorphism `F → G` given by the images of the canonical generators of `F`.
#[derive(Clone)]
pub struct Homomorphism {
    domain: FiniteAbelianGroup,
    codomain: FiniteAbelianGroup,
    images: Vec<usize>,
    table: Arc<OnceLock<Vec<u32>>>,
}

impl Homomorphism {
    pub fn new(
        domain: FiniteAbelianGroup,
        codomain: FiniteAbelianGroup,
        gen_images: Vec<GroupElement>,
    ) -> Result<Self> {
        if gen_images.len() != domain.rank() {
            return Err(Error::InvalidElement(format!(
                "{} generator images given for a domain of rank {}",
                gen_images.len(),
                domain.rank()
            )));
        }
        for g in &gen_images {
            codomain.check_member(g)?;
        }
        let images = gen_images.iter().map(|g| g.index).collect();
        Self::from_indices(domain, codomain, images)
    }

    pub(crate) fn from_indices(
        domain: FiniteAbelianGroup,
        codomain: FiniteAbelianGroup,
        images: Vec<usize>,
    ) -> Result<Self> {
        for (i, (&img, &n)) in images.iter().zip(domain.factors()).enumerate() {
            if codomain.mul_idx(n as i64, img) != 0 {
                return Err(Error::IllDefinedHom { index: i });
            }
        }
        Ok(Homomorphism {
            domain,
            codomain,
            images,
            table: Arc::new(OnceLock::new()),
        })
    }

    /// Identity on `G`.
    pub fn identity(g: &FiniteAbelianGroup) -> Self {
        let images = g.basis().iter().map(|e| e.index).collect();
        Self::from_indices(g.clone(), g.clone(), images).expect("identity is well defined")
    }

    /// `x ↦ k·x` on `G`.
    pub fn scalar(g: &FiniteAbelianGroup, k: i64) -> Self {
        let images = g.basis().iter().map(|e| g.mul_idx(k, e.index)).collect();
        Self::from_indices(g.clone(), g.clone(), images).expect("scalar maps are well defined")
    }

    pub fn domain(&self) -> &FiniteAbelianGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteAbelianGroup {
        &self.codomain
    }

    pub fn gen_images(&self) -> Vec<GroupElement> {
        self.images.iter().map(|&i| self.codomain.element_at(i)).collect()
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        self.domain.check_member(x)?;
        Ok(self.codomain.element_at(self.apply_idx(x.index)))
    }

    #[inline]
    pub(crate) fn apply_idx(&self, x: usize) -> usize {
        let t = self
            .table
            .get_or_init(|| (0..self.domain.order()).map(|x| self.apply_slow(x) as u32).collect());
        t[x] as usize
    }

    fn apply_slow(&self, x: usize) -> usize {
        self.domain
            .coords_of(x)
            .iter()
            .zip(&self.images)
            .fold(0, |acc, (&c, &img)| {
                self.codomain.add_idx(acc, self.codomain.mul_idx(c as i64, img))
            })
    }

    pub fn kernel(&self, cap: usize) -> Result<Subgroup> {
        self.check_enumerable(cap)?;
        let ker: Vec<usize> = (0..self.domain.order()).filter(|&x| self.apply_idx(x) == 0).collect();
        self.domain.subgroup_from_indices(&ker)
    }

    pub fn image(&self, cap: usize) -> Result<Subgroup> {
        self.check_enumerable(cap)?;
        let im: Vec<usize> = (0..self.domain.order()).map(|x| self.apply_idx(x)).collect();
        self.codomain.subgroup_from_indices(&im)
    }

    fn check_enumerable(&self, cap: usize) -> Result<()> {
        if self.domain.order() > cap {
            return Err(Error::CapExceeded {
                what: "homomorphism domain enumeration",
                cap: cap as u64,
            });
        }
        Ok(())
    }
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.images == other.images
    }
}

impl Eq for Homomorphism {}

impl Hash for Homomorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.domain.hash(state);
        self.codomain.hash(state);
        self.images.hash(state);
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom({} -> {}, {:?})", self.domain, self.codomain, self.gen_images())
    }
}

#[derive(Serialize, Deserialize)]
struct HomRepr {
    domain: FiniteAbelianGroup,
    codomain: FiniteAbelianGroup,
    images: Vec<Vec<u64>>,
}

impl Serialize for Homomorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HomRepr {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            images: self.gen_images().iter().map(GroupElement::coords).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Homomorphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = HomRepr::deserialize(d)?;
        hom_from_coords(repr.domain, repr.codomain, &repr.images).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn hom_from_coords(
    domain: FiniteAbelianGroup,
    codomain: FiniteAbelianGroup,
    images: &[Vec<u64>],
) -> Result<Homomorphism> {
    let imgs = images.iter().map(|c| codomain.element(c)).collect::<Result<Vec<_>>>()?;
    Homomorphism::new(domain, codomain, imgs)
}

/// All homomorphisms `F → G`. The `i`-th generator image ranges over the
/// elements of `G` killed by `n_i`.
pub fn enumerate_homs(f: &FiniteAbelianGroup, g: &FiniteAbelianGroup, cap: usize) -> Result<Vec<Homomorphism>> {
    let choices: Vec<Vec<usize>> = f
        .factors()
        .iter()
        .map(|&n| (0..g.order()).filter(|&x| g.mul_idx(n as i64, x) == 0).collect())
        .collect();
    let total = choices
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .filter(|&t| t <= cap)
        .ok_or(Error::CapExceeded {
            what: "homomorphism enumeration",
            cap: cap as u64,
        })?;
    let mut out = Vec::with_capacity(total);
    let mut pick = vec![0usize; choices.len()];
    loop {
        let images = pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect();
        out.push(Homomorphism::from_indices(f.clone(), g.clone(), images)?);
        // odometer, last generator fastest
        let mut i = choices.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// A subgroup stored extensionally.
#[derive(Clone)]
pub struct Subgroup {
    group: FiniteAbelianGroup,
    members: Vec<usize>,
    set: ElemSet,
}

impl Subgroup {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        a.group == self.group && self.set.contains(a.index)
    }

    pub(crate) fn contains_idx(&self, a: usize) -> bool {
        self.set.contains(a)
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.members.iter().map(|&i| self.group.element_at(i)).collect()
    }

    /// The cosets of this subgroup, each with its least element as representative,
    /// ordered by representative.
    pub fn cosets(&self) -> Vec<Coset> {
        let n = self.group.order();
        let mut seen = ElemSet::new(n);
        let mut out = Vec::new();
        for rep in 0..n {
            if seen.contains(rep) {
                continue;
            }
            let coset = Coset::from_parts(rep, self.clone());
            for &m in coset.member_indices() {
                seen.insert(m);
            }
            out.push(coset);
        }
        out
    }

    /// A small generating set, chosen greedily in canonical order.
    pub fn generators(&self) -> Vec<GroupElement> {
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.group.zero_subgroup();
        for &m in &self.members {
            if span.order() == self.order() {
                break;
            }
            if !span.contains_idx(m) {
                gens.push(m);
                span = self.group.subgroup_generated_idx(&gens);
            }
        }
        gens.into_iter().map(|i| self.group.element_at(i)).collect()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements())
    }
}

/// A coset `a + H`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coset {
    rep: usize,
    subgroup: Subgroup,
    members: Vec<usize>,
}

impl Coset {
    pub fn new(rep: &GroupElement, subgroup: Subgroup) -> Result<Self> {
        subgroup.group.check_member(rep)?;
        Ok(Self::from_parts(rep.index, subgroup))
    }

    pub(crate) fn from_parts(rep: usize, subgroup: Subgroup) -> Self {
        let g = &subgroup.group;
        let mut members: Vec<usize> = subgroup.members.iter().map(|&h| g.add_idx(rep, h)).collect();
        members.sort_unstable();
        Coset { rep, subgroup, members }
    }

    pub fn representative(&self) -> GroupElement {
        self.subgroup.group.element_at(self.rep)
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// `x ∈ a + H ⇔ x − a ∈ H`.
    pub fn contains(&self, x: &GroupElement) -> bool {
        x.group == self.subgroup.group
            && self
                .subgroup
                .contains_idx(self.subgroup.group.sub_idx(x.index, self.rep))
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.members
            .iter()
            .map(|&i| self.subgroup.group.element_at(i))
            .collect()
    }

    pub(crate) fn member_indices(&self) -> &[usize] {
        &self.members
    }

    /// The same coset with its least element as representative; two cosets are
    /// equal as sets iff their canonical forms are equal.
    pub fn canonical(&self) -> Coset {
        Coset::from_parts(self.members[0], self.subgroup.clone())
    }
}

impl fmt::Debug for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {:?}", self.representative(), self.subgroup)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(f.to_vec()).unwrap()
    }

    #[test]
    fn make_group_examples() {
        let t = g(&[]);
        assert_eq!((t.order(), t.exponent()), (1, 1));
        let z6 = g(&[6]);
        assert_eq!((z6.order(), z6.exponent()), (6, 6));
        let z24 = g(&[2, 4]);
        assert_eq!((z24.order(), z24.exponent()), (8, 4));
    }

    #[test]
    fn make_group_rejects_bad_presentations() {
        assert!(matches!(
            FiniteAbelianGroup::new(vec![4, 2]),
            Err(Error::MalformedPresentation(_))
        ));
        assert!(matches!(
            FiniteAbelianGroup::new(vec![1, 2]),
            Err(Error::MalformedPresentation(_))
        ));
        assert!(matches!(
            FiniteAbelianGroup::new(vec![2, 3]),
            Err(Error::MalformedPresentation(_))
        ));
    }

    #[test]
    fn element_order_examples() {
        let z6 = g(&[6]);
        assert_eq!(z6.element_order(&z6.zero()).unwrap(), 1);
        assert_eq!(z6.element_order(&z6.element(&[2]).unwrap()).unwrap(), 3);
        let z24 = g(&[2, 4]);
        assert_eq!(z24.element_order(&z24.element(&[1, 2]).unwrap()).unwrap(), 2);
        assert!(matches!(
            z6.element_order(&z24.zero()),
            Err(Error::GroupMismatch { .. })
        ));
    }

    #[test]
    fn element_validation() {
        let z24 = g(&[2, 4]);
        assert!(z24.element(&[2, 0]).is_err());
        assert!(z24.element(&[1]).is_err());
        assert_eq!(z24.reduce(&[-1, 5]).unwrap().coords(), vec![1, 1]);
    }

    #[test]
    fn ind_examples() {
        let z6 = g(&[6]);
        let e = |c| z6.element(&[c]).unwrap();
        assert_eq!(z6.ind(&e(1), &e(4)).unwrap(), 4);
        assert_eq!(z6.ind(&e(5), &e(4)).unwrap(), 2);
        assert_eq!(z6.ind(&e(1), &e(0)).unwrap(), 6);
        assert!(matches!(z6.ind(&e(2), &e(4)), Err(Error::NotGenerator(_))));
        let z22 = g(&[2, 2]);
        assert!(matches!(z22.ind(&z22.zero(), &z22.zero()), Err(Error::NotCyclic(_))));
    }

    #[test]
    fn ind_is_bijection() {
        for n in 2..=12u64 {
            let z = g(&[n]);
            for gen in z.generators().unwrap() {
                let mut hit = vec![false; n as usize + 1];
                for a in z.elements() {
                    let s = z.ind(&gen, &a).unwrap();
                    assert!((1..=n).contains(&s));
                    assert_eq!(gen.scale(s as i64), a);
                    assert!(!hit[s as usize]);
                    hit[s as usize] = true;
                }
            }
        }
    }

    #[test]
    fn make_hom_examples() {
        let z4 = g(&[4]);
        let z2 = g(&[2]);
        let z6 = g(&[6]);
        assert!(Homomorphism::new(z4.clone(), z2.clone(), vec![z2.element(&[1]).unwrap()]).is_ok());
        assert_eq!(
            Homomorphism::new(z2.clone(), z4.clone(), vec![z4.element(&[1]).unwrap()]).unwrap_err(),
            Error::IllDefinedHom { index: 0 }
        );
        let h = Homomorphism::new(z6.clone(), z6.clone(), vec![z6.element(&[5]).unwrap()]).unwrap();
        for x in z6.elements() {
            assert_eq!(h.apply(&x).unwrap(), x.scale(5));
        }
    }

    #[test]
    fn kernel_image_examples() {
        let z6 = g(&[6]);
        let h = Homomorphism::scalar(&z6, 2);
        let ker: Vec<u64> = h
            .kernel(1000)
            .unwrap()
            .elements()
            .iter()
            .map(|e| e.coords()[0])
            .collect();
        let im: Vec<u64> = h
            .image(1000)
            .unwrap()
            .elements()
            .iter()
            .map(|e| e.coords()[0])
            .collect();
        assert_eq!(ker, vec![0, 3]);
        assert_eq!(im, vec![0, 2, 4]);

        let z4 = g(&[4]);
        let id = Homomorphism::identity(&z4);
        assert_eq!(id.kernel(1000).unwrap().order(), 1);
        assert_eq!(id.image(1000).unwrap().order(), 4);

        let z2 = g(&[2]);
        let proj = Homomorphism::new(z4.clone(), z2.clone(), vec![z2.element(&[1]).unwrap()]).unwrap();
        let ker: Vec<u64> = proj
            .kernel(1000)
            .unwrap()
            .elements()
            .iter()
            .map(|e| e.coords()[0])
            .collect();
        assert_eq!(ker, vec![0, 2]);
        assert_eq!(proj.image(1000).unwrap().order(), 2);

        assert!(proj.kernel(3).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn enumerate_homs_examples() {
        let z2 = g(&[2]);
        let z4 = g(&[4]);
        let z6 = g(&[6]);
        assert_eq!(enumerate_homs(&z2, &z2, 100).unwrap().len(), 2);
        let h24 = enumerate_homs(&z2, &z4, 100).unwrap();
        let imgs: Vec<u64> = h24.iter().map(|h| h.gen_images()[0].coords()[0]).collect();
        assert_eq!(imgs, vec![0, 2]);
        assert_eq!(enumerate_homs(&z6, &z6, 100).unwrap().len(), 6);
        assert!(enumerate_homs(&z6, &z6, 5).unwrap_err().is_cap_exceeded());
        // Hom from the trivial group: just the zero map.
        assert_eq!(enumerate_homs(&g(&[]), &z6, 10).unwrap().len(), 1);
    }

    #[test]
    fn subgroup_examples() {
        let z6 = g(&[6]);
        let h = z6.subgroup_generated(&[z6.element(&[2]).unwrap()]).unwrap();
        assert_eq!(
            h.elements().iter().map(|e| e.coords()[0]).collect::<Vec<_>>(),
            vec![0, 2, 4]
        );
        let h3 = z6
            .subgroup_from_elements(&[z6.zero(), z6.element(&[3]).unwrap()])
            .unwrap();
        assert_eq!(h3.cosets().len(), 3);
        assert_eq!(h3.index(), 3);

        let z24 = g(&[2, 4]);
        let k = z24
            .subgroup_generated(&[z24.element(&[1, 0]).unwrap(), z24.element(&[0, 2]).unwrap()])
            .unwrap();
        assert_eq!((k.order(), k.index()), (4, 2));

        assert!(matches!(
            z6.subgroup_from_elements(&[z6.zero(), z6.element(&[1]).unwrap()]),
            Err(Error::NotSubgroup(_))
        ));
    }

    #[test]
    fn cosets_partition() {
        for f in [vec![6], vec![2, 4], vec![2, 2, 2], vec![3, 3]] {
            let grp = g(&f);
            for h in grp.all_subgroups() {
                let cs = h.cosets();
                assert_eq!(cs.len(), h.index());
                let mut all: Vec<usize> = cs.iter().flat_map(|c| c.member_indices().to_vec()).collect();
                all.sort_unstable();
                assert_eq!(all, (0..grp.order()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn all_subgroups_counts() {
        assert_eq!(g(&[6]).all_subgroups().len(), 4);
        assert_eq!(g(&[2, 2]).all_subgroups().len(), 5);
        assert_eq!(g(&[2, 4]).all_subgroups().len(), 8);
    }

    #[test]
    fn p_group_detection() {
        assert!(g(&[2, 4]).is_p_group());
        assert!(g(&[9]).is_p_group());
        assert!(!g(&[6]).is_p_group());
        assert!(!g(&[]).is_p_group());
    }
}
