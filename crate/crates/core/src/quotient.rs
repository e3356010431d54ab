//! Bringing a finite abelian group given by an addition rule into
//! invariant-factor form, and direct sums of quotients `F/H_1 ⊕ … ⊕ F/H_t`.

use std::collections::BTreeMap;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, Homomorphism, Subgroup};

/// An isomorphism from a group on labels `0..n` (with `0` the identity) to
/// its invariant-factor form.
pub(crate) struct Normalized {
    pub group: FiniteAbelianGroup,
    /// Label to element index of `group`.
    pub iso: Vec<usize>,
}

fn element_orders(n: usize, add: &impl Fn(usize, usize) -> usize) -> Vec<u64> {
    (0..n)
        .map(|x| {
            let (mut y, mut k) = (x, 1);
            while y != 0 {
                y = add(y, x);
                k += 1;
            }
            k
        })
        .collect()
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors from element-order counts. For each prime `p`, the
/// number of `x` with `p^k x = 0` is `p^{Σ_j min(e_j, k)}` over the exponents
/// `e_j` of the `p`-primary cyclic parts, which determines the `e_j`.
fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let n = orders.len() as u64;
    let mut per_prime: Vec<Vec<u32>> = Vec::new();
    let mut primes = Vec::new();
    for (p, e) in prime_factors(n) {
        let log_count = |k: u32| -> u32 {
            let pk = p.pow(k);
            let c = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            c.ilog(p)
        };
        let at_least: Vec<u32> = (1..=e + 1).map(|k| log_count(k) - log_count(k - 1)).collect();
        let mut exps = Vec::new();
        for k in 1..=e {
            let exactly = at_least[k as usize - 1] - at_least[k as usize];
            exps.extend(std::iter::repeat_n(k, exactly as usize));
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        primes.push(p);
        per_prime.push(exps);
    }
    let r = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..r)
        .map(|i| {
            primes
                .iter()
                .zip(&per_prime)
                .map(|(&p, exps)| exps.get(i).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

fn span(n: usize, add: &impl Fn(usize, usize) -> usize, gens: &[usize]) -> ElemSet {
    let mut seen = ElemSet::singleton(n, 0);
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = add(x, g);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

/// Finds elements `b_i` of order `n_i` whose span is their direct sum,
/// choosing from the largest factor down and backtracking on failure.
fn find_basis(n: usize, add: &impl Fn(usize, usize) -> usize, orders: &[u64], factors: &[u64]) -> Option<Vec<usize>> {
    fn go(
        n: usize,
        add: &impl Fn(usize, usize) -> usize,
        orders: &[u64],
        factors: &[u64],
        chosen: &mut Vec<usize>,
        size: u64,
    ) -> bool {
        let Some(&want) = factors.get(factors.len().wrapping_sub(chosen.len() + 1)) else {
            return true;
        };
        if chosen.len() == factors.len() {
            return true;
        }
        for x in 0..n {
            if orders[x] != want {
                continue;
            }
            chosen.push(x);
            if span(n, add, chosen).len() as u64 == size * want && go(n, add, orders, factors, chosen, size * want) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    go(n, add, orders, factors, &mut chosen, 1).then(|| {
        chosen.reverse();
        chosen
    })
}

/// Normalizes the group on labels `0..n` with the given addition.
pub(crate) fn normalize(n: usize, add: impl Fn(usize, usize) -> usize) -> Result<Normalized> {
    let orders = element_orders(n, &add);
    let factors = invariant_factors(&orders);
    let group = FiniteAbelianGroup::new(factors.clone())?;
    let basis = find_basis(n, &add, &orders, &factors)
        .ok_or_else(|| Error::Falsified("no basis matches the invariant factors".into()))?;
    let mut iso = vec![usize::MAX; n];
    for e in group.elements() {
        let mut label = 0;
        for (&c, &b) in e.coords().iter().zip(&basis) {
            for _ in 0..c {
                label = add(label, b);
            }
        }
        if iso[label] != usize::MAX {
            return Err(Error::Falsified("basis does not give a bijection".into()));
        }
        iso[label] = e.index();
    }
    Ok(Normalized { group, iso })
}

/// `G = F/H_1 ⊕ … ⊕ F/H_t` in invariant-factor form with the maps
/// `ψ_i : F → F/H_i → G`, so that `Ker ψ_i = H_i`.
#[derive(Clone, Debug)]
pub struct QuotientSum {
    pub group: FiniteAbelianGroup,
    pub homs: Vec<Homomorphism>,
}

pub fn quotient_sum(f: &FiniteAbelianGroup, subgroups: &[Subgroup]) -> Result<QuotientSum> {
    if subgroups.is_empty() {
        return Err(Error::precondition("need at least one subgroup"));
    }
    // Coset number of each element in each quotient; coset 0 contains 0.
    let mut coset_of: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for h in subgroups {
        f.check_same(h.group())?;
        let mut ids = vec![0; f.order()];
        let mut r = Vec::new();
        for (i, c) in h.cosets().iter().enumerate() {
            r.push(c.representative().index());
            for e in c.elements() {
                ids[e.index()] = i;
            }
        }
        coset_of.push(ids);
        reps.push(r);
    }
    let radix: Vec<usize> = reps.iter().map(Vec::len).collect();
    let n: usize = radix.iter().product();
    let split = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; radix.len()];
        for i in (0..radix.len()).rev() {
            d[i] = x % radix[i];
            x /= radix[i];
        }
        d
    };
    let join = |d: &[usize]| d.iter().zip(&radix).fold(0, |acc, (&c, &r)| acc * r + c);
    let add = |x: usize, y: usize| -> usize {
        let (a, b) = (split(x), split(y));
        let sum: Vec<usize> = (0..radix.len())
            .map(|i| coset_of[i][f.add_idx(reps[i][a[i]], reps[i][b[i]])])
            .collect();
        join(&sum)
    };
    let norm = normalize(n, add)?;
    let mut homs = Vec::new();
    for i in 0..subgroups.len() {
        let image_of = |x: usize| {
            let mut d = vec![0; radix.len()];
            d[i] = coset_of[i][x];
            norm.iso[join(&d)]
        };
        let images: Vec<usize> = f.basis().iter().map(|e| image_of(e.index())).collect();
        let hom = Homomorphism::from_indices(f.clone(), norm.group.clone(), images)?;
        if (0..f.order()).any(|x| hom.apply_idx(x) != image_of(x)) {
            return Err(Error::Falsified(format!("quotient map {i} is not additive")));
        }
        homs.push(hom);
    }
    Ok(QuotientSum {
        group: norm.group,
        homs,
    })
}

/// Invariant factors of a group from a multiset of cyclic orders, e.g. the
/// factor lists of several groups concatenated.
pub fn invariant_factors_of_product(orders: &[u64]) -> Vec<u64> {
    let mut per_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &m in orders {
        for (p, e) in prime_factors(m) {
            per_prime.entry(p).or_default().push(e);
        }
    }
    let r = per_prime.values().map(Vec::len).max().unwrap_or(0);
    for v in per_prime.values_mut() {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut f: Vec<u64> = (0..r)
        .map(|i| {
            per_prime
                .iter()
                .map(|(&p, v)| v.get(i).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    f.reverse();
    f
}
