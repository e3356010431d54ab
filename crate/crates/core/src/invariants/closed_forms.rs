//! Explicit descriptions of the minimal-set intersection and of `Q_t` for
//! cyclic groups, and the sequences showing `A(G)` is not minimal.

use super::{OmegaSet, Provenance};
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::sequences::GSequence;

fn cyclic_order(group: &FiniteAbelianGroup) -> Result<usize> {
    group.require_cyclic_nontrivial()?;
    let n = group.order();
    if n < 3 {
        return Err(Error::precondition(
            "closed forms need a cyclic group of order at least 3",
        ));
    }
    Ok(n)
}

/// `a^{ord(a)}` for the elements `a` whose order passes `keep`.
fn full_powers(group: &FiniteAbelianGroup, keep: impl Fn(u64) -> bool) -> Vec<GSequence> {
    (0..group.order())
        .filter(|&a| keep(group.order_idx(a)))
        .map(|a| GSequence::from_indices(group, vec![a; group.order_idx(a) as usize]))
        .collect()
}

/// `g^k · (−kg)` for generators `g` and `1 ≤ k ≤ n − 2`.
fn generator_chains(group: &FiniteAbelianGroup) -> Vec<GSequence> {
    let n = group.order();
    let mut out = Vec::new();
    for g in group.generator_indices() {
        for k in 1..=n - 2 {
            let mut t = vec![g; k];
            t.push(group.mul_idx(-(k as i64), g));
            out.push(GSequence::from_indices(group, t));
        }
    }
    out
}

/// The members of every minimal subset of `A(Z_n)`, `n ≥ 3`:
/// `{a^{ord(a)}} ∪ {g^k·(−kg) : ord(g) = n, 1 ≤ k ≤ n−2} ∪ X`, where
/// `X = {g^2·((n/2 − 1)g)^2 : ord(g) = n}` when `4 | n` and `n ≥ 8`, else empty.
pub fn closed_form_minimal_intersection(group: &FiniteAbelianGroup) -> Result<OmegaSet> {
    let n = cyclic_order(group)?;
    let mut members = full_powers(group, |_| true);
    members.extend(generator_chains(group));
    if n % 4 == 0 && n >= 8 {
        for g in group.generator_indices() {
            let h = group.mul_idx(n as i64 / 2 - 1, g);
            members.push(GSequence::from_indices(group, vec![g, g, h, h]));
        }
    }
    OmegaSet::new(group, members, Provenance::MinimalIntersectionClosedForm)
}

/// `Q_t(Z_n)` for `n ≥ 3`, `t ≥ n`: at `t = n` the full powers of elements of
/// order `1`, `n/2` or `n` together with the chains `g^k·(−kg)`; for
/// `n < t < 2n` the powers `g^n` of generators; empty from `2n` on.
pub fn closed_form_q_t(group: &FiniteAbelianGroup, t: usize) -> Result<OmegaSet> {
    let n = cyclic_order(group)?;
    if t < n {
        return Err(Error::precondition(format!("Q_t needs t ≥ {n}, got {t}")));
    }
    let n64 = n as u64;
    let members = if t == n {
        let mut m = full_powers(group, |o| o == 1 || o == n64 || 2 * o == n64);
        m.extend(generator_chains(group));
        m
    } else if t < 2 * n {
        full_powers(group, |o| o == n64)
    } else {
        Vec::new()
    };
    OmegaSet::new(group, members, Provenance::QTClosedForm(t))
}

/// `g·(2g)·((n−3)g)` with `g = 1` over `Z_n`, `n ≥ 6`: a minimal zero-sum
/// sequence outside the minimal-set intersection.
pub fn cyclic_falsifier(group: &FiniteAbelianGroup) -> Result<GSequence> {
    let n = cyclic_order(group)?;
    if n < 6 {
        return Err(Error::precondition("needs n ≥ 6"));
    }
    GSequence::cyclic(group, &[1, 2, n as i64 - 3])
}

/// For `G = Z_{n_1} ⊕ … ⊕ Z_{n_r}` with `r ≥ 2` and `n_r ≥ 3`, with basis
/// `e_i`: `(∏_{i<r} e_i^{n_i−1}) · e_r^{n_r−3} · (2e_r) · (e_1 + … + e_r)`, a
/// minimal zero-sum sequence outside the minimal-set intersection.
pub fn non_cyclic_falsifier(group: &FiniteAbelianGroup) -> Result<GSequence> {
    let r = group.rank();
    let f = group.factors();
    if r < 2 || f[r - 1] < 3 {
        return Err(Error::precondition("needs rank at least 2 and n_r ≥ 3"));
    }
    let basis = group.basis();
    let mut terms = Vec::new();
    for i in 0..r - 1 {
        terms.extend(std::iter::repeat_n(basis[i].clone(), f[i] as usize - 1));
    }
    let er = &basis[r - 1];
    terms.extend(std::iter::repeat_n(er.clone(), f[r - 1] as usize - 3));
    terms.push(er.scale(2));
    let all = basis.iter().skip(1).try_fold(basis[0].clone(), |acc, e| acc.add(e))?;
    terms.push(all);
    GSequence::new(group, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(closed_form_minimal_intersection(&z(6)).unwrap().len(), 13);
        assert_eq!(closed_form_q_t(&z(6), 6).unwrap().len(), 12);
        assert_eq!(closed_form_q_t(&z(5), 7).unwrap().len(), 4);
        assert!(closed_form_q_t(&z(5), 10).unwrap().is_empty());
        assert!(closed_form_q_t(&z(5), 4).is_err());
        assert!(closed_form_minimal_intersection(&z(2)).is_err());
    }

    #[test]
    fn x_part() {
        let z8 = z(8);
        let x = closed_form_minimal_intersection(&z8).unwrap();
        let one = GSequence::cyclic(&z8, &[1, 1, 3, 3]).unwrap();
        let five = GSequence::cyclic(&z8, &[5, 5, 7, 7]).unwrap();
        assert!(x.contains(&one) && x.contains(&five));
        let z12 = z(12);
        assert!(closed_form_minimal_intersection(&z12)
            .unwrap()
            .contains(&GSequence::cyclic(&z12, &[1, 1, 5, 5]).unwrap()));
        let z4 = z(4);
        let x4 = closed_form_minimal_intersection(&z4).unwrap();
        assert_eq!(x4.len(), 7);
    }

    #[test]
    fn members_are_minimal() {
        for n in 3..=12 {
            let g = z(n);
            for v in closed_form_minimal_intersection(&g).unwrap().members() {
                assert!(v.is_minimal_zero_sum(), "{v}");
            }
        }
    }

    #[test]
    fn falsifiers() {
        assert_eq!(cyclic_falsifier(&z(8)).unwrap().to_string(), "1·2·5");
        assert!(cyclic_falsifier(&z(5)).is_err());
        let g = FiniteAbelianGroup::new(vec![3, 6]).unwrap();
        let v = non_cyclic_falsifier(&g).unwrap();
        assert!(v.is_minimal_zero_sum());
        assert_eq!(v.len(), 2 + 3 + 1 + 1);
        assert!(non_cyclic_falsifier(&z(8)).is_err());
    }
}
