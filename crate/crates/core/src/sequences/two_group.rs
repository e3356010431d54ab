//! Zero-sum freeness over `Z_2^r` by linear algebra over the two-element field.

use serde::Serialize;

use super::GSequence;
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoGroupCertificate {
    pub squarefree: bool,
    /// Rank over GF(2) of the support.
    pub rank: usize,
    pub support_size: usize,
    /// Squarefree with a linearly independent support.
    pub zero_sum_free: bool,
}

/// Over `Z_2^r`, a sequence is zero-sum free exactly when it is squarefree and
/// its support is linearly independent. Computes that structural verdict and
/// reports a falsification if it disagrees with the subsum computation.
pub fn elementary_two_certificate(group: &FiniteAbelianGroup, s: &GSequence) -> Result<TwoGroupCertificate> {
    if !group.is_elementary_two() {
        return Err(Error::precondition(format!("{group} is not an elementary 2-group")));
    }
    group.check_same(s.group())?;
    let support = s.support();
    let mut basis: Vec<u64> = Vec::new();
    for e in &support {
        let mut v = e.coords().iter().fold(0u64, |acc, &c| acc << 1 | c);
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    let squarefree = s.is_squarefree();
    let cert = TwoGroupCertificate {
        squarefree,
        rank: basis.len(),
        support_size: support.len(),
        zero_sum_free: squarefree && basis.len() == support.len(),
    };
    if cert.zero_sum_free != s.is_zero_sum_free() {
        return Err(Error::Falsified(format!(
            "structural verdict {} disagrees with subsums for {s}",
            cert.zero_sum_free
        )));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::multisets;

    #[test]
    fn examples() {
        let g = FiniteAbelianGroup::elementary_two(3);
        let e = g.basis();
        let s = GSequence::new(&g, &e).unwrap();
        let c = elementary_two_certificate(&g, &s).unwrap();
        assert!(c.zero_sum_free);
        assert_eq!(c.rank, 3);
        let s = GSequence::new(&g, &[e[0].clone(), e[0].clone()]).unwrap();
        assert!(!elementary_two_certificate(&g, &s).unwrap().zero_sum_free);
        let sum = e[0].add(&e[1]).unwrap();
        let s = GSequence::new(&g, &[e[0].clone(), e[1].clone(), sum]).unwrap();
        assert!(!elementary_two_certificate(&g, &s).unwrap().zero_sum_free);
        let z4 = FiniteAbelianGroup::cyclic(4).unwrap();
        assert!(elementary_two_certificate(&z4, &GSequence::empty(&z4)).is_err());
    }

    #[test]
    fn agrees_with_subsums_exhaustively() {
        for r in 1..=3 {
            let g = FiniteAbelianGroup::elementary_two(r);
            for k in 0..=5 {
                for m in multisets(g.order(), k) {
                    elementary_two_certificate(&g, &GSequence::from_indices(&g, m)).unwrap();
                }
            }
        }
    }
}
