//! Scalar weights on the integers, checked over a bounded range of terms
//! and weights.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Terms range over nonzero integers in `[−term_bound, term_bound]`, weights
/// `x ↦ kx` over nonzero `k` in `[−weight_bound, weight_bound]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntWeightDemo {
    pub term_bound: i64,
    pub weight_bound: i64,
}

impl IntWeightDemo {
    pub fn new(term_bound: i64, weight_bound: i64) -> Result<Self> {
        if term_bound < 1 || weight_bound < 1 {
            return Err(Error::precondition("bounds must be positive"));
        }
        Ok(IntWeightDemo {
            term_bound,
            weight_bound,
        })
    }

    fn weights(&self) -> impl Iterator<Item = i64> + '_ {
        (-self.weight_bound..=self.weight_bound).filter(|&k| k != 0)
    }

    fn terms(&self) -> impl Iterator<Item = i64> + '_ {
        (-self.term_bound..=self.term_bound).filter(|&a| a != 0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingletonCheck {
    pub checked: usize,
    pub all_zero_sum_free: bool,
}

/// `wa·a + wb·b = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub a: i64,
    pub b: i64,
    pub wa: i64,
    pub wb: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    /// Unordered pairs of nonzero terms.
    pub checked: usize,
    /// Pairs whose smallest weights fit in the weight bound.
    pub witnessed_within_bound: usize,
    /// Weight bound needed to witness every pair.
    pub min_sufficient_weight_bound: i64,
    /// A pair needing the largest weights.
    pub hardest: PairWitness,
    pub all_valid: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionCheck {
    pub n: i64,
    /// No weighted image of `(2n)·(−2n)` or of one of its terms equals
    /// `n·(−n)` or `0`.
    pub blocked: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalarWeightsReport {
    pub bounds: IntWeightDemo,
    pub singletons: SingletonCheck,
    pub pairs: PairCheck,
    pub obstructions: Vec<ObstructionCheck>,
    pub verified: bool,
}

/// Smallest nonzero weights with `wa·a + wb·b = 0`: `(b/g, −a/g)` for
/// `g = gcd(a, b)`.
pub fn pair_weights(a: i64, b: i64) -> Result<PairWitness> {
    if a == 0 || b == 0 {
        return Err(Error::precondition("terms must be nonzero"));
    }
    let g = a.gcd(&b);
    Ok(PairWitness {
        a,
        b,
        wa: b / g,
        wb: -a / g,
    })
}

fn obstruction(cfg: &IntWeightDemo, n: i64) -> ObstructionCheck {
    let (x, y) = (2 * n, -2 * n);
    let single_zero = cfg.weights().any(|k| k * x == 0 || k * y == 0);
    let pair_image = cfg.weights().any(|k1| {
        cfg.weights().any(|k2| {
            let (u, v) = (k1 * x, k2 * y);
            (u == n && v == -n) || (u == -n && v == n)
        })
    });
    ObstructionCheck {
        n,
        blocked: !single_zero && !pair_image,
    }
}

/// Checks over the bounded range that single nonzero terms are weighted
/// zero-sum free, that every pair of nonzero terms has a weighted zero sum,
/// and that `(2n)·(−2n)` has no weighted image in `{n·(−n), 0}`.
pub fn scalar_weights_demo(cfg: IntWeightDemo) -> ScalarWeightsReport {
    let singles: Vec<i64> = cfg.terms().collect();
    let all_free = singles.iter().all(|&a| cfg.weights().all(|k| k * a != 0));

    let mut checked = 0;
    let mut within = 0;
    let mut hardest: Option<PairWitness> = None;
    let mut all_valid = true;
    for (i, &a) in singles.iter().enumerate() {
        for &b in &singles[i..] {
            checked += 1;
            let w = pair_weights(a, b).expect("nonzero terms");
            all_valid &= w.wa != 0 && w.wb != 0 && w.wa * a + w.wb * b == 0;
            let need = w.wa.abs().max(w.wb.abs());
            if need <= cfg.weight_bound {
                within += 1;
            }
            if hardest.is_none_or(|h| need > h.wa.abs().max(h.wb.abs())) {
                hardest = Some(w);
            }
        }
    }
    let hardest = hardest.expect("at least the pair (1, 1)");
    let pairs = PairCheck {
        checked,
        witnessed_within_bound: within,
        min_sufficient_weight_bound: hardest.wa.abs().max(hardest.wb.abs()),
        hardest,
        all_valid,
    };

    let obstructions: Vec<ObstructionCheck> = (1..=cfg.term_bound / 2).map(|n| obstruction(&cfg, n)).collect();
    let verified = all_free && pairs.all_valid && obstructions.iter().all(|o| o.blocked);
    ScalarWeightsReport {
        bounds: cfg,
        singletons: SingletonCheck {
            checked: singles.len(),
            all_zero_sum_free: all_free,
        },
        pairs,
        obstructions,
        verified,
    }
}
