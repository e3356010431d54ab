//! Exhaustive and randomized sweeps that check the computed invariants
//! against their closed forms and bounds, one suite per acceptance criterion.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::covers::{
    cover_size_bound_verify, kernels_to_cover_with_length, random_irredundant_cover, sun_bound_verify, Verdict,
};
use crate::error::{Error, Result};
use crate::group::{enumerate_homs, FiniteAbelianGroup};
use crate::invariants::{
    a_g_minimality, closed_form_minimal_intersection, closed_form_q_t, cyclic_falsifier, davenport,
    lemke_kleitman_check, minimal_sets_intersection, non_cyclic_falsifier, q_t, InvariantValue, OmegaSet,
};
use crate::search::{self, SearchConfig};
use crate::sequences::{
    distinct_length_pair, elementary_two_certificate, graham_pair, run_lengths, savchev_chen_witness, small_term_index,
    GSequence, IntSequence, ZeroSumFree,
};
use crate::weighted::{kernel_coset_bound, scalar_weights_demo, weighted_davenport, IntWeightDemo, WeightSet};

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub criterion: u32,
    pub name: &'static str,
    pub passed: bool,
    /// Number of instances checked.
    pub checked: usize,
    pub summary: String,
    pub notes: Vec<String>,
    pub seconds: f64,
}

/// `(criterion, name)` for every suite.
pub const SUITES: [(u32, &str); 17] = [
    (1, "davenport-closed-form"),
    (2, "qt-empty"),
    (3, "qt-generator-powers"),
    (4, "qt-at-order"),
    (5, "minimal-intersection"),
    (6, "ag-minimality-cyclic"),
    (7, "ag-minimality-two-groups"),
    (8, "ag-minimality-z3z3"),
    (9, "weighted-identity"),
    (10, "weighted-plus-minus"),
    (11, "kernel-coset-bound"),
    (12, "kernel-cover"),
    (13, "sun-bound"),
    (14, "cover-size-bound"),
    (15, "scalar-weights"),
    (16, "sequence-properties"),
    (17, "lemke-kleitman"),
];

pub fn suite_id(name: &str) -> Option<u32> {
    SUITES
        .iter()
        .find(|s| s.1 == name || s.0.to_string() == name)
        .map(|s| s.0)
}

/// Every group `Z_{n_1} ⊕ … ⊕ Z_{n_r}` with `n_1 | … | n_r` and order at most
/// `max_order`, the trivial group first, ordered by order then factors.
pub fn groups_up_to(max_order: u64) -> Vec<FiniteAbelianGroup> {
    fn extend(prefix: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let last = prefix.last().copied().unwrap_or(1);
        let mut next = if prefix.is_empty() { 2 } else { last };
        while order * next <= max {
            if next % last == 0 {
                prefix.push(next);
                extend(prefix, order * next, max, out);
                prefix.pop();
            }
            next += 1;
        }
    }
    let mut all = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut all);
    let mut groups: Vec<FiniteAbelianGroup> = all
        .into_iter()
        .map(|f| FiniteAbelianGroup::new(f).expect("divisor chain"))
        .collect();
    groups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.factors().cmp(b.factors())));
    groups
}

fn z(n: u64) -> FiniteAbelianGroup {
    FiniteAbelianGroup::cyclic(n).expect("n ≥ 1")
}

fn same_members(a: &OmegaSet, b: &OmegaSet) -> bool {
    a.len() == b.len() && a.is_subset(b)
}

/// Collects check failures; a falsification from the library becomes a note.
struct Tally {
    checked: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Runs a check whose library call may report a falsification.
    fn run<T>(&mut self, what: &str, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e) if e.is_falsification() => {
                self.checked += 1;
                self.failures.push(format!("{what}: {e}"));
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn finish(mut self, criterion: u32, summary: String, start: Instant) -> SuiteReport {
        let passed = self.failures.is_empty();
        self.failures.truncate(20);
        self.failures.append(&mut self.notes);
        SuiteReport {
            criterion,
            name: SUITES[criterion as usize - 1].1,
            passed,
            checked: self.checked,
            summary,
            notes: self.failures,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

/// Runs the requested suites in order. Criteria 11 and 12 share one sweep.
pub fn run_suites(ids: &[u32], cfg: &SearchConfig) -> Vec<(u32, Result<SuiteReport>)> {
    let mut shared: Option<Result<(SuiteReport, SuiteReport)>> = None;
    let mut out = Vec::new();
    for &id in ids {
        let r = match id {
            11 | 12 => {
                let both = shared.get_or_insert_with(|| kernel_sweep(cfg));
                match both {
                    Ok((a, b)) => Ok(if id == 11 { a.clone() } else { b.clone() }),
                    Err(e) => Err(e.clone()),
                }
            }
            _ => run_suite(id, cfg),
        };
        out.push((id, r));
    }
    out
}

pub fn run_suite(id: u32, cfg: &SearchConfig) -> Result<SuiteReport> {
    match id {
        1 => davenport_closed_form(cfg),
        2 => qt_empty(cfg),
        3 => qt_generator_powers(cfg),
        4 => qt_at_order(cfg),
        5 => minimal_intersection(cfg),
        6 => ag_cyclic(cfg),
        7 => ag_two_groups(cfg),
        8 => ag_z3z3(cfg),
        9 => weighted_identity(cfg),
        10 => weighted_plus_minus(cfg),
        11 => kernel_sweep(cfg).map(|p| p.0),
        12 => kernel_sweep(cfg).map(|p| p.1),
        13 => sun_bound(),
        14 => cover_size(cfg),
        15 => scalar_weights(),
        16 => sequence_properties(cfg),
        17 => lemke_kleitman(cfg),
        _ => Err(Error::precondition(format!("no suite {id}"))),
    }
}

/// Groups for the Davenport check: cyclic of order 2..=12, rank two of order
/// at most 32, and p-groups of order at most 32.
pub fn davenport_sweep_groups() -> Vec<FiniteAbelianGroup> {
    let mut set: BTreeSet<Vec<u64>> = (2..=12).map(|n| vec![n]).collect();
    for g in groups_up_to(32) {
        if g.rank() == 2 || (g.is_p_group() && !g.is_trivial()) {
            set.insert(g.factors().to_vec());
        }
    }
    set.into_iter()
        .map(|f| FiniteAbelianGroup::new(f).expect("valid"))
        .collect()
}

fn davenport_closed_form(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut t = Tally::new();
    let groups = davenport_sweep_groups();
    for g in &groups {
        let want = 1 + g.factors().iter().map(|n| n - 1).sum::<u64>() as usize;
        let got = davenport(g, cfg)?;
        t.check(
            got.value == InvariantValue::Exact(want) && got.witness.is_zero_sum_free(),
            || format!("D({g}) = {}, expected {want}", got.value),
        );
    }
    Ok(t.finish(1, format!("{} groups match 1 + Σ(n_i − 1)", groups.len()), start))
}

fn qt_empty(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut t = Tally::new();
    for n in 3..=6u64 {
        if let Some(q) = t.run(&format!("Q_{}(Z_{n})", 2 * n), q_t(&z(n), 2 * n as usize, cfg))? {
            t.check(q.is_empty(), || format!("Q_{}(Z_{n}) has {} members", 2 * n, q.len()));
        }
    }
    Ok(t.finish(2, "Q_2n(Z_n) is empty for n = 3..6".into(), start))
}

fn qt_generator_powers(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    for n in 3..=6u64 {
        let g = z(n);
        for t in n as usize + 1..2 * n as usize {
            let closed = closed_form_q_t(&g, t)?;
            if let Some(q) = tally.run(&format!("Q_{t}(Z_{n})"), q_t(&g, t, cfg))? {
                tally.check(same_members(&q, &closed), || {
                    format!("Q_{t}(Z_{n}) differs from the generator powers")
                });
            }
        }
    }
    Ok(tally.finish(
        3,
        "Q_t(Z_n) = {g^n : ord(g) = n} for n < t < 2n, n = 3..6".into(),
        start,
    ))
}

fn qt_at_order(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let mut sizes = Vec::new();
    for n in [4u64, 5, 6, 8] {
        let g = z(n);
        let closed = closed_form_q_t(&g, n as usize)?;
        if let Some(q) = tally.run(&format!("Q_{n}(Z_{n})"), q_t(&g, n as usize, cfg))? {
            tally.check(same_members(&q, &closed), || {
                format!("Q_{n}(Z_{n}) differs from the closed form")
            });
            if n == 6 {
                tally.check(q.len() == 12, || {
                    format!("Q_6(Z_6) has {} members, expected 12", q.len())
                });
            }
            sizes.push(format!("|Q_{n}(Z_{n})| = {}", q.len()));
        }
    }
    Ok(tally.finish(4, sizes.join(", "), start))
}

fn minimal_intersection(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let mut sizes = Vec::new();
    for n in 3..=8u64 {
        let g = z(n);
        let closed = closed_form_minimal_intersection(&g)?;
        let Some(x) = tally.run(&format!("intersection for Z_{n}"), minimal_sets_intersection(&g, cfg))? else {
            continue;
        };
        tally.check(same_members(&x, &closed), || {
            format!("intersection for Z_{n} differs from the closed form")
        });
        sizes.push(format!("Z_{n}: {}", x.len()));
        // Members outside the full powers a^{ord(a)} and generator chains g^k·(−kg).
        let extra: Vec<&GSequence> = x
            .members()
            .filter(|v| {
                let rl = run_lengths(v.indices());
                let full_power = rl.len() == 1 && g.order_idx(rl[0].0) as usize == rl[0].1;
                let chain = rl.iter().any(|&(a, k)| k + 1 == v.len() && g.order_idx(a) == n);
                !full_power && !chain
            })
            .collect();
        if n == 8 {
            let want = [
                GSequence::cyclic(&g, &[1, 1, 3, 3])?,
                GSequence::cyclic(&g, &[5, 5, 7, 7])?,
            ];
            tally.check(extra.len() == 2 && want.iter().all(|w| x.contains(w)), || {
                format!("Z_8 extra members {extra:?}")
            });
        } else if n >= 4 {
            tally.check(extra.is_empty(), || format!("Z_{n} has extra members {extra:?}"));
        }
    }
    Ok(tally.finish(5, sizes.join(", "), start))
}

fn ag_cyclic(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let mut verdicts = Vec::new();
    for n in 3..=7u64 {
        let g = z(n);
        let Some(r) = tally.run(&format!("A(Z_{n})"), a_g_minimality(&g, cfg))? else {
            continue;
        };
        tally.check(r.minimal == (n <= 5), || format!("A(Z_{n}) minimal = {}", r.minimal));
        if n == 6 {
            let v = cyclic_falsifier(&g)?;
            tally.check(r.falsifiers.contains(&v), || {
                format!("{v} is not among the Z_6 falsifiers")
            });
        }
        verdicts.push(format!("Z_{n}: {}", r.minimal));
    }
    Ok(tally.finish(6, verdicts.join(", "), start))
}

fn ag_two_groups(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let mut verdicts = Vec::new();
    let cases = [
        (vec![2u64], true),
        (vec![2, 2], true),
        (vec![2, 2, 2], true),
        (vec![2, 4], false),
        (vec![8], false),
    ];
    for (f, want) in cases {
        let g = FiniteAbelianGroup::new(f)?;
        let Some(r) = tally.run(&format!("A({g})"), a_g_minimality(&g, cfg))? else {
            continue;
        };
        tally.check(r.minimal == want, || format!("A({g}) minimal = {}", r.minimal));
        if g.rank() == 2 && !want {
            let v = non_cyclic_falsifier(&g)?;
            tally.check(r.falsifiers.contains(&v), || {
                format!("{v} is not among the {g} falsifiers")
            });
            tally.notes.push(format!("{g} falsifier {v}"));
        }
        verdicts.push(format!("{g}: {}", r.minimal));
    }
    Ok(tally.finish(7, verdicts.join(", "), start))
}

fn ag_z3z3(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let g = FiniteAbelianGroup::new(vec![3, 3])?;
    let r = a_g_minimality(&g, cfg)?;
    tally.checked = r.members;
    tally
        .notes
        .extend(r.falsifiers.iter().map(|v| format!("removable: {v}")));
    let summary = format!(
        "A(Z_3 + Z_3) minimal = {} ({} members, {} with witnesses)",
        r.minimal,
        r.members,
        r.witnesses.len()
    );
    Ok(tally.finish(8, summary, start))
}

fn weighted_identity(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let groups = groups_up_to(10);
    for g in &groups {
        let w = weighted_davenport(&WeightSet::identity(g), cfg)?;
        let d = davenport(g, cfg)?;
        tally.check(w == d, || format!("{g}: D_id = {}, D = {}", w.value, d.value));
    }
    Ok(tally.finish(9, format!("{} groups of order ≤ 10", groups.len()), start))
}

/// Whether some nonempty weighted selection of `terms` sums to zero, by
/// scanning every choice of "skip" or a map for each term.
fn has_weighted_zero_sum(psi: &WeightSet, terms: &[usize]) -> bool {
    let g = psi.codomain();
    let k = psi.len() + 1;
    (1..k.pow(terms.len() as u32)).any(|code| {
        let mut c = code;
        let mut sum = 0;
        for &a in terms {
            let choice = c % k;
            c /= k;
            if choice > 0 {
                sum = g.add_idx(sum, psi.homs()[choice - 1].apply_idx(a));
            }
        }
        sum == 0
    })
}

fn weighted_plus_minus(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let mut values = Vec::new();
    for n in 2..=12u64 {
        let g = z(n);
        let pm = WeightSet::plus_minus(&g);
        let r = weighted_davenport(&pm, cfg)?;
        let d = r.value.exact().expect("finite");
        // The witness must be free and every sequence of length d must not be.
        let witness_ok = r.witness.len() == d - 1 && !has_weighted_zero_sum(&pm, r.witness.indices());
        let all_hit = search::multisets(g.order(), d).all(|m| has_weighted_zero_sum(&pm, &m));
        tally.check(witness_ok && all_hit, || {
            format!("Z_{n}: D_± = {d} fails the selection scan")
        });
        values.push(format!("{n}:{d}"));
    }
    Ok(tally.finish(10, format!("D_±(Z_n) for n = 2..12: {}", values.join(" ")), start))
}

fn weight_sets(f: &FiniteAbelianGroup, g: &FiniteAbelianGroup, max_size: usize) -> Result<Vec<WeightSet>> {
    let homs = enumerate_homs(f, g, 1 << 20)?;
    let mut out = Vec::new();
    for i in 0..homs.len() {
        out.push(WeightSet::new(f, g, vec![homs[i].clone()])?);
        if max_size >= 2 {
            for j in i + 1..homs.len() {
                out.push(WeightSet::new(f, g, vec![homs[i].clone(), homs[j].clone()])?);
            }
        }
    }
    Ok(out)
}

/// Criteria 11 and 12: every `(F, G, Ψ)` with `|F|, |G| ≤ 8` and `|Ψ| ≤ 2`.
fn kernel_sweep(cfg: &SearchConfig) -> Result<(SuiteReport, SuiteReport)> {
    let start = Instant::now();
    let groups = groups_up_to(8);
    let mut bound = Tally::new();
    let mut cover = Tally::new();
    let mut tight = 0;
    for f in &groups {
        for g in &groups {
            let sets = weight_sets(f, g, 2)?;
            let results: Vec<Result<(Result<usize>, Result<bool>)>> = sets
                .par_iter()
                .map(|psi| {
                    let b = kernel_coset_bound(psi, cfg);
                    let c = match &b {
                        Ok(r) => kernels_to_cover_with_length(psi, &r.witness, r.d_psi - 1).map(|s| s.is_cover()),
                        Err(_) => weighted_davenport(psi, cfg).and_then(|d| {
                            let len = d.witness.len();
                            kernels_to_cover_with_length(psi, &d.witness, len).map(|s| s.is_cover())
                        }),
                    };
                    let b = b.map(|r| usize::from(r.d_psi == r.bound));
                    match (&b, &c) {
                        (Err(e), _) | (_, Err(e)) if !e.is_falsification() => Err(e.clone()),
                        _ => Ok((b, c)),
                    }
                })
                .collect();
            for r in results {
                let (b, c) = r?;
                if let Some(t) = bound.run(&format!("{f} -> {g}"), b)? {
                    bound.checked += 1;
                    tight += t;
                }
                if let Some(ok) = cover.run(&format!("{f} -> {g}"), c)? {
                    cover.check(ok, || format!("{f} -> {g}: kernel cosets do not cover"));
                }
            }
        }
    }
    let n = bound.checked;
    let secs = start.elapsed().as_secs_f64();
    let mut a = bound.finish(11, format!("{n} weight sets, bound attained in {tight}"), start);
    let mut b = cover.finish(12, format!("{} extremal witnesses turned into covers", n), start);
    a.seconds = secs;
    b.seconds = secs;
    Ok((a, b))
}

fn sun_bound() -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let groups: Vec<FiniteAbelianGroup> = groups_up_to(16).into_iter().filter(|g| !g.is_trivial()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut max_k = 0;
    for i in 0..1000 {
        let g = &groups[i % groups.len()];
        let s = random_irredundant_cover(g, &mut rng);
        max_k = max_k.max(s.len());
        if tally.run(&format!("cover of {g}"), sun_bound_verify(&s))?.is_some() {
            tally.checked += 1;
        }
    }
    Ok(tally.finish(
        13,
        format!(
            "1000 random irredundant covers over {} groups, largest size {max_k}",
            groups.len()
        ),
        start,
    ))
}

fn cover_size(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let mut inconclusive = 0;
    let small = groups_up_to(6);
    let codomains = groups_up_to(8);
    for f in &small {
        for g in &codomains {
            for psi in weight_sets(f, g, 2)? {
                if let Some(r) = tally.run(&format!("{f} -> {g}"), cover_size_bound_verify(&psi, cfg))? {
                    tally.checked += 1;
                    if r.verdict == Verdict::Inconclusive {
                        inconclusive += 1;
                    }
                }
            }
        }
    }
    if inconclusive > 0 {
        tally.notes.push(format!("{inconclusive} inconclusive"));
    }
    let n = tally.checked;
    Ok(tally.finish(14, format!("{n} weight sets, {inconclusive} inconclusive"), start))
}

fn scalar_weights() -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let r = scalar_weights_demo(IntWeightDemo::new(20, 20)?);
    tally.check(r.singletons.all_zero_sum_free, || {
        "a single term has a zero-sum weighting".into()
    });
    tally.check(
        r.pairs.all_valid && r.pairs.witnessed_within_bound == r.pairs.checked,
        || {
            format!(
                "{} of {} pairs witnessed",
                r.pairs.witnessed_within_bound, r.pairs.checked
            )
        },
    );
    tally.check(r.obstructions.iter().all(|o| o.blocked), || {
        "an obstruction failed".into()
    });
    let two = r.obstructions.iter().find(|o| o.n == 2).is_some_and(|o| o.blocked);
    tally.check(two, || "(4)·(−4) has an image in {2·(−2), 0}".into());
    Ok(tally.finish(
        15,
        format!(
            "{} singletons, {} pairs, {} obstructions",
            r.singletons.checked,
            r.pairs.checked,
            r.obstructions.len()
        ),
        start,
    ))
}

/// Random `T` and `(t, x)` meeting the hypotheses of [`distinct_length_pair`].
pub fn random_pair_input(rng: &mut impl rand::Rng) -> (IntSequence, usize, u64) {
    let k = rng.gen_range(1..=4);
    let mut big: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=7)).collect();
    big.sort_unstable();
    let rest: u64 = big.iter().sum();
    // Σ h ≤ 2ℓ − 3 with ℓ = s + k needs s ≥ rest − 2k + 3 (ones add 1 to
    // the sum and 2 to the bound).
    let min_ones = (rest + 3).saturating_sub(2 * k as u64);
    let s = min_ones + rng.gen_range(0..=4);
    let mut terms = vec![1; s as usize];
    terms.extend(&big);
    let t = IntSequence::new(terms).expect("positive terms");
    let idx = s as usize + rng.gen_range(0..k);
    let ht = t.terms()[idx];
    let x = rng.gen_range(ht..=t.sum() - ht);
    (t, idx, x)
}

/// Random `T` whose subset sums fill `[1, Σ]` with `Σ > v_1(T)`.
pub fn random_small_term_input(rng: &mut impl rand::Rng) -> IntSequence {
    loop {
        let ones = rng.gen_range(0..=4);
        let k = rng.gen_range(1..=5);
        let mut terms = vec![1; ones];
        terms.extend((0..k).map(|_| rng.gen_range(1..=9u64)));
        let t = IntSequence::new(terms).expect("positive terms");
        if t.sum() > t.ones() as u64 && t.subset_sums().iter().skip(1).all(|&r| r) {
            return t;
        }
    }
}

fn sequence_properties(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let mut counts = [0usize; 4];

    for n in 3..=10u64 {
        let g = z(n);
        let zsf = ZeroSumFree { group: &g };
        let mut seqs = Vec::new();
        search::visit(
            &zsf,
            &zsf.universe(),
            &zsf.root(),
            g.order(),
            &cfg.budget(),
            &mut |terms, _| {
                if 2 * terms.len() > g.order() {
                    seqs.push(terms.to_vec());
                }
            },
        )?;
        for s in seqs {
            let t = GSequence::from_indices(&g, s);
            if tally
                .run(&format!("{t} over Z_{n}"), savchev_chen_witness(&g, &t))?
                .is_some()
            {
                tally.checked += 1;
                counts[0] += 1;
            }
        }
    }

    for n in 3..=7u64 {
        let g = z(n);
        for len in [n as usize, n as usize + 1] {
            for m in search::multisets(g.order(), len) {
                if run_lengths(&m).len() < 3 {
                    continue;
                }
                let t = GSequence::from_indices(&g, m);
                if tally.run(&format!("{t} over Z_{n}"), graham_pair(&g, &t))?.is_some() {
                    tally.checked += 1;
                    counts[1] += 1;
                }
            }
        }
    }

    for r in 1..=4 {
        let g = FiniteAbelianGroup::elementary_two(r);
        for len in 0..=6 {
            for m in search::multisets(g.order(), len) {
                let t = GSequence::from_indices(&g, m);
                if tally
                    .run(&format!("{t} over {g}"), elementary_two_certificate(&g, &t))?
                    .is_some()
                {
                    tally.checked += 1;
                    counts[2] += 1;
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..10_000 {
        let (t, idx, x) = random_pair_input(&mut rng);
        if tally
            .run(&format!("{t:?}, x = {x}"), distinct_length_pair(&t, idx, x))?
            .is_some()
        {
            tally.checked += 1;
            counts[3] += 1;
        }
        let t = random_small_term_input(&mut rng);
        if let Some(i) = tally.run(&format!("{t:?}"), small_term_index(&t))? {
            let h = t.terms()[i];
            tally.check(1 < h && h <= t.ones() as u64 + 1, || format!("{t:?}: bad index {i}"));
        }
    }
    Ok(tally.finish(
        16,
        format!(
            "{} long zero-sum free sequences, {} Graham inputs, {} two-group certificates, {} integer pairs",
            counts[0], counts[1], counts[2], counts[3]
        ),
        start,
    ))
}

fn lemke_kleitman(cfg: &SearchConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    let mut verdicts = Vec::new();
    for n in [2u64, 3, 4, 5, 7] {
        let r = lemke_kleitman_check(n, cfg)?;
        tally.check(r.holds, || format!("n = {n} fails at {:?}", r.counterexample));
        verdicts.push(format!("{n}: {}", r.holds));
    }
    let six = lemke_kleitman_check(6, cfg)?;
    verdicts.push(format!("6: {} ({} sequences)", six.holds, six.sequences_checked));
    Ok(tally.finish(17, verdicts.join(", "), start))
}
