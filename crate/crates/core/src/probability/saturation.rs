//! Saturated and truly saturated vertices of a bipartite graph `(A, B)`.
//!
//! Lists are drawn from `R = {1, ..., r²}`. A vertex `a ∈ A` is saturated
//! when every `⌊r²/2⌋`-subset `P` of `R` contains the lists of at least
//! `kr²/2` neighbours of `a`; it is truly saturated under a colouring `β` of
//! `B` when every colour of its own list appears on at least `k` neighbours.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use rand::Rng;
use serde_json::Value;

use super::report::ExperimentReport;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::extraction::check_bipartition;
use crate::graph::Graph;
use crate::rng;

/// Lists of the B-vertices, keyed by vertex.
pub type SideLists = BTreeMap<usize, BTreeSet<u32>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SaturationParams {
    pub r: usize,
    pub k: usize,
}

impl SaturationParams {
    pub fn new(r: usize, k: usize) -> Result<SaturationParams> {
        if r == 0 || r > 8 {
            return Err(Error::InvalidArgument(format!("r = {r} must lie in 1..=8")));
        }
        Ok(SaturationParams { r, k })
    }

    /// `|R| = r²`.
    pub fn universe_size(&self) -> usize {
        self.r * self.r
    }

    /// `⌊r²/2⌋`, the size of the members of the half family.
    pub fn half_size(&self) -> usize {
        self.universe_size() / 2
    }

    pub fn half_family_size(&self) -> BigUint {
        binomial(BigUint::from(self.universe_size()), BigUint::from(self.half_size()))
    }

    /// `τ = kr²/2`.
    pub fn threshold(&self) -> BigRational {
        BigRational::new(BigInt::from(self.k * self.universe_size()), BigInt::from(2))
    }

    /// `ℓ = ⌊kr²/2 − 1/2⌋`.
    pub fn ell(&self) -> i64 {
        (self.k as i64 * self.universe_size() as i64 - 1).div_euclid(2)
    }

    /// Whether `count >= τ`, exactly.
    fn meets_threshold(&self, count: usize) -> bool {
        2 * count >= self.k * self.universe_size()
    }

    fn list_mask(&self, v: usize, list: &BTreeSet<u32>) -> Result<u64> {
        if list.len() != self.r {
            return Err(Error::InvalidArgument(format!(
                "list of vertex {v} has {} colours, expected {}",
                list.len(),
                self.r
            )));
        }
        list.iter().try_fold(0u64, |m, &c| {
            if c == 0 || c as usize > self.universe_size() {
                Err(Error::InvalidArgument(format!(
                    "colour {c} of vertex {v} is outside 1..={}",
                    self.universe_size()
                )))
            } else {
                Ok(m | 1 << (c - 1))
            }
        })
    }

    /// Members of the half family as bitmasks over `R`, in increasing order.
    fn half_family(&self, caps: &Caps) -> Result<Vec<u64>> {
        if self.r > caps.saturation_max_r {
            return Err(Error::cap("list size r for the half family", caps.saturation_max_r as u128, self.r as u128));
        }
        let (n, h) = (self.universe_size(), self.half_size());
        let mut out = Vec::new();
        if h == 0 {
            out.push(0);
            return Ok(out);
        }
        // Gosper's hack over h-subsets of n bits.
        let mut m: u64 = (1 << h) - 1;
        while m < 1 << n {
            out.push(m);
            let c = m & m.wrapping_neg();
            let r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
        Ok(out)
    }
}

/// A uniform `r`-subset of `{1, ..., universe}` by a partial Fisher–Yates shuffle.
pub(crate) fn sample_list<R: Rng>(rng: &mut R, r: usize, universe: usize) -> BTreeSet<u32> {
    let mut items: Vec<u32> = (1..=universe as u32).collect();
    for i in 0..r {
        let j = rng.random_range(i..items.len());
        items.swap(i, j);
    }
    items[..r].iter().copied().collect()
}

fn neighbour_masks(g: &Graph, a: usize, lists: &SideLists, params: &SaturationParams) -> Result<Vec<u64>> {
    g.neighbors(a)
        .map(|b| {
            let list = lists
                .get(&b)
                .ok_or_else(|| Error::InvalidArgument(format!("neighbour {b} of {a} has no list")))?;
            params.list_mask(b, list)
        })
        .collect()
}

fn saturated_with(masks: &[u64], family: &[u64], params: &SaturationParams) -> bool {
    family
        .iter()
        .all(|&p| params.meets_threshold(masks.iter().filter(|&&l| l & !p == 0).count()))
}

pub fn is_saturated(g: &Graph, a: usize, lists: &SideLists, params: &SaturationParams, caps: &Caps) -> Result<bool> {
    if a >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: a, n: g.n() });
    }
    let family = params.half_family(caps)?;
    Ok(saturated_with(&neighbour_masks(g, a, lists, params)?, &family, params))
}

pub fn is_truly_saturated(g: &Graph, a: usize, list: &BTreeSet<u32>, colouring: &BTreeMap<usize, u32>, k: usize) -> Result<bool> {
    if a >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: a, n: g.n() });
    }
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for b in g.neighbors(a) {
        let c = colouring
            .get(&b)
            .ok_or_else(|| Error::InvalidArgument(format!("neighbour {b} of {a} is uncoloured")))?;
        *counts.entry(*c).or_default() += 1;
    }
    Ok(list.iter().all(|c| counts.get(c).copied().unwrap_or(0) >= k))
}

fn sides_sorted(g: &Graph, a: &[usize], b: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    check_bipartition(g, a, b)?;
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    Ok((a, b))
}

fn describe(report: &mut ExperimentReport, g: &Graph, a: usize, b: usize, params: &SaturationParams) {
    report
        .param("vertices", g.n())
        .param("edges", g.edge_count())
        .param("side_a", a)
        .param("side_b", b)
        .param("r", params.r)
        .param("k", params.k)
        .param("universe", params.universe_size())
        .param("half_family", params.half_family_size().to_string())
        .param("threshold", params.threshold().to_string())
        .param("ell", params.ell());
}

#[derive(Debug, Clone, PartialEq)]
pub struct SaturationOutcome {
    /// Saturated A-vertices per trial.
    pub saturated: Vec<usize>,
    pub report: ExperimentReport,
}

/// Per trial, draws every B-list uniformly from the `r`-subsets of `R` (or
/// uses `injected`) and counts the saturated A-vertices.
#[allow(clippy::too_many_arguments)]
pub fn saturation_experiment(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    params: &SaturationParams,
    trials: usize,
    seed: u64,
    injected: Option<&SideLists>,
    caps: &Caps,
) -> Result<SaturationOutcome> {
    let (a, b) = sides_sorted(g, a, b)?;
    if a.is_empty() {
        return Err(Error::InvalidArgument("side A is empty".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let family = params.half_family(caps)?;
    let per_trial = rng::par_trials(seed, trials, |_, rng| -> Result<usize> {
        let lists = match injected {
            Some(l) => l.clone(),
            None => b
                .iter()
                .map(|&v| (v, sample_list(rng, params.r, params.universe_size())))
                .collect(),
        };
        let mut saturated = 0;
        for &v in &a {
            if saturated_with(&neighbour_masks(g, v, &lists, params)?, &family, params) {
                saturated += 1;
            }
        }
        Ok(saturated)
    });
    let saturated = per_trial.into_iter().collect::<Result<Vec<usize>>>()?;

    let mut report = ExperimentReport::new("saturation", (injected.is_none()).then_some(seed), trials);
    describe(&mut report, g, a.len(), b.len(), params);
    report.param("lists", if injected.is_some() { "injected" } else { "sampled" });
    let fraction = |s: usize| s as f64 / a.len() as f64;
    for (t, &s) in saturated.iter().enumerate() {
        report.record([
            ("trial", Value::from(t)),
            ("saturated", s.into()),
            ("fraction", fraction(s).into()),
        ]);
    }
    let at_least_half = saturated.iter().filter(|&&s| 2 * s >= a.len()).count();
    let mean = saturated.iter().map(|&s| fraction(s)).sum::<f64>() / trials as f64;
    report
        .stat("mean_fraction", mean)
        .stat("min_fraction", fraction(*saturated.iter().min().expect("trials >= 1")))
        .stat("max_fraction", fraction(*saturated.iter().max().expect("trials >= 1")))
        .stat("trials_at_least_half", at_least_half)
        .stat("frequency_at_least_half", at_least_half as f64 / trials as f64);
    Ok(SaturationOutcome { saturated, report })
}

/// How colourings of B are visited for one list assignment of A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColouringMode {
    Exhaustive,
    Sampled { colourings: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrulySaturatedOutcome {
    /// `min_β X_β` per trial.
    pub min_counts: Vec<usize>,
    pub report: ExperimentReport,
}

struct TrialResult {
    min_count: usize,
    colourings: u128,
    lists_a: SideLists,
    worst: BTreeMap<usize, u32>,
}

fn count_truly_saturated(g: &Graph, a: &[usize], lists_a: &SideLists, beta: &[u32], k: usize) -> usize {
    a.iter()
        .filter(|&&v| {
            let list = &lists_a[&v];
            list.iter().all(|&c| g.neighbors(v).filter(|&w| beta[w] == c).count() >= k)
        })
        .count()
}

/// Per trial, samples `L_A` and measures the least number of truly saturated
/// A-vertices over the colourings `β` of B drawn from the fixed `lists_b`.
#[allow(clippy::too_many_arguments)]
pub fn truly_saturated_experiment(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    params: &SaturationParams,
    lists_b: &SideLists,
    mode: ColouringMode,
    trials: usize,
    seed: u64,
    caps: &Caps,
) -> Result<TrulySaturatedOutcome> {
    let (a, b) = sides_sorted(g, a, b)?;
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let options: Vec<Vec<u32>> = b
        .iter()
        .map(|v| {
            let list = lists_b
                .get(v)
                .ok_or_else(|| Error::InvalidArgument(format!("B-vertex {v} has no list")))?;
            params.list_mask(*v, list)?;
            Ok(list.iter().copied().collect())
        })
        .collect::<Result<_>>()?;
    if mode == ColouringMode::Exhaustive {
        let total = options
            .iter()
            .try_fold(1u128, |acc, o| acc.checked_mul(o.len() as u128))
            .unwrap_or(u128::MAX);
        if total > caps.colouring_enumeration {
            return Err(Error::cap_with_hint(
                "colourings of B to enumerate",
                caps.colouring_enumeration,
                total,
                "; use sampled mode (--mode sampled --colourings N)",
            ));
        }
    }
    let results = rng::par_trials(seed, trials, |_, rng| {
        let lists_a: SideLists = a
            .iter()
            .map(|&v| (v, sample_list(rng, params.r, params.universe_size())))
            .collect();
        let mut beta = vec![0u32; g.n()];
        let mut best: Option<(usize, Vec<u32>)> = None;
        let mut visit = |beta: &[u32]| {
            let x = count_truly_saturated(g, &a, &lists_a, beta, params.k);
            if best.as_ref().is_none_or(|(m, _)| x < *m) {
                best = Some((x, beta.to_vec()));
            }
        };
        let mut colourings = 0u128;
        match mode {
            ColouringMode::Exhaustive => {
                let mut digits = vec![0usize; b.len()];
                loop {
                    for (i, &v) in b.iter().enumerate() {
                        beta[v] = options[i][digits[i]];
                    }
                    visit(&beta);
                    colourings += 1;
                    let mut pos = b.len();
                    let done = loop {
                        if pos == 0 {
                            break true;
                        }
                        pos -= 1;
                        digits[pos] += 1;
                        if digits[pos] < options[pos].len() {
                            break false;
                        }
                        digits[pos] = 0;
                    };
                    if done {
                        break;
                    }
                }
            }
            ColouringMode::Sampled { colourings: count } => {
                for _ in 0..count.max(1) {
                    for (i, &v) in b.iter().enumerate() {
                        beta[v] = options[i][rng.random_range(0..options[i].len())];
                    }
                    visit(&beta);
                    colourings += 1;
                }
            }
        }
        let (min_count, worst) = best.expect("at least one colouring is visited");
        TrialResult {
            min_count,
            colourings,
            lists_a,
            worst: b.iter().map(|&v| (v, worst[v])).collect(),
        }
    });

    // Recount the worst colouring of every trial through the per-vertex
    // predicate; the two counts must agree.
    for t in &results {
        let recount = a
            .iter()
            .map(|&v| is_truly_saturated(g, v, &t.lists_a[&v], &t.worst, params.k))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .filter(|&x| x)
            .count();
        assert_eq!(recount, t.min_count, "X_β disagrees with the per-vertex predicate");
    }

    let target = BigRational::new(BigInt::from(a.len()), BigInt::from(1u64) << (params.r + 4));
    let attained = |m: usize| BigRational::from_integer(BigInt::from(m)) >= target;
    let mut report = ExperimentReport::new("truly-saturated", Some(seed), trials);
    describe(&mut report, g, a.len(), b.len(), params);
    match mode {
        ColouringMode::Exhaustive => report.param("mode", "exhaustive"),
        ColouringMode::Sampled { colourings } => report.param("mode", "sampled").param("colourings", colourings),
    };
    for (i, t) in results.iter().enumerate() {
        report.record([
            ("trial", Value::from(i)),
            ("min_x_beta", t.min_count.into()),
            ("colourings", t.colourings.to_string().into()),
            ("attained", attained(t.min_count).into()),
            ("x_beta_rechecked", true.into()),
        ]);
    }
    let min_counts: Vec<usize> = results.iter().map(|t| t.min_count).collect();
    report
        .stat("target", target.to_string())
        .stat("trials_attained", min_counts.iter().filter(|&&m| attained(m)).count())
        .stat("min_x_beta", *min_counts.iter().min().expect("trials >= 1"))
        .stat("max_x_beta", *min_counts.iter().max().expect("trials >= 1"));
    Ok(TrulySaturatedOutcome { min_counts, report })
}
