//! Probability that a uniformly random orientation is acyclic.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::bounds::{acyclic_orientation_bound, acyclic_orientation_bound_exact};
use super::report::ExperimentReport;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{check_mask_size, mask_is_acyclic, Graph};
use crate::orientation::random_orientation_with;
use crate::rng;

/// Ways of counting acyclic orientations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AcyclicRoute {
    /// `n!` for complete graphs: acyclic tournaments are linear orders.
    ClosedForm,
    /// All `2^|E|` orientations.
    Enumeration,
    /// `a(S) = Σ_{∅≠T⊆S independent} (-1)^{|T|+1} a(S∖T)`, peeling off the
    /// set of sources.
    SubsetRecursion,
}

impl AcyclicRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            AcyclicRoute::ClosedForm => "closed-form",
            AcyclicRoute::Enumeration => "enumeration",
            AcyclicRoute::SubsetRecursion => "subset-recursion",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicProbability {
    pub acyclic_orientations: BigUint,
    pub edges: usize,
    /// `acyclic_orientations / 2^|E|`.
    pub probability: BigRational,
    /// Every route that fit under the caps, with its count.
    pub routes: Vec<(AcyclicRoute, BigUint)>,
}

impl AcyclicProbability {
    pub fn routes_agree(&self) -> bool {
        self.routes.iter().all(|(_, c)| *c == self.acyclic_orientations)
    }
}

fn is_complete(g: &Graph) -> bool {
    let n = g.n();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

fn count_by_enumeration(g: &Graph) -> Result<BigUint> {
    let n = g.n();
    check_mask_size(n)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let count: u64 = (0..1u64 << edges.len())
        .into_par_iter()
        .map_init(
            || vec![0u64; n],
            |out, bits| {
                out.iter_mut().for_each(|m| *m = 0);
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        out[v] |= 1 << u;
                    } else {
                        out[u] |= 1 << v;
                    }
                }
                u64::from(mask_is_acyclic(out, all))
            },
        )
        .sum();
    Ok(count.into())
}

fn count_by_subset_recursion(g: &Graph) -> Result<BigUint> {
    let n = g.n();
    let adj = g.adjacency_masks()?;
    let size = 1usize << n;
    let mut independent = vec![true; size];
    for t in 1..size {
        let low = t.trailing_zeros() as usize;
        let rest = t & (t - 1);
        independent[t] = independent[rest] && adj[low] & rest as u64 == 0;
    }
    let mut a = vec![0i128; size];
    a[0] = 1;
    for s in 1..size {
        let mut total = 0i128;
        let mut t = s;
        while t != 0 {
            if independent[t] {
                let term = a[s & !t];
                if t.count_ones() % 2 == 1 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            t = (t - 1) & s;
        }
        a[s] = total;
    }
    let count = a[size - 1];
    Ok(BigUint::try_from(count).expect("acyclic orientation counts are non-negative"))
}

/// Exact fraction of acyclic orientations, by every route the caps allow;
/// complete graphs always use the closed form.
pub fn exact_acyclic_probability(g: &Graph, caps: &Caps) -> Result<AcyclicProbability> {
    let n = g.n();
    let m = g.edge_count();
    let mut routes = Vec::new();
    if is_complete(g) {
        let factorial = (1..=n as u64).fold(BigUint::one(), |f, i| f * i);
        routes.push((AcyclicRoute::ClosedForm, factorial));
    }
    if m <= caps.orientation_edges && m < 64 && n <= 64 {
        routes.push((AcyclicRoute::Enumeration, count_by_enumeration(g)?));
    }
    if n <= caps.acyclic_dp_vertices && n <= 25 {
        routes.push((AcyclicRoute::SubsetRecursion, count_by_subset_recursion(g)?));
    }
    let Some((_, count)) = routes.first().cloned() else {
        return Err(Error::cap_with_hint(
            "edges for orientation enumeration",
            caps.orientation_edges as u128,
            m as u128,
            "; raise orientation_edges or acyclic_dp_vertices, or use `experiment acyclic` for a Monte Carlo estimate",
        ));
    };
    let probability = BigRational::new(count.clone().into(), BigInt::one() << m);
    Ok(AcyclicProbability {
        acyclic_orientations: count,
        edges: m,
        probability,
        routes,
    })
}

/// Result of [`mc_acyclic_probability`].
#[derive(Debug, Clone, PartialEq)]
pub struct AcyclicEstimate {
    pub trials: usize,
    pub acyclic: usize,
    pub estimate: f64,
    pub std_error: f64,
    pub bound: f64,
    pub report: ExperimentReport,
}

/// Monte Carlo frequency of acyclic orientations; trial `i` orients with
/// stream `i` of `seed`.
pub fn mc_acyclic_probability(g: &Graph, trials: usize, seed: u64) -> Result<AcyclicEstimate> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let outcomes = rng::par_trials(seed, trials, |_, rng| random_orientation_with(g, rng).is_acyclic());
    let acyclic = outcomes.iter().filter(|&&a| a).count();
    let estimate = acyclic as f64 / trials as f64;
    let std_error = (estimate * (1.0 - estimate) / trials as f64).sqrt();
    let gamma = g.average_degree()?;
    let bound = acyclic_orientation_bound(&gamma, g.n() as u64);
    let digest = Sha256::digest(outcomes.iter().map(|&a| u8::from(a)).collect::<Vec<u8>>());

    let mut report = ExperimentReport::new("acyclic", Some(seed), trials);
    report
        .param("vertices", g.n())
        .param("edges", g.edge_count())
        .param("average_degree", gamma.to_string());
    report
        .stat("acyclic", acyclic)
        .stat("estimate", estimate)
        .stat("std_error", std_error)
        .stat("bound", bound)
        .stat("bound_exact", acyclic_orientation_bound_exact(g)?.to_string())
        .stat("bound_vacuous", bound >= 1.0)
        .stat("estimate_within_bound", estimate <= bound)
        .stat("outcomes_sha256", hex(&digest));
    Ok(AcyclicEstimate {
        trials,
        acyclic,
        estimate,
        std_error,
        bound,
        report,
    })
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// `value` as a float, for display next to exact quantities.
pub fn approx(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
