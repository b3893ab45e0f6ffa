//! Extraction of an induced bipartite subgraph whose A-side degrees lie in a
//! bounded window while A stays large relative to B.
//!
//! Contract, for a bipartite `G` with average degree `Γ > 16d >= 32`: an
//! induced `G*` with bipartition `(A*, B*)`, `|A*| >= Γ/(128d)·|B*|`, and
//! `4d <= deg_{G*}(a) <= 64d` for every `a ∈ A*`.
//!
//! No construction is prescribed, so this is a budgeted search. A-vertices are
//! bucketed by degree class `[2^j·4d, 2^j·8d)`. Each bucket is first trimmed
//! deterministically, dropping B-vertices of highest degree into the bucket
//! while some A-degree exceeds `64d`, and then attacked by seeded random
//! subsampling of B at rate `2^{1-j}`. Every candidate is audited exactly;
//! only an audited candidate is ever returned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use super::{check_bipartition, BipartiteWitness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoOptions {
    /// Random subsampling attempts per degree bucket.
    pub attempts_per_bucket: usize,
    pub seed: u64,
    /// Also search with the roles of the two sides exchanged.
    pub try_swapped: bool,
}

impl Default for KoOptions {
    fn default() -> Self {
        KoOptions {
            attempts_per_bucket: 32,
            seed: 0,
            try_swapped: true,
        }
    }
}

/// Exact check of the contract for a candidate `(A*, B*)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoAudit {
    pub gamma: BigRational,
    pub d: BigRational,
    pub a_size: usize,
    pub b_size: usize,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    /// `|A*|·128d >= Γ·|B*|`.
    pub ratio_ok: bool,
    /// `4d <= deg <= 64d` on all of A*.
    pub degrees_ok: bool,
    /// The sides are disjoint, in range, and A* is non-empty.
    pub well_formed: bool,
}

impl KoAudit {
    pub fn passed(&self) -> bool {
        self.well_formed && self.ratio_ok && self.degrees_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoWitness {
    /// `side_a` is A*, `side_b` is B*; the host is the input graph.
    pub witness: BipartiteWitness,
    pub audit: KoAudit,
    /// How the witness was found, e.g. `trim bucket 2`.
    pub route: String,
    /// Candidates audited, including the successful one.
    pub candidates: usize,
}

fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::InvalidArgument(format!("{x} is not a finite number")))
}

fn int(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Audits `(A*, B*)` in `G[A* ∪ B*]` against the contract with the given `Γ`, `d`.
pub fn audit_ko_witness(g: &Graph, a_star: &[usize], b_star: &[usize], gamma: &BigRational, d: &BigRational) -> KoAudit {
    let n = g.n();
    let mut member = vec![false; n];
    let mut well_formed = !a_star.is_empty();
    for &v in a_star.iter().chain(b_star) {
        if v >= n || member[v] {
            well_formed = false;
            continue;
        }
        member[v] = true;
    }
    let degrees: Vec<usize> = a_star
        .iter()
        .filter(|&&a| a < n)
        .map(|&a| g.neighbors(a).filter(|&w| member[w]).count())
        .collect();
    let lo = int(4) * d;
    let hi = int(64) * d;
    let degrees_ok = degrees.iter().all(|&k| {
        let k = int(k);
        lo <= k && k <= hi
    });
    let ratio_ok = int(a_star.len()) * int(128) * d >= gamma * int(b_star.len());
    KoAudit {
        gamma: gamma.clone(),
        d: d.clone(),
        a_size: a_star.len(),
        b_size: b_star.len(),
        min_degree: degrees.iter().copied().min(),
        max_degree: degrees.iter().copied().max(),
        ratio_ok,
        degrees_ok,
        well_formed,
    }
}

struct Search<'a> {
    g: &'a Graph,
    gamma: BigRational,
    d_exact: BigRational,
    d: f64,
    candidates: usize,
}

impl Search<'_> {
    fn audit(&mut self, a: &[usize], b: &[usize], route: String) -> Option<KoWitness> {
        self.candidates += 1;
        let audit = audit_ko_witness(self.g, a, b, &self.gamma, &self.d_exact);
        audit.passed().then(|| KoWitness {
            witness: BipartiteWitness::new(self.g.clone(), a.to_vec(), b.to_vec())
                .expect("audited sides are disjoint and in range"),
            audit,
            route,
            candidates: self.candidates,
        })
    }

    fn ratio_holds(&self, a: usize, b: usize) -> bool {
        int(a) * int(128) * &self.d_exact >= &self.gamma * int(b)
    }

    /// Trims B greedily inside one bucket.
    fn trim(&mut self, bucket: &[usize], route: String) -> Option<KoWitness> {
        let g = self.g;
        let n = g.n();
        let mut in_a = vec![false; n];
        bucket.iter().for_each(|&a| in_a[a] = true);
        let mut in_b = vec![false; n];
        for &a in bucket {
            g.neighbors(a).for_each(|w| in_b[w] = true);
        }
        loop {
            // A-vertices fall out once their degree drops below 4d.
            let deg_a = |v: usize, in_b: &[bool]| g.neighbors(v).filter(|&w| in_b[w]).count();
            for (v, keep) in in_a.iter_mut().enumerate() {
                *keep = *keep && deg_a(v, &in_b) as f64 >= 4.0 * self.d;
            }
            let deg_b: Vec<usize> = (0..n)
                .map(|v| if in_b[v] { g.neighbors(v).filter(|&w| in_a[w]).count() } else { 0 })
                .collect();
            for v in 0..n {
                if in_b[v] && deg_b[v] == 0 {
                    in_b[v] = false;
                }
            }
            let a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
            let b: Vec<usize> = (0..n).filter(|&v| in_b[v]).collect();
            if a.is_empty() {
                return None;
            }
            let too_high = a.iter().any(|&v| (deg_a(v, &in_b) as f64) > 64.0 * self.d);
            if !too_high && self.ratio_holds(a.len(), b.len()) {
                if let Some(w) = self.audit(&a, &b, route.clone()) {
                    return Some(w);
                }
            }
            // Highest degree into A when degrees are too large, lowest otherwise.
            let drop = if too_high {
                b.iter().copied().max_by_key(|&v| (deg_b[v], std::cmp::Reverse(v)))
            } else {
                b.iter().copied().min_by_key(|&v| (deg_b[v], v))
            };
            in_b[drop?] = false;
        }
    }

    fn sample(&mut self, bucket: &[usize], rate: f64, seed: u64, stream: u64, route: String) -> Option<KoWitness> {
        let g = self.g;
        let n = g.n();
        let mut rng = rng::stream(seed, stream);
        let mut candidates_b = vec![false; n];
        for &a in bucket {
            g.neighbors(a).for_each(|w| candidates_b[w] = true);
        }
        let mut in_b = vec![false; n];
        for v in 0..n {
            if candidates_b[v] && rng.random_bool(rate) {
                in_b[v] = true;
            }
        }
        let a: Vec<usize> = bucket
            .iter()
            .copied()
            .filter(|&v| {
                let k = g.neighbors(v).filter(|&w| in_b[w]).count() as f64;
                4.0 * self.d <= k && k <= 64.0 * self.d
            })
            .collect();
        if a.is_empty() {
            return None;
        }
        let mut keep_b = vec![false; n];
        for &v in &a {
            g.neighbors(v).filter(|&w| in_b[w]).for_each(|w| keep_b[w] = true);
        }
        let b: Vec<usize> = (0..n).filter(|&v| keep_b[v]).collect();
        self.audit(&a, &b, route)
    }
}

/// Searches for the bounded-degree subgraph; `a` and `b` must partition the
/// vertices of the bipartite graph `g`.
pub fn kuhn_osthus_extract(g: &Graph, a: &[usize], b: &[usize], d: f64, options: &KoOptions) -> Result<KoWitness> {
    check_bipartition(g, a, b)?;
    let d_exact = rational_from_f64(d)?;
    let gamma = g.average_degree()?;
    if d_exact < int(2) {
        return Err(Error::Precondition(format!("d = {d} must be at least 2")));
    }
    if gamma <= int(16) * &d_exact {
        return Err(Error::Precondition(format!(
            "average degree {gamma} must exceed 16d = {}",
            int(16) * &d_exact
        )));
    }
    let mut search = Search {
        g,
        gamma,
        d_exact,
        d,
        candidates: 0,
    };
    let mut orientations = vec![("A", a)];
    if options.try_swapped {
        orientations.push(("B", b));
    }
    for (o, (label, side)) in orientations.into_iter().enumerate() {
        let max_deg = side.iter().map(|&v| g.degree(v)).max().unwrap_or(0) as f64;
        let mut j = 0u32;
        while 4.0 * d * 2f64.powi(j as i32) <= max_deg {
            let lo = 4.0 * d * 2f64.powi(j as i32);
            let hi = 2.0 * lo;
            let bucket: Vec<usize> = side
                .iter()
                .copied()
                .filter(|&v| (lo..hi).contains(&(g.degree(v) as f64)))
                .collect();
            if !bucket.is_empty() {
                if let Some(w) = search.trim(&bucket, format!("side {label}, trim bucket {j}")) {
                    return Ok(w);
                }
                let rate = 2f64.powi(1 - j as i32).min(1.0);
                for t in 0..options.attempts_per_bucket {
                    let stream = ((o as u64) << 48) | (u64::from(j) << 32) | t as u64;
                    let route = format!("side {label}, sample bucket {j} attempt {t}");
                    if let Some(w) = search.sample(&bucket, rate, options.seed, stream, route) {
                        return Ok(w);
                    }
                }
            }
            j += 1;
        }
    }
    Err(Error::ExtractionFailed(format!(
        "no audited witness after {} candidates (Γ = {:.4}, d = {d})",
        search.candidates,
        search.gamma.to_f64().unwrap_or(f64::NAN)
    )))
}

impl KoAudit {
    /// `Γ/(128d)`, the required ratio `|A*|/|B*|`.
    pub fn required_ratio(&self) -> BigRational {
        if self.d.is_zero() {
            return BigRational::zero();
        }
        &self.gamma / (int(128) * &self.d)
    }
}
