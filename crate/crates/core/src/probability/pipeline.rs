//! The chain max cut → bounded-degree extraction → random lists → witness
//! orientation, run end to end with every checkable step audited.
//!
//! The degree hypotheses of the chain are astronomically large, so at any
//! feasible size they fail. Relaxed mode runs the stages anyway, recording
//! which hypotheses held; a certificate it produces is still a valid lower
//! bound for `G`, because it concerns a subgraph of `G`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::Value;

use super::report::ExperimentReport;
use super::saturation::sample_list;
use super::witness::{witness_orientation_search, SearchMode};
use crate::caps::Caps;
use crate::certificate::LowerBoundCertificate;
use crate::error::{Error, Result};
use crate::extraction::{kuhn_osthus_extract, max_cut_bipartite, BipartiteWitness, KoOptions};
use crate::graph::Graph;
use crate::lists::ListAssignment;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineOptions {
    pub r: usize,
    pub relaxed: bool,
    pub seed: u64,
    /// Orientation samples when the working graph is too large to enumerate.
    pub witness_budget: usize,
}

impl PipelineOptions {
    pub fn new(r: usize, relaxed: bool, seed: u64) -> PipelineOptions {
        PipelineOptions {
            r,
            relaxed,
            seed,
            witness_budget: 256,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineOutcome {
    pub report: ExperimentReport,
    pub certificate: Option<LowerBoundCertificate>,
    /// Host vertex of each vertex of the certificate graph.
    pub index_map: Vec<usize>,
    pub hypotheses_hold: bool,
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn rational(x: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn pipeline_run(g: &Graph, options: &PipelineOptions, caps: &Caps) -> Result<PipelineOutcome> {
    let r = options.r;
    if r == 0 || r > 8 {
        return Err(Error::InvalidArgument(format!("r = {r} must lie in 1..=8")));
    }
    if g.n() == 0 {
        return Err(Error::InvalidArgument("the graph has no vertices".into()));
    }
    let rb = BigUint::from(r);
    let mut report = ExperimentReport::new("pipeline", Some(options.seed), 1);
    report
        .param("vertices", g.n())
        .param("edges", g.edge_count())
        .param("r", r)
        .param("relaxed", options.relaxed)
        .param("witness_budget", options.witness_budget);

    let ad = g.average_degree()?;
    let needed = rational(num_traits::pow(rb.clone(), 7) * pow2(3 * r + 17));
    let ad_ok = ad >= needed;
    if !ad_ok && !options.relaxed {
        return Err(Error::Precondition(format!(
            "Ad(G) = {ad} < r^7·2^(3r+17) = {needed}; rerun in relaxed mode to measure the stages anyway"
        )));
    }
    report
        .stat("h0_average_degree", ad.to_string())
        .stat("h0_required", needed.to_string())
        .stat("h0_holds", ad_ok);

    // Stage 1: max cut.
    let cut = max_cut_bipartite(g, caps)?;
    let cross = cut.cross_edges();
    let cut_graph = Graph::from_edges(g.n(), cross.iter().copied())?;
    let gamma = cut_graph.average_degree()?;
    let half_ok = 2 * cross.len() >= g.edge_count();
    let cut_needed = rational(num_traits::pow(rb.clone(), 7) * pow2(3 * r + 16));
    report
        .stat("s1_cut_edges", cross.len())
        .stat("s1_cut_average_degree", gamma.to_string())
        .stat("s1_half_edges_kept", half_ok)
        .stat("h1_cut_degree_holds", gamma >= cut_needed);

    // Stage 2: bounded-degree extraction with d = r⁶·2^{2r+6}.
    let d = num_traits::pow(rb.clone(), 6) * pow2(2 * r + 6);
    let sixteen_d = rational(&d * 16u32);
    let mut working: BipartiteWitness = cut.clone();
    let ko_status = if gamma <= sixteen_d {
        if !options.relaxed {
            return Err(Error::Precondition(format!("cut average degree {gamma} <= 16d = {sixteen_d}")));
        }
        "skipped: cut average degree <= 16d".to_string()
    } else {
        let d_f = d.to_f64().unwrap_or(f64::INFINITY);
        let ko_options = KoOptions {
            seed: options.seed,
            ..KoOptions::default()
        };
        match kuhn_osthus_extract(&cut_graph, &cut.side_a, &cut.side_b, d_f, &ko_options) {
            Ok(w) => {
                working = BipartiteWitness::new(g.clone(), w.witness.side_a, w.witness.side_b)?;
                format!("ok: {}", w.route)
            }
            Err(e @ Error::ExtractionFailed(_)) if options.relaxed => format!("failed: {e}"),
            Err(e) => return Err(e),
        }
    };
    report.stat("s2_extraction", ko_status).stat("s2_d", d.to_string());

    // Degree and size hypotheses of the orientation step on the working graph.
    let sub = working.subgraph();
    let (size_a, size_b) = working.sizes();
    let min_a_degree = (0..size_a).map(|v| sub.graph.degree(v)).min().unwrap_or(0);
    let degree_needed = num_traits::pow(rb.clone(), 6) * pow2(2 * r + 8);
    let degree_ok = size_a > 0 && BigUint::from(min_a_degree) >= degree_needed;
    let ratio_ok = BigUint::from(size_a) >= &rb * pow2(r + 3) * BigUint::from(size_b);
    report
        .stat("s3_side_a", size_a)
        .stat("s3_side_b", size_b)
        .stat("s3_min_a_degree", min_a_degree)
        .stat("h3_degree_holds", degree_ok)
        .stat("h3_ratio_holds", ratio_ok);

    // Stage 3: lists from {1, ..., r²}, B first, then A.
    let universe = r * r;
    let mut list_rng = rng::stream(options.seed, u64::MAX);
    let mut lists = vec![Default::default(); sub.graph.n()];
    let (a_lists, b_lists) = lists.split_at_mut(size_a);
    for slot in b_lists.iter_mut().chain(a_lists.iter_mut()) {
        *slot = sample_list(&mut list_rng, r, universe);
    }
    let lists = ListAssignment::new(lists)?;

    // Stage 4: witness orientation.
    let mode = if sub.graph.edge_count() <= caps.orientation_edges {
        SearchMode::Exhaustive
    } else {
        SearchMode::Sampled {
            budget: options.witness_budget,
        }
    };
    let outcome = witness_orientation_search(&sub.graph, &lists, mode, options.seed, caps)?;
    let certificate = outcome.certificate().cloned();
    let hypotheses_hold = ad_ok && degree_ok && ratio_ok;
    report
        .stat(
            "s4_mode",
            match mode {
                SearchMode::Exhaustive => "exhaustive",
                SearchMode::Sampled { .. } => "sampled",
            },
        )
        .stat("s4_witness", outcome.status())
        .stat("hypotheses_hold", hypotheses_hold)
        .stat("conclusion_claimed", hypotheses_hold && certificate.is_some())
        .stat(
            "certified_lower_bound",
            certificate.as_ref().map_or(Value::Null, |c| c.claimed_bound.into()),
        );
    report.record([
        ("index_map", Value::from(sub.index_map.clone())),
        ("lists", Value::from(crate::format::write_lists(&lists))),
    ]);
    Ok(PipelineOutcome {
        report,
        certificate,
        index_map: sub.index_map,
        hypotheses_hold,
    })
}
