//! Searching for an orientation that defeats a given list assignment.

use crate::caps::Caps;
use crate::certificate::{verify_certificate, LowerBoundCertificate};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::listcolour::exists_l_dicolouring;
use crate::lists::ListAssignment;
use crate::orientation::{enumerate_orientations, random_orientation_with};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// All `2^|E|` orientations, in [`enumerate_orientations`] order.
    Exhaustive,
    /// Up to `budget` seeded random orientations; sample `i` uses stream `i`.
    Sampled { budget: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// A verified certificate; `tried` counts the orientations examined.
    Found { certificate: LowerBoundCertificate, tried: u64 },
    /// Exhaustive mode only: every orientation has an L-dicolouring.
    NoneExists { tried: u64 },
    /// Sampled mode ran out of budget. Says nothing about existence.
    NotFoundWithinBudget { tried: u64 },
}

impl WitnessOutcome {
    pub fn certificate(&self) -> Option<&LowerBoundCertificate> {
        match self {
            WitnessOutcome::Found { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            WitnessOutcome::Found { .. } => "found",
            WitnessOutcome::NoneExists { .. } => "none-exists",
            WitnessOutcome::NotFoundWithinBudget { .. } => "not-found-within-budget",
        }
    }
}

fn certify(g: &Graph, d: Digraph, lists: &ListAssignment, caps: &Caps) -> Result<Option<LowerBoundCertificate>> {
    if exists_l_dicolouring(&d, lists, caps)?.is_some() {
        return Ok(None);
    }
    let cert = LowerBoundCertificate::new(g.clone(), d, lists.clone())?;
    let verdict = verify_certificate(&cert, caps)?;
    assert!(
        verdict.is_valid(),
        "search found no L-dicolouring but the replay disagrees: {:?}",
        verdict.failed
    );
    Ok(Some(cert))
}

/// An orientation of `g` admitting no L-dicolouring, with a replay-verified
/// certificate.
pub fn witness_orientation_search(g: &Graph, lists: &ListAssignment, mode: SearchMode, seed: u64, caps: &Caps) -> Result<WitnessOutcome> {
    if lists.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "list assignment covers {} vertices, graph has {}",
            lists.len(),
            g.n()
        )));
    }
    if lists.uniform_size().is_none() && g.n() > 0 {
        return Err(Error::InvalidArgument("witness search needs lists of one size".into()));
    }
    let mut tried = 0u64;
    match mode {
        SearchMode::Exhaustive => {
            for d in enumerate_orientations(g, caps)? {
                tried += 1;
                if let Some(certificate) = certify(g, d, lists, caps)? {
                    return Ok(WitnessOutcome::Found { certificate, tried });
                }
            }
            Ok(WitnessOutcome::NoneExists { tried })
        }
        SearchMode::Sampled { budget } => {
            for i in 0..budget {
                tried += 1;
                let d = random_orientation_with(g, &mut rng::stream(seed, i as u64));
                if let Some(certificate) = certify(g, d, lists, caps)? {
                    return Ok(WitnessOutcome::Found { certificate, tried });
                }
            }
            Ok(WitnessOutcome::NotFoundWithinBudget { tried })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, complete_graph, path_graph};

    #[test]
    fn k22_singletons_give_the_four_cycle() {
        let g = complete_bipartite(2, 2);
        let lists = ListAssignment::constant(4, &[1]).unwrap();
        let out = witness_orientation_search(&g, &lists, SearchMode::Exhaustive, 0, &Caps::default()).unwrap();
        let cert = out.certificate().expect("a directed 4-cycle exists");
        assert_eq!(cert.claimed_bound, 2);
        assert!(cert.orientation.find_cycle().is_some());
        assert_eq!(cert.orientation.find_cycle().unwrap().len(), 4);
        assert!(verify_certificate(cert, &Caps::default()).unwrap().is_valid());
    }

    #[test]
    fn trees_have_no_witness() {
        let g = path_graph(5);
        let lists = ListAssignment::constant(5, &[1]).unwrap();
        let out = witness_orientation_search(&g, &lists, SearchMode::Exhaustive, 0, &Caps::default()).unwrap();
        assert_eq!(out, WitnessOutcome::NoneExists { tried: 16 });
    }

    #[test]
    fn k4_found_by_sampling() {
        let g = complete_graph(4);
        let lists = ListAssignment::constant(4, &[1]).unwrap();
        for seed in 0..20 {
            let out = witness_orientation_search(&g, &lists, SearchMode::Sampled { budget: 8 }, seed, &Caps::default()).unwrap();
            if let Some(cert) = out.certificate() {
                assert!(!cert.orientation.is_acyclic());
            }
        }
        let out = witness_orientation_search(&g, &lists, SearchMode::Sampled { budget: 8 }, 3, &Caps::default()).unwrap();
        assert_eq!(out.status(), "found");
    }

    #[test]
    fn zero_budget_is_not_a_non_existence_claim() {
        let g = complete_graph(3);
        let lists = ListAssignment::constant(3, &[1]).unwrap();
        let out = witness_orientation_search(&g, &lists, SearchMode::Sampled { budget: 0 }, 0, &Caps::default()).unwrap();
        assert_eq!(out, WitnessOutcome::NotFoundWithinBudget { tried: 0 });
    }

    #[test]
    fn rejects_mixed_list_sizes() {
        let g = complete_graph(2);
        let lists = ListAssignment::from_slices(&[&[1], &[1, 2]]).unwrap();
        assert!(witness_orientation_search(&g, &lists, SearchMode::Exhaustive, 0, &Caps::default()).is_err());
    }
}
