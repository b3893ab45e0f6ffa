//! Orientations of undirected graphs.

use rand::Rng;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::rng;

/// Orients every edge independently and uniformly. Edge `{u, v}` (u < v) becomes
/// `u -> v` when the seeded coin comes up true.
pub fn random_orientation(g: &Graph, seed: u64) -> Digraph {
    random_orientation_with(g, &mut rng::stream(seed, 0))
}

pub(crate) fn random_orientation_with<R: Rng>(g: &Graph, rng: &mut R) -> Digraph {
    let mut d = Digraph::new(g.n());
    for (u, v) in g.edges() {
        let (a, b) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
        d.add_arc(a, b).expect("edges of a simple graph orient to distinct arcs");
    }
    d
}

/// The orientation of `g` selected by `bits`: bit `i` set reverses edge `i`
/// (in [`Graph::edges`] order) to point from the larger to the smaller index.
pub fn orientation_from_bits(g: &Graph, bits: u64) -> Digraph {
    let mut d = Digraph::new(g.n());
    for (i, (u, v)) in g.edges().enumerate() {
        let (a, b) = if bits >> i & 1 == 1 { (v, u) } else { (u, v) };
        d.add_arc(a, b).expect("edges of a simple graph orient to distinct arcs");
    }
    d
}

/// All `2^|E|` orientations of a graph, each exactly once.
#[derive(Debug, Clone)]
pub struct Orientations<'a> {
    graph: &'a Graph,
    next: u64,
    end: u64,
}

impl Iterator for Orientations<'_> {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= self.end {
            return None;
        }
        let d = orientation_from_bits(self.graph, self.next);
        self.next += 1;
        Some(d)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

pub fn enumerate_orientations<'a>(g: &'a Graph, caps: &Caps) -> Result<Orientations<'a>> {
    let m = g.edge_count();
    if m > caps.orientation_edges || m >= 64 {
        return Err(Error::cap_with_hint(
            "edge count for orientation enumeration",
            caps.orientation_edges as u128,
            m as u128,
            "; use a sampling mode instead",
        ));
    }
    Ok(Orientations {
        graph: g,
        next: 0,
        end: 1u64 << m,
    })
}
