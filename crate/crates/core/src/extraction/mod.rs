//! Subgraph extraction: max-cut bipartization, minimum-degree cores, the
//! bounded-degree bipartite extraction, and monochromatic subgraphs.

mod core;
mod ko;
mod maxcut;
mod mono;

pub use self::core::{degeneracy, min_degree_core};
pub use self::ko::{audit_ko_witness, kuhn_osthus_extract, KoAudit, KoOptions, KoWitness};
pub use self::maxcut::{cut_size, max_cut_bipartite, max_cut_local_search};
pub use self::mono::{monochromatic_subgraph, MonochromaticSubgraph};

use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};

/// Two disjoint vertex sets of a host graph; the bipartite subgraph keeps
/// exactly the host edges with one end on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteWitness {
    pub host: Graph,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl BipartiteWitness {
    pub fn new(host: Graph, mut side_a: Vec<usize>, mut side_b: Vec<usize>) -> Result<BipartiteWitness> {
        side_a.sort_unstable();
        side_b.sort_unstable();
        side_a.dedup();
        side_b.dedup();
        let n = host.n();
        let mut seen = vec![false; n];
        for &v in side_a.iter().chain(&side_b) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen[v] {
                return Err(Error::InvalidArgument(format!("vertex {v} is on both sides")));
            }
            seen[v] = true;
        }
        Ok(BipartiteWitness { host, side_a, side_b })
    }

    /// Host edges with one end in each side.
    pub fn cross_edges(&self) -> Vec<(usize, usize)> {
        let mut in_a = vec![false; self.host.n()];
        let mut in_b = vec![false; self.host.n()];
        self.side_a.iter().for_each(|&v| in_a[v] = true);
        self.side_b.iter().for_each(|&v| in_b[v] = true);
        self.host
            .edges()
            .filter(|&(u, v)| (in_a[u] && in_b[v]) || (in_b[u] && in_a[v]))
            .collect()
    }

    /// The bipartite subgraph. Vertices `0..|A|` are side A (ascending), the
    /// rest side B.
    pub fn subgraph(&self) -> Subgraph<Graph> {
        let index_map: Vec<usize> = self.side_a.iter().chain(&self.side_b).copied().collect();
        let mut position = vec![usize::MAX; self.host.n()];
        for (i, &v) in index_map.iter().enumerate() {
            position[v] = i;
        }
        let mut graph = Graph::new(index_map.len());
        for (u, v) in self.cross_edges() {
            graph.ensure_edge(position[u], position[v]);
        }
        Subgraph { graph, index_map }
    }

    /// Side sizes `(|A|, |B|)`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.side_a.len(), self.side_b.len())
    }
}

/// Checks that `a` and `b` partition the vertices of `g` and every edge crosses.
pub(crate) fn check_bipartition(g: &Graph, a: &[usize], b: &[usize]) -> Result<Vec<bool>> {
    let n = g.n();
    let mut side = vec![None; n];
    for (v, s) in a.iter().map(|&v| (v, true)).chain(b.iter().map(|&v| (v, false))) {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if side[v].replace(s).is_some() {
            return Err(Error::InvalidArgument(format!("vertex {v} appears twice in the bipartition")));
        }
    }
    let side: Vec<bool> = side
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::InvalidArgument(format!("vertex {v} is on neither side"))))
        .collect::<Result<_>>()?;
    if let Some((u, v)) = g.edges().find(|&(u, v)| side[u] == side[v]) {
        return Err(Error::InvalidArgument(format!("edge {u} {v} does not cross the bipartition")));
    }
    Ok(side)
}
