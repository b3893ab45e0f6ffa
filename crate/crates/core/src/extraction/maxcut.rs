use std::collections::VecDeque;

use super::BipartiteWitness;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of edges whose ends lie on different sides.
pub fn cut_size(g: &Graph, side: &[bool]) -> usize {
    g.edges().filter(|&(u, v)| side[u] != side[v]).count()
}

/// Moves the lowest-indexed vertex with more neighbours on its own side than
/// across, until no such vertex is left. At the end every vertex has at least
/// half its neighbours across, so at least half the edges are cut.
pub fn max_cut_local_search(g: &Graph, mut side: Vec<bool>) -> Vec<bool> {
    loop {
        let flip = (0..g.n()).find(|&v| {
            let same = g.neighbors(v).filter(|&w| side[w] == side[v]).count();
            2 * same > g.degree(v)
        });
        match flip {
            Some(v) => side[v] = !side[v],
            None => return side,
        }
    }
}

/// Sides from the parity of BFS layers, each component rooted at its lowest vertex.
fn layered_start(g: &Graph) -> Vec<bool> {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued");
            for w in g.neighbors(u) {
                if side[w].is_none() {
                    side[w] = Some(!su);
                    queue.push_back(w);
                }
            }
        }
    }
    side.into_iter().map(Option::unwrap_or_default).collect()
}

fn exhaustive(g: &Graph) -> Result<Vec<bool>> {
    let n = g.n();
    let adj = g.adjacency_masks()?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = (0usize, 0u64);
    // Vertex 0 stays on side A; bit v of `b` puts vertex v on side B.
    for half in 0..(1u64 << (n - 1)) {
        let b = half << 1;
        let a = all & !b;
        let mut cut = 0usize;
        let mut scan = b;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            cut += (adj[v] & a).count_ones() as usize;
        }
        if cut > best.0 {
            best = (cut, b);
        }
    }
    Ok((0..n).map(|v| best.1 >> v & 1 == 1).collect())
}

/// A bipartite subgraph keeping at least half the edges: an exact maximum
/// cut for small graphs, otherwise local search from the BFS-layer split.
pub fn max_cut_bipartite(g: &Graph, caps: &Caps) -> Result<BipartiteWitness> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("max cut needs at least one vertex".into()));
    }
    let side = if g.n() <= caps.maxcut_exhaustive_vertices.min(40) {
        exhaustive(g)?
    } else {
        max_cut_local_search(g, layered_start(g))
    };
    let a = (0..g.n()).filter(|&v| !side[v]).collect();
    let b = (0..g.n()).filter(|&v| side[v]).collect();
    BipartiteWitness::new(g.clone(), a, b)
}
