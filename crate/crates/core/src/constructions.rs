//! Generators: the low-dichoosability tournaments, complete bipartite graphs,
//! bidirected graphs, and seeded random instances.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::rng;

/// Parameters of the tournament built from `2(d+1)` blocks of `d` vertices.
///
/// Vertex `u_k` of the construction is index `k - 1`; blocks are numbered
/// from 1, so block `i` holds `u_{1+d(i-1)} ..= u_{di}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TournamentSpec {
    d: usize,
}

impl TournamentSpec {
    pub fn new(d: usize) -> Result<TournamentSpec> {
        if d < 1 {
            return Err(Error::InvalidArgument("tournament parameter d must be at least 1".into()));
        }
        Ok(TournamentSpec { d })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `2d(d+1)`.
    pub fn n(&self) -> usize {
        2 * self.d * (self.d + 1)
    }

    /// `2(d+1)`.
    pub fn block_count(&self) -> usize {
        2 * (self.d + 1)
    }

    /// Vertex indices of block `i` (1-based).
    pub fn block(&self, i: usize) -> std::ops::Range<usize> {
        assert!((1..=self.block_count()).contains(&i), "block {i} out of range");
        self.d * (i - 1)..self.d * i
    }

    /// The arcs `v -> u_i` for `i in 1..=d`, `v` in block `1+d+i`.
    pub fn into_first_arcs(&self) -> Vec<(usize, usize)> {
        let d = self.d;
        (1..=d)
            .flat_map(|i| self.block(1 + d + i).map(move |v| (v, i - 1)))
            .collect()
    }

    /// The arcs `u_{n+1-i} -> v` for `i in 1..=d`, `v` in block `1+i`.
    pub fn out_of_last_arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (1..=self.d)
            .flat_map(|i| self.block(1 + i).map(move |v| (n - i, v)))
            .collect()
    }
}

/// The label `u_k` of index `k - 1`.
pub fn tournament_label(v: usize) -> String {
    format!("u{}", v + 1)
}

/// A tournament on `2d(d+1)` vertices with minimum in- and out-degree at
/// least `d` whose backedge graph under the identity order is a star forest.
pub fn rambaud_tournament(d: usize) -> Result<Digraph> {
    let spec = TournamentSpec::new(d)?;
    let n = spec.n();
    let mut t = Digraph::new(n);
    for (u, v) in spec.into_first_arcs().into_iter().chain(spec.out_of_last_arcs()) {
        t.add_arc(u, v)?;
    }
    for i in 0..n {
        for j in i + 1..n {
            if !t.has_arc(i, j) && !t.has_arc(j, i) {
                t.add_arc(i, j)?;
            }
        }
    }
    Ok(t)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.ensure_edge(u, v);
        }
    }
    g
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.ensure_edge(u, v);
        }
    }
    g
}

/// The cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.ensure_edge(i - 1, i);
    }
    g
}

/// `0 -> 1 -> ... -> (n-1) -> 0`; needs `n >= 2` (n = 2 gives a digon).
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidArgument("a directed cycle needs at least 2 vertices".into()));
    }
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `i -> j` for all `i < j`.
pub fn transitive_tournament(n: usize) -> Digraph {
    let mut d = Digraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            d.add_arc(i, j).expect("distinct pairs");
        }
    }
    d
}

/// Replaces every edge by a digon.
pub fn bidirected(g: &Graph) -> Digraph {
    let mut d = Digraph::new(g.n());
    for (u, v) in g.edges() {
        d.add_arc(u, v).expect("simple graph");
        d.add_arc(v, u).expect("simple graph");
    }
    d
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} not in [0, 1]")));
    }
    Ok(())
}

/// `G(n, p)`: each pair `u < v`, in lexicographic order, is an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = rng::stream(seed, 0);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.ensure_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Random bipartite graph with parts `0..a` and `a..a+b`.
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = rng::stream(seed, 0);
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            if rng.random_bool(p) {
                g.ensure_edge(u, v);
            }
        }
    }
    Ok(g)
}
