use super::check_bipartition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonochromaticSubgraph {
    /// A-vertices with at least `k` neighbours of their own colour, ascending.
    pub a_prime: Vec<usize>,
    /// Vertices `A′` then `B` (each ascending), with the monochromatic edges.
    pub subgraph: Subgraph<Graph>,
}

/// Keeps the A-vertices having at least `k` same-coloured neighbours, and of
/// `G[A′ ∪ B]` only the edges whose ends share a colour.
pub fn monochromatic_subgraph(g: &Graph, a: &[usize], b: &[usize], colours: &[u32], k: usize) -> Result<MonochromaticSubgraph> {
    check_bipartition(g, a, b)?;
    if colours.len() != g.n() {
        return Err(Error::PartialColouring {
            given: colours.len(),
            expected: g.n(),
        });
    }
    let mut a_prime: Vec<usize> = a
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).filter(|&w| colours[w] == colours[v]).count() >= k)
        .collect();
    a_prime.sort_unstable();
    let mut b_sorted = b.to_vec();
    b_sorted.sort_unstable();
    let index_map: Vec<usize> = a_prime.iter().chain(&b_sorted).copied().collect();
    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in index_map.iter().enumerate() {
        position[v] = i;
    }
    let mut graph = Graph::new(index_map.len());
    for (u, v) in g.edges() {
        if position[u] != usize::MAX && position[v] != usize::MAX && colours[u] == colours[v] {
            graph.ensure_edge(position[u], position[v]);
        }
    }
    Ok(MonochromaticSubgraph {
        a_prime,
        subgraph: Subgraph { graph, index_map },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complete_bipartite;

    fn star() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn star_all_one_colour() {
        let m = monochromatic_subgraph(&star(), &[0], &[1, 2, 3], &[1, 1, 1, 1], 1).unwrap();
        assert_eq!(m.a_prime, vec![0]);
        assert_eq!(m.subgraph.graph.edge_count(), 3);
    }

    #[test]
    fn star_with_other_leaf_colour() {
        let m = monochromatic_subgraph(&star(), &[0], &[1, 2, 3], &[1, 2, 2, 2], 1).unwrap();
        assert!(m.a_prime.is_empty());
        assert_eq!(m.subgraph.index_map, vec![1, 2, 3]);
        assert_eq!(m.subgraph.graph.edge_count(), 0);
    }

    #[test]
    fn k23_constant_colouring() {
        let g = complete_bipartite(2, 3);
        let m = monochromatic_subgraph(&g, &[0, 1], &[2, 3, 4], &[1; 5], 3).unwrap();
        assert_eq!(m.a_prime, vec![0, 1]);
        assert_eq!(m.subgraph.graph, g);
        for i in 0..m.a_prime.len() {
            assert!(m.subgraph.graph.degree(i) >= 3);
        }
    }

    #[test]
    fn partial_colouring_rejected() {
        assert!(matches!(
            monochromatic_subgraph(&star(), &[0], &[1, 2, 3], &[1, 1], 1),
            Err(Error::PartialColouring { given: 2, expected: 4 })
        ));
    }
}
