use std::collections::BTreeSet;

use crate::graph::{Graph, Subgraph};

/// The maximal subgraph of minimum degree at least `t`, by repeatedly deleting
/// the lowest-indexed vertex of degree below `t`. Possibly empty.
pub fn min_degree_core(g: &Graph, t: usize) -> Subgraph<Graph> {
    let n = g.n();
    let mut degree = g.degrees();
    let mut alive = vec![true; n];
    let mut low: BTreeSet<usize> = (0..n).filter(|&v| degree[v] < t).collect();
    while let Some(v) = low.pop_first() {
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] < t {
                    low.insert(w);
                }
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    g.induced_subgraph(&keep).expect("kept vertices are in range")
}

/// The degeneracy: the largest minimum degree over all subgraphs.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut degree = g.degrees();
    let mut alive = vec![true; n];
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut worst = 0;
    while let Some((d, v)) = queue.pop_first() {
        worst = worst.max(d);
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn core_examples() {
        let c4 = cycle_graph(4).unwrap();
        let core = min_degree_core(&c4, 2);
        assert_eq!(core.graph, c4);
        assert_eq!(core.index_map, vec![0, 1, 2, 3]);

        assert_eq!(min_degree_core(&path_graph(6), 2).graph.n(), 0);

        let mut k4_minus = Graph::new(4);
        for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
            k4_minus.add_edge(u, v).unwrap();
        }
        assert_eq!(min_degree_core(&k4_minus, 3).graph.n(), 0);
        assert_eq!(min_degree_core(&k4_minus, 2).graph.n(), 4);
        assert_eq!(min_degree_core(&k4_minus, 0).graph, k4_minus);
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&complete_graph(5)), 4);
        assert_eq!(degeneracy(&path_graph(5)), 1);
        assert_eq!(degeneracy(&cycle_graph(7).unwrap()), 2);
        assert_eq!(degeneracy(&complete_bipartite(3, 5)), 3);
        assert_eq!(degeneracy(&Graph::new(0)), 0);
    }
}
