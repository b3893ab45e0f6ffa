//! Dicolourings, the exact dichromatic and chromatic numbers, and colouring
//! through the backedge graph of an ordering.

use std::collections::BTreeMap;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{check_mask_size, closes_cycle, Digraph, Graph, VertexOrdering};
use crate::orientation::enumerate_orientations;

/// A total map from vertices to positive colours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dicolouring {
    colours: Vec<u32>,
}

impl Dicolouring {
    pub fn new(colours: Vec<u32>) -> Result<Dicolouring> {
        if let Some(v) = colours.iter().position(|&c| c == 0) {
            return Err(Error::InvalidArgument(format!("vertex {v} has colour 0; colours are positive")));
        }
        Ok(Dicolouring { colours })
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of distinct colours used.
    pub fn colour_count(&self) -> usize {
        self.classes().len()
    }

    /// Colour classes keyed by colour.
    pub fn classes(&self) -> BTreeMap<u32, Vec<usize>> {
        let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, &c) in self.colours.iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        classes
    }

    /// 0-based colour indices to 1-based colours.
    pub(crate) fn from_indices(indices: &[u32]) -> Dicolouring {
        Dicolouring {
            colours: indices.iter().map(|c| c + 1).collect(),
        }
    }
}

/// True iff every colour class induces an acyclic subdigraph.
pub fn is_dicolouring(d: &Digraph, colouring: &Dicolouring) -> Result<bool> {
    if colouring.len() != d.n() {
        return Err(Error::PartialColouring {
            given: colouring.len(),
            expected: d.n(),
        });
    }
    for class in colouring.classes().values() {
        if !d.induced_subdigraph(class)?.graph.is_acyclic() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff adjacent vertices get distinct colours.
pub fn is_proper_colouring(g: &Graph, colours: &[u32]) -> Result<bool> {
    if colours.len() != g.n() {
        return Err(Error::PartialColouring {
            given: colours.len(),
            expected: g.n(),
        });
    }
    Ok(g.edges().all(|(u, v)| colours[u] != colours[v]))
}

/// An optimal colouring and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouringSolution {
    pub value: usize,
    pub witness: Dicolouring,
}

/// Depth-first search over colour-class partitions, vertices in index order,
/// colour labels in first-occurrence order. The first success is the
/// lexicographically least canonical `k`-colouring.
fn partition_search<F>(n: usize, k: usize, fits: &F) -> Option<Vec<u32>>
where
    F: Fn(u64, usize) -> bool,
{
    fn go<F: Fn(u64, usize) -> bool>(
        v: usize,
        n: usize,
        k: usize,
        used: usize,
        classes: &mut [u64],
        assign: &mut [u32],
        fits: &F,
    ) -> bool {
        if v == n {
            return true;
        }
        for c in 0..k.min(used + 1) {
            if fits(classes[c], v) {
                classes[c] |= 1 << v;
                assign[v] = c as u32;
                if go(v + 1, n, k, used.max(c + 1), classes, assign, fits) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        false
    }
    let mut classes = vec![0u64; k];
    let mut assign = vec![0u32; n];
    go(0, n, k, 0, &mut classes, &mut assign, fits).then_some(assign)
}

fn exact_partition<F>(n: usize, lower: usize, fits: F) -> ColouringSolution
where
    F: Fn(u64, usize) -> bool,
{
    if n == 0 {
        return ColouringSolution {
            value: 0,
            witness: Dicolouring { colours: Vec::new() },
        };
    }
    (lower.max(1)..=n)
        .find_map(|k| {
            partition_search(n, k, &fits).map(|a| ColouringSolution {
                value: k,
                witness: Dicolouring::from_indices(&a),
            })
        })
        .expect("n colours always suffice")
}

/// The exact dichromatic number with the lexicographically least optimal
/// witness (colours in first-occurrence order). 0 for the empty digraph.
pub fn dichromatic_number(d: &Digraph, caps: &Caps) -> Result<ColouringSolution> {
    let n = d.n();
    if n > caps.dichromatic_vertices {
        return Err(Error::cap("vertex count for exact dichromatic number", caps.dichromatic_vertices as u128, n as u128));
    }
    check_mask_size(n)?;
    let out = d.out_masks()?;
    let inn = d.in_masks()?;
    let lower = if d.is_acyclic() { 1 } else { 2 };
    Ok(exact_partition(n, lower, |class, v| !closes_cycle(&out, &inn, class, v)))
}

/// The exact chromatic number of an undirected graph.
pub fn chromatic_number(g: &Graph, caps: &Caps) -> Result<ColouringSolution> {
    let n = g.n();
    if n > caps.dichromatic_vertices {
        return Err(Error::cap("vertex count for exact chromatic number", caps.dichromatic_vertices as u128, n as u128));
    }
    let adj = g.adjacency_masks()?;
    let lower = match (g.edge_count(), g.bipartition()) {
        (0, _) => 1,
        (_, Some(_)) => 2,
        (_, None) => 3,
    };
    Ok(exact_partition(n, lower, |class, v| adj[v] & class == 0))
}

/// Greedy proper colouring along `order`: each vertex takes the smallest
/// colour (from 1) unused by its already coloured neighbours.
pub fn greedy_colouring(g: &Graph, order: &VertexOrdering) -> Vec<u32> {
    let mut colours = vec![0u32; g.n()];
    for &v in order.order() {
        let taken: std::collections::BTreeSet<u32> =
            g.neighbors(v).map(|w| colours[w]).filter(|&c| c > 0).collect();
        colours[v] = (1..).find(|c| !taken.contains(c)).expect("unbounded");
    }
    colours
}

/// Colours `d` through a proper colouring of its backedge graph under `order`.
/// Bipartite backedge graphs (star forests among them) get at most two
/// colours; otherwise greedy along `order`, replaced by an exact colouring
/// when the digraph is small enough and that uses fewer colours.
pub fn dicolour_via_backedge(d: &Digraph, order: &VertexOrdering, caps: &Caps) -> Result<Dicolouring> {
    d.require_orientation()?;
    let back = d.backedge_graph(order)?;
    let colours = if let Some(sides) = back.bipartition() {
        sides.into_iter().map(|s| if s { 2 } else { 1 }).collect()
    } else {
        let greedy = greedy_colouring(&back, order);
        let greedy_count = greedy.iter().copied().max().unwrap_or(0) as usize;
        if back.n() <= caps.exact_backedge_vertices {
            let exact = chromatic_number(&back, caps)?;
            if exact.value < greedy_count {
                exact.witness.colours
            } else {
                greedy
            }
        } else {
            greedy
        }
    };
    let colouring = Dicolouring::new(colours)?;
    debug_assert!(is_dicolouring(d, &colouring)?);
    Ok(colouring)
}

/// The maximum dichromatic number over all orientations of `g`, with the
/// first orientation (in enumeration order) attaining it.
pub fn max_dichromatic_over_orientations(g: &Graph, caps: &Caps) -> Result<(usize, Digraph)> {
    let ceiling = chromatic_number(g, caps)?.value;
    let mut best: Option<(usize, Digraph)> = None;
    for d in enumerate_orientations(g, caps)? {
        let value = dichromatic_number(&d, caps)?.value;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, d));
            if value >= ceiling {
                break;
            }
        }
    }
    Ok(best.expect("at least one orientation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    fn dc(n: usize) -> Digraph {
        directed_cycle(n).unwrap()
    }

    #[test]
    fn dicolouring_validity() {
        let c3 = dc(3);
        assert!(!is_dicolouring(&c3, &Dicolouring::new(vec![1, 1, 1]).unwrap()).unwrap());
        assert!(is_dicolouring(&c3, &Dicolouring::new(vec![1, 1, 2]).unwrap()).unwrap());
        let digon = dc(2);
        assert!(!is_dicolouring(&digon, &Dicolouring::new(vec![1, 1]).unwrap()).unwrap());
        assert!(matches!(
            is_dicolouring(&c3, &Dicolouring::new(vec![1, 2]).unwrap()),
            Err(Error::PartialColouring { given: 2, expected: 3 })
        ));
        assert!(Dicolouring::new(vec![0, 1]).is_err());
    }

    #[test]
    fn dichromatic_examples() {
        let caps = Caps::default();
        assert_eq!(dichromatic_number(&bidirected(&complete_graph(4)), &caps).unwrap().value, 4);
        assert_eq!(dichromatic_number(&dc(5), &caps).unwrap().value, 2);
        assert_eq!(dichromatic_number(&transitive_tournament(5), &caps).unwrap().value, 1);
        assert_eq!(dichromatic_number(&rambaud_tournament(1).unwrap(), &caps).unwrap().value, 2);
        assert_eq!(dichromatic_number(&Digraph::new(0), &caps).unwrap().value, 0);
    }

    #[test]
    fn dichromatic_witness_is_lexicographically_least() {
        let sol = dichromatic_number(&dc(5), &Caps::default()).unwrap();
        assert_eq!(sol.witness.colours(), &[1, 1, 1, 1, 2]);
        assert!(is_dicolouring(&dc(5), &sol.witness).unwrap());
    }

    #[test]
    fn dichromatic_cap() {
        let caps = Caps {
            dichromatic_vertices: 4,
            ..Caps::default()
        };
        assert!(dichromatic_number(&dc(5), &caps).is_err());
    }

    #[test]
    fn chromatic_examples() {
        let caps = Caps::default();
        assert_eq!(chromatic_number(&complete_graph(4), &caps).unwrap().value, 4);
        assert_eq!(chromatic_number(&cycle_graph(5).unwrap(), &caps).unwrap().value, 3);
        assert_eq!(chromatic_number(&cycle_graph(6).unwrap(), &caps).unwrap().value, 2);
        assert_eq!(chromatic_number(&Graph::new(3), &caps).unwrap().value, 1);
    }

    #[test]
    fn backedge_colouring_examples() {
        let caps = Caps::default();
        let tt = transitive_tournament(5);
        let c = dicolour_via_backedge(&tt, &VertexOrdering::identity(5), &caps).unwrap();
        assert_eq!(c.colour_count(), 1);

        let t1 = rambaud_tournament(1).unwrap();
        let c = dicolour_via_backedge(&t1, &VertexOrdering::identity(4), &caps).unwrap();
        assert!(is_dicolouring(&t1, &c).unwrap());
        assert!(c.colour_count() <= 2);

        let c3 = dc(3);
        for order in [[0, 1, 2], [2, 0, 1], [1, 2, 0], [2, 1, 0]] {
            let ord = VertexOrdering::new(order.to_vec()).unwrap();
            let c = dicolour_via_backedge(&c3, &ord, &caps).unwrap();
            assert_eq!(c.colour_count(), 2);
            assert!(is_dicolouring(&c3, &c).unwrap());
        }
        assert!(matches!(
            dicolour_via_backedge(&dc(2), &VertexOrdering::identity(2), &caps),
            Err(Error::Digon(0, 1))
        ));
    }

    #[test]
    fn backedge_colouring_of_large_tournaments_uses_two_colours() {
        let caps = Caps::default();
        for d in 1..=5 {
            let t = rambaud_tournament(d).unwrap();
            let c = dicolour_via_backedge(&t, &VertexOrdering::identity(t.n()), &caps).unwrap();
            assert!(c.colour_count() <= 2);
            assert!(is_dicolouring(&t, &c).unwrap());
        }
    }

    #[test]
    fn max_over_orientations_examples() {
        let caps = Caps::default();
        assert_eq!(max_dichromatic_over_orientations(&path_graph(5), &caps).unwrap().0, 1);
        let (v, witness) = max_dichromatic_over_orientations(&complete_graph(3), &caps).unwrap();
        assert_eq!(v, 2);
        assert!(!witness.is_acyclic());
        assert_eq!(max_dichromatic_over_orientations(&cycle_graph(4).unwrap(), &caps).unwrap().0, 2);
    }
}
