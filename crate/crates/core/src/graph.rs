//! Simple graphs, digraphs and vertex orderings.
//!
//! Vertices are dense indices `0..n`. Adjacency is kept in sorted sets so that
//! every iteration order, and hence every derived witness, is deterministic.
//! The exhaustive solvers work on `u64` adjacency masks and therefore require
//! `n <= 64`; see [`Graph::adjacency_masks`] and [`Digraph::out_masks`].

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Largest vertex count handled by the bitmask-based exact searches.
pub const MASK_VERTICES: usize = 64;

pub(crate) fn check_mask_size(n: usize) -> Result<()> {
    if n > MASK_VERTICES {
        return Err(Error::cap("vertex count for bitmask search", MASK_VERTICES as u128, n as u128));
    }
    Ok(())
}

/// An undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    edges: usize,
}

/// A directed graph without loops or parallel arcs. Digons are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<BTreeSet<usize>>,
    inn: Vec<BTreeSet<usize>>,
    arcs: usize,
}

/// A subgraph together with the host index of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph<G> {
    pub graph: G,
    /// `index_map[i]` is the host vertex that became vertex `i`.
    pub index_map: Vec<usize>,
}

/// A strict total order on the vertices; `order[0]` is the smallest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: vec![BTreeSet::new(); n],
            edges: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        self.edges += 1;
        Ok(())
    }

    /// Adds the edge unless it is already present.
    pub(crate) fn ensure_edge(&mut self, u: usize, v: usize) {
        if u != v && self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.edges += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(BTreeSet::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(BTreeSet::len).max()
    }

    /// `2|E|/n` as an exact rational.
    pub fn average_degree(&self) -> Result<BigRational> {
        if self.n() == 0 {
            return Err(Error::EmptyVertexSet);
        }
        Ok(BigRational::new(
            BigInt::from(2 * self.edges),
            BigInt::from(self.n()),
        ))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Subgraph<Graph>> {
        let (index_map, position) = reindex(self.n(), vertices)?;
        let mut graph = Graph::new(index_map.len());
        for (i, &u) in index_map.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Some(j) = position[v] {
                    if i < j {
                        graph.ensure_edge(i, j);
                    }
                }
            }
        }
        Ok(Subgraph { graph, index_map })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A proper 2-colouring (`false`/`true` sides) if the graph is bipartite.
    /// Each component's smallest vertex is put on side `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are sided");
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        check_mask_size(self.n())?;
        Ok(self
            .adj
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect())
    }
}

impl Digraph {
    pub fn new(n: usize) -> Digraph {
        Digraph {
            out: vec![BTreeSet::new(); n],
            inn: vec![BTreeSet::new(); n],
            arcs: 0,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Digraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.out[u].insert(v) {
            return Err(Error::DuplicateArc(u, v));
        }
        self.inn[v].insert(u);
        self.arcs += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().copied()
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn[v].iter().copied()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// δ⁻, or `None` on the empty digraph.
    pub fn min_in_degree(&self) -> Option<usize> {
        self.inn.iter().map(BTreeSet::len).min()
    }

    /// δ⁺, or `None` on the empty digraph.
    pub fn min_out_degree(&self) -> Option<usize> {
        self.out.iter().map(BTreeSet::len).min()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    /// The first digon `(u, v)` with `u < v`, if any.
    pub fn find_digon(&self) -> Option<(usize, usize)> {
        self.arcs().find(|&(u, v)| u < v && self.has_arc(v, u))
    }

    /// True iff there is at most one arc between every pair of vertices.
    pub fn is_orientation(&self) -> bool {
        self.find_digon().is_none()
    }

    pub(crate) fn require_orientation(&self) -> Result<()> {
        match self.find_digon() {
            Some((u, v)) => Err(Error::Digon(u, v)),
            None => Ok(()),
        }
    }

    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for (u, v) in self.arcs() {
            g.ensure_edge(u, v);
        }
        g
    }

    /// True iff every pair of distinct vertices carries exactly one arc.
    pub fn is_tournament(&self) -> bool {
        let n = self.n();
        self.is_orientation() && self.arcs == n * n.saturating_sub(1) / 2
    }

    pub fn induced_subdigraph(&self, vertices: &[usize]) -> Result<Subgraph<Digraph>> {
        let (index_map, position) = reindex(self.n(), vertices)?;
        let mut graph = Digraph::new(index_map.len());
        for (i, &u) in index_map.iter().enumerate() {
            for &v in &self.out[u] {
                if let Some(j) = position[v] {
                    graph.out[i].insert(j);
                    graph.inn[j].insert(i);
                    graph.arcs += 1;
                }
            }
        }
        Ok(Subgraph { graph, index_map })
    }

    /// A topological order by repeated removal of sources, lowest index first.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut indeg: Vec<usize> = self.inn.iter().map(BTreeSet::len).collect();
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(u) = ready.pop_first() {
            order.push(u);
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Digons count as directed 2-cycles.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// One directed cycle `v0 -> v1 -> ... -> v0` (first vertex not repeated),
    /// found by iterative depth-first search.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let n = self.n();
        let mut mark = vec![Mark::New; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if mark[root] != Mark::New {
                continue;
            }
            let mut stack: Vec<(usize, std::collections::btree_set::Iter<'_, usize>)> =
                vec![(root, self.out[root].iter())];
            mark[root] = Mark::Active;
            while let Some((u, iter)) = stack.last_mut() {
                let u = *u;
                match iter.next() {
                    Some(&v) => match mark[v] {
                        Mark::New => {
                            mark[v] = Mark::Active;
                            parent[v] = u;
                            stack.push((v, self.out[v].iter()));
                        }
                        Mark::Active => {
                            let mut cycle = vec![u];
                            let mut w = u;
                            while w != v {
                                w = parent[w];
                                cycle.push(w);
                            }
                            cycle.reverse();
                            return Some(cycle);
                        }
                        Mark::Done => {}
                    },
                    None => {
                        mark[u] = Mark::Done;
                        stack.pop();
                    }
                }
            }
        }
        None
    }

    /// Strongly connected components (Kosaraju), each sorted, ordered by smallest vertex.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut finish = Vec::with_capacity(n);
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![(root, self.out[root].iter())];
            while let Some((u, iter)) = stack.last_mut() {
                let u = *u;
                match iter.next() {
                    Some(&v) if !seen[v] => {
                        seen[v] = true;
                        stack.push((v, self.out[v].iter()));
                    }
                    Some(_) => {}
                    None => {
                        finish.push(u);
                        stack.pop();
                    }
                }
            }
        }
        let mut comp_of = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for &root in finish.iter().rev() {
            if comp_of[root] != usize::MAX {
                continue;
            }
            let id = comps.len();
            comp_of[root] = id;
            let mut members = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &v in &self.inn[u] {
                    if comp_of[v] == usize::MAX {
                        comp_of[v] = id;
                        members.push(v);
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// The backedge graph: edge `{u, v}` whenever `v` precedes `u` and `u -> v` is an arc.
    pub fn backedge_graph(&self, ordering: &VertexOrdering) -> Result<Graph> {
        if ordering.len() != self.n() {
            return Err(Error::InvalidArgument(format!(
                "ordering has {} vertices, digraph has {}",
                ordering.len(),
                self.n()
            )));
        }
        let mut g = Graph::new(self.n());
        for (u, v) in self.arcs() {
            if ordering.precedes(v, u) {
                g.ensure_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn out_masks(&self) -> Result<Vec<u64>> {
        check_mask_size(self.n())?;
        Ok(self
            .out
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect())
    }

    pub fn in_masks(&self) -> Result<Vec<u64>> {
        check_mask_size(self.n())?;
        Ok(self
            .inn
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect())
    }
}

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<VertexOrdering> {
        let n = order.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if rank[v] != usize::MAX {
                return Err(Error::InvalidArgument(format!("vertex {v} repeated in ordering")));
            }
            rank[v] = i;
        }
        Ok(VertexOrdering { order, rank })
    }

    pub fn identity(n: usize) -> VertexOrdering {
        VertexOrdering {
            order: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// `u ≺ v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.rank[u] < self.rank[v]
    }
}

/// True iff every connected component is a star: an isolated vertex, a single
/// edge, or one centre adjacent to all other vertices of the component with no
/// further edges.
pub fn is_star_forest(g: &Graph) -> bool {
    g.components().iter().all(|comp| {
        let size = comp.len();
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        edges + 1 == size && (size <= 2 || comp.iter().any(|&v| g.degree(v) == size - 1))
    })
}

fn reindex(n: usize, vertices: &[usize]) -> Result<(Vec<usize>, Vec<Option<usize>>)> {
    let mut position = vec![None; n];
    let mut index_map = Vec::with_capacity(vertices.len());
    for &v in vertices {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if position[v].is_none() {
            position[v] = Some(index_map.len());
            index_map.push(v);
        }
    }
    Ok((index_map, position))
}

/// True iff the vertices of `set` induce an acyclic subdigraph, given out-masks.
pub(crate) fn mask_is_acyclic(out: &[u64], set: u64) -> bool {
    let mut rest = set;
    loop {
        let mut removed = false;
        let mut scan = rest;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if out[v] & rest == 0 {
                rest &= !(1u64 << v);
                removed = true;
            }
        }
        if rest == 0 {
            return true;
        }
        if !removed {
            return false;
        }
    }
}

/// True iff adding `v` to the acyclic class `class` closes a directed cycle,
/// i.e. some out-neighbour of `v` inside the class reaches an in-neighbour of `v`.
pub(crate) fn closes_cycle(out: &[u64], inn: &[u64], class: u64, v: usize) -> bool {
    let targets = inn[v] & class;
    if targets == 0 {
        return false;
    }
    let mut frontier = out[v] & class;
    let mut reached = frontier;
    while frontier != 0 {
        if reached & targets != 0 {
            return true;
        }
        let mut next = 0u64;
        let mut scan = frontier;
        while scan != 0 {
            let w = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            next |= out[w] & class;
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached & targets != 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn acyclicity_examples() {
        assert!(!directed_cycle(3).is_acyclic());
        assert!(Digraph::from_arcs(2, [(0, 1)]).unwrap().is_acyclic());
        assert!(!Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap().is_acyclic());
        assert!(Digraph::new(0).is_acyclic());
    }

    #[test]
    fn find_cycle_returns_real_cycle() {
        let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        let cycle = d.find_cycle().unwrap();
        for i in 0..cycle.len() {
            assert!(d.has_arc(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
        assert_eq!(cycle.len(), 3);
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(digon.find_cycle().unwrap().len(), 2);
        assert!(Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap().find_cycle().is_none());
    }

    #[test]
    fn underlying_graph_examples() {
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let g = digon.underlying_graph();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
        let tri = directed_cycle(3).underlying_graph();
        assert_eq!(tri, Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        assert_eq!(Digraph::new(4).underlying_graph(), Graph::new(4));
    }

    #[test]
    fn average_degree_is_exact() {
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.average_degree().unwrap(), BigRational::from_integer(2.into()));
        let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(k22.average_degree().unwrap(), BigRational::from_integer(2.into()));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            star.average_degree().unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(Graph::new(0).average_degree(), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn digraph_degree_extremes() {
        let d = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(d.min_in_degree(), Some(0));
        assert_eq!(d.min_out_degree(), Some(0));
        assert_eq!(directed_cycle(4).min_in_degree(), Some(1));
        assert_eq!(Digraph::new(0).min_out_degree(), None);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Digraph::from_arcs(2, [(0, 1), (0, 1)]), Err(Error::DuplicateArc(0, 1)));
        assert!(Digraph::from_arcs(2, [(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn induced_subdigraph_examples() {
        let c3 = directed_cycle(3);
        let sub = c3.induced_subdigraph(&[0, 1]).unwrap();
        assert_eq!(sub.graph.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(sub.index_map, vec![0, 1]);
        assert_eq!(c3.induced_subdigraph(&[0, 1, 2]).unwrap().graph, c3);
        assert_eq!(c3.induced_subdigraph(&[]).unwrap().graph, Digraph::new(0));
        assert!(c3.induced_subdigraph(&[3]).is_err());
    }

    #[test]
    fn backedge_examples() {
        let tt = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let order = VertexOrdering::new(tt.topological_order().unwrap()).unwrap();
        assert_eq!(tt.backedge_graph(&order).unwrap().edge_count(), 0);
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let b = digon.backedge_graph(&VertexOrdering::identity(2)).unwrap();
        assert_eq!(b.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![0, 0]).is_err());
        assert!(VertexOrdering::new(vec![0, 2]).is_err());
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert!(o.precedes(2, 0));
        assert_eq!(o.rank(1), 2);
    }

    #[test]
    fn star_forest_examples() {
        assert!(is_star_forest(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()));
        assert!(!is_star_forest(&Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()));
        assert!(!is_star_forest(&Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()));
        assert!(is_star_forest(&Graph::from_edges(5, [(2, 0), (2, 1), (2, 3)]).unwrap()));
        assert!(is_star_forest(&Graph::new(3)));
    }

    #[test]
    fn strong_components_of_cycle_plus_tail() {
        let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(d.strong_components(), vec![vec![0, 1, 2], vec![3], vec![4]]);
    }

    #[test]
    fn mask_cycle_helpers_agree() {
        let d = directed_cycle(4);
        let out = d.out_masks().unwrap();
        let inn = d.in_masks().unwrap();
        assert!(!mask_is_acyclic(&out, 0b1111));
        assert!(mask_is_acyclic(&out, 0b0111));
        assert!(closes_cycle(&out, &inn, 0b0111, 3));
        assert!(!closes_cycle(&out, &inn, 0b0011, 3));
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(c4.bipartition(), Some(vec![false, true, false, true]));
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(c5.bipartition().is_none());
    }
}
