//! L-colourings and L-dicolourings, choosability and dichoosability.
//!
//! The list parameters are decided exactly by sweeping the canonical
//! `k`-uniform list assignments of [`crate::lists`]. Lists of exactly `k`
//! colours suffice: enlarging a list never destroys a colouring. Known bounds
//! narrow the sweep. Below the chromatic (dichromatic) number no assignment is
//! needed at all, and a greedy degeneracy argument caps the value from above.
//! Both parameters are also maxima over components (strong components for
//! dicolourings), which keeps the enumerations small.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::caps::Caps;
use crate::certificate::LowerBoundCertificate;
use crate::dicolour::{chromatic_number, dichromatic_number, Dicolouring};
use crate::error::{Error, Result};
use crate::extraction::degeneracy;
use crate::graph::{check_mask_size, closes_cycle, Digraph, Graph};
use crate::lists::{for_each_canonical_assignment, ListAssignment};
use crate::orientation::enumerate_orientations;

/// Backtracking over vertices in `order`, trying list colours ascending.
struct ListSearch<F> {
    order: Vec<usize>,
    lists: Vec<Vec<usize>>,
    fits: F,
    classes: Vec<u64>,
    assign: Vec<usize>,
    nodes: u64,
    node_cap: u64,
}

impl<F: Fn(u64, usize) -> bool> ListSearch<F> {
    fn run(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Error::cap("search nodes for list colouring", self.node_cap, self.nodes));
        }
        let v = self.order[depth];
        for i in 0..self.lists[v].len() {
            let c = self.lists[v][i];
            if (self.fits)(self.classes[c], v) {
                self.classes[c] |= 1 << v;
                self.assign[v] = c;
                if self.run(depth + 1)? {
                    return Ok(true);
                }
                self.classes[c] &= !(1 << v);
            }
        }
        Ok(false)
    }
}

fn search_with<F>(n: usize, degree: impl Fn(usize) -> usize, lists: &ListAssignment, caps: &Caps, fits: F) -> Result<Option<Vec<u32>>>
where
    F: Fn(u64, usize) -> bool,
{
    if lists.len() != n {
        return Err(Error::InvalidArgument(format!(
            "list assignment covers {} vertices, graph has {n}",
            lists.len()
        )));
    }
    check_mask_size(n)?;
    let universe: Vec<u32> = lists.universe().into_iter().collect();
    let index = |c: &u32| universe.binary_search(c).expect("colour from universe");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degree(v)), v));
    let mut search = ListSearch {
        order,
        lists: lists.lists().iter().map(|l| l.iter().map(index).collect()).collect(),
        fits,
        classes: vec![0; universe.len()],
        assign: vec![0; n],
        nodes: 0,
        node_cap: caps.list_search_nodes,
    };
    Ok(search
        .run(0)?
        .then(|| search.assign.iter().map(|&c| universe[c]).collect()))
}

/// An L-dicolouring of `d`, or `None` when the search space is exhausted.
pub fn exists_l_dicolouring(d: &Digraph, lists: &ListAssignment, caps: &Caps) -> Result<Option<Dicolouring>> {
    let out = d.out_masks()?;
    let inn = d.in_masks()?;
    let found = search_with(
        d.n(),
        |v| d.in_degree(v) + d.out_degree(v),
        lists,
        caps,
        |class, v| !closes_cycle(&out, &inn, class, v),
    )?;
    found.map(Dicolouring::new).transpose()
}

/// A proper L-colouring of `g`, or `None` when the search space is exhausted.
pub fn exists_l_proper_colouring(g: &Graph, lists: &ListAssignment, caps: &Caps) -> Result<Option<Vec<u32>>> {
    let adj = g.adjacency_masks()?;
    search_with(g.n(), |v| g.degree(v), lists, caps, |class, v| adj[v] & class == 0)
}

/// The first canonical `k`-list assignment of `g` with no proper L-colouring.
pub fn find_uncolourable_assignment(g: &Graph, k: usize, caps: &Caps) -> Result<Option<ListAssignment>> {
    first_failure(g.n(), k, caps, |l| Ok(exists_l_proper_colouring(g, l, caps)?.is_some()))
}

/// The first canonical `k`-list assignment of `d` with no L-dicolouring.
pub fn find_undicolourable_assignment(d: &Digraph, k: usize, caps: &Caps) -> Result<Option<ListAssignment>> {
    first_failure(d.n(), k, caps, |l| Ok(exists_l_dicolouring(d, l, caps)?.is_some()))
}

fn first_failure<F>(n: usize, k: usize, caps: &Caps, mut colourable: F) -> Result<Option<ListAssignment>>
where
    F: FnMut(&ListAssignment) -> Result<bool>,
{
    let mut failure = None;
    let mut error = None;
    let _ = for_each_canonical_assignment(n, k, caps, |l| match colourable(l) {
        Ok(true) => ControlFlow::Continue(()),
        Ok(false) => {
            failure = Some(l.clone());
            ControlFlow::Break(())
        }
        Err(e) => {
            error = Some(e);
            ControlFlow::Break(())
        }
    })?;
    match error {
        Some(e) => Err(e),
        None => Ok(failure),
    }
}

/// A list parameter together with a hardest witness one below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceNumber {
    pub value: usize,
    /// A `(value - 1)`-uniform assignment admitting no colouring, when `value >= 2`.
    pub witness: Option<ListAssignment>,
}

/// Searches `lower..upper` for the least `k` with no failing canonical
/// assignment. `lower - 1` must already be known to fail via `constant_witness`.
fn sweep<F>(lower: usize, upper: usize, n: usize, mut failing: F) -> Result<ChoiceNumber>
where
    F: FnMut(usize) -> Result<Option<ListAssignment>>,
{
    let mut witness = (lower >= 2)
        .then(|| ListAssignment::constant(n, &(1..lower as u32).collect::<Vec<_>>()))
        .transpose()?;
    for k in lower..upper {
        match failing(k)? {
            None => return Ok(ChoiceNumber { value: k, witness }),
            Some(l) => witness = Some(l),
        }
    }
    Ok(ChoiceNumber { value: upper, witness })
}

/// Combines per-component answers into one for the host on `n` vertices.
fn combine(n: usize, parts: Vec<(Vec<usize>, ChoiceNumber)>) -> Result<ChoiceNumber> {
    let Some((members, best)) = parts.into_iter().max_by_key(|(m, c)| (c.value, std::cmp::Reverse(m[0]))) else {
        return Ok(ChoiceNumber { value: 0, witness: None });
    };
    let witness = match best.witness {
        Some(local) if best.value >= 2 => {
            let filler: BTreeSet<u32> = (1..best.value as u32).collect();
            let mut lists = vec![filler; n];
            for (i, &v) in members.iter().enumerate() {
                lists[v] = local.list(i).clone();
            }
            Some(ListAssignment::new(lists)?)
        }
        _ => None,
    };
    Ok(ChoiceNumber { value: best.value, witness })
}

/// The choosability `χ_ℓ(G)`: 0 for the empty graph.
pub fn choosability(g: &Graph, caps: &Caps) -> Result<ChoiceNumber> {
    let mut parts = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp)?.graph;
        let answer = if sub.n() == 1 {
            ChoiceNumber { value: 1, witness: None }
        } else {
            let lower = chromatic_number(&sub, caps)?.value;
            let upper = degeneracy(&sub) + 1;
            sweep(lower, upper, sub.n(), |k| find_uncolourable_assignment(&sub, k, caps))?
        };
        parts.push((comp, answer));
    }
    combine(g.n(), parts)
}

/// `1 + max` over the peeling sequence of `min(d⁺, d⁻)` at removal: a vertex
/// with fewer out- (or in-) neighbours than its list size always keeps a
/// colour that no out- (in-) neighbour uses, so no cycle can pass through it.
pub fn dicolouring_degeneracy_bound(d: &Digraph) -> usize {
    let n = d.n();
    let mut alive = vec![true; n];
    let mut outd: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    let mut ind: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    let mut worst = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (outd[v].min(ind[v]), v))
            .expect("a live vertex remains");
        worst = worst.max(outd[v].min(ind[v]));
        alive[v] = false;
        for w in d.out_neighbors(v) {
            ind[w] -= 1;
        }
        for w in d.in_neighbors(v) {
            outd[w] -= 1;
        }
    }
    worst + 1
}

/// The dichoosability `⃗χ_ℓ(D)`: 0 for the empty digraph, 1 when acyclic.
pub fn dichoosability(d: &Digraph, caps: &Caps) -> Result<ChoiceNumber> {
    let mut parts = Vec::new();
    for comp in d.strong_components() {
        let sub = d.induced_subdigraph(&comp)?.graph;
        let answer = if sub.n() == 1 {
            ChoiceNumber { value: 1, witness: None }
        } else {
            let lower = dichromatic_number(&sub, caps)?.value;
            let upper = dicolouring_degeneracy_bound(&sub);
            sweep(lower, upper, sub.n(), |k| find_undicolourable_assignment(&sub, k, caps))?
        };
        parts.push((comp, answer));
    }
    combine(d.n(), parts)
}

/// `dic_ℓ(G)` with an extremal orientation and, when the value is at least
/// 2, a certificate for the lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDichoosability {
    pub value: usize,
    pub orientation: Digraph,
    pub certificate: Option<LowerBoundCertificate>,
}

/// The maximum of `⃗χ_ℓ(D)` over all orientations `D` of `g`. The search stops
/// early at `1 + ⌊degeneracy / 2⌋`, which no orientation can exceed.
pub fn dichoosability_of_graph(g: &Graph, caps: &Caps) -> Result<GraphDichoosability> {
    let ceiling = if g.n() == 0 { 0 } else { 1 + degeneracy(g) / 2 };
    let mut best: Option<(ChoiceNumber, Digraph)> = None;
    for d in enumerate_orientations(g, caps)? {
        let answer = dichoosability(&d, caps)?;
        if best.as_ref().is_none_or(|(b, _)| answer.value > b.value) {
            let done = answer.value >= ceiling;
            best = Some((answer, d));
            if done {
                break;
            }
        }
    }
    let (answer, orientation) = best.expect("at least one orientation");
    let certificate = answer
        .witness
        .map(|lists| LowerBoundCertificate::new(g.clone(), orientation.clone(), lists))
        .transpose()?;
    Ok(GraphDichoosability {
        value: answer.value,
        orientation,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::dicolour::is_dicolouring;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn l_dicolouring_examples() {
        let c3 = directed_cycle(3).unwrap();
        assert!(exists_l_dicolouring(&c3, &ListAssignment::constant(3, &[1]).unwrap(), &caps())
            .unwrap()
            .is_none());
        let two = ListAssignment::constant(3, &[1, 2]).unwrap();
        let w = exists_l_dicolouring(&c3, &two, &caps()).unwrap().unwrap();
        assert!(is_dicolouring(&c3, &w).unwrap());
        assert!(two.admits(w.colours()));
        let digon = directed_cycle(2).unwrap();
        assert!(exists_l_dicolouring(&digon, &ListAssignment::constant(2, &[1]).unwrap(), &caps())
            .unwrap()
            .is_none());
    }

    #[test]
    fn l_proper_colouring_examples() {
        let k3 = complete_graph(3);
        assert!(exists_l_proper_colouring(&k3, &ListAssignment::constant(3, &[1, 2]).unwrap(), &caps())
            .unwrap()
            .is_none());
        let edge = path_graph(2);
        assert!(exists_l_proper_colouring(&edge, &ListAssignment::constant(2, &[1]).unwrap(), &caps())
            .unwrap()
            .is_none());
        let c4 = cycle_graph(4).unwrap();
        let w = exists_l_proper_colouring(&c4, &ListAssignment::constant(4, &[1, 2]).unwrap(), &caps())
            .unwrap()
            .unwrap();
        assert!(w == vec![1, 2, 1, 2] || w == vec![2, 1, 2, 1]);
    }

    #[test]
    fn list_size_mismatch_is_an_error() {
        let c3 = directed_cycle(3).unwrap();
        assert!(exists_l_dicolouring(&c3, &ListAssignment::constant(2, &[1]).unwrap(), &caps()).is_err());
    }

    #[test]
    fn node_cap_reports_error() {
        let tight = Caps {
            list_search_nodes: 2,
            ..Caps::default()
        };
        let k4 = bidirected(&complete_graph(4));
        let l = ListAssignment::constant(4, &[1, 2, 3]).unwrap();
        assert!(matches!(exists_l_dicolouring(&k4, &l, &tight), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn choosability_examples() {
        assert_eq!(choosability(&complete_graph(3), &caps()).unwrap().value, 3);
        assert_eq!(choosability(&cycle_graph(4).unwrap(), &caps()).unwrap().value, 2);
        assert_eq!(choosability(&Graph::new(0), &caps()).unwrap().value, 0);
        assert_eq!(choosability(&Graph::new(3), &caps()).unwrap().value, 1);
        // Odd cycles are 3-choosable, even ones 2-choosable.
        assert_eq!(choosability(&cycle_graph(5).unwrap(), &caps()).unwrap().value, 3);
    }

    #[test]
    fn k33_classic_assignment_fails() {
        let k33 = complete_bipartite(3, 3);
        let side: [&[u32]; 3] = [&[1, 2], &[1, 3], &[2, 3]];
        let lists = ListAssignment::from_slices(&[side[0], side[1], side[2], side[0], side[1], side[2]]).unwrap();
        assert!(exists_l_proper_colouring(&k33, &lists, &caps()).unwrap().is_none());
    }

    #[test]
    fn choosability_witness_fails() {
        let g = cycle_graph(5).unwrap();
        let answer = choosability(&g, &caps()).unwrap();
        let w = answer.witness.unwrap();
        assert_eq!(w.uniform_size(), Some(2));
        assert!(exists_l_proper_colouring(&g, &w, &caps()).unwrap().is_none());
    }

    #[test]
    fn dichoosability_examples() {
        assert_eq!(dichoosability(&transitive_tournament(6), &caps()).unwrap().value, 1);
        let c3 = dichoosability(&directed_cycle(3).unwrap(), &caps()).unwrap();
        assert_eq!(c3.value, 2);
        assert_eq!(c3.witness, Some(ListAssignment::constant(3, &[1]).unwrap()));
        assert_eq!(dichoosability(&bidirected(&path_graph(2)), &caps()).unwrap().value, 2);
        assert_eq!(dichoosability(&Digraph::new(0), &caps()).unwrap().value, 0);
    }

    #[test]
    fn dichoosability_of_small_tournament() {
        let t1 = rambaud_tournament(1).unwrap();
        assert_eq!(dichoosability(&t1, &caps()).unwrap().value, 2);
    }

    #[test]
    fn degeneracy_bound() {
        assert_eq!(dicolouring_degeneracy_bound(&directed_cycle(5).unwrap()), 2);
        assert_eq!(dicolouring_degeneracy_bound(&transitive_tournament(5)), 1);
        assert_eq!(dicolouring_degeneracy_bound(&bidirected(&complete_graph(4))), 4);
    }

    #[test]
    fn graph_dichoosability_examples() {
        let tree = path_graph(4);
        let ans = dichoosability_of_graph(&tree, &caps()).unwrap();
        assert_eq!(ans.value, 1);
        assert!(ans.certificate.is_none());

        let k22 = complete_bipartite(2, 2);
        let ans = dichoosability_of_graph(&k22, &caps()).unwrap();
        assert_eq!(ans.value, 2);
        let cert = ans.certificate.unwrap();
        assert!(crate::certificate::verify_certificate(&cert, &caps()).unwrap().is_valid());

        let ans = dichoosability_of_graph(&complete_graph(3), &caps()).unwrap();
        assert_eq!(ans.value, 2);
        assert!(!ans.orientation.is_acyclic());
    }
}
