//! Brute-force oracles shared by the integration tests. They use nothing
//! from the crate beyond the graph types, so they can check its searches.
#![allow(dead_code)]

use dichoose::graph::{Digraph, Graph};

/// Source peeling on an explicit arc list restricted to `keep`.
pub fn acyclic_on(n: usize, arcs: &[(usize, usize)], keep: &[bool]) -> bool {
    let mut alive: Vec<bool> = (0..n).map(|v| keep[v]).collect();
    loop {
        let mut indeg = vec![0usize; n];
        for &(u, v) in arcs {
            if alive[u] && alive[v] {
                indeg[v] += 1;
            }
        }
        match (0..n).find(|&v| alive[v] && indeg[v] == 0) {
            Some(v) => alive[v] = false,
            None => return alive.iter().all(|a| !a),
        }
    }
}

/// Calls `f` on every colouring of `n` vertices with colours `0..k`.
fn any_colouring(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut c = vec![0usize; n];
    loop {
        if f(&c) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_dichromatic(d: &Digraph) -> usize {
    let n = d.n();
    if n == 0 {
        return 0;
    }
    let arcs: Vec<_> = d.arcs().collect();
    (1..=n)
        .find(|&k| {
            any_colouring(n, k, |c| {
                (0..k).all(|col| {
                    let keep: Vec<bool> = c.iter().map(|&x| x == col).collect();
                    acyclic_on(n, &arcs, &keep)
                })
            })
        })
        .expect("n colours always suffice")
}

pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges: Vec<_> = g.edges().collect();
    (1..=n)
        .find(|&k| any_colouring(n, k, |c| edges.iter().all(|&(u, v)| c[u] != c[v])))
        .expect("n colours always suffice")
}

/// Every graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e)).unwrap()
    })
}

/// Every digon-free digraph on `n` labelled vertices: each pair is absent,
/// forward or backward.
pub fn all_orientations_of_subgraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 3u64.pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut arcs = Vec::new();
        for &(u, v) in &pairs {
            match code % 3 {
                1 => arcs.push((u, v)),
                2 => arcs.push((v, u)),
                _ => {}
            }
            code /= 3;
        }
        Digraph::from_arcs(n, arcs).unwrap()
    })
}

/// Every `r`-subset assignment from colours `1..=universe`, without any
/// symmetry reduction.
pub fn raw_list_assignments(n: usize, r: usize, universe: u32) -> Vec<Vec<Vec<u32>>> {
    let mut subsets = Vec::new();
    for m in 0u32..1 << universe {
        if m.count_ones() as usize == r {
            subsets.push((0..universe).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect::<Vec<u32>>());
        }
    }
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Vec<u32>>| {
                subsets.iter().map(move |s| {
                    let mut p = prefix.clone();
                    p.push(s.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// Whether some choice from the lists leaves every colour class acyclic.
pub fn brute_l_dicolourable(d: &Digraph, lists: &[Vec<u32>]) -> bool {
    let n = d.n();
    let arcs: Vec<_> = d.arcs().collect();
    let mut idx = vec![0usize; n];
    loop {
        let colours: Vec<u32> = (0..n).map(|v| lists[v][idx[v]]).collect();
        let ok = colours.iter().all(|&col| {
            let keep: Vec<bool> = colours.iter().map(|&x| x == col).collect();
            acyclic_on(n, &arcs, &keep)
        });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}
