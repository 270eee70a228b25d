#![allow(dead_code)]

use grundy_core::{Graph, Variant, VertexSet};
use proptest::prelude::*;

/// Neighborhood sets spelled out per variant, independent of the library's
/// own variant tables: (set tested for something new, set added to the
/// covered union).
fn rule(g: &Graph, variant: Variant, v: usize) -> (VertexSet, VertexSet) {
    let open = g.neighbors(v).clone();
    let mut closed = open.clone();
    closed.insert(v);
    match variant {
        Variant::Total => (open.clone(), open),
        Variant::Closed => (closed.clone(), closed),
        Variant::Z => (open, closed),
        Variant::L => (closed, open),
    }
}

/// Longest legal sequence by exhaustive enumeration of every sequence of
/// distinct vertices; no memoization, no pruning.
pub fn brute_force(g: &Graph, variant: Variant) -> u32 {
    fn go(g: &Graph, variant: Variant, covered: &VertexSet, used: &mut Vec<bool>) -> u32 {
        let mut best = 0;
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            let (test, add) = rule(g, variant, v);
            if test.is_subset(covered) {
                continue;
            }
            used[v] = true;
            best = best.max(1 + go(g, variant, &covered.union(&add), used));
            used[v] = false;
        }
        best
    }
    go(g, variant, &VertexSet::empty(g.n()), &mut vec![false; g.n()])
}

/// Every legal closed sequence of `g`, as vertex lists.
pub fn all_closed_sequences(g: &Graph) -> Vec<Vec<usize>> {
    fn go(g: &Graph, covered: &VertexSet, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for v in 0..g.n() {
            let (test, add) = rule(g, Variant::Closed, v);
            if test.is_subset(covered) {
                continue;
            }
            prefix.push(v);
            go(g, &covered.union(&add), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(g, &VertexSet::empty(g.n()), &mut Vec::new(), &mut out);
    out
}

/// `a(D)`: steps adjacent to no earlier step.
pub fn count_a(g: &Graph, seq: &[usize]) -> u32 {
    let mut a = 0;
    for (i, &v) in seq.iter().enumerate() {
        if seq[..i].iter().all(|&u| !g.has_edge(u, v)) {
            a += 1;
        }
    }
    a
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Arbitrary simple graphs on `min_n..=max_n` vertices.
pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| grundy_core::enumerate::enumerate_connected(n).unwrap())
        .collect()
}

/// Longest legal hyperedge sequence by plain memoized search over the
/// covered ground subset.
pub fn plain_rho(h: &grundy_core::hypergraph::Hypergraph) -> u32 {
    fn best(edges: &[VertexSet], covered: &VertexSet, memo: &mut std::collections::HashMap<VertexSet, u32>) -> u32 {
        if let Some(&v) = memo.get(covered) {
            return v;
        }
        let mut out = 0;
        for e in edges {
            if !e.is_subset(covered) {
                out = out.max(1 + best(edges, &covered.union(e), memo));
            }
        }
        memo.insert(covered.clone(), out);
        out
    }
    best(h.edges(), &VertexSet::empty(h.ground()), &mut Default::default())
}

/// Property-test settings for integration tests, which have no source root
/// for regression files.
pub fn prop_config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
