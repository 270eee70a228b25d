//! Exhaustive generation of small connected graphs up to isomorphism.
//!
//! Every connected graph on `n` vertices has a non-cut vertex, so it arises
//! from a connected graph on `n - 1` vertices by adding one vertex with a
//! nonempty neighborhood. Each level is deduplicated by a brute-force
//! canonical form. Bipartiteness is hereditary for this construction too,
//! so the bipartite filter can be applied level by level.

use crate::graph::Graph;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest order accepted by the enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration needs 1 <= n <= {MAX_ENUMERATION_ORDER}, got {0}; read larger graphs from a graph6 file")]
    OutOfRange(usize),
    #[error("canonical form needs n <= {MAX_CANONICAL_ORDER}, got {0}")]
    CanonicalTooLarge(usize),
}

/// Canonical code: vertex count plus the minimum upper-triangle bit string
/// over all vertex orderings that list vertices by non-increasing degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

impl CanonicalForm {
    /// Rebuilds the canonically labelled graph.
    pub fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.code & (1u64 << bit) != 0 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edges(self.n, edges).expect("canonical code is well formed")
    }
}

fn encode(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                code |= 1u64 << bit;
            }
            bit += 1;
        }
    }
    code
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, EnumerationError> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(EnumerationError::CanonicalTooLarge(n));
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // Degree classes occupy contiguous position ranges; permute within each.
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || g.degree(by_degree[i]) != g.degree(by_degree[start]) {
            classes.push((start, i));
            start = i;
        }
    }

    fn permute(
        g: &Graph,
        order: &mut Vec<usize>,
        classes: &[(usize, usize)],
        class: usize,
        pos: usize,
        best: &mut u64,
    ) {
        if class == classes.len() {
            *best = (*best).min(encode(g, order));
            return;
        }
        let (_, end) = classes[class];
        if pos == end {
            let next = classes.get(class + 1).map_or(end, |c| c.0);
            permute(g, order, classes, class + 1, next, best);
            return;
        }
        for i in pos..end {
            order.swap(pos, i);
            permute(g, order, classes, class, pos + 1, best);
            order.swap(pos, i);
        }
    }

    let mut best = u64::MAX;
    let first = classes.first().map_or(0, |c| c.0);
    permute(g, &mut by_degree, &classes, 0, first, &mut best);
    if n < 2 {
        best = 0;
    }
    Ok(CanonicalForm { n, code: best })
}

fn connected_level(n: usize, bipartite_only: bool) -> Vec<CanonicalForm> {
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(CanonicalForm { n: 1, code: 0 });
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_graph();
            let old_edges = base.edges();
            for nbrs in 1u32..(1 << (m - 1)) {
                let edges = old_edges
                    .iter()
                    .copied()
                    .chain((0..m - 1).filter(|&i| nbrs & (1 << i) != 0).map(|i| (i, m - 1)));
                let g = Graph::from_edges(m, edges).expect("valid extension");
                if bipartite_only && !g.is_bipartite() {
                    continue;
                }
                next.insert(canonical_form(&g).expect("order within limit"));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

fn check_order(n: usize) -> Result<(), EnumerationError> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(EnumerationError::OutOfRange(n))
    }
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// in increasing canonical-code order.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    check_order(n)?;
    Ok(connected_level(n, false).into_iter().map(CanonicalForm::to_graph))
}

/// All connected bipartite graphs on exactly `n` vertices, one per
/// isomorphism class.
pub fn enumerate_connected_bipartite(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    check_order(n)?;
    Ok(connected_level(n, true).into_iter().map(CanonicalForm::to_graph))
}
