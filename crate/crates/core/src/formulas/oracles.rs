//! Exact brute-force oracles for small graphs.

use super::FormulaError;
use crate::graph::Graph;

pub const INDEPENDENCE_CAP: usize = 24;
pub const BICLIQUE_EDGE_CAP: usize = 16;
pub const SKEW_FORCING_CAP: usize = 20;

fn cap(what: &'static str, size: usize, cap: usize) -> Result<(), FormulaError> {
    if size > cap {
        Err(FormulaError::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect()
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn max_degree_vertex(adj: &[u32], alive: u32) -> Option<(usize, u32)> {
    let mut best = None;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & alive).count_ones();
        if best.is_none_or(|(_, bd)| d > bd) {
            best = Some((v, d));
        }
    }
    best
}

fn alpha(adj: &[u32], alive: u32) -> u32 {
    let Some((v, d)) = max_degree_vertex(adj, alive) else {
        return 0;
    };
    if d == 0 {
        // Everything left is isolated.
        return alive.count_ones();
    }
    let without = alpha(adj, alive & !(1 << v));
    let with = 1 + alpha(adj, alive & !(1 << v) & !adj[v]);
    without.max(with)
}

/// Minimum vertex cover: either `v` is in the cover, or all of its
/// neighbors are.
fn beta(adj: &[u32], alive: u32) -> u32 {
    let Some((v, d)) = max_degree_vertex(adj, alive) else {
        return 0;
    };
    if d == 0 {
        return 0;
    }
    let take_v = 1 + beta(adj, alive & !(1 << v));
    let take_nbrs = d + beta(adj, alive & !(1 << v) & !adj[v]);
    take_v.min(take_nbrs)
}

/// Maximum size of an independent set; `n <= 24`.
pub fn independence_number(g: &Graph) -> Result<u32, FormulaError> {
    cap("independence number", g.n(), INDEPENDENCE_CAP)?;
    let adj = masks(g);
    let a = alpha(&adj, full(g.n()));
    let b = beta(&adj, full(g.n()));
    assert_eq!(a + b, g.n() as u32, "independence and vertex cover numbers disagree");
    Ok(a)
}

/// Minimum size of a vertex cover; `n <= 24`.
pub fn vertex_cover_number(g: &Graph) -> Result<u32, FormulaError> {
    Ok(g.n() as u32 - independence_number(g)?)
}

/// Edge masks (over the edge list of `g`) of every complete bipartite
/// subgraph with at least one edge.
fn biclique_masks(g: &Graph) -> Vec<u32> {
    let edges = g.edges();
    let m = edges.len();
    // Renumber endpoints compactly; at most 2m <= 32 of them.
    let mut id = vec![usize::MAX; g.n()];
    let mut next = 0;
    for &(u, v) in &edges {
        for w in [u, v] {
            if id[w] == usize::MAX {
                id[w] = next;
                next += 1;
            }
        }
    }
    let ends: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (id[u], id[v])).collect();
    let mut out = Vec::new();
    let mut nbr = [0u32; 32];
    for mask in 1u32..(1u32 << m) {
        let mut touched = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let (u, v) = ends[rest.trailing_zeros() as usize];
            rest &= rest - 1;
            if touched & 1 << u == 0 {
                nbr[u] = 0;
            }
            if touched & 1 << v == 0 {
                nbr[v] = 0;
            }
            touched |= 1 << u | 1 << v;
            nbr[u] |= 1 << v;
            nbr[v] |= 1 << u;
        }
        // A complete bipartite graph K_{X,Y}: every vertex of X sees exactly
        // Y and vice versa, and X, Y partition the touched vertices.
        let r = touched.trailing_zeros() as usize;
        let y = nbr[r];
        let x = nbr[y.trailing_zeros() as usize];
        if x & y != 0 || x | y != touched {
            continue;
        }
        let mut ok = true;
        let mut rest = touched;
        while rest != 0 && ok {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            ok = nbr[w] == if x & 1 << w != 0 { y } else { x };
        }
        if ok {
            out.push(mask);
        }
    }
    out
}

/// Minimum number of bicliques whose union covers `target`, each drawn from
/// `bicliques`; when `disjoint`, the bicliques must also be pairwise
/// edge-disjoint.
fn min_bicliques(bicliques: &[u32], target: u32, disjoint: bool) -> u32 {
    let size = target as usize + 1;
    let mut best = vec![u32::MAX; size];
    best[0] = 0;
    // Covered sets only grow, so scanning states in increasing order visits
    // every predecessor first.
    for covered in 0..size as u32 {
        let here = best[covered as usize];
        if here == u32::MAX || covered == target {
            continue;
        }
        let first = (!covered & target).trailing_zeros();
        for &b in bicliques {
            if b >> first & 1 == 0 || (disjoint && b & covered != 0) {
                continue;
            }
            let next = (covered | b) as usize;
            best[next] = best[next].min(here + 1);
        }
    }
    best[target as usize]
}

fn biclique_number(g: &Graph, disjoint: bool) -> Result<u32, FormulaError> {
    let m = g.edge_count();
    cap("biclique cover", m, BICLIQUE_EDGE_CAP)?;
    if m == 0 {
        return Ok(0);
    }
    Ok(min_bicliques(&biclique_masks(g), full(m), disjoint))
}

/// Minimum number of complete bipartite subgraphs covering every edge;
/// `|E| <= 16`.
pub fn biclique_cover_number(g: &Graph) -> Result<u32, FormulaError> {
    biclique_number(g, false)
}

/// Minimum number of complete bipartite subgraphs partitioning the edges;
/// `|E| <= 16`.
pub fn biclique_partition_number(g: &Graph) -> Result<u32, FormulaError> {
    biclique_number(g, true)
}

/// Repeatedly lets any vertex with exactly one unfilled neighbor fill it.
fn skew_closure(adj: &[u32], mut filled: u32) -> u32 {
    loop {
        let before = filled;
        for &nbrs in adj {
            let open = nbrs & !filled;
            if open.count_ones() == 1 {
                filled |= open;
            }
        }
        if filled == before {
            return filled;
        }
    }
}

/// Minimum size of an initial set whose skew forcing closure is everything;
/// `n <= 20`.
pub fn skew_zero_forcing_number(g: &Graph) -> Result<u32, FormulaError> {
    let n = g.n();
    cap("skew zero forcing", n, SKEW_FORCING_CAP)?;
    let adj = masks(g);
    let all = full(n);
    for size in 0..=n as u32 {
        if size == 0 {
            if skew_closure(&adj, 0) == all {
                return Ok(0);
            }
            continue;
        }
        // Gosper's hack over all `size`-subsets.
        let mut s: u32 = (1 << size) - 1;
        while s <= all {
            if skew_closure(&adj, s) == all {
                return Ok(size);
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set is always forcing")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, star, tree_t8};

    #[test]
    fn cover_and_independence() {
        assert_eq!(vertex_cover_number(&path(4).unwrap()).unwrap(), 2);
        assert_eq!(independence_number(&tree_t8()).unwrap(), 5);
        assert_eq!(vertex_cover_number(&cycle(6).unwrap()).unwrap(), 3);
        assert_eq!(independence_number(&complete(5).unwrap()).unwrap(), 1);
        assert_eq!(independence_number(&Graph::edgeless(3).unwrap()).unwrap(), 3);
        assert!(matches!(
            independence_number(&path(25).unwrap()),
            Err(FormulaError::CapExceeded { size: 25, .. })
        ));
    }

    #[test]
    fn biclique_numbers() {
        assert_eq!(biclique_cover_number(&complete_bipartite(3, 3).unwrap()).unwrap(), 1);
        assert_eq!(biclique_cover_number(&path(4).unwrap()).unwrap(), 2);
        assert_eq!(biclique_cover_number(&star(5).unwrap()).unwrap(), 1);
        assert_eq!(biclique_cover_number(&complete(3).unwrap()).unwrap(), 2);
        assert_eq!(biclique_partition_number(&complete(3).unwrap()).unwrap(), 2);
        // Two overlapping 4-cycles cover K4, but a partition needs n - 1 = 3.
        assert_eq!(biclique_cover_number(&complete(4).unwrap()).unwrap(), 2);
        assert_eq!(biclique_partition_number(&complete(4).unwrap()).unwrap(), 3);
        assert_eq!(biclique_cover_number(&Graph::edgeless(3).unwrap()).unwrap(), 0);
    }

    #[test]
    fn skew_forcing() {
        assert_eq!(skew_zero_forcing_number(&path(4).unwrap()).unwrap(), 0);
        assert_eq!(skew_zero_forcing_number(&cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(skew_zero_forcing_number(&complete_bipartite(3, 4).unwrap()).unwrap(), 5);
        assert_eq!(skew_zero_forcing_number(&Graph::edgeless(2).unwrap()).unwrap(), 2);
    }
}
