//! Grundy edge-cover sequences on hypergraphs.
//!
//! A sequence of hyperedges is legal when each edge contains a ground
//! element outside the union of its predecessors; `rho_gr` is the maximum
//! legal length. Open (closed) neighborhood hypergraphs of a graph turn this
//! into the Total (Closed) Grundy domination number.
//!
//! A hypergraph is a choice system whose test and add sets are both the
//! edge, so `rho_gr` runs on the same reduced search as the graph solver.

use crate::graph::Graph;
use crate::solver::engine::{solve_system, ChoiceSystem, RawChoice};
use crate::solver::{SearchStats, SolveError};
use crate::vertex_set::VertexSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ground: usize,
    edges: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edge {edge} contains element {element} outside the ground set of size {ground}")]
    OutOfGround { edge: usize, element: usize, ground: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone)]
pub struct RhoResult {
    pub value: u32,
    /// Edge indices in sequence order.
    pub witness: Vec<usize>,
    pub stats: SearchStats,
}

impl Hypergraph {
    pub fn new(ground: usize, edges: Vec<VertexSet>) -> Result<Hypergraph, HypergraphError> {
        for (i, e) in edges.iter().enumerate() {
            if let Some(x) = e.iter().find(|&x| x >= ground) {
                return Err(HypergraphError::OutOfGround {
                    edge: i,
                    element: x,
                    ground,
                });
            }
        }
        Ok(Hypergraph { ground, edges })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// True when the edges cover every ground element.
    pub fn covers_ground(&self) -> bool {
        let mut u = VertexSet::empty(self.ground);
        for e in &self.edges {
            u.union_with(e);
        }
        u.len() == self.ground
    }

    /// Parses the text format: a line `m k`, then `k` lines of
    /// space-separated ground indices (an empty line is an empty edge).
    pub fn parse(text: &str) -> Result<Hypergraph, HypergraphError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(HypergraphError::Parse {
            line: 1,
            message: "missing 'm k' header".into(),
        })?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parse_num = |s: &str, line: usize| {
            s.parse::<usize>().map_err(|_| HypergraphError::Parse {
                line,
                message: format!("'{s}' is not a nonnegative integer"),
            })
        };
        if nums.len() != 2 {
            return Err(HypergraphError::Parse {
                line: 1,
                message: "header must be 'm k'".into(),
            });
        }
        let ground = parse_num(nums[0], 1)?;
        let count = parse_num(nums[1], 1)?;
        let mut edges = Vec::with_capacity(count);
        for i in 0..count {
            let line_no = i + 2;
            let line = lines.next().ok_or(HypergraphError::Parse {
                line: line_no,
                message: format!("expected {count} edge lines, found {i}"),
            })?;
            let mut e = VertexSet::empty(ground);
            for tok in line.split_whitespace() {
                let x = parse_num(tok, line_no)?;
                if x >= ground {
                    return Err(HypergraphError::Parse {
                        line: line_no,
                        message: format!("element {x} outside ground set of size {ground}"),
                    });
                }
                e.insert(x);
            }
            edges.push(e);
        }
        if let Some((offset, extra)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
            return Err(HypergraphError::Parse {
                line: count + 2 + offset,
                message: format!("unexpected trailing content '{extra}'"),
            });
        }
        Hypergraph::new(ground, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.ground, self.edges.len());
        for e in &self.edges {
            let items: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", items.join(" ")).expect("write to string");
        }
        out
    }
}

/// Edges `N(v)` (or `N[v]` when `closed`) in vertex order, over ground `V(G)`.
pub fn neighborhood_hypergraph(g: &Graph, closed: bool) -> Hypergraph {
    let edges = (0..g.n())
        .map(|v| {
            if closed {
                g.closed_neighbors(v)
            } else {
                g.neighbors(v).clone()
            }
        })
        .collect();
    Hypergraph { ground: g.n(), edges }
}

/// Edges `E1 x E2` for every pair, row-major over both the ground set
/// (`(a, b) -> a * m2 + b`) and the edge list.
pub fn hypergraph_product(h1: &Hypergraph, h2: &Hypergraph) -> Hypergraph {
    let m2 = h2.ground;
    let ground = h1.ground * m2;
    let mut edges = Vec::with_capacity(h1.edges.len() * h2.edges.len());
    for e1 in &h1.edges {
        for e2 in &h2.edges {
            edges.push(VertexSet::from_indices(
                ground,
                e1.iter().flat_map(|a| e2.iter().map(move |b| a * m2 + b)),
            ));
        }
    }
    Hypergraph { ground, edges }
}

/// Bipartite incidence graph: vertices `0..m` are ground elements, vertex
/// `m + i` is edge `i`, joined to the elements it contains.
pub fn incidence_bipartite(h: &Hypergraph) -> Graph {
    let m = h.ground;
    let edges = h
        .edges
        .iter()
        .enumerate()
        .flat_map(|(i, e)| e.iter().map(move |x| (x, m + i)));
    Graph::from_edges(m + h.edges.len(), edges).expect("incidence edges are in range")
}

/// Exact maximum length of a legal edge sequence. Empty edges are never
/// legal; ground elements outside every edge are simply never covered.
pub fn rho_gr(h: &Hypergraph) -> Result<RhoResult, SolveError> {
    let system = ChoiceSystem {
        choices: h
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| RawChoice {
                id,
                test: e.clone(),
                add: e.clone(),
            })
            .collect(),
        track_used: false,
    };
    let solution = solve_system(&system).map_err(|e| SolveError::ComponentTooLarge { size: e.size })?;
    debug_assert!(is_legal_edge_sequence(h, &solution.sequence));
    Ok(RhoResult {
        value: solution.value,
        witness: solution.sequence,
        stats: solution.stats,
    })
}

/// Checks an edge sequence for legality.
pub fn is_legal_edge_sequence(h: &Hypergraph, seq: &[usize]) -> bool {
    let mut covered = VertexSet::empty(h.ground);
    let mut seen = VertexSet::empty(h.edges.len());
    for &i in seq {
        if i >= h.edges.len() || seen.contains(i) || h.edges[i].is_subset(&covered) {
            return false;
        }
        seen.insert(i);
        covered.union_with(&h.edges[i]);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn hg(ground: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(
            ground,
            edges
                .iter()
                .map(|e| VertexSet::from_indices(ground, e.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_rho_values() {
        assert_eq!(
            rho_gr(&neighborhood_hypergraph(&path(4).unwrap(), false))
                .unwrap()
                .value,
            4
        );
        assert_eq!(rho_gr(&hg(2, &[&[0, 1]])).unwrap().value, 1);
        let chain = rho_gr(&hg(3, &[&[0], &[0, 1], &[0, 1, 2]])).unwrap();
        assert_eq!(chain.value, 3);
        assert_eq!(chain.witness, vec![0, 1, 2]);
        assert_eq!(rho_gr(&hg(3, &[&[], &[]])).unwrap().value, 0);
    }

    #[test]
    fn neighborhood_edges() {
        let k2 = complete(2).unwrap();
        let open = neighborhood_hypergraph(&k2, false);
        assert_eq!(
            open.edges(),
            &[VertexSet::from_indices(2, [1]), VertexSet::from_indices(2, [0])]
        );
        let closed = neighborhood_hypergraph(&k2, true);
        assert!(closed.edges().iter().all(|e| e.len() == 2));
        let c5 = neighborhood_hypergraph(&cycle(5).unwrap(), false);
        assert_eq!(c5.edges().len(), 5);
        assert!(c5.edges().iter().all(|e| e.len() == 2));
    }

    #[test]
    fn product_of_single_edges() {
        let e = hg(2, &[&[0, 1]]);
        let p = hypergraph_product(&e, &e);
        assert_eq!(p.ground(), 4);
        assert_eq!(p.edges().len(), 1);
        assert_eq!(p.edges()[0].len(), 4);
        let with_empty = hypergraph_product(&hg(2, &[&[0], &[]]), &e);
        assert_eq!(with_empty.edges().len(), 2);
        assert!(with_empty.edges()[1].is_empty());
    }

    #[test]
    fn incidence_graphs() {
        assert_eq!(incidence_bipartite(&hg(2, &[&[0, 1]])).edges(), vec![(0, 2), (1, 2)]);
        let two = incidence_bipartite(&hg(2, &[&[0], &[1]]));
        assert_eq!(two.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn text_format() {
        let h = hg(4, &[&[0, 2], &[], &[3]]);
        let text = h.to_text();
        assert_eq!(text, "4 3\n0 2\n\n3\n");
        assert_eq!(Hypergraph::parse(&text).unwrap(), h);
        assert!(matches!(
            Hypergraph::parse("2 1\n5\n"),
            Err(HypergraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Hypergraph::parse("2 2\n0\n"),
            Err(HypergraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Hypergraph::parse("x 1\n"),
            Err(HypergraphError::Parse { line: 1, .. })
        ));
        assert!(Hypergraph::parse("").is_err());
    }

    #[test]
    fn legality_of_edge_sequences() {
        let h = hg(3, &[&[0], &[0, 1], &[0, 1, 2]]);
        assert!(is_legal_edge_sequence(&h, &[0, 1, 2]));
        assert!(!is_legal_edge_sequence(&h, &[2, 0]));
        assert!(!is_legal_edge_sequence(&h, &[0, 0]));
    }
}
