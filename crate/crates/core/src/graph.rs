//! Simple undirected loop-free graphs stored as neighborhood bitmasks.

use crate::vertex_set::VertexSet;
use thiserror::Error;

/// Largest vertex count accepted by constructors and the graph6 reader.
pub const CAPACITY: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{family} requires {requirement}, got {got}")]
    BadSize {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("vertex count {0} exceeds capacity {CAPACITY}")]
    TooLarge(usize),
    #[error("edge ({0}, {1}) is out of range for {2} vertices")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("loop at vertex {0} is not supported")]
    Loop(usize),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
}

/// An undirected graph without loops or parallel edges.
///
/// `adj[v]` is the open neighborhood `N(v)`; closed neighborhoods are
/// derived on demand. Graphs are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n > CAPACITY {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::empty(n); n],
            labels: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Attaches per-vertex labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                n: self.n(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.iter().any(VertexSet::is_empty)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Checks symmetry, absence of loops and that every neighborhood stays in range.
    pub fn check_invariants(&self) -> bool {
        let all = self.vertex_set();
        (0..self.n()).all(|v| {
            !self.adj[v].contains(v)
                && self.adj[v].is_subset(&all)
                && self.adj[v].iter().all(|u| self.adj[u].contains(v))
        })
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n());
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(self.n(), start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for u in self.adj[v].iter() {
                    if !comp.contains(u) {
                        comp.insert(u);
                        frontier.push(u);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// A proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n()];
        for start in 0..self.n() {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.adj[v].iter() {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The subgraph induced by `keep`, with vertices renumbered in increasing order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let order: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let m = order.len();
        let adj = order
            .iter()
            .map(|&v| {
                VertexSet::from_indices(
                    m,
                    self.adj[v].iter().filter(|&u| index[u] != usize::MAX).map(|u| index[u]),
                )
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| order.iter().map(|&v| l[v].clone()).collect());
        Graph { adj, labels }
    }

    /// The graph formed by a set of edges: its vertices are the endpoints,
    /// renumbered in increasing order of their index in `self`.
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> Graph {
        let mut ends = VertexSet::empty(self.n());
        for &(u, v) in edges {
            ends.insert(u);
            ends.insert(v);
        }
        let order: Vec<usize> = ends.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        Graph::from_edges(order.len(), edges.iter().map(|&(u, v)| (index[u], index[v])))
            .expect("edges of an existing graph")
    }

    /// Deletes one vertex of a pair with equal open neighborhoods until no
    /// such pair remains. The lower-indexed vertex of each pair is kept.
    pub fn remove_open_twins(&self) -> Graph {
        let mut keep = self.vertex_set();
        loop {
            let alive: Vec<usize> = keep.iter().collect();
            let mut victim = None;
            'outer: for (i, &a) in alive.iter().enumerate() {
                let na = self.adj[a].intersection(&keep);
                for &b in &alive[i + 1..] {
                    if self.adj[b].intersection(&keep) == na {
                        victim = Some(b);
                        break 'outer;
                    }
                }
            }
            match victim {
                Some(b) => keep.remove(b),
                None => break,
            }
        }
        self.induced_subgraph(&keep)
    }
}

/// Path `P_n` with vertices numbered along the path.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadSize {
            family: "path",
            requirement: "n >= 1",
            got: n,
        });
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle `C_n` numbered cyclically.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadSize {
            family: "cycle",
            requirement: "n >= 3",
            got: n,
        });
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadSize {
            family: "complete",
            requirement: "n >= 1",
            got: n,
        });
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a < 1 || b < 1 {
        return Err(GraphError::BadSize {
            family: "complete_bipartite",
            requirement: "a, b >= 1",
            got: a.min(b),
        });
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Star on `n` vertices with center 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadSize {
            family: "star",
            requirement: "n >= 1",
            got: n,
        });
    }
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

/// The 8-vertex tree with a distinguished leaf `u` (vertex 0) attached to
/// `v` (vertex 1); `v` has two further neighbors, each carrying two leaves.
pub fn tree_t8() -> Graph {
    let edges = [(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)];
    let labels = ["u", "v", "x", "y", "x1", "x2", "y1", "y2"];
    Graph::from_edges(8, edges)
        .and_then(|g| g.with_labels(labels.iter().map(|s| s.to_string()).collect()))
        .expect("fixed tree")
}

/// Tries to find an isomorphism `g -> h` by backtracking with degree and
/// adjacency consistency checks.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let n = g.n();
    // Visit g in BFS order so each new vertex has mapped neighbors early.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for comp in g.components() {
        let start = comp.first().unwrap();
        seen[start] = true;
        let mut q = std::collections::VecDeque::from([start]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for u in g.neighbors(v).iter() {
                if !seen[u] {
                    seen[u] = true;
                    q.push_back(u);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..h.n() {
            if used[w] || h.degree(w) != g.degree(v) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(g, h, order, depth + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    extend(g, h, &order, 0, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}
