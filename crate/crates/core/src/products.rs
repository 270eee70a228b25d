//! The four standard graph products.
//!
//! Product vertices are numbered row-major: `(g, h) -> g * n_h + h`.

use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Direct,
    Lexicographic,
    Strong,
    Cartesian,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Direct,
        ProductKind::Lexicographic,
        ProductKind::Strong,
        ProductKind::Cartesian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Direct => "direct",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Strong => "strong",
            ProductKind::Cartesian => "cartesian",
        }
    }

    fn adjacent(self, g: &Graph, h: &Graph, (g1, h1): (usize, usize), (g2, h2): (usize, usize)) -> bool {
        let ge = g.has_edge(g1, g2);
        let he = h.has_edge(h1, h2);
        match self {
            ProductKind::Direct => ge && he,
            ProductKind::Lexicographic => ge || (g1 == g2 && he),
            ProductKind::Strong => (ge && (h1 == h2 || he)) || (g1 == g2 && he),
            ProductKind::Cartesian => (ge && h1 == h2) || (g1 == g2 && he),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "direct" | "x" => Ok(ProductKind::Direct),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            "strong" => Ok(ProductKind::Strong),
            "cartesian" | "cart" => Ok(ProductKind::Cartesian),
            other => Err(format!(
                "unknown product '{other}' (expected direct, lexicographic, strong or cartesian)"
            )),
        }
    }
}

/// A coordinate slice of a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    /// The `G`-layer `G^h`: all vertices with second coordinate `h`.
    G(usize),
    /// The `H`-layer `^gH`: all vertices with first coordinate `g`.
    H(usize),
}

#[derive(Debug, Clone)]
pub struct ProductGraph {
    pub graph: Graph,
    pub n_g: usize,
    pub n_h: usize,
    pub kind: ProductKind,
}

impl ProductGraph {
    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.n_g && h < self.n_h);
        g * self.n_h + h
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.n_h, v % self.n_h)
    }

    pub fn layer(&self, which: Layer) -> Option<VertexSet> {
        let n = self.graph.n();
        match which {
            Layer::G(h) if h < self.n_h => Some(VertexSet::from_indices(n, (0..self.n_g).map(|g| self.index(g, h)))),
            Layer::H(g) if g < self.n_g => Some(VertexSet::from_indices(n, (0..self.n_h).map(|h| self.index(g, h)))),
            _ => None,
        }
    }
}

/// Builds `g * h` for the given product kind.
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
    let (n_g, n_h) = (g.n(), h.n());
    let n = n_g * n_h;
    let mut edges = Vec::new();
    for a in 0..n {
        let pa = (a / n_h, a % n_h);
        for b in a + 1..n {
            let pb = (b / n_h, b % n_h);
            if kind.adjacent(g, h, pa, pb) {
                edges.push((a, b));
            }
        }
    }
    let labels = (0..n)
        .map(|v| {
            let (x, y) = (v / n_h, v % n_h);
            let lx = g.label(x).map_or_else(|| x.to_string(), str::to_string);
            let ly = h.label(y).map_or_else(|| y.to_string(), str::to_string);
            format!("({lx},{ly})")
        })
        .collect();
    let graph = Graph::from_edges(n, edges)?.with_labels(labels)?;
    Ok(ProductGraph { graph, n_g, n_h, kind })
}

pub fn direct(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
    product(ProductKind::Direct, g, h)
}

pub fn lexicographic(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
    product(ProductKind::Lexicographic, g, h)
}

pub fn strong(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
    product(ProductKind::Strong, g, h)
}

pub fn cartesian(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
    product(ProductKind::Cartesian, g, h)
}
