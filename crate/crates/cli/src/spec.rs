//! The graph spec mini-language used on the command line.

use grundy_core::formulas::Family;
use grundy_core::graph::{complete, complete_bipartite, cycle, path, star, tree_t8};
use grundy_core::graph6::{from_graph6, to_graph6, Graph6Error};
use grundy_core::{Graph, GraphError};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use thiserror::Error;

pub const GRAMMAR: &str = "graph spec grammar:
  path:N          path on N vertices
  cycle:N         cycle on N vertices (N >= 3)
  complete:N      complete graph on N vertices
  star:N          star on N vertices
  bipartite:A,B   complete bipartite graph with parts of size A and B
  t8              the 8-vertex tree T8
  g6:LINE         a graph in graph6 format
  file:PATH       a graph6 file holding exactly one graph";

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("unknown graph spec '{0}'\n{GRAMMAR}")]
    Unknown(String),
    #[error("bad graph spec '{spec}': {message}\n{GRAMMAR}")]
    Malformed { spec: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{origin}: {source}")]
    Graph6 {
        origin: String,
        #[source]
        source: Graph6Error,
    },
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{} holds {count} graphs; file: specs need exactly one", path.display())]
    NotSingle { path: PathBuf, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Bipartite(usize, usize),
    T8,
    Graph6(String),
    File(PathBuf),
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Star(n) => write!(f, "star:{n}"),
            GraphSpec::Bipartite(a, b) => write!(f, "bipartite:{a},{b}"),
            GraphSpec::T8 => f.write_str("t8"),
            GraphSpec::Graph6(line) => write!(f, "g6:{line}"),
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("t8") {
            return Ok(GraphSpec::T8);
        }
        let Some((head, arg)) = s.split_once(':') else {
            return Err(SpecError::Unknown(s.to_string()));
        };
        let malformed = |message: String| SpecError::Malformed {
            spec: s.to_string(),
            message,
        };
        let number = |text: &str| {
            text.trim()
                .parse::<usize>()
                .map_err(|_| malformed(format!("'{text}' is not a nonnegative integer")))
        };
        match head.to_ascii_lowercase().as_str() {
            "path" => Ok(GraphSpec::Path(number(arg)?)),
            "cycle" => Ok(GraphSpec::Cycle(number(arg)?)),
            "complete" => Ok(GraphSpec::Complete(number(arg)?)),
            "star" => Ok(GraphSpec::Star(number(arg)?)),
            "bipartite" => {
                let (a, b) = arg
                    .split_once(',')
                    .ok_or_else(|| malformed("expected bipartite:A,B".into()))?;
                Ok(GraphSpec::Bipartite(number(a)?, number(b)?))
            }
            "g6" if !arg.is_empty() => Ok(GraphSpec::Graph6(arg.to_string())),
            "file" if !arg.is_empty() => Ok(GraphSpec::File(PathBuf::from(arg))),
            "g6" | "file" => Err(malformed("missing argument".into())),
            _ => Err(SpecError::Unknown(s.to_string())),
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, SpecError> {
        Ok(match self {
            GraphSpec::Path(n) => path(*n)?,
            GraphSpec::Cycle(n) => cycle(*n)?,
            GraphSpec::Complete(n) => complete(*n)?,
            GraphSpec::Star(n) => star(*n)?,
            GraphSpec::Bipartite(a, b) => complete_bipartite(*a, *b)?,
            GraphSpec::T8 => tree_t8(),
            GraphSpec::Graph6(line) => from_graph6(line).map_err(|source| SpecError::Graph6 {
                origin: format!("g6:{line}"),
                source,
            })?,
            GraphSpec::File(p) => {
                let mut graphs = read_graph6_file(p)?;
                if graphs.len() != 1 {
                    return Err(SpecError::NotSingle {
                        path: p.clone(),
                        count: graphs.len(),
                    });
                }
                graphs.pop().expect("one graph").1
            }
        })
    }

    /// The formula family this spec belongs to, if any.
    pub fn family(&self) -> Option<Family> {
        match *self {
            GraphSpec::Path(n) => Some(Family::Path(n)),
            GraphSpec::Cycle(n) => Some(Family::Cycle(n)),
            GraphSpec::Bipartite(a, b) => Some(Family::CompleteBipartite(a, b)),
            GraphSpec::Star(n) if n >= 2 => Some(Family::CompleteBipartite(1, n - 1)),
            _ => None,
        }
    }
}

/// A graph together with the spec it was built from.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub spec: GraphSpec,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn from_spec(spec: GraphSpec) -> Result<NamedGraph, SpecError> {
        let graph = spec.build()?;
        Ok(NamedGraph { spec, graph })
    }

    /// Names an anonymous graph by its graph6 line.
    pub fn anonymous(graph: Graph) -> NamedGraph {
        NamedGraph {
            spec: GraphSpec::Graph6(to_graph6(&graph)),
            graph,
        }
    }
}

/// Every graph in a graph6 file, one per nonblank line, with line numbers.
pub fn read_graph6_file(p: &Path) -> Result<Vec<(usize, Graph)>, SpecError> {
    let text = std::fs::read_to_string(p).map_err(|source| SpecError::Io {
        path: p.to_path_buf(),
        source,
    })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && l.trim() != ">>graph6<<")
        .map(|(i, l)| {
            from_graph6(l).map(|g| (i + 1, g)).map_err(|source| SpecError::Graph6 {
                origin: format!("{}:{}", p.display(), i + 1),
                source,
            })
        })
        .collect()
}
