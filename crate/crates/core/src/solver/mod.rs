//! Exact Grundy domination invariants.
//!
//! A sequence `(v_1, ..., v_k)` of distinct vertices is legal for a variant
//! when every step has a nonempty *footprint*:
//!
//! | variant | footprint of `v_i`                      |
//! |---------|-----------------------------------------|
//! | Total   | `N(v_i)  \ ⋃_{j<i} N(v_j)`               |
//! | Closed  | `N[v_i]  \ ⋃_{j<i} N[v_j]`               |
//! | Z       | `N(v_i)  \ ⋃_{j<i} N[v_j]`               |
//! | L       | `N[v_i]  \ ⋃_{j<i} N(v_j)`               |
//!
//! The invariant is the maximum length of a legal sequence. Isolated
//! vertices are never legal for Total and Z, so a graph whose vertices are
//! all isolated has Total value 0.

pub(crate) mod engine;
pub mod weighted;

pub use engine::SearchStats;
pub use weighted::{
    max_weighted_closed_sequence, optimal_weighted_sequences, sequence_stats, SequenceStats, StepCategory, StepWeights,
    WeightedResult,
};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use engine::{ChoiceSystem, RawChoice};
use std::fmt;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Default vertex-count cap for exhaustive search.
pub const DEFAULT_CAP: usize = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Total,
    Closed,
    Z,
    L,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Total, Variant::Closed, Variant::Z, Variant::L];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Total => "total",
            Variant::Closed => "closed",
            Variant::Z => "z",
            Variant::L => "l",
        }
    }

    /// The set whose uncovered part is the footprint of `v`.
    pub fn test_set(self, g: &Graph, v: usize) -> VertexSet {
        match self {
            Variant::Total | Variant::Z => g.neighbors(v).clone(),
            Variant::Closed | Variant::L => g.closed_neighbors(v),
        }
    }

    /// The set `v` contributes to the covered union.
    pub fn add_set(self, g: &Graph, v: usize) -> VertexSet {
        match self {
            Variant::Total | Variant::L => g.neighbors(v).clone(),
            Variant::Closed | Variant::Z => g.closed_neighbors(v),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "total" | "t" => Ok(Variant::Total),
            "closed" | "grundy" => Ok(Variant::Closed),
            "z" => Ok(Variant::Z),
            "l" => Ok(Variant::L),
            other => Err(format!("unknown variant '{other}' (expected total, closed, z or l)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("exact search refused: {n} vertices exceeds the search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("exact search refused: an independent component needs {size} bits, more than 128")]
    ComponentTooLarge { size: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { cap: DEFAULT_CAP }
    }
}

impl SolverConfig {
    pub fn with_cap(cap: usize) -> Self {
        SolverConfig { cap }
    }

    pub fn check(&self, n: usize) -> Result<(), SolveError> {
        if n > self.cap {
            Err(SolveError::CapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }
}

/// An ordered list of vertices together with the footprint of every step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSequence {
    pub vertices: Vec<usize>,
    pub footprints: Vec<VertexSet>,
}

impl VertexSequence {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IllegalReason {
    RepeatedVertex(usize),
    OutOfRange(usize),
    /// The step's footprint is empty.
    NothingNew(usize),
}

impl fmt::Display for IllegalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IllegalReason::RepeatedVertex(v) => write!(f, "repeated vertex {v}"),
            IllegalReason::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            IllegalReason::NothingNew(v) => write!(f, "vertex {v} footprints nothing"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Legality {
    Legal(VertexSequence),
    /// `step` is zero-based.
    Illegal {
        step: usize,
        reason: IllegalReason,
    },
}

impl Legality {
    pub fn is_legal(&self) -> bool {
        matches!(self, Legality::Legal(_))
    }

    pub fn into_sequence(self) -> Option<VertexSequence> {
        match self {
            Legality::Legal(s) => Some(s),
            Legality::Illegal { .. } => None,
        }
    }
}

/// Replays `seq` under `variant` step by step.
pub fn is_legal_sequence(g: &Graph, seq: &[usize], variant: Variant) -> Legality {
    let n = g.n();
    let mut covered = VertexSet::empty(n);
    let mut used = VertexSet::empty(n);
    let mut footprints = Vec::with_capacity(seq.len());
    for (step, &v) in seq.iter().enumerate() {
        if v >= n {
            return Legality::Illegal {
                step,
                reason: IllegalReason::OutOfRange(v),
            };
        }
        if used.contains(v) {
            return Legality::Illegal {
                step,
                reason: IllegalReason::RepeatedVertex(v),
            };
        }
        let footprint = variant.test_set(g, v).difference(&covered);
        if footprint.is_empty() {
            return Legality::Illegal {
                step,
                reason: IllegalReason::NothingNew(v),
            };
        }
        used.insert(v);
        covered.union_with(&variant.add_set(g, v));
        footprints.push(footprint);
    }
    Legality::Legal(VertexSequence {
        vertices: seq.to_vec(),
        footprints,
    })
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub variant: Variant,
    pub value: u32,
    pub witness: VertexSequence,
    pub stats: SearchStats,
    pub elapsed: Duration,
    /// Isolated vertices present; see the convention in the module docs.
    pub has_isolated_vertices: bool,
}

fn choice_system(g: &Graph, variant: Variant) -> ChoiceSystem {
    ChoiceSystem {
        choices: (0..g.n())
            .map(|v| RawChoice {
                id: v,
                test: variant.test_set(g, v),
                add: variant.add_set(g, v),
            })
            .collect(),
        track_used: variant == Variant::L,
    }
}

/// Computes the exact invariant with the default cap.
pub fn solve(g: &Graph, variant: Variant) -> Result<SolveResult, SolveError> {
    solve_with(g, variant, &SolverConfig::default())
}

pub fn solve_with(g: &Graph, variant: Variant, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    config.check(g.n())?;
    let start = Instant::now();
    let solution =
        engine::solve_system(&choice_system(g, variant)).map_err(|e| SolveError::ComponentTooLarge { size: e.size })?;
    let witness = is_legal_sequence(g, &solution.sequence, variant)
        .into_sequence()
        .expect("solver witness is legal");
    Ok(SolveResult {
        variant,
        value: solution.value,
        witness,
        stats: solution.stats,
        elapsed: start.elapsed(),
        has_isolated_vertices: g.has_isolated_vertices(),
    })
}
