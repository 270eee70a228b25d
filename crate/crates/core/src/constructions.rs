//! Explicit witness sequences certifying lower bounds on the Grundy total
//! domination number of graph products.
//!
//! Every bundle is replayed through [`is_legal_sequence`] before it is
//! returned, so a bundle's length is a certified lower bound regardless of
//! how the sequence was produced.

use crate::graph::{cycle, path, Graph, GraphError};
use crate::products::{self, ProductGraph, ProductKind};
use crate::solver::{
    is_legal_sequence, max_weighted_closed_sequence, optimal_weighted_sequences, sequence_stats, solve_with, Legality,
    SolveError, SolverConfig, StepWeights, Variant, VertexSequence,
};
use std::fmt;
use thiserror::Error;

/// Which factor a sequence lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    G,
    H,
}

impl Factor {
    fn other(self) -> Factor {
        match self {
            Factor::G => Factor::H,
            Factor::H => Factor::G,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessSource {
    /// Row-major interleaving of two total sequences in `G x H`.
    DirectInterleave,
    /// A closed sequence of `G` with isolated steps expanded into a copy of
    /// an `H`-sequence.
    Lexicographic(Variant),
    /// Strong product: closed sequence `D` in `dominating`, with blocks of
    /// weight `grundy + 1`, `grundy`, or `total` by the step's footprint type.
    StrongFootprint { dominating: Factor },
    /// Strong product: closed sequence `D` in `dominating`, with isolated
    /// steps expanded into a total sequence and the rest into a closed one.
    StrongIsolated { dominating: Factor },
    /// Prefix of the row-major vertex order of a Cartesian grid.
    CartesianLex,
    /// Prefix of the column-major vertex order of a Cartesian grid.
    CartesianAntilex,
}

impl fmt::Display for WitnessSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |d: &Factor| match d {
            Factor::G => "g",
            Factor::H => "h",
        };
        match self {
            WitnessSource::DirectInterleave => f.write_str("direct-interleave"),
            WitnessSource::Lexicographic(v) => write!(f, "lexicographic-{v}"),
            WitnessSource::StrongFootprint { dominating } => write!(f, "strong-footprint-d-in-{}", side(dominating)),
            WitnessSource::StrongIsolated { dominating } => write!(f, "strong-isolated-d-in-{}", side(dominating)),
            WitnessSource::CartesianLex => f.write_str("cartesian-lex-prefix"),
            WitnessSource::CartesianAntilex => f.write_str("cartesian-antilex-prefix"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct WitnessBundle {
    pub product: ProductGraph,
    pub sequence: VertexSequence,
    pub claimed_length: usize,
    pub source: WitnessSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("input {what} is not a legal {variant} sequence: {legality:?}")]
    IllegalInput {
        what: &'static str,
        variant: Variant,
        legality: Legality,
    },
    #[error("{factor:?} has isolated vertices, which the construction does not allow")]
    IsolatedVertices { factor: Factor },
    #[error("{param} = {value} is out of range (needs {requirement})")]
    OutOfRange {
        param: &'static str,
        value: usize,
        requirement: &'static str,
    },
    #[error("variant {0} has no lexicographic construction (use total or l)")]
    UnsupportedVariant(Variant),
    #[error("no closed sequence of {factor:?} whose last step footprints another vertex yields a legal block")]
    NoSuitableGrundySequence { factor: Factor },
    /// The assembled sequence failed the legality replay.
    #[error("{construction} construction produced an illegal sequence: {legality:?}")]
    Illegal {
        construction: WitnessSource,
        legality: Legality,
    },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check_input(g: &Graph, seq: &[usize], variant: Variant, what: &'static str) -> Result<(), ConstructionError> {
    match is_legal_sequence(g, seq, variant) {
        Legality::Legal(_) => Ok(()),
        legality => Err(ConstructionError::IllegalInput {
            what,
            variant,
            legality,
        }),
    }
}

fn certify(
    product: ProductGraph,
    seq: Vec<usize>,
    variant: Variant,
    source: WitnessSource,
) -> Result<WitnessBundle, ConstructionError> {
    match is_legal_sequence(&product.graph, &seq, variant) {
        Legality::Legal(sequence) => Ok(WitnessBundle {
            claimed_length: sequence.len(),
            product,
            sequence,
            source,
        }),
        legality => Err(ConstructionError::Illegal {
            construction: source,
            legality,
        }),
    }
}

/// `(x_1, y_1), (x_1, y_2), ..., (x_k, y_l)` for total sequences `sg`, `sh`.
pub fn direct_product_witness(
    g: &Graph,
    h: &Graph,
    sg: &[usize],
    sh: &[usize],
) -> Result<WitnessBundle, ConstructionError> {
    check_input(g, sg, Variant::Total, "g-sequence")?;
    check_input(h, sh, Variant::Total, "h-sequence")?;
    let product = products::direct(g, h)?;
    let seq = sg
        .iter()
        .flat_map(|&x| sh.iter().map(move |&y| (x, y)))
        .map(|(x, y)| product.index(x, y))
        .collect();
    certify(product, seq, Variant::Total, WitnessSource::DirectInterleave)
}

/// Lifts a closed sequence `d` of `g` to `g ∘ h`. Steps of `d` adjacent to
/// no earlier step expand into `sh` inside their `H`-layer; every other step
/// contributes one vertex. `variant` is Total or L and `sh` must be legal
/// for it in `h`. The result has length `a(d) * (|sh| - 1) + |d|`.
pub fn lexicographic_witness(
    g: &Graph,
    h: &Graph,
    d: &[usize],
    sh: &[usize],
    variant: Variant,
) -> Result<WitnessBundle, ConstructionError> {
    if !matches!(variant, Variant::Total | Variant::L) {
        return Err(ConstructionError::UnsupportedVariant(variant));
    }
    if h.has_isolated_vertices() {
        return Err(ConstructionError::IsolatedVertices { factor: Factor::H });
    }
    if h.n() == 0 {
        return Err(ConstructionError::OutOfRange {
            param: "|V(h)|",
            value: 0,
            requirement: ">= 1",
        });
    }
    check_input(g, d, Variant::Closed, "dominating sequence")?;
    check_input(h, sh, variant, "h-sequence")?;
    let product = products::lexicographic(g, h)?;
    let mut chosen = crate::VertexSet::empty(g.n());
    let mut seq = Vec::new();
    for &x in d {
        if g.neighbors(x).is_disjoint(&chosen) {
            seq.extend(sh.iter().map(|&y| product.index(x, y)));
        } else {
            seq.push(product.index(x, 0));
        }
        chosen.insert(x);
    }
    let stats = sequence_stats(g, d).expect("checked above");
    let claimed = stats.a as usize * (sh.len().max(1) - 1) + d.len();
    let bundle = certify(product, seq, variant, WitnessSource::Lexicographic(variant))?;
    debug_assert_eq!(bundle.claimed_length, claimed);
    Ok(bundle)
}

/// The lexicographic witness for the best closed sequence of `g`, using
/// solver-optimal sequences of `h`.
pub fn best_lexicographic_witness(
    g: &Graph,
    h: &Graph,
    variant: Variant,
    config: &SolverConfig,
) -> Result<WitnessBundle, ConstructionError> {
    if h.has_isolated_vertices() {
        return Err(ConstructionError::IsolatedVertices { factor: Factor::H });
    }
    let sh = solve_with(h, variant, config)?.witness.vertices;
    let weights = StepWeights::lexicographic(sh.len() as u32);
    let d = max_weighted_closed_sequence(g, &weights, config)?.witness.vertices;
    lexicographic_witness(g, h, &d, &sh, variant)
}

/// Blocks laid out in one factor for a closed sequence `d` of the other.
struct StrongLayout<'a> {
    product: &'a ProductGraph,
    /// The factor holding `d`; blocks live in the other one.
    dominating: Factor,
}

impl StrongLayout<'_> {
    fn vertex(&self, block: usize, step: usize) -> usize {
        match self.dominating {
            Factor::H => self.product.index(block, step),
            Factor::G => self.product.index(step, block),
        }
    }

    fn extend(&self, seq: &mut Vec<usize>, block: &[usize], step: usize) {
        seq.extend(block.iter().map(|&b| self.vertex(b, step)));
    }
}

fn factors<'a>(g: &'a Graph, h: &'a Graph, dominating: Factor) -> (&'a Graph, &'a Graph) {
    match dominating {
        Factor::H => (h, g),
        Factor::G => (g, h),
    }
}

/// Footprint-type construction: `d` is a closed sequence in the
/// `dominating` factor `D`, blocks come from the other factor `B`. A step
/// footprinting itself and a neighbor gets `(x_1..x_{l-1}, x, x_l)`, a step
/// footprinting only neighbors gets a maximum closed sequence
/// `(x_1..x_l)` of `B`, and the remaining steps get a maximum total
/// sequence of `B`. Here `x != x_l` is footprinted by `x_l`; several maximum
/// closed sequences of `B` are tried until the block is legal.
fn strong_footprint_witness(
    g: &Graph,
    h: &Graph,
    dominating: Factor,
    config: &SolverConfig,
) -> Result<WitnessBundle, ConstructionError> {
    let (dom, blocks) = factors(g, h, dominating);
    if blocks.has_isolated_vertices() {
        return Err(ConstructionError::IsolatedVertices {
            factor: dominating.other(),
        });
    }
    let product = products::strong(g, h)?;
    let grundy = solve_with(blocks, Variant::Closed, config)?;
    let total = solve_with(blocks, Variant::Total, config)?.witness.vertices;
    let weights = StepWeights::strong_footprint(grundy.value, total.len() as u32);
    let best = max_weighted_closed_sequence(dom, &weights, config)?;
    let d = best.witness.vertices;
    let layout = StrongLayout {
        product: &product,
        dominating,
    };
    let source = WitnessSource::StrongFootprint { dominating };

    let mut candidates = vec![grundy.witness.vertices];
    candidates.extend(optimal_weighted_sequences(
        blocks,
        &StepWeights::uniform(1),
        config,
        256,
    )?);
    let mut last_failure = None;
    for xs in &candidates {
        let Some((&last, init)) = xs.split_last() else {
            continue;
        };
        let Legality::Legal(replay) = is_legal_sequence(blocks, xs, Variant::Closed) else {
            continue;
        };
        let footprint = replay.footprints.last().expect("nonempty");
        for x in footprint.iter().filter(|&x| x != last) {
            let mut seq = Vec::new();
            let mut closed_cov = crate::VertexSet::empty(dom.n());
            for &y in &d {
                let self_new = !closed_cov.contains(y);
                let nbr_new = !dom.neighbors(y).is_subset(&closed_cov);
                if self_new && nbr_new {
                    layout.extend(&mut seq, init, y);
                    layout.extend(&mut seq, &[x, last], y);
                } else if nbr_new {
                    layout.extend(&mut seq, xs, y);
                } else {
                    layout.extend(&mut seq, &total, y);
                }
                closed_cov.union_with(&dom.closed_neighbors(y));
            }
            match certify(product.clone(), seq, Variant::Total, source) {
                Ok(bundle) => {
                    debug_assert_eq!(bundle.claimed_length, best.value as usize);
                    return Ok(bundle);
                }
                Err(e) => last_failure = Some(e),
            }
        }
    }
    Err(last_failure.unwrap_or(ConstructionError::NoSuitableGrundySequence {
        factor: dominating.other(),
    }))
}

/// Isolation-type construction: steps of `d` adjacent to no earlier step get
/// a maximum total sequence of the block factor, all others a maximum closed
/// sequence.
fn strong_isolated_witness(
    g: &Graph,
    h: &Graph,
    dominating: Factor,
    config: &SolverConfig,
) -> Result<WitnessBundle, ConstructionError> {
    let (dom, blocks) = factors(g, h, dominating);
    let product = products::strong(g, h)?;
    let grundy = solve_with(blocks, Variant::Closed, config)?.witness.vertices;
    let total = solve_with(blocks, Variant::Total, config)?.witness.vertices;
    let weights = StepWeights::strong_isolated(total.len() as u32, grundy.len() as u32);
    let best = max_weighted_closed_sequence(dom, &weights, config)?;
    let layout = StrongLayout {
        product: &product,
        dominating,
    };
    let mut seq = Vec::new();
    let mut chosen = crate::VertexSet::empty(dom.n());
    for &y in &best.witness.vertices {
        let block = if dom.neighbors(y).is_disjoint(&chosen) {
            &total
        } else {
            &grundy
        };
        layout.extend(&mut seq, block, y);
        chosen.insert(y);
    }
    let bundle = certify(
        product,
        seq,
        Variant::Total,
        WitnessSource::StrongIsolated { dominating },
    )?;
    debug_assert_eq!(bundle.claimed_length, best.value as usize);
    Ok(bundle)
}

/// All applicable strong-product constructions, in the order
/// footprint-type (d in H, then d in G) and isolation-type (d in H, then d
/// in G). Footprint-type constructions whose block factor has isolated
/// vertices are skipped. Use [`best_bundle`] to pick the longest.
pub fn strong_witnesses(g: &Graph, h: &Graph, config: &SolverConfig) -> Result<Vec<WitnessBundle>, ConstructionError> {
    let mut out = Vec::with_capacity(4);
    for dominating in [Factor::H, Factor::G] {
        match strong_footprint_witness(g, h, dominating, config) {
            Ok(b) => out.push(b),
            Err(ConstructionError::IsolatedVertices { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    for dominating in [Factor::H, Factor::G] {
        out.push(strong_isolated_witness(g, h, dominating, config)?);
    }
    Ok(out)
}

/// The longest bundle, earliest on ties.
pub fn best_bundle(bundles: &[WitnessBundle]) -> Option<&WitnessBundle> {
    bundles.iter().rev().max_by_key(|b| b.claimed_length)
}

/// Path/cycle factor pairs for Cartesian grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridKind {
    /// `P_k □ P_l`
    PP,
    /// `P_k □ C_l`
    PC,
    /// `C_k □ C_l`
    CC,
}

impl std::str::FromStr for GridKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "PP" => Ok(GridKind::PP),
            "PC" => Ok(GridKind::PC),
            "CC" => Ok(GridKind::CC),
            other => Err(format!("unknown grid kind '{other}' (expected PP, PC or CC)")),
        }
    }
}

/// The longer of two legal prefixes of the row-major and column-major
/// vertex orders of the grid, of length `kl - min{k, l}` (PP),
/// `kl - min{2k, l}` (PC) or `kl - min{2k, 2l}` (CC).
pub fn cartesian_witness(kind: GridKind, k: usize, l: usize) -> Result<WitnessBundle, ConstructionError> {
    for (param, value) in [("k", k), ("l", l)] {
        if value < 3 {
            return Err(ConstructionError::OutOfRange {
                param,
                value,
                requirement: ">= 3",
            });
        }
    }
    let (x, x_cycle) = match kind {
        GridKind::PP | GridKind::PC => (path(k)?, false),
        GridKind::CC => (cycle(k)?, true),
    };
    let (y, y_cycle) = match kind {
        GridKind::PP => (path(l)?, false),
        GridKind::PC | GridKind::CC => (cycle(l)?, true),
    };
    let product = products::product(ProductKind::Cartesian, &x, &y)?;
    let lex_len = (k - if x_cycle { 2 } else { 1 }) * l;
    let antilex_len = (l - if y_cycle { 2 } else { 1 }) * k;
    let (seq, source) = if lex_len >= antilex_len {
        ((0..lex_len).collect(), WitnessSource::CartesianLex)
    } else {
        let order = (0..l).flat_map(|b| (0..k).map(move |a| (a, b)));
        (
            order.take(antilex_len).map(|(a, b)| product.index(a, b)).collect(),
            WitnessSource::CartesianAntilex,
        )
    };
    certify(product, seq, Variant::Total, source)
}
