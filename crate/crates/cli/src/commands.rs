//! The work behind each subcommand. Every function returns records; the
//! binary decides how to print them.

use crate::record::{Input, PartitionCheck, Predicted, Record, Status, Summary, Witness};
use crate::spec::{read_graph6_file, GraphSpec, NamedGraph};
use anyhow::{bail, Context, Result};
use grundy_core::constructions::{
    best_bundle, best_lexicographic_witness, cartesian_witness, direct_product_witness, strong_witnesses, GridKind,
    WitnessBundle,
};
use grundy_core::enumerate::{enumerate_connected, enumerate_connected_bipartite};
use grundy_core::formulas::{predict, Family, Prediction};
use grundy_core::graph6::to_graph6;
use grundy_core::hypergraph::{hypergraph_product, incidence_bipartite, neighborhood_hypergraph, rho_gr, Hypergraph};
use grundy_core::products::{self, ProductGraph};
use grundy_core::solver::is_legal_sequence;
use grundy_core::{solve_with, Graph, ProductKind, SolverConfig, Variant};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub cap: usize,
    /// Include witness sequences in the records.
    pub emit_witness: bool,
    /// Record wall-clock time; records are then no longer byte-identical
    /// across runs.
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cap: grundy_core::solver::DEFAULT_CAP,
            emit_witness: false,
            timing: false,
        }
    }
}

impl Options {
    pub fn config(&self) -> SolverConfig {
        SolverConfig::with_cap(self.cap)
    }

    fn stamp(&self, rec: &mut Record, start: Instant) {
        if self.timing {
            rec.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
    }
}

/// Exact value of one invariant. Cap refusals are errors here.
pub fn invariant(g: &NamedGraph, variant: Variant, opts: &Options) -> Result<Record> {
    let start = Instant::now();
    let r = solve_with(&g.graph, variant, &opts.config())?;
    let mut rec = Record::new("invariant");
    rec.inputs.push(Input::new("g", g));
    rec.variant = Some(variant.name().to_string());
    rec.n = Some(g.graph.n());
    rec.value = Some(r.value);
    if opts.emit_witness {
        rec.witness = Some(Witness {
            source: "solver".into(),
            length: r.witness.len(),
            vertices: Some(r.witness.vertices),
            coords: None,
        });
    }
    opts.stamp(&mut rec, start);
    Ok(rec)
}

fn pairs(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(u, v)| [u, v]).collect()
}

/// Splits the edges of `g` into two random nonempty parts `splits` times
/// and checks `value(G) <= value(G_1) + value(G_2)` for every variant.
pub fn partition_checks(g: &NamedGraph, seed: u64, splits: usize, opts: &Options) -> Result<Vec<Record>> {
    let edges = g.graph.edges();
    if edges.len() < 2 {
        bail!(
            "an edge partition needs at least two edges; {} has {}",
            g.spec,
            edges.len()
        );
    }
    let config = opts.config();
    let values = |h: &Graph| -> Result<Vec<u32>> {
        Variant::ALL
            .iter()
            .map(|&v| Ok(solve_with(h, v, &config)?.value))
            .collect()
    };
    let whole = values(&g.graph)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(splits);
    for _ in 0..splits {
        let start = Instant::now();
        let mut shuffled = edges.clone();
        shuffled.shuffle(&mut rng);
        let cut = rng.gen_range(1..shuffled.len());
        let (e1, e2) = shuffled.split_at(cut);
        let (mut e1, mut e2) = (e1.to_vec(), e2.to_vec());
        e1.sort_unstable();
        e2.sort_unstable();
        let first = values(&g.graph.edge_subgraph(&e1))?;
        let second = values(&g.graph.edge_subgraph(&e2))?;
        let mut rec = Record::new("partition");
        rec.inputs.push(Input::new("g", g));
        rec.n = Some(g.graph.n());
        let holds = (0..4).all(|i| whole[i] <= first[i] + second[i]);
        rec.status = if holds { Status::Ok } else { Status::Violation };
        rec.partition = Some(PartitionCheck {
            first: pairs(&e1),
            second: pairs(&e2),
            values: Variant::ALL
                .iter()
                .enumerate()
                .map(|(i, v)| (v.name().to_string(), whole[i], first[i], second[i]))
                .collect(),
        });
        opts.stamp(&mut rec, start);
        out.push(rec);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ProductFlags {
    pub solve: bool,
    pub predict: bool,
    pub witness: bool,
}

impl ProductFlags {
    pub const ALL: ProductFlags = ProductFlags {
        solve: true,
        predict: true,
        witness: true,
    };
}

fn prediction(kind: ProductKind, g: &NamedGraph, h: &NamedGraph) -> Result<Predicted, String> {
    let (Some(fg), Some(fh)) = (g.spec.family(), h.spec.family()) else {
        return Err("no prediction: formulas cover paths, cycles and complete bipartite factors".into());
    };
    match predict(kind, fg, fh).map_err(|e| format!("no prediction: {e}"))? {
        Prediction::Exact { value, source } => Ok(Predicted {
            lower: value,
            upper: value,
            lower_source: source.to_string(),
            upper_source: source.to_string(),
        }),
        Prediction::Bounds(r) => Ok(Predicted {
            lower: r.lower.value,
            upper: r.upper.value,
            lower_source: r.lower.source.to_string(),
            upper_source: r.upper.source.to_string(),
        }),
    }
}

/// Moves a Cartesian witness on `h □ g` onto `target = g □ h`.
fn transpose(bundle: WitnessBundle, target: ProductGraph) -> Result<WitnessBundle, String> {
    let seq: Vec<usize> = bundle
        .sequence
        .vertices
        .iter()
        .map(|&v| {
            let (a, b) = bundle.product.coords(v);
            target.index(b, a)
        })
        .collect();
    let sequence = is_legal_sequence(&target.graph, &seq, Variant::Total)
        .into_sequence()
        .ok_or("transposed grid witness is not legal")?;
    Ok(WitnessBundle {
        product: target,
        sequence,
        claimed_length: bundle.claimed_length,
        source: bundle.source,
    })
}

fn construct(
    kind: ProductKind,
    g: &NamedGraph,
    h: &NamedGraph,
    config: &SolverConfig,
) -> Result<WitnessBundle, String> {
    let text = |e: &dyn std::fmt::Display| format!("no witness: {e}");
    match kind {
        ProductKind::Direct => {
            let sg = solve_with(&g.graph, Variant::Total, config).map_err(|e| text(&e))?;
            let sh = solve_with(&h.graph, Variant::Total, config).map_err(|e| text(&e))?;
            direct_product_witness(&g.graph, &h.graph, &sg.witness.vertices, &sh.witness.vertices).map_err(|e| text(&e))
        }
        ProductKind::Lexicographic => {
            best_lexicographic_witness(&g.graph, &h.graph, Variant::Total, config).map_err(|e| text(&e))
        }
        ProductKind::Strong => {
            let bundles = strong_witnesses(&g.graph, &h.graph, config).map_err(|e| text(&e))?;
            best_bundle(&bundles)
                .cloned()
                .ok_or_else(|| "no witness: no strong construction applies".into())
        }
        ProductKind::Cartesian => {
            let grid = match (g.spec.family(), h.spec.family()) {
                (Some(Family::Path(k)), Some(Family::Path(l))) => Some((GridKind::PP, k, l, false)),
                (Some(Family::Path(k)), Some(Family::Cycle(l))) => Some((GridKind::PC, k, l, false)),
                (Some(Family::Cycle(k)), Some(Family::Path(l))) => Some((GridKind::PC, l, k, true)),
                (Some(Family::Cycle(k)), Some(Family::Cycle(l))) => Some((GridKind::CC, k, l, false)),
                _ => None,
            };
            let Some((grid, k, l, swapped)) = grid else {
                return Err("no witness: grid constructions need path and cycle factors".into());
            };
            let bundle = cartesian_witness(grid, k, l).map_err(|e| text(&e))?;
            if swapped {
                let target = products::cartesian(&g.graph, &h.graph).map_err(|e| text(&e))?;
                transpose(bundle, target)
            } else {
                Ok(bundle)
            }
        }
    }
}

fn product_status(exact: Option<u32>, predicted: Option<&Predicted>, witness: Option<usize>) -> Status {
    let Some(x) = exact else {
        return match (predicted, witness) {
            (Some(p), Some(w)) if w as u32 > p.upper => Status::Violation,
            (Some(p), Some(w)) if w as u32 == p.upper => Status::Tight,
            _ => Status::Unsolved,
        };
    };
    if predicted.is_some_and(|p| x < p.lower || x > p.upper) || witness.is_some_and(|w| w as u32 > x) {
        return Status::Violation;
    }
    match (predicted, witness) {
        (None, None) => Status::Ok,
        _ if predicted.is_none_or(|p| p.lower == p.upper) && witness.is_none_or(|w| w as u32 == x) => Status::Tight,
        _ => Status::Gap,
    }
}

/// One product experiment. Cap refusals are recorded, not raised.
pub fn product(
    kind: ProductKind,
    g: &NamedGraph,
    h: &NamedGraph,
    flags: ProductFlags,
    opts: &Options,
) -> Result<Record> {
    let start = Instant::now();
    let config = opts.config();
    let p = products::product(kind, &g.graph, &h.graph)?;
    let mut rec = Record::new("product");
    rec.inputs.push(Input::new("g", g));
    rec.inputs.push(Input::new("h", h));
    rec.kind = Some(kind.name().to_string());
    rec.n = Some(p.graph.n());
    let mut refused = false;
    if flags.solve {
        match solve_with(&p.graph, Variant::Total, &config) {
            Ok(r) => rec.value = Some(r.value),
            Err(e) => {
                refused = true;
                rec.notes.push(e.to_string());
            }
        }
    }
    if flags.predict {
        match prediction(kind, g, h) {
            Ok(pred) => rec.predicted = Some(pred),
            Err(note) => rec.notes.push(note),
        }
    }
    if flags.witness {
        match construct(kind, g, h, &config) {
            Ok(b) => {
                let coords = opts.emit_witness.then(|| {
                    b.sequence
                        .vertices
                        .iter()
                        .map(|&v| b.product.coords(v).into())
                        .collect()
                });
                rec.witness = Some(Witness {
                    source: b.source.to_string(),
                    length: b.claimed_length,
                    vertices: None,
                    coords,
                });
            }
            Err(note) => rec.notes.push(note),
        }
    }
    rec.status = product_status(
        rec.value,
        rec.predicted.as_ref(),
        rec.witness.as_ref().map(|w| w.length),
    );
    if refused && rec.status == Status::Unsolved {
        rec.status = Status::CapRefused;
    }
    opts.stamp(&mut rec, start);
    Ok(rec)
}

/// Factor shapes for the family tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    PathPath,
    PathCycle,
    CyclePath,
    CycleCycle,
}

impl Shape {
    pub const ALL: [Shape; 4] = [Shape::PathPath, Shape::PathCycle, Shape::CyclePath, Shape::CycleCycle];

    fn specs(self, k: usize, l: usize) -> (GraphSpec, GraphSpec) {
        let side = |cycle: bool, n| if cycle { GraphSpec::Cycle(n) } else { GraphSpec::Path(n) };
        match self {
            Shape::PathPath => (side(false, k), side(false, l)),
            Shape::PathCycle => (side(false, k), side(true, l)),
            Shape::CyclePath => (side(true, k), side(false, l)),
            Shape::CycleCycle => (side(true, k), side(true, l)),
        }
    }
}

impl std::str::FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pp" => Ok(Shape::PathPath),
            "pc" => Ok(Shape::PathCycle),
            "cp" => Ok(Shape::CyclePath),
            "cc" => Ok(Shape::CycleCycle),
            other => Err(format!("unknown shape '{other}' (expected pp, pc, cp or cc)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TableRequest {
    pub kind: ProductKind,
    pub k: RangeInclusive<usize>,
    pub l: RangeInclusive<usize>,
    pub shapes: Vec<Shape>,
}

/// Predicted, solved and witness-certified values for every cell. Cells
/// whose factors do not exist (cycles below 3 vertices, empty paths) are
/// left out.
pub fn tables(req: &TableRequest, opts: &Options) -> Result<Vec<Record>> {
    let mut cells = Vec::new();
    for &shape in &req.shapes {
        for k in req.k.clone() {
            for l in req.l.clone() {
                let (gs, hs) = shape.specs(k, l);
                if let (Ok(g), Ok(h)) = (NamedGraph::from_spec(gs), NamedGraph::from_spec(hs)) {
                    if g.graph.n() > 0 && h.graph.n() > 0 {
                        cells.push((g, h));
                    }
                }
            }
        }
    }
    cells
        .par_iter()
        .map(|(g, h)| product(req.kind, g, h, ProductFlags::ALL, opts))
        .collect()
}

#[derive(Debug, Clone)]
pub enum SweepSource {
    /// Connected graphs on `2..=max_n` vertices, one per isomorphism class.
    Enumerate {
        max_n: usize,
        bipartite: bool,
    },
    File(PathBuf),
    Specs(Vec<GraphSpec>),
}

pub fn sweep_inputs(source: &SweepSource) -> Result<Vec<NamedGraph>> {
    Ok(match source {
        SweepSource::Enumerate { max_n, bipartite } => {
            let mut out = Vec::new();
            for n in 2..=*max_n {
                let graphs: Vec<Graph> = if *bipartite {
                    enumerate_connected_bipartite(n)?.collect()
                } else {
                    enumerate_connected(n)?.collect()
                };
                out.extend(graphs.into_iter().map(NamedGraph::anonymous));
            }
            out
        }
        SweepSource::File(p) => read_graph6_file(p)?
            .into_iter()
            .map(|(_, g)| NamedGraph::anonymous(g))
            .collect(),
        SweepSource::Specs(specs) => specs
            .iter()
            .map(|s| NamedGraph::from_spec(s.clone()))
            .collect::<Result<_, _>>()?,
    })
}

/// Compares `γ(G x H)` with `γ(G) γ(H)` for every unordered pair of
/// inputs, itself included, and appends a summary record.
pub fn sweep(graphs: &[NamedGraph], opts: &Options) -> Vec<Record> {
    let config = opts.config();
    let factors: Vec<Result<u32, String>> = graphs
        .par_iter()
        .map(|g| {
            solve_with(&g.graph, Variant::Total, &config)
                .map(|r| r.value)
                .map_err(|e| e.to_string())
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|i| (i..graphs.len()).map(move |j| (i, j)))
        .collect();
    let mut out: Vec<Record> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let start = Instant::now();
            let (g, h) = (&graphs[i], &graphs[j]);
            let mut rec = Record::new("sweep-conjecture");
            rec.inputs.push(Input::new("g", g));
            rec.inputs.push(Input::new("h", h));
            rec.kind = Some(ProductKind::Direct.name().to_string());
            let n = g.graph.n() * h.graph.n();
            rec.n = Some(n);
            rec.status = Status::Skipped;
            match (&factors[i], &factors[j]) {
                (Err(e), _) | (_, Err(e)) => rec.notes.push(format!("factor: {e}")),
                _ if n > opts.cap => rec.notes.push(format!(
                    "product on {n} vertices exceeds the search cap of {}",
                    opts.cap
                )),
                (Ok(a), Ok(b)) => {
                    rec.factors = Some([*a, *b]);
                    let solved = products::direct(&g.graph, &h.graph)
                        .map_err(|e| e.to_string())
                        .and_then(|p| solve_with(&p.graph, Variant::Total, &config).map_err(|e| e.to_string()));
                    match solved {
                        Ok(r) => {
                            rec.value = Some(r.value);
                            rec.status = if r.value == a * b {
                                Status::Equality
                            } else {
                                Status::Counterexample
                            };
                        }
                        Err(e) => rec.notes.push(e),
                    }
                }
            }
            opts.stamp(&mut rec, start);
            rec
        })
        .collect();
    let mut summary = Summary::default();
    for rec in &out {
        match rec.status {
            Status::Equality => summary.equalities += 1,
            Status::Counterexample => summary.violations += 1,
            _ => summary.skipped += 1,
        }
    }
    summary.pairs = summary.equalities + summary.violations;
    let mut rec = Record::new("sweep-conjecture");
    rec.status = Status::Summary;
    rec.summary = Some(summary);
    out.push(rec);
    out
}

/// Reads a hypergraph in text form from a file, or from stdin for `-`.
pub fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("cannot read stdin")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
    };
    Hypergraph::parse(&text).with_context(|| format!("{}", path.display()))
}

fn hyper_input(role: &'static str, name: &str, h: &Hypergraph) -> Input {
    Input {
        role,
        spec: name.to_string(),
        n: h.ground(),
        graph6: None,
    }
}

pub fn hypergraph_rho(name: &str, h: &Hypergraph, opts: &Options) -> Result<Record> {
    let start = Instant::now();
    if h.edges().len() > opts.cap {
        bail!(
            "exact search refused: {} edges exceeds the search cap of {}",
            h.edges().len(),
            opts.cap
        );
    }
    let r = rho_gr(h)?;
    let mut rec = Record::new("hypergraph");
    rec.inputs.push(hyper_input("h", name, h));
    rec.kind = Some("rho".into());
    rec.n = Some(h.edges().len());
    rec.value = Some(r.value);
    if opts.emit_witness {
        rec.witness = Some(Witness {
            source: "solver".into(),
            length: r.witness.len(),
            vertices: Some(r.witness),
            coords: None,
        });
    }
    opts.stamp(&mut rec, start);
    Ok(rec)
}

/// The product hypergraph as text, with its `rho_gr` when `with_rho`.
pub fn hypergraph_product_record(
    (na, a): (&str, &Hypergraph),
    (nb, b): (&str, &Hypergraph),
    with_rho: bool,
    opts: &Options,
) -> Result<Record> {
    let start = Instant::now();
    let p = hypergraph_product(a, b);
    let mut rec = if with_rho {
        hypergraph_rho("product", &p, opts)?
    } else {
        Record::new("hypergraph")
    };
    rec.inputs = vec![hyper_input("a", na, a), hyper_input("b", nb, b)];
    rec.kind = Some("product".into());
    rec.n = Some(p.ground());
    rec.output = Some(p.to_text());
    rec.elapsed_ms = None;
    opts.stamp(&mut rec, start);
    Ok(rec)
}

pub fn hypergraph_incidence(name: &str, h: &Hypergraph) -> Record {
    let g = incidence_bipartite(h);
    let mut rec = Record::new("hypergraph");
    rec.inputs.push(hyper_input("h", name, h));
    rec.kind = Some("incidence".into());
    rec.n = Some(g.n());
    rec.output = Some(to_graph6(&g));
    rec
}

pub fn hypergraph_neighborhood(g: &NamedGraph, closed: bool) -> Record {
    let h = neighborhood_hypergraph(&g.graph, closed);
    let mut rec = Record::new("hypergraph");
    rec.inputs.push(Input::new("g", g));
    rec.kind = Some(
        if closed {
            "closed-neighborhood"
        } else {
            "open-neighborhood"
        }
        .into(),
    );
    rec.n = Some(h.ground());
    rec.output = Some(h.to_text());
    rec
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(s: &str) -> NamedGraph {
        NamedGraph::from_spec(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn status_rules() {
        let exact = |v| Predicted {
            lower: v,
            upper: v,
            lower_source: String::new(),
            upper_source: String::new(),
        };
        let bounds = Predicted {
            lower: 8,
            upper: 9,
            ..exact(0)
        };
        assert_eq!(product_status(Some(24), Some(&exact(24)), Some(24)), Status::Tight);
        assert_eq!(product_status(Some(8), Some(&bounds), Some(8)), Status::Gap);
        assert_eq!(product_status(Some(7), Some(&bounds), None), Status::Violation);
        assert_eq!(product_status(Some(5), None, Some(4)), Status::Gap);
        assert_eq!(product_status(Some(5), None, None), Status::Ok);
        assert_eq!(product_status(None, Some(&bounds), Some(9)), Status::Tight);
        assert_eq!(product_status(None, Some(&bounds), Some(8)), Status::Unsolved);
    }

    #[test]
    fn transposed_grid_witness_is_legal() {
        let rec = product(
            ProductKind::Cartesian,
            &named("cycle:4"),
            &named("path:3"),
            ProductFlags::ALL,
            &Options::default(),
        )
        .unwrap();
        assert_eq!(rec.witness.unwrap().length, 8);
        assert!(rec.value.unwrap() >= 8);
    }

    #[test]
    fn refused_products_are_recorded() {
        let opts = Options {
            cap: 10,
            ..Options::default()
        };
        let flags = ProductFlags {
            solve: true,
            ..ProductFlags::default()
        };
        let rec = product(ProductKind::Direct, &named("path:4"), &named("path:4"), flags, &opts).unwrap();
        assert_eq!(rec.status, Status::CapRefused);
        assert!(rec.value.is_none());
    }
}
