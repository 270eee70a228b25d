//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed. Reference values are written out here
//! from the published statements, independently of `grundy_core::formulas`.

use grundy_cli::commands::{partition_checks, sweep, Options};
use grundy_cli::record::Status;
use grundy_cli::spec::NamedGraph;
use grundy_core::constructions::{best_bundle, cartesian_witness, direct_product_witness, strong_witnesses, GridKind};
use grundy_core::enumerate::{enumerate_connected, enumerate_connected_bipartite};
use grundy_core::formulas::{biclique_cover_number, skew_zero_forcing_number, BICLIQUE_EDGE_CAP};
use grundy_core::graph::{complete, cycle, path, tree_t8};
use grundy_core::hypergraph::{neighborhood_hypergraph, rho_gr};
use grundy_core::products::{cartesian, direct, lexicographic, strong, Layer};
use grundy_core::solver::{is_legal_sequence, max_weighted_closed_sequence, StepWeights};
use grundy_core::{solve_with, Graph, SolverConfig, Variant, VertexSet};
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

const CAP: usize = 36;

fn config() -> SolverConfig {
    SolverConfig::with_cap(CAP)
}

fn value(g: &Graph, variant: Variant) -> u32 {
    solve_with(g, variant, &config()).expect("within cap").value
}

fn total(g: &Graph) -> u32 {
    value(g, Variant::Total)
}

/// One criterion's bookkeeping.
struct Gate {
    id: u32,
    title: &'static str,
    limit: Duration,
    start: Instant,
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Gate {
    fn new(id: u32, title: &'static str, limit_secs: u64) -> Gate {
        Gate {
            id,
            title,
            limit: Duration::from_secs(limit_secs),
            start: Instant::now(),
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> bool {
        let elapsed = self.start.elapsed();
        let mut failures = self.failures;
        if elapsed > self.limit {
            failures.push(format!("took {:.1?}, over the {:?} limit", elapsed, self.limit));
        }
        let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {} ({}): {verdict} [{} checks, {:.2?} of {:?}]",
            self.id, self.title, self.checks, elapsed, self.limit
        );
        for f in failures.iter().take(10) {
            println!("    failed: {f}");
        }
        if failures.len() > 10 {
            println!("    ... {} more", failures.len() - 10);
        }
        for n in &self.notes {
            println!("    note: {n}");
        }
        failures.is_empty()
    }
}

fn connected_upto(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|k| enumerate_connected(k).unwrap()).collect()
}

#[derive(Clone, Copy, Debug)]
enum Fam {
    P(usize),
    C(usize),
}

impl Fam {
    fn graph(self) -> Graph {
        match self {
            Fam::P(k) => path(k).unwrap(),
            Fam::C(k) => cycle(k).unwrap(),
        }
    }

    fn order(self) -> usize {
        match self {
            Fam::P(k) | Fam::C(k) => k,
        }
    }
}

/// Total Grundy numbers of paths and cycles, as published.
fn published_path(l: usize) -> u32 {
    (if l.is_multiple_of(2) { l } else { l - 1 }) as u32
}

fn published_cycle(l: usize) -> u32 {
    (if l.is_multiple_of(2) { l - 2 } else { l - 1 }) as u32
}

/// Direct products of paths and cycles, as published (the path-path and
/// path-cycle corollary, and the cycle-cycle theorem).
fn published_direct(g: Fam, h: Fam) -> u32 {
    let pp = |k: usize, l: usize| -> usize {
        match (k.is_multiple_of(2), l.is_multiple_of(2)) {
            (true, true) => k * l,
            (true, false) => k * (l - 1),
            (false, true) => (k - 1) * l,
            (false, false) => (k - 1) * (l - 1),
        }
    };
    let pc = |k: usize, l: usize| -> usize {
        match (k.is_multiple_of(2), l.is_multiple_of(2)) {
            (true, true) => k * (l - 2),
            (true, false) => k * (l - 1),
            (false, true) => (k - 1) * (l - 2),
            (false, false) => (k - 1) * (l - 1),
        }
    };
    (match (g, h) {
        (Fam::P(k), Fam::P(l)) => pp(k, l),
        (Fam::P(k), Fam::C(l)) | (Fam::C(l), Fam::P(k)) => pc(k, l),
        (Fam::C(k), Fam::C(l)) => (published_cycle(k) * published_cycle(l)) as usize,
    }) as u32
}

fn direct_families() -> Vec<Fam> {
    (2..=5).map(Fam::P).chain((3..=5).map(Fam::C)).collect()
}

fn criterion_1() -> bool {
    let mut gate = Gate::new(1, "path and cycle base values", 1);
    for l in 2..=12 {
        let got = total(&path(l).unwrap());
        gate.check(got == published_path(l), || {
            format!("P{l}: solver {got}, formula {}", published_path(l))
        });
    }
    for l in 3..=12 {
        let got = total(&cycle(l).unwrap());
        gate.check(got == published_cycle(l), || {
            format!("C{l}: solver {got}, formula {}", published_cycle(l))
        });
    }
    gate.finish()
}

fn criterion_2() -> bool {
    let mut gate = Gate::new(2, "direct products of paths and cycles", 60);
    let fams = direct_families();
    for &g in &fams {
        for &h in &fams {
            if g.order() * h.order() > 36 {
                continue;
            }
            let (gg, hh) = (g.graph(), h.graph());
            let expect = published_direct(g, h);
            let got = total(&direct(&gg, &hh).unwrap().graph);
            gate.check(got == expect, || {
                format!("{g:?} x {h:?}: solver {got}, formula {expect}")
            });
            let sg = solve_with(&gg, Variant::Total, &config()).unwrap().witness.vertices;
            let sh = solve_with(&hh, Variant::Total, &config()).unwrap().witness.vertices;
            let b = direct_product_witness(&gg, &hh, &sg, &sh).unwrap();
            let legal = is_legal_sequence(&b.product.graph, &b.sequence.vertices, Variant::Total).is_legal();
            gate.check(legal && b.claimed_length as u32 == expect, || {
                format!("{g:?} x {h:?}: witness of length {} (legal: {legal})", b.claimed_length)
            });
        }
    }
    gate.finish()
}

fn criterion_3() -> bool {
    let mut gate = Gate::new(3, "direct-product conjecture sweep", 300);
    let mut graphs: Vec<NamedGraph> = (1..=4)
        .flat_map(|n| enumerate_connected_bipartite(n).unwrap())
        .map(NamedGraph::anonymous)
        .collect();
    let bipartite = graphs.len();
    graphs.extend(direct_families().into_iter().map(|f| NamedGraph::anonymous(f.graph())));
    let opts = Options {
        cap: CAP,
        ..Options::default()
    };
    // Pairs of two path/cycle factors above 36 vertices are not part of the
    // criterion; every other pair must be tested.
    let records = sweep(&graphs, &opts);
    let (mut tested, mut equal) = (0, 0);
    for r in &records {
        match r.status {
            Status::Equality => {
                tested += 1;
                equal += 1;
            }
            Status::Counterexample => {
                tested += 1;
                gate.check(false, || format!("counterexample: {}", r.to_json()));
            }
            Status::Skipped => {
                let big = r.n.is_some_and(|n| n > 36);
                gate.check(big, || format!("skipped: {}", r.to_json()));
            }
            _ => {}
        }
    }
    gate.checks += equal;
    gate.notes.push(format!(
        "{bipartite} connected bipartite graphs on at most 4 vertices plus {} path/cycle factors: \
         {tested} pairs, {equal} equalities, {} violations",
        graphs.len() - bipartite,
        tested - equal
    ));
    gate.finish()
}

/// `a(D)(w - 1) + |D|` maximized over every legal closed sequence, by plain
/// enumeration.
fn lex_objective_by_enumeration(g: &Graph, w: u32) -> u32 {
    fn go(g: &Graph, w: u32, covered: &VertexSet, chosen: &mut Vec<usize>) -> u32 {
        let mut best = 0;
        for v in 0..g.n() {
            let n_closed = g.closed_neighbors(v);
            if n_closed.is_subset(covered) {
                continue;
            }
            let isolated = chosen.iter().all(|&u| !g.has_edge(u, v));
            let gain = if isolated { w } else { 1 };
            chosen.push(v);
            best = best.max(gain + go(g, w, &covered.union(&n_closed), chosen));
            chosen.pop();
        }
        best
    }
    go(g, w, &VertexSet::empty(g.n()), &mut Vec::new())
}

fn independence_by_enumeration(g: &Graph) -> u32 {
    (0u32..1 << g.n())
        .filter(|&s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0)
}

fn criterion_4() -> bool {
    let mut gate = Gate::new(4, "lexicographic products", 120);
    let gs = [
        ("P3", path(3).unwrap()),
        ("P4", path(4).unwrap()),
        ("C4", cycle(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("T8", tree_t8()),
    ];
    let hs = [
        ("P2", path(2).unwrap()),
        ("P3", path(3).unwrap()),
        ("C4", cycle(4).unwrap()),
    ];
    for (gn, g) in &gs {
        for (hn, h) in &hs {
            let w = total(h);
            let got = total(&lexicographic(g, h).unwrap().graph);
            let weighted = max_weighted_closed_sequence(g, &StepWeights::lexicographic(w), &config())
                .unwrap()
                .value;
            let enumerated = lex_objective_by_enumeration(g, w);
            gate.check(got == weighted && weighted == enumerated, || {
                format!("{gn} o {hn}: solver {got}, weighted search {weighted}, enumeration {enumerated}")
            });
        }
    }
    let t8 = tree_t8();
    let alpha = independence_by_enumeration(&t8);
    let gamma_h = total(&path(2).unwrap());
    let got = total(&lexicographic(&t8, &path(2).unwrap()).unwrap().graph);
    gate.check(alpha * gamma_h == 10, || format!("alpha(T8) * 2 = {}", alpha * gamma_h));
    gate.check(got >= 11, || format!("T8 o P2 = {got}, expected at least 11"));
    gate.notes
        .push(format!("T8 o P2 = {got} against alpha * gamma = {}", alpha * gamma_h));
    gate.finish()
}

/// Strong-product lower bounds of the published corollary, cases (i)-(iii).
fn published_strong_lower(g: Fam, h: Fam) -> usize {
    let v = match (g, h) {
        (Fam::P(k), Fam::P(l)) => {
            let (k, l) = (k as i64, l as i64);
            k * l - k - l + if k % 2 == 1 && l % 2 == 1 { 2 } else { 3 }
        }
        (Fam::P(k), Fam::C(l)) => {
            let (k, l) = (k as i64, l as i64);
            k * l - 2 * k - l + if k % 2 == 1 && l % 2 == 0 { 3 } else { 4 }
        }
        (Fam::C(k), Fam::C(l)) => {
            let (k, l) = (k as i64, l as i64);
            k * l - 2 * k - 2 * l + if k % 2 == 0 && l % 2 == 0 { 5 } else { 6 }
        }
        (Fam::C(_), Fam::P(_)) => unreachable!(),
    };
    v.max(0) as usize
}

/// Strong-product upper bounds of the published theorem.
fn published_strong_upper(g: Fam, h: Fam) -> usize {
    match (g, h) {
        (Fam::P(k), Fam::P(l)) => k * l - k.min(l),
        (Fam::C(k), Fam::C(l)) => k * l - (2 * k).min(2 * l),
        (Fam::P(k), Fam::C(l)) => k * l - (2 * k).min(l),
        (Fam::C(_), Fam::P(_)) => unreachable!(),
    }
}

fn grid_pairs() -> Vec<(Fam, Fam)> {
    let mut out = Vec::new();
    for k in 3..=5 {
        for l in 3..=5 {
            out.extend([(Fam::P(k), Fam::P(l)), (Fam::P(k), Fam::C(l)), (Fam::C(k), Fam::C(l))]);
        }
    }
    out
}

fn criterion_5() -> bool {
    let mut gate = Gate::new(5, "strong products of paths and cycles", 300);
    for (g, h) in grid_pairs() {
        let (gg, hh) = (g.graph(), h.graph());
        let (lower, upper) = (published_strong_lower(g, h) as u32, published_strong_upper(g, h) as u32);
        let got = total(&strong(&gg, &hh).unwrap().graph);
        gate.check(lower <= got && got <= upper, || {
            format!("{g:?} x {h:?}: solver {got} outside published bounds [{lower}, {upper}]")
        });
        let bundles = strong_witnesses(&gg, &hh, &config()).unwrap();
        let best = best_bundle(&bundles).unwrap();
        let legal = is_legal_sequence(&best.product.graph, &best.sequence.vertices, Variant::Total).is_legal();
        gate.check(legal && best.claimed_length as u32 >= lower, || {
            format!(
                "{g:?} x {h:?}: best witness {} ({}) does not certify lower bound {lower}",
                best.claimed_length, best.source
            )
        });
    }
    gate.notes.push(
        "C3 x C3 is the complete graph K9, whose value is 2 (two adjacent vertices footprint each \
         other and then all nine are dominated); both published bounds give 3 at k = l = 3, so this \
         cell cannot pass"
            .into(),
    );
    gate.finish()
}

fn published_cart_lower(g: Fam, h: Fam) -> usize {
    match (g, h) {
        (Fam::P(k), Fam::P(l)) => k * l - k.min(l),
        (Fam::P(k), Fam::C(l)) => k * l - (2 * k).min(l),
        (Fam::C(k), Fam::C(l)) => k * l - (2 * k).min(2 * l),
        (Fam::C(_), Fam::P(_)) => unreachable!(),
    }
}

fn published_cart_upper(g: Fam, h: Fam) -> usize {
    match (g, h) {
        (Fam::C(k), Fam::C(l)) => k * l - k.min(l),
        (Fam::P(k), Fam::P(l)) => k * l - (k / 2).min(l / 2),
        (Fam::P(k), Fam::C(l)) => k * l - k.min(l.div_ceil(2)),
        (Fam::C(_), Fam::P(_)) => unreachable!(),
    }
}

fn criterion_6() -> bool {
    let mut gate = Gate::new(6, "Cartesian products of paths and cycles", 600);
    for k in 3..=6 {
        let got = total(&cartesian(&path(k).unwrap(), &path(k).unwrap()).unwrap().graph);
        gate.check(got as usize == k * k - k, || {
            format!("P{k} □ P{k}: solver {got}, expected {}", k * k - k)
        });
    }
    for (g, h) in grid_pairs() {
        let (lower, upper) = (published_cart_lower(g, h), published_cart_upper(g, h));
        let got = total(&cartesian(&g.graph(), &h.graph()).unwrap().graph) as usize;
        gate.check(lower <= got && got <= upper, || {
            format!("{g:?} □ {h:?}: solver {got} outside [{lower}, {upper}]")
        });
        let (kind, k, l) = match (g, h) {
            (Fam::P(k), Fam::P(l)) => (GridKind::PP, k, l),
            (Fam::P(k), Fam::C(l)) => (GridKind::PC, k, l),
            (Fam::C(k), Fam::C(l)) => (GridKind::CC, k, l),
            (Fam::C(_), Fam::P(_)) => unreachable!(),
        };
        let b = cartesian_witness(kind, k, l).unwrap();
        let legal = is_legal_sequence(&b.product.graph, &b.sequence.vertices, Variant::Total).is_legal();
        gate.check(legal && b.claimed_length == lower, || {
            format!(
                "{g:?} □ {h:?}: witness {} (legal: {legal}), lower bound {lower}",
                b.claimed_length
            )
        });
    }
    gate.finish()
}

/// Unlabeled trees on `n` vertices from parent arrays, deduplicated by a
/// center-rooted canonical string.
fn trees(n: usize) -> Vec<Graph> {
    fn encode(adj: &[Vec<usize>], v: usize, from: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&u| u != from)
            .map(|&u| encode(adj, u, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    fn canonical(n: usize, parent: &[usize]) -> String {
        let mut adj = vec![Vec::new(); n];
        for v in 1..n {
            adj[parent[v]].push(v);
            adj[v].push(parent[v]);
        }
        let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut left = n;
        while left > 2 {
            left -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &u in &adj[v] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
            layer = next;
        }
        layer.iter().map(|&c| encode(&adj, c, usize::MAX)).min().unwrap()
    }
    fn walk(i: usize, n: usize, parent: &mut [usize], seen: &mut BTreeSet<String>, out: &mut Vec<Graph>) {
        if i == n {
            if seen.insert(canonical(n, parent)) {
                out.push(Graph::from_edges(n, (1..n).map(|v| (parent[v], v))).unwrap());
            }
            return;
        }
        for p in 0..i {
            parent[i] = p;
            walk(i + 1, n, parent, seen, out);
        }
    }
    let mut out = Vec::new();
    walk(1, n, &mut vec![0; n], &mut BTreeSet::new(), &mut out);
    out
}

fn vertex_cover_by_enumeration(g: &Graph) -> u32 {
    (0u32..1 << g.n())
        .filter(|&s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
        .map(u32::count_ones)
        .min()
        .unwrap_or(0)
}

fn criterion_7() -> bool {
    let mut gate = Gate::new(7, "oracle equivalences", 600);
    let graphs = connected_upto(7);
    let mut bc_checked = 0;
    for g in &graphs {
        let (t, c) = (total(g), value(g, Variant::Closed));
        let zm = skew_zero_forcing_number(g).unwrap();
        gate.check(t == g.n() as u32 - zm, || {
            format!("{:?}: total {t}, n - Z- = {}", g.edges(), g.n() as u32 - zm)
        });
        let open = rho_gr(&neighborhood_hypergraph(g, false)).unwrap().value;
        let closed = rho_gr(&neighborhood_hypergraph(g, true)).unwrap().value;
        gate.check(open == t, || format!("{:?}: total {t}, open rho {open}", g.edges()));
        gate.check(closed == c, || {
            format!("{:?}: closed {c}, closed rho {closed}", g.edges())
        });
        if g.edge_count() <= BICLIQUE_EDGE_CAP {
            let bc = biclique_cover_number(g).unwrap();
            bc_checked += 1;
            gate.check(t <= 2 * bc, || {
                format!("{:?}: total {t} above 2 bc = {}", g.edges(), 2 * bc)
            });
        }
    }
    let mut tree_count = 0;
    let mut per_order = Vec::new();
    for n in 2..=9 {
        let ts = trees(n);
        per_order.push(ts.len());
        for t in ts {
            tree_count += 1;
            let beta = vertex_cover_by_enumeration(&t);
            let got = total(&t);
            gate.check(got == 2 * beta, || {
                format!("tree {:?}: total {got}, 2 beta = {}", t.edges(), 2 * beta)
            });
        }
    }
    gate.check(per_order == [1, 1, 2, 3, 6, 11, 23, 47], || {
        format!("tree counts {per_order:?}")
    });
    gate.notes.push(format!(
        "{} connected graphs (bc bound on the {bc_checked} with at most {BICLIQUE_EDGE_CAP} edges), {tree_count} trees",
        graphs.len()
    ));
    gate.finish()
}

fn criterion_8() -> bool {
    let mut gate = Gate::new(8, "Z and L extensions", 120);
    let k3 = complete(3).unwrap();
    let z = value(&k3, Variant::Z);
    gate.check(z == 1, || format!("Z(K3) = {z}"));
    let zz = value(&direct(&k3, &k3).unwrap().graph, Variant::Z);
    gate.check(zz == 4, || format!("Z(K3 x K3) = {zz}"));
    let opts = Options {
        cap: CAP,
        ..Options::default()
    };
    let mut splits = 0;
    for g in connected_upto(6).into_iter().filter(|g| g.edge_count() >= 2) {
        let named = NamedGraph::anonymous(g);
        for r in partition_checks(&named, 0x5eed, 20, &opts).unwrap() {
            splits += 1;
            gate.check(r.status == Status::Ok, || {
                format!("partition bound fails: {}", r.to_json())
            });
        }
    }
    gate.notes.push(format!("{splits} random edge splits, seed 0x5eed"));
    gate.finish()
}

/// Every graph on `n` vertices up to isomorphism, as disjoint unions of
/// connected ones.
fn all_graphs(n: usize, connected: &[Vec<Graph>]) -> Vec<Graph> {
    fn go(
        left: usize,
        max: (usize, usize),
        connected: &[Vec<Graph>],
        parts: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if left == 0 {
            let mut edges = Vec::new();
            let mut offset = 0;
            for &(size, i) in parts.iter() {
                edges.extend(
                    connected[size][i]
                        .edges()
                        .into_iter()
                        .map(|(u, v)| (u + offset, v + offset)),
                );
                offset += size;
            }
            out.push(Graph::from_edges(offset, edges).unwrap());
            return;
        }
        for size in (1..=left.min(max.0)).rev() {
            let top = if size == max.0 {
                max.1
            } else {
                connected[size].len() - 1
            };
            for i in (0..=top).rev() {
                parts.push((size, i));
                go(left - size, (size, i), connected, parts, out);
                parts.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, (n, connected[n].len() - 1), connected, &mut Vec::new(), &mut out);
    out
}

fn criterion_9() -> bool {
    let mut gate = Gate::new(9, "property suite", 600);
    let connected: Vec<Vec<Graph>> = std::iter::once(Vec::new())
        .chain((1..=7).map(|n| enumerate_connected(n).unwrap().collect()))
        .collect();
    for g in connected.iter().flatten() {
        for variant in Variant::ALL {
            let r = solve_with(g, variant, &config()).unwrap();
            let legal = is_legal_sequence(g, &r.witness.vertices, variant).is_legal();
            gate.check(legal && r.witness.len() as u32 == r.value, || {
                format!("{variant} witness on {:?}: {:?}", g.edges(), r.witness.vertices)
            });
        }
    }
    let mut counts = Vec::new();
    for n in 1..=7 {
        let graphs = all_graphs(n, &connected);
        counts.push(graphs.len());
        for g in &graphs {
            let reduced = g.remove_open_twins();
            let (a, b) = (total(g), total(&reduced));
            gate.check(a == b, || format!("{:?}: total {a}, after twin removal {b}", g.edges()));
        }
    }
    gate.check(counts == [1, 2, 4, 11, 34, 156, 1044], || {
        format!("graph counts {counts:?}")
    });
    let fams = direct_families();
    for &g in &fams {
        for &h in &fams {
            if g.order() * h.order() > 36 {
                continue;
            }
            let (gg, hh) = (g.graph(), h.graph());
            let p = direct(&gg, &hh).unwrap();
            let r = solve_with(&p.graph, Variant::Total, &config()).unwrap();
            let chosen = VertexSet::from_indices(p.graph.n(), r.witness.vertices.iter().copied());
            let (tg, th) = (total(&gg), total(&hh));
            for v in 0..hh.n() {
                let hits = chosen.intersection(&p.layer(Layer::G(v)).unwrap()).len() as u32;
                gate.check(hits <= tg, || format!("{g:?} x {h:?}: G-layer {v} holds {hits} > {tg}"));
            }
            for u in 0..gg.n() {
                let hits = chosen.intersection(&p.layer(Layer::H(u)).unwrap()).len() as u32;
                gate.check(hits <= th, || format!("{g:?} x {h:?}: H-layer {u} holds {hits} > {th}"));
            }
        }
    }
    gate.finish()
}

fn main() {
    let results = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ];
    let failed: Vec<usize> = (1..=9).filter(|&i| !results[i - 1]).collect();
    if failed.is_empty() {
        println!("acceptance: all 9 criteria pass");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
