//! Maximum-weight closed-neighborhood sequences.
//!
//! Each step `v` of a legal closed sequence is classified by three
//! predicates evaluated against the sequence so far:
//!
//! - `self_new`: `v` is not yet dominated (it footprints itself);
//! - `nbr_new`: some neighbor of `v` is not yet dominated;
//! - `isolated`: `v` is adjacent to no earlier chosen vertex.
//!
//! The counts `a` (isolated steps), `b` (`nbr_new` but not `self_new`) and
//! `c` (both `self_new` and `nbr_new`) parameterize the lower bounds for
//! lexicographic and strong products, so maximizing a per-step weight over
//! all closed sequences yields those bounds.

use super::{is_legal_sequence, Legality, SearchStats, SolveError, SolverConfig, Variant, VertexSequence};
use crate::graph::Graph;
use rustc_hash::FxHashMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StepCategory {
    pub self_new: bool,
    pub nbr_new: bool,
    pub isolated: bool,
}

impl StepCategory {
    fn index(self) -> usize {
        self.self_new as usize | (self.nbr_new as usize) << 1 | (self.isolated as usize) << 2
    }

    pub fn in_a(self) -> bool {
        self.isolated
    }

    pub fn in_b(self) -> bool {
        !self.self_new && self.nbr_new
    }

    pub fn in_c(self) -> bool {
        self.self_new && self.nbr_new
    }
}

/// A weight for every combination of step predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepWeights {
    table: [u32; 8],
}

impl StepWeights {
    pub fn from_fn(f: impl Fn(StepCategory) -> u32) -> Self {
        let mut table = [0; 8];
        for (i, slot) in table.iter_mut().enumerate() {
            *slot = f(StepCategory {
                self_new: i & 1 != 0,
                nbr_new: i & 2 != 0,
                isolated: i & 4 != 0,
            });
        }
        StepWeights { table }
    }

    pub fn uniform(w: u32) -> Self {
        Self::from_fn(|_| w)
    }

    /// `a(D) * (w - 1) + |D|`: isolated steps weigh `w`, the rest weigh 1.
    pub fn lexicographic(w: u32) -> Self {
        Self::from_fn(|c| if c.in_a() { w } else { 1 })
    }

    /// `(grundy + 1) * c(D) + grundy * b(D) + (|D| - b(D) - c(D)) * total`.
    pub fn strong_footprint(grundy: u32, total: u32) -> Self {
        Self::from_fn(|c| {
            if c.in_c() {
                grundy + 1
            } else if c.in_b() {
                grundy
            } else {
                total
            }
        })
    }

    /// `total * a(D) + (|D| - a(D)) * grundy`.
    pub fn strong_isolated(total: u32, grundy: u32) -> Self {
        Self::from_fn(|c| if c.in_a() { total } else { grundy })
    }

    pub fn weight(&self, c: StepCategory) -> u32 {
        self.table[c.index()]
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SequenceStats {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub len: u32,
}

#[derive(Debug, Clone)]
pub struct WeightedResult {
    pub value: u32,
    pub witness: VertexSequence,
    pub stats: SequenceStats,
    pub search: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("sequence is not a legal closed-neighborhood sequence: {0:?}")]
    Illegal(Legality),
}

struct Tables {
    open: Vec<u128>,
    closed: Vec<u128>,
}

impl Tables {
    fn new(g: &Graph) -> Self {
        let open: Vec<u128> = (0..g.n())
            .map(|v| g.neighbors(v).to_u128().expect("n <= 128"))
            .collect();
        let closed = open.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
        Tables { open, closed }
    }

    fn category(&self, v: usize, closed_cov: u128, open_union: u128) -> Option<StepCategory> {
        if self.closed[v] & !closed_cov == 0 {
            return None;
        }
        Some(StepCategory {
            self_new: closed_cov & 1 << v == 0,
            nbr_new: self.open[v] & !closed_cov != 0,
            isolated: open_union & 1 << v == 0,
        })
    }
}

struct WeightedSearch<'a> {
    tables: Tables,
    weights: &'a StepWeights,
    memo: FxHashMap<(u128, u128), u32>,
    stats: SearchStats,
}

impl WeightedSearch<'_> {
    fn best(&mut self, closed_cov: u128, open_union: u128) -> u32 {
        if let Some(&v) = self.memo.get(&(closed_cov, open_union)) {
            self.stats.memo_hits += 1;
            return v;
        }
        self.stats.states_expanded += 1;
        let mut best = 0;
        for v in 0..self.tables.open.len() {
            if let Some(cat) = self.tables.category(v, closed_cov, open_union) {
                let w = self.weights.weight(cat)
                    + self.best(closed_cov | self.tables.closed[v], open_union | self.tables.open[v]);
                best = best.max(w);
            }
        }
        self.memo.insert((closed_cov, open_union), best);
        best
    }

    /// Optimal continuations from a state, in increasing vertex order.
    fn optimal_steps(&mut self, closed_cov: u128, open_union: u128) -> Vec<usize> {
        let target = self.best(closed_cov, open_union);
        (0..self.tables.open.len())
            .filter(|&v| match self.tables.category(v, closed_cov, open_union) {
                Some(cat) => {
                    target > 0
                        && self.weights.weight(cat)
                            + self.best(closed_cov | self.tables.closed[v], open_union | self.tables.open[v])
                            == target
                }
                None => false,
            })
            .collect()
    }
}

fn check_size(g: &Graph, config: &SolverConfig) -> Result<(), SolveError> {
    config.check(g.n())?;
    if g.n() > 128 {
        return Err(SolveError::ComponentTooLarge { size: g.n() });
    }
    Ok(())
}

/// Maximizes the summed step weight over all legal closed sequences of `g`.
/// Steps of weight zero still count as legal moves; the witness is the
/// lowest-index optimal sequence and stops once the remaining optimum is 0.
pub fn max_weighted_closed_sequence(
    g: &Graph,
    weights: &StepWeights,
    config: &SolverConfig,
) -> Result<WeightedResult, SolveError> {
    check_size(g, config)?;
    let mut search = WeightedSearch {
        tables: Tables::new(g),
        weights,
        memo: FxHashMap::default(),
        stats: SearchStats::default(),
    };
    let value = search.best(0, 0);
    let (mut closed_cov, mut open_union) = (0u128, 0u128);
    let mut seq = Vec::new();
    while let Some(&v) = search.optimal_steps(closed_cov, open_union).first() {
        seq.push(v);
        closed_cov |= search.tables.closed[v];
        open_union |= search.tables.open[v];
    }
    search.stats.memo_entries = search.memo.len() as u64;
    search.stats.components = 1;
    let stats = sequence_stats(g, &seq).expect("reconstructed sequence is legal");
    let witness = is_legal_sequence(g, &seq, Variant::Closed)
        .into_sequence()
        .expect("reconstructed sequence is legal");
    Ok(WeightedResult {
        value,
        witness,
        stats,
        search: search.stats,
    })
}

/// All optimal sequences for `weights` in lexicographic vertex order, up to
/// `limit` of them.
pub fn optimal_weighted_sequences(
    g: &Graph,
    weights: &StepWeights,
    config: &SolverConfig,
    limit: usize,
) -> Result<Vec<Vec<usize>>, SolveError> {
    check_size(g, config)?;
    let mut search = WeightedSearch {
        tables: Tables::new(g),
        weights,
        memo: FxHashMap::default(),
        stats: SearchStats::default(),
    };
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn walk(
        s: &mut WeightedSearch<'_>,
        closed_cov: u128,
        open_union: u128,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let steps = s.optimal_steps(closed_cov, open_union);
        if steps.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for v in steps {
            prefix.push(v);
            walk(
                s,
                closed_cov | s.tables.closed[v],
                open_union | s.tables.open[v],
                prefix,
                out,
                limit,
            );
            prefix.pop();
        }
    }
    walk(&mut search, 0, 0, &mut prefix, &mut out, limit);
    Ok(out)
}

/// The `a`, `b`, `c` counts and length of a legal closed sequence.
pub fn sequence_stats(g: &Graph, seq: &[usize]) -> Result<SequenceStats, StatsError> {
    let report = is_legal_sequence(g, seq, Variant::Closed);
    if !report.is_legal() {
        return Err(StatsError::Illegal(report));
    }
    let mut closed_cov = crate::vertex_set::VertexSet::empty(g.n());
    let mut open_union = crate::vertex_set::VertexSet::empty(g.n());
    let mut stats = SequenceStats::default();
    for &v in seq {
        let self_new = !closed_cov.contains(v);
        let nbr_new = !g.neighbors(v).is_subset(&closed_cov);
        let isolated = !open_union.contains(v);
        stats.a += isolated as u32;
        stats.b += (!self_new && nbr_new) as u32;
        stats.c += (self_new && nbr_new) as u32;
        stats.len += 1;
        closed_cov.union_with(&g.closed_neighbors(v));
        open_union.union_with(g.neighbors(v));
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, tree_t8};
    use crate::solver::solve;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn uniform_weights_give_grundy_number() {
        for g in [path(5).unwrap(), cycle(6).unwrap(), tree_t8(), complete(4).unwrap()] {
            let r = max_weighted_closed_sequence(&g, &StepWeights::uniform(1), &cfg()).unwrap();
            assert_eq!(r.value, solve(&g, Variant::Closed).unwrap().value);
            assert_eq!(r.stats.len, r.value);
        }
    }

    #[test]
    fn lexicographic_objective_on_p4() {
        let r = max_weighted_closed_sequence(&path(4).unwrap(), &StepWeights::lexicographic(2), &cfg()).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(r.value, r.stats.a + r.stats.len);
    }

    #[test]
    fn t8_beats_independence_bound() {
        let r = max_weighted_closed_sequence(&tree_t8(), &StepWeights::lexicographic(2), &cfg()).unwrap();
        assert!(r.value >= 11);
    }

    #[test]
    fn stats_of_single_steps() {
        let g = path(3).unwrap();
        let s = sequence_stats(&g, &[1]).unwrap();
        assert_eq!(
            s,
            SequenceStats {
                a: 1,
                b: 0,
                c: 1,
                len: 1
            }
        );
        let lone = Graph::edgeless(1).unwrap();
        assert_eq!(
            sequence_stats(&lone, &[0]).unwrap(),
            SequenceStats {
                a: 1,
                b: 0,
                c: 0,
                len: 1
            }
        );
        assert!(matches!(
            sequence_stats(&complete(2).unwrap(), &[0, 1]),
            Err(StatsError::Illegal(_))
        ));
    }

    #[test]
    fn max_a_on_p5_is_independence_number() {
        let r = max_weighted_closed_sequence(&path(5).unwrap(), &StepWeights::from_fn(|c| c.in_a() as u32), &cfg())
            .unwrap();
        assert_eq!(r.value, 3);
    }

    #[test]
    fn optimal_sequences_are_all_optimal() {
        let g = cycle(5).unwrap();
        let best = solve(&g, Variant::Closed).unwrap().value as usize;
        let all = optimal_weighted_sequences(&g, &StepWeights::uniform(1), &cfg(), 1000).unwrap();
        assert!(!all.is_empty());
        for s in &all {
            assert_eq!(s.len(), best);
            assert!(is_legal_sequence(&g, s, Variant::Closed).is_legal());
        }
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }
}
