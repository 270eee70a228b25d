//! Exact longest-sequence search over a "choice system".
//!
//! A choice system is a ground set plus a list of choices, each with a
//! *test* set and an *add* set. A choice is legal when its test set is not
//! contained in the covered set (and, if `track_used`, it has not been used);
//! choosing it adds its add set to the covered set. All four domination
//! variants are instances:
//!
//! | variant | test   | add    | track_used |
//! |---------|--------|--------|------------|
//! | Total   | `N(v)` | `N(v)` | no         |
//! | Closed  | `N[v]` | `N[v]` | no         |
//! | Z       | `N(v)` | `N[v]` | no         |
//! | L       | `N[v]` | `N(v)` | yes        |
//!
//! Before searching, the system is reduced: ground elements outside every
//! test set are dropped, ground elements with identical incidence are merged,
//! choices with identical `(test, add)` and `test ⊆ add` are merged, and the
//! remaining system is split into independent components that are solved
//! separately. Each component is searched depth-first with a memo table keyed
//! by the covered mask (plus the used mask when tracked), storing either exact
//! values or proven upper bounds.

use crate::vertex_set::VertexSet;
use rustc_hash::FxHashMap;
use std::hash::Hash;
use std::ops::{BitAnd, BitOr, Not};

pub(crate) trait Mask:
    Copy + Eq + Hash + Default + BitOr<Output = Self> + BitAnd<Output = Self> + Not<Output = Self>
{
    const BITS: usize;
    fn bit(i: usize) -> Self;
    fn count(self) -> u32;
    fn is_zero(self) -> bool;
}

impl Mask for u64 {
    const BITS: usize = 64;
    fn bit(i: usize) -> Self {
        1 << i
    }
    fn count(self) -> u32 {
        self.count_ones()
    }
    fn is_zero(self) -> bool {
        self == 0
    }
}

impl Mask for u128 {
    const BITS: usize = 128;
    fn bit(i: usize) -> Self {
        1 << i
    }
    fn count(self) -> u32 {
        self.count_ones()
    }
    fn is_zero(self) -> bool {
        self == 0
    }
}

#[derive(Debug, Clone)]
pub(crate) struct RawChoice {
    pub id: usize,
    pub test: VertexSet,
    pub add: VertexSet,
}

#[derive(Debug, Clone)]
pub(crate) struct ChoiceSystem {
    pub choices: Vec<RawChoice>,
    pub track_used: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search nodes whose children were enumerated.
    pub states_expanded: u64,
    /// Memo lookups that returned without further search.
    pub memo_hits: u64,
    /// Memo entries at the end of the search, summed over components.
    pub memo_entries: u64,
    /// Independent components the problem split into.
    pub components: usize,
}

impl SearchStats {
    pub(crate) fn absorb(&mut self, other: SearchStats) {
        self.states_expanded += other.states_expanded;
        self.memo_hits += other.memo_hits;
        self.memo_entries += other.memo_entries;
        self.components += other.components;
    }
}

#[derive(Debug)]
pub(crate) struct SystemSolution {
    pub value: u32,
    /// Choice ids in sequence order.
    pub sequence: Vec<usize>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ComponentTooLarge {
    pub size: usize,
}

/// A reduced, connected piece of a choice system over local indices.
struct Component {
    ids: Vec<usize>,
    tests: Vec<Vec<usize>>,
    adds: Vec<Vec<usize>>,
    ground: usize,
}

fn reduce(system: &ChoiceSystem) -> Vec<Component> {
    let choices: Vec<&RawChoice> = system.choices.iter().filter(|c| !c.test.is_empty()).collect();
    if choices.is_empty() {
        return Vec::new();
    }
    let mut testable = VertexSet::default();
    for c in &choices {
        testable.union_with(&c.test);
    }

    // Merge ground elements that lie in exactly the same test and add sets.
    let mut profiles: FxHashMap<(Vec<usize>, Vec<usize>), usize> = FxHashMap::default();
    let mut representatives = VertexSet::default();
    for e in testable.iter() {
        let in_test: Vec<usize> = (0..choices.len()).filter(|&i| choices[i].test.contains(e)).collect();
        let in_add: Vec<usize> = (0..choices.len()).filter(|&i| choices[i].add.contains(e)).collect();
        profiles.entry((in_test, in_add)).or_insert_with(|| {
            representatives.insert(e);
            e
        });
    }

    // Merge choices that are interchangeable and exclude each other.
    let mut kept: Vec<(usize, VertexSet, VertexSet)> = Vec::new();
    let mut seen: FxHashMap<(VertexSet, VertexSet), ()> = FxHashMap::default();
    for c in &choices {
        let test = c.test.intersection(&representatives);
        let add = c.add.intersection(&representatives);
        if test.is_subset(&add) && seen.insert((test.clone(), add.clone()), ()).is_some() {
            continue;
        }
        kept.push((c.id, test, add));
    }

    // Union-find over choices through shared ground elements.
    let mut parent: Vec<usize> = (0..kept.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut owner: FxHashMap<usize, usize> = FxHashMap::default();
    for (i, (_, test, add)) in kept.iter().enumerate() {
        for e in test.union(add).iter() {
            match owner.get(&e) {
                Some(&j) => {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
                None => {
                    owner.insert(e, i);
                }
            }
        }
    }

    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 0..kept.len() {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, members)) => members.push(i),
            None => groups.push((r, vec![i])),
        }
    }

    groups
        .into_iter()
        .map(|(_, members)| {
            let mut ground = VertexSet::default();
            for &i in &members {
                ground.union_with(&kept[i].1.union(&kept[i].2));
            }
            let local: Vec<usize> = ground.iter().collect();
            let to_local = |s: &VertexSet| -> Vec<usize> {
                s.iter()
                    .map(|e| local.binary_search(&e).expect("member of ground"))
                    .collect()
            };
            Component {
                ids: members.iter().map(|&i| kept[i].0).collect(),
                tests: members.iter().map(|&i| to_local(&kept[i].1)).collect(),
                adds: members.iter().map(|&i| to_local(&kept[i].2)).collect(),
                ground: local.len(),
            }
        })
        .collect()
}

const EXACT: u16 = 0x8000;

struct Engine<M: Mask> {
    tests: Vec<M>,
    adds: Vec<M>,
    both: Vec<M>,
    only_test: Vec<M>,
    track_used: bool,
    memo: FxHashMap<M, u16>,
    memo_used: FxHashMap<(M, M), u16>,
    stats: SearchStats,
}

impl<M: Mask> Engine<M> {
    fn new(c: &Component, track_used: bool) -> Self {
        let to_mask = |v: &Vec<usize>| v.iter().fold(M::default(), |m, &e| m | M::bit(e));
        let tests: Vec<M> = c.tests.iter().map(to_mask).collect();
        let adds: Vec<M> = c.adds.iter().map(to_mask).collect();
        let both = tests.iter().zip(&adds).map(|(&t, &a)| t & a).collect();
        let only_test = tests.iter().zip(&adds).map(|(&t, &a)| t & !a).collect();
        Engine {
            tests,
            adds,
            both,
            only_test,
            track_used,
            memo: FxHashMap::default(),
            memo_used: FxHashMap::default(),
            stats: SearchStats::default(),
        }
    }

    fn legal(&self, i: usize, covered: M, used: M) -> bool {
        !(self.tests[i] & !covered).is_zero() && (!self.track_used || (used & M::bit(i)).is_zero())
    }

    fn lookup(&self, covered: M, used: M) -> Option<u16> {
        if self.track_used {
            self.memo_used.get(&(covered, used)).copied()
        } else {
            self.memo.get(&covered).copied()
        }
    }

    fn store(&mut self, covered: M, used: M, entry: u16) {
        if self.track_used {
            self.memo_used.insert((covered, used), entry);
        } else {
            self.memo.insert(covered, entry);
        }
    }

    fn child(&self, i: usize, covered: M, used: M) -> (M, M) {
        let used = if self.track_used { used | M::bit(i) } else { used };
        (covered | self.adds[i], used)
    }

    /// Returns `(value, exact)`. When `exact` is false, `value` is an upper
    /// bound on the best continuation and does not exceed `alpha`.
    fn search(&mut self, covered: M, used: M, alpha: i32) -> (u32, bool) {
        let mut known_upper = u32::MAX;
        if let Some(entry) = self.lookup(covered, used) {
            let v = (entry & !EXACT) as u32;
            if entry & EXACT != 0 || v as i32 <= alpha {
                self.stats.memo_hits += 1;
                return (v, entry & EXACT != 0);
            }
            known_upper = v;
        }

        let mut candidates: Vec<(u32, usize)> = Vec::new();
        let mut reach_both = M::default();
        let mut reach_only = M::default();
        for i in 0..self.tests.len() {
            if self.legal(i, covered, used) {
                reach_both = reach_both | (self.both[i] & !covered);
                reach_only = reach_only | (self.only_test[i] & !covered);
                candidates.push(((self.adds[i] & !covered).count(), i));
            }
        }
        let bound = (candidates.len() as u32)
            .min(reach_both.count() + reach_only.count())
            .min(known_upper);
        if bound == 0 {
            self.store(covered, used, EXACT);
            return (0, true);
        }
        if bound as i32 <= alpha {
            self.store(covered, used, bound as u16);
            return (bound, false);
        }

        self.stats.states_expanded += 1;
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut best = 0u32;
        let mut failed_upper = 0u32;
        for &(_, i) in &candidates {
            if best == bound {
                break;
            }
            let target = alpha.max(best as i32) - 1;
            let (c2, u2) = self.child(i, covered, used);
            let (v, exact) = self.search(c2, u2, target);
            if exact {
                best = best.max(v + 1);
            } else {
                failed_upper = failed_upper.max(v + 1);
            }
        }
        if failed_upper <= best {
            self.store(covered, used, best as u16 | EXACT);
            (best, true)
        } else {
            let upper = best.max(failed_upper);
            self.store(covered, used, upper as u16);
            (upper, false)
        }
    }

    fn solve(&mut self) -> (u32, Vec<usize>) {
        let (value, exact) = self.search(M::default(), M::default(), -1);
        debug_assert!(exact);
        let mut sequence = Vec::with_capacity(value as usize);
        let (mut covered, mut used) = (M::default(), M::default());
        let mut remaining = value;
        while remaining > 0 {
            let legal: Vec<usize> = (0..self.tests.len())
                .filter(|&i| self.legal(i, covered, used))
                .collect();
            let next = legal
                .into_iter()
                .find(|&i| {
                    if remaining == 1 {
                        return true;
                    }
                    let (c2, u2) = self.child(i, covered, used);
                    let (v, exact) = self.search(c2, u2, remaining as i32 - 2);
                    exact && v == remaining - 1
                })
                .expect("memoized optimum is reachable");
            sequence.push(next);
            (covered, used) = self.child(next, covered, used);
            remaining -= 1;
        }
        self.stats.memo_entries = (self.memo.len() + self.memo_used.len()) as u64;
        (value, sequence)
    }
}

/// Solves a choice system exactly.
pub(crate) fn solve_system(system: &ChoiceSystem) -> Result<SystemSolution, ComponentTooLarge> {
    let components = reduce(system);
    let mut total = 0;
    let mut sequence = Vec::new();
    let mut stats = SearchStats::default();
    for comp in &components {
        let width = if system.track_used {
            comp.ground.max(comp.ids.len())
        } else {
            comp.ground
        };
        let (value, local) = if width <= <u64 as Mask>::BITS {
            let mut e = Engine::<u64>::new(comp, system.track_used);
            let out = e.solve();
            stats.absorb(e.stats);
            out
        } else if width <= <u128 as Mask>::BITS {
            let mut e = Engine::<u128>::new(comp, system.track_used);
            let out = e.solve();
            stats.absorb(e.stats);
            out
        } else {
            return Err(ComponentTooLarge { size: width });
        };
        total += value;
        sequence.extend(local.into_iter().map(|i| comp.ids[i]));
    }
    stats.components = components.len();
    Ok(SystemSolution {
        value: total,
        sequence,
        stats,
    })
}
