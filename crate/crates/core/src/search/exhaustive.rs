use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::{ArrowInstance, ArrowVerdict, Arrows, SearchStats, Target};
use crate::cycles::{path_of_length, Work, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{pair_count, pair_from_index, pair_index, Graph};
use crate::matching::maximum_matching_within;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExhaustiveConfig {
    /// Search-tree node limit; exceeding it yields `Unknown`.
    pub budget: u64,
    /// Largest host decided exactly.
    pub exact_cap: usize,
    /// Lex-min pruning over vertex relabelings and color swaps.
    pub symmetry: bool,
    /// Largest vertex prefix checked for lex-minimality.
    pub symmetry_prefix: usize,
    /// Prune as soon as a partial coloring holds a target; when off,
    /// targets are only checked on complete colorings.
    pub target_pruning: bool,
    /// Worker threads, 0 for the global pool. Results do not depend on it.
    pub threads: usize,
}

impl Default for ExhaustiveConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, exact_cap: 13, symmetry: true, symmetry_prefix: 6, target_pruning: true, threads: 0 }
    }
}

impl ExhaustiveConfig {
    /// Plain enumeration: no symmetry breaking, targets checked at leaves.
    pub fn unpruned() -> Self {
        Self { symmetry: false, target_pruning: false, ..Self::default() }
    }
}

pub(crate) fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

// Subtrees handed to the worker pool per round, and the frontier size at
// which splitting stops. Both are fixed so the explored order, and hence
// the verdict and statistics, never depend on the worker count.
const BATCH: usize = 64;
const FRONTIER: usize = 256;

#[derive(Clone)]
struct State {
    classes: Vec<Graph>,
    // Value per edge in search order: colors 1..=k, `k + 1` for deleted.
    values: Vec<u8>,
    used: Vec<bool>,
    deleted: usize,
}

#[derive(Clone, Debug, Default)]
struct Counters {
    stats: SearchStats,
    limit: u64,
}

impl Counters {
    fn new(limit: u64) -> Self {
        Self { stats: SearchStats::default(), limit }
    }

    fn tick(&mut self) -> Result<()> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.limit {
            return Err(Error::BudgetExceeded { budget: self.limit });
        }
        Ok(())
    }
}

type Found = Option<Vec<u8>>;

struct Engine<'a> {
    inst: &'a ArrowInstance,
    cfg: &'a ExhaustiveConfig,
    k: u8,
    order: Vec<(usize, usize)>,
    // `group[c]` is the smallest color with the same target as `c`.
    group: Vec<u8>,
    // Value maps (indexed by value) permuting colors with equal targets.
    color_perms: Vec<Vec<u8>>,
    // Inverse vertex permutations per prefix size.
    vertex_perms: Vec<Vec<Vec<usize>>>,
    vertex_symmetry: bool,
}

impl<'a> Engine<'a> {
    fn new(inst: &'a ArrowInstance, cfg: &'a ExhaustiveConfig) -> Self {
        let k = inst.colors();
        let host = inst.host();
        let order: Vec<_> = (1..inst.n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|&(u, v)| host.has_edge(u, v)).collect();
        let group = (0..=k as usize)
            .map(|c| if c == 0 { 0 } else { (1..=c).find(|&d| inst.targets[d - 1] == inst.targets[c - 1]).unwrap() as u8 })
            .collect::<Vec<u8>>();
        let color_perms = if cfg.symmetry {
            (1..=k)
                .permutations(k as usize)
                .filter(|p| p.iter().enumerate().all(|(i, &c)| group[i + 1] == group[c as usize]))
                .map(|p| {
                    let mut m = vec![0u8];
                    m.extend(p);
                    m.push(k + 1);
                    m
                })
                .collect()
        } else {
            Vec::new()
        };
        let vertex_symmetry = cfg.symmetry && order.len() == pair_count(inst.n);
        let top = if vertex_symmetry { cfg.symmetry_prefix.min(inst.n) } else { 0 };
        let vertex_perms = (0..=top).map(|p| if p >= 3 { (0..p).permutations(p).collect() } else { Vec::new() }).collect();
        Self { inst, cfg, k, order, group, color_perms, vertex_perms, vertex_symmetry }
    }

    fn root(&self) -> State {
        let empty = Graph::empty(self.inst.n).expect("validated vertex count");
        State {
            classes: vec![empty; self.k as usize],
            values: Vec::with_capacity(self.order.len()),
            used: vec![false; self.k as usize + 1],
            deleted: 0,
        }
    }

    // Whether coloring `{u, v}` (already added to `class`) completes the target.
    fn completes(&self, class: &Graph, u: usize, v: usize, t: &Target) -> bool {
        match *t {
            Target::Cycle { length } => {
                if length > self.inst.n {
                    return false;
                }
                let mut without = class.clone();
                without.remove_edge(u, v);
                let all = VertexSet::range(0, self.inst.n);
                path_of_length(&without, u, v, length - 1, &all, &mut Work::unlimited()).expect("unlimited work").is_some()
            }
            Target::Matching { saturation, nonbipartite } => {
                let comp = class.component_of(u);
                if comp.len() < saturation || (nonbipartite && class.is_bipartite_within(&comp)) {
                    return false;
                }
                maximum_matching_within(class, &comp).saturation() >= saturation
            }
        }
    }

    fn leaf_avoids(&self, st: &State) -> bool {
        st.classes.iter().zip(&self.inst.targets).all(|(g, t)| !t.found_in(g).expect("exact check on a small host"))
    }

    // Canonical iff no relabeling of `{0..p}` combined with a color swap
    // gives a lexicographically smaller prefix.
    fn is_canonical(&self, values: &[u8], p: usize) -> bool {
        let m = pair_count(p);
        for inv in &self.vertex_perms[p] {
            for sigma in &self.color_perms {
                for idx in 0..m {
                    let (a, b) = pair_from_index(idx);
                    let new = sigma[values[pair_index(inv[a], inv[b])] as usize];
                    match new.cmp(&values[idx]) {
                        std::cmp::Ordering::Less => return false,
                        std::cmp::Ordering::Greater => break,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
        }
        true
    }

    fn for_each_child(
        &self,
        st: &mut State,
        ctr: &mut Counters,
        mut f: impl FnMut(&mut State, &mut Counters) -> Result<Found>,
    ) -> Result<Found> {
        let (u, v) = self.order[st.values.len()];
        let k = self.k;
        for val in 1..=k + 1 {
            if val == k + 1 {
                if st.deleted >= self.inst.deleted_budget {
                    continue;
                }
                st.deleted += 1;
            } else {
                let c = val as usize;
                let g = self.group[c] as usize;
                if self.cfg.symmetry && !st.used[c] && (g..c).any(|d| self.group[d] as usize == g && !st.used[d]) {
                    ctr.stats.symmetry_prunes += 1;
                    continue;
                }
                st.classes[c - 1].insert_unchecked(u, v);
                if self.cfg.target_pruning && self.completes(&st.classes[c - 1], u, v, &self.inst.targets[c - 1]) {
                    st.classes[c - 1].remove_edge(u, v);
                    ctr.stats.target_prunes += 1;
                    continue;
                }
            }
            st.values.push(val);
            let first_use = val <= k && !st.used[val as usize];
            if first_use {
                st.used[val as usize] = true;
            }
            let p = v + 1;
            let keep = !(self.vertex_symmetry && u + 1 == v && p < self.vertex_perms.len() && p >= 3 && !self.is_canonical(&st.values, p));
            let out = if keep {
                f(st, ctr)
            } else {
                ctr.stats.symmetry_prunes += 1;
                Ok(None)
            };
            if first_use {
                st.used[val as usize] = false;
            }
            st.values.pop();
            if val == k + 1 {
                st.deleted -= 1;
            } else {
                st.classes[val as usize - 1].remove_edge(u, v);
            }
            let found = out?;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn dfs(&self, st: &mut State, ctr: &mut Counters) -> Result<Found> {
        ctr.tick()?;
        if st.values.len() == self.order.len() {
            let ok = self.cfg.target_pruning || self.leaf_avoids(st);
            return Ok(ok.then(|| st.values.clone()));
        }
        self.for_each_child(st, ctr, |st, ctr| self.dfs(st, ctr))
    }

    fn run(&self) -> Result<ArrowVerdict> {
        let mut total = Counters::new(self.cfg.budget);
        let exceeded = |stats: SearchStats| {
            let stats = SearchStats { nodes: self.cfg.budget, ..stats };
            ArrowVerdict::unknown(stats, format!("node budget {} exhausted", self.cfg.budget))
        };
        // Breadth-first split into a frontier, in depth-first order.
        let mut frontier = vec![self.root()];
        while frontier.len() < FRONTIER && frontier.first().is_some_and(|s| s.values.len() < self.order.len()) {
            let mut next = Vec::new();
            for mut st in frontier {
                if total.tick().is_err() {
                    return Ok(exceeded(total.stats));
                }
                let r = self.for_each_child(&mut st, &mut total, |child, _| {
                    next.push(child.clone());
                    Ok(None)
                });
                r?;
            }
            frontier = next;
        }
        for batch in frontier.chunks(BATCH) {
            let remaining = self.cfg.budget.saturating_sub(total.stats.nodes);
            let results: Vec<(Result<Found>, Counters)> = batch
                .par_iter()
                .map(|st| {
                    let mut c = Counters::new(remaining);
                    let mut st = st.clone();
                    let r = self.dfs(&mut st, &mut c);
                    (r, c)
                })
                .collect();
            for (r, c) in results {
                total.stats.add(&c.stats);
                match r {
                    Err(Error::BudgetExceeded { .. }) => return Ok(exceeded(total.stats)),
                    Err(e) => return Err(e),
                    Ok(Some(values)) => return self.witness(&values, total.stats),
                    Ok(None) => {}
                }
                if total.stats.nodes > self.cfg.budget {
                    return Ok(exceeded(total.stats));
                }
            }
        }
        Ok(ArrowVerdict { arrows: Arrows::True, witness: None, stats: total.stats, note: None })
    }

    fn witness(&self, values: &[u8], stats: SearchStats) -> Result<ArrowVerdict> {
        let k = self.k;
        let extra = self.order.iter().zip(values).filter(|(_, &x)| x == k + 1).map(|(&e, _)| e);
        let deleted: Vec<_> = self.inst.fixed_deleted.iter().copied().chain(extra).collect();
        let mut c = crate::coloring::EdgeColoring::new(self.inst.n, k, self.inst.holes.clone(), deleted)?;
        for (&(u, v), &x) in self.order.iter().zip(values) {
            if x <= k {
                c.set(u, v, x)?;
            }
        }
        ArrowVerdict::found(self.inst, c, stats)
    }
}

/// Decides by backtracking over colorings in the fixed edge order whether
/// `inst` arrows its targets. Hosts above `cfg.exact_cap` and searches that
/// run out of budget come back `Unknown`.
pub fn arrow_exhaustive(inst: &ArrowInstance, cfg: &ExhaustiveConfig) -> Result<ArrowVerdict> {
    inst.validate()?;
    if inst.n > cfg.exact_cap {
        return Ok(ArrowVerdict::unknown(SearchStats::default(), format!("host size {} above the exact cap {}", inst.n, cfg.exact_cap)));
    }
    let engine = Engine::new(inst, cfg);
    with_threads(cfg.threads, || engine.run())
}

/// Exhaustive decision for matching demands only.
pub fn tau_check(inst: &ArrowInstance, cfg: &ExhaustiveConfig) -> Result<ArrowVerdict> {
    if let Some(t) = inst.targets.iter().find(|t| !t.is_matching()) {
        return Err(Error::Precondition(format!("tau_check takes matching targets only, got {t}")));
    }
    arrow_exhaustive(inst, cfg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RamseyOutcome {
    Exact {
        value: usize,
    },
    /// `lower <= R`, and `R <= upper` when known.
    Bracket {
        lower: usize,
        upper: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyResult {
    pub outcome: RamseyOutcome,
    /// Verdict per host size in the range.
    pub verdicts: Vec<(usize, ArrowVerdict)>,
}

/// The least `N` in `range` whose complete graph arrows `targets`, when the
/// verdicts pin it down; otherwise the tightest bracket they support.
pub fn ramsey_number_exact(targets: &[Target], range: std::ops::RangeInclusive<usize>, cfg: &ExhaustiveConfig) -> Result<RamseyResult> {
    let mut verdicts = Vec::new();
    let mut lower = *range.start();
    for n in range.clone() {
        let v = arrow_exhaustive(&ArrowInstance::complete(n, targets.to_vec())?, cfg)?;
        let arrows = v.arrows;
        verdicts.push((n, v));
        match arrows {
            Arrows::False => lower = n + 1,
            Arrows::True => {
                // Arrowing is monotone in N, so the first true settles it
                // once everything below is false.
                let exact = verdicts[..verdicts.len() - 1].iter().all(|(_, v)| v.arrows == Arrows::False);
                let outcome = if exact && n > *range.start() {
                    RamseyOutcome::Exact { value: n }
                } else {
                    RamseyOutcome::Bracket { lower, upper: Some(n) }
                };
                return Ok(RamseyResult { outcome, verdicts });
            }
            Arrows::Unknown => {}
        }
    }
    Ok(RamseyResult { outcome: RamseyOutcome::Bracket { lower, upper: None }, verdicts })
}
