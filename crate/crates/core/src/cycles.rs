//! Exact cycle search by length and parity, and a constructive long-cycle
//! extraction for graphs above the Erdős–Gallai edge threshold.
//!
//! All searches are depth-first over simple paths anchored at the smallest
//! vertex of the cycle. Each node recomputes the set of vertices still
//! reachable from the path's end through unused vertices; that set bounds
//! both the length still attainable and whether the path can close.
//! Work is counted in path extensions and capped by a budget, and running
//! out of budget is an error distinct from "no such cycle".

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::Parity;

/// Default cap on path extensions for exact searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A cycle `v0 v1 ... v(l-1) v0` given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct CycleCertificate {
    pub vertices: Vec<usize>,
}

impl CycleCertificate {
    pub fn new(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    /// Cycle length (number of vertices, equivalently edges).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let l = self.vertices.len();
        (0..l).map(move |i| (self.vertices[i], self.vertices[(i + 1) % l]))
    }
}

/// Counts path extensions against a fixed limit.
#[derive(Clone, Debug)]
pub struct Work {
    used: u64,
    limit: u64,
}

impl Work {
    pub fn new(limit: u64) -> Self {
        Self { used: 0, limit }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded { budget: self.limit });
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// True iff `c` is a cycle of length at least 3 in `g` on distinct vertices.
pub fn verify_cycle(g: &Graph, c: &CycleCertificate) -> bool {
    let n = g.vertex_count();
    if c.len() < 3 || c.vertices.iter().any(|&v| v >= n) {
        return false;
    }
    let distinct: VertexSet = c.vertices.iter().collect();
    distinct.len() == c.len() && c.edges().all(|(u, v)| g.has_edge(u, v))
}

// Extends `path` through `free` until it holds `target` vertices, the last
// of which must lie in `closers`.
fn extend_exact(g: &Graph, path: &mut Vec<usize>, free: VertexSet, target: usize, closers: &VertexSet, work: &mut Work) -> Result<bool> {
    work.tick()?;
    let cur = *path.last().expect("path is never empty");
    let depth = path.len();
    if depth == target {
        return Ok(closers.contains(cur));
    }
    let remaining = target - depth;
    let next = *g.neighbors(cur) & free;
    if remaining == 1 {
        return Ok(match (next & *closers).first() {
            Some(w) => {
                path.push(w);
                true
            }
            None => false,
        });
    }
    let mut within = free;
    within.insert(cur);
    let mut reach = g.reach(cur, &within);
    reach.remove(cur);
    if reach.len() < remaining || !reach.intersects(closers) {
        return Ok(false);
    }
    for w in next {
        path.push(w);
        let mut rest = free;
        rest.remove(w);
        if extend_exact(g, path, rest, target, closers, work)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// A simple path with exactly `edges` edges from `from` to `to`, using only
/// vertices of `within` as interior vertices.
pub fn path_of_length(g: &Graph, from: usize, to: usize, edges: usize, within: &VertexSet, work: &mut Work) -> Result<Option<Vec<usize>>> {
    if from == to || edges == 0 {
        return Ok(None);
    }
    if edges == 1 {
        return Ok(g.has_edge(from, to).then(|| vec![from, to]));
    }
    let mut free = *within;
    free.remove(from);
    free.remove(to);
    let closers = *g.neighbors(to) & free;
    let mut path = vec![from];
    if extend_exact(g, &mut path, free, edges, &closers, work)? {
        path.push(to);
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

/// A cycle of length exactly `len`, or `None` if `g` has none.
pub fn has_cycle_of_length(g: &Graph, len: usize, budget: u64) -> Result<Option<CycleCertificate>> {
    if len < 3 {
        return Err(Error::Precondition(format!("cycle length {len} < 3")));
    }
    let n = g.vertex_count();
    if len > n {
        return Ok(None);
    }
    let mut work = Work::new(budget);
    for s in 0..n {
        let allowed = VertexSet::range(s + 1, n);
        let first = *g.neighbors(s) & allowed;
        if first.len() < 2 {
            continue;
        }
        for v1 in first {
            // Orient each cycle once: the closing vertex exceeds the second.
            let closers = first & VertexSet::range(v1 + 1, n);
            if closers.is_empty() {
                break;
            }
            let mut path = vec![s, v1];
            let mut free = allowed;
            free.remove(v1);
            if extend_exact(g, &mut path, free, len, &closers, &mut work)? {
                return Ok(Some(CycleCertificate::new(path)));
            }
        }
    }
    Ok(None)
}

struct LongestSearch<'a> {
    g: &'a Graph,
    parity: Option<Parity>,
    anchor: usize,
    closers: VertexSet,
    best: Vec<usize>,
    // Stop as soon as a cycle this long is found.
    enough: usize,
    work: Work,
}

impl LongestSearch<'_> {
    fn admits(&self, len: usize) -> bool {
        self.parity.is_none_or(|p| p.matches(len))
    }

    fn best_len(&self) -> usize {
        self.best.len()
    }

    fn done(&self) -> bool {
        self.best_len() >= self.enough
    }

    fn dfs(&mut self, path: &mut Vec<usize>, free: VertexSet) -> Result<()> {
        self.work.tick()?;
        let cur = *path.last().expect("path is never empty");
        let depth = path.len();
        if depth >= 3 && self.closers.contains(cur) && self.admits(depth) && depth > self.best_len() {
            self.best = path.clone();
            if self.done() {
                return Ok(());
            }
        }
        let mut within = free;
        within.insert(cur);
        let mut reach = self.g.reach(cur, &within);
        reach.remove(cur);
        let reach_closers = reach & self.closers;
        if reach_closers.is_empty() {
            return Ok(());
        }
        let mut bound = depth + reach.len();
        if !self.admits(bound) {
            bound -= 1;
        }
        if bound <= self.best_len() {
            return Ok(());
        }
        for w in *self.g.neighbors(cur) & free {
            path.push(w);
            let mut rest = free;
            rest.remove(w);
            self.dfs(path, rest)?;
            path.pop();
            if self.done() {
                return Ok(());
            }
        }
        Ok(())
    }

    fn run(mut self, within: &VertexSet) -> Result<Option<CycleCertificate>> {
        let g = self.g;
        let n = g.vertex_count();
        for s in within.iter() {
            let allowed = *within & VertexSet::range(s + 1, n);
            let first = *g.neighbors(s) & allowed;
            if first.len() < 2 {
                continue;
            }
            let mut comp = g.reach(s, &(allowed | VertexSet::singleton(s)));
            comp.remove(s);
            let mut bound = comp.len() + 1;
            if !self.admits(bound) {
                bound -= 1;
            }
            if bound <= self.best_len() {
                continue;
            }
            self.anchor = s;
            for v1 in first {
                self.closers = first & VertexSet::range(v1 + 1, n);
                if self.closers.is_empty() {
                    break;
                }
                let mut path = vec![s, v1];
                let mut free = allowed;
                free.remove(v1);
                self.dfs(&mut path, free)?;
                if self.done() {
                    return Ok(Some(CycleCertificate::new(self.best)));
                }
            }
        }
        debug_assert!(self.anchor < n || n == 0);
        Ok((!self.best.is_empty()).then(|| CycleCertificate::new(self.best)))
    }
}

/// A longest cycle of the requested parity (`None` = any parity), or `None`
/// if `g` has no such cycle.
pub fn longest_cycle(g: &Graph, parity: Option<Parity>, budget: u64) -> Result<Option<CycleCertificate>> {
    longest_cycle_within(g, &g.vertices(), parity, budget)
}

/// As [`longest_cycle`], on the subgraph induced by `within`.
pub fn longest_cycle_within(g: &Graph, within: &VertexSet, parity: Option<Parity>, budget: u64) -> Result<Option<CycleCertificate>> {
    LongestSearch { g, parity, anchor: 0, closers: VertexSet::new(), best: Vec::new(), enough: usize::MAX, work: Work::new(budget) }
        .run(within)
}

/// Some cycle of length at least `min_len` inside `within`, if one exists.
pub fn cycle_at_least(g: &Graph, within: &VertexSet, min_len: usize, budget: u64) -> Result<Option<CycleCertificate>> {
    let found = LongestSearch {
        g,
        parity: None,
        anchor: 0,
        closers: VertexSet::new(),
        best: Vec::new(),
        enough: min_len.max(3),
        work: Work::new(budget),
    }
    .run(within)?;
    Ok(found.filter(|c| c.len() >= min_len))
}

/// A cycle of length at least `m` in a graph with at least
/// `(m-1)(n-1)/2 + 1` edges.
///
/// Vertices of degree below `ceil(m/2)` are stripped first; the edge count
/// guarantees a core on at least `m` vertices that still satisfies the
/// threshold. On the core a maximal path is grown (smallest-index
/// neighbor first) and closed through its endpoints' neighborhoods, with
/// rotations of the path to reach new endpoints. If that does not reach
/// length `m`, an exact search on the core completes the job.
pub fn erdos_gallai_cycle(g: &Graph, m: usize, budget: u64) -> Result<CycleCertificate> {
    let n = g.vertex_count();
    if m < 3 || m > n {
        return Err(Error::Precondition(format!("need 3 <= m <= n, got m = {m}, n = {n}")));
    }
    let edges = g.edge_count();
    if 2 * edges < (m - 1) * (n - 1) + 2 {
        return Err(Error::Precondition(format!("{edges} edges is below the threshold (m-1)(n-1)/2 + 1 for m = {m}, n = {n}")));
    }
    let core = strip_low_degree(g, m);
    let found = match rotate_for_cycle(g, &core, m) {
        Some(c) => c,
        None => cycle_at_least(g, &core, m, budget)?
            .ok_or_else(|| Error::Internal("no long cycle in a core above the edge threshold".into()))?,
    };
    debug_assert!(verify_cycle(g, &found) && found.len() >= m);
    Ok(found)
}

// Removes vertices of degree < ceil(m/2), smallest index first, while more
// than `m` vertices remain. Each removal deletes at most (m-1)/2 edges, so
// the threshold carries over to the shrunken graph.
fn strip_low_degree(g: &Graph, m: usize) -> VertexSet {
    let half = m.div_ceil(2);
    let mut core = g.vertices();
    'outer: while core.len() > m {
        for v in core {
            if (*g.neighbors(v) & core).len() < half {
                core.remove(v);
                continue 'outer;
            }
        }
        break;
    }
    core
}

fn extend_greedy(g: &Graph, path: &mut Vec<usize>, on_path: &mut VertexSet, core: &VertexSet) {
    while let Some(w) = (*g.neighbors(*path.last().unwrap()) & *core - *on_path).first() {
        path.push(w);
        on_path.insert(w);
    }
}

// Longest cycle closing at the last vertex of `path` through one of its
// neighbors on the path.
fn close_at_end(g: &Graph, path: &[usize]) -> Option<CycleCertificate> {
    let end = *path.last()?;
    let nb = g.neighbors(end);
    let i = path.iter().position(|v| nb.contains(*v))?;
    (path.len() - i >= 3).then(|| CycleCertificate::new(path[i..].to_vec()))
}

fn rotate_for_cycle(g: &Graph, core: &VertexSet, m: usize) -> Option<CycleCertificate> {
    let start = core.first()?;
    let mut path = vec![start];
    let mut on_path = VertexSet::singleton(start);
    extend_greedy(g, &mut path, &mut on_path, core);
    path.reverse();
    extend_greedy(g, &mut path, &mut on_path, core);

    let mut best: Option<CycleCertificate> = None;
    let mut seen_ends = VertexSet::new();
    let rounds = 4 * core.len();
    for _ in 0..rounds {
        for candidate in [close_at_end(g, &path), {
            let mut rev = path.clone();
            rev.reverse();
            close_at_end(g, &rev)
        }]
        .into_iter()
        .flatten()
        {
            if best.as_ref().is_none_or(|b| candidate.len() > b.len()) {
                best = Some(candidate);
            }
        }
        if best.as_ref().is_some_and(|b| b.len() >= m) {
            return best;
        }
        // Rotate: for end e adjacent to path[i], the path
        // path[..=i] + reverse(path[i+1..]) ends at path[i+1].
        let end = *path.last().unwrap();
        seen_ends.insert(end);
        let k = path.len();
        let pivot = (0..k.saturating_sub(2))
            .filter(|&i| g.has_edge(end, path[i]) && !seen_ends.contains(path[i + 1]))
            .max_by_key(|&i| ((*g.neighbors(path[i + 1]) & *core - on_path).len(), usize::MAX - path[i + 1]))?;
        path[pivot + 1..].reverse();
        extend_greedy(g, &mut path, &mut on_path, core);
    }
    best.filter(|b| b.len() >= m)
}
