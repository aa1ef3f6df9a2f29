//! Dense simple graphs on at most 512 vertices.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cycles::CycleCertificate;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::MAX_VERTICES;

/// Index of the unordered pair `{u, v}` in colex order: `(0,1), (0,2), (1,2), (0,3), ...`.
///
/// Adding vertex `v` appends the pairs `(0,v), ..., (v-1,v)`, so the first
/// `v(v+1)/2` indices cover the complete graph on `{0, ..., v}`.
#[inline]
pub fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(idx: usize) -> (usize, usize) {
    let mut b = ((((8 * idx + 1) as f64).sqrt() + 1.0) / 2.0) as usize;
    while b * (b - 1) / 2 > idx {
        b -= 1;
    }
    while (b + 1) * b / 2 <= idx {
        b += 1;
    }
    (idx - b * (b - 1) / 2, b)
}

#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub(crate) fn check_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_count(n)?;
        Ok(Self { n, adj: vec![VertexSet::new(); n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_count(n)?;
        let all = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut s = all;
                s.remove(v);
                s
            })
            .collect();
        Ok(Self { n, adj })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// Adds `{u, v}`; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[v].insert(u);
        Ok(self.adj[u].insert(v))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        self.adj[v].remove(u);
        self.adj[u].remove(v)
    }

    #[inline]
    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Subgraph induced by `keep`. Vertex labels are preserved; vertices
    /// outside `keep` become isolated.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let keep = *keep & self.vertices();
        let adj = (0..self.n).map(|v| if keep.contains(v) { self.adj[v] & keep } else { VertexSet::new() }).collect();
        Graph { n: self.n, adj }
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| (self.adj[v] & *set).len()).sum::<usize>() / 2
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    pub fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier {
                next |= self.adj[v];
            }
            next &= *within;
            next -= seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        self.reach(v, &self.vertices())
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, &left);
            left -= c;
            out.push(c);
        }
        out
    }

    /// Proper 2-coloring of the vertices, or an odd cycle proving none exists.
    pub fn two_coloring(&self) -> TwoColoring {
        self.two_coloring_within(&self.vertices())
    }

    /// As [`two_coloring`](Self::two_coloring), restricted to the subgraph induced by `within`.
    pub fn two_coloring_within(&self, within: &VertexSet) -> TwoColoring {
        let mut side = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        let (mut a, mut b) = (VertexSet::new(), VertexSet::new());
        let mut queue = VecDeque::new();
        for root in within.iter() {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            a.insert(root);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in (self.adj[u] & *within).iter() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        if side[w] == 0 {
                            a.insert(w);
                        } else {
                            b.insert(w);
                        }
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return TwoColoring::OddCycle(odd_cycle_from_tree(&parent, &depth, u, w));
                    }
                }
            }
        }
        TwoColoring::Bipartite(a, b)
    }

    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        match self.two_coloring() {
            TwoColoring::Bipartite(a, b) => Some((a, b)),
            TwoColoring::OddCycle(_) => None,
        }
    }

    pub fn is_bipartite_within(&self, within: &VertexSet) -> bool {
        matches!(self.two_coloring_within(within), TwoColoring::Bipartite(..))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees = (0..self.n).map(|v| self.degree(v));
        let min = degrees.clone().min().unwrap_or(0);
        let max = degrees.max().unwrap_or(0);
        let average = BigRational::new(BigInt::from(2 * self.edge_count()), BigInt::from(self.n));
        DegreeStats { min, max, average }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

/// Outcome of a bipartiteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoColoring {
    Bipartite(VertexSet, VertexSet),
    OddCycle(CycleCertificate),
}

// `u` and `w` share a BFS level parity and are adjacent; climbing both tree
// paths to their meeting point gives a simple odd cycle.
fn odd_cycle_from_tree(parent: &[usize], depth: &[usize], u: usize, w: usize) -> CycleCertificate {
    let (mut x, mut y) = (u, w);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    CycleCertificate::new(left)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    /// `2|E| / |V|`
    pub average: BigRational,
}

/// Vertex subsets whose internal pairs are absent from the host graph.
/// Holes may overlap.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HoleSpec {
    pub holes: Vec<VertexSet>,
}

impl HoleSpec {
    pub fn new(holes: Vec<VertexSet>) -> Self {
        Self { holes }
    }

    pub fn none() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.holes.iter().all(|h| h.len() < 2)
    }

    #[inline]
    pub fn forbids(&self, u: usize, v: usize) -> bool {
        self.holes.iter().any(|h| h.contains(u) && h.contains(v))
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        for h in &self.holes {
            if let Some(v) = h.last().filter(|&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(())
    }
}

/// `g` minus every pair inside a hole minus the listed deleted pairs.
pub fn apply_holes_and_deletions(g: &Graph, holes: &HoleSpec, deleted: &[(usize, usize)]) -> Result<Graph> {
    let n = g.vertex_count();
    holes.check_range(n)?;
    let mut out = g.clone();
    for h in &holes.holes {
        for v in h.iter() {
            out.adj[v] -= *h;
        }
    }
    for &(u, v) in deleted {
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        out.remove_edge(u, v);
    }
    Ok(out)
}
