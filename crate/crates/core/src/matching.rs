//! Maximum matchings in general graphs and the matching-structure results
//! built on them: Gallai–Edmonds barriers, the `(S, T, U)` partition of a
//! graph without large matchings, the bipartite/non-bipartite split, and
//! closed walks through a matching.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cycles::CycleCertificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColoring};
use crate::vertex_set::VertexSet;
use crate::Parity;

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, stored sorted with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct MatchingCertificate {
    pub edges: Vec<(usize, usize)>,
}

impl MatchingCertificate {
    /// Canonicalizes `edges` (each pair ordered, list sorted).
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        Self { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of saturated vertices, `2 * |M|`.
    pub fn saturation(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn saturated(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// True iff the edges are pairwise disjoint edges of `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new();
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v) && seen.insert(u) && seen.insert(v))
    }

    /// Every other edge of a cycle; saturates `2 * floor(len / 2)` vertices.
    pub fn from_cycle(c: &CycleCertificate) -> Self {
        let v = &c.vertices;
        Self::new((0..v.len() / 2).map(|i| (v[2 * i], v[2 * i + 1])).collect())
    }
}

// Edmonds' blossom algorithm with explicit base labels (O(n^3)).
struct Blossom<'a> {
    g: &'a Graph,
    n: usize,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            n,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for u in 0..self.n {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(v) = self.g.neighbors(u).iter().find(|&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.n];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    // Alternating-tree search from `root`, never entering `blocked`.
    // Returns the exposed endpoint of an augmenting path.
    fn find_path(&mut self, root: usize, blocked: &VertexSet) -> Option<usize> {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in *self.g.neighbors(v) - *blocked {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..self.n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn solve(&mut self) {
        self.greedy();
        let none = VertexSet::new();
        for v in 0..self.n {
            if self.mate[v] == NONE && self.g.degree(v) > 0 {
                if let Some(end) = self.find_path(v, &none) {
                    self.augment(end);
                }
            }
        }
    }

    fn certificate(&self) -> MatchingCertificate {
        MatchingCertificate::new((0..self.n).filter(|&v| self.mate[v] != NONE && v < self.mate[v]).map(|v| (v, self.mate[v])).collect())
    }
}

/// Maximum-cardinality matching of a general graph.
pub fn maximum_matching(g: &Graph) -> MatchingCertificate {
    let mut b = Blossom::new(g);
    b.solve();
    b.certificate()
}

/// Maximum matching of the subgraph induced by `within`.
pub fn maximum_matching_within(g: &Graph, within: &VertexSet) -> MatchingCertificate {
    maximum_matching(&g.induced(within))
}

/// The component (non-bipartite ones only, if `require_nonbipartite`) whose
/// own maximum matching saturates the most vertices, with that matching.
/// Ties go to the component with the smallest vertex.
pub fn best_component_matching(g: &Graph, require_nonbipartite: bool) -> Result<(VertexSet, MatchingCertificate)> {
    let m = maximum_matching(g);
    best_component_given(g, &m, require_nonbipartite).ok_or(Error::NoQualifyingComponent)
}

// Component choice from an already maximum matching of `g`: a maximum
// matching restricted to a component is maximum there.
pub(crate) fn best_component_given(
    g: &Graph,
    m: &MatchingCertificate,
    require_nonbipartite: bool,
) -> Option<(VertexSet, MatchingCertificate)> {
    let mut best: Option<(VertexSet, usize)> = None;
    for comp in g.components() {
        if require_nonbipartite && g.is_bipartite_within(&comp) {
            continue;
        }
        let inside = m.edges.iter().filter(|e| comp.contains(e.0)).count();
        if best.as_ref().is_none_or(|b| inside > b.1) {
            best = Some((comp, inside));
        }
    }
    best.map(|(comp, _)| {
        let edges = m.edges.iter().copied().filter(|e| comp.contains(e.0)).collect();
        (comp, MatchingCertificate::new(edges))
    })
}

/// Largest saturation of a matching inside one component (non-bipartite if
/// requested); 0 when no component qualifies.
pub fn best_component_saturation(g: &Graph, require_nonbipartite: bool) -> usize {
    best_component_matching(g, require_nonbipartite).map_or(0, |(_, m)| m.saturation())
}

/// Gallai–Edmonds decomposition: `d` holds the vertices missed by some
/// maximum matching, `a` their other neighbors, `c` everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiEdmonds {
    pub d: VertexSet,
    pub a: VertexSet,
    pub c: VertexSet,
    pub matching: MatchingCertificate,
}

pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let mut solver = Blossom::new(g);
    solver.solve();
    let matching = solver.certificate();
    let mate = solver.mate.clone();
    let mut d = VertexSet::new();
    for v in 0..g.vertex_count() {
        let u = mate[v];
        if u == NONE {
            d.insert(v);
            continue;
        }
        // v is missed by some maximum matching iff, after unmatching v, its
        // former partner u starts an augmenting path avoiding v.
        let mut probe = Blossom::new(g);
        probe.mate.clone_from(&mate);
        probe.mate[u] = NONE;
        probe.mate[v] = NONE;
        if probe.find_path(u, &VertexSet::singleton(v)).is_some() {
            d.insert(v);
        }
    }
    let mut a = VertexSet::new();
    for v in d {
        a |= *g.neighbors(v);
    }
    a -= d;
    let c = g.vertices() - d - a;
    GallaiEdmonds { d, a, c, matching }
}

/// Partition `{S, T, U}` of a graph without a matching saturating
/// `n_target` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuttePartition {
    pub s: VertexSet,
    pub t: VertexSet,
    pub u: VertexSet,
    pub n_target: usize,
}

impl TuttePartition {
    /// Checks the three conclusions against `g`: max degree of `g[T]` at
    /// most `sqrt|V| - 1`, no `T`-`U` edges, `|U| + 2|S| < n_target + sqrt|V|`.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.vertex_count();
        if (self.s | self.t | self.u) != g.vertices()
            || self.s.intersects(&self.t)
            || self.s.intersects(&self.u)
            || self.t.intersects(&self.u)
        {
            return Err("S, T, U do not partition the vertex set".into());
        }
        for v in self.t {
            let d = (*g.neighbors(v) & self.t).len();
            if (d + 1) * (d + 1) > n {
                return Err(format!("vertex {v} has degree {d} inside T, above sqrt({n}) - 1"));
            }
            if g.neighbors(v).intersects(&self.u) {
                return Err(format!("vertex {v} of T has a neighbor in U"));
            }
        }
        let lhs = self.u.len() + 2 * self.s.len();
        if lhs >= self.n_target {
            let excess = lhs - self.n_target;
            if excess * excess >= n {
                return Err(format!("|U| + 2|S| = {lhs} is not below {} + sqrt({n})", self.n_target));
            }
        }
        Ok(())
    }
}

/// Barrier partition from the Gallai–Edmonds decomposition: `S` is the
/// barrier `A`; odd components of `g - S` inside `D` with at most
/// `floor(sqrt|V|)` vertices form `T`; the larger ones together with the
/// perfectly matchable part `C` form `U`.
pub fn tutte_partition(g: &Graph, n_target: usize) -> Result<TuttePartition> {
    let ge = gallai_edmonds(g);
    if ge.matching.saturation() >= n_target {
        return Err(Error::Precondition(format!("a matching saturating {} >= {n_target} vertices exists", ge.matching.saturation())));
    }
    let n = g.vertex_count();
    let threshold = num_integer::Roots::sqrt(&n);
    let mut t = VertexSet::new();
    let mut u = ge.c;
    let on_d = g.induced(&ge.d);
    for comp in on_d.components().into_iter().filter(|c| c.is_subset(&ge.d)) {
        if comp.len() <= threshold {
            t |= comp;
        } else {
            u |= comp;
        }
    }
    let part = TuttePartition { s: ge.a, t, u, n_target };
    part.check(g).map_err(Error::Internal)?;
    Ok(part)
}

/// `V' | V''` split of a graph whose non-bipartite components carry no large matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteSplit {
    pub vprime: VertexSet,
    pub vdoubleprime: VertexSet,
    /// `alpha * n_scale`, the forbidden saturation.
    pub alpha_bound: BigRational,
}

impl BipartiteSplit {
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        for v in self.vprime {
            if g.neighbors(v).intersects(&self.vdoubleprime) {
                return Err(format!("edge between V' and V'' at vertex {v}"));
            }
        }
        if !g.is_bipartite_within(&self.vprime) {
            return Err("G[V'] is not bipartite".into());
        }
        let edges = BigInt::from(g.edges_within(&self.vdoubleprime));
        let cap =
            &self.alpha_bound * BigRational::from_integer(BigInt::from(self.vdoubleprime.len())) / BigRational::from_integer(2.into());
        if BigRational::from_integer(edges.clone()) > cap {
            return Err(format!("G[V''] has {edges} edges, above 0.5 * alpha * n * |V''| = {cap}"));
        }
        Ok(())
    }
}

/// A non-bipartite component with a matching at least as large as the
/// forbidden saturation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LargeMatching {
    pub component: VertexSet,
    pub matching: MatchingCertificate,
}

impl fmt::Display for LargeMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "non-bipartite component has a matching saturating {} vertices", self.matching.saturation())
    }
}

impl std::error::Error for LargeMatching {}

impl From<LargeMatching> for Error {
    fn from(e: LargeMatching) -> Self {
        Error::Precondition(e.to_string())
    }
}

/// Splits `g` into the union of its bipartite components and the rest.
/// Fails with the offending certificate if a non-bipartite component has a
/// matching saturating at least `alpha * n_scale` vertices.
pub fn bipartite_split(g: &Graph, alpha: &BigRational, n_scale: usize) -> std::result::Result<BipartiteSplit, LargeMatching> {
    let bound = alpha * BigRational::from_integer(BigInt::from(n_scale));
    let m = maximum_matching(g);
    let mut vprime = VertexSet::new();
    let mut vdoubleprime = VertexSet::new();
    for comp in g.components() {
        if g.is_bipartite_within(&comp) {
            vprime |= comp;
            continue;
        }
        let inside = MatchingCertificate::new(m.edges.iter().copied().filter(|e| comp.contains(e.0)).collect());
        if BigRational::from_integer(BigInt::from(inside.saturation())) >= bound {
            return Err(LargeMatching { component: comp, matching: inside });
        }
        vdoubleprime |= comp;
    }
    Ok(BipartiteSplit { vprime, vdoubleprime, alpha_bound: bound })
}

/// A closed walk `w0 w1 ... w(p-1) w0`; vertices may repeat.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ClosedWalk {
    pub vertices: Vec<usize>,
}

impl ClosedWalk {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let p = self.vertices.len();
        (0..p).map(move |i| (self.vertices[i], self.vertices[(i + 1) % p]))
    }

    /// Walk predicate: length of the given parity, every step an edge of `g`
    /// inside `component`, every matching edge traversed.
    pub fn check(&self, g: &Graph, m: &MatchingCertificate, parity: Parity, component: &VertexSet) -> bool {
        if self.is_empty() || !parity.matches(self.len()) {
            return false;
        }
        if !self.steps().all(|(a, b)| g.has_edge(a, b) && component.contains(a) && component.contains(b)) {
            return false;
        }
        m.edges.iter().all(|&(u, v)| self.steps().any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u)))
    }
}

/// Closed walk of the requested parity through every edge of `m`.
///
/// A tree inside the component of `m` connecting the matching edges (and,
/// for odd parity, a vertex of an odd cycle) is traversed twice around,
/// giving an even walk; for odd parity the odd cycle is spliced in at its
/// root. Matching edges already on the spliced cycle are not forced into
/// the tree.
pub fn closed_walk_through_matching(g: &Graph, m: &MatchingCertificate, parity: Parity) -> Result<ClosedWalk> {
    if m.is_empty() {
        return Err(Error::Precondition("matching is empty".into()));
    }
    if !m.verify(g) {
        return Err(Error::Precondition("not a matching of the graph".into()));
    }
    let component = g.component_of(m.edges[0].0);
    if !m.saturated().is_subset(&component) {
        return Err(Error::Precondition("matching edges lie in different components".into()));
    }

    let (cycle, root) = match parity {
        Parity::Even => (Vec::new(), m.edges[0].0),
        Parity::Odd => match g.two_coloring_within(&component) {
            TwoColoring::OddCycle(c) => {
                let r = c.vertices[0];
                (c.vertices, r)
            }
            TwoColoring::Bipartite(..) => {
                return Err(Error::Precondition("odd walk requested in a bipartite component".into()));
            }
        },
    };
    let on_cycle = |u: usize, v: usize| {
        let l = cycle.len();
        (0..l).any(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % l]);
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    };
    let forced: Vec<(usize, usize)> = m.edges.iter().copied().filter(|&(u, v)| !on_cycle(u, v)).collect();
    let mut terminals: VertexSet = forced.iter().flat_map(|&(u, v)| [u, v]).collect();
    terminals.insert(root);

    let tree = connecting_tree(g, &component, &forced, &terminals);

    let mut walk = cycle;
    let mut tour = Vec::new();
    euler_tour(&tree, root, NONE, &mut tour);
    tour.pop();
    walk.extend(tour);
    debug_assert!(ClosedWalk { vertices: walk.clone() }.check(g, m, parity, &component));
    Ok(ClosedWalk { vertices: walk })
}

// Spanning tree of `component` containing `forced` (Kruskal, forced edges
// first, then lexicographic), with non-terminal leaves pruned away.
fn connecting_tree(g: &Graph, component: &VertexSet, forced: &[(usize, usize)], terminals: &VertexSet) -> Graph {
    let n = g.vertex_count();
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let mut tree = Graph::empty(n).expect("n already validated");
    let others = g.induced(component).edges();
    for &(u, v) in forced.iter().chain(others.iter()) {
        let (a, b) = (find(&mut uf, u), find(&mut uf, v));
        if a != b {
            uf[a] = b;
            tree.insert_unchecked(u, v);
        }
    }
    loop {
        let leaves: Vec<usize> = component.iter().filter(|&v| tree.degree(v) == 1 && !terminals.contains(v)).collect();
        if leaves.is_empty() {
            break;
        }
        for v in leaves {
            if let Some(w) = tree.neighbors(v).first() {
                tree.remove_edge(v, w);
            }
        }
    }
    tree
}

fn euler_tour(tree: &Graph, v: usize, from: usize, out: &mut Vec<usize>) {
    out.push(v);
    for w in tree.neighbors(v).iter().filter(|&w| w != from) {
        euler_tour(tree, w, v, out);
        out.push(v);
    }
}
