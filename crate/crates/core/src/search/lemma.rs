//! Sampling harness for the matching lemmas on nearly complete graphs.
//!
//! The lemmas are asymptotic; here each one is instantiated at a fixed
//! finite size, random instances meeting the finite hypotheses are drawn
//! (uniformly, and by a local search that pushes towards a failure of the
//! conclusion), and the conclusion is evaluated exactly. The instantiation
//! is spelled out in every report's `notes`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::exhaustive::with_threads;
use super::randomized::derive_seed;
use crate::bounds::{ceil, floor, int, lemma_dwa_host_size, lemma_trzy_host_size, ratio, sqrt_upper, HoleParams, Rational};
use crate::coloring::{ColoringFile, EdgeColoring, GraphFile};
use crate::error::{Error, Result};
use crate::graph::{pair_count, pair_from_index, pair_index, Graph, HoleSpec};
use crate::matching::{best_component_saturation, maximum_matching_within};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaId {
    /// Nearly complete bipartite graph: a large component with a large matching.
    L2,
    /// Complete graph minus two cliques: a component with a large matching.
    Double,
    /// Two colors on a complete graph with a hole.
    Dwa,
    /// As `Dwa`, with the second color's component non-bipartite.
    Trzy,
    /// Three colors, the third mostly bipartite.
    F1,
}

impl FromStr for LemmaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "l2" => LemmaId::L2,
            "double" => LemmaId::Double,
            "dwa" => LemmaId::Dwa,
            "trzy" => LemmaId::Trzy,
            "f1" => LemmaId::F1,
            _ => return Err(Error::Precondition(format!("unknown lemma '{s}' (l2, double, dwa, trzy, f1)"))),
        })
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaId::L2 => "l2",
            LemmaId::Double => "double",
            LemmaId::Dwa => "dwa",
            LemmaId::Trzy => "trzy",
            LemmaId::F1 => "f1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaParams {
    L2 { v1: usize, v2: usize, epsilon: Rational },
    Double { n: usize, nu1: Rational, nu2: Rational, epsilon: Rational },
    Dwa { hole: HoleParams, n: u64 },
    Trzy { hole: HoleParams, n: u64 },
    F1 { alpha1: Rational, alpha2: Rational, epsilon: Rational, n: u64 },
}

impl LemmaParams {
    pub fn id(&self) -> LemmaId {
        match self {
            LemmaParams::L2 { .. } => LemmaId::L2,
            LemmaParams::Double { .. } => LemmaId::Double,
            LemmaParams::Dwa { .. } => LemmaId::Dwa,
            LemmaParams::Trzy { .. } => LemmaId::Trzy,
            LemmaParams::F1 { .. } => LemmaId::F1,
        }
    }

    fn describe(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            m.insert(k.to_string(), v);
        };
        match self {
            LemmaParams::L2 { v1, v2, epsilon } => {
                put("v1", v1.to_string());
                put("v2", v2.to_string());
                put("epsilon", epsilon.to_string());
            }
            LemmaParams::Double { n, nu1, nu2, epsilon } => {
                put("N", n.to_string());
                put("nu1", nu1.to_string());
                put("nu2", nu2.to_string());
                put("epsilon", epsilon.to_string());
            }
            LemmaParams::Dwa { hole, n } | LemmaParams::Trzy { hole, n } => {
                put("alpha", hole.alpha.to_string());
                put("beta", hole.beta.to_string());
                put("nu", hole.nu.to_string());
                put("epsilon", hole.epsilon.to_string());
                put("n", n.to_string());
            }
            LemmaParams::F1 { alpha1, alpha2, epsilon, n } => {
                put("alpha1", alpha1.to_string());
                put("alpha2", alpha2.to_string());
                put("epsilon", epsilon.to_string());
                put("n", n.to_string());
            }
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HarnessOptions {
    /// Local-search steps for each adversarial sample.
    pub local_search_steps: usize,
    /// Worker threads, 0 for the global pool. Results do not depend on it.
    pub threads: usize,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        Self { local_search_steps: 100, threads: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleKind {
    Uniform,
    Adversarial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Graph { graph: GraphFile, notes: Vec<String> },
    Coloring { coloring: ColoringFile },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaFailure {
    pub sample: usize,
    pub seed: u64,
    pub kind: SampleKind,
    /// How far the best disjunct of the conclusion falls short, in vertices.
    pub shortfall: i64,
    pub witness: Witness,
    /// `None` if the witness meets every finite hypothesis on re-check.
    pub hypothesis_violation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    /// Vertices of the host graph.
    pub host_size: usize,
    pub samples: usize,
    pub passed: usize,
    pub uniform_samples: usize,
    pub adversarial_samples: usize,
    /// Smallest slack of the conclusion over all samples; negative on failure.
    pub min_margin: i64,
    pub failures: Vec<LemmaFailure>,
    pub notes: Vec<String>,
}

impl LemmaReport {
    /// Failures whose witness meets every finite hypothesis.
    pub fn genuine_failures(&self) -> usize {
        self.failures.iter().filter(|f| f.hypothesis_violation.is_none()).count()
    }
}

fn to_i64(x: &Rational) -> i64 {
    ceil(x).to_i64().expect("threshold fits in i64")
}

fn rat(x: usize) -> Rational {
    int(x as i64)
}

// Everything fixed by the parameters: sizes, thresholds, budgets.
#[derive(Clone, Debug)]
struct Setup {
    lemma: LemmaId,
    host: usize,
    // l2: the sides are 0..v1 and v1..v1+v2.
    v1: usize,
    v2: usize,
    min_edges: usize,
    // double
    u_sizes: [usize; 2],
    // dwa, trzy, f1
    hole: usize,
    // Extra deletions allowed beyond holes.
    deletions: usize,
    // Thresholds of the conclusion, already rounded up to integers.
    need: [i64; 2],
    // f1: least size of the union of bipartite color-3 components.
    bipartite_part: usize,
    notes: Vec<String>,
}

fn check_epsilon(eps: &Rational, cap: &Rational) -> Result<()> {
    if eps <= &Rational::zero() || eps >= cap {
        return Err(Error::Hypothesis(format!("epsilon = {eps} must lie in (0, {cap})")));
    }
    Ok(())
}

fn host_count(x: u64) -> Result<usize> {
    let n = usize::try_from(x).map_err(|_| Error::Hypothesis("host too large".into()))?;
    if n == 0 || n > crate::MAX_VERTICES {
        return Err(Error::Hypothesis(format!("host size {n} outside 1..={}", crate::MAX_VERTICES)));
    }
    Ok(n)
}

impl Setup {
    fn new(p: &LemmaParams) -> Result<Self> {
        let asymptotic = "the lemma is asymptotic (it holds for all n > n0); failures at this size are reported, not treated as counterexamples to the statement".to_string();
        let mut s = Setup {
            lemma: p.id(),
            host: 0,
            v1: 0,
            v2: 0,
            min_edges: 0,
            u_sizes: [0; 2],
            hole: 0,
            deletions: 0,
            need: [0; 2],
            bipartite_part: 0,
            notes: vec![asymptotic],
        };
        match p {
            LemmaParams::L2 { v1, v2, epsilon } => {
                check_epsilon(epsilon, &ratio(1, 100))?;
                if v2 == &0 || v1 < v2 {
                    return Err(Error::Hypothesis(format!("sides must satisfy |V1| >= |V2| >= 1, got {v1}, {v2}")));
                }
                let (a, b) = (*v1, *v2);
                s.host = host_count((a + b) as u64)?;
                (s.v1, s.v2) = (a, b);
                let total = a * b;
                s.min_edges = to_i64(&((int(1) - epsilon) * rat(total))) as usize;
                s.deletions = total - s.min_edges;
                let shrink = int(1) - int(3) * epsilon;
                s.need = [to_i64(&(&shrink * rat(a + b))), to_i64(&(&shrink * rat(b)))];
                s.notes.push(format!(
                    "finite instance: complete bipartite graph on {a} + {b} vertices minus up to {} edges; need a component of >= {} vertices with >= {} matching edges",
                    s.deletions, s.need[0], s.need[1]
                ));
            }
            LemmaParams::Double { n, nu1, nu2, epsilon } => {
                let one = int(1);
                if nu1 < &Rational::zero() || nu1 > nu2 || nu2 > &one {
                    return Err(Error::Hypothesis(format!("need 0 <= nu1 <= nu2 <= 1, got {nu1}, {nu2}")));
                }
                check_epsilon(epsilon, &one)?;
                s.host = host_count(*n as u64)?;
                let nn = rat(*n);
                s.u_sizes = [floor(&(nu1 * &nn)).to_usize().unwrap(), floor(&(nu2 * &nn)).to_usize().unwrap()];
                s.deletions = floor(&(epsilon * epsilon * epsilon * rat(pair_count(*n)))).to_usize().unwrap();
                let req = if 2 * s.u_sizes[1] <= *n {
                    (&one - int(5) * epsilon) * &nn
                } else {
                    (int(2) - int(7) * epsilon) * &nn - rat(2 * s.u_sizes[1])
                };
                s.need = [to_i64(&req), 0];
                if epsilon >= &(ratio(1, 100) * nu1) || nn < int(4) / epsilon {
                    s.notes.push(format!(
                        "asymptotic side conditions epsilon < nu1/100 and N >= 4/epsilon are not met at N = {n}; sampled anyway"
                    ));
                }
                s.notes.push(format!(
                    "finite instance: K_{n} minus cliques on |U1| = {}, |U2| = {} vertices minus up to {} edges; need a component matching saturating >= {}",
                    s.u_sizes[0], s.u_sizes[1], s.deletions, s.need[0]
                ));
            }
            LemmaParams::Dwa { hole, n } | LemmaParams::Trzy { hole, n } => {
                hole.validate()?;
                let size = if s.lemma == LemmaId::Dwa { lemma_dwa_host_size(hole, *n)? } else { lemma_trzy_host_size(hole, *n)? };
                s.host = host_count(size)?;
                let nn = int(*n as i64);
                s.hole = floor(&(&hole.nu * &nn)).to_usize().unwrap();
                if s.hole > s.host {
                    return Err(Error::Hypothesis("hole larger than the host".into()));
                }
                let e = &hole.epsilon;
                s.deletions = floor(&(e * e * e * &nn * &nn)).to_usize().unwrap();
                s.need = [to_i64(&((&hole.alpha + e) * &nn)), to_i64(&((&hole.beta + e) * &nn))];
                let second = if s.lemma == LemmaId::Trzy { "non-bipartite color-2" } else { "color-2" };
                s.notes.push(format!(
                    "finite instance: n = {n}, host K_{} minus a hole of {} = floor(nu n) vertices minus up to {} edges; need a color-1 component matching saturating >= {} or a {second} one saturating >= {}",
                    s.host, s.hole, s.deletions, s.need[0], s.need[1]
                ));
            }
            LemmaParams::F1 { alpha1, alpha2, epsilon, n } => {
                if alpha2 <= &Rational::zero() || alpha1 < alpha2 {
                    return Err(Error::Hypothesis(format!("need alpha1 >= alpha2 > 0, got {alpha1}, {alpha2}")));
                }
                check_epsilon(epsilon, &(ratio(1, 100) * alpha2))?;
                let nn = int(*n as i64);
                let root = sqrt_upper(epsilon);
                s.host = host_count(ceil(&((int(2) * alpha1 + alpha2 + int(9) * &root) * &nn)).to_u64().unwrap())?;
                let e4 = epsilon * epsilon * epsilon * epsilon;
                s.deletions = floor(&(e4 * &nn * &nn)).to_usize().unwrap();
                s.bipartite_part = to_i64(&((ratio(3, 2) * alpha1 + ratio(1, 2) * alpha2 + int(8) * &root) * &nn)) as usize;
                if s.bipartite_part > s.host {
                    return Err(Error::Hypothesis("bipartite part larger than the host".into()));
                }
                s.need = [to_i64(&((alpha1 + epsilon) * &nn)), to_i64(&((alpha2 + epsilon) * &nn))];
                s.notes.push(format!(
                    "finite instance: n = {n}, host K_{} minus up to {} edges, bipartite color-3 components covering >= {} vertices; need a color-1 component matching saturating >= {} or a color-2 one saturating >= {}",
                    s.host, s.deletions, s.bipartite_part, s.need[0], s.need[1]
                ));
            }
        }
        Ok(s)
    }

    fn colors(&self) -> u8 {
        if self.lemma == LemmaId::F1 {
            3
        } else {
            2
        }
    }
}

// A sampled instance. Graph lemmas keep the removed pairs; colored
// lemmas keep a color per pair of the host (0 on hole pairs).
#[derive(Clone, Debug)]
enum Sample {
    Bip { removed: Vec<(usize, usize)> },
    Cliques { u: [VertexSet; 2], removed: Vec<(usize, usize)> },
    Colored { hole: VertexSet, removed: Vec<(usize, usize)>, colors: Vec<u8>, side: VertexSet },
}

fn random_set(rng: &mut ChaCha8Rng, n: usize, k: usize) -> VertexSet {
    sample(rng, n, k).into_iter().collect()
}

fn pick(rng: &mut ChaCha8Rng, n: usize) -> usize {
    rng.gen_range(0..n)
}

impl Setup {
    fn bip_pair(&self, rng: &mut ChaCha8Rng) -> (usize, usize) {
        (pick(rng, self.v1), self.v1 + pick(rng, self.v2))
    }

    // Host pairs that extra deletions may hit.
    fn free_pair(&self, s: &Sample, rng: &mut ChaCha8Rng) -> Option<(usize, usize)> {
        for _ in 0..64 {
            let (u, v) = match s {
                Sample::Bip { .. } => self.bip_pair(rng),
                _ => {
                    let (u, v) = (pick(rng, self.host), pick(rng, self.host));
                    if u == v {
                        continue;
                    }
                    (u.min(v), u.max(v))
                }
            };
            let blocked = match s {
                Sample::Bip { removed } => removed.contains(&(u, v)),
                Sample::Cliques { u: us, removed } => us.iter().any(|x| x.contains(u) && x.contains(v)) || removed.contains(&(u, v)),
                Sample::Colored { hole, removed, .. } => (hole.contains(u) && hole.contains(v)) || removed.contains(&(u, v)),
            };
            if !blocked {
                return Some((u, v));
            }
        }
        None
    }

    fn allowed(&self, side: &VertexSet, u: usize, v: usize, c: u8) -> bool {
        c != 3 || side.contains(u) != side.contains(v)
    }

    fn uniform(&self, rng: &mut ChaCha8Rng) -> Sample {
        let mut s = match self.lemma {
            LemmaId::L2 => Sample::Bip { removed: Vec::new() },
            LemmaId::Double => {
                let u = [random_set(rng, self.host, self.u_sizes[0]), random_set(rng, self.host, self.u_sizes[1])];
                Sample::Cliques { u, removed: Vec::new() }
            }
            _ => {
                let hole = random_set(rng, self.host, self.hole);
                let side = if self.lemma == LemmaId::F1 { random_set(rng, self.host, self.host / 2) } else { VertexSet::new() };
                let k = self.colors();
                let colors = (0..pair_count(self.host))
                    .map(|idx| {
                        let (u, v) = pair_from_index(idx);
                        if hole.contains(u) && hole.contains(v) {
                            return 0;
                        }
                        loop {
                            let c = rng.gen_range(1..=k);
                            if self.allowed(&side, u, v, c) {
                                break c;
                            }
                        }
                    })
                    .collect();
                Sample::Colored { hole, removed: Vec::new(), colors, side }
            }
        };
        for _ in 0..self.deletions {
            if let Some(e) = self.free_pair(&s, rng) {
                match &mut s {
                    Sample::Bip { removed } | Sample::Cliques { removed, .. } | Sample::Colored { removed, .. } => removed.push(e),
                }
            }
        }
        s
    }

    // A structured starting point: deletions piled on few vertices, the
    // cliques made disjoint, or a blow-up of a random small coloring.
    fn structured(&self, rng: &mut ChaCha8Rng) -> Sample {
        let mut s = self.uniform(rng);
        match &mut s {
            Sample::Bip { removed } => {
                removed.clear();
                let v = self.v1 + pick(rng, self.v2);
                let mut order: Vec<usize> = (0..self.v1).collect();
                order.shuffle(rng);
                removed.extend(order.into_iter().take(self.deletions).map(|u| (u, v)));
                while removed.len() < self.deletions {
                    let e = self.bip_pair(rng);
                    if !removed.contains(&e) {
                        removed.push(e);
                    }
                }
            }
            Sample::Cliques { u, .. } => {
                let order: Vec<usize> = sample(rng, self.host, self.host).into_vec();
                let (a, b) = (self.u_sizes[0], self.u_sizes[1]);
                let disjoint = a + b <= self.host;
                u[1] = order[..b].iter().collect();
                u[0] = if disjoint { order[b..b + a].iter().collect() } else { order[self.host - a..].iter().collect() };
            }
            Sample::Colored { hole, colors, side, .. } => {
                let parts = rng.gen_range(2..=4usize);
                let weights: Vec<u32> = (0..parts).map(|_| rng.gen_range(1..=4)).collect();
                let total: u32 = weights.iter().sum();
                let part: Vec<usize> = (0..self.host)
                    .map(|_| {
                        let mut x = rng.gen_range(0..total);
                        weights
                            .iter()
                            .position(|&w| {
                                let hit = x < w;
                                x = x.saturating_sub(w);
                                hit
                            })
                            .unwrap()
                    })
                    .collect();
                let k = self.colors();
                let table: Vec<u8> = (0..parts * parts).map(|_| rng.gen_range(1..=k)).collect();
                for (idx, c) in colors.iter_mut().enumerate() {
                    let (u, v) = pair_from_index(idx);
                    if hole.contains(u) && hole.contains(v) {
                        continue;
                    }
                    let (p, q) = (part[u].min(part[v]), part[u].max(part[v]));
                    let want = table[p * parts + q];
                    *c = if self.allowed(side, u, v, want) { want } else { rng.gen_range(1..=2) };
                }
            }
        }
        s
    }

    fn mutate(&self, s: &Sample, rng: &mut ChaCha8Rng) -> Sample {
        let mut t = s.clone();
        match &mut t {
            Sample::Bip { removed } => {
                if !removed.is_empty() {
                    let i = pick(rng, removed.len());
                    // Bias towards the least connected vertex of V2.
                    let mut deg = vec![self.v1; self.v2];
                    for &(_, v) in removed.iter() {
                        deg[v - self.v1] -= 1;
                    }
                    let target = self.v1 + (0..self.v2).min_by_key(|&j| (deg[j], j)).unwrap();
                    let e = if rng.gen_bool(0.5) { (pick(rng, self.v1), target) } else { self.bip_pair(rng) };
                    if !removed.contains(&e) {
                        removed[i] = e;
                    }
                }
            }
            Sample::Cliques { u, removed } => {
                if !removed.is_empty() && rng.gen_bool(0.3) {
                    let i = pick(rng, removed.len());
                    removed.swap_remove(i);
                    let probe = Sample::Cliques { u: *u, removed: removed.clone() };
                    if let Some(e) = self.free_pair(&probe, rng) {
                        removed.push(e);
                    }
                } else {
                    let j = pick(rng, 2);
                    let (inside, outside) = (u[j], !u[j] & VertexSet::range(0, self.host));
                    if let (Some(a), Some(b)) = (nth(&inside, rng), nth(&outside, rng)) {
                        u[j].remove(a);
                        u[j].insert(b);
                        removed.retain(|&(x, y)| !(u[j].contains(x) && u[j].contains(y)));
                    }
                }
            }
            Sample::Colored { hole, removed, colors, side } => {
                let k = self.colors();
                let v = pick(rng, self.host);
                match rng.gen_range(0..4) {
                    0 => {
                        // Recolor one edge.
                        let w = pick(rng, self.host);
                        if w != v && !(hole.contains(v) && hole.contains(w)) {
                            let c = rng.gen_range(1..=k);
                            if self.allowed(side, v, w, c) {
                                colors[pair_index(v, w)] = c;
                            }
                        }
                    }
                    1 => {
                        // Give a whole star one color.
                        let c = rng.gen_range(1..=k);
                        for w in 0..self.host {
                            if w != v && !(hole.contains(v) && hole.contains(w)) && self.allowed(side, v, w, c) {
                                colors[pair_index(v, w)] = c;
                            }
                        }
                    }
                    2 => {
                        // Make `v` a copy of another vertex.
                        let u = pick(rng, self.host);
                        for w in 0..self.host {
                            if w == v || w == u || (hole.contains(v) && hole.contains(w)) {
                                continue;
                            }
                            let c = colors[pair_index(u, w)];
                            if c != 0 && self.allowed(side, v, w, c) {
                                colors[pair_index(v, w)] = c;
                            }
                        }
                    }
                    _ => {
                        if !removed.is_empty() {
                            let i = pick(rng, removed.len());
                            removed.swap_remove(i);
                            let probe = Sample::Colored { hole: *hole, removed: removed.clone(), colors: Vec::new(), side: *side };
                            if let Some(e) = self.free_pair(&probe, rng) {
                                removed.push(e);
                            }
                        }
                    }
                }
            }
        }
        t
    }

    fn graph(&self, s: &Sample) -> Graph {
        match s {
            Sample::Bip { removed } => {
                let mut g = Graph::empty(self.host).unwrap();
                for u in 0..self.v1 {
                    for v in self.v1..self.host {
                        g.insert_unchecked(u, v);
                    }
                }
                for &(u, v) in removed {
                    g.remove_edge(u, v);
                }
                g
            }
            Sample::Cliques { u, removed } => {
                let mut g = Graph::complete(self.host).unwrap();
                for x in u {
                    for a in x.iter() {
                        for b in x.iter().filter(|&b| b > a) {
                            g.remove_edge(a, b);
                        }
                    }
                }
                for &(a, b) in removed {
                    g.remove_edge(a, b);
                }
                g
            }
            Sample::Colored { .. } => unreachable!("colored samples use classes()"),
        }
    }

    fn classes(&self, hole: &VertexSet, removed: &[(usize, usize)], colors: &[u8]) -> Vec<Graph> {
        let mut gs = vec![Graph::empty(self.host).unwrap(); self.colors() as usize];
        for (idx, &c) in colors.iter().enumerate() {
            let (u, v) = pair_from_index(idx);
            if c != 0 && !(hole.contains(u) && hole.contains(v)) {
                gs[c as usize - 1].insert_unchecked(u, v);
            }
        }
        for &(u, v) in removed {
            for g in &mut gs {
                g.remove_edge(u, v);
            }
        }
        gs
    }

    /// Slack of the conclusion: the best disjunct's excess over its
    /// threshold. Negative means the conclusion fails.
    fn margin(&self, s: &Sample) -> i64 {
        match s {
            Sample::Bip { .. } => {
                let g = self.graph(s);
                g.components()
                    .iter()
                    .map(|c| {
                        let size = c.len() as i64 - self.need[0];
                        if size < 0 {
                            return size;
                        }
                        size.min(maximum_matching_within(&g, c).len() as i64 - self.need[1])
                    })
                    .max()
                    .unwrap_or(i64::MIN)
            }
            Sample::Cliques { .. } => best_component_saturation(&self.graph(s), false) as i64 - self.need[0],
            Sample::Colored { hole, removed, colors, .. } => {
                let gs = self.classes(hole, removed, colors);
                let second_nonbipartite = self.lemma == LemmaId::Trzy;
                let a = best_component_saturation(&gs[0], false) as i64 - self.need[0];
                let b = best_component_saturation(&gs[1], second_nonbipartite) as i64 - self.need[1];
                a.max(b)
            }
        }
    }

    fn witness(&self, s: &Sample) -> Witness {
        match s {
            Sample::Bip { .. } => Witness::Graph {
                graph: GraphFile::from_graph(&self.graph(s)),
                notes: vec![format!("sides 0..{} and {}..{}", self.v1, self.v1, self.host)],
            },
            Sample::Cliques { u, .. } => Witness::Graph {
                graph: GraphFile::from_graph(&self.graph(s)),
                notes: vec![format!("U1 = {:?}", u[0].to_vec()), format!("U2 = {:?}", u[1].to_vec())],
            },
            Sample::Colored { hole, removed, colors, .. } => {
                let holes = if hole.len() >= 2 { vec![*hole] } else { Vec::new() };
                let mut c = EdgeColoring::new(self.host, self.colors(), HoleSpec::new(holes), removed.iter().copied())
                    .expect("sampled within range");
                for (idx, &x) in colors.iter().enumerate() {
                    let (u, v) = pair_from_index(idx);
                    if c.is_present(u, v) {
                        c.set(u, v, x).expect("valid color");
                    }
                }
                Witness::Coloring { coloring: c.to_file() }
            }
        }
    }

    /// Re-checks a witness against the finite hypotheses, working from the
    /// serialized form only.
    fn recheck(&self, w: &Witness) -> Option<String> {
        match (self.lemma, w) {
            (LemmaId::L2, Witness::Graph { graph, .. }) => {
                let g = graph.to_graph().ok()?;
                if g.vertex_count() != self.host {
                    return Some("wrong vertex count".into());
                }
                if g.edges().iter().any(|&(u, v)| (u < self.v1) == (v < self.v1)) {
                    return Some("edge inside a side".into());
                }
                (g.edge_count() < self.min_edges).then(|| format!("{} edges < {}", g.edge_count(), self.min_edges))
            }
            (LemmaId::Double, Witness::Graph { graph, .. }) => {
                let g = graph.to_graph().ok()?;
                let missing = pair_count(self.host) - g.edge_count();
                let budget = self.u_sizes.iter().map(|&s| pair_count(s)).sum::<usize>() + self.deletions;
                (g.vertex_count() != self.host || missing > budget).then(|| format!("{missing} missing pairs exceed {budget}"))
            }
            (_, Witness::Coloring { coloring }) => {
                let c = match EdgeColoring::from_file(coloring) {
                    Ok(c) => c,
                    Err(e) => return Some(e.to_string()),
                };
                let hole_size = c.holes().holes.first().map_or(0, |h| h.len());
                if c.vertex_count() != self.host || c.colors() != self.colors() {
                    return Some("wrong host".into());
                }
                if c.holes().holes.len() > 1 || (hole_size != self.hole && self.hole >= 2) {
                    return Some(format!("hole of {hole_size} vertices, expected {}", self.hole));
                }
                let extra = c.deleted().count();
                if extra > self.deletions {
                    return Some(format!("{extra} deletions exceed {}", self.deletions));
                }
                if self.lemma == LemmaId::F1 {
                    let g3 = c.color_class(3);
                    let covered: usize = g3.components().iter().filter(|x| g3.is_bipartite_within(x)).map(VertexSet::len).sum();
                    if covered < self.bipartite_part {
                        return Some(format!("bipartite color-3 components cover {covered} < {}", self.bipartite_part));
                    }
                }
                None
            }
            _ => Some("witness of the wrong kind".into()),
        }
    }
}

fn nth(s: &VertexSet, rng: &mut ChaCha8Rng) -> Option<usize> {
    if s.is_empty() {
        return None;
    }
    s.iter().nth(pick(rng, s.len()))
}

struct Outcome {
    kind: SampleKind,
    margin: i64,
    failure: Option<LemmaFailure>,
}

fn run_sample(setup: &Setup, opts: &HarnessOptions, idx: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = if idx % 2 == 0 { SampleKind::Uniform } else { SampleKind::Adversarial };
    let mut cur = match kind {
        SampleKind::Uniform => setup.uniform(&mut rng),
        SampleKind::Adversarial => setup.structured(&mut rng),
    };
    let mut margin = setup.margin(&cur);
    if kind == SampleKind::Adversarial {
        for _ in 0..opts.local_search_steps {
            if margin < 0 {
                break;
            }
            let next = setup.mutate(&cur, &mut rng);
            let m = setup.margin(&next);
            if m <= margin {
                cur = next;
                margin = m;
            }
        }
    }
    let failure = (margin < 0).then(|| {
        let witness = setup.witness(&cur);
        let hypothesis_violation = setup.recheck(&witness);
        LemmaFailure { sample: idx, seed, kind, shortfall: -margin, witness, hypothesis_violation }
    });
    Outcome { kind, margin, failure }
}

/// Samples `samples` instances of the lemma (alternating uniform and
/// adversarial) and evaluates its conclusion exactly on each. Sample `i`
/// uses a seed derived from `seed` and `i`, so reports do not depend on
/// the worker count.
pub fn lemma_harness(params: &LemmaParams, samples: usize, seed: u64, opts: &HarnessOptions) -> Result<LemmaReport> {
    let setup = Setup::new(params)?;
    let outcomes: Vec<Outcome> = with_threads(opts.threads, || {
        (0..samples).into_par_iter().map(|i| run_sample(&setup, opts, i, derive_seed(seed, i as u64))).collect()
    });
    let mut report = LemmaReport {
        lemma: params.id(),
        params: params.describe(),
        seed,
        host_size: setup.host,
        samples,
        passed: 0,
        uniform_samples: 0,
        adversarial_samples: 0,
        min_margin: outcomes.iter().map(|o| o.margin).min().unwrap_or(0),
        failures: Vec::new(),
        notes: setup.notes.clone(),
    };
    for o in outcomes {
        match o.kind {
            SampleKind::Uniform => report.uniform_samples += 1,
            SampleKind::Adversarial => report.adversarial_samples += 1,
        }
        match o.failure {
            Some(f) => report.failures.push(f),
            None => report.passed += 1,
        }
    }
    Ok(report)
}
