//! Edge colorings of a complete graph with holes and deleted edges, and
//! their JSON file formats.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{check_count, pair_count, pair_from_index, pair_index, Graph, HoleSpec};
use crate::vertex_set::VertexSet;

/// Color assignment for every present edge of `K_n` minus holes minus
/// deleted pairs. Colors run from 1 to `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    k: u8,
    holes: HoleSpec,
    deleted: BTreeSet<(usize, usize)>,
    // Indexed by `pair_index`; 0 marks an absent or not yet colored pair.
    colors: Vec<u8>,
}

impl EdgeColoring {
    /// An uncolored coloring; every present pair must be assigned before
    /// [`validate`](Self::validate) succeeds.
    pub fn new(n: usize, k: u8, holes: HoleSpec, deleted: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_count(n)?;
        if k == 0 {
            return Err(Error::InvalidColoring("k must be at least 1".into()));
        }
        holes.check_range(n)?;
        let mut del = BTreeSet::new();
        for (u, v) in deleted {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            del.insert((u.min(v), u.max(v)));
        }
        Ok(Self { n, k, holes, deleted: del, colors: vec![0; pair_count(n)] })
    }

    /// Builds a coloring of the complete graph `K_n` by evaluating `f` on every pair `u < v`.
    pub fn complete_from_fn(n: usize, k: u8, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        let mut c = Self::new(n, k, HoleSpec::none(), [])?;
        for v in 1..n {
            for u in 0..v {
                c.set(u, v, f(u, v))?;
            }
        }
        Ok(c)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> u8 {
        self.k
    }

    pub fn holes(&self) -> &HoleSpec {
        &self.holes
    }

    pub fn deleted(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.deleted.iter().copied()
    }

    /// Whether `{u, v}` is an edge of the host graph.
    pub fn is_present(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && !self.holes.forbids(u, v) && !self.deleted.contains(&(u.min(v), u.max(v)))
    }

    pub fn set(&mut self, u: usize, v: usize, color: u8) -> Result<()> {
        if color == 0 || color > self.k {
            return Err(Error::InvalidColor { color, k: self.k });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if !self.is_present(u, v) {
            return Err(Error::InvalidColoring(format!("pair ({}, {}) is not an edge of the host", u.min(v), u.max(v))));
        }
        self.colors[pair_index(u, v)] = color;
        Ok(())
    }

    /// Color of `{u, v}`, if it is a colored edge.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Option<u8> {
        if u == v || u >= self.n || v >= self.n {
            return None;
        }
        match self.colors[pair_index(u, v)] {
            0 => None,
            c => Some(c),
        }
    }

    /// Checks that exactly the present pairs carry a color.
    pub fn validate(&self) -> Result<()> {
        for (idx, &c) in self.colors.iter().enumerate() {
            let (u, v) = pair_from_index(idx);
            match (self.is_present(u, v), c) {
                (true, 0) => return Err(Error::InvalidColoring(format!("edge ({u}, {v}) has no color"))),
                (false, c) if c != 0 => return Err(Error::InvalidColoring(format!("absent pair ({u}, {v}) carries color {c}"))),
                (_, c) if c > self.k => return Err(Error::InvalidColor { color: c, k: self.k }),
                _ => {}
            }
        }
        Ok(())
    }

    /// The host graph: `K_n` minus holes minus deleted pairs.
    pub fn host(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("vertex count checked at construction");
        for (idx, _) in self.colors.iter().enumerate() {
            let (u, v) = pair_from_index(idx);
            if self.is_present(u, v) {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    /// Spanning subgraph formed by the edges of color `i`.
    pub fn color_class(&self, i: u8) -> Graph {
        let mut g = Graph::empty(self.n).expect("vertex count checked at construction");
        for (idx, &c) in self.colors.iter().enumerate() {
            if c == i {
                let (u, v) = pair_from_index(idx);
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn color_classes(&self) -> Vec<Graph> {
        (1..=self.k).map(|i| self.color_class(i)).collect()
    }

    /// Colored edges as `(u, v, color)` with `u < v`, sorted.
    pub fn colored_edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out: Vec<_> = self
            .colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, &c)| {
                let (u, v) = pair_from_index(idx);
                (u, v, c)
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn to_file(&self) -> ColoringFile {
        ColoringFile {
            n: self.n,
            k: self.k as usize,
            holes: self.holes.holes.iter().map(VertexSet::to_vec).collect(),
            deleted: self.deleted.iter().map(|&(u, v)| [u, v]).collect(),
            edges: self.colored_edges().into_iter().map(|(u, v, c)| [u, v, c as usize]).collect(),
        }
    }

    /// Parses and fully validates a coloring file.
    pub fn from_file(f: &ColoringFile) -> Result<Self> {
        let k = u8::try_from(f.k).map_err(|_| Error::InvalidColoring(format!("k = {} too large", f.k)))?;
        let holes = HoleSpec::new(f.holes.iter().map(|h| h.iter().collect()).collect());
        let mut c = Self::new(f.n, k, holes, f.deleted.iter().map(|&[u, v]| (u, v)))?;
        for &[u, v, col] in &f.edges {
            let col = u8::try_from(col).map_err(|_| Error::InvalidColor { color: u8::MAX, k })?;
            if c.color(u, v).is_some() {
                return Err(Error::InvalidColoring(format!("edge ({u}, {v}) listed twice")));
            }
            c.set(u, v, col)?;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("coloring serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_file(&serde_json::from_str(s)?)
    }
}

/// On-disk coloring: `{n, k, holes, deleted, edges: [[u, v, color], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub n: usize,
    pub k: usize,
    #[serde(default)]
    pub holes: Vec<Vec<usize>>,
    #[serde(default)]
    pub deleted: Vec<[usize; 2]>,
    pub edges: Vec<[usize; 3]>,
}

/// On-disk graph: `{n, edges: [[u, v], ...]}` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        Self { n: g.vertex_count(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(self.n, &edges)
    }
}
