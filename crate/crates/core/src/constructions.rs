//! Lower-bound colorings of complete graphs and a verifier for the cycle
//! claims each coloring is built to satisfy.
//!
//! Parts occupy contiguous index ranges in the order they are listed, so a
//! report can be audited by eye. Claims are checked by the cheapest
//! sufficient argument: a 2-coloring rules out odd cycles, small
//! components or a large independent set bound cycle lengths, and only
//! when those fail is an exact search run.

use serde::{Deserialize, Serialize};

use crate::bounds::ConstructionId;
use crate::coloring::{ColoringFile, EdgeColoring};
use crate::cycles::{cycle_at_least, longest_cycle_within, CycleCertificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColoring};
use crate::vertex_set::VertexSet;
use crate::Parity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClaimKind {
    /// No cycle of length `>= min_len`.
    NoCycleAtLeast {
        min_len: usize,
    },
    NoOddCycle,
    NoCycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub color: u8,
    #[serde(flatten)]
    pub kind: ClaimKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Every component is smaller than the forbidden length.
    ComponentSize,
    /// The color class is a forest.
    Forest,
    /// A proper 2-coloring exists.
    Bipartition,
    /// Bipartite component with sides `a, b`: cycles have length `<= 2 min(a, b)`.
    BipartiteSides,
    /// Independent set `I` in a component `K`: cycles have length `<= 2 |K \ I|`.
    IndependentSet,
    ExactSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Holds { method: Method },
    Fails { witness: CycleCertificate },
    BudgetExceeded { budget: u64 },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub construction: Option<ConstructionId>,
    pub parameters: Vec<usize>,
    pub parts: Vec<VertexSet>,
    pub coloring: EdgeColoring,
    pub claims: Vec<Claim>,
    /// One entry per claim once verified.
    pub verdicts: Vec<Option<Verdict>>,
    pub remarks: Vec<String>,
}

impl ConstructionReport {
    fn new(
        construction: ConstructionId,
        parameters: Vec<usize>,
        sizes: &[usize],
        claims: Vec<Claim>,
        color: impl Fn(usize, usize) -> u8,
    ) -> Result<Self> {
        let mut parts = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &s in sizes {
            parts.push(VertexSet::range(start, start + s));
            start += s;
        }
        let mut part_of = vec![0usize; start];
        for (i, p) in parts.iter().enumerate() {
            for v in p {
                part_of[v] = i;
            }
        }
        let coloring = EdgeColoring::complete_from_fn(start, 3, |u, v| {
            let (a, b) = (part_of[u], part_of[v]);
            color(a.min(b), a.max(b))
        })?;
        let verdicts = vec![None; claims.len()];
        Ok(Self { construction: Some(construction), parameters, parts, coloring, claims, verdicts, remarks: Vec::new() })
    }

    /// A report for an arbitrary coloring and claim list.
    pub fn for_coloring(coloring: EdgeColoring, claims: Vec<Claim>) -> Self {
        let verdicts = vec![None; claims.len()];
        Self { construction: None, parameters: Vec::new(), parts: Vec::new(), coloring, claims, verdicts, remarks: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.coloring.vertex_count()
    }

    /// True once every claim has been verified to hold.
    pub fn all_hold(&self) -> bool {
        self.verdicts.len() == self.claims.len() && self.verdicts.iter().all(|v| v.as_ref().is_some_and(Verdict::holds))
    }

    pub fn to_file(&self) -> ReportFile {
        ReportFile {
            construction: self.construction,
            parameters: self.parameters.clone(),
            parts: self.parts.iter().map(VertexSet::to_vec).collect(),
            coloring: self.coloring.to_file(),
            claims: self.claims.clone(),
            verdicts: self.verdicts.clone(),
            remarks: self.remarks.clone(),
        }
    }

    pub fn from_file(f: &ReportFile) -> Result<Self> {
        let coloring = EdgeColoring::from_file(&f.coloring)?;
        for c in &f.claims {
            if c.color == 0 || c.color > coloring.colors() {
                return Err(Error::InvalidColor { color: c.color, k: coloring.colors() });
            }
        }
        let mut verdicts = f.verdicts.clone();
        verdicts.resize(f.claims.len(), None);
        Ok(Self {
            construction: f.construction,
            parameters: f.parameters.clone(),
            parts: f.parts.iter().map(|p| p.iter().collect()).collect(),
            coloring,
            claims: f.claims.clone(),
            verdicts,
            remarks: f.remarks.clone(),
        })
    }
}

/// JSON form of a [`ConstructionReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    #[serde(default)]
    pub construction: Option<ConstructionId>,
    #[serde(default)]
    pub parameters: Vec<usize>,
    #[serde(default)]
    pub parts: Vec<Vec<usize>>,
    pub coloring: ColoringFile,
    pub claims: Vec<Claim>,
    #[serde(default)]
    pub verdicts: Vec<Option<Verdict>>,
    #[serde(default)]
    pub remarks: Vec<String>,
}

fn no_cycle_at_least(color: u8, min_len: usize) -> Claim {
    Claim { color, kind: ClaimKind::NoCycleAtLeast { min_len } }
}

fn no_odd_cycle(color: u8) -> Claim {
    Claim { color, kind: ClaimKind::NoOddCycle }
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

/// `K_{4(m-1)}` split into four cliques of size `m - 1` in color 1. Color 2
/// joins parts `(1,2), (2,3), (3,4)` and color 3 joins `(1,3), (2,4), (1,4)`,
/// so both are bipartite.
pub fn build_four_cliques(m: usize) -> Result<ConstructionReport> {
    require(m >= 3, || format!("cycle length {m} < 3"))?;
    let p = m - 1;
    ConstructionReport::new(
        ConstructionId::FourCliques,
        vec![m],
        &[p; 4],
        vec![no_cycle_at_least(1, m), no_odd_cycle(2), no_odd_cycle(3)],
        |a, b| match (a, b) {
            _ if a == b => 1,
            (0, 1) | (1, 2) | (2, 3) => 2,
            _ => 3,
        },
    )
}

/// Four-clique coloring for three odd targets; `m1` is the longest.
pub fn build_odd_triple(m1: usize) -> Result<ConstructionReport> {
    require(m1 >= 3 && m1 % 2 == 1, || format!("m1 = {m1} must be odd and >= 3"))?;
    build_four_cliques(m1)
}

/// Two even targets `m1 >= m2` and one odd target, on `2 m1 + m2 - 4`
/// vertices: parts of sizes `m1-1, m1-1, m2/2-1, m2/2-1`, color 1 inside
/// parts, color 2 on `(V1,V3)` and `(V2,V4)`, color 3 elsewhere.
pub fn build_eeo_four_part(m1: usize, m2: usize) -> Result<ConstructionReport> {
    require(m1 % 2 == 0 && m2 % 2 == 0 && m2 >= 4, || format!("m1 = {m1}, m2 = {m2} must be even and >= 4"))?;
    require(m1 >= m2, || format!("requires m1 >= m2, got {m1} < {m2}"))?;
    let (a, b) = (m1 - 1, m2 / 2 - 1);
    ConstructionReport::new(
        ConstructionId::EeoFourPart,
        vec![m1, m2],
        &[a, a, b, b],
        vec![no_cycle_at_least(1, m1), no_cycle_at_least(2, m2), no_odd_cycle(3)],
        |x, y| match (x, y) {
            _ if x == y => 1,
            (0, 2) | (1, 3) => 2,
            _ => 3,
        },
    )
}

/// Two even targets and one odd target on `m1/2 + m2/2 + m3 - 3` vertices:
/// parts of sizes `m1/2-1, m2/2-1, m3-1`, color 3 inside the third part,
/// color 2 on every edge meeting the second part, color 1 on the rest.
pub fn build_eeo_three_part(m1: usize, m2: usize, m3: usize) -> Result<ConstructionReport> {
    require(m1 % 2 == 0 && m2 % 2 == 0 && m1 >= 4 && m2 >= 4, || format!("m1 = {m1}, m2 = {m2} must be even and >= 4"))?;
    require(m3 % 2 == 1 && m3 >= 3, || format!("m3 = {m3} must be odd and >= 3"))?;
    ConstructionReport::new(
        ConstructionId::EeoThreePart,
        vec![m1, m2, m3],
        &[m1 / 2 - 1, m2 / 2 - 1, m3 - 1],
        vec![no_cycle_at_least(1, m1 - 1), no_cycle_at_least(2, m2 - 1), no_cycle_at_least(3, m3)],
        |x, y| match (x, y) {
            (2, 2) => 3,
            _ if x == 1 || y == 1 => 2,
            _ => 1,
        },
    )
}

/// One even target `m1` and an odd target `m2` on `m1 + 2 m2 - 4` vertices:
/// parts of sizes `m1/2-1, m1/2-1, m2-1, m2-1`; color 1 inside the first two
/// parts and on `(V1,V3), (V2,V4)`, color 2 inside the last two, color 3
/// elsewhere.
pub fn build_oee_four_part(m1: usize, m2: usize) -> Result<ConstructionReport> {
    require(m1 % 2 == 0 && m1 >= 4, || format!("m1 = {m1} must be even and >= 4"))?;
    require(m2 % 2 == 1 && m2 >= 3, || format!("m2 = {m2} must be odd and >= 3"))?;
    let mut report = ConstructionReport::new(
        ConstructionId::OeeFourPart,
        vec![m1, m2],
        &[m1 / 2 - 1, m1 / 2 - 1, m2 - 1, m2 - 1],
        vec![no_cycle_at_least(1, m1), no_cycle_at_least(2, m2), no_odd_cycle(3)],
        |x, y| match (x, y) {
            (0, 0) | (1, 1) | (0, 2) | (1, 3) => 1,
            (2, 2) | (3, 3) => 2,
            _ => 3,
        },
    )?;
    report.remarks.push(stated_color_one_bound(&report, m1));
    Ok(report)
}

// The written argument for this coloring bounds color-1 cycles by
// m1/2 - 2; record how the actual longest color-1 cycle compares.
fn stated_color_one_bound(report: &ConstructionReport, m1: usize) -> String {
    let class = report.coloring.color_class(1);
    let stated = (m1 / 2) as i64 - 2;
    match longest_cycle_within(&class, &class.vertices(), None, 1_000_000) {
        Ok(found) => {
            let longest = found.map_or(0, |c| c.len());
            if longest as i64 <= stated {
                format!("color 1 longest cycle {longest} is within the stated bound m1/2 - 2 = {stated}")
            } else {
                format!(
                    "color 1 longest cycle {longest} exceeds the stated bound m1/2 - 2 = {stated}; the claim used is 'no cycle >= {m1}'"
                )
            }
        }
        Err(_) => format!("color 1 longest cycle undetermined within budget; stated bound m1/2 - 2 = {stated}"),
    }
}

/// Builds the coloring named by `id` from its parameter list.
pub fn build(id: ConstructionId, params: &[usize]) -> Result<ConstructionReport> {
    let arity = |k: usize| require(params.len() == k, || format!("{id} takes {k} parameters, got {}", params.len()));
    match id {
        ConstructionId::FourCliques => arity(1).and_then(|_| build_four_cliques(params[0])),
        ConstructionId::EeoFourPart => arity(2).and_then(|_| build_eeo_four_part(params[0], params[1])),
        ConstructionId::EeoThreePart => arity(3).and_then(|_| build_eeo_three_part(params[0], params[1], params[2])),
        ConstructionId::OeeFourPart | ConstructionId::OeeFourPartTwin => arity(2).and_then(|_| build_oee_four_part(params[0], params[1])),
    }
}

// Greedy independent set: repeatedly take a vertex of minimum remaining
// degree (smallest index on ties) and discard its neighbors.
fn greedy_independent_set(g: &Graph, comp: &VertexSet) -> VertexSet {
    let mut left = *comp;
    let mut ind = VertexSet::new();
    while !left.is_empty() {
        let v = left.iter().min_by_key(|&v| ((*g.neighbors(v) & left).len(), v)).expect("non-empty");
        ind.insert(v);
        left.remove(v);
        left -= *g.neighbors(v);
    }
    ind
}

fn check_long_cycles(g: &Graph, min_len: usize, budget: u64) -> Verdict {
    let mut method = Method::ComponentSize;
    for comp in g.components() {
        if comp.len() < min_len {
            continue;
        }
        if g.edges_within(&comp) + 1 == comp.len() {
            method = method.max_by(Method::Forest);
            continue;
        }
        if let TwoColoring::Bipartite(a, b) = g.two_coloring_within(&comp) {
            if 2 * a.len().min(b.len()) < min_len {
                method = method.max_by(Method::BipartiteSides);
                continue;
            }
        }
        let ind = greedy_independent_set(g, &comp);
        if 2 * (comp.len() - ind.len()) < min_len {
            method = method.max_by(Method::IndependentSet);
            continue;
        }
        match cycle_at_least(g, &comp, min_len, budget) {
            Ok(Some(witness)) => return Verdict::Fails { witness },
            Ok(None) => method = Method::ExactSearch,
            Err(_) => return Verdict::BudgetExceeded { budget },
        }
    }
    Verdict::Holds { method }
}

impl Method {
    fn rank(self) -> u8 {
        match self {
            Method::ComponentSize => 0,
            Method::Forest => 1,
            Method::Bipartition => 2,
            Method::BipartiteSides => 3,
            Method::IndependentSet => 4,
            Method::ExactSearch => 5,
        }
    }

    fn max_by(self, other: Method) -> Method {
        if other.rank() > self.rank() {
            other
        } else {
            self
        }
    }
}

/// Checks one claim against a color class.
pub fn check_claim(class: &Graph, kind: ClaimKind, budget: u64) -> Verdict {
    match kind {
        ClaimKind::NoOddCycle => match class.two_coloring() {
            TwoColoring::Bipartite(..) => Verdict::Holds { method: Method::Bipartition },
            TwoColoring::OddCycle(witness) => {
                debug_assert!(Parity::Odd.matches(witness.len()));
                Verdict::Fails { witness }
            }
        },
        ClaimKind::NoCycle => check_long_cycles(class, 3, budget),
        ClaimKind::NoCycleAtLeast { min_len } => check_long_cycles(class, min_len.max(3), budget),
    }
}

/// Fills in a verdict for every claim of `report`.
pub fn verify_claims(mut report: ConstructionReport, budget: u64) -> ConstructionReport {
    let classes: Vec<Graph> = report.coloring.color_classes();
    report.verdicts = report.claims.iter().map(|c| Some(check_claim(&classes[c.color as usize - 1], c.kind, budget))).collect();
    report
}
