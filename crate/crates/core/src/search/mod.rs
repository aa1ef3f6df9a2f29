//! Finite arrowing decisions.
//!
//! An [`ArrowInstance`] fixes a host (complete graph minus holes and fixed
//! deletions, with an optional budget of extra deletions chosen by the
//! colorer) and one target per color. The host *arrows* the targets when
//! every coloring contains target `i` in color `i` for some `i`.
//!
//! [`arrow_exhaustive`] decides small hosts exactly, [`arrow_randomized`]
//! hunts for avoiding colorings on larger ones, and [`lemma_harness`]
//! samples the matching lemmas on nearly complete graphs.

mod exhaustive;
mod lemma;
mod randomized;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use exhaustive::{arrow_exhaustive, ramsey_number_exact, tau_check, ExhaustiveConfig, RamseyOutcome, RamseyResult};
pub use lemma::{lemma_harness, HarnessOptions, LemmaFailure, LemmaId, LemmaParams, LemmaReport, SampleKind, Witness};
pub use randomized::{arrow_randomized, Schedule};

use crate::coloring::{ColoringFile, EdgeColoring};
use crate::cycles::{has_cycle_of_length, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{Graph, HoleSpec};
use crate::matching::best_component_saturation;

/// What color `i` must avoid (or, for arrowing, is forced to contain).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Target {
    /// A cycle of exactly this length.
    Cycle { length: usize },
    /// A matching saturating at least `saturation` vertices inside one
    /// component, which must be non-bipartite if `nonbipartite`.
    Matching {
        saturation: usize,
        #[serde(default)]
        nonbipartite: bool,
    },
}

impl Target {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Target::Cycle { length } if length < 3 => Err(Error::Precondition(format!("cycle length {length} < 3"))),
            Target::Matching { saturation, .. } if saturation < 2 || saturation % 2 == 1 => {
                Err(Error::Precondition(format!("saturation {saturation} must be even and >= 2")))
            }
            _ => Ok(()),
        }
    }

    pub fn is_matching(&self) -> bool {
        matches!(self, Target::Matching { .. })
    }

    /// The matching demand implied by this target: a cycle of length `l`
    /// holds a matching saturating `2 floor(l/2)` vertices, in a
    /// non-bipartite component when `l` is odd.
    pub fn as_matching(&self) -> Target {
        match *self {
            Target::Cycle { length } => Target::Matching { saturation: length / 2 * 2, nonbipartite: length % 2 == 1 },
            m => m,
        }
    }

    /// True iff `class` contains this target; independent of the search
    /// code paths and used to re-verify witnesses.
    pub fn found_in(&self, class: &Graph) -> Result<bool> {
        match *self {
            Target::Cycle { length } => Ok(has_cycle_of_length(class, length, DEFAULT_BUDGET)?.is_some()),
            Target::Matching { saturation, nonbipartite } => Ok(best_component_saturation(class, nonbipartite) >= saturation),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Target::Cycle { length } => write!(f, "C{length}"),
            Target::Matching { saturation, nonbipartite: false } => write!(f, "M{saturation}"),
            Target::Matching { saturation, nonbipartite: true } => write!(f, "MN{saturation}"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    /// `C5` (cycle), `M4` (component matching), `MN4` (non-bipartite).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("cannot parse target '{s}' (expected C<len>, M<sat> or MN<sat>)"));
        let (head, num) = s.find(|c: char| c.is_ascii_digit()).map(|i| s.split_at(i)).ok_or_else(bad)?;
        let x: usize = num.parse().map_err(|_| bad())?;
        let t = match head.to_ascii_uppercase().as_str() {
            "C" => Target::Cycle { length: x },
            "M" => Target::Matching { saturation: x, nonbipartite: false },
            "MN" => Target::Matching { saturation: x, nonbipartite: true },
            _ => return Err(bad()),
        };
        t.validate()?;
        Ok(t)
    }
}

/// Parses `C3:1,C3:2`; the color suffix is optional, but when given the
/// colors must be exactly `1..=k`.
pub fn parse_targets(s: &str) -> Result<Vec<Target>> {
    let mut with_colors = Vec::new();
    let mut plain = Vec::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        match item.split_once(':') {
            Some((t, c)) => {
                let c: usize = c.parse().map_err(|_| Error::Precondition(format!("bad color in '{item}'")))?;
                with_colors.push((c, t.parse::<Target>()?));
            }
            None => plain.push(item.parse::<Target>()?),
        }
    }
    if !with_colors.is_empty() && !plain.is_empty() {
        return Err(Error::Precondition("either give a color for every target or for none".into()));
    }
    if plain.is_empty() {
        with_colors.sort_by_key(|x| x.0);
        if with_colors.iter().enumerate().any(|(i, x)| x.0 != i + 1) {
            return Err(Error::Precondition("target colors must be 1..=k, each once".into()));
        }
        plain = with_colors.into_iter().map(|x| x.1).collect();
    }
    Ok(plain)
}

pub fn format_targets(targets: &[Target]) -> String {
    targets.iter().enumerate().map(|(i, t)| format!("{t}:{}", i + 1)).collect::<Vec<_>>().join(",")
}

/// A host and one target per color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowInstance {
    pub n: usize,
    pub holes: HoleSpec,
    /// Pairs removed from the host up front.
    pub fixed_deleted: Vec<(usize, usize)>,
    /// Further pairs the colorer may delete.
    pub deleted_budget: usize,
    pub targets: Vec<Target>,
}

impl ArrowInstance {
    /// `K_n` with the given targets, no holes and no deletions.
    pub fn complete(n: usize, targets: Vec<Target>) -> Result<Self> {
        let inst = Self { n, holes: HoleSpec::none(), fixed_deleted: Vec::new(), deleted_budget: 0, targets };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        crate::graph::check_count(self.n)?;
        if !(2..=3).contains(&self.targets.len()) {
            return Err(Error::Precondition(format!("{} targets given; 2 or 3 colors are supported", self.targets.len())));
        }
        for t in &self.targets {
            t.validate()?;
        }
        self.holes.check_range(self.n)?;
        for &(u, v) in &self.fixed_deleted {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u.max(v) >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n: self.n });
            }
        }
        Ok(())
    }

    pub fn colors(&self) -> u8 {
        self.targets.len() as u8
    }

    /// The host graph before any colorer deletions.
    pub fn host(&self) -> Graph {
        let mut g = Graph::complete(self.n).expect("validated vertex count");
        for h in &self.holes.holes {
            for v in h {
                for u in h {
                    if u < v {
                        g.remove_edge(u, v);
                    }
                }
            }
        }
        for &(u, v) in &self.fixed_deleted {
            g.remove_edge(u, v);
        }
        g
    }

    /// An uncolored coloring on this host.
    pub fn blank_coloring(&self) -> Result<EdgeColoring> {
        EdgeColoring::new(self.n, self.colors(), self.holes.clone(), self.fixed_deleted.iter().copied())
    }

    /// Instance file plus the initial coloring it carries, if any.
    pub fn from_file(f: &InstanceFile) -> Result<(Self, Option<EdgeColoring>)> {
        let holes = HoleSpec::new(f.holes.iter().map(|h| h.iter().collect()).collect());
        let inst = Self {
            n: f.n,
            holes,
            fixed_deleted: f.deleted.iter().map(|&[u, v]| (u.min(v), u.max(v))).collect(),
            deleted_budget: f.deleted_budget,
            targets: f.targets.clone(),
        };
        inst.validate()?;
        if let Some(k) = f.k {
            if k != inst.targets.len() {
                return Err(Error::Precondition(format!("k = {k} but {} targets given", inst.targets.len())));
            }
        }
        let initial = if f.edges.is_empty() {
            None
        } else {
            let file =
                ColoringFile { n: f.n, k: inst.targets.len(), holes: f.holes.clone(), deleted: f.deleted.clone(), edges: f.edges.clone() };
            Some(EdgeColoring::from_file(&file)?)
        };
        Ok((inst, initial))
    }

    pub fn to_file(&self, initial: Option<&EdgeColoring>) -> InstanceFile {
        InstanceFile {
            n: self.n,
            k: Some(self.targets.len()),
            holes: self.holes.holes.iter().map(|h| h.to_vec()).collect(),
            deleted: self.fixed_deleted.iter().map(|&(u, v)| [u, v]).collect(),
            edges: initial.map(|c| c.to_file().edges).unwrap_or_default(),
            deleted_budget: self.deleted_budget,
            targets: self.targets.clone(),
        }
    }

    /// Checks that `c` colors exactly this host (up to the deletion budget)
    /// and avoids every target; the check shares no code with the search.
    pub fn verify_witness(&self, c: &EdgeColoring) -> Result<()> {
        c.validate()?;
        if c.vertex_count() != self.n || c.colors() != self.colors() || c.holes() != &self.holes {
            return Err(Error::Internal("witness does not match the instance host".into()));
        }
        let extra = c.deleted().filter(|&(u, v)| !self.fixed_deleted.contains(&(u, v))).count();
        if extra > self.deleted_budget || self.fixed_deleted.iter().any(|&(u, v)| c.is_present(u, v)) {
            return Err(Error::Internal("witness deletes the wrong edges".into()));
        }
        for (i, t) in self.targets.iter().enumerate() {
            if t.found_in(&c.color_class(i as u8 + 1))? {
                return Err(Error::Internal(format!("witness contains {t} in color {}", i + 1)));
            }
        }
        Ok(())
    }
}

/// On-disk instance: the coloring format plus `targets` and
/// `deleted_budget`. `edges`, when present, seed the randomized search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    #[serde(default)]
    pub k: Option<usize>,
    #[serde(default)]
    pub holes: Vec<Vec<usize>>,
    #[serde(default)]
    pub deleted: Vec<[usize; 2]>,
    #[serde(default)]
    pub edges: Vec<[usize; 3]>,
    #[serde(default)]
    pub deleted_budget: usize,
    pub targets: Vec<Target>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arrows {
    True,
    False,
    Unknown,
}

impl fmt::Display for Arrows {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arrows::True => "true",
            Arrows::False => "false",
            Arrows::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Search-tree nodes (exhaustive) or proposals (randomized).
    pub nodes: u64,
    pub target_prunes: u64,
    pub symmetry_prunes: u64,
}

impl SearchStats {
    fn add(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.target_prunes += o.target_prunes;
        self.symmetry_prunes += o.symmetry_prunes;
    }
}

/// Outcome of an arrowing decision. A witness is present exactly when
/// `arrows` is false, and it has been re-verified against the instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowVerdict {
    pub arrows: Arrows,
    pub witness: Option<EdgeColoring>,
    pub stats: SearchStats,
    pub note: Option<String>,
}

impl ArrowVerdict {
    fn unknown(stats: SearchStats, note: impl Into<String>) -> Self {
        Self { arrows: Arrows::Unknown, witness: None, stats, note: Some(note.into()) }
    }

    fn found(inst: &ArrowInstance, witness: EdgeColoring, stats: SearchStats) -> Result<Self> {
        inst.verify_witness(&witness)?;
        Ok(Self { arrows: Arrows::False, witness: Some(witness), stats, note: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_syntax() {
        assert_eq!("C5".parse::<Target>().unwrap(), Target::Cycle { length: 5 });
        assert_eq!("mn4".parse::<Target>().unwrap(), Target::Matching { saturation: 4, nonbipartite: true });
        assert!("C2".parse::<Target>().is_err());
        assert!("M3".parse::<Target>().is_err());
        assert!("X3".parse::<Target>().is_err());
        let ts = parse_targets("C4:2,C3:1").unwrap();
        assert_eq!(ts, vec![Target::Cycle { length: 3 }, Target::Cycle { length: 4 }]);
        assert_eq!(format_targets(&ts), "C3:1,C4:2");
        assert!(parse_targets("C3:1,C3:3").is_err());
        assert!(parse_targets("C3:1,C3").is_err());
    }

    #[test]
    fn cycle_to_matching_demand() {
        assert_eq!(Target::Cycle { length: 5 }.as_matching(), Target::Matching { saturation: 4, nonbipartite: true });
        assert_eq!(Target::Cycle { length: 6 }.as_matching(), Target::Matching { saturation: 6, nonbipartite: false });
    }

    #[test]
    fn instance_file_roundtrip() {
        let mut inst =
            ArrowInstance::complete(5, vec![Target::Cycle { length: 3 }, Target::Matching { saturation: 4, nonbipartite: true }]).unwrap();
        inst.holes = HoleSpec::new(vec![[0usize, 1, 2].iter().collect()]);
        inst.deleted_budget = 2;
        let json = serde_json::to_string(&inst.to_file(None)).unwrap();
        let (back, init) = ArrowInstance::from_file(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, inst);
        assert!(init.is_none());
        assert_eq!(back.host().edge_count(), 10 - 3);
    }
}
